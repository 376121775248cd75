#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bk {

// Symbols use the ASCII alphabet of the serialization format:
//   'o' empty, 'x' cross, 'v' down, '^' up, '*' star (block sequences only).
inline constexpr char kEmpty = 'o';
inline constexpr char kCross = 'x';
inline constexpr char kDown = 'v';
inline constexpr char kUp = '^';
inline constexpr char kStar = '*';

// Integer-indexed symbol sequence with finite support. Stored trimmed to the
// smallest window containing every non-'o' entry, so equality ignores padding.
class SymbolSequence {
 public:
  SymbolSequence() = default;

  char at(int i) const;
  bool empty() const { return sym_.empty(); }
  // Support window; meaningless when empty().
  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(sym_.size()) - 1; }
  // Positions carrying the given symbol, ascending.
  std::vector<int> positions_of(char c) const;
  int count(char c) const;

  // ASCII over the support window, or over [a, b] padded with 'o'.
  std::string ascii() const { return sym_; }
  std::string ascii(int a, int b) const;

  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;
  friend std::strong_ordering operator<=>(const SymbolSequence& x, const SymbolSequence& y);

 protected:
  SymbolSequence(int first, std::string_view text, std::string_view alphabet);
  void set(int i, char c);

  int first_ = 0;
  std::string sym_;
};

class Weight : public SymbolSequence {
 public:
  Weight() = default;
  // Entry text[k] sits at position first + k. Throws ParseError on symbols
  // outside {o, x, v, ^}.
  Weight(int first, std::string_view text);

  Weight with(int i, char c) const;
};

class Block : public SymbolSequence {
 public:
  Block() = default;
  // Balanced block with the given sequence over {o, x, *}. Throws DomainError
  // if the number of stars is odd, since then no balanced completion exists.
  Block(int first, std::string_view text);
  Block(int first, std::string_view text, int up, int down);

  int up_count() const { return up_; }
  int down_count() const { return down_; }
  bool balanced() const { return up_ == down_; }
  std::vector<int> stars() const { return positions_of(kStar); }
  int crosses() const { return count(kCross); }

  friend bool operator==(const Block&, const Block&) = default;
  friend std::strong_ordering operator<=>(const Block& x, const Block& y);

 private:
  int up_ = 0;
  int down_ = 0;
};

Block block_of(const Weight& w);

// All member weights of b in lexicographic ASCII order. With cups_only, only
// those whose canonical cup diagram has no rays.
std::vector<Weight> members(const Block& b, bool cups_only);

int position(const Block& b, int i);
int distance(const Block& b, int i, int j);
// Throws InvariantViolation when the distance is even.
int saddle_width(const Block& b, int i, int j);

}  // namespace bk
