#include "bk/blocks.hpp"

#include <algorithm>

#include "bk/errors.hpp"

namespace bk {

SymbolSequence::SymbolSequence(int first, std::string_view text, std::string_view alphabet) {
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (alphabet.find(text[k]) == std::string_view::npos)
      throw ParseError("unexpected symbol '" + std::string(1, text[k]) + "' (allowed: " + std::string(alphabet) + ")");
  }
  auto lo = text.find_first_not_of(kEmpty);
  if (lo == std::string_view::npos) return;
  auto hi = text.find_last_not_of(kEmpty);
  first_ = first + static_cast<int>(lo);
  sym_ = std::string(text.substr(lo, hi - lo + 1));
}

char SymbolSequence::at(int i) const {
  if (sym_.empty() || i < first_ || i > last()) return kEmpty;
  return sym_[static_cast<std::size_t>(i - first_)];
}

void SymbolSequence::set(int i, char c) {
  if (sym_.empty()) {
    if (c == kEmpty) return;
    first_ = i;
    sym_ = std::string(1, c);
    return;
  }
  if (i < first_) {
    sym_.insert(0, static_cast<std::size_t>(first_ - i), kEmpty);
    first_ = i;
  } else if (i > last()) {
    sym_.append(static_cast<std::size_t>(i - last()), kEmpty);
  }
  sym_[static_cast<std::size_t>(i - first_)] = c;
  auto lo = sym_.find_first_not_of(kEmpty);
  if (lo == std::string::npos) {
    sym_.clear();
    first_ = 0;
    return;
  }
  auto hi = sym_.find_last_not_of(kEmpty);
  first_ += static_cast<int>(lo);
  sym_ = sym_.substr(lo, hi - lo + 1);
}

std::vector<int> SymbolSequence::positions_of(char c) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < sym_.size(); ++k)
    if (sym_[k] == c) out.push_back(first_ + static_cast<int>(k));
  return out;
}

int SymbolSequence::count(char c) const { return static_cast<int>(std::count(sym_.begin(), sym_.end(), c)); }

std::string SymbolSequence::ascii(int a, int b) const {
  std::string out;
  for (int i = a; i <= b; ++i) out.push_back(at(i));
  return out;
}

std::strong_ordering operator<=>(const SymbolSequence& x, const SymbolSequence& y) {
  if (x.empty() || y.empty()) return x.sym_.size() <=> y.sym_.size();
  int a = std::min(x.first(), y.first());
  int b = std::max(x.last(), y.last());
  for (int i = a; i <= b; ++i) {
    if (auto c = x.at(i) <=> y.at(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Weight::Weight(int first, std::string_view text) : SymbolSequence(first, text, "oxv^") {}

Weight Weight::with(int i, char c) const {
  Weight w = *this;
  w.set(i, c);
  return w;
}

Block::Block(int first, std::string_view text) : SymbolSequence(first, text, "ox*") {
  int stars = count(kStar);
  if (stars % 2 != 0) throw DomainError("block sequence with an odd number of stars cannot be balanced");
  up_ = down_ = stars / 2 + crosses();
}

Block::Block(int first, std::string_view text, int up, int down) : SymbolSequence(first, text, "ox*"), up_(up), down_(down) {
  int stars = count(kStar);
  if (up - crosses() < 0 || down - crosses() < 0 || (up - crosses()) + (down - crosses()) != stars)
    throw DomainError("up/down counts are inconsistent with the block sequence");
}

std::strong_ordering operator<=>(const Block& x, const Block& y) {
  if (auto c = static_cast<const SymbolSequence&>(x) <=> static_cast<const SymbolSequence&>(y); c != 0) return c;
  return x.up_ <=> y.up_;
}

Block block_of(const Weight& w) {
  std::string seq = w.ascii();
  int up = 0, down = 0;
  for (char& c : seq) {
    if (c == kUp) ++up;
    if (c == kDown) ++down;
    if (c == kCross) ++up, ++down;
    if (c == kUp || c == kDown) c = kStar;
  }
  return Block(w.first(), seq, up, down);
}

namespace {

bool has_only_cups(const std::string& s) {
  int open = 0;
  for (char c : s) {
    if (c == kDown) ++open;
    if (c == kUp && --open < 0) return false;
  }
  return open == 0;
}

}  // namespace

std::vector<Weight> members(const Block& b, bool cups_only) {
  std::vector<int> stars = b.stars();
  int ups = b.up_count() - b.crosses();
  int n = static_cast<int>(stars.size());
  std::vector<Weight> out;
  if (ups < 0 || ups > n) return out;
  if (cups_only && !b.balanced()) return out;
  std::string base = b.ascii();
  // Enumerate in lexicographic order of the symbol string: '^' < 'v'.
  std::vector<char> labels(static_cast<std::size_t>(n), kDown);
  std::fill(labels.begin(), labels.begin() + ups, kUp);
  do {
    std::string s = base;
    for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(stars[k] - b.first())] = labels[static_cast<std::size_t>(k)];
    if (cups_only && !has_only_cups(s)) continue;
    out.emplace_back(b.first(), s);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

int position(const Block& b, int i) {
  int p = 0;
  if (b.empty()) return 0;
  for (int k = b.first(); k <= std::min(i, b.last()); ++k) {
    char c = b.at(k);
    if (c == kStar) p += 1;
    if (c == kCross) p += 2;
  }
  return p;
}

int distance(const Block& b, int i, int j) { return std::abs(position(b, i) - position(b, j)); }

int saddle_width(const Block& b, int i, int j) {
  int d = distance(b, i, j);
  if (d % 2 == 0)
    invariant_failed("saddle width of an arc with even distance " + std::to_string(d) + " between " + std::to_string(i) + " and " + std::to_string(j));
  return (d + 1) / 2;
}

}  // namespace bk
