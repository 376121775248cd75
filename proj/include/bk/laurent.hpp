#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace bk {

// Laurent polynomial in q with integer coefficients.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int exponent, std::int64_t coeff = 1);

  Laurent& operator+=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  // "1 + q^2", "q^-1 + q", "0".
  std::string str() const;

 private:
  std::map<int, std::int64_t> terms_;  // no zero coefficients
};

}  // namespace bk
