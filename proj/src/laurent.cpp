#include "bk/laurent.hpp"

namespace bk {

Laurent Laurent::monomial(int exponent, std::int64_t coeff) {
  Laurent p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (auto [e, c] : a.terms_)
    for (auto [f, d] : b.terms_) p += Laurent::monomial(e + f, c * d);
  return p;
}

std::int64_t Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    std::string mono = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
    if (mono.empty()) out += std::to_string(mag);
    else out += (mag == 1 ? "" : std::to_string(mag)) + mono;
  }
  return out;
}

}  // namespace bk
