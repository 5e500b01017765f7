#include "shelfbraid/laurent.hpp"

namespace shelfbraid {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("integer overflow in Z[t,t^-1]", 64);
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("integer overflow in Z[t,t^-1]", 64);
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::int64_t c) { return t(0, c); }

LaurentPoly LaurentPoly::t(std::int32_t exponent, std::int64_t coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exponent] = coeff;
  return p;
}

std::int64_t LaurentPoly::coeff(std::int32_t exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(std::int32_t exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(exponent, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, checked_mul(ca, cb));
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*t^" + std::to_string(e);
  }
  return out;
}

}  // namespace shelfbraid
