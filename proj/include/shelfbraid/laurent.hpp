#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "shelfbraid/errors.hpp"

namespace shelfbraid {

// An element of Z[t, t^-1]: a sparse map from exponent to nonzero integer
// coefficient. Arithmetic is exact; coefficient overflow aborts rather than
// wrapping.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly constant(std::int64_t c);
  static LaurentPoly t(std::int32_t exponent = 1, std::int64_t coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(std::int32_t exponent) const;
  const std::map<std::int32_t, std::int64_t>& coeffs() const { return coeffs_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "c*t^k" sums in increasing exponent order, e.g. "1*t^0 + -1*t^1"; "0"
  // when zero.
  std::string str() const;

private:
  std::map<std::int32_t, std::int64_t> coeffs_;

  void add_term(std::int32_t exponent, std::int64_t coeff);
};

}  // namespace shelfbraid
