#pragma once

#include <cstdint>
#include <vector>

#include "shelfbraid/braid_word.hpp"
#include "shelfbraid/laurent.hpp"

namespace shelfbraid {

// An element of GL_inf(Z[t,t^-1]): an n x n block that extends as the
// identity. Values are built from the Burau generators and shelf products
// only, so every matrix carries its exact inverse (computed blockwise, never
// by elimination) and its determinant, a unit +-t^k, as a tracked monomial.
class BurauMatrix {
public:
  BurauMatrix();  // identity

  // Sigma_i (sign +1) or its inverse (sign -1):
  //   Sigma_i = sh^{i-1}([[1-t, t], [1, 0]]),
  //   Sigma_i^-1 = sh^{i-1}([[0, 1], [t^-1, (t-1)t^-1]]).
  static BurauMatrix sigma(std::int32_t i, std::int32_t sign = +1);

  std::int32_t size() const { return n_; }

  // Entry (r, c), 1-based, identity extension beyond the stored block.
  const LaurentPoly& at(std::int32_t r, std::int32_t c) const;

  BurauMatrix inverse() const;

  // Bottom-right shift: new first row/column with 1 on the diagonal.
  BurauMatrix shifted() const;

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  friend bool operator==(const BurauMatrix& a, const BurauMatrix& b);

  // Tracked determinant +-t^k.
  LaurentPoly det() const;

  // Naive Laplace determinant of the stored block; exponential, intended for
  // cross-checks at small sizes.
  LaurentPoly det_laplace() const;

  // Shifted trace: the sum of overdiagonal entries sum_i A_{i,i+1}.
  LaurentPoly shtr() const;

  // Row-major JSON-ish rendering of the stored block.
  std::vector<std::vector<std::string>> rows_str() const;

private:
  std::int32_t n_;
  std::vector<LaurentPoly> fwd_;  // row-major n x n
  std::vector<LaurentPoly> inv_;
  std::int32_t det_sign_;  // +1 or -1
  std::int32_t det_exp_;   // det = det_sign * t^det_exp

  LaurentPoly& fwd(std::int32_t r, std::int32_t c);
  void trim();

  static std::vector<LaurentPoly> mul_blocks(const std::vector<LaurentPoly>& a,
                                             const std::vector<LaurentPoly>& b, std::int32_t n);
};

// Ordered product of generator matrices for the letters of w: the unreduced
// Burau representation, a homomorphism for left-to-right reading.
BurauMatrix burau_of(const BraidWord& w);

// A |> B = A * sh(B) * Sigma_1 * sh(A)^-1.
BurauMatrix burau_shelf_op(const BurauMatrix& a, const BurauMatrix& b);

BurauMatrix burau_right_power(const BurauMatrix& a, std::int32_t m);
BurauMatrix burau_left_power(const BurauMatrix& a, std::int32_t m);

}  // namespace shelfbraid
