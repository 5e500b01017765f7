#include "shelfbraid/burau.hpp"

#include <stdexcept>

namespace shelfbraid {

namespace {

const LaurentPoly kZero;
const LaurentPoly kOne = LaurentPoly::constant(1);

std::vector<LaurentPoly> identity_block(std::int32_t n) {
  std::vector<LaurentPoly> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = kOne;
  return m;
}

// Re-embeds a k x k block into n x n (identity padding bottom-right).
std::vector<LaurentPoly> grow_block(const std::vector<LaurentPoly>& a, std::int32_t k,
                                    std::int32_t n) {
  std::vector<LaurentPoly> m = identity_block(n);
  for (std::int32_t r = 0; r < k; ++r)
    for (std::int32_t c = 0; c < k; ++c)
      m[static_cast<std::size_t>(r) * n + c] = a[static_cast<std::size_t>(r) * k + c];
  return m;
}

}  // namespace

BurauMatrix::BurauMatrix() : n_(1), det_sign_(1), det_exp_(0) {
  fwd_ = identity_block(1);
  inv_ = identity_block(1);
}

LaurentPoly& BurauMatrix::fwd(std::int32_t r, std::int32_t c) {
  return fwd_[static_cast<std::size_t>(r - 1) * n_ + (c - 1)];
}

BurauMatrix BurauMatrix::sigma(std::int32_t i, std::int32_t sign) {
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  BurauMatrix m;
  m.n_ = i + 1;
  m.fwd_ = identity_block(m.n_);
  m.inv_ = identity_block(m.n_);
  auto set = [&](std::vector<LaurentPoly>& block, std::int32_t r, std::int32_t c,
                 const LaurentPoly& v) {
    block[static_cast<std::size_t>(r - 1) * m.n_ + (c - 1)] = v;
  };
  const LaurentPoly t = LaurentPoly::t(1);
  const LaurentPoly tinv = LaurentPoly::t(-1);
  // forward generator block and its exact inverse
  std::vector<LaurentPoly>& gen = sign > 0 ? m.fwd_ : m.inv_;
  std::vector<LaurentPoly>& ginv = sign > 0 ? m.inv_ : m.fwd_;
  set(gen, i, i, kOne - t);
  set(gen, i, i + 1, t);
  set(gen, i + 1, i, kOne);
  set(gen, i + 1, i + 1, kZero);
  set(ginv, i, i, kZero);
  set(ginv, i, i + 1, kOne);
  set(ginv, i + 1, i, tinv);
  set(ginv, i + 1, i + 1, (t - kOne) * tinv);
  m.det_sign_ = -1;
  m.det_exp_ = sign > 0 ? 1 : -1;
  return m;
}

const LaurentPoly& BurauMatrix::at(std::int32_t r, std::int32_t c) const {
  if (r <= n_ && c <= n_) return fwd_[static_cast<std::size_t>(r - 1) * n_ + (c - 1)];
  return r == c ? kOne : kZero;
}

BurauMatrix BurauMatrix::inverse() const {
  BurauMatrix m = *this;
  std::swap(m.fwd_, m.inv_);
  m.det_exp_ = -det_exp_;
  return m;
}

BurauMatrix BurauMatrix::shifted() const {
  BurauMatrix m = *this;
  m.n_ = n_ + 1;
  auto shift_block = [&](const std::vector<LaurentPoly>& a) {
    std::vector<LaurentPoly> out = identity_block(m.n_);
    for (std::int32_t r = 0; r < n_; ++r)
      for (std::int32_t c = 0; c < n_; ++c)
        out[static_cast<std::size_t>(r + 1) * m.n_ + (c + 1)] =
            a[static_cast<std::size_t>(r) * n_ + c];
    return out;
  };
  m.fwd_ = shift_block(fwd_);
  m.inv_ = shift_block(inv_);
  return m;
}

std::vector<LaurentPoly> BurauMatrix::mul_blocks(const std::vector<LaurentPoly>& a,
                                                 const std::vector<LaurentPoly>& b,
                                                 std::int32_t n) {
  std::vector<LaurentPoly> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::int32_t r = 0; r < n; ++r)
    for (std::int32_t k = 0; k < n; ++k) {
      const LaurentPoly& ark = a[static_cast<std::size_t>(r) * n + k];
      if (ark.is_zero()) continue;
      for (std::int32_t c = 0; c < n; ++c) {
        const LaurentPoly& bkc = b[static_cast<std::size_t>(k) * n + c];
        if (bkc.is_zero()) continue;
        out[static_cast<std::size_t>(r) * n + c] += ark * bkc;
      }
    }
  return out;
}

void BurauMatrix::trim() {
  while (n_ > 1) {
    bool identity_border = true;
    for (std::int32_t k = 1; k <= n_ && identity_border; ++k) {
      const LaurentPoly& row_entry = fwd_[static_cast<std::size_t>(n_ - 1) * n_ + (k - 1)];
      const LaurentPoly& col_entry = fwd_[static_cast<std::size_t>(k - 1) * n_ + (n_ - 1)];
      const LaurentPoly& want = k == n_ ? kOne : kZero;
      if (row_entry != want || col_entry != want) identity_border = false;
    }
    if (!identity_border) return;
    std::int32_t m = n_ - 1;
    std::vector<LaurentPoly> f(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    std::vector<LaurentPoly> g(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (std::int32_t r = 0; r < m; ++r)
      for (std::int32_t c = 0; c < m; ++c) {
        f[static_cast<std::size_t>(r) * m + c] = fwd_[static_cast<std::size_t>(r) * n_ + c];
        g[static_cast<std::size_t>(r) * m + c] = inv_[static_cast<std::size_t>(r) * n_ + c];
      }
    fwd_ = std::move(f);
    inv_ = std::move(g);
    n_ = m;
  }
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  std::int32_t n = std::max(a.n_, b.n_);
  BurauMatrix m;
  m.n_ = n;
  m.fwd_ = BurauMatrix::mul_blocks(grow_block(a.fwd_, a.n_, n), grow_block(b.fwd_, b.n_, n), n);
  m.inv_ = BurauMatrix::mul_blocks(grow_block(b.inv_, b.n_, n), grow_block(a.inv_, a.n_, n), n);
  m.det_sign_ = a.det_sign_ * b.det_sign_;
  m.det_exp_ = a.det_exp_ + b.det_exp_;
  m.trim();
  return m;
}

bool operator==(const BurauMatrix& a, const BurauMatrix& b) {
  std::int32_t n = std::max(a.n_, b.n_);
  for (std::int32_t r = 1; r <= n; ++r)
    for (std::int32_t c = 1; c <= n; ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

LaurentPoly BurauMatrix::det() const { return LaurentPoly::t(det_exp_, det_sign_); }

LaurentPoly BurauMatrix::det_laplace() const {
  std::vector<std::int32_t> cols(static_cast<std::size_t>(n_));
  for (std::int32_t c = 0; c < n_; ++c) cols[static_cast<std::size_t>(c)] = c;
  // recursive expansion along the first remaining row
  auto rec = [&](auto&& self, std::int32_t row, std::vector<std::int32_t> live) -> LaurentPoly {
    if (live.empty()) return kOne;
    LaurentPoly acc;
    for (std::size_t k = 0; k < live.size(); ++k) {
      const LaurentPoly& pivot = fwd_[static_cast<std::size_t>(row) * n_ + live[k]];
      if (pivot.is_zero()) continue;
      std::vector<std::int32_t> rest;
      rest.reserve(live.size() - 1);
      for (std::size_t j = 0; j < live.size(); ++j)
        if (j != k) rest.push_back(live[j]);
      LaurentPoly sub = self(self, row + 1, std::move(rest));
      LaurentPoly term = pivot * sub;
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return rec(rec, 0, std::move(cols));
}

LaurentPoly BurauMatrix::shtr() const {
  LaurentPoly acc;
  for (std::int32_t i = 1; i < n_; ++i) acc += at(i, i + 1);
  return acc;
}

std::vector<std::vector<std::string>> BurauMatrix::rows_str() const {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(static_cast<std::size_t>(n_));
  for (std::int32_t r = 1; r <= n_; ++r) {
    std::vector<std::string> row;
    row.reserve(static_cast<std::size_t>(n_));
    for (std::int32_t c = 1; c <= n_; ++c) row.push_back(at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

BurauMatrix burau_of(const BraidWord& w) {
  BurauMatrix m;
  for (const auto& l : w.letters) m = m * BurauMatrix::sigma(l.index, l.sign);
  return m;
}

BurauMatrix burau_shelf_op(const BurauMatrix& a, const BurauMatrix& b) {
  return a * b.shifted() * BurauMatrix::sigma(1) * a.shifted().inverse();
}

BurauMatrix burau_right_power(const BurauMatrix& a, std::int32_t m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  BurauMatrix acc = a;
  for (std::int32_t k = 1; k < m; ++k) acc = burau_shelf_op(a, acc);
  return acc;
}

BurauMatrix burau_left_power(const BurauMatrix& a, std::int32_t m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  BurauMatrix acc = a;
  for (std::int32_t k = 1; k < m; ++k) acc = burau_shelf_op(acc, a);
  return acc;
}

}  // namespace shelfbraid
