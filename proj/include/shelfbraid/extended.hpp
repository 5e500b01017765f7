#pragma once

#include <cstdint>
#include <string>

#include "shelfbraid/shelf.hpp"

namespace shelfbraid {

// A value in {0} union {2^-p : p >= 0}: the braid ultrametric.
struct UltraDist {
  bool zero = true;
  std::int32_t p = 0;  // distance 2^-p when not zero

  static UltraDist d_zero() { return {true, 0}; }
  static UltraDist half_pow(std::int32_t p) { return {false, p}; }

  double value() const;
  std::string str() const;  // "0" or "2^-p"

  friend bool operator==(const UltraDist&, const UltraDist&) = default;
  // zero < 2^-p for all p; larger p means smaller distance.
  friend bool operator<(const UltraDist& a, const UltraDist& b);
  friend bool operator<=(const UltraDist& a, const UltraDist& b) { return a < b || a == b; }
};

// d(b1, b2) = 0 when equal, else 2^-p with p maximal such that b1^-1 b2 lies
// in Im(sh^p).
UltraDist braid_distance(const Braid& b1, const Braid& b2);

// The class [beta, p] in the completion monoid EB_inf: the limit of the
// Cauchy sequence (beta tau_{p,n})_n. Equality is the congruence of the
// completion, not pairwise equality of fields.
struct ExtBraid {
  Braid beta;
  std::int32_t layer = 0;  // p

  static ExtBraid from(Braid b, std::int32_t p) { return ExtBraid{std::move(b), p}; }
  static ExtBraid tau() { return ExtBraid{Braid::unit(), 1}; }
};

// [beta, p] == [gamma, q] iff p = q and beta^-1 gamma in B_p. For p <= 1 this
// degenerates to braid equality.
bool eb_equal(const ExtBraid& x, const ExtBraid& y);

// [beta, p] * [gamma, q] = [beta sh^p(gamma), p + q].
ExtBraid eb_mul(const ExtBraid& x, const ExtBraid& y);

// [beta, p] |> [gamma, q] = [beta sh^p(gamma) tau_{p,q} sh^q(beta)^-1, q].
ExtBraid eb_shelf(const ExtBraid& x, const ExtBraid& y);

// d([beta,p], [gamma,q]) = lim_n d(beta tau_{p,n}, gamma tau_{q,n}),
// evaluated at n0 and n0 + 1 past the widths involved. A positive limit has
// stabilized by then; equal classes with distinct representatives show a
// strictly decreasing tail and the limit is 0. Both shapes are asserted at
// runtime (EngineBug otherwise), cross-checked against eb_equal.
UltraDist eb_distance(const ExtBraid& x, const ExtBraid& y);

// Text form "[<braid word> | p]", e.g. "[1 -2 | 3]"; tau is "[ | 1]".
ExtBraid parse_ext(const std::string& text);
std::string render_ext(const ExtBraid& x);

}  // namespace shelfbraid
