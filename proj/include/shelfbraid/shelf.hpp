#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shelfbraid/engine.hpp"

namespace shelfbraid {

// The braid shelf: shifted conjugation on B_inf,
//   b1 |> b2 = b1 * sh(b2) * sigma_1 * sh(b1)^-1.
// All operations return free-cancelled words; equality semantics live in the
// engine.

Braid shelf_op(const Braid& b1, const Braid& b2);

// The opposite (right selfdistributive) operation
//   b1 <| b2 = sh(b2)^-1 * sigma_1 * sh(b1) * b2.
Braid opposite_op(const Braid& b1, const Braid& b2);

// a^{[m]} and a_{[m]}: a^{[1]} = a_{[1]} = a, a^{[m+1]} = a |> a^{[m]},
// a_{[m+1]} = a_{[m]} |> a. Require m >= 1.
Braid right_power(const Braid& b, std::int32_t m);
Braid left_power(const Braid& b, std::int32_t m);

// Right power of the unit braid: 1^{[m]} = sigma_{m-1} ... sigma_1 exactly.
Braid unit_right_power(std::int32_t m);

// Left division: the unique x with b |> x = c, or nullopt when c is not in
// the image of the left translation by b. Divisibility is decided by the
// criterion b |> c = b^{[2]} |> c; on success the quotient is forced:
// x = sh^-1(b^-1 c sh(b) sigma_1^-1). Throws EngineBug if the criterion
// passes but the forced quotient is not a shift image.
std::optional<Braid> left_divide(const Braid& b, const Braid& c);

// Membership test for B_n via absorption: beta in B_n iff
// beta |> 1^{[n]} = 1^{[n+1]}. For n <= 1 this degenerates to triviality
// (B_0 and B_1 are trivial).
bool in_Bn(const Braid& b, std::int32_t n);

// A sequence of braid colors, acted on by braid words.
using ColorSeq = std::vector<Braid>;

ColorSeq unit_colors(std::size_t n);

// Positive action: (a_1,...) * sigma_i replaces (a_i, a_{i+1}) by
// (a_i |> a_{i+1}, a_i). Letters apply left to right. Requires
// width(w) <= a.size(); throws std::invalid_argument otherwise.
ColorSeq act_positive(ColorSeq a, const BraidWord& w);

// Partial action of arbitrary words: a negative letter sigma_i^-1 replaces
// (a_i, a_{i+1}) by (a_{i+1}, x) with x = left_divide(a_{i+1}, a_i), when
// that division exists.
struct ActResult {
  std::optional<ColorSeq> colors;
  std::size_t undefined_at = 0;  // 1-based letter position of the first failure

  bool defined() const { return colors.has_value(); }
};

ActResult act_partial(ColorSeq a, const BraidWord& w);

// Shifted product: prod^sh(b_1, ..., b_n) = b_1 * sh(b_2) * ... * sh^{n-1}(b_n).
Braid shifted_product(const ColorSeq& a);

}  // namespace shelfbraid
