#include "shelfbraid/shelf.hpp"

#include <stdexcept>

namespace shelfbraid {

Braid shelf_op(const Braid& b1, const Braid& b2) {
  BraidWord w = concat(b1.word(), shift_word(b2.word()));
  w.letters.push_back({1, +1});
  return Braid(concat(w, invert(shift_word(b1.word()))));
}

Braid opposite_op(const Braid& b1, const Braid& b2) {
  BraidWord w = invert(shift_word(b2.word()));
  w.letters.push_back({1, +1});
  return Braid(concat(concat(w, shift_word(b1.word())), b2.word()));
}

Braid right_power(const Braid& b, std::int32_t m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  Braid acc = b;
  for (std::int32_t k = 1; k < m; ++k) acc = shelf_op(b, acc);
  return acc;
}

Braid left_power(const Braid& b, std::int32_t m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  Braid acc = b;
  for (std::int32_t k = 1; k < m; ++k) acc = shelf_op(acc, b);
  return acc;
}

Braid unit_right_power(std::int32_t m) { return Braid(descending_word(m - 1)); }

std::optional<Braid> left_divide(const Braid& b, const Braid& c) {
  if (!equal(shelf_op(b, c), shelf_op(right_power(b, 2), c))) return std::nullopt;
  BraidWord delta = concat(concat(invert(b.word()), c.word()), shift_word(b.word()));
  delta.letters.push_back({1, -1});
  auto witness = shift_preimage(free_cancel(delta));
  if (!witness)
    throw EngineBug("divisibility criterion passed but quotient is not a shift image");
  return Braid(*witness);
}

bool in_Bn(const Braid& b, std::int32_t n) {
  if (n <= 1) return b.is_trivial();
  return equal(shelf_op(b, unit_right_power(n)), unit_right_power(n + 1));
}

ColorSeq unit_colors(std::size_t n) { return ColorSeq(n, Braid::unit()); }

ColorSeq act_positive(ColorSeq a, const BraidWord& w) {
  if (!w.is_positive()) throw std::invalid_argument("act_positive needs a positive word");
  auto result = act_partial(std::move(a), w);
  return *result.colors;
}

ActResult act_partial(ColorSeq a, const BraidWord& w) {
  if (!w.empty() && static_cast<std::size_t>(w.width()) > a.size())
    throw std::invalid_argument("word width exceeds color sequence length");
  std::size_t pos = 0;
  for (const auto& l : w.letters) {
    ++pos;
    std::size_t i = static_cast<std::size_t>(l.index) - 1;
    if (l.sign > 0) {
      Braid top = shelf_op(a[i], a[i + 1]);
      a[i + 1] = std::move(a[i]);
      a[i] = std::move(top);
    } else {
      auto x = left_divide(a[i + 1], a[i]);
      if (!x) return ActResult{std::nullopt, pos};
      a[i] = std::move(a[i + 1]);
      a[i + 1] = std::move(*x);
    }
  }
  return ActResult{std::move(a), 0};
}

Braid shifted_product(const ColorSeq& a) {
  BraidWord w;
  for (std::size_t k = 0; k < a.size(); ++k)
    w = concat(w, shift_word(a[k].word(), static_cast<std::int32_t>(k)));
  return Braid(w);
}

}  // namespace shelfbraid
