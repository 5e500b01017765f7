#include "shelfbraid/extended.hpp"

#include <cmath>

namespace shelfbraid {

double UltraDist::value() const { return zero ? 0.0 : std::ldexp(1.0, -p); }

std::string UltraDist::str() const { return zero ? "0" : "2^-" + std::to_string(p); }

bool operator<(const UltraDist& a, const UltraDist& b) {
  if (a.zero) return !b.zero;
  if (b.zero) return false;
  return a.p > b.p;
}

UltraDist braid_distance(const Braid& b1, const Braid& b2) {
  Braid quotient(concat(invert(b1.word()), b2.word()));
  if (quotient.is_trivial()) return UltraDist::d_zero();
  std::int32_t p = 0;
  BraidWord current = quotient.word();
  while (auto pre = shift_preimage(current)) {
    current = *pre;
    ++p;
  }
  return UltraDist::half_pow(p);
}

bool eb_equal(const ExtBraid& x, const ExtBraid& y) {
  if (x.layer != y.layer) return false;
  Braid quotient(concat(invert(x.beta.word()), y.beta.word()));
  return in_Bn(quotient, x.layer);
}

ExtBraid eb_mul(const ExtBraid& x, const ExtBraid& y) {
  return ExtBraid{Braid(concat(x.beta.word(), shift_word(y.beta.word(), x.layer))),
                  x.layer + y.layer};
}

ExtBraid eb_shelf(const ExtBraid& x, const ExtBraid& y) {
  BraidWord w = concat(x.beta.word(), shift_word(y.beta.word(), x.layer));
  w = concat(w, tau_word(x.layer, y.layer));
  w = concat(w, invert(shift_word(x.beta.word(), y.layer)));
  return ExtBraid{Braid(w), y.layer};
}

UltraDist eb_distance(const ExtBraid& x, const ExtBraid& y) {
  std::int32_t n0 = x.beta.word().width() + y.beta.word().width() + x.layer + y.layer + 2;
  auto at = [&](std::int32_t n) {
    return braid_distance(Braid(concat(x.beta.word(), tau_word(x.layer, n))),
                          Braid(concat(y.beta.word(), tau_word(y.layer, n))));
  };
  UltraDist d0 = at(n0);
  UltraDist d1 = at(n0 + 1);
  // Distinct classes: the distance has stabilized by n0. Equal classes with
  // distinct representatives give a strictly decreasing null tail (the limit
  // 0 is never attained at finite n), which must coincide with eb_equal.
  if (d0 == d1) {
    if (d0 == UltraDist::d_zero() || !eb_equal(x, y)) return d0;
    throw EngineBug("positive stabilized distance between equal extended braids");
  }
  if (d1 < d0) {
    if (!eb_equal(x, y)) throw EngineBug("vanishing distance between distinct extended braids");
    return UltraDist::d_zero();
  }
  throw EngineBug("extended-braid distance increased between probes");
}

ExtBraid parse_ext(const std::string& text) {
  std::size_t open = text.find('[');
  std::size_t bar = text.find('|');
  std::size_t close = text.rfind(']');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
      !(open < bar && bar < close))
    throw ParseError("extended braid must look like '[<word> | p]': " + text);
  std::string word_part = text.substr(open + 1, bar - open - 1);
  std::string layer_part = text.substr(bar + 1, close - bar - 1);
  std::int32_t layer = 0;
  try {
    layer = std::stoi(layer_part);
  } catch (const std::exception&) {
    throw ParseError("bad layer in extended braid: '" + layer_part + "'");
  }
  if (layer < 0) throw ParseError("layer must be >= 0");
  return ExtBraid{Braid(parse_word(word_part)), layer};
}

std::string render_ext(const ExtBraid& x) {
  std::string w = render_word(x.beta.word());
  return "[" + (w.empty() ? std::string(" ") : w + " ") + "| " + std::to_string(x.layer) + "]";
}

}  // namespace shelfbraid
