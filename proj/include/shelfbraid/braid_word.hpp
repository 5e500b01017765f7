#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "shelfbraid/errors.hpp"

namespace shelfbraid {

// One signed Artin generator: sigma_i for sign +1, sigma_i^-1 for sign -1.
struct GeneratorLetter {
  std::int32_t index;  // i >= 1
  std::int32_t sign;   // +1 or -1

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
  friend auto operator<=>(const GeneratorLetter&, const GeneratorLetter&) = default;
};

// A braid word: finite sequence of signed Artin generators. This is the
// free-monoid syntax layer; no group-equality reasoning happens here.
// The empty word denotes the unit braid.
struct BraidWord {
  std::vector<GeneratorLetter> letters;

  BraidWord() = default;
  explicit BraidWord(std::vector<GeneratorLetter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  // width(w) = 1 + max index occurring, 1 for the empty word.
  std::int32_t width() const;

  // Sum of letter signs; a braid-group invariant.
  std::int64_t exponent_sum() const;

  bool is_positive() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Single-letter word sigma_i^sign.
BraidWord sigma(std::int32_t i, std::int32_t sign = +1);

// sigma_m sigma_{m-1} ... sigma_1; the right power 1^{[m+1]}. m = 0 gives the
// empty word.
BraidWord descending_word(std::int32_t m);

// Text format: whitespace-separated nonzero integers, +i for sigma_i and -i
// for sigma_i^-1. Blank text is the unit braid. parse throws ParseError
// naming the offending token; render emits single-space separation.
BraidWord parse_word(const std::string& text);
std::string render_word(const BraidWord& w);

BraidWord concat(const BraidWord& w1, const BraidWord& w2);

// Letters reversed, signs flipped: the formal group inverse.
BraidWord invert(const BraidWord& w);

// Deletes adjacent sigma_i^e sigma_i^-e pairs until none remain.
BraidWord free_cancel(const BraidWord& w);

// Every index increased by k: represents sh^k(beta).
BraidWord shift_word(const BraidWord& w, std::int32_t k = 1);

// Every index decreased by 1. Throws NotShiftedError if an index-1 letter is
// present.
BraidWord unshift_word(const BraidWord& w);

// tau_{p,n}: the positive braid where n strands cross over p strands, as the
// product over k = 1..n of the descending run sigma_{p+k-1} ... sigma_k.
// Length p*n; tau_{p,0} = tau_{0,n} = empty.
BraidWord tau_word(std::int32_t p, std::int32_t n);

}  // namespace shelfbraid
