#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shelfbraid/braid_word.hpp"
#include "shelfbraid/free_word.hpp"

namespace shelfbraid {

// Default cap on elementary rewriting steps (handle reductions, reversing
// steps). Termination is a theorem; the cap guards against engine bugs.
constexpr std::size_t kDefaultStepCap = 1'000'000;

// ---------------------------------------------------------------------------
// Artin representation of B_inf in Aut(F_inf). This is the ground-truth
// equality oracle: the representation is faithful (classical), so two words
// are equal in B_inf exactly when their actions on x_1..x_width agree.
//
// rho(sigma_i):   x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
// rho(sigma_i^-1): x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// and x_k fixed otherwise. Letters of w are folded left to right into
// f := f o rho(letter), so the result is rho(w) read as a homomorphism.
// ---------------------------------------------------------------------------

// Images rho(w)(x_1), ..., rho(w)(x_count).
std::vector<FreeWord> artin_images(const BraidWord& w, std::int32_t count);

// rho(w)(x_i).
FreeWord artin_apply(const BraidWord& w, std::int32_t i);

// Canonical equality key: images rho(w)(x_i) for i = 1..width(w) with
// trailing identity images dropped. Equal braids have identical fingerprints,
// distinct braids distinct ones, independently of the representative word.
using Fingerprint = std::vector<FreeWord>;

Fingerprint fingerprint_of(const BraidWord& w);

bool is_trivial_word(const BraidWord& w);
bool words_equal(const BraidWord& w1, const BraidWord& w2);

// ---------------------------------------------------------------------------
// Braid: a word endowed with group-equality semantics. Immutable; the
// fingerprint is computed on first use and cached. Concurrent readers may
// race to fill the cache but always observe either absence or the unique
// correct value (the computation is pure, so all candidates are equal).
// ---------------------------------------------------------------------------
class Braid {
public:
  Braid() = default;
  explicit Braid(BraidWord w) : word_(free_cancel(std::move(w))) {}

  static Braid unit() { return Braid(); }
  static Braid of(const std::string& text) { return Braid(parse_word(text)); }

  const BraidWord& word() const { return word_; }
  bool is_trivial() const { return fingerprint().empty(); }

  const Fingerprint& fingerprint() const;

  friend bool operator==(const Braid& a, const Braid& b) {
    return a.fingerprint() == b.fingerprint();
  }

private:
  BraidWord word_;
  mutable std::shared_ptr<const Fingerprint> cache_;
};

inline bool equal(const Braid& a, const Braid& b) { return a == b; }
inline bool equal(const BraidWord& a, const BraidWord& b) { return words_equal(a, b); }

// ---------------------------------------------------------------------------
// Handle reduction. A handle is a subword sigma_i^e v sigma_i^-e where v
// contains no letter of index <= i. Reducing deletes the outer letters and
// replaces each sigma_{i+1}^d inside v by sigma_{i+1}^-e sigma_i^d
// sigma_{i+1}^e. The strategy reduces the leftmost handle that contains no
// nested sigma_{i+1}-handle; this is the standard convergent strategy.
// ---------------------------------------------------------------------------

// Returns a word equal to w in B_inf containing no handle. In particular all
// letters of the lowest occurring index share one sign. Throws CapExceeded
// past step_cap reductions.
BraidWord handle_reduce(const BraidWord& w, std::size_t step_cap = kDefaultStepCap);

struct SigmaVerdict {
  enum Kind { kPositive, kNegative, kTrivial } kind = kTrivial;
  std::int32_t index = 0;  // lowest occurring index for kPositive/kNegative

  bool is_trivial() const { return kind == kTrivial; }
  std::string str() const;

  friend bool operator==(const SigmaVerdict&, const SigmaVerdict&) = default;
};

// Classifies w as sigma_i-positive, sigma_i-negative (i the lowest index of
// the handle-reduced word), or trivial.
SigmaVerdict sigma_classify(const BraidWord& w, std::size_t step_cap = kDefaultStepCap);

enum class Order { kLess, kEqual, kGreater };

std::string order_str(Order o);

// The braid order: classify w1^-1 w2; sigma-positive means w1 < w2.
Order compare_words(const BraidWord& w1, const BraidWord& w2,
                    std::size_t step_cap = kDefaultStepCap);
inline Order compare(const Braid& b1, const Braid& b2,
                     std::size_t step_cap = kDefaultStepCap) {
  return compare_words(b1.word(), b2.word(), step_cap);
}

// ---------------------------------------------------------------------------
// Subword reversing.
// ---------------------------------------------------------------------------

struct PosNegSplit {
  BraidWord positive;  // u
  BraidWord negative;  // v, positive word; the input equals u * v^-1
};

struct NegPosSplit {
  BraidWord negative;  // v, positive word; the input equals v^-1 * u
  BraidWord positive;  // u
};

// Right reversing: exhaustively rewrites sigma_i^-1 sigma_j until the word
// has shape (positive)(negative), yielding w = u * v^-1 with u, v positive
// and without common right divisor.
PosNegSplit reverse_to_pos_neg(const BraidWord& w, std::size_t step_cap = kDefaultStepCap);

// Left reversing, the mirror rewriting: w = v^-1 * u. This is the split
// matching the canonical decomposition formula of arbitrary braids.
NegPosSplit reverse_to_neg_pos(const BraidWord& w, std::size_t step_cap = kDefaultStepCap);

// Double reversing (left, then right): w = u * v^-1 where the positive
// braids of u and v have no common right divisor. This is the split required
// by special-braid recognition: u and v are the lcm complements of the
// left-reversed halves.
PosNegSplit reverse_gcd_free(const BraidWord& w, std::size_t step_cap = kDefaultStepCap);

// ---------------------------------------------------------------------------
// Shift-image tests. beta lies in Im(sh) iff sh(beta) commutes with sigma_1;
// on success the handle trick turns sh(beta) back into an explicit preimage
// word.
// ---------------------------------------------------------------------------

// Witness x with sh(x) = w in B_inf, or nullopt if w is not a shift image.
std::optional<BraidWord> shift_preimage(const BraidWord& w);

// Iterated p times: witness x with sh^p(x) = w, or nullopt.
std::optional<BraidWord> shift_preimage(const BraidWord& w, std::int32_t p);

inline bool is_shift_image(const BraidWord& w, std::int32_t p = 1) {
  return shift_preimage(w, p).has_value();
}

}  // namespace shelfbraid
