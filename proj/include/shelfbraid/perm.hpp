#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shelfbraid/braid_word.hpp"

namespace shelfbraid {

// A finitely supported permutation of the positive integers, stored as the
// map of non-fixed points. Products follow the braid convention: f * g is
// the function composition f o g (g applied first), so that perm_of is a
// group homomorphism for left-to-right word reading.
class Perm {
public:
  Perm() = default;

  static Perm identity() { return Perm(); }
  static Perm transposition(std::int32_t i);  // s_i, swapping i and i+1

  std::int32_t apply(std::int32_t n) const;
  Perm inverse() const;

  bool is_identity() const { return moved_.empty(); }

  // Largest non-fixed point, 0 for the identity.
  std::int32_t support_max() const;

  friend Perm operator*(const Perm& f, const Perm& g);  // f o g
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // One-line notation: images of 1..N separated by spaces (N = support max,
  // at least 1). parse accepts the same format.
  std::string str() const;
  static Perm parse(const std::string& text);

private:
  friend Perm perm_shift(const Perm& f);

  std::map<std::int32_t, std::int32_t> moved_;

  void set(std::int32_t n, std::int32_t v);
};

// sh(f)(1) = 1, sh(f)(n) = f(n-1) + 1: the shift endomorphism of S_inf.
Perm perm_shift(const Perm& f);

// f |> g = f * sh(g) * s_1 * sh(f)^-1.
Perm perm_shelf_op(const Perm& f, const Perm& g);

// Projection of a braid word: product of transpositions, sign-insensitive.
Perm perm_of(const BraidWord& w);

// cl(f) = f^-1(1); for a braid, the starting position of the strand that
// finishes at position 1 (equivalently where strand 1 ends).
std::int32_t perm_class(const Perm& f);
std::int32_t braid_class(const BraidWord& w);

// The quotient of small-class permutations (cl <= 2) by class equality: the
// Laver table A_1. Arguments and result in {1, 2}.
std::int32_t small_class_quotient(std::int32_t c1, std::int32_t c2);

// An injection of the positive integers of the "cofinitely shift-like" kind:
// an explicit prefix on {1..N} followed by n -> n + offset. This class
// contains SH and the embedded permutations and is closed under the shelf
// operation; closure and injectivity are validated at construction.
class Injection {
public:
  // The shift injection SH: n -> n+1.
  static Injection sh();
  static Injection identity();

  // prefix[k] is the image of k+1; beyond the prefix, n -> n + offset.
  Injection(std::vector<std::int32_t> prefix, std::int32_t offset);

  std::int32_t apply(std::int32_t n) const;
  bool in_image(std::int32_t n) const;
  std::int32_t preimage(std::int32_t n) const;  // valid when in_image(n)

  std::int32_t offset() const { return offset_; }
  const std::vector<std::int32_t>& prefix() const { return prefix_; }

  // Complement of the image: finite for this class.
  std::vector<std::int32_t> colm() const;

  friend bool operator==(const Injection&, const Injection&) = default;

  std::string str() const;

private:
  std::vector<std::int32_t> prefix_;
  std::int32_t offset_ = 0;

  void canonicalize();
  void validate() const;
};

// f |> g: n -> f(g(f^-1(n))) on Im(f), fixed elsewhere.
Injection inj_shelf_op(const Injection& f, const Injection& g);

// The embedding phi(f) = f * SH, i.e. n -> f(n+1); maps id to SH and is a
// shelf morphism from (S_inf, |>) into (I_inf, |>).
Injection inj_embed(const Perm& f);

}  // namespace shelfbraid
