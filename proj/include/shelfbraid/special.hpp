#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shelfbraid/shelf.hpp"

namespace shelfbraid {

// A |>-expression over the single generator 1: either the leaf (evaluating
// to the unit braid) or a node meaning left |> right. Immutable; subtrees are
// shared.
class Term {
public:
  static Term leaf();
  static Term node(Term left, Term right);

  bool is_leaf() const { return !left_; }
  const Term& left() const { return *left_; }
  const Term& right() const { return *right_; }

  std::int32_t size() const;   // leaf count
  std::int32_t depth() const;  // leaf has depth 0

  // Text format: "1" for the leaf, "(T > T)" for a node.
  std::string str() const;
  static Term parse(const std::string& text);

private:
  std::shared_ptr<const Term> left_, right_;  // both null for the leaf
};

// Evaluates with leaf -> 1 and node -> shelf_op.
Braid eval_term(const Term& t);

// Special-braid recognition (the braids generated from 1 under |>): reverse
// w into u v^-1, act on unit colors with u then v^-1; w is special iff the
// action is defined and every entry after the first is trivial. On success
// returns the braid value (asserted equal to the input).
std::optional<Braid> is_special(const BraidWord& w);

// Colors (1,...,1) * w for positive w, padded to n entries; the unique
// sequence of special braids whose shifted product is w. Asserts the
// reassembly identity.
std::vector<Braid> decompose_positive(const BraidWord& w, std::int32_t n);

// Two-sided canonical decomposition of an arbitrary braid,
//   w = sh^{n-1}(neg_n^-1) ... sh(neg_2^-1) neg_1^-1 * pos_1 sh(pos_2) ... sh^{n-1}(pos_n),
// with all entries special. Entries are stored in color order (index i
// corresponds to shift power i-1).
struct SpecialDecomposition {
  std::vector<Braid> negative;
  std::vector<Braid> positive;
};

SpecialDecomposition decompose(const BraidWord& w, std::int32_t n);

// The word of the decomposition formula above.
Braid reassemble(const SpecialDecomposition& d);

// Finds a term evaluating to b (b must be special) by breadth-first
// enumeration of term sizes with fingerprint memoization; returns a term of
// minimal leaf count. Throws CapExceeded past size_cap.
Term synthesize_term(const Braid& b, std::int32_t size_cap = 24);

// Minimal nesting depth over all |>-decompositions of a special braid:
// c(1) = 0, c(b) = min over b = b1 |> b2 of max(c(b1), c(b2)) + 1.
std::int32_t complexity(const Braid& b, std::int32_t depth_cap = 8);

// Order on special braids: iterated left division, decided through
// sigma-classification of b1^-1 b2 (positive at index 1 means b1 below b2).
// An index >= 2 verdict is impossible for special inputs and raises
// EngineBug.
enum class SpecialOrder { kBelow, kEqual, kAbove };

std::string special_order_str(SpecialOrder o);

SpecialOrder special_compare(const Braid& b1, const Braid& b2);

// For positive w: its length m when w equals sigma_m ... sigma_1 (the unique
// positive special of length m), nullopt otherwise.
std::optional<std::int32_t> positive_special_length(const BraidWord& w);

// True iff w represents a positive braid whose special decomposition
// consists of positive entries, i.e. a simple braid (a divisor of some
// Garside braid Delta_n).
bool is_simple(const BraidWord& w);

// Exploratory probe for the Laver conjecture: enumerate all words of length
// <= max_len over sigma_i^+-1 with i < a.size(), act on a, and order the
// defined braids.
struct LaverProbeReport {
  std::size_t words_enumerated = 0;
  std::size_t defined_words = 0;
  std::size_t distinct_braids = 0;
  bool all_positive_defined = true;
  std::optional<Braid> minimum;  // least defined braid in the braid order
};

LaverProbeReport laver_probe(const ColorSeq& a, std::int32_t max_len);

}  // namespace shelfbraid
