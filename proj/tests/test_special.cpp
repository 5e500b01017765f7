#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "shelfbraid/special.hpp"
#include "test_util.hpp"

using namespace shelfbraid;
using shelfbraid::testing::random_word;

namespace {

Term random_term(std::mt19937_64& rng, int size) {
  if (size <= 1) return Term::leaf();
  std::uniform_int_distribution<int> cut(1, size - 1);
  int left = cut(rng);
  return Term::node(random_term(rng, left), random_term(rng, size - left));
}

}  // namespace

TEST_CASE("term text format") {
  CHECK(Term::leaf().str() == "1");
  Term t = Term::node(Term::node(Term::leaf(), Term::leaf()), Term::leaf());
  CHECK(t.str() == "((1 > 1) > 1)");
  CHECK(Term::parse("((1 > 1) > 1)").str() == "((1 > 1) > 1)");
  CHECK(Term::parse("1").is_leaf());
  CHECK_THROWS_AS(Term::parse("(1 >"), ParseError);
  CHECK_THROWS_AS(Term::parse("(1 1)"), ParseError);
  CHECK_THROWS_AS(Term::parse("(1 > 1) junk"), ParseError);
  CHECK(t.size() == 3);
  CHECK(t.depth() == 2);

  std::mt19937_64 rng(31);
  for (int k = 0; k < 40; ++k) {
    Term r = random_term(rng, 1 + static_cast<int>(k % 6));
    CHECK(Term::parse(r.str()).str() == r.str());
  }
}

TEST_CASE("term evaluation") {
  CHECK(equal(eval_term(Term::parse("(1 > 1)")), Braid::of("1")));
  CHECK(equal(eval_term(Term::parse("(1 > (1 > 1))")), Braid::of("2 1")));
  CHECK(equal(eval_term(Term::parse("((1 > 1) > 1)")), Braid::of("1 1 -2")));
  CHECK(eval_term(Term::leaf()).is_trivial());
}

TEST_CASE("special recognition") {
  auto sp = is_special(parse_word("-2 -1 2 2 1"));
  REQUIRE(sp.has_value());
  CHECK(equal(*sp, Braid::of("1 1 -2")));
  CHECK_FALSE(is_special(parse_word("2")).has_value());
  CHECK_FALSE(is_special(parse_word("3")).has_value());
  auto unit = is_special(BraidWord{});
  REQUIRE(unit.has_value());
  CHECK(unit->is_trivial());
}

TEST_CASE("positive decomposition") {
  auto c = decompose_positive(parse_word("1 1"), 3);
  REQUIRE(c.size() == 3);
  CHECK(equal(c[0], Braid::of("1 1 -2")));
  CHECK(equal(c[1], Braid::of("1")));
  CHECK(c[2].is_trivial());

  auto c2 = decompose_positive(parse_word("2 1"), 3);
  CHECK(equal(c2[0], Braid::of("2 1")));
  CHECK(c2[1].is_trivial());
  CHECK(c2[2].is_trivial());

  auto c3 = decompose_positive(BraidWord{}, 4);
  for (const auto& b : c3) CHECK(b.is_trivial());

  CHECK_THROWS_AS(decompose_positive(parse_word("-1"), 2), std::invalid_argument);
}

TEST_CASE("two-sided decomposition") {
  SpecialDecomposition d = decompose(parse_word("-1 -1 2 1"), 3);
  REQUIRE(d.negative.size() == 3);
  REQUIRE(d.positive.size() == 3);
  CHECK(equal(d.negative[0], Braid::of("1 1 -2")));
  CHECK(equal(d.negative[1], Braid::of("1")));
  CHECK(d.negative[2].is_trivial());
  CHECK(equal(d.positive[0], Braid::of("2 1")));
  CHECK(d.positive[1].is_trivial());
  CHECK(d.positive[2].is_trivial());
  CHECK(equal(reassemble(d), Braid::of("-1 -1 2 1")));

  SpecialDecomposition dp = decompose(parse_word("2 1 1"), 3);
  for (const auto& b : dp.negative) CHECK(b.is_trivial());

  SpecialDecomposition de = decompose(BraidWord{}, 2);
  for (const auto& b : de.negative) CHECK(b.is_trivial());
  for (const auto& b : de.positive) CHECK(b.is_trivial());

  std::mt19937_64 rng(32);
  for (int k = 0; k < 60; ++k) {
    BraidWord w = random_word(rng, 8, 3);
    SpecialDecomposition r = decompose(w, w.width());
    CHECK(equal(reassemble(r), Braid(w)));  // also asserted internally
    for (const auto& b : r.negative) CHECK(is_special(b.word()).has_value());
    for (const auto& b : r.positive) CHECK(is_special(b.word()).has_value());
  }
}

TEST_CASE("synthesis round trip") {
  CHECK(synthesize_term(Braid::of("1"), 8).str() == "(1 > 1)");
  CHECK(synthesize_term(Braid::of("3 2 1"), 8).str() == "(1 > (1 > (1 > 1)))");
  CHECK(synthesize_term(Braid::unit(), 8).str() == "1");

  std::mt19937_64 rng(33);
  for (int k = 0; k < 50; ++k) {
    Term t = random_term(rng, 1 + static_cast<int>(k % 6));
    Braid value = eval_term(t);
    auto recognized = is_special(value.word());
    REQUIRE(recognized.has_value());
    Term found = synthesize_term(value, 10);
    CHECK(equal(eval_term(found), value));
    CHECK(found.size() <= t.size());  // BFS finds a minimal-size term
  }
  CHECK_THROWS_AS(synthesize_term(Braid::of("2 1"), 2), CapExceeded);
}

TEST_CASE("fixed point of the action characterizes specials") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 25; ++k) {
    Braid b = eval_term(random_term(rng, 1 + static_cast<int>(k % 5)));
    std::size_t n = static_cast<std::size_t>(std::max(b.word().width(), 2));
    auto r = act_partial(unit_colors(n), b.word());
    REQUIRE(r.defined());
    CHECK(equal((*r.colors)[0], b));
    for (std::size_t i = 1; i < n; ++i) CHECK((*r.colors)[i].is_trivial());
  }
}

TEST_CASE("specials are closed under left division") {
  std::mt19937_64 rng(35);
  for (int k = 0; k < 30; ++k) {
    Braid b = eval_term(random_term(rng, 1 + static_cast<int>(k % 4)));
    Braid c = eval_term(random_term(rng, 1 + static_cast<int>((k + 2) % 4)));
    auto x = left_divide(b, c);
    if (x.has_value()) CHECK(is_special(x->word()).has_value());
  }
}

TEST_CASE("order on specials") {
  CHECK(special_compare(Braid::unit(), Braid::of("1")) == SpecialOrder::kBelow);
  CHECK(special_compare(Braid::of("1"), Braid::of("1")) == SpecialOrder::kEqual);
  // 1^{[3]} vs 1_{[3]}: strictly comparable and consistent with compare()
  Braid r3 = unit_right_power(3);
  Braid l3 = left_power(Braid::unit(), 3);
  SpecialOrder so = special_compare(r3, l3);
  CHECK(so != SpecialOrder::kEqual);
  Order o = compare(r3, l3);
  CHECK((so == SpecialOrder::kBelow) == (o == Order::kLess));

  std::mt19937_64 rng(36);
  std::vector<Braid> pool;
  for (int k = 0; k < 16; ++k) pool.push_back(eval_term(random_term(rng, 1 + k % 5)));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      SpecialOrder ab = special_compare(a, b);
      SpecialOrder ba = special_compare(b, a);
      if (ab == SpecialOrder::kBelow) CHECK(ba == SpecialOrder::kAbove);
      if (ab == SpecialOrder::kEqual) CHECK(ba == SpecialOrder::kEqual);
      if (ab == SpecialOrder::kAbove) CHECK(ba == SpecialOrder::kBelow);
      CHECK((ab == SpecialOrder::kEqual) == equal(a, b));
    }
}

TEST_CASE("division has no cycle on specials") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 30; ++k) {
    Braid start = eval_term(random_term(rng, 1 + k % 4));
    Braid current = start;
    for (int step = 0; step < 3; ++step) {
      Braid x = eval_term(random_term(rng, 1 + (k + step) % 4));
      current = shelf_op(current, x);
      CHECK(special_compare(start, current) == SpecialOrder::kBelow);
      // quotient along a divisor chain is sigma_1-positive
      SigmaVerdict v = sigma_classify(concat(invert(start.word()), current.word()));
      CHECK(v == SigmaVerdict{SigmaVerdict::kPositive, 1});
    }
  }
}

TEST_CASE("freeness: distinct small terms are strictly ordered") {
  std::mt19937_64 rng(38);
  std::vector<std::pair<Term, Braid>> all;
  for (int size = 1; size <= 5; ++size)
    for (int k = 0; k < 12; ++k) {
      Term t = random_term(rng, size);
      all.emplace_back(t, eval_term(t));
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool same_fp = all[i].second.fingerprint() == all[j].second.fingerprint();
      SpecialOrder so = special_compare(all[i].second, all[j].second);
      CHECK(same_fp == (so == SpecialOrder::kEqual));
    }
  // division-order monotonicity on sampled triples
  for (int k = 0; k < 25; ++k) {
    Braid a = eval_term(random_term(rng, 1 + k % 4));
    Braid b = eval_term(random_term(rng, 1 + (k + 1) % 4));
    Braid c = eval_term(random_term(rng, 1 + (k + 2) % 4));
    CHECK(special_compare(a, shelf_op(a, b)) == SpecialOrder::kBelow);
    CHECK(special_compare(b, c) == special_compare(shelf_op(a, b), shelf_op(a, c)));
  }
}

TEST_CASE("complexity") {
  CHECK(complexity(Braid::unit()) == 0);
  CHECK(complexity(Braid::of("1")) == 1);
  CHECK(complexity(Braid::of("2 1")) == 2);
  CHECK_THROWS_AS(complexity(Braid::of("4 3 2 1"), 2), CapExceeded);

  // Complexity controls the strand count: c(beta) <= n implies beta in
  // B_{n+1} (each |> adds one strand; the unit lives in B_1). Checked on the
  // whole pool of depth <= 4. Note c(sigma_1) = 1 with sigma_1 in B_2 \ B_1,
  // so B_{n+1} is tight.
  std::map<Fingerprint, std::pair<Braid, int>> depth_of;
  std::vector<Braid> pool{Braid::unit()};
  depth_of.emplace(Braid::unit().fingerprint(), std::make_pair(Braid::unit(), 0));
  for (int d = 1; d <= 4; ++d) {
    std::vector<Braid> next = pool;
    for (const auto& x : pool)
      for (const auto& y : pool) {
        Braid v = shelf_op(x, y);
        if (depth_of.emplace(v.fingerprint(), std::make_pair(v, d)).second) next.push_back(v);
      }
    pool = std::move(next);
  }
  CHECK_FALSE(in_Bn(Braid::of("1"), 1));
  for (const auto& [fp, entry] : depth_of) {
    CHECK(complexity(entry.first, 5) == entry.second);
    CHECK(in_Bn(entry.first, entry.second + 1));
  }
}

TEST_CASE("positive specials and simple braids") {
  CHECK(positive_special_length(parse_word("3 2 1")) == 3);
  CHECK_FALSE(positive_special_length(parse_word("1 2")).has_value());
  CHECK(positive_special_length(BraidWord{}) == 0);

  CHECK(is_simple(parse_word("2 1 2")));  // Delta_3
  CHECK_FALSE(is_simple(parse_word("1 1")));
  CHECK(is_simple(parse_word("1")));
  CHECK(is_simple(BraidWord{}));
  // Delta_3's decomposition entries: (sigma_2 sigma_1) * sh(sigma_1)
  auto colors = decompose_positive(parse_word("2 1 2"), 3);
  CHECK(equal(colors[0], Braid::of("2 1")));
  CHECK(equal(colors[1], Braid::of("1")));
  CHECK(colors[2].is_trivial());
  // a negative word representing a positive braid is still simple
  CHECK(is_simple(parse_word("-1 1 2")));
  // sigma_1^2's decomposition leaves B_2
  auto c = decompose_positive(parse_word("1 1"), 2);
  CHECK_FALSE(in_Bn(c[0], 2));
}

TEST_CASE("laver conjecture probe") {
  auto rep = laver_probe(unit_colors(2), 2);
  CHECK(rep.words_enumerated == 7);  // lengths 0,1,2 over sigma_1^{+-1}
  CHECK(rep.all_positive_defined);
  CHECK(rep.defined_words == 4);
  CHECK(rep.distinct_braids == 3);
  REQUIRE(rep.minimum.has_value());
  CHECK(rep.minimum->is_trivial());
  CHECK_FALSE(act_partial(unit_colors(2), parse_word("-1")).defined());

  auto rep0 = laver_probe(unit_colors(3), 0);
  CHECK(rep0.words_enumerated == 1);
  CHECK(rep0.defined_words == 1);
  CHECK(rep0.distinct_braids == 1);

  auto rep3 = laver_probe(unit_colors(3), 3);
  CHECK(rep3.all_positive_defined);
}
