#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shelfbraid/burau.hpp"
#include "shelfbraid/laver.hpp"
#include "shelfbraid/perm.hpp"
#include "shelfbraid/shelf.hpp"
#include "shelfbraid/special.hpp"
#include "test_util.hpp"

using namespace shelfbraid;
using shelfbraid::testing::random_word;

namespace {

Perm random_perm(std::mt19937_64& rng, int max_len, int max_index) {
  return perm_of(random_word(rng, max_len, max_index));
}

Perm perm_eval_term(const Term& t) {
  if (t.is_leaf()) return Perm::identity();
  return perm_shelf_op(perm_eval_term(t.left()), perm_eval_term(t.right()));
}

Term random_term(std::mt19937_64& rng, int size) {
  if (size <= 1) return Term::leaf();
  std::uniform_int_distribution<int> cut(1, size - 1);
  int left = cut(rng);
  return Term::node(random_term(rng, left), random_term(rng, size - left));
}

const Perm kId;
const Perm kS1 = Perm::transposition(1);
const Perm kS2 = Perm::transposition(2);
const Perm kS3 = Perm::transposition(3);
const Perm kS4 = Perm::transposition(4);

}  // namespace

TEST_CASE("perm basics") {
  CHECK(kS1.apply(1) == 2);
  CHECK(kS1.apply(3) == 3);
  CHECK((kS1 * kS2).apply(3) == 1);  // s1(s2(3)) = s1(2) = 1
  CHECK(kS1.inverse() == kS1);
  CHECK(Perm::parse("2 1").str() == "2 1");
  CHECK(Perm::parse("1 2 3") == kId);
  CHECK_THROWS_AS(Perm::parse("2 2"), ParseError);
  CHECK_THROWS_AS(Perm::parse("0 1"), ParseError);
  std::mt19937_64 rng(41);
  for (int k = 0; k < 60; ++k) {
    Perm p = random_perm(rng, 8, 4);
    CHECK(Perm::parse(p.str()) == p);
    CHECK(p * p.inverse() == kId);
  }
}

TEST_CASE("perm shift") {
  CHECK(perm_shift(kS1) == kS2);
  CHECK(perm_shift(kId) == kId);
  Perm s2s1 = kS2 * kS1;
  CHECK(perm_shift(s2s1).apply(4) == s2s1.apply(3) + 1);
  CHECK(perm_shift(s2s1).apply(1) == 1);
}

TEST_CASE("permutation shelf: figure values") {
  CHECK(perm_shelf_op(kId, kId) == kS1);
  CHECK(perm_shelf_op(kS1, kId) == kS2);
  CHECK(perm_shelf_op(kS2, kId) == kS2 * kS3 * kS1);

  // left powers of the identity
  Perm l2 = perm_shelf_op(kId, kId);
  Perm l3 = perm_shelf_op(l2, kId);
  Perm l4 = perm_shelf_op(l3, kId);
  Perm l5 = perm_shelf_op(l4, kId);
  CHECK(l2 == kS1);
  CHECK(l3 == kS2);
  CHECK(l4 == kS2 * kS3 * kS1);
  CHECK(l5 == kS3 * kS4 * kS2 * kS3 * kS4);

  // right powers: id^{[n]} is the n-cycle s_{n-1} ... s_1
  Perm r = kId;
  for (int n = 2; n <= 6; ++n) {
    r = perm_shelf_op(kId, r);
    Perm cycle;
    for (int i = n - 1; i >= 1; --i) cycle = cycle * Perm::transposition(i);
    CHECK(r == cycle);
  }
}

TEST_CASE("perm_of is a shelf morphism") {
  CHECK(perm_of(parse_word("1")) == kS1);
  CHECK(perm_of(parse_word("-1")) == kS1);
  CHECK(perm_of(parse_word("2 1")) == kS2 * kS1);
  std::mt19937_64 rng(42);
  for (int k = 0; k < 150; ++k) {
    BraidWord a = random_word(rng, 8, 4);
    BraidWord b = random_word(rng, 8, 4);
    CHECK(perm_of(shelf_op(Braid(a), Braid(b)).word()) ==
          perm_shelf_op(perm_of(a), perm_of(b)));
  }
}

TEST_CASE("LD law in the permutation shelf") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 300; ++k) {
    Perm f = random_perm(rng, 8, 4), g = random_perm(rng, 8, 4), h = random_perm(rng, 8, 4);
    CHECK(perm_shelf_op(f, perm_shelf_op(g, h)) ==
          perm_shelf_op(perm_shelf_op(f, g), perm_shelf_op(f, h)));
  }
}

TEST_CASE("division cycle and the A_2 obstruction") {
  Perm s2s1 = kS2 * kS1;
  CHECK(perm_shelf_op(perm_shelf_op(s2s1, kS1), kS2 * kS3 * kS1) == s2s1);

  // id |> id_{[3]} = s3 s1 = id_{[3]} |> id_{[2]} holds in S_inf ...
  Perm l2 = perm_shelf_op(kId, kId);
  Perm l3 = perm_shelf_op(l2, kId);
  CHECK(perm_shelf_op(kId, l3) == kS3 * kS1);
  CHECK(perm_shelf_op(l3, l2) == kS3 * kS1);
  // ... while in A_2: 1 |> 1_{[3]} != 1_{[3]} |> 1_{[2]}
  LaverTable a2 = build_cyclic(4);
  auto p = laver_powers(a2, 1, 3);
  auto p2 = laver_powers(a2, 1, 2);
  CHECK(a2.entry(1, p.left) == 2);
  CHECK(a2.entry(p.left, p2.left) == 4);
  CHECK(a2.entry(1, p.left) != a2.entry(p.left, p2.left));
}

TEST_CASE("classes and the A_1 quotient") {
  CHECK(perm_class(kId) == 1);
  CHECK(perm_class(kS1) == 2);
  CHECK(perm_class(perm_of(parse_word("2 1"))) == 2);
  CHECK(braid_class(parse_word("2 1")) == 2);

  // the quotient table is A_1
  LaverTable a1 = build_cyclic(2);
  for (std::int32_t x = 1; x <= 2; ++x)
    for (std::int32_t y = 1; y <= 2; ++y)
      CHECK(small_class_quotient(x, y) == static_cast<std::int32_t>(a1.entry(
                static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y))));

  // congruence stability on random small-class permutations
  std::mt19937_64 rng(44);
  auto random_small = [&](std::int32_t cls) {
    Perm base = perm_shift(random_perm(rng, 6, 3));
    return cls == 1 ? base : base * kS1;
  };
  for (int k = 0; k < 150; ++k) {
    std::int32_t c1 = 1 + static_cast<std::int32_t>(k % 2);
    std::int32_t c2 = 1 + static_cast<std::int32_t>((k / 2) % 2);
    Perm f = random_small(c1), f2 = random_small(c1);
    Perm g = random_small(c2), g2 = random_small(c2);
    REQUIRE(perm_class(f) == c1);
    REQUIRE(perm_class(g) == c2);
    CHECK(perm_class(perm_shelf_op(f, g)) == perm_class(perm_shelf_op(f2, g2)));
    CHECK(perm_class(perm_shelf_op(f, g)) == small_class_quotient(c1, c2));
  }

  // special permutations have small class: all terms of size <= 6
  std::vector<std::vector<Term>> by_size(7);
  by_size[1] = {Term::leaf()};
  for (int size = 2; size <= 6; ++size)
    for (int ls = 1; ls < size; ++ls)
      for (const auto& a : by_size[static_cast<std::size_t>(ls)])
        for (const auto& b : by_size[static_cast<std::size_t>(size - ls)])
          by_size[static_cast<std::size_t>(size)].push_back(Term::node(a, b));
  std::size_t term_count = 0;
  for (int size = 1; size <= 6; ++size)
    for (const auto& t : by_size[static_cast<std::size_t>(size)]) {
      CHECK(perm_class(perm_eval_term(t)) <= 2);
      ++term_count;
    }
  CHECK(term_count == 65);  // Catalan numbers 1+1+2+5+14+42
}

TEST_CASE("injections") {
  CHECK(inj_embed(kId) == Injection::sh());
  Injection shsh = inj_shelf_op(Injection::sh(), Injection::sh());
  CHECK(shsh.apply(1) == 1);
  for (int n = 2; n <= 8; ++n) CHECK(shsh.apply(n) == n + 1);
  CHECK(shsh.colm() == std::vector<std::int32_t>{2});

  // phi(s1): 1 -> 1, 2 -> 3, n -> n+1 beyond
  Injection phis1 = inj_embed(kS1);
  CHECK(phis1.apply(1) == 1);
  CHECK(phis1.apply(2) == 3);
  CHECK(phis1.apply(3) == 4);

  // bijective f: f |> g = f g f^-1
  std::mt19937_64 rng(46);
  for (int k = 0; k < 50; ++k) {
    Perm f = random_perm(rng, 6, 3), g = random_perm(rng, 6, 3);
    auto as_inj = [](const Perm& p) {
      std::vector<std::int32_t> pre;
      for (std::int32_t n = 1; n <= p.support_max(); ++n) pre.push_back(p.apply(n));
      return Injection(std::move(pre), 0);
    };
    Injection conj = inj_shelf_op(as_inj(f), as_inj(g));
    Perm expect = f * g * f.inverse();
    for (std::int32_t n = 1; n <= 10; ++n) CHECK(conj.apply(n) == expect.apply(n));
  }

  // phi injective on distinct perms
  for (int k = 0; k < 100; ++k) {
    Perm f = random_perm(rng, 6, 3), g = random_perm(rng, 6, 3);
    if (f == g) continue;
    CHECK_FALSE(inj_embed(f) == inj_embed(g));
  }

  // morphism square and LD
  for (int k = 0; k < 300; ++k) {
    Perm f = random_perm(rng, 6, 3), g = random_perm(rng, 6, 3), h = random_perm(rng, 6, 3);
    CHECK(inj_embed(perm_shelf_op(f, g)) == inj_shelf_op(inj_embed(f), inj_embed(g)));
    Injection a = inj_embed(f), b = inj_embed(g), c = inj_embed(h);
    CHECK(inj_shelf_op(a, inj_shelf_op(b, c)) ==
          inj_shelf_op(inj_shelf_op(a, b), inj_shelf_op(a, c)));
  }
}

TEST_CASE("burau generators") {
  BurauMatrix s1 = BurauMatrix::sigma(1);
  CHECK(s1.at(1, 1) == LaurentPoly::constant(1) - LaurentPoly::t(1));
  CHECK(s1.at(1, 2) == LaurentPoly::t(1));
  CHECK(s1.at(2, 1) == LaurentPoly::constant(1));
  CHECK(s1.at(2, 2).is_zero());
  CHECK(s1.det().str() == "-1*t^1");
  CHECK(s1.det() == s1.det_laplace());
  CHECK((s1 * s1.inverse()) == BurauMatrix());
  CHECK(BurauMatrix::sigma(2) == BurauMatrix::sigma(1).shifted());

  // braid relations
  CHECK(BurauMatrix::sigma(1) * BurauMatrix::sigma(2) * BurauMatrix::sigma(1) ==
        BurauMatrix::sigma(2) * BurauMatrix::sigma(1) * BurauMatrix::sigma(2));
  CHECK(BurauMatrix::sigma(1) * BurauMatrix::sigma(3) ==
        BurauMatrix::sigma(3) * BurauMatrix::sigma(1));
}

TEST_CASE("burau of words") {
  CHECK(burau_of(BraidWord{}) == BurauMatrix());
  CHECK(burau_of(parse_word("1 -1")) == BurauMatrix());
  CHECK(burau_of(parse_word("1 2 1")) == burau_of(parse_word("2 1 2")));
  CHECK(burau_of(parse_word("1 3")) == burau_of(parse_word("3 1")));

  std::mt19937_64 rng(47);
  for (int k = 0; k < 60; ++k) {
    BraidWord w = random_word(rng, 10, 4);
    BurauMatrix m = burau_of(w);
    CHECK(m * m.inverse() == BurauMatrix());
    CHECK(m.det() == m.det_laplace());  // tracked monomial vs Laplace oracle
  }
}

TEST_CASE("burau shelf") {
  BurauMatrix I;
  CHECK(burau_shelf_op(I, I) == BurauMatrix::sigma(1));
  CHECK(BurauMatrix().shtr().is_zero());
  CHECK(BurauMatrix::sigma(1).shtr() == LaurentPoly::t(1));
  CHECK(BurauMatrix::sigma(2).shtr() == LaurentPoly::t(1));

  std::mt19937_64 rng(48);
  for (int k = 0; k < 80; ++k) {
    BraidWord wa = random_word(rng, 8, 3), wb = random_word(rng, 8, 3);
    BurauMatrix A = burau_of(wa), B = burau_of(wb);
    // morphism square
    CHECK(burau_of(shelf_op(Braid(wa), Braid(wb)).word()) == burau_shelf_op(A, B));
    // det and shtr identities
    CHECK(burau_shelf_op(A, B).det() == -(LaurentPoly::t(1) * B.det()));
    CHECK(burau_shelf_op(A, B).shtr() == B.shtr() + LaurentPoly::t(1));
  }
  // LD law
  for (int k = 0; k < 300; ++k) {
    BurauMatrix A = burau_of(random_word(rng, 6, 3));
    BurauMatrix B = burau_of(random_word(rng, 6, 3));
    BurauMatrix C = burau_of(random_word(rng, 6, 3));
    CHECK(burau_shelf_op(A, burau_shelf_op(B, C)) ==
          burau_shelf_op(burau_shelf_op(A, B), burau_shelf_op(A, C)));
  }

  // the corresponding equality fails for Burau matrices
  BurauMatrix I3 = burau_left_power(I, 3);
  BurauMatrix I2 = burau_left_power(I, 2);
  CHECK_FALSE(burau_shelf_op(I, I3) == burau_shelf_op(I3, I2));
}

TEST_CASE("laurent polynomials") {
  LaurentPoly p = LaurentPoly::constant(1) - LaurentPoly::t(1);
  CHECK(p.str() == "1*t^0 + -1*t^1");
  CHECK((p * LaurentPoly::t(-1)).str() == "1*t^-1 + -1*t^0");
  CHECK((p - p).is_zero());
  CHECK((p - p).str() == "0");
  CHECK(LaurentPoly::t(2, 3).coeff(2) == 3);
  CHECK((LaurentPoly::t(1) * LaurentPoly::t(-1)) == LaurentPoly::constant(1));
}
