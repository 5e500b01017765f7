#include "paper_examples.hpp"

#include <cstdio>
#include <string>

#include "shelfbraid/burau.hpp"
#include "shelfbraid/extended.hpp"
#include "shelfbraid/laver.hpp"
#include "shelfbraid/perm.hpp"
#include "shelfbraid/special.hpp"

namespace {

using namespace shelfbraid;

int checks = 0;
int failed = 0;

void report(const std::string& name, bool ok) {
  ++checks;
  if (!ok) ++failed;
  std::printf("%s  %s\n", ok ? "ok  " : "FAIL", name.c_str());
}

void braid_layer() {
  report("tau_{p,0} is the unit word", tau_word(3, 0).empty() && tau_word(0, 2).empty());
  report("artin: rho(sigma_1)(x_1) = x1 x2 x1^-1",
         artin_apply(parse_word("1"), 1).str() == "x1 x2 x1^-1");
  report("fingerprint of sigma_1 is (x1 x2 x1^-1, x1)", [] {
    Fingerprint fp = fingerprint_of(parse_word("1"));
    return fp.size() == 2 && fp[0].str() == "x1 x2 x1^-1" && fp[1].str() == "x1";
  }());
  report("braid relation sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2",
         words_equal(parse_word("1 2 1"), parse_word("2 1 2")));
  report("far commutation sigma_1 sigma_3 = sigma_3 sigma_1",
         words_equal(parse_word("1 3"), parse_word("3 1")));
  report("sigma_1 does not lie in Im(sh)", !is_shift_image(parse_word("1"), 1));
  report("reversing sigma_2^-1 sigma_1^-1 sigma_2^2 sigma_1 yields sigma_1^2 sigma_2^-1", [] {
    auto s = reverse_to_pos_neg(parse_word("-2 -1 2 2 1"));
    return render_word(s.positive) == "1 1" && render_word(s.negative) == "2";
  }());
}

void shelf_layer() {
  Braid one = Braid::unit();
  report("1 |> 1 = sigma_1", equal(shelf_op(one, one), Braid::of("1")));
  report("1 |> sigma_1 = sigma_2 sigma_1", equal(shelf_op(one, Braid::of("1")), Braid::of("2 1")));
  report("sigma_1 |> 1 = sigma_1^2 sigma_2^-1",
         equal(shelf_op(Braid::of("1"), one), Braid::of("1 1 -2")));
  bool powers = true;
  for (int m = 2; m <= 6; ++m)
    powers = powers && equal(right_power(one, m), Braid(descending_word(m - 1)));
  report("1^{[m]} = sigma_{m-1} ... sigma_1 for m = 2..6", powers);
  report("1_{[3]} = sigma_1^2 sigma_2^-1", equal(left_power(one, 3), Braid::of("1 1 -2")));
  report("left division: 1 \\ (sigma_2 sigma_1) = sigma_1", [&] {
    auto q = left_divide(one, Braid::of("2 1"));
    return q.has_value() && equal(*q, Braid::of("1"));
  }());
  report("1 |> beta = 1 has no solution", !left_divide(one, one).has_value());
  report("absorption: sigma_1 in B_2, sigma_2 in B_3 \\ B_2",
         in_Bn(Braid::of("1"), 2) && !in_Bn(Braid::of("2"), 2) && in_Bn(Braid::of("2"), 3));
  report("coloring: (1,1,1) * sigma_1^2 = (sigma_1^2 sigma_2^-1, sigma_1, 1)", [] {
    auto c = act_positive(unit_colors(3), parse_word("1 1"));
    return equal(c[0], Braid::of("1 1 -2")) && equal(c[1], Braid::of("1")) && c[2].is_trivial();
  }());
  report("coloring: (1,1,1) * sigma_2 sigma_1 = (sigma_2 sigma_1, 1, 1)", [] {
    auto c = act_positive(unit_colors(3), parse_word("2 1"));
    return equal(c[0], Braid::of("2 1")) && c[1].is_trivial() && c[2].is_trivial();
  }());
  report("(1,1) * sigma_1^-1 is undefined",
         !act_partial(unit_colors(2), parse_word("-1")).defined());
  report("shifted product of (sigma_1^2 sigma_2^-1, sigma_1, 1) is sigma_1^2",
         equal(shifted_product({Braid::of("1 1 -2"), Braid::of("1"), Braid::unit()}),
               Braid::of("1 1")));
}

void special_layer() {
  report("evaluation: (1 > 1), (1 > (1 > 1)), ((1 > 1) > 1)",
         equal(eval_term(Term::parse("(1 > 1)")), Braid::of("1")) &&
             equal(eval_term(Term::parse("(1 > (1 > 1))")), Braid::of("2 1")) &&
             equal(eval_term(Term::parse("((1 > 1) > 1)")), Braid::of("1 1 -2")));
  report("recognition: sigma_2^-1 sigma_1^-1 sigma_2^2 sigma_1 is special with value 1_{[3]}",
         [] {
           auto sp = is_special(parse_word("-2 -1 2 2 1"));
           return sp.has_value() && equal(*sp, Braid::of("1 1 -2"));
         }());
  report("sigma_2 is not special", !is_special(parse_word("2")).has_value());
  report("synthesis: sigma_1 = (1 > 1)", synthesize_term(Braid::of("1"), 8).str() == "(1 > 1)");
  report("synthesis: sigma_3 sigma_2 sigma_1 is the right comb of size 4",
         synthesize_term(Braid::of("3 2 1"), 8).str() == "(1 > (1 > (1 > 1)))");
  report("complexity: c(1) = 0", complexity(Braid::unit()) == 0);
  report("unique positive special of length 3 is sigma_3 sigma_2 sigma_1",
         positive_special_length(parse_word("3 2 1")) == 3 &&
             !positive_special_length(parse_word("1 2")).has_value());
  report("Delta_3 is simple with decomposition (sigma_2 sigma_1) sh(sigma_1)", [] {
    if (!is_simple(parse_word("2 1 2"))) return false;
    auto c = decompose_positive(parse_word("2 1 2"), 3);
    return equal(c[0], Braid::of("2 1")) && equal(c[1], Braid::of("1")) && c[2].is_trivial();
  }());
  report("sigma_1^2 is not simple; its first entry leaves B_2", [] {
    if (is_simple(parse_word("1 1"))) return false;
    auto c = decompose_positive(parse_word("1 1"), 2);
    return !in_Bn(c[0], 2);
  }());
  report("every positive word acts totally on unit colors", [] {
    auto rep = laver_probe(unit_colors(3), 3);
    return rep.all_positive_defined;
  }());
}

void quotient_layer() {
  const Perm id;
  const Perm s1 = Perm::transposition(1), s2 = Perm::transposition(2),
             s3 = Perm::transposition(3), s4 = Perm::transposition(4);
  report("permutation shelf: id |> id = s1, s1 |> id = s2, s2 |> id = s2 s3 s1",
         perm_shelf_op(id, id) == s1 && perm_shelf_op(s1, id) == s2 &&
             perm_shelf_op(s2, id) == s2 * s3 * s1);
  report("left powers: id_{[4]} = s2 s3 s1, id_{[5]} = s3 s4 s2 s3 s4", [&] {
    Perm l4 = perm_shelf_op(perm_shelf_op(perm_shelf_op(id, id), id), id);
    return l4 == s2 * s3 * s1 && perm_shelf_op(l4, id) == s3 * s4 * s2 * s3 * s4;
  }());
  report("division cycle: s2 s1 = ((s2 s1 |> s1) |> s2 s3 s1)",
         perm_shelf_op(perm_shelf_op(s2 * s1, s1), s2 * s3 * s1) == s2 * s1);
  report("obstruction equality: id |> id_{[3]} = s3 s1 = id_{[3]} |> id_{[2]}", [&] {
    Perm l2 = perm_shelf_op(id, id);
    Perm l3 = perm_shelf_op(l2, id);
    return perm_shelf_op(id, l3) == s3 * s1 && perm_shelf_op(l3, l2) == s3 * s1;
  }());
  report("classes: 1 |> * has class 2, 2 |> 1 has class 1",
         small_class_quotient(1, 1) == 2 && small_class_quotient(1, 2) == 2 &&
             small_class_quotient(2, 1) == 1);
  report("phi maps id to SH", inj_embed(Perm::identity()) == Injection::sh());
  report("Burau block: Sigma_1 = [[1-t, t], [1, 0]]", [] {
    BurauMatrix m = BurauMatrix::sigma(1);
    return m.at(1, 1) == LaurentPoly::constant(1) - LaurentPoly::t(1) &&
           m.at(1, 2) == LaurentPoly::t(1) && m.at(2, 1) == LaurentPoly::constant(1) &&
           m.at(2, 2).is_zero();
  }());
  report("det(A |> B) = -t det(B) and shtr(A |> B) = shtr(B) + t on a sample", [] {
    BurauMatrix A = burau_of(parse_word("1 -2"));
    BurauMatrix B = burau_of(parse_word("2 1 1"));
    BurauMatrix AB = burau_shelf_op(A, B);
    return AB.det() == -(LaurentPoly::t(1) * B.det()) &&
           AB.shtr() == B.shtr() + LaurentPoly::t(1);
  }());
  report("Burau probe: I |> I_{[3]} != I_{[3]} |> I_{[2]}", [] {
    BurauMatrix I;
    return !(burau_shelf_op(I, burau_left_power(I, 3)) ==
             burau_shelf_op(burau_left_power(I, 3), burau_left_power(I, 2)));
  }());
}

void laver_layer() {
  report("A_2 rows (2,4,2,4), (3,4,3,4), (4,4,4,4), (1,2,3,4)",
         build_cyclic(4).csv() == "2,4,2,4\n3,4,3,4\n4,4,4,4\n1,2,3,4\n");
  report("A_3 row 3 is (4,8,4,8,4,8,4,8)", [] {
    LaverTable t = build_cyclic(8);
    for (std::uint32_t y = 1; y <= 8; ++y)
      if (t.entry(3, y) != (y % 2 ? 4u : 8u)) return false;
    return true;
  }());
  report("A_0 is the one-entry table", build_cyclic(1).entry(1, 1) == 1);
  report("A_3 is a shelf, the 3-element table is not",
         is_left_shelf(build_cyclic(8)) && !is_left_shelf(build_cyclic(3)));
  report("row periods: A_2 row 1 -> 2, A_3 row 7 -> 1",
         row_period(build_cyclic(4), 1) == 2 && row_period(build_cyclic(8), 7) == 1);
  report("projection: A_3 -> A_2 and A_1 -> A_0", [] {
    LaverTable p = project(build_cyclic(8));
    LaverTable a2 = build_cyclic(4);
    for (std::uint32_t x = 1; x <= 4; ++x)
      for (std::uint32_t y = 1; y <= 4; ++y)
        if (p.entry(x, y) != a2.entry(x, y)) return false;
    return project(build_cyclic(2)).entry(1, 1) == 1;
  }());
  report("A_2 values: 1 |> 3 = 2 and 3 |> 2 = 4", [] {
    LaverTable a2 = build_cyclic(4);
    return a2.entry(1, 3) == 2 && a2.entry(3, 2) == 4;
  }());
  report("A_1 powers: 1^{[2]} = 2, 2 |> 1 = 1, 2 |> 2 = 2", [] {
    LaverTable a1 = build_cyclic(2);
    return laver_powers(a1, 1, 2).right == 2 && a1.entry(2, 1) == 1 &&
           laver_powers(a1, 2, 2).right == 2;
  }());
}

void extended_layer() {
  ExtBraid tau = ExtBraid::tau();
  report("sigma_1 tau^2 = tau^2", [&] {
    ExtBraid tau2 = eb_mul(tau, tau);
    return eb_equal(eb_mul(ExtBraid::from(Braid::of("1"), 0), tau2), tau2);
  }());
  report("sigma_i tau = tau sigma_{i-1} for i = 2..5", [&] {
    for (int i = 2; i <= 5; ++i)
      if (!eb_equal(eb_mul(ExtBraid::from(Braid(sigma(i)), 0), tau),
                    eb_mul(tau, ExtBraid::from(Braid(sigma(i - 1)), 0))))
        return false;
    return true;
  }());
  report("layer 0 of |>^ is conjugation", [] {
    Braid a = Braid::of("1 2"), b = Braid::of("-1 2");
    ExtBraid r = eb_shelf(ExtBraid::from(a, 0), ExtBraid::from(b, 0));
    return eb_equal(r, ExtBraid::from(
        Braid(concat(concat(a.word(), b.word()), invert(a.word()))), 0));
  }());
  report("layer 1 of |>^ is the braid shelf", [] {
    Braid a = Braid::of("1 -2"), b = Braid::of("2 1");
    ExtBraid r = eb_shelf(ExtBraid::from(a, 1), ExtBraid::from(b, 1));
    return r.layer == 1 && eb_equal(r, ExtBraid::from(shelf_op(a, b), 1));
  }());
  report("tau conjugation: tau_{p,n}^-1 beta tau_{p,n} = sh^n(beta) for beta in B_p", [] {
    for (int p = 2; p <= 4; ++p)
      for (int n = 0; n <= 3; ++n) {
        BraidWord beta = descending_word(p - 1);
        if (!words_equal(concat(concat(invert(tau_word(p, n)), beta), tau_word(p, n)),
                         shift_word(beta, n)))
          return false;
      }
    return true;
  }());
}

}  // namespace

int run_paper_examples() {
  braid_layer();
  shelf_layer();
  special_layer();
  quotient_layer();
  laver_layer();
  extended_layer();
  std::printf("%d checks, %d failed\n", checks, failed);
  return failed;
}
