// Command-line surface for the braid-shelf toolkit. Every subcommand maps to
// one library operation; output is plain text or JSON (--json), always in a
// deterministic order.
//
// Exit codes: 0 success; 1 negative decision (not equal, not special, ...);
// 2 usage or parse error; 3 step/size cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "paper_examples.hpp"
#include "shelfbraid/burau.hpp"
#include "shelfbraid/extended.hpp"
#include "shelfbraid/laver.hpp"
#include "shelfbraid/perm.hpp"
#include "shelfbraid/special.hpp"

using namespace shelfbraid;
using nlohmann::json;

namespace {

struct Context {
  bool as_json = false;
  std::size_t step_cap = kDefaultStepCap;
  std::int32_t size_cap = 24;
  std::string cache_dir;
  int exit_code = 0;
};

Context ctx;

void emit(const std::string& op, const json& inputs, const json& result,
          const json& certificates = json::object()) {
  if (ctx.as_json) {
    json out = {{"op", op}, {"inputs", inputs}, {"result", result}};
    if (!certificates.empty()) out["certificates"] = certificates;
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << op << ":";
  if (result.is_string())
    std::cout << " " << result.get<std::string>();
  else
    std::cout << " " << result.dump();
  std::cout << "\n";
  for (auto it = certificates.begin(); it != certificates.end(); ++it) {
    std::cout << "  " << it.key() << ": ";
    if (it.value().is_string())
      std::cout << it.value().get<std::string>();
    else
      std::cout << it.value().dump();
    std::cout << "\n";
  }
}

std::string quoted(const BraidWord& w) { return "\"" + render_word(w) + "\""; }

json fingerprint_json(const Fingerprint& fp) {
  json arr = json::array();
  for (const auto& im : fp) arr.push_back(im.str());
  return arr;
}

ColorSeq parse_colors(const std::string& text) {
  ColorSeq colors;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string part =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    colors.push_back(Braid(parse_word(part)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return colors;
}

json colors_json(const ColorSeq& colors) {
  json arr = json::array();
  for (const auto& b : colors) arr.push_back(render_word(b.word()));
  return arr;
}

json matrix_json(const BurauMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows_str()) rows.push_back(row);
  return rows;
}

void setup_braid(CLI::App& app) {
  auto* braid = app.add_subcommand("braid", "word problem, order, fingerprints");
  braid->require_subcommand(1);

  static std::string w1, w2;

  auto* eq = braid->add_subcommand("equal", "decide equality of two braid words");
  eq->add_option("w1", w1)->required();
  eq->add_option("w2", w2)->required();
  eq->callback([] {
    bool r = words_equal(parse_word(w1), parse_word(w2));
    emit("equal", {w1, w2}, r);
    ctx.exit_code = r ? 0 : 1;
  });

  auto* cl = braid->add_subcommand("classify", "sigma-positive / sigma-negative / trivial");
  cl->add_option("w", w1)->required();
  cl->callback([] {
    SigmaVerdict v = sigma_classify(parse_word(w1), ctx.step_cap);
    emit("classify", {w1}, v.str());
  });

  auto* cmp = braid->add_subcommand("compare", "compare two braids in the braid order");
  cmp->add_option("w1", w1)->required();
  cmp->add_option("w2", w2)->required();
  cmp->callback([] {
    emit("compare", {w1, w2}, order_str(compare_words(parse_word(w1), parse_word(w2), ctx.step_cap)));
  });

  auto* red = braid->add_subcommand("reduce", "handle-reduce a braid word");
  red->add_option("w", w1)->required();
  red->callback([] {
    BraidWord r = handle_reduce(parse_word(w1), ctx.step_cap);
    emit("reduce", {w1}, render_word(r));
  });

  auto* rev = braid->add_subcommand("reverse", "reverse into positive * negative^-1");
  rev->add_option("w", w1)->required();
  rev->callback([] {
    auto s = reverse_to_pos_neg(parse_word(w1), ctx.step_cap);
    emit("reverse", {w1}, quoted(s.positive) + " * inv" + quoted(s.negative),
         {{"u", render_word(s.positive)}, {"v", render_word(s.negative)}});
  });

  auto* fp = braid->add_subcommand("fingerprint", "canonical equality key");
  fp->add_option("w", w1)->required();
  fp->callback([] {
    Fingerprint f = fingerprint_of(parse_word(w1));
    emit("fingerprint", {w1}, fingerprint_json(f));
  });
}

void setup_shelf(CLI::App& app) {
  auto* shelf = app.add_subcommand("shelf", "the shifted-conjugation shelf on braids");
  shelf->require_subcommand(1);

  static std::string w1, w2, colors_text;
  static std::int32_t m = 2, n = 1;
  static bool left = false;

  auto* op = shelf->add_subcommand("op", "b1 |> b2");
  op->add_option("b1", w1)->required();
  op->add_option("b2", w2)->required();
  op->callback([] {
    emit("shelf-op", {w1, w2},
         render_word(shelf_op(Braid(parse_word(w1)), Braid(parse_word(w2))).word()));
  });

  auto* opp = shelf->add_subcommand("opposite", "b1 <| b2");
  opp->add_option("b1", w1)->required();
  opp->add_option("b2", w2)->required();
  opp->callback([] {
    emit("shelf-opposite", {w1, w2},
         render_word(opposite_op(Braid(parse_word(w1)), Braid(parse_word(w2))).word()));
  });

  auto* pow = shelf->add_subcommand("power", "right power b^{[m]} (or left with --left)");
  pow->add_option("b", w1)->required();
  pow->add_option("m", m)->required()->check(CLI::PositiveNumber);
  pow->add_flag("--left", left, "compute the left power b_{[m]}");
  pow->callback([] {
    Braid b(parse_word(w1));
    Braid r = left ? left_power(b, m) : right_power(b, m);
    emit(left ? "left-power" : "right-power", {w1, m}, render_word(r.word()));
  });

  auto* div = shelf->add_subcommand("divide", "the x with b |> x = c, if any");
  div->add_option("b", w1)->required();
  div->add_option("c", w2)->required();
  div->callback([] {
    auto x = left_divide(Braid(parse_word(w1)), Braid(parse_word(w2)));
    if (x)
      emit("divide", {w1, w2}, render_word(x->word()));
    else {
      emit("divide", {w1, w2}, "not divisible");
      ctx.exit_code = 1;
    }
  });

  auto* mem = shelf->add_subcommand("member", "membership of a braid in B_n");
  mem->add_option("b", w1)->required();
  mem->add_option("n", n)->required();
  mem->callback([] {
    bool r = in_Bn(Braid(parse_word(w1)), n);
    emit("member", {w1, n}, r);
    ctx.exit_code = r ? 0 : 1;
  });

  auto* act = shelf->add_subcommand("act", "act on comma-separated colors by a word");
  act->add_option("colors", colors_text)->required();
  act->add_option("w", w1)->required();
  act->callback([] {
    auto r = act_partial(parse_colors(colors_text), parse_word(w1));
    if (r.defined())
      emit("act", {colors_text, w1}, colors_json(*r.colors));
    else {
      emit("act", {colors_text, w1}, "undefined at letter " + std::to_string(r.undefined_at));
      ctx.exit_code = 1;
    }
  });
}

void setup_special(CLI::App& app) {
  auto* special = app.add_subcommand("special", "special braids and decompositions");
  special->require_subcommand(1);

  static std::string w1, colors_text;
  static std::int32_t n = 0, len = 2;
  static bool positive_only = false;

  auto* check = special->add_subcommand("check", "recognize a special braid");
  check->add_option("w", w1)->required();
  check->callback([] {
    auto sp = is_special(parse_word(w1));
    if (!sp) {
      emit("special-check", {w1}, "not special");
      ctx.exit_code = 1;
      return;
    }
    Term t = synthesize_term(*sp, ctx.size_cap);
    emit("special-check", {w1}, "special",
         {{"value", render_word(sp->word())}, {"term", t.str()}});
  });

  auto* dec = special->add_subcommand("decompose", "canonical special decomposition");
  dec->add_option("w", w1)->required();
  dec->add_option("n", n, "number of entries (defaults to the word width)");
  dec->add_flag("--positive", positive_only, "positive decomposition (w must be positive)");
  dec->callback([] {
    BraidWord w = parse_word(w1);
    std::int32_t entries = n > 0 ? n : w.width();
    if (n > 0 && n < w.width())
      std::cerr << "note: n = " << n << " is below the word width; padding to " << w.width()
                << "\n";
    if (positive_only) {
      auto colors = decompose_positive(w, entries);
      emit("decompose-positive", {w1, entries}, colors_json(colors));
    } else {
      SpecialDecomposition d = decompose(w, entries);
      emit("decompose", {w1, entries},
           json{{"negative", colors_json(d.negative)}, {"positive", colors_json(d.positive)}});
    }
  });

  auto* term = special->add_subcommand("term", "synthesize a |>-term for a special braid");
  term->add_option("w", w1)->required();
  term->callback([] {
    auto sp = is_special(parse_word(w1));
    if (!sp) {
      emit("term", {w1}, "not special");
      ctx.exit_code = 1;
      return;
    }
    emit("term", {w1}, synthesize_term(*sp, ctx.size_cap).str());
  });

  auto* cx = special->add_subcommand("complexity", "minimal |>-depth of a special braid");
  cx->add_option("w", w1)->required();
  cx->callback([] {
    auto sp = is_special(parse_word(w1));
    if (!sp) {
      emit("complexity", {w1}, "not special");
      ctx.exit_code = 1;
      return;
    }
    emit("complexity", {w1}, complexity(*sp, ctx.size_cap));
  });

  auto* simple = special->add_subcommand("simple", "is the braid a simple (permutation) braid");
  simple->add_option("w", w1)->required();
  simple->callback([] {
    bool r = is_simple(parse_word(w1));
    emit("simple", {w1}, r);
    ctx.exit_code = r ? 0 : 1;
  });

  auto* probe = special->add_subcommand("probe-laver", "well-order probe for the partial action");
  probe->add_option("colors", colors_text)->required();
  probe->add_option("L", len)->required()->check(CLI::NonNegativeNumber);
  probe->callback([] {
    auto rep = laver_probe(parse_colors(colors_text), len);
    json minimum;
    if (rep.minimum) minimum = render_word(rep.minimum->word());
    json result = {{"words", rep.words_enumerated},
                   {"defined", rep.defined_words},
                   {"distinct", rep.distinct_braids},
                   {"all_positive_defined", rep.all_positive_defined},
                   {"minimum", minimum}};
    emit("probe-laver", {colors_text, len}, result);
  });
}

void setup_perm(CLI::App& app) {
  auto* perm = app.add_subcommand("perm", "the permutation shelf");
  perm->require_subcommand(1);

  static std::string p1, p2, w1;
  static std::int32_t m = 4;

  auto* op = perm->add_subcommand("op", "f |> g on one-line permutations");
  op->add_option("f", p1)->required();
  op->add_option("g", p2)->required();
  op->callback([] {
    emit("perm-op", {p1, p2}, perm_shelf_op(Perm::parse(p1), Perm::parse(p2)).str());
  });

  auto* of = perm->add_subcommand("of", "projection of a braid word");
  of->add_option("w", w1)->required();
  of->callback([] { emit("perm-of", {w1}, perm_of(parse_word(w1)).str()); });

  auto* cls = perm->add_subcommand("class", "class of a braid (where strand 1 ends)");
  cls->add_option("w", w1)->required();
  cls->callback([] { emit("perm-class", {w1}, braid_class(parse_word(w1))); });

  auto* table = perm->add_subcommand("table", "|>-table of the first m left powers of id");
  table->add_option("m", m)->required()->check(CLI::PositiveNumber);
  table->callback([] {
    std::vector<Perm> powers{Perm::identity()};
    for (std::int32_t k = 1; k < m; ++k)
      powers.push_back(perm_shelf_op(powers.back(), Perm::identity()));
    json rows = json::array();
    for (const auto& f : powers) {
      json row = json::array();
      for (const auto& g : powers) row.push_back(perm_shelf_op(f, g).str());
      rows.push_back(row);
    }
    emit("perm-table", {m}, rows);
  });
}

void setup_burau(CLI::App& app) {
  auto* burau = app.add_subcommand("burau", "the Burau-matrix shelf over Z[t,t^-1]");
  burau->require_subcommand(1);

  static std::string w1, w2;

  auto* of = burau->add_subcommand("of", "Burau matrix of a braid word");
  of->add_option("w", w1)->required();
  of->callback([] { emit("burau-of", {w1}, matrix_json(burau_of(parse_word(w1)))); });

  auto* op = burau->add_subcommand("op", "A |> B for the matrices of two words");
  op->add_option("w1", w1)->required();
  op->add_option("w2", w2)->required();
  op->callback([] {
    emit("burau-op", {w1, w2},
         matrix_json(burau_shelf_op(burau_of(parse_word(w1)), burau_of(parse_word(w2)))));
  });

  auto* det = burau->add_subcommand("det", "determinant of the Burau matrix");
  det->add_option("w", w1)->required();
  det->callback([] { emit("burau-det", {w1}, burau_of(parse_word(w1)).det().str()); });

  auto* shtr = burau->add_subcommand("shtr", "shifted trace of the Burau matrix");
  shtr->add_option("w", w1)->required();
  shtr->callback([] { emit("burau-shtr", {w1}, burau_of(parse_word(w1)).shtr().str()); });
}

void setup_laver(CLI::App& app) {
  auto* laver = app.add_subcommand("laver", "Laver tables");
  laver->require_subcommand(1);

  static std::int32_t index = 0, x = 1;
  static std::uint32_t rawN = 1;
  static std::string csv_path;

  auto options = [] {
    LaverOptions opt;
    opt.cache_dir = ctx.cache_dir;
    return opt;
  };

  auto* table = laver->add_subcommand("table", "print A_n as CSV");
  table->add_option("n", index)->required()->check(CLI::Range(0, 16));
  table->add_option("--csv", csv_path, "also write the CSV to a file");
  table->callback([options] {
    LaverTable t = build_cyclic(1u << index, options());
    std::string csv = t.csv();
    if (!csv_path.empty()) {
      std::ofstream out(csv_path, std::ios::binary);
      out << csv;
    }
    if (ctx.as_json)
      emit("laver-table", {index}, csv);
    else
      std::cout << csv;
  });

  auto* period = laver->add_subcommand("period", "period of row x in A_n");
  period->add_option("n", index)->required()->check(CLI::Range(0, 16));
  period->add_option("x", x)->required()->check(CLI::PositiveNumber);
  period->callback([options] {
    LaverTable t = build_cyclic(1u << index, options());
    emit("laver-period", {index, x}, static_cast<std::int64_t>(row_period(t, x)));
  });

  auto* proj = laver->add_subcommand("project", "project A_n onto A_{n-1}");
  proj->add_option("n", index)->required()->check(CLI::Range(1, 16));
  proj->callback([options] {
    LaverTable t = project(build_cyclic(1u << index, options()));
    if (ctx.as_json)
      emit("laver-project", {index}, t.csv());
    else
      std::cout << t.csv();
  });

  auto* check = laver->add_subcommand("check", "exhaustive LD check of the size-N table");
  check->add_option("N", rawN)->required()->check(CLI::PositiveNumber);
  check->callback([options] {
    bool r = is_left_shelf(build_cyclic(rawN, options()));
    emit("laver-check", {rawN}, r);
    ctx.exit_code = r ? 0 : 1;
  });
}

void setup_eb(CLI::App& app) {
  auto* eb = app.add_subcommand("eb", "extended braids [beta | p]");
  eb->require_subcommand(1);

  static std::string e1, e2;

  auto* mul = eb->add_subcommand("mul", "monoid product");
  mul->add_option("x", e1)->required();
  mul->add_option("y", e2)->required();
  mul->callback([] { emit("eb-mul", {e1, e2}, render_ext(eb_mul(parse_ext(e1), parse_ext(e2)))); });

  auto* op = eb->add_subcommand("op", "extended shelf operation");
  op->add_option("x", e1)->required();
  op->add_option("y", e2)->required();
  op->callback([] { emit("eb-op", {e1, e2}, render_ext(eb_shelf(parse_ext(e1), parse_ext(e2)))); });

  auto* eq = eb->add_subcommand("equal", "equality in the completion");
  eq->add_option("x", e1)->required();
  eq->add_option("y", e2)->required();
  eq->callback([] {
    bool r = eb_equal(parse_ext(e1), parse_ext(e2));
    emit("eb-equal", {e1, e2}, r);
    ctx.exit_code = r ? 0 : 1;
  });

  auto* dist = eb->add_subcommand("distance", "ultrametric distance");
  dist->add_option("x", e1)->required();
  dist->add_option("y", e2)->required();
  dist->callback([] {
    emit("eb-distance", {e1, e2}, eb_distance(parse_ext(e1), parse_ext(e2)).str());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shelfbraid: exact computation in the selfdistributive braid shelf"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.as_json, "emit JSON instead of text");
  app.add_option("--step-cap", ctx.step_cap, "rewriting step cap");
  app.add_option("--size-cap", ctx.size_cap, "term synthesis size cap");
  app.add_option("--cache-dir", ctx.cache_dir,
                 "table cache directory (default: $SHELFBRAID_CACHE or ./.cache)");

  setup_braid(app);
  setup_shelf(app);
  setup_special(app);
  setup_perm(app);
  setup_burau(app);
  setup_laver(app);
  setup_eb(app);

  auto* paper = app.add_subcommand("paper-examples", "run the worked-example corpus");
  paper->callback([] { ctx.exit_code = run_paper_examples() == 0 ? 0 : 1; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return ctx.exit_code;
}
