#include "shelfbraid/special.hpp"

#include <algorithm>
#include <map>

namespace shelfbraid {

Term Term::leaf() { return Term{}; }

Term Term::node(Term left, Term right) {
  Term t;
  t.left_ = std::make_shared<const Term>(std::move(left));
  t.right_ = std::make_shared<const Term>(std::move(right));
  return t;
}

std::int32_t Term::size() const {
  if (is_leaf()) return 1;
  return left().size() + right().size();
}

std::int32_t Term::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

std::string Term::str() const {
  if (is_leaf()) return "1";
  return "(" + left().str() + " > " + right().str() + ")";
}

namespace {

Term parse_term_at(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size()) throw ParseError("unexpected end of term");
  if (s[pos] == '1') {
    ++pos;
    return Term::leaf();
  }
  if (s[pos] != '(') throw ParseError(std::string("expected '1' or '(' at '") + s[pos] + "'");
  ++pos;
  Term left = parse_term_at(s, pos);
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != '>') throw ParseError("expected '>' in term");
  ++pos;
  Term right = parse_term_at(s, pos);
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')' in term");
  ++pos;
  return Term::node(std::move(left), std::move(right));
}

}  // namespace

Term Term::parse(const std::string& text) {
  std::size_t pos = 0;
  Term t = parse_term_at(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw ParseError("trailing characters after term");
  return t;
}

Braid eval_term(const Term& t) {
  if (t.is_leaf()) return Braid::unit();
  return shelf_op(eval_term(t.left()), eval_term(t.right()));
}

std::optional<Braid> is_special(const BraidWord& w) {
  PosNegSplit split = reverse_gcd_free(w);
  std::int32_t n = std::max({split.positive.width(), split.negative.width(), std::int32_t{1}});
  BraidWord acting = concat(split.positive, invert(split.negative));
  ActResult r = act_partial(unit_colors(static_cast<std::size_t>(n)), acting);
  if (!r.defined()) return std::nullopt;
  const ColorSeq& colors = *r.colors;
  for (std::size_t i = 1; i < colors.size(); ++i)
    if (!colors[i].is_trivial()) return std::nullopt;
  if (!equal(colors[0], Braid(w)))
    throw EngineBug("special recognition: first color differs from the input braid");
  return colors[0];
}

std::vector<Braid> decompose_positive(const BraidWord& w, std::int32_t n) {
  if (!w.is_positive())
    throw std::invalid_argument("decompose_positive needs a positive word");
  n = std::max({n, w.empty() ? std::int32_t{1} : w.width(), std::int32_t{1}});
  ColorSeq colors = act_positive(unit_colors(static_cast<std::size_t>(n)), w);
  if (!equal(shifted_product(colors), Braid(w)))
    throw EngineBug("positive decomposition does not reassemble to its input");
  return colors;
}

SpecialDecomposition decompose(const BraidWord& w, std::int32_t n) {
  NegPosSplit split = reverse_to_neg_pos(w);
  n = std::max({n, split.negative.width(), split.positive.width(), std::int32_t{1}});
  SpecialDecomposition d;
  d.negative = decompose_positive(split.negative, n);
  d.positive = decompose_positive(split.positive, n);
  if (!equal(reassemble(d), Braid(w)))
    throw EngineBug("special decomposition does not reassemble to its input");
  return d;
}

Braid reassemble(const SpecialDecomposition& d) {
  BraidWord w;
  for (std::size_t k = d.negative.size(); k-- > 0;)
    w = concat(w, shift_word(invert(d.negative[k].word()), static_cast<std::int32_t>(k)));
  for (std::size_t k = 0; k < d.positive.size(); ++k)
    w = concat(w, shift_word(d.positive[k].word(), static_cast<std::int32_t>(k)));
  return Braid(w);
}

namespace {

struct SynthesisEntry {
  Braid value;
  Term term;
};

// Values of the monogenerated shelf enumerated by increasing minimal term
// size; each distinct braid is evaluated exactly once (fingerprint keyed).
class SpecialEnumerator {
public:
  // Grows the pool until terms of `size` leaves are covered.
  void grow_to_size(std::int32_t size) {
    while (covered_size_ < size) {
      std::int32_t target = covered_size_ + 1;
      std::vector<SynthesisEntry> fresh;
      for (std::int32_t ls = 1; ls < target; ++ls) {
        for (const auto& a : by_size_[static_cast<std::size_t>(ls)])
          for (const auto& b : by_size_[static_cast<std::size_t>(target - ls)]) {
            Braid v = shelf_op(a.value, b.value);
            if (seen_.emplace(v.fingerprint(), 0).second)
              fresh.push_back({v, Term::node(a.term, b.term)});
          }
      }
      by_size_.push_back(std::move(fresh));
      covered_size_ = target;
    }
  }

  const std::vector<SynthesisEntry>& of_size(std::int32_t s) const {
    return by_size_[static_cast<std::size_t>(s)];
  }
  std::int32_t covered() const { return covered_size_; }
  std::size_t pool() const { return seen_.size(); }

  SpecialEnumerator() {
    by_size_.push_back({});  // size 0 unused
    by_size_.push_back({{Braid::unit(), Term::leaf()}});
    seen_.emplace(Braid::unit().fingerprint(), 0);
    covered_size_ = 1;
  }

private:
  std::vector<std::vector<SynthesisEntry>> by_size_;
  std::map<Fingerprint, int> seen_;
  std::int32_t covered_size_ = 0;
};

}  // namespace

Term synthesize_term(const Braid& b, std::int32_t size_cap) {
  SpecialEnumerator en;
  const Fingerprint& target = b.fingerprint();
  for (std::int32_t s = 1; s <= size_cap; ++s) {
    en.grow_to_size(s);
    for (const auto& e : en.of_size(s))
      if (e.value.fingerprint() == target) return e.term;
  }
  throw CapExceeded("term synthesis size cap", en.pool());
}

std::int32_t complexity(const Braid& b, std::int32_t depth_cap) {
  // D_0 = {1}; D_{d+1} = D_d union {x |> y : x, y in D_d}. c(b) is the least
  // d with b in D_d.
  std::map<Fingerprint, std::int32_t> depth_of;
  std::vector<Braid> pool{Braid::unit()};
  depth_of.emplace(Braid::unit().fingerprint(), 0);
  if (b.is_trivial()) return 0;
  for (std::int32_t d = 1; d <= depth_cap; ++d) {
    std::vector<Braid> next = pool;
    for (const auto& x : pool)
      for (const auto& y : pool) {
        Braid v = shelf_op(x, y);
        if (depth_of.emplace(v.fingerprint(), d).second) next.push_back(v);
      }
    if (auto it = depth_of.find(b.fingerprint()); it != depth_of.end()) return it->second;
    pool = std::move(next);
  }
  throw CapExceeded("complexity depth cap", depth_of.size());
}

std::string special_order_str(SpecialOrder o) {
  switch (o) {
    case SpecialOrder::kBelow: return "BELOW";
    case SpecialOrder::kEqual: return "EQUAL";
    default: return "ABOVE";
  }
}

SpecialOrder special_compare(const Braid& b1, const Braid& b2) {
  SigmaVerdict v = sigma_classify(free_cancel(concat(invert(b1.word()), b2.word())));
  if (v.is_trivial()) return SpecialOrder::kEqual;
  if (v.index != 1)
    throw EngineBug("quotient of special braids classified at index >= 2");
  return v.kind == SigmaVerdict::kPositive ? SpecialOrder::kBelow : SpecialOrder::kAbove;
}

std::optional<std::int32_t> positive_special_length(const BraidWord& w) {
  if (!w.is_positive())
    throw std::invalid_argument("positive_special_length needs a positive word");
  std::int32_t m = static_cast<std::int32_t>(w.size());
  if (words_equal(w, descending_word(m))) return m;
  return std::nullopt;
}

bool is_simple(const BraidWord& w) {
  PosNegSplit split = reverse_gcd_free(w);
  if (!split.negative.empty()) return false;  // not a positive braid
  auto colors = decompose_positive(split.positive, split.positive.width());
  for (const auto& c : colors) {
    PosNegSplit entry = reverse_gcd_free(c.word());
    if (!entry.negative.empty()) return false;
    if (!positive_special_length(entry.positive)) return false;
  }
  return true;
}

LaverProbeReport laver_probe(const ColorSeq& a, std::int32_t max_len) {
  LaverProbeReport report;
  std::map<Fingerprint, Braid> defined;
  std::int32_t gens = a.size() >= 2 ? static_cast<std::int32_t>(a.size()) - 1 : 0;

  std::vector<GeneratorLetter> alphabet;
  for (std::int32_t i = 1; i <= gens; ++i) {
    alphabet.push_back({i, +1});
    alphabet.push_back({i, -1});
  }

  std::vector<BraidWord> layer{BraidWord{}};
  for (std::int32_t len = 0; len <= max_len; ++len) {
    for (const auto& w : layer) {
      ++report.words_enumerated;
      ActResult r = act_partial(a, w);
      if (r.defined()) {
        ++report.defined_words;
        Braid b(w);
        defined.emplace(b.fingerprint(), b);
      } else if (w.is_positive()) {
        report.all_positive_defined = false;
      }
    }
    if (len == max_len) break;
    std::vector<BraidWord> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& w : layer)
      for (const auto& l : alphabet) {
        BraidWord e = w;
        e.letters.push_back(l);
        next.push_back(std::move(e));
      }
    layer = std::move(next);
  }

  report.distinct_braids = defined.size();
  for (const auto& [fp, b] : defined) {
    if (!report.minimum || compare(b, *report.minimum) == Order::kLess)
      report.minimum = b;
  }
  return report;
}

}  // namespace shelfbraid
