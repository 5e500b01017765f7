#include "shelfbraid/engine.hpp"

#include <algorithm>
#include <atomic>
#include <utility>

namespace shelfbraid {

std::vector<FreeWord> artin_images(const BraidWord& w, std::int32_t count) {
  std::vector<FreeWord> images;
  std::int32_t n = std::max({count, w.width(), std::int32_t{1}});
  images.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int32_t i = 1; i <= n + 1; ++i) images.push_back(FreeWord::generator(i));

  // Fold f := f o rho(letter); only positions i, i+1 change per letter.
  for (const auto& l : w.letters) {
    FreeWord& u = images[static_cast<std::size_t>(l.index) - 1];
    FreeWord& v = images[static_cast<std::size_t>(l.index)];
    if (l.sign > 0) {
      FreeWord new_u = u * v * u.inverse();
      v = std::move(u);
      u = std::move(new_u);
    } else {
      FreeWord new_v = v.inverse() * u * v;
      u = std::move(v);
      v = std::move(new_v);
    }
  }
  images.resize(static_cast<std::size_t>(count > 0 ? count : 0));
  return images;
}

FreeWord artin_apply(const BraidWord& w, std::int32_t i) {
  auto images = artin_images(w, i);
  return images[static_cast<std::size_t>(i) - 1];
}

Fingerprint fingerprint_of(const BraidWord& w) {
  Fingerprint images = artin_images(w, w.width());
  std::int32_t i = static_cast<std::int32_t>(images.size());
  while (!images.empty() && images.back().is_generator(i)) {
    images.pop_back();
    --i;
  }
  return images;
}

bool is_trivial_word(const BraidWord& w) { return fingerprint_of(w).empty(); }

bool words_equal(const BraidWord& w1, const BraidWord& w2) {
  return is_trivial_word(free_cancel(concat(w1, invert(w2))));
}

const Fingerprint& Braid::fingerprint() const {
  if (auto p = std::atomic_load_explicit(&cache_, std::memory_order_acquire)) return *p;
  auto candidate = std::make_shared<const Fingerprint>(fingerprint_of(word_));
  std::shared_ptr<const Fingerprint> expected;
  if (std::atomic_compare_exchange_strong(&cache_, &expected, candidate)) return *candidate;
  return *expected;
}

namespace {

// Positions (a, b) of the leftmost handle of w that contains no nested
// sigma_{i+1}-handle, or nullopt if w is handle-free. For a start position a
// with index i, the only possible end is the next position carrying an index
// <= i, so the scan is quadratic at worst.
struct HandlePos {
  std::size_t begin;
  std::size_t end;
};

std::optional<HandlePos> find_handle(const std::vector<GeneratorLetter>& ls) {
  for (std::size_t a = 0; a < ls.size(); ++a) {
    std::int32_t i = ls[a].index;
    std::size_t b = ls.size();
    for (std::size_t k = a + 1; k < ls.size(); ++k) {
      if (ls[k].index <= i) {
        b = k;
        break;
      }
    }
    if (b == ls.size() || ls[b].index != i || ls[b].sign != -ls[a].sign) continue;
    // Permitted only if no sigma_{i+1}-handle hides strictly inside.
    bool nested = false;
    std::size_t last_next = 0;
    bool seen_next = false;
    for (std::size_t k = a + 1; k < b && !nested; ++k) {
      if (ls[k].index == i + 1) {
        if (seen_next && ls[last_next].sign == -ls[k].sign) nested = true;
        last_next = k;
        seen_next = true;
      }
    }
    if (!nested) return HandlePos{a, b};
  }
  return std::nullopt;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w, std::size_t step_cap) {
  std::vector<GeneratorLetter> ls = free_cancel(w).letters;
  std::size_t steps = 0;
  while (auto h = find_handle(ls)) {
    if (++steps > step_cap) throw CapExceeded("handle reduction step cap", steps);
    std::int32_t i = ls[h->begin].index;
    std::int32_t e = ls[h->begin].sign;
    std::vector<GeneratorLetter> out;
    out.reserve(ls.size() + 2 * (h->end - h->begin));
    out.insert(out.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(h->begin));
    for (std::size_t k = h->begin + 1; k < h->end; ++k) {
      if (ls[k].index == i + 1) {
        out.push_back({i + 1, -e});
        out.push_back({i, ls[k].sign});
        out.push_back({i + 1, e});
      } else {
        out.push_back(ls[k]);
      }
    }
    out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(h->end) + 1, ls.end());
    ls = free_cancel(BraidWord{std::move(out)}).letters;
  }
  return BraidWord{std::move(ls)};
}

std::string SigmaVerdict::str() const {
  switch (kind) {
    case kPositive: return "sigma-positive at index " + std::to_string(index);
    case kNegative: return "sigma-negative at index " + std::to_string(index);
    default: return "trivial";
  }
}

SigmaVerdict sigma_classify(const BraidWord& w, std::size_t step_cap) {
  BraidWord r = handle_reduce(w, step_cap);
  if (r.empty()) return SigmaVerdict{SigmaVerdict::kTrivial, 0};
  std::int32_t lowest = r.letters[0].index;
  for (const auto& l : r.letters) lowest = std::min(lowest, l.index);
  std::int32_t sign = 0;
  for (const auto& l : r.letters) {
    if (l.index != lowest) continue;
    if (sign == 0) sign = l.sign;
    if (l.sign != sign)
      throw EngineBug("handle-free word carries mixed signs at its lowest index");
  }
  return SigmaVerdict{sign > 0 ? SigmaVerdict::kPositive : SigmaVerdict::kNegative, lowest};
}

std::string order_str(Order o) {
  switch (o) {
    case Order::kLess: return "LESS";
    case Order::kEqual: return "EQUAL";
    default: return "GREATER";
  }
}

Order compare_words(const BraidWord& w1, const BraidWord& w2, std::size_t step_cap) {
  SigmaVerdict v = sigma_classify(free_cancel(concat(invert(w1), w2)), step_cap);
  switch (v.kind) {
    case SigmaVerdict::kPositive: return Order::kLess;
    case SigmaVerdict::kNegative: return Order::kGreater;
    default: return Order::kEqual;
  }
}

namespace {

// Shared rewriting core for both reversing directions. Right reversing
// rewrites the leftmost negative-positive seam:
//   s_i^-1 s_i -> empty
//   s_i^-1 s_j -> s_j s_i^-1                 for |i-j| >= 2
//   s_i^-1 s_j -> s_j s_i s_j^-1 s_i^-1      for |i-j| = 1
// Left reversing rewrites positive-negative seams with the mirrored rules.
std::vector<GeneratorLetter> reverse_core(std::vector<GeneratorLetter> ls, bool right,
                                          std::size_t step_cap) {
  std::size_t steps = 0;
  std::size_t scan = 0;
  while (true) {
    bool found = false;
    for (std::size_t k = scan; k + 1 < ls.size(); ++k) {
      bool seam = right ? (ls[k].sign < 0 && ls[k + 1].sign > 0)
                        : (ls[k].sign > 0 && ls[k + 1].sign < 0);
      if (!seam) continue;
      if (++steps > step_cap) throw CapExceeded("reversing step cap", steps);
      std::int32_t i = right ? ls[k].index : ls[k + 1].index;
      std::int32_t j = right ? ls[k + 1].index : ls[k].index;
      std::int32_t d = i > j ? i - j : j - i;
      std::vector<GeneratorLetter> repl;
      if (d == 0) {
        // cancel
      } else if (d >= 2) {
        if (right)
          repl = {{j, +1}, {i, -1}};
        else
          repl = {{i, -1}, {j, +1}};
      } else if (right) {
        repl = {{j, +1}, {i, +1}, {j, -1}, {i, -1}};
      } else {
        repl = {{i, -1}, {j, -1}, {i, +1}, {j, +1}};
      }
      ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(k),
               ls.begin() + static_cast<std::ptrdiff_t>(k) + 2);
      ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(k), repl.begin(), repl.end());
      scan = k > 0 ? k - 1 : 0;
      found = true;
      break;
    }
    if (!found) {
      if (scan == 0) break;
      scan = 0;  // rescan from the start before concluding
    }
  }
  return ls;
}

}  // namespace

PosNegSplit reverse_to_pos_neg(const BraidWord& w, std::size_t step_cap) {
  auto ls = reverse_core(w.letters, /*right=*/true, step_cap);
  std::size_t split = 0;
  while (split < ls.size() && ls[split].sign > 0) ++split;
  PosNegSplit out;
  out.positive.letters.assign(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(split));
  BraidWord tail;
  tail.letters.assign(ls.begin() + static_cast<std::ptrdiff_t>(split), ls.end());
  out.negative = invert(tail);
  if (!out.negative.is_positive())
    throw EngineBug("right reversing did not reach positive-negative shape");
  return out;
}

NegPosSplit reverse_to_neg_pos(const BraidWord& w, std::size_t step_cap) {
  auto ls = reverse_core(w.letters, /*right=*/false, step_cap);
  std::size_t split = 0;
  while (split < ls.size() && ls[split].sign < 0) ++split;
  NegPosSplit out;
  BraidWord head;
  head.letters.assign(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(split));
  out.negative = invert(head);
  out.positive.letters.assign(ls.begin() + static_cast<std::ptrdiff_t>(split), ls.end());
  if (!out.positive.is_positive() || !out.negative.is_positive())
    throw EngineBug("left reversing did not reach negative-positive shape");
  return out;
}

PosNegSplit reverse_gcd_free(const BraidWord& w, std::size_t step_cap) {
  NegPosSplit lr = reverse_to_neg_pos(w, step_cap);
  return reverse_to_pos_neg(concat(invert(lr.negative), lr.positive), step_cap);
}

std::optional<BraidWord> shift_preimage(const BraidWord& w) {
  BraidWord word = free_cancel(w);
  if (word.empty()) return BraidWord{};
  BraidWord shifted = shift_word(word, 1);
  // w lies in Im(sh) iff sh(w) and sigma_1 commute.
  BraidWord commutator =
      concat(concat(shifted, sigma(1)), concat(invert(shifted), sigma(1, -1)));
  if (!is_trivial_word(commutator)) return std::nullopt;
  // Handle trick: w = sigma_n^-1 ... sigma_2^-1 sh(w) sigma_2 ... sigma_n
  // with n = width(w); every letter on the right has index >= 2.
  std::int32_t n = word.width();
  BraidWord conj;
  for (std::int32_t i = n; i >= 2; --i) conj.letters.push_back({i, -1});
  BraidWord result = concat(conj, shifted);
  for (std::int32_t i = 2; i <= n; ++i) result.letters.push_back({i, +1});
  return free_cancel(unshift_word(result));
}

std::optional<BraidWord> shift_preimage(const BraidWord& w, std::int32_t p) {
  BraidWord current = w;
  for (std::int32_t k = 0; k < p; ++k) {
    auto pre = shift_preimage(current);
    if (!pre) return std::nullopt;
    current = *pre;
  }
  return current;
}

}  // namespace shelfbraid
