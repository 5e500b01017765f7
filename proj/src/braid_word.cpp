#include "shelfbraid/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace shelfbraid {

std::int32_t BraidWord::width() const {
  std::int32_t max_index = 0;
  for (const auto& l : letters) max_index = std::max(max_index, l.index);
  return 1 + max_index;
}

std::int64_t BraidWord::exponent_sum() const {
  std::int64_t s = 0;
  for (const auto& l : letters) s += l.sign;
  return s;
}

bool BraidWord::is_positive() const {
  return std::all_of(letters.begin(), letters.end(),
                     [](const GeneratorLetter& l) { return l.sign > 0; });
}

BraidWord sigma(std::int32_t i, std::int32_t sign) {
  return BraidWord{{GeneratorLetter{i, sign}}};
}

BraidWord descending_word(std::int32_t m) {
  BraidWord w;
  w.letters.reserve(static_cast<std::size_t>(std::max(m, 0)));
  for (std::int32_t i = m; i >= 1; --i) w.letters.push_back({i, +1});
  return w;
}

BraidWord parse_word(const std::string& text) {
  BraidWord w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("not an integer generator token: '" + token + "'");
    if (value == 0) throw ParseError("generator index 0 is forbidden: '" + token + "'");
    std::int32_t index = static_cast<std::int32_t>(value < 0 ? -value : value);
    w.letters.push_back({index, value < 0 ? -1 : +1});
  }
  return w;
}

std::string render_word(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(static_cast<std::int64_t>(w.letters[i].sign) * w.letters[i].index);
  }
  return out;
}

BraidWord concat(const BraidWord& w1, const BraidWord& w2) {
  BraidWord w = w1;
  w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
  return w;
}

BraidWord invert(const BraidWord& w) {
  BraidWord r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->index, -it->sign});
  return r;
}

BraidWord free_cancel(const BraidWord& w) {
  BraidWord out;
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index &&
        out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord shift_word(const BraidWord& w, std::int32_t k) {
  BraidWord r = w;
  for (auto& l : r.letters) l.index += k;
  return r;
}

BraidWord unshift_word(const BraidWord& w) {
  BraidWord r = w;
  for (auto& l : r.letters) {
    if (l.index <= 1)
      throw NotShiftedError("word contains an index-1 letter; not a shift image syntactically");
    --l.index;
  }
  return r;
}

BraidWord tau_word(std::int32_t p, std::int32_t n) {
  BraidWord w;
  if (p <= 0 || n <= 0) return w;
  w.letters.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(n));
  for (std::int32_t k = 1; k <= n; ++k)
    for (std::int32_t i = p + k - 1; i >= k; --i) w.letters.push_back({i, +1});
  return w;
}

}  // namespace shelfbraid
