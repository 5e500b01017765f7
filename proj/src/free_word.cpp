#include "shelfbraid/free_word.hpp"

namespace shelfbraid {

FreeWord FreeWord::inverse() const {
  std::vector<std::int32_t> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(-*it);
  return FreeWord(std::move(out));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.letters_.size() + b.letters_.size() > FreeWord::kLengthCap)
    throw CapExceeded("free word length cap", a.letters_.size() + b.letters_.size());
  std::vector<std::int32_t> out = a.letters_;
  for (std::int32_t l : b.letters_) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord(std::move(out));
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    std::int32_t l = letters_[i];
    out += 'x';
    out += std::to_string(l < 0 ? -l : l);
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace shelfbraid
