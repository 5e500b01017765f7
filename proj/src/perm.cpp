#include "shelfbraid/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "shelfbraid/errors.hpp"

namespace shelfbraid {

void Perm::set(std::int32_t n, std::int32_t v) {
  if (n == v)
    moved_.erase(n);
  else
    moved_[n] = v;
}

Perm Perm::transposition(std::int32_t i) {
  if (i < 1) throw std::invalid_argument("transposition index must be >= 1");
  Perm p;
  p.moved_[i] = i + 1;
  p.moved_[i + 1] = i;
  return p;
}

std::int32_t Perm::apply(std::int32_t n) const {
  auto it = moved_.find(n);
  return it == moved_.end() ? n : it->second;
}

Perm Perm::inverse() const {
  Perm r;
  for (const auto& [n, v] : moved_) r.moved_[v] = n;
  return r;
}

std::int32_t Perm::support_max() const {
  return moved_.empty() ? 0 : moved_.rbegin()->first;
}

Perm operator*(const Perm& f, const Perm& g) {
  Perm r;
  std::int32_t top = std::max(f.support_max(), g.support_max());
  for (std::int32_t n = 1; n <= top; ++n) r.set(n, f.apply(g.apply(n)));
  return r;
}

std::string Perm::str() const {
  std::int32_t top = std::max(support_max(), std::int32_t{1});
  std::string out;
  for (std::int32_t n = 1; n <= top; ++n) {
    if (n > 1) out += ' ';
    out += std::to_string(apply(n));
  }
  return out;
}

Perm Perm::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::int32_t> images;
  std::int64_t v = 0;
  while (in >> v) {
    if (v < 1) throw ParseError("permutation images must be positive");
    images.push_back(static_cast<std::int32_t>(v));
  }
  if (!in.eof()) throw ParseError("bad permutation token");
  Perm p;
  std::vector<bool> hit(images.size() + 1, false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    std::int32_t img = images[k];
    if (img > static_cast<std::int32_t>(images.size()) || hit[static_cast<std::size_t>(img)])
      throw ParseError("not a permutation of 1..N: " + text);
    hit[static_cast<std::size_t>(img)] = true;
    p.set(static_cast<std::int32_t>(k) + 1, img);
  }
  return p;
}

Perm perm_shift(const Perm& f) {
  Perm r;
  for (std::int32_t n = 2; n <= f.support_max() + 1; ++n) r.set(n, f.apply(n - 1) + 1);
  return r;
}

Perm perm_shelf_op(const Perm& f, const Perm& g) {
  return f * perm_shift(g) * Perm::transposition(1) * perm_shift(f).inverse();
}

Perm perm_of(const BraidWord& w) {
  Perm r;
  for (const auto& l : w.letters) r = r * Perm::transposition(l.index);
  return r;
}

std::int32_t perm_class(const Perm& f) { return f.inverse().apply(1); }

std::int32_t braid_class(const BraidWord& w) { return perm_class(perm_of(w)); }

std::int32_t small_class_quotient(std::int32_t c1, std::int32_t c2) {
  if ((c1 != 1 && c1 != 2) || (c2 != 1 && c2 != 2))
    throw std::invalid_argument("small classes are 1 or 2");
  // The table A_1: class-1 |> anything has class 2; 2 |> 1 = 1; 2 |> 2 = 2.
  if (c1 == 1) return 2;
  return c2 == 1 ? 1 : 2;
}

Injection Injection::sh() { return Injection({}, 1); }

Injection Injection::identity() { return Injection({}, 0); }

Injection::Injection(std::vector<std::int32_t> prefix, std::int32_t offset)
    : prefix_(std::move(prefix)), offset_(offset) {
  if (offset_ < 0) throw std::invalid_argument("injection offset must be >= 0");
  validate();
  canonicalize();
}

void Injection::validate() const {
  std::vector<std::int32_t> vals = prefix_;
  std::sort(vals.begin(), vals.end());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] < 1) throw std::invalid_argument("injection image must be positive");
    if (k && vals[k] == vals[k - 1]) throw std::invalid_argument("injection prefix not injective");
  }
  // The tail n -> n + offset must not collide with the prefix.
  std::int32_t tail_min = static_cast<std::int32_t>(prefix_.size()) + 1 + offset_;
  for (std::int32_t v : prefix_)
    if (v >= tail_min) throw std::invalid_argument("injection prefix collides with its tail");
}

void Injection::canonicalize() {
  while (!prefix_.empty() &&
         prefix_.back() == static_cast<std::int32_t>(prefix_.size()) + offset_)
    prefix_.pop_back();
}

std::int32_t Injection::apply(std::int32_t n) const {
  if (n <= static_cast<std::int32_t>(prefix_.size()))
    return prefix_[static_cast<std::size_t>(n) - 1];
  return n + offset_;
}

bool Injection::in_image(std::int32_t n) const {
  for (std::int32_t v : prefix_)
    if (v == n) return true;
  return n > static_cast<std::int32_t>(prefix_.size()) + offset_;
}

std::int32_t Injection::preimage(std::int32_t n) const {
  for (std::size_t k = 0; k < prefix_.size(); ++k)
    if (prefix_[k] == n) return static_cast<std::int32_t>(k) + 1;
  if (n > static_cast<std::int32_t>(prefix_.size()) + offset_) return n - offset_;
  throw std::invalid_argument("preimage of a point outside the image");
}

std::vector<std::int32_t> Injection::colm() const {
  std::vector<std::int32_t> out;
  std::int32_t bound = static_cast<std::int32_t>(prefix_.size()) + offset_;
  for (std::int32_t n = 1; n <= bound; ++n)
    if (!in_image(n)) out.push_back(n);
  return out;
}

std::string Injection::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < prefix_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(prefix_[k]);
  }
  out += "] n+" + std::to_string(offset_);
  return out;
}

Injection inj_shelf_op(const Injection& f, const Injection& g) {
  // Beyond every breakpoint the composite settles to n -> n + offset(g).
  std::int32_t nf = static_cast<std::int32_t>(f.prefix().size());
  std::int32_t ng = static_cast<std::int32_t>(g.prefix().size());
  std::int32_t bound =
      std::max({nf + f.offset(), ng + f.offset(), nf + f.offset() - g.offset()}) + 1;
  std::vector<std::int32_t> prefix;
  prefix.reserve(static_cast<std::size_t>(std::max(bound, 0)));
  for (std::int32_t n = 1; n <= bound; ++n)
    prefix.push_back(f.in_image(n) ? f.apply(g.apply(f.preimage(n))) : n);
  return Injection(std::move(prefix), g.offset());
}

Injection inj_embed(const Perm& f) {
  std::int32_t bound = f.support_max() + 1;
  std::vector<std::int32_t> prefix;
  prefix.reserve(static_cast<std::size_t>(bound));
  for (std::int32_t n = 1; n <= bound; ++n) prefix.push_back(f.apply(n + 1));
  return Injection(std::move(prefix), 1);
}

}  // namespace shelfbraid
