#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "shelfbraid/errors.hpp"

namespace shelfbraid {

// A freely reduced word over the free-group generators x_1, x_2, ...
// Letters are nonzero ints: +i is x_i, -i is x_i^-1. The representation is
// reduced at all times; multiplication cancels at the seam.
class FreeWord {
public:
  // Words longer than this abort with CapExceeded. Substitution can blow up
  // exponentially in principle; at desk scale this cap is never reached.
  static constexpr std::size_t kLengthCap = 1'000'000;

  FreeWord() = default;

  static FreeWord generator(std::int32_t i) { return FreeWord({i}); }

  bool is_identity() const { return letters_.empty(); }
  bool is_generator(std::int32_t i) const {
    return letters_.size() == 1 && letters_[0] == i;
  }
  std::size_t size() const { return letters_.size(); }
  const std::vector<std::int32_t>& letters() const { return letters_; }

  // Last letter, 0 if empty. (+i means the word finishes with x_i, -i with
  // x_i^-1.)
  std::int32_t last_letter() const { return letters_.empty() ? 0 : letters_.back(); }

  FreeWord inverse() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  // "x1 x2 x1^-1"; "1" for the identity.
  std::string str() const;

private:
  explicit FreeWord(std::vector<std::int32_t> letters) : letters_(std::move(letters)) {}

  std::vector<std::int32_t> letters_;
};

}  // namespace shelfbraid
