#pragma once

#include <stdexcept>
#include <string>

namespace shelfbraid {

// Malformed textual input (braid words, terms, extended braids, permutations).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// unshift_word applied to a word containing an index-1 letter.
class NotShiftedError : public std::runtime_error {
public:
  explicit NotShiftedError(const std::string& what) : std::runtime_error(what) {}
};

// A step or size cap was hit. Termination of the rewriting engines is a
// theorem, so this is a diagnostic failure, never a wrong answer.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& what, std::size_t reached)
      : std::runtime_error(what + " (reached " + std::to_string(reached) + ")"),
        reached_(reached) {}
  std::size_t reached() const { return reached_; }

private:
  std::size_t reached_;
};

// An internal consistency assertion failed: a theorem-backed runtime check
// did not hold, which indicates a bug in the engine, not bad input.
class EngineBug : public std::logic_error {
public:
  explicit EngineBug(const std::string& what) : std::logic_error(what) {}
};

}  // namespace shelfbraid
