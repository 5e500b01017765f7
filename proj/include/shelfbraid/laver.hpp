#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace shelfbraid {

struct LaverOptions {
  // Tables up to this size stay in memory; larger ones are computed row by
  // row into an on-disk cache and read back on demand.
  std::uint32_t memory_threshold = 1u << 12;
  // Cache directory; empty means $SHELFBRAID_CACHE, falling back to ./.cache.
  std::string cache_dir;
};

std::string resolve_cache_dir(const std::string& configured);

// The table of the unique binary operation on {1..N} with x |> 1 = x+1
// (mod N) extended by the downward row recursion
//   row N = identity,  x |> (y+1) = (x |> y) |> (x+1)  for x < N,
// which only consults rows with larger first argument. For N a power of 2
// this is the Laver table A_n; for other N the table exists but is not a
// shelf.
class LaverTable {
public:
  std::uint32_t size() const { return N_; }
  bool in_memory() const { return !dense_.empty(); }

  // x |> y, 1-based.
  std::uint32_t entry(std::uint32_t x, std::uint32_t y) const;

  std::string csv() const;

private:
  friend LaverTable build_cyclic(std::uint32_t, const LaverOptions&);
  friend LaverTable project(const LaverTable&);

  std::uint32_t N_ = 0;
  std::vector<std::uint32_t> dense_;      // row-major when in memory
  std::shared_ptr<class LaverRowFile> rows_;  // disk-backed otherwise
};

LaverTable build_cyclic(std::uint32_t N, const LaverOptions& options = {});

// Exhaustive LD check over all N^3 triples.
bool is_left_shelf(const LaverTable& table);

// Least period p dividing N with entry(x, y+p) = entry(x, y) for all
// applicable y.
std::uint32_t row_period(const LaverTable& table, std::uint32_t x);

// Projection modulo N/2: entries reduced to representatives in 1..N/2.
// Requires N a power of 2, N >= 2. The result equals build_cyclic(N/2) and
// reduction is a shelf homomorphism.
LaverTable project(const LaverTable& table);

// (x^{[m]}, x_{[m]}) computed in table arithmetic.
struct LaverPowers {
  std::uint32_t right;
  std::uint32_t left;
};

LaverPowers laver_powers(const LaverTable& table, std::uint32_t x, std::uint32_t m);

}  // namespace shelfbraid
