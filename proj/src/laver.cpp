#include "shelfbraid/laver.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <list>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>

#include "shelfbraid/errors.hpp"

namespace shelfbraid {

std::string resolve_cache_dir(const std::string& configured) {
  if (!configured.empty()) return configured;
  if (const char* env = std::getenv("SHELFBRAID_CACHE"); env && *env) return env;
  return ".cache";
}

// Disk-backed rows of a table, stored row-major in descending x order (row N
// first) as raw little-endian uint32. Reads go through a bounded LRU of
// whole rows; completed tables are shared freely, so lookups take a lock and
// rows are handed out as shared pointers that survive eviction.
class LaverRowFile {
public:
  using Row = std::shared_ptr<const std::vector<std::uint32_t>>;

  LaverRowFile(std::string path, std::uint32_t N, int fd)
      : path_(std::move(path)), N_(N), fd_(fd) {
    std::size_t row_bytes = static_cast<std::size_t>(N_) * 4;
    cache_rows_ = std::max<std::size_t>(4, (64u << 20) / row_bytes);
  }

  ~LaverRowFile() {
    if (fd_ >= 0) ::close(fd_);
  }

  LaverRowFile(const LaverRowFile&) = delete;
  LaverRowFile& operator=(const LaverRowFile&) = delete;

  std::uint32_t N() const { return N_; }
  const std::string& path() const { return path_; }

  Row row(std::uint32_t x) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(x);
      if (it != cache_.end()) {
        recency_.splice(recency_.begin(), recency_, it->second.recency);
        return it->second.data;
      }
    }
    auto data = std::make_shared<std::vector<std::uint32_t>>(N_);
    std::size_t row_bytes = static_cast<std::size_t>(N_) * 4;
    off_t offset = static_cast<off_t>(N_ - x) * static_cast<off_t>(row_bytes);
    std::size_t done = 0;
    while (done < row_bytes) {
      ssize_t got = ::pread(fd_, reinterpret_cast<char*>(data->data()) + done,
                            row_bytes - done, offset + static_cast<off_t>(done));
      if (got <= 0) throw std::runtime_error("short read from table cache " + path_);
      done += static_cast<std::size_t>(got);
    }
    return insert(x, Row(std::move(data)));
  }

  Row insert(std::uint32_t x, Row data) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(x); it != cache_.end()) return it->second.data;
    if (cache_.size() >= cache_rows_) {
      cache_.erase(recency_.back());
      recency_.pop_back();
    }
    recency_.push_front(x);
    auto [it, ok] = cache_.emplace(x, Entry{std::move(data), recency_.begin()});
    (void)ok;
    return it->second.data;
  }

private:
  struct Entry {
    Row data;
    std::list<std::uint32_t>::iterator recency;
  };

  std::string path_;
  std::uint32_t N_;
  int fd_;
  std::size_t cache_rows_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint32_t, Entry> cache_;
  mutable std::list<std::uint32_t> recency_;
};

std::uint32_t LaverTable::entry(std::uint32_t x, std::uint32_t y) const {
  if (x < 1 || x > N_ || y < 1 || y > N_) throw std::invalid_argument("table index out of range");
  if (in_memory()) return dense_[static_cast<std::size_t>(x - 1) * N_ + (y - 1)];
  return (*rows_->row(x))[y - 1];
}

std::string LaverTable::csv() const {
  std::string out;
  for (std::uint32_t x = 1; x <= N_; ++x) {
    for (std::uint32_t y = 1; y <= N_; ++y) {
      if (y > 1) out += ',';
      out += std::to_string(entry(x, y));
    }
    out += '\n';
  }
  return out;
}

namespace {

// Fills row x given access to already-computed rows with larger x.
template <typename RowAt>
void fill_row(std::uint32_t N, std::uint32_t x, RowAt&& row_at, std::vector<std::uint32_t>& row) {
  row.resize(N);
  if (x == N) {
    for (std::uint32_t y = 1; y <= N; ++y) row[y - 1] = y;
    return;
  }
  row[0] = x + 1;
  for (std::uint32_t y = 1; y < N; ++y) row[y] = row_at(row[y - 1])[x];  // (x|>y) |> (x+1)
}

std::shared_ptr<LaverRowFile> build_streamed(std::uint32_t N, const LaverOptions& options) {
  namespace fs = std::filesystem;
  fs::path dir = resolve_cache_dir(options.cache_dir);
  fs::create_directories(dir);
  fs::path final_path = dir / ("laver_" + std::to_string(N) + ".rows");
  std::size_t want_bytes = static_cast<std::size_t>(N) * N * 4;

  if (!fs::exists(final_path) || fs::file_size(final_path) != want_bytes) {
    fs::path tmp_path = final_path;
    tmp_path += ".tmp";
    int fd = ::open(tmp_path.c_str(), O_RDWR | O_CREAT | O_TRUNC, 0644);
    if (fd < 0) throw std::runtime_error("cannot create table cache " + tmp_path.string());
    {
      LaverRowFile scratch(tmp_path.string(), N, ::dup(fd));
      std::vector<std::uint32_t> row;
      std::size_t row_bytes = static_cast<std::size_t>(N) * 4;
      for (std::uint32_t x = N; x >= 1; --x) {
        fill_row(N, x, [&](std::uint32_t z) { return *scratch.row(z); }, row);
        off_t offset = static_cast<off_t>(N - x) * static_cast<off_t>(row_bytes);
        std::size_t done = 0;
        while (done < row_bytes) {
          ssize_t put = ::pwrite(fd, reinterpret_cast<const char*>(row.data()) + done,
                                 row_bytes - done, offset + static_cast<off_t>(done));
          if (put <= 0) throw std::runtime_error("short write to table cache");
          done += static_cast<std::size_t>(put);
        }
        scratch.insert(x, std::make_shared<const std::vector<std::uint32_t>>(row));
        if (x == 1) break;
      }
    }
    ::close(fd);
    fs::rename(tmp_path, final_path);  // atomic publish
  }

  int fd = ::open(final_path.c_str(), O_RDONLY);
  if (fd < 0) throw std::runtime_error("cannot open table cache " + final_path.string());
  return std::make_shared<LaverRowFile>(final_path.string(), N, fd);
}

}  // namespace

LaverTable build_cyclic(std::uint32_t N, const LaverOptions& options) {
  if (N < 1) throw std::invalid_argument("table size must be >= 1");
  if (N > options.memory_threshold) {
    LaverTable t;
    t.N_ = N;
    t.rows_ = build_streamed(N, options);
    return t;
  }

  LaverTable t;
  t.N_ = N;
  t.dense_.assign(static_cast<std::size_t>(N) * N, 0);
  std::vector<std::uint32_t> row;
  for (std::uint32_t x = N; x >= 1; --x) {
    fill_row(N, x, [&](std::uint32_t z) {
      return std::span(t.dense_).subspan(static_cast<std::size_t>(z - 1) * N, N);
    }, row);
    std::copy(row.begin(), row.end(), t.dense_.begin() + static_cast<std::size_t>(x - 1) * N);
    if (x == 1) break;
  }
  return t;
}

bool is_left_shelf(const LaverTable& table) {
  std::uint32_t N = table.size();
  for (std::uint32_t x = 1; x <= N; ++x)
    for (std::uint32_t y = 1; y <= N; ++y) {
      std::uint32_t xy = table.entry(x, y);
      for (std::uint32_t z = 1; z <= N; ++z)
        if (table.entry(x, table.entry(y, z)) != table.entry(xy, table.entry(x, z)))
          return false;
    }
  return true;
}

std::uint32_t row_period(const LaverTable& table, std::uint32_t x) {
  std::uint32_t N = table.size();
  for (std::uint32_t p = 1; p <= N; ++p) {
    if (N % p != 0) continue;
    bool periodic = true;
    for (std::uint32_t y = 1; y + p <= N && periodic; ++y)
      if (table.entry(x, y) != table.entry(x, y + p)) periodic = false;
    if (periodic) return p;
  }
  return N;
}

LaverTable project(const LaverTable& table) {
  std::uint32_t N = table.size();
  if (N < 2 || (N & (N - 1)) != 0)
    throw std::invalid_argument("projection needs a power-of-2 table of size >= 2");
  std::uint32_t half = N / 2;
  auto reduce = [half](std::uint32_t e) { return (e - 1) % half + 1; };
  LaverTable t;
  t.N_ = half;
  t.dense_.assign(static_cast<std::size_t>(half) * half, 0);
  for (std::uint32_t x = 1; x <= half; ++x)
    for (std::uint32_t y = 1; y <= half; ++y)
      t.dense_[static_cast<std::size_t>(x - 1) * half + (y - 1)] = reduce(table.entry(x, y));
  return t;
}

LaverPowers laver_powers(const LaverTable& table, std::uint32_t x, std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  LaverPowers p{x, x};
  for (std::uint32_t k = 1; k < m; ++k) {
    p.right = table.entry(x, p.right);
    p.left = table.entry(p.left, x);
  }
  return p;
}

}  // namespace shelfbraid
