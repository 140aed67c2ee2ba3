#include "sawstrip/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "sawstrip/error.hpp"

namespace sawstrip {

std::uint64_t walk_cap_from_env() {
  const char* raw = std::getenv("SAW_WALK_CAP");
  if (raw == nullptr) return kDefaultWalkCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultWalkCap;
  return v;
}

namespace {

// Occupancy grid for one strip, padded with a blocked column on each side so
// that leaving the strip looks like hitting a visited cell.
class Grid {
 public:
  Grid(const StripSpec& s, unsigned n_max)
      : stride_(s.width() + 2),
        rows_(2 * static_cast<int>(n_max) + 3),
        origin_(index_of(-s.xlo() + 1, static_cast<int>(n_max) + 1)),
        cells_(static_cast<std::size_t>(stride_ * rows_), 0) {
    for (int r = 0; r < rows_; ++r) {
      cells_[static_cast<std::size_t>(index_of(0, r))] = 1;
      cells_[static_cast<std::size_t>(index_of(stride_ - 1, r))] = 1;
    }
    offsets_ = {stride_, -stride_, -1, 1};  // u, d, l, r
  }

  int origin() const { return origin_; }
  const std::array<int, 4>& offsets() const { return offsets_; }
  std::uint8_t& operator[](int idx) { return cells_[static_cast<std::size_t>(idx)]; }

 private:
  int index_of(int col, int row) const { return row * stride_ + col; }

  int stride_;
  int rows_;
  int origin_;
  std::array<int, 4> offsets_{};
  std::vector<std::uint8_t> cells_;
};

class BudgetGuard {
 public:
  explicit BudgetGuard(std::optional<std::uint64_t> budget) : budget_(budget) {}

  // Called with the number of walks visited since the last call.
  void charge(std::uint64_t visited) {
    if (!budget_) return;
    const std::uint64_t total = spent_.fetch_add(visited) + visited;
    if (total > *budget_) throw Error("enumeration cap exceeded");
  }

 private:
  std::optional<std::uint64_t> budget_;
  std::atomic<std::uint64_t> spent_{0};
};

class Counter {
 public:
  Counter(Grid& grid, unsigned n_max, BudgetGuard& guard)
      : grid_(grid), n_max_(n_max), guard_(guard), counts_(n_max + 1, 0) {}

  // Counts every extension of the current walk ending at `pos` of length `depth`.
  void run(int pos, unsigned depth) {
    dfs(pos, depth);
    flush();
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  void dfs(int pos, unsigned depth) {
    ++counts_[depth];
    if (++pending_ >= kFlushEvery) flush();
    if (depth == n_max_) return;
    const auto& off = grid_.offsets();
    if (depth + 1 == n_max_) {
      // Leaves are counted without descending.
      std::uint64_t leaves = 0;
      for (int o : off) leaves += grid_[pos + o] == 0 ? 1U : 0U;
      counts_[depth + 1] += leaves;
      pending_ += leaves;
      return;
    }
    for (int o : off) {
      const int next = pos + o;
      if (grid_[next] != 0) continue;
      grid_[next] = 1;
      dfs(next, depth + 1);
      grid_[next] = 0;
    }
  }

  void flush() {
    guard_.charge(pending_);
    pending_ = 0;
  }

  static constexpr std::uint64_t kFlushEvery = 1U << 16;

  Grid& grid_;
  unsigned n_max_;
  BudgetGuard& guard_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t pending_ = 0;
};

struct Prefix {
  std::vector<int> cells;  // visited cells after the origin, in order
};

// Walks of length < depth are counted into `counts`; walks of length exactly
// `depth` become work items.
void collect_prefixes(Grid& grid, int pos, unsigned depth, unsigned target, std::vector<int>& path,
                      std::vector<std::uint64_t>& counts, std::vector<Prefix>& out) {
  if (depth == target) {
    out.push_back(Prefix{path});
    return;
  }
  ++counts[depth];
  for (int o : grid.offsets()) {
    const int next = pos + o;
    if (grid[next] != 0) continue;
    grid[next] = 1;
    path.push_back(next);
    collect_prefixes(grid, next, depth + 1, target, path, counts, out);
    path.pop_back();
    grid[next] = 0;
  }
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (std::uint64_t c : counts) {
    BigInt v;
    mpz_import(v.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<BigInt> count_saws(const StripSpec& s, unsigned n_max, const EnumerationOptions& opts) {
  BudgetGuard guard(opts.walk_budget);
  unsigned workers = opts.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.workers;
  const unsigned split = std::min(opts.split_depth, n_max);

  if (workers <= 1 || split == 0) {
    Grid grid(s, n_max);
    grid[grid.origin()] = 1;
    Counter counter(grid, n_max, guard);
    counter.run(grid.origin(), 0);
    return to_big(counter.counts());
  }

  std::vector<std::uint64_t> totals(n_max + 1, 0);
  std::vector<Prefix> prefixes;
  {
    Grid grid(s, n_max);
    grid[grid.origin()] = 1;
    std::vector<int> path;
    collect_prefixes(grid, grid.origin(), 0, split, path, totals, prefixes);
  }

  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size())));
  std::atomic<std::size_t> next_item{0};
  std::vector<std::vector<std::uint64_t>> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          Grid grid(s, n_max);
          grid[grid.origin()] = 1;
          Counter counter(grid, n_max, guard);
          for (std::size_t i = next_item++; i < prefixes.size(); i = next_item++) {
            const auto& cells = prefixes[i].cells;
            for (int c : cells) grid[c] = 1;
            counter.run(cells.empty() ? grid.origin() : cells.back(), split);
            for (int c : cells) grid[c] = 0;
          }
          partial[w] = counter.counts();
        } catch (...) {
          failures[w] = std::current_exception();
          next_item = prefixes.size();
        }
      });
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < p.size(); ++k) totals[k] += p[k];
  return to_big(totals);
}

namespace {

void list_dfs(Grid& grid, int pos, unsigned depth, unsigned n, StepWord& word, std::vector<StepWord>& out,
              std::uint64_t cap) {
  if (depth == n) {
    if (out.size() >= cap) throw Error("too many walks");
    out.push_back(word);
    return;
  }
  const auto& off = grid.offsets();
  for (std::size_t k = 0; k < off.size(); ++k) {
    const int next = pos + off[k];
    if (grid[next] != 0) continue;
    grid[next] = 1;
    word.push_back(kAllSteps[k]);
    list_dfs(grid, next, depth + 1, n, word, out, cap);
    word.pop_back();
    grid[next] = 0;
  }
}

}  // namespace

std::vector<StepWord> list_saws(const StripSpec& s, unsigned n, std::uint64_t cap) {
  Grid grid(s, n);
  grid[grid.origin()] = 1;
  std::vector<StepWord> out;
  StepWord word;
  list_dfs(grid, grid.origin(), 0, n, word, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sawstrip
