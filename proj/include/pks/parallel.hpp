#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace pks {

// Worker count used by per-mode maps. 1 runs inline.
void set_thread_count(unsigned count);
[[nodiscard]] unsigned thread_count();

// Calls fn(i) for i in [0, count). Each index is visited exactly once, so a
// map that writes out[i] only is deterministic for any thread count.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(count / 4096, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

// Neumaier compensated accumulator. Reductions run serially in index order
// so totals do not depend on the thread count.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Componentwise compensated sum of N real lanes.
template <std::size_t N>
class CompensatedLanes {
 public:
  void add(std::size_t lane, double x) { lanes_[lane].add(x); }
  [[nodiscard]] double value(std::size_t lane) const { return lanes_[lane].value(); }

 private:
  std::array<CompensatedSum, N> lanes_{};
};

}  // namespace pks
