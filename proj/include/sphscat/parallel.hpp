// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace sphscat {

// Splits [0, total) into `workers` contiguous chunks and runs
// fn(worker, begin, end) for each, on separate threads when workers > 1.
// Chunk boundaries depend only on (total, workers), so a caller that seeds
// one RandomStream per worker id gets reproducible results for a fixed
// (seed, worker count) pair regardless of scheduling.
inline void for_each_worker(int workers, std::int64_t total,
                            const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
  if (workers < 1) workers = 1;
  if (workers == 1 || total <= 1) {
    fn(0, 0, total);
    return;
  }
  const std::int64_t base = total / workers;
  const std::int64_t rem = total % workers;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  std::int64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t len = base + (w < rem ? 1 : 0);
    const std::int64_t end = begin + len;
    threads.emplace_back(fn, w, begin, end);
    begin = end;
  }
  for (auto& t : threads) t.join();
}

// Compensated (Neumaier) accumulator; keeps parallel reductions insensitive
// to summation order at the 1e-10 level required by the estimate module.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      comp += (sum - t) + value;
    } else {
      comp += (value - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace sphscat
