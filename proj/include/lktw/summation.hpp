#pragma once

// Compensated sums and a deterministic row-parallel double sum.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lktw {

/// Neumaier's improved Kahan summation.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(const std::vector<double>& xs) {
  NeumaierSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

/// Number of worker threads to use when the caller asks for `requested`
/// (0 means all hardware threads).
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Evaluates row(i) for i in [0, rows) on up to `threads` threads and returns
/// the per-row results in order. Each row is computed by exactly one thread,
/// so the output does not depend on the thread count.
template <class Row>
std::vector<double> parallel_rows(int rows, int threads, Row&& row) {
  std::vector<double> out(static_cast<std::size_t>(rows), 0.0);
  const int t = std::clamp(resolve_threads(threads), 1, std::max(rows, 1));
  if (t == 1) {
    for (int i = 0; i < rows; ++i) out[i] = row(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int k = 0; k < t; ++k) {
    pool.emplace_back([&, k] {
      try {
        for (int i = k; i < rows; i += t) out[i] = row(i);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Deterministic compensated double sum: rows in parallel, each row summed
/// with NeumaierSum, rows combined in index order.
template <class Row>
double parallel_sum(int rows, int threads, Row&& row) {
  return compensated_sum(parallel_rows(rows, threads, std::forward<Row>(row)));
}

}  // namespace lktw
