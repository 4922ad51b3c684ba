// Small numeric helpers shared across the library: deterministic RNG,
// bracketed root finding, golden-section maximization, and a chunked
// parallel-for. Nothing here knows about the model.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace disclose::util {

// splitmix64: tiny, seedable, and (unlike std::uniform_real_distribution)
// byte-for-byte reproducible across standard libraries.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // One warm-up step decorrelates small consecutive seeds.
    splitmix64(state_);
  }

  // Independent stream for draw `index` under a common base seed.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

// Bisection on [lo, hi]. Requires a sign change; returns nullopt otherwise.
inline std::optional<double> bisect(const std::function<double(double)>& fn, double lo,
                                    double hi, double tol = 1e-10, int max_iter = 200) {
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fmid = fn(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Expands [lo, hi] geometrically until fn changes sign, then bisects.
inline std::optional<double> bisect_expanding(const std::function<double(double)>& fn,
                                              double lo, double hi, double tol = 1e-10) {
  for (int i = 0; i < 60; ++i) {
    if ((fn(lo) > 0.0) != (fn(hi) > 0.0)) return bisect(fn, lo, hi, tol);
    double width = hi - lo;
    lo -= width;
    hi += width;
  }
  return std::nullopt;
}

// Golden-section maximization on [lo, hi] for a unimodal fn; tolerant of
// plateaus (returns some point within the maximizing set).
inline double golden_section_max(const std::function<double(double)>& fn, double lo,
                                 double hi, int iters) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = fn(x1);
    }
  }
  return f1 >= f2 ? x1 : x2;
}

// Runs fn(i) for i in [0, n) on hardware_concurrency threads. Results must be
// written to pre-sized slots so the output is independent of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 4;
  if (n < 2 * workers) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace disclose::util
