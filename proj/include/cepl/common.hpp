#ifndef CEPL_COMMON_HPP
#define CEPL_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cepl {

// ---------------------------------------------------------------------------
// Errors

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateDerivative : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotMisiurewicz : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AtCritical : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MonotonicityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RootTooWide : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SuspectedPeriodicity : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonDecayingCorrelations : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateVariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientSpread : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyCell : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationDominates : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GateViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingStage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Double-double arithmetic (~106-bit significand), for deep orbit recursions.

struct dd {
  double hi{0.0};
  double lo{0.0};

  dd() = default;
  dd(double h) : hi(h), lo(0.0) {}
  dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace detail {
inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace detail

inline dd operator+(dd a, dd b) {
  dd s = detail::two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}
inline dd operator-(dd a, dd b) { return a + dd{-b.hi, -b.lo}; }
inline dd operator*(dd a, dd b) {
  dd p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}
inline dd operator*(double a, dd b) { return dd{a} * b; }

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64 seeding + xoshiro256**), bit-stable across
// platforms; each worker derives its own stream from (master_seed, index).

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t z = seed;
    for (auto& si : s_) {
      z += 0x9e3779b97f4a7c15ull;
      std::uint64_t w = z;
      w = (w ^ (w >> 30)) * 0xbf58476d1ce4e5b9ull;
      w = (w ^ (w >> 27)) * 0x94d049bb133111ebull;
      si = w ^ (w >> 31);
    }
  }
  static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
    return Rng(master_seed * 0x9e3779b97f4a7c15ull + index + 1);
  }

  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }
  // uniform in [0,1)
  double uniform() { return std::ldexp(static_cast<double>(next_u64() >> 11), -53); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // standard normal (Box-Muller, deterministic pairing)
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * M_PI * u2;
    cached_ = r * std::sin(th);
    have_cached_ = true;
    return r * std::cos(th);
  }

 private:
  std::uint64_t s_[4]{};
  double cached_{0.0};
  bool have_cached_{false};
};

// ---------------------------------------------------------------------------
// Least-squares line fit y ~ intercept + slope * x.

struct LineFit {
  double slope{0.0};
  double intercept{0.0};
  double r_squared{0.0};
  std::size_t n{0};
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------------------
// Deterministic parallel loop: chunks [0,n) across at most `workers` threads.
// Results must be written to disjoint slots so scheduling never matters.

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body);

unsigned default_workers();

// Decimal formatting with 17 significant digits (bit-stable round trip).
std::string fmt17(double v);

}  // namespace cepl

#endif
