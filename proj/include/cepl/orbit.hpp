#ifndef CEPL_ORBIT_HPP
#define CEPL_ORBIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cepl/common.hpp"

namespace cepl {

// Quadratic family T_a(x) = a x (1-x) on [0,1], critical point c = 1/2,
// uniform derivative bound Lambda = 4.
struct MapParams {
  double a;
  static constexpr double c = 0.5;
  static constexpr double Lambda = 4.0;

  explicit MapParams(double a_) : a(a_) {
    if (!(a > 2.0 && a <= 4.0)) throw DomainError("MapParams: a must be in (2,4]");
  }
  double apply(double x) const { return a * x * (1.0 - x); }
  double deriv(double x) const { return a * (1.0 - 2.0 * x); }
};

inline double quad_map(double a, double x) { return a * x * (1.0 - x); }
inline double quad_deriv(double a, double x) { return a * (1.0 - 2.0 * x); }

enum class PrecisionMode { Standard, Extended };

struct PrecisionConfig {
  PrecisionMode mode{PrecisionMode::Standard};
  double comparison_slack{1e-12};

  void validate() const {
    if (comparison_slack < 0.0 || comparison_slack > 1e-6)
      throw ConfigError("PrecisionConfig: comparison_slack must be in [0, 1e-6]");
  }
};

// Critical orbit x_j(a) = T_a^{j+1}(c), j = 0..depth, together with the
// log-magnitude/sign of (T_a^j)'(x_0) and the parameter derivatives x_j'(a).
struct OrbitTrace {
  double a{0.0};
  int depth{0};
  std::vector<double> points;       // x_0 .. x_depth
  std::vector<double> log_deriv;    // log|(T_a^j)'(x_0)|, j = 0..depth (entry 0 is 0)
  std::vector<int> signs;           // sign of (T_a^j)'(x_0) in {-1,0,+1}
  std::vector<double> param_deriv;  // x_0' .. x_depth'
  bool critical_hit{false};         // some x_j == c within slack
  int critical_hit_index{-1};

  std::string to_json() const;
};

// T_a^0(x0) .. T_a^n(x0)
std::vector<double> iterate(double a, double x0, int n);

OrbitTrace critical_orbit(double a, int n, const PrecisionConfig& precision = {});

// rho_j = x_j'(a) / (T_a^j)'(c_1(a)), j = 1..n, computed by a stable
// recursion in log space (the raw numerator and denominator overflow fast).
std::vector<double> transversality_ratio(double a, int n, double slack = 1e-12);

struct LipschitzCheck {
  double lhs;
  double rhs;
  bool ok;
};

// |T_{a1}^n(x) - T_{a2}^n(x)| against (4/3) * 4^n * |a1 - a2|.
LipschitzCheck parameter_lipschitz_check(double a1, double a2, double x, int n,
                                         double slack = 1e-12);

struct MisiurewiczResult {
  double a_star;
  double g_residual;      // |x_k(a_star) - p(a_star)|
  double recurrence_floor;  // min_j<=probe |T^j(c) - c|
  int probe_window;
};

// Bisection root of g(a) = x_k(a) - (1 - 1/a): the critical orbit lands on
// the positive fixed point after k+1 steps. Verifies that the orbit keeps a
// positive distance to c over the probe window.
MisiurewiczResult find_misiurewicz(int landing_index, double bracket_lo, double bracket_hi,
                                   double tol = 1e-13, int probe_window = 10000,
                                   double floor = 1e-8);

}  // namespace cepl

#endif
