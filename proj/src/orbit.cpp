#include "cepl/orbit.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cepl {

std::vector<double> iterate(double a, double x0, int n) {
  if (!(a > 0.0 && a <= 4.0)) throw DomainError("iterate: a must be in (0,4]");
  if (!(x0 >= 0.0 && x0 <= 1.0)) throw DomainError("iterate: x0 must be in [0,1]");
  if (n < 0) throw DomainError("iterate: n must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  double x = x0;
  out.push_back(x);
  for (int j = 0; j < n; ++j) {
    x = quad_map(a, x);
    if (x < 0.0) x = 0.0;
    if (x > 1.0) x = 1.0;
    out.push_back(x);
  }
  return out;
}

OrbitTrace critical_orbit(double a, int n, const PrecisionConfig& precision) {
  if (!(a > 2.0 && a <= 4.0)) throw DomainError("critical_orbit: a must be in (2,4]");
  if (n < 0) throw DomainError("critical_orbit: n must be >= 0");
  precision.validate();

  OrbitTrace tr;
  tr.a = a;
  tr.depth = n;
  tr.points.reserve(static_cast<std::size_t>(n) + 1);
  tr.log_deriv.reserve(static_cast<std::size_t>(n) + 1);
  tr.signs.reserve(static_cast<std::size_t>(n) + 1);
  tr.param_deriv.reserve(static_cast<std::size_t>(n) + 1);

  const bool extended = precision.mode == PrecisionMode::Extended || n > 200;
  const double slack = precision.comparison_slack;
  const double inf = std::numeric_limits<double>::infinity();

  // x_0 = T_a(c) = a/4; x_0'(a) = 1/4.
  dd aa{a};
  dd x = 0.25 * aa;  // exact in double-double
  dd xp{0.25};
  double log_prod = 0.0;
  int sign_prod = 1;

  for (int j = 0; j <= n; ++j) {
    const double xj = extended ? x.to_double() : x.hi;
    tr.points.push_back(xj);
    tr.param_deriv.push_back(extended ? xp.to_double() : xp.hi);
    tr.log_deriv.push_back(log_prod);
    tr.signs.push_back(sign_prod);

    if (!tr.critical_hit && std::fabs(xj - MapParams::c) <= slack) {
      tr.critical_hit = true;
      tr.critical_hit_index = j;
    }
    if (j == n) break;

    const double dv = quad_deriv(a, xj);
    if (dv == 0.0 || sign_prod == 0) {
      log_prod = -inf;
      sign_prod = 0;
    } else {
      log_prod += std::log(std::fabs(dv));
      sign_prod *= (dv > 0.0) ? 1 : -1;
    }

    if (extended) {
      // x' first (uses current x), then x.
      dd one_minus_x = dd{1.0} - x;
      dd xq = x * one_minus_x;                       // x(1-x)
      xp = xq + (aa * (dd{1.0} - 2.0 * x)) * xp;     // x(1-x) + a(1-2x) x'
      x = aa * xq;
      if (x.hi < 0.0) x = dd{0.0};
      if (x.hi > 1.0) x = dd{1.0};
    } else {
      const double xq = xj * (1.0 - xj);
      const double xpn = xq + a * (1.0 - 2.0 * xj) * xp.hi;
      double xn = a * xq;
      if (xn < 0.0) xn = 0.0;
      if (xn > 1.0) xn = 1.0;
      x = dd{xn};
      xp = dd{xpn};
    }
  }
  return tr;
}

std::vector<double> transversality_ratio(double a, int n, double slack) {
  if (!(a > 0.0 && a <= 4.0)) throw DomainError("transversality_ratio: a must be in (0,4]");
  if (n < 1) throw DomainError("transversality_ratio: n must be >= 1");

  // rho_{j+1} = rho_j + x_j(1-x_j) / (T_a^{j+1})'(c_1), rho_0 = 1/4.
  // The denominator is carried as (log-magnitude, sign).
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  double x = a / 4.0;  // x_0 = c_1
  double logD = 0.0;
  int signD = 1;
  double rho = 0.25;
  for (int j = 0; j < n; ++j) {
    const double dv = quad_deriv(a, x);
    if (std::fabs(dv) <= slack)
      throw DegenerateDerivative("transversality_ratio: T_a'(x_j) vanishes at j=" +
                                 std::to_string(j));
    logD += std::log(std::fabs(dv));
    signD *= (dv > 0.0) ? 1 : -1;
    const double num = x * (1.0 - x);
    if (num > 0.0) rho += signD * std::exp(std::log(num) - logD);
    out.push_back(rho);
    x = quad_map(a, x);
  }
  return out;
}

LipschitzCheck parameter_lipschitz_check(double a1, double a2, double x, int n, double slack) {
  if (!(a1 > 2.0 && a1 <= 4.0) || !(a2 > 2.0 && a2 <= 4.0))
    throw DomainError("parameter_lipschitz_check: parameters must be in (2,4]");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("parameter_lipschitz_check: x must be in [0,1]");
  if (n < 1) throw DomainError("parameter_lipschitz_check: n must be >= 1");
  double y1 = x, y2 = x;
  for (int j = 0; j < n; ++j) {
    y1 = quad_map(a1, y1);
    y2 = quad_map(a2, y2);
  }
  LipschitzCheck chk;
  chk.lhs = std::fabs(y1 - y2);
  chk.rhs = (4.0 / 3.0) * std::pow(4.0, n) * std::fabs(a1 - a2);
  chk.ok = chk.lhs <= chk.rhs + slack;
  return chk;
}

namespace {
double landing_gap(double a, int k) {
  // g(a) = x_k(a) - (1 - 1/a), with x_k(a) = T_a^{k+1}(c).
  double x = a / 4.0;
  for (int j = 0; j < k; ++j) x = quad_map(a, x);
  return x - (1.0 - 1.0 / a);
}

MisiurewiczResult probe_recurrence(double a, int k, int probe_window, double floor) {
  MisiurewiczResult res;
  res.a_star = a;
  res.g_residual = std::fabs(landing_gap(a, k));
  res.probe_window = probe_window;
  double x = MapParams::c;
  double dmin = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= probe_window; ++j) {
    x = quad_map(a, x);
    dmin = std::min(dmin, std::fabs(x - MapParams::c));
  }
  res.recurrence_floor = dmin;
  if (dmin < floor)
    throw NotMisiurewicz("find_misiurewicz: orbit re-approaches c (min distance " +
                         std::to_string(dmin) + " < floor)");
  return res;
}
}  // namespace

MisiurewiczResult find_misiurewicz(int landing_index, double bracket_lo, double bracket_hi,
                                   double tol, int probe_window, double floor) {
  if (landing_index < 1) throw DomainError("find_misiurewicz: landing index must be >= 1");
  if (bracket_lo == bracket_hi)
    return probe_recurrence(bracket_lo, landing_index, probe_window, floor);

  double lo = bracket_lo, hi = bracket_hi;
  double glo = landing_gap(lo, landing_index);
  double ghi = landing_gap(hi, landing_index);
  if (glo == 0.0) return probe_recurrence(lo, landing_index, probe_window, floor);
  if (ghi == 0.0) return probe_recurrence(hi, landing_index, probe_window, floor);
  if ((glo > 0.0) == (ghi > 0.0))
    throw NoSignChange("find_misiurewicz: g has the same sign at both bracket ends");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double gm = landing_gap(mid, landing_index);
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return probe_recurrence(0.5 * (lo + hi), landing_index, probe_window, floor);
}

std::string OrbitTrace::to_json() const {
  std::ostringstream os;
  os << "{\"a\":" << fmt17(a) << ",\"depth\":" << depth << ",\"points\":[";
  for (std::size_t i = 0; i < points.size(); ++i)
    os << (i ? "," : "") << fmt17(points[i]);
  os << "],\"log_deriv\":[";
  for (std::size_t i = 0; i < log_deriv.size(); ++i)
    os << (i ? "," : "") << fmt17(log_deriv[i]);
  os << "],\"signs\":[";
  for (std::size_t i = 0; i < signs.size(); ++i) os << (i ? "," : "") << signs[i];
  os << "],\"param_deriv\":[";
  for (std::size_t i = 0; i < param_deriv.size(); ++i)
    os << (i ? "," : "") << fmt17(param_deriv[i]);
  os << "],\"critical_hit\":" << (critical_hit ? "true" : "false")
     << ",\"critical_hit_index\":" << critical_hit_index << "}";
  return os.str();
}

}  // namespace cepl
