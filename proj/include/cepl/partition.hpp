#ifndef CEPL_PARTITION_HPP
#define CEPL_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cepl/orbit.hpp"

namespace cepl {

// ---------------------------------------------------------------------------
// Configuration of the inductive parameter-exclusion construction.

struct ConstructionConfig {
  double a_star{3.678573510};
  double epsilon{1e-4};   // half-width of omega_0
  int r0{8};
  double kappa0{9.0};
  double kappa1{10.0};
  double alpha_bc{0.03};
  double beta_bc{0.1};
  double lambda_ce{1.5};
  int N0{15};
  double d0{1.0};
  double d1{0.34};
  int max_depth{40};
  int samples_per_interval{3};
  int p_max{400};
  double slack{1e-12};
  bool exponential_rule{false};  // A/B: discard when e^r >= e^{alpha_bc (j-1)}
  bool fa_check{false};          // optional free-period-fraction exclusion
  double fa_tau{0.1};
  int N1{20};                    // first level for the no-small-image check
  double m0{40.0};               // M_0 gate constant for the Holder distortion check
  double small_c_fit{0.0};       // realized constant of the (small) condition, filled by build
  unsigned workers{0};           // 0 = hardware default

  void validate() const;
};

// Host interval I_{r,ell}^side, or the outside sentinel (index r0-1).
struct HostIndex {
  int r{0};
  int ell{0};
  int side{+1};  // +1 right of c, -1 left of c
  bool outside{true};

  static HostIndex Outside() { return HostIndex{}; }
};

// Endpoints of the ell-th of r^2 equal subpieces of I_r^side, as distances
// from c: [d_lo, d_hi), counting from the boundary closest to c.
struct HostBounds {
  double d_lo;
  double d_hi;
};
HostBounds host_bounds(int r, int ell);

HostIndex host_interval(double x, int r0, double slack = 1e-12);

enum class ReturnKind { Essential, Inessential, Bound, Escape };

struct ReturnEvent {
  int time{0};
  ReturnKind kind{ReturnKind::Inessential};
  HostIndex host{};
  int binding_length{0};
};

enum class IntervalStatus { Active, ExcludedRecurrence, ExcludedFa };

struct ParamInterval {
  double left{0.0};
  double right{0.0};
  int level{0};  // birth level
  IntervalStatus status{IntervalStatus::Active};
  std::vector<ReturnEvent> history;
  HostIndex host_at_birth{};

  // construction state
  std::int32_t parent{-1};
  int end_level{-1};  // level at which the interval was refined away/excluded
  int bound_until{0};
  int last_free_return{0};
  int bound_time_total{0};
  double ce_margin{0.0};          // min_n log|(T^n)'(c_1)| - n log(lambda_ce)
  double recurrence_margin{0.0};  // min_n |x_n - c| * n^kappa0

  double length() const { return right - left; }
};

struct PartitionLevel {
  int level{0};
  std::vector<std::uint32_t> intervals;  // arena ids of active intervals, sorted by left
  double retained_measure{0.0};
  double excluded_this_level{0.0};
  double e_j{0.0};
};

struct PartitionResult {
  ConstructionConfig config;
  std::vector<ParamInterval> nodes;  // arena: every interval ever created
  std::vector<PartitionLevel> levels;
  double omega0_left{0.0};
  double omega0_right{0.0};
  double realized_small_constant{0.0};  // max |omega| lambda^n / |x_n(omega)|
  int first_free_return{0};
};

// Orbits at the sample parameters of one interval (endpoints + interior).
std::vector<OrbitTrace> sample_traces(const ParamInterval& iv, int depth,
                                      const ConstructionConfig& cfg);

// tail sum e_j = sum_{n>=j} n^{-d1 kappa0}
double tail_sum_e(int j, double exponent);

int binding_time(double a, int r, int nu, double beta_bc, int p_max);

std::optional<ReturnEvent> classify_return(const ParamInterval& iv, int j,
                                           const std::vector<OrbitTrace>& traces,
                                           const ConstructionConfig& cfg);

bool exclusion_rule(const HostIndex& host, int j, double kappa0);

std::vector<ParamInterval> subdivide_essential(const ParamInterval& iv, int j,
                                               const std::vector<OrbitTrace>& traces,
                                               const ConstructionConfig& cfg);

PartitionResult build_partition(const ConstructionConfig& cfg);

struct SmallImageViolation {
  std::uint32_t node;
  double image_length;
  double threshold;
};
struct SmallImageReport {
  int level;
  double threshold_exponent;
  std::vector<SmallImageViolation> violations;
  std::size_t checked;
};
SmallImageReport no_small_image_check(const PartitionResult& res, int level);

struct DistortionReport {
  double max_ratio{1.0};       // max over pairs of |x_n'(a1)/x_n'(a2)|
  bool bound_ok{true};         // against 1 + C_fit |x_n(omega)|^alpha (when gated)
  bool gate_applies{false};    // |x_n(omega)| <= n^{-M0/(1-alpha)}
  double chain_ratio_min{1.0};  // range of (x_n'/x_j') / (T^{n-j})'(x_j)
  double chain_ratio_max{1.0};
};
DistortionReport distortion_check(const ParamInterval& iv, int n, double alpha,
                                  int sample_pairs, const ConstructionConfig& cfg,
                                  double c_fit = 10.0);

struct MeasureRow {
  int level;
  double retained;
  double excluded;
  double e_j;
  bool bound_ok;
};
std::vector<MeasureRow> measure_report(const PartitionResult& res);

// Full re-verification of the CE and polynomial-recurrence conditions at the
// sampled parameters of every interval active at the deepest level.
struct ConditionAudit {
  bool ce_ok{true};
  bool recurrence_ok{true};
  double worst_ce_margin{0.0};
  double worst_recurrence_margin{0.0};
  std::size_t checked{0};
};
ConditionAudit audit_conditions(const PartitionResult& res);

std::string partition_dump_jsonl(const PartitionResult& res);
std::string measure_report_csv(const PartitionResult& res);

}  // namespace cepl

#endif
