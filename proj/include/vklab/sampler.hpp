#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "vklab/gflinalg.hpp"
#include "vklab/measures.hpp"
#include "vklab/rng.hpp"
#include "vklab/symfun.hpp"

namespace vklab {

/// Thrown when a run would need extension counts outside the validated range.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform column in F_q^n. q = 2 consumes one 32-bit word per 32 entries; other q one
/// bounded draw per entry.
std::vector<int> random_column(const FieldCtx& F, int n, StepStream& rng);

struct GrowthState {
  int n = 0;
  Partition rho;
  std::optional<MatGF> matrix;  ///< full unitriangular matrix (reference Haar path)
};

/// Empty 0 x 0 state with the matrix retained.
GrowthState haar_initial(const FieldCtx& F);

/// Appends the column b (and a diagonal 1); the type is recomputed with extend_type.
GrowthState haar_grow_step(const GrowthState& state, const std::vector<int>& b);
GrowthState haar_grow_step(const GrowthState& state, StepStream& rng);

/// Jordan type of U_n = [[U_{n-1}, b],[0,1]] maintained in a Jordan basis of N = U - I. Keeps T = S^{-1}
/// for the basis S; a new column costs one product T b plus row operations. Every `guard_interval`
/// steps the invariants T N = J T and det T != 0 are recomputed from the stored matrix.
class HaarTracker {
 public:
  HaarTracker(const FieldCtx& F, int n_max, int guard_interval = 64);

  /// Adds one column; returns the row of the partition that gained a box (0-based).
  int step(const std::vector<int>& b);
  int step(StepStream& rng);

  int size() const { return n_; }
  Partition type() const;
  /// Chain (Jordan block) lengths in creation order.
  const std::vector<int>& chain_lengths() const { return lengths_; }
  /// Full check of the invariants, independent of the guard schedule.
  bool verify() const;
  int guards_run() const { return guards_; }

 struct Impl;

 private:
  std::shared_ptr<Impl> impl_;
  const FieldCtx* field_;
  int n_ = 0;
  int guard_interval_;
  int guards_ = 0;
  std::vector<int> lengths_;
};

/// Conditional law p(σ|ρ) = c_{ρσ} M_σ / M_ρ over covers_up(ρ); throws if M_ρ = 0 or the
/// probabilities do not sum to 1 exactly.
using CountFn = std::function<std::map<Partition, Integer>(const Partition&)>;
std::vector<std::pair<Partition, Rational>> markov_conditional(const Partition& rho, const CylinderFn& cylinder,
                                                               const CountFn& counts);

/// Samples from a conditional law with a 64-bit uniform compared against exact cumulative sums.
Partition sample_conditional(const std::vector<std::pair<Partition, Rational>>& law, StepStream& rng);

Partition markov_step(const Partition& rho, const CentralMeasure& meas, StepStream& rng, bool fast_path_counts = false);

/// Extension counts for the Markov path: closed form inside the validated range, or anywhere when the
/// fast path is enabled; otherwise RangeError.
CountFn sampler_counts(int q, bool fast_path_counts);

/// r_σ = t^{-n(σ)} Σ_λ K_{λσ}(t) s_λ(spec) restricted to shapes λ in the (ℓ,m)-hook, where ℓ and m are
/// the numbers of nonzero α and β atoms. Valid for atom specs with γ = 0, for which s_λ vanishes off
/// the hook. Values are memoized and the object may be shared between threads.
class HookRFunction {
 public:
  HookRFunction(const ThomaSpec& spec, const Rational& t);
  Rational r(const Partition& sigma) const;
  Rational schur(const Partition& lambda) const;
  int hook_rows() const { return rows_; }
  int hook_cols() const { return cols_; }

 private:
  Rational t_;
  int rows_, cols_;
  std::vector<Rational> h_, e_;  ///< complete and elementary values up to the degree limit
  std::shared_ptr<std::shared_mutex> mutex_;
  std::shared_ptr<std::map<Partition, Rational>> memo_;
};

struct FrequencyTargets {
  std::vector<Rational> rows;     ///< sorted merge of (1-t) t^j α_i
  std::vector<Rational> columns;  ///< β list unchanged
};

FrequencyTargets expected_frequency_multiset(const ThomaSpec& spec, const Rational& t, int k_max);

enum class LlnMode { haar, measure };

struct LlnConfig {
  LlnMode mode = LlnMode::haar;
  int q = 2;
  int n_max = 400;
  int trials = 200;
  std::uint64_t seed = 42;
  ThomaSpec spec = ThomaSpec::from_atoms({1});
  int k_max = 4;
  int record_every = 10;
  int guard_interval = 64;
  bool fast_path_counts = false;
  int threads = 0;  ///< 0 = OpenMP default
};

/// One sampled path: rows[i] is the 0-based row receiving box i+1.
struct TrialPath {
  std::vector<std::uint16_t> rows;
  Partition final_type;
};

struct FrequencySeries {
  std::vector<int> times;
  /// [time][k] for k = 1..k_max (index k-1)
  std::vector<std::vector<double>> row_mean, row_se, col_mean, col_se;
};

struct FrequencyReport {
  LlnConfig config;
  std::vector<TrialPath> trials;
  FrequencySeries series;
  FrequencyTargets targets;
  bool fast_path_counts = false;
  int guards_run = 0;

  const std::vector<double>& final_row_mean() const { return series.row_mean.back(); }
  const std::vector<double>& final_row_se() const { return series.row_se.back(); }
};

/// Deterministic in (config minus threads). Trials run in parallel; results are reduced in trial order.
FrequencyReport run_lln(const LlnConfig& config);
FrequencyReport run_lln_serial(const LlnConfig& config);

/// Means and standard errors of λ_k(n)/n and λ'_k(n)/n over the paths.
FrequencySeries frequency_series(const std::vector<TrialPath>& paths, int n_max, int k_max, int record_every);

}  // namespace vklab
