#pragma once

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "vklab/gflinalg.hpp"
#include "vklab/symfun.hpp"

namespace vklab {

/// Which atom lists of (α; β) are replaced by geometric families before Q_ρ is evaluated.
enum class Convention { expand_alpha, expand_beta, expand_none, expand_both };

const char* convention_name(Convention c);
Convention parse_convention(std::string_view name);
std::vector<Convention> all_conventions();
/// The convention selected by adjudicate_conventions (see README).
Convention default_convention();

/// Raised when a cylinder value comes out negative.
class NegativeCylinderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Central measure on upper unitriangular matrices given by an (expanded) specialization.
/// Cylinder values are memoized; concurrent reads are safe.
class CentralMeasure {
 public:
  CentralMeasure(ThomaSpec spec, GroundParams ground, Convention convention);

  const ThomaSpec& spec() const { return spec_; }
  const GroundParams& ground() const { return ground_; }
  Convention convention() const { return convention_; }

  /// M_ρ = q^{-n(n-1)/2} t^{-n(ρ)} (1-t)^{-n} Q_ρ(spec; t), n = |ρ|.
  Rational cylinder(const Partition& rho) const;

 private:
  ThomaSpec spec_;
  GroundParams ground_;
  Convention convention_;
  std::shared_ptr<std::shared_mutex> mutex_;
  std::shared_ptr<std::map<Partition, Rational>> memo_;
};

Rational cylinder_prob(const CentralMeasure& meas, const Partition& rho);

/// Expands the atom spec according to the convention. Rejects specs that already have
/// geometric entries.
CentralMeasure characteristic_measure(const ThomaSpec& spec, const GroundParams& ground,
                                      Convention convention = default_convention());

/// q^{-n(n-1)/2} r_ρ(spec): the same cylinder through Kostka-Foulkes and Schur values.
Rational characteristic_cylinder_via_r(const ThomaSpec& spec, const Partition& rho, const GroundParams& ground);

struct CoherenceViolation {
  Partition rho;
  Rational lhs;  // M_ρ
  Rational rhs;  // Σ_σ c_{ρσ} M_σ
};

struct CoherenceReport {
  bool ok = true;
  long checked = 0;
  std::vector<CoherenceViolation> violations;
};

enum class CountSource { brute_force, closed_form };

using CylinderFn = std::function<Rational(const Partition&)>;

/// Checks M_ρ = Σ_σ c_{ρσ}(q) M_σ for every ρ with |ρ| < n_max.
CoherenceReport check_coherence(const CylinderFn& cylinder, int n_max, const FieldCtx& F,
                                CountSource source = CountSource::brute_force);
CoherenceReport check_coherence(const CentralMeasure& meas, int n_max, const FieldCtx& F,
                                CountSource source = CountSource::brute_force);

struct NormalizationReport {
  bool ok = false;
  Rational total;
};

/// Σ_ρ N_ρ(q) M_ρ over ρ ⊢ n, with N_ρ from enumeration.
NormalizationReport check_normalization(const CentralMeasure& meas, int n, const FieldCtx& F);

struct ConventionEvidence {
  Convention convention;
  bool coherence = false;
  bool haar = false;
  bool two_route = false;
  std::string note;  // first failure, if any

  bool passes() const { return coherence && haar && two_route; }
};

struct AdjudicationPlan {
  std::vector<ThomaSpec> coherence_specs;
  std::vector<std::pair<int, int>> coherence_levels;  // (q, n_max)
  std::vector<ThomaSpec> two_route_specs;
  std::vector<int> two_route_qs;
  int two_route_degree = 6;
  std::vector<int> haar_qs;
  int haar_degree = 6;
};

/// Runs coherence, Haar recovery and two-route equality under every convention.
std::vector<ConventionEvidence> adjudicate_conventions(const AdjudicationPlan& plan);

}  // namespace vklab
