#include "vklab/measures.hpp"

#include <mutex>
#include <stdexcept>

namespace vklab {

const char* convention_name(Convention c) {
  switch (c) {
    case Convention::expand_alpha: return "expand-alpha";
    case Convention::expand_beta: return "expand-beta";
    case Convention::expand_none: return "expand-none";
    case Convention::expand_both: return "expand-both";
  }
  return "?";
}

Convention parse_convention(std::string_view name) {
  for (Convention c : all_conventions())
    if (name == convention_name(c)) return c;
  throw std::invalid_argument("unknown convention: " + std::string(name));
}

std::vector<Convention> all_conventions() {
  return {Convention::expand_alpha, Convention::expand_beta, Convention::expand_none, Convention::expand_both};
}

Convention default_convention() { return Convention::expand_both; }

CentralMeasure::CentralMeasure(ThomaSpec spec, GroundParams ground, Convention convention)
    : spec_(std::move(spec)),
      ground_(std::move(ground)),
      convention_(convention),
      mutex_(std::make_shared<std::shared_mutex>()),
      memo_(std::make_shared<std::map<Partition, Rational>>()) {}

Rational CentralMeasure::cylinder(const Partition& rho) const {
  {
    std::shared_lock lock(*mutex_);
    if (auto it = memo_->find(rho); it != memo_->end()) return it->second;
  }
  const int n = rho.size();
  check_degree(n);
  const Rational& t = ground_.t;
  Rational v = hl_Q_value(rho, spec_, t) * pow(t, -n_stat(rho)) * pow(1 - t, -n) *
               pow(ground_.q, -static_cast<long>(n) * (n - 1) / 2);
  if (v < 0) {
    throw NegativeCylinderError("negative cylinder value " + to_string(v) + " at rho = " + rho.to_string() +
                                " under " + convention_name(convention_));
  }
  std::unique_lock lock(*mutex_);
  auto [it, fresh] = memo_->emplace(rho, v);
  if (!fresh && it->second != v) throw std::logic_error("memoized cylinder value changed");
  return v;
}

Rational cylinder_prob(const CentralMeasure& meas, const Partition& rho) { return meas.cylinder(rho); }

CentralMeasure characteristic_measure(const ThomaSpec& spec, const GroundParams& ground, Convention convention) {
  if (spec.has_geometric()) throw std::invalid_argument("characteristic_measure expects atom entries only");
  ThomaSpec expanded = spec;
  if (convention == Convention::expand_alpha || convention == Convention::expand_both)
    expanded = geometric_merge(expanded, ground.t);
  if (convention == Convention::expand_beta || convention == Convention::expand_both)
    expanded = geometric_merge_beta(expanded, ground.t);
  return CentralMeasure(std::move(expanded), ground, convention);
}

Rational characteristic_cylinder_via_r(const ThomaSpec& spec, const Partition& rho, const GroundParams& ground) {
  const int n = rho.size();
  return r_function(rho, spec, ground.t) * pow(ground.q, -static_cast<long>(n) * (n - 1) / 2);
}

CoherenceReport check_coherence(const CylinderFn& cylinder, int n_max, const FieldCtx& F, CountSource source) {
  CoherenceReport report;
  for (int n = 1; n < n_max; ++n) {
    for (const auto& rho : enumerate_partitions(n)) {
      const auto counts = source == CountSource::brute_force ? extension_counts(rho, F)
                                                             : extension_counts_closed_form(rho, F.q());
      const Rational lhs = cylinder(rho);
      Rational rhs = 0;
      for (const auto& [sigma, c] : counts)
        if (c != 0) rhs += Rational(c) * cylinder(sigma);
      ++report.checked;
      if (lhs != rhs) {
        report.ok = false;
        report.violations.push_back({rho, lhs, rhs});
      }
    }
  }
  return report;
}

CoherenceReport check_coherence(const CentralMeasure& meas, int n_max, const FieldCtx& F, CountSource source) {
  if (Rational(F.q()) != meas.ground().q) throw std::invalid_argument("field size does not match the measure's q");
  return check_coherence([&](const Partition& rho) { return meas.cylinder(rho); }, n_max, F, source);
}

NormalizationReport check_normalization(const CentralMeasure& meas, int n, const FieldCtx& F) {
  if (Rational(F.q()) != meas.ground().q) throw std::invalid_argument("field size does not match the measure's q");
  NormalizationReport report;
  report.total = 0;
  for (const auto& [rho, count] : count_unitriangular_by_type(n, F)) report.total += Rational(count) * meas.cylinder(rho);
  report.ok = report.total == 1;
  return report;
}

std::vector<ConventionEvidence> adjudicate_conventions(const AdjudicationPlan& plan) {
  std::vector<ConventionEvidence> out;
  for (Convention c : all_conventions()) {
    ConventionEvidence ev{c, true, true, true, {}};
    auto fail = [&](bool& flag, const std::string& why) {
      flag = false;
      if (ev.note.empty()) ev.note = why;
    };

    for (const auto& spec : plan.coherence_specs) {
      for (auto [q, n_max] : plan.coherence_levels) {
        try {
          const auto meas = characteristic_measure(spec, GroundParams::from_q(q), c);
          const auto rep = check_coherence(meas, n_max, field(q));
          if (!rep.ok) fail(ev.coherence, "coherence fails at rho = " + rep.violations[0].rho.to_string() + ", q = " + std::to_string(q));
        } catch (const NegativeCylinderError& e) {
          fail(ev.coherence, e.what());
        }
      }
    }

    for (int q : plan.haar_qs) {
      const auto meas = characteristic_measure(ThomaSpec::from_atoms({1}), GroundParams::from_q(q), c);
      for (int n = 1; n <= plan.haar_degree && ev.haar; ++n) {
        const Rational expected = pow(Rational(q), -static_cast<long>(n) * (n - 1) / 2);
        for (const auto& rho : enumerate_partitions(n)) {
          try {
            if (meas.cylinder(rho) != expected) {
              fail(ev.haar, "Haar recovery fails at rho = " + rho.to_string() + ", q = " + std::to_string(q));
              break;
            }
          } catch (const NegativeCylinderError& e) {
            fail(ev.haar, e.what());
            break;
          }
        }
      }
    }

    for (const auto& spec : plan.two_route_specs) {
      for (int q : plan.two_route_qs) {
        const GroundParams g = GroundParams::from_q(q);
        const auto meas = characteristic_measure(spec, g, c);
        bool ok = true;
        for (int n = 1; n <= plan.two_route_degree && ok; ++n)
          for (const auto& rho : enumerate_partitions(n)) {
            Rational a;
            try {
              a = meas.cylinder(rho);
            } catch (const NegativeCylinderError& e) {
              fail(ev.two_route, e.what());
              ok = false;
              break;
            }
            if (a != characteristic_cylinder_via_r(spec, rho, g)) {
              fail(ev.two_route, "two routes differ at rho = " + rho.to_string() + ", q = " + std::to_string(q));
              ok = false;
              break;
            }
          }
      }
    }
    out.push_back(ev);
  }
  return out;
}

}  // namespace vklab
