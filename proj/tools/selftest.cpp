#include "selftest.hpp"

#include <functional>

#include "vklab/characters.hpp"
#include "vklab/grassmann.hpp"
#include "vklab/ipfamily.hpp"
#include "vklab/measures.hpp"
#include "vklab/sampler.hpp"

using namespace vklab;

namespace {

std::vector<ThomaSpec> sample_specs() {
  return {ThomaSpec::from_atoms({1}),
          ThomaSpec::from_atoms({Rational(1, 2), Rational(1, 2)}),
          ThomaSpec::from_atoms({Rational(1, 2)}, {Rational(1, 2)}),
          ThomaSpec::from_atoms({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)}),
          ThomaSpec::from_atoms({}, {1})};
}

SuiteResult suite(const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string failure = body();
    return {name, failure.empty(), failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<SuiteResult> run_selftest(bool full) {
  const int deg = full ? 6 : 4;
  std::vector<SuiteResult> out;

  out.push_back(suite("haar recovery", [&]() -> std::string {
    for (int q : {2, 3}) {
      const auto meas = characteristic_measure(ThomaSpec::from_atoms({1}), GroundParams::from_q(q));
      for (int n = 1; n <= deg; ++n)
        for (const auto& rho : enumerate_partitions(n))
          if (meas.cylinder(rho) != pow(Rational(q), -static_cast<long>(n) * (n - 1) / 2)) return "q=" + std::to_string(q) + " rho=" + rho.to_string();
    }
    return "";
  }));

  out.push_back(suite("two-route cylinders", [&]() -> std::string {
    for (const auto& spec : sample_specs())
      for (int q : {2, 3}) {
        const GroundParams g = GroundParams::from_q(q);
        const auto meas = characteristic_measure(spec, g);
        for (int n = 1; n <= deg; ++n)
          for (const auto& rho : enumerate_partitions(n))
            if (meas.cylinder(rho) != characteristic_cylinder_via_r(spec, rho, g)) return "rho=" + rho.to_string();
      }
    return "";
  }));

  out.push_back(suite("coherence", [&]() -> std::string {
    for (const auto& spec : sample_specs()) {
      const auto meas = characteristic_measure(spec, GroundParams::from_q(2));
      const auto rep = check_coherence(meas, deg + 1, field(2));
      if (!rep.ok) return "violation at " + rep.violations.front().rho.to_string();
    }
    return "";
  }));

  out.push_back(suite("flag oracle", [&]() -> std::string {
    for (int q : {2, 3})
      for (int n = 1; n <= (full ? 4 : 3); ++n)
        if (chi_via_flag_oracle(n, field(q)) != chi_unipotent_matrix(n, q)) return "n=" + std::to_string(n) + " q=" + std::to_string(q);
    return "";
  }));

  out.push_back(suite("Frobenius transition", [&]() -> std::string {
    for (int q : {2, 3})
      for (int n = 1; n <= (full ? 5 : 4); ++n)
        if (!frobenius_transition_check(n, q)) return "n=" + std::to_string(n);
    return "";
  }));

  out.push_back(suite("two decompositions", [&]() -> std::string {
    for (const auto& spec : sample_specs())
      for (int n = 1; n <= deg; ++n) {
        const auto s = schur_values(n, spec);
        const auto m = monomial_values(n, spec);
        for (const auto& rho : enumerate_partitions(n)) {
          Rational a = 0, b = 0;
          for (const auto& lambda : enumerate_partitions(n)) {
            const std::size_t i = partition_index(lambda);
            a += chi_unipotent(lambda, rho, 2) * s[i];
            const std::vector<int> nu(lambda.parts().begin(), lambda.parts().end());
            b += psi_unipotent(nu, rho, 2) * m[i];
          }
          if (a != b) return "rho=" + rho.to_string();
        }
      }
    return "";
  }));

  out.push_back(suite("Schubert cells", [&]() -> std::string {
    for (int q : {2, 3})
      for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
          Integer total = 0;
          for (const auto& [eps, count] : enumerate_schubert_cells(n, k, field(q))) {
            if (count != finite_cell_size({eps, SchubertSymbol::Tail::zeros}, q)) return "cell size";
            total += count;
          }
          if (Rational(total) != gaussian_binomial(n, k, q) || pascal_q_paths(n, k, q) != gaussian_binomial(n, k, q)) return "total";
        }
    return "";
  }));

  out.push_back(suite("inductive families", [&]() -> std::string {
    for (const IPLevel& level : {build_gl_ip_level(1, field(2)), build_affine_ip_level(1, field(3)), build_wreath_ip_level(1, cyclic_group(2))}) {
      const Verdict v = embed_homomorphism_check(level);
      if (!v.ok) return level.G->name() + ": " + v.detail;
    }
    for (int m : {1, 2}) {
      const Verdict v = flag_induction_check(m, field(2));
      if (!v.ok) return v.detail;
    }
    if (full) {
      const Verdict v = flag_induction_check(2, field(3));
      if (!v.ok) return v.detail;
    }
    return "";
  }));

  out.push_back(suite("Jordan tracker", [&]() -> std::string {
    for (int q : {2, 3}) {
      HaarTracker tracker(field(q), 40, 8);
      GrowthState ref = haar_initial(field(q));
      for (int step = 0; step < 40; ++step) {
        StepStream rng(1, 0, static_cast<std::uint32_t>(step));
        const auto b = random_column(field(q), step, rng);
        tracker.step(b);
        ref = haar_grow_step(ref, b);
        if (tracker.type() != ref.rho) return "q=" + std::to_string(q) + " step " + std::to_string(step);
      }
      if (!tracker.verify()) return "final verification";
    }
    return "";
  }));
  return out;
}
