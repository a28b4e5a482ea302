#include "doctest.h"
#include "oracles.hpp"
#include "vklab/characters.hpp"
#include "vklab/measures.hpp"

using namespace vklab;

TEST_CASE("dimensions") {
  for (int n = 1; n <= 6; ++n) CHECK(unipotent_dim(Partition{n}, 2) == 1);
  CHECK(unipotent_dim({1, 1, 1}, 2) == 8);
  CHECK(unipotent_dim({2, 1}, 2) == 6);
  CHECK(unipotent_dim({3}, 2) + 2 * unipotent_dim({2, 1}, 2) + unipotent_dim({1, 1, 1}, 2) == induced_dim({1, 1, 1}, 2));
  CHECK(sym_dim({4}) == 1);
  CHECK(sym_dim({2, 1}) == 2);
  CHECK(sym_dim({1, 1, 1}) == 1);
  CHECK(induced_dim({1, 1, 1}, 2) == 21);
  CHECK(induced_dim({4}, 3) == 1);
  CHECK(induced_dim({1, 1}, 2) == 3);
  CHECK(induced_dim({2, 1, 3}, 3) == induced_dim({3, 2, 1}, 3));
  // the q-hook degree is the character value at the identity class (1^n)
  for (int q : {2, 3, 4})
    for (int n = 1; n <= 7; ++n) {
      const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
      for (const auto& lambda : enumerate_partitions(n)) CHECK(unipotent_dim(lambda, q) == chi_unipotent(lambda, ones, q));
    }
}

TEST_CASE("unipotent character values") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& rho : enumerate_partitions(n)) CHECK(chi_unipotent(Partition{n}, rho, 2) == 1);
  CHECK(chi_unipotent({1, 1, 1}, {1, 1, 1}, 2) == 8);
  CHECK(chi_unipotent({2, 1}, {2, 1}, 2) == 2);
  CHECK(chi_unipotent({1, 1}, {2}, 2) == 0);
  CHECK(chi_unipotent({2}, {1, 1}, 2) == 1);
  CHECK_THROWS(chi_unipotent({2, 1}, {2}, 2));
  CHECK_THROWS(chi_unipotent({2}, {1}, 2));
  for (int q : {2, 3})
    for (int n = 1; n <= 7; ++n) {
      const RatMatrix x = chi_unipotent_matrix(n, q);
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) CHECK(x(i, j) >= 0);
    }
  CHECK(psi_unipotent({1, 1}, {1, 1}, 2) == 3);
  CHECK(psi_unipotent({1, 1}, {2}, 2) == 1);
  for (int n = 1; n <= 5; ++n)
    for (const auto& rho : enumerate_partitions(n)) CHECK(psi_unipotent({n}, rho, 3) == 1);
  CHECK(psi_unipotent({1, 2}, {2, 1}, 2) == psi_unipotent({2, 1}, {2, 1}, 2));
}

TEST_CASE("flag oracle") {
  const RatMatrix x2 = chi_via_flag_oracle(2, field(2));
  CHECK(x2(0, 0) == 1);
  CHECK(x2(0, 1) == 1);
  CHECK(x2(1, 1) == 2);
  CHECK(x2(1, 0) == 0);
  CHECK(chi_via_flag_oracle(1, field(2)) == RatMatrix::identity(1));
  CHECK(chi_via_flag_oracle(3, field(2)) == chi_unipotent_matrix(3, 2));
  CHECK(chi_via_flag_oracle(3, field(3)) == chi_unipotent_matrix(3, 3));
}

TEST_CASE("primary elements") {
  CHECK(psi_at_primary({2}, 2, {1}, 2) == 1);
  CHECK(psi_at_primary({1, 1}, 2, {1}, 2) == 0);
  CHECK(psi_at_primary({2, 2}, 2, {1, 1}, 2) == 5);
  const Poly quad{1, 1, 1};
  const MatGF g = primary_element(quad, {1, 1}, field(2));
  CHECK(count_fixed_flags(g, {2, 2}) == 5);
  CHECK(count_fixed_flags(g, {1, 3}) == 0);
  const MatGF h = primary_element(quad, {2}, field(2));
  CHECK(count_fixed_flags(h, {2, 2}) == psi_at_primary({2, 2}, 2, {2}, 2));

  // the flag character does not depend on the eigenvalue: f = t - 1 versus f = t - 2 over F_3
  const FieldCtx& F3 = field(3);
  for (int n = 1; n <= 3; ++n)
    for (const auto& rho : enumerate_partitions(n)) {
      const MatGF a = primary_element(Poly{2, 1}, rho, F3);  // t - 1
      const MatGF b = primary_element(Poly{1, 1}, rho, F3);  // t - 2
      for (const auto& mu : enumerate_partitions(n)) {
        const std::vector<int> comp(mu.parts().begin(), mu.parts().end());
        CHECK(count_fixed_flags(a, comp) == count_fixed_flags(b, comp));
        CHECK(Rational(count_fixed_flags(a, comp)) == psi_unipotent(comp, rho, 3));
      }
    }
}

TEST_CASE("GLB characters") {
  const GroundParams g2 = GroundParams::from_q(2);
  const auto one = ThomaSpec::from_atoms({1});
  for (int n = 1; n <= 5; ++n)
    for (const auto& rho : enumerate_partitions(n)) CHECK(glb_character_unipotent(one, rho, g2) == 1);

  const auto halves = ThomaSpec::from_atoms({Rational(1, 2), Rational(1, 2)});
  const auto s = schur_values(2, halves);
  Rational two_decomp = 0;
  for (const auto& lambda : enumerate_partitions(2)) two_decomp += chi_unipotent(lambda, {1, 1}, 2) * s[partition_index(lambda)];
  CHECK(glb_character_unipotent(halves, {1, 1}, g2) == two_decomp);

  const Poly t1{1, 1};
  const Poly quad{1, 1, 1};
  CHECK(glb_character_general(halves, {{t1, Partition{2, 1}}}, g2) == glb_character_unipotent(halves, {2, 1}, g2));
  const ConjClassType mixed{{t1, Partition{1}}, {quad, Partition{1}}};
  for (const auto& f : irreducibles(field(2), 3)) {
    const ConjClassType tp{{t1, Partition{1}}, {f, Partition{1}}};
    CHECK(glb_character_general(one, tp, g2) == 1);
  }
  CHECK(glb_character_general(one, mixed, g2) == 1);
  const auto spec = ThomaSpec::from_atoms({Rational(2, 3), Rational(1, 3)});
  const MatGF w = block_diagonal({canonical_unipotent({1}, field(2)), companion(field(2), quad)});
  CHECK(conj_class_type(w) == mixed);
  CHECK(glb_character_general(spec, mixed, g2) == glb_character_via_flags(spec, w));
}

TEST_CASE("Frobenius transition") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(frobenius_transition_check(n, 2));
    CHECK(frobenius_transition_check(n, 3));
  }
}
