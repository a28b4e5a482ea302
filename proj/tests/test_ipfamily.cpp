#include "doctest.h"
#include "vklab/ipfamily.hpp"
#include "vklab/measures.hpp"

using namespace vklab;

TEST_CASE("group tables") {
  const auto gl2 = general_linear_group(2, field(2));
  CHECK(gl2->size() == 6);
  CHECK(gl2->classes().size() == 3);
  CHECK(general_linear_group(2, field(3))->size() == 48);
  CHECK(general_linear_group(3, field(2))->size() == 168);
  CHECK(general_linear_group(3, field(2))->classes().size() == 6);
  for (int g = 0; g < gl2->size(); ++g) CHECK(gl2->mul(g, gl2->inv(g)) == gl2->identity());

  const auto z3 = cyclic_group(3);
  CHECK(z3->mul(1, 2) == 0);
  const auto w = wreath_group(3, *cyclic_group(2));
  CHECK(w->size() == 48);
  CHECK(w->classes().size() == 10);  // pairs of partitions of total size 3

  // the composition rule: (π1, h)(π2, h') has values h_i h'_{π1(i)}
  const WreathElement a{{1, 0}, {1, 0}}, b{{0, 1}, {0, 1}};
  const auto w2 = wreath_group(2, *z3);
  const int ab = w2->mul(w2->index_of(encode_wreath(a, 3)), w2->index_of(encode_wreath(b, 3)));
  const WreathElement c = decode_wreath(w2->key(ab), 2, 3);
  CHECK(c.perm == std::vector<int>{1, 0});
  CHECK(c.values == std::vector<int>{2, 0});

  CHECK_THROWS(FiniteGroupTable("broken", {0, 1, 2}, [](auto x, auto y) { return (x + y) % 4; }, 0));
  CHECK_THROWS(FiniteGroupTable("broken", {0, 1}, [](auto x, auto y) { return x * y; }, 1));
}

TEST_CASE("inductive-pair levels") {
  const IPLevel gl2 = build_gl_ip_level(1, field(2));
  CHECK(gl2.G->size() == 6);
  CHECK(gl2.P.size() == 2);
  CHECK(gl2.N.size() == 2);
  CHECK(build_gl_ip_level(1, field(3)).N.size() == 6);
  CHECK(build_affine_ip_level(1, field(2)).N.size() == 2);
  CHECK(build_affine_ip_level(1, field(3)).N.size() == 3);
  const IPLevel gl3 = build_gl_ip_level(2, field(2));
  CHECK(gl3.P.size() == 6 * 4);
  CHECK(gl3.N.size() == 4);

  const IPLevel wr = build_wreath_ip_level(1, cyclic_group(2));
  CHECK(wr.G->size() == 8);
  CHECK(wr.P.size() == 4);
  CHECK(wr.N.size() == 2);
  const IPLevel trivial = build_wreath_ip_level(2, cyclic_group(1));
  CHECK(trivial.G->size() == 6);
  CHECK(trivial.N.size() == 1);
  for (const IPLevel* l : {&gl2, &gl3, &wr, &trivial}) CHECK(verify_level(*l));

  // the Borel towers are nested through the section
  const auto B2 = borel_subgroup(*gl3.G_prev, 2, field(2));
  const auto B3 = borel_subgroup(*gl3.G, 3, field(2));
  CHECK(B2.size() == 2);
  CHECK(B3.size() == 8);
  for (int b : B2) CHECK(std::find(B3.begin(), B3.end(), gl3.section[static_cast<std::size_t>(b)]) != B3.end());
}

TEST_CASE("group algebra embedding") {
  for (const IPLevel& level : {build_gl_ip_level(1, field(2)), build_gl_ip_level(1, field(3)), build_gl_ip_level(2, field(2)),
                               build_affine_ip_level(2, field(2)), build_wreath_ip_level(2, cyclic_group(2)),
                               build_wreath_ip_level(2, cyclic_group(1))}) {
    const Verdict v = embed_homomorphism_check(level);
    CHECK_MESSAGE(v.ok, level.G->name() << ": " << v.detail);
    CHECK(v.checked > 0);
  }
  const IPLevel level = build_gl_ip_level(1, field(2));
  const auto e = embed_i(GroupAlgElem::delta(level.G_prev, level.G_prev->identity()), level);
  CHECK(convolve(e, e) == e);
  CHECK_FALSE(e == GroupAlgElem::delta(level.G, level.G->identity()));
  CHECK(e.coeffs.size() == 2);
  for (const auto& [g, c] : e.coeffs) CHECK(c == Rational(1, 2));

  // (ab)^# = b^# a^#
  const auto G = general_linear_group(2, field(3));
  GroupAlgElem a{G, {{3, Rational(1, 2)}, {7, Rational(-2)}}}, b{G, {{1, Rational(3)}, {20, Rational(1, 5)}}};
  CHECK(involution(convolve(a, b)) == convolve(involution(b), involution(a)));
  CHECK(involution(involution(a)) == a);
}

TEST_CASE("flag induction") {
  for (int m : {1, 2})
    for (int q : {2, 3}) {
      const Verdict v = flag_induction_check(m, field(q));
      CHECK_MESSAGE(v.ok, v.detail);
      CHECK(v.checked > 0);
    }
  const auto chi = permutation_character(*general_linear_group(2, field(2)), borel_subgroup(*general_linear_group(2, field(2)), 2, field(2)));
  CHECK(chi[static_cast<std::size_t>(general_linear_group(2, field(2))->identity())] == 3);
  CHECK_THROWS_AS(flag_induction_check(3, field(2)), SizeLimitError);
}

TEST_CASE("wreath de Finetti measures") {
  const auto H = cyclic_group(2);
  CHECK(de_finetti_central_check(3, H, {Rational(1, 2), Rational(1, 2)}).ok);
  CHECK(de_finetti_central_check(3, H, {Rational(3, 4), Rational(1, 4)}).ok);
  CHECK(de_finetti_central_check(2, cyclic_group(3), {Rational(1, 2), Rational(1, 3), Rational(1, 6)}).ok);
  // weights depending on position are not conjugation invariant
  auto positional = [](const std::vector<int>& v) {
    Rational p = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational w = Rational(1 + static_cast<long>(i)) / 4;
      p *= v[i] == 0 ? w : 1 - w;
    }
    return p;
  };
  CHECK_FALSE(central_check(3, H, positional).ok);
  CHECK_THROWS(de_finetti_central_check(2, H, {Rational(1, 2), Rational(1, 3)}));
}

TEST_CASE("coherence through the group levels") {
  const auto haar = characteristic_measure(ThomaSpec::from_atoms({1}), GroundParams::from_q(2));
  const CylinderFn cyl = [&](const Partition& p) { return haar.cylinder(p); };
  const Verdict v = coherence_bridge_check(cyl, 3, field(2));
  CHECK_MESSAGE(v.ok, v.detail);
  CHECK(v.checked == 1 + 2);
  const auto spec = characteristic_measure(ThomaSpec::from_atoms({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)}), GroundParams::from_q(2));
  const CylinderFn cs = [&](const Partition& p) { return spec.cylinder(p); };
  CHECK(coherence_bridge_check(cs, 3, field(2)).ok);
  const CylinderFn flat = [](const Partition&) { return Rational(1); };
  CHECK_FALSE(coherence_bridge_check(flat, 3, field(2)).ok);
}
