#include "doctest.h"
#include "vklab/gflinalg.hpp"
#include "vklab/kernels.hpp"

#include <set>

using namespace vklab;

namespace {

std::vector<int> digits(long code, int q, int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i, code /= q) d[static_cast<std::size_t>(i)] = static_cast<int>(code % q);
  return d;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// All upper unitriangular n x n matrices over F.
std::vector<MatGF> all_unitriangular(const FieldCtx& F, int n) {
  const int m = n * (n - 1) / 2;
  std::vector<MatGF> out;
  for (long code = 0; code < ipow(F.q(), m); ++code) {
    const auto d = digits(code, F.q(), m);
    MatGF u = MatGF::identity(F, static_cast<std::size_t>(n));
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) u.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), d[k++]);
    out.push_back(u);
  }
  return out;
}

// Distinct spans of all k-tuples of vectors, as sorted member lists; independent of RREF.
std::size_t count_subspaces_by_spans(const FieldCtx& F, int n, int k) {
  const long nv = ipow(F.q(), n);
  std::set<std::vector<long>> spans;
  std::vector<long> pick(static_cast<std::size_t>(k), 0);
  for (;;) {
    // span of the picked vectors
    std::set<long> members;
    const long ncoef = ipow(F.q(), k);
    for (long c = 0; c < ncoef; ++c) {
      const auto coef = digits(c, F.q(), k);
      std::vector<int> v(static_cast<std::size_t>(n), 0);
      for (int s = 0; s < k; ++s) {
        const auto vs = digits(pick[static_cast<std::size_t>(s)], F.q(), n);
        for (int i = 0; i < n; ++i)
          v[static_cast<std::size_t>(i)] = F.add(v[static_cast<std::size_t>(i)], F.mul(coef[static_cast<std::size_t>(s)], vs[static_cast<std::size_t>(i)]));
      }
      long code = 0;
      for (int i = n; i-- > 0;) code = code * F.q() + v[static_cast<std::size_t>(i)];
      members.insert(code);
    }
    if (static_cast<long>(members.size()) == ncoef) spans.insert(std::vector<long>(members.begin(), members.end()));
    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == nv) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return spans.size();
}

}  // namespace

TEST_CASE("field construction") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 256, 251}) {
    const FieldCtx& F = field(q);
    CHECK(F.q() == q);
    for (int a = 1; a < q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
  CHECK_THROWS(field(6));
  CHECK_THROWS(field(512));
  CHECK(&field(4) == &field(4));
}

TEST_CASE("rank and matrix text") {
  const FieldCtx& F2 = field(2);
  CHECK(rank(MatGF::identity(F2, 5)) == 5);
  CHECK(rank(MatGF(F2, 3, 3)) == 0);
  CHECK(rank(MatGF::parse(F2, "01;00")) == 1);
  CHECK(MatGF::parse(F2, "110;010;001").to_text() == "110;010;001");
  CHECK_THROWS(MatGF::parse(F2, "12;01"));
  CHECK_THROWS(MatGF::parse(F2, "11;0"));
  // packed and generic elimination agree on a wide matrix over F_2 vs the same over F_4's prime subfield
  MatGF wide(F2, 5, 70);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 70; ++j) wide.set(i, j, static_cast<int>((i * 7 + j * 3 + i * j) % 2));
  MatGF wide4(field(4), 5, 70);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 70; ++j) wide4.set(i, j, wide(i, j));
  CHECK(rank(wide) == rank(wide4));
}

TEST_CASE("jordan types of unipotents") {
  const FieldCtx& F2 = field(2);
  CHECK(jordan_type_unipotent(MatGF::identity(F2, 3)) == Partition{1, 1, 1});
  CHECK(jordan_type_unipotent(canonical_unipotent({3}, F2)) == Partition{3});
  CHECK(jordan_type_unipotent(MatGF::parse(F2, "110;010;001")) == Partition{2, 1});
  CHECK_THROWS(jordan_type_unipotent(MatGF::parse(F2, "10;01") + MatGF::identity(F2, 2)));
  CHECK(canonical_unipotent({1, 1}, F2) == MatGF::identity(F2, 2));
  CHECK(canonical_unipotent({2, 1}, F2) == MatGF::parse(F2, "110;010;001"));
  for (int q : {2, 3, 4})
    for (int n = 1; n <= 6; ++n)
      for (const auto& rho : enumerate_partitions(n)) CHECK(jordan_type_unipotent(canonical_unipotent(rho, field(q))) == rho);
}

TEST_CASE("extension types") {
  const FieldCtx& F2 = field(2);
  CHECK(extend_type(MatGF::identity(F2, 1), {0}) == Partition{1, 1});
  CHECK(extend_type(MatGF::identity(F2, 1), {1}) == Partition{2});
  CHECK(extend_type(canonical_unipotent({2}, F2), {0, 1}) == Partition{3});
  CHECK(extend_type(canonical_unipotent({2}, F2), {1, 1}) == Partition{3});

  // every extension is a cover, and counts depend only on the type (all of n <= 4 at q = 2;
  // n = 5 is covered by the acceptance suite)
  for (int n = 1; n <= 4; ++n) {
    std::map<Partition, std::map<Partition, long long>> seen;
    for (const auto& u : all_unitriangular(F2, n)) {
      const Partition rho = jordan_type_unipotent(u);
      std::map<Partition, long long> counts;
      for (long code = 0; code < ipow(2, n); ++code) {
        const Partition sigma = extend_type(u, digits(code, 2, n));
        CHECK(added_box_row(rho, sigma) >= 0);
        ++counts[sigma];
      }
      auto [it, fresh] = seen.emplace(rho, counts);
      if (!fresh) CHECK(it->second == counts);
    }
  }
  const FieldCtx& F3 = field(3);
  for (int n = 1; n <= 3; ++n) {
    std::map<Partition, std::map<Partition, long long>> seen;
    for (const auto& u : all_unitriangular(F3, n)) {
      auto counts = kernels::extension_histogram_serial(u);
      auto [it, fresh] = seen.emplace(jordan_type_unipotent(u), counts);
      if (!fresh) CHECK(it->second == counts);
    }
  }
}

TEST_CASE("extension counts") {
  const auto c1 = extension_counts({1}, field(2));
  CHECK(c1.at(Partition{2}) == 1);
  CHECK(c1.at(Partition{1, 1}) == 1);
  const auto c2 = extension_counts({2}, field(2));
  CHECK(c2.at(Partition{3}) == 2);
  CHECK(c2.at(Partition{2, 1}) == 2);
  for (int q : {2, 3, 4, 5}) {
    const FieldCtx& F = field(q);
    const int top = std::min(extension_counts_validated_degree(q), q == 2 ? 8 : 5);
    for (int n = 1; n <= top; ++n)
      for (const auto& rho : enumerate_partitions(n)) {
        const auto brute = extension_counts(rho, F);
        Integer sum = 0;
        for (const auto& [sigma, c] : brute) sum += c;
        CHECK(sum == Integer(ipow(q, n)));
        CHECK(brute == extension_counts_closed_form(rho, q));
      }
  }
  // serial and parallel kernels agree
  const MatGF u = canonical_unipotent({3, 2, 2, 1}, field(2));
  CHECK(kernels::extension_histogram_serial(u) == kernels::extension_histogram_omp(u));
  const MatGF u3 = canonical_unipotent({2, 2, 1}, field(3));
  CHECK(kernels::extension_histogram_serial(u3) == kernels::extension_histogram_omp(u3));
}

TEST_CASE("unitriangular counts by type") {
  const auto n2 = count_unitriangular_by_type(2, field(2));
  CHECK(n2.at(Partition{2}) == 1);
  CHECK(n2.at(Partition{1, 1}) == 1);
  const auto n3 = count_unitriangular_by_type(3, field(2));
  CHECK(n3.at(Partition{3}) == 2);
  CHECK(n3.at(Partition{2, 1}) == 5);
  CHECK(n3.at(Partition{1, 1, 1}) == 1);
  CHECK(count_unitriangular_by_type(1, field(3)).at(Partition{1}) == 1);
  for (int q : {2, 3})
    for (int n = 1; n <= (q == 2 ? 6 : 4); ++n) {
      const auto brute = count_unitriangular_by_type(n, field(q));
      Integer sum = 0;
      for (const auto& [rho, c] : brute) sum += c;
      CHECK(sum == Integer(ipow(q, n * (n - 1) / 2)));
      CHECK(brute == count_unitriangular_recursive(n, q));
    }
  CHECK(kernels::unitriangular_histogram_serial(5, field(2)) == kernels::unitriangular_histogram_omp(5, field(2)));
  CHECK(kernels::unitriangular_histogram_serial(4, field(3)) == kernels::unitriangular_histogram_omp(4, field(3)));
  CHECK_THROWS_AS(count_unitriangular_by_type(8, field(2)), SizeLimitError);
}

TEST_CASE("polynomials and class types") {
  const FieldCtx& F2 = field(2);
  CHECK(irreducibles(F2, 1).size() == 2);
  CHECK(irreducibles(F2, 2).size() == 1);
  CHECK(irreducibles(F2, 3).size() == 2);
  CHECK(irreducibles(F2, 4).size() == 3);
  CHECK(irreducibles(field(3), 2).size() == 3);
  CHECK(irreducibles(field(4), 2).size() == 6);
  CHECK(poly_to_string({1, 1, 1}, 2) == "111");
  CHECK(poly_parse("111", 2) == Poly{1, 1, 1});

  const Poly t_minus_1{1, 1};
  const Poly quad{1, 1, 1};
  CHECK(conj_class_type(MatGF::identity(F2, 2)) == ConjClassType{{t_minus_1, Partition{1, 1}}});
  CHECK(conj_class_type(companion(F2, quad)) == ConjClassType{{quad, Partition{1}}});
  const MatGF g = block_diagonal({canonical_unipotent({2}, F2), companion(F2, quad)});
  CHECK(conj_class_type(g) == ConjClassType{{t_minus_1, Partition{2}}, {quad, Partition{1}}});
  CHECK_THROWS(conj_class_type(MatGF(F2, 2, 2)));

  // charpoly of a companion matrix is its polynomial
  for (int q : {2, 3, 4})
    for (int d = 1; d <= 3; ++d)
      for (const auto& f : irreducibles(field(q), d)) CHECK(charpoly(companion(field(q), f)) == f);

  // round trip through primary elements
  for (int d = 1; d <= 3; ++d)
    for (const auto& f : irreducibles(F2, d)) {
      if (f == Poly{0, 1}) continue;
      for (int m = 1; m <= 3; ++m)
        for (const auto& mu : enumerate_partitions(m)) CHECK(conj_class_type(primary_element(f, mu, F2)) == ConjClassType{{f, mu}});
    }
  for (const auto& f : irreducibles(field(3), 2))
    for (const auto& mu : enumerate_partitions(2)) CHECK(conj_class_type(primary_element(f, mu, field(3))) == ConjClassType{{f, mu}});
  CHECK(primary_element(t_minus_1, {2}, F2) == canonical_unipotent({2}, F2));
  CHECK(primary_element(t_minus_1, {1, 1}, F2) == MatGF::identity(F2, 2));
  CHECK(primary_element(quad, {1}, F2) == companion(F2, quad));
  CHECK_THROWS(primary_element(Poly{1, 0, 1}, {1}, F2));  // t^2 + 1 = (t + 1)^2
  CHECK_THROWS(primary_element(Poly{0, 1}, {1}, F2));
}

TEST_CASE("subspaces and fixed flags") {
  for (int q : {2, 3})
    for (int n = 1; n <= (q == 2 ? 4 : 3); ++n)
      for (int k = 0; k <= n; ++k) {
        const std::size_t rref = all_subspaces(field(q), n, k).size();
        CHECK(Rational(static_cast<long>(rref)) == gaussian_binomial(n, k, q));
        CHECK(rref == count_subspaces_by_spans(field(q), n, k));
      }
  const FieldCtx& F2 = field(2);
  CHECK(count_fixed_flags(MatGF::identity(F2, 2), {1, 1}) == 3);
  CHECK(count_fixed_flags(canonical_unipotent({2}, F2), {1, 1}) == 1);
  CHECK(count_fixed_flags(canonical_unipotent({2, 1}, F2), {3}) == 1);
  CHECK(count_fixed_flags(MatGF::identity(F2, 3), {1, 1, 1}) == 21);
  CHECK_THROWS(count_fixed_flags(MatGF::identity(F2, 3), {1, 1}));

  // invariant subspaces of a degree-2 primary element have even dimension
  const MatGF g = primary_element(Poly{1, 1, 1}, {1, 1}, F2);
  const MatGF h = primary_element(Poly{1, 1, 1}, {2}, F2);
  for (const auto& m : {g, h})
    for (const auto& u : invariant_subspaces(m)) CHECK(u.rows() % 2 == 0);
}
