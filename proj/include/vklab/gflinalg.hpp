#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vklab/partitions.hpp"

namespace vklab {

/// Thrown when a brute-force enumeration would be too large.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite field F_q, q = p^e <= 256, by lookup tables. Elements are 0..q-1; for e > 1 the
/// integer's base-p digits are the coefficients (low to high) of a polynomial modulo the
/// fixed defining polynomial of the field.
class FieldCtx {
 public:
  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }
  /// Defining polynomial coefficients, low to high (just {0,1} for prime fields).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  /// Multiplicative inverse; a must be nonzero.
  int inv(int a) const;
  /// The element represented by the integer k (k mod p in the prime subfield).
  int from_int(long k) const;

  friend const FieldCtx& field(int q);

 private:
  explicit FieldCtx(int q);
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

  int q_, p_, e_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Shared field context; throws std::invalid_argument if q is not a supported prime power.
const FieldCtx& field(int q);

bool is_supported_field_size(int q);

/// Dense matrix over F_q.
class MatGF {
 public:
  MatGF(const FieldCtx& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatGF identity(const FieldCtx& f, std::size_t n);
  /// "110;010;001" (single digits, so q <= 10); spaces are ignored.
  static MatGF parse(const FieldCtx& f, std::string_view text);
  std::string to_text() const;

  const FieldCtx& field() const { return *f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, int v) { data_[i * cols_ + j] = static_cast<std::uint8_t>(v); }

  MatGF operator*(const MatGF& o) const;
  MatGF operator+(const MatGF& o) const;
  MatGF operator-(const MatGF& o) const;
  bool operator==(const MatGF& o) const { return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  bool is_zero() const;
  MatGF pow(unsigned k) const;

  const std::vector<std::uint8_t>& data() const { return data_; }

 private:
  const FieldCtx* f_;
  std::size_t rows_, cols_;
  std::vector<std::uint8_t> data_;
};

/// Rank over F_q; q = 2 uses packed 64-bit rows.
int rank(const MatGF& m);

/// Polynomial over F_q as coefficients low to high, no trailing zeros (zero polynomial = {}).
using Poly = std::vector<int>;

int poly_degree(const Poly& f);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_pow(const FieldCtx& F, const Poly& a, int k);
bool poly_is_irreducible(const FieldCtx& F, const Poly& f);
/// All monic irreducible polynomials of degree d (cached per field).
const std::vector<Poly>& irreducibles(const FieldCtx& F, int d);
/// Coefficient digits low to high, e.g. "111" for t^2+t+1; comma separated when q > 10.
std::string poly_to_string(const Poly& f, int q);
Poly poly_parse(std::string_view text, int q);
/// f(g) for a square matrix g.
MatGF poly_eval(const Poly& f, const MatGF& g);
/// Characteristic polynomial det(tI - g) by Hessenberg reduction.
Poly charpoly(const MatGF& g);
/// Companion matrix of a monic polynomial (ones on the subdiagonal, last column -coeffs).
MatGF companion(const FieldCtx& F, const Poly& f);

/// Conjugacy class invariant of an invertible matrix: irreducible f -> partition.
using ConjClassType = std::map<Poly, Partition>;

std::string conj_class_type_to_string(const ConjClassType& type, int q);

/// Jordan type of a unipotent matrix; throws std::invalid_argument if (u-I)^n != 0.
Partition jordan_type_unipotent(const MatGF& u);

/// Conjugacy class type of an invertible matrix; throws std::invalid_argument if singular.
ConjClassType conj_class_type(const MatGF& g);

/// Jordan type of [[u, b], [0, 1]].
Partition extend_type(const MatGF& u, const std::vector<int>& b);

/// Upper-triangular direct sum of Jordan blocks J_{ρ_1} ⊕ J_{ρ_2} ⊕ ...
MatGF canonical_unipotent(const Partition& rho, const FieldCtx& F);

/// Matrix of type {f -> μ}: aI + Jordan blocks when f = t - a, companion blocks of f^{μ_i} otherwise.
MatGF primary_element(const Poly& f, const Partition& mu, const FieldCtx& F);

/// Block diagonal matrix with the given square blocks.
MatGF block_diagonal(const std::vector<MatGF>& blocks);

/// Number of b in F_q^{|ρ|} with extend_type(canonical_unipotent(ρ), b) = σ, by enumeration.
/// Keys are the partitions in covers_up(ρ). Limited to q^{|ρ|} <= 2^22.
std::map<Partition, Integer> extension_counts(const Partition& rho, const FieldCtx& F);

/// Closed form: the new box lands in column j with count q^{n-ρ'_j} - [j>1] q^{n-ρ'_{j-1}}.
/// Valid for every prime power q; validated against extension_counts in the tests.
std::map<Partition, Integer> extension_counts_closed_form(const Partition& rho, const Integer& q);

/// Largest |ρ| for which the closed form was checked against enumeration, per q.
int extension_counts_validated_degree(int q);

/// g-invariant subspaces of F_q^n, each as a row-reduced basis (k x n matrix).
std::vector<MatGF> invariant_subspaces(const MatGF& g);

/// All subspaces of F_q^n of dimension k as row-reduced bases.
std::vector<MatGF> all_subspaces(const FieldCtx& F, int n, int k);

/// Number of g-invariant flags with successive dimension jumps μ_1, μ_2, ...
Integer count_fixed_flags(const MatGF& g, const std::vector<int>& mu);

/// N_ρ(q): number of upper unitriangular n x n matrices of each Jordan type, by enumeration.
/// Limited to q^{n(n-1)/2} <= 2^22.
std::map<Partition, Integer> count_unitriangular_by_type(int n, const FieldCtx& F);

/// Same numbers from the recursion N_σ = Σ_ρ N_ρ c_{ρσ} with closed-form extension counts.
std::map<Partition, Integer> count_unitriangular_recursive(int n, const Integer& q);

}  // namespace vklab
