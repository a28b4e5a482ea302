#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vklab/rational.hpp"

namespace vklab {

/// Thrown when a computation would exceed the configured exact degree.
class DegreeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest degree for which partition tables and transition matrices are built (default 30).
int max_exact_degree();
void set_max_exact_degree(int n);
void check_degree(int n);

/// Integer partition: weakly decreasing positive parts. The empty partition has size 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "3,1,1"; "-" or "" for the empty partition.
  static Partition parse(std::string_view text);

  /// Sorts positive parts of a composition; zero parts are dropped.
  static Partition from_composition(std::span<const int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// k-th part, 0-based; 0 beyond the length.
  int operator[](int k) const { return k < length() ? parts_[static_cast<std::size_t>(k)] : 0; }

  /// Multiplicity of part value i.
  int multiplicity(int i) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts, so sorting descending gives reverse-lexicographic order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& lambda);

/// n(λ) = Σ (k-1) λ_k.
long n_stat(const Partition& lambda);

/// One hook length per cell, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

/// Partitions obtained by adding one box; ordered by the row receiving the box.
std::vector<Partition> covers_up(const Partition& lambda);

/// Row index (0-based) where sigma differs from lambda by one box; -1 if not a cover.
int added_box_row(const Partition& lambda, const Partition& sigma);

/// λ ⊵ μ in dominance order (requires equal sizes).
bool dominates(const Partition& lambda, const Partition& mu);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
/// The list is built once per degree and shared.
const std::vector<Partition>& enumerate_partitions(int n);

/// Position of λ in enumerate_partitions(|λ|).
std::size_t partition_index(const Partition& lambda);

/// Gaussian binomial [n choose m]_q by the product formula. At q = 1 returns the ordinary
/// binomial coefficient (the value of the polynomial at 1).
Rational gaussian_binomial(int n, int m, const Rational& q);

/// [n]_q! / Π [μ_j]_q! for a composition μ of n.
Rational gaussian_multinomial(std::span<const int> composition, const Rational& q);

Integer binomial(int n, int k);
Integer factorial(int n);

/// Semistandard Young tableau with partition content.
struct Tableau {
  Partition shape;
  Partition content;
  std::vector<std::vector<int>> rows;  // entries are 1-based letters

  bool is_semistandard() const;
  /// Row reading word, rows read right to left starting from the top row.
  std::vector<int> reading_word() const;
};

/// All SSYT of the given shape and content; throws std::invalid_argument on size mismatch.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);

/// Calls visit(rows) for every SSYT of `content` whose shape satisfies `shape_ok` at every
/// intermediate stage (the predicate must be monotone under adding boxes).
template <class ShapeOk, class Visit>
void for_each_ssyt_with_content(const Partition& content, ShapeOk shape_ok, Visit visit);

}  // namespace vklab

#include "vklab/detail/ssyt_walk.hpp"
