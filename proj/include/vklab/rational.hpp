#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vklab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p/q", "p" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& x);

/// x^e for any integer e; throws std::domain_error on 0^negative.
Rational pow(const Rational& x, long e);

double to_double(const Rational& x);

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const = default;

  RatMatrix transpose() const;

  /// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
  RatMatrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace vklab
