#include <omp.h>

#include <bit>
#include <stdexcept>

#include "vklab/kernels.hpp"

namespace vklab::kernels {

namespace {

using Rows = std::vector<std::uint64_t>;

Rows mul_gf2(const Rows& a, const Rows& b) {
  Rows c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t bits = a[i];
    std::uint64_t acc = 0;
    while (bits) {
      const int k = std::countr_zero(bits);
      acc ^= b[static_cast<std::size_t>(k)];
      bits &= bits - 1;
    }
    c[i] = acc;
  }
  return c;
}

int rank_rows_gf2(Rows a) {
  int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // pick the row with the lowest set bit as pivot for that column
    if (a[i] == 0) continue;
    const std::uint64_t low = a[i] & (~a[i] + 1);
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[j] & low) a[j] ^= a[i];
    ++r;
  }
  return r;
}

Partition type_from_ranks(const std::vector<int>& ranks) {
  std::vector<int> cols;
  for (std::size_t k = 1; k < ranks.size(); ++k) cols.push_back(ranks[k - 1] - ranks[k]);
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  return conjugate(Partition(cols));
}

using Mat8 = std::vector<std::uint8_t>;

Mat8 mul_generic(const FieldCtx& F, const Mat8& a, const Mat8& b, int n) {
  Mat8 c(a.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int x = a[static_cast<std::size_t>(i * n + k)];
      if (!x) continue;
      for (int j = 0; j < n; ++j) {
        const int y = b[static_cast<std::size_t>(k * n + j)];
        if (y) c[static_cast<std::size_t>(i * n + j)] = static_cast<std::uint8_t>(F.add(c[static_cast<std::size_t>(i * n + j)], F.mul(x, y)));
      }
    }
  return c;
}

int rank_generic(const FieldCtx& F, Mat8 a, int n) {
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = r;
    while (piv < n && a[static_cast<std::size_t>(piv * n + c)] == 0) ++piv;
    if (piv == n) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(r * n + j)]);
    const int inv = F.inv(a[static_cast<std::size_t>(r * n + c)]);
    for (int i = r + 1; i < n; ++i) {
      const int f = F.mul(a[static_cast<std::size_t>(i * n + c)], inv);
      if (!f) continue;
      for (int j = c; j < n; ++j)
        a[static_cast<std::size_t>(i * n + j)] =
            static_cast<std::uint8_t>(F.sub(a[static_cast<std::size_t>(i * n + j)], F.mul(f, a[static_cast<std::size_t>(r * n + j)])));
    }
    ++r;
  }
  return r;
}

void merge(Histogram& into, const Histogram& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

// Enumerates indices [begin, end) of columns b and records extension types.
void extension_range_gf2(const Rows& nil, int n, std::uint64_t begin, std::uint64_t end, Histogram& out) {
  Rows ext(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t code = begin; code < end; ++code) {
    for (int i = 0; i < n; ++i)
      ext[static_cast<std::size_t>(i)] = nil[static_cast<std::size_t>(i)] | (((code >> i) & 1u) << n);
    ext[static_cast<std::size_t>(n)] = 0;
    ++out[nilpotent_type_gf2(ext, n + 1)];
  }
}

void extension_range_generic(const FieldCtx& F, const Mat8& nil, int n, std::uint64_t begin, std::uint64_t end,
                             Histogram& out) {
  const int m = n + 1;
  Mat8 ext(static_cast<std::size_t>(m * m), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ext[static_cast<std::size_t>(i * m + j)] = nil[static_cast<std::size_t>(i * n + j)];
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i, c /= static_cast<std::uint64_t>(F.q()))
      ext[static_cast<std::size_t>(i * m + n)] = static_cast<std::uint8_t>(c % static_cast<std::uint64_t>(F.q()));
    ++out[nilpotent_type(F, ext, m)];
  }
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

struct Prepared {
  int n = 0;
  Rows packed;
  Mat8 dense;
};

Prepared prepare_extension(const MatGF& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("square matrix required");
  Prepared p;
  p.n = static_cast<int>(u.rows());
  const FieldCtx& F = u.field();
  const MatGF nil = u - MatGF::identity(F, u.rows());
  if (!nil.pow(static_cast<unsigned>(p.n)).is_zero()) throw std::invalid_argument("matrix is not unipotent");
  if (F.q() == 2) {
    if (p.n >= 63) throw std::invalid_argument("packed path limited to n < 63");
    p.packed.assign(static_cast<std::size_t>(p.n), 0);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (nil(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) p.packed[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  } else {
    p.dense = nil.data();
  }
  return p;
}

}  // namespace

Partition nilpotent_type_gf2(const std::vector<std::uint64_t>& rows, int n) {
  std::vector<int> ranks{n};
  Rows power = rows;
  for (int k = 1; k <= n; ++k) {
    const int r = rank_rows_gf2(power);
    ranks.push_back(r);
    if (r == 0) return type_from_ranks(ranks);
    power = mul_gf2(power, rows);
  }
  throw std::invalid_argument("matrix is not nilpotent");
}

Partition nilpotent_type(const FieldCtx& F, const std::vector<std::uint8_t>& a, int n) {
  if (n == 0) return Partition{};
  if (F.q() == 2 && n <= 64) {
    Rows rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[static_cast<std::size_t>(i * n + j)]) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    return nilpotent_type_gf2(rows, n);
  }
  std::vector<int> ranks{n};
  Mat8 power = a;
  for (int k = 1; k <= n; ++k) {
    const int r = rank_generic(F, power, n);
    ranks.push_back(r);
    if (r == 0) return type_from_ranks(ranks);
    power = mul_generic(F, power, a, n);
  }
  throw std::invalid_argument("matrix is not nilpotent");
}

Histogram extension_histogram_serial(const MatGF& u) {
  const Prepared p = prepare_extension(u);
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(u.field().q()), p.n);
  Histogram out;
  if (u.field().q() == 2) extension_range_gf2(p.packed, p.n, 0, total, out);
  else extension_range_generic(u.field(), p.dense, p.n, 0, total, out);
  return out;
}

Histogram extension_histogram_omp(const MatGF& u) {
  const Prepared p = prepare_extension(u);
  const FieldCtx& F = u.field();
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(F.q()), p.n);
  const std::uint64_t block = 4096;
  const std::int64_t nblocks = static_cast<std::int64_t>((total + block - 1) / block);
  Histogram out;
#pragma omp parallel
  {
    Histogram local;
#pragma omp for schedule(dynamic)
    for (std::int64_t blk = 0; blk < nblocks; ++blk) {
      const std::uint64_t begin = static_cast<std::uint64_t>(blk) * block;
      const std::uint64_t end = std::min(total, begin + block);
      if (F.q() == 2) extension_range_gf2(p.packed, p.n, begin, end, local);
      else extension_range_generic(F, p.dense, p.n, begin, end, local);
    }
#pragma omp critical
    merge(out, local);
  }
  return out;
}

namespace {

void unitriangular_range(const FieldCtx& F, int n, std::uint64_t begin, std::uint64_t end, Histogram& out) {
  const auto q = static_cast<std::uint64_t>(F.q());
  if (F.q() == 2) {
    Rows rows(static_cast<std::size_t>(n), 0);
    for (std::uint64_t code = begin; code < end; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        std::uint64_t r = 0;
        for (int j = i + 1; j < n; ++j, c >>= 1) r |= (c & 1u) << j;
        rows[static_cast<std::size_t>(i)] = r;
      }
      ++out[nilpotent_type_gf2(rows, n)];
    }
    return;
  }
  Mat8 a(static_cast<std::size_t>(n * n), 0);
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, c /= q) a[static_cast<std::size_t>(i * n + j)] = static_cast<std::uint8_t>(c % q);
    ++out[nilpotent_type(F, a, n)];
  }
}

}  // namespace

Histogram unitriangular_histogram_serial(int n, const FieldCtx& F) {
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(F.q()), n * (n - 1) / 2);
  Histogram out;
  unitriangular_range(F, n, 0, total, out);
  return out;
}

Histogram unitriangular_histogram_omp(int n, const FieldCtx& F) {
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(F.q()), n * (n - 1) / 2);
  const std::uint64_t block = 4096;
  const std::int64_t nblocks = static_cast<std::int64_t>((total + block - 1) / block);
  Histogram out;
#pragma omp parallel
  {
    Histogram local;
#pragma omp for schedule(dynamic)
    for (std::int64_t blk = 0; blk < nblocks; ++blk) {
      const std::uint64_t begin = static_cast<std::uint64_t>(blk) * block;
      unitriangular_range(F, n, begin, std::min(total, begin + block), local);
    }
#pragma omp critical
    merge(out, local);
  }
  return out;
}

}  // namespace vklab::kernels
