#include "vklab/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace vklab {

namespace {
std::atomic<int> g_max_degree{30};
}  // namespace

int max_exact_degree() { return g_max_degree.load(); }

void set_max_exact_degree(int n) {
  if (n < 1) throw std::invalid_argument("max exact degree must be positive");
  g_max_degree.store(n);
}

void check_degree(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > max_exact_degree()) {
    throw DegreeLimitError("degree " + std::to_string(n) + " exceeds configured maximum " +
                           std::to_string(max_exact_degree()));
  }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') s.push_back(c);
  }
  if (s.empty() || s == "-") return Partition{};
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("bad partition text: " + std::string(text));
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad partition text: " + std::string(text));
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition Partition::from_composition(std::span<const int> parts) {
  std::vector<int> p;
  for (int x : parts) {
    if (x < 0) throw std::invalid_argument("negative composition part");
    if (x > 0) p.push_back(x);
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

long n_stat(const Partition& lambda) {
  long s = 0;
  for (int k = 0; k < lambda.length(); ++k) s += static_cast<long>(k) * lambda[k];
  return s;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks.push_back((lambda[i] - j - 1) + (conj[j] - i - 1) + 1);
  return hooks;
}

std::vector<Partition> covers_up(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  for (int i = 0; i <= lambda.length(); ++i) {
    if (i == 0 || lambda[i] < lambda[i - 1]) {
      std::vector<int> p = parts;
      if (i == lambda.length()) p.push_back(1); else ++p[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

int added_box_row(const Partition& lambda, const Partition& sigma) {
  if (sigma.size() != lambda.size() + 1) return -1;
  int row = -1;
  for (int i = 0; i < sigma.length(); ++i) {
    int d = sigma[i] - lambda[i];
    if (d == 0) continue;
    if (d != 1 || row != -1) return -1;
    row = i;
  }
  if (lambda.length() > sigma.length()) return -1;
  return row;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance needs equal sizes");
  long a = 0, b = 0;
  for (int k = 0; k < std::max(lambda.length(), mu.length()); ++k) {
    a += lambda[k];
    b += mu[k];
    if (a < b) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

struct PartitionTable {
  std::vector<Partition> list;
  std::map<Partition, std::size_t> index;
};

std::mutex g_table_mutex;
std::map<int, std::unique_ptr<PartitionTable>> g_tables;

const PartitionTable& table(int n) {
  check_degree(n);
  std::lock_guard lock(g_table_mutex);
  auto& slot = g_tables[n];
  if (!slot) {
    auto t = std::make_unique<PartitionTable>();
    std::vector<int> cur;
    generate(n, n, cur, t->list);
    for (std::size_t i = 0; i < t->list.size(); ++i) t->index.emplace(t->list[i], i);
    slot = std::move(t);
  }
  return *slot;
}

}  // namespace

const std::vector<Partition>& enumerate_partitions(int n) { return table(n).list; }

std::size_t partition_index(const Partition& lambda) { return table(lambda.size()).index.at(lambda); }

Rational gaussian_binomial(int n, int m, const Rational& q) {
  if (m < 0 || m > n) throw std::invalid_argument("gaussian_binomial: m out of range");
  if (q == 1) return Rational(binomial(n, m));
  Rational r = 1;
  for (int i = 0; i < m; ++i) r *= (pow(q, n - i) - 1) / (pow(q, i + 1) - 1);
  return r;
}

Rational gaussian_multinomial(std::span<const int> composition, const Rational& q) {
  Rational r = 1;
  int total = 0;
  for (int part : composition) {
    if (part < 0) throw std::invalid_argument("negative composition part");
    total += part;
    r *= gaussian_binomial(total, part, q);
  }
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

bool Tableau::is_semistandard() const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  std::vector<int> seen(static_cast<std::size_t>(content.length()) + 1, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[static_cast<int>(i)]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      int v = rows[i][j];
      if (v < 1 || v > content.length()) return false;
      ++seen[static_cast<std::size_t>(v)];
      if (j > 0 && rows[i][j - 1] > v) return false;
      if (i > 0 && rows[i - 1][j] >= v) return false;
    }
  }
  for (int v = 1; v <= content.length(); ++v)
    if (seen[static_cast<std::size_t>(v)] != content[v - 1]) return false;
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
  return w;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size()) throw std::invalid_argument("enumerate_ssyt: size mismatch");
  std::vector<Tableau> out;
  auto fits = [&](std::span<const int> lengths) {
    if (static_cast<int>(lengths.size()) > shape.length()) return false;
    for (std::size_t i = 0; i < lengths.size(); ++i)
      if (lengths[i] > shape[static_cast<int>(i)]) return false;
    return true;
  };
  for_each_ssyt_with_content(content, fits, [&](std::span<const std::vector<int>> rows) {
    if (static_cast<int>(rows.size()) != shape.length()) return;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(rows[i].size()) != shape[static_cast<int>(i)]) return;
    out.push_back(Tableau{shape, content, {rows.begin(), rows.end()}});
  });
  return out;
}

}  // namespace vklab
