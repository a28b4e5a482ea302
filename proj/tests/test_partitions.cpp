#include "doctest.h"
#include "vklab/partitions.hpp"

#include <algorithm>
#include <numeric>

using namespace vklab;

TEST_CASE("conjugate and n statistic") {
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(n_stat(Partition{3}) == 0);
  CHECK(n_stat(Partition{1, 1, 1}) == 3);
  CHECK(n_stat(Partition{2, 1}) == 1);

  for (int n = 0; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      CHECK(conjugate(conjugate(lambda)) == lambda);
      const Partition c = conjugate(lambda);
      long cols = 0;
      for (int len : c.parts()) cols += static_cast<long>(len) * (len - 1) / 2;
      CHECK(cols == n_stat(lambda));
    }
  }
}

TEST_CASE("hook lengths") {
  CHECK(hook_lengths(Partition{1}) == std::vector<int>{1});
  auto h = hook_lengths(Partition{2, 1});
  std::sort(h.begin(), h.end());
  CHECK(h == std::vector<int>{1, 1, 3});
  CHECK(hook_lengths(Partition{4}) == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("covers") {
  CHECK(covers_up(Partition{}) == std::vector<Partition>{Partition{1}});
  CHECK(covers_up(Partition{1}) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(covers_up(Partition{2, 1}) ==
        std::vector<Partition>{Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}});
  CHECK(added_box_row(Partition{2, 1}, Partition{2, 2}) == 1);
  CHECK(added_box_row(Partition{2, 1}, Partition{3, 1}) == 0);
  CHECK(added_box_row(Partition{2, 1}, Partition{4}) == -1);
  for (int n = 0; n <= 7; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (const auto& sigma : covers_up(lambda)) CHECK(added_box_row(lambda, sigma) >= 0);
}

TEST_CASE("partition enumeration order and counts") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(enumerate_partitions(n).size() == counts[static_cast<std::size_t>(n)]);
  CHECK(enumerate_partitions(0)[0].empty());
  CHECK(enumerate_partitions(3) == std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
  CHECK(enumerate_partitions(30).size() == 5604);
  CHECK_THROWS_AS(enumerate_partitions(31), DegreeLimitError);
  for (int n = 1; n <= 8; ++n) {
    const auto& ps = enumerate_partitions(n);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(partition_index(ps[i]) == i);
    // dominance never goes against the order
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(dominates(ps[j], ps[i]));
  }
}

TEST_CASE("partition text form") {
  CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
  CHECK(Partition::parse("-").empty());
  CHECK(Partition{3, 1, 1}.to_string() == "3,1,1");
  CHECK(Partition{}.to_string() == "-");
  CHECK_THROWS(Partition::parse("1,2"));
  CHECK_THROWS(Partition::parse("2,,1"));
  CHECK_THROWS(Partition::parse("2,x"));
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK_THROWS(gaussian_binomial(2, 3, 2));
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= n; ++m) {
      for (Rational q : {Rational(2), Rational(3), Rational(1, 2), Rational(5, 3)})
        CHECK(gaussian_binomial(n, m, q) == gaussian_binomial(n, n - m, q));
      CHECK(gaussian_binomial(n, m, 1) == Rational(binomial(n, m)));
    }
  const std::vector<int> comp{1, 1, 1};
  CHECK(gaussian_multinomial(comp, 2) == 21);
}

TEST_CASE("semistandard tableaux") {
  CHECK(enumerate_ssyt(Partition{2, 1}, Partition{1, 1, 1}).size() == 2);
  CHECK(enumerate_ssyt(Partition{1, 1}, Partition{2}).empty());
  CHECK(enumerate_ssyt(Partition{4}, Partition{4}).size() == 1);
  CHECK_THROWS(enumerate_ssyt(Partition{2}, Partition{1}));
  for (const auto& t : enumerate_ssyt(Partition{3, 2}, Partition{2, 2, 1})) CHECK(t.is_semistandard());

  // Kostka symmetry: the count depends on the content only up to reordering. Count fillings of
  // an arbitrary composition content by brute force over all row fillings.
  auto brute = [](const Partition& shape, const std::vector<int>& content) {
    // assign letters cell by cell, row-major, enforcing row/column conditions
    std::vector<int> left = content;
    std::vector<std::vector<int>> rows;
    for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
    long count = 0;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i)
      for (int j = 0; j < shape[i]; ++j) cells.emplace_back(i, j);
    auto rec = [&](auto&& self, std::size_t c) -> void {
      if (c == cells.size()) {
        ++count;
        return;
      }
      auto [i, j] = cells[c];
      for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
        if (left[static_cast<std::size_t>(v) - 1] == 0) continue;
        if (j > 0 && rows[i][j - 1] > v) continue;
        if (i > 0 && rows[i - 1][j] >= v) continue;
        rows[i][j] = v;
        --left[static_cast<std::size_t>(v) - 1];
        self(self, c + 1);
        ++left[static_cast<std::size_t>(v) - 1];
      }
    };
    rec(rec, 0);
    return count;
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (const auto& mu : enumerate_partitions(n)) {
        const long k = static_cast<long>(enumerate_ssyt(lambda, mu).size());
        std::vector<int> comp(mu.parts().begin(), mu.parts().end());
        CHECK(brute(lambda, comp) == k);
        std::reverse(comp.begin(), comp.end());
        CHECK(brute(lambda, comp) == k);
      }
}
