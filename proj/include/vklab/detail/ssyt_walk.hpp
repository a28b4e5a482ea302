#pragma once

// Implementation of for_each_ssyt_with_content; included from partitions.hpp.

#include <algorithm>
#include <span>
#include <vector>

namespace vklab {
namespace detail {

template <class ShapeOk, class Visit>
struct SsytWalker {
  std::span<const int> counts;
  ShapeOk& shape_ok;
  Visit& visit;
  std::vector<std::vector<int>> rows;  // may carry trailing empty rows
  std::vector<int> lengths;            // same size as rows

  std::size_t used_rows() const {
    std::size_t r = lengths.size();
    while (r > 0 && lengths[r - 1] == 0) --r;
    return r;
  }

  void place_letter(std::size_t letter_idx) {
    if (letter_idx == counts.size()) {
      visit(std::span<const std::vector<int>>(rows.data(), used_rows()));
      return;
    }
    const std::size_t used = used_rows();
    if (lengths.size() == used) {
      lengths.push_back(0);
      rows.emplace_back();
    }
    const std::vector<int> before(lengths.begin(), lengths.begin() + static_cast<long>(used) + 1);
    distribute(letter_idx, before, 0, counts[letter_idx]);
  }

  // Adds `remaining` copies of the letter as a horizontal strip over rows >= row.
  void distribute(std::size_t letter_idx, const std::vector<int>& before, std::size_t row, int remaining) {
    if (remaining == 0) {
      std::span<const int> shape(lengths.data(), used_rows());
      if (shape_ok(shape)) place_letter(letter_idx + 1);
      return;
    }
    if (row >= before.size()) return;
    const int old_len = before[row];
    const int cap = row == 0 ? old_len + remaining : std::min(old_len + remaining, before[row - 1]);
    const int letter = static_cast<int>(letter_idx) + 1;
    for (int len = cap; len >= old_len; --len) {
      const int added = len - old_len;
      for (int k = 0; k < added; ++k) rows[row].push_back(letter);
      lengths[row] = len;
      distribute(letter_idx, before, row + 1, remaining - added);
      rows[row].resize(static_cast<std::size_t>(old_len));
      lengths[row] = old_len;
    }
  }
};

}  // namespace detail

template <class ShapeOk, class Visit>
void for_each_ssyt_with_content(const Partition& content, ShapeOk shape_ok, Visit visit) {
  detail::SsytWalker<ShapeOk, Visit> walker{content.parts(), shape_ok, visit, {}, {}};
  walker.place_letter(0);
}

}  // namespace vklab
