#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace vklab {

/// Philox4x32 with 10 rounds (Salmon et al. counter-based generator).
/// Known-answer vectors are the ones shipped with Random123.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key);

/// Word stream for one (seed, trial, step, stream) coordinate. The key is the 64-bit seed; the counter
/// is {block, step, trial, stream}, so draws never depend on how trials are scheduled.
class StepStream {
 public:
  using result_type = std::uint32_t;

  StepStream(std::uint64_t seed, std::uint32_t trial, std::uint32_t step, std::uint32_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

  std::uint32_t operator()() { return next_u32(); }
  static constexpr std::uint32_t min() { return 0; }
  static constexpr std::uint32_t max() { return std::numeric_limits<std::uint32_t>::max(); }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 4;
};

}  // namespace vklab
