#include <exception>
#include <mutex>

#include <omp.h>

#include "vklab/kernels.hpp"

namespace vklab::kernels {

namespace {

TrialPath haar_trial(const FieldCtx& F, int n_max, std::uint64_t seed, int trial, int guard_interval, long long& guards) {
  HaarTracker tracker(F, n_max, guard_interval);
  TrialPath path;
  path.rows.reserve(static_cast<std::size_t>(n_max));
  for (int step = 0; step < n_max; ++step) {
    StepStream rng(seed, static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(step));
    path.rows.push_back(static_cast<std::uint16_t>(tracker.step(rng)));
  }
  path.final_type = tracker.type();
  guards += tracker.guards_run();
  return path;
}

TrialPath markov_trial(const CylinderFn& cylinder, const CountFn& counts, int n_max, std::uint64_t seed, int trial) {
  TrialPath path;
  path.rows.reserve(static_cast<std::size_t>(n_max));
  Partition rho{1};
  path.rows.push_back(0);
  for (int step = 1; step < n_max; ++step) {
    StepStream rng(seed, static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(step));
    const Partition next = sample_conditional(markov_conditional(rho, cylinder, counts), rng);
    path.rows.push_back(static_cast<std::uint16_t>(added_box_row(rho, next)));
    rho = next;
  }
  path.final_type = rho;
  return path;
}

template <class Body>
void parallel_trials(int trials, Body body) {
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < trials; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<TrialPath> haar_trials_serial(const FieldCtx& F, int n_max, int trials, std::uint64_t seed, int guard_interval,
                                          long long* guards) {
  std::vector<TrialPath> out;
  long long g = 0;
  for (int i = 0; i < trials; ++i) out.push_back(haar_trial(F, n_max, seed, i, guard_interval, g));
  if (guards) *guards = g;
  return out;
}

std::vector<TrialPath> haar_trials_omp(const FieldCtx& F, int n_max, int trials, std::uint64_t seed, int guard_interval,
                                       long long* guards) {
  std::vector<TrialPath> out(static_cast<std::size_t>(trials));
  std::vector<long long> g(static_cast<std::size_t>(trials), 0);
  parallel_trials(trials, [&](int i) {
    out[static_cast<std::size_t>(i)] = haar_trial(F, n_max, seed, i, guard_interval, g[static_cast<std::size_t>(i)]);
  });
  if (guards) {
    *guards = 0;
    for (long long x : g) *guards += x;
  }
  return out;
}

std::vector<TrialPath> markov_trials_serial(const CylinderFn& cylinder, const CountFn& counts, int n_max, int trials,
                                            std::uint64_t seed) {
  std::vector<TrialPath> out;
  for (int i = 0; i < trials; ++i) out.push_back(markov_trial(cylinder, counts, n_max, seed, i));
  return out;
}

std::vector<TrialPath> markov_trials_omp(const CylinderFn& cylinder, const CountFn& counts, int n_max, int trials,
                                         std::uint64_t seed) {
  std::vector<TrialPath> out(static_cast<std::size_t>(trials));
  parallel_trials(trials, [&](int i) { out[static_cast<std::size_t>(i)] = markov_trial(cylinder, counts, n_max, seed, i); });
  return out;
}

}  // namespace vklab::kernels
