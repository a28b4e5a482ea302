#pragma once

// Enumeration kernels. Each comes in a serial reference version and an OpenMP version that
// splits the enumeration space into contiguous blocks; the exact integer results agree.

#include <map>

#include "vklab/gflinalg.hpp"
#include "vklab/sampler.hpp"

namespace vklab::kernels {

using Histogram = std::map<Partition, long long>;

/// Jordan type of a nilpotent matrix given as packed rows over F_2 (n <= 64).
Partition nilpotent_type_gf2(const std::vector<std::uint64_t>& rows, int n);
/// Jordan type of a nilpotent matrix over a table field, row-major entries.
Partition nilpotent_type(const FieldCtx& F, const std::vector<std::uint8_t>& a, int n);

/// Extension types of the unipotent u over all columns b in F_q^n.
Histogram extension_histogram_serial(const MatGF& u);
Histogram extension_histogram_omp(const MatGF& u);

/// Jordan types of all upper unitriangular n x n matrices.
Histogram unitriangular_histogram_serial(int n, const FieldCtx& F);
Histogram unitriangular_histogram_omp(int n, const FieldCtx& F);

/// Haar growth paths of length n_max, one per trial; trial i draws from StepStream(seed, i, step).
/// `guards` receives the number of invariant checks performed.
std::vector<TrialPath> haar_trials_serial(const FieldCtx& F, int n_max, int trials, std::uint64_t seed, int guard_interval,
                                          long long* guards = nullptr);
std::vector<TrialPath> haar_trials_omp(const FieldCtx& F, int n_max, int trials, std::uint64_t seed, int guard_interval,
                                       long long* guards = nullptr);

/// Markov growth paths from (1) to size n_max under the given cylinder function.
std::vector<TrialPath> markov_trials_serial(const CylinderFn& cylinder, const CountFn& counts, int n_max, int trials,
                                            std::uint64_t seed);
std::vector<TrialPath> markov_trials_omp(const CylinderFn& cylinder, const CountFn& counts, int n_max, int trials,
                                         std::uint64_t seed);

}  // namespace vklab::kernels
