#pragma once

#include <vector>

#include "fibmm/minmax.hpp"
#include "fibmm/planar.hpp"

namespace fibmm {

/// Instance-verification suites. Each runs a family of exact checks and
/// reports one Check per item; nothing here reads floating point.

/// Recurrence, Binet route, Cassini, index doubling and phi-power
/// consistency up to max_n.
std::vector<Check> suite_identities(const FibCache& cache, int max_n);

/// T_n: alternating sum vs closed forms, and the nearest-integer
/// property, for 1 <= n <= max_n.
std::vector<Check> suite_lemma3(const FibCache& cache, int max_n);

/// Envelope-vs-case-list instances for 1 <= t <= max_t.
std::vector<Check> suite_lemma4(const FibCache& cache, int max_t);

/// verify_propositions for 1 <= t <= max_t, flattened.
std::vector<Check> suite_props(const FibCache& cache, int max_t);

/// min_{n<=N} ||F_n/(phi+2)|| values for 1 <= N <= max_n.
std::vector<Check> suite_thm2(const FibCache& cache, int max_n);

/// Window searches at fixed sample parameters (threshold hit, threshold
/// near-miss, impossible eps = 0).
std::vector<Check> suite_thm3(const FibCache& cache);

/// Planar t-values and maximizer sets for 2 <= N <= max_n.
std::vector<Check> suite_thm4(const FibCache& cache, int max_n);

/// Random-alpha three-term (<= 1/3) and six-term (<= 1/5) window bounds,
/// plus the six-term d-values for K = 1..12.
std::vector<Check> suite_windows(const FibCache& cache, int samples, unsigned long long seed);

}  // namespace fibmm
