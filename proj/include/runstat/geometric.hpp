#pragma once

#include <cstddef>

#include "runstat/model.hpp"
#include "runstat/polyseries.hpp"

namespace runstat {

/// P(V(k) = v) for v in [k, vmax] from the h-sequence recursion; tail holds
/// P(V(k) > vmax).
Pmf vk_pmf(const TrialModel& model, unsigned k, std::size_t vmax);

/// Probability generating function of V(k).
RationalGF vk_pgf(const TrialModel& model, unsigned k);

/// Pgf of the wait for a fresh k-run when the trial just before the wait
/// was a success (prev_success) or a failure. Equals vk_pgf for i.i.d.
RationalGF first_run_pgf_after(const TrialModel& model, unsigned k, bool prev_success);

/// Two-root closed form of P(V(2) = v), v >= 2.
double vk_pmf_closedform_k2(const TrialModel& model, std::size_t v);

/// max(10k, ceil(log 1e-12 / log rho)), rho the decay ratio of the pmf,
/// capped at kMaxDefaultVmax.
std::size_t default_vmax(const TrialModel& model, unsigned k);
inline constexpr std::size_t kMaxDefaultVmax = 10'000'000;

/// Distribution of the longest success run in n trials, support 0..n.
Pmf longest_run_pmf(const TrialModel& model, std::size_t n);

/// P(L_n = k) by expanding (G_{V(k)} - G_{V(k+1)}) / (1 - z), or
/// (1 - G_{V(1)}) / (1 - z) for k = 0.
double longest_run_recursive(const TrialModel& model, std::size_t n, unsigned k);

}  // namespace runstat
