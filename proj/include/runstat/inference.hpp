#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "runstat/model.hpp"
#include "runstat/oracle.hpp"

namespace runstat {

using Sample = std::vector<std::size_t>;

/// Sum of log P(V(k) = v_i); -infinity if any observed point has zero
/// probability. The k = 2 closed form can replace the recursion.
double loglik_vk(const Sample& sample, const TrialModel& model, unsigned k, bool use_closed_form = false);

struct NelderMeadConfig {
    std::size_t max_iter = 2000;
    double tol_f = 1e-10;
    double tol_x = 1e-8;
    double initial_step = 0.5;
};

struct NelderMeadResult {
    std::vector<double> argmin;
    double value;
    bool converged;
    std::size_t iterations;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Minimizes the objective with the downhill simplex method (reflection 1,
/// expansion 2, contraction 0.5, shrink 0.5).
NelderMeadResult nelder_mead(const Objective& f, const std::vector<double>& start, const NelderMeadConfig& config = {});

double logit(double p);
double expit(double x);

using ParamList = std::vector<std::pair<std::string, double>>;

struct FitResult {
    ParamList estimates;
    double loglik = 0.0;
    ParamList se;
    bool converged = false;
    std::size_t iterations = 0;

    double get(const std::string& name) const;
};

/// Starting value solving mean(sample) = (1 - p^k) / (q p^k), clamped to [0.05, 0.95].
double moment_start_iid(const Sample& sample, unsigned k);

FitResult fit_iid(const Sample& sample, unsigned k, const NelderMeadConfig& config = {});

/// Fits (alpha, beta) with the first trial drawn from the stationary law.
/// Estimates are reported as p, alpha, beta with p the stationary value.
FitResult fit_markov(const Sample& sample, unsigned k, const NelderMeadConfig& config = {});

using Fitter = std::function<FitResult(const Sample&)>;

struct BootstrapResult {
    ParamList se;
    std::size_t failures = 0;
};

/// Nonparametric bootstrap. Resample b draws from stream.substream(b);
/// non-converged refits are dropped, and more than 20% drops is an error.
BootstrapResult bootstrap_se(const Sample& sample, const Fitter& fitter, std::size_t B, const SeededStream& stream);

}  // namespace runstat
