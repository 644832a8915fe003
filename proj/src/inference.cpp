#include "runstat/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "runstat/error.hpp"
#include "runstat/geometric.hpp"

namespace runstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_sample(const Sample& sample, unsigned k) {
    if (k < 1) throw InvalidArgument("run length k must be >= 1");
    if (sample.empty()) throw InvalidArgument("sample is empty");
    for (auto v : sample) {
        if (v < k) throw InvalidArgument("observation " + std::to_string(v) + " is below the run length k");
    }
}

// value -> multiplicity, so the likelihood touches each support point once
std::vector<std::pair<std::size_t, double>> tally(const Sample& sample) {
    std::map<std::size_t, double> m;
    for (auto v : sample) m[v] += 1.0;
    return {m.begin(), m.end()};
}

double loglik_tally(const std::vector<std::pair<std::size_t, double>>& t, const TrialModel& model, unsigned k) {
    const Pmf pmf = vk_pmf(model, k, t.back().first);
    double s = 0.0;
    for (const auto& [v, c] : t) {
        const double pv = pmf.at(v);
        if (!(pv > 0.0)) return -kInf;
        s += c * std::log(pv);
    }
    return s;
}

}  // namespace

double loglik_vk(const Sample& sample, const TrialModel& model, unsigned k, bool use_closed_form) {
    validate_sample(sample, k);
    if (!use_closed_form) return loglik_tally(tally(sample), model, k);
    if (k != 2) throw InvalidArgument("the closed-form likelihood exists only for k = 2");
    double s = 0.0;
    for (const auto& [v, c] : tally(sample)) {
        const double pv = vk_pmf_closedform_k2(model, v);
        if (!(pv > 0.0)) return -kInf;
        s += c * std::log(pv);
    }
    return s;
}

double logit(double p) { return std::log(p) - std::log1p(-p); }

double expit(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

NelderMeadResult nelder_mead(const Objective& f, const std::vector<double>& start, const NelderMeadConfig& cfg) {
    const std::size_t n = start.size();
    if (n == 0) throw InvalidArgument("nelder_mead needs at least one parameter");
    const double f_start = f(start);
    if (!std::isfinite(f_start)) throw InvalidArgument("objective is not finite at the starting point");

    std::vector<std::vector<double>> x(n + 1, start);
    std::vector<double> fx(n + 1, f_start);
    for (std::size_t i = 0; i < n; ++i) {
        x[i + 1][i] += cfg.initial_step;
        fx[i + 1] = f(x[i + 1]);
    }

    auto combine = [n](const std::vector<double>& a, const std::vector<double>& b, double t) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = a[i] + t * (b[i] - a[i]);
        return r;
    };

    std::vector<std::size_t> order(n + 1);
    std::size_t iter = 0;
    bool converged = false;
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        {
            std::vector<std::vector<double>> xs(n + 1);
            std::vector<double> fs(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                xs[i] = std::move(x[order[i]]);
                fs[i] = fx[order[i]];
            }
            x = std::move(xs);
            fx = std::move(fs);
        }

        const double f_spread = fx[n] - fx[0];
        double x_spread = 0.0;
        for (std::size_t v = 1; v <= n; ++v) {
            for (std::size_t i = 0; i < n; ++i) x_spread = std::max(x_spread, std::fabs(x[v][i] - x[0][i]));
        }
        if (f_spread < cfg.tol_f || x_spread < cfg.tol_x) {
            converged = true;
            break;
        }
        if (iter >= cfg.max_iter) break;
        ++iter;

        std::vector<double> c(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < n; ++i) c[i] += x[v][i] / static_cast<double>(n);
        }
        const auto xr = combine(c, x[n], -1.0);
        const double fr = f(xr);
        if (fr < fx[0]) {
            const auto xe = combine(c, x[n], -2.0);
            const double fe = f(xe);
            if (fe < fr) {
                x[n] = xe;
                fx[n] = fe;
            } else {
                x[n] = xr;
                fx[n] = fr;
            }
            continue;
        }
        if (fr < fx[n - 1]) {
            x[n] = xr;
            fx[n] = fr;
            continue;
        }
        bool shrink = false;
        if (fr < fx[n]) {
            const auto xc = combine(c, xr, 0.5);
            const double fc = f(xc);
            if (fc <= fr) {
                x[n] = xc;
                fx[n] = fc;
            } else {
                shrink = true;
            }
        } else {
            const auto xc = combine(c, x[n], 0.5);
            const double fc = f(xc);
            if (fc < fx[n]) {
                x[n] = xc;
                fx[n] = fc;
            } else {
                shrink = true;
            }
        }
        if (shrink) {
            for (std::size_t v = 1; v <= n; ++v) {
                x[v] = combine(x[0], x[v], 0.5);
                fx[v] = f(x[v]);
            }
        }
    }
    return {x[0], fx[0], converged, iter};
}

double FitResult::get(const std::string& name) const {
    for (const auto& [k, v] : estimates) {
        if (k == name) return v;
    }
    throw InvalidArgument("fit result has no parameter '" + name + "'");
}

double moment_start_iid(const Sample& sample, unsigned k) {
    validate_sample(sample, k);
    double mean = 0.0;
    for (auto v : sample) mean += static_cast<double>(v);
    mean /= static_cast<double>(sample.size());
    auto renewal_mean = [k](double p) { return (1.0 - std::pow(p, k)) / ((1.0 - p) * std::pow(p, k)); };
    // renewal_mean decreases from +inf (p -> 0) to k (p -> 1)
    double lo = 1e-6, hi = 1.0 - 1e-9;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (renewal_mean(mid) > mean) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::clamp(0.5 * (lo + hi), 0.05, 0.95);
}

FitResult fit_iid(const Sample& sample, unsigned k, const NelderMeadConfig& config) {
    validate_sample(sample, k);
    const auto t = tally(sample);
    auto objective = [&](const std::vector<double>& z) {
        const double p = expit(z[0]);
        if (!(p > 0.0 && p < 1.0)) return kInf;
        const double ll = loglik_tally(t, TrialModel::iid(p), k);
        return std::isfinite(ll) ? -ll : kInf;
    };
    const auto nm = nelder_mead(objective, {logit(moment_start_iid(sample, k))}, config);
    FitResult out;
    out.estimates = {{"p", expit(nm.argmin[0])}};
    out.loglik = -nm.value;
    out.converged = nm.converged;
    out.iterations = nm.iterations;
    return out;
}

FitResult fit_markov(const Sample& sample, unsigned k, const NelderMeadConfig& config) {
    validate_sample(sample, k);
    const auto t = tally(sample);
    auto objective = [&](const std::vector<double>& z) {
        const double a = expit(z[0]), b = expit(z[1]);
        if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) return kInf;
        const double ll = loglik_tally(t, TrialModel::markov_stationary(a, b), k);
        return std::isfinite(ll) ? -ll : kInf;
    };
    const auto nm = nelder_mead(objective, {0.0, 0.0}, config);
    const double a = expit(nm.argmin[0]), b = expit(nm.argmin[1]);
    FitResult out;
    out.estimates = {{"p", p_stationary(a, b)}, {"alpha", a}, {"beta", b}};
    out.loglik = -nm.value;
    out.converged = nm.converged;
    out.iterations = nm.iterations;
    return out;
}

BootstrapResult bootstrap_se(const Sample& sample, const Fitter& fitter, std::size_t B, const SeededStream& stream) {
    if (B < 2) throw InvalidArgument("bootstrap needs B >= 2 resamples");
    if (sample.empty()) throw InvalidArgument("sample is empty");
    std::vector<FitResult> fits;
    fits.reserve(B);
    std::size_t failures = 0;
    Sample resample(sample.size());
    for (std::size_t b = 0; b < B; ++b) {
        SeededStream rng = stream.substream(b);
        for (auto& v : resample) v = sample[rng.index(sample.size())];
        try {
            FitResult fr = fitter(resample);
            if (fr.converged) {
                fits.push_back(std::move(fr));
            } else {
                ++failures;
            }
        } catch (const std::exception&) {
            ++failures;
        }
    }
    if (static_cast<double>(failures) > 0.2 * static_cast<double>(B)) {
        throw NumericalError("bootstrap: " + std::to_string(failures) + " of " + std::to_string(B) +
                             " refits failed to converge");
    }
    if (fits.size() < 2) throw NumericalError("bootstrap: fewer than two successful refits");

    BootstrapResult out;
    out.failures = failures;
    const double m = static_cast<double>(fits.size());
    for (std::size_t j = 0; j < fits.front().estimates.size(); ++j) {
        const double shift = fits.front().estimates[j].second;
        double mean = 0.0;
        for (const auto& f : fits) mean += f.estimates[j].second - shift;
        mean /= m;
        double ss = 0.0;
        for (const auto& f : fits) {
            const double d = f.estimates[j].second - shift - mean;
            ss += d * d;
        }
        out.se.emplace_back(fits.front().estimates[j].first, std::sqrt(ss / (m - 1.0)));
    }
    return out;
}

}  // namespace runstat
