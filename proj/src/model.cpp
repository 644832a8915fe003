#include "runstat/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "runstat/error.hpp"

namespace runstat {

namespace {

void require_open_unit(double x, const char* name) {
    if (!(x > 0.0 && x < 1.0)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s must lie in the open interval (0, 1), got %.17g", name, x);
        throw InvalidArgument(buf);
    }
}

}  // namespace

TrialModel TrialModel::iid(double p) {
    require_open_unit(p, "p");
    return TrialModel(IID{p});
}

TrialModel TrialModel::markov(double p1, double alpha, double beta) {
    require_open_unit(p1, "p1");
    require_open_unit(alpha, "alpha");
    require_open_unit(beta, "beta");
    return TrialModel(Markov{p1, alpha, beta});
}

TrialModel TrialModel::markov_stationary(double alpha, double beta) {
    require_open_unit(alpha, "alpha");
    require_open_unit(beta, "beta");
    return markov(p_stationary(alpha, beta), alpha, beta);
}

double TrialModel::p_first() const noexcept {
    return is_iid() ? std::get<IID>(law_).p : std::get<Markov>(law_).p1;
}

double TrialModel::succ_after_success() const noexcept {
    return is_iid() ? std::get<IID>(law_).p : std::get<Markov>(law_).alpha;
}

double TrialModel::succ_after_failure() const noexcept {
    return is_iid() ? std::get<IID>(law_).p : 1.0 - std::get<Markov>(law_).beta;
}

TrialModel TrialModel::restarted(double p1) const {
    if (is_iid()) return *this;
    const auto& m = std::get<Markov>(law_);
    return markov(p1, m.alpha, m.beta);
}

std::string TrialModel::describe() const {
    char buf[128];
    if (is_iid()) {
        std::snprintf(buf, sizeof buf, "iid(p=%.17g)", as_iid().p);
    } else {
        const auto& m = as_markov();
        std::snprintf(buf, sizeof buf, "markov(p1=%.17g, alpha=%.17g, beta=%.17g)", m.p1, m.alpha, m.beta);
    }
    return buf;
}

double p_stationary(double alpha, double beta) { return (1.0 - beta) / (2.0 - alpha - beta); }

double Pmf::total() const noexcept {
    double s = 0.0;
    for (double x : probs) s += x;
    return s + tail;
}

double Pmf::cdf(std::size_t x) const noexcept {
    if (x < offset) return 0.0;
    double s = 0.0;
    const std::size_t hi = std::min(x - offset + 1, probs.size());
    for (std::size_t i = 0; i < hi; ++i) s += probs[i];
    return s;
}

Pmf finalize_pmf(std::size_t offset, std::vector<double> probs) {
    double sum = 0.0;
    for (double& x : probs) {
        if (!std::isfinite(x)) throw NumericalError("probability table contains a non-finite entry");
        if (x < 0.0) {
            if (x < -1e-12) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "probability table entry %.3e is negative beyond round-off", x);
                throw NumericalError(buf);
            }
            x = 0.0;
        }
        sum += x;
    }
    if (sum > 1.0 + 1e-9) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "probability table sums to %.17g", sum);
        throw NumericalError(buf);
    }
    Pmf out;
    out.offset = offset;
    out.probs = std::move(probs);
    out.tail = std::max(0.0, 1.0 - sum);
    return out;
}

double max_abs_diff(const Pmf& a, const Pmf& b) {
    const std::size_t lo = std::min(a.offset, b.offset);
    const std::size_t hi = std::max(a.offset + a.probs.size(), b.offset + b.probs.size());
    double d = 0.0;
    for (std::size_t x = lo; x < hi; ++x) d = std::max(d, std::fabs(a.at(x) - b.at(x)));
    return d;
}

double total_variation(const Pmf& a, const Pmf& b) {
    const std::size_t lo = std::min(a.offset, b.offset);
    const std::size_t hi = std::max(a.offset + a.probs.size(), b.offset + b.probs.size());
    double s = 0.0;
    for (std::size_t x = lo; x < hi; ++x) s += std::fabs(a.at(x) - b.at(x));
    s += std::fabs(a.tail - b.tail);
    return 0.5 * s;
}

}  // namespace runstat
