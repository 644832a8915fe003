#include "runstat/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "runstat/error.hpp"

namespace runstat {

namespace {

void require_k(unsigned k) {
    if (k < 1) throw InvalidArgument("run length k must be >= 1");
}

// h_1..h_m (index 0 unused).
std::vector<double> h_sequence(const TrialModel& model, unsigned k, std::size_t m) {
    std::vector<double> h(m + 1, 0.0);
    if (m == 0) return h;
    if (model.is_iid()) {
        const double p = model.as_iid().p, q = 1.0 - p;
        h[1] = 1.0;
        for (std::size_t v = 2; v <= m; ++v) {
            double acc = 0.0, pw = 1.0;
            for (unsigned i = 1; i <= k && i < v; ++i) {
                acc += pw * h[v - i];
                pw *= p;
            }
            h[v] = q * acc;
        }
        return h;
    }
    const auto& mk = model.as_markov();
    const double c = (1.0 - mk.alpha) * (1.0 - mk.beta);
    h[1] = mk.p1;
    if (m >= 2) h[2] = (1.0 - mk.p1) * (1.0 - mk.beta);
    for (std::size_t v = 3; v <= m; ++v) {
        double acc = 0.0, aw = 1.0;
        for (unsigned i = 0; i + 2 <= k && i + 2 < v; ++i) {
            acc += aw * h[v - i - 2];
            aw *= mk.alpha;
        }
        h[v] = mk.beta * h[v - 1] + c * acc;
    }
    return h;
}

}  // namespace

Pmf vk_pmf(const TrialModel& model, unsigned k, std::size_t vmax) {
    require_k(k);
    if (vmax < k) throw InvalidArgument("vmax must be >= k");
    const std::size_t m = vmax - k + 1;
    const auto h = h_sequence(model, k, m);
    const double lead = model.is_iid() ? std::pow(model.as_iid().p, k) : std::pow(model.as_markov().alpha, k - 1);
    std::vector<double> probs(m);
    for (std::size_t i = 0; i < m; ++i) probs[i] = h[i + 1] * lead;
    return finalize_pmf(k, std::move(probs));
}

RationalGF vk_pgf(const TrialModel& model, unsigned k) {
    require_k(k);
    std::vector<double> den(k + 1, 0.0);
    den[0] = 1.0;
    if (model.is_iid()) {
        const double p = model.as_iid().p, q = 1.0 - p;
        double pw = 1.0;
        for (unsigned i = 1; i <= k; ++i) {
            den[i] = -q * pw;
            pw *= p;
        }
        return RationalGF(Poly::monomial(std::pow(p, k), k), Poly(std::move(den)));
    }
    const auto& mk = model.as_markov();
    const double q1 = 1.0 - mk.p1;
    const double c = (1.0 - mk.alpha) * (1.0 - mk.beta);
    den[1] = -mk.beta;
    double aw = 1.0;
    for (unsigned i = 2; i <= k; ++i) {
        den[i] = -aw * c;
        aw *= mk.alpha;
    }
    const double lead = std::pow(mk.alpha, k - 1);
    std::vector<double> num(k + 2, 0.0);
    num[k] = lead * mk.p1;
    num[k + 1] = lead * (q1 - mk.beta);
    return RationalGF(Poly(std::move(num)), Poly(std::move(den)));
}

RationalGF first_run_pgf_after(const TrialModel& model, unsigned k, bool prev_success) {
    if (model.is_iid()) return vk_pgf(model, k);
    const double p1 = prev_success ? model.succ_after_success() : model.succ_after_failure();
    return vk_pgf(model.restarted(p1), k);
}

double vk_pmf_closedform_k2(const TrialModel& model, std::size_t v) {
    if (v < 2) throw InvalidArgument("closed form needs v >= 2");
    if (model.is_iid()) {
        const double p = model.as_iid().p, q = 1.0 - p;
        const double disc = q * q + 4.0 * p * q;
        if (!(disc > 0.0)) throw NumericalError("non-positive discriminant");
        const double s = std::sqrt(disc);
        const double r1 = (q + s) / 2.0, r2 = (q - s) / 2.0;
        const double e = static_cast<double>(v - 1);
        return p * p * (std::pow(r1, e) - std::pow(r2, e)) / (r1 - r2);
    }
    const auto& mk = model.as_markov();
    const double q1 = 1.0 - mk.p1;
    const double c = (1.0 - mk.alpha) * (1.0 - mk.beta);
    const double disc = mk.beta * mk.beta + 4.0 * c;
    if (!(disc > 0.0)) throw NumericalError("non-positive discriminant");
    const double s = std::sqrt(disc);
    const double r1 = (mk.beta + s) / 2.0, r2 = (mk.beta - s) / 2.0;
    const double h2 = q1 * (1.0 - mk.beta);
    const double a = (h2 - mk.p1 * r2) / (r1 - r2);
    const double b = (mk.p1 * r1 - h2) / (r1 - r2);
    const double e = static_cast<double>(v - 2);
    return mk.alpha * (a * std::pow(r1, e) + b * std::pow(r2, e));
}

std::size_t default_vmax(const TrialModel& model, unsigned k) {
    require_k(k);
    const std::size_t probe = 20 * static_cast<std::size_t>(k) + 40;
    const Pmf pmf = vk_pmf(model, k, probe);
    const std::size_t n = pmf.probs.size();
    const double a = pmf.probs[n - 2], b = pmf.probs[n - 1];
    const std::size_t floor_v = 10 * static_cast<std::size_t>(k);
    if (!(a > 0.0) || !(b > 0.0)) return floor_v;
    const double rho = b / a;
    if (!(rho < 1.0)) return kMaxDefaultVmax;
    const double need = std::ceil(std::log(1e-12) / std::log(rho));
    if (!(need < static_cast<double>(kMaxDefaultVmax))) return kMaxDefaultVmax;
    return std::max(floor_v, static_cast<std::size_t>(need));
}

Pmf longest_run_pmf(const TrialModel& model, std::size_t n) {
    // cum[k] = P(V(k) <= n) = P(L_n >= k), cum[n+1] = 0.
    std::vector<double> cum(n + 2, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        const Pmf v = vk_pmf(model, static_cast<unsigned>(k), n);
        double s = 0.0;
        for (double x : v.probs) s += x;
        cum[k] = s;
    }
    std::vector<double> probs(n + 1, 0.0);
    probs[0] = 1.0 - cum[1];
    for (std::size_t k = 1; k <= n; ++k) probs[k] = cum[k] - cum[k + 1];
    Pmf out = finalize_pmf(0, std::move(probs));
    out.tail = 0.0;  // support 0..n is complete
    return out;
}

double longest_run_recursive(const TrialModel& model, std::size_t n, unsigned k) {
    if (k > n) return 0.0;
    const RationalGF inv_one_minus_z(Poly{1.0}, Poly{1.0, -1.0});
    RationalGF g = k == 0 ? RationalGF::constant(1.0) - vk_pgf(model, 1)
                          : vk_pgf(model, k) - vk_pgf(model, k + 1);
    return series_coeffs(g * inv_one_minus_z, n)[n];
}

}  // namespace runstat
