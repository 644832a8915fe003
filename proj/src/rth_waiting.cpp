#include "runstat/rth_waiting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "runstat/error.hpp"
#include "runstat/geometric.hpp"

namespace runstat {

std::string_view scheme_name(Scheme s) noexcept {
    switch (s) {
        case Scheme::NonOverlapping: return "I";
        case Scheme::AtLeast: return "II";
        case Scheme::Overlapping: return "III";
    }
    return "?";
}

Scheme parse_scheme(std::string_view t) {
    if (t == "I" || t == "1" || t == "i" || t == "non-overlapping") return Scheme::NonOverlapping;
    if (t == "II" || t == "2" || t == "ii" || t == "at-least") return Scheme::AtLeast;
    if (t == "III" || t == "3" || t == "iii" || t == "overlapping") return Scheme::Overlapping;
    throw InvalidArgument("unknown counting scheme '" + std::string(t) + "' (expected I, II or III)");
}

RenewalFactors renewal_factors(const TrialModel& model, unsigned k, Scheme scheme) {
    if (k < 1) throw InvalidArgument("run length k must be >= 1");
    RationalGF first = vk_pgf(model, k);
    const double a = model.succ_after_success();
    switch (scheme) {
        case Scheme::NonOverlapping:
            return {first, first_run_pgf_after(model, k, true)};
        case Scheme::AtLeast: {
            // geometric wait for the failure that ends the block, then a fresh run
            const RationalGF to_failure(Poly{0.0, 1.0 - a}, Poly{1.0, -a});
            return {first, to_failure * first_run_pgf_after(model, k, false)};
        }
        case Scheme::Overlapping: {
            const RationalGF after_fail = first_run_pgf_after(model, k, false);
            const RationalGF inter =
                RationalGF(Poly{0.0, a}) + RationalGF(Poly{0.0, 1.0 - a}) * after_fail;
            return {first, inter};
        }
    }
    throw InvalidArgument("unknown scheme");
}

namespace {

void require_r(unsigned r) {
    if (r < 1) throw InvalidArgument("occurrence index r must be >= 1");
}

}  // namespace

RationalGF trk_pgf(const RthQuery& q) {
    require_r(q.r);
    const auto f = renewal_factors(q.model, q.k, q.scheme);
    RationalGF g = f.first * rational_pow(f.inter, q.r - 1);
    // per factor: the expanded denominator nearly vanishes at 1 when p^k is small
    const double mass = f.first.eval(1.0) * std::pow(f.inter.eval(1.0), static_cast<double>(q.r - 1));
    if (!(std::fabs(mass - 1.0) <= 1e-9)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "pgf of T_{%u,%u} scheme %s has mass %.17g at z=1", q.r, q.k,
                      std::string(scheme_name(q.scheme)).c_str(), mass);
        throw ConsistencyError(buf, std::fabs(mass - 1.0));
    }
    return g;
}

std::vector<std::vector<double>> trk_recursion_table(const TrialModel& model, unsigned k, Scheme scheme,
                                                     unsigned rmax, std::size_t nmax) {
    const auto f = renewal_factors(model, k, scheme);
    std::vector<std::vector<double>> h(rmax + 1, std::vector<double>(nmax + 1, 0.0));
    h[0][0] = 1.0;
    if (rmax == 0) return h;
    h[1] = series_coeffs(f.first, nmax);
    const auto& an = f.inter.num().coeffs();
    const auto& ad = f.inter.den().coeffs();
    for (unsigned r = 2; r <= rmax; ++r) {
        const auto& prev = h[r - 1];
        auto& cur = h[r];
        for (std::size_t n = 0; n <= nmax; ++n) {
            double acc = 0.0;
            for (std::size_t j = 0; j < an.size() && j <= n; ++j) acc += an[j] * prev[n - j];
            for (std::size_t j = 1; j < ad.size() && j <= n; ++j) acc -= ad[j] * cur[n - j];
            cur[n] = acc;
        }
    }
    return h;
}

namespace {

Pmf pmf_from_coeffs(const std::vector<double>& c, std::size_t offset) {
    if (offset >= c.size()) {
        Pmf out;
        out.offset = offset;
        out.tail = 1.0;
        return out;
    }
    return finalize_pmf(offset, std::vector<double>(c.begin() + static_cast<std::ptrdiff_t>(offset), c.end()));
}

}  // namespace

std::size_t trk_min_support(const RthQuery& q) {
    require_r(q.r);
    const auto f = renewal_factors(q.model, q.k, q.scheme);
    return f.first.valuation() + static_cast<std::size_t>(q.r - 1) * f.inter.valuation();
}

Pmf trk_pmf_recursive(const RthQuery& q, std::size_t nmax) {
    require_r(q.r);
    const auto table = trk_recursion_table(q.model, q.k, q.scheme, q.r, nmax);
    return pmf_from_coeffs(table[q.r], trk_min_support(q));
}

Pmf trk_pmf_series(const RthQuery& q, std::size_t nmax) {
    const RationalGF g = trk_pgf(q);
    return pmf_from_coeffs(series_coeffs(g, nmax), g.valuation());
}

Pmf trk_pmf(const RthQuery& q, std::size_t nmax) {
    Pmf series = trk_pmf_series(q, nmax);
    const Pmf rec = trk_pmf_recursive(q, nmax);
    const double dev = max_abs_diff(series, rec);
    if (!(dev <= 1e-9)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "T_{%u,%u} scheme %s: series and recursion paths differ by %.3e", q.r, q.k,
                      std::string(scheme_name(q.scheme)).c_str(), dev);
        throw ConsistencyError(buf, dev);
    }
    return series;
}

std::vector<double> trk_tail(const RthQuery& q, std::size_t nmax) {
    const Pmf pmf = trk_pmf(q, nmax);
    std::vector<double> tail(nmax + 1);
    double cum = 0.0;
    for (std::size_t n = 0; n <= nmax; ++n) {
        cum += pmf.at(n);
        tail[n] = std::max(0.0, 1.0 - cum);
    }
    return tail;
}

std::vector<Moments> trk_moments(const TrialModel& model, unsigned k, Scheme scheme, unsigned rmax) {
    // T_r = first + (r - 1) independent inter-occurrence gaps
    const auto f = renewal_factors(model, k, scheme);
    const GfMoments a = gf_moments_at_one(f.first);
    const GfMoments b = gf_moments_at_one(f.inter);
    const double var_a = a.second_moment() - a.mean * a.mean;
    const double var_b = b.second_moment() - b.mean * b.mean;
    std::vector<Moments> out;
    out.reserve(rmax);
    for (unsigned r = 1; r <= rmax; ++r) {
        const double gaps = static_cast<double>(r - 1);
        const double mean = a.mean + gaps * b.mean;
        out.push_back({mean, var_a + gaps * var_b + mean * mean});
    }
    return out;
}

}  // namespace runstat
