#include "runstat/run_counts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "runstat/error.hpp"

namespace runstat {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw InvalidArgument("binary sequence entries must be 0 or 1");
    }
}

BinarySequence BinarySequence::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw InvalidArgument("binary sequence may contain only '0' and '1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinarySequence(std::move(bits));
}

std::size_t count_runs(const BinarySequence& s, unsigned k, Scheme scheme) {
    if (k < 1) throw InvalidArgument("run length k must be >= 1");
    RunScanner scan(k, scheme);
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.size(); ++i) count += scan.push(s[i]) ? 1 : 0;
    return count;
}

std::optional<std::size_t> first_occurrence_index(const BinarySequence& s, unsigned k, unsigned r, Scheme scheme) {
    if (k < 1) throw InvalidArgument("run length k must be >= 1");
    if (r < 1) throw InvalidArgument("occurrence index r must be >= 1");
    RunScanner scan(k, scheme);
    unsigned seen = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (scan.push(s[i]) && ++seen == r) return i + 1;
    }
    return std::nullopt;
}

std::size_t counts_max_support(const CountsQuery& q) {
    const auto f = renewal_factors(q.model, q.k, q.scheme);
    const std::size_t first = f.first.valuation(), gap = f.inter.valuation();
    if (first > q.n) return 0;
    return 1 + (q.n - first) / gap;
}

Pmf counts_pmf_duality(const CountsQuery& q) {
    const std::size_t xmax = counts_max_support(q);
    const auto table = trk_recursion_table(q.model, q.k, q.scheme, static_cast<unsigned>(xmax + 1), q.n);
    std::vector<double> cdf(xmax + 2, 0.0);
    cdf[0] = 1.0;
    for (std::size_t r = 1; r <= xmax + 1; ++r) {
        double s = 0.0;
        for (double v : table[r]) s += v;
        cdf[r] = s;
    }
    std::vector<double> probs(xmax + 1);
    for (std::size_t x = 0; x <= xmax; ++x) probs[x] = cdf[x] - cdf[x + 1];
    Pmf out = finalize_pmf(0, std::move(probs));
    out.tail = 0.0;  // support is bounded by counts_max_support
    return out;
}

Pmf counts_pmf_recursive(const CountsQuery& q) {
    // G(z,w) = [de - he + w(he - da)] / [(1-z) d (e - wa)] with H = h/d, A = a/e.
    const auto f = renewal_factors(q.model, q.k, q.scheme);
    const Poly& h = f.first.num();
    const Poly& d = f.first.den();
    const Poly& a = f.inter.num();
    const Poly& e = f.inter.den();
    const Poly one_minus_z{1.0, -1.0};
    const Poly n0 = d * e - h * e;
    const Poly n1 = h * e - d * a;
    const Poly q0 = one_minus_z * d * e;
    const Poly q1 = -(one_minus_z * d * a);

    const std::size_t width = counts_max_support(q) + 1;
    std::vector<std::vector<double>> g(q.n + 1, std::vector<double>(width, 0.0));
    for (std::size_t n = 0; n <= q.n; ++n) {
        auto& cur = g[n];
        cur[0] = n0[n];
        if (width > 1) cur[1] = n1[n];
        for (std::size_t j = 1; j <= n; ++j) {
            const double c0 = q0[j], c1 = q1[j];
            if (c0 == 0.0 && c1 == 0.0) continue;
            const auto& prev = g[n - j];
            for (std::size_t x = 0; x < width; ++x) {
                double t = c0 * prev[x];
                if (x > 0) t += c1 * prev[x - 1];
                cur[x] -= t;
            }
        }
    }
    Pmf out = finalize_pmf(0, std::move(g[q.n]));
    out.tail = 0.0;
    return out;
}

Pmf counts_pmf(const CountsQuery& q) {
    Pmf dual = counts_pmf_duality(q);
    const Pmf rec = counts_pmf_recursive(q);
    const double dev = max_abs_diff(dual, rec);
    if (!(dev <= 1e-9)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "N_%zu (k=%u, scheme %s): duality and recursion paths differ by %.3e", q.n, q.k,
                      std::string(scheme_name(q.scheme)).c_str(), dev);
        throw ConsistencyError(buf, dev);
    }
    return dual;
}

Moments counts_moments(const CountsQuery& q) {
    const Pmf pmf = counts_pmf(q);
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t x = 0; x < pmf.probs.size(); ++x) {
        const double xv = static_cast<double>(x);
        m1 += xv * pmf.probs[x];
        m2 += xv * xv * pmf.probs[x];
    }
    return {m1, m2};
}

}  // namespace runstat
