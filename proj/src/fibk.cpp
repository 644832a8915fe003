#include "runstat/fibk.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "runstat/error.hpp"

namespace runstat {

FibOrderK::FibOrderK(unsigned k) : k_(k) {
    if (k < 1 || k > kMaxOrder) throw InvalidArgument("Fibonacci order k must be in [1, 32], got " + std::to_string(k));
    cache_.push_back(1);
    window_sum_ = 1;
}

std::int64_t FibOrderK::at(std::uint64_t n) const {
    if (n < 1) throw InvalidArgument("Fibonacci index must be >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    while (cache_.size() < n) {
        if (window_sum_ < 0) {
            throw OverflowError("f_{" + std::to_string(k_) + "," + std::to_string(cache_.size() + 1) +
                                "} exceeds the signed 64-bit range");
        }
        const std::int64_t next = window_sum_;
        cache_.push_back(next);
        std::int64_t w = window_sum_;
        if (cache_.size() > k_) w -= cache_[cache_.size() - 1 - k_];
        if (__builtin_add_overflow(w, next, &w)) w = -1;  // sentinel: next term overflows
        window_sum_ = w;
    }
    return cache_[n - 1];
}

std::int64_t fib_k(unsigned k, std::uint64_t n) {
    static const auto table = [] {
        std::array<std::unique_ptr<FibOrderK>, FibOrderK::kMaxOrder + 1> t{};
        for (unsigned i = 1; i <= FibOrderK::kMaxOrder; ++i) t[i] = std::make_unique<FibOrderK>(i);
        return t;
    }();
    if (k < 1 || k > FibOrderK::kMaxOrder) {
        throw InvalidArgument("Fibonacci order k must be in [1, 32], got " + std::to_string(k));
    }
    return table[k]->at(n);
}

namespace {

using cplx = std::complex<double>;

// p(x) = x^k - x^{k-1} - ... - 1 and p'(x), by Horner.
std::pair<cplx, cplx> char_poly(unsigned k, cplx x) {
    cplx p = 1.0, dp = 0.0;
    for (unsigned i = 0; i < k; ++i) {
        dp = dp * x + p;
        p = p * x - 1.0;
    }
    return {p, dp};
}

// |p(z)| / max(1, |z|^k): the residual of 1 - sum_j z^{-j} outside the unit disk.
double scaled_residual(unsigned k, cplx z) {
    return std::abs(char_poly(k, z).first) / std::max(1.0, std::pow(std::abs(z), k));
}

double polish_dominant(unsigned k) {
    // Newton on g(x) = 1 - sum_{j=1..k} x^{-j}, whose terms stay bounded.
    double x = 2.0;
    for (int it = 0; it < 200; ++it) {
        double g = 1.0, dg = 0.0, inv = 1.0 / x, pw = 1.0;
        for (unsigned j = 1; j <= k; ++j) {
            pw *= inv;
            g -= pw;
            dg += j * pw * inv;
        }
        const double step = g / dg;
        x -= step;
        if (std::fabs(step) < 1e-16 * x) break;
    }
    if (!(x > 1.0 && x < 2.0) || scaled_residual(k, cplx(x, 0.0)) > 1e-13) {
        throw NumericalError("dominant characteristic root did not converge for k=" + std::to_string(k));
    }
    return x;
}

}  // namespace

std::vector<std::complex<double>> char_roots(unsigned k) {
    if (k < 2 || k > FibOrderK::kMaxOrder) throw InvalidArgument("char_roots: k must be in [2, 32]");

    // Aberth-Ehrlich simultaneous iteration.
    std::vector<cplx> z(k);
    for (unsigned j = 0; j < k; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / k + 0.4;
        z[j] = std::polar(1.2, theta);
    }
    constexpr int kMaxIter = 500;
    bool converged = false;
    for (int it = 0; it < kMaxIter && !converged; ++it) {
        double max_step = 0.0;
        for (unsigned i = 0; i < k; ++i) {
            const auto [p, dp] = char_poly(k, z[i]);
            if (p == cplx(0.0)) continue;
            const cplx ratio = p / dp;
            cplx repulsion = 0.0;
            for (unsigned j = 0; j < k; ++j) {
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            }
            const cplx step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step < 1e-15;
    }
    // A couple of Newton steps clean up whatever precision Aberth left.
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            const auto [p, dp] = char_poly(k, r);
            if (dp != cplx(0.0)) r -= p / dp;
        }
    }
    for (const auto& r : z) {
        if (scaled_residual(k, r) >= 1e-10) {
            throw NumericalError("characteristic roots did not converge for k=" + std::to_string(k));
        }
    }
    auto dominant = std::max_element(z.begin(), z.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    std::iter_swap(z.begin(), dominant);
    z.front() = cplx(polish_dominant(k), 0.0);
    return z;
}

namespace {

template <class Weight>
FibClosedForm root_sum(unsigned k, std::uint64_t n, Weight weight) {
    if (n < 1) throw InvalidArgument("Fibonacci index must be >= 1");
    const auto roots = char_roots(k);
    cplx sum = 0.0;
    for (const auto& a : roots) sum += weight(a) * std::pow(a, static_cast<double>(n - 1));
    const double residue = std::fabs(sum.imag());
    if (residue >= 1e-6) {
        throw NumericalError("closed-form Fibonacci sum left imaginary residue " + std::to_string(residue));
    }
    const double value = sum.real();
    if (!(std::fabs(value) < 9.2e18)) throw OverflowError("closed-form Fibonacci value exceeds 64-bit range");
    return {value, residue, std::llround(value)};
}

}  // namespace

FibClosedForm fib_k_dresden(unsigned k, std::uint64_t n) {
    const double kp1 = static_cast<double>(k + 1);
    return root_sum(k, n, [kp1](cplx a) { return (a - 1.0) / (2.0 + kp1 * (a - 2.0)); });
}

FibClosedForm fib_k_spickerman(unsigned k, std::uint64_t n) {
    const double kk = static_cast<double>(k);
    return root_sum(k, n, [kk](cplx a) {
        const cplx ak = std::pow(a, kk);
        return (ak * a - ak) / (2.0 * ak - (kk + 1.0));
    });
}

}  // namespace runstat
