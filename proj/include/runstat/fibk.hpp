#pragma once

#include <complex>
#include <cstdint>
#include <mutex>
#include <vector>

namespace runstat {

/// Generalized Fibonacci numbers of order k: f_1 = 1, f_i = 0 for i < 1,
/// f_i = f_{i-1} + ... + f_{i-k}. The cache grows on demand and is guarded,
/// so a shared instance behaves as a pure function.
class FibOrderK {
public:
    static constexpr unsigned kMaxOrder = 32;

    explicit FibOrderK(unsigned k);

    unsigned order() const noexcept { return k_; }

    /// f_{k,n} for n >= 1. Throws OverflowError past int64 range.
    std::int64_t at(std::uint64_t n) const;

private:
    unsigned k_;
    mutable std::mutex mu_;
    mutable std::vector<std::int64_t> cache_;  // cache_[i] = f_{k,i+1}
    mutable std::int64_t window_sum_ = 0;      // sum of the last k cached terms
};

std::int64_t fib_k(unsigned k, std::uint64_t n);

/// All k roots of x^k - x^{k-1} - ... - x - 1 (2 <= k <= 32). The dominant
/// real root in (1, 2) comes first, Newton-polished and with zero imaginary
/// part. Throws NumericalError when the root finder does not converge.
std::vector<std::complex<double>> char_roots(unsigned k);

/// Result of a closed-form Fibonacci evaluation.
struct FibClosedForm {
    double value;          ///< real part of the root sum
    double imag_residue;   ///< discarded imaginary part
    std::int64_t rounded;  ///< nearest integer
};

/// Root-sum weights (alpha-1)/(2+(k+1)(alpha-2)).
FibClosedForm fib_k_dresden(unsigned k, std::uint64_t n);

/// Root-sum weights (alpha^{k+1}-alpha^k)/(2 alpha^k-(k+1)).
FibClosedForm fib_k_spickerman(unsigned k, std::uint64_t n);

}  // namespace runstat
