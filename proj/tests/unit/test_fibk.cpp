#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "runstat/error.hpp"
#include "runstat/fibk.hpp"

using namespace runstat;

TEST(FibK, PrintedSequences) {
    EXPECT_EQ(fib_k(2, 6), 8);
    EXPECT_EQ(fib_k(3, 9), 81);
    EXPECT_EQ(fib_k(4, 9), 108);
    EXPECT_EQ(fib_k(5, 9), 120);
    for (std::uint64_t n = 1; n <= 50; ++n) EXPECT_EQ(fib_k(1, n), 1);
}

TEST(FibK, DoublingRegime) {
    for (unsigned k = 2; k <= 12; ++k) {
        for (std::uint64_t n = 2; n <= k + 1; ++n) EXPECT_EQ(fib_k(k, n), std::int64_t{1} << (n - 2));
    }
}

TEST(FibK, OverflowIsAnError) {
    EXPECT_THROW(fib_k(2, 200), OverflowError);
    EXPECT_NO_THROW(fib_k(2, 92));
    EXPECT_THROW(fib_k(2, 93), OverflowError);
}

TEST(FibK, InvalidArguments) {
    EXPECT_THROW(fib_k(0, 3), InvalidArgument);
    EXPECT_THROW(fib_k(33, 3), InvalidArgument);
    EXPECT_THROW(fib_k(2, 0), InvalidArgument);
}

TEST(FibK, CacheIsMonotone) {
    FibOrderK f(4);
    EXPECT_EQ(f.at(30), fib_k(4, 30));
    EXPECT_EQ(f.at(5), 8);
    for (std::uint64_t n = 2; n < 60; ++n) EXPECT_LE(f.at(n), f.at(n + 1));
}

TEST(CharRoots, Quadratic) {
    const auto r = char_roots(2);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0].real(), (1 + std::sqrt(5.0)) / 2, 1e-13);
    EXPECT_NEAR(r[1].real(), (1 - std::sqrt(5.0)) / 2, 1e-12);
    const auto prod = r[0] * r[1];
    EXPECT_NEAR(prod.real(), -1.0, 1e-12);
    EXPECT_NEAR(prod.imag(), 0.0, 1e-12);
}

TEST(CharRoots, TribonacciDominantRoot) {
    double x = 2.0;
    for (int i = 0; i < 60; ++i) x -= (x * x * x - x * x - x - 1) / (3 * x * x - 2 * x - 1);
    EXPECT_NEAR(x, 1.8392867552, 1e-10);
    EXPECT_NEAR(char_roots(3)[0].real(), x, 1e-13);
}

TEST(CharRoots, ResidualsAndDominance) {
    double prev = 1.0;
    for (unsigned k = 2; k <= 32; ++k) {
        const auto roots = char_roots(k);
        ASSERT_EQ(roots.size(), k);
        int in_band = 0;
        for (const auto& z : roots) {
            std::complex<double> p = 1.0;
            for (unsigned i = 0; i < k; ++i) p = p * z - 1.0;
            const double scale = std::max(1.0, std::pow(std::abs(z), k));
            EXPECT_LT(std::abs(p) / scale, 1e-10) << "k=" << k;
            if (std::fabs(z.imag()) < 1e-12 && z.real() > 1.0 && z.real() < 2.0) ++in_band;
        }
        EXPECT_EQ(in_band, 1) << "k=" << k;
        const auto d = roots[0];
        EXPECT_EQ(d.imag(), 0.0);
        EXPECT_GT(d.real(), prev);
        EXPECT_LT(d.real(), 2.0);
        std::complex<double> p = 1.0;
        for (unsigned i = 0; i < k; ++i) p = p * d - 1.0;
        EXPECT_LT(std::abs(p) / std::pow(d.real(), k), 1e-13) << "k=" << k;
        prev = d.real();
    }
}

TEST(ClosedForms, DresdenExamples) {
    EXPECT_EQ(fib_k_dresden(2, 10).rounded, 55);
    EXPECT_EQ(fib_k_dresden(3, 6).rounded, 13);
    EXPECT_EQ(fib_k_dresden(2, 1).rounded, 1);
}

TEST(ClosedForms, SpickermanExamples) {
    EXPECT_EQ(fib_k_spickerman(4, 9).rounded, 108);
    EXPECT_EQ(fib_k_spickerman(5, 9).rounded, 120);
    EXPECT_EQ(fib_k_spickerman(2, 2).rounded, 1);
}

TEST(ClosedForms, MatchRecurrence) {
    for (unsigned k = 2; k <= 8; ++k) {
        for (std::uint64_t n = 1; n <= 60; ++n) {
            const double f = static_cast<double>(fib_k(k, n));
            const auto d = fib_k_dresden(k, n), s = fib_k_spickerman(k, n);
            EXPECT_LT(std::fabs(d.value - f), 1e-6 * f) << "k=" << k << " n=" << n;
            EXPECT_LT(std::fabs(s.value - f), 1e-6 * f) << "k=" << k << " n=" << n;
            EXPECT_LT(std::fabs(d.imag_residue), 1e-6);
        }
    }
}

TEST(ClosedForms, OverflowReported) {
    EXPECT_THROW(fib_k_dresden(2, 200), OverflowError);
    EXPECT_THROW(fib_k_spickerman(2, 200), OverflowError);
}
