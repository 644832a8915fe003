#include <gtest/gtest.h>

#include <cmath>

#include "runstat/error.hpp"
#include "runstat/geometric.hpp"
#include "runstat/oracle.hpp"
#include "runstat/polyseries.hpp"
#include "runstat/rth_waiting.hpp"
#include "test_support.hpp"

using namespace runstat;
using testing_support::Gen;

TEST(Poly, DifferenceOfSquares) {
    const Poly r = Poly{1, 1} * Poly{1, -1};
    EXPECT_EQ(r, (Poly{1, 0, -1}));
}

TEST(Poly, AddZeroIsIdentity) {
    const Poly p{0.3, -2, 5};
    EXPECT_EQ(p + Poly{}, p);
}

TEST(Poly, TrailingZerosTrimmed) {
    EXPECT_EQ(Poly({1, 2, 0, 0}).size(), 2u);
    EXPECT_TRUE(Poly({0, 0, 0}).is_zero());
    EXPECT_EQ(Poly({0, 0, 0}).size(), 1u);
    EXPECT_EQ(Poly({1e-300}).size(), 1u);
    EXPECT_FALSE(Poly({1e-300}).is_zero());
}

TEST(Poly, RejectsNonFinite) { EXPECT_THROW(Poly({1.0, NAN}), InvalidArgument); }

TEST(Poly, VkDenominatorTimesOne) {
    const double p = 0.5, q = 0.5;
    const Poly d = Poly{1, -q, -q * p} * Poly{1};
    ASSERT_EQ(d.size(), 3u);
    EXPECT_DOUBLE_EQ(d[0], 1.0);
    EXPECT_DOUBLE_EQ(d[1], -0.5);
    EXPECT_DOUBLE_EQ(d[2], -0.25);
}

TEST(Poly, MulCommutativeAndAssociative) {
    Gen g(101);
    for (int t = 0; t < 200; ++t) {
        const Poly a = g.poly(g.integer(0, 10)), b = g.poly(g.integer(0, 10)), c = g.poly(g.integer(0, 10));
        const Poly ab = a * b, ba = b * a;
        const Poly l = (a * b) * c, r = a * (b * c);
        ASSERT_EQ(ab.size(), ba.size());
        for (std::size_t i = 0; i < ab.size(); ++i) EXPECT_NEAR(ab[i], ba[i], 1e-14);
        ASSERT_EQ(l.size(), r.size());
        for (std::size_t i = 0; i < l.size(); ++i) EXPECT_NEAR(l[i], r[i], 1e-14 * std::max(1.0, std::fabs(l[i])));
    }
}

TEST(RationalGF, NormalizesConstantTerm) {
    const RationalGF g(Poly{2, 4}, Poly{2, 1});
    EXPECT_EQ(g.den()[0], 1.0);
    EXPECT_EQ(g.num()[0], 1.0);
    EXPECT_EQ(g.num()[1], 2.0);
    EXPECT_EQ(g.den()[1], 0.5);
}

TEST(RationalGF, ZeroDenominatorConstantRejected) {
    EXPECT_THROW(RationalGF(Poly{1}, Poly{0, 1}), InvalidArgument);
}

TEST(RationalGF, MulByOneIsIdentity) {
    const RationalGF a = vk_pgf(TrialModel::iid(0.4), 3);
    const RationalGF b = a * RationalGF::constant(1.0);
    const auto ca = series_coeffs(a, 30), cb = series_coeffs(b, 30);
    for (std::size_t i = 0; i < ca.size(); ++i) EXPECT_DOUBLE_EQ(ca[i], cb[i]);
}

TEST(RationalGF, AdditiveInverse) {
    const RationalGF a(Poly{1}, Poly{1, -1});
    const RationalGF s = a + (-a);
    for (double c : series_coeffs(s, 20)) EXPECT_EQ(c, 0.0);
}

TEST(RationalGF, SquareOfVkCoefficient) {
    const RationalGF g = vk_pgf(TrialModel::iid(0.5), 2);
    EXPECT_NEAR(series_coeffs(g * g, 4)[4], 1.0 / 16.0, 1e-15);
}

TEST(RationalPow, EmptyAndUnitPowers) {
    const RationalGF a = vk_pgf(TrialModel::iid(0.3), 2);
    const auto c0 = series_coeffs(rational_pow(a, 0), 10);
    EXPECT_EQ(c0[0], 1.0);
    for (std::size_t i = 1; i < c0.size(); ++i) EXPECT_EQ(c0[i], 0.0);
    const auto c1 = series_coeffs(rational_pow(a, 1), 10), ca = series_coeffs(a, 10);
    for (std::size_t i = 0; i < ca.size(); ++i) EXPECT_DOUBLE_EQ(c1[i], ca[i]);
}

// 11011 and 01111 both complete their second non-overlapping 2-run at trial 5.
TEST(RationalPow, SecondNonOverlappingRun) {
    const RationalGF a(Poly{0, 0, 0.25}, Poly{1, -0.5, -0.25});
    const Pmf oracle = enumerate_exact(TrialModel::iid(0.5), 5, RthRunWait{2, 2, Scheme::NonOverlapping});
    EXPECT_NEAR(series_coeffs(rational_pow(a, 2), 5)[5], oracle.at(5), 1e-15);
    EXPECT_NEAR(oracle.at(5), 2.0 / 32.0, 1e-15);
}

TEST(RationalPow, MatchesRepeatedMultiplication) {
    Gen g(202);
    for (int t = 0; t < 40; ++t) {
        Poly den = g.poly(g.integer(1, 8), 0.3);
        std::vector<double> dc = den.coeffs();
        dc[0] = 1.0;
        const RationalGF a(g.poly(g.integer(0, 8)), Poly(dc));
        for (unsigned e = 0; e <= 5; ++e) {
            RationalGF prod = RationalGF::constant(1.0);
            for (unsigned i = 0; i < e; ++i) prod = prod * a;
            const auto x = series_coeffs(rational_pow(a, e), 25), y = series_coeffs(prod, 25);
            for (std::size_t i = 0; i < x.size(); ++i) {
                EXPECT_NEAR(x[i], y[i], 1e-12 * std::max(1.0, std::fabs(y[i])));
            }
        }
    }
}

TEST(SeriesCoeffs, FibonacciIdentityAtHalf) {
    const double p = 0.5, q = 0.5;
    const RationalGF g(Poly{0, 0, p * p}, Poly{1, -q, -q * p});
    EXPECT_NEAR(series_coeffs(g, 5)[5], 3.0 / 32.0, 1e-15);
}

TEST(SeriesCoeffs, GeometricSeries) {
    for (double c : series_coeffs(RationalGF(Poly{1}, Poly{1, -1}), 50)) EXPECT_EQ(c, 1.0);
}

TEST(SeriesCoeffs, Fibonacci) {
    const auto c = series_coeffs(RationalGF(Poly{0, 1}, Poly{1, -1, -1}), 6);
    const std::vector<double> want{0, 1, 1, 2, 3, 5, 8};
    EXPECT_EQ(c, want);
}

TEST(SeriesCoeffs, ResummationMatchesEvaluation) {
    Gen g(303);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> dc = g.poly(g.integer(1, 6), 1.0).coeffs();
        // keep every root outside |z| < 0.9 so the series converges fast on (0, 0.5)
        double s = 0.0;
        for (std::size_t i = 1; i < dc.size(); ++i) s += std::fabs(dc[i]) * std::pow(0.9, static_cast<double>(i));
        for (std::size_t i = 1; i < dc.size(); ++i) dc[i] *= 0.9 / std::max(1.0, s / 0.9);
        dc[0] = 1.0;
        const RationalGF r(g.poly(g.integer(0, 6)), Poly(dc));
        const auto c = series_coeffs(r, 400);
        for (int j = 0; j < 5; ++j) {
            const double z = g.uniform(0.0, 0.5);
            double acc = 0.0, zn = 1.0;
            for (double x : c) {
                acc += x * zn;
                zn *= z;
            }
            const double direct = r.eval(z);
            EXPECT_LE(std::fabs(acc - direct), 1e-10 * std::max(1.0, std::fabs(direct)));
        }
    }
}

TEST(GfMoments, VkMeanAtHalf) {
    const GfMoments m = gf_moments_at_one(vk_pgf(TrialModel::iid(0.5), 2));
    EXPECT_NEAR(m.mass, 1.0, 1e-14);
    EXPECT_NEAR(m.mean, 6.0, 1e-12);
}

TEST(GfMoments, ConstantOne) {
    const GfMoments m = gf_moments_at_one(RationalGF::constant(1.0));
    EXPECT_EQ(m.mass, 1.0);
    EXPECT_EQ(m.mean, 0.0);
    EXPECT_EQ(m.second_factorial_moment, 0.0);
}

TEST(GfMoments, MarkovCollapseMean) {
    const GfMoments m = gf_moments_at_one(vk_pgf(TrialModel::markov(0.5, 0.5, 0.5), 2));
    EXPECT_NEAR(m.mean, 6.0, 1e-12);
}

TEST(GfMoments, PoleAtOneIsReported) {
    try {
        gf_moments_at_one(RationalGF(Poly{1}, Poly{1, -1}));
        FAIL() << "expected a pole error";
    } catch (const PoleError& e) {
        EXPECT_EQ(e.root(), 1.0);
    }
}

// Mean from derivatives vs the sum of n * c_n truncated at 400. The part
// beyond 400 is bounded by continuing the series until its geometric decay
// has set in.
TEST(GfMoments, MeanMatchesTruncatedSeries) {
    constexpr std::size_t nmax = 400;
    auto check = [](const RationalGF& g, const std::string& label) {
        std::vector<double> c;
        std::size_t len = 4000;
        double rho = 1.0;
        for (;; len *= 2) {
            c = series_coeffs(g, len);
            rho = c[len] > 1e-200 ? c[len] / c[len - 1] : 0.0;
            const double n = static_cast<double>(len);
            if (rho < 1.0 && c[len] * n / ((1.0 - rho) * (1.0 - rho)) < 1e-13) break;
            ASSERT_LT(len, std::size_t{1} << 22) << label;
        }
        double partial = 0.0, tail = 0.0;
        for (std::size_t n = 0; n <= len; ++n) (n <= nmax ? partial : tail) += static_cast<double>(n) * c[n];
        const double L = static_cast<double>(len);
        tail += c[len] * rho / (1.0 - rho) * (L + 1.0 / (1.0 - rho));
        const double mean = gf_moments_at_one(g).mean;
        EXPECT_LE(std::fabs(mean - partial), 1e-8 + tail * (1.0 + 1e-9)) << label;
        EXPECT_NEAR(mean, partial + tail, 1e-8 * std::max(1.0, mean)) << label;
    };
    for (double p = 0.1; p < 0.95; p += 0.2) {
        for (unsigned k = 1; k <= 3; ++k) {
            const TrialModel m = TrialModel::iid(p);
            check(vk_pgf(m, k), m.describe() + " V");
            for (Scheme s : {Scheme::NonOverlapping, Scheme::AtLeast, Scheme::Overlapping}) {
                check(trk_pgf({m, k, 2, s}), m.describe() + " T2");
            }
        }
    }
    for (double a = 0.1; a < 0.95; a += 0.4) {
        for (double b = 0.1; b < 0.95; b += 0.4) {
            const TrialModel m = TrialModel::markov_stationary(a, b);
            for (unsigned k = 2; k <= 3; ++k) {
                check(vk_pgf(m, k), m.describe() + " V");
                for (Scheme s : {Scheme::NonOverlapping, Scheme::AtLeast, Scheme::Overlapping}) {
                    check(trk_pgf({m, k, 2, s}), m.describe() + " T2");
                }
            }
        }
    }
}
