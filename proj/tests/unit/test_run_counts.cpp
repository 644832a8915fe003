#include <gtest/gtest.h>

#include <cmath>

#include "runstat/error.hpp"
#include "runstat/oracle.hpp"
#include "runstat/run_counts.hpp"
#include "test_support.hpp"

using namespace runstat;
using testing_support::Gen;

namespace {
constexpr Scheme kSchemes[] = {Scheme::NonOverlapping, Scheme::AtLeast, Scheme::Overlapping};
}

TEST(CountRuns, TwelveTrialExample) {
    const auto s = BinarySequence::parse("011111000111");
    EXPECT_EQ(count_runs(s, 2, Scheme::NonOverlapping), 3u);
    EXPECT_EQ(count_runs(s, 2, Scheme::AtLeast), 2u);
    EXPECT_EQ(count_runs(s, 2, Scheme::Overlapping), 6u);
}

TEST(CountRuns, ShortSequences) {
    const auto s = BinarySequence::parse("111");
    EXPECT_EQ(count_runs(s, 2, Scheme::NonOverlapping), 1u);
    EXPECT_EQ(count_runs(s, 2, Scheme::AtLeast), 1u);
    EXPECT_EQ(count_runs(s, 2, Scheme::Overlapping), 2u);
    const auto zeros = BinarySequence::parse("0000000");
    for (unsigned k = 1; k <= 4; ++k) {
        for (Scheme sc : kSchemes) EXPECT_EQ(count_runs(zeros, k, sc), 0u);
    }
    for (Scheme sc : kSchemes) EXPECT_EQ(count_runs(BinarySequence{}, 1, sc), 0u);
}

TEST(CountRuns, RejectsNonBinaryText) {
    EXPECT_THROW(BinarySequence::parse("0120"), InvalidArgument);
    EXPECT_THROW(BinarySequence::parse("01 1"), InvalidArgument);
    EXPECT_EQ(BinarySequence::parse("").size(), 0u);
}

TEST(FirstOccurrence, TwelveTrialExample) {
    const auto s = BinarySequence::parse("011111000111");
    EXPECT_EQ(first_occurrence_index(s, 2, 2, Scheme::NonOverlapping), 5u);
    EXPECT_EQ(first_occurrence_index(s, 2, 2, Scheme::AtLeast), 11u);
    EXPECT_EQ(first_occurrence_index(s, 2, 2, Scheme::Overlapping), 4u);
}

TEST(FirstOccurrence, RestartAfterRun) {
    EXPECT_EQ(first_occurrence_index(BinarySequence::parse("11011"), 2, 2, Scheme::NonOverlapping), 5u);
}

TEST(FirstOccurrence, ExhaustedIsAbsent) {
    Gen g(11);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::uint8_t> bits(g.integer(0, 30));
        for (auto& b : bits) b = g.coin(0.6);
        const BinarySequence s(bits);
        const unsigned k = static_cast<unsigned>(g.integer(1, 4));
        for (Scheme sc : kSchemes) {
            const auto c = static_cast<unsigned>(count_runs(s, k, sc));
            EXPECT_FALSE(first_occurrence_index(s, k, c + 1, sc).has_value());
            if (c > 0) {
                EXPECT_TRUE(first_occurrence_index(s, k, c, sc).has_value());
            }
        }
    }
}

TEST(CountRuns, SchemeOrderingAndBlockSum) {
    Gen g(12);
    for (int t = 0; t < 500; ++t) {
        std::vector<std::uint8_t> bits(g.integer(0, 40));
        for (auto& b : bits) b = g.coin(g.uniform(0.2, 0.9));
        const BinarySequence s(bits);
        const unsigned k = static_cast<unsigned>(g.integer(1, 5));
        const auto c1 = count_runs(s, k, Scheme::NonOverlapping);
        const auto c2 = count_runs(s, k, Scheme::AtLeast);
        const auto c3 = count_runs(s, k, Scheme::Overlapping);
        EXPECT_GE(c3, c1);
        EXPECT_GE(c1, c2);
        std::size_t blocks = 0, m = 0;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            if (i < s.size() && s[i]) {
                ++m;
            } else {
                if (m >= k) blocks += m - k + 1;
                m = 0;
            }
        }
        EXPECT_EQ(c3, blocks);
    }
}

TEST(CountsPmf, NEqualsK) {
    for (double p : {0.2, 0.5, 0.8}) {
        for (unsigned k = 1; k <= 4; ++k) {
            const Pmf pmf = counts_pmf({TrialModel::iid(p), k, k, Scheme::NonOverlapping});
            EXPECT_NEAR(pmf.at(1), std::pow(p, k), 1e-14);
            EXPECT_NEAR(pmf.at(0), 1 - std::pow(p, k), 1e-14);
        }
    }
}

TEST(CountsPmf, FewerTrialsThanK) {
    for (Scheme sc : kSchemes) {
        for (std::size_t n = 0; n < 3; ++n) {
            const Pmf pmf = counts_pmf({TrialModel::iid(0.4), n, 3, sc});
            EXPECT_EQ(pmf.offset, 0u);
            EXPECT_EQ(pmf.at(0), 1.0);
            EXPECT_EQ(pmf.tail, 0.0);
        }
    }
}

TEST(CountsPmf, OracleAtTwelve) {
    const TrialModel m = TrialModel::iid(0.5);
    for (Scheme sc : kSchemes) {
        const Pmf o = enumerate_exact(m, 12, RunCount{2, sc});
        const Pmf a = counts_pmf({m, 12, 2, sc});
        EXPECT_LT(max_abs_diff(a, o), 1e-12);
        EXPECT_EQ(a.tail, 0.0);
    }
}

TEST(CountsPmf, OracleGridIncludingMarkov) {
    std::vector<TrialModel> models = testing_support::grid_models();
    models.push_back(TrialModel::markov(0.2, 0.6, 0.35));
    for (const auto& m : models) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (Scheme sc : kSchemes) {
                for (std::size_t n : {0u, 1u, 5u, 11u, 16u}) {
                    const Pmf o = enumerate_exact(m, n, RunCount{k, sc});
                    EXPECT_LT(max_abs_diff(counts_pmf({m, n, k, sc}), o), 1e-12)
                        << m.describe() << " k=" << k << " n=" << n;
                }
            }
        }
    }
}

TEST(CountsPmf, RecursionAndDualityAgree) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 4; ++k) {
            for (Scheme sc : kSchemes) {
                for (std::size_t n = 0; n <= 40; n += 7) {
                    const CountsQuery q{m, n, k, sc};
                    EXPECT_LT(max_abs_diff(counts_pmf_duality(q), counts_pmf_recursive(q)), 1e-10);
                }
            }
        }
    }
}

TEST(CountsPmf, SupportBoundIsAttained) {
    for (unsigned k = 1; k <= 4; ++k) {
        for (std::size_t n = 0; n <= 14; ++n) {
            for (Scheme sc : kSchemes) {
                std::size_t best = 0;
                for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                    std::vector<std::uint8_t> bits(n);
                    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1u;
                    best = std::max(best, count_runs(BinarySequence(bits), k, sc));
                }
                EXPECT_EQ(counts_max_support({TrialModel::iid(0.5), n, k, sc}), best) << "k=" << k << " n=" << n;
            }
        }
    }
}

TEST(CountsMoments, OverlappingMean) {
    for (double p : {0.2, 0.5, 0.8}) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (std::size_t n = k; n <= 30; n += 5) {
                const double want = static_cast<double>(n - k + 1) * std::pow(p, k);
                EXPECT_NEAR(counts_moments({TrialModel::iid(p), n, k, Scheme::Overlapping}).mean, want, 1e-12);
            }
        }
    }
}

TEST(CountsMoments, NEqualsKMean) {
    for (double p : {0.2, 0.5, 0.8}) {
        for (unsigned k = 1; k <= 4; ++k) {
            EXPECT_NEAR(counts_moments({TrialModel::iid(p), k, k, Scheme::NonOverlapping}).mean, std::pow(p, k), 1e-14);
        }
    }
}

TEST(CountsMoments, FewerTrialsThanK) {
    for (Scheme sc : kSchemes) {
        const Moments m = counts_moments({TrialModel::iid(0.5), 2, 3, sc});
        EXPECT_EQ(m.mean, 0.0);
        EXPECT_EQ(m.second_moment, 0.0);
    }
}

TEST(CountsMoments, MatchOracleSums) {
    for (const auto& m : testing_support::grid_models()) {
        for (Scheme sc : kSchemes) {
            const Pmf o = enumerate_exact(m, 14, RunCount{2, sc});
            double e1 = 0.0, e2 = 0.0;
            for (std::size_t x = 0; x < o.probs.size(); ++x) {
                e1 += x * o.probs[x];
                e2 += static_cast<double>(x * x) * o.probs[x];
            }
            const Moments mo = counts_moments({m, 14, 2, sc});
            EXPECT_NEAR(mo.mean, e1, 1e-12);
            EXPECT_NEAR(mo.second_moment, e2, 1e-11);
        }
    }
}
