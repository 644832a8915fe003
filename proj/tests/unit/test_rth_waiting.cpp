#include <gtest/gtest.h>

#include <cmath>

#include "runstat/error.hpp"
#include "runstat/geometric.hpp"
#include "runstat/oracle.hpp"
#include "runstat/rth_waiting.hpp"
#include "runstat/run_counts.hpp"
#include "test_support.hpp"

using namespace runstat;

namespace {
constexpr Scheme kSchemes[] = {Scheme::NonOverlapping, Scheme::AtLeast, Scheme::Overlapping};
}

TEST(Scheme, NamesRoundTrip) {
    for (Scheme s : kSchemes) EXPECT_EQ(parse_scheme(scheme_name(s)), s);
    EXPECT_THROW(parse_scheme("IV"), InvalidArgument);
}

TEST(TrkPgf, FirstOccurrenceIsVk) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 3; ++k) {
            const auto v = series_coeffs(vk_pgf(m, k), 40);
            for (Scheme s : kSchemes) {
                const auto t = series_coeffs(trk_pgf({m, k, 1, s}), 40);
                for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(t[i], v[i], 1e-14);
            }
        }
    }
}

// P = 1/16: both 11011 and 01111 complete the second run at trial 5.
TEST(TrkPgf, SecondNonOverlappingRunAtFive) {
    const TrialModel m = TrialModel::iid(0.5);
    const double want = enumerate_exact(m, 5, RthRunWait{2, 2, Scheme::NonOverlapping}).at(5);
    EXPECT_NEAR(series_coeffs(trk_pgf({m, 2, 2, Scheme::NonOverlapping}), 5)[5], want, 1e-15);
}

TEST(TrkPgf, SecondOverlappingRunAtThree) {
    EXPECT_NEAR(series_coeffs(trk_pgf({TrialModel::iid(0.5), 2, 2, Scheme::Overlapping}), 3)[3], 0.125, 1e-15);
}

TEST(TrkPgf, UnitMass) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 4; ++k) {
            for (unsigned r = 1; r <= 6; ++r) {
                for (Scheme s : kSchemes) EXPECT_NO_THROW(trk_pgf({m, k, r, s}));
            }
        }
    }
}

TEST(TrkPmf, Examples) {
    const TrialModel m = TrialModel::iid(0.5);
    EXPECT_NEAR(trk_pmf({m, 2, 2, Scheme::NonOverlapping}, 10).at(4), 1.0 / 16.0, 1e-15);
    EXPECT_GT(trk_pmf({m, 2, 2, Scheme::AtLeast}, 20).at(11), 0.0);
    const Pmf v = vk_pmf(m, 3, 40);
    for (Scheme s : kSchemes) EXPECT_LT(max_abs_diff(trk_pmf({m, 3, 1, s}, 40), v), 1e-14);
}

TEST(TrkPmf, InvalidOccurrenceIndex) {
    EXPECT_THROW(trk_pgf({TrialModel::iid(0.5), 2, 0, Scheme::NonOverlapping}), InvalidArgument);
}

TEST(TrkPmf, RecursionPathMatchesSeries) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (unsigned r = 1; r <= 4; ++r) {
                for (Scheme s : kSchemes) {
                    const RthQuery q{m, k, r, s};
                    EXPECT_LT(max_abs_diff(trk_pmf_recursive(q, 60), trk_pmf_series(q, 60)), 1e-12);
                }
            }
        }
    }
}

TEST(TrkPmf, OracleGrid) {
    std::vector<TrialModel> models = testing_support::grid_models();
    for (const auto& m : models) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (unsigned r = 1; r <= 3; ++r) {
                for (Scheme s : kSchemes) {
                    const Pmf o = enumerate_exact(m, 16, RthRunWait{k, r, s});
                    const Pmf a = trk_pmf({m, k, r, s}, 16);
                    EXPECT_LT(total_variation(a, o), 1e-10) << m.describe() << " k=" << k << " r=" << r;
                }
            }
        }
    }
}

TEST(TrkPmf, MinimalSupportIsStructural) {
    const TrialModel m = TrialModel::iid(0.4);
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned r = 1; r <= 4; ++r) {
            EXPECT_EQ(trk_min_support({m, k, r, Scheme::NonOverlapping}), r * k);
            EXPECT_EQ(trk_min_support({m, k, r, Scheme::Overlapping}), k + r - 1);
            EXPECT_EQ(trk_min_support({m, k, r, Scheme::AtLeast}), r * k + r - 1);
        }
    }
}

TEST(TrkTail, Examples) {
    const RthQuery q{TrialModel::iid(0.5), 2, 2, Scheme::NonOverlapping};
    const auto t = trk_tail(q, 30);
    for (std::size_t n = 0; n < trk_min_support(q); ++n) EXPECT_EQ(t[n], 1.0);
    EXPECT_NEAR(t[4], 15.0 / 16.0, 1e-15);
    for (std::size_t n = 1; n < t.size(); ++n) EXPECT_LE(t[n], t[n - 1]);
}

TEST(TrkTail, SchemeOrdering) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (unsigned r = 2; r <= 4; ++r) {
                const auto t1 = trk_tail({m, k, r, Scheme::NonOverlapping}, 50);
                const auto t2 = trk_tail({m, k, r, Scheme::AtLeast}, 50);
                const auto t3 = trk_tail({m, k, r, Scheme::Overlapping}, 50);
                for (std::size_t n = 0; n <= 50; ++n) {
                    EXPECT_LE(t3[n], t1[n] + 1e-14);
                    EXPECT_LE(t1[n], t2[n] + 1e-14);
                }
            }
        }
    }
}

TEST(TrkTail, DualityWithCounts) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (Scheme s : kSchemes) {
                for (std::size_t n = 0; n <= 16; ++n) {
                    const Pmf c = enumerate_exact(m, n, RunCount{k, s});
                    double below = 0.0;
                    for (unsigned r = 1; r <= 4; ++r) {
                        below += c.at(r - 1);
                        EXPECT_NEAR(trk_tail({m, k, r, s}, 16)[n], below, 1e-10);
                    }
                }
            }
        }
    }
}

TEST(TrkMoments, Examples) {
    const TrialModel m = TrialModel::iid(0.5);
    EXPECT_NEAR(trk_moments(m, 2, Scheme::AtLeast, 1)[0].mean, 6.0, 1e-10);
    EXPECT_NEAR(trk_moments(m, 2, Scheme::NonOverlapping, 1)[0].mean, 6.0, 1e-10);
    for (double p : {0.2, 0.5, 0.8}) {
        const auto ms = trk_moments(TrialModel::iid(p), 3, Scheme::NonOverlapping, 2);
        EXPECT_NEAR(ms[1].mean, 2 * ms[0].mean, 1e-9 * ms[1].mean);
    }
}

TEST(TrkMoments, SchemeTwoMeanClosedForm) {
    for (double p : {0.2, 0.5, 0.8}) {
        for (unsigned k = 1; k <= 4; ++k) {
            const double pk = std::pow(p, k), want = (1 - pk) / (pk * (1 - p));
            EXPECT_NEAR(trk_moments(TrialModel::iid(p), k, Scheme::AtLeast, 1)[0].mean, want, 1e-8 * want);
        }
    }
}

TEST(TrkMoments, MatchPmfSummation) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (Scheme s : kSchemes) {
                const auto ms = trk_moments(m, k, s, 3);
                for (unsigned r = 1; r <= 3; ++r) {
                    Pmf pmf = trk_pmf({m, k, r, s}, 1000);
                    for (std::size_t n = 2000; pmf.tail > 1e-13 && n <= 16000; n *= 2) pmf = trk_pmf({m, k, r, s}, n);
                    double e1 = 0.0, e2 = 0.0;
                    for (std::size_t i = 0; i < pmf.probs.size(); ++i) {
                        const double x = static_cast<double>(pmf.offset + i);
                        e1 += x * pmf.probs[i];
                        e2 += x * x * pmf.probs[i];
                    }
                    EXPECT_NEAR(ms[r - 1].mean, e1, 1e-8 * std::max(1.0, e1)) << m.describe() << " k=" << k << " r=" << r;
                    EXPECT_NEAR(ms[r - 1].second_moment, e2, 1e-8 * std::max(1.0, e2));
                }
            }
        }
    }
}

TEST(TrkMoments, MeanIncrementConstantInR) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (Scheme s : kSchemes) {
                const auto ms = trk_moments(m, k, s, 6);
                const double d = ms[1].mean - ms[0].mean;
                for (std::size_t r = 2; r < ms.size(); ++r) {
                    EXPECT_NEAR(ms[r].mean - ms[r - 1].mean, d, 1e-9 * std::max(1.0, ms[r].mean));
                }
            }
        }
    }
}
