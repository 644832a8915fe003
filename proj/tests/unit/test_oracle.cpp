#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "runstat/error.hpp"
#include "runstat/geometric.hpp"
#include "runstat/oracle.hpp"
#include "runstat/rth_waiting.hpp"
#include "runstat/run_counts.hpp"
#include "test_support.hpp"

using namespace runstat;

namespace {
std::vector<StatisticSpec> grid_stats() {
    std::vector<StatisticSpec> out{LongestRun{}};
    for (unsigned k = 1; k <= 3; ++k) {
        out.push_back(FirstRunWait{k});
        for (Scheme s : {Scheme::NonOverlapping, Scheme::AtLeast, Scheme::Overlapping}) {
            out.push_back(RunCount{k, s});
            out.push_back(RthRunWait{k, 2, s});
        }
    }
    return out;
}
}  // namespace

TEST(Enumerate, FirstRunAtFive) {
    EXPECT_NEAR(enumerate_exact(TrialModel::iid(0.5), 5, FirstRunWait{2}).at(5), 3.0 / 32.0, 1e-15);
}

TEST(Enumerate, OverlappingCountInThreeTrials) {
    EXPECT_NEAR(enumerate_exact(TrialModel::iid(0.5), 3, RunCount{2, Scheme::Overlapping}).at(2), 0.125, 1e-15);
}

TEST(Enumerate, EmptySequence) {
    const TrialModel m = TrialModel::iid(0.3);
    const Pmf c = enumerate_exact(m, 0, RunCount{2, Scheme::NonOverlapping});
    EXPECT_EQ(c.at(0), 1.0);
    EXPECT_EQ(c.tail, 0.0);
    EXPECT_EQ(enumerate_exact(m, 0, LongestRun{}).at(0), 1.0);
    for (const StatisticSpec& s : {StatisticSpec{FirstRunWait{2}}, StatisticSpec{RthRunWait{1, 1, Scheme::AtLeast}}}) {
        const Pmf w = enumerate_exact(m, 0, s);
        EXPECT_EQ(w.tail, 1.0);
        for (double x : w.probs) EXPECT_EQ(x, 0.0);
    }
}

TEST(Enumerate, RefusesLargeN) {
    try {
        enumerate_exact(TrialModel::iid(0.5), 25, FirstRunWait{2});
        FAIL() << "expected refusal";
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("simulate"), std::string::npos);
    }
}

TEST(Enumerate, TotalMassIsOne) {
    std::vector<TrialModel> models = testing_support::grid_models();
    models.push_back(TrialModel::markov(0.9, 0.2, 0.6));
    for (const auto& m : models) {
        for (const auto& s : grid_stats()) {
            for (std::size_t n : {1u, 7u, 16u}) EXPECT_NEAR(enumerate_exact(m, n, s).total(), 1.0, 1e-12);
        }
    }
}

TEST(Enumerate, MatchesAnalyticModules) {
    for (const auto& m : testing_support::grid_models()) {
        for (unsigned k = 1; k <= 3; ++k) {
            EXPECT_LT(total_variation(enumerate_exact(m, 16, FirstRunWait{k}), vk_pmf(m, k, 16)), 1e-10);
        }
        EXPECT_LT(total_variation(enumerate_exact(m, 16, LongestRun{}), longest_run_pmf(m, 16)), 1e-10);
    }
}

TEST(Simulate, SingleRepetition) {
    const Pmf e = simulate(TrialModel::iid(0.5), 10, FirstRunWait{2}, 1, SeededStream(5));
    double mass = e.tail;
    int nonzero = e.tail > 0 ? 1 : 0;
    for (double x : e.probs) {
        mass += x;
        if (x > 0) ++nonzero;
    }
    EXPECT_EQ(mass, 1.0);
    EXPECT_EQ(nonzero, 1);
}

TEST(Simulate, MatchesEnumerationInTotalVariation) {
    std::uint64_t seed = 40;
    for (const auto& m : testing_support::grid_models()) {
        for (const auto& s : {StatisticSpec{FirstRunWait{2}}, StatisticSpec{RunCount{2, Scheme::Overlapping}},
                              StatisticSpec{LongestRun{}}, StatisticSpec{RthRunWait{2, 2, Scheme::AtLeast}}}) {
            const Pmf sim = simulate(m, 12, s, 100000, SeededStream(++seed));
            EXPECT_LT(total_variation(sim, enumerate_exact(m, 12, s)), 0.02) << m.describe() << " " << describe(s);
        }
    }
}

TEST(Simulate, MarkovCollapseTwoSample) {
    const double p = 0.6;
    const std::size_t reps = 100000;
    const Pmf a = simulate(TrialModel::iid(p), 14, LongestRun{}, reps, SeededStream(91));
    const Pmf b = simulate(TrialModel::markov(p, p, 1 - p), 14, LongestRun{}, reps, SeededStream(92));
    for (std::size_t x = 0; x <= 14; ++x) {
        const double pooled = 0.5 * (a.at(x) + b.at(x));
        const double se = std::sqrt(2.0 * pooled * (1 - pooled) / static_cast<double>(reps));
        EXPECT_LE(std::fabs(a.at(x) - b.at(x)), 4.5 * se + 1e-12) << "x=" << x;
    }
}

TEST(Simulate, Deterministic) {
    const TrialModel m = TrialModel::markov_stationary(0.7, 0.3);
    const Pmf a = simulate(m, 15, RunCount{2, Scheme::NonOverlapping}, 5000, SeededStream(3));
    const Pmf b = simulate(m, 15, RunCount{2, Scheme::NonOverlapping}, 5000, SeededStream(3));
    EXPECT_EQ(a.probs, b.probs);
    EXPECT_EQ(a.tail, b.tail);
}

TEST(SampleWaitingTimes, MeanAtHalf) {
    SeededStream st(2024);
    const std::size_t reps = 100000;
    const auto v = sample_waiting_times(TrialModel::iid(0.5), 2, reps, st);
    ASSERT_EQ(v.size(), reps);
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / reps;
    const Moments mo = trk_moments(TrialModel::iid(0.5), 2, Scheme::NonOverlapping, 1)[0];
    EXPECT_NEAR(mo.mean, 6.0, 1e-10);
    EXPECT_LE(std::fabs(mean - 6.0), 3.0 * std::sqrt(mo.variance() / reps));
}

TEST(SampleWaitingTimes, SupportAndHighP) {
    SeededStream st(17);
    const auto v = sample_waiting_times(TrialModel::iid(0.9), 2, 200, st);
    double mean = 0.0, sq = 0.0;
    for (std::size_t x : v) {
        EXPECT_GE(x, 2u);
        mean += static_cast<double>(x);
        sq += static_cast<double>(x * x);
    }
    mean /= 200.0;
    const double sd = std::sqrt(sq / 200.0 - mean * mean);
    EXPECT_NEAR(mean, (1 - 0.81) / (0.1 * 0.81), 3.0 * sd / std::sqrt(200.0));
}

TEST(SampleWaitingTimes, RepeatableAndSubstreamsDiffer) {
    SeededStream a(8), b(8);
    const TrialModel m = TrialModel::markov_stationary(0.4, 0.6);
    EXPECT_EQ(sample_waiting_times(m, 3, 500, a), sample_waiting_times(m, 3, 500, b));
    SeededStream c = SeededStream(8).substream(0), d = SeededStream(8).substream(1);
    EXPECT_NE(c.next_u64(), d.next_u64());
    EXPECT_EQ(SeededStream(8).substream(4).next_u64(), SeededStream(8).substream(4).next_u64());
    EXPECT_EQ(std::string(SeededStream::kAlgorithm), "mt19937_64");
}

TEST(SeededStream, UniformRangeAndIndex) {
    SeededStream s(1);
    for (int i = 0; i < 10000; ++i) {
        const double u = s.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(s.index(7), 7u);
    }
    EXPECT_THROW(s.index(0), InvalidArgument);
}
