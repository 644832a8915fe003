#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "runstat/model.hpp"
#include "runstat/rth_waiting.hpp"

namespace runstat {

struct FirstRunWait {
    unsigned k;
};
struct RthRunWait {
    unsigned k;
    unsigned r;
    Scheme scheme;
};
struct RunCount {
    unsigned k;
    Scheme scheme;
};
struct LongestRun {};

using StatisticSpec = std::variant<FirstRunWait, RthRunWait, RunCount, LongestRun>;

std::string describe(const StatisticSpec& stat);

/// Deterministic pseudorandom stream. Uniforms are built from the raw 64-bit
/// output so that the stream does not depend on the standard library's
/// distribution implementations.
class SeededStream {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit SeededStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::string algorithm() const { return kAlgorithm; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n);

    /// Independent child stream identified by index.
    SeededStream substream(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

inline constexpr std::size_t kMaxEnumerationTrials = 24;

/// Exact distribution by walking all 2^n sequences. The table covers
/// values 0..n; waiting times beyond n go to the tail.
Pmf enumerate_exact(const TrialModel& model, std::size_t n, const StatisticSpec& stat);

/// Empirical distribution of the statistic over reps simulated sequences
/// of length n, laid out like enumerate_exact.
Pmf simulate(const TrialModel& model, std::size_t n, const StatisticSpec& stat, std::size_t reps,
             const SeededStream& stream);

/// Independent draws of V(k), each simulated trial by trial until the
/// first k-run.
std::vector<std::size_t> sample_waiting_times(const TrialModel& model, unsigned k, std::size_t reps,
                                              SeededStream& stream);

}  // namespace runstat
