#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "runstat/model.hpp"
#include "runstat/polyseries.hpp"

namespace testing_support {

// SplitMix64: small, fully specified generator for property-test inputs.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

    runstat::Poly poly(int degree, double scale = 1.0) {
        std::vector<double> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = uniform(-scale, scale);
        return runstat::Poly(c);
    }

private:
    std::uint64_t state_;
};

inline double rel_err(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

// Parameter grid shared by several suites: the check grid's models.
inline std::vector<runstat::TrialModel> grid_models() {
    using runstat::TrialModel;
    std::vector<TrialModel> out;
    for (double p : {0.2, 0.5, 0.8}) out.push_back(TrialModel::iid(p));
    for (double a : {0.3, 0.7}) {
        for (double b : {0.3, 0.7}) out.push_back(TrialModel::markov_stationary(a, b));
    }
    return out;
}

}  // namespace testing_support
