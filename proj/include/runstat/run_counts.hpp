#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "runstat/model.hpp"
#include "runstat/rth_waiting.hpp"

namespace runstat {

class BinarySequence {
public:
    BinarySequence() = default;
    explicit BinarySequence(std::vector<std::uint8_t> bits);
    /// From a string of '0' and '1' characters.
    static BinarySequence parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Number of k-run occurrences under the given scheme.
std::size_t count_runs(const BinarySequence& s, unsigned k, Scheme scheme);

/// 1-based trial at which the r-th occurrence completes, if any.
std::optional<std::size_t> first_occurrence_index(const BinarySequence& s, unsigned k, unsigned r, Scheme scheme);

/// Streaming occurrence detector shared by the counters and the oracle.
class RunScanner {
public:
    RunScanner(unsigned k, Scheme scheme) : k_(k), scheme_(scheme) {}
    /// Feeds one trial; returns true if an occurrence completes on it.
    bool push(bool success) noexcept {
        if (!success) {
            block_ = 0;
            streak_ = 0;
            return false;
        }
        ++block_;
        ++streak_;
        switch (scheme_) {
            case Scheme::NonOverlapping:
                if (streak_ == k_) {
                    streak_ = 0;
                    return true;
                }
                return false;
            case Scheme::AtLeast: return block_ == k_;
            case Scheme::Overlapping: return block_ >= k_;
        }
        return false;
    }

private:
    unsigned k_;
    Scheme scheme_;
    unsigned block_ = 0;   // length of the current success block
    unsigned streak_ = 0;  // successes since the last scheme-I restart
};

struct CountsQuery {
    TrialModel model;
    std::size_t n;
    unsigned k;
    Scheme scheme;
};

/// Largest attainable count in n trials.
std::size_t counts_max_support(const CountsQuery& q);

/// Duality route through waiting-time distributions; offset 0, tail 0.
Pmf counts_pmf_duality(const CountsQuery& q);
/// In-n recursion over polynomials in w from the double generating function.
Pmf counts_pmf_recursive(const CountsQuery& q);
/// Duality route, checked against the recursion (ConsistencyError beyond 1e-9).
Pmf counts_pmf(const CountsQuery& q);

Moments counts_moments(const CountsQuery& q);

}  // namespace runstat
