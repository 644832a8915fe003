#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace runstat {

struct IID {
    double p;
};

// p1: first-trial success probability, alpha = P(1|1), beta = P(0|0).
struct Markov {
    double p1;
    double alpha;
    double beta;
};

/// Bernoulli trial law. All parameters live in the open interval (0, 1).
class TrialModel {
public:
    static TrialModel iid(double p);
    static TrialModel markov(double p1, double alpha, double beta);
    /// Markov chain started from its stationary law.
    static TrialModel markov_stationary(double alpha, double beta);

    bool is_iid() const noexcept { return std::holds_alternative<IID>(law_); }
    const IID& as_iid() const { return std::get<IID>(law_); }
    const Markov& as_markov() const { return std::get<Markov>(law_); }

    double p_first() const noexcept;
    double q_first() const noexcept { return 1.0 - p_first(); }
    double succ_after_success() const noexcept;  // alpha, or p
    double succ_after_failure() const noexcept;  // 1 - beta, or p

    /// Same transition law, first trial drawn with success probability p1.
    TrialModel restarted(double p1) const;

    std::string describe() const;

private:
    explicit TrialModel(std::variant<IID, Markov> law) : law_(law) {}
    std::variant<IID, Markov> law_;
};

double p_stationary(double alpha, double beta);

/// Finite probability table: probs[i] = P(X = offset + i), tail = P(X > last).
struct Pmf {
    std::size_t offset = 0;
    std::vector<double> probs;
    double tail = 0.0;

    double at(std::size_t x) const noexcept {
        return (x < offset || x - offset >= probs.size()) ? 0.0 : probs[x - offset];
    }
    std::size_t last() const noexcept { return offset + probs.size() - 1; }
    double total() const noexcept;
    /// P(X <= x)
    double cdf(std::size_t x) const noexcept;
};

/// Clamps round-off negatives (down to -1e-12) and sets tail = 1 - sum.
/// Throws NumericalError when an entry or the total leaves the tolerance band.
Pmf finalize_pmf(std::size_t offset, std::vector<double> probs);

/// Largest absolute elementwise difference, both tables aligned on support.
double max_abs_diff(const Pmf& a, const Pmf& b);
/// Total variation distance including tail masses.
double total_variation(const Pmf& a, const Pmf& b);

}  // namespace runstat
