#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "runstat/model.hpp"
#include "runstat/polyseries.hpp"
#include "runstat/rth_waiting.hpp"

namespace runstat::detail {

// Printed symbols: p, q = first-trial law; a = alpha, b = beta. For i.i.d.
// trials a = p and b = q.
struct Sym {
    double p, q, a, b;
    unsigned k;
};

// Oracle-validated reference values for one (model, k), computed lazily.
// Index conventions: sequences vanish at negative indices except tails,
// where P(T > n) = 1 for n < 0.
class Reference {
public:
    static constexpr unsigned kMomentR = 6;
    static constexpr std::size_t kCountsN = 60;

    Reference(const TrialModel& model, unsigned k, std::size_t n_max, unsigned r_max);

    const TrialModel& model() const noexcept { return model_; }
    unsigned k() const noexcept { return k_; }
    long n_max() const noexcept { return static_cast<long>(n_max_); }
    unsigned r_max() const noexcept { return r_max_; }
    Sym sym() const noexcept;

    double vk(long v) const;                    // P(V(k) = v), v <= n_max + k + 1
    double longest_lt(long n, unsigned j) const;  // P(L_n < j), n <= n_max
    double longest_eq(long n, unsigned j) const;

    double h(Scheme s, long r, long n) const;     // P(T_r = n)
    double hbar(Scheme s, long r, long n) const;  // P(T_r > n)
    double t_mean(Scheme s, long r) const;        // r <= kMomentR
    double t_second(Scheme s, long r) const;

    double g(Scheme s, long n, long x) const;  // P(N_n = x), n <= kCountsN
    double G(Scheme s, long n, double w) const;
    double n_mean(Scheme s, long n) const;
    double n_second(Scheme s, long n) const;

    /// sum_{r>=0} H_r(z) w^r from the renewal factors.
    double trk_double(Scheme s, double z, double w) const;
    /// sum_n G_n(w) z^n truncated at kCountsN.
    double counts_double(Scheme s, double z, double w) const;

    const RationalGF& first(Scheme s) const;
    const RationalGF& inter(Scheme s) const;

private:
    struct SchemeData {
        std::optional<RenewalFactors> factors;
        std::vector<std::vector<double>> pmf;   // [r][n], r = 0..r_max
        std::vector<std::vector<double>> tail;  // [r][n]
        std::vector<Moments> moments;           // r = 0..kMomentR
        std::vector<std::vector<double>> counts;  // [n][x]
    };
    SchemeData& data(Scheme s) const;
    void need_trk(Scheme s) const;
    void need_counts(Scheme s) const;

    TrialModel model_;
    unsigned k_;
    std::size_t n_max_;
    unsigned r_max_;
    mutable std::vector<double> vk_;
    mutable std::vector<std::vector<double>> longest_;  // [n][j] = P(L_n = j)
    mutable std::array<SchemeData, 3> schemes_;
};

// Printed statements degenerate at k = 1 (empty sums, alpha^{k-2}).
inline constexpr unsigned kCatalogMinK = 2;

enum class Applies { IID, Markov, Any };

// Largest relative deviation over the point, or nullopt when the formula
// does not apply there (e.g. a k = 2 statement at k = 3).
using Eval = std::function<std::optional<double>(const Reference&)>;

struct CatalogEntry {
    std::string id;
    std::string anchor;
    Applies applies = Applies::Any;
    Eval eval;  // empty for formulas that are listed but not transcribed
    std::string note;
};

double rel_dev(double printed, double truth) noexcept;

std::vector<CatalogEntry> build_catalog();
CatalogEntry fault_fixture();

}  // namespace runstat::detail
