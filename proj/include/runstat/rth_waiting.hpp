#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "runstat/model.hpp"
#include "runstat/polyseries.hpp"

namespace runstat {

enum class Scheme { NonOverlapping, AtLeast, Overlapping };

/// "I", "II", "III"
std::string_view scheme_name(Scheme s) noexcept;
/// Accepts I/II/III, 1/2/3 and the long names.
Scheme parse_scheme(std::string_view text);

inline constexpr Scheme kAllSchemes[] = {Scheme::NonOverlapping, Scheme::AtLeast, Scheme::Overlapping};

struct RthQuery {
    TrialModel model;
    unsigned k;
    unsigned r;
    Scheme scheme;
};

/// T_r has pgf first * inter^{r-1}: the wait for the first occurrence and
/// the i.i.d. gaps between later ones.
struct RenewalFactors {
    RationalGF first;
    RationalGF inter;
};

RenewalFactors renewal_factors(const TrialModel& model, unsigned k, Scheme scheme);

/// Throws ConsistencyError if the result does not have unit mass at 1.
RationalGF trk_pgf(const RthQuery& q);

/// Coefficients of z^0..z^nmax of first*inter^{r-1} for r = 0..rmax, by the
/// convolution recursion h_r * den(inter) = h_{r-1} * num(inter). Row 0 is
/// the point mass at 0.
std::vector<std::vector<double>> trk_recursion_table(const TrialModel& model, unsigned k, Scheme scheme,
                                                     unsigned rmax, std::size_t nmax);

/// Recursion path.
Pmf trk_pmf_recursive(const RthQuery& q, std::size_t nmax);
/// Series expansion of trk_pgf.
Pmf trk_pmf_series(const RthQuery& q, std::size_t nmax);
/// Series path, checked against the recursion path (ConsistencyError beyond 1e-9).
Pmf trk_pmf(const RthQuery& q, std::size_t nmax);

/// P(T > n) for n = 0..nmax.
std::vector<double> trk_tail(const RthQuery& q, std::size_t nmax);

/// Smallest attainable value of T_r.
std::size_t trk_min_support(const RthQuery& q);

struct Moments {
    double mean;
    double second_moment;
    double variance() const noexcept { return second_moment - mean * mean; }
};

/// Mean and E[T^2] for r = 1..rmax from pgf derivatives at 1.
std::vector<Moments> trk_moments(const TrialModel& model, unsigned k, Scheme scheme, unsigned rmax);

}  // namespace runstat
