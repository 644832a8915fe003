#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace runstat {

/// Dense univariate polynomial with real coefficients in ascending degree.
///
/// Always canonical: trailing exact zeros are trimmed, and the zero
/// polynomial is stored as the single coefficient 0. Tiny but nonzero
/// coefficients are kept, since structural zeros in generating-function
/// denominators are exact.
class Poly {
public:
    Poly() : coeffs_{0.0} {}
    Poly(std::initializer_list<double> cs);
    explicit Poly(std::vector<double> cs);

    /// c * z^degree
    static Poly monomial(double c, std::size_t degree);

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    /// Coefficient of z^i; zero beyond the stored degree.
    double operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    /// Lowest degree with a nonzero coefficient (0 for the zero polynomial).
    std::size_t valuation() const noexcept;

    double eval(double z) const noexcept;
    Poly derivative() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(double s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, double s) { return a *= s; }
    friend Poly operator*(double s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Ratio of polynomials normalized so that the denominator's constant term
/// is exactly 1. Represents a power series around z = 0.
class RationalGF {
public:
    /// Throws InvalidArgument when den(0) == 0 (no power series at 0).
    RationalGF(Poly num, Poly den);
    /// Polynomial (denominator 1).
    explicit RationalGF(Poly num);
    static RationalGF constant(double c) { return RationalGF(Poly{c}); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    double eval(double z) const;

    /// Index of the first nonzero series coefficient; with den(0) = 1 this is
    /// the numerator's lowest nonzero degree.
    std::size_t valuation() const noexcept { return num_.valuation(); }

    RationalGF operator-() const { return RationalGF(-num_, den_); }
    RationalGF& operator*=(double s);

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(RationalGF a, double s) { return a *= s; }
    friend RationalGF operator*(double s, RationalGF a) { return a *= s; }

private:
    Poly num_;
    Poly den_;
};

/// a^e by repeated squaring; a^0 is the constant 1.
RationalGF rational_pow(const RationalGF& a, unsigned e);

/// Power-series coefficients c_0..c_nmax from the recurrence
/// c_n = num_n - sum_{j>=1} den_j c_{n-j}.
std::vector<double> series_coeffs(const RationalGF& g, std::size_t nmax);

struct GfMoments {
    double mass;                     ///< g(1)
    double mean;                     ///< g'(1)
    double second_factorial_moment;  ///< g''(1) = E[X(X-1)] for a pgf

    double second_moment() const noexcept { return second_factorial_moment + mean; }
};

/// Value and first two derivatives at z = 1 by the quotient rule.
/// Throws PoleError when the denominator vanishes at 1.
GfMoments gf_moments_at_one(const RationalGF& g);

}  // namespace runstat
