#include "runstat/polyseries.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "runstat/error.hpp"

namespace runstat {

Poly::Poly(std::initializer_list<double> cs) : coeffs_(cs) { trim(); }

Poly::Poly(std::vector<double> cs) : coeffs_(std::move(cs)) { trim(); }

Poly Poly::monomial(double c, std::size_t degree) {
    std::vector<double> cs(degree + 1, 0.0);
    cs[degree] = c;
    return Poly(std::move(cs));
}

void Poly::trim() {
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw InvalidArgument("polynomial coefficient is not finite");
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

std::size_t Poly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0.0) return i;
    }
    return 0;
}

double Poly::eval(double z) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() == 1) return Poly{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (double& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeffs_[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
}

RationalGF::RationalGF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    const double d0 = den_[0];
    if (d0 == 0.0) throw InvalidArgument("rational generating function: denominator constant term is zero");
    if (d0 != 1.0) {
        num_ *= 1.0 / d0;
        den_ *= 1.0 / d0;
        // Force the normalization to be exact.
        std::vector<double> dc = den_.coeffs();
        dc[0] = 1.0;
        den_ = Poly(std::move(dc));
    }
}

RationalGF::RationalGF(Poly num) : RationalGF(std::move(num), Poly{1.0}) {}

double RationalGF::eval(double z) const {
    const double d = den_.eval(z);
    if (d == 0.0) throw PoleError("rational generating function evaluated at a pole z=" + std::to_string(z), z);
    return num_.eval(z) / d;
}

RationalGF& RationalGF::operator*=(double s) {
    num_ *= s;
    return *this;
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    if (a.den_ == b.den_) return RationalGF(a.num_ + b.num_, a.den_);
    return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF rational_pow(const RationalGF& a, unsigned e) {
    RationalGF result = RationalGF::constant(1.0);
    RationalGF base = a;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

std::vector<double> series_coeffs(const RationalGF& g, std::size_t nmax) {
    const auto& num = g.num();
    const auto& den = g.den().coeffs();
    std::vector<double> c(nmax + 1, 0.0);
    for (std::size_t n = 0; n <= nmax; ++n) {
        double acc = num[n];
        const std::size_t jmax = std::min(n, den.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc -= den[j] * c[n - j];
        c[n] = acc;
    }
    return c;
}

GfMoments gf_moments_at_one(const RationalGF& g) {
    const Poly& n0 = g.num();
    const Poly& d0 = g.den();
    const double d = d0.eval(1.0);
    double scale = 0.0;
    for (double c : d0.coeffs()) scale += std::fabs(c);
    if (d == 0.0 || std::fabs(d) <= 1e-14 * scale) {
        throw PoleError("generating function has a pole at z=1 (denominator root 1)", 1.0);
    }
    const Poly n1 = n0.derivative();
    const Poly d1 = d0.derivative();
    const double N = n0.eval(1.0), N1 = n1.eval(1.0), N2 = n1.derivative().eval(1.0);
    const double D1 = d1.eval(1.0), D2 = d1.derivative().eval(1.0);

    const double g0 = N / d;
    const double g1 = (N1 - g0 * D1) / d;
    // (g*D)'' = N''  =>  g'' D + 2 g' D' + g D'' = N''
    const double g2 = (N2 - 2.0 * g1 * D1 - g0 * D2) / d;
    return {g0, g1, g2};
}

}  // namespace runstat
