#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <utility>

#include "errata_detail.hpp"
#include "runstat/fibk.hpp"
#include "runstat/geometric.hpp"

namespace runstat::detail {

namespace {

using Opt = std::optional<double>;
using Seq = std::function<double(long)>;
using Tab = std::function<double(long, long)>;

constexpr Scheme I = Scheme::NonOverlapping;
constexpr Scheme II = Scheme::AtLeast;
constexpr Scheme III = Scheme::Overlapping;

constexpr std::array<std::pair<double, double>, 2> kZW{{{0.3, 0.6}, {0.45, 1.3}}};
constexpr std::array<double, 2> kW{0.6, 1.3};

#define UNPACK(s)                                                                                     \
    [[maybe_unused]] const double p = (s).p, q = (s).q, a = (s).a, b = (s).b, kd = (s).k; \
    [[maybe_unused]] const long k = static_cast<long>((s).k)

double pw(double x, long e) { return std::pow(x, static_cast<double>(e)); }

Poly terms(std::initializer_list<std::pair<long, double>> ts) {
    Poly out;
    for (const auto& [d, c] : ts) out += Poly::monomial(c, static_cast<std::size_t>(d));
    return out;
}

Poly ppow(const Poly& x, unsigned e) {
    Poly out{1.0};
    for (unsigned i = 0; i < e; ++i) out = out * x;
    return out;
}

// (1 - w)^e
Poly one_minus(unsigned e) { return ppow(Poly{1.0, -1.0}, e); }

struct Worst {
    double v = 0.0;
    bool any = false;

    void add(double printed, double truth) {
        v = std::max(v, rel_dev(printed, truth));
        any = true;
    }
    Opt get() const { return any ? Opt(v) : std::nullopt; }
};

using Values = std::vector<std::pair<long, double>>;

bool k_ok(const Sym& s, unsigned only_k, unsigned min_k) { return (only_k == 0 || s.k == only_k) && s.k >= min_k; }

// ---- V(k) ----

Eval vk_gf(std::function<RationalGF(const Sym&)> f, unsigned only_k = 0) {
    return [f, only_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, only_k, 1)) return std::nullopt;
        const auto c = series_coeffs(f(s), static_cast<std::size_t>(R.n_max()));
        Worst w;
        for (long v = 0; v <= R.n_max(); ++v) w.add(c[static_cast<std::size_t>(v)], R.vk(v));
        return w.get();
    };
}

// P(V(k) = v) against a printed value, v from `from` to the horizon.
Eval vk_pointwise(std::function<double(const Sym&, long)> f, std::function<long(const Sym&)> from,
                  unsigned only_k = 0) {
    return [f, from, only_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, only_k, 1)) return std::nullopt;
        Worst w;
        for (long v = from(s); v <= R.n_max(); ++v) w.add(f(s, v), R.vk(v));
        return w.get();
    };
}

Eval vk_values(std::function<Values(const Sym&)> f, unsigned only_k = 0) {
    return [f, only_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, only_k, 1)) return std::nullopt;
        Worst w;
        for (const auto& [v, x] : f(s)) {
            if (v <= R.n_max()) w.add(x, R.vk(v));
        }
        return w.get();
    };
}

Eval vk_recursion(std::function<double(const Sym&, const Seq&, long)> rhs, std::function<long(const Sym&)> from,
                  unsigned only_k = 0) {
    return [rhs, from, only_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, only_k, 1)) return std::nullopt;
        const Seq P = [&R](long v) { return R.vk(v); };
        Worst w;
        for (long v = from(s); v <= R.n_max(); ++v) w.add(rhs(s, P, v), R.vk(v));
        return w.get();
    };
}

// The h-sequence P(V(k) = v) = c h_{v-k+1}; h_v against a printed value.
Eval h_pointwise(std::function<double(const Sym&)> scale, std::function<double(const Sym&, long)> f, long from,
                 unsigned only_k = 0) {
    return [scale, f, from, only_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, only_k, 1)) return std::nullopt;
        const double c = scale(s);
        const long k = s.k;
        Worst w;
        for (long v = from; v + k - 1 <= R.n_max(); ++v) w.add(f(s, v), R.vk(v + k - 1) / c);
        return w.get();
    };
}

Eval h_recursion(std::function<double(const Sym&)> scale, std::function<double(const Sym&, const Seq&, long)> rhs,
                 std::function<long(const Sym&)> from) {
    return [scale, rhs, from](const Reference& R) -> Opt {
        const Sym s = R.sym();
        const double c = scale(s);
        const long k = s.k;
        const Seq h = [&R, c, k](long v) { return v <= 0 ? 0.0 : R.vk(v + k - 1) / c; };
        Worst w;
        for (long v = from(s); v + k - 1 <= R.n_max(); ++v) w.add(rhs(s, h, v), h(v));
        return w.get();
    };
}

// ---- T_{r,k} ----

Eval trk_pgf_r(Scheme sc, std::function<RationalGF(const Sym&, unsigned)> f, unsigned min_k = 1) {
    return [sc, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        Worst w;
        for (unsigned r = 1; r <= R.r_max(); ++r) {
            const auto c = series_coeffs(f(s, r), static_cast<std::size_t>(R.n_max()));
            for (long n = 0; n <= R.n_max(); ++n) w.add(c[static_cast<std::size_t>(n)], R.h(sc, r, n));
        }
        return w.get();
    };
}

// Printed renewal factor against the first-occurrence (inter = false) or
// between-occurrence factor.
Eval factor(Scheme sc, bool inter, std::function<RationalGF(const Sym&)> f, unsigned min_k = 1) {
    return [sc, inter, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        const auto n = static_cast<std::size_t>(R.n_max());
        const auto c = series_coeffs(f(s), n);
        const auto t = series_coeffs(inter ? R.inter(sc) : R.first(sc), n);
        Worst w;
        for (std::size_t i = 0; i <= n; ++i) w.add(c[i], t[i]);
        return w.get();
    };
}

Eval trk_double(Scheme sc, std::function<double(const Sym&, double, double)> f, unsigned min_k = 1) {
    return [sc, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        Worst w;
        for (const auto& [z, x] : kZW) w.add(f(s, z, x), R.trk_double(sc, z, x));
        return w.get();
    };
}

using TrkRhs = std::function<double(const Sym&, const Tab&, long, long)>;

Eval trk_rec(Scheme sc, bool tail, TrkRhs rhs, long r_from, std::function<long(const Sym&)> n_from,
             unsigned min_k = 1) {
    return [sc, tail, rhs, r_from, n_from, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        const Tab t = tail ? Tab([&R, sc](long r, long n) { return R.hbar(sc, r, n); })
                           : Tab([&R, sc](long r, long n) { return R.h(sc, r, n); });
        Worst w;
        for (long r = r_from; r <= static_cast<long>(R.r_max()); ++r) {
            for (long n = n_from(s); n <= R.n_max(); ++n) w.add(rhs(s, t, r, n), t(r, n));
        }
        return w.get();
    };
}

// h_1(n) against printed values
Eval h1_values(Scheme sc, std::function<Values(const Sym&)> f, unsigned min_k = 1) {
    return [sc, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        Worst w;
        for (const auto& [n, x] : f(s)) {
            if (n <= R.n_max()) w.add(x, R.h(sc, 1, n));
        }
        return w.get();
    };
}

Seq moment_seq(const Reference& R, Scheme sc, bool second) {
    if (second) return [&R, sc](long r) { return R.t_second(sc, r); };
    return [&R, sc](long r) { return R.t_mean(sc, r); };
}

Eval moment_gf(Scheme sc, bool second, std::function<RationalGF(const Sym&)> f, unsigned min_k = 1) {
    return [sc, second, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        const Seq m = moment_seq(R, sc, second);
        const auto c = series_coeffs(f(s), Reference::kMomentR);
        Worst w;
        for (long r = 0; r <= static_cast<long>(Reference::kMomentR); ++r) w.add(c[static_cast<std::size_t>(r)], m(r));
        return w.get();
    };
}

Eval moment_rec(Scheme sc, bool second, std::function<double(const Sym&, const Seq&, long)> rhs, long r_from,
                unsigned min_k = 1) {
    return [sc, second, rhs, r_from, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        const Seq m = moment_seq(R, sc, second);
        Worst w;
        for (long r = r_from; r <= static_cast<long>(Reference::kMomentR); ++r) w.add(rhs(s, m, r), m(r));
        return w.get();
    };
}

Eval moment_values(Scheme sc, bool second, std::function<Values(const Sym&)> f, unsigned min_k = 1) {
    return [sc, second, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        const Seq m = moment_seq(R, sc, second);
        Worst w;
        for (const auto& [r, x] : f(s)) w.add(x, m(r));
        return w.get();
    };
}

// ---- N_n ----

Eval counts_double(Scheme sc, std::function<double(const Sym&, double, double)> f, unsigned min_k = 1) {
    return [sc, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        Worst w;
        for (const auto& [z, x] : kZW) w.add(f(s, z, x), R.counts_double(sc, z, x));
        return w.get();
    };
}

Eval G_rec(Scheme sc, std::function<double(const Sym&, const Seq&, long, double)> rhs,
           std::function<long(const Sym&)> n_from, unsigned min_k = 1) {
    return [sc, rhs, n_from, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        Worst w;
        for (double x : kW) {
            const Seq G = [&R, sc, x](long n) { return R.G(sc, n, x); };
            for (long n = n_from(s); n <= R.n_max(); ++n) w.add(rhs(s, G, n, x), G(n));
        }
        return w.get();
    };
}

Eval G_values(Scheme sc, std::function<Values(const Sym&, double)> f, unsigned min_k = 1) {
    return [sc, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        Worst w;
        for (double x : kW) {
            for (const auto& [n, v] : f(s, x)) w.add(v, R.G(sc, n, x));
        }
        return w.get();
    };
}

Eval g_rec(Scheme sc, TrkRhs rhs, std::function<long(const Sym&)> n_from, unsigned min_k = 1) {
    return [sc, rhs, n_from, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        const Tab g = [&R, sc](long n, long x) { return R.g(sc, n, x); };
        Worst w;
        for (long n = n_from(s); n <= R.n_max(); ++n) {
            for (long x = 0; x <= n; ++x) w.add(rhs(s, g, n, x), g(n, x));
        }
        return w.get();
    };
}

Eval g_values(Scheme sc, std::function<std::vector<std::tuple<long, long, double>>(const Sym&)> f) {
    return [sc, f](const Reference& R) -> Opt {
        Worst w;
        for (const auto& [n, x, v] : f(R.sym())) w.add(v, R.g(sc, n, x));
        return w.get();
    };
}

Seq count_moment_seq(const Reference& R, Scheme sc, bool second) {
    if (second) return [&R, sc](long n) { return R.n_second(sc, n); };
    return [&R, sc](long n) { return R.n_mean(sc, n); };
}

Eval count_moment_gf(Scheme sc, bool second, std::function<RationalGF(const Sym&)> f, unsigned min_k = 1) {
    return [sc, second, f, min_k](const Reference& R) -> Opt {
        const Sym s = R.sym();
        if (!k_ok(s, 0, min_k)) return std::nullopt;
        const Seq m = count_moment_seq(R, sc, second);
        const auto c = series_coeffs(f(s), static_cast<std::size_t>(R.n_max()));
        Worst w;
        for (long n = 0; n <= R.n_max(); ++n) w.add(c[static_cast<std::size_t>(n)], m(n));
        return w.get();
    };
}

Eval count_moment_rec(Scheme sc, bool second, std::function<double(const Sym&, const Seq&, long)> rhs,
                      std::function<long(const Sym&)> n_from) {
    return [sc, second, rhs, n_from](const Reference& R) -> Opt {
        const Sym s = R.sym();
        const Seq m = count_moment_seq(R, sc, second);
        Worst w;
        for (long n = n_from(s); n <= R.n_max(); ++n) w.add(rhs(s, m, n), m(n));
        return w.get();
    };
}

Eval count_moment_values(Scheme sc, bool second, std::function<Values(const Sym&)> f) {
    return [sc, second, f](const Reference& R) -> Opt {
        const Seq m = count_moment_seq(R, sc, second);
        Worst w;
        for (const auto& [n, v] : f(R.sym())) {
            if (n <= R.n_max()) w.add(v, m(n));
        }
        return w.get();
    };
}

std::function<long(const Sym&)> from_k(long shift) {
    return [shift](const Sym& s) { return static_cast<long>(s.k) + shift; };
}
std::function<long(const Sym&)> from_const(long n) {
    return [n](const Sym&) { return n; };
}
std::function<long(const Sym&)> from_max(long shift, long floor) {
    return [shift, floor](const Sym& s) { return std::max(static_cast<long>(s.k) + shift, floor); };
}

// ---- shared printed pieces ----

// 1 - z + q p^k z^{k+1}
Poly iid_den(const Sym& s) {
    UNPACK(s);
    return terms({{0, 1.0}, {1, -1.0}, {k + 1, q * pw(p, k)}});
}

RationalGF iid_first(const Sym& s) {
    UNPACK(s);
    return RationalGF(terms({{k, pw(p, k)}, {k + 1, -pw(p, k + 1)}}), iid_den(s));
}

// 1 - beta z - sum_{i=2}^k alpha^{i-2}(1-alpha)(1-beta) z^i
Poly markov_D(const Sym& s) {
    UNPACK(s);
    Poly d = terms({{0, 1.0}, {1, -b}});
    for (long i = 2; i <= k; ++i) d -= Poly::monomial(pw(a, i - 2) * (1 - a) * (1 - b), static_cast<std::size_t>(i));
    return d;
}

// 1 - (alpha+beta) z - (1-alpha-beta) z^2 + alpha^{k-1}(1-alpha)(1-beta) z^{k+1}
Poly markov_R(const Sym& s) {
    UNPACK(s);
    return terms({{0, 1.0}, {1, -(a + b)}, {2, -(1 - a - b)}, {k + 1, pw(a, k - 1) * (1 - a) * (1 - b)}});
}

double polyval(const Poly& P, double z) { return P.eval(z); }

struct Catalog {
    std::vector<CatalogEntry> entries;

    void add(std::string id, std::string anchor, Applies applies, Eval eval, std::string note = {}) {
        entries.push_back({std::move(id), std::move(anchor), applies, std::move(eval), std::move(note)});
    }
    void unverified(std::string id, std::string anchor, Applies applies, std::string note) {
        entries.push_back({std::move(id), std::move(anchor), applies, Eval{}, std::move(note)});
    }
};

const char* const kUnrangedNote = "no range printed; checked from the first index whose terms are all in range";

// ---------------------------------------------------------------------------

void waiting_first_run(Catalog& c) {
    const Applies IID = Applies::IID, MK = Applies::Markov;
    auto pk = [](const Sym& s) { return std::pow(s.p, s.k); };
    auto ak1 = [](const Sym& s) { return std::pow(s.a, static_cast<double>(s.k) - 1.0); };

    c.add("iid.vk.fibonacci_identity", "P(V(k)=v)=f_{v-k+1}(k)\\frac{1}{2^{v}}", IID,
          [](const Reference& R) -> Opt {
              const Sym s = R.sym();
              if (s.p != 0.5 || s.k > FibOrderK::kMaxOrder) return std::nullopt;
              Worst w;
              for (long v = s.k; v <= R.n_max(); ++v) {
                  const auto f = fib_k(s.k, static_cast<std::uint64_t>(v - static_cast<long>(s.k) + 1));
                  w.add(static_cast<double>(f) * std::ldexp(1.0, static_cast<int>(-v)), R.vk(v));
              }
              return w.get();
          });

    c.add("iid.vk.h_recursion", "h_{v}=q\\left(h_{v-1}+ph_{v-2}+\\cdots+p^{k-1}h_{v-k}\\right)", IID,
          h_recursion(pk,
                      [](const Sym& s, const Seq& h, long v) {
                          UNPACK(s);
                          double acc = 0.0;
                          for (long i = 1; i <= k; ++i) acc += pw(p, i - 1) * h(v - i);
                          return q * acc;
                      },
                      from_k(1)));
    c.add("iid.vk.h_initial", "h_{1}=1,\\ h_{2}=q,\\ h_{3}=q^{2}+pq", IID, [pk](const Reference& R) -> Opt {
        const Sym s = R.sym();
        UNPACK(s);
        const double c0 = pk(s);
        Worst w;
        w.add(1.0, R.vk(k) / c0);
        w.add(q, R.vk(k + 1) / c0);
        if (k >= 2) w.add(q * q + p * q, R.vk(k + 2) / c0);
        return w.get();
    });
    c.add("iid.vk.pgf", "G_{V(k)}(s)=\\frac{s^{k}p^{k}}{1-q\\sum_{i=1}^{k}p^{i-1}s^{i}}", IID, vk_gf([](const Sym& s) {
              UNPACK(s);
              Poly den{1.0};
              for (long i = 1; i <= k; ++i) den -= Poly::monomial(q * pw(p, i - 1), static_cast<std::size_t>(i));
              return RationalGF(terms({{k, pw(p, k)}}), den);
          }));
    c.add("iid.vk.pgf_alt", "\\frac{s^{k}p^{k}-p^{k+1}s^{k+1}}{1-s+p^{k}qs^{k+1}}", IID,
          vk_gf([](const Sym& s) { return iid_first(s); }));
    c.add("iid.vk2.corollary_recursion", "P(V(2)=v)=\\beta P(V(2)=v-1)+(1-\\alpha)(1-\\beta)P(V(2)=v-2)", IID,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              return b * P(v - 1) + (1 - a) * (1 - b) * P(v - 2);
          }, from_const(3), 2),
          "Markov symbols in an i.i.d. statement read as alpha = p, beta = q");
    c.add("iid.vk2.corollary_initial", "P(V(2)=2)=p^{2}", IID,
          vk_values([](const Sym& s) { return Values{{0, 0.0}, {1, 0.0}, {2, s.p * s.p}}; }, 2));
    c.add("iid.vk3.corollary_recursion", "qP(V(3)=v-1)+qpP(V(3)=v-2)+qp^{2}P(V(3)=v-3)", IID,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              return q * P(v - 1) + q * p * P(v - 2) + q * p * p * P(v - 3);
          }, from_const(4), 3));
    c.add("iid.vk3.corollary_initial", "P(V(3)=3)=p^{3}", IID,
          vk_values([](const Sym& s) { return Values{{0, 0.0}, {1, 0.0}, {2, 0.0}, {3, std::pow(s.p, 3)}}; }, 3));
    c.add("iid.vk.corollary_recursion", "P(V(k)=v)=P(V(k)=v-1)-p^{k}qP(V(k)=v-k-1)", IID,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              return P(v - 1) - pw(p, k) * q * P(v - k - 1);
          }, from_k(2)));
    c.add("iid.vk.corollary_initial", "P(V(k)=k)=p^{k},\\ P(V(k)=k+1)=qp^{k}", IID, vk_values([](const Sym& s) {
              UNPACK(s);
              Values out;
              for (long v = 0; v < k; ++v) out.emplace_back(v, 0.0);
              out.emplace_back(k, pw(p, k));
              out.emplace_back(k + 1, q * pw(p, k));
              return out;
          }));
    c.add("iid.vk.remark_recursion", "P(V(k)=v)=q\\sum_{i=1}^{k}p^{i-1}P(V(k)=v-i)", IID,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              double acc = 0.0;
              for (long i = 1; i <= k; ++i) acc += pw(p, i - 1) * P(v - i);
              return q * acc;
          }, [](const Sym& s) { return 2 * static_cast<long>(s.k) + 1; }));
    c.add("iid.vk.remark_initial", "P(V(k)=v)=qp^{k},\\ v=k+1,\\ldots,2k", IID, vk_values([](const Sym& s) {
              UNPACK(s);
              Values out{{k, pw(p, k)}};
              for (long v = k + 1; v <= 2 * k; ++v) out.emplace_back(v, q * pw(p, k));
              return out;
          }));
    c.add("iid.vk2.closed_form",
          "P(V(2)=v)=p\\left[\\frac{R_{1}^{v-1}}{R_{1}-R_{2}}+\\frac{R_{2}^{v-1}}{q-2R_{1}}\\right]", IID,
          vk_pointwise([](const Sym& s, long v) {
              UNPACK(s);
              const double d = std::sqrt(q * q + 4 * p * q);
              const double r1 = (q + d) / 2, r2 = (q - d) / 2;
              return p * (pw(r1, v - 1) / (r1 - r2) + pw(r2, v - 1) / (q - 2 * r1));
          }, from_const(2), 2));
    c.add("iid.vk2.h_closed_form",
          "h_{v}=\\frac{(q+\\sqrt{D})^{v}}{2^{v}\\sqrt{D}}+\\frac{(q-\\sqrt{D})^{v+1}}{2^{v}(D-q\\sqrt{D})}", IID,
          h_pointwise(pk, [](const Sym& s, long v) {
              UNPACK(s);
              const double D = q * q + 4 * p * q, sd = std::sqrt(D);
              return pw(q + sd, v) / (pw(2, v) * sd) + pw(q - sd, v + 1) / (pw(2, v) * (D - q * sd));
          }, 2, 2));

    c.add("markov.vk.h_recursion",
          "h_{v}=\\beta h_{v-1}+(1-\\alpha)(1-\\beta)\\sum_{i=0}^{k-2}\\alpha^{i}h_{v-i-2}", MK,
          h_recursion(ak1,
                      [](const Sym& s, const Seq& h, long v) {
                          UNPACK(s);
                          double acc = 0.0;
                          for (long i = 0; i <= k - 2; ++i) acc += pw(a, i) * h(v - i - 2);
                          return b * h(v - 1) + (1 - a) * (1 - b) * acc;
                      },
                      from_k(1)));
    c.add("markov.vk.h_initial", "h_{1}=p,\\ h_{2}=q(1-\\beta)", MK, [ak1](const Reference& R) -> Opt {
        const Sym s = R.sym();
        UNPACK(s);
        const double c0 = ak1(s);
        auto truth = [&](long v) { return R.vk(v + k - 1) / c0; };
        Worst w;
        const double h1 = p, h2 = q * (1 - b), h3 = b * h2 + (1 - a) * (1 - b) * h1;
        w.add(h1, truth(1));
        w.add(h2, truth(2));
        w.add(h3, truth(3));
        if (k >= 3) w.add(b * h3 + (1 - a) * (1 - b) * h2 + a * (1 - a) * (1 - b) * h1, truth(4));
        return w.get();
    });
    c.add("markov.vk.pgf",
          "\\frac{\\alpha^{k-1}s^{k}\\{p+(q-\\beta)s\\}}{1-\\beta s-\\sum_{i=2}^{k}\\alpha^{i-2}(1-\\alpha)(1-\\beta)s^{i}}",
          MK, vk_gf([](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k, pw(a, k - 1) * p}, {k + 1, pw(a, k - 1) * (q - b)}}), markov_D(s));
          }));
    c.add("markov.vk.pgf_alt",
          "\\frac{\\alpha^{k-1}s^{k}\\{p+(q-\\beta)s\\}(1-\\alpha s)}{1-(\\alpha+\\beta)s-(1-\\alpha-\\beta)s^{2}-"
          "\\alpha^{k-1}(1-\\alpha)(1-\\beta)s^{k+1}}",
          MK, vk_gf([](const Sym& s) {
              UNPACK(s);
              const Poly num = terms({{k, pw(a, k - 1) * p}, {k + 1, pw(a, k - 1) * (q - b)}}) * Poly{1.0, -a};
              const Poly den =
                  terms({{0, 1.0}, {1, -(a + b)}, {2, -(1 - a - b)}, {k + 1, -pw(a, k - 1) * (1 - a) * (1 - b)}});
              return RationalGF(num, den);
          }));
    c.add("markov.vk2.pgf", "\\frac{p\\alpha s^{2}+(q-\\beta)\\alpha s^{3}}{1-\\beta s-(1-\\alpha)(1-\\beta)s^{2}}", MK,
          vk_gf([](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{2, p * a}, {3, (q - b) * a}}), terms({{0, 1.0}, {1, -b}, {2, -(1 - a) * (1 - b)}}));
          }, 2));
    c.add("markov.vk2.corollary_recursion", "P(V(2)=v)=\\beta P(V(2)=v-1)+(1-\\alpha)(1-\\beta)P(V(2)=v-2)", MK,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              return b * P(v - 1) + (1 - a) * (1 - b) * P(v - 2);
          }, from_const(4), 2));
    c.add("markov.vk2.corollary_initial", "P(V(2)=2)=p\\alpha,\\ P(V(2)=3)=\\alpha q(1+\\beta)", MK,
          vk_values([](const Sym& s) {
              UNPACK(s);
              return Values{{0, 0.0}, {1, 0.0}, {2, p * a}, {3, a * q * (1 + b)}};
          }, 2));
    c.add("markov.vk3.pgf",
          "\\frac{p\\alpha^{2}s^{3}+(q-\\beta)\\alpha^{2}s^{4}}{1-\\beta s-(1-\\alpha)(1-\\beta)s^{2}-\\alpha(1-\\alpha)(1-\\beta)s^{3}}",
          MK, vk_gf([](const Sym& s) {
              UNPACK(s);
              const double c2 = (1 - a) * (1 - b);
              return RationalGF(terms({{3, p * a * a}, {4, (q - b) * a * a}}),
                                terms({{0, 1.0}, {1, -b}, {2, -c2}, {3, -a * c2}}));
          }, 3));
    c.add("markov.vk3.corollary_recursion",
          "\\beta P(V(3)=v-1)+(1-\\alpha)(1-\\beta)P(V(3)=v-2)+\\alpha(1-\\alpha)(1-\\beta)P(V(3)=v-3)", MK,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              const double c2 = (1 - a) * (1 - b);
              return b * P(v - 1) + c2 * P(v - 2) + a * c2 * P(v - 3);
          }, from_const(5), 3));
    c.add("markov.vk3.corollary_initial", "P(V(3)=3)=p\\alpha^{2},\\ P(V(3)=4)=q(1-\\beta)\\alpha^{2}", MK,
          vk_values([](const Sym& s) {
              UNPACK(s);
              return Values{{0, 0.0}, {1, 0.0}, {2, 0.0}, {3, p * a * a}, {4, q * (1 - b) * a * a}};
          }, 3));
    c.add("markov.vk.corollary_recursion",
          "(\\alpha+\\beta)P(V(k)=v-1)-(1-\\alpha-\\beta)P(V(k)=v-2)-\\alpha^{k-1}(1-\\alpha)(1-\\beta)P(V(k)=v-k-1)", MK,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              return (a + b) * P(v - 1) - (1 - a - b) * P(v - 2) - pw(a, k - 1) * (1 - a) * (1 - b) * P(v - k - 1);
          }, from_k(3)));
    c.add("markov.vk.corollary_initial",
          "P(V(k)=k)=p\\alpha^{k-1},\\ P(V(k)=k+1)=q\\alpha^{k-1}(1-\\beta),\\ "
          "P(V(k)=k+2)=\\alpha^{k-1}(1-\\beta)\\{\\beta q+p(1-\\alpha)\\}",
          MK, vk_values([](const Sym& s) {
              UNPACK(s);
              const double c0 = pw(a, k - 1);
              Values out;
              for (long v = 0; v < k; ++v) out.emplace_back(v, 0.0);
              out.emplace_back(k, p * c0);
              out.emplace_back(k + 1, q * c0 * (1 - b));
              out.emplace_back(k + 2, c0 * (1 - b) * (b * q + p * (1 - a)));
              return out;
          }));
    c.add("markov.vk.remark_recursion",
          "\\beta P(V(k)=v-1)+(1-\\alpha)(1-\\beta)\\sum_{i=2}^{k}\\alpha^{i-2}P(V(k)=v-i)", MK,
          vk_recursion([](const Sym& s, const Seq& P, long v) {
              UNPACK(s);
              double acc = 0.0;
              for (long i = 2; i <= k; ++i) acc += pw(a, i - 2) * P(v - i);
              return b * P(v - 1) + (1 - a) * (1 - b) * acc;
          }, from_k(2)));
    c.add("markov.vk2.closed_form",
          "\\alpha\\left[\\frac{R_{2}(pR_{1}+q-\\beta)}{R_{2}(R_{1}-R_{2})}R_{1}^{v-1}+\\frac{q(1-\\beta)-pR_{1}}{q-2R_{1}}"
          "R_{2}^{v-1}\\right]",
          MK, vk_pointwise([](const Sym& s, long v) {
              UNPACK(s);
              const double d = std::sqrt(b * b + 4 * (1 - a) * (1 - b));
              const double r1 = (b + d) / 2, r2 = (b - d) / 2;
              return a * (r2 * (p * r1 + q - b) / (r2 * (r1 - r2)) * pw(r1, v - 1) +
                          (q * (1 - b) - p * r1) / (q - 2 * r1) * pw(r2, v - 1));
          }, from_const(2), 2));
    c.add("markov.vk2.h_closed_form",
          "h_{v}=\\frac{R_{2}(pR_{1}+q-\\beta)}{R_{2}(R_{1}-R_{2})}R_{1}^{v-1}+\\frac{q(1-\\beta)-pR_{1}}{q-2R_{1}}R_{2}^{v-1}",
          MK, h_pointwise(ak1, [](const Sym& s, long v) {
              UNPACK(s);
              const double d = std::sqrt(b * b + 4 * (1 - a) * (1 - b));
              const double r1 = (b + d) / 2, r2 = (b - d) / 2;
              return r2 * (p * r1 + q - b) / (r2 * (r1 - r2)) * pw(r1, v - 1) +
                     (q * (1 - b) - p * r1) / (q - 2 * r1) * pw(r2, v - 1);
          }, 2, 2));
}

void longest_run(Catalog& c) {
    c.add("longest.duality", "P[V(k)\\leq n]=P[L_{n}\\geq k]", Applies::Any, [](const Reference& R) -> Opt {
        Worst w;
        double cdf = 0.0;
        for (long n = 0; n <= R.n_max(); ++n) {
            cdf += R.vk(n);
            w.add(cdf, 1.0 - R.longest_lt(n, R.k()));
        }
        return w.get();
    });
    c.add("longest.vk_from_longest", "P(V(k)=x)=qp^{k}P(L_{x-k-1}<k),\\ x\\geq k+2", Applies::IID,
          [](const Reference& R) -> Opt {
              const Sym s = R.sym();
              UNPACK(s);
              Worst w;
              for (long x = k + 2; x <= R.n_max(); ++x) w.add(q * pw(p, k) * R.longest_lt(x - k - 1, s.k), R.vk(x));
              return w.get();
          });
    c.add("longest.longest_from_vk", "P(L_{n}<k)=\\frac{P(V(k)=n+k+1)}{qp^{k}},\\ n\\geq 1", Applies::IID,
          [](const Reference& R) -> Opt {
              const Sym s = R.sym();
              UNPACK(s);
              Worst w;
              for (long n = 1; n <= R.n_max(); ++n) w.add(R.vk(n + k + 1) / (q * pw(p, k)), R.longest_lt(n, s.k));
              return w.get();
          });
    c.add("longest.gf", "\\frac{1}{1-z}\\left[G_{V(k)}(z)-G_{V(k+1)}(z)\\right]", Applies::Any,
          [](const Reference& R) -> Opt {
              const RationalGF g =
                  (vk_pgf(R.model(), R.k()) - vk_pgf(R.model(), R.k() + 1)) * RationalGF(Poly{1.0}, Poly{1.0, -1.0});
              const auto c = series_coeffs(g, static_cast<std::size_t>(R.n_max()));
              Worst w;
              for (long n = 0; n <= R.n_max(); ++n) w.add(c[static_cast<std::size_t>(n)], R.longest_eq(n, R.k()));
              return w.get();
          });
    c.add("longest.gf_zero", "-1+\\frac{1}{1-z}\\left[1-G_{V(1)}(z)+P(V(1)=0)\\right]", Applies::Any,
          [](const Reference& R) -> Opt {
              const RationalGF g = (RationalGF::constant(1.0) - vk_pgf(R.model(), 1)) *
                                   RationalGF(Poly{1.0}, Poly{1.0, -1.0});
              const auto c = series_coeffs(g, static_cast<std::size_t>(R.n_max()));
              Worst w;
              for (long n = 1; n <= R.n_max(); ++n) w.add(c[static_cast<std::size_t>(n)], R.longest_eq(n, 0));
              return w.get();
          });
    c.unverified("longest.iid.generating_pq", "P(z)=p^{k}z^{k}+p^{k}(p^{2k+2}q-2p-1)z^{k+1}", Applies::IID,
                 "printed polynomial blocks not transcribed; checked through the duality instead");
    c.unverified("longest.iid.f_recursion", "f(n)", Applies::IID,
                 "printed recursion not transcribed; checked through the duality instead");
    c.unverified("longest.markov.generating_pq", "P(z)", Applies::Markov,
                 "printed polynomial blocks not transcribed; checked through the duality instead");
    c.unverified("longest.markov.f_recursion", "f(n)", Applies::Markov,
                 "printed recursion not transcribed; checked through the duality instead");
}

// ---------------------------------------------------------------------------

void rth_iid(Catalog& c) {
    const Applies IID = Applies::IID;

    // scheme I
    c.add("iid.I.pgf", "H_{r}^{(I)}(z)=\\left[\\frac{p^{k}z^{k}(1-pz)}{1-z+qp^{k}z^{k+1}}\\right]^{r}", IID,
          trk_pgf_r(I, [](const Sym& s, unsigned r) { return rational_pow(iid_first(s), r); }));
    c.add("iid.I.double_pgf",
          "\\frac{1-z+p^{k}qz^{k+1}}{1-z+qp^{k}z^{k+1}-(pz)^{k}w+(pz)^{k+1}w}", IID,
          trk_double(I, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double d = 1 - z + pw(p, k) * q * pw(z, k + 1);
              return d / (d - pw(p * z, k) * w + pw(p * z, k + 1) * w);
          }));
    c.add("iid.I.lemma_factor", "\\frac{p^{k}z^{k}(1-pz)}{1-z+qp^{k}z^{k+1}}", IID,
          factor(I, true, [](const Sym& s) { return iid_first(s); }));
    c.add("iid.I.pmf_recursion",
          "h_{r}(n)=h_{r-1}(n-1)-p^{k}qh_{r}(n-k-1)+p^{k}h_{r-1}(n-k)-p^{k+1}h_{r-1}(n-k-1)", IID,
          trk_rec(I, false, [](const Sym& s, const Tab& h, long r, long n) {
              UNPACK(s);
              return h(r - 1, n - 1) - pw(p, k) * q * h(r, n - k - 1) + pw(p, k) * h(r - 1, n - k) -
                     pw(p, k + 1) * h(r - 1, n - k - 1);
          }, 1, from_k(1)),
          kUnrangedNote);
    c.add("iid.I.tail_recursion",
          "\\bar{h}_{r}(n)=2\\bar{h}_{r-1}(n-1)-\\bar{h}_{r-1}(n-2)+p^{k}q\\{\\bar{h}_{r}(n-k-2)-\\bar{h}_{r}(n-k-1)\\}", IID,
          trk_rec(I, true, [](const Sym& s, const Tab& t, long r, long n) {
              UNPACK(s);
              const double pk = pw(p, k);
              return 2 * t(r - 1, n - 1) - t(r - 1, n - 2) + pk * q * (t(r, n - k - 2) - t(r, n - k - 1)) -
                     pk * (t(r - 1, n - k - 1) - t(r - 1, n - k)) +
                     pk * p * (t(r - 1, n - k - 2) - t(r - 1, n - k - 1));
          }, 1, from_k(2)),
          kUnrangedNote);
    c.add("iid.I.tail_gf", "\\sum_{n}\\bar{h}_{r}(n)z^{n}=\\frac{1-H_{r}(z)}{1-z}", IID, [](const Reference& R) -> Opt {
        const Sym s = R.sym();
        Worst w;
        for (unsigned r = 1; r <= R.r_max(); ++r) {
            const RationalGF g = (RationalGF::constant(1.0) - rational_pow(iid_first(s), r)) *
                                 RationalGF(Poly{1.0}, Poly{1.0, -1.0});
            const auto cs = series_coeffs(g, static_cast<std::size_t>(R.n_max()));
            for (long n = 0; n <= R.n_max(); ++n) w.add(cs[static_cast<std::size_t>(n)], R.hbar(I, r, n));
        }
        return w.get();
    });
    c.add("iid.I.mean_gf", "\\frac{(1-p^{k})w}{p^{k}(1-w)^{2}}", IID, moment_gf(I, false, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{1, 1 - pw(p, k)}}), pw(p, k) * one_minus(2));
          }));
    c.add("iid.I.mean_recursion", "\\mu_{r}=2\\mu_{r-1}-\\mu_{r-2},\\ r\\geq 3", IID,
          moment_rec(I, false, [](const Sym&, const Seq& m, long r) { return 2 * m(r - 1) - m(r - 2); }, 3));
    c.add("iid.I.mean_initial", "\\mu_{1}=\\frac{1-p^{k}}{p^{k}}", IID, moment_values(I, false, [](const Sym& s) {
              UNPACK(s);
              return Values{{1, (1 - pw(p, k)) / pw(p, k)}};
          }));
    auto iid_I_a = [](const Sym& s) {
        UNPACK(s);
        const double pk = pw(p, k);
        const double a1 = pk * q * ((1 + p) * (pk - 1) + 2 * q * kd);
        const double a2 = q * ((1 - pk) * (2 - pk * q) - 2 * kd * pk * q);
        return std::pair{a1, a2};
    };
    c.add("iid.I.second_gf", "\\frac{a_{1}w^{2}+a_{2}w}{p^{2k}q^{3}(1-w)^{3}}", IID,
          moment_gf(I, true, [iid_I_a](const Sym& s) {
              UNPACK(s);
              const auto [a1, a2] = iid_I_a(s);
              return RationalGF(terms({{1, a2}, {2, a1}}), pw(p, 2 * k) * q * q * q * one_minus(3));
          }));
    c.add("iid.I.second_recursion", "U_{r}=3U_{r-1}-3U_{r-2}+U_{r-3},\\ r\\geq 4", IID,
          moment_rec(I, true, [](const Sym&, const Seq& m, long r) { return 3 * m(r - 1) - 3 * m(r - 2) + m(r - 3); }, 4));
    c.add("iid.I.second_initial", "U_{2}=\\frac{2p^{2k}(1+q)+2kp^{k}(p-2qk-5)+6}{p^{2k}q^{2}}", IID,
          moment_values(I, true, [iid_I_a](const Sym& s) {
              UNPACK(s);
              const double p2k = pw(p, 2 * k);
              return Values{{1, iid_I_a(s).second / (p2k * q * q * q)},
                            {2, (2 * p2k * (1 + q) + 2 * kd * pw(p, k) * (p - 2 * q * kd - 5) + 6) / (p2k * q * q)}};
          }));

    // scheme II
    c.add("iid.II.pgf", "H_{r}^{(II)}(z)=G^{r}(z)\\left[\\frac{qz}{1-pz}\\right]^{r-1}", IID,
          trk_pgf_r(II, [](const Sym& s, unsigned r) {
              UNPACK(s);
              return rational_pow(iid_first(s), r) *
                     rational_pow(RationalGF(Poly{0.0, q}, Poly{1.0, -p}), r - 1);
          }));
    c.add("iid.II.double_pgf", "\\frac{1-z+p^{k}qz^{k+1}+p^{k}z^{k}(1-z)w}{1-z+p^{k}qz^{k+1}-p^{k}qz^{k+1}w}", IID,
          trk_double(II, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double d = 1 - z + pw(p, k) * q * pw(z, k + 1);
              return (d + pw(p, k) * pw(z, k) * (1 - z) * w) / (d - pw(p, k) * q * pw(z, k + 1) * w);
          }));
    c.add("iid.II.lemma_factor", "\\frac{p^{k}qz^{k+1}}{1-z+p^{k}qz^{k+1}}", IID,
          factor(II, true, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k + 1, pw(p, k) * q}}), iid_den(s));
          }));
    c.add("iid.II.lemma_h1", "H_{1}(z)=\\frac{p^{k}z^{k}(1-pz)}{1-z+p^{k}qz^{k+1}}", IID,
          factor(II, false, [](const Sym& s) { return iid_first(s); }));
    c.add("iid.II.pmf_recursion", "h_{r}(n)=h_{r}(n-1)-p^{k}qh_{r}(n-k-1)+p^{k}qh_{r-1}(n-k-1)", IID,
          trk_rec(II, false, [](const Sym& s, const Tab& h, long r, long n) {
              UNPACK(s);
              const double c0 = pw(p, k) * q;
              return h(r, n - 1) - c0 * h(r, n - k - 1) + c0 * h(r - 1, n - k - 1);
          }, 2, from_k(1)),
          kUnrangedNote);
    c.add("iid.II.h1_recursion", "h_{1}(n)=h_{1}(n-1)-p^{k}qh_{1}(n-k-1)", IID,
          [](const Reference& R) -> Opt {
              const Sym s = R.sym();
              UNPACK(s);
              Worst w;
              for (long n = k + 2; n <= R.n_max(); ++n) {
                  w.add(R.h(II, 1, n - 1) - pw(p, k) * q * R.h(II, 1, n - k - 1), R.h(II, 1, n));
              }
              return w.get();
          });
    c.add("iid.II.h1_initial", "h_{1}(k)=p^{k},\\ h_{1}(k+1)=p^{k}q", IID, h1_values(II, [](const Sym& s) {
              UNPACK(s);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, pw(p, k));
              out.emplace_back(k + 1, pw(p, k) * q);
              return out;
          }));
    c.add("iid.II.tail_recursion",
          "\\bar{h}_{r}(n)=2\\bar{h}_{r}(n-1)-\\bar{h}_{r}(n-2)+p^{k}q\\{\\bar{h}_{r}(n-k-2)-\\bar{h}_{r}(n-k-1)\\}"
          "-p^{k}q\\{\\bar{h}_{r}(n-k-2)-\\bar{h}_{r}(n-k-1)\\}",
          IID,
          trk_rec(II, true, [](const Sym& s, const Tab& t, long r, long n) {
              UNPACK(s);
              const double c0 = pw(p, k) * q;
              return 2 * t(r, n - 1) - t(r, n - 2) + c0 * (t(r, n - k - 2) - t(r, n - k - 1)) -
                     c0 * (t(r, n - k - 2) - t(r, n - k - 1));
          }, 2, from_k(2)),
          kUnrangedNote);
    c.add("iid.II.mean_gf", "\\frac{(1-p^{k})w+p^{k}w^{2}}{p^{k}q(1-w)^{2}}", IID, moment_gf(II, false, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{1, 1 - pw(p, k)}, {2, pw(p, k)}}), pw(p, k) * q * one_minus(2));
          }));
    c.add("iid.II.mean_recursion", "\\mu_{r}=2\\mu_{r-1}-\\mu_{r-2},\\ r>2", IID,
          moment_rec(II, false, [](const Sym&, const Seq& m, long r) { return 2 * m(r - 1) - m(r - 2); }, 3));
    c.add("iid.II.mean_initial", "\\mu_{1}=\\frac{1-p^{k}}{p^{k}q},\\ \\mu_{2}=\\frac{2-p^{k}}{p^{k}q}", IID,
          moment_values(II, false, [](const Sym& s) {
              UNPACK(s);
              const double d = pw(p, k) * q;
              return Values{{1, (1 - pw(p, k)) / d}, {2, (2 - pw(p, k)) / d}};
          }));
    auto iid_II_a1 = [](const Sym& s) {
        UNPACK(s);
        const double pk = pw(p, k);
        return 2 + pk * (p - 3 + q * (pk - 2 * kd));
    };
    c.add("iid.II.second_gf", "\\frac{a_{1}w+a_{2}w^{2}+a_{3}w^{3}}{q^{2}p^{2k}(1-w)^{3}}", IID,
          moment_gf(II, true, [iid_II_a1](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k);
              const double a2 = -pk * (p - 3 + 2 * q * (pk - kd));
              const double a3 = pk * pk * q;
              return RationalGF(terms({{1, iid_II_a1(s)}, {2, a2}, {3, a3}}), q * q * pk * pk * one_minus(3));
          }));
    c.add("iid.II.second_recursion", "U_{r}=3U_{r-1}-3U_{r-2}+U_{r-3},\\ r\\geq 4", IID,
          moment_rec(II, true, [](const Sym&, const Seq& m, long r) { return 3 * m(r - 1) - 3 * m(r - 2) + m(r - 3); }, 4));
    c.add("iid.II.second_initial", "U_{3}=\\frac{12+p^{k}\\{3(p-3)+q(p^{k}-6k)\\}}{p^{2k}q^{2}}", IID,
          moment_values(II, true, [iid_II_a1](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k), d = pk * pk * q * q;
              return Values{{1, iid_II_a1(s) / d},
                            {2, (6 + pk * (2 * (p - 3) + q * (pk - 4 * kd))) / d},
                            {3, (12 + pk * (3 * (p - 3) + q * (pk - 6 * kd))) / d}};
          }));

    // scheme III
    c.add("iid.III.pgf", "H_{r}^{(III)}(z)=\\{pz+qzG(z)\\}^{r-1}G(z)", IID,
          trk_pgf_r(III, [](const Sym& s, unsigned r) {
              UNPACK(s);
              const RationalGF G = iid_first(s);
              const RationalGF step = RationalGF(Poly{0.0, p}) + RationalGF(Poly{0.0, q}) * G;
              return rational_pow(step, r - 1) * G;
          }));
    c.add("iid.III.pgf_closed",
          "\\frac{(1-pz)(pz)^{k+r-1}(1-z+qp^{k-1}z^{k})^{r-1}}{(1-z+qp^{k}z^{k+1})^{r}}", IID,
          trk_pgf_r(III, [](const Sym& s, unsigned r) {
              UNPACK(s);
              const Poly num = Poly{1.0, -p} * terms({{k + static_cast<long>(r) - 1, pw(p, k + r - 1)}}) *
                               ppow(terms({{0, 1.0}, {1, -1.0}, {k, q * pw(p, k - 1)}}), r - 1);
              return RationalGF(num, ppow(iid_den(s), r));
          }));
    c.add("iid.III.double_pgf",
          "\\frac{1-z+p^{k}qz^{k+1}+w(1-z)pz(p^{k-1}z^{k-1}-1)}{1-z+p^{k}qz^{k+1}-wpz(1-z+p^{k-1}qz^{k})}", IID,
          trk_double(III, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double d = 1 - z + pw(p, k) * q * pw(z, k + 1);
              return (d + w * (1 - z) * p * z * (pw(p, k - 1) * pw(z, k - 1) - 1)) /
                     (d - w * p * z * (1 - z + pw(p, k - 1) * q * pw(z, k)));
          }));
    c.add("iid.III.lemma_factor", "\\frac{pz(1-z+p^{k-1}qz^{k})}{1-z+p^{k}qz^{k+1}}", IID,
          factor(III, true, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{1, p}, {2, -p}, {k + 1, pw(p, k) * q}}), iid_den(s));
          }));
    c.add("iid.III.pmf_recursion",
          "h_{r}(n)=h_{r}(n-1)-p^{k}qh_{r}(n-k-1)+ph_{r-1}(n-1)-ph_{r-1}(n-2)+p^{k}qh_{r-1}(n-k-1)", IID,
          trk_rec(III, false, [](const Sym& s, const Tab& h, long r, long n) {
              UNPACK(s);
              const double c0 = pw(p, k) * q;
              return h(r, n - 1) - c0 * h(r, n - k - 1) + p * h(r - 1, n - 1) - p * h(r - 1, n - 2) +
                     c0 * h(r - 1, n - k - 1);
          }, 2, from_k(1)),
          kUnrangedNote);
    c.add("iid.III.tail_recursion",
          "\\bar{h}_{r}(n)=2\\bar{h}_{r}(n-1)-\\bar{h}_{r}(n-2)+p^{k}q\\{\\bar{h}_{r}(n-k-2)-\\bar{h}_{r}(n-k-1)\\}"
          "+p\\bar{h}_{r-1}(n-1)-2\\bar{h}_{r-1}(n-2)+p\\bar{h}_{r-1}(n-3)",
          IID,
          trk_rec(III, true, [](const Sym& s, const Tab& t, long r, long n) {
              UNPACK(s);
              const double c0 = pw(p, k) * q;
              return 2 * t(r, n - 1) - t(r, n - 2) + c0 * (t(r, n - k - 2) - t(r, n - k - 1)) + p * t(r - 1, n - 1) -
                     2 * t(r - 1, n - 2) + p * t(r - 1, n - 3) - c0 * (t(r - 1, n - k - 2) - t(r - 1, n - k - 1));
          }, 2, from_max(2, 3)),
          kUnrangedNote);
    c.add("iid.III.mean_gf", "\\frac{(p^{k}-p)w^{2}+(1-p^{k})w}{p^{k}q(1-w)^{2}}", IID,
          moment_gf(III, false, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{1, 1 - pw(p, k)}, {2, pw(p, k) - p}}), pw(p, k) * q * one_minus(2));
          }));
    c.add("iid.III.mean_recursion", "\\mu_{r}=2\\mu_{r-1}-\\mu_{r-2},\\ r>2", IID,
          moment_rec(III, false, [](const Sym&, const Seq& m, long r) { return 2 * m(r - 1) - m(r - 2); }, 3));
    c.add("iid.III.mean_initial", "\\mu_{2}=\\frac{q+1-p^{k}}{p^{k}q}", IID, moment_values(III, false, [](const Sym& s) {
              UNPACK(s);
              const double d = pw(p, k) * q;
              return Values{{1, (1 - pw(p, k)) / d}, {2, (q + 1 - pw(p, k)) / d}};
          }));
    c.add("iid.III.second_gf", "\\frac{a_{1}w+a_{2}w^{2}+a_{3}w^{3}}{p^{2k}q^{2}(1-w)^{3}}", IID,
          moment_gf(III, true, [iid_II_a1](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k);
              const double a2 = pk * (3 + p * p + 2 * kd * q * (1 + p)) - 4 * p - 2 * pk * pk * q;
              const double a3 = 2 * p * p + pk * pk * q - (1 + p + 2 * q * kd) * pk * p;
              return RationalGF(terms({{1, iid_II_a1(s)}, {2, a2}, {3, a3}}), pk * pk * q * q * one_minus(3));
          }));
    c.add("iid.III.second_recursion", "U_{r}=3U_{r-1}-3U_{r-2}+U_{r-3},\\ r\\geq 4", IID,
          moment_rec(III, true, [](const Sym&, const Seq& m, long r) { return 3 * m(r - 1) - 3 * m(r - 2) + m(r - 3); },
                     4));
    c.add("iid.III.second_initial",
          "U_{3}=\\frac{12-12p+2p^{2}+p^{2k}q+p^{k}\\{p(2p+5)-2kq(3-2p)-9\\}}{p^{2k}q^{2}}", IID,
          moment_values(III, true, [iid_II_a1](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k), d = pk * pk * q * q;
              return Values{
                  {1, iid_II_a1(s) / d},
                  {2, (6 - 4 * p + pk * pk * q - pk * (6 + 2 * q * kd * (2 - p) - p * (3 + p))) / d},
                  {3, (12 - 12 * p + 2 * p * p + pk * pk * q + pk * (p * (2 * p + 5) - 2 * kd * q * (3 - 2 * p) - 9)) / d}};
          }));
}

// ---------------------------------------------------------------------------

void rth_markov(Catalog& c) {
    const Applies MK = Applies::Markov;
    auto d2 = [](const Sym& s) { return (1 - s.a) * (1 - s.b); };

    c.add("markov.H_factor",
          "H^{(a)}(z)=\\frac{(\\alpha z)^{k-1}[p+\\{q(1-\\beta)-\\beta p\\}z]z}{1-\\beta z-\\sum_{i=2}^{k}\\alpha^{i-2}"
          "(1-\\alpha)(1-\\beta)z^{i}}",
          MK, [](const Reference& R) -> Opt {
              Worst w;
              for (Scheme sc : kAllSchemes) {
                  auto e = factor(sc, false, [](const Sym& s) {
                      UNPACK(s);
                      return RationalGF(terms({{k, pw(a, k - 1) * p}, {k + 1, pw(a, k - 1) * (q * (1 - b) - b * p)}}),
                                        markov_D(s));
                  });
                  if (auto d = e(R)) w.add(*d, 0.0);
              }
              return w.get();
          });
    c.add("markov.I.A_factor",
          "A^{(I)}(z)=\\frac{(\\alpha z)^{k-1}[\\alpha+\\{(1-\\alpha)(1-\\beta)-\\alpha\\beta\\}z]z}{1-\\beta z-"
          "\\sum_{i=2}^{k}\\alpha^{i-2}(1-\\alpha)(1-\\beta)z^{i}}",
          MK, factor(I, true, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k, pw(a, k)}, {k + 1, pw(a, k - 1) * ((1 - a) * (1 - b) - a * b)}}), markov_D(s));
          }));
    c.add("markov.II.A_factor", "A^{(II)}(z)=\\frac{(1-\\alpha)z}{1-\\alpha z}\\cdot\\frac{(\\alpha z)^{k-1}(1-\\beta)z}{1-\\beta z-\\cdots}",
          MK, factor(II, true, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(Poly{0.0, 1 - a}, Poly{1.0, -a}) *
                     RationalGF(terms({{k, pw(a, k - 1) * (1 - b)}}), markov_D(s));
          }));
    c.add("markov.III.A_factor",
          "A^{(III)}(z)=\\alpha z+(1-\\alpha)z\\frac{(1-\\beta)z(\\alpha z)^{k-1}}{1-\\beta z-\\cdots}", MK,
          factor(III, true, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(Poly{0.0, a}) +
                     RationalGF(terms({{k + 1, (1 - a) * (1 - b) * pw(a, k - 1)}}), markov_D(s));
          }));

    // scheme I
    c.add("markov.I.double_pgf", "H^{(I)}(z,w)=\\frac{R(z)+wP(z)}{R(z)+wQ(z)}", MK,
          trk_double(I, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double R = polyval(markov_R(s), z);
              const double ak = pw(a, k - 1);
              const double P = ak * (p - a) * (a * pw(z, k + 2) - (a + 1) * pw(z, k + 1) + pw(z, k));
              const double Q = ak * (a * (1 - a - b) * pw(z, k + 2) - (1 - a - a * a - b) * pw(z, k + 1) - a * pw(z, k));
              return (R + w * P) / (R + w * Q);
          }));
    c.add("markov.I.lemma_factor",
          "\\frac{\\alpha^{k-1}\\{\\alpha z^{k}-(1-\\alpha-\\alpha^{2}-\\beta)z^{k+1}-\\alpha(1-\\alpha-\\beta)z^{k+2}\\}}{R(z)}",
          MK, factor(I, true, [](const Sym& s) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              return RationalGF(
                  terms({{k, ak * a}, {k + 1, -ak * (1 - a - a * a - b)}, {k + 2, -ak * a * (1 - a - b)}}), markov_R(s));
          }));
    c.add("markov.I.lemma_h1",
          "H_{1}(z)=\\frac{\\alpha^{k-1}\\{\\alpha(\\beta-q)z^{k+2}+(q-\\beta-\\alpha p)z^{k+1}+pz^{k}\\}}{R(z)}", MK,
          factor(I, false, [](const Sym& s) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              return RationalGF(terms({{k, ak * p}, {k + 1, ak * (q - b - a * p)}, {k + 2, ak * a * (b - q)}}),
                                markov_R(s));
          }));
    c.add("markov.I.pmf_recursion",
          "h_{r}(n)=(\\alpha+\\beta)h_{r}(n-1)+(1-\\alpha-\\beta)h_{r}(n-2)-\\alpha^{k-1}(1-\\alpha)(1-\\beta)h_{r}(n-k-1)"
          "+\\alpha^{k}h_{r-1}(n-k)",
          MK, trk_rec(I, false, [d2](const Sym& s, const Tab& h, long r, long n) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              return (a + b) * h(r, n - 1) + (1 - a - b) * h(r, n - 2) - ak * d2(s) * h(r, n - k - 1) +
                     ak * a * h(r - 1, n - k) - (1 - a - a * a - b) * ak * h(r - 1, n - k - 1) -
                     (1 - a - b) * ak * a * h(r - 1, n - k - 2);
          }, 2, from_k(3)));
    c.add("markov.I.h1_initial",
          "h_{1}(k)=p\\alpha^{k-1},\\ h_{1}(k+1)=q\\alpha^{k-1}(1-\\beta),\\ h_{1}(k+2)=\\alpha^{k-1}(1-\\beta)\\{\\beta q+p(1-\\alpha)\\}",
          MK, h1_values(I, [](const Sym& s) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, p * ak);
              out.emplace_back(k + 1, q * ak * (1 - b));
              out.emplace_back(k + 2, ak * (1 - b) * (b * q + p * (1 - a)));
              return out;
          }));
    c.add("markov.I.tail_recursion",
          "\\bar{h}_{r}(n)=\\bar{h}_{r}(n-1)-(\\alpha+\\beta)(\\bar{h}_{r}(n-2)-\\bar{h}_{r}(n-1))-(1-\\alpha-\\beta)"
          "(\\bar{h}_{r}(n-3)-\\bar{h}_{r}(n-2))",
          MK, trk_rec(I, true, [d2](const Sym& s, const Tab& t, long r, long n) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              return t(r, n - 1) - (a + b) * (t(r, n - 2) - t(r, n - 1)) - (1 - a - b) * (t(r, n - 3) - t(r, n - 2)) +
                     ak * d2(s) * (t(r, n - k - 2) - t(r, n - k - 1)) -
                     ak * a * (t(r - 1, n - k - 1) - t(r - 1, n - k)) +
                     ak * (1 - a - a * a - b) * (t(r - 1, n - k - 2) - t(r - 1, n - k - 1)) +
                     ak * a * (1 - a - b) * (t(r - 1, n - k - 3) - t(r - 1, n - k - 2));
          }, 2, from_k(3)),
          kUnrangedNote);
    auto mkI_m1 = [](const Sym& s) {
        UNPACK(s);
        return a * (2 - a - b) + pw(a, k) * (a * (b - q) - p);
    };
    c.add("markov.I.mean_gf",
          "\\frac{[\\alpha(2-\\alpha-\\beta)+\\alpha^{k}\\{\\alpha(\\beta-q)-p\\}]w+(1-\\alpha)(p-\\alpha)\\alpha^{k}w^{2}}"
          "{(1-\\alpha)(1-\\beta)\\alpha^{k}(w-1)^{2}}",
          MK, moment_gf(I, false, [mkI_m1, d2](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{1, mkI_m1(s)}, {2, (1 - a) * (p - a) * pw(a, k)}}), d2(s) * pw(a, k) * one_minus(2));
          }));
    c.add("markov.I.mean_recursion", "\\mu_{r}=2\\mu_{r-1}-\\mu_{r-2}", MK,
          moment_rec(I, false, [](const Sym&, const Seq& m, long r) { return 2 * m(r - 1) - m(r - 2); }, 3));
    c.add("markov.I.mean_initial",
          "\\mu_{2}=\\frac{2\\alpha(2-\\alpha-\\beta)+\\alpha^{k}\\{2\\alpha\\beta-\\alpha q-2\\alpha+\\alpha^{2}-p\\}}"
          "{(1-\\alpha)(1-\\beta)\\alpha^{k}}",
          MK, moment_values(I, false, [mkI_m1, d2](const Sym& s) {
              UNPACK(s);
              const double d = d2(s) * pw(a, k);
              return Values{{1, mkI_m1(s) / d},
                            {2, (2 * a * (2 - a - b) + pw(a, k) * (2 * a * b - a * q - 2 * a + a * a - p)) / d}};
          }));
    auto mkI_a1 = [](const Sym& s) {
        UNPACK(s);
        return pw(a, 2 * k) * (1 - a) * (1 - b) * (p + (b - q) * a) + 2 * a * a * (2 - a - b) * (2 - a - b) -
               pw(a, k + 1) * (2 * p * (1 - a) * (2 - a - b) + 2 * kd * (1 - a) * (1 - b) * (2 - a - b) +
                               (1 - b) * (b + a * (5 - 3 * a - 3 * b)));
    };
    auto mkI_den = [](const Sym& s) {
        UNPACK(s);
        return pw(a, 2 * k) * (1 - a) * (1 - a) * (1 - b) * (1 - b);
    };
    c.add("markov.I.second_gf",
          "\\frac{a_{1}w+a_{2}\\alpha^{k+1}w^{2}+a_{3}w^{3}}{\\alpha^{2k}(1-\\alpha)^{2}(1-\\beta)^{2}(1-w)^{3}}", MK,
          moment_gf(I, true, [mkI_a1, mkI_den](const Sym& s) {
              UNPACK(s);
              const double a2 = 2 * kd * (1 - a) * (1 - b) * (2 - a - b) + 2 * p * (1 - a) * (2 - a - b) -
                                (1 + a) * b * b + (8 - 5 * a) * a * b + b - a * (11 - (13 - 4 * a) * a) -
                                pw(a, k - 1) * (2 * p * (1 - a) * (1 - (1 - a) * a - b) +
                                                a * (1 - b) * (2 - b + a * (3 - 3 * a - b)));
              const double a3 = pw(a, 2 * k) * (1 - a) * (1 - a) * (p - a) * (1 - 2 * a - b);
              return RationalGF(terms({{1, mkI_a1(s)}, {2, a2 * pw(a, k + 1)}, {3, a3}}), mkI_den(s) * one_minus(3));
          }));
    c.add("markov.I.second_recursion", "U_{r}=3U_{r-1}-3U_{r-2}+U_{r-3},\\ r\\geq 4", MK,
          moment_rec(I, true, [](const Sym&, const Seq& m, long r) { return 3 * m(r - 1) - 3 * m(r - 2) + m(r - 3); }, 4));
    c.add("markov.I.second_initial", "c_{2}=6\\alpha^{4}-4\\alpha^{k+4}+2\\alpha^{k+3}\\{11-2p-2k(1-\\beta)-7\\beta\\}", MK,
          moment_values(I, true, [mkI_a1, mkI_den](const Sym& s) {
              UNPACK(s);
              const double c2 =
                  6 * pw(a, 4) - 4 * pw(a, k + 4) + 2 * pw(a, k + 3) * (11 - 2 * p - 2 * kd * (1 - b) - 7 * b) -
                  12 * pw(a, 3) * (2 - b) + 6 * a * a * (2 - b) * (2 - b) + p * pw(a, 2 * k) * (1 - b) -
                  pw(a, 2 * k + 3) * (3 - 2 * p - 3 * b) - pw(a, 2 * k + 1) * (1 - 2 * p * (2 - b) - (3 - 2 * b) * b) +
                  pw(a, 2 * k + 2) * (6 - 7 * p - 10 * b + 3 * p * b + 4 * b * b) -
                  2 * pw(a, k + 2) * (13 - 6 * kd - 6 * p - 2 * (8 - 4 * kd - p) * b + (5 - 2 * kd) * b * b) -
                  2 * pw(a, k + 1) * (4 * p + 2 * kd * (2 - b) * (1 - b) + b - b * (2 * p + b));
              const double c3 =
                  12 * a * a * (2 - a - b) * (2 - a - b) -
                  pw(a, k + 1) * ((3 - a) * a * (7 - 4 * a) + b - a * (24 - 11 * a) * b - (1 - 7 * a) * b * b +
                                  2 * p * (1 - a) * (2 - a - b) + 2 * kd * (1 - a) * (1 - b) * (2 - a - b)) +
                  pw(a, 2 * k + 1) * (a * (19 - (7 - a) * a) - 1 + 4 * b - 2 * a * b * (13 - 5 * a) -
                                      3 * (1 - 3 * a) * b * b) +
                  pw(a, 2 * k) * (p * (1 - a) * (1 - b + a * (9 - 4 * a - 5 * b)));
              const double d = mkI_den(s);
              return Values{{1, mkI_a1(s) / d}, {2, c2 / d}, {3, c3 / d}};
          }),
          "operators missing between terms of the c_2 and c_3 blocks read as '+'");

    // scheme II
    auto mkII_R = [](const Sym& s) {
        UNPACK(s);
        return terms({{0, 1.0}, {1, -(a + b)}, {2, -(1 - a - b)}, {k + 1, (1 - a) * (1 - b) * pw(a, k - 1)}});
    };
    c.add("markov.II.double_pgf", "H^{(II)}(z,w)=\\frac{P(z)w+R(z)}{Q(z)w+R(z)}", MK,
          trk_double(II, [mkII_R](const Sym& s, double z, double w) {
              UNPACK(s);
              const double R = polyval(mkII_R(s), z);
              const double P = pw(a, k) * (b - q) * pw(z, k + 2) + (q * a - p - a * b) * pw(a, k - 1) * pw(z, k + 1) +
                               p * pw(a, k - 1) * pw(z, k);
              const double Q = -(1 - a) * (1 - b) * pw(a, k - 1) * pw(z, k + 1);
              return (P * w + R) / (Q * w + R);
          }));
    c.add("markov.II.lemma_factor", "\\frac{(1-\\alpha)(1-\\beta)\\alpha^{k-1}z^{k+1}}{R(z)}", MK,
          factor(II, true, [mkII_R](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k + 1, (1 - a) * (1 - b) * pw(a, k - 1)}}), mkII_R(s));
          }));
    c.add("markov.II.lemma_h1",
          "H_{1}(z)=\\frac{(\\beta-q)\\alpha^{k+1}z^{k+2}+\\alpha^{k}(q-p\\alpha-\\beta)z^{k+1}+\\alpha^{k}pz^{k}}{R(z)}", MK,
          factor(II, false, [mkII_R](const Sym& s) {
              UNPACK(s);
              return RationalGF(
                  terms({{k, pw(a, k) * p}, {k + 1, pw(a, k) * (q - p * a - b)}, {k + 2, (b - q) * pw(a, k + 1)}}),
                  mkII_R(s));
          }));
    c.add("markov.II.pmf_recursion",
          "h_{r}(n)=(\\alpha+\\beta)h_{r}(n-1)+(1-\\alpha-\\beta)\\alpha h_{r}(n-2)-\\alpha^{k-1}(1-\\alpha)(1-\\beta)h_{r}(n-k-1)"
          "+\\alpha^{k-1}(1-\\alpha)(1-\\beta)h_{r-1}(n-k-1)",
          MK, trk_rec(II, false, [d2](const Sym& s, const Tab& h, long r, long n) {
              UNPACK(s);
              const double c0 = pw(a, k - 1) * d2(s);
              return (a + b) * h(r, n - 1) + (1 - a - b) * a * h(r, n - 2) - c0 * h(r, n - k - 1) +
                     c0 * h(r - 1, n - k - 1);
          }, 2, from_k(1)),
          kUnrangedNote);
    c.add("markov.II.h1_initial",
          "h_{1}(k)=p\\alpha^{k},\\ h_{1}(k+1)=q\\alpha^{k}(1-\\beta),\\ h_{1}(k+2)=\\alpha^{k}(1-\\beta)\\{\\beta q+p(1-\\alpha)\\}",
          MK, h1_values(II, [](const Sym& s) {
              UNPACK(s);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, p * pw(a, k));
              out.emplace_back(k + 1, q * pw(a, k) * (1 - b));
              out.emplace_back(k + 2, pw(a, k) * (1 - b) * (b * q + p * (1 - a)));
              return out;
          }));
    c.add("markov.II.tail_recursion",
          "\\bar{h}_{r}(n)=(1+\\alpha+\\beta)\\bar{h}_{r}(n-1)-(\\alpha+\\beta)\\bar{h}_{r}(n-2)-\\alpha(1-\\alpha-\\beta)"
          "\\{\\bar{h}_{r}(n-3)-\\bar{h}_{r}(n-2)\\}",
          MK, trk_rec(II, true, [d2](const Sym& s, const Tab& t, long r, long n) {
              UNPACK(s);
              const double c0 = pw(a, k - 1) * d2(s);
              return (1 + a + b) * t(r, n - 1) - (a + b) * t(r, n - 2) - a * (1 - a - b) * (t(r, n - 3) - t(r, n - 2)) +
                     c0 * (t(r, n - k - 2) - t(r, n - k - 1)) - c0 * (t(r - 1, n - k - 2) - t(r - 1, n - k - 1));
          }, 2, from_max(2, 3)),
          kUnrangedNote);
    auto mkII_m1 = [](const Sym& s) {
        UNPACK(s);
        return pw(a, k - 1) * (a * b - q * a - p) + (2 - a - b);
    };
    c.add("markov.II.mean_gf",
          "\\frac{\\{\\alpha^{k-1}(\\alpha\\beta-q\\alpha-p)+(2-\\alpha-\\beta)\\}w+\\alpha^{k-1}(1-\\alpha)(p-\\alpha)w^{2}}"
          "{(1-\\alpha)(1-\\beta)\\alpha^{k-1}(1-w)^{2}}",
          MK, moment_gf(II, false, [mkII_m1, d2](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{1, mkII_m1(s)}, {2, pw(a, k - 1) * (1 - a) * (p - a)}}),
                                d2(s) * pw(a, k - 1) * one_minus(2));
          }));
    c.add("markov.II.mean_recursion", "\\mu_{r}=2\\mu_{r-1}-\\mu_{r-2}", MK,
          moment_rec(II, false, [](const Sym&, const Seq& m, long r) { return 2 * m(r - 1) - m(r - 2); }, 3));
    c.add("markov.II.mean_initial",
          "\\mu_{2}=\\frac{\\alpha^{k-1}(2\\alpha\\beta-3q\\alpha-2p-p\\alpha+\\alpha^{2})+2(2-\\alpha-\\beta)}"
          "{(1-\\alpha)(1-\\beta)\\alpha^{k-1}}",
          MK, moment_values(II, false, [mkII_m1, d2](const Sym& s) {
              UNPACK(s);
              const double d = d2(s) * pw(a, k - 1);
              return Values{{1, mkII_m1(s) / d},
                            {2, (pw(a, k - 1) * (2 * a * b - 3 * q * a - 2 * p - p * a + a * a) + 2 * (2 - a - b)) / d}};
          }));
    struct MkII {
        double a1, a2, a3, a4, brace_minus, brace_plus;
    };
    auto mkII = [](const Sym& s) {
        UNPACK(s);
        MkII m{};
        m.a1 = 1 - a;
        m.a2 = 1 - b;
        m.a3 = (b - q) * a + p;
        m.a4 = b + a * (5 - 3 * a - 3 * b);
        const double base = 2 * p * m.a1 * (m.a1 + m.a2) + 2 * kd * m.a1 * m.a2 * (m.a1 + m.a2);
        m.brace_minus = base - m.a2 * m.a4;
        m.brace_plus = base + m.a2 * m.a4;
        return m;
    };
    c.add("markov.II.second_gf",
          "\\frac{A_{1}w+A_{2}w^{2}+a_{1}a_{2}a_{3}\\alpha^{2k}w^{3}}{\\alpha^{2k}a_{1}^{2}a_{2}^{2}(1-w)^{3}}", MK,
          moment_gf(II, true, [mkII](const Sym& s) {
              UNPACK(s);
              const MkII m = mkII(s);
              const double a2k = pw(a, 2 * k);
              const double A1 = m.a1 * m.a2 * m.a3 * a2k + 2 * a * (m.a1 + m.a2) * (m.a1 + m.a2) -
                                pw(a, k + 1) * m.brace_minus;
              const double A2 = pw(a, k) * (2 * kd * a * m.a1 * m.a2 * (m.a1 + m.a2) -
                                            2 * pw(a, k) * m.a1 * m.a2 * m.a3 +
                                            a * (2 * p * m.a1 * (m.a1 + m.a2) + m.a2 * m.a4));
              return RationalGF(terms({{1, A1}, {2, A2}, {3, m.a1 * m.a2 * m.a3 * a2k}}),
                                a2k * m.a1 * m.a1 * m.a2 * m.a2 * one_minus(3));
          }));
    c.add("markov.II.second_recursion", "U_{r}=3U_{r-1}-3U_{r-2}+U_{r-3},\\ r\\geq 4", MK,
          moment_rec(II, true, [](const Sym&, const Seq& m, long r) { return 3 * m(r - 1) - 3 * m(r - 2) + m(r - 3); }, 4));
    c.add("markov.II.second_initial",
          "B_{3}=a_{1}a_{2}a_{3}\\alpha^{2k}+12\\alpha^{2}(a_{1}+a_{2})^{2}-3\\alpha^{k+1}\\{2pa_{1}(a_{1}+a_{2})+"
          "2ka_{1}a_{2}(a_{1}+a_{2})+a_{2}a_{4}\\}",
          MK, moment_values(II, true, [mkII](const Sym& s) {
              UNPACK(s);
              const MkII m = mkII(s);
              const double a2k = pw(a, 2 * k), sq = (m.a1 + m.a2) * (m.a1 + m.a2), lead = m.a1 * m.a2 * m.a3 * a2k;
              const double d = a2k * m.a1 * m.a1 * m.a2 * m.a2;
              const double B1 = lead + 2 * a * sq - pw(a, k + 1) * m.brace_minus;
              const double B2 = lead + 6 * a * a * sq - 2 * pw(a, k + 1) * m.brace_minus;
              const double B3 = lead + 12 * a * a * sq - 3 * pw(a, k + 1) * m.brace_plus;
              return Values{{1, B1 / d}, {2, B2 / d}, {3, B3 / d}};
          }));

    // scheme III
    auto mkIII_extra = [](const Sym& s, double z) {
        UNPACK(s);
        return a * (1 - a - b) * z * z * z + a * (a + b) * z * z - a * z;
    };
    c.add("markov.III.double_pgf", "H^{(III)}(z,w)=\\frac{P(z)w+R(z)}{Q(z)w+R(z)}", MK,
          trk_double(III, [mkII_R, mkIII_extra](const Sym& s, double z, double w) {
              UNPACK(s);
              const double R = polyval(mkII_R(s), z);
              const double P = pw(a, k) * (b - q) * pw(z, k + 2) + pw(a, k - 1) * (p + (b - q) * a) * pw(z, k + 1) +
                               p * pw(a, k - 1) * pw(z, k) + mkIII_extra(s, z);
              const double Q = -(1 - a) * (1 - b) * pw(a, k - 1) * pw(z, k + 1) + mkIII_extra(s, z);
              return (P * w + R) / (Q * w + R);
          }));
    c.add("markov.III.lemma_factor",
          "\\frac{(1-\\alpha)(1-\\beta)\\alpha^{k-1}z^{k+1}-\\alpha(1-\\alpha-\\beta)z^{3}-\\alpha(\\alpha+\\beta)z^{2}+\\alpha z}{R(z)}",
          MK, factor(III, true, [mkII_R](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{1, a}, {2, -a * (a + b)}, {3, -a * (1 - a - b)}, {k + 1, (1 - a) * (1 - b) * pw(a, k - 1)}}),
                                mkII_R(s));
          }));
    c.add("markov.III.lemma_h1",
          "H_{1}(z)=\\frac{(\\beta-q)\\alpha^{k+1}z^{k+2}-\\alpha^{k}(p\\alpha+\\beta-q)z^{k+1}+p\\alpha^{k}z^{k}}{R(z)}", MK,
          factor(III, false, [mkII_R](const Sym& s) {
              UNPACK(s);
              return RationalGF(
                  terms({{k, p * pw(a, k)}, {k + 1, -pw(a, k) * (p * a + b - q)}, {k + 2, (b - q) * pw(a, k + 1)}}),
                  mkII_R(s));
          }));
    c.add("markov.III.pmf_recursion",
          "h_{r}(n)=(\\alpha+\\beta)h_{r}(n-1)+(1-\\alpha-\\beta)h_{r}(n-2)-\\alpha^{k-1}(1-\\alpha)(1-\\beta)h_{r}(n-k-1)"
          "+\\alpha h_{r-1}(n-1)",
          MK, trk_rec(III, false, [d2](const Sym& s, const Tab& h, long r, long n) {
              UNPACK(s);
              const double c0 = pw(a, k - 1) * d2(s);
              return (a + b) * h(r, n - 1) + (1 - a - b) * h(r, n - 2) - c0 * h(r, n - k - 1) + a * h(r - 1, n - 1) -
                     a * (a + b) * h(r - 1, n - 2) - a * (1 - a - b) * h(r - 1, n - 3) + c0 * h(r - 1, n - k - 1);
          }, 2, from_k(2)),
          "no range for r printed; checked for r >= 2");
    c.add("markov.III.h1_initial",
          "h_{1}(k)=p\\alpha^{k},\\ h_{1}(k+1)=q\\alpha^{k}(1-\\beta),\\ h_{1}(k+2)=\\alpha^{k}(1-\\beta)\\{\\beta q+p(1-\\alpha)\\}",
          MK, h1_values(III, [](const Sym& s) {
              UNPACK(s);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, p * pw(a, k));
              out.emplace_back(k + 1, q * pw(a, k) * (1 - b));
              out.emplace_back(k + 2, pw(a, k) * (1 - b) * (b * q + p * (1 - a)));
              return out;
          }));
    c.add("markov.III.tail_recursion",
          "\\bar{h}_{r}(n)=(1+\\alpha+\\beta)\\bar{h}_{r}(n-1)-(1-\\alpha-\\beta)\\bar{h}_{r}(n-3)", MK,
          trk_rec(III, true, [d2](const Sym& s, const Tab& t, long r, long n) {
              UNPACK(s);
              const double c0 = pw(a, k - 1) * d2(s);
              return (1 + a + b) * t(r, n - 1) - (1 - a - b) * t(r, n - 3) - c0 * (t(r, n - k - 2) - t(r, n - k - 1)) +
                     a * t(r - 1, n - 1) - a * (1 + a + b) * t(r - 1, n - 2) + a * t(r - 1, n - 3) +
                     a * (1 - a - b) * t(r - 1, n - 4) - c0 * (t(r - 1, n - k - 2) - t(r - 1, n - k - 1));
          }, 2, from_max(2, 4)),
          kUnrangedNote);
    auto mkIII_m = [](const Sym& s) {
        UNPACK(s);
        const double m1 = pw(a, k - 1) * ((b - q) * a - p) + (2 - a - b);
        const double m2 = (q - b) * pw(a, k) + p * pw(a, k - 1) + a * a - (2 - b) * a;
        return std::pair{m1, m2};
    };
    c.add("markov.III.mean_gf", "\\frac{a_{1}w^{2}+a_{2}w}{\\alpha^{k-1}(1-\\alpha)(1-\\beta)(1-w)^{2}}", MK,
          moment_gf(III, false, [mkIII_m, d2](const Sym& s) {
              UNPACK(s);
              const auto [a1, a2] = mkIII_m(s);
              return RationalGF(terms({{1, a2}, {2, a1}}), pw(a, k - 1) * d2(s) * one_minus(2));
          }));
    c.add("markov.III.mean_recursion", "\\mu_{r}=2\\mu_{r-1}-\\mu_{r-2}", MK,
          moment_rec(III, false, [](const Sym&, const Seq& m, long r) { return 2 * m(r - 1) - m(r - 2); }, 3));
    c.add("markov.III.mean_initial",
          "\\mu_{2}=\\frac{\\alpha^{k-1}\\{(\\beta-q)\\alpha-p\\}+(2-\\alpha)(2-\\alpha-\\beta)}{(1-\\alpha)(1-\\beta)\\alpha^{k-2}}",
          MK, moment_values(III, false, [mkIII_m, d2](const Sym& s) {
              UNPACK(s);
              return Values{{1, mkIII_m(s).second / (d2(s) * pw(a, k - 1))},
                            {2, (pw(a, k - 1) * ((b - q) * a - p) + (2 - a) * (2 - a - b)) / (d2(s) * pw(a, k - 2))}};
          }));
    auto mkIII_lead = [](const Sym& s) {
        UNPACK(s);
        return pw(a, 2 * k) * (1 - a) * (1 - b) * (p + (b - q) * a);
    };
    auto mkIII_a1 = [mkIII_lead](const Sym& s) {
        UNPACK(s);
        return mkIII_lead(s) + 2 * a * a * (2 - a - b) * (2 - a - b) -
               pw(a, k + 1) * (2 * p * (1 - a) * (2 - a - b) + 2 * kd * (1 - a) * (1 - b) * (2 - a - b) -
                               (1 - b) * (b + a * (5 - 3 * a - 3 * b)));
    };
    c.add("markov.III.second_gf",
          "\\frac{a_{1}w+a_{2}w^{2}+a_{3}w^{3}}{\\alpha^{2k}(1-\\alpha)^{2}(1-\\beta)^{2}(1-w)^{3}}", MK,
          moment_gf(III, true, [mkIII_lead, mkIII_a1, mkI_den](const Sym& s) {
              UNPACK(s);
              const double a2 =
                  -2 * mkIII_lead(s) + ((1 - b) * (2 * kd - 5) + 2 * p) * pw(a, k + 4) +
                  pw(a, k + 3) * ((1 - b) * (5 * (1 - b) - 4 * p - 2 * kd * (2 - b) + 3) + 2 * p * b) -
                  (2 * p + (2 * kd - 1) * (1 - b)) * pw(a, k + 2) +
                  (2 * p * (2 - b) + 2 * kd * (2 - b) * (1 - b) + b * (1 - b)) * pw(a, k + 1) - 4 * pw(a, 5) -
                  4 * pw(a, 3) * (2 - b) * (2 - 2 * a - b);
              const double a3 = mkIII_lead(s) + 2 * pw(a, 4) * (2 - a - b) * (2 - a - b) -
                                pw(a, k + 2) * (2 * p * (1 - a) * (2 - a - b) + 2 * kd * (1 - a) * (1 - b) * (2 - a - b) -
                                                (1 - b) * (4 - 3 * b - a * (11 - 5 * a - 5 * b)));
              return RationalGF(terms({{1, mkIII_a1(s)}, {2, a2}, {3, a3}}), mkI_den(s) * one_minus(3));
          }));
    c.add("markov.III.second_recursion", "U_{r}=3U_{r-1}-3U_{r-2}+U_{r-3},\\ r\\geq 4", MK,
          moment_rec(III, true, [](const Sym&, const Seq& m, long r) { return 3 * m(r - 1) - 3 * m(r - 2) + m(r - 3); },
                     4));
    c.add("markov.III.second_initial",
          "B_{3}=\\alpha^{2k}(1-\\alpha)(1-\\beta)\\{p+(\\beta-q)\\alpha\\}+2\\alpha^{2}(\\alpha^{2}-6\\alpha+6)(2-\\alpha-\\beta)^{2}",
          MK, moment_values(III, true, [mkIII_lead, mkIII_a1, mkI_den](const Sym& s) {
              UNPACK(s);
              const double sq = (2 - a - b) * (2 - a - b);
              const double B2 = mkIII_lead(s) + 2 * a * a * (3 - 2 * a) * sq -
                                pw(a, k + 1) * (2 * p * (2 - a) * (1 - a) * (2 - a - b) +
                                                2 * kd * (2 - a) * (1 - a) * (1 - b) * (2 - a - b) -
                                                (1 - b) * (a * (2 - a) * (7 - 5 * a) + (5 * a * a - 9 * a + 2) * b));
              const double B3 = mkIII_lead(s) + 2 * a * a * (a * a - 6 * a + 6) * sq -
                                pw(a, k + 1) * (2 * p * (1 - a) * (3 - 2 * a) * (2 - a - b) +
                                                2 * kd * (1 - a) * (2 - 2 * a) * (1 - b) * (2 - a - b) -
                                                (1 - b) * (10 * pw(a, 3) + 10 * a * a * b - 31 * a * a - 15 * a * b +
                                                           23 * a + 3 * b));
              const double d = mkI_den(s);
              return Values{{1, mkIII_a1(s) / d}, {2, B2 / d}, {3, B3 / d}};
          }),
          "the unclosed bracket in B_2 closed at the end of the expression");
}

// ---------------------------------------------------------------------------

void counts_duality(Catalog& c) {
    c.add("duality.trk_counts", "N_{n}^{(a)}<r\\text{ if and only if }T_{r,k}^{(a)}>n", Applies::Any,
          [](const Reference& R) -> Opt {
              Worst w;
              for (Scheme sc : kAllSchemes) {
                  for (long r = 1; r <= static_cast<long>(R.r_max()); ++r) {
                      for (long n = 0; n <= R.n_max(); ++n) {
                          double below = 0.0;
                          for (long x = 0; x < r; ++x) below += R.g(sc, n, x);
                          w.add(R.hbar(sc, r, n), below);
                      }
                  }
              }
              return w.get();
          });
    c.add("duality.counts_double_pgf", "G(z,w)=\\frac{(w-1)H(z,w)+1}{w(1-z)}", Applies::Any,
          [](const Reference& R) -> Opt {
              Worst w;
              for (Scheme sc : kAllSchemes) {
                  for (const auto& [z, x] : kZW) {
                      w.add(((x - 1) * R.trk_double(sc, z, x) + 1) / (x * (1 - z)), R.counts_double(sc, z, x));
                  }
              }
              return w.get();
          });
    c.add("duality.counts_renewal", "G(z,w)=\\frac{1}{1-z}\\left[1-\\frac{H(z)(1-w)}{1-wA(z)}\\right]", Applies::Any,
          [](const Reference& R) -> Opt {
              Worst w;
              for (Scheme sc : kAllSchemes) {
                  for (const auto& [z, x] : kZW) {
                      const double H = R.first(sc).eval(z), A = R.inter(sc).eval(z);
                      w.add((1 - H * (1 - x) / (1 - x * A)) / (1 - z), R.counts_double(sc, z, x));
                  }
              }
              return w.get();
          });
}

Values g_start(long k, double at_k) {
    Values out;
    for (long n = 0; n < k; ++n) out.emplace_back(n, 1.0);
    out.emplace_back(k, at_k);
    return out;
}

std::vector<std::tuple<long, long, double>> g_start_pmf(long k, double pk) {
    std::vector<std::tuple<long, long, double>> out;
    for (long n = 0; n < k; ++n) {
        out.emplace_back(n, 0, 1.0);
        out.emplace_back(n, 1, 0.0);
    }
    out.emplace_back(k, 0, 1 - pk);
    out.emplace_back(k, 1, pk);
    out.emplace_back(k, 2, 0.0);
    return out;
}

void counts_iid(Catalog& c) {
    const Applies IID = Applies::IID;

    // scheme I
    c.add("counts.iid.I.double_pgf", "G^{(I)}(z,w)=\\frac{1-p^{k}z^{k}}{1-z-p^{k}wz^{k}+(q+pw)p^{k}z^{k+1}}", IID,
          counts_double(I, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double pk = pw(p, k);
              return (1 - pk * pw(z, k)) / (1 - z - pk * w * pw(z, k) + (q + p * w) * pk * pw(z, k + 1));
          }));
    c.add("counts.iid.I.lemma_recursion", "G_{n}(w)=G_{n-1}(w)+p^{k}wG_{n-k}(w)-(q+pw)p^{k}G_{n-k-1}(w)", IID,
          G_rec(I, [](const Sym& s, const Seq& G, long n, double w) {
              UNPACK(s);
              const double pk = pw(p, k);
              return G(n - 1) + pk * w * G(n - k) - (q + p * w) * pk * G(n - k - 1);
          }, from_k(1)));
    c.add("counts.iid.I.lemma_initial", "G_{k}(w)=1-p^{k}+p^{k}w", IID, G_values(I, [](const Sym& s, double w) {
              UNPACK(s);
              return g_start(k, 1 - pw(p, k) + pw(p, k) * w);
          }));
    c.add("counts.iid.I.pmf_recursion",
          "g_{n}(x)=g_{n-1}(x)+p^{k}g_{n-k}(x-1)-p^{k}qg_{n-k-1}(x)-p^{k+1}g_{n-k-1}(x-1)", IID,
          g_rec(I, [](const Sym& s, const Tab& g, long n, long x) {
              UNPACK(s);
              const double pk = pw(p, k);
              return g(n - 1, x) + pk * g(n - k, x - 1) - pk * q * g(n - k - 1, x) - pk * p * g(n - k - 1, x - 1);
          }, from_k(1)));
    c.add("counts.iid.I.pmf_initial", "g_{k}(1)=p^{k}", IID,
          g_values(I, [](const Sym& s) { return g_start_pmf(s.k, std::pow(s.p, s.k)); }));
    c.add("counts.iid.I.mean_gf", "\\frac{(pz)^{k}(1-pz)}{(1-z)^{2}(1-p^{k}z^{k})}", IID,
          count_moment_gf(I, false, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k, pw(p, k)}, {k + 1, -pw(p, k + 1)}}),
                                one_minus(2) * terms({{0, 1.0}, {k, -pw(p, k)}}));
          }));
    c.add("counts.iid.I.mean_recursion",
          "\\tau_{n}=2\\tau_{n-1}-\\tau_{n-2}+p^{k}\\tau_{n-k}-2p^{k}\\tau_{n-k-1}+p^{k}\\tau_{n-k-2}", IID,
          count_moment_rec(I, false, [](const Sym& s, const Seq& t, long n) {
              UNPACK(s);
              const double pk = pw(p, k);
              return 2 * t(n - 1) - t(n - 2) + pk * t(n - k) - 2 * pk * t(n - k - 1) + pk * t(n - k - 2);
          }, from_k(2)));
    c.add("counts.iid.I.mean_initial", "\\tau_{k}=p^{k},\\ \\tau_{k+1}=p^{k}(2-p)", IID,
          count_moment_values(I, false, [](const Sym& s) {
              UNPACK(s);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, pw(p, k));
              out.emplace_back(k + 1, pw(p, k) * (2 - p));
              return out;
          }));
    c.add("counts.iid.I.second_gf",
          "\\frac{(pz)^{k}(1-pz)\\{1-z+p^{k}z^{k}+(q-p)p^{k}z^{k+1}\\}}{(1-z)^{3}(1-p^{k}z^{k})^{2}}", IID,
          count_moment_gf(I, true, [](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k);
              const Poly num = terms({{k, pk}, {k + 1, -pk * p}}) *
                               terms({{0, 1.0}, {1, -1.0}, {k, pk}, {k + 1, (q - p) * pk}});
              return RationalGF(num, one_minus(3) * ppow(terms({{0, 1.0}, {k, -pk}}), 2));
          }));
    c.add("counts.iid.I.second_recursion",
          "\\nu_{n}=3\\nu_{n-1}-3\\nu_{n-2}+\\nu_{n-3}+2p^{k}\\nu_{n-k}-6p^{k}\\nu_{n-k-1}+6p^{k}\\nu_{n-k-2}-2p^{k}\\nu_{n-k-3}",
          IID, count_moment_rec(I, true, [](const Sym& s, const Seq& v, long n) {
              UNPACK(s);
              const double pk = pw(p, k), p2k = pk * pk;
              return 3 * v(n - 1) - 3 * v(n - 2) + v(n - 3) + 2 * pk * v(n - k) - 6 * pk * v(n - k - 1) +
                     6 * pk * v(n - k - 2) - 2 * pk * v(n - k - 3) - p2k * v(n - 2 * k) + 3 * p2k * v(n - 2 * k - 1) -
                     3 * p2k * v(n - 2 * k - 2) + p2k * v(n - 2 * k - 3);
          }, [](const Sym& s) { return 2 * static_cast<long>(s.k) + 4; }));
    c.add("counts.iid.I.second_initial", "\\nu_{2k}=3p^{k}(k^{2}-5k+12)+3p^{2k}", IID,
          count_moment_values(I, true, [](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k), p2k = pk * pk;
              Values out;
              for (long n = k; n < 2 * k; ++n) {
                  const double x = static_cast<double>(n);
                  out.emplace_back(n, (x * x + (3 - 2 * kd) * x + (kd - 1) * (kd - 2 * p)) / 2 * pk);
              }
              out.emplace_back(2 * k, 3 * pk * (kd * kd - 5 * kd + 12) + 3 * p2k);
              out.emplace_back(2 * k + 1, 3 * kd * (kd + 5) / 2 + 6 * pk - 3 * p2k);
              out.emplace_back(2 * k + 2, kd * (kd + 7) / 2 + 6 + 3 * p2k);
              out.emplace_back(2 * k + 3, kd * (kd + 9) / 2 + 10 - p2k);
              return out;
          }),
          "the token 'p2' in the k <= n < 2k row read as 2p");

    // scheme II
    c.add("counts.iid.II.double_pgf", "G^{(II)}(z,w)=\\frac{1-p^{k}(1-w)z^{k}}{1-z+p^{k}q(1-w)z^{k+1}}", IID,
          counts_double(II, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double pk = pw(p, k);
              return (1 - pk * (1 - w) * pw(z, k)) / (1 - z + pk * q * (1 - w) * pw(z, k + 1));
          }));
    c.add("counts.iid.II.lemma_recursion", "G_{n}(w)=G_{n-1}(w)-p^{k}q(1-w)G_{n-k-1}(w)", IID,
          G_rec(II, [](const Sym& s, const Seq& G, long n, double w) {
              UNPACK(s);
              return G(n - 1) - pw(p, k) * q * (1 - w) * G(n - k - 1);
          }, from_k(1)));
    c.add("counts.iid.II.lemma_initial", "G_{k}(w)=1-p^{k}+p^{k}w", IID, G_values(II, [](const Sym& s, double w) {
              UNPACK(s);
              return g_start(k, 1 - pw(p, k) + pw(p, k) * w);
          }));
    c.add("counts.iid.II.pmf_recursion", "g_{n}(x)=g_{n-1}(x)-p^{k}qg_{n-k-1}(x)+p^{k}qg_{n-k-1}(x-1)", IID,
          g_rec(II, [](const Sym& s, const Tab& g, long n, long x) {
              UNPACK(s);
              const double c0 = pw(p, k) * q;
              return g(n - 1, x) - c0 * g(n - k - 1, x) + c0 * g(n - k - 1, x - 1);
          }, from_k(1)));
    c.add("counts.iid.II.pmf_initial", "g_{k}(1)=p^{k}", IID,
          g_values(II, [](const Sym& s) { return g_start_pmf(s.k, std::pow(s.p, s.k)); }));
    c.add("counts.iid.II.mean_gf", "\\frac{p^{k}z^{k}(1-pz)}{(1-z)^{2}}", IID, count_moment_gf(II, false, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k, pw(p, k)}, {k + 1, -pw(p, k + 1)}}), one_minus(2));
          }));
    c.add("counts.iid.II.mean_recursion", "\\tau_{n}=2\\tau_{n-1}-\\tau_{n-2},\\ n>k+1", IID,
          count_moment_rec(II, false, [](const Sym&, const Seq& t, long n) { return 2 * t(n - 1) - t(n - 2); }, from_k(2)));
    c.add("counts.iid.II.mean_initial", "\\tau_{k}=p^{k},\\ \\tau_{k+1}=p^{k}(2-p)", IID,
          count_moment_values(II, false, [](const Sym& s) {
              UNPACK(s);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, pw(p, k));
              out.emplace_back(k + 1, pw(p, k) * (2 - p));
              return out;
          }));
    c.add("counts.iid.II.second_gf", "\\frac{p^{k}z^{k}(1-pz)(1-z+2p^{k}qz^{k+1})}{(1-z)^{3}}", IID,
          count_moment_gf(II, true, [](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k);
              return RationalGF(terms({{k, pk}, {k + 1, -pk * p}}) * terms({{0, 1.0}, {1, -1.0}, {k + 1, 2 * pk * q}}),
                                one_minus(3));
          }));
    c.add("counts.iid.II.second_recursion", "\\nu_{n}=3\\nu_{n-1}-3\\nu_{n-2}+\\nu_{n-3}+\\beta_{n}", IID,
          count_moment_rec(II, true, [](const Sym& s, const Seq& v, long n) {
              UNPACK(s);
              const double pk = pw(p, k);
              double beta = 0.0;
              if (n == k) beta += pk;
              if (n == k + 1) beta += -pk * (1 + p);
              if (n == k + 2) beta += pk * p;
              if (n == 2 * k + 1) beta += 2 * pk * pk * q;
              if (n == 2 * k + 2) beta += -2 * pk * pk * p * q;
              return 3 * v(n - 1) - 3 * v(n - 2) + v(n - 3) + beta;
          }, from_const(0)),
          "superscript (III) on the right-hand side read as (II)");

    // scheme III
    c.add("counts.iid.III.double_pgf",
          "G^{(III)}(z,w)=\\frac{1-pwz-p^{k}(1-w)z^{k}}{1-(1+pw)z+pwz^{2}+p^{k}q(1-w)z^{k+1}}", IID,
          counts_double(III, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double pk = pw(p, k);
              return (1 - p * w * z - pk * (1 - w) * pw(z, k)) /
                     (1 - (1 + p * w) * z + p * w * z * z + pk * q * (1 - w) * pw(z, k + 1));
          }));
    c.add("counts.iid.III.lemma_recursion", "G_{n}(w)=(1+pw)G_{n-1}(w)-pwG_{n-2}(w)-p^{k}q(1-w)G_{n-k-1}(w)", IID,
          G_rec(III, [](const Sym& s, const Seq& G, long n, double w) {
              UNPACK(s);
              return (1 + p * w) * G(n - 1) - p * w * G(n - 2) - pw(p, k) * q * (1 - w) * G(n - k - 1);
          }, from_k(1)));
    c.add("counts.iid.III.lemma_initial", "G_{k}(w)=1-p^{k}(1-w)", IID, G_values(III, [](const Sym& s, double w) {
              UNPACK(s);
              return g_start(k, 1 - pw(p, k) * (1 - w));
          }));
    c.add("counts.iid.III.pmf_recursion",
          "g_{n}(x)=g_{n-1}(x)+pg_{n-1}(x-1)-pg_{n-2}(x-1)-p^{k}qg_{n-k-1}(x)+p^{k}qg_{n-k-1}(x-1)", IID,
          g_rec(III, [](const Sym& s, const Tab& g, long n, long x) {
              UNPACK(s);
              const double c0 = pw(p, k) * q;
              return g(n - 1, x) + p * g(n - 1, x - 1) - p * g(n - 2, x - 1) - c0 * g(n - k - 1, x) +
                     c0 * g(n - k - 1, x - 1);
          }, from_k(1)));
    c.add("counts.iid.III.pmf_initial", "g_{k}(1)=p^{k}", IID,
          g_values(III, [](const Sym& s) { return g_start_pmf(s.k, std::pow(s.p, s.k)); }));
    c.add("counts.iid.III.mean_gf", "\\frac{p^{k}z^{k}}{(1-z)^{2}}", IID, count_moment_gf(III, false, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k, pw(p, k)}}), one_minus(2));
          }));
    c.add("counts.iid.III.mean_recursion", "\\tau_{n}=2\\tau_{n-1}-\\tau_{n-2},\\ n>k", IID,
          count_moment_rec(III, false, [](const Sym&, const Seq& t, long n) { return 2 * t(n - 1) - t(n - 2); }, from_k(1)));
    c.add("counts.iid.III.mean_initial", "\\tau_{k}=p^{k}", IID, count_moment_values(III, false, [](const Sym& s) {
              UNPACK(s);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, pw(p, k));
              return out;
          }));
    c.add("counts.iid.III.second_gf",
          "\\frac{p^{k}z^{k}-p^{k+1}z^{k+2}+2p^{2k}qz^{2k+1}}{1-(p+3)z+3(1+p)z^{2}-(1+3p)z^{3}+pz^{4}}", IID,
          count_moment_gf(III, true, [](const Sym& s) {
              UNPACK(s);
              const double pk = pw(p, k);
              return RationalGF(terms({{k, pk}, {k + 2, -pk * p}, {2 * k + 1, 2 * pk * pk * q}}),
                                Poly{1.0, -(p + 3), 3 * (1 + p), -(1 + 3 * p), p});
          }));
    c.add("counts.iid.III.second_recursion",
          "\\nu_{n}=(3+p)\\nu_{n-1}-3(1+p)\\nu_{n-2}+(1+3p)\\nu_{n-3}-p\\nu_{n-4}+\\beta_{n}", IID,
          count_moment_rec(III, true, [](const Sym& s, const Seq& v, long n) {
              UNPACK(s);
              const double pk = pw(p, k);
              double beta = 0.0;
              if (n == k) beta += pk;
              if (n == k + 2) beta += -pk * p;
              if (n == 2 * k + 1) beta += 2 * pk * pk * q;
              return (3 + p) * v(n - 1) - 3 * (1 + p) * v(n - 2) + (1 + 3 * p) * v(n - 3) - p * v(n - 4) + beta;
          }, from_const(0)),
          "superscript (II) on the right-hand side read as (III)");
}

void counts_markov(Catalog& c) {
    const Applies MK = Applies::Markov;

    // scheme I
    c.add("counts.markov.I.double_pgf",
          "G^{(I)}(z,w)=\\frac{a_{1}z^{k+1}+a_{2}z^{k}+a_{3}z-1}{1+b_{1}z+b_{2}z^{2}+b_{3}z^{k}+b_{4}z^{k+1}+b_{5}z^{k+2}}", MK,
          counts_double(I, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double ak = pw(a, k);
              const double a1 = ak * (1 - p * b + (p - a) * w), a2 = pw(a, k - 1) * (p + (a - p) * w), a3 = -(1 - a - b);
              const double b1 = -(a + b), b2 = -(1 - a - b), b3 = -ak * w;
              const double b4 = pw(a, k + 1) * ((1 - a) * (1 - b) - w * (1 - a - b - a * a)), b5 = w * ak * (1 - a - b);
              return (a1 * pw(z, k + 1) + a2 * pw(z, k) + a3 * z - 1) /
                     (1 + b1 * z + b2 * z * z + b3 * pw(z, k) + b4 * pw(z, k + 1) + b5 * pw(z, k + 2));
          }));
    c.add("counts.markov.I.lemma_recursion",
          "G_{n}(w)=(\\alpha+\\beta)G_{n-1}(w)+(1-\\alpha-\\beta)G_{n-2}(w)+w\\alpha^{k}G_{n-k}(w)", MK,
          G_rec(I, [](const Sym& s, const Seq& G, long n, double w) {
              UNPACK(s);
              const double ak = pw(a, k);
              return (a + b) * G(n - 1) + (1 - a - b) * G(n - 2) + w * ak * G(n - k) -
                     ak * a * ((1 - a) * (1 - b) - w * (1 - a - b - a * a)) * G(n - k - 1) -
                     w * ak * (1 - a - b) * G(n - k - 2);
          }, from_k(2)),
          kUnrangedNote);
    c.add("counts.markov.I.pmf_recursion",
          "g_{n}(x)=(\\alpha+\\beta)g_{n-1}(x)+(1-\\alpha-\\beta)g_{n-2}(x)+\\alpha^{k}g_{n-k}(x-1)", MK,
          g_rec(I, [](const Sym& s, const Tab& g, long n, long x) {
              UNPACK(s);
              const double ak = pw(a, k);
              return (a + b) * g(n - 1, x) + (1 - a - b) * g(n - 2, x) + ak * g(n - k, x - 1) -
                     ak * a * (1 - a) * (1 - b) * g(n - k - 1, x) + ak * a * (1 - a - b - a * a) * g(n - k - 1, x - 1) -
                     ak * (1 - a - b) * g(n - k - 2, x - 1);
          }, from_k(2)),
          kUnrangedNote);
    c.add("counts.markov.I.mean_gf",
          "\\frac{\\alpha^{k-1}z^{k}(1-\\alpha z)\\{p+(q-\\beta)z\\}}{(1-z)^{2}(1-z^{k}\\alpha^{k})\\{1+(1-\\alpha-\\beta)z\\}}", MK,
          count_moment_gf(I, false, [](const Sym& s) {
              UNPACK(s);
              const Poly num = terms({{k, pw(a, k - 1) * p}, {k + 1, pw(a, k - 1) * (q - b)}}) * Poly{1.0, -a};
              const Poly den = one_minus(2) * terms({{0, 1.0}, {k, -pw(a, k)}}) * Poly{1.0, 1 - a - b};
              return RationalGF(num, den);
          }));
    c.add("counts.markov.I.mean_recursion",
          "\\tau_{n}=(1+\\alpha+\\beta)\\tau_{n-1}+(1-2\\alpha-2\\beta)\\tau_{n-2}-(1-\\alpha-\\beta)\\tau_{n-3}+\\alpha^{k}\\tau_{n-k}",
          MK, count_moment_rec(I, false, [](const Sym& s, const Seq& t, long n) {
              UNPACK(s);
              const double ak = pw(a, k);
              return (1 + a + b) * t(n - 1) + (1 - 2 * a - 2 * b) * t(n - 2) - (1 - a - b) * t(n - 3) + ak * t(n - k) -
                     ak * (1 + a + b) * t(n - k - 1) - ak * (1 - 2 * a - 2 * b) * t(n - k - 2) +
                     ak * (1 - a - b) * t(n - k - 3);
          }, from_k(3)));
    c.add("counts.markov.I.mean_initial",
          "\\tau_{k}=p\\alpha^{k-1},\\ \\tau_{k+1}=\\alpha^{k-1}(1-q\\beta),\\ \\tau_{k+2}=\\alpha^{k-1}(1-q\\beta)", MK,
          count_moment_values(I, false, [](const Sym& s) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              Values out;
              for (long n = 0; n < k; ++n) out.emplace_back(n, 0.0);
              out.emplace_back(k, p * ak);
              out.emplace_back(k + 1, ak * (1 - q * b));
              out.emplace_back(k + 2, ak * (1 - q * b));
              return out;
          }));
    c.add("counts.markov.I.second_gf",
          "\\frac{\\alpha^{k-1}z^{k}(\\alpha z-1)\\{(\\beta-q)z-p\\}\\{\\cdots\\}}{(z-1)^{3}(\\alpha^{k}z^{k}-1)^{2}"
          "\\{(\\alpha+\\beta-1)z-1\\}^{2}}",
          MK, count_moment_gf(I, true, [](const Sym& s) {
              UNPACK(s);
              const Poly brace = terms({{k + 2, pw(a, k) * (1 - a - b)},
                                        {k + 1, pw(a, k - 1) * (a * a + 2 * a + 2 * b - 2 - a * b)},
                                        {k, -pw(a, k)},
                                        {2, 1 - a - b},
                                        {1, a + b},
                                        {0, -1.0}});
              const Poly num = terms({{k, pw(a, k - 1)}}) * Poly{-1.0, a} * Poly{-p, b - q} * brace;
              const Poly den = ppow(Poly{-1.0, 1.0}, 3) * ppow(terms({{0, -1.0}, {k, pw(a, k)}}), 2) *
                               ppow(Poly{-1.0, a + b - 1}, 2);
              return RationalGF(num, den);
          }));

    // scheme II
    c.add("counts.markov.II.double_pgf",
          "G^{(II)}(z,w)=\\frac{a_{1}z^{k+2}+a_{2}z^{k+1}+a_{3}z^{k}+a_{4}z^{2}+a_{5}z+1}{b_{1}z^{k+2}+b_{2}z^{k+1}+b_{3}z^{3}+"
          "b_{4}z^{2}+b_{5}z-1}",
          MK, counts_double(II, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double ak = pw(a, k - 1), c0 = ak * (1 - a) * (1 - b) * (1 - w);
              const double num = a * ak * (1 - w) * (q - b) * pw(z, k + 2) +
                                 ak * (1 - w) * (p - a + p * a + a * b) * pw(z, k + 1) - p * ak * (1 - w) * pw(z, k) +
                                 (a + b - 1) * z * z - (a + b) * z + 1;
              const double den = c0 * pw(z, k + 2) - c0 * pw(z, k + 1) + (a + b - 1) * pw(z, 3) +
                                 (1 - 2 * a - 2 * b) * z * z + (1 + a + b) * z - 1;
              return num / den;
          }),
          "stray token after the opening of the display ignored");
    auto mkII_c = [](const Sym& s, double w) {
        UNPACK(s);
        return 1 - a - w + w * a - b + a * b + w * b - w * a * b;
    };
    c.add("counts.markov.II.lemma_recursion",
          "G_{n}(w)=(\\alpha+\\beta+1)G_{n-1}(w)+(1-2\\alpha-2\\beta)G_{n-2}(w)+(\\alpha+\\beta-1)G_{n-3}(w)", MK,
          G_rec(II, [mkII_c](const Sym& s, const Seq& G, long n, double w) {
              UNPACK(s);
              const double c0 = pw(a, k - 1) * mkII_c(s, w);
              return (a + b + 1) * G(n - 1) + (1 - 2 * a - 2 * b) * G(n - 2) + (a + b - 1) * G(n - 3) -
                     c0 * G(n - k - 1) + c0 * G(n - k - 2);
          }, from_max(2, 3)),
          kUnrangedNote);
    c.add("counts.markov.II.pmf_recursion",
          "g_{n}(x)=(\\alpha+\\beta+1)g_{n-1}(x)+(1-2\\alpha-2\\beta)g_{n-2}(x)+(\\alpha+\\beta-1)g_{n-3}(x)", MK,
          g_rec(II, [](const Sym& s, const Tab& g, long n, long x) {
              UNPACK(s);
              const double c0 = pw(a, k - 1) * (1 - a) * (1 - b);
              return (a + b + 1) * g(n - 1, x) + (1 - 2 * a - 2 * b) * g(n - 2, x) + (a + b - 1) * g(n - 3, x) -
                     c0 * g(n - k - 1, x) + c0 * g(n - k - 1, x - 1) + c0 * g(n - k - 2, x) + c0 * g(n - k - 2, x - 1);
          }, from_max(2, 3)),
          "missing '=' after g_n(x) supplied; no range printed, checked from the first index whose terms are all in range");
    c.add("counts.markov.II.mean_gf",
          "\\frac{\\alpha^{k-1}z^{k}(\\alpha z-1)\\{(\\beta-q)z-p\\}}{(z-1)^{2}\\{(1-\\alpha-\\beta)z+1\\}}", MK,
          count_moment_gf(II, false, [](const Sym& s) {
              UNPACK(s);
              return RationalGF(terms({{k, pw(a, k - 1)}}) * Poly{-1.0, a} * Poly{-p, b - q},
                                ppow(Poly{-1.0, 1.0}, 2) * Poly{1.0, 1 - a - b});
          }));
    c.add("counts.markov.II.second_gf",
          "\\frac{\\alpha^{k-2}z^{k}(\\alpha z-1)\\{(\\beta-q)z-p\\}\\{2\\alpha^{k}(1-\\alpha)(1-\\beta)z^{k+1}+\\alpha(z-1)"
          "\\{(1-\\alpha\\beta)z+1\\}\\}}{(z-1)^{3}\\{(1-\\alpha-\\beta)z+1\\}^{2}}",
          MK, count_moment_gf(II, true, [](const Sym& s) {
              UNPACK(s);
              const Poly brace = terms({{k + 1, 2 * pw(a, k) * (1 - a) * (1 - b)}}) +
                                 a * (Poly{-1.0, 1.0} * Poly{1.0, 1 - a * b});
              return RationalGF(terms({{k, pw(a, k - 2)}}) * Poly{-1.0, a} * Poly{-p, b - q} * brace,
                                ppow(Poly{-1.0, 1.0}, 3) * ppow(Poly{1.0, 1 - a - b}, 2));
          }));

    // scheme III
    c.add("counts.markov.III.double_pgf",
          "G^{(III)}(z,w)=\\frac{a_{1}z^{k+2}+a_{2}z^{k+1}+a_{3}z^{4}+a_{4}z^{3}+a_{5}z^{2}+a_{6}z+1}"
          "{b_{1}z^{k+2}+b_{2}z^{k+1}+b_{3}z^{4}+b_{4}z^{3}+b_{5}z^{2}+b_{6}z-1}",
          MK, counts_double(III, [](const Sym& s, double z, double w) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              const double a1 = -ak * (1 - a + w * a - w - b + a * b - w * a * b + w * b);
              const double a2 = ak * (1 - a + w + w * a - b + a * b + b * w - w * a * b);
              const double a3 = -a * w * (1 - a - b);
              const double a4 = 1 - a + w * a - 2 * w * a * a - b - 2 * w * a * b;
              const double a5 = -(1 - 2 * a - w * a - w * a * a - 2 * b - w * a * b);
              const double a6 = -(1 + a + b + w * a);
              const double b1 = -ak * (1 - a + w * a - w - b + a * b - w * a * b + 2 * w * a * a * b + w * b);
              const double b2 = ak * (1 - a - w + w * a + b + w * b - w * a * b);
              const double b3 = -a * w * (1 - a - b);
              const double b4 = 1 - a + w * a - 2 * w * a * a - b - 2 * w * a * b;
              const double b5 = 1 - 2 * a - w * a - w * a * a - 2 * b - w * a * b;
              const double b6 = -(1 + a + w * a + b);
              const double num = a1 * pw(z, k + 2) + a2 * pw(z, k + 1) + a3 * pw(z, 4) + a4 * pw(z, 3) + a5 * z * z +
                                 a6 * z + 1;
              const double den = b1 * pw(z, k + 2) + b2 * pw(z, k + 1) + b3 * pw(z, 4) + b4 * pw(z, 3) + b5 * z * z +
                                 b6 * z - 1;
              return num / den;
          }));
    c.add("counts.markov.III.lemma_recursion",
          "G_{n}(w)=\\alpha^{k-1}(1-\\alpha-w+w\\alpha-\\beta+\\alpha\\beta+w\\beta-w\\alpha\\beta+2w\\alpha^{2}\\beta)G_{n-k-2}(w)",
          MK, G_rec(III, [](const Sym& s, const Seq& G, long n, double w) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              return ak * (1 - a - w + w * a - b + a * b + w * b - w * a * b + 2 * w * a * a * b) * G(n - k - 2) -
                     ak * (1 - a - w + w * a - b + w * b - w * a * b) * G(n - k - 1) +
                     a * w * (1 - a - b) * G(n - 4) - (1 - a + w * a - 2 * w * a * a - b - 2 * w * a * b) * G(n - 3) +
                     (1 - 2 * a - w * a - w * a * a - 2 * b - w * a * b) * G(n - 2) + (1 + a + w * a + b) * G(n - 1);
          }, from_max(2, 4)),
          kUnrangedNote);
    c.add("counts.markov.III.pmf_recursion",
          "g_{n}(x)=(\\alpha+\\beta+1)g_{n-1}(x)+\\alpha g_{n-1}(x-1)+(1-2\\alpha-2\\beta)g_{n-2}(x)", MK,
          g_rec(III, [](const Sym& s, const Tab& g, long n, long x) {
              UNPACK(s);
              const double ak = pw(a, k - 1);
              return (a + b + 1) * g(n - 1, x) + a * g(n - 1, x - 1) + (1 - 2 * a - 2 * b) * g(n - 2, x) -
                     a * (1 + a + b - 1) * g(n - 2, x - 1) - (1 - a - b) * g(n - 3, x) -
                     a * (1 - 2 * a - 2 * b) * g(n - 3, x - 1) + a * (1 - a - b) * g(n - 4, x - 1) -
                     ak * (1 - a + b) * g(n - k - 1, x) + ak * (1 - a) * (1 - b) * g(n - k - 1, x - 1) +
                     ak * (1 - a) * (1 - b) * g(n - k - 2, x) +
                     ak * (a - 1 - a * b + 2 * a * a * b + b) * g(n - k - 2, x - 1);
          }, from_max(2, 4)),
          kUnrangedNote);
    c.unverified("counts.markov.III.mean_gf",
                 "\\frac{\\alpha^{k-1}z^{k}\\{(q+\\beta)z+p\\}}{a_{1}z^{k+1}+(\\alpha+\\beta-1)z^{3}+(1-2\\alpha-2\\beta)z^{2}+"
                 "(1+\\alpha+\\beta)z-1}",
                 MK, "the symbol a_1 in the denominator is not defined in the statement");
    c.add("counts.markov.III.second_gf",
          "\\frac{\\alpha^{k-2}z^{k}\\{(q-\\beta)z+p\\}\\{2\\alpha^{k}(1-\\alpha)(1-\\beta)z^{k+1}+\\alpha(z-1)(\\alpha z+1)"
          "\\{(\\alpha\\beta-1)z-1\\}\\}}{(z-1)^{3}(\\alpha z-1)\\{(1-\\alpha-\\beta)z+1\\}^{2}}",
          MK, count_moment_gf(III, true, [](const Sym& s) {
              UNPACK(s);
              const Poly brace = terms({{k + 1, 2 * pw(a, k) * (1 - a) * (1 - b)}}) +
                                 a * (Poly{-1.0, 1.0} * Poly{1.0, a} * Poly{-1.0, a * b - 1});
              return RationalGF(terms({{k, pw(a, k - 2)}}) * Poly{p, q - b} * brace,
                                ppow(Poly{-1.0, 1.0}, 3) * Poly{-1.0, a} * ppow(Poly{1.0, 1 - a - b}, 2));
          }));
}

#undef UNPACK

}  // namespace

std::vector<CatalogEntry> build_catalog() {
    Catalog c;
    waiting_first_run(c);
    longest_run(c);
    rth_iid(c);
    rth_markov(c);
    counts_duality(c);
    counts_iid(c);
    counts_markov(c);
    return std::move(c.entries);
}

CatalogEntry fault_fixture() {
    CatalogEntry e;
    e.id = "fixture.iid.II.mean_gf_perturbed";
    e.anchor = "\\frac{(1-p^{k})w+1.01p^{k}w^{2}}{p^{k}q(1-w)^{2}}";
    e.applies = Applies::IID;
    e.note = "injected fault: w^2 coefficient scaled by 1.01";
    e.eval = moment_gf(II, false, [](const Sym& s) {
        const double pk = std::pow(s.p, s.k);
        return RationalGF(Poly{0.0, 1 - pk, 1.01 * pk}, pk * s.q * one_minus(2));
    });
    return e;
}

}  // namespace runstat::detail
