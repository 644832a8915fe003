#include "runstat/errata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include <json.hpp>

#include "errata_detail.hpp"
#include "runstat/error.hpp"
#include "runstat/geometric.hpp"
#include "runstat/oracle.hpp"
#include "runstat/run_counts.hpp"

namespace runstat {

namespace detail {

namespace {

std::size_t scheme_index(Scheme s) {
    switch (s) {
        case Scheme::NonOverlapping: return 0;
        case Scheme::AtLeast: return 1;
        case Scheme::Overlapping: return 2;
    }
    return 0;
}

std::vector<double> dense(const Pmf& pmf, std::size_t n) {
    std::vector<double> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = pmf.at(i);
    return out;
}

[[noreturn]] void out_of_table(const char* what, long i) {
    throw std::out_of_range(std::string("reference table ") + what + " has no index " + std::to_string(i));
}

}  // namespace

double rel_dev(double printed, double truth) noexcept {
    if (!std::isfinite(printed)) return std::numeric_limits<double>::infinity();
    return std::fabs(printed - truth) / std::max(1.0, std::fabs(truth));
}

Reference::Reference(const TrialModel& model, unsigned k, std::size_t n_max, unsigned r_max)
    : model_(model), k_(k), n_max_(n_max), r_max_(r_max) {}

Sym Reference::sym() const noexcept {
    if (model_.is_iid()) {
        const double p = model_.as_iid().p;
        return {p, 1.0 - p, p, 1.0 - p, k_};
    }
    const auto& m = model_.as_markov();
    return {m.p1, 1.0 - m.p1, m.alpha, m.beta, k_};
}

double Reference::vk(long v) const {
    if (v < 0) return 0.0;
    if (vk_.empty()) vk_ = dense(vk_pmf(model_, k_, n_max_ + k_ + 2), n_max_ + k_ + 2);
    if (static_cast<std::size_t>(v) >= vk_.size()) out_of_table("V(k)", v);
    return vk_[static_cast<std::size_t>(v)];
}

double Reference::longest_eq(long n, unsigned j) const {
    if (n < 0) return 0.0;
    if (longest_.empty()) {
        longest_.push_back({1.0});
        for (std::size_t m = 1; m <= n_max_; ++m) longest_.push_back(dense(longest_run_pmf(model_, m), m));
    }
    if (static_cast<std::size_t>(n) > n_max_) out_of_table("L_n", n);
    const auto& row = longest_[static_cast<std::size_t>(n)];
    return j < row.size() ? row[j] : 0.0;
}

double Reference::longest_lt(long n, unsigned j) const {
    double s = 0.0;
    for (unsigned i = 0; i < j; ++i) s += longest_eq(n, i);
    return s;
}

Reference::SchemeData& Reference::data(Scheme s) const { return schemes_[scheme_index(s)]; }

void Reference::need_trk(Scheme s) const {
    auto& d = data(s);
    if (d.factors) return;
    SchemeData fresh;
    fresh.pmf.assign(r_max_ + 1, std::vector<double>(n_max_ + 1, 0.0));
    fresh.tail.assign(r_max_ + 1, std::vector<double>(n_max_ + 1, 0.0));
    fresh.pmf[0][0] = 1.0;
    for (unsigned r = 1; r <= r_max_; ++r) {
        fresh.pmf[r] = dense(trk_pmf({model_, k_, r, s}, n_max_), n_max_);
        double cum = 0.0;
        for (std::size_t n = 0; n <= n_max_; ++n) {
            cum += fresh.pmf[r][n];
            fresh.tail[r][n] = 1.0 - cum;
        }
    }
    fresh.moments.assign(1, Moments{0.0, 0.0});
    for (const auto& m : trk_moments(model_, k_, s, kMomentR)) fresh.moments.push_back(m);
    d.pmf = std::move(fresh.pmf);
    d.tail = std::move(fresh.tail);
    d.moments = std::move(fresh.moments);
    d.factors = renewal_factors(model_, k_, s);
}

void Reference::need_counts(Scheme s) const {
    auto& d = data(s);
    if (!d.counts.empty()) return;
    d.counts.push_back({1.0});
    for (std::size_t n = 1; n <= kCountsN; ++n) {
        const CountsQuery q{model_, n, k_, s};
        d.counts.push_back(dense(counts_pmf(q), counts_max_support(q)));
    }
}

double Reference::h(Scheme s, long r, long n) const {
    if (n < 0 || r < 0) return 0.0;
    need_trk(s);
    if (r > static_cast<long>(r_max_) || n > n_max()) out_of_table("T_r", n);
    return data(s).pmf[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
}

double Reference::hbar(Scheme s, long r, long n) const {
    if (n < 0) return 1.0;
    if (r <= 0) return 0.0;
    need_trk(s);
    if (r > static_cast<long>(r_max_) || n > n_max()) out_of_table("P(T_r > n)", n);
    return data(s).tail[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
}

double Reference::t_mean(Scheme s, long r) const {
    if (r <= 0) return 0.0;
    need_trk(s);
    if (r > static_cast<long>(kMomentR)) out_of_table("E T_r", r);
    return data(s).moments[static_cast<std::size_t>(r)].mean;
}

double Reference::t_second(Scheme s, long r) const {
    if (r <= 0) return 0.0;
    need_trk(s);
    if (r > static_cast<long>(kMomentR)) out_of_table("E T_r^2", r);
    return data(s).moments[static_cast<std::size_t>(r)].second_moment;
}

double Reference::g(Scheme s, long n, long x) const {
    if (n < 0 || x < 0) return 0.0;
    need_counts(s);
    if (n > static_cast<long>(kCountsN)) out_of_table("N_n", n);
    const auto& row = data(s).counts[static_cast<std::size_t>(n)];
    return static_cast<std::size_t>(x) < row.size() ? row[static_cast<std::size_t>(x)] : 0.0;
}

double Reference::G(Scheme s, long n, double w) const {
    if (n < 0) return 0.0;
    need_counts(s);
    if (n > static_cast<long>(kCountsN)) out_of_table("G_n", n);
    double acc = 0.0, wp = 1.0;
    for (double gx : data(s).counts[static_cast<std::size_t>(n)]) {
        acc += gx * wp;
        wp *= w;
    }
    return acc;
}

double Reference::n_mean(Scheme s, long n) const {
    if (n < 0) return 0.0;
    need_counts(s);
    double acc = 0.0;
    const auto& row = data(s).counts.at(static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < row.size(); ++x) acc += static_cast<double>(x) * row[x];
    return acc;
}

double Reference::n_second(Scheme s, long n) const {
    if (n < 0) return 0.0;
    need_counts(s);
    double acc = 0.0;
    const auto& row = data(s).counts.at(static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < row.size(); ++x) acc += static_cast<double>(x * x) * row[x];
    return acc;
}

const RationalGF& Reference::first(Scheme s) const {
    need_trk(s);
    return data(s).factors->first;
}

const RationalGF& Reference::inter(Scheme s) const {
    need_trk(s);
    return data(s).factors->inter;
}

double Reference::trk_double(Scheme s, double z, double w) const {
    return 1.0 + w * first(s).eval(z) / (1.0 - w * inter(s).eval(z));
}

double Reference::counts_double(Scheme s, double z, double w) const {
    double acc = 0.0, zp = 1.0;
    for (long n = 0; n <= static_cast<long>(kCountsN); ++n) {
        acc += zp * G(s, n, w);
        zp *= z;
    }
    return acc;
}

}  // namespace detail

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool applies_to(detail::Applies a, const TrialModel& m) {
    switch (a) {
        case detail::Applies::IID: return m.is_iid();
        case detail::Applies::Markov: return !m.is_iid();
        case detail::Applies::Any: return true;
    }
    return false;
}

struct Accumulator {
    FormulaResult r;
    bool any = false;

    void add(double dev, const TrialModel& m, unsigned k) {
        if (std::isnan(dev)) dev = kInf;
        ++r.points;
        if (!any || dev > r.max_deviation) {
            r.max_deviation = dev;
            r.worst_model = m.describe();
            r.worst_k = k;
        }
        any = true;
    }

    FormulaResult finish(double tol) {
        if (!any) {
            r.status = FormulaStatus::Unverified;
            r.max_deviation = kNaN;
        } else {
            r.status = r.max_deviation <= tol ? FormulaStatus::Confirmed : FormulaStatus::Erratum;
        }
        return std::move(r);
    }
};

Pmf analytic_counts(const TrialModel& m, std::size_t n, unsigned k, Scheme s) {
    if (n == 0) {
        Pmf p;
        p.probs = {1.0};
        return p;
    }
    return counts_pmf({m, n, k, s});
}

Pmf analytic_longest(const TrialModel& m, std::size_t n) {
    if (n == 0) {
        Pmf p;
        p.probs = {1.0};
        return p;
    }
    return longest_run_pmf(m, n);
}

void oracle_checks(const CheckGrid& grid, std::vector<FormulaResult>& out) {
    const std::size_t n = std::min<std::size_t>(grid.n_max, kMaxEnumerationTrials);
    const unsigned rmax = std::min(3u, grid.r_max);

    Accumulator vk, longest;
    vk.r.id = "oracle.vk";
    vk.r.anchor = "P(V(k)=v)";
    longest.r.id = "oracle.longest";
    longest.r.anchor = "P(L_{n}=k)";
    std::vector<Accumulator> trk(3), counts(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string tag(scheme_name(kAllSchemes[i]));
        trk[i].r.id = "oracle.trk." + tag;
        trk[i].r.anchor = "P(T_{r,k}=n)";
        counts[i].r.id = "oracle.counts." + tag;
        counts[i].r.anchor = "P(N_{n,k}=x)";
    }

    for (const auto& m : grid.models) {
        longest.add(total_variation(analytic_longest(m, n), enumerate_exact(m, n, LongestRun{})), m, 0);
        for (unsigned k : grid.ks) {
            vk.add(total_variation(vk_pmf(m, k, n), enumerate_exact(m, n, FirstRunWait{k})), m, k);
            for (std::size_t i = 0; i < 3; ++i) {
                const Scheme s = kAllSchemes[i];
                double worst = 0.0;
                for (unsigned r = 1; r <= rmax; ++r) {
                    worst = std::max(worst, total_variation(trk_pmf({m, k, r, s}, n),
                                                            enumerate_exact(m, n, RthRunWait{k, r, s})));
                }
                trk[i].add(worst, m, k);
                counts[i].add(total_variation(analytic_counts(m, n, k, s), enumerate_exact(m, n, RunCount{k, s})), m, k);
            }
        }
    }
    out.push_back(vk.finish(kOracleTolerance));
    for (auto& a : trk) out.push_back(a.finish(kOracleTolerance));
    for (auto& a : counts) out.push_back(a.finish(kOracleTolerance));
    out.push_back(longest.finish(kOracleTolerance));
}

}  // namespace

std::string_view status_name(FormulaStatus s) noexcept {
    switch (s) {
        case FormulaStatus::Confirmed: return "CONFIRMED";
        case FormulaStatus::Erratum: return "ERRATUM";
        case FormulaStatus::Unverified: return "UNVERIFIED";
    }
    return "UNVERIFIED";
}

CheckGrid default_check_grid() {
    CheckGrid g;
    for (double p : {0.2, 0.5, 0.8}) g.models.push_back(TrialModel::iid(p));
    for (double a : {0.3, 0.7}) {
        for (double b : {0.3, 0.7}) g.models.push_back(TrialModel::markov_stationary(a, b));
    }
    g.models.push_back(TrialModel::markov(0.35, 0.6, 0.25));
    g.ks = {2, 3, 4};
    return g;
}

const std::vector<std::string>& known_errata() {
    static const std::vector<std::string> ids = {
        "iid.vk2.closed_form",
        "markov.vk.pgf_alt",
        "markov.vk2.corollary_initial",
        "markov.vk.corollary_recursion",
        "markov.vk2.closed_form",
        "markov.vk2.h_closed_form",
        "iid.I.pmf_recursion",
        "iid.I.tail_recursion",
        "iid.I.mean_gf",
        "iid.I.mean_initial",
        "iid.I.second_initial",
        "iid.II.tail_recursion",
        "iid.III.tail_recursion",
        "markov.I.lemma_factor",
        "markov.I.pmf_recursion",
        "markov.I.tail_recursion",
        "markov.I.second_gf",
        "markov.I.second_initial",
        "markov.II.lemma_h1",
        "markov.II.pmf_recursion",
        "markov.II.h1_initial",
        "markov.II.tail_recursion",
        "markov.II.mean_gf",
        "markov.II.mean_initial",
        "markov.II.second_gf",
        "markov.II.second_initial",
        "markov.III.double_pgf",
        "markov.III.lemma_h1",
        "markov.III.h1_initial",
        "markov.III.tail_recursion",
        "markov.III.mean_gf",
        "markov.III.mean_initial",
        "markov.III.second_gf",
        "markov.III.second_initial",
        "counts.iid.I.second_initial",
        "counts.iid.III.second_gf",
        "counts.iid.III.second_recursion",
        "counts.markov.I.double_pgf",
        "counts.markov.I.lemma_recursion",
        "counts.markov.I.pmf_recursion",
        "counts.markov.I.mean_initial",
        "counts.markov.II.double_pgf",
        "counts.markov.II.lemma_recursion",
        "counts.markov.II.pmf_recursion",
        "counts.markov.II.second_gf",
        "counts.markov.III.double_pgf",
        "counts.markov.III.lemma_recursion",
        "counts.markov.III.pmf_recursion",
        "counts.markov.III.second_gf",
    };
    return ids;
}

std::vector<CatalogItem> formula_catalog() {
    std::vector<CatalogItem> out;
    const auto& known = known_errata();
    for (const auto& e : detail::build_catalog()) {
        FormulaStatus st = FormulaStatus::Confirmed;
        if (!e.eval) {
            st = FormulaStatus::Unverified;
        } else if (std::find(known.begin(), known.end(), e.id) != known.end()) {
            st = FormulaStatus::Erratum;
        }
        out.push_back({e.id, e.anchor, st});
    }
    return out;
}

CheckReport run_check(const CheckGrid& grid, const CheckOptions& options) {
    if (grid.models.empty() || grid.ks.empty()) throw InvalidArgument("check grid needs at least one model and one k");
    if (grid.n_max < 1) throw InvalidArgument("check horizon n must be >= 1");
    if (grid.r_max < 1) throw InvalidArgument("check occurrence horizon must be >= 1");
    for (unsigned k : grid.ks) {
        if (k < 1) throw InvalidArgument("run length k must be >= 1");
        if (k > grid.n_max) throw InvalidArgument("check horizon n must be >= every run length k");
    }

    auto catalog = detail::build_catalog();
    if (options.inject_fault) catalog.push_back(detail::fault_fixture());

    std::vector<std::unique_ptr<detail::Reference>> refs;
    for (const auto& m : grid.models) {
        for (unsigned k : grid.ks) refs.push_back(std::make_unique<detail::Reference>(m, k, grid.n_max, grid.r_max));
    }

    CheckReport report;
    for (const auto& e : catalog) {
        Accumulator acc;
        acc.r.id = e.id;
        acc.r.anchor = e.anchor;
        acc.r.note = e.note;
        if (e.eval) {
            for (const auto& ref : refs) {
                if (!applies_to(e.applies, ref->model()) || ref->k() < detail::kCatalogMinK) continue;
                std::optional<double> dev;
                try {
                    dev = e.eval(*ref);
                } catch (const std::exception& ex) {
                    dev = kInf;
                    if (acc.r.note.empty()) acc.r.note = std::string("evaluation failed: ") + ex.what();
                }
                if (dev) acc.add(*dev, ref->model(), ref->k());
            }
        }
        report.results.push_back(acc.finish(kFormulaTolerance));
    }
    if (options.run_oracle) oracle_checks(grid, report.results);

    const auto& known = known_errata();
    for (auto& r : report.results) {
        r.known_erratum = std::find(known.begin(), known.end(), r.id) != known.end();
        if (r.status == FormulaStatus::Erratum && !r.known_erratum) report.new_disagreements.push_back(r.id);
    }
    return report;
}

std::string ledger_line(const FormulaResult& r, const CheckGrid& grid) {
    nlohmann::ordered_json j;
    j["formula_id"] = r.id;
    j["paper_anchor"] = r.anchor;
    j["status"] = std::string(status_name(r.status));
    if (std::isfinite(r.max_deviation)) {
        j["max_deviation"] = r.max_deviation;
    } else {
        j["max_deviation"] = nullptr;
    }
    nlohmann::ordered_json params;
    if (!r.worst_model.empty()) {
        params["model"] = r.worst_model;
        params["k"] = r.worst_k;
    } else {
        params["model"] = nullptr;
        params["k"] = nullptr;
    }
    params["n_max"] = grid.n_max;
    params["r_max"] = grid.r_max;
    params["points"] = r.points;
    j["parameters"] = params;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

ErrataLedger::ErrataLedger(const std::string& path) : out_(path, std::ios::app) {
    if (!out_) throw InvalidArgument("cannot open ledger file '" + path + "' for appending");
}

void ErrataLedger::append(const FormulaResult& r, const CheckGrid& grid) {
    const std::string line = ledger_line(r, grid);
    std::lock_guard<std::mutex> lock(mu_);
    out_ << line << '\n';
    out_.flush();
}

}  // namespace runstat
