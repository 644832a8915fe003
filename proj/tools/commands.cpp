#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "runstat/errata.hpp"
#include "runstat/error.hpp"
#include "runstat/fibk.hpp"
#include "runstat/geometric.hpp"
#include "runstat/inference.hpp"
#include "runstat/oracle.hpp"
#include "runstat/polyseries.hpp"
#include "runstat/rth_waiting.hpp"
#include "runstat/run_counts.hpp"

namespace runstat::cli {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw InvalidArgument("unknown output format '" + std::string(text) + "' (expected json or csv)");
}

namespace {

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// ---- CSV ------------------------------------------------------------------

std::string csv_field(const json& v) {
    switch (v.type()) {
        case json::value_t::null: return "";
        case json::value_t::boolean: return v.get<bool>() ? "true" : "false";
        case json::value_t::number_integer: return std::to_string(v.get<std::int64_t>());
        case json::value_t::number_unsigned: return std::to_string(v.get<std::uint64_t>());
        case json::value_t::number_float: {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
            std::string s(buf, res.ptr);
            if (s.find_first_of(".e") == std::string::npos) s += ".0";
            return s;
        }
        case json::value_t::string: {
            std::string out = "\"";
            for (char c : v.get_ref<const std::string&>()) {
                if (c == '"') out += '"';
                out += c;
            }
            return out + "\"";
        }
        default: throw std::logic_error("CSV output supports scalar fields only");
    }
}

std::string csv_line(const std::vector<json>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

void csv_object(std::string& out, const std::string& tag, const json& obj) {
    for (const auto& [key, val] : obj.items()) {
        if (val.is_array()) {
            std::vector<json> f{tag + "_list", key};
            for (const auto& e : val) f.push_back(e);
            out += csv_line(f);
        } else {
            out += csv_line({tag, key, val});
        }
    }
}

struct CsvField {
    std::string text;
    bool quoted = false;
};

std::vector<std::vector<CsvField>> csv_tokenize(std::string_view s) {
    std::vector<std::vector<CsvField>> records;
    std::vector<CsvField> rec;
    CsvField cur;
    bool in_quotes = false, any = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < s.size() && s[i + 1] == '"') {
                    cur.text += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur.text += c;
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
            cur.quoted = true;
            any = true;
        } else if (c == ',') {
            rec.push_back(std::move(cur));
            cur = {};
            any = true;
        } else if (c == '\n') {
            if (any || !cur.text.empty()) {
                rec.push_back(std::move(cur));
                records.push_back(std::move(rec));
            }
            rec.clear();
            cur = {};
            any = false;
        } else if (c != '\r') {
            cur.text += c;
            any = true;
        }
    }
    if (in_quotes) throw InvalidArgument("CSV record has an unterminated quoted field");
    if (any || !cur.text.empty()) {
        rec.push_back(std::move(cur));
        records.push_back(std::move(rec));
    }
    return records;
}

json csv_value(const CsvField& f) {
    if (f.quoted) return f.text;
    const std::string& t = f.text;
    if (t.empty()) return nullptr;
    if (t == "true") return true;
    if (t == "false") return false;
    const char* b = t.data();
    const char* e = b + t.size();
    if (t.find_first_of(".eE") != std::string::npos || t == "inf" || t == "nan") {
        double d;
        if (auto r = std::from_chars(b, e, d); r.ec == std::errc() && r.ptr == e) return d;
    } else if (t[0] == '-') {
        std::int64_t i;
        if (auto r = std::from_chars(b, e, i); r.ec == std::errc() && r.ptr == e) return i;
    } else {
        std::uint64_t u;
        if (auto r = std::from_chars(b, e, u); r.ec == std::errc() && r.ptr == e) return u;
    }
    throw InvalidArgument("CSV field '" + t + "' is neither a quoted string nor a number");
}

std::string csv_key(const std::vector<CsvField>& r) {
    if (r.size() < 2 || !r[1].quoted) throw InvalidArgument("CSV " + r[0].text + " record needs a quoted key");
    return r[1].text;
}

// ---- shared option groups ---------------------------------------------------

struct ModelArgs {
    double iid = 0.0;
    std::vector<double> markov;
    CLI::Option* iid_opt = nullptr;
    CLI::Option* markov_opt = nullptr;

    void attach(CLI::App* sub) {
        iid_opt = sub->add_option("--iid", iid, "i.i.d. trials with success probability p");
        markov_opt = sub->add_option("--markov", markov, "Markov trials: p1 alpha beta")->expected(3);
        iid_opt->excludes(markov_opt);
    }

    TrialModel build(json& params) const {
        if (iid_opt->count()) {
            params["model"] = "iid";
            params["p"] = iid;
            return TrialModel::iid(iid);
        }
        if (markov_opt->count()) {
            params["model"] = "markov";
            params["p1"] = markov[0];
            params["alpha"] = markov[1];
            params["beta"] = markov[2];
            return TrialModel::markov(markov[0], markov[1], markov[2]);
        }
        throw InvalidArgument("a trial model is required: --iid p or --markov p1 alpha beta");
    }
};

std::vector<ErrataFlag> flags_for(const std::vector<std::string>& prefixes, const std::string& exclude = {}) {
    static const std::vector<CatalogItem> catalog = formula_catalog();
    std::vector<ErrataFlag> out;
    for (const auto& item : catalog) {
        if (!exclude.empty() && item.id.rfind(exclude, 0) == 0) continue;
        for (const auto& p : prefixes) {
            if (item.id.rfind(p, 0) == 0) {
                out.push_back({item.id, std::string(status_name(item.recorded))});
                break;
            }
        }
    }
    return out;
}

std::string family(const TrialModel& m) { return m.is_iid() ? "iid" : "markov"; }

std::vector<ErrataFlag> vk_flags(const TrialModel& m) { return flags_for({family(m) + ".vk"}); }

std::vector<ErrataFlag> trk_flags(const TrialModel& m, Scheme s) {
    return flags_for({family(m) + "." + std::string(scheme_name(s)) + ".", "duality.trk_counts"});
}

std::vector<ErrataFlag> counts_flags(const TrialModel& m, Scheme s) {
    return flags_for({"counts." + family(m) + "." + std::string(scheme_name(s)) + ".", "duality."});
}

std::vector<ErrataFlag> longest_flags(const TrialModel& m) {
    return flags_for({"longest."}, m.is_iid() ? "longest.markov." : "longest.iid.");
}

void pmf_rows(OutputRecord& rec, const Pmf& pmf) {
    rec.columns = {"value", "probability"};
    for (std::size_t i = 0; i < pmf.probs.size(); ++i) rec.rows.push_back({pmf.offset + i, num(pmf.probs[i])});
    rec.summary["tail"] = num(pmf.tail);
    rec.summary["total"] = num(pmf.total());
}

void moment_row(OutputRecord& rec, json index, double mean, double second) {
    rec.rows.push_back({std::move(index), num(mean), num(second), num(second - mean * mean)});
}

unsigned require_k(const CLI::Option* opt, unsigned k) {
    if (!opt->count()) throw InvalidArgument("--k is required for this statistic");
    if (k < 1) throw InvalidArgument("run length k must be >= 1");
    return k;
}

// ---- pmf --------------------------------------------------------------------

struct PmfArgs {
    ModelArgs model;
    std::string stat;
    unsigned k = 0, r = 1;
    std::string scheme = "I";
    std::size_t n = 0, vmax = 0;
    std::string method;
    CLI::Option *k_opt = nullptr, *n_opt = nullptr, *vmax_opt = nullptr;

    void attach(CLI::App* sub) {
        model.attach(sub);
        sub->add_option("--stat", stat, "vk, trk, counts or longest")
            ->required()
            ->check(CLI::IsMember({"vk", "trk", "counts", "longest"}));
        k_opt = sub->add_option("--k", k, "run length");
        sub->add_option("--r", r, "occurrence index (trk)");
        sub->add_option("--scheme", scheme, "counting scheme I, II or III");
        n_opt = sub->add_option("--n", n, "number of trials (counts, longest)");
        vmax_opt = sub->add_option("--vmax", vmax, "largest waiting time tabulated (vk, trk)");
        sub->add_option("--method", method,
                        "vk: recursion|series|closed-form; trk: series|recursion; counts: checked|duality|recursion");
    }
};

OutputRecord cmd_pmf(const PmfArgs& a) {
    OutputRecord rec;
    rec.kind = "pmf";
    const TrialModel model = a.model.build(rec.parameters);
    rec.parameters["stat"] = a.stat;

    auto need_n = [&] {
        if (!a.n_opt->count()) throw InvalidArgument("--n is required for --stat " + a.stat);
        return a.n;
    };

    if (a.stat == "vk") {
        const unsigned k = require_k(a.k_opt, a.k);
        const std::size_t vmax = a.vmax_opt->count() ? a.vmax : default_vmax(model, k);
        const std::string method = a.method.empty() ? "recursion" : a.method;
        rec.parameters["k"] = k;
        rec.parameters["vmax"] = vmax;
        rec.parameters["method"] = method;
        Pmf pmf;
        if (method == "recursion") {
            pmf = vk_pmf(model, k, vmax);
        } else if (method == "series") {
            if (vmax < k) throw InvalidArgument("vmax must be >= k");
            auto c = series_coeffs(vk_pgf(model, k), vmax);
            pmf = finalize_pmf(k, std::vector<double>(c.begin() + k, c.end()));
        } else if (method == "closed-form") {
            if (k != 2) throw InvalidArgument("the closed-form pmf exists only for k = 2");
            if (vmax < k) throw InvalidArgument("vmax must be >= k");
            std::vector<double> probs;
            for (std::size_t v = 2; v <= vmax; ++v) probs.push_back(vk_pmf_closedform_k2(model, v));
            pmf = finalize_pmf(2, std::move(probs));
        } else {
            throw InvalidArgument("unknown vk method '" + method + "'");
        }
        pmf_rows(rec, pmf);
        rec.errata_flags = vk_flags(model);
    } else if (a.stat == "trk") {
        const unsigned k = require_k(a.k_opt, a.k);
        if (a.r < 1) throw InvalidArgument("occurrence index r must be >= 1");
        const Scheme s = parse_scheme(a.scheme);
        const RthQuery q{model, k, a.r, s};
        const std::size_t nmax = a.vmax_opt->count() ? a.vmax : a.r * default_vmax(model, k);
        const std::string method = a.method.empty() ? "series" : a.method;
        rec.parameters["k"] = k;
        rec.parameters["r"] = a.r;
        rec.parameters["scheme"] = std::string(scheme_name(s));
        rec.parameters["vmax"] = nmax;
        rec.parameters["method"] = method;
        if (method == "series") {
            pmf_rows(rec, trk_pmf(q, nmax));
        } else if (method == "recursion") {
            pmf_rows(rec, trk_pmf_recursive(q, nmax));
        } else {
            throw InvalidArgument("unknown trk method '" + method + "'");
        }
        rec.errata_flags = trk_flags(model, s);
    } else if (a.stat == "counts") {
        const unsigned k = require_k(a.k_opt, a.k);
        const Scheme s = parse_scheme(a.scheme);
        const CountsQuery q{model, need_n(), k, s};
        const std::string method = a.method.empty() ? "checked" : a.method;
        rec.parameters["k"] = k;
        rec.parameters["n"] = q.n;
        rec.parameters["scheme"] = std::string(scheme_name(s));
        rec.parameters["method"] = method;
        if (method == "checked") {
            pmf_rows(rec, counts_pmf(q));
        } else if (method == "duality") {
            pmf_rows(rec, counts_pmf_duality(q));
        } else if (method == "recursion") {
            pmf_rows(rec, counts_pmf_recursive(q));
        } else {
            throw InvalidArgument("unknown counts method '" + method + "'");
        }
        rec.errata_flags = counts_flags(model, s);
    } else {
        const std::size_t n = need_n();
        rec.parameters["n"] = n;
        pmf_rows(rec, longest_run_pmf(model, n));
        rec.errata_flags = longest_flags(model);
    }
    return rec;
}

// ---- moments ----------------------------------------------------------------

struct MomentArgs {
    ModelArgs model;
    std::string stat;
    unsigned k = 0, rmax = 1;
    std::string scheme = "I";
    std::size_t n = 0;
    CLI::Option *k_opt = nullptr, *n_opt = nullptr;

    void attach(CLI::App* sub) {
        model.attach(sub);
        sub->add_option("--stat", stat, "vk, trk or counts")->required()->check(CLI::IsMember({"vk", "trk", "counts"}));
        k_opt = sub->add_option("--k", k, "run length")->required();
        sub->add_option("--rmax", rmax, "largest occurrence index (trk)");
        sub->add_option("--scheme", scheme, "counting scheme I, II or III");
        n_opt = sub->add_option("--n", n, "number of trials (counts)");
    }
};

OutputRecord cmd_moments(const MomentArgs& a) {
    OutputRecord rec;
    rec.kind = "moments";
    const TrialModel model = a.model.build(rec.parameters);
    const unsigned k = require_k(a.k_opt, a.k);
    rec.parameters["stat"] = a.stat;
    rec.parameters["k"] = k;
    if (a.stat == "vk") {
        rec.columns = {"k", "mean", "second_moment", "variance"};
        const GfMoments m = gf_moments_at_one(vk_pgf(model, k));
        moment_row(rec, k, m.mean, m.second_moment());
        rec.errata_flags = vk_flags(model);
        return rec;
    }
    const Scheme s = parse_scheme(a.scheme);
    rec.parameters["scheme"] = std::string(scheme_name(s));
    if (a.stat == "trk") {
        if (a.rmax < 1) throw InvalidArgument("--rmax must be >= 1");
        rec.parameters["rmax"] = a.rmax;
        rec.columns = {"r", "mean", "second_moment", "variance"};
        const auto ms = trk_moments(model, k, s, a.rmax);
        for (std::size_t i = 0; i < ms.size(); ++i) moment_row(rec, i + 1, ms[i].mean, ms[i].second_moment);
        rec.errata_flags = trk_flags(model, s);
    } else {
        if (!a.n_opt->count()) throw InvalidArgument("--n is required for --stat counts");
        rec.parameters["n"] = a.n;
        rec.columns = {"n", "mean", "second_moment", "variance"};
        const Moments m = counts_moments({model, a.n, k, s});
        moment_row(rec, a.n, m.mean, m.second_moment);
        rec.errata_flags = counts_flags(model, s);
    }
    return rec;
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
    std::string seq;
    unsigned k = 0, r = 0;
    std::string scheme;

    void attach(CLI::App* sub) {
        sub->add_option("--seq", seq, "trial outcomes as a string of 0/1")->required();
        sub->add_option("--k", k, "run length")->required();
        sub->add_option("--r", r, "also report the trial completing the r-th run");
        sub->add_option("--scheme", scheme, "restrict to one scheme (default: all three)");
    }
};

OutputRecord cmd_count(const CountArgs& a) {
    OutputRecord rec;
    rec.kind = "count";
    if (a.k < 1) throw InvalidArgument("run length k must be >= 1");
    const BinarySequence seq = BinarySequence::parse(a.seq);
    rec.parameters["seq"] = a.seq;
    rec.parameters["k"] = a.k;
    if (a.r) rec.parameters["r"] = a.r;
    std::vector<Scheme> schemes{Scheme::NonOverlapping, Scheme::AtLeast, Scheme::Overlapping};
    if (!a.scheme.empty()) {
        schemes = {parse_scheme(a.scheme)};
        rec.parameters["scheme"] = std::string(scheme_name(schemes[0]));
    }
    rec.columns = {"scheme", "count", "rth_index"};
    for (Scheme s : schemes) {
        json at = nullptr;
        if (a.r) {
            if (auto i = first_occurrence_index(seq, a.k, a.r, s)) at = *i;
        }
        rec.rows.push_back({std::string(scheme_name(s)), count_runs(seq, a.k, s), at});
    }
    std::size_t longest = 0, cur = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        cur = seq[i] ? cur + 1 : 0;
        longest = std::max(longest, cur);
    }
    rec.summary["trials"] = seq.size();
    rec.summary["longest_run"] = longest;
    return rec;
}

// ---- fit --------------------------------------------------------------------

struct FitArgs {
    unsigned k = 0;
    std::string input;
    double sim_iid = 0.0;
    std::vector<double> sim_markov;
    std::size_t reps = 0, bootstrap = 0;
    std::uint64_t seed = 0;
    bool markov = false;
    CLI::Option *input_opt = nullptr, *sim_iid_opt = nullptr, *sim_markov_opt = nullptr, *seed_opt = nullptr,
                *reps_opt = nullptr;

    void attach(CLI::App* sub) {
        sub->add_option("--k", k, "run length")->required();
        input_opt = sub->add_option("--input", input, "file of waiting times, one per line, '#' comments");
        sim_iid_opt = sub->add_option("--simulate-iid", sim_iid, "simulate from i.i.d. trials with this p");
        sim_markov_opt =
            sub->add_option("--simulate-markov", sim_markov, "simulate from a stationary chain: alpha beta")
                ->expected(2);
        reps_opt = sub->add_option("--reps", reps, "number of simulated waiting times");
        seed_opt = sub->add_option("--seed", seed, "seed for simulation and bootstrap");
        sub->add_option("--bootstrap", bootstrap, "bootstrap resamples for standard errors");
        sub->add_flag("--markov", markov, "fit the Markov model (alpha, beta) instead of i.i.d. p");
        input_opt->excludes(sim_iid_opt)->excludes(sim_markov_opt);
        sim_iid_opt->excludes(sim_markov_opt);
    }
};

Sample read_sample(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read input file '" + path + "'");
    Sample out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r") + 1;
        std::size_t v = 0;
        const char* first = line.data() + b;
        const char* last = line.data() + e;
        auto r = std::from_chars(first, last, v);
        if (r.ec != std::errc() || r.ptr != last) {
            throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected a nonnegative integer");
        }
        out.push_back(v);
    }
    if (out.empty()) throw InvalidArgument("input file '" + path + "' holds no observations");
    return out;
}

OutputRecord cmd_fit(const FitArgs& a) {
    OutputRecord rec;
    rec.kind = "fit";
    if (a.k < 1) throw InvalidArgument("run length k must be >= 1");
    rec.parameters["k"] = a.k;
    rec.parameters["family"] = a.markov ? "markov" : "iid";
    const bool simulate = a.sim_iid_opt->count() || a.sim_markov_opt->count();
    if ((simulate || a.bootstrap) && !a.seed_opt->count()) {
        throw InvalidArgument("--seed is required for simulation and bootstrap");
    }
    Sample sample;
    if (simulate) {
        if (!a.reps_opt->count() || a.reps < 1) throw InvalidArgument("--reps >= 1 is required with simulation");
        TrialModel truth = TrialModel::iid(0.5);
        if (a.sim_iid_opt->count()) {
            truth = TrialModel::iid(a.sim_iid);
            rec.parameters["simulate_iid"] = a.sim_iid;
        } else {
            truth = TrialModel::markov_stationary(a.sim_markov[0], a.sim_markov[1]);
            rec.parameters["simulate_markov"] = json::array({a.sim_markov[0], a.sim_markov[1]});
        }
        rec.parameters["reps"] = a.reps;
        SeededStream stream(a.seed);
        sample = sample_waiting_times(truth, a.k, a.reps, stream);
    } else if (a.input_opt->count()) {
        rec.parameters["input"] = a.input;
        sample = read_sample(a.input);
    } else {
        throw InvalidArgument("fit needs --input or --simulate-iid / --simulate-markov");
    }
    if (a.seed_opt->count()) rec.parameters["seed"] = a.seed;

    const unsigned k = a.k;
    const Fitter fitter = a.markov ? Fitter([k](const Sample& s) { return fit_markov(s, k); })
                                   : Fitter([k](const Sample& s) { return fit_iid(s, k); });
    FitResult fit = fitter(sample);
    std::size_t failures = 0;
    if (a.bootstrap) {
        rec.parameters["bootstrap"] = a.bootstrap;
        const auto bs = bootstrap_se(sample, fitter, a.bootstrap, SeededStream(a.seed).substream(0xB0075));
        fit.se = bs.se;
        failures = bs.failures;
    }
    rec.columns = {"parameter", "estimate", "se"};
    for (std::size_t i = 0; i < fit.estimates.size(); ++i) {
        const auto& [name, est] = fit.estimates[i];
        rec.rows.push_back({name, num(est), i < fit.se.size() ? num(fit.se[i].second) : json(nullptr)});
    }
    rec.summary["observations"] = sample.size();
    rec.summary["loglik"] = num(fit.loglik);
    rec.summary["converged"] = fit.converged;
    rec.summary["iterations"] = fit.iterations;
    if (a.bootstrap) rec.summary["bootstrap_failures"] = failures;
    return rec;
}

// ---- check ------------------------------------------------------------------

struct CheckArgs {
    std::size_t n = 16;
    std::vector<unsigned> ks;
    unsigned rmax = 4;
    std::string ledger;
    bool inject_fault = false, no_oracle = false;

    void attach(CLI::App* sub) {
        sub->add_option("--n", n, "trial horizon and enumeration length");
        sub->add_option("--k", ks, "run lengths (default 2 3 4)");
        sub->add_option("--rmax", rmax, "occurrence horizon for waiting-time tables");
        sub->add_option("--ledger", ledger, "append one JSON line per formula to this file");
        sub->add_flag("--inject-fault", inject_fault, "add a fixture formula with a wrong coefficient");
        sub->add_flag("--no-oracle", no_oracle, "skip the enumeration comparisons");
    }
};

int cmd_check(const CheckArgs& a, OutputRecord& rec, std::ostream& err) {
    rec.kind = "check";
    CheckGrid grid = default_check_grid();
    grid.n_max = a.n;
    grid.r_max = a.rmax;
    if (!a.ks.empty()) grid.ks = a.ks;
    if (grid.n_max > kMaxEnumerationTrials && !a.no_oracle) {
        throw InvalidArgument("--n above " + std::to_string(kMaxEnumerationTrials) + " needs --no-oracle");
    }
    CheckOptions opts;
    opts.inject_fault = a.inject_fault;
    opts.run_oracle = !a.no_oracle;
    const CheckReport report = run_check(grid, opts);

    rec.parameters["n"] = grid.n_max;
    rec.parameters["k"] = grid.ks;
    rec.parameters["rmax"] = grid.r_max;
    rec.parameters["oracle"] = opts.run_oracle;
    rec.parameters["inject_fault"] = opts.inject_fault;
    if (!a.ledger.empty()) rec.parameters["ledger"] = a.ledger;

    rec.columns = {"formula_id", "status", "max_deviation", "points", "known_erratum"};
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : report.results) {
        rec.rows.push_back({r.id, std::string(status_name(r.status)), num(r.max_deviation), r.points, r.known_erratum});
        rec.errata_flags.push_back({r.id, std::string(status_name(r.status))});
        ++counts[static_cast<int>(r.status)];
    }
    rec.summary["confirmed"] = counts[static_cast<int>(FormulaStatus::Confirmed)];
    rec.summary["erratum"] = counts[static_cast<int>(FormulaStatus::Erratum)];
    rec.summary["unverified"] = counts[static_cast<int>(FormulaStatus::Unverified)];
    rec.summary["new_disagreements"] = report.new_disagreements;

    if (!a.ledger.empty()) {
        ErrataLedger ledger(a.ledger);
        for (const auto& r : report.results) ledger.append(r, grid);
    }
    if (report.ok()) return kExitOk;
    for (const auto& id : report.new_disagreements) {
        for (const auto& r : report.results) {
            if (r.id == id) err << "new disagreement: " << r.id << " [" << r.anchor << "]\n";
        }
    }
    return kExitDisagreement;
}

// ---- fib --------------------------------------------------------------------

struct FibArgs {
    unsigned k = 0;
    std::uint64_t n = 0;
    std::string method = "recurrence";

    void attach(CLI::App* sub) {
        sub->add_option("--k", k, "order")->required();
        sub->add_option("--n", n, "index, n >= 1")->required();
        sub->add_option("--method", method, "recurrence, dresden or spickerman")
            ->check(CLI::IsMember({"recurrence", "dresden", "spickerman"}));
    }
};

OutputRecord cmd_fib(const FibArgs& a) {
    OutputRecord rec;
    rec.kind = "fib";
    rec.parameters["k"] = a.k;
    rec.parameters["n"] = a.n;
    rec.parameters["method"] = a.method;
    rec.columns = {"n", "value"};
    if (a.method == "recurrence") {
        rec.rows.push_back({a.n, fib_k(a.k, a.n)});
        return rec;
    }
    const FibClosedForm f = a.method == "dresden" ? fib_k_dresden(a.k, a.n) : fib_k_spickerman(a.k, a.n);
    rec.rows.push_back({a.n, f.rounded});
    rec.summary["real_part"] = num(f.value);
    rec.summary["rounding_residue"] = num(f.value - static_cast<double>(f.rounded));
    rec.summary["imag_residue"] = num(f.imag_residue);
    return rec;
}

}  // namespace

std::string render(const OutputRecord& rec, Format fmt) {
    if (fmt == Format::Json) {
        json j;
        j["kind"] = rec.kind;
        j["parameters"] = rec.parameters;
        j["columns"] = rec.columns;
        json rows = json::array();
        for (const auto& r : rec.rows) rows.push_back(json(r));
        j["rows"] = std::move(rows);
        j["summary"] = rec.summary;
        json flags = json::array();
        for (const auto& f : rec.errata_flags) flags.push_back({{"id", f.id}, {"status", f.status}});
        j["errata_flags"] = std::move(flags);
        return j.dump() + "\n";
    }
    std::string out = csv_line({"kind", rec.kind});
    csv_object(out, "parameter", rec.parameters);
    {
        std::vector<json> f{"columns"};
        for (const auto& c : rec.columns) f.push_back(c);
        out += csv_line(f);
    }
    for (const auto& r : rec.rows) {
        std::vector<json> f{"row"};
        f.insert(f.end(), r.begin(), r.end());
        out += csv_line(f);
    }
    csv_object(out, "summary", rec.summary);
    for (const auto& fl : rec.errata_flags) out += csv_line({"flag", fl.id, fl.status});
    return out;
}

OutputRecord parse_record(std::string_view text, Format fmt) {
    OutputRecord rec;
    if (fmt == Format::Json) {
        const json j = json::parse(text);
        rec.kind = j.at("kind").get<std::string>();
        rec.parameters = j.at("parameters");
        rec.columns = j.at("columns").get<std::vector<std::string>>();
        for (const auto& r : j.at("rows")) rec.rows.emplace_back(r.begin(), r.end());
        rec.summary = j.at("summary");
        for (const auto& f : j.at("errata_flags")) {
            rec.errata_flags.push_back({f.at("id").get<std::string>(), f.at("status").get<std::string>()});
        }
        return rec;
    }
    for (const auto& r : csv_tokenize(text)) {
        const std::string& tag = r[0].text;
        if (tag == "kind" && r.size() == 2) {
            rec.kind = r[1].text;
        } else if (tag == "parameter" || tag == "summary") {
            if (r.size() != 3) throw InvalidArgument("CSV " + tag + " record needs a key and one value");
            (tag == "parameter" ? rec.parameters : rec.summary)[csv_key(r)] = csv_value(r[2]);
        } else if (tag == "parameter_list" || tag == "summary_list") {
            json arr = json::array();
            for (std::size_t i = 2; i < r.size(); ++i) arr.push_back(csv_value(r[i]));
            (tag == "parameter_list" ? rec.parameters : rec.summary)[csv_key(r)] = std::move(arr);
        } else if (tag == "columns") {
            for (std::size_t i = 1; i < r.size(); ++i) rec.columns.push_back(r[i].text);
        } else if (tag == "row") {
            std::vector<json> row;
            for (std::size_t i = 1; i < r.size(); ++i) row.push_back(csv_value(r[i]));
            rec.rows.push_back(std::move(row));
        } else if (tag == "flag" && r.size() == 3) {
            rec.errata_flags.push_back({r[1].text, r[2].text});
        } else {
            throw InvalidArgument("unrecognized CSV record '" + tag + "'");
        }
    }
    return rec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact distributions of success-run statistics", "runstat"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    PmfArgs pmf;
    MomentArgs moments;
    CountArgs count;
    FitArgs fit;
    CheckArgs check;
    FibArgs fib;
    auto* pmf_cmd = app.add_subcommand("pmf", "probability mass function of V(k), T_{r,k}, N_n or L_n");
    auto* mom_cmd = app.add_subcommand("moments", "mean and second moment of V(k), T_{r,k} or N_n");
    auto* count_cmd = app.add_subcommand("count", "count runs in an observed 0/1 sequence");
    auto* fit_cmd = app.add_subcommand("fit", "maximum-likelihood fit of waiting times to V(k)");
    auto* check_cmd = app.add_subcommand("check", "verify printed formulas against the enumeration oracle");
    auto* fib_cmd = app.add_subcommand("fib", "k-step Fibonacci numbers");
    pmf.attach(pmf_cmd);
    moments.attach(mom_cmd);
    count.attach(count_cmd);
    fit.attach(fit_cmd);
    check.attach(check_cmd);
    fib.attach(fib_cmd);

    std::vector<std::string> storage{"runstat"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        OutputRecord rec;
        int code = kExitOk;
        if (pmf_cmd->parsed()) {
            rec = cmd_pmf(pmf);
        } else if (mom_cmd->parsed()) {
            rec = cmd_moments(moments);
        } else if (count_cmd->parsed()) {
            rec = cmd_count(count);
        } else if (fit_cmd->parsed()) {
            rec = cmd_fit(fit);
        } else if (check_cmd->parsed()) {
            code = cmd_check(check, rec, err);
        } else {
            rec = cmd_fib(fib);
        }
        out << render(rec, parse_format(format));
        return code;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace runstat::cli
