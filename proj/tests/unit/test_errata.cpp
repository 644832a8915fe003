#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

#include "runstat/errata.hpp"
#include "runstat/error.hpp"

using namespace runstat;

namespace {
const FormulaResult* find(const CheckReport& rep, const std::string& id) {
    for (const auto& r : rep.results) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

const CheckReport& default_report() {
    static const CheckReport rep = run_check(default_check_grid());
    return rep;
}
}  // namespace

TEST(Catalog, IdsUniqueAndKnownErrataListed) {
    const auto cat = formula_catalog();
    std::set<std::string> ids;
    for (const auto& c : cat) {
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
        EXPECT_FALSE(c.anchor.empty()) << c.id;
    }
    for (const auto& id : known_errata()) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Check, DefaultGridHasNoNewDisagreement) {
    const CheckReport& rep = default_report();
    EXPECT_TRUE(rep.ok());
    for (const auto& id : rep.new_disagreements) ADD_FAILURE() << id;
}

TEST(Check, DefaultGridMatchesRecordedStatus) {
    const CheckReport& rep = default_report();
    for (const auto& c : formula_catalog()) {
        const FormulaResult* r = find(rep, c.id);
        ASSERT_NE(r, nullptr) << c.id;
        EXPECT_EQ(r->status, c.recorded) << c.id << " deviation " << r->max_deviation;
    }
}

TEST(Check, SchemeOneMeanGfIsKnownErratum) {
    const FormulaResult* r = find(default_report(), "iid.I.mean_gf");
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->status, FormulaStatus::Erratum);
    EXPECT_TRUE(r->known_erratum);
}

// Printed first coefficient (1 - p^k)/p^k = 3 against E[T] = 6 at p = 1/2, k = 2.
TEST(Check, SchemeOneMeanGfDeviationAtHalf) {
    CheckGrid g;
    g.models = {TrialModel::iid(0.5)};
    g.ks = {2};
    g.n_max = 8;
    CheckOptions opt;
    opt.run_oracle = false;
    const FormulaResult* r = find(run_check(g, opt), "iid.I.mean_gf");
    ASSERT_NE(r, nullptr);
    EXPECT_NEAR(r->max_deviation, std::fabs(3.0 - 6.0) / 6.0, 1e-12);
}

TEST(Check, OracleComparisonsPass) {
    for (const auto& r : default_report().results) {
        if (r.id.rfind("oracle.", 0) == 0) {
            EXPECT_EQ(r.status, FormulaStatus::Confirmed) << r.id;
            EXPECT_LE(r.max_deviation, kOracleTolerance) << r.id;
        }
    }
}

TEST(Check, InjectedFaultIsFlagged) {
    CheckGrid g;
    g.models = {TrialModel::iid(0.5), TrialModel::markov_stationary(0.3, 0.7)};
    g.ks = {2};
    g.n_max = 6;
    CheckOptions opt;
    opt.inject_fault = true;
    const CheckReport rep = run_check(g, opt);
    EXPECT_FALSE(rep.ok());
    ASSERT_EQ(rep.new_disagreements.size(), 1u);
}

TEST(Check, MicroGridIsFast) {
    CheckGrid g = default_check_grid();
    g.ks = {2};
    g.n_max = 4;
    const auto t0 = std::chrono::steady_clock::now();
    const CheckReport rep = run_check(g);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_TRUE(rep.ok());
    EXPECT_LT(secs, 1.0);
}

TEST(Check, HorizonBelowRunLengthRejected) {
    CheckGrid g = default_check_grid();
    g.ks = {5};
    g.n_max = 4;
    EXPECT_THROW(run_check(g), InvalidArgument);
}

TEST(Ledger, LinesCarryRequiredKeys) {
    const CheckGrid g = default_check_grid();
    for (const auto& r : default_report().results) {
        const std::string line = ledger_line(r, g);
        EXPECT_EQ(line.find('\n'), std::string::npos);
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j.at("formula_id"), r.id);
        EXPECT_TRUE(j.contains("paper_anchor"));
        EXPECT_EQ(j.at("status"), std::string(status_name(r.status)));
        EXPECT_TRUE(j.contains("max_deviation"));
        EXPECT_TRUE(j.at("parameters").contains("k"));
        if (r.status == FormulaStatus::Unverified) {
            EXPECT_TRUE(j.at("max_deviation").is_null());
        }
    }
}

TEST(Ledger, AppendsToFile) {
    const std::string path = ::testing::TempDir() + "runstat_ledger_test.jsonl";
    std::remove(path.c_str());
    const CheckGrid g = default_check_grid();
    const FormulaResult* r = find(default_report(), "iid.I.mean_gf");
    ASSERT_NE(r, nullptr);
    {
        ErrataLedger ledger(path);
        ledger.append(*r, g);
        ledger.append(*r, g);
    }
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        EXPECT_EQ(nlohmann::json::parse(line).at("status"), "ERRATUM");
    }
    EXPECT_EQ(lines, 2);
    std::remove(path.c_str());
    EXPECT_THROW(ErrataLedger("/nonexistent-dir/x/ledger.jsonl"), InvalidArgument);
}

TEST(Status, Names) {
    EXPECT_EQ(status_name(FormulaStatus::Confirmed), "CONFIRMED");
    EXPECT_EQ(status_name(FormulaStatus::Erratum), "ERRATUM");
    EXPECT_EQ(status_name(FormulaStatus::Unverified), "UNVERIFIED");
}
