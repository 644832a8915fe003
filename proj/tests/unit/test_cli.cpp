#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace runstat::cli;
using nlohmann::ordered_json;

namespace {
struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

OutputRecord record(const Outcome& o) {
    EXPECT_EQ(o.code, kExitOk) << o.err;
    return parse_record(o.out, Format::Json);
}

bool has_row(const OutputRecord& r, double x, double y, double tol) {
    for (const auto& row : r.rows) {
        if (row.size() >= 2 && row[0].get<double>() == x && std::fabs(row[1].get<double>() - y) <= tol) return true;
    }
    return false;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }
}  // namespace

TEST(CliPmf, FibonacciRow) {
    const OutputRecord r = record(invoke({"pmf", "--iid", "0.5", "--stat", "vk", "--k", "2", "--vmax", "10"}));
    EXPECT_EQ(r.kind, "pmf");
    EXPECT_TRUE(has_row(r, 5, 0.09375, 1e-15));
    EXPECT_FALSE(r.errata_flags.empty());
}

TEST(CliPmf, OverlappingCountRow) {
    const OutputRecord r =
        record(invoke({"pmf", "--iid", "0.5", "--stat", "counts", "--scheme", "III", "--k", "2", "--n", "3"}));
    EXPECT_TRUE(has_row(r, 2, 0.125, 1e-15));
}

TEST(CliPmf, MethodsAgree) {
    const std::vector<std::string> base{"pmf", "--markov", "0.4", "0.7", "0.2", "--stat", "vk", "--k", "2", "--vmax", "30"};
    auto with = [&](const std::string& m) {
        auto a = base;
        a.insert(a.end(), {"--method", m});
        return record(invoke(a));
    };
    const OutputRecord a = with("recursion"), b = with("closed-form"), c = with("series");
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_NEAR(a.rows[i][1].get<double>(), b.rows[i][1].get<double>(), 1e-10);
        EXPECT_NEAR(a.rows[i][1].get<double>(), c.rows[i][1].get<double>(), 1e-12);
    }
}

TEST(CliPmf, InvalidRunLength) {
    const Outcome o = invoke({"pmf", "--iid", "0.5", "--stat", "vk", "--k", "0", "--vmax", "10"});
    EXPECT_NE(o.code, kExitOk);
    EXPECT_TRUE(o.out.empty());
    EXPECT_FALSE(o.err.empty());
}

TEST(CliPmf, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"pmf", "--stat", "vk", "--k", "2"}).code, kExitUsage);
    EXPECT_EQ(invoke({"pmf", "--iid", "1.5", "--stat", "vk", "--k", "2"}).code, kExitUsage);
    EXPECT_EQ(invoke({"pmf", "--iid", "0.5", "--stat", "xx", "--k", "2"}).code, kExitUsage);
    EXPECT_TRUE(invoke({"pmf", "--iid", "0.5", "--stat", "counts", "--k", "2"}).out.empty());
}

TEST(CliMoments, RenewalMean) {
    const OutputRecord r = record(invoke({"moments", "--iid", "0.5", "--stat", "vk", "--k", "2"}));
    ASSERT_FALSE(r.rows.empty());
    bool found = false;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
        if (r.columns[c] == "mean") {
            EXPECT_NEAR(r.rows[0][c].get<double>(), 6.0, 1e-10);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(CliCount, TwelveTrialExample) {
    const OutputRecord r = record(invoke({"count", "--seq", "011111000111", "--k", "2", "--r", "2"}));
    ASSERT_EQ(r.rows.size(), 3u);
    const std::vector<std::pair<long, long>> want{{3, 5}, {2, 11}, {6, 4}};
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(r.rows[i][1].get<long>(), want[i].first);
        EXPECT_EQ(r.rows[i][2].get<long>(), want[i].second);
    }
    EXPECT_NE(invoke({"count", "--seq", "01a", "--k", "2"}).code, kExitOk);
}

TEST(CliFit, SimulatedHalf) {
    const OutputRecord r =
        record(invoke({"fit", "--k", "2", "--simulate-iid", "0.5", "--reps", "200", "--seed", "7", "--bootstrap", "50"}));
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0][0], "p");
    EXPECT_NEAR(r.rows[0][1].get<double>(), 0.5, 0.1);
    EXPECT_GT(r.rows[0][2].get<double>(), 0.0);
}

TEST(CliFit, SeedIsRequired) {
    const Outcome o = invoke({"fit", "--k", "2", "--simulate-iid", "0.5", "--reps", "200"});
    EXPECT_EQ(o.code, kExitUsage);
    EXPECT_TRUE(o.out.empty());
}

TEST(CliFit, InputFiles) {
    const std::string empty = temp_path("runstat_empty.txt");
    std::ofstream(empty) << "# nothing here\n\n";
    Outcome o = invoke({"fit", "--k", "2", "--input", empty});
    EXPECT_NE(o.code, kExitOk);
    EXPECT_TRUE(o.out.empty());

    const std::string bad = temp_path("runstat_bad.txt");
    std::ofstream(bad) << "3\n1\n";
    o = invoke({"fit", "--k", "2", "--input", bad});
    EXPECT_NE(o.code, kExitOk);

    const std::string good = temp_path("runstat_good.txt");
    std::ofstream(good) << "# waiting times\n2\n3\n\n5\n2\n9\n4\n";
    EXPECT_EQ(invoke({"fit", "--k", "2", "--input", good}).code, kExitOk);
    EXPECT_NE(invoke({"fit", "--k", "2", "--input", temp_path("missing-file.txt")}).code, kExitOk);
    std::remove(empty.c_str());
    std::remove(bad.c_str());
    std::remove(good.c_str());
}

TEST(CliFit, MarkovOnCollapseData) {
    const OutputRecord r = record(
        invoke({"fit", "--k", "2", "--simulate-iid", "0.5", "--reps", "2000", "--seed", "3001", "--markov"}));
    ASSERT_EQ(r.rows.size(), 3u);
    const double p = r.rows[0][1].get<double>(), a = r.rows[1][1].get<double>(), b = r.rows[2][1].get<double>();
    EXPECT_NEAR(p, 0.5, 0.15);
    EXPECT_NEAR(a, 0.5, 0.15);
    EXPECT_NEAR(1 - b, 0.5, 0.15);
}

TEST(CliCheck, DefaultGridAndLedger) {
    const std::string path = temp_path("runstat_cli_ledger.jsonl");
    std::remove(path.c_str());
    const Outcome o = invoke({"check", "--ledger", path});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    std::ifstream in(path);
    std::string line;
    bool found = false;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.at("formula_id") == "iid.I.mean_gf") {
            EXPECT_EQ(j.at("status"), "ERRATUM");
            found = true;
        }
    }
    EXPECT_TRUE(found);
    std::remove(path.c_str());
}

TEST(CliCheck, InjectedFaultFails) {
    const Outcome o = invoke({"check", "--n", "6", "--k", "2", "--inject-fault"});
    EXPECT_EQ(o.code, kExitDisagreement);
    EXPECT_NE(o.err.find("new disagreement"), std::string::npos);
}

TEST(CliCheck, LargeHorizonNeedsNoOracle) {
    EXPECT_EQ(invoke({"check", "--n", "30", "--k", "2"}).code, kExitUsage);
    EXPECT_EQ(invoke({"check", "--n", "30", "--k", "2", "--no-oracle"}).code, kExitOk);
}

TEST(CliFib, Values) {
    EXPECT_EQ(record(invoke({"fib", "--k", "3", "--n", "9"})).rows.at(0).at(1).get<long>(), 81);
    EXPECT_EQ(record(invoke({"fib", "--k", "2", "--n", "1"})).rows.at(0).at(1).get<long>(), 1);
    const OutputRecord d = record(invoke({"fib", "--k", "4", "--n", "9", "--method", "spickerman"}));
    EXPECT_EQ(d.rows.at(0).at(1).get<long>(), 108);
    EXPECT_TRUE(d.summary.contains("rounding_residue"));
}

TEST(CliFib, Overflow) {
    const Outcome o = invoke({"fib", "--k", "2", "--n", "200"});
    EXPECT_EQ(o.code, kExitOverflow);
    EXPECT_TRUE(o.out.empty());
    EXPECT_NE(o.err.find("overflow"), std::string::npos);
}

TEST(CliFormat, RoundTripBothFormats) {
    const std::vector<std::vector<std::string>> commands{
        {"pmf", "--iid", "0.3", "--stat", "trk", "--k", "2", "--r", "2", "--scheme", "II", "--vmax", "25"},
        {"pmf", "--markov", "0.5", "0.6", "0.3", "--stat", "longest", "--n", "9"},
        {"moments", "--iid", "0.7", "--stat", "counts", "--k", "2", "--scheme", "I", "--n", "12"},
        {"count", "--seq", "0110111", "--k", "2"},
        {"fit", "--k", "2", "--simulate-markov", "0.6", "0.4", "--reps", "100", "--seed", "5", "--markov"},
        {"check", "--n", "4", "--k", "2"},
        {"fib", "--k", "3", "--n", "20", "--method", "dresden"},
    };
    for (const auto& c : commands) {
        const Outcome j = invoke(c);
        ASSERT_EQ(j.code, kExitOk) << c[0] << ": " << j.err;
        EXPECT_EQ(std::count(j.out.begin(), j.out.end(), '\n'), 1) << c[0];
        const OutputRecord rec = parse_record(j.out, Format::Json);
        EXPECT_EQ(render(rec, Format::Json), j.out);

        auto csv_args = c;
        csv_args.insert(csv_args.begin(), {"--format", "csv"});
        const Outcome v = invoke(csv_args);
        ASSERT_EQ(v.code, kExitOk) << v.err;
        const OutputRecord from_csv = parse_record(v.out, Format::Csv);
        EXPECT_EQ(from_csv, rec) << c[0];
        EXPECT_EQ(render(from_csv, Format::Csv), v.out);
    }
}

TEST(CliFormat, NumbersAreLossless) {
    OutputRecord r;
    r.kind = "pmf";
    r.parameters["p"] = 0.1;
    r.columns = {"value", "probability"};
    r.rows = {{ordered_json(3), ordered_json(1.0 / 3.0)}, {ordered_json(4), ordered_json(2.0)}};
    r.summary["note"] = "a \"quoted\", comma";
    r.summary["missing"] = nullptr;
    r.errata_flags = {{"iid.I.mean_gf", "ERRATUM"}};
    for (Format f : {Format::Json, Format::Csv}) {
        const OutputRecord back = parse_record(render(r, f), f);
        EXPECT_EQ(back, r);
        EXPECT_EQ(back.rows[0][1].get<double>(), 1.0 / 3.0);
        EXPECT_TRUE(back.rows[1][1].is_number_float());
    }
}

TEST(CliDeterminism, SeededCommandsRepeat) {
    const std::vector<std::string> c{"fit", "--k", "3", "--simulate-iid", "0.6", "--reps", "150", "--seed", "99",
                                     "--bootstrap", "30"};
    EXPECT_EQ(invoke(c).out, invoke(c).out);
    EXPECT_NE(invoke(c).out, invoke({"fit", "--k", "3", "--simulate-iid", "0.6", "--reps", "150", "--seed", "98",
                                     "--bootstrap", "30"})
                                 .out);
}
