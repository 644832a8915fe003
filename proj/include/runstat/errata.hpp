#pragma once

#include <cstddef>
#include <fstream>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "runstat/model.hpp"

namespace runstat {

enum class FormulaStatus { Confirmed, Erratum, Unverified };

/// "CONFIRMED", "ERRATUM", "UNVERIFIED"
std::string_view status_name(FormulaStatus s) noexcept;

/// Relative deviation max(1, |truth|) * tolerance below which a printed
/// formula counts as confirmed.
inline constexpr double kFormulaTolerance = 1e-8;
/// Total-variation bound for analytic-vs-enumeration comparisons.
inline constexpr double kOracleTolerance = 1e-10;

struct CheckGrid {
    std::vector<TrialModel> models;
    std::vector<unsigned> ks;
    std::size_t n_max = 16;  // trial horizon and enumeration length
    unsigned r_max = 4;      // occurrence horizon for waiting-time tables
};

/// IID p in {0.2, 0.5, 0.8}; stationary Markov (alpha, beta) in {0.3, 0.7}^2
/// plus one chain started off its stationary law; k in {2, 3, 4}; n = 16.
CheckGrid default_check_grid();

struct CheckOptions {
    bool run_oracle = true;
    /// Adds a fixture formula with one wrong coefficient.
    bool inject_fault = false;
};

struct FormulaResult {
    std::string id;
    std::string anchor;
    FormulaStatus status = FormulaStatus::Unverified;
    double max_deviation = 0.0;  // NaN when nothing was evaluated, inf on a pole
    std::string worst_model;
    unsigned worst_k = 0;
    std::size_t points = 0;
    std::string note;
    bool known_erratum = false;
};

struct CheckReport {
    std::vector<FormulaResult> results;
    std::vector<std::string> new_disagreements;

    bool ok() const noexcept { return new_disagreements.empty(); }
};

/// Formula ids whose printed form is known to disagree with the oracle.
const std::vector<std::string>& known_errata();

struct CatalogItem {
    std::string id;
    std::string anchor;
    /// Status on the default grid: Erratum if listed in known_errata(),
    /// Unverified if not transcribed, otherwise Confirmed.
    FormulaStatus recorded = FormulaStatus::Confirmed;
};
std::vector<CatalogItem> formula_catalog();

/// Evaluates every catalog formula on the grid and, unless disabled, compares
/// each analytic distribution with exhaustive enumeration.
CheckReport run_check(const CheckGrid& grid, const CheckOptions& options = {});

/// One ledger record as a single JSON line (no trailing newline).
std::string ledger_line(const FormulaResult& r, const CheckGrid& grid);

/// Append-only newline-delimited ledger; safe to share between threads.
class ErrataLedger {
public:
    explicit ErrataLedger(const std::string& path);

    void append(const FormulaResult& r, const CheckGrid& grid);

private:
    std::mutex mu_;
    std::ofstream out_;
};

}  // namespace runstat
