#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dilation {

/// Published minimum dilation of the regular n-gon: printed truncated
/// decimals, a closed form where one is known, or an upper bound.
struct ReferenceValue {
    int n = 0;
    std::string printed;             // e.g. "1.4142"
    std::optional<double> formula;   // closed form, when published
    bool upper_bound = false;        // "< printed"
};

/// Reference values for n = 4..26 (throws std::out_of_range otherwise).
ReferenceValue reference_value(int n);

struct ReproRow {
    int n = 0;
    std::string method;  // "exhaustive", "local-search" or "skipped"
    double computed = 0.0;
    ReferenceValue reference;
    /// computed lies in [printed, printed + 1e-4), or below it for bounds.
    bool printed_ok = false;
    std::optional<double> formula_diff;
    /// |closed-form stretch - coordinate-based stretch| of the argmin.
    double cross_check_diff = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> argmin;
    double seconds = 0.0;
    bool pass = false;
};

struct ReproOptions {
    int max_n = 16;
    bool extended = false;
    int workers = 1;
    std::uint64_t heuristic_budget = 1000000;
    std::uint64_t seed = 1;
};

struct ReproductionReport {
    std::vector<ReproRow> rows;
    int workers = 1;
    std::string build_id;
    double seconds = 0.0;

    /// Every row that ran passed.
    [[nodiscard]] bool all_pass() const;
};

inline constexpr double kReproTolerance = 1e-9;

/// Rows n = 4..max_n (max_n <= 26). Exhaustive for n <= 24, local search
/// for the n = 25, 26 upper bounds; rows with n >= 19 run only when
/// `extended` is set and are otherwise reported as skipped.
ReproductionReport reproduce_table(const ReproOptions& options);

nlohmann::json to_json(const ReproductionReport& report);
std::string to_text(const ReproductionReport& report);
std::string to_csv(const ReproductionReport& report);

}  // namespace dilation
