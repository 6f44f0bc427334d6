#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sandpilion/graph.hpp"

namespace sandpilion {

/// Inclusive integer interval.
struct IntRange {
    int lo = 1;
    int hi = 1;
    bool empty() const { return hi < lo; }
};

/// "a..b" or a single integer "a". Throws InvalidArgument on malformed or empty ranges.
IntRange parse_range(const std::string& text);

/// tau, group, symmetry, gf, trunk, detMprime, cokernel, N, oracle, leafgen, deletion.
const std::vector<std::string>& known_checks();
const std::vector<std::string>& default_checks();
/// Comma-separated check names. Throws InvalidArgument on an unknown name or an empty list.
std::vector<std::string> parse_checks(const std::string& text);

struct SweepSpec {
    IntRange p{1, 7};
    IntRange s1{1, 4};
    IntRange s2{1, 4};
    std::vector<std::string> checks = default_checks();
};

/// Throws InvalidArgument for empty ranges, p < 1, s < 1 or unknown checks.
void validate(const SweepSpec& spec);
std::vector<FamilyParams> sweep_points(const SweepSpec& spec);

/// Outcome of one named check: true/false, or nullopt when not applicable at the point.
using CheckOutcome = std::pair<std::string, std::optional<bool>>;

struct PointResult {
    FamilyParams params;
    std::vector<CheckOutcome> checks;
    bool passed() const;
};

struct SweepResult {
    std::vector<PointResult> points;
    std::size_t checks_run() const;
    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

std::optional<bool> run_check(const std::string& name, const FamilyParams& params);
PointResult evaluate_point(const FamilyParams& params, const std::vector<std::string>& checks);

/// Points evaluated concurrently (OpenMP); results in parameter order.
SweepResult run_sweep(const SweepSpec& spec);
/// Serial reference for run_sweep.
SweepResult run_sweep_serial(const SweepSpec& spec);

/// One JSON object per line: {"p":..,"s1":..,"s2":..,"checks":{...}} plus "timestamp" if requested.
std::string point_record(const PointResult& point, bool timestamp);
void write_report(std::ostream& out, const SweepResult& result, bool timestamp);
/// "N points, M checks, F failures"
std::string summary_line(const SweepResult& result);

/// CSV with columns p,s1,s2,t_closed,tau_determinant,tau_match,predicted_group,snf_group,group_match.
void write_table(std::ostream& out, const SweepSpec& spec);

}  // namespace sandpilion
