#include "sandpilion/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <ranges>
#include <sstream>

#include "sandpilion/errors.hpp"
#include "sandpilion/formulas.hpp"
#include "sandpilion/io.hpp"
#include "sandpilion/oracle.hpp"
#include "sandpilion/relations.hpp"
#include "sandpilion/sandpile.hpp"

namespace sandpilion {

namespace {

int parse_int(std::string_view text, const std::string& whole) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) throw InvalidArgument("bad range '" + whole + "'");
    return value;
}

Multigraph cone_of(const FamilyParams& params) { return cone(build_bicoconut(params)); }

bool tau_check(const FamilyParams& params) { return t_closed(params) == tau(cone_of(params)); }

bool group_check(const FamilyParams& params) {
    return predict_group(params).group() == sandpile_group(cone_of(params));
}

bool symmetry_check(const FamilyParams& params) {
    const FamilyParams swapped{params.p, params.s2, params.s1};
    const auto terms = static_cast<std::size_t>(params.p);
    return t_closed(params) == t_closed(swapped) && tau(cone_of(params)) == tau(cone_of(swapped)) &&
           gf_coefficients(params.s1, params.s2, terms) == gf_coefficients(params.s2, params.s1, terms);
}

bool gf_check(const FamilyParams& params) {
    const auto coeffs = gf_coefficients(params.s1, params.s2, static_cast<std::size_t>(params.p));
    return coeffs.back() == t_closed(params);
}

std::optional<bool> oracle_check(const FamilyParams& params) {
    const auto g = cone_of(params);
    if (g.edge_count() > enumeration_budget()) return std::nullopt;
    return brute_force_tau(g) == t_closed(params);
}

bool leafgen_check(const FamilyParams& params) {
    const auto t = build_bicoconut(params);
    return std::ranges::all_of(t.leaves(), [&](std::size_t leaf) { return check_leaf_generators(t, t.label(leaf)); });
}

bool deletion_check(const FamilyParams& params) {
    const auto t = build_bicoconut(params);
    const TauFunction det_tau = [](const Multigraph& g) { return tau(g); };
    return std::ranges::all_of(t.leaves(),
                               [&](std::size_t leaf) { return check_cone_deletion(t, t.label(leaf), det_tau).holds(); });
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

}  // namespace

IntRange parse_range(const std::string& text) {
    IntRange r;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        r.lo = parse_int(std::string_view(text).substr(0, dots), text);
        r.hi = parse_int(std::string_view(text).substr(dots + 2), text);
    } else {
        r.lo = r.hi = parse_int(text, text);
    }
    if (r.empty()) throw InvalidArgument("empty range '" + text + "'");
    return r;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{"tau",      "group", "symmetry", "gf",     "trunk",   "detMprime",
                                                "cokernel", "N",     "oracle",   "leafgen", "deletion"};
    return names;
}

const std::vector<std::string>& default_checks() {
    static const std::vector<std::string> names{"tau", "group", "symmetry", "gf", "trunk", "detMprime", "cokernel", "N"};
    return names;
}

std::vector<std::string> parse_checks(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string name; std::getline(in, name, ',');) {
        if (name.empty()) continue;
        if (std::ranges::find(known_checks(), name) == known_checks().end())
            throw InvalidArgument("unknown check '" + name + "'");
        if (std::ranges::find(out, name) == out.end()) out.push_back(name);
    }
    if (out.empty()) throw InvalidArgument("no checks selected");
    return out;
}

void validate(const SweepSpec& spec) {
    if (spec.p.empty() || spec.s1.empty() || spec.s2.empty()) throw InvalidArgument("empty parameter range");
    if (spec.p.lo < 1 || spec.s1.lo < 1 || spec.s2.lo < 1) throw InvalidArgument("p, s1, s2 must be >= 1");
    if (spec.checks.empty()) throw InvalidArgument("no checks selected");
    for (const auto& name : spec.checks)
        if (std::ranges::find(known_checks(), name) == known_checks().end())
            throw InvalidArgument("unknown check '" + name + "'");
}

std::vector<FamilyParams> sweep_points(const SweepSpec& spec) {
    validate(spec);
    std::vector<FamilyParams> out;
    for (int p = spec.p.lo; p <= spec.p.hi; ++p)
        for (int s1 = spec.s1.lo; s1 <= spec.s1.hi; ++s1)
            for (int s2 = spec.s2.lo; s2 <= spec.s2.hi; ++s2) out.push_back({p, s1, s2});
    return out;
}

bool PointResult::passed() const {
    return std::ranges::none_of(checks, [](const CheckOutcome& c) { return c.second == false; });
}

std::size_t SweepResult::checks_run() const {
    std::size_t n = 0;
    for (const auto& point : points)
        n += static_cast<std::size_t>(std::ranges::count_if(point.checks, [](const CheckOutcome& c) { return c.second.has_value(); }));
    return n;
}

std::size_t SweepResult::failures() const {
    std::size_t n = 0;
    for (const auto& point : points)
        n += static_cast<std::size_t>(std::ranges::count_if(point.checks, [](const CheckOutcome& c) { return c.second == false; }));
    return n;
}

std::optional<bool> run_check(const std::string& name, const FamilyParams& params) {
    const bool relations_apply = params.p >= 2;
    try {
        if (name == "tau") return tau_check(params);
        if (name == "group") return group_check(params);
        if (name == "symmetry") return symmetry_check(params);
        if (name == "gf") return gf_check(params);
        if (name == "oracle") return oracle_check(params);
        if (name == "leafgen") return leafgen_check(params);
        if (name == "deletion") return deletion_check(params);
        if (name == "trunk") {
            if (!relations_apply) return std::nullopt;
            return verify_trunk_relations(params) && verify_m_columns(params);
        }
        if (name == "detMprime") {
            if (!relations_apply) return std::nullopt;
            return verify_detM_prime(params);
        }
        if (name == "cokernel") {
            if (!relations_apply) return std::nullopt;
            return verify_cokernel_equivalence(params);
        }
        if (name == "N") return verify_N(params);
    } catch (const InvalidArgument&) {
        throw;
    } catch (const std::exception&) {
        // An internal inconsistency at a point is a failed check, not a crash of the sweep.
        return false;
    }
    throw InvalidArgument("unknown check '" + name + "'");
}

PointResult evaluate_point(const FamilyParams& params, const std::vector<std::string>& checks) {
    PointResult out{params, {}};
    for (const auto& name : checks) out.checks.emplace_back(name, run_check(name, params));
    return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
    const auto points = sweep_points(spec);
    SweepResult result;
    result.points.resize(points.size());
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        result.points[k] = evaluate_point(points[k], spec.checks);
    }
    return result;
}

SweepResult run_sweep_serial(const SweepSpec& spec) {
    SweepResult result;
    for (const auto& params : sweep_points(spec)) result.points.push_back(evaluate_point(params, spec.checks));
    return result;
}

std::string point_record(const PointResult& point, bool timestamp) {
    Json checks = Json::object();
    for (const auto& [name, outcome] : point.checks) checks[name] = outcome ? Json(*outcome) : Json(nullptr);
    Json record = {{"p", point.params.p}, {"s1", point.params.s1}, {"s2", point.params.s2}, {"checks", checks}};
    if (timestamp) record["timestamp"] = utc_timestamp();
    return record.dump();
}

void write_report(std::ostream& out, const SweepResult& result, bool timestamp) {
    for (const auto& point : result.points) out << point_record(point, timestamp) << '\n';
}

std::string summary_line(const SweepResult& result) {
    return std::to_string(result.points.size()) + " points, " + std::to_string(result.checks_run()) + " checks, " +
           std::to_string(result.failures()) + " failures";
}

void write_table(std::ostream& out, const SweepSpec& spec) {
    const auto points = sweep_points(spec);
    out << "p,s1,s2,t_closed,tau_determinant,tau_match,predicted_group,snf_group,group_match\n";
    for (const auto& params : points) {
        const auto g = cone_of(params);
        const auto closed = t_closed(params);
        const auto det = tau(g);
        const auto predicted = predict_group(params).group();
        const auto actual = sandpile_group(g);
        out << params.p << ',' << params.s1 << ',' << params.s2 << ',' << to_decimal(closed) << ',' << to_decimal(det)
            << ',' << (closed == det ? "true" : "false") << ',' << to_string(predicted) << ',' << to_string(actual)
            << ',' << (predicted == actual ? "true" : "false") << '\n';
    }
}

}  // namespace sandpilion
