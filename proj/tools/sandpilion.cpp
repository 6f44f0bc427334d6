// Command-line driver: closed forms, oracles and verification sweeps.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sandpilion/errors.hpp"
#include "sandpilion/formulas.hpp"
#include "sandpilion/io.hpp"
#include "sandpilion/linalg.hpp"
#include "sandpilion/oracle.hpp"
#include "sandpilion/sandpile.hpp"
#include "sandpilion/sweep.hpp"

namespace {

using namespace sandpilion;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_budget = 3;

struct Options {
    FamilyParams params;
    int s = 1;
    std::string method;
    std::string family = "bicoconut";
    std::string format = "dot";
    std::string out;
    std::string in;
    std::string p_range = "1..7";
    std::string s1_range = "1..4";
    std::string s2_range = "1..4";
    std::string checks;
    std::string prefactor = "proof";
    std::size_t terms = 12;
    bool with_cone = false;
    bool no_timestamp = false;
    bool serial = false;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InvalidArgument("cannot open " + path + " for writing");
    file << text;
}

int cmd_tau(const Options& o) {
    BigInt value;
    if (o.method == "closed") value = t_closed(o.params);
    else if (o.method == "determinant") value = tau(cone(build_bicoconut(o.params)));
    else value = brute_force_tau(cone(build_bicoconut(o.params)));
    std::cout << to_decimal(value) << '\n';
    return exit_ok;
}

int cmd_group(const Options& o) {
    const Json out = o.method == "predictor" ? prediction_to_json(predict_group(o.params))
                                             : group_to_json(sandpile_group(cone(build_bicoconut(o.params))));
    std::cout << out.dump() << '\n';
    return exit_ok;
}

int cmd_comb(const Options& o) {
    const int p = o.params.p;
    const auto claims = comb_claims(p);
    const auto group = sandpile_group(cone(build_left_comb(p)));
    const Json out = {{"p", p},
                      {"mu", group.mu()},
                      {"leaves", build_left_comb(p).leaves().size()},
                      {"claim1_odd", claims.claim1_minor_is_odd()},
                      {"claim1_minor", to_decimal(claims.claim1_minor)},
                      {"claim2_minor", to_decimal(claims.claim2_minor)},
                      {"cyclic", group.cyclic()}};
    std::cout << out.dump() << '\n';
    return exit_ok;
}

SweepSpec sweep_spec(const Options& o) {
    SweepSpec spec;
    spec.p = parse_range(o.p_range);
    spec.s1 = parse_range(o.s1_range);
    spec.s2 = parse_range(o.s2_range);
    if (!o.checks.empty()) spec.checks = parse_checks(o.checks);
    validate(spec);
    return spec;
}

int cmd_verify(const Options& o) {
    const auto spec = sweep_spec(o);
    const auto result = o.serial ? run_sweep_serial(spec) : run_sweep(spec);
    std::ostringstream report;
    write_report(report, result, !o.no_timestamp);
    const bool to_stdout = o.out.empty() || o.out == "-";
    emit(report.str(), o.out);
    for (const auto& point : result.points)
        if (!point.passed()) std::cerr << "FAILED " << point_record(point, false) << '\n';
    (to_stdout ? std::cerr : std::cout) << summary_line(result) << '\n';
    return result.passed() ? exit_ok : exit_failed;
}

int cmd_gf(const Options& o) {
    const auto prefactor = o.prefactor == "statement" ? GfPrefactor::Statement : GfPrefactor::Proof;
    std::cout << decimal_array(gf_coefficients(o.params.s1, o.params.s2, o.terms, prefactor)).dump() << '\n';
    return exit_ok;
}

int cmd_export(const Options& o) {
    Multigraph g;
    if (o.family == "bicoconut") g = build_bicoconut(o.params);
    else if (o.family == "coconut") g = build_coconut(o.params.p, o.s);
    else g = build_left_comb(o.params.p);
    if (o.with_cone) g = cone(g);
    emit(o.format == "json" ? graph_to_json(g).dump(2) + "\n" : graph_to_dot(g), o.out);
    return exit_ok;
}

int cmd_table(const Options& o) {
    std::ostringstream table;
    write_table(table, sweep_spec(o));
    emit(table.str(), o.out);
    return exit_ok;
}

int cmd_snf(const Options& o) {
    Json j;
    try {
        if (o.in.empty() || o.in == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream file(o.in);
            if (!file) throw InvalidArgument("cannot open " + o.in);
            j = Json::parse(file);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad JSON: ") + e.what());
    }
    const auto snf = smith_normal_form(matrix_from_json(j));
    const Json out = {{"invariant_factors", decimal_array(snf.diag)}, {"rank", snf.rank}};
    std::cout << out.dump() << '\n';
    return exit_ok;
}

void add_family_params(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.params.p, "path length");
    cmd->add_option("--s1", o.params.s1, "leaves at pi_1");
    cmd->add_option("--s2", o.params.s2, "leaves at pi_p");
}

void add_ranges(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p_range, "range a..b")->capture_default_str();
    cmd->add_option("--s1", o.s1_range, "range a..b")->capture_default_str();
    cmd->add_option("--s2", o.s2_range, "range a..b")->capture_default_str();
    cmd->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning trees and sandpile groups of cones over coconut-type trees"};
    app.require_subcommand(1);
    Options o;

    auto* tau_cmd = app.add_subcommand("tau", "spanning-tree number of cone(T(p,s1,s2))");
    add_family_params(tau_cmd, o);
    tau_cmd->add_option("--method", o.method)->check(CLI::IsMember({"closed", "determinant", "brute"}))->default_val("closed");

    auto* group_cmd = app.add_subcommand("group", "sandpile group of cone(T(p,s1,s2))");
    add_family_params(group_cmd, o);
    group_cmd->add_option("--method", o.method)->check(CLI::IsMember({"predictor", "snf"}))->default_val("snf");

    auto* comb_cmd = app.add_subcommand("comb", "generator count versus leaf count for left combs");
    comb_cmd->add_option("--p", o.params.p)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run checks over a parameter box, JSON Lines report");
    add_ranges(verify_cmd, o);
    verify_cmd->add_option("--checks", o.checks, "comma-separated check names");
    verify_cmd->add_flag("--no-timestamp", o.no_timestamp);
    verify_cmd->add_flag("--serial", o.serial, "evaluate points on one thread");

    auto* gf_cmd = app.add_subcommand("gf", "generating-function coefficients t(1..terms, s1, s2)");
    gf_cmd->add_option("--s1", o.params.s1);
    gf_cmd->add_option("--s2", o.params.s2);
    gf_cmd->add_option("--terms", o.terms)->capture_default_str();
    gf_cmd->add_option("--prefactor", o.prefactor)->check(CLI::IsMember({"proof", "statement"}))->capture_default_str();

    auto* export_cmd = app.add_subcommand("export", "write a family tree or its cone as DOT or JSON");
    add_family_params(export_cmd, o);
    export_cmd->add_option("--s", o.s, "coconut leaf count");
    export_cmd->add_option("--family", o.family)->check(CLI::IsMember({"bicoconut", "coconut", "comb"}))->capture_default_str();
    export_cmd->add_flag("--cone", o.with_cone);
    export_cmd->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    export_cmd->add_option("--out", o.out);

    auto* table_cmd = app.add_subcommand("table", "CSV of closed form versus determinant and predicted versus SNF group");
    add_ranges(table_cmd, o);

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix JSON file");
    snf_cmd->add_option("--in", o.in, "matrix JSON (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_input;
    }

    try {
        if (*tau_cmd) return cmd_tau(o);
        if (*group_cmd) return cmd_group(o);
        if (*comb_cmd) return cmd_comb(o);
        if (*verify_cmd) return cmd_verify(o);
        if (*gf_cmd) return cmd_gf(o);
        if (*export_cmd) return cmd_export(o);
        if (*table_cmd) return cmd_table(o);
        if (*snf_cmd) return cmd_snf(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const DisconnectedGraph& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_bad_input;
}
