#include <gtest/gtest.h>

#include <sstream>

#include "sandpilion/errors.hpp"
#include "sandpilion/sweep.hpp"

using namespace sandpilion;

namespace {

std::string report_of(const SweepResult& r) {
    std::ostringstream out;
    write_report(out, r, false);
    return out.str();
}

}  // namespace

TEST(Range, Parse) {
    const auto r = parse_range("2..5");
    EXPECT_EQ(r.lo, 2);
    EXPECT_EQ(r.hi, 5);
    const auto single = parse_range("3");
    EXPECT_EQ(single.lo, 3);
    EXPECT_EQ(single.hi, 3);
    EXPECT_THROW(parse_range("5..2"), InvalidArgument);
    EXPECT_THROW(parse_range("a..b"), InvalidArgument);
    EXPECT_THROW(parse_range(""), InvalidArgument);
    EXPECT_THROW(parse_range("1..3x"), InvalidArgument);
}

TEST(Checks, Parse) {
    EXPECT_EQ(parse_checks("tau,group,tau"), (std::vector<std::string>{"tau", "group"}));
    EXPECT_THROW(parse_checks("tau,bogus"), InvalidArgument);
    EXPECT_THROW(parse_checks(","), InvalidArgument);
}

TEST(Spec, Validation) {
    SweepSpec spec;
    EXPECT_EQ(sweep_points(spec).size(), 7u * 4 * 4);
    spec.p = {0, 2};
    EXPECT_THROW(validate(spec), InvalidArgument);
    spec.p = {1, 2};
    spec.checks = {"nope"};
    EXPECT_THROW(validate(spec), InvalidArgument);
}

TEST(Sweep, DefaultChecksPass) {
    SweepSpec spec;
    spec.p = {1, 5};
    spec.s1 = {1, 3};
    spec.s2 = {1, 3};
    const auto result = run_sweep(spec);
    EXPECT_TRUE(result.passed()) << report_of(result);
    EXPECT_EQ(result.points.size(), 45u);
}

TEST(Sweep, ParallelMatchesSerial) {
    SweepSpec spec;
    spec.p = {1, 4};
    spec.s1 = {1, 3};
    spec.s2 = {1, 2};
    spec.checks = parse_checks("tau,group,gf,trunk,N,oracle,leafgen,deletion");
    const auto parallel = run_sweep(spec);
    const auto serial = run_sweep_serial(spec);
    EXPECT_EQ(report_of(parallel), report_of(serial));
    EXPECT_EQ(summary_line(parallel), summary_line(serial));
    EXPECT_TRUE(parallel.passed());
}

TEST(Sweep, Deterministic) {
    SweepSpec spec;
    spec.p = {2, 4};
    spec.checks = parse_checks("tau,detMprime,cokernel");
    EXPECT_EQ(report_of(run_sweep(spec)), report_of(run_sweep(spec)));
}

TEST(Sweep, InapplicableChecksAreNull) {
    const auto point = evaluate_point({1, 1, 1}, {"tau", "trunk", "N"});
    EXPECT_EQ(point_record(point, false), R"({"p":1,"s1":1,"s2":1,"checks":{"tau":true,"trunk":null,"N":null}})");
    SweepResult r{{point}};
    EXPECT_EQ(r.checks_run(), 1u);
    EXPECT_EQ(summary_line(r), "1 points, 1 checks, 0 failures");
}

TEST(Sweep, TimestampField) {
    const auto point = evaluate_point({2, 1, 1}, {"tau"});
    EXPECT_NE(point_record(point, true).find("\"timestamp\":\""), std::string::npos);
    EXPECT_EQ(point_record(point, false).find("timestamp"), std::string::npos);
}

TEST(Sweep, FailuresAreCounted) {
    SweepResult r{{PointResult{{1, 1, 1}, {{"tau", true}, {"group", false}, {"N", std::nullopt}}}}};
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.failures(), 1u);
    EXPECT_EQ(summary_line(r), "1 points, 2 checks, 1 failures");
}

TEST(Table, Rows) {
    SweepSpec spec;
    spec.p = {2, 2};
    spec.s1 = {1, 2};
    spec.s2 = {2, 2};
    std::ostringstream out;
    write_table(out, spec);
    EXPECT_EQ(out.str(),
              "p,s1,s2,t_closed,tau_determinant,tau_match,predicted_group,snf_group,group_match\n"
              "2,1,2,52,52,true,Z_52,Z_52,true\n"
              "2,2,2,128,128,true,Z_4 + Z_32,Z_4 + Z_32,true\n");
}
