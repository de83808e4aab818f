#include <gtest/gtest.h>

#include <sstream>

#include "permexpr/cli.hpp"

using namespace permexpr;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    int status = run_cli(args, out, err, in);
    return CliRun{status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Nf) {
    CliRun r = run({"nf", "--n", "3", "2.1.2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1.2.1\n");
}

TEST(Cli, Equiv) {
    EXPECT_EQ(run({"equiv", "--n", "3", "1.2.1", "2.1.2"}).out, "true\n");
    EXPECT_EQ(run({"equiv", "--n", "3", "1", "2"}).out, "false\n");
}

TEST(Cli, Lower) {
    CliRun r = run({"lower", "--n", "4", "1.2.1.3.2.1", "3.2.3.1.2.3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "6 (I3=4 I22=2)\n");
}

TEST(Cli, Dist) {
    CliRun r = run({"dist", "--n", "4", "1.2.1.3.2.1", "3.2.3.1.2.3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "lower=6 bfs=6 upper≤36 emitted=6\n");
}

TEST(Cli, Compl) {
    CliRun r = run({"compl", "--n", "4", "1.2.1.3.2.1", "3.2.3.1.2.3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "8 (I=4 II=4 III=10)\n");
}

TEST(Cli, ReverseText) {
    CliRun r = run({"reverse", "--n", "3", "-1.2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("terminal: 2.1.-2.-1"), std::string::npos);
    EXPECT_NE(r.out.find("v' = 2.1"), std::string::npos);
    EXPECT_NE(r.out.find("u' = 1.2"), std::string::npos);
}

TEST(Cli, DeriveThenCertify) {
    CliRun derived = run({"derive", "--n", "4", "1.2.1.3.2.1", "3.2.3.1.2.3"});
    ASSERT_EQ(derived.status, 0);
    CliRun certified = run({"certify", "-"}, derived.out);
    EXPECT_EQ(certified.status, 0);
    EXPECT_NE(certified.out.find("CertifiedOptimal"), std::string::npos);
}

TEST(Cli, ReverseDiagramExportPipeline) {
    CliRun diagram = run({"reverse", "--n", "4", "--format", "json", "1.2.1.3.2.1", "3.2.3.1.2.3"});
    ASSERT_EQ(diagram.status, 0);
    CliRun svg = run({"export", "--format", "svg"}, diagram.out);
    EXPECT_EQ(svg.status, 0);
    EXPECT_NE(svg.out.find("<svg"), std::string::npos);
    CliRun dot = run({"export", "--format", "dot"}, diagram.out);
    EXPECT_EQ(dot.status, 0);
    EXPECT_NE(dot.out.find("digraph"), std::string::npos);
}

TEST(Cli, CompactVerdict) {
    CliRun r = run({"compact", "--n", "6", "4.2", "1.3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("digons remaining: 0"), std::string::npos);
    EXPECT_NE(r.out.find("CertifiedOptimal"), std::string::npos);
}

TEST(Cli, Family) {
    CliRun flip = run({"family", "flip", "--n", "4"});
    EXPECT_EQ(flip.out, "n=4\nu=1.2.1.3.2.1\nv=3.2.1.3.2.3\n");
    CliRun quartic = run({"family", "quartic", "--l", "2"});
    EXPECT_EQ(quartic.out, "n=6\nu=4.2\nv=1.3\n");
}

TEST(Cli, ExperimentQuarticCsv) {
    CliRun r = run({"experiment", "quartic", "--lmax", "2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("l,engine_count,formula_value,typeI,typeII,typeIII,digon_free"), std::string::npos);
    EXPECT_NE(r.out.find("1,1,1,1,0,0,yes"), std::string::npos);
}

TEST(Cli, ExperimentLemmaPasses) {
    CliRun r = run({"experiment", "lemma", "--pmax", "3"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("ba,2,5,5,4,2,2,1,yes"), std::string::npos);
}

TEST(Cli, ExperimentEq8) {
    CliRun r = run({"experiment", "eq8", "--n", "4"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("counterexamples=0"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"nf", "2.1.2"}).status, 2);          // missing --n
    EXPECT_EQ(run({"nf", "--n", "3", "1.7"}).status, 2);  // letter out of range
    EXPECT_EQ(run({"unknown"}).status, 2);
    EXPECT_EQ(run({}).status, 2);
}

TEST(Cli, DomainErrors) {
    EXPECT_EQ(run({"dist", "--n", "3", "1", "2"}).status, 1);       // not equivalent
    EXPECT_EQ(run({"derive", "--n", "3", "1.1", "1.1"}).status, 1);  // not reduced
}

TEST(Cli, DeterministicOutput) {
    std::vector<std::string> args{"experiment", "stabilization", "--lmax", "2", "--samples", "50", "--seed", "9"};
    CliRun a = run(args);
    CliRun b = run(args);
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);

    CliRun c = run({"reverse", "--n", "4", "--format", "svg", "1.2.1.3.2.1", "3.2.3.1.2.3"});
    CliRun d = run({"reverse", "--n", "4", "--format", "svg", "1.2.1.3.2.1", "3.2.3.1.2.3"});
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, Help) {
    EXPECT_EQ(run({"--help"}).status, 0);
}
