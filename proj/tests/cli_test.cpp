#include "harmonic/cli/commands.hpp"
#include "harmonic/cli/space_spec.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace harmonic::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

template <class Fn>
CliRun run(Fn&& fn) {
  std::ostringstream out, err;
  const int code = fn(out, err);
  return {code, out.str(), err.str()};
}

CliRun expand(const std::string& target, std::optional<int> order = {}, bool json = false) {
  Options o;
  o.order = order;
  o.json = json;
  return run([&](std::ostream& out, std::ostream& err) { return cmd_expand(target, o, out, err); });
}

Options quick() {
  Options o;
  o.samples = 20000;
  return o;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("harmonic_cli_test_" + name);
}

TEST(SpaceSpec, ParsesGrammar) {
  const SpaceSpec flat = SpaceSpec::parse("flat:n=6");
  EXPECT_EQ(flat.kind, SpaceSpec::Kind::flat);
  EXPECT_EQ(flat.dimension(), 6);

  const SpaceSpec form = SpaceSpec::parse("form:n=5,k=-1/4");
  EXPECT_EQ(form.kappa, Rational(-1, 4));

  const SpaceSpec dr = SpaceSpec::parse("dr:q=3,p=1,m=1");
  EXPECT_EQ(dr.module.a_plus, 1);
  EXPECT_EQ(dr.module.a_minus, 1);
  EXPECT_EQ(dr.dimension(), 12);

  EXPECT_EQ(SpaceSpec::parse("dr:q=1,p=2").dimension(), 6);
  EXPECT_EQ(SpaceSpec::parse("dr:q=0,n=6").module.a_plus, 5);
  EXPECT_EQ(SpaceSpec::parse("dr:q=7,p=1").dimension(), 16);
}

TEST(SpaceSpec, RoundTrips) {
  for (const char* text : {"flat:n=4", "form:n=6,k=-1", "form:n=3,k=2/3", "dr:q=3,p=2,m=0", "dr:q=3,p=1,m=1",
                           "dr:q=1,p=2", "dr:q=2,p=1", "dr:q=0,n=6", "dr:q=7,p=1"}) {
    const SpaceSpec s = SpaceSpec::parse(text);
    EXPECT_EQ(s.to_string(), text);
    EXPECT_EQ(SpaceSpec::parse(s.to_string()), s);
  }
  EXPECT_EQ(SpaceSpec::parse("form:k=-2/4,n=3").to_string(), "form:n=3,k=-1/2");
  EXPECT_EQ(SpaceSpec::parse("dr:q=3,p=2").to_string(), "dr:q=3,p=2,m=0");
}

TEST(SpaceSpec, RejectsMalformed) {
  for (const char* text : {"flat", "flat:n=1", "flat:n=x", "flat:n=4,k=1", "form:n=4", "form:n=4,k=1/0",
                           "dr:q=5,p=1", "dr:q=1,p=1,m=1", "dr:q=3,p=0,m=0", "dr:p=1", "sphere:n=3",
                           "flat:n=4,n=5", "flat:n"}) {
    EXPECT_THROW(SpaceSpec::parse(text), std::invalid_argument) << text;
  }
}

TEST(SpaceSpec, BuildsTensors) {
  EXPECT_EQ(SpaceSpec::parse("form:n=6,k=-1").build().R(0, 1, 0, 1), -1.0);
  EXPECT_TRUE(SpaceSpec::parse("dr:q=3,p=1,m=1").build().has_derivative());
}

TEST(Expand, ShapeOperator) {
  const CliRun r = expand("sigma");
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("r^-1: I"), std::string::npos);
  EXPECT_NE(r.out.find("r^1: -1/3*R0"), std::string::npos);
  EXPECT_NE(r.out.find("+ O(r^6)"), std::string::npos);
}

TEST(Expand, Trace) {
  const CliRun r = expand("trace", 5);
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("r^-1: -1 + n"), std::string::npos);
  EXPECT_NE(r.out.find("r^3: -1/45*H"), std::string::npos);
  EXPECT_NE(r.out.find("r^5: -1/15120*L"), std::string::npos);
}

TEST(Expand, BallIntegrands) {
  const CliRun r = expand("ball", 3);
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("-1/1440*L + 1/96*T2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1/30240*L - 1/96*T2"), std::string::npos) << r.out;
}

TEST(Expand, JsonIsStructured) {
  const CliRun r = expand("rS", 2, true);
  ASSERT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["target"], "rS");
  const auto& coeffs = j["series"]["|R^S|^2"]["coefficients"];
  ASSERT_FALSE(coeffs.empty());
  EXPECT_EQ(coeffs.back()["power"], 2);
  EXPECT_NE(coeffs.back()["value"].get<std::string>().find("4/9*Q0"), std::string::npos);
}

TEST(Expand, UsageErrors) {
  EXPECT_EQ(expand("bogus").code, kExitUsage);
  EXPECT_EQ(expand("sigma", 99).code, kExitUsage);
  EXPECT_EQ(expand("ricS", -1).code, kExitUsage);
  EXPECT_EQ(expand("sigma4").code, kExitPass);
  EXPECT_EQ(expand("sigma2").code, kExitPass);
}

TEST(Verify, SpaceFormPasses) {
  const CliRun r = run([](auto& out, auto& err) { return cmd_verify("form:n=6,k=-1", quick(), out, err); });
  EXPECT_EQ(r.code, kExitPass) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Verify, NonsymmetricDamekRicciPasses) {
  const CliRun r = run([](auto& out, auto& err) { return cmd_verify("dr:q=3,p=1,m=1", quick(), out, err); });
  EXPECT_EQ(r.code, kExitPass) << r.out;
}

TEST(Verify, CorruptedTensorFileFails) {
  const auto path = temp_file("corrupt.txt");
  {
    std::ofstream f(path);
    f << "n 3\nR\n0 1 0 1 1\n0 1 1 0 -1\n1 0 0 1 -1\n1 0 1 0 2\n";
  }
  const CliRun r = run([&](auto& out, auto& err) { return cmd_verify(path.string(), quick(), out, err); });
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("FAIL symmetry"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(Verify, UnparsableInputIsUsageError) {
  EXPECT_EQ(run([](auto& out, auto& err) { return cmd_verify("form:n=6", quick(), out, err); }).code, kExitUsage);
  EXPECT_EQ(run([](auto& out, auto& err) { return cmd_verify("/no/such/file", quick(), out, err); }).code,
            kExitUsage);
}

TEST(Verify, BrokenFileSyntaxFails) {
  const auto path = temp_file("syntax.txt");
  {
    std::ofstream f(path);
    f << "n 3\nR\n0 1 0\n";
  }
  const CliRun r = run([&](auto& out, auto& err) { return cmd_verify(path.string(), quick(), out, err); });
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Space, WritesTensorThatVerifies) {
  const auto path = temp_file("dr.txt");
  const CliRun r = run([&](auto& out, auto& err) { return cmd_space("dr:q=1,p=2", Options{}, path.string(), out, err); });
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("einstein = true"), std::string::npos);
  const CliRun v = run([&](auto& out, auto& err) { return cmd_verify(path.string(), quick(), out, err); });
  EXPECT_EQ(v.code, kExitPass) << v.out;
  std::filesystem::remove(path);
}

TEST(Compare, Verdicts) {
  auto verdict = [](const std::string& a, const std::string& b) {
    const CliRun r = run([&](auto& out, auto& err) { return cmd_compare(a, b, Options{}, out, err); });
    EXPECT_EQ(r.code, kExitPass) << r.err;
    const auto pos = r.out.find("verdict = ");
    return pos == std::string::npos ? std::string() : r.out.substr(pos + 10, r.out.find('\n', pos) - pos - 10);
  };
  EXPECT_EQ(verdict("flat:n=6", "flat:n=6"), "indistinguishable-at-this-order");
  EXPECT_EQ(verdict("flat:n=6", "flat:n=7"), "dimension-mismatch");
  EXPECT_EQ(verdict("flat:n=6", "form:n=6,k=-1"), "CHL-mismatch");
  EXPECT_EQ(verdict("dr:q=3,p=2,m=0", "dr:q=3,p=1,m=1"), "nablaR-mismatch");
}

TEST(Compare, OrderBeyondDeterminedRangeIsUsageError) {
  Options o;
  o.order = 4;
  const CliRun r = run([&](auto& out, auto& err) { return cmd_compare("flat:n=4", "flat:n=4", o, out, err); });
  EXPECT_EQ(r.code, kExitUsage);
  o.order = 3;
  const CliRun ok = run([&](auto& out, auto& err) { return cmd_compare("form:n=4,k=1", "flat:n=4", o, out, err); });
  EXPECT_EQ(ok.code, kExitPass) << ok.err;
}

TEST(Compare, JsonIsBitIdenticalAcrossRuns) {
  Options o;
  o.json = true;
  auto once = [&] {
    return run([&](auto& out, auto& err) { return cmd_compare("dr:q=3,p=2,m=0", "dr:q=3,p=1,m=1", o, out, err); });
  };
  const CliRun a = once(), b = once();
  ASSERT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["comparison"]["verdict"], "nablaR-mismatch");
  EXPECT_LT(j["comparison"]["delta_sphere_r2"].get<double>(), 0.0);
}

} // namespace
} // namespace harmonic::cli
