#include <gtest/gtest.h>

#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "kmink/cli.hpp"

using kmink::run_command;

namespace {

struct Result
{
	int code;
	std::string out;
	std::string err;
};

Result run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	const int code = run_command(args, out, err);
	return {code, out.str(), err.str()};
}

int run_binary(const std::string &args)
{
	const std::string cmd = std::string(KMINK_BINARY) + " " + args + " >/dev/null 2>&1";
	const int status = std::system(cmd.c_str());
	return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Cli, Order)
{
	const Result r = run({"order", "x1*x0"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, ":x0*x1: - i/k :x1:\n");
	EXPECT_EQ(run({"order", "x1*x0*x0"}).out, ":x0^2*x1: - 2i/k :x0*x1: - 1/k^2 :x1:\n");
}

TEST(Cli, Apply)
{
	EXPECT_EQ(run({"apply", "box", "x0^2"}).out, "1/4\n");
	EXPECT_EQ(run({"apply", "P1", "x1^2"}).out, "2i :x1:\n");
	EXPECT_EQ(run({"apply", "N1", "x0"}).out, "-i :x1:\n");
	EXPECT_EQ(run({"apply", "N1", "x0", "--literal-boost"}).out, "i :x1:\n");
	EXPECT_EQ(run({"apply", "M3", "x1"}).out, "i :x2:\n");
}

TEST(Cli, D)
{
	EXPECT_EQ(run({"d", "x1^2"}).out, "i/k :: t0 | 2 :x1: :: t1 | 0 :: t2 | 0 :: t3 | -1/4 :: tau\n");
}

TEST(Cli, Check)
{
	const Result r = run({"check", "calculus", "--max-degree", "4"});
	EXPECT_EQ(r.code, 0);
	EXPECT_NE(r.out.find("calculus: "), std::string::npos);
	EXPECT_EQ(run({"check", "relations", "--max-degree", "2"}).code, 0);
	EXPECT_EQ(run({"check", "relations", "--max-degree", "2", "--literal-boost"}).code, 1);
	EXPECT_EQ(run({"check", "box", "--max-degree", "3"}).code, 0);
}

TEST(Cli, Json)
{
	const Result r = run({"--json", "order", "x1*x0"});
	ASSERT_EQ(r.code, 0);
	const auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j["schema"], 1);
	EXPECT_EQ(j["command"], "order");
	EXPECT_EQ(j["result"], ":x0*x1: - i/k :x1:");

	const auto c = nlohmann::json::parse(run({"check", "invariance", "--max-degree", "2", "--json"}).out);
	EXPECT_EQ(c["schema"], 1);
	EXPECT_EQ(c["passed"], true);
	EXPECT_EQ(c["failures"], 0);
	ASSERT_FALSE(c["entries"].empty());
	EXPECT_TRUE(c["entries"][0].contains("relation"));
	EXPECT_TRUE(c["entries"][0].contains("monomial"));
	EXPECT_TRUE(c["entries"][0].contains("residual"));

	const auto d = nlohmann::json::parse(run({"--json", "d", "x0^2"}).out);
	EXPECT_EQ(d["coefficients"]["tau"], "1/4");
	EXPECT_EQ(d["coefficients"]["t0"], "2 :x0:");
}

TEST(Cli, Dispersion)
{
	const Result r = run({"--json", "dispersion", "--kappa", "1", "--mass", "1", "--kvec", "0,0,0", "--solve"});
	ASSERT_EQ(r.code, 0) << r.err;
	const auto j = nlohmann::json::parse(r.out);
	EXPECT_NEAR(j["k0"].get<double>(), 2 * std::asinh(0.5), 1e-12);
	EXPECT_NEAR(j["residual"].get<double>(), 0.0, 1e-12);
	EXPECT_EQ(run({"dispersion", "--kappa", "1", "--mass", "1", "--kvec", "1,2"}).code, 2);
	EXPECT_EQ(run({"dispersion", "--kappa", "0", "--mass", "1", "--kvec", "1,2,3", "--solve"}).code, 2);
}

TEST(Cli, UsageErrors)
{
	EXPECT_EQ(run({}).code, 2);
	EXPECT_EQ(run({"frobnicate"}).code, 2);
	EXPECT_EQ(run({"order"}).code, 2);
	EXPECT_EQ(run({"order", "x1 * * x0"}).code, 2);
	EXPECT_NE(run({"order", "x1 * * x0"}).err.find("column 6"), std::string::npos);
	EXPECT_EQ(run({"apply", "Q7", "x0"}).code, 2);
	EXPECT_EQ(run({"check", "relations", "--max-degree", "1"}).code, 2);
	EXPECT_EQ(run({"check", "nothing"}).code, 2);
	EXPECT_EQ(run({"order", "x0", "--bogus"}).code, 2);
	EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ExitCodesFromBinary)
{
	EXPECT_EQ(run_binary("order 'x1*x0'"), 0);
	EXPECT_EQ(run_binary("check calculus --max-degree 3"), 0);
	EXPECT_EQ(run_binary("check relations --max-degree 2 --literal-boost"), 1);
	EXPECT_EQ(run_binary("order 'x1 +'"), 2);
	EXPECT_EQ(run_binary("launch"), 2);
	EXPECT_EQ(run_binary("dispersion --kappa 1 --mass 1"), 2);
}
