#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "latmax/cdim2.hpp"
#include "latmax/report.hpp"

using namespace latmax;

namespace {

struct Outcome {
	int code;
	std::string out;
	std::string err;
};

Outcome run(std::vector<std::string> args) {
	std::ostringstream out, err;
	int code = cli::run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
	auto dir = std::filesystem::temp_directory_path() / "latmax_cli_test";
	std::filesystem::create_directories(dir);
	return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, GoldenText) {
	Outcome r = run({"cg-complements", "--perm", "3 6 7 10 1 8 9 5 2 4"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out,
			"{(2)}\n{(4)}\n[(5),C1(5)]\n[(5),C2(5)]\n[(6),C1(6)]\n[(8),C1(8)] u [(8),C2(8)]\n[(9),C1(9)]\n"
			"[(9),C2(9)]\n{(10)}\n");
}

TEST(Cli, JsonRoundTrips) {
	Outcome r = run({"cg-complements", "--perm", "3 6 7 10 1 8 9 5 2 4", "--json"});
	ASSERT_EQ(r.code, 0);
	auto list = complements_from_json(r.out);
	EXPECT_EQ(list.size(), 9u);
	EXPECT_EQ(to_json(list) + "\n", r.out);
}

TEST(Cli, Verify) {
	EXPECT_EQ(run({"cg-complements", "--perm", "5 2 7 1 6 3 4", "--verify"}).code, 0);
	EXPECT_EQ(run({"cg-complements", "--perm", "2 1"}).out, "{(1)}\n{(2)}\n");
}

TEST(Cli, ChainFileInput) {
	auto p = scratch("chains.txt");
	write(p, "4 2\n4 3 2 1\n3 1 4 2\n");
	Outcome r = run({"cg-complements", "--file", p.string(), "--verify"});
	EXPECT_EQ(r.code, 0) << r.err;
	EXPECT_FALSE(r.out.empty());
	write(p, "3 3\n1 2 3\n3 2 1\n2 1 3\n");
	EXPECT_EQ(run({"cg-complements", "--file", p.string()}).code, cli::kExitParse);
}

TEST(Cli, ParseErrors) {
	EXPECT_EQ(run({"cg-complements", "--perm", "1 1"}).code, cli::kExitParse);
	EXPECT_EQ(run({"cg-complements", "--perm", "1 x"}).code, cli::kExitParse);
	EXPECT_EQ(run({"cg-complements"}).code, cli::kExitParse);
	EXPECT_EQ(run({"nonsense"}).code, cli::kExitParse);
	EXPECT_EQ(run({"oracle", "--file", "/nonexistent/file"}).code, cli::kExitParse);
	EXPECT_EQ(run({"check", "hyp9"}).code, cli::kExitParse);
	EXPECT_EQ(run({"bench", "--sizes", "0"}).code, cli::kExitParse);
	EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OracleOnCoverList) {
	auto p = scratch("n5.txt");
	write(p, "5\n0 1\n1 2\n0 3\n2 4\n3 4\n");
	Outcome r = run({"oracle", "--file", p.string()});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "3 maximal sublattices\ncomplement {1}\ncomplement {2}\ncomplement {3}\nfrattini {0,4}\n");
	Outcome j = run({"oracle", "--file", p.string(), "--json"});
	EXPECT_EQ(j.out, "{\"complements\":[[1],[2],[3]],\"frattini\":[0,4]}\n");
	EXPECT_EQ(run({"oracle", "--file", p.string(), "--oracle-bound", "3"}).code, cli::kExitError);
}

TEST(Cli, OracleBoundFromEnvironment) {
	::setenv("LATMAX_ORACLE_BOUND", "2", 1);
	EXPECT_EQ(run({"oracle", "--perm", "2 1"}).code, cli::kExitError);
	// The flag wins over the environment.
	EXPECT_EQ(run({"oracle", "--perm", "2 1", "--oracle-bound", "10"}).code, 0);
	::setenv("LATMAX_ORACLE_BOUND", "lots", 1);
	EXPECT_EQ(run({"oracle", "--perm", "2 1"}).code, cli::kExitParse);
	::unsetenv("LATMAX_ORACLE_BOUND");
}

TEST(Cli, CheckHoldsAndCounterexample) {
	Outcome ok = run({"check", "hyp3", "--corpus", "cdim2", "--max-m", "4", "--json"});
	EXPECT_EQ(ok.code, 0);
	EXPECT_EQ(report_from_json(ok.out.substr(0, ok.out.find('\n'))).status, CheckStatus::Holds);

	auto w = scratch("w.json");
	std::filesystem::remove(w);
	Outcome bad = run({"check", "lemma63_3", "--corpus", "cdim2", "--max-m", "3", "--out", w.string()});
	EXPECT_EQ(bad.code, cli::kExitCounterexample);
	EXPECT_NE(bad.err.find(w.string()), std::string::npos);
	std::ifstream in(w);
	std::string line;
	std::getline(in, line);
	EXPECT_EQ(report_from_json(line).status, CheckStatus::CounterexampleFound);
}

TEST(Cli, Bench) {
	Outcome r = run({"bench", "--sizes", "10,100,1000", "--seed", "3"});
	EXPECT_EQ(r.code, 0);
	std::istringstream in(r.out);
	std::string line;
	std::getline(in, line);
	std::uint64_t prev = 0;
	int rows = 0;
	while(std::getline(in, line)) {
		std::istringstream f(line);
		double m, ms, cmp, sets, ratio;
		f >> m >> ms >> cmp >> sets >> ratio;
		EXPECT_GT(static_cast<std::uint64_t>(cmp), prev);
		EXPECT_LE(ratio, 12.0);
		prev = static_cast<std::uint64_t>(cmp);
		++rows;
	}
	EXPECT_EQ(rows, 3);
	// Same seed, same counts.
	Outcome a = run({"bench", "--sizes", "10", "--json"});
	Outcome b = run({"bench", "--sizes", "10", "--json"});
	EXPECT_EQ(a.out.substr(a.out.find("comparisons")), b.out.substr(b.out.find("comparisons")));
}

TEST(Cli, Dot) {
	Outcome r = run({"dot", "--perm", "3 6 7 10 1 8 9 5 2 4"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out.rfind("digraph lattice {", 0), 0u);
	EXPECT_NE(r.out.find("palegreen"), std::string::npos);  // the union complement
	EXPECT_NE(r.out.find("lightblue"), std::string::npos);
	EXPECT_NE(r.out.find("penwidth"), std::string::npos);
	EXPECT_NE(r.out.find("rank=same"), std::string::npos);
	auto p = scratch("g.dot");
	EXPECT_EQ(run({"dot", "--perm", "2 1", "--out", p.string()}).code, 0);
	EXPECT_TRUE(std::filesystem::file_size(p) > 0);
}
