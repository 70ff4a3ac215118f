#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "table.hpp"

using namespace qbern2d;
using namespace qbern2d::cli;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QBERN2D_CLI + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, p)) out.append(buf, got);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "qbern2d_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(CliEval, ClassicalExample) {
  auto r = run("eval --n 1 --m 1 --x 0.3 --y 0.7 --classical");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1,1,1,1,0.21\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.rfind("k,j,n,m,value\n", 0), 0u);
}

TEST(CliEval, ExactExample) {
  auto r = run("eval --n 2 --m 2 --qx 1/2 --qy 1/2 --q 1/4 --mode exact");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1,1,2,2,64/81\n"), std::string::npos) << r.out;
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(run("eval --n 1 --m 1 --x 1.5 --y 0.5 --classical").status, 2);
  EXPECT_EQ(run("eval --n 1 --m 1 --x 1.5 --y 0.5 --q 0.5").status, 2);
  EXPECT_EQ(run("eval --n 1 --m 1 --qx 1/2 --qy 1/2 --q 0.25 --mode exact").status, 2);
  EXPECT_EQ(run("eval --n 1 --m 1 --qx 1/2 --qy 1/2").status, 2);
  EXPECT_EQ(run("eval --n 1 --m 1 --x 0.5 --y 0.5 --q 1.5").status, 2);
  EXPECT_EQ(run("eval --n 1 --m 1 --x 0.5 --y 0.5 --q 0.5 --format xml").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(CliEval, UnwritableOutputIsRuntimeError) {
  EXPECT_EQ(run("eval --n 1 --m 1 --x 0.3 --y 0.7 --classical --output /nonexistent-dir/out.csv").status, 1);
}

TEST(CliTable, StirlingTable) {
  auto r = run("table --kind stirling --max-n 6 --max-k 6");
  ASSERT_EQ(r.status, 0);
  std::istringstream is(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(is, line)) {
    ++lines;
    if (line.rfind("4,", 0) == 0) EXPECT_EQ(line, "4,0,1,7,6,1,0,0");
  }
  EXPECT_EQ(lines, 8);  // header + 7 rows
}

TEST(CliTable, OperatorUnitIsOne) {
  auto r = run("operator --n 3 --m 4 --classical --function one --nx 4 --ny 3 --format json");
  ASSERT_EQ(r.status, 0);
  const Table t = table_from_json(r.out);
  EXPECT_EQ(t.rows.size(), 12u);
  for (const auto& row : t.rows) EXPECT_EQ(std::get<Scalar>(row.back()), Scalar(Rational(1)));
}

TEST(CliTable, JsonRoundTrip) {
  auto r = run("table --kind basis --n 2 --m 1 --q 0.5 --nx 3 --ny 3 --format json");
  ASSERT_EQ(r.status, 0);
  const Table t = table_from_json(r.out);
  EXPECT_EQ(t.command, "table");
  std::ostringstream os;
  write_json(os, t);
  EXPECT_EQ(os.str(), r.out);
  EXPECT_EQ(table_from_json(os.str()), t);

  Table local;
  local.command = "eval";
  local.params = {{"q", "1/4"}};
  local.columns = {{"k", ColumnType::integer}, {"value", ColumnType::scalar}, {"note", ColumnType::text}};
  local.add_row({std::int64_t(3), Scalar(Rational(-7, 9)), std::string("a,b")});
  local.add_row({std::int64_t(0), Scalar(1e-300), std::string("")});
  local.add_row({std::int64_t(-2), Scalar(2.0), std::string("\"q\"")});
  std::ostringstream js;
  write_json(js, local);
  EXPECT_EQ(table_from_json(js.str()), local);
}

TEST(CliDeterminism, IdenticalArtifacts) {
  for (const std::string args : {"table --kind basis --n 3 --m 2 --q 0.7 --nx 4 --ny 5 --format json",
                                 "operator --n 4 --m 4 --q 1/3 --nx 2 --ny 2 --function uv",
                                 "series --kind factor --k 2 --order 8 --q 1/4 --qx 1/2"}) {
    const auto a = scratch("a.out"), b = scratch("b.out");
    ASSERT_EQ(run(args + " --output " + a.string()).status, 0) << args;
    ASSERT_EQ(run(args + " --output " + b.string()).status, 0) << args;
    EXPECT_EQ(slurp(a), slurp(b)) << args;
    EXPECT_FALSE(slurp(a).empty());
  }
}

TEST(CliVerify, SuitesAndExitCodes) {
  auto r = run("verify --suite symmetry --mode exact");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("symmetry,exact,pass,"), std::string::npos) << r.out;
  auto m = run("verify --suite mellin");
  EXPECT_EQ(m.status, 0);
  EXPECT_NE(m.out.find("mellin,float,pass,"), std::string::npos) << m.out;
  EXPECT_EQ(run("verify --suite nosuch").status, 2);
  // an impossible tolerance makes a float suite fail
  EXPECT_EQ(run("verify --suite contour --tol 1e-300").status, 1);
}

TEST(CliVerify, ThreadSettingPrecedence) {
  EXPECT_EQ(run("verify --suite partition", "QBERN2D_THREADS=0").status, 2);
  EXPECT_EQ(run("verify --suite partition", "QBERN2D_THREADS=abc").status, 2);
  EXPECT_EQ(run("verify --suite partition --threads 1", "QBERN2D_THREADS=0").status, 0);
  EXPECT_EQ(run("verify --suite partition", "QBERN2D_THREADS=2").status, 0);
}

TEST(CliOtherCommands, ExitContract) {
  auto s = run("series --kind stirling --k 2 --order 4");
  EXPECT_EQ(s.status, 0);
  EXPECT_NE(s.out.find("4,7\n"), std::string::npos) << s.out;
  EXPECT_EQ(run("series --kind nosuch --k 2").status, 2);

  auto c = run("contour --k 1 --j 1 --n 1 --m 1 --qx 0.5 --qy 0.5 --q 0.25 --nodes 64");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(run("contour --k 0 --j 0 --n 0 --m 0 --x 0.5 --y 0.5 --q 0.25 --nodes 8").status, 2);
  EXPECT_EQ(run("contour --k 0 --j 0 --n 9 --m 9 --x 0.5 --y 0.5 --q 0.25 --nodes 32").status, 1);

  auto i = run("interp --k 1 --j 0 --qx 0.5 --qy 0.5 --q 0.25 --s 2");
  EXPECT_EQ(i.status, 0);
  EXPECT_NE(i.out.find("-0.375"), std::string::npos) << i.out;
  EXPECT_EQ(run("interp --k 0 --j 0 --x 0 --y 0 --q 0.25 --s 2 --mellin").status, 0);
  EXPECT_EQ(run("interp --k 0 --j 0 --x 0 --y 0 --q 0.25 --s 0 --mellin").status, 2);
  EXPECT_EQ(run("interp --k 0 --j 0 --x 1 --y 1 --classical --s 1").status, 1);
}
