// Runs the vnumlab executable and checks exit codes and output contracts.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(VNUMLAB_CLI) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(VNUMLAB_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(VNUMLAB_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, AssTorsionFamily) {
  auto r = run("ass --input " + data("torsion.txt") + " --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("M/I^nN         {(X,Y,Z)}"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeCsvTorsionFamily) {
  auto r = run("analyze --input " + data("torsion.txt") + " --n-max 10 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n,module,prime,v,witness,indeg\n", 0), 0u);
  for (int n = 1; n <= 10; ++n) {
    const std::string v = n == 2 ? "1" : "2";
    const std::string layer = n == 1 ? "2" : std::to_string(n - 1);
    const std::string ns = std::to_string(n);
    EXPECT_NE(r.out.find("\n" + ns + ",quotient,\"(X,Y,Z)\"," + v + ","), std::string::npos);
    EXPECT_NE(r.out.find("\n" + ns + ",layer,*," + layer + ","), std::string::npos);
  }
}

TEST(Cli, VerifySubquotientFamilyPasses) {
  auto r = run("verify --input " + data("subquotient.txt") + " --n-max 10");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(" 0 fail"), std::string::npos);
}

TEST(Cli, JsonIsByteStable) {
  const std::string args = "analyze --input " + data("subquotient.txt") + " --n-max 8 --format json";
  auto a = run(args + " --threads 1"), b = run(args + " --threads 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.front(), '{');
}

TEST(Cli, InputErrorExitsTwo) {
  auto bad = temp_file("bad.txt", "ring X Y\nideal I = (1)\nmodule M += [0]\n");
  EXPECT_EQ(run("analyze --input " + bad).code, 2);
  EXPECT_EQ(run("analyze --input /nonexistent/file").code, 2);
  EXPECT_EQ(run("analyze --input " + data("torsion.txt") + " --format xml").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
  auto big = temp_file("big.txt", "ring X Y Z W\nideal I = (X*Y, Y*Z, Z*W, X*W, X^2)\nmodule M += [0]\n");
  auto r = run("analyze --input " + big + " --n-max 30 --window 4 --generator-limit 40 --format csv");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("\n1,quotient"), std::string::npos);  // partial output still printed
}

TEST(Cli, ExploreAndOutFile) {
  const std::string out = std::string(VNUMLAB_TMP) + "/explore.csv";
  auto r = run("explore-q45 --seed 5 --trials 20 --n-max 10 --window 4 --format csv --out " + out);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "trial,seed,prime,kind,a,b,onset,flagged");
}

TEST(Cli, PlotFormat) {
  auto r = run("analyze --input " + data("torsion.txt") + " --n-max 4 --window 3 --format plot");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# quotient *\n1 2\n2 1\n3 2\n4 2\n"), std::string::npos) << r.out;
}

TEST(Cli, NoColorWhenPiped) {
  auto r = run("analyze --input " + data("torsion.txt") + " --n-max 4 --window 3");
  EXPECT_EQ(r.out.find("\033["), std::string::npos);
}
