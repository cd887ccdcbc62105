#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace {

const std::string kDir = RCHECK_FIXTURES_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RCHECK_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST_CASE("verify-catalog") {
  const Run ok = run("verify-catalog --format record");
  CHECK(ok.code == 0);
  CHECK(has(ok, "catalog\tbigneedy\treducible\t"));
  CHECK(has(ok, "alon-tarsi\tbigneedy\tat\tEE=6 EO=7\t"));
  CHECK(ok.out == run("verify-catalog --format record").out);

  const Run bad = run("verify-catalog " + kDir + "/small.fix");
  CHECK(bad.code == 1);
  CHECK(has(bad, "v0={0,1} v1={0,1} v2={0,1}"));

  CHECK(run("verify-catalog /no/such/catalog.fix").code == 2);
  CHECK(run("--budget 3 verify-catalog").code == 3);
  CHECK(run("verify-catalog --bogus").code == 2);
}

TEST_CASE("verify-merges") {
  const Run d1 = run("--format record verify-merges d1");
  CHECK(d1.code == 0);
  CHECK(has(d1, "merges\td1 3-6\tcandidate\t"));
  CHECK(has(d1, "merges\td1 triples\tnone\t1\t"));
  CHECK(run("verify-merges d1 --forbidden-len 3").code == 2);
  CHECK(run("verify-merges nosuchentry").code == 2);
}

TEST_CASE("audit-discharging") {
  const Run cc6 = run("audit-discharging --variant cc6 --format record");
  CHECK(cc6.code == 0);
  CHECK(has(cc6, "cc6\tcc6-K3\tpass\t0\t"));
  const Run cc7 = run("audit-discharging --variant cc7 --format record");
  CHECK(cc7.code == 0);
  CHECK(has(cc7, "cc7\tlp printed certificate\tdiscrepancy\t23/40,1/20,1/4\t"));
  CHECK(has(cc7, "cc7\tlp certificate\tpass\t23/40,3/40,1/8\tobjective 161/40"));
  CHECK(cc7.out == run("audit-discharging --variant cc7 --format record").out);
  CHECK(run("audit-discharging --variant c6").code == 2);
  CHECK(run("--fixtures /no/such/dir audit-discharging").code == 2);
}

TEST_CASE("find-at") {
  const std::string g = "find-at --graph " + kDir + "/small.fix";
  const Run sq = run(g + " --name square --f 2 --format record");
  CHECK(sq.code == 0);
  CHECK(sq.out == "alon-tarsi\tsquare\tfound\tEE=2 EO=0\t0>1 1>2 2>3 3>0\n");
  const Run tri = run(g + " --name triangle --f 2 --format record");
  CHECK(tri.code == 1);
  CHECK(has(tri, "\tnone\t"));
  CHECK(run(g + " --name k55 --f 3").code == 3);
  CHECK(run(g + " --name square --f 0").code == 2);
  CHECK(run("find-at --name square").code == 2);
}
