#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sepdisc/io.hpp"

namespace {

std::string g_cli;
std::filesystem::path g_data;
std::filesystem::path g_scratch;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::filesystem::path out_file = g_scratch / "stdout.txt";
  const std::string cmd =
      g_cli + " " + args + " > " + out_file.string() + " 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kCanonical55 = "'{\"canonical\":{\"alpha1\":0.5,\"alpha2\":0.5}}'";

}  // namespace

TEST_CASE("decide exit codes and verdict fields") {
  const RunResult ok = run(std::string("decide --state1 ") + kCanonical55);
  CHECK(ok.exit_code == 0);
  const sepdisc::Json j = sepdisc::Json::parse(ok.out);
  CHECK(j.at("sep_distinguishable").get<bool>());
  CHECK_FALSE(j.at("qt_distinguishable").get<bool>());

  const RunResult neg =
      run("decide --state1 '{\"canonical\":{\"alpha1\":0.4,\"alpha2\":0.4}}'");
  CHECK(neg.exit_code == 3);

  CHECK(run("decide --state1 '{\"canonical\":{\"alpha1\":0.5}}'").exit_code == 2);
  CHECK(run("decide --state1 /nonexistent/file.json").exit_code == 2);
  CHECK(run("decide --state1 '{not json'").exit_code == 2);
}

TEST_CASE("explicit two-state input") {
  const std::string s1 =
      "'{\"a\":{\"re\":[1,0],\"im\":[0,0]},\"b\":{\"re\":[1,0],\"im\":[0,0]}}'";
  const std::string s2 =
      "'{\"a\":{\"re\":[0,1],\"im\":[0,0]},\"b\":{\"re\":[1,0],\"im\":[0,0]}}'";
  CHECK(run("decide --state1 " + s1 + " --state2 " + s2).exit_code == 0);
  CHECK(run("decide --state1 " + s1).exit_code == 2);
}

TEST_CASE("construct then verify pipeline") {
  const std::filesystem::path mfile = g_scratch / "measurement.json";
  const RunResult built = run(std::string("construct --state1 ") + kCanonical55 +
                              " --out " + mfile.string());
  REQUIRE(built.exit_code == 0);
  const sepdisc::Json summary = sepdisc::Json::parse(built.out);
  CHECK(summary.at("perfect").get<bool>());

  const RunResult verified = run(std::string("verify --state1 ") + kCanonical55 +
                                 " --measurement " + mfile.string());
  CHECK(verified.exit_code == 0);
  const sepdisc::Json rep = sepdisc::Json::parse(verified.out);
  CHECK(rep.at("perfect").get<bool>());
  CHECK(rep.at("completeness_residual").get<double>() <= 1e-12);
  REQUIRE(rep.contains("eqh2_residual"));
  CHECK(rep.at("eqh2_residual").get<double>() <= 1e-9);

  SUBCASE("tampered measurement fails verification") {
    sepdisc::Json doc = sepdisc::Json::parse(slurp(mfile));
    double& d = doc["effects"][0]["matrix"]["re"][0][0].get_ref<double&>();
    d = -d;
    const std::filesystem::path bad = g_scratch / "tampered.json";
    std::ofstream(bad) << doc.dump(2) << "\n";
    CHECK(run(std::string("verify --state1 ") + kCanonical55 + " --measurement " +
              bad.string())
              .exit_code == 4);
  }

  SUBCASE("construct refuses an indistinguishable pair") {
    CHECK(run("construct --state1 '{\"canonical\":{\"alpha1\":0.4,\"alpha2\":0.4}}'"
              " --out " +
              (g_scratch / "never.json").string())
              .exit_code == 3);
  }
}

TEST_CASE("multicopy") {
  // Canonical (0.6, 0.6) pair: per-side overlap 0.4, f = 0.16, one copy per half.
  const std::string pair16 = "'{\"canonical\":{\"alpha1\":0.6,\"alpha2\":0.6}}'";
  const RunResult plain = run("multicopy --state1 " + pair16);
  CHECK(plain.exit_code == 0);
  const sepdisc::Json j = sepdisc::Json::parse(plain.out);
  CHECK(j.at("n").get<int>() == 1);
  CHECK(j.at("f").get<double>() == doctest::Approx(0.16).epsilon(1e-12));

  const RunResult mat = run("multicopy --materialize --state1 " + pair16);
  CHECK(mat.exit_code == 0);
  const sepdisc::Json jm = sepdisc::Json::parse(mat.out);
  CHECK(jm.at("materialized").at("perfect").get<bool>());

  // Identical states never separate.
  CHECK(run("multicopy --state1 '{\"canonical\":{\"alpha1\":0,\"alpha2\":0}}'")
            .exit_code == 3);
}

TEST_CASE("capacity") {
  const RunResult r = run("capacity 3 2");
  CHECK(r.exit_code == 0);
  const sepdisc::Json j = sepdisc::Json::parse(r.out);
  CHECK(j.at("capacity").get<int>() == 6);
  CHECK(j.at("n_states").get<int>() == 6);
  CHECK(j.at("max_deviation").get<double>() <= 1e-12);
}

TEST_CASE("sweep matches the golden CSV byte for byte") {
  const std::filesystem::path csv = g_scratch / "sweep.csv";
  CHECK(run("sweep --grid-step 0.25 --out " + csv.string()).exit_code == 0);
  const std::string produced = slurp(csv);
  CHECK(produced == slurp(g_data / "sweep_step_0.25.csv"));

  // 25 grid rows plus the header.
  int lines = 0;
  for (char ch : produced)
    if (ch == '\n') ++lines;
  CHECK(lines == 26);

  CHECK(run("sweep --grid-step 0.7 --out " + csv.string()).exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: test_cli <cli-path> <data-dir>\n");
    return 1;
  }
  g_cli = argv[1];
  g_data = argv[2];
  g_scratch = std::filesystem::temp_directory_path() / "sepdisc_cli_test";
  std::filesystem::create_directories(g_scratch);

  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
