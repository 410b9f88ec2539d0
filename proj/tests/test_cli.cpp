#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "inccat/family.hpp"
#include "inccat/io.hpp"

namespace fs = std::filesystem;
using namespace inccat;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = "cd '" INCCAT_TEST_DATA_DIR "' && '" INCCAT_CLI_PATH "' " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* name;
  const char* args;
};

// Set INCCAT_UPDATE_GOLDEN=1 to rewrite the pinned outputs.
const GoldenCase kGolden[] = {
    {"ideals_chain2", "--json ideals chain2.json"},
    {"hom_chain2_vee", "--json hom chain2.json vee.json"},
    {"compose_m1_m2", "--json compose m1.json m2.json"},
    {"kernel_m2", "--json kernel m2.json"},
    {"cokernel_m2", "--json cokernel m2.json"},
    {"ses_vee", "--json ses vee.json"},
    {"product_sets", "--json product --family sets --max-size 8 n2.json n1.json"},
    {"product_csets2", "--json product --family csets:2 colored_pair.json colored_pair.json"},
    {"coproduct_vee", "--json coproduct --family fin vee.json"},
    {"antipode_vee", "--json antipode --family fin vee.json"},
    {"constants_fin3", "constants --family fin --size 3"},
    {"primitives_fin3", "--json primitives --family fin --degree 3"},
    {"k0_fin4", "--json k0 --family fin --cutoff 4"},
    {"k0_csets3", "--json k0 --family csets:3 --cutoff 3"},
    {"verify_fin_quick", "--json verify --family fin --max-size 4 --quick"},
    {"dump_forests4", "family dump --family forests --size 4"},
};

}  // namespace

TEST(Cli, IdealsOfChainListsThreeIdeals) {
  const auto r = run_cli("ideals chain2.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "3 ideals\n{}\n{a}\n{a,b}\n");
  const auto j = nlohmann::json::parse(run_cli("--json ideals chain2.json").out);
  EXPECT_EQ(j["count"], 3);
  EXPECT_EQ(j["ideals"].size(), 3u);
}

TEST(Cli, SetsProductIsBinomial) {
  const auto r = run_cli("product --family sets --max-size 8 n2.json n1.json");
  ASSERT_EQ(r.exit_code, 0);
  const auto f = io::hall_from_json(nlohmann::json::parse(r.out));
  const auto size3 = canonical_form(antichain(3), MapMode::AllPosetIsos);
  EXPECT_EQ(f.coefficient(size3), 3);
  EXPECT_EQ(f.support_size(), 1u);
}

TEST(Cli, VerifyFinAtFourPasses) {
  const auto r = run_cli("verify --family fin --max-size 4");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("seed 42"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifySchmittPasses) {
  EXPECT_EQ(run_cli("verify --schmitt --family forests --max-size 4").exit_code, 0);
  EXPECT_EQ(run_cli("verify --quick --schmitt --family csets:2 --max-size 4 --seed 9").exit_code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("no-such-command").exit_code, 2);
  EXPECT_EQ(run_cli("ideals").exit_code, 2);
  EXPECT_EQ(run_cli("ideals missing.json").exit_code, 2);
  EXPECT_EQ(run_cli("product --family graphs n1.json n1.json").exit_code, 2);
  EXPECT_EQ(run_cli("constants --family fin").exit_code, 2);
  EXPECT_EQ(run_cli("--root-max verify --family fin").exit_code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli("ideals cyclic.json").exit_code, 2);
  // product of size 2 and 1 does not fit under max size 2
  EXPECT_EQ(run_cli("product --family sets --max-size 2 n2.json n1.json").exit_code, 2);
  // a chain is not a set
  EXPECT_EQ(run_cli("coproduct --family sets chain2.json").exit_code, 2);
}

TEST(Cli, HomListsTriples) {
  const auto r = run_cli("hom chain2.json n2.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(line_count(r.out), 4u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "3 morphisms");
}

TEST(Cli, ComposeIsSecondAfterFirst) {
  const auto r = run_cli("--json compose m1.json m2.json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["I1"], nlohmann::json::array({"a"}));
  EXPECT_EQ(j["I2"], nlohmann::json::array({"a"}));
  EXPECT_EQ(j["f"]["b"], "a");
  EXPECT_EQ(run_cli("compose m2.json m2.json").exit_code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"--json hom chain2.json vee.json", "constants --family fin --size 4",
                           "--json primitives --family fin --degree 4"})
    EXPECT_EQ(run_cli(args).out, run_cli(args).out) << args;
}

TEST(Cli, FamilyDumpRoundTrips) {
  const fs::path dir = fs::temp_directory_path() / "inccat_dump_test";
  fs::remove_all(dir);
  const auto r = run_cli("family dump --family fin --size 4 --out-dir '" + dir.string() + "'");
  ASSERT_EQ(r.exit_code, 0);
  std::size_t files = 0;
  const auto ctx = fin_up_to(4);
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    const Poset p = io::read_poset_file(entry.path());
    EXPECT_EQ(ctx.classify(p).hex() + ".json", entry.path().filename().string());
    const auto ideals = run_cli("--json ideals '" + entry.path().string() + "'");
    ASSERT_EQ(ideals.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(ideals.out)["count"], order_ideals(p).size());
    EXPECT_EQ(run_cli("--json ses '" + entry.path().string() + "'").exit_code, 0);
    EXPECT_EQ(run_cli("coproduct --family fin '" + entry.path().string() + "'").exit_code, 0);
    EXPECT_EQ(run_cli("hom '" + entry.path().string() + "' vee.json").exit_code, 0);
  }
  EXPECT_EQ(files, 16u);
  fs::remove_all(dir);

  const auto lines = run_cli("family dump --family cforests:2 --size 2");
  ASSERT_EQ(lines.exit_code, 0);
  std::istringstream in(lines.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const Poset p = io::poset_from_json(nlohmann::json::parse(line));
    EXPECT_TRUE(p.has_colors());
    ++n;
  }
  EXPECT_EQ(n, colored_forests_up_to(2, 2).classes(2).size());
}

TEST(Cli, GoldenOutputs) {
  const bool update = std::getenv("INCCAT_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : kGolden) {
    const auto r = run_cli(c.args);
    ASSERT_EQ(r.exit_code, 0) << c.name;
    const fs::path golden = fs::path(INCCAT_GOLDEN_DIR) / (std::string(c.name) + ".txt");
    if (update) {
      std::ofstream(golden) << r.out;
      continue;
    }
    ASSERT_TRUE(fs::exists(golden)) << golden;
    EXPECT_EQ(r.out, read_file(golden)) << c.name;
  }
}
