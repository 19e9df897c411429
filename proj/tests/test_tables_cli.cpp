#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "logint/approx.hpp"
#include "logint/historical.hpp"
#include "logint/tables.hpp"

using namespace logint;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = LOGINT_GOLDEN_DIR;
const std::string kCli = LOGINT_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path temp_copy(const fs::path& src, const std::string& name) {
  fs::path dst = fs::temp_directory_path() / name;
  fs::copy_file(src, dst, fs::copy_options::overwrite_existing);
  return dst;
}

}  // namespace

TEST_CASE("unmodified goldens verify clean") {
  VerifyReport b = verify_bessel_1810(bessel_table_1810(), kGolden / "bessel_1810.csv");
  CHECK(b.passed());
  CHECK(!b.info.empty());  // historical deviations are reported as info

  std::vector<std::uint64_t> ns = {1000, 10000, 50000, 100000, 500000, 1000000, 10000000};
  VerifyReport c = verify_comparativa(comparison_table(ns), kGolden / "comparativa.csv");
  CHECK(c.passed());

  VerifyReport k = verify_constants(kGolden / "constants.csv");
  CHECK(k.passed());
}

TEST_CASE("the known 1810 outlier row is reported as info, not failure") {
  VerifyReport b = verify_bessel_1810(bessel_table_1810(), kGolden / "bessel_1810.csv");
  bool found = false;
  for (const auto& line : b.info)
    if (line.find("x=300000") != std::string::npos && line.find("6.4766") != std::string::npos)
      found = true;
  CHECK(found);
  // Vega-derived prime count deviations listed per row
  int vega_lines = 0;
  for (const auto& line : b.info)
    if (line.find("Vega") != std::string::npos) ++vega_lines;
  CHECK(vega_lines == 3);  // 2e5, 3e5, 4e5
}

TEST_CASE("a perturbed golden cell is named and fails") {
  // bump the li cell of the 1e4 row by +10
  fs::path tmp = fs::temp_directory_path() / "bessel_perturbed.csv";
  {
    std::ifstream in(kGolden / "bessel_1810.csv");
    std::ofstream out(tmp);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("10000,", 0) == 0) line = "10000,1256.137247,1230,16.14";
      out << line << '\n';
    }
  }
  VerifyReport b = verify_bessel_1810(bessel_table_1810(), tmp);
  CHECK_FALSE(b.passed());
  bool named = false;
  for (const auto& f : b.failures)
    if (f.find("x=10000") != std::string::npos) named = true;
  CHECK(named);
  fs::remove(tmp);
}

TEST_CASE("a perturbed comparativa cell fails with its name") {
  fs::path tmp = fs::temp_directory_path() / "comparativa_perturbed.csv";
  {
    std::ifstream in(kGolden / "comparativa.csv");
    std::ofstream out(tmp);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("100000,", 0) == 0) line = "100000,9592,8696,9588,9630";
      out << line << '\n';
    }
  }
  std::vector<std::uint64_t> ns = {100000};
  VerifyReport c = verify_comparativa(comparison_table(ns), tmp);
  CHECK_FALSE(c.passed());
  bool named = false;
  for (const auto& f : c.failures)
    if (f.find("n=100000") != std::string::npos && f.find("x_over_lnx") != std::string::npos)
      named = true;
  CHECK(named);
  fs::remove(tmp);
}

TEST_CASE("markdown and csv renderings carry the same cells") {
  LiTable t = bessel_table_1810();
  OutputSpec csv{TableFormat::Csv, std::nullopt, 6};
  OutputSpec md{TableFormat::Markdown, std::nullopt, 6};
  std::string c = render_li_table(t, csv);
  std::string m = render_li_table(t, md);
  CHECK(c.find("177.609658") != std::string::npos);
  CHECK(m.find("177.609658") != std::string::npos);
  CHECK(m.find("| --- |") != std::string::npos);
  CHECK(c.find("1000000") != std::string::npos);
}

TEST_CASE("cli: li with nine display digits") {
  RunResult r = run_cli("li 1000 --digits 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "177.609657990\n");
}

TEST_CASE("cli: prime count at a million") {
  RunResult r = run_cli("pi 1000000");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "78498\n");
}

TEST_CASE("cli: golden verification round trip") {
  RunResult ok = run_cli("table comparativa --verify " + (kGolden / "comparativa.csv").string());
  CHECK(ok.exit_code == 0);

  fs::path tmp = temp_copy(kGolden / "comparativa.csv", "comparativa_cli_perturbed.csv");
  {
    std::ifstream in(tmp);
    std::stringstream all;
    all << in.rdbuf();
    std::string text = all.str();
    auto pos = text.find("78543");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "78553");
    std::ofstream out(tmp, std::ios::trunc);
    out << text;
  }
  RunResult bad = run_cli("table comparativa --verify " + tmp.string());
  CHECK(bad.exit_code == 2);
  fs::remove(tmp);
}

TEST_CASE("cli: domain errors exit 1, usage errors exit 3") {
  CHECK(run_cli("li 1").exit_code == 1);
  CHECK(run_cli("li -- -5").exit_code == 1);
  CHECK(run_cli("nonsense-subcommand").exit_code == 3);
  CHECK(run_cli("li").exit_code == 3);
  CHECK(run_cli("quad --from 10").exit_code == 3);
}

TEST_CASE("cli: identical invocations are byte-identical") {
  RunResult a = run_cli("table bessel1810 --digits 8");
  RunResult b = run_cli("table bessel1810 --digits 8");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult c = run_cli("complex-demo");
  RunResult d = run_cli("complex-demo");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("cli: display digits clamp to the working precision") {
  RunResult r = run_cli("li 1000 --digits 80 --precision 32");
  CHECK(r.exit_code == 0);
  // 32 - 8 = 24 fractional digits survive
  CHECK(r.out.find('.') != std::string::npos);
  CHECK(r.out.size() == 3 + 1 + 24 + 1);  // "177" '.' 24 digits '\n'
}

TEST_CASE("cli: sieve cache is written and reused") {
  fs::path cache = fs::temp_directory_path() / "logint_cli_cache.bin";
  fs::remove(cache);
  RunResult first = run_cli("pi 1000000 --sieve-cache " + cache.string());
  CHECK(first.exit_code == 0);
  CHECK(first.out == "78498\n");
  CHECK(fs::exists(cache));
  RunResult second = run_cli("pi 1000000 --sieve-cache " + cache.string());
  CHECK(second.out == "78498\n");
  fs::remove(cache);
}

TEST_CASE("cli: --out writes the same bytes as stdout") {
  fs::path tmp = fs::temp_directory_path() / "logint_table_out.csv";
  RunResult direct = run_cli("table bessel1810 --digits 8");
  RunResult redirected = run_cli("table bessel1810 --digits 8 --out " + tmp.string());
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == direct.out);
  fs::remove(tmp);
}

TEST_CASE("cli: markdown format") {
  RunResult r = run_cli("table comparativa --format md");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("| n | pi |") != std::string::npos);
  CHECK(r.out.find("| --- |") != std::string::npos);
}

TEST_CASE("cli: quad without endpoints prints the 1815 demo") {
  RunResult r = run_cli("quad --digits 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("nodes,value,abs_error,rel_error,reference", 0) == 0);
  CHECK(r.out.find("\n4,") != std::string::npos);
  CHECK(r.out.find("\n16,") != std::string::npos);
  CHECK(r.out.find("8406.243121") != std::string::npos);
}

TEST_CASE("cli: standalone verify subcommand") {
  CHECK(run_cli("verify constants " + (kGolden / "constants.csv").string()).exit_code == 0);
  CHECK(run_cli("verify bessel1810 " + (kGolden / "bessel_1810.csv").string()).exit_code == 0);
  CHECK(run_cli("verify comparativa " + (kGolden / "comparativa.csv").string()).exit_code == 0);
  CHECK(run_cli("verify constants /nonexistent/path.csv").exit_code == 1);
}

TEST_CASE("cli: LOGINT_PRECISION environment override") {
  RunResult r = run_cli("li 2 --digits 40");  // default precision 64: full 40 digits
  CHECK(r.out.size() == 1 + 1 + 40 + 1);
  // env lowers the working precision; display clamps to 32 - 8 = 24
  std::string cmd = "LOGINT_PRECISION=32 " + kCli + " li 2 --digits 40 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[256];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  CHECK(out.size() == 1 + 1 + 24 + 1);
}

TEST_CASE("cli: approx accepts the --method flag form") {
  RunResult positional = run_cli("approx x_over_lnx 1000 --digits 3");
  RunResult flagged = run_cli("approx 1000 --method x_over_lnx --digits 3");
  CHECK(positional.exit_code == 0);
  CHECK(flagged.exit_code == 0);
  CHECK(positional.out == flagged.out);
}
