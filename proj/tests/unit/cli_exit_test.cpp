#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

// End-to-end exit-code contract of the wexsim binary: 0 success, 1 invalid
// configuration, 2 runtime failure. The binary path comes from WEXSIM_CLI;
// the cases are skipped when it is unset (e.g. running unit_tests by hand).

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("WEXSIM_CLI");
  REQUIRE(cli != nullptr);
  const std::string command = std::string("\"") + cli + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

bool cli_available() { return std::getenv("WEXSIM_CLI") != nullptr; }

}  // namespace

TEST_CASE("cli exit codes follow the contract") {
  if (!cli_available()) {
    MESSAGE("WEXSIM_CLI not set; skipping binary checks");
    return;
  }
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "wexsim_cli_exit_test";
  std::filesystem::remove_all(dir);

  const CliResult bogus = run_cli("run --model BOGUS --out " + (dir / "x").string());
  CHECK(bogus.exit_code == 1);
  CHECK(bogus.output.find("JV-B") != std::string::npos);
  CHECK(bogus.output.find("WE-M-M-IR") != std::string::npos);

  const CliResult no_out = run_cli("run --model JV-M");
  CHECK(no_out.exit_code == 1);

  const CliResult blow_up = run_cli(
      "run --model JV-B --agents 4 --lambda 0 --delta-lo 1e300 --delta-hi 1e300 --steps 50 "
      "--out " +
      (dir / "blow_up").string());
  CHECK(blow_up.exit_code == 2);
  CHECK(blow_up.output.find("step") != std::string::npos);

  const CliResult ok =
      run_cli("run --model JV-M --agents 20 --steps 100 --out " + (dir / "ok").string());
  CHECK(ok.exit_code == 0);
}
