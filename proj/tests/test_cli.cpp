#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <string>

namespace {

int cli(const std::string& args) {
  std::string cmd = std::string("\"") + PDVERIFY_PATH + "\" " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("command-line exit codes") {
  CHECK(cli("--even-dim 1..2 --suite rank_formula") == 0);
  CHECK(cli("--even-dim 1..2 --suite rank_formula --self-test") == 1);
  CHECK(cli("--no-such-flag") == 2);
  CHECK(cli("--even-dim 3..1") == 2);
  CHECK(cli("--even-dim x") == 2);
  CHECK(cli("--flavor neither") == 2);
  CHECK(cli("--suite bogus") == 2);
  CHECK(cli("--model plain --odd-dim 1..2") == 2);
  CHECK(cli("--format xml") == 2);
}
