#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

// Every archived sample pair must survive the full comparison pipeline with
// all cross-checks enabled: the rank-based probability estimate against the
// pairwise loop, both estimates against the difference-curve identities, and
// the point estimates against their bootstrap band.  The corpus mixes sizes
// from 5 to 2000 with ties, lattices, constants, identical samples and
// crossing shapes; regenerate it with the gen_regression helper.

namespace {

const std::string kBin = SDCMP_BIN;
const std::string kRegression = std::string(FIXTURES_DIR) + "/regression";

int run_verify(const std::string& a, const std::string& b) {
    const std::string cmd = kBin + " compare --a " + a + " --b " + b +
                            " --resamples 150 --verify >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("archived sample pairs pass the verified pipeline",
          "[regression][slow]") {
    for (int i = 0; i < 50; ++i) {
        char a[64], b[64];
        std::snprintf(a, sizeof(a), "/pair_%02d_a.txt", i);
        std::snprintf(b, sizeof(b), "/pair_%02d_b.txt", i);
        INFO("pair " << i);
        REQUIRE(run_verify(kRegression + a, kRegression + b) == 0);
    }
}
