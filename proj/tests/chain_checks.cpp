// Deep cross-checks of the case reductions at p = 5: the first displayed
// integrands are enumerated cell by cell with exact phases (no reduction
// steps at all) on windows where all four variables genuinely interact, and
// compared against the shell-reduced evaluation of the same truncated
// object.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "g2zeta/integrals.hpp"

using namespace g2zeta;
using namespace g2zeta::integrals;

namespace {

void cross_check(const char* id, const ShellWindows& w) {
  LocalParams P{5, 1, 2, true, std::nullopt};
  NumericOptions brute;
  brute.s = 2.0;
  brute.windows = w;
  brute.mode = NumericMode::Brute;
  brute.work_limit = 60'000'000ULL;
  NumericOptions reduced = brute;
  reduced.mode = NumericMode::ShellReduced;
  reduced.depth = 4;
  NumericResult vb = numeric_case(CaseId::parse(id), P, brute);
  NumericResult vr = numeric_case(CaseId::parse(id), P, reduced);
  INFO(id);
  CHECK(vb.exact_zero == vr.exact_zero);
  CHECK(std::abs(vb.value - vr.value) <=
        1e-12 * std::max(1.0, std::max(std::abs(vb.value), std::abs(vr.value))));
}

}  // namespace

TEST_CASE("case ---- with all four variables outside") {
  // the x-integral multiplier v^-1 y^3 z is only integral once |v| reaches
  // |y|^3 |z|, so v goes four shells deep
  cross_check("----", ShellWindows{-4, -1, -1, -1});
}

TEST_CASE("case --++ with both v and u two shells deep") {
  cross_check("--++", ShellWindows{-2, -2, -1, -1});
}

TEST_CASE("case -+-- across its live window") {
  cross_check("-+--", ShellWindows{-4, -1, -4, -4});
}

TEST_CASE("case -+-+ with v three shells deep") {
  cross_check("-+-+", ShellWindows{-3, -1, -3, -1});
}
