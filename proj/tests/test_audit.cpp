#include "doctest.h"

#include <set>

#include "primesub/audit.hpp"
#include "primesub/io.hpp"

using namespace primesub;

TEST_CASE("trial seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 3; ++s)
    for (std::uint64_t stream = 0; stream < 5; ++stream)
      for (std::uint64_t t = 0; t < 50; ++t) seen.insert(trialSeed(s, stream, t));
  CHECK(seen.size() == 750);
}

TEST_CASE("random complexes are valid and reproducible") {
  GenOptions o;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng a(trialSeed(1, 0, t)), b(trialSeed(1, 0, t));
    const Complex C = randomComplex(a, o);
    CHECK(C == randomComplex(b, o));
    CHECK_FALSE(validateComplex(C));
    CHECK(C.length() <= o.maxLength);
    CHECK(std::find(o.us.begin(), o.us.end(), C.ctx().u().get_si()) != o.us.end());
    for (const auto& M : C.modules())
      for (const auto& d : M.invariants()) CHECK(d <= o.maxInvariant);
    const Subcomplex S = randomSubcomplex(C, a);
    CHECK_FALSE(validateSubcomplex(S));
  }
}

TEST_CASE("generators honor their options") {
  GenOptions tf;
  tf.torsionFree = true;
  GenOptions zero;
  zero.zeroDifferentials = true;
  zero.fixedLength = 3;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(t);
    const Complex F = randomComplex(rng, tf);
    for (const auto& M : F.modules()) CHECK(M.torsionRank() == 0);
    const Complex Z = randomComplex(rng, zero);
    CHECK(hasZeroDifferentials(Z));
    CHECK(Z.length() == 3);
    if (auto P = randomPrimeSubcomplex(Z, rng)) CHECK(isPrimeSubcomplex(*P).verdict == Verdict::Prime);
  }
}

TEST_CASE("every suite except complex-level avoidance passes a short run") {
  for (const auto& s : suites()) {
    const SuiteResult r = runSuite(s, 60, 17);
    CHECK(r.passed + r.failed + r.vacuous == 60);
    if (s.name == "avoidance") continue;
    CHECK_MESSAGE(r.failed == 0, s.name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK_MESSAGE(r.passed > 30, s.name);
  }
}

TEST_CASE("complex-level avoidance meets genuine counterexamples") {
  const SuiteResult r = runSuite(*findSuite("avoidance"), 2000, 7);
  CHECK(r.failed > 0);
  CHECK(runSuite(*findSuite("avoidance-per-degree"), 2000, 7).failed == 0);
}

TEST_CASE("audit output is deterministic") {
  const std::vector<std::string> names{"torsion", "equivalence", "avoidance"};
  CHECK(auditJson(runAudit(25, 9, names)).dump() == auditJson(runAudit(25, 9, names)).dump());
  CHECK(auditJson(runAudit(25, 9, names)).dump() != auditJson(runAudit(25, 10, names)).dump());
  CHECK(findSuite("no-such-suite") == nullptr);
}
