#pragma once

// Seeded random complexes and subcomplexes, and the property suites that
// exercise every structural result on them.

#include "primesub/complex.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace primesub {

using Rng = std::mt19937_64;

/// Independent stream for (seed, suite, trial).
std::uint64_t trialSeed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

struct GenOptions {
  std::vector<long> us{1, 6, 10};
  std::size_t maxLength = 4;
  long maxInvariant = 60;
  std::size_t maxBricks = 4;
  bool torsionFree = false;
  bool zeroDifferentials = false;
  std::size_t fixedLength = 0;  // 0: random in [1, maxLength]
};

/// Direct sum of cyclic one-, two- and three-term bricks, scrambled by a
/// unimodular change of generators and brought to canonical coordinates.
Complex randomComplex(Rng& rng, const GenOptions& opts);
Vector randomElement(const FgModule& M, Rng& rng, long freeBound = 5);
/// Subcomplex generated by a few random elements, sometimes enlarged by pC or
/// the torsion subcomplex.
Subcomplex randomSubcomplex(const Complex& C, Rng& rng);
/// Random proper subcomplex (nullopt if none was found in a few attempts).
std::optional<Subcomplex> randomProperSubcomplex(const Complex& C, Rng& rng);
/// A prime subcomplex built by one of several constructions, verified.
std::optional<Subcomplex> randomPrimeSubcomplex(const Complex& C, Rng& rng);
/// A prime ideal generator p > 1 coprime to u, from a small fixed list.
Integer randomPrime(const RingCtx& ctx, Rng& rng);
bool hasZeroDifferentials(const Complex& C);

struct TrialOutcome {
  enum class Kind { Pass, Fail, Vacuous };
  Kind kind = Kind::Pass;
  std::string detail;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::function<TrialOutcome(Rng&)> trial;
};
const std::vector<SuiteInfo>& suites();
const SuiteInfo* findSuite(const std::string& name);

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;
  std::vector<std::string> failures;  // first few, with trial index
};

SuiteResult runSuite(const SuiteInfo& suite, std::size_t trials, std::uint64_t seed);
/// Runs trials until `effective` of them are non-vacuous (at most
/// 4 * effective attempts); `trials` in the result counts attempts.
SuiteResult runSuiteEffective(const SuiteInfo& suite, std::size_t effective, std::uint64_t seed);

struct AuditReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SuiteResult> suites;
  bool allPassed() const;
};
/// Fast deciders against the brute-force sweeps over every finite module of
/// order <= maxOrder (u = 1) with `subsPerModule` random submodules each.
struct OracleSweep {
  std::size_t modules = 0;
  std::size_t cases = 0;
  std::size_t mismatchedCases = 0;
  std::vector<std::string> mismatches;  // first few
};
Submodule randomFiniteSubmodule(const FgModule& M, Rng& rng);
OracleSweep oracleSweep(long maxOrder, std::size_t subsPerModule, std::uint64_t seed);

/// Runs the named suites (all when empty) with `trials` trials each.
AuditReport runAudit(std::size_t trials, std::uint64_t seed, const std::vector<std::string>& names = {});

}  // namespace primesub
