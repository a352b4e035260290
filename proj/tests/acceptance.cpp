// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance [--seed N] [--cli PATH] [--expect-red 4,...]
// Exit status is 0 iff exactly the criteria named by --expect-red fail.

#include "cech_formulas.hpp"
#include "primesub/audit.hpp"
#include "primesub/io.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sys/wait.h>
#include <sstream>

using namespace primesub;

namespace {

struct Line {
  std::string id;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;

void report(const std::string& id, bool pass, const std::string& detail) {
  lines.push_back({id, pass, detail});
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

void supplement(const std::string& id, bool pass, const std::string& detail) {
  std::cout << "  supplement " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

double secondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string counts(const SuiteResult& r) {
  std::ostringstream s;
  s << r.passed << " passed, " << r.failed << " failed, " << r.vacuous << " vacuous of " << r.trials << " attempts";
  if (!r.failures.empty()) s << "; first: " << r.failures.front().substr(0, 300);
  return s.str();
}

bool suiteGate(const std::string& name, std::size_t effective, std::uint64_t seed, SuiteResult& out) {
  out = runSuiteEffective(*findSuite(name), effective, seed);
  return out.failed == 0 && out.passed == effective;
}

std::string runCapture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int raw = pclose(p);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 7;
  std::string cli;
  std::vector<std::string> expectRed;
  app.add_option("--seed", seed);
  app.add_option("--cli", cli, "Path to the primesub executable");
  app.add_option("--expect-red", expectRed)->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  // 1. Oracle equivalence on every finite module of order <= 200.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const OracleSweep s = oracleSweep(200, 20, seed);
    const double secs = secondsSince(t0);
    std::ostringstream d;
    d << "oracle equivalence: " << s.modules << " modules, " << s.cases << " cases, " << s.mismatchedCases
      << " mismatched, " << secs << " s (limit 60 s)";
    if (!s.mismatches.empty()) d << "; first: " << s.mismatches.front();
    report("1", s.modules == 389 && s.cases >= 389 * 20 && s.mismatchedCases == 0 && secs <= 60.0, d.str());
  }

  // 2. Equivalent characterizations on 5,000 proper subcomplexes.
  {
    SuiteResult r;
    const bool ok = suiteGate("equivalence", 5000, seed, r);
    report("2", ok, "equivalence audit: " + counts(r));
  }

  // 3. Faithful flatness, 2,000 trials.
  {
    SuiteResult r;
    const bool ok = suiteGate("faithfully-flat", 2000, seed, r);
    report("3", ok, "faithfully flat: " + counts(r));
  }

  // 4. Prime avoidance, 10,000 trials, zero violations.
  {
    SuiteResult r;
    const bool ok = suiteGate("avoidance", 10000, seed, r);
    report("4", ok, "prime avoidance (complex-level residuals): " + counts(r));
    SuiteResult q;
    const bool okq = suiteGate("avoidance-per-degree", 10000, seed, q);
    supplement("4", okq, "prime avoidance degree by degree: " + counts(q));
  }

  // 5. Summand, purity, torsion, primary-over-prime and saturation suites.
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"summand", "purity", "torsion", "primary-over-prime", "saturation"}) {
      SuiteResult r;
      const bool s = suiteGate(name, 1000, seed, r);
      ok = ok && s;
      detail += std::string(detail.empty() ? "" : "; ") + name + " " + std::to_string(r.passed) + "/" +
                std::to_string(r.failed);
      if (!s && !r.failures.empty()) detail += " (" + r.failures.front().substr(0, 200) + ")";
    }
    report("5", ok, "construction suites (passed/failed): " + detail);
    for (const char* name : {"maximal-colon", "maximal-multiple", "maximal-overcomplex", "maximal-subcomplex",
                             "free-structure", "flat-colon", "localization"}) {
      SuiteResult r;
      const bool s = suiteGate(name, 1000, seed, r);
      supplement("5", s, std::string(name) + ": " + counts(r));
    }
  }

  // 6. Čech reproduction for 3, 5, 7.
  {
    std::vector<std::string> problems;
    const CechReproduction rep = reproduceCechExample();
    const CechComplex& C = rep.complex;
    auto labelSet = [&](std::size_t k) {
      std::set<Integer> s(C.components[k].summands.begin(), C.components[k].summands.end());
      return s;
    };
    if (labelSet(0) != std::set<Integer>{1}) problems.push_back("degree 0");
    if (labelSet(1) != std::set<Integer>{3, 5, 7}) problems.push_back("degree 1");
    if (labelSet(2) != std::set<Integer>{35, 21, 15}) problems.push_back("degree 2");
    if (labelSet(3) != std::set<Integer>{105}) problems.push_back("degree 3");
    if (renderDifferential(C, 0) != "(x, x, x)") problems.push_back("d0 rendering");
    if (renderDifferential(C, 1) != "(x{5} - x{3}, x{7} - x{3}, x{7} - x{5})") problems.push_back("d1 rendering");
    if (renderDifferential(C, 2) != "(x{35} - x{21} + x{15})") problems.push_back("d2 rendering");
    if (const int bad = testing::formulaMismatches(C, seed, 500)) problems.push_back(std::to_string(bad) + " formula mismatches");
    if (checkDSquared(C)) problems.push_back("d^2 != 0");
    if (rep.primeReport.verdict != Verdict::Prime) problems.push_back("prime case");
    if (rep.primaryReport.verdict != Verdict::Primary || rep.primaryAsPrime.verdict != Verdict::NotPrime)
      problems.push_back("primary case");
    if (rep.literalDegreeOne.verdict != Verdict::NotProper) problems.push_back("literal reading");
    bool noted = false;
    for (const auto& n : rep.notes) noted = noted || n.find("unit") != std::string::npos;
    if (!noted) problems.push_back("discrepancy note");
    std::string detail = "Čech 3, 5, 7: components, d0/d1/d2 formulas, d^2 = 0, Prime / Primary+NotPrime, literal degree 1 ";
    detail += name(rep.literalDegreeOne.verdict);
    for (const auto& p : problems) detail += "; problem: " + p;
    report("6", problems.empty(), detail);
  }

  // 7. Two full audits with one seed give identical structured output.
  {
    std::string a, b;
    std::string how;
    int sa = 0, sb = 0;
    if (!cli.empty()) {
      const std::string cmd = "'" + cli + "' audit --trials 200 --seed " + std::to_string(seed) + " --format structured";
      a = runCapture(cmd, sa);
      b = runCapture(cmd, sb);
      how = "CLI audit, 200 trials per suite";
    } else {
      a = auditJson(runAudit(200, seed)).dump(2);
      b = auditJson(runAudit(200, seed)).dump(2);
      how = "in-process audit, 200 trials per suite";
    }
    const bool ok = !a.empty() && a == b && sa == sb;
    report("7", ok, "determinism: " + how + ", " + std::to_string(a.size()) + " bytes, " +
                        (a == b ? "identical" : "different") + ", exit codes " + std::to_string(sa) + "/" +
                        std::to_string(sb));
  }

  const std::set<std::string> red(expectRed.begin(), expectRed.end());
  bool asExpected = true;
  for (const auto& l : lines) asExpected = asExpected && (l.pass != (red.count(l.id) > 0));
  std::cout << (asExpected ? "acceptance outcome matches expectation" : "acceptance outcome differs from expectation")
            << std::endl;
  return asExpected ? 0 : 1;
}
