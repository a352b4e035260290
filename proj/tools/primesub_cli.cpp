// primesub: prime and primary subcomplex toolkit.

#include "primesub/audit.hpp"
#include "primesub/cech.hpp"
#include "primesub/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace primesub;

namespace {

enum Exit { kAffirmative = 0, kNegative = 1, kInputError = 2, kBreach = 3 };

struct Options {
  std::uint64_t factorCap = kDefaultFactorCap;
  std::string format = "human";
  bool timing = false;
  std::string input;
  Integer prime = 0;
  std::string primeText, invertText, idealText;
  std::size_t rank = 1;
  std::vector<std::string> elements;
  bool example = false;
  bool perDegree = false;
  std::size_t trials = 100;
  std::uint64_t seed = 7;
  std::vector<std::string> suiteNames;
  long maxOrder = 200;
  std::size_t subs = 20;
};

struct Outcome {
  int code = kAffirmative;
  Json report;
};

std::string readInput(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("", "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Integer parseInteger(const std::string& text, const std::string& flag) {
  Integer n;
  if (text.empty() || n.set_str(text, 10) != 0) throw SchemaError(flag, "not an integer: " + text);
  return n;
}

const Complex& needComplex(const Document& d) {
  if (!d.complex) throw SchemaError("/modules", "this command needs a complex document");
  return *d.complex;
}

const Subcomplex& needSub(const Document& d) {
  needComplex(d);
  if (!d.subcomplex) throw SchemaError("/subcomplex", "missing field");
  return *d.subcomplex;
}

Json documentFor(const Subcomplex& S) {
  Document d;
  d.complex = S.parent();
  d.subcomplex = S;
  return serializeDocument(d);
}

Outcome decide(const std::string& command, const Document& d, bool primary) {
  PrimenessReport r;
  if (d.cech) {
    if (!d.cech->parts) throw SchemaError("/subcomplex", "missing field");
    r = primary ? isPrimaryCechSubcomplex(*d.cech->parts, d.cech->complex)
                : isPrimeCechSubcomplex(*d.cech->parts, d.cech->complex);
  } else {
    const Subcomplex& S = needSub(d);
    r = primary ? isPrimarySubcomplex(S) : isPrimeSubcomplex(S);
  }
  Outcome o{r.affirmative() ? kAffirmative : kNegative, makeReport(command, name(r.verdict))};
  o.report["ideals"] = idealsJson(r.perIndexIdeals);
  o.report["witness"] = witnessJson(r.witness);
  if (!r.notes.empty()) o.report["notes"] = r.notes;
  return o;
}

Outcome runValidate(const Document& d) {
  Outcome o{kAffirmative, makeReport("validate", "ok")};
  if (d.cech) {
    o.report["kind"] = "cech";
    o.report["degrees"] = d.cech->complex.length();
    o.report["subcomplex"] = d.cech->parts.has_value();
    return o;
  }
  o.report["kind"] = "complex";
  o.report["lo"] = d.complex->lo();
  o.report["hi"] = d.complex->hi();
  o.report["subcomplex"] = d.subcomplex.has_value();
  o.report["avoid"] = d.family.size();
  o.report["canonical"] = serializeDocument(d);
  return o;
}

Outcome runColon(const Document& d) {
  const Subcomplex& S = needSub(d);
  Outcome o{kAffirmative, makeReport("colon", "ok")};
  std::map<long, Ideal> colons;
  for (long i = S.parent().lo(); i <= S.parent().hi(); ++i) colons[i] = colon(S.part(i));
  o.report["ideals"] = idealsJson(colons);
  o.report["residual"] = residual(S).toString();
  return o;
}

Outcome runAnn(const Document& d) {
  const Complex& C = needComplex(d);
  Outcome o{kAffirmative, makeReport("ann", "ok")};
  std::map<long, Ideal> anns;
  for (long i = C.lo(); i <= C.hi(); ++i) anns[i] = colon(Submodule::zero(C.module(i)));
  o.report["ideals"] = idealsJson(anns);
  o.report["annihilator"] = annihilatorOfComplex(C).toString();
  return o;
}

Outcome runZdiv(const Document& d) {
  const Complex& C = needComplex(d);
  Outcome o{kAffirmative, makeReport("zdiv", "ok")};
  Json per = Json::object();
  for (long i = C.lo(); i <= C.hi(); ++i) per[std::to_string(i)] = zeroDivisors(C.module(i)).toString();
  o.report["components"] = per;
  o.report["zero_divisors"] = zeroDivisorsOfComplex(C).toString();
  return o;
}

Outcome runTorsion(const Document& d) {
  const Complex& C = needComplex(d);
  const Subcomplex T = torsionSubcomplex(C);
  Outcome o{kAffirmative, makeReport("torsion", T == Subcomplex::whole(C) ? "whole complex" : "proper")};
  o.report["subcomplex"] = serializeSubcomplex(T);
  return o;
}

Outcome runPure(const Document& d) {
  const bool pure = isPureSubcomplex(needSub(d), 12);
  return {pure ? kAffirmative : kNegative, makeReport("pure", pure ? "pure" : "not pure")};
}

Outcome runMaximal(const Document& d) {
  const bool m = isMaximalSubcomplex(needSub(d));
  return {m ? kAffirmative : kNegative, makeReport("maximal", m ? "maximal" : "not maximal")};
}

Outcome runSaturate(const Document& d, const Options& opt) {
  const Subcomplex& S = needSub(d);
  const Ideal p = Ideal::generatedBy(parseInteger(opt.primeText, "--prime"), S.parent().ctx());
  if (!p.isZero() && !isPrimeIdeal(p, S.parent().ctx())) throw SchemaError("--prime", p.toString() + " is not prime");
  const SaturatedSubcomplex sat = saturateSubcomplex(S, p);
  Outcome o{sat.hypothesisViolated ? kNegative : kAffirmative,
            makeReport("saturate", sat.hypothesisViolated ? "hypothesis violated" : "ok")};
  o.report["prime"] = p.toString();
  o.report["not_proper"] = sat.notProper;
  o.report["subcomplex"] = serializeSubcomplex(sat.result);
  return o;
}

Outcome runLocalize(const Document& d, const Options& opt) {
  const Subcomplex& S = needSub(d);
  const Integer a = parseInteger(opt.invertText, "--invert");
  if (a < 1) throw SchemaError("--invert", "must be a positive integer");
  const LocalizedComplex L = localizeComplex(S, a);
  Outcome o{L.properFlag ? kAffirmative : kNegative, makeReport("localize", L.properFlag ? "proper" : "not proper")};
  o.report["document"] = documentFor(L.sub);
  return o;
}

Outcome runTensor(const Document& d, const Options& opt) {
  if (opt.rank < 1) throw SchemaError("--rank", "must be >= 1");
  const TensoredComplex t = tensorComplexWithFree(needSub(d), opt.rank);
  Outcome o{kAffirmative, makeReport("tensor", "ok")};
  o.report["document"] = documentFor(t.sub);
  return o;
}

Outcome runScale(const Document& d, const Options& opt) {
  const Complex& C = needComplex(d);
  const Ideal m = Ideal::generatedBy(parseInteger(opt.idealText, "--ideal"), C.ctx());
  Outcome o{kAffirmative, makeReport("scale", "ok")};
  o.report["ideal"] = m.toString();
  o.report["subcomplex"] = serializeSubcomplex(scaleByIdeal(C, m));
  return o;
}

Json avoidanceJson(const AvoidanceResult& r) {
  Json j;
  j["result"] = name(r.kind);
  if (r.kind == AvoidanceResult::Kind::Holds) {
    j["which"] = r.which;
    j["via"] = r.viaContainment ? "containment" : "residual";
  }
  if (r.kind == AvoidanceResult::Kind::InclusionFailure) {
    j["index"] = r.index;
    j["element"] = elementJson(r.element);
  }
  if (r.kind == AvoidanceResult::Kind::TheoremViolation && r.index != 0) j["index"] = r.index;
  j["detail"] = r.detail;
  return j;
}

int avoidanceCode(const AvoidanceResult& r) {
  switch (r.kind) {
    case AvoidanceResult::Kind::Holds: return kAffirmative;
    case AvoidanceResult::Kind::TheoremViolation: return kBreach;
    default: return kNegative;
  }
}

Outcome runAvoid(const Document& d, const Options& opt) {
  const Subcomplex& S = needSub(d);
  if (d.family.empty()) throw SchemaError("/avoid", "missing or empty family");
  const AvoidanceResult literal = primeAvoidance(d.family, S);
  const AvoidanceResult degreewise = primeAvoidancePerIndex(d.family, S);
  const AvoidanceResult& main = opt.perDegree ? degreewise : literal;
  Outcome o{avoidanceCode(main), makeReport("avoid", name(main.kind))};
  o.report["complex_level"] = avoidanceJson(literal);
  o.report["per_degree"] = avoidanceJson(degreewise);
  return o;
}

Json cechComplexJson(const CechComplex& C) {
  Json comps = Json::array();
  for (std::size_t k = 0; k < C.length(); ++k) {
    Json names = Json::array();
    for (std::size_t j = 0; j < C.components[k].size(); ++j) names.push_back(C.summandName(k, j));
    comps.push_back(names);
  }
  Json diffs = Json::array();
  for (std::size_t k = 0; k < C.diffs.size(); ++k) diffs.push_back(renderDifferential(C, k));
  return {{"components", comps}, {"differentials", diffs}};
}

Json cechPartsJson(const std::vector<IdealSubcomplexPart>& parts) {
  Json a = Json::array();
  for (const auto& p : parts) {
    Json g = Json::array();
    for (const auto& x : p.gens) g.push_back(x.get_str());
    a.push_back(g);
  }
  return a;
}

Outcome runCech(const Options& opt) {
  std::optional<CechDocument> doc;
  if (!opt.input.empty()) {
    const Document d = parseDocument(readInput(opt.input), opt.factorCap);
    if (!d.cech) throw SchemaError("/cech", "missing field");
    doc = d.cech;
  } else {
    if (opt.elements.empty()) throw SchemaError("--elements", "give --elements or a Čech document");
    std::vector<Integer> el;
    for (const auto& e : opt.elements) el.push_back(parseInteger(e, "--elements"));
    try {
      doc = CechDocument{buildCech(el), std::nullopt};
    } catch (const AlgebraError& e) {
      throw SchemaError("--elements", e.what());
    }
  }
  const CechComplex& C = doc->complex;
  const auto dsq = checkDSquared(C);
  Outcome o{dsq ? kBreach : kAffirmative, makeReport("cech", dsq ? "d^2 != 0" : "ok")};
  o.report["complex"] = cechComplexJson(C);
  o.report["d_squared"] = dsq ? "fails at degree " + std::to_string(dsq->degree) : "zero";
  if (doc->parts) {
    const PrimenessReport p = isPrimeCechSubcomplex(*doc->parts, C);
    const PrimenessReport q = isPrimaryCechSubcomplex(*doc->parts, C);
    o.report["verdict"] = name(p.verdict);
    o.report["ideals"] = idealsJson(p.perIndexIdeals);
    o.report["witness"] = witnessJson(p.witness);
    o.report["primary"] = name(q.verdict);
    if (!dsq && !p.affirmative()) o.code = kNegative;
  }
  if (opt.example) {
    const CechReproduction rep = reproduceCechExample();
    auto verdicts = [](const PrimenessReport& r) { return Json{{"verdict", name(r.verdict)}, {"ideals", idealsJson(r.perIndexIdeals)}}; };
    o.report["example"] = {{"complex", cechComplexJson(rep.complex)},
                           {"prime_subcomplex", cechPartsJson(rep.primeSub)},
                           {"prime", verdicts(rep.primeReport)},
                           {"primary_subcomplex", cechPartsJson(rep.primarySub)},
                           {"primary_as_prime", verdicts(rep.primaryAsPrime)},
                           {"primary", verdicts(rep.primaryReport)},
                           {"literal_subcomplex", cechPartsJson(rep.literalSub)},
                           {"literal", verdicts(rep.literalReport)},
                           {"literal_degree_1", verdicts(rep.literalDegreeOne)},
                           {"notes", rep.notes}};
  }
  return o;
}

Outcome runAudit(const Options& opt) {
  for (const auto& n : opt.suiteNames)
    if (!findSuite(n)) throw SchemaError("--suite", "unknown suite " + n);
  const AuditReport a = primesub::runAudit(opt.trials, opt.seed, opt.suiteNames);
  Outcome o{a.allPassed() ? kAffirmative : kBreach, makeReport("audit", a.allPassed() ? "all passed" : "failures")};
  o.report["audit"] = auditJson(a);
  return o;
}

Outcome runOracleCheck(const Options& opt) {
  const OracleSweep s = oracleSweep(opt.maxOrder, opt.subs, opt.seed);
  Outcome o{s.mismatchedCases ? kBreach : kAffirmative, makeReport("oracle-check", s.mismatchedCases ? "mismatch" : "agree")};
  o.report["modules"] = s.modules;
  o.report["cases"] = s.cases;
  o.report["mismatched_cases"] = s.mismatchedCases;
  o.report["mismatches"] = s.mismatches;
  return o;
}

std::string auditTable(const Json& report) {
  std::ostringstream out;
  const Json& a = report["audit"];
  out << "audit: " << report["verdict"].get<std::string>() << " (seed " << a["seed"].dump() << ", "
      << a["trials"].dump() << " trials per suite)\n";
  out << std::left << std::setw(24) << "suite" << std::right << std::setw(8) << "passed" << std::setw(8) << "failed"
      << std::setw(9) << "vacuous" << "\n";
  for (const auto& s : a["suites"]) {
    out << std::left << std::setw(24) << s["name"].get<std::string>() << std::right << std::setw(8)
        << s["passed"].dump() << std::setw(8) << s["failed"].dump() << std::setw(9) << s["vacuous"].dump() << "\n";
    for (const auto& f : s["failures"]) out << "    " << f.get<std::string>() << "\n";
  }
  if (!report["timing"].is_null()) out << "timing: " << report["timing"].dump() << "\n";
  return out.str();
}

Outcome dispatch(const std::string& cmd, const Options& opt) {
  if (cmd == "cech") return runCech(opt);
  if (cmd == "audit") return runAudit(opt);
  if (cmd == "oracle-check") return runOracleCheck(opt);

  Document d;
  try {
    d = parseDocument(readInput(opt.input), opt.factorCap);
  } catch (const ValidationError& e) {
    if (cmd != "validate") throw;
    Outcome o{kNegative, makeReport("validate", "invalid")};
    o.report["error"] = {{"index", e.index()}, {"path", e.path()}, {"message", e.what()}};
    return o;
  }
  if (cmd == "validate") return runValidate(d);
  if (cmd == "prime") return decide(cmd, d, false);
  if (cmd == "primary") return decide(cmd, d, true);
  if (cmd == "colon") return runColon(d);
  if (cmd == "ann") return runAnn(d);
  if (cmd == "zdiv") return runZdiv(d);
  if (cmd == "torsion") return runTorsion(d);
  if (cmd == "pure") return runPure(d);
  if (cmd == "maximal") return runMaximal(d);
  if (cmd == "saturate") return runSaturate(d, opt);
  if (cmd == "localize") return runLocalize(d, opt);
  if (cmd == "tensor") return runTensor(d, opt);
  if (cmd == "scale") return runScale(d, opt);
  if (cmd == "avoid") return runAvoid(d, opt);
  throw SchemaError("", "unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime and primary subcomplexes of complexes over Z[1/u]"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--factor-cap", opt.factorCap, "Trial-division bound for factoring")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
  app.add_flag("--timing", opt.timing, "Include wall-clock timing in the report");

  auto withInput = [&](CLI::App* sub) { sub->add_option("input", opt.input, "Input document (default: stdin)"); };
  const std::vector<std::pair<std::string, std::string>> plain{
      {"validate", "Parse and validate a document"},
      {"prime", "Decide whether the subcomplex is prime"},
      {"primary", "Decide whether the subcomplex is primary"},
      {"colon", "Colon ideals (S_i : C_i) and the residual (S : C)"},
      {"ann", "Annihilators of the components and of the complex"},
      {"zdiv", "Zero divisors of the components and of the complex"},
      {"torsion", "Torsion subcomplex"},
      {"pure", "Decide whether the subcomplex is pure"},
      {"maximal", "Decide whether the subcomplex is maximal"},
  };
  for (const auto& [n, desc] : plain) withInput(app.add_subcommand(n, desc));

  auto* sat = app.add_subcommand("saturate", "Saturate the subcomplex at a prime (0 allowed)");
  sat->add_option("--prime", opt.primeText, "Prime generator")->required();
  withInput(sat);
  auto* loc = app.add_subcommand("localize", "Invert an integer");
  loc->add_option("--invert", opt.invertText, "Integer to invert")->required();
  withInput(loc);
  auto* ten = app.add_subcommand("tensor", "Tensor with a free module R^k");
  ten->add_option("--rank", opt.rank, "k")->required()->check(CLI::PositiveNumber);
  withInput(ten);
  auto* sc = app.add_subcommand("scale", "The subcomplex mC for an ideal m");
  sc->add_option("--ideal", opt.idealText, "Ideal generator")->required();
  withInput(sc);
  auto* av = app.add_subcommand("avoid", "Prime avoidance for the family under \"avoid\"");
  av->add_flag("--per-degree", opt.perDegree, "Use the degreewise statement for the verdict");
  withInput(av);
  auto* ce = app.add_subcommand("cech", "Čech complex of Z for pairwise coprime elements");
  ce->add_option("--elements", opt.elements, "Comma-separated elements")->delimiter(',');
  ce->add_flag("--example", opt.example, "Include the worked 3, 5, 7 example");
  ce->add_option("input", opt.input, "Čech document with an optional subcomplex");
  auto* au = app.add_subcommand("audit", "Seeded property suites");
  au->add_option("--trials", opt.trials, "Trials per suite")->check(CLI::PositiveNumber);
  au->add_option("--seed", opt.seed, "Seed");
  au->add_option("--suite", opt.suiteNames, "Restrict to these suites");
  auto* oc = app.add_subcommand("oracle-check", "Compare fast deciders with brute force on finite modules");
  oc->add_option("--max-order", opt.maxOrder, "Largest module order")->check(CLI::PositiveNumber);
  oc->add_option("--subs", opt.subs, "Random submodules per module")->check(CLI::PositiveNumber);
  oc->add_option("--seed", opt.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out = dispatch(cmd, opt);
  } catch (const SchemaError& e) {
    out = {kInputError, makeReport(cmd, "input error")};
    out.report["error"] = {{"path", e.path()}, {"message", e.reason()}};
  } catch (const ValidationError& e) {
    out = {kInputError, makeReport(cmd, "input error")};
    out.report["error"] = {{"index", e.index()}, {"path", e.path()}, {"message", e.what()}};
  } catch (const AlgebraError& e) {
    out = {kInputError, makeReport(cmd, "input error")};
    out.report["error"] = {{"kind", name(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    out = {kBreach, makeReport(cmd, "internal error")};
    out.report["error"] = {{"message", e.what()}};
  }
  if (opt.timing) {
    out.report["timing"] = {
        {"ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
  }
  if (opt.format == "structured") std::cout << out.report.dump(2) << "\n";
  else if (cmd == "audit" && out.report.contains("audit")) std::cout << auditTable(out.report);
  else std::cout << renderHuman(out.report);
  return out.code;
}
