#include "primesub/complex.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace primesub {

// --- Complex / Subcomplex ----------------------------------------------------

Complex::Complex(RingCtx ctx, long lo, std::vector<FgModule> modules, std::vector<ModuleMap> diffs)
    : ctx_(std::move(ctx)), lo_(lo), modules_(std::move(modules)), diffs_(std::move(diffs)) {
  const std::size_t expected = modules_.empty() ? 0 : modules_.size() - 1;
  if (diffs_.size() != expected) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "complex with " + std::to_string(modules_.size()) +
                                                     " modules needs " + std::to_string(expected) + " differentials");
  }
  for (const auto& M : modules_)
    if (!(M.ctx() == ctx_)) throw AlgebraError(ErrorKind::ShapeMismatch, "complex components over different rings");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].domain() != modules_[k + 1] || diffs_[k].codomain() != modules_[k]) {
      throw AlgebraError(ErrorKind::ShapeMismatch,
                         "differential d_" + std::to_string(lo_ + static_cast<long>(k) + 1) + " has wrong (co)domain");
    }
  }
}

Complex Complex::concentrated(const FgModule& M, long degree) { return Complex(M.ctx(), degree, {M}, {}); }

const FgModule& Complex::module(long i) const {
  if (!inWindow(i)) throw AlgebraError(ErrorKind::InvalidArgument, "degree " + std::to_string(i) + " outside window");
  return modules_[static_cast<std::size_t>(i - lo_)];
}

const ModuleMap& Complex::diff(long i) const {
  if (i <= lo_ || i > hi()) throw AlgebraError(ErrorKind::InvalidArgument, "no differential d_" + std::to_string(i));
  return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

bool operator==(const Complex& a, const Complex& b) {
  if (!(a.ctx_ == b.ctx_) || a.lo_ != b.lo_ || a.modules_ != b.modules_) return false;
  for (std::size_t k = 0; k < a.diffs_.size(); ++k)
    if (!(a.diffs_[k].matrix() == b.diffs_[k].matrix())) return false;
  return true;
}

Subcomplex::Subcomplex(Complex parent, std::vector<Submodule> parts) : parent_(std::move(parent)), parts_(std::move(parts)) {
  if (parts_.size() != parent_.length())
    throw AlgebraError(ErrorKind::ShapeMismatch, "subcomplex must have one part per degree of the window");
  for (std::size_t k = 0; k < parts_.size(); ++k)
    if (parts_[k].ambient() != parent_.modules()[k])
      throw AlgebraError(ErrorKind::ShapeMismatch, "subcomplex part is not a submodule of the matching component");
}

Subcomplex Subcomplex::zero(const Complex& C) {
  std::vector<Submodule> parts;
  for (const auto& M : C.modules()) parts.push_back(Submodule::zero(M));
  return Subcomplex(C, std::move(parts));
}

Subcomplex Subcomplex::whole(const Complex& C) {
  std::vector<Submodule> parts;
  for (const auto& M : C.modules()) parts.push_back(Submodule::whole(M));
  return Subcomplex(C, std::move(parts));
}

const Submodule& Subcomplex::part(long i) const {
  if (!parent_.inWindow(i)) throw AlgebraError(ErrorKind::InvalidArgument, "degree " + std::to_string(i) + " outside window");
  return parts_[static_cast<std::size_t>(i - parent_.lo())];
}

bool Subcomplex::contains(const Subcomplex& other) const {
  if (other.parts_.size() != parts_.size()) return false;
  for (std::size_t k = 0; k < parts_.size(); ++k)
    if (!parts_[k].contains(other.parts_[k])) return false;
  return true;
}

Subcomplex Subcomplex::operator+(const Subcomplex& other) const {
  std::vector<Submodule> parts;
  for (std::size_t k = 0; k < parts_.size(); ++k) parts.push_back(parts_[k] + other.parts_.at(k));
  return Subcomplex(parent_, std::move(parts));
}

std::optional<Violation> validateComplex(const Complex& C) {
  for (long n = C.lo() + 1; n < C.hi(); ++n) {
    const ModuleMap& dn = C.diff(n);
    const ModuleMap& dn1 = C.diff(n + 1);
    const FgModule& top = C.module(n + 1);
    for (std::size_t j = 0; j < top.dimension(); ++j) {
      const Vector e = top.basisVector(j);
      if (!isZeroVector(dn.apply(dn1.apply(e)))) {
        return Violation{n, e, "d_" + std::to_string(n) + " d_" + std::to_string(n + 1) + " != 0 on basis vector " +
                                   std::to_string(j) + " of degree " + std::to_string(n + 1)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> validateSubcomplex(const Subcomplex& S) {
  const Complex& C = S.parent();
  for (long i = C.lo() + 1; i <= C.hi(); ++i) {
    for (const auto& g : S.part(i).generators()) {
      const Vector image = C.diff(i).apply(g);
      if (!S.part(i - 1).contains(image)) {
        return Violation{i, g, "d_" + std::to_string(i) + " maps a generator of S_" + std::to_string(i) +
                                   " outside S_" + std::to_string(i - 1)};
      }
    }
  }
  return std::nullopt;
}

Subcomplex generatedSubcomplex(const Complex& C, const std::vector<std::pair<long, Vector>>& elements) {
  std::vector<std::vector<Vector>> gens(C.length());
  for (const auto& [i, v] : elements) gens.at(static_cast<std::size_t>(i - C.lo())).push_back(v);
  for (long i = C.hi(); i > C.lo(); --i) {
    auto& below = gens[static_cast<std::size_t>(i - 1 - C.lo())];
    for (const auto& g : gens[static_cast<std::size_t>(i - C.lo())]) below.push_back(C.diff(i).apply(g));
  }
  std::vector<Submodule> parts;
  for (std::size_t k = 0; k < C.length(); ++k) parts.emplace_back(C.modules()[k], gens[k]);
  return Subcomplex(C, std::move(parts));
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
  std::vector<Submodule> parts;
  for (std::size_t k = 0; k < a.parts().size(); ++k) parts.push_back(intersect(a.parts()[k], b.parts().at(k)));
  return Subcomplex(a.parent(), std::move(parts));
}

std::vector<long> properIndices(const Subcomplex& S) {
  std::vector<long> out;
  for (long i = S.parent().lo(); i <= S.parent().hi(); ++i)
    if (!S.part(i).isWhole()) out.push_back(i);
  return out;
}

// --- deciders ----------------------------------------------------------------

namespace {

PrimenessReport decide(const Subcomplex& S, bool primary) {
  PrimenessReport report;
  const auto proper = properIndices(S);
  if (proper.empty()) {
    report.verdict = Verdict::NotProper;
    return report;
  }
  report.verdict = primary ? Verdict::Primary : Verdict::Prime;
  for (long i : proper) {
    PrimenessReport local = primary ? isPrimarySubmodule(S.part(i)) : isPrimeSubmodule(S.part(i));
    if (local.affirmative()) {
      report.perIndexIdeals[i] = local.perIndexIdeals.at(0);
      continue;
    }
    const Ideal c = colon(S.part(i));
    report.perIndexIdeals[i] = primary ? radical(c, S.parent().ctx()) : c;
    if (!report.witness) {
      report.verdict = primary ? Verdict::NotPrimary : Verdict::NotPrime;
      Witness w = *local.witness;
      w.index = i;
      w.replay += "_" + std::to_string(i);
      report.witness = std::move(w);
    }
  }
  return report;
}

}  // namespace

PrimenessReport isPrimeSubcomplex(const Subcomplex& S) { return decide(S, false); }

PrimenessReport isPrimarySubcomplex(const Subcomplex& S) { return decide(S, true); }

Ideal residual(const Subcomplex& S) {
  std::vector<Ideal> colons{Ideal::unit()};
  for (const auto& part : S.parts()) colons.push_back(colon(part));
  return idealIntersection(colons, S.parent().ctx());
}

PrimeSet zeroDivisorsOfComplex(const Complex& C) {
  PrimeSet out;
  if (C.length() == 0) return out;
  bool first = true;
  bool allNonzero = true;
  for (const auto& M : C.modules()) {
    if (M.isZero()) return PrimeSet{};
    const PrimeSet z = zeroDivisors(M);
    if (first) {
      out.primes = z.primes;
      first = false;
    } else {
      std::vector<Integer> common;
      std::set_intersection(out.primes.begin(), out.primes.end(), z.primes.begin(), z.primes.end(),
                            std::back_inserter(common));
      out.primes = std::move(common);
    }
    allNonzero = allNonzero && !M.isZero();
  }
  out.includesZero = allNonzero;
  return out;
}

Ideal annihilatorOfComplex(const Complex& C) {
  std::vector<Ideal> anns{Ideal::unit()};
  for (const auto& M : C.modules()) anns.push_back(colon(Submodule::zero(M)));
  return idealIntersection(anns, C.ctx());
}

Subcomplex torsionSubcomplex(const Complex& C) {
  std::vector<Submodule> parts;
  for (const auto& M : C.modules()) parts.push_back(torsionSubmodule(M));
  Subcomplex T(C, std::move(parts));
  if (auto v = validateSubcomplex(T)) throw AlgebraError(ErrorKind::ClosureViolation, "torsion subcomplex: " + v->message);
  return T;
}

bool isPureSubcomplex(const Subcomplex& S, unsigned testBound) {
  for (long i : properIndices(S))
    if (!isPureSubmodule(S.part(i), testBound)) return false;
  return true;
}

bool isMaximalSubcomplex(const Subcomplex& S) {
  const auto proper = properIndices(S);
  if (proper.empty()) return false;
  for (long i : proper) {
    const FgModule Q = quotient(S.part(i)).module;
    if (Q.freeRank() != 0 || Q.torsionRank() != 1) return false;
    if (!isPrimeIdeal(Ideal::fromCanonical(Q.invariants().front()), S.parent().ctx())) return false;
  }
  return true;
}

Subcomplex scaleByIdeal(const Complex& C, const Ideal& m) {
  std::vector<Submodule> parts;
  for (const auto& M : C.modules()) parts.push_back(idealTimesModule(M, m));
  return Subcomplex(C, std::move(parts));
}

TensoredComplex tensorComplexWithFree(const Subcomplex& S, std::size_t k) {
  const Complex& C = S.parent();
  std::vector<FreeTensor> tensors;
  std::vector<FgModule> modules;
  for (const auto& M : C.modules()) {
    tensors.push_back(tensorWithFree(M, k));
    modules.push_back(tensors.back().module);
  }
  std::vector<ModuleMap> diffs;
  for (std::size_t idx = 1; idx < modules.size(); ++idx) {
    const Matrix& d = C.diffs()[idx - 1].matrix();
    Matrix big(modules[idx - 1].dimension(), modules[idx].dimension());
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t a = 0; a < d.rows(); ++a)
        for (std::size_t b = 0; b < d.cols(); ++b)
          big(tensors[idx - 1].position(a, c), tensors[idx].position(b, c)) = d(a, b);
    diffs.emplace_back(modules[idx], modules[idx - 1], std::move(big));
  }
  Complex FC(C.ctx(), C.lo(), modules, std::move(diffs));
  std::vector<Submodule> parts;
  for (std::size_t idx = 0; idx < modules.size(); ++idx) parts.push_back(tensors[idx].embedSubmodule(S.parts()[idx]));
  Subcomplex FS(FC, std::move(parts));
  return {std::move(FC), std::move(FS)};
}

LocalizedComplex localizeComplex(const Subcomplex& S, const Integer& a) {
  const Complex& C = S.parent();
  std::vector<Localization> locs;
  std::vector<FgModule> modules;
  for (const auto& M : C.modules()) {
    locs.push_back(localizeModule(M, a));
    modules.push_back(locs.back().module);
  }
  const RingCtx ctx = C.ctx().localizedAt(a);
  std::vector<ModuleMap> diffs;
  for (std::size_t idx = 1; idx < modules.size(); ++idx) {
    Matrix m = locs[idx - 1].baseChange * C.diffs()[idx - 1].matrix() * locs[idx].baseChange.transpose();
    diffs.emplace_back(modules[idx], modules[idx - 1], std::move(m));
  }
  Complex LC(ctx, C.lo(), modules, std::move(diffs));
  std::vector<Submodule> parts;
  for (std::size_t idx = 0; idx < modules.size(); ++idx) parts.push_back(locs[idx].pushSubmodule(S.parts()[idx]));
  Subcomplex LS(LC, std::move(parts));

  bool flag = true;
  for (long i : properIndices(S)) {
    const FgModule Q = quotient(S.part(i)).module;
    for (const auto& d : Q.invariants())
      if (gcd(d, a) != 1) flag = false;
  }
  return {std::move(LC), std::move(LS), flag};
}

SaturatedSubcomplex saturateSubcomplex(const Subcomplex& S, const Ideal& p) {
  const RingCtx& ctx = S.parent().ctx();
  if (!isPrimeIdeal(p, ctx)) throw AlgebraError(ErrorKind::IdealNotPrime, "saturate: " + p.toString() + " is not prime");
  bool violated = false;
  for (long i : properIndices(S)) {
    const Ideal c = colon(S.part(i));
    if (!isPrimeIdeal(c, ctx) || !p.contains(c)) violated = true;
  }
  std::vector<Submodule> parts;
  bool allWhole = true;
  for (const auto& part : S.parts()) {
    Saturation sat = saturate(part, p);
    allWhole = allWhole && sat.notProper;
    parts.push_back(std::move(sat.result));
  }
  Subcomplex result(S.parent(), std::move(parts));
  if (auto v = validateSubcomplex(result))
    throw AlgebraError(ErrorKind::ClosureViolation, "saturation is not a subcomplex: " + v->message);
  return {std::move(result), violated, allWhole};
}

Subcomplex constructFreePrime(const Complex& F, const Ideal& p, const std::vector<std::vector<std::size_t>>& selectors) {
  for (const auto& M : F.modules())
    if (M.torsionRank() != 0) throw AlgebraError(ErrorKind::NotFree, "constructFreePrime: component " + M.describe() + " is not free");
  if (p.isZero() || !isPrimeIdeal(p, F.ctx()))
    throw AlgebraError(ErrorKind::IdealNotPrime, "constructFreePrime: need a nonzero prime, got " + p.toString());
  if (selectors.size() != F.length())
    throw AlgebraError(ErrorKind::ShapeMismatch, "constructFreePrime: one selector list per degree required");
  std::vector<Submodule> parts;
  for (std::size_t k = 0; k < F.length(); ++k) {
    const FgModule& M = F.modules()[k];
    std::vector<Vector> gens;
    for (std::size_t c : selectors[k]) {
      if (c >= M.dimension()) throw AlgebraError(ErrorKind::InvalidArgument, "constructFreePrime: column out of range");
      gens.push_back(M.basisVector(c));
    }
    for (std::size_t j = 0; j < M.dimension(); ++j) gens.push_back(scaled(M.basisVector(j), RingElem(p.gen())));
    parts.emplace_back(M, gens);
  }
  Subcomplex T(F, std::move(parts));
  if (auto v = validateSubcomplex(T)) throw AlgebraError(ErrorKind::ClosureViolation, "constructFreePrime: " + v->message);
  return saturateSubcomplex(T, p).result;
}

// --- equivalence audit -------------------------------------------------------

const std::vector<std::string>& exactConditions() {
  static const std::vector<std::string> keys{"1", "2", "4", "6", "8", "9", "10"};
  return keys;
}

const std::vector<std::string>& sampledConditions() {
  static const std::vector<std::string> keys{"3", "5", "7", "11"};
  return keys;
}

namespace {

std::vector<Integer> primesOf(const std::vector<Integer>& values, const RingCtx& ctx) {
  std::set<Integer> s;
  for (const auto& v : values)
    if (v > 1)
      for (const auto& [p, e] : factor(v, ctx.factorCap())) s.insert(p);
  return {s.begin(), s.end()};
}

std::vector<Integer> properDivisors(const Integer& g, const RingCtx& ctx) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factor(g, ctx.factorCap())) {
    const std::size_t n = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.pop_back();  // g itself
  return divs;
}

Vector randomElement(const FgModule& M, std::mt19937_64& rng) {
  Vector v(M.dimension());
  for (std::size_t j = 0; j < M.dimension(); ++j) {
    if (j < M.torsionRank()) {
      const unsigned long d = M.invariants()[j].get_ui();
      v[j] = RingElem(static_cast<long>(rng() % d));
    } else {
      v[j] = RingElem(static_cast<long>(rng() % 7) - 3);
    }
  }
  return v;
}

struct IndexAudit {
  std::map<std::string, bool> holds;
};

}  // namespace

std::map<std::string, bool> equivalenceAudit(const Subcomplex& S, unsigned sampleBudget, std::uint64_t seed) {
  const Complex& C = S.parent();
  const RingCtx& ctx = C.ctx();
  std::mt19937_64 rng(seed);
  std::map<std::string, bool> trace;
  for (const auto& k : exactConditions()) trace[k] = true;
  for (const auto& k : sampledConditions()) trace[k] = true;
  const unsigned budget = std::max(1u, sampleBudget);
  constexpr int kRandomSamples = 6;

  for (long i : properIndices(S)) {
    const Submodule& Si = S.part(i);
    const FgModule& Ci = C.module(i);
    const Quotient q = quotient(Si);
    const FgModule& Q = q.module;
    const Ideal P = colon(Si);
    const std::vector<Integer> crit = primesOf(Q.invariants(), ctx);

    // Elements of C_i outside S_i that realize every annihilator occurring in C_i/S_i.
    std::vector<Vector> critical;
    for (std::size_t j = 0; j < Q.dimension(); ++j) {
      critical.push_back(Ci.reduce(q.liftBasis(j)));
      if (j < Q.torsionRank()) {
        for (const auto& p : primesOf({Q.invariants()[j]}, ctx)) {
          critical.push_back(Ci.reduce(scaled(q.liftBasis(j), RingElem(Integer(Q.invariants()[j] / p)))));
        }
      }
    }

    // (1) prime submodule at this index.
    if (isPrimeSubmodule(Si).verdict != Verdict::Prime) trace["1"] = false;

    // (2) C_i/S_i torsion-free over R/P: no q ∉ P kills a nonzero element.
    for (const auto& p : crit) {
      if (P.contains(RingElem(p))) continue;
      for (std::size_t j = 0; j < Q.torsionRank(); ++j) {
        const Integer& d = Q.invariants()[j];
        const Integer g = gcd(d, p);
        if (g == 1) continue;
        const ModElem x(Q, scaled(Q.basisVector(j), RingElem(Integer(d / g))));
        if (!x.isZero() && x.scaledBy(RingElem(p)).isZero()) trace["2"] = false;
      }
    }

    // (4) (S_i : r) = S_i for r ∉ P.
    {
      std::vector<Integer> rs = crit;
      for (long r = 1; r <= 20; ++r) rs.emplace_back(r);
      for (const auto& r : rs) {
        if (P.contains(RingElem(r))) continue;
        if (colonByElement(Si, RingElem(r)) != Si) {
          trace["4"] = false;
          break;
        }
      }
    }

    // (6) (S_i : m) = P for m ∉ S_i.
    for (const auto& m : critical) {
      if (annihilatorOfElement(ModElem(Q, q.project(m))) != P) trace["6"] = false;
    }

    // (8) Ass(C_i/S_i) = {P}.
    if (!associatedPrimes(Q).isSingleton(P)) trace["8"] = false;

    // (9) Z(C_i/S_i) = P as sets of ring elements.
    if (!zeroDivisors(Q).equalsAsElementSet(P)) trace["9"] = false;

    // (10) every nonzero cyclic submodule of C_i/S_i has annihilator P.
    for (const auto& m : critical) {
      const Submodule T = Si + Submodule(Ci, {m});
      if (colonOf(Si, T) != P) trace["10"] = false;
    }

    // Sampled witnesses: subcomplexes T ⊋ S generated by one element at this
    // index, and principal ideals J.
    std::vector<Subcomplex> Ts;
    for (const auto& m : critical) Ts.push_back(S + generatedSubcomplex(C, {{i, m}}));
    for (int s = 0; s < kRandomSamples; ++s) Ts.push_back(S + generatedSubcomplex(C, {{i, randomElement(Ci, rng)}}));

    std::vector<Integer> Js = crit;
    if (!P.isZero()) {
      for (const auto& d : properDivisors(P.gen(), ctx)) Js.push_back(d);
      Js.push_back(P.gen());
    }
    for (int s = 0; s < kRandomSamples; ++s) Js.emplace_back(static_cast<unsigned long>(rng() % (budget + 1)));

    for (const auto& j : Js) {
      const Ideal J = Ideal::generatedBy(j, ctx);
      // (3) J T_i ⊆ S_i implies T_i ⊆ S_i or J ⊆ P.
      for (const auto& T : Ts) {
        const Submodule& Ti = T.part(i);
        if (Si.contains(scaleSubmodule(Ti, RingElem(J.gen()))) && !Si.contains(Ti) && !P.contains(J)) trace["3"] = false;
      }
      // (5) (S_i : J) = S_i for J ⊄ P.
      if (!P.contains(J) && colonByIdeal(Si, J) != Si) trace["5"] = false;
      // (11) P ⊊ J and S_i ⊊ T_i imply J T_i ⊄ S_i.
      if (J.contains(P) && J != P) {
        for (const auto& T : Ts) {
          const Submodule& Ti = T.part(i);
          if (Ti != Si && Si.contains(scaleSubmodule(Ti, RingElem(J.gen())))) trace["11"] = false;
        }
      }
    }
    // (7) (S_i : N_i) = P whenever S ⊆ N and N_i ≠ S_i.
    for (const auto& T : Ts) {
      if (T.part(i) != Si && colonOf(Si, T.part(i)) != P) trace["7"] = false;
    }
  }
  return trace;
}

// --- prime avoidance ---------------------------------------------------------

const char* name(AvoidanceResult::Kind k) {
  switch (k) {
    case AvoidanceResult::Kind::Holds: return "Holds";
    case AvoidanceResult::Kind::InclusionFailure: return "InclusionFailure";
    case AvoidanceResult::Kind::NotPrime: return "NotPrime";
    case AvoidanceResult::Kind::TheoremViolation: return "TheoremViolation";
  }
  return "?";
}

namespace {

std::optional<AvoidanceResult> checkHypotheses(const std::vector<Subcomplex>& Ts, const Subcomplex& S) {
  if (Ts.empty()) throw AlgebraError(ErrorKind::InvalidArgument, "primeAvoidance: empty family");
  for (const auto& T : Ts)
    if (!(T.parent() == S.parent())) throw AlgebraError(ErrorKind::ShapeMismatch, "primeAvoidance: different parents");
  const PrimenessReport rep = isPrimeSubcomplex(S);
  if (rep.verdict != Verdict::Prime) {
    AvoidanceResult r;
    r.kind = AvoidanceResult::Kind::NotPrime;
    r.detail = std::string("S is not prime: ") + name(rep.verdict);
    return r;
  }
  Subcomplex meet = Ts.front();
  for (std::size_t k = 1; k < Ts.size(); ++k) meet = intersect(meet, Ts[k]);
  const Complex& C = S.parent();
  for (long i = C.lo(); i <= C.hi(); ++i) {
    for (const auto& g : meet.part(i).generators()) {
      if (!S.part(i).contains(g)) {
        AvoidanceResult r;
        r.kind = AvoidanceResult::Kind::InclusionFailure;
        r.index = i;
        r.element = g;
        r.detail = "intersection element " + ModElem(C.module(i), g).toString() + " not in S_" + std::to_string(i);
        return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

AvoidanceResult primeAvoidance(const std::vector<Subcomplex>& Ts, const Subcomplex& S) {
  if (auto early = checkHypotheses(Ts, S)) return *early;
  const Ideal rs = residual(S);
  for (std::size_t k = 0; k < Ts.size(); ++k) {
    AvoidanceResult r;
    r.which = k + 1;
    if (S.contains(Ts[k])) {
      r.viaContainment = true;
      r.detail = "T_" + std::to_string(k + 1) + " ⊆ S";
      return r;
    }
    const Ideal rt = residual(Ts[k]);
    if (rs.contains(rt)) {
      r.detail = "(T_" + std::to_string(k + 1) + ":C) = " + rt.toString() + " ⊆ (S:C) = " + rs.toString();
      return r;
    }
  }
  AvoidanceResult v;
  v.kind = AvoidanceResult::Kind::TheoremViolation;
  v.detail = "no T_i is contained in S and no (T_i:C) is contained in (S:C) = " + rs.toString();
  return v;
}

AvoidanceResult primeAvoidancePerIndex(const std::vector<Subcomplex>& Ts, const Subcomplex& S) {
  if (auto early = checkHypotheses(Ts, S)) return *early;
  AvoidanceResult out;
  for (long i : properIndices(S)) {
    const Ideal ps = colon(S.part(i));
    std::size_t found = 0;
    for (std::size_t k = 0; k < Ts.size() && !found; ++k) {
      if (S.part(i).contains(Ts[k].part(i)) || ps.contains(colon(Ts[k].part(i)))) found = k + 1;
    }
    if (!found) {
      AvoidanceResult v;
      v.kind = AvoidanceResult::Kind::TheoremViolation;
      v.index = i;
      v.detail = "degree " + std::to_string(i) + ": no T_k avoids S_" + std::to_string(i);
      return v;
    }
    if (!out.which) out.which = found;
  }
  if (!out.which) out.which = 1;
  out.detail = "every proper degree has an avoiding member";
  return out;
}

}  // namespace primesub
