#include "primesub/audit.hpp"

#include "primesub/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace primesub {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

long draw(Rng& rng, long lo, long hi) {  // uniform-ish in [lo, hi]
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Row r += k * row s, mirrored on the inverse by column s -= k * column r.
void elementary(Matrix& U, Matrix& Uinv, std::size_t r, std::size_t s, long k) {
  for (std::size_t c = 0; c < U.cols(); ++c) U(r, c) += RingElem(k) * U(s, c);
  for (std::size_t c = 0; c < Uinv.rows(); ++c) Uinv(c, s) -= RingElem(k) * Uinv(c, r);
}

std::string describe(const Complex& C) {
  std::string s = "u=" + C.ctx().u().get_str() + " C=[";
  for (std::size_t k = 0; k < C.length(); ++k) s += (k ? ", " : "") + C.modules()[k].describe();
  return s + "]";
}

std::string describe(const Subcomplex& S) {
  std::string s = describe(S.parent()) + " S=[";
  for (std::size_t k = 0; k < S.parts().size(); ++k) {
    s += k ? ", " : "";
    std::string g;
    for (const auto& v : S.parts()[k].generators()) g += ModElem(S.parts()[k].ambient(), v).toString();
    s += g.empty() ? "0" : g;
  }
  return s + "]";
}

Vector randomMember(const Submodule& S, Rng& rng) {
  Vector v(S.ambient().dimension(), RingElem(0));
  for (const auto& g : S.generators()) axpy(v, RingElem(draw(rng, -2, 3)), g);
  return S.ambient().reduce(v);
}

Subcomplex withElements(const Subcomplex& S, Rng& rng, long maxCount) {
  const Complex& C = S.parent();
  std::vector<std::pair<long, Vector>> elems;
  const long n = draw(rng, 0, maxCount);
  for (long t = 0; t < n && C.length() > 0; ++t) {
    const long i = C.lo() + draw(rng, 0, static_cast<long>(C.length()) - 1);
    elems.emplace_back(i, randomElement(C.module(i), rng));
  }
  return S + generatedSubcomplex(C, elems);
}

bool allProperColons(const Subcomplex& S, const std::function<bool(const Ideal&)>& pred) {
  for (long i : properIndices(S))
    if (!pred(colon(S.part(i)))) return false;
  return true;
}

TrialOutcome pass() { return {}; }
TrialOutcome fail(std::string d) { return {TrialOutcome::Kind::Fail, std::move(d)}; }
TrialOutcome vacuous(std::string d) { return {TrialOutcome::Kind::Vacuous, std::move(d)}; }

const GenOptions kDefault{};

GenOptions torsionFreeOptions() {
  GenOptions o;
  o.torsionFree = true;
  return o;
}

Complex randomAnyComplex(Rng& rng) {
  GenOptions o;
  o.zeroDifferentials = rng() % 4 == 0;
  return randomComplex(rng, o);
}

// The whole module or a prime submodule at a prime that matters for M.
Submodule randomPrimePart(const FgModule& M, Rng& rng) {
  std::vector<Integer> primes;
  for (const auto& d : M.invariants())
    for (const auto& [q, e] : factor(d, M.ctx().factorCap()))
      if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
  if (M.freeRank() > 0) {
    primes.push_back(randomPrime(M.ctx(), rng));
    primes.push_back(0);
  }
  if (primes.empty() || rng() % 4 == 0) return Submodule::whole(M);
  const Integer q = primes[rng() % primes.size()];
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Vector> extra;
    for (long k = draw(rng, 0, 2); k > 0; --k) extra.push_back(randomElement(M, rng));
    Submodule P = q == 0 ? saturate(Submodule(M, extra), Ideal::zero()).result
                         : idealTimesModule(M, Ideal::fromCanonical(q)) + Submodule(M, extra);
    if (isPrimeSubmodule(P).verdict == Verdict::Prime) return P;
  }
  return Submodule::whole(M);
}

}  // namespace

std::uint64_t trialSeed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return splitmix(splitmix(seed ^ splitmix(stream + 1)) + trial);
}

bool hasZeroDifferentials(const Complex& C) {
  return std::all_of(C.diffs().begin(), C.diffs().end(), [](const ModuleMap& d) { return d.isZero(); });
}

Integer randomPrime(const RingCtx& ctx, Rng& rng) {
  std::vector<long> ps;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
    if (gcd(Integer(p), ctx.u()) == 1) ps.push_back(p);
  return ps[rng() % ps.size()];
}

Vector randomElement(const FgModule& M, Rng& rng, long freeBound) {
  Vector v(M.dimension());
  for (std::size_t j = 0; j < M.dimension(); ++j) {
    if (j < M.torsionRank()) {
      Integer r;
      mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(rng()));
      v[j] = RingElem(Integer(r % M.invariants()[j]));
    } else {
      v[j] = RingElem(draw(rng, -freeBound, freeBound));
    }
  }
  return v;
}

Complex randomComplex(Rng& rng, const GenOptions& o) {
  const RingCtx ctx(o.us[rng() % o.us.size()]);
  const std::size_t L = o.fixedLength ? o.fixedLength : 1 + rng() % o.maxLength;
  std::vector<std::vector<long>> pieces(L);
  // coeff[i][(b, a)]: d_i sends piece a of degree i to piece b of degree i-1.
  std::vector<std::map<std::pair<std::size_t, std::size_t>, long>> coeff(L);

  // Canonical invariants stay <= maxInvariant: the largest one is the lcm
  // of the torsion orders placed in that degree.
  std::vector<long> lcmAt(L, 1);
  auto cyclic = [&](std::size_t i) -> long {
    if (o.torsionFree || rng() % 3 == 0) return 0;
    for (int attempt = 0; attempt < 10; ++attempt) {
      const long d = draw(rng, 2, o.maxInvariant);
      const long l = std::lcm(lcmAt[i], d);
      if (l <= o.maxInvariant) {
        lcmAt[i] = l;
        return d;
      }
    }
    return 0;
  };
  // A coefficient c making R/(a) --×c--> R/(b) well defined.
  auto coefficient = [&](long a, long b) -> long {
    if (o.zeroDifferentials) return 0;
    if (b == 0) return a == 0 ? draw(rng, -4, 4) : 0;
    const long step = a == 0 ? 1 : b / std::gcd(a, b);
    return step * draw(rng, 0, b / step - 1);
  };
  auto add = [&](std::size_t i, long d) {
    pieces[i].push_back(d);
    return pieces[i].size() - 1;
  };

  const std::size_t bricks = 1 + rng() % o.maxBricks;
  for (std::size_t b = 0; b < bricks; ++b) {
    const std::size_t type = rng() % std::min<std::size_t>(3, L);
    if (type == 0) {
      const std::size_t i = rng() % L;
      add(i, cyclic(i));
    } else if (type == 1) {
      const std::size_t i = 1 + rng() % (L - 1);
      const long a = cyclic(i), c = cyclic(i - 1);
      const std::size_t top = add(i, a), bot = add(i - 1, c);
      coeff[i][{bot, top}] = coefficient(a, c);
    } else {
      const std::size_t i = 2 + rng() % (L - 2);
      const long a = cyclic(i), m = cyclic(i - 1), e = cyclic(i - 2);
      long c1 = 0, c2 = 0;
      for (int attempt = 0; attempt < 20; ++attempt) {
        c1 = coefficient(a, m);
        c2 = coefficient(m, e);
        const long comp = c1 * c2;
        if (e == 0 ? comp == 0 : comp % e == 0) break;
        c2 = 0;
      }
      const std::size_t x = add(i, a), y = add(i - 1, m), z = add(i - 2, e);
      coeff[i][{y, x}] = c1;
      coeff[i - 1][{z, y}] = c2;
    }
  }

  std::vector<Matrix> U(L), Uinv(L), rel(L);
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t m = pieces[i].size();
    U[i] = Matrix::identity(m);
    Uinv[i] = Matrix::identity(m);
    for (int t = 0; t < 3 && m > 1; ++t) {
      const std::size_t r = rng() % m;
      const std::size_t s = (r + 1 + rng() % (m - 1)) % m;
      elementary(U[i], Uinv[i], r, s, draw(rng, -2, 2));
    }
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < m; ++a) {
      if (pieces[i][a] == 0) continue;
      Vector col(m, RingElem(0));
      col[a] = RingElem(pieces[i][a]);
      cols.push_back(U[i].apply(col));
    }
    rel[i] = Matrix::fromColumns(cols, m);
  }
  std::vector<FgModule> modules;
  for (std::size_t i = 0; i < L; ++i) modules.push_back(FgModule::fromPresentation(ctx, rel[i]));
  std::vector<ModuleMap> diffs;
  for (std::size_t i = 1; i < L; ++i) {
    Matrix D(pieces[i - 1].size(), pieces[i].size());
    for (const auto& [key, c] : coeff[i]) D(key.first, key.second) = RingElem(c);
    const Matrix scrambled = U[i - 1] * D * Uinv[i];
    const Matrix canonical =
        modules[i - 1].presentation()->toCanonical * scrambled * modules[i].presentation()->fromCanonical;
    diffs.emplace_back(modules[i], modules[i - 1], canonical);
  }
  Complex C(ctx, 0, std::move(modules), std::move(diffs));
  if (auto v = validateComplex(C)) throw std::logic_error("randomComplex produced d^2 != 0: " + v->message);
  return C;
}

Subcomplex randomSubcomplex(const Complex& C, Rng& rng) {
  Subcomplex S = withElements(Subcomplex::zero(C), rng, 3);
  switch (rng() % 6) {
    case 0: S = S + scaleByIdeal(C, Ideal::fromCanonical(randomPrime(C.ctx(), rng))); break;
    case 1: S = S + torsionSubcomplex(C); break;
    case 2: S = S + scaleByIdeal(C, Ideal::generatedBy(draw(rng, 4, 12), C.ctx())); break;
    default: break;
  }
  return S;
}

std::optional<Subcomplex> randomProperSubcomplex(const Complex& C, Rng& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    Subcomplex S = randomSubcomplex(C, rng);
    if (!properIndices(S).empty()) return S;
  }
  return std::nullopt;
}

std::optional<Subcomplex> randomPrimeSubcomplex(const Complex& C, Rng& rng) {
  const bool zeroDiff = hasZeroDifferentials(C);
  for (int attempt = 0; attempt < 30; ++attempt) {
    std::optional<Subcomplex> S;
    switch (zeroDiff && rng() % 2 ? 3 : rng() % 3) {
      case 0:
        S = withElements(scaleByIdeal(C, Ideal::fromCanonical(randomPrime(C.ctx(), rng))), rng, 2);
        break;
      case 1:
        S = saturateSubcomplex(randomSubcomplex(C, rng), Ideal::zero()).result;
        break;
      case 2:
        S = torsionSubcomplex(C);
        break;
      default: {
        // Zero differentials: every degreewise choice is a subcomplex.
        std::vector<Submodule> parts;
        for (const auto& M : C.modules()) parts.push_back(randomPrimePart(M, rng));
        S = Subcomplex(C, std::move(parts));
      }
    }
    if (isPrimeSubcomplex(*S).verdict == Verdict::Prime) return S;
  }
  return std::nullopt;
}

// --- suites ------------------------------------------------------------------

namespace {

TrialOutcome summandTrial(Rng& rng) {
  GenOptions o = torsionFreeOptions();
  o.fixedLength = 1 + rng() % o.maxLength;
  o.us = {kDefault.us[rng() % kDefault.us.size()]};
  const Complex A = randomComplex(rng, o);
  const Complex B = randomComplex(rng, o);
  std::vector<FgModule> modules;
  for (std::size_t k = 0; k < A.length(); ++k)
    modules.push_back(FgModule::free(A.ctx(), A.modules()[k].dimension() + B.modules()[k].dimension()));
  std::vector<ModuleMap> diffs;
  for (std::size_t k = 1; k < A.length(); ++k) {
    const Matrix& a = A.diffs()[k - 1].matrix();
    const Matrix& b = B.diffs()[k - 1].matrix();
    Matrix D(modules[k - 1].dimension(), modules[k].dimension());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) D(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) D(a.rows() + r, a.cols() + c) = b(r, c);
    diffs.emplace_back(modules[k], modules[k - 1], D);
  }
  const Complex C(A.ctx(), 0, modules, diffs);
  std::vector<Submodule> parts;
  for (std::size_t k = 0; k < C.length(); ++k) {
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < A.modules()[k].dimension(); ++j) gens.push_back(modules[k].basisVector(j));
    parts.emplace_back(modules[k], gens);
  }
  const Subcomplex S(C, parts);
  if (auto v = validateSubcomplex(S)) return fail("summand is not a subcomplex: " + v->message);
  const Verdict verdict = isPrimeSubcomplex(S).verdict;
  if (verdict != Verdict::Prime && verdict != Verdict::NotProper)
    return fail(std::string("summand verdict ") + name(verdict) + " on " + describe(S));
  return pass();
}

TrialOutcome purityTrial(Rng& rng) {
  const Complex C = randomComplex(rng, torsionFreeOptions());
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::optional<Subcomplex> S;
    if (rng() % 2) S = randomProperSubcomplex(C, rng);
    else S = saturateSubcomplex(randomSubcomplex(C, rng), Ideal::zero()).result;
    if (!S || properIndices(*S).empty()) continue;
    if (!allProperColons(*S, [](const Ideal& I) { return I.isZero(); })) continue;
    const bool prime = isPrimeSubcomplex(*S).verdict == Verdict::Prime;
    const bool pure = isPureSubcomplex(*S, 12);
    if (prime != pure)
      return fail(std::string("prime=") + (prime ? "yes" : "no") + " pure=" + (pure ? "yes" : "no") + " on " +
                  describe(*S));
    return pass();
  }
  return vacuous("no proper subcomplex with zero colons");
}

TrialOutcome torsionTrial(Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Complex C = randomAnyComplex(rng);
    const Subcomplex T = torsionSubcomplex(C);
    if (T == Subcomplex::whole(C)) continue;
    const Verdict v = isPrimeSubcomplex(T).verdict;
    if (v != Verdict::Prime) return fail(std::string("torsion subcomplex ") + name(v) + " on " + describe(T));
    return pass();
  }
  return vacuous("torsion subcomplex was always the whole complex");
}

TrialOutcome primaryOverPrimeTrial(Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Complex C = randomAnyComplex(rng);
    const auto T = randomPrimeSubcomplex(C, rng);
    if (!T) continue;
    const Subcomplex S = withElements(*T, rng, 2);
    const PrimenessReport rs = isPrimarySubcomplex(S);
    if (rs.verdict != Verdict::Primary) continue;
    const PrimenessReport rt = isPrimeSubcomplex(*T);
    bool same = true;
    for (const auto& [i, P] : rs.perIndexIdeals) same = same && rt.perIndexIdeals.count(i) && rt.perIndexIdeals.at(i) == P;
    if (!same) continue;
    const Verdict v = isPrimeSubcomplex(S).verdict;
    if (v != Verdict::Prime) return fail(std::string("primary over prime gave ") + name(v) + " on " + describe(S));
    return pass();
  }
  return vacuous("no primary subcomplex over a prime with matching radicals");
}

TrialOutcome saturationTrial(Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Complex C = randomAnyComplex(rng);
    const bool zeroPrime = rng() % 2 == 0;
    const Ideal P = zeroPrime ? Ideal::zero() : Ideal::fromCanonical(randomPrime(C.ctx(), rng));
    std::optional<Subcomplex> S;
    if (zeroPrime) S = randomProperSubcomplex(C, rng);
    else S = withElements(scaleByIdeal(C, P), rng, 2);
    if (!S || properIndices(*S).empty()) continue;
    if (!allProperColons(*S, [&](const Ideal& I) { return I == P; })) continue;
    const SaturatedSubcomplex sat = saturateSubcomplex(*S, P);
    if (sat.hypothesisViolated) return fail("hypothesis flagged although every colon is " + P.toString());
    if (!sat.result.contains(*S)) return fail("saturation does not contain S on " + describe(*S));
    if (!(saturateSubcomplex(sat.result, P).result == sat.result)) return fail("saturation not idempotent");
    const PrimenessReport r = isPrimeSubcomplex(sat.result);
    if (r.verdict == Verdict::NotProper) return pass();
    if (r.verdict != Verdict::Prime) return fail(std::string("saturation ") + name(r.verdict) + " on " + describe(*S));
    for (const auto& [i, I] : r.perIndexIdeals)
      if (I != P) return fail("saturation colon " + I.toString() + " != " + P.toString() + " on " + describe(*S));
    return pass();
  }
  return vacuous("no subcomplex with a uniform prime colon");
}

TrialOutcome equivalenceTrial(Rng& rng) {
  const Complex C = randomComplex(rng, kDefault);
  const auto S = rng() % 2 ? randomPrimeSubcomplex(C, rng) : randomProperSubcomplex(C, rng);
  if (!S) return vacuous("no proper subcomplex");
  const bool prime = isPrimeSubcomplex(*S).verdict == Verdict::Prime;
  const auto trace = equivalenceAudit(*S, 20, rng());
  std::string bad;
  for (const auto& k : exactConditions())
    if (trace.at(k) != prime) bad += " (" + k + ")";
  if (prime)
    for (const auto& k : sampledConditions())
      if (!trace.at(k)) bad += " sampled(" + k + ")";
  if (!bad.empty()) return fail(std::string(prime ? "prime" : "not prime") + " but" + bad + " on " + describe(*S));
  return pass();
}

TrialOutcome maximalColonTrial(Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    GenOptions o;
    o.zeroDifferentials = rng() % 2 == 0;
    const Complex C = randomComplex(rng, o);
    Subcomplex S = Subcomplex::whole(C);
    if (hasZeroDifferentials(C)) {
      std::vector<Submodule> parts;
      for (const auto& M : C.modules()) {
        const Submodule P = idealTimesModule(M, Ideal::fromCanonical(randomPrime(C.ctx(), rng)));
        parts.push_back(rng() % 2 ? P + Submodule(M, {randomElement(M, rng)}) : P);
      }
      S = Subcomplex(C, parts);
    } else {
      S = withElements(scaleByIdeal(C, Ideal::fromCanonical(randomPrime(C.ctx(), rng))), rng, 2);
    }
    if (properIndices(S).empty()) continue;
    if (!allProperColons(S, [&](const Ideal& I) { return !I.isZero() && isPrimeIdeal(I, C.ctx()); })) continue;
    const Verdict v = isPrimeSubcomplex(S).verdict;
    if (v != Verdict::Prime) return fail(std::string("maximal colons but ") + name(v) + " on " + describe(S));
    return pass();
  }
  return vacuous("no subcomplex with maximal colons");
}

TrialOutcome maximalMultipleTrial(Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Complex C = randomAnyComplex(rng);
    const Subcomplex S = scaleByIdeal(C, Ideal::fromCanonical(randomPrime(C.ctx(), rng)));
    if (properIndices(S).empty()) continue;
    const Verdict v = isPrimeSubcomplex(S).verdict;
    if (v != Verdict::Prime) return fail(std::string("mC gave ") + name(v) + " on " + describe(S));
    return pass();
  }
  return vacuous("mC was always C");
}

TrialOutcome maximalOvercomplexTrial(Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Complex C = randomAnyComplex(rng);
    const Integer p = randomPrime(C.ctx(), rng);
    const Ideal P = Ideal::fromCanonical(p);
    // Characterization: S is P-prime at every proper index iff P C_i ⊆ S_i there.
    const auto X = randomProperSubcomplex(C, rng);
    if (X) {
      const PrimenessReport r = isPrimeSubcomplex(*X);
      bool pPrime = r.verdict == Verdict::Prime;
      for (const auto& [i, I] : r.perIndexIdeals) pPrime = pPrime && I == P;
      bool contains = true;
      for (long i : properIndices(*X)) contains = contains && X->part(i).contains(idealTimesModule(C.module(i), P));
      if (pPrime != contains) return fail("P-prime and P C ⊆ S disagree for P = " + P.toString() + " on " + describe(*X));
    }
    const Subcomplex S = withElements(scaleByIdeal(C, P), rng, 1);
    if (properIndices(S).empty()) continue;
    const Subcomplex T = withElements(S, rng, 2);
    if (properIndices(T).empty()) continue;
    const Verdict v = isPrimeSubcomplex(T).verdict;
    if (v != Verdict::Prime) return fail(std::string("subcomplex over an m-prime gave ") + name(v) + " on " + describe(T));
    return pass();
  }
  return vacuous("no proper overcomplex");
}

TrialOutcome maximalSubcomplexTrial(Rng& rng) {
  for (int attempt = 0; attempt < 30; ++attempt) {
    const Complex C = randomAnyComplex(rng);
    const Subcomplex S = withElements(scaleByIdeal(C, Ideal::fromCanonical(randomPrime(C.ctx(), rng))), rng, 3);
    if (!isMaximalSubcomplex(S)) continue;
    const PrimenessReport r = isPrimeSubcomplex(S);
    if (r.verdict != Verdict::Prime) return fail(std::string("maximal subcomplex ") + name(r.verdict) + " on " + describe(S));
    for (const auto& [i, I] : r.perIndexIdeals)
      if (I.isZero() || !isPrimeIdeal(I, C.ctx())) return fail("maximal subcomplex colon " + I.toString());
    return pass();
  }
  return vacuous("no maximal subcomplex found");
}

TrialOutcome freeStructureTrial(Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Complex F = randomComplex(rng, torsionFreeOptions());
    const Integer p = randomPrime(F.ctx(), rng);
    std::vector<std::vector<std::size_t>> sel;
    for (const auto& M : F.modules()) {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < M.dimension(); ++j)
        if (rng() % 2) s.push_back(j);
      sel.push_back(s);
    }
    try {
      const Subcomplex S = constructFreePrime(F, Ideal::fromCanonical(p), sel);
      const PrimenessReport r = isPrimeSubcomplex(S);
      if (r.verdict == Verdict::NotProper) return pass();
      if (r.verdict != Verdict::Prime) return fail(std::string("free construction gave ") + name(r.verdict) + " on " + describe(S));
      for (const auto& [i, I] : r.perIndexIdeals)
        if (I != Ideal::fromCanonical(p)) return fail("free construction colon " + I.toString() + " on " + describe(S));
      return pass();
    } catch (const AlgebraError& e) {
      if (e.kind() != ErrorKind::ClosureViolation) throw;
    }
  }
  return vacuous("no closed column selection");
}

TrialOutcome flatColonTrial(Rng& rng) {
  const Complex C = randomAnyComplex(rng);
  const Subcomplex S = randomSubcomplex(C, rng);
  const long i = C.lo() + static_cast<long>(rng() % C.length());
  const RingElem r(draw(rng, -20, 20));
  const FreeTensor ft = tensorWithFree(C.module(i), 1 + rng() % 3);
  const Submodule lhs = ft.embedSubmodule(colonByElement(S.part(i), r));
  const Submodule rhs = colonByElement(ft.embedSubmodule(S.part(i)), r);
  if (!(lhs == rhs)) return fail("F ⊗ (S : r) != (F ⊗ S : r) for r = " + r.toString() + " on " + describe(S));
  return pass();
}

TrialOutcome faithfullyFlatTrial(Rng& rng) {
  const Complex C = randomAnyComplex(rng);
  const auto S = rng() % 2 ? randomPrimeSubcomplex(C, rng) : std::optional<Subcomplex>(randomSubcomplex(C, rng));
  if (!S) return vacuous("no subcomplex");
  const std::size_t k = 1 + rng() % 3;
  const Verdict a = isPrimeSubcomplex(*S).verdict;
  const TensoredComplex t = tensorComplexWithFree(*S, k);
  const Verdict b = isPrimeSubcomplex(t.sub).verdict;
  if ((a == Verdict::Prime) != (b == Verdict::Prime) || (a == Verdict::NotProper) != (b == Verdict::NotProper))
    return fail(std::string(name(a)) + " vs " + name(b) + " after tensoring with R^" + std::to_string(k) + " on " +
                describe(*S));
  return pass();
}

TrialOutcome localizationTrial(Rng& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    const Complex C = randomAnyComplex(rng);
    const auto S = rng() % 2 ? randomPrimeSubcomplex(C, rng) : randomProperSubcomplex(C, rng);
    if (!S) continue;
    const Integer a = draw(rng, 1, 30);
    const LocalizedComplex L = localizeComplex(*S, a);
    if (!L.properFlag) continue;
    const Verdict x = isPrimeSubcomplex(*S).verdict;
    const Verdict y = isPrimeSubcomplex(L.sub).verdict;
    if ((x == Verdict::Prime) != (y == Verdict::Prime))
      return fail(std::string(name(x)) + " vs " + name(y) + " after inverting " + a.get_str() + " on " + describe(*S));
    return pass();
  }
  return vacuous("precondition never held");
}

struct AvoidanceInput {
  Subcomplex S;
  std::vector<Subcomplex> Ts;
};

std::optional<AvoidanceInput> avoidanceInput(Rng& rng) {
  GenOptions o;
  o.zeroDifferentials = rng() % 2 == 0;
  const Complex C = randomComplex(rng, o);
  const auto S = randomPrimeSubcomplex(C, rng);
  if (!S) return std::nullopt;
  const std::size_t n = 1 + rng() % 4;
  const bool zeroDiff = hasZeroDifferentials(C);
  auto inside = [&]() {  // random subcomplex of S
    std::vector<std::pair<long, Vector>> elems;
    for (long i = C.lo(); i <= C.hi(); ++i)
      if (rng() % 2) elems.emplace_back(i, randomMember(S->part(i), rng));
    return generatedSubcomplex(C, elems);
  };
  auto member = [&]() {
    if (zeroDiff && rng() % 2) {
      std::vector<Submodule> parts;
      for (long i = C.lo(); i <= C.hi(); ++i) {
        const FgModule& M = C.module(i);
        switch (rng() % 3) {
          case 0: parts.push_back(S->part(i)); break;
          case 1: parts.push_back(Submodule::whole(M)); break;
          default: parts.push_back(Submodule(M, {randomMember(S->part(i), rng), randomElement(M, rng)})); break;
        }
      }
      return Subcomplex(C, parts);
    }
    return withElements(inside(), rng, 2);
  };
  std::vector<Subcomplex> Ts;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Ts.clear();
    for (std::size_t k = 0; k < n; ++k) Ts.push_back(member());
    Subcomplex meet = Ts.front();
    for (std::size_t k = 1; k < n; ++k) meet = intersect(meet, Ts[k]);
    if (S->contains(meet)) return AvoidanceInput{*S, Ts};
  }
  Ts.back() = intersect(Ts.back(), *S);
  return AvoidanceInput{*S, Ts};
}

TrialOutcome avoidanceOutcome(const AvoidanceInput& in, const AvoidanceResult& r) {
  switch (r.kind) {
    case AvoidanceResult::Kind::Holds: return pass();
    case AvoidanceResult::Kind::TheoremViolation: {
      std::string ts;
      for (const auto& T : in.Ts) ts += " T:" + describe(T).substr(describe(T).find(" S=") + 3);
      return fail("violation: " + r.detail + " on " + describe(in.S) + ts);
    }
    default: return fail(std::string("generator produced ") + name(r.kind) + ": " + r.detail);
  }
}

TrialOutcome avoidanceTrial(Rng& rng) {
  const auto in = avoidanceInput(rng);
  if (!in) return vacuous("no prime subcomplex");
  return avoidanceOutcome(*in, primeAvoidance(in->Ts, in->S));
}

TrialOutcome avoidancePerDegreeTrial(Rng& rng) {
  const auto in = avoidanceInput(rng);
  if (!in) return vacuous("no prime subcomplex");
  return avoidanceOutcome(*in, primeAvoidancePerIndex(in->Ts, in->S));
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"summand", "the summand A of a torsion-free A ⊕ B is prime or the whole complex", summandTrial},
      {"purity", "torsion-free C, zero colons: prime iff pure", purityTrial},
      {"torsion", "T(C) != C implies T(C) is prime", torsionTrial},
      {"primary-over-prime", "a primary subcomplex over a prime one with equal radicals is prime", primaryOverPrimeTrial},
      {"saturation", "saturation at a uniform prime colon is prime with that colon", saturationTrial},
      {"equivalence", "exact characterizations of primeness agree; samples never refute", equivalenceTrial},
      {"maximal-colon", "maximal colons at every proper degree imply prime", maximalColonTrial},
      {"maximal-multiple", "mC != C is prime for a maximal ideal m", maximalMultipleTrial},
      {"maximal-overcomplex", "m-prime iff mC ⊆ S; proper overcomplexes of m-primes are prime", maximalOvercomplexTrial},
      {"maximal-subcomplex", "maximal subcomplexes are prime with maximal colons", maximalSubcomplexTrial},
      {"free-structure", "saturating N + pF in a free complex gives a p-prime", freeStructureTrial},
      {"flat-colon", "F ⊗ (S : r) = (F ⊗ S : r) for free F", flatColonTrial},
      {"faithfully-flat", "S prime iff F ⊗ S prime for F = R^k", faithfullyFlatTrial},
      {"localization", "with coprime quotient invariants, localization preserves and reflects primeness",
       localizationTrial},
      {"avoidance", "prime avoidance with complex-level residuals", avoidanceTrial},
      {"avoidance-per-degree", "prime avoidance degree by degree", avoidancePerDegreeTrial},
  };
  return all;
}

const SuiteInfo* findSuite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

SuiteResult runTrials(const SuiteInfo& suite, std::uint64_t seed, std::size_t maxTrials, std::size_t effective) {
  const auto& all = suites();
  const auto stream = static_cast<std::uint64_t>(&suite - all.data());
  SuiteResult res;
  res.name = suite.name;
  for (std::size_t t = 0; t < maxTrials && res.passed + res.failed < effective; ++t) {
    Rng rng(trialSeed(seed, stream, t));
    TrialOutcome out;
    try {
      out = suite.trial(rng);
    } catch (const AlgebraError& e) {
      out = fail(std::string("error ") + name(e.kind()) + ": " + e.what());
    }
    ++res.trials;
    switch (out.kind) {
      case TrialOutcome::Kind::Pass: ++res.passed; break;
      case TrialOutcome::Kind::Vacuous: ++res.vacuous; break;
      case TrialOutcome::Kind::Fail:
        ++res.failed;
        if (res.failures.size() < 5) res.failures.push_back("trial " + std::to_string(t) + ": " + out.detail);
        break;
    }
  }
  return res;
}

}  // namespace

SuiteResult runSuite(const SuiteInfo& suite, std::size_t trials, std::uint64_t seed) {
  return runTrials(suite, seed, trials, trials);
}

SuiteResult runSuiteEffective(const SuiteInfo& suite, std::size_t effective, std::uint64_t seed) {
  return runTrials(suite, seed, 4 * effective, effective);
}

bool AuditReport::allPassed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

AuditReport runAudit(std::size_t trials, std::uint64_t seed, const std::vector<std::string>& names) {
  AuditReport report;
  report.seed = seed;
  report.trials = trials;
  for (const auto& s : suites()) {
    if (!names.empty() && std::find(names.begin(), names.end(), s.name) == names.end()) continue;
    report.suites.push_back(runSuite(s, trials, seed));
  }
  return report;
}

Submodule randomFiniteSubmodule(const FgModule& M, Rng& rng) {
  std::vector<Vector> gens;
  for (long k = draw(rng, 0, 3); k > 0; --k) gens.push_back(randomElement(M, rng));
  Submodule S(M, gens);
  if (rng() % 3 == 0 && M.order() > 1) {
    const auto primes = factor(M.order(), M.ctx().factorCap());
    S = S + idealTimesModule(M, Ideal::fromCanonical(primes[rng() % primes.size()].first));
  }
  return S;
}

OracleSweep oracleSweep(long maxOrder, std::size_t subsPerModule, std::uint64_t seed) {
  OracleSweep out;
  const auto modules = finiteModulesUpTo(maxOrder, RingCtx(1));
  out.modules = modules.size();
  for (std::size_t m = 0; m < modules.size(); ++m) {
    Rng rng(trialSeed(seed, 1000, m));
    for (std::size_t t = 0; t < subsPerModule; ++t) {
      const Submodule S = randomFiniteSubmodule(modules[m], rng);
      const Submodule T = randomFiniteSubmodule(modules[m], rng);
      const auto lines = compareWithOracle(S, &T);
      ++out.cases;
      if (lines.empty()) continue;
      ++out.mismatchedCases;
      for (const auto& l : lines)
        if (out.mismatches.size() < 10) out.mismatches.push_back(modules[m].describe() + ": " + l);
    }
  }
  return out;
}

}  // namespace primesub
