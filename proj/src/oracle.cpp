#include "primesub/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace primesub {

namespace {

constexpr std::size_t kMaxFiniteOrder = 1u << 20;

using ElementSet = std::vector<bool>;

std::size_t count(const ElementSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

long exponentOf(const FgModule& M) { return M.isZero() ? 1 : M.invariants().back().get_si(); }

std::string vecString(const Vector& v) {
  std::string s = "[";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? ", " : "") + v[j].toString();
  return s + "]";
}

}  // namespace

FiniteModule::FiniteModule(const FgModule& M) : module_(M) {
  if (!M.isFinite()) throw AlgebraError(ErrorKind::InvalidArgument, "FiniteModule: module has free rank");
  for (const auto& d : M.invariants()) {
    if (d > static_cast<long>(kMaxFiniteOrder)) throw AlgebraError(ErrorKind::InvalidArgument, "FiniteModule: too large");
    radix_.push_back(d.get_si());
    order_ *= static_cast<std::size_t>(radix_.back());
    if (order_ > kMaxFiniteOrder) throw AlgebraError(ErrorKind::InvalidArgument, "FiniteModule: too large");
  }
}

std::size_t FiniteModule::encode(const Vector& x) const {
  std::size_t idx = 0;
  for (std::size_t j = radix_.size(); j-- > 0;) {
    idx = idx * static_cast<std::size_t>(radix_[j]) + residue(x.at(j), Integer(radix_[j])).get_ui();
  }
  return idx;
}

Vector FiniteModule::decode(std::size_t index) const {
  Vector v;
  for (long d : radix_) {
    v.emplace_back(static_cast<long>(index % static_cast<std::size_t>(d)));
    index /= static_cast<std::size_t>(d);
  }
  return v;
}

std::size_t FiniteModule::add(std::size_t a, std::size_t b) const {
  std::size_t idx = 0, stride = 1;
  for (long d : radix_) {
    const auto du = static_cast<std::size_t>(d);
    idx += ((a % du + b % du) % du) * stride;
    a /= du;
    b /= du;
    stride *= du;
  }
  return idx;
}

std::size_t FiniteModule::scale(long r, std::size_t a) const {
  std::size_t idx = 0, stride = 1;
  for (long d : radix_) {
    const auto du = static_cast<std::size_t>(d);
    long c = static_cast<long>(a % du) * (r % d) % d;
    if (c < 0) c += d;
    idx += static_cast<std::size_t>(c) * stride;
    a /= du;
    stride *= du;
  }
  return idx;
}

ElementSet FiniteModule::span(const std::vector<Vector>& gens) const {
  std::vector<std::size_t> g;
  for (const auto& v : gens) g.push_back(encode(v));
  ElementSet in(order_, false);
  in[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (auto h : g) {
      const std::size_t y = add(x, h);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

namespace {

struct Sweep {
  FiniteModule F;
  ElementSet S;
  long e;

  explicit Sweep(const Submodule& sub) : F(sub.ambient()), S(F.elementSet(sub)), e(exponentOf(sub.ambient())) {}

  bool proper() const { return count(S) < F.order(); }
  bool kills(long r) const {  // r M ⊆ S
    for (std::size_t m = 0; m < F.order(); ++m)
      if (!S[F.scale(r, m)]) return false;
    return true;
  }
  bool somePowerKills(long r) const {
    const long base = ((r % e) + e) % e;
    std::set<long> seen;
    for (long rk = base; seen.insert(rk).second; rk = rk * base % e)
      if (kills(rk)) return true;
    return false;
  }
  BruteVerdict decide(bool primary) const {
    BruteVerdict v;
    v.proper = proper();
    for (long r = 0; r < std::max(e, 2L) && !v.counterexample; ++r) {
      if (primary ? somePowerKills(r) : kills(r)) continue;
      for (std::size_t m = 0; m < F.order(); ++m) {
        if (!S[m] && S[F.scale(r, m)]) {
          v.counterexample = Counterexample{0, RingElem(r), F.decode(m)};
          break;
        }
      }
    }
    v.holds = v.proper && !v.counterexample;
    return v;
  }
  Integer colonGen() const {
    long g = 0;
    for (long r = 1; r <= e; ++r)
      if (kills(r)) g = std::gcd(g, r);
    return g;
  }
  // Annihilator generator of m modulo S: smallest positive r with r m ∈ S.
  long annOf(std::size_t m) const {
    for (long r = 1; r <= e; ++r)
      if (S[F.scale(r, m)]) return r;
    return e;
  }
  std::vector<Integer> maximalAnnihilators() const {
    std::set<long> anns;
    for (std::size_t m = 0; m < F.order(); ++m)
      if (!S[m]) anns.insert(annOf(m));
    std::vector<Integer> out;
    for (long a : anns) {
      bool maximal = true;
      for (long b : anns)
        if (b != a && a % b == 0) maximal = false;
      if (maximal) out.emplace_back(a);
    }
    return out;
  }
  bool isZeroDivisor(long r) const {  // r kills some element outside S
    for (std::size_t m = 0; m < F.order(); ++m)
      if (!S[m] && S[F.scale(r, m)]) return true;
    return false;
  }
};

}  // namespace

BruteVerdict bruteIsPrimeSubmodule(const Submodule& S) { return Sweep(S).decide(false); }

BruteVerdict bruteIsPrimarySubmodule(const Submodule& S) { return Sweep(S).decide(true); }

Ideal bruteColon(const Submodule& S) {
  return Ideal::generatedBy(Sweep(S).colonGen(), S.ambient().ctx());
}

std::set<long> bruteZ(const FgModule& M, long bound) {
  const Sweep sw(Submodule::zero(M));
  std::set<long> out;
  for (long r = 0; r <= bound; ++r)
    if (sw.isZeroDivisor(r)) out.insert(r);
  return out;
}

std::vector<Integer> bruteAss(const FgModule& M) { return Sweep(Submodule::zero(M)).maximalAnnihilators(); }

ElementSet bruteSaturate(const Submodule& S, const Ideal& p) {
  const Sweep sw(S);
  const long pg = p.gen().get_si();
  // t acts through its residue mod e; a residue has a representative outside
  // (p) unless p divides both e and t.
  ElementSet out(sw.F.order(), false);
  for (std::size_t m = 0; m < sw.F.order(); ++m) {
    for (long t = 1; t <= sw.e && !out[m]; ++t) {
      if (pg != 0 && sw.e % pg == 0 && t % pg == 0) continue;
      if (sw.S[sw.F.scale(t, m)]) out[m] = true;
    }
  }
  return out;
}

ElementSet bruteIntersect(const Submodule& a, const Submodule& b) {
  const FiniteModule F(a.ambient());
  ElementSet x = F.elementSet(a);
  const ElementSet y = F.elementSet(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] && y[i];
  return x;
}

bool brutePure(const Submodule& S) {
  const Sweep sw(S);
  const std::size_t n = sw.F.order();
  for (long r = 0; r <= sw.e; ++r) {
    ElementSet rM(n, false), rS(n, false);
    for (std::size_t m = 0; m < n; ++m) {
      rM[sw.F.scale(r, m)] = true;
      if (sw.S[m]) rS[sw.F.scale(r, m)] = true;
    }
    for (std::size_t m = 0; m < n; ++m)
      if ((rM[m] && sw.S[m]) != rS[m]) return false;
  }
  return true;
}

std::vector<std::string> compareWithOracle(const Submodule& S, const Submodule* other) {
  std::vector<std::string> diffs;
  const FgModule& M = S.ambient();
  const RingCtx& ctx = M.ctx();
  const Sweep sw(S);
  const std::string where = M.describe() + " S=" + [&] {
    std::string g;
    for (const auto& v : S.generators()) g += vecString(v);
    return g.empty() ? std::string("0") : g;
  }();
  auto fail = [&](const std::string& what) { diffs.push_back(what + " on " + where); };

  auto checkVerdict = [&](bool primary) {
    const PrimenessReport fast = primary ? isPrimarySubmodule(S) : isPrimeSubmodule(S);
    const BruteVerdict slow = sw.decide(primary);
    const char* label = primary ? "primary" : "prime";
    if ((fast.verdict == Verdict::NotProper) != !slow.proper) fail(std::string(label) + ": properness");
    if (fast.affirmative() != slow.holds) fail(std::string(label) + ": verdict " + name(fast.verdict));
    if (fast.witness) {
      const Witness& w = *fast.witness;
      const long r = w.scalar.num().get_si();
      const std::size_t m = sw.F.encode(w.element);
      const bool ok = !sw.S[m] && sw.S[sw.F.scale(r, m)] && !(primary ? sw.somePowerKills(r) : sw.kills(r));
      if (!ok) fail(std::string(label) + ": witness does not replay");
    }
  };
  checkVerdict(false);
  checkVerdict(true);

  if (colon(S) != Ideal::generatedBy(sw.colonGen(), ctx)) fail("colon");

  const FgModule Q = quotient(S).module;
  const PrimeSet Z = zeroDivisors(Q);
  for (long r = 0; r <= 2 * sw.e; ++r)
    if (Z.containsElement(RingElem(r)) != sw.isZeroDivisor(r)) fail("Z at r=" + std::to_string(r));

  const PrimeSet A = associatedPrimes(Q);
  if (A.includesZero || A.primes != sw.maximalAnnihilators()) fail("Ass");

  std::vector<Integer> ps{Integer(0)};
  for (const auto& [p, e] : factor(Integer(std::max<long>(sw.e, 1)))) ps.push_back(p);
  Integer extra = 2;
  while (sw.e % extra.get_si() == 0 || !isPrimeIdeal(Ideal::fromCanonical(extra), RingCtx(1))) ++extra;
  ps.push_back(extra);
  for (const auto& p : ps) {
    const Ideal P = Ideal::fromCanonical(p);
    const Saturation fast = saturate(S, P);
    if (sw.F.elementSet(fast.result) != bruteSaturate(S, P)) fail("saturate at " + P.toString());
  }

  if (isPureSubmodule(S) != brutePure(S)) fail("pure");
  if (other && sw.F.elementSet(intersect(S, *other)) != bruteIntersect(S, *other)) fail("intersect");
  return diffs;
}

std::vector<FgModule> finiteModulesUpTo(long maxOrder, const RingCtx& ctx) {
  std::vector<std::pair<long, std::vector<long>>> lists;
  std::function<void(std::vector<long>&, long)> extend = [&](std::vector<long>& cur, long prod) {
    lists.emplace_back(prod, cur);
    const long step = cur.empty() ? 1 : cur.back();
    for (long d = cur.empty() ? 2 : cur.back(); prod * d <= maxOrder; d += step) {
      if (ctx.strip(Integer(d)) != d) continue;
      cur.push_back(d);
      extend(cur, prod * d);
      cur.pop_back();
    }
  };
  std::vector<long> cur;
  extend(cur, 1);
  std::sort(lists.begin(), lists.end());
  std::vector<FgModule> out;
  for (const auto& [order, inv] : lists) out.emplace_back(ctx, std::vector<Integer>(inv.begin(), inv.end()), 0);
  return out;
}

std::optional<Counterexample> boxRefute(const Submodule& S, const SearchBox& box, bool primary) {
  const FgModule& M = S.ambient();
  const RingCtx& ctx = M.ctx();
  // Coordinate values per position.
  std::vector<std::vector<RingElem>> values(M.dimension());
  for (std::size_t j = 0; j < M.dimension(); ++j) {
    if (j < M.torsionRank()) {
      const long d = std::min<long>(M.invariants()[j].get_si(), box.elementBound + 1);
      for (long c = 0; c < d; ++c) values[j].emplace_back(c);
    } else {
      // 0, 1, -1, 2, -2, ...: small counterexamples are reported first.
      for (long k = 0; k <= 2 * box.elementBound; ++k) {
        const long n = k % 2 ? (k + 1) / 2 : -k / 2;
        Integer den = 1;
        for (unsigned e = 0; e <= box.denExpBound; ++e) {
          if (e > 0 && ctx.u() == 1) break;
          values[j].push_back(RingElem::canonicalize(n, den, ctx));
          den *= ctx.u();
        }
      }
    }
  }
  auto kills = [&](const Integer& r) {
    for (std::size_t j = 0; j < M.dimension(); ++j)
      if (!S.contains(scaled(M.basisVector(j), RingElem(r)))) return false;
    return true;
  };
  for (long r = 0; r <= box.scalarBound; ++r) {
    bool inColon = kills(r);
    Integer rk = r;
    for (int k = 2; primary && !inColon && k <= 8; ++k) {
      rk *= r;
      inColon = kills(rk);
    }
    if (inColon) continue;
    std::vector<std::size_t> idx(M.dimension(), 0);
    while (true) {
      Vector m(M.dimension());
      for (std::size_t j = 0; j < m.size(); ++j) m[j] = values[j][idx[j]];
      if (!S.contains(m) && S.contains(scaled(m, RingElem(r)))) return Counterexample{0, RingElem(r), m};
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == values[j].size()) idx[j++] = 0;
      if (j == idx.size()) break;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::pair<std::size_t, RingElem>> cechBox(const LocFreeModule& component, const SearchBox& box) {
  std::vector<std::pair<std::size_t, RingElem>> out;
  for (std::size_t j = 0; j < component.size(); ++j) {
    const Integer& u = component.summands[j];
    for (long n = -box.elementBound; n <= box.elementBound; ++n) {
      Integer den = 1;
      for (unsigned e = 0; e <= box.denExpBound; ++e) {
        if (e > 0 && u == 1) break;
        out.emplace_back(j, RingElem::fromQ(mpq_class(Integer(n), den)));
        den *= u;
      }
    }
  }
  return out;
}

Vector single(std::size_t n, std::size_t j, const RingElem& x) {
  Vector v(n, RingElem(0));
  v[j] = x;
  return v;
}

}  // namespace

BruteVerdict bruteCechPrime(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C,
                            const SearchBox& box, bool primary) {
  BruteVerdict v;
  v.proper = false;
  for (std::size_t k = 0; k < C.length(); ++k) {
    const LocFreeModule& comp = C.components[k];
    const auto elems = cechBox(comp, box);
    auto in = [&](std::size_t j, const RingElem& x) { return partContains(parts[k], comp, single(comp.size(), j, x)); };
    bool proper = false;
    for (const auto& [j, x] : elems) proper = proper || !in(j, x);
    if (!proper) continue;
    v.proper = true;
    auto kills = [&](const Integer& r) {
      for (const auto& [j, x] : elems)
        if (!in(j, RingElem(r) * x)) return false;
      return true;
    };
    for (long r = 1; r <= box.scalarBound && !v.counterexample; ++r) {
      bool inColon = kills(r);
      Integer rk = r;
      for (int p = 2; primary && !inColon && p <= 6; ++p) {
        rk *= r;
        inColon = kills(rk);
      }
      if (inColon) continue;
      for (const auto& [j, x] : elems) {
        if (!in(j, x) && in(j, RingElem(r) * x)) {
          v.counterexample = Counterexample{static_cast<long>(k), RingElem(r), single(comp.size(), j, x)};
          break;
        }
      }
    }
  }
  v.holds = v.proper && !v.counterexample;
  return v;
}

Ideal bruteColonOverZ(const IdealSubcomplexPart& part, const LocFreeModule& component, const SearchBox& box) {
  const auto elems = cechBox(component, box);
  long g = 0;
  for (long r = 1; r <= box.scalarBound; ++r) {
    bool all = true;
    for (const auto& [j, x] : elems)
      if (!partContains(part, component, single(component.size(), j, RingElem(r) * x))) {
        all = false;
        break;
      }
    if (all) g = std::gcd(g, r);
  }
  return Ideal::fromCanonical(g);
}

}  // namespace primesub
