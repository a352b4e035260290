#include "primesub/cech.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace primesub {

namespace {

// Removes from n every prime factor it shares with u.
Integer stripBy(Integer n, const Integer& u) {
  n = abs(n);
  if (n == 0) return n;
  Integer g = gcd(n, u);
  while (g > 1) {
    n /= g;
    g = gcd(n, u);
  }
  return n;
}

bool inLocalization(const RingElem& x, const Integer& u) { return stripBy(x.den(), u) == 1; }

std::string vectorString(const Vector& v) {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? ", " : "") + v[j].toString();
  return s + ")";
}

std::string labelName(const std::vector<Integer>& subset) {
  if (subset.empty()) return "x";
  Integer prod = 1;
  for (const auto& a : subset) prod *= a;
  return "x{" + prod.get_str() + "}";
}

}  // namespace

bool LocFreeModule::containsElement(const Vector& x) const {
  if (x.size() != summands.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!inLocalization(x[j], summands[j])) return false;
  return true;
}

void LocFreeMap::validate() const {
  if (entries.rows() != target.size() || entries.cols() != source.size())
    throw AlgebraError(ErrorKind::ShapeMismatch, "LocFreeMap: matrix shape does not match the modules");
  for (std::size_t i = 0; i < entries.rows(); ++i) {
    for (std::size_t j = 0; j < entries.cols(); ++j) {
      const RingElem& e = entries(i, j);
      if (e.isZero()) continue;
      if (target.summands[i] % source.summands[j] != 0 || !inLocalization(e, target.summands[i])) {
        throw AlgebraError(ErrorKind::NotWellDefined, "LocFreeMap: entry (" + std::to_string(i) + ", " +
                                                          std::to_string(j) + ") does not land in the target summand");
      }
    }
  }
}

std::optional<std::size_t> CechComplex::summandIndex(const std::vector<Integer>& subset) const {
  if (subset.size() >= labels.size()) return std::nullopt;
  const auto& ls = labels[subset.size()];
  auto it = std::find(ls.begin(), ls.end(), subset);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

std::string CechComplex::summandName(std::size_t degree, std::size_t j) const {
  const Integer& u = components.at(degree).summands.at(j);
  return u == 1 ? "Z" : "Z[1/" + u.get_str() + "]";
}

CechComplex buildCech(const std::vector<Integer>& elements) {
  const std::size_t n = elements.size();
  if (n > kMaxCechElements)
    throw AlgebraError(ErrorKind::TooManyElements,
                       "buildCech: at most " + std::to_string(kMaxCechElements) + " elements supported");
  for (const auto& a : elements)
    if (a <= 1) throw AlgebraError(ErrorKind::InvalidArgument, "buildCech: elements must be > 1, got " + a.get_str());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gcd(elements[i], elements[j]) != 1)
        throw AlgebraError(ErrorKind::NotCoprime,
                           "buildCech: " + elements[i].get_str() + " and " + elements[j].get_str() + " are not coprime");

  CechComplex C;
  C.elements = elements;
  C.labels.resize(n + 1);
  // Subsets as bitmasks, sorted lexicographically by their position lists.
  std::vector<std::vector<std::vector<std::size_t>>> positions(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) pos.push_back(i);
    positions[pos.size()].push_back(pos);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    std::sort(positions[k].begin(), positions[k].end());
    LocFreeModule M;
    for (const auto& pos : positions[k]) {
      std::vector<Integer> subset;
      Integer prod = 1;
      for (auto i : pos) {
        subset.push_back(elements[i]);
        prod *= elements[i];
      }
      C.labels[k].push_back(subset);
      M.summands.push_back(squarefreeKernel(prod));
    }
    C.components.push_back(std::move(M));
  }
  for (std::size_t k = 0; k < n; ++k) {
    LocFreeMap d{C.components[k], C.components[k + 1], Matrix(C.components[k + 1].size(), C.components[k].size())};
    for (std::size_t t = 0; t < positions[k + 1].size(); ++t) {
      const auto& T = positions[k + 1][t];
      for (std::size_t j = 0; j < T.size(); ++j) {
        std::vector<std::size_t> S = T;
        S.erase(S.begin() + static_cast<long>(j));
        const auto s = static_cast<std::size_t>(
            std::find(positions[k].begin(), positions[k].end(), S) - positions[k].begin());
        d.entries(t, s) = RingElem(j % 2 == 0 ? 1 : -1);
      }
    }
    d.validate();
    C.diffs.push_back(std::move(d));
  }
  return C;
}

std::optional<CechViolation> checkDSquared(const std::vector<LocFreeMap>& diffs) {
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
    const LocFreeMap& first = diffs[k];
    const LocFreeMap& second = diffs[k + 1];
    for (std::size_t b = 0; b < first.source.size(); ++b) {
      Vector e(first.source.size(), RingElem(0));
      e[b] = RingElem(1);
      if (!isZeroVector(second.apply(first.apply(e)))) return CechViolation{k, b};
    }
  }
  return std::nullopt;
}

std::string renderDifferential(const CechComplex& C, std::size_t degree) {
  const LocFreeMap& d = C.diffs.at(degree);
  const auto& srcLabels = C.labels[degree];
  std::string out = "(";
  for (std::size_t t = 0; t < d.entries.rows(); ++t) {
    if (t) out += ", ";
    bool first = true;
    // Terms in the order of the removed position, which is reverse lexicographic on sources.
    for (std::size_t s = d.entries.cols(); s-- > 0;) {
      const RingElem& e = d.entries(t, s);
      if (e.isZero()) continue;
      const bool neg = e.num() < 0;
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      out += labelName(srcLabels[s]);
      first = false;
    }
    if (first) out += "0";
  }
  return out + ")";
}

IdealSubcomplexPart canonicalPart(const IdealSubcomplexPart& part, const LocFreeModule& component) {
  if (part.gens.size() != component.size())
    throw AlgebraError(ErrorKind::ShapeMismatch, "subcomplex part has " + std::to_string(part.gens.size()) +
                                                     " generators for " + std::to_string(component.size()) + " summands");
  IdealSubcomplexPart out;
  for (std::size_t j = 0; j < part.gens.size(); ++j) out.gens.push_back(stripBy(part.gens[j], component.summands[j]));
  return out;
}

bool partContains(const IdealSubcomplexPart& part, const LocFreeModule& component, const Vector& x) {
  if (!component.containsElement(x)) return false;
  const IdealSubcomplexPart c = canonicalPart(part, component);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (c.gens[j] == 0) {
      if (!x[j].isZero()) return false;
    } else if (!dividesElem(c.gens[j], x[j])) {
      return false;
    }
  }
  return true;
}

Ideal colonOverZ(const IdealSubcomplexPart& part, const LocFreeModule& component) {
  const IdealSubcomplexPart c = canonicalPart(part, component);
  Integer l = 1;
  for (const auto& g : c.gens) {
    if (g == 0) return Ideal::zero();
    l = lcm(l, g);
  }
  return Ideal::fromCanonical(l);
}

std::optional<CechSubcomplexViolation> validateCechSubcomplex(const std::vector<IdealSubcomplexPart>& parts,
                                                              const CechComplex& C) {
  if (parts.size() != C.length())
    return CechSubcomplexViolation{0, 0, "expected " + std::to_string(C.length()) + " degrees, got " +
                                             std::to_string(parts.size())};
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k].gens.size() != C.components[k].size())
      return CechSubcomplexViolation{k, 0, "degree " + std::to_string(k) + " needs " +
                                               std::to_string(C.components[k].size()) + " generators"};
  for (std::size_t k = 0; k + 1 < C.length(); ++k) {
    const IdealSubcomplexPart c = canonicalPart(parts[k], C.components[k]);
    for (std::size_t s = 0; s < c.gens.size(); ++s) {
      if (c.gens[s] == 0) continue;
      Vector x(c.gens.size(), RingElem(0));
      x[s] = RingElem(c.gens[s]);
      const Vector y = C.diffs[k].apply(x);
      if (!partContains(parts[k + 1], C.components[k + 1], y)) {
        return CechSubcomplexViolation{k, s, "d^" + std::to_string(k) + " maps " + vectorString(x) + " to " +
                                                 vectorString(y) + ", outside the degree " + std::to_string(k + 1) +
                                                 " part"};
      }
    }
  }
  return std::nullopt;
}

namespace {

PrimenessReport decideCech(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C, bool primary,
                           std::optional<std::size_t> only = std::nullopt) {
  if (auto v = validateCechSubcomplex(parts, C)) throw AlgebraError(ErrorKind::ClosureViolation, v->message);
  PrimenessReport report;
  report.verdict = Verdict::NotProper;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (only && k != *only) continue;
    const IdealSubcomplexPart c = canonicalPart(parts[k], C.components[k]);
    const bool proper = std::any_of(c.gens.begin(), c.gens.end(), [](const Integer& g) { return g != 1; });
    if (!proper) continue;
    if (report.verdict == Verdict::NotProper) report.verdict = primary ? Verdict::Primary : Verdict::Prime;
    const long idx = static_cast<long>(k);

    const bool hasZero = std::any_of(c.gens.begin(), c.gens.end(), [](const Integer& g) { return g == 0; });
    Integer l = 1;
    for (const auto& g : c.gens)
      if (g != 0) l = lcm(l, g);
    const auto fl = factor(l);
    bool ok;
    Ideal P;
    if (hasZero) {
      ok = (l == 1);  // quotient torsion-free
      P = Ideal::zero();
    } else if (primary) {
      ok = fl.size() == 1;
      P = Ideal::fromCanonical(fl.front().first);
    } else {
      ok = fl.size() == 1 && fl.front().second == 1;
      P = Ideal::fromCanonical(l);
    }
    if (ok) {
      report.perIndexIdeals[idx] = P;
      continue;
    }
    report.perIndexIdeals[idx] = hasZero ? Ideal::zero() : (primary ? radical(Ideal::fromCanonical(l), RingCtx(1))
                                                                    : Ideal::fromCanonical(l));
    if (report.witness) continue;
    report.verdict = primary ? Verdict::NotPrimary : Verdict::NotPrime;
    const Integer q = fl.front().first;
    std::size_t j = 0;
    while (c.gens[j] == 0 || c.gens[j] % q != 0) ++j;
    Witness w;
    w.index = idx;
    w.scalar = RingElem(q);
    w.element.assign(c.gens.size(), RingElem(0));
    w.element[j] = RingElem(Integer(c.gens[j] / q));
    Vector image = w.element;
    image[j] = RingElem(c.gens[j]);
    w.replay = q.get_str() + " * " + vectorString(w.element) + " = " + vectorString(image) + " ∈ S^" +
               std::to_string(k);
    report.witness = std::move(w);
  }
  return report;
}

}  // namespace

PrimenessReport isPrimeCechSubcomplex(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C) {
  return decideCech(parts, C, false);
}

PrimenessReport isPrimaryCechSubcomplex(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C) {
  return decideCech(parts, C, true);
}

PrimenessReport isPrimeCechSubcomplexAt(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C,
                                        std::size_t degree) {
  if (degree >= C.length()) throw AlgebraError(ErrorKind::InvalidArgument, "isPrimeCechSubcomplexAt: no such degree");
  return decideCech(parts, C, false, degree);
}

std::vector<IdealSubcomplexPart> degreeOneSubcomplex(const CechComplex& C, const Integer& g) {
  std::vector<IdealSubcomplexPart> parts;
  for (std::size_t k = 0; k < C.length(); ++k) {
    IdealSubcomplexPart p;
    p.gens.assign(C.components[k].size(), Integer(k == 0 ? 0 : 1));
    if (k == 1 && !p.gens.empty()) p.gens[0] = g;
    parts.push_back(std::move(p));
  }
  return parts;
}

CechReproduction reproduceCechExample(const Integer& q) {
  CechReproduction r;
  r.complex = buildCech({3, 5, 7});
  const RingCtx z3(3);
  if (gcd(q, 3) != 1 || !isPrimeIdeal(Ideal::fromCanonical(q), RingCtx(1)))
    throw AlgebraError(ErrorKind::InvalidArgument, "reproduceCechExample: q must be a prime other than 3");
  r.primeSub = degreeOneSubcomplex(r.complex, q);
  r.primarySub = degreeOneSubcomplex(r.complex, q * q);
  const Ideal literal = idealOf(RingElem::parse("1/3", z3), z3);
  r.literalSub = degreeOneSubcomplex(r.complex, literal.gen());
  r.primeReport = isPrimeCechSubcomplex(r.primeSub, r.complex);
  r.primaryAsPrime = isPrimeCechSubcomplex(r.primarySub, r.complex);
  r.primaryReport = isPrimaryCechSubcomplex(r.primarySub, r.complex);
  r.literalReport = isPrimeCechSubcomplex(r.literalSub, r.complex);
  r.literalDegreeOne = isPrimeCechSubcomplexAt(r.literalSub, r.complex, 1);

  const std::string qs = q.get_str();
  r.notes.push_back("<1/3> is generated by a unit of Z[1/3] (3 * 1/3 = 1), so it is " + literal.toString() +
                    ", the whole ring; the literal degree-1 part equals C^1 and degree 1 is not a proper index");
  r.notes.push_back("literal reading at degree 1: " + std::string(name(r.literalDegreeOne.verdict)));
  r.notes.push_back("the literal reading's whole-complex verdict " + std::string(name(r.literalReport.verdict)) +
                    " comes from degree 0 alone, where S^0 = 0");
  r.notes.push_back("prime case uses (" + qs + ") in place of <1/3> in the Z[1/3] summand: " +
                    name(r.primeReport.verdict));
  r.notes.push_back("primary case uses (" + Integer(q * q).get_str() + "): " + name(r.primaryReport.verdict) + " and " +
                    name(r.primaryAsPrime.verdict));
  r.notes.push_back("degree 2 summands are listed lexicographically (Z[1/15], Z[1/21], Z[1/35]), the reverse of "
                    "the order Z[1/35], Z[1/21], Z[1/15]");
  return r;
}

}  // namespace primesub
