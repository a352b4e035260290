#include "primesub/module.hpp"

#include <algorithm>
#include <sstream>

namespace primesub {

// --- FgModule ----------------------------------------------------------------

FgModule::FgModule() : FgModule(RingCtx(), {}, 0) {}

FgModule::FgModule(RingCtx ctx, std::vector<Integer> invariants, std::size_t freeRank) {
  for (std::size_t j = 0; j < invariants.size(); ++j) {
    const Integer& d = invariants[j];
    if (d < 2 || ctx.strip(d) != d) {
      throw AlgebraError(ErrorKind::InvalidArgument,
                         "invariant factor " + d.get_str() + " is not a canonical non-unit of Z[1/" +
                             ctx.u().get_str() + "]");
    }
    if (j > 0 && !mpz_divisible_p(d.get_mpz_t(), invariants[j - 1].get_mpz_t())) {
      throw AlgebraError(ErrorKind::InvalidArgument, "invariant factors must form a divisibility chain");
    }
  }
  auto data = std::make_shared<Data>();
  data->ctx = std::move(ctx);
  data->invariants = std::move(invariants);
  data->freeRank = freeRank;
  data_ = std::move(data);
}

FgModule FgModule::fromPresentation(const RingCtx& ctx, const Matrix& relations) {
  const SmithForm snf = smithNormalForm(relations, ctx);
  const std::size_t m = relations.rows();
  std::vector<std::size_t> keep;
  for (std::size_t t = 0; t < snf.rank; ++t)
    if (snf.diagonal[t] != 1) keep.push_back(t);
  for (std::size_t t = snf.rank; t < m; ++t) keep.push_back(t);

  auto pres = std::make_shared<Presentation>();
  pres->relations = relations;
  pres->toCanonical = Matrix(keep.size(), m);
  pres->fromCanonical = Matrix(m, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t c = 0; c < m; ++c) {
      pres->toCanonical(k, c) = snf.left(keep[k], c);
      pres->fromCanonical(c, k) = snf.leftInverse(c, keep[k]);
    }
  FgModule M(ctx, snf.invariants, snf.freeRank);
  auto data = std::make_shared<Data>(*M.data_);
  data->presentation = std::move(pres);
  M.data_ = std::move(data);
  return M;
}

Integer FgModule::order() const {
  if (!isFinite()) throw AlgebraError(ErrorKind::InvalidArgument, "order of an infinite module");
  Integer n = 1;
  for (const auto& d : invariants()) n *= d;
  return n;
}

const Integer& FgModule::relationOrder(std::size_t j) const {
  static const Integer kZero = 0;
  return j < torsionRank() ? invariants()[j] : kZero;
}

Vector FgModule::reduce(Vector coords) const {
  if (coords.size() != dimension()) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "element has " + std::to_string(coords.size()) +
                                                     " coordinates, module has " + std::to_string(dimension()));
  }
  for (std::size_t j = 0; j < torsionRank(); ++j) {
    if (!coords[j].isZero()) coords[j] = RingElem(residue(coords[j], invariants()[j]));
  }
  return coords;
}

Vector FgModule::basisVector(std::size_t j) const {
  Vector v(dimension());
  v.at(j) = RingElem(1);
  return v;
}

std::vector<Vector> FgModule::relationVectors() const {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < torsionRank(); ++j) {
    Vector v(dimension());
    v[j] = RingElem(invariants()[j]);
    out.push_back(std::move(v));
  }
  return out;
}

bool operator==(const FgModule& a, const FgModule& b) {
  if (a.data_ == b.data_) return true;
  return a.ctx() == b.ctx() && a.invariants() == b.invariants() && a.freeRank() == b.freeRank();
}

std::string FgModule::describe() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : invariants()) {
    os << (first ? "" : " + ") << "R/(" << d.get_str() << ")";
    first = false;
  }
  if (freeRank() > 0) os << (first ? "" : " + ") << "R^" << freeRank();
  return os.str();
}

ModElem::ModElem(FgModule module, Vector coords)
    : module_(std::move(module)), coords_(module_.reduce(std::move(coords))) {}

std::string ModElem::toString() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].toString();
  return s + "]";
}

// --- Submodule ---------------------------------------------------------------

Submodule::Submodule(FgModule ambient, const std::vector<Vector>& generators) : ambient_(std::move(ambient)) {
  std::vector<Vector> rows;
  rows.reserve(generators.size() + ambient_.torsionRank());
  for (const auto& g : generators) {
    if (g.size() != ambient_.dimension())
      throw AlgebraError(ErrorKind::ShapeMismatch, "submodule generator has wrong length");
    if (!isZeroVector(g)) rows.push_back(g);
  }
  for (auto& r : ambient_.relationVectors()) rows.push_back(std::move(r));
  basis_ = hermiteRows(std::move(rows), ambient_.dimension(), ambient_.ctx());
}

Submodule Submodule::whole(const FgModule& M) {
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < M.dimension(); ++j) gens.push_back(M.basisVector(j));
  return Submodule(M, gens);
}

std::vector<Vector> Submodule::generators() const {
  std::vector<Vector> out;
  for (const auto& b : basis_) {
    Vector v = ambient_.reduce(b);
    if (!isZeroVector(v)) out.push_back(std::move(v));
  }
  return out;
}

bool Submodule::contains(const Vector& coords) const {
  if (coords.size() != ambient_.dimension())
    throw AlgebraError(ErrorKind::ShapeMismatch, "membership: element has wrong length");
  return isZeroVector(reduceAgainst(basis_, coords));
}

bool Submodule::contains(const Submodule& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

bool Submodule::isWhole() const {
  for (std::size_t j = 0; j < ambient_.dimension(); ++j)
    if (!contains(ambient_.basisVector(j))) return false;
  return true;
}

Submodule Submodule::operator+(const Submodule& other) const {
  if (ambient_ != other.ambient_) throw AlgebraError(ErrorKind::ShapeMismatch, "sum of submodules of different modules");
  std::vector<Vector> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return Submodule(ambient_, gens);
}

// --- ModuleMap ---------------------------------------------------------------

ModuleMap::ModuleMap(FgModule domain, FgModule codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.dimension() || matrix_.cols() != domain_.dimension()) {
    throw AlgebraError(ErrorKind::ShapeMismatch, "module map matrix has shape " + std::to_string(matrix_.rows()) +
                                                     "x" + std::to_string(matrix_.cols()));
  }
  for (std::size_t j = 0; j < domain_.torsionRank(); ++j) {
    if (!isZeroVector(apply(domain_.relationVectors()[j]))) {
      throw AlgebraError(ErrorKind::NotWellDefined,
                         "module map does not respect relation " + std::to_string(j) + " of the domain");
    }
  }
}

ModuleMap ModuleMap::zero(const FgModule& domain, const FgModule& codomain) {
  return ModuleMap(domain, codomain, Matrix(codomain.dimension(), domain.dimension()));
}

Submodule ModuleMap::image(const Submodule& S) const {
  if (S.ambient() != domain_) throw AlgebraError(ErrorKind::ShapeMismatch, "image: submodule of another module");
  std::vector<Vector> gens;
  for (const auto& b : S.basis()) gens.push_back(apply(b));
  return Submodule(codomain_, gens);
}

ModuleMap ModuleMap::after(const ModuleMap& first) const {
  if (first.codomain_ != domain_) throw AlgebraError(ErrorKind::ShapeMismatch, "composition of incompatible maps");
  return ModuleMap(first.domain_, codomain_, matrix_ * first.matrix_);
}

bool ModuleMap::isZero() const {
  for (std::size_t j = 0; j < domain_.dimension(); ++j)
    if (!isZeroVector(apply(domain_.basisVector(j)))) return false;
  return true;
}

// --- PrimeSet ----------------------------------------------------------------

bool PrimeSet::containsElement(const RingElem& r) const {
  if (r.isZero()) return !empty();
  const Integer n = r.num();
  for (const auto& p : primes)
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return true;
  return false;
}

bool PrimeSet::equalsAsElementSet(const Ideal& I) const {
  if (I.isZero()) return primes.empty() && includesZero;
  if (I.isUnit()) return false;
  return primes.size() == 1 && primes.front() == I.gen();
}

bool PrimeSet::isSingleton(const Ideal& I) const {
  if (I.isZero()) return primes.empty() && includesZero;
  return !includesZero && primes.size() == 1 && primes.front() == I.gen();
}

std::string PrimeSet::toString() const {
  std::string s = "{";
  bool first = true;
  if (includesZero) {
    s += "(0)";
    first = false;
  }
  for (const auto& p : primes) {
    s += (first ? "" : ", ") + std::string("(") + p.get_str() + ")";
    first = false;
  }
  return s + "}";
}

const char* name(Verdict v) {
  switch (v) {
    case Verdict::Prime: return "Prime";
    case Verdict::Primary: return "Primary";
    case Verdict::NotPrime: return "NotPrime";
    case Verdict::NotPrimary: return "NotPrimary";
    case Verdict::NotProper: return "NotProper";
  }
  return "?";
}

// --- operations --------------------------------------------------------------

Quotient quotient(const Submodule& S) {
  const FgModule& M = S.ambient();
  const std::size_t n = M.dimension();
  const Matrix A = Matrix::fromColumns(S.basis(), n);
  const SmithForm snf = smithNormalForm(A, M.ctx());
  std::vector<std::size_t> keep;
  for (std::size_t t = 0; t < snf.rank; ++t)
    if (snf.diagonal[t] != 1) keep.push_back(t);
  for (std::size_t t = snf.rank; t < n; ++t) keep.push_back(t);

  Quotient q{FgModule(M.ctx(), snf.invariants, snf.freeRank), Matrix(keep.size(), n), Matrix(n, keep.size())};
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t c = 0; c < n; ++c) {
      q.projection(k, c) = snf.left(keep[k], c);
      q.lift(c, k) = snf.leftInverse(c, keep[k]);
    }
  return q;
}

Quotient quotient(const FgModule& M, const Submodule& S) {
  if (S.ambient() != M) throw AlgebraError(ErrorKind::ShapeMismatch, "quotient: submodule of another module");
  return quotient(S);
}

namespace {

Ideal colonFromQuotient(const FgModule& Q) {
  if (Q.freeRank() > 0) return Ideal::zero();
  if (Q.isZero()) return Ideal::unit();
  return Ideal::fromCanonical(Q.invariants().back());
}

Integer smallestPrimeFactor(const Integer& n, const RingCtx& ctx) {
  return factor(n, ctx.factorCap()).front().first;
}

Witness makeWitness(const Submodule& S, const Quotient& q) {
  // Both callers guarantee torsion in M/S.
  const auto& inv = q.module.invariants();
  const std::size_t last = inv.size() - 1;
  const Integer& d = inv[last];
  const Integer qp = smallestPrimeFactor(d, S.ambient().ctx());
  Witness w;
  w.scalar = RingElem(qp);
  w.element = S.ambient().reduce(scaled(q.liftBasis(last), RingElem(Integer(d / qp))));
  const Vector product = S.ambient().reduce(scaled(w.element, w.scalar));
  w.replay = qp.get_str() + " * " + ModElem(S.ambient(), w.element).toString() + " = " +
             ModElem(S.ambient(), product).toString() + " ∈ S";
  return w;
}

}  // namespace

Ideal colon(const Submodule& S) { return colonFromQuotient(quotient(S).module); }

Ideal colon(const Submodule& S, const FgModule& M) { return colonFromQuotient(quotient(M, S).module); }

Ideal colonOf(const Submodule& S, const Submodule& T) {
  if (S.ambient() != T.ambient()) throw AlgebraError(ErrorKind::ShapeMismatch, "colonOf: different ambients");
  const FgModule& M = S.ambient();
  const RingCtx& ctx = M.ctx();
  const Quotient q = quotient(S);
  Integer lcmAll = 1;
  for (const auto& t : T.basis()) {
    if (S.contains(t)) continue;
    // An upper bound for the order of t modulo S; minimized below by membership.
    const Vector image = q.project(t);
    Integer bound = 1;
    bool infinite = false;
    for (std::size_t j = 0; j < q.module.dimension(); ++j) {
      if (image[j].isZero()) continue;
      if (j >= q.module.torsionRank()) {
        infinite = true;
        break;
      }
      bound = lcm(bound, q.module.invariants()[j]);
    }
    if (infinite) return Ideal::zero();
    if (!S.contains(scaled(t, RingElem(bound)))) {
      throw AlgebraError(ErrorKind::InvalidArgument, "colonOf: inconsistent order bound");
    }
    Integer h = bound;
    for (const auto& [p, e] : factor(bound, ctx.factorCap())) {
      while (mpz_divisible_p(h.get_mpz_t(), p.get_mpz_t()) && S.contains(scaled(t, RingElem(Integer(h / p))))) {
        h /= p;
      }
    }
    lcmAll = lcm(lcmAll, h);
  }
  return Ideal::generatedBy(lcmAll, ctx);
}

Submodule colonByIdeal(const Submodule& S, const Ideal& J) {
  const FgModule& M = S.ambient();
  if (J.isZero()) return Submodule::whole(M);
  const Quotient q = quotient(S);
  std::vector<Vector> gens = S.basis();
  for (std::size_t j = 0; j < q.module.torsionRank(); ++j) {
    const Integer& d = q.module.invariants()[j];
    const Integer step = d / gcd(d, J.gen());
    gens.push_back(scaled(q.liftBasis(j), RingElem(step)));
  }
  return Submodule(M, gens);
}

Submodule colonByElement(const Submodule& S, const RingElem& r) {
  return colonByIdeal(S, idealOf(r, S.ambient().ctx()));
}

Ideal annihilatorOfElement(const ModElem& m) {
  const FgModule& M = m.module();
  Integer g = 1;
  for (std::size_t j = 0; j < M.dimension(); ++j) {
    const RingElem& x = m.coords()[j];
    if (x.isZero()) continue;
    if (j >= M.torsionRank()) return Ideal::zero();
    const Integer& d = M.invariants()[j];
    g = lcm(g, Integer(d / gcd(d, x.num())));
  }
  return Ideal::generatedBy(g, M.ctx());
}

Submodule torsionSubmodule(const FgModule& M) {
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < M.torsionRank(); ++j) gens.push_back(M.basisVector(j));
  return Submodule(M, gens);
}

PrimeSet associatedPrimes(const FgModule& M) {
  PrimeSet out;
  out.includesZero = M.freeRank() > 0;
  if (M.torsionRank() > 0) {
    for (const auto& [p, e] : factor(M.invariants().back(), M.ctx().factorCap())) out.primes.push_back(p);
  }
  return out;
}

PrimeSet zeroDivisors(const FgModule& M) {
  // A prime q is a zero-divisor iff multiplication by q is not injective,
  // i.e. q shares a factor with some invariant.
  PrimeSet out;
  out.includesZero = M.freeRank() > 0;
  std::vector<Integer> candidates;
  for (const auto& d : M.invariants())
    for (const auto& [p, e] : factor(d, M.ctx().factorCap())) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& q : candidates) {
    const bool kills = std::any_of(M.invariants().begin(), M.invariants().end(),
                                   [&](const Integer& d) { return gcd(d, q) != 1; });
    if (kills) out.primes.push_back(q);
  }
  return out;
}

Submodule scaleSubmodule(const Submodule& S, const RingElem& r) {
  std::vector<Vector> gens;
  for (const auto& b : S.basis()) gens.push_back(scaled(b, r));
  return Submodule(S.ambient(), gens);
}

Submodule idealTimesModule(const FgModule& M, const Ideal& I) {
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < M.dimension(); ++j) gens.push_back(scaled(M.basisVector(j), RingElem(I.gen())));
  return Submodule(M, gens);
}

PrimenessReport isPrimeSubmodule(const Submodule& S) {
  const Quotient q = quotient(S);
  PrimenessReport report;
  if (q.module.isZero()) {
    report.verdict = Verdict::NotProper;
    return report;
  }
  const Ideal P = colonFromQuotient(q.module);
  const bool torsionFree = q.module.torsionRank() == 0;
  const bool prime = torsionFree || (q.module.isFinite() && isPrimeIdeal(P, S.ambient().ctx()));
  if (prime) {
    report.verdict = Verdict::Prime;
    report.perIndexIdeals[0] = P;
  } else {
    report.verdict = Verdict::NotPrime;
    report.witness = makeWitness(S, q);
  }
  return report;
}

PrimenessReport isPrimarySubmodule(const Submodule& S) {
  const Quotient q = quotient(S);
  PrimenessReport report;
  if (q.module.isZero()) {
    report.verdict = Verdict::NotProper;
    return report;
  }
  const RingCtx& ctx = S.ambient().ctx();
  const Ideal P = colonFromQuotient(q.module);
  bool primary = false;
  if (q.module.torsionRank() == 0) {
    primary = true;
  } else if (q.module.isFinite()) {
    primary = factor(P.gen(), ctx.factorCap()).size() == 1;
  }
  if (primary) {
    report.verdict = Verdict::Primary;
    report.perIndexIdeals[0] = radical(P, ctx);
  } else {
    report.verdict = Verdict::NotPrimary;
    report.witness = makeWitness(S, q);
  }
  return report;
}

bool witnessReplays(const Submodule& S, const Witness& w, bool primary) {
  const FgModule& M = S.ambient();
  if (w.element.size() != M.dimension()) return false;
  if (!S.contains(scaled(w.element, w.scalar))) return false;
  if (S.contains(w.element)) return false;
  Ideal c = colon(S);
  if (primary) c = radical(c, M.ctx());
  return !c.contains(w.scalar);
}

Saturation saturate(const Submodule& S, const Ideal& p) {
  const RingCtx& ctx = S.ambient().ctx();
  if (!isPrimeIdeal(p, ctx)) throw AlgebraError(ErrorKind::IdealNotPrime, "saturate: " + p.toString() + " is not prime");
  const Quotient q = quotient(S);
  std::vector<Vector> gens = S.basis();
  for (std::size_t j = 0; j < q.module.torsionRank(); ++j) {
    Integer step = 1;
    if (!p.isZero()) {
      Integer d = q.module.invariants()[j];
      while (mpz_divisible_p(d.get_mpz_t(), p.gen().get_mpz_t())) {
        d /= p.gen();
        step *= p.gen();
      }
    }
    gens.push_back(scaled(q.liftBasis(j), RingElem(step)));
  }
  Saturation out{Submodule(S.ambient(), gens), false};
  out.notProper = out.result.isWhole();
  return out;
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.ambient() != b.ambient()) throw AlgebraError(ErrorKind::ShapeMismatch, "intersect: different ambients");
  const std::size_t n = a.ambient().dimension();
  std::vector<Vector> rows;
  for (const auto& v : a.basis()) {
    Vector r(2 * n);
    for (std::size_t i = 0; i < n; ++i) r[i] = r[n + i] = v[i];
    rows.push_back(std::move(r));
  }
  for (const auto& w : b.basis()) {
    Vector r(2 * n);
    for (std::size_t i = 0; i < n; ++i) r[i] = w[i];
    rows.push_back(std::move(r));
  }
  std::vector<Vector> gens;
  for (const auto& h : hermiteRows(std::move(rows), 2 * n, a.ambient().ctx())) {
    bool leftZero = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!h[i].isZero()) {
        leftZero = false;
        break;
      }
    if (leftZero) gens.emplace_back(h.begin() + static_cast<std::ptrdiff_t>(n), h.end());
  }
  return Submodule(a.ambient(), gens);
}

std::size_t FreeTensor::position(std::size_t coord, std::size_t copy) const {
  const std::size_t r = base.torsionRank();
  if (coord < r) return coord * rank + copy;
  return r * rank + (coord - r) * rank + copy;
}

Vector FreeTensor::embed(const Vector& x, std::size_t copy) const {
  Vector out(module.dimension());
  for (std::size_t j = 0; j < x.size(); ++j) out[position(j, copy)] = x[j];
  return out;
}

Submodule FreeTensor::embedSubmodule(const Submodule& S) const {
  if (S.ambient() != base) throw AlgebraError(ErrorKind::ShapeMismatch, "embedSubmodule: wrong ambient");
  std::vector<Vector> gens;
  for (std::size_t c = 0; c < rank; ++c)
    for (const auto& b : S.basis()) gens.push_back(embed(b, c));
  return Submodule(module, gens);
}

FreeTensor tensorWithFree(const FgModule& M, std::size_t k) {
  if (k < 1) throw AlgebraError(ErrorKind::InvalidArgument, "tensorWithFree: rank must be >= 1");
  std::vector<Integer> inv;
  for (const auto& d : M.invariants())
    for (std::size_t c = 0; c < k; ++c) inv.push_back(d);
  return FreeTensor{FgModule(M.ctx(), inv, M.freeRank() * k), k, M};
}

Vector Localization::push(const Vector& x) const { return module.reduce(baseChange.apply(x)); }

Submodule Localization::pushSubmodule(const Submodule& S) const {
  if (S.ambient() != source) throw AlgebraError(ErrorKind::ShapeMismatch, "pushSubmodule: wrong ambient");
  std::vector<Vector> gens;
  for (const auto& b : S.basis()) gens.push_back(push(b));
  return Submodule(module, gens);
}

Localization localizeModule(const FgModule& M, const Integer& a) {
  if (a < 1) throw AlgebraError(ErrorKind::InvalidArgument, "localizeModule: a must be >= 1");
  const RingCtx ctx = M.ctx().localizedAt(a);
  std::vector<Integer> inv;
  std::vector<std::size_t> keptFrom;
  for (std::size_t j = 0; j < M.torsionRank(); ++j) {
    const Integer d = ctx.strip(M.invariants()[j]);
    if (d != 1) {
      inv.push_back(d);
      keptFrom.push_back(j);
    }
  }
  for (std::size_t j = M.torsionRank(); j < M.dimension(); ++j) keptFrom.push_back(j);
  FgModule L(ctx, inv, M.freeRank());
  Matrix change(L.dimension(), M.dimension());
  for (std::size_t k = 0; k < keptFrom.size(); ++k) change(k, keptFrom[k]) = RingElem(1);
  return Localization{L, M, change};
}

bool isPureSubmodule(const Submodule& S, unsigned testBound) {
  const FgModule& M = S.ambient();
  const RingCtx& ctx = M.ctx();
  const Quotient q = quotient(S);
  if (q.module.isZero()) return true;
  std::map<Integer, unsigned> exponents;
  auto collect = [&](const std::vector<Integer>& invs) {
    for (const auto& d : invs)
      for (const auto& [p, e] : factor(d, ctx.factorCap())) exponents[p] = std::max(exponents[p], e);
  };
  collect(M.invariants());
  collect(q.module.invariants());
  auto pureAt = [&](const Integer& r) {
    const Submodule lhs = intersect(idealTimesModule(M, Ideal::generatedBy(r, ctx)), S);
    return lhs == scaleSubmodule(S, RingElem(r));
  };
  for (const auto& [p, e] : exponents) {
    Integer pk = 1;
    for (unsigned k = 1; k <= e + 1; ++k) {
      pk *= p;
      if (!pureAt(pk)) return false;
    }
  }
  for (unsigned r = 1; r <= testBound; ++r)
    if (!pureAt(Integer(r))) return false;
  return true;
}

}  // namespace primesub
