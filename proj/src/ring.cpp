#include "primesub/ring.hpp"

#include <algorithm>

namespace primesub {

const char* name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DenominatorNotInverted: return "DenominatorNotInverted";
    case ErrorKind::FactorCapExceeded: return "FactorCapExceeded";
    case ErrorKind::IdealNotPrime: return "IdealNotPrime";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::TooManyElements: return "TooManyElements";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n, std::uint64_t cap) {
  if (n < 1) throw AlgebraError(ErrorKind::InvalidArgument, "factor: n must be >= 1");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer m = n;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(Integer(2));
  Integer d = 3;
  while (d * d <= m) {
    if (d > cap) {
      throw AlgebraError(ErrorKind::FactorCapExceeded,
                         "factor: trial divisor exceeds cap while factoring " + n.get_str());
    }
    strip(d);
    d += 2;
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

Integer squarefreeKernel(const Integer& n, std::uint64_t cap) {
  Integer r = 1;
  for (const auto& [p, e] : factor(n, cap)) r *= p;
  return r;
}

RingCtx::RingCtx(const Integer& u, std::uint64_t factorCap) {
  if (u < 1) throw AlgebraError(ErrorKind::InvalidArgument, "RingCtx: u must be >= 1");
  if (factorCap < 2) throw AlgebraError(ErrorKind::InvalidArgument, "RingCtx: factor cap must be >= 2");
  auto data = std::make_shared<Data>();
  data->u = 1;
  for (const auto& [p, e] : factor(u, factorCap)) {
    data->primes.push_back(p);
    data->u *= p;
  }
  data->cap = factorCap;
  data_ = std::move(data);
}

Integer RingCtx::strip(const Integer& n) const {
  Integer m = abs(n);
  if (m == 0) return m;
  for (const auto& p : data_->primes) {
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
  }
  return m;
}

Integer RingCtx::unitPart(const Integer& n) const {
  if (n == 0) return Integer(1);
  return Integer(abs(n) / strip(n));
}

bool RingCtx::isInvertedInteger(const Integer& n) const { return n != 0 && strip(n) == 1; }

RingCtx RingCtx::localizedAt(const Integer& a) const {
  return RingCtx(Integer(u() * a), factorCap());
}

RingElem RingElem::canonicalize(const Integer& num, const Integer& den, const RingCtx& ctx) {
  if (den <= 0) throw AlgebraError(ErrorKind::InvalidArgument, "canonicalize: den must be positive");
  mpq_class q(num, den);
  q.canonicalize();
  if (!ctx.isInvertedInteger(q.get_den())) {
    throw AlgebraError(ErrorKind::DenominatorNotInverted,
                       "denominator " + q.get_den().get_str() + " is not inverted in Z[1/" +
                           ctx.u().get_str() + "]");
  }
  return fromQ(std::move(q));
}

RingElem RingElem::parse(const std::string& text, const RingCtx& ctx) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(text, 10);
    } else {
      num = Integer(text.substr(0, slash), 10);
      den = Integer(text.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw AlgebraError(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
  }
  if (den < 0) {
    den = -den;
    num = -num;
  }
  return canonicalize(num, den, ctx);
}

bool RingElem::isUnit(const RingCtx& ctx) const { return !isZero() && ctx.strip(num()) == 1; }

RingElem RingElem::unitInverse(const RingCtx& ctx) const {
  if (!isUnit(ctx)) throw AlgebraError(ErrorKind::InvalidArgument, toString() + " is not a unit");
  return fromQ(1 / v_);
}

std::string RingElem::toString() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Ideal::contains(const RingElem& x) const {
  if (x.isZero()) return true;
  if (gen_ == 0) return false;
  // x = a/w with w a unit: x ∈ (g) iff g | a.
  return mpz_divisible_p(x.num().get_mpz_t(), gen_.get_mpz_t()) != 0;
}

bool Ideal::contains(const Ideal& other) const {
  if (other.gen_ == 0) return true;
  if (gen_ == 0) return false;
  return mpz_divisible_p(other.gen_.get_mpz_t(), gen_.get_mpz_t()) != 0;
}

Ideal idealOf(const RingElem& x, const RingCtx& ctx) { return Ideal::generatedBy(x.num(), ctx); }

bool isPrimeIdeal(const Ideal& ideal, const RingCtx& ctx) {
  if (ideal.isZero()) return true;
  if (ideal.isUnit()) return false;
  const auto f = factor(ideal.gen(), ctx.factorCap());
  return f.size() == 1 && f.front().second == 1;
}

Ideal radical(const Ideal& ideal, const RingCtx& ctx) {
  if (ideal.isZero() || ideal.isUnit()) return ideal;
  return Ideal::fromCanonical(squarefreeKernel(ideal.gen(), ctx.factorCap()));
}

Ideal idealIntersection(std::span<const Ideal> ideals, const RingCtx& ctx) {
  if (ideals.empty()) throw AlgebraError(ErrorKind::InvalidArgument, "idealIntersection: empty family");
  Integer g = 1;
  for (const auto& I : ideals) {
    if (I.isZero()) return Ideal::zero();
    g = lcm(g, I.gen());
  }
  return Ideal::generatedBy(g, ctx);
}

Ideal idealProduct(const Ideal& a, const Ideal& b, const RingCtx& ctx) {
  return Ideal::generatedBy(Integer(a.gen() * b.gen()), ctx);
}

Ideal idealSum(const Ideal& a, const Ideal& b, const RingCtx& ctx) {
  return Ideal::generatedBy(gcd(a.gen(), b.gen()), ctx);
}

std::pair<Integer, RingElem> normalizeAssociate(const RingElem& x, const RingCtx& ctx) {
  if (x.isZero()) return {Integer(0), RingElem(1)};
  const Integer n = x.num();
  const Integer g = ctx.strip(n);
  const Integer w = abs(n) / g;
  // c = sign(n) * den / w, so that c * n/den = |n|/w = g.
  mpq_class c(x.den(), w);
  if (n < 0) c = -c;
  return {g, RingElem::fromQ(c)};
}

Integer residue(const RingElem& x, const Integer& p) {
  Integer inv;
  const Integer den = x.den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw AlgebraError(ErrorKind::InvalidArgument, "residue: denominator not invertible modulo " + p.get_str());
  }
  Integer r = (x.num() * inv) % p;
  if (r < 0) r += p;
  return r;
}

bool dividesElem(const Integer& p, const RingElem& x) {
  if (x.isZero()) return true;
  if (p == 0) return false;
  return mpz_divisible_p(x.num().get_mpz_t(), p.get_mpz_t()) != 0;
}

Bezout bezout(const RingElem& a, const RingElem& b, const RingCtx& ctx) {
  if (a.isZero() && b.isZero()) return {RingElem(0), RingElem(0), Integer(0)};
  Integer g0, x, y;
  const Integer na = a.num();
  const Integer nb = b.num();
  mpz_gcdext(g0.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  const Integer g = ctx.strip(g0);
  const Integer w = g0 / g;
  RingElem s = RingElem::fromQ(mpq_class(Integer(x * a.den()), w));
  RingElem t = RingElem::fromQ(mpq_class(Integer(y * b.den()), w));
  return {std::move(s), std::move(t), g};
}

}  // namespace primesub
