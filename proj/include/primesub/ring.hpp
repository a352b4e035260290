#pragma once

// Exact arithmetic in R_u = Z[1/u] for squarefree u, and its (principal) ideals.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace primesub {

using Integer = mpz_class;

enum class ErrorKind {
  DenominatorNotInverted,
  FactorCapExceeded,
  IdealNotPrime,
  ShapeMismatch,
  NotWellDefined,
  NotFree,
  ClosureViolation,
  NotCoprime,
  TooManyElements,
  InvalidArgument,
};

const char* name(ErrorKind kind);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline constexpr std::uint64_t kDefaultFactorCap = 1000000000ULL;

/// Sorted prime factorization of n >= 1 by trial division. Throws
/// FactorCapExceeded when a candidate divisor above `cap` would be needed.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n,
                                                 std::uint64_t cap = kDefaultFactorCap);

/// Product of the distinct primes dividing n (n >= 1).
Integer squarefreeKernel(const Integer& n, std::uint64_t cap = kDefaultFactorCap);

/// The ring Z[1/u]. A non-squarefree u is replaced by its squarefree kernel,
/// since Z[1/a] = Z[1/rad(a)]. Cheap to copy.
class RingCtx {
 public:
  explicit RingCtx(const Integer& u = 1, std::uint64_t factorCap = kDefaultFactorCap);

  const Integer& u() const { return data_->u; }
  const std::vector<Integer>& invertedPrimes() const { return data_->primes; }
  std::uint64_t factorCap() const { return data_->cap; }

  /// |n| with every inverted prime divided out; strip(0) = 0.
  Integer strip(const Integer& n) const;
  /// The u-part w of n, so that |n| = w * strip(n).
  Integer unitPart(const Integer& n) const;
  /// true iff every prime factor of n divides u (n != 0).
  bool isInvertedInteger(const Integer& n) const;

  /// Ring obtained by additionally inverting a.
  RingCtx localizedAt(const Integer& a) const;

  friend bool operator==(const RingCtx& a, const RingCtx& b) { return a.u() == b.u(); }

 private:
  struct Data {
    Integer u;
    std::vector<Integer> primes;
    std::uint64_t cap;
  };
  std::shared_ptr<const Data> data_;
};

/// An element num/den of R_u, always stored reduced with den > 0.
class RingElem {
 public:
  RingElem() = default;
  RingElem(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit RingElem(const Integer& v) : v_(v) {}

  /// Reduced representative of num/den; throws DenominatorNotInverted if a
  /// prime factor of den does not divide u.
  static RingElem canonicalize(const Integer& num, const Integer& den, const RingCtx& ctx);
  /// Parses "n" or "n/d" and canonicalizes in ctx.
  static RingElem parse(const std::string& text, const RingCtx& ctx);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }
  bool isZero() const { return sgn(v_) == 0; }
  bool isInteger() const { return v_.get_den() == 1; }

  bool isUnit(const RingCtx& ctx) const;
  /// Inverse of a unit of R_u.
  RingElem unitInverse(const RingCtx& ctx) const;

  std::string toString() const;

  friend RingElem operator+(const RingElem& a, const RingElem& b) { return fromQ(a.v_ + b.v_); }
  friend RingElem operator-(const RingElem& a, const RingElem& b) { return fromQ(a.v_ - b.v_); }
  friend RingElem operator*(const RingElem& a, const RingElem& b) { return fromQ(a.v_ * b.v_); }
  RingElem operator-() const { return fromQ(-v_); }
  RingElem& operator+=(const RingElem& o) { v_ += o.v_; return *this; }
  RingElem& operator-=(const RingElem& o) { v_ -= o.v_; return *this; }
  RingElem& operator*=(const RingElem& o) { v_ *= o.v_; return *this; }
  friend bool operator==(const RingElem& a, const RingElem& b) { return a.v_ == b.v_; }
  friend bool operator!=(const RingElem& a, const RingElem& b) { return a.v_ != b.v_; }

  static RingElem fromQ(mpq_class q) {
    RingElem r;
    r.v_ = std::move(q);
    r.v_.canonicalize();
    return r;
  }

 private:
  mpq_class v_;
};

/// Ideal of the PID R_u by its canonical generator: a non-negative integer
/// coprime to u. (0) is the zero ideal and (1) the unit ideal.
class Ideal {
 public:
  Ideal() : gen_(0) {}
  /// Canonical ideal generated by the integer n in R_u.
  static Ideal generatedBy(const Integer& n, const RingCtx& ctx) { return Ideal(ctx.strip(n)); }
  static Ideal zero() { return Ideal(Integer(0)); }
  static Ideal unit() { return Ideal(Integer(1)); }
  /// Wraps an already-canonical generator.
  static Ideal fromCanonical(const Integer& gen) { return Ideal(gen); }

  const Integer& gen() const { return gen_; }
  bool isZero() const { return gen_ == 0; }
  bool isUnit() const { return gen_ == 1; }

  bool contains(const RingElem& x) const;
  /// other ⊆ this.
  bool contains(const Ideal& other) const;

  std::string toString() const { return "(" + gen_.get_str() + ")"; }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.gen_ == b.gen_; }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return a.gen_ != b.gen_; }
  friend bool operator<(const Ideal& a, const Ideal& b) { return a.gen_ < b.gen_; }

 private:
  explicit Ideal(Integer g) : gen_(std::move(g)) {}
  Integer gen_;
};

Ideal idealOf(const RingElem& x, const RingCtx& ctx);
bool isPrimeIdeal(const Ideal& ideal, const RingCtx& ctx);
Ideal radical(const Ideal& ideal, const RingCtx& ctx);
/// Intersection of a nonempty family: lcm of generators, 0 absorbing.
Ideal idealIntersection(std::span<const Ideal> ideals, const RingCtx& ctx);
Ideal idealProduct(const Ideal& a, const Ideal& b, const RingCtx& ctx);
Ideal idealSum(const Ideal& a, const Ideal& b, const RingCtx& ctx);

// --- PID helpers used by the normal-form code -------------------------------

/// Canonical associate of x (its ideal generator) together with a unit c
/// such that c * x = gen.
std::pair<Integer, RingElem> normalizeAssociate(const RingElem& x, const RingCtx& ctx);

/// Representative of x in R_u/(p) as an integer in [0, p); p > 1 coprime to u.
Integer residue(const RingElem& x, const Integer& p);

/// true iff p divides x in R_u (p canonical, coprime to u, p != 0).
bool dividesElem(const Integer& p, const RingElem& x);

/// Bezout data in R_u: s*a + t*b = g with g the canonical gcd.
struct Bezout {
  RingElem s;
  RingElem t;
  Integer g;
};
Bezout bezout(const RingElem& a, const RingElem& b, const RingCtx& ctx);

}  // namespace primesub
