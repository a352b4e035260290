#pragma once

// Finitely supported chain complexes of FgModules, subcomplexes, and the
// prime/primary subcomplex deciders.

#include "primesub/module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace primesub {

/// C_lo, ..., C_hi with d_i : C_i -> C_{i-1} for lo < i <= hi; C_i = 0
/// outside the window. All components share one ring.
class Complex {
 public:
  Complex(RingCtx ctx, long lo, std::vector<FgModule> modules, std::vector<ModuleMap> diffs);
  /// M placed in a single degree.
  static Complex concentrated(const FgModule& M, long degree = 0);

  const RingCtx& ctx() const { return ctx_; }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(modules_.size()) - 1; }
  std::size_t length() const { return modules_.size(); }
  bool inWindow(long i) const { return i >= lo() && i <= hi(); }

  const FgModule& module(long i) const;
  /// d_i : C_i -> C_{i-1}, for lo < i <= hi.
  const ModuleMap& diff(long i) const;
  const std::vector<FgModule>& modules() const { return modules_; }
  const std::vector<ModuleMap>& diffs() const { return diffs_; }

  friend bool operator==(const Complex& a, const Complex& b);

 private:
  RingCtx ctx_;
  long lo_;
  std::vector<FgModule> modules_;
  std::vector<ModuleMap> diffs_;
};

class Subcomplex {
 public:
  Subcomplex(Complex parent, std::vector<Submodule> parts);
  static Subcomplex zero(const Complex& C);
  static Subcomplex whole(const Complex& C);

  const Complex& parent() const { return parent_; }
  const Submodule& part(long i) const;
  const std::vector<Submodule>& parts() const { return parts_; }

  bool contains(const Subcomplex& other) const;
  Subcomplex operator+(const Subcomplex& other) const;
  friend bool operator==(const Subcomplex& a, const Subcomplex& b) { return a.parts_ == b.parts_; }

 private:
  Complex parent_;
  std::vector<Submodule> parts_;
};

struct Violation {
  long index = 0;
  std::optional<Vector> generator;
  std::string message;
};

/// Checks d_n d_{n+1} = 0; a violation reports n.
std::optional<Violation> validateComplex(const Complex& C);
/// Checks d_i(S_i) ⊆ S_{i-1}; a violation reports i and the offending generator.
std::optional<Violation> validateSubcomplex(const Subcomplex& S);

/// The subcomplex generated by the given elements (index, coordinates).
Subcomplex generatedSubcomplex(const Complex& C, const std::vector<std::pair<long, Vector>>& elements);
Subcomplex intersect(const Subcomplex& a, const Subcomplex& b);

std::vector<long> properIndices(const Subcomplex& S);

PrimenessReport isPrimeSubcomplex(const Subcomplex& S);
PrimenessReport isPrimarySubcomplex(const Subcomplex& S);
/// (S:C), the intersection of the per-index colons.
Ideal residual(const Subcomplex& S);
/// Common primes of all components' zero-divisor sets, with the zero flag
/// set iff every component in the window is nonzero.
PrimeSet zeroDivisorsOfComplex(const Complex& C);
Ideal annihilatorOfComplex(const Complex& C);
Subcomplex torsionSubcomplex(const Complex& C);
bool isPureSubcomplex(const Subcomplex& S, unsigned testBound = 0);
bool isMaximalSubcomplex(const Subcomplex& S);
Subcomplex scaleByIdeal(const Complex& C, const Ideal& m);

struct TensoredComplex {
  Complex complex;
  Subcomplex sub;
};
TensoredComplex tensorComplexWithFree(const Subcomplex& S, std::size_t k);

struct LocalizedComplex {
  Complex complex;
  Subcomplex sub;
  /// Every proper index has quotient invariants coprime to a, so
  /// localization neither creates nor destroys primeness.
  bool properFlag = false;
};
LocalizedComplex localizeComplex(const Subcomplex& S, const Integer& a);

struct SaturatedSubcomplex {
  Subcomplex result;
  bool hypothesisViolated = false;  // some (S_i:C_i) is not a prime contained in p
  bool notProper = false;
};
SaturatedSubcomplex saturateSubcomplex(const Subcomplex& S, const Ideal& p);

/// N_i = span of the selected basis columns, T = N + pF, result = saturation
/// of T at p. Throws NotFree or ClosureViolation.
Subcomplex constructFreePrime(const Complex& F, const Ideal& p,
                              const std::vector<std::vector<std::size_t>>& selectors);

/// Evaluates the equivalent characterizations of primeness. Keys "1".."11";
/// 3, 5, 7 and 11 are checked on sampled witnesses only.
std::map<std::string, bool> equivalenceAudit(const Subcomplex& S, unsigned sampleBudget, std::uint64_t seed);
/// Keys of the exactly evaluated conditions.
const std::vector<std::string>& exactConditions();
const std::vector<std::string>& sampledConditions();

struct AvoidanceResult {
  enum class Kind { Holds, InclusionFailure, NotPrime, TheoremViolation };
  Kind kind = Kind::Holds;
  std::size_t which = 0;       // 1-based position in the family when Holds
  bool viaContainment = false; // T_which ⊆ S (otherwise via residuals)
  long index = 0;              // InclusionFailure: offending degree
  Vector element;              // InclusionFailure: element of ∩T not in S
  std::string detail;
};
const char* name(AvoidanceResult::Kind k);

/// Prime avoidance with complex-level residuals (T_i : C) ⊆ (S : C).
AvoidanceResult primeAvoidance(const std::vector<Subcomplex>& Ts, const Subcomplex& S);
/// Degreewise form: at every proper index j some T_i has (T_i)_j ⊆ S_j or
/// ((T_i)_j : C_j) ⊆ (S_j : C_j).
AvoidanceResult primeAvoidancePerIndex(const std::vector<Subcomplex>& Ts, const Subcomplex& S);

}  // namespace primesub
