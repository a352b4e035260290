#pragma once

// Finitely generated modules over R_u in invariant-factor form, their
// submodules, and submodule-level algebra.

#include "primesub/matrix.hpp"
#include "primesub/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace primesub {

/// M = R/(d_1) ⊕ ... ⊕ R/(d_r) ⊕ R^f with d_1 | ... | d_r, every d_j a
/// non-unit canonical generator. Coordinates list the torsion summands first.
/// Handle type: copies share the immutable data.
class FgModule {
 public:
  /// Optional record of where the canonical form came from.
  struct Presentation {
    Matrix relations;    // columns are relations on R^m
    Matrix toCanonical;  // dimension x m
    Matrix fromCanonical;  // m x dimension
  };

  FgModule();
  FgModule(RingCtx ctx, std::vector<Integer> invariants, std::size_t freeRank);

  /// Canonical form of R^m / colspace(relations), keeping the coordinate change.
  static FgModule fromPresentation(const RingCtx& ctx, const Matrix& relations);
  static FgModule free(const RingCtx& ctx, std::size_t rank) { return FgModule(ctx, {}, rank); }
  static FgModule zero(const RingCtx& ctx) { return FgModule(ctx, {}, 0); }

  const RingCtx& ctx() const { return data_->ctx; }
  const std::vector<Integer>& invariants() const { return data_->invariants; }
  std::size_t torsionRank() const { return data_->invariants.size(); }
  std::size_t freeRank() const { return data_->freeRank; }
  std::size_t dimension() const { return torsionRank() + freeRank(); }
  bool isZero() const { return dimension() == 0; }
  bool isFinite() const { return freeRank() == 0; }
  /// Order of a finite module (product of invariants).
  Integer order() const;
  /// d_j for a torsion coordinate, 0 for a free one.
  const Integer& relationOrder(std::size_t j) const;
  const Presentation* presentation() const { return data_->presentation.get(); }

  /// Reduces torsion coordinates into [0, d_j).
  Vector reduce(Vector coords) const;
  Vector basisVector(std::size_t j) const;
  /// The relations d_j e_j as vectors.
  std::vector<Vector> relationVectors() const;

  friend bool operator==(const FgModule& a, const FgModule& b);
  friend bool operator!=(const FgModule& a, const FgModule& b) { return !(a == b); }

  std::string describe() const;

 private:
  struct Data {
    RingCtx ctx;
    std::vector<Integer> invariants;
    std::size_t freeRank = 0;
    std::shared_ptr<const Presentation> presentation;
  };
  std::shared_ptr<const Data> data_;
};

class ModElem {
 public:
  ModElem(FgModule module, Vector coords);
  const FgModule& module() const { return module_; }
  const Vector& coords() const { return coords_; }
  bool isZero() const { return isZeroVector(coords_); }
  ModElem scaledBy(const RingElem& r) const { return ModElem(module_, scaled(coords_, r)); }
  std::string toString() const;
  friend bool operator==(const ModElem& a, const ModElem& b) {
    return a.module_ == b.module_ && a.coords_ == b.coords_;
  }

 private:
  FgModule module_;
  Vector coords_;
};

/// Submodule of an FgModule, stored as the Hermite basis of its preimage in
/// R^dimension (ambient relations adjoined). Equality is basis identity.
class Submodule {
 public:
  Submodule(FgModule ambient, const std::vector<Vector>& generators);
  static Submodule zero(const FgModule& M) { return Submodule(M, {}); }
  static Submodule whole(const FgModule& M);

  const FgModule& ambient() const { return ambient_; }
  /// Hermite basis, including rows coming from the ambient relations.
  const std::vector<Vector>& basis() const { return basis_; }
  /// Basis rows reduced in the ambient, with zero rows dropped.
  std::vector<Vector> generators() const;

  bool contains(const Vector& coords) const;
  bool contains(const ModElem& m) const { return contains(m.coords()); }
  bool contains(const Submodule& other) const;
  bool isWhole() const;

  Submodule operator+(const Submodule& other) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }

 private:
  FgModule ambient_;
  std::vector<Vector> basis_;
};

/// R-linear map in canonical coordinates: y = matrix * x.
class ModuleMap {
 public:
  /// Throws NotWellDefined unless every domain relation lands in the
  /// codomain relations.
  ModuleMap(FgModule domain, FgModule codomain, Matrix matrix);
  static ModuleMap zero(const FgModule& domain, const FgModule& codomain);

  const FgModule& domain() const { return domain_; }
  const FgModule& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(const Vector& x) const { return codomain_.reduce(matrix_.apply(x)); }
  Submodule image(const Submodule& S) const;
  /// this ∘ first.
  ModuleMap after(const ModuleMap& first) const;
  bool isZero() const;

 private:
  FgModule domain_;
  FgModule codomain_;
  Matrix matrix_;
};

/// Finite set of prime ideals; includesZero records whether (0) belongs.
struct PrimeSet {
  std::vector<Integer> primes;  // sorted nonzero primes
  bool includesZero = false;

  bool empty() const { return primes.empty() && !includesZero; }
  /// Membership of a ring element in the union of the listed primes.
  bool containsElement(const RingElem& r) const;
  /// The union of the listed primes equals the ideal I as a set of elements.
  bool equalsAsElementSet(const Ideal& I) const;
  /// The set is exactly {I}.
  bool isSingleton(const Ideal& I) const;
  std::string toString() const;
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

enum class Verdict { Prime, Primary, NotPrime, NotPrimary, NotProper };
const char* name(Verdict v);

/// Counterexample to primeness/primaryness: scalar * element ∈ S_index while
/// element ∉ S_index and scalar ∉ (S:C) (resp. its radical).
struct Witness {
  long index = 0;
  RingElem scalar;
  Vector element;
  std::string replay;
};

struct PrimenessReport {
  Verdict verdict = Verdict::NotProper;
  std::map<long, Ideal> perIndexIdeals;
  std::optional<Witness> witness;
  std::map<std::string, bool> conditionTrace;
  std::vector<std::string> notes;

  bool affirmative() const { return verdict == Verdict::Prime || verdict == Verdict::Primary; }
};

// --- operations --------------------------------------------------------------

/// M/S with the projection from M and a lift of each quotient basis vector.
struct Quotient {
  FgModule module;
  Matrix projection;  // quotient.dimension x ambient.dimension
  Matrix lift;        // ambient.dimension x quotient.dimension
  Vector project(const Vector& x) const { return module.reduce(projection.apply(x)); }
  Vector liftBasis(std::size_t j) const { return lift.column(j); }
};

Quotient quotient(const Submodule& S);
Quotient quotient(const FgModule& M, const Submodule& S);

/// (S : M) = Ann(M/S).
Ideal colon(const Submodule& S);
Ideal colon(const Submodule& S, const FgModule& M);
/// {r : r T ⊆ S} for T ⊆ ambient, computed through membership tests only.
Ideal colonOf(const Submodule& S, const Submodule& T);
/// (S : r) = {m : r m ∈ S}.
Submodule colonByElement(const Submodule& S, const RingElem& r);
/// (S : J) for J = (gen).
Submodule colonByIdeal(const Submodule& S, const Ideal& J);
Ideal annihilatorOfElement(const ModElem& m);
Submodule torsionSubmodule(const FgModule& M);
PrimeSet associatedPrimes(const FgModule& M);
PrimeSet zeroDivisors(const FgModule& M);
Submodule scaleSubmodule(const Submodule& S, const RingElem& r);
Submodule idealTimesModule(const FgModule& M, const Ideal& I);

PrimenessReport isPrimeSubmodule(const Submodule& S);
PrimenessReport isPrimarySubmodule(const Submodule& S);
/// Replays a witness against S; `primary` selects the radical test.
bool witnessReplays(const Submodule& S, const Witness& w, bool primary);

struct Saturation {
  Submodule result;
  bool notProper = false;
};
/// {m : t m ∈ S for some t ∉ p}; p must be prime (possibly zero).
Saturation saturate(const Submodule& S, const Ideal& p);

Submodule intersect(const Submodule& a, const Submodule& b);

/// M^⊕k, with copy c of coordinate j at position j*k + c inside the torsion
/// block (and likewise inside the free block).
struct FreeTensor {
  FgModule module;
  std::size_t rank = 1;
  FgModule base;
  Vector embed(const Vector& x, std::size_t copy) const;
  std::size_t position(std::size_t coord, std::size_t copy) const;
  Submodule embedSubmodule(const Submodule& S) const;
};
FreeTensor tensorWithFree(const FgModule& M, std::size_t k);

/// Base change along R_u -> R_{rad(u a)}.
struct Localization {
  FgModule module;
  FgModule source;
  Matrix baseChange;  // module.dimension x source.dimension
  Vector push(const Vector& x) const;
  Submodule pushSubmodule(const Submodule& S) const;
};
Localization localizeModule(const FgModule& M, const Integer& a);

/// S is pure: rM ∩ S = rS for every r. Checks all prime powers that can
/// matter plus r = 1..testBound.
bool isPureSubmodule(const Submodule& S, unsigned testBound = 0);

}  // namespace primesub
