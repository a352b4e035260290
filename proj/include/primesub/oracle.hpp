#pragma once

// Brute-force reference implementations. On finite modules every sweep is
// exhaustive; on infinite modules the sweeps only search a coordinate box and
// can refute but not confirm.

#include "primesub/cech.hpp"
#include "primesub/module.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace primesub {

struct SearchBox {
  long scalarBound = 12;
  long elementBound = 12;
  unsigned denExpBound = 0;
};

/// Elements of a finite module numbered in mixed radix over the invariants.
class FiniteModule {
 public:
  explicit FiniteModule(const FgModule& M);

  const FgModule& module() const { return module_; }
  std::size_t order() const { return order_; }
  std::size_t encode(const Vector& x) const;
  Vector decode(std::size_t index) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(long r, std::size_t a) const;

  /// Element set of the span of `gens`, by closure under addition.
  std::vector<bool> span(const std::vector<Vector>& gens) const;
  std::vector<bool> elementSet(const Submodule& S) const { return span(S.generators()); }

 private:
  FgModule module_;
  std::vector<long> radix_;
  std::size_t order_ = 1;
};

struct Counterexample {
  long index = 0;  // degree, for complexes
  RingElem scalar;
  Vector element;
};

struct BruteVerdict {
  bool proper = true;
  bool holds = false;
  std::optional<Counterexample> counterexample;
};

// --- finite modules: exact ---------------------------------------------------

BruteVerdict bruteIsPrimeSubmodule(const Submodule& S);
BruteVerdict bruteIsPrimarySubmodule(const Submodule& S);
Ideal bruteColon(const Submodule& S);
/// Integers r in [0, bound] that kill some nonzero element.
std::set<long> bruteZ(const FgModule& M, long bound);
/// Maximal members among the annihilators of nonzero elements.
std::vector<Integer> bruteAss(const FgModule& M);
std::vector<bool> bruteSaturate(const Submodule& S, const Ideal& p);
std::vector<bool> bruteIntersect(const Submodule& a, const Submodule& b);
bool brutePure(const Submodule& S);

/// Compares every fast decider against the sweeps on a submodule of a
/// finite module. Returns one line per disagreement.
/// With `other`, intersection is compared as well.
std::vector<std::string> compareWithOracle(const Submodule& S, const Submodule* other = nullptr);

/// All finite modules over R_u of order <= maxOrder, listed by order.
std::vector<FgModule> finiteModulesUpTo(long maxOrder, const RingCtx& ctx);

// --- infinite modules: refutation only ---------------------------------------

/// Searches the box for r, m with r m ∈ S, m ∉ S and r M ⊄ S (resp. no power
/// of r in (S:M) up to exponent 8 when `primary`).
std::optional<Counterexample> boxRefute(const Submodule& S, const SearchBox& box, bool primary);

// --- Čech subcomplexes: bounded sweeps ---------------------------------------

/// r ∈ [1, scalarBound] and single-summand elements n / u_j^e with
/// |n| <= elementBound, e <= denExpBound. A direct sum fails the prime
/// condition iff one summand does, so single-summand elements suffice.
BruteVerdict bruteCechPrime(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C,
                            const SearchBox& box, bool primary);
Ideal bruteColonOverZ(const IdealSubcomplexPart& part, const LocFreeModule& component, const SearchBox& box);

}  // namespace primesub
