#pragma once

// Čech complexes of ℤ with respect to pairwise coprime integers, and
// deciders for subcomplexes that are principal ideals summand by summand.

#include "primesub/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace primesub {

/// ⊕_j ℤ[1/u_j] as a ℤ-module; elements are vectors of rationals.
struct LocFreeModule {
  std::vector<Integer> summands;  // squarefree u_j >= 1

  std::size_t size() const { return summands.size(); }
  bool containsElement(const Vector& x) const;
};

/// ℤ-linear map between localized free modules; entry (i, j) sends summand j
/// of the source into summand i of the target.
struct LocFreeMap {
  LocFreeModule source;
  LocFreeModule target;
  Matrix entries;  // target.size() x source.size()

  /// Throws ShapeMismatch or NotWellDefined when the map does not land in
  /// the target.
  void validate() const;
  Vector apply(const Vector& x) const { return entries.apply(x); }
};

/// Cohomological complex C^0 -> ... -> C^n; C^k is indexed by the k-subsets
/// of the elements in lexicographic order of positions.
struct CechComplex {
  std::vector<Integer> elements;
  std::vector<LocFreeModule> components;              // degrees 0..n
  std::vector<std::vector<std::vector<Integer>>> labels;  // labels[k][j]: the subset
  std::vector<LocFreeMap> diffs;                      // diffs[k] = d^k : C^k -> C^{k+1}

  std::size_t length() const { return components.size(); }
  /// Position of the summand labelled by `subset` in degree subset.size().
  std::optional<std::size_t> summandIndex(const std::vector<Integer>& subset) const;
  /// "ℤ[1/35]"-style name of a summand.
  std::string summandName(std::size_t degree, std::size_t j) const;
};

inline constexpr std::size_t kMaxCechElements = 6;

/// Throws NotCoprime, TooManyElements or InvalidArgument (element <= 1).
CechComplex buildCech(const std::vector<Integer>& elements);

struct CechViolation {
  std::size_t degree = 0;  // d^{degree+1} d^degree fails
  std::size_t basisIndex = 0;
};
std::optional<CechViolation> checkDSquared(const std::vector<LocFreeMap>& diffs);
inline std::optional<CechViolation> checkDSquared(const CechComplex& C) { return checkDSquared(C.diffs); }

/// The differential as a formula in the summand labels, e.g.
/// "(x{7} - x{5}, x{7} - x{3}, x{5} - x{3})".
std::string renderDifferential(const CechComplex& C, std::size_t degree);

/// ⊕_j g_j ℤ[1/u_j] inside one component.
struct IdealSubcomplexPart {
  std::vector<Integer> gens;
};

/// Strips each g_j to its canonical generator in ℤ[1/u_j].
IdealSubcomplexPart canonicalPart(const IdealSubcomplexPart& part, const LocFreeModule& component);
bool partContains(const IdealSubcomplexPart& part, const LocFreeModule& component, const Vector& x);
/// (⊕ g_j ℤ[1/u_j] : ⊕ ℤ[1/u_j]) over ℤ.
Ideal colonOverZ(const IdealSubcomplexPart& part, const LocFreeModule& component);

struct CechSubcomplexViolation {
  std::size_t degree = 0;
  std::size_t summand = 0;
  std::string message;
};
/// Checks shape and d^k(S^k) ⊆ S^{k+1}.
std::optional<CechSubcomplexViolation> validateCechSubcomplex(const std::vector<IdealSubcomplexPart>& parts,
                                                              const CechComplex& C);

/// Verdicts over ℤ. Witness index is the degree; its element lives in C^degree.
PrimenessReport isPrimeCechSubcomplex(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C);
PrimenessReport isPrimaryCechSubcomplex(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C);

/// Prime verdict of a single degree: NotProper when that part is the whole
/// component.
PrimenessReport isPrimeCechSubcomplexAt(const std::vector<IdealSubcomplexPart>& parts, const CechComplex& C,
                                        std::size_t degree);

/// The subcomplex 0 -> (g, 1, ..., 1) -> full -> ... -> full.
std::vector<IdealSubcomplexPart> degreeOneSubcomplex(const CechComplex& C, const Integer& g);

/// The worked example for the elements 3, 5, 7 with the prime and primary
/// subcomplexes built from q and q^2, and the literal <1/3> reading.
struct CechReproduction {
  CechComplex complex;
  std::vector<IdealSubcomplexPart> primeSub;
  std::vector<IdealSubcomplexPart> primarySub;
  std::vector<IdealSubcomplexPart> literalSub;
  PrimenessReport primeReport;          // prime decider on primeSub
  PrimenessReport primaryAsPrime;       // prime decider on primarySub
  PrimenessReport primaryReport;        // primary decider on primarySub
  PrimenessReport literalReport;        // prime decider on literalSub
  PrimenessReport literalDegreeOne;     // literalSub at degree 1 only
  std::vector<std::string> notes;
};
CechReproduction reproduceCechExample(const Integer& q = 2);

}  // namespace primesub
