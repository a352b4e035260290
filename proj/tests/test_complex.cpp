#include "doctest.h"

#include "primesub/complex.hpp"

using namespace primesub;

namespace {

const RingCtx Z(1);

Vector V(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Matrix scalarMatrix(long a) {
  Matrix m(1, 1);
  m(0, 0) = a;
  return m;
}

// 0 -> ℤ --(×a)--> ℤ -> 0 in degrees 1 -> 0.
Complex line(long a) {
  const FgModule z = FgModule::free(Z, 1);
  return Complex(Z, 0, {z, z}, {ModuleMap(z, z, scalarMatrix(a))});
}

Subcomplex pair(const Complex& C, long g0, long g1) {
  return Subcomplex(C, {Submodule(C.module(0), {V({g0})}), Submodule(C.module(1), {V({g1})})});
}

}  // namespace

TEST_CASE("validateComplex") {
  CHECK_FALSE(validateComplex(line(2)));
  const FgModule z = FgModule::free(Z, 1);
  const Complex bad(Z, 0, {z, z, z}, {ModuleMap(z, z, scalarMatrix(3)), ModuleMap(z, z, scalarMatrix(2))});
  auto v = validateComplex(bad);
  REQUIRE(v);
  CHECK(v->index == 1);
  const FgModule z4(Z, {4}, 0);
  const Complex ok(Z, 0, {z4, z4, z}, {ModuleMap(z4, z4, scalarMatrix(2)), ModuleMap(z, z4, scalarMatrix(2))});
  CHECK_FALSE(validateComplex(ok));
}

TEST_CASE("validateSubcomplex") {
  const Complex C = line(1);
  CHECK_FALSE(validateSubcomplex(Subcomplex::whole(C)));
  CHECK_FALSE(validateSubcomplex(Subcomplex::zero(C)));
  auto v = validateSubcomplex(pair(C, 2, 1));
  REQUIRE(v);
  CHECK(v->index == 1);
}

TEST_CASE("proper indices") {
  const Complex C = line(2);
  CHECK(properIndices(Subcomplex::whole(C)).empty());
  CHECK(properIndices(Subcomplex::zero(C)) == std::vector<long>{0, 1});
  CHECK(properIndices(pair(C, 1, 2)) == std::vector<long>{1});
}

TEST_CASE("prime and primary subcomplexes of the doubling complex") {
  const Complex C = line(2);
  // ×2 from degree 1 to degree 0; S_1 is the proper slot.
  auto r = isPrimeSubcomplex(pair(C, 1, 2));
  CHECK(r.verdict == Verdict::Prime);
  CHECK(r.perIndexIdeals.at(1).gen() == 2);

  const Subcomplex four = pair(C, 1, 4);
  CHECK_FALSE(validateSubcomplex(four));
  r = isPrimeSubcomplex(four);
  CHECK(r.verdict == Verdict::NotPrime);
  REQUIRE(r.witness);
  CHECK(r.witness->index == 1);
  CHECK(r.witness->scalar == RingElem(2));
  CHECK(r.witness->element == V({2}));
  CHECK(witnessReplays(four.part(1), *r.witness, false));
  CHECK(isPrimeSubcomplex(Subcomplex::whole(C)).verdict == Verdict::NotProper);

  auto p = isPrimarySubcomplex(four);
  CHECK(p.verdict == Verdict::Primary);
  CHECK(p.perIndexIdeals.at(1).gen() == 2);
  p = isPrimarySubcomplex(pair(C, 1, 6));
  CHECK(p.verdict == Verdict::NotPrimary);
  REQUIRE(p.witness);
  CHECK(p.witness->scalar == RingElem(2));
  CHECK(p.witness->element == V({3}));
  CHECK(isPrimarySubcomplex(pair(C, 1, 2)).verdict == Verdict::Primary);
}

TEST_CASE("residual, zero divisors and annihilator") {
  const Complex C = line(0);
  CHECK(residual(pair(C, 4, 6)).gen() == 12);
  CHECK(residual(Subcomplex::zero(Complex::concentrated(FgModule::free(Z, 1)))).isZero());
  CHECK(residual(Subcomplex::whole(C)).isUnit());

  const FgModule z12(Z, {12}, 0), z18(Z, {18}, 0), z4(Z, {4}, 0), z9(Z, {9}, 0), z6(Z, {6}, 0);
  const Complex a(Z, 0, {z12, z18}, {ModuleMap::zero(z18, z12)});
  CHECK(zeroDivisorsOfComplex(a) == PrimeSet{{2, 3}, true});
  const Complex b(Z, 0, {z4, z9}, {ModuleMap::zero(z9, z4)});
  CHECK(zeroDivisorsOfComplex(b) == PrimeSet{{}, true});
  CHECK(zeroDivisorsOfComplex(Complex::concentrated(FgModule::free(Z, 1))) == PrimeSet{{}, true});

  CHECK(annihilatorOfComplex(Complex(Z, 0, {z4, z6}, {ModuleMap::zero(z6, z4)})).gen() == 12);
  CHECK(annihilatorOfComplex(C).isZero());
  CHECK(annihilatorOfComplex(Complex(Z, 0, {}, {})).isUnit());
}

TEST_CASE("torsion subcomplex") {
  CHECK(torsionSubcomplex(line(2)) == Subcomplex::zero(line(2)));
  const FgModule z4(Z, {4}, 0);
  const Complex t = Complex::concentrated(z4);
  CHECK(torsionSubcomplex(t) == Subcomplex::whole(t));
  const FgModule mixed(Z, {6}, 1);
  const Complex m = Complex::concentrated(mixed);
  CHECK(torsionSubcomplex(m).part(0) == Submodule(mixed, {V({1, 0})}));
  CHECK(isPrimeSubcomplex(torsionSubcomplex(m)).verdict == Verdict::Prime);
}

TEST_CASE("pure, maximal and scaled subcomplexes") {
  const Complex z = Complex::concentrated(FgModule::free(Z, 1));
  CHECK_FALSE(isPureSubcomplex(Subcomplex(z, {Submodule(z.module(0), {V({2})})})));
  const Complex m = Complex::concentrated(FgModule(Z, {3}, 1));
  CHECK(isPureSubcomplex(Subcomplex(m, {Submodule(m.module(0), {V({1, 0})})})));
  CHECK(isPureSubcomplex(Subcomplex::whole(m)));

  const Complex C = line(2);
  CHECK(isMaximalSubcomplex(pair(C, 1, 2)));
  CHECK_FALSE(isMaximalSubcomplex(pair(C, 1, 4)));
  CHECK_FALSE(isMaximalSubcomplex(Subcomplex(C, {Submodule::whole(C.module(0)), Submodule::zero(C.module(1))})));

  const FgModule z6(Z, {6}, 0);
  const Complex c6 = Complex::concentrated(z6);
  CHECK(scaleByIdeal(c6, Ideal::fromCanonical(3)).part(0) == Submodule(z6, {V({3})}));
  CHECK(scaleByIdeal(C, Ideal::unit()) == Subcomplex::whole(C));
  CHECK(scaleByIdeal(C, Ideal::zero()) == Subcomplex::zero(C));
}

TEST_CASE("tensor with free complexes") {
  const Complex C = line(2);
  const Subcomplex S = pair(C, 1, 2);
  auto t1 = tensorComplexWithFree(S, 1);
  CHECK(t1.complex == C);
  CHECK(t1.sub == S);
  auto t2 = tensorComplexWithFree(S, 2);
  CHECK(t2.sub.part(1) == Submodule(t2.complex.module(1), {V({2, 0}), V({0, 2})}));
  CHECK(t2.sub.part(0).isWhole());
  CHECK_FALSE(validateComplex(t2.complex));
  CHECK_FALSE(validateSubcomplex(t2.sub));
  CHECK(isPrimeSubcomplex(t2.sub).verdict == Verdict::Prime);
  CHECK(isPrimeSubcomplex(tensorComplexWithFree(Subcomplex::whole(C), 3).sub).verdict == Verdict::NotProper);
}

TEST_CASE("localization of complexes") {
  const Complex C = line(2);
  const Subcomplex S = pair(C, 1, 2);
  auto l5 = localizeComplex(S, 5);
  CHECK(l5.properFlag);
  CHECK(l5.complex.ctx().u() == 5);
  CHECK(isPrimeSubcomplex(l5.sub).verdict == Verdict::Prime);
  CHECK(isPrimeSubcomplex(l5.sub).perIndexIdeals.at(1).gen() == 2);
  auto l2 = localizeComplex(S, 2);
  CHECK_FALSE(l2.properFlag);
  CHECK(l2.sub == Subcomplex::whole(l2.complex));
  auto l1 = localizeComplex(S, 1);
  CHECK(l1.complex == C);
  CHECK(l1.sub == S);
  CHECK(l1.properFlag);
}

TEST_CASE("saturation of subcomplexes") {
  const Complex C = line(2);
  auto s = saturateSubcomplex(pair(C, 1, 6), Ideal::fromCanonical(2));
  CHECK(s.hypothesisViolated);
  CHECK(s.result == pair(C, 1, 2));
  s = saturateSubcomplex(pair(C, 1, 2), Ideal::fromCanonical(2));
  CHECK_FALSE(s.hypothesisViolated);
  CHECK(s.result == pair(C, 1, 2));
  const Complex F = line(0);
  s = saturateSubcomplex(Subcomplex::zero(F), Ideal::fromCanonical(3));
  CHECK(s.result == Subcomplex::zero(F));
}

TEST_CASE("prime subcomplexes of free complexes") {
  const FgModule z2 = FgModule::free(Z, 2);
  Matrix d(2, 2);
  d(0, 0) = 1;
  const Complex F(Z, 0, {z2, z2}, {ModuleMap(z2, z2, d)});
  const Subcomplex S = constructFreePrime(F, Ideal::fromCanonical(3), {{0}, {}});
  CHECK(S.part(0) == Submodule(z2, {V({1, 0}), V({0, 3})}));
  CHECK(S.part(1) == Submodule(z2, {V({3, 0}), V({0, 3})}));
  auto r = isPrimeSubcomplex(S);
  CHECK(r.verdict == Verdict::Prime);
  CHECK(r.perIndexIdeals.at(0).gen() == 3);
  CHECK(r.perIndexIdeals.at(1).gen() == 3);

  CHECK(isPrimeSubcomplex(constructFreePrime(F, Ideal::fromCanonical(3), {{0, 1}, {0, 1}})).verdict ==
        Verdict::NotProper);
  const Complex one = Complex::concentrated(FgModule::free(Z, 1));
  const Subcomplex two = constructFreePrime(one, Ideal::fromCanonical(2), {{}});
  CHECK(two.part(0) == Submodule(one.module(0), {V({2})}));
  CHECK(isPrimeSubcomplex(two).verdict == Verdict::Prime);

  const Complex tors = Complex::concentrated(FgModule(Z, {2}, 0));
  CHECK_THROWS_AS(constructFreePrime(tors, Ideal::fromCanonical(2), {{}}), AlgebraError);
}

TEST_CASE("equivalence audit") {
  const Complex C = line(2);
  for (const auto& [k, v] : equivalenceAudit(pair(C, 1, 2), 20, 1)) CHECK_MESSAGE(v, "condition " << k);
  auto t = equivalenceAudit(pair(C, 1, 4), 20, 1);
  for (const auto& k : exactConditions()) CHECK_MESSAGE(!t.at(k), "condition " << k);
  CHECK_FALSE(t.at("11"));

  const FgModule mixed(Z, {6}, 1), z = FgModule::free(Z, 1);
  Matrix d(2, 1);
  d(1, 0) = 2;
  const Complex M(Z, 0, {mixed, z}, {ModuleMap(z, mixed, d)});
  for (const auto& [k, v] : equivalenceAudit(torsionSubcomplex(M), 20, 3)) CHECK_MESSAGE(v, "condition " << k);
}

TEST_CASE("prime avoidance") {
  const Complex C = Complex::concentrated(FgModule::free(Z, 1));
  auto sub = [&](long g) { return Subcomplex(C, {Submodule(C.module(0), {V({g})})}); };
  auto r = primeAvoidance({sub(4), sub(6)}, sub(2));
  CHECK(r.kind == AvoidanceResult::Kind::Holds);
  CHECK(r.which == 1);
  r = primeAvoidance({sub(3), sub(5)}, sub(2));
  CHECK(r.kind == AvoidanceResult::Kind::InclusionFailure);
  CHECK(r.element == V({15}));
  r = primeAvoidance({sub(2)}, sub(2));
  CHECK(r.kind == AvoidanceResult::Kind::Holds);
  CHECK(r.which == 1);
  CHECK(primeAvoidance({sub(4)}, sub(4)).kind == AvoidanceResult::Kind::NotPrime);
}

TEST_CASE("complex-level prime avoidance can fail across degrees") {
  // Zero differential ℤ -> ℤ, S = (2ℤ, 3ℤ) is prime with P_0 = (2), P_1 = (3).
  // T_1 = (ℤ, 3ℤ) and T_2 = (2ℤ, ℤ) meet inside S, neither lies in S, and
  // their residuals (3) and (2) are not contained in (S:C) = (6).
  const Complex C = line(0);
  const Subcomplex S = pair(C, 2, 3);
  const std::vector<Subcomplex> Ts{pair(C, 1, 3), pair(C, 2, 1)};
  CHECK(isPrimeSubcomplex(S).verdict == Verdict::Prime);
  CHECK(primeAvoidance(Ts, S).kind == AvoidanceResult::Kind::TheoremViolation);
  CHECK(primeAvoidancePerIndex(Ts, S).kind == AvoidanceResult::Kind::Holds);
}
