#include "doctest.h"

#include "cech_formulas.hpp"
#include "primesub/oracle.hpp"

using namespace primesub;

namespace {

std::vector<Integer> I(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Vector V(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("cech complex of 3, 5, 7") {
  const CechComplex C = buildCech(I({3, 5, 7}));
  REQUIRE(C.length() == 4);
  CHECK(C.components[0].summands == I({1}));
  CHECK(C.components[1].summands == I({3, 5, 7}));
  CHECK(C.components[2].summands == I({15, 21, 35}));
  CHECK(C.components[3].summands == I({105}));
  CHECK(C.summandName(2, *C.summandIndex(I({5, 7}))) == "Z[1/35]");
  CHECK(C.summandName(0, 0) == "Z");
  CHECK_FALSE(checkDSquared(C));
  CHECK(renderDifferential(C, 0) == "(x, x, x)");
  CHECK(renderDifferential(C, 1) == "(x{5} - x{3}, x{7} - x{3}, x{7} - x{5})");
  CHECK(renderDifferential(C, 2) == "(x{35} - x{21} + x{15})");
  CHECK(testing::formulaMismatches(C, 1, 200) == 0);
  // d^1 d^0 (1) telescopes to zero.
  CHECK(isZeroVector(C.diffs[1].apply(C.diffs[0].apply(V({1})))));
}

TEST_CASE("small and invalid cech inputs") {
  const CechComplex two = buildCech(I({2}));
  REQUIRE(two.length() == 2);
  CHECK(two.components[1].summands == I({2}));
  CHECK_FALSE(checkDSquared(two));
  CHECK_FALSE(checkDSquared(buildCech(I({2, 3}))));
  CHECK_THROWS_AS(buildCech(I({6, 10})), AlgebraError);
  CHECK_THROWS_AS(buildCech(I({2, 3, 5, 7, 11, 13, 17})), AlgebraError);
  CHECK_THROWS_AS(buildCech(I({1, 3})), AlgebraError);
  try {
    buildCech(I({6, 10}));
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
  }
}

TEST_CASE("cech shape and d squared on many element sets") {
  const std::vector<long> pool{2, 3, 5, 7, 11, 13};
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    std::vector<Integer> el;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (mask & (1u << k)) el.push_back(pool[k]);
    if (el.size() > 4) continue;
    const CechComplex C = buildCech(el);
    long total = 0;
    for (std::size_t k = 0; k < C.length(); ++k) {
      CHECK(static_cast<long>(C.components[k].size()) == binomial(static_cast<long>(el.size()), static_cast<long>(k)));
      total += static_cast<long>(C.components[k].size());
      for (std::size_t j = 0; j < C.components[k].size(); ++j) {
        Integer prod = 1;
        for (const auto& a : C.labels[k][j]) prod *= a;
        CHECK(C.components[k].summands[j] == prod);
      }
    }
    CHECK(total == (1L << el.size()));
    CHECK_FALSE(checkDSquared(C));
  }
}

TEST_CASE("a flipped sign breaks d squared") {
  const CechComplex C = buildCech(I({3, 5, 7}));
  std::vector<LocFreeMap> diffs = C.diffs;
  diffs[1].entries(0, 1) = -diffs[1].entries(0, 1);
  const auto v = checkDSquared(diffs);
  REQUIRE(v);
  CHECK(v->degree == 0);
}

TEST_CASE("colon over Z") {
  const LocFreeModule c{I({3, 5, 7})};
  CHECK(colonOverZ({I({2, 1, 1})}, c).gen() == 2);
  CHECK(colonOverZ({I({1, 1, 1})}, c).gen() == 1);
  CHECK(colonOverZ({I({0, 1, 1})}, c).gen() == 0);
  CHECK(colonOverZ({I({2, 3, 1})}, c).gen() == 6);
  CHECK(colonOverZ({I({6, 1, 1})}, c).gen() == 2);  // 3 is a unit in Z[1/3]

  std::mt19937_64 rng(11);
  const SearchBox box{12 * 12 * 12, 12, 5};  // covers every lcm of gens <= 12
  for (int t = 0; t < 150; ++t) {
    IdealSubcomplexPart p{{Integer(static_cast<long>(rng() % 13)), Integer(static_cast<long>(1 + rng() % 12)),
                           Integer(static_cast<long>(1 + rng() % 12))}};
    CHECK_MESSAGE(colonOverZ(p, c) == bruteColonOverZ(p, c, box),
                  p.gens[0].get_str() << "," << p.gens[1].get_str() << "," << p.gens[2].get_str());
  }
}

TEST_CASE("cech prime and primary deciders") {
  const CechComplex C = buildCech(I({3, 5, 7}));
  auto r = isPrimeCechSubcomplex(degreeOneSubcomplex(C, 2), C);
  CHECK(r.verdict == Verdict::Prime);
  CHECK(r.perIndexIdeals.at(1).gen() == 2);

  const auto four = degreeOneSubcomplex(C, 4);
  r = isPrimeCechSubcomplex(four, C);
  CHECK(r.verdict == Verdict::NotPrime);
  REQUIRE(r.witness);
  CHECK(r.witness->index == 1);
  CHECK(r.witness->scalar == RingElem(2));
  CHECK(r.witness->element == V({2, 0, 0}));
  auto p = isPrimaryCechSubcomplex(four, C);
  CHECK(p.verdict == Verdict::Primary);
  CHECK(p.perIndexIdeals.at(1).gen() == 2);

  // 3 is a unit of Z[1/3], so (6) there is (2): still primary.
  p = isPrimaryCechSubcomplex(degreeOneSubcomplex(C, 6), C);
  CHECK(p.verdict == Verdict::Primary);
  CHECK(p.perIndexIdeals.at(1).gen() == 2);
  p = isPrimaryCechSubcomplex(degreeOneSubcomplex(C, 10), C);
  CHECK(p.verdict == Verdict::NotPrimary);
  REQUIRE(p.witness);
  CHECK(p.witness->scalar == RingElem(2));
  CHECK(p.witness->element == V({5, 0, 0}));

  // Mixed primes in one degree: colon (6).
  std::vector<IdealSubcomplexPart> mixed = degreeOneSubcomplex(C, 2);
  mixed[1].gens[1] = 3;
  CHECK(isPrimeCechSubcomplex(mixed, C).verdict == Verdict::NotPrime);

  std::vector<IdealSubcomplexPart> whole;
  for (const auto& comp : C.components) whole.push_back({std::vector<Integer>(comp.size(), Integer(1))});
  CHECK(isPrimeCechSubcomplex(whole, C).verdict == Verdict::NotProper);

  // The literal reading: degree 1 is the whole component.
  const auto literal = degreeOneSubcomplex(C, 1);
  CHECK(isPrimeCechSubcomplexAt(literal, C, 1).verdict == Verdict::NotProper);
}

TEST_CASE("cech subcomplex closure") {
  const CechComplex C = buildCech(I({3, 5, 7}));
  std::vector<IdealSubcomplexPart> bad = degreeOneSubcomplex(C, 2);
  bad[0].gens[0] = 1;  // d^0(1) = (1, 1, 1) is not in (2, 1, 1)
  const auto v = validateCechSubcomplex(bad, C);
  REQUIRE(v);
  CHECK(v->degree == 0);
  CHECK_THROWS_AS(isPrimeCechSubcomplex(bad, C), AlgebraError);
}

TEST_CASE("cech deciders agree with the bounded oracle") {
  const CechComplex C = buildCech(I({3, 5, 7}));
  const SearchBox box{12, 12, 2};
  int compared = 0;
  for (std::size_t degree = 1; degree < C.length(); ++degree) {
    const std::size_t w = C.components[degree].size();
    std::vector<long> g(w, 0);
    while (true) {
      std::vector<IdealSubcomplexPart> parts;
      for (std::size_t k = 0; k < C.length(); ++k)
        parts.push_back({std::vector<Integer>(C.components[k].size(), Integer(k == 0 ? 0 : 1))});
      for (std::size_t j = 0; j < w; ++j) parts[degree].gens[j] = g[j];
      if (!validateCechSubcomplex(parts, C)) {
        for (bool primary : {false, true}) {
          const PrimenessReport fast = primary ? isPrimaryCechSubcomplex(parts, C) : isPrimeCechSubcomplex(parts, C);
          const BruteVerdict slow = bruteCechPrime(parts, C, box, primary);
          const bool fastHolds = fast.verdict == Verdict::Prime || fast.verdict == Verdict::Primary;
          CHECK(fastHolds == slow.holds);
          CHECK((fast.verdict == Verdict::NotProper) == !slow.proper);
          ++compared;
        }
      }
      std::size_t j = 0;
      while (j < w && ++g[j] > 12) g[j++] = 0;
      if (j == w) break;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("cech reproduction") {
  const CechReproduction r = reproduceCechExample();
  CHECK(r.primeReport.verdict == Verdict::Prime);
  CHECK(r.primaryAsPrime.verdict == Verdict::NotPrime);
  CHECK(r.primaryReport.verdict == Verdict::Primary);
  CHECK(r.literalDegreeOne.verdict == Verdict::NotProper);
  bool mentionsUnit = false;
  for (const auto& n : r.notes) mentionsUnit = mentionsUnit || n.find("unit") != std::string::npos;
  CHECK(mentionsUnit);
  CHECK_THROWS_AS(reproduceCechExample(3), AlgebraError);
}
