#include "doctest.h"

#include "primesub/ring.hpp"

#include <array>
#include <random>

using namespace primesub;

TEST_CASE("canonicalize reduces and checks denominators") {
  const RingCtx u6(6), u3(3);
  auto x = RingElem::canonicalize(4, 6, u6);
  CHECK(x.num() == 2);
  CHECK(x.den() == 3);
  auto z = RingElem::canonicalize(0, 9, u3);
  CHECK(z.num() == 0);
  CHECK(z.den() == 1);
  try {
    RingElem::canonicalize(5, 4, u3);
    FAIL("expected DenominatorNotInverted");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::DenominatorNotInverted);
  }
  CHECK(RingElem::parse("-10/4", u6).toString() == "-5/2");
  CHECK(RingElem::parse("7", RingCtx(1)).toString() == "7");
}

TEST_CASE("ring context forces a squarefree u") {
  const RingCtx c(12);
  CHECK(c.u() == 6);
  CHECK(c.invertedPrimes() == std::vector<Integer>{2, 3});
  CHECK(c.strip(Integer(-90)) == 5);
  CHECK(c.localizedAt(Integer(25)).u() == 30);
}

TEST_CASE("idealOf strips the inverted part") {
  CHECK(idealOf(RingElem(12), RingCtx(6)).gen() == 1);
  CHECK(idealOf(RingElem::parse("1/3", RingCtx(3)), RingCtx(3)).gen() == 1);
  CHECK(idealOf(RingElem(10), RingCtx(3)).gen() == 10);
  CHECK(idealOf(RingElem(0), RingCtx(3)).isZero());
}

TEST_CASE("prime ideals and radicals") {
  CHECK(isPrimeIdeal(Ideal::fromCanonical(5), RingCtx(6)));
  CHECK_FALSE(isPrimeIdeal(Ideal::unit(), RingCtx(1)));
  CHECK_FALSE(isPrimeIdeal(Ideal::fromCanonical(35), RingCtx(1)));
  CHECK(isPrimeIdeal(Ideal::zero(), RingCtx(1)));
  CHECK(radical(Ideal::fromCanonical(12), RingCtx(1)).gen() == 6);
  CHECK(radical(Ideal::zero(), RingCtx(1)).isZero());
  CHECK(radical(Ideal::fromCanonical(49), RingCtx(3)).gen() == 7);
}

TEST_CASE("ideal intersection is an lcm with 0 absorbing") {
  const RingCtx z(1), u3(3);
  std::array a{Ideal::generatedBy(4, z), Ideal::generatedBy(6, z)};
  CHECK(idealIntersection(a, z).gen() == 12);
  std::array b{Ideal::zero(), Ideal::generatedBy(5, z)};
  CHECK(idealIntersection(b, z).isZero());
  std::array c{Ideal::generatedBy(3, u3), Ideal::generatedBy(5, u3)};
  CHECK(idealIntersection(c, u3).gen() == 5);
}

TEST_CASE("factor") {
  using F = std::vector<std::pair<Integer, unsigned>>;
  CHECK(factor(105) == F{{3, 1}, {5, 1}, {7, 1}});
  CHECK(factor(1).empty());
  CHECK(factor(12) == F{{2, 2}, {3, 1}});
  try {
    factor(Integer("1000000000000000000000007"), 1000);
    FAIL("expected FactorCapExceeded");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::FactorCapExceeded);
  }
}

TEST_CASE("ring properties on random elements") {
  std::mt19937_64 rng(11);
  for (long u : {1L, 6L, 10L, 30L}) {
    const RingCtx ctx(u);
    auto draw = [&] {
      const long num = static_cast<long>(rng() % 61) - 30;
      Integer den = 1;
      for (const auto& p : ctx.invertedPrimes()) den *= p * Integer(static_cast<long>(rng() % 2));
      if (den == 0) den = 1;
      return RingElem::canonicalize(num, den, ctx);
    };
    for (int t = 0; t < 300; ++t) {
      const RingElem x = draw(), y = draw();
      const RingElem c = RingElem::canonicalize(x.num(), x.den(), ctx);
      CHECK(c == x);
      const RingElem s = x + y, p = x * y;
      CHECK(gcd(s.num(), s.den()) == 1);
      CHECK(gcd(p.num(), p.den()) == 1);
      CHECK(idealOf(p, ctx) == idealProduct(idealOf(x, ctx), idealOf(y, ctx), ctx));
      const Ideal I = idealOf(x, ctx);
      if (isPrimeIdeal(I, ctx)) CHECK(radical(I, ctx) == I);
      std::array ij{I, idealOf(y, ctx)}, ji{idealOf(y, ctx), I}, ii{I, I};
      CHECK(idealIntersection(ij, ctx) == idealIntersection(ji, ctx));
      CHECK(idealIntersection(ii, ctx) == I);
      const Bezout b = bezout(x, y, ctx);
      CHECK(b.s * x + b.t * y == RingElem(b.g));
      CHECK(Ideal::fromCanonical(b.g) == idealSum(idealOf(x, ctx), idealOf(y, ctx), ctx));
    }
  }
}
