#pragma once

// The displayed d^0, d^1, d^2 of the 3, 5, 7 Čech complex, evaluated on
// explicit localized inputs and compared summand by summand through labels.

#include "primesub/cech.hpp"

#include <random>

namespace primesub::testing {

inline RingElem frac(long n, long base, unsigned m) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(base), m);
  return RingElem::fromQ(mpq_class(Integer(n), den));
}

inline RingElem power(long base, unsigned m) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), m);
  return RingElem(Integer(r));
}

/// Value of C^k's summand labelled `subset` in `x`.
inline const RingElem& bySubset(const CechComplex& C, const Vector& x, std::vector<Integer> subset) {
  return x[*C.summandIndex(subset)];
}

inline Vector placed(const CechComplex& C, std::size_t degree,
                     const std::vector<std::pair<std::vector<Integer>, RingElem>>& entries) {
  Vector x(C.components[degree].size(), RingElem(0));
  for (const auto& [subset, v] : entries) x[*C.summandIndex(subset)] = v;
  return x;
}

/// Number of random inputs on which the three displayed formulas disagree
/// with the built differentials (0 means they all agree).
inline int formulaMismatches(const CechComplex& C, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  auto num = [&] { return static_cast<long>(rng() % 41) - 20; };
  auto expo = [&] { return static_cast<unsigned>(rng() % 4); };
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    // d^0(n) = (n/1, n/1, n/1)
    const long n = num();
    const Vector y0 = C.diffs[0].apply(Vector{RingElem(n)});
    for (long u : {3, 5, 7})
      if (bySubset(C, y0, {u}) != RingElem(n)) ++bad;

    // d^1(n1/3^m1, n2/5^m2, n3/7^m3) lands in Z[1/35], Z[1/21], Z[1/15] as
    // 5^m3 n3/35^m3 - 7^m2 n2/35^m2, 3^m3 n3/21^m3 - 7^m1 n1/21^m1,
    // 3^m2 n2/15^m2 - 5^m1 n1/15^m1.
    const long n1 = num(), n2 = num(), n3 = num();
    const unsigned m1 = expo(), m2 = expo(), m3 = expo();
    const Vector x1 = placed(C, 1, {{{3}, frac(n1, 3, m1)}, {{5}, frac(n2, 5, m2)}, {{7}, frac(n3, 7, m3)}});
    const Vector y1 = C.diffs[1].apply(x1);
    if (bySubset(C, y1, {5, 7}) != power(5, m3) * frac(n3, 35, m3) - power(7, m2) * frac(n2, 35, m2)) ++bad;
    if (bySubset(C, y1, {3, 7}) != power(3, m3) * frac(n3, 21, m3) - power(7, m1) * frac(n1, 21, m1)) ++bad;
    if (bySubset(C, y1, {3, 5}) != power(3, m2) * frac(n2, 15, m2) - power(5, m1) * frac(n1, 15, m1)) ++bad;

    // d^2(n1/35^m1, n2/21^m2, n3/15^m3) = 7^m3 n3/105^m3 - 5^m2 n2/105^m2 + 3^m1 n1/105^m1
    const Vector x2 = placed(C, 2, {{{5, 7}, frac(n1, 35, m1)}, {{3, 7}, frac(n2, 21, m2)}, {{3, 5}, frac(n3, 15, m3)}});
    const Vector y2 = C.diffs[2].apply(x2);
    if (bySubset(C, y2, {3, 5, 7}) !=
        power(7, m3) * frac(n3, 105, m3) - power(5, m2) * frac(n2, 105, m2) + power(3, m1) * frac(n1, 105, m1))
      ++bad;
  }
  return bad;
}

}  // namespace primesub::testing
