#include <gtest/gtest.h>

#include "commlie/bruteforce.hpp"
#include "commlie/error.hpp"

using namespace commlie;

namespace {

mpz_class power(long q, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

}  // namespace

TEST(FiniteField, Moduli) {
  EXPECT_EQ(FiniteField::make(2, 2).modulus(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(FiniteField::make(3, 2).modulus(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(FiniteField::make(3, 1).size(), 3);
  EXPECT_THROW(FiniteField::make(4, 1), UsageError);
}

TEST(FiniteField, FieldAxiomsAndFrobenius) {
  for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {5, 2}, {7, 1}}) {
    FiniteField f = FiniteField::make(p, k);
    for (int a = 0; a < f.size(); ++a) {
      auto x = static_cast<FqElem>(a);
      if (a != 0) EXPECT_EQ(f.mul(x, f.inv(x)), 1);
      EXPECT_EQ(f.add(x, f.neg(x)), 0);
      EXPECT_EQ(f.frobenius(f.frobenius(x)), k == 2 ? x : x);
      EXPECT_EQ(f.frobenius(x) == x, k == 1 || f.in_prime_field(x));
      for (int b = 0; b < f.size(); ++b) {
        auto y = static_cast<FqElem>(b);
        EXPECT_EQ(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
        EXPECT_EQ(f.mul(x, f.add(y, 1)), f.add(f.mul(x, y), x));
      }
    }
  }
}

TEST(LieSpace, Dimensions) {
  for (int q : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      EXPECT_EQ(LieSpace::make(SpaceFamily::mat, n, q).dim(), n * n);
      EXPECT_EQ(LieSpace::make(SpaceFamily::gu, n, q).dim(), n * n);
      EXPECT_EQ(basis_rank(LieSpace::make(SpaceFamily::gu, n, q)), n * n);
    }
  }
  for (int n = 1; n <= 2; ++n) {
    auto sp = LieSpace::make(SpaceFamily::sp, n, 3);
    EXPECT_EQ(sp.dim(), 2 * n * n + n);
    EXPECT_EQ(basis_rank(sp), sp.dim());
  }
  EXPECT_THROW(LieSpace::make(SpaceFamily::sp, 1, 4), CharacteristicTwoError);
  EXPECT_THROW(LieSpace::make(SpaceFamily::gu, 1, 4), UsageError);
}

TEST(LieSpace, ElementCounts) {
  EXPECT_EQ(count_elements(LieSpace::make(SpaceFamily::gu, 2, 3)), 81u);
  EXPECT_EQ(count_elements(LieSpace::make(SpaceFamily::sp, 1, 3)), 27u);
  EXPECT_EQ(count_elements(LieSpace::make(SpaceFamily::sp, 2, 3)), 59049u);
}

TEST(CentralizerNullity, Examples) {
  auto mat = LieSpace::make(SpaceFamily::mat, 2, 3);
  FqMatrix zero(2);
  EXPECT_EQ(centralizer_nullity(zero, mat), 4);
  FqMatrix j2(2);
  j2(0, 1) = 1;
  EXPECT_EQ(centralizer_nullity(j2, mat), 2);
  auto sp = LieSpace::make(SpaceFamily::sp, 1, 3);
  EXPECT_EQ(centralizer_nullity(j2, sp), 1);
  EXPECT_EQ(centralizer_basis(j2, sp).size(), 1u);
  FqMatrix bad(2);
  bad(0, 0) = 1;
  EXPECT_THROW(centralizer_nullity(bad, sp), UsageError);
}

TEST(Oracle, CommutingPairExamples) {
  EXPECT_EQ(count_commuting_pairs(LieSpace::make(SpaceFamily::mat, 1, 2)), 4);
  EXPECT_EQ(count_commuting_pairs(LieSpace::make(SpaceFamily::mat, 2, 2)), 88);
  EXPECT_EQ(count_commuting_pairs(LieSpace::make(SpaceFamily::mat, 2, 3)), 945);
  EXPECT_EQ(count_commuting_pairs(LieSpace::make(SpaceFamily::sp, 1, 3)), 105);
  EXPECT_EQ(count_nilpotent_pairs(LieSpace::make(SpaceFamily::mat, 1, 2)), 1);
  EXPECT_EQ(count_nilpotent_pairs(LieSpace::make(SpaceFamily::mat, 2, 2)), 10);
  EXPECT_EQ(count_nilpotent_pairs(LieSpace::make(SpaceFamily::sp, 1, 3)), 33);
}

TEST(Oracle, NilpotentElementCounts) {
  for (int q : {2, 3}) {
    for (int m = 1; m <= 3; ++m) {
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(count_nilpotent_elements(LieSpace::make(SpaceFamily::mat, m, q)))),
                power(q, m * m - m));
    }
  }
  for (int n = 1; n <= 2; ++n) {
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(count_nilpotent_elements(LieSpace::make(SpaceFamily::sp, n, 3)))),
              power(3, 2 * n * n));
  }
}

TEST(Oracle, HermitianMatchesSkewHermitian) {
  for (auto [n, q] : {std::pair{1, 3}, {2, 2}, {2, 3}}) {
    auto gu = LieSpace::make(SpaceFamily::gu, n, q);
    auto herm = LieSpace::make(SpaceFamily::herm, n, q);
    EXPECT_EQ(count_commuting_pairs(gu), count_commuting_pairs(herm));
    EXPECT_EQ(count_nilpotent_pairs(gu), count_nilpotent_pairs(herm));
  }
}

TEST(Oracle, HistogramSumsToSpace) {
  auto space = LieSpace::make(SpaceFamily::mat, 2, 3);
  auto h = nullity_histogram(space);
  std::uint64_t total = 0;
  mpz_class pairs = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    total += h[k];
    pairs += power(3, static_cast<long>(k)) * static_cast<unsigned long>(h[k]);
  }
  EXPECT_EQ(total, 81u);
  EXPECT_EQ(pairs, 945);
  EXPECT_EQ(h[4], 3u);
}

TEST(Oracle, ThreadCountDoesNotMatter) {
  auto space = LieSpace::make(SpaceFamily::gu, 2, 3);
  mpz_class one = count_commuting_pairs(space, {false, 1});
  for (int t : {2, 3, 8}) {
    EXPECT_EQ(count_commuting_pairs(space, {false, t}), one);
    EXPECT_EQ(nullity_histogram(space, {false, t}), nullity_histogram(space, {false, 1}));
  }
  auto c1 = orbit_census(space, {false, 1});
  auto c4 = orbit_census(space, {false, 4});
  ASSERT_EQ(c1.size(), c4.size());
  for (const auto& [k, v] : c1) EXPECT_EQ(c4.at(k).count, v.count);
}

TEST(Oracle, Guard) {
  auto big = LieSpace::make(SpaceFamily::mat, 3, 7);
  EXPECT_THROW(count_commuting_pairs(big), GuardExceeded);
  EXPECT_THROW(check_guard(LieSpace::make(SpaceFamily::mat, 5, 2), false), GuardExceeded);
  EXPECT_NO_THROW(check_guard(LieSpace::make(SpaceFamily::mat, 5, 2), true));
}

TEST(Census, Examples) {
  auto census = orbit_census(LieSpace::make(SpaceFamily::mat, 2, 2));
  int scalars = 0;
  for (const auto& [key, cls] : census) {
    if (cls.factors.size() == 1 && ffpoly::degree(cls.factors[0].first) == 1) {
      const Partition& lam = cls.factors[0].second;
      if (lam == Partition{1, 1}) {
        EXPECT_EQ(cls.count, 1u) << key;
        ++scalars;
      }
      if (lam == Partition{2} && cls.factors[0].first == FFPoly{0, 1}) EXPECT_EQ(cls.count, 3u);
    }
  }
  EXPECT_EQ(scalars, 2);

  auto gu = orbit_census(LieSpace::make(SpaceFamily::gu, 1, 2));
  EXPECT_EQ(gu.size(), 2u);
  for (const auto& [key, cls] : gu) EXPECT_EQ(cls.count, 1u);
}

TEST(Census, FingerprintOfJordanBlock) {
  auto space = LieSpace::make(SpaceFamily::mat, 3, 3);
  FqMatrix a(3);
  a(0, 0) = 2;
  a(1, 1) = 2;
  a(1, 2) = 1;
  a(2, 2) = 2;
  auto fp = canonical_fingerprint(a, space);
  ASSERT_EQ(fp.size(), 1u);
  EXPECT_EQ(fp[0].first, (FFPoly{1, 1}));
  EXPECT_EQ(fp[0].second, (Partition{2, 1}));
  EXPECT_EQ(fingerprint_key(fp), "1.1:(2,1)");
}
