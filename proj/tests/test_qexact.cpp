#include <gtest/gtest.h>

#include <random>

#include "commlie/error.hpp"
#include "commlie/series.hpp"

using namespace commlie;

TEST(IntPoly, ArithmeticAndRendering) {
  IntPoly q{0, 1};
  IntPoly g = IntPoly::monomial(1, 6) + IntPoly::monomial(1, 5) - IntPoly::monomial(1, 3);
  EXPECT_EQ(g.to_string(), "q^6 + q^5 - q^3");
  EXPECT_EQ(IntPoly::parse("q^6 + q^5 - q^3"), g);
  EXPECT_EQ(IntPoly::parse("-2*q^3 + q - 7").to_string(), "-2*q^3 + q - 7");
  EXPECT_EQ(IntPoly().to_string(), "0");
  EXPECT_EQ((q - 1) * (q + 1), IntPoly::parse("q^2 - 1"));
  EXPECT_EQ(g.evaluate(mpz_class(2)), 88);
  EXPECT_THROW(IntPoly::parse("q^^2"), UsageError);
}

TEST(IntPoly, GcdAndDivision) {
  IntPoly a = IntPoly::parse("q^4 - 1");
  IntPoly b = IntPoly::parse("q^6 - 1");
  EXPECT_EQ(IntPoly::gcd(a, b), IntPoly::parse("q^2 - 1"));
  EXPECT_EQ(IntPoly::gcd(IntPoly::parse("6*q + 6"), IntPoly::parse("4*q + 4")), IntPoly::parse("2*q + 2"));
  EXPECT_EQ(IntPoly::divexact(a, IntPoly::parse("q - 1")), IntPoly::parse("q^3 + q^2 + q + 1"));
  EXPECT_THROW(IntPoly::divexact(a, IntPoly::parse("q - 2")), Error);
}

TEST(RationalFunction, CanonicalForm) {
  RationalFunction r(IntPoly::parse("2*q^2 - 2"), IntPoly::parse("-4*q + 4"));
  EXPECT_EQ(r.numerator(), IntPoly::parse("-q - 1"));
  EXPECT_EQ(r.denominator(), IntPoly(2));
  RationalFunction zero(IntPoly(), IntPoly::parse("q + 3"));
  EXPECT_EQ(zero.denominator(), IntPoly(1));
  EXPECT_EQ(RationalFunction::q_power(-2).to_string(), "(1)/(q^2)");
  EXPECT_EQ(RationalFunction::q_power(-2).evaluate(mpz_class(3)), mpq_class(1, 9));
  EXPECT_THROW(RationalFunction(IntPoly(1), IntPoly::parse("q - 3")).evaluate(mpz_class(3)), Error);
}

TEST(QCoeff, ModesDoNotMix) {
  auto s = QContext::symbolic();
  auto n2 = QContext::numeric(2);
  auto n3 = QContext::numeric(3);
  EXPECT_THROW(s.q() + n2.q(), ModeMismatch);
  EXPECT_THROW(n2.q() * n3.q(), ModeMismatch);
  EXPECT_EQ((s.q() * s.q() - s.one()).at(n3), n3.integer(8));
  EXPECT_THROW(require_integral(n2.rational(mpq_class(1, 2)), "half"), IntegralityError);
}

TEST(Pochhammer, Examples) {
  auto n2 = QContext::numeric(2);
  auto s = QContext::symbolic();
  EXPECT_EQ(pochhammer(n2, 1, Sign::plus, 2), n2.rational(mpq_class(3, 8)));
  for (int d = 1; d <= 3; ++d) {
    EXPECT_TRUE(pochhammer(s, d, Sign::minus, 0).is_one());
    EXPECT_TRUE(pochhammer(n2, d, Sign::plus, 0).is_one());
  }
  EXPECT_EQ(pochhammer(s, 1, Sign::minus, 1).to_string(), "(q + 1)/(q)");
  // Even d is unaffected by q ↦ −q.
  EXPECT_EQ(pochhammer(s, 2, Sign::minus, 3), pochhammer(s, 2, Sign::plus, 3));
  // Recurrence (x)_r = (x)_{r−1}(1 − x^r) with x = 1/q^d.
  for (int d = 1; d <= 3; ++d) {
    for (int r = 1; r <= 5; ++r) {
      EXPECT_EQ(pochhammer(s, d, Sign::plus, r),
                pochhammer(s, d, Sign::plus, r - 1) * (s.one() - s.q_power(-static_cast<long>(d) * r)));
    }
  }
}

TEST(EulerSum, Examples) {
  auto s = QContext::symbolic();
  USeries e = euler_sum(1, s.one(), QBase{1, false}, 1);
  EXPECT_TRUE(e[0].is_one());
  EXPECT_EQ(e[1], (s.one() - s.q().inverse()).inverse());
  USeries c = euler_sum(2, s.q(), QBase{1, false}, 1);
  EXPECT_EQ(c, USeries::one(s, 1));
  auto n2 = QContext::numeric(2);
  USeries v = euler_sum(1, n2.q(), QBase{1, false}, 2);
  EXPECT_EQ(v[0], n2.one());
  EXPECT_EQ(v[1], n2.integer(4));
  EXPECT_EQ(v[2], n2.rational(mpq_class(32, 3)));
}

TEST(Series, RingOperations) {
  auto s = QContext::symbolic();
  const int N = 6;
  USeries one_minus_u = USeries::one(s, N) - USeries::monomial(s.one(), 1, N);
  USeries geometric(s, N);
  for (int k = 0; k <= N; ++k) geometric[k] = s.one();
  EXPECT_EQ(one_minus_u * geometric, USeries::one(s, N));
  EXPECT_EQ(series_pow(geometric, 0), USeries::one(s, N));
  USeries r = series_recip(USeries::one(s, 2) - USeries::monomial(s.q(), 1, 2));
  EXPECT_EQ(r[1], s.q());
  EXPECT_EQ(r[2], s.q() * s.q());
  EXPECT_THROW(series_recip(USeries::monomial(s.one(), 1, 2)), NonUnitError);
  EXPECT_THROW(USeries::one(s, 2) + USeries::one(s, 3), ModeMismatch);
  EXPECT_THROW(USeries::one(s, 2) + USeries::one(QContext::numeric(2), 2), ModeMismatch);
}

TEST(Series, PowGeneralMatchesIntegerPower) {
  auto s = QContext::symbolic();
  USeries f = USeries::one(s, 5) + USeries::monomial(s.q(), 1, 5) + USeries::monomial(s.one(), 3, 5);
  EXPECT_EQ(f.pow_general(s.integer(4)), f.pow(4));
  // (1+u)^q evaluated at q = 3 is (1+u)^3.
  USeries g = USeries::one(s, 4) + USeries::monomial(s.one(), 1, 4);
  auto n3 = QContext::numeric(3);
  EXPECT_EQ(g.pow_general(s.q()).at(n3), g.at(n3).pow(3));
}

TEST(Series, EvenPart) {
  auto s = QContext::symbolic();
  USeries f = USeries::one(s, 4) + USeries::monomial(s.q(), 2, 4);
  USeries v = even_part_in_v(f);
  EXPECT_EQ(v.order(), 2);
  EXPECT_EQ(v[1], s.q());
  EXPECT_THROW(even_part_in_v(f + USeries::monomial(s.one(), 3, 4)), MismatchError);
}

// ∏_{l=0}^{L} 1/(1 − u/q^l) has u^m coefficient ∏_{s=1}^m (1 − q^{−(L+s)}) / (1/q)_m, so it
// agrees with the Euler sum up to exactly those tail factors.
TEST(QexactProperties, EulerIdentityAtTruncation) {
  auto s = QContext::symbolic();
  for (int N = 0; N <= 12; N += 3) {
    const int L = N + 2;
    USeries prod = USeries::one(s, N);
    for (int l = 0; l <= L; ++l) {
      prod *= (USeries::one(s, N) - USeries::monomial(s.q_power(-l), 1, N)).recip();
    }
    USeries euler = euler_sum(1, s.one(), QBase{1, false}, N);
    for (int m = 0; m <= N; ++m) {
      EXPECT_EQ(euler[m], pochhammer(s, 1, Sign::plus, m).inverse());
      QCoeff tail = s.one();
      for (int t = 1; t <= m; ++t) tail *= s.one() - s.q_power(-(L + t));
      EXPECT_EQ(prod[m], euler[m] * tail) << "N=" << N << " m=" << m;
    }
  }
}

TEST(QexactProperties, SymbolicAgreesWithNumeric) {
  auto s = QContext::symbolic();
  for (long q : {2, 3, 4, 5}) {
    auto n = QContext::numeric(q);
    for (auto base : {QBase{1, false}, QBase{1, true}, QBase{2, false}, QBase{3, true}}) {
      for (int i = 1; i <= 3; ++i) {
        USeries sym = euler_sum(i, s.q(), base, 8) * euler_sum(i + 1, s.q().inverse(), base, 8);
        USeries num = euler_sum(i, n.q(), base, 8) * euler_sum(i + 1, n.q().inverse(), base, 8);
        EXPECT_EQ(sym.at(n), num);
      }
    }
  }
}

TEST(QexactProperties, RingAxiomsOnRandomSeries) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-9, 9);
  auto n = QContext::numeric(7);
  auto random_series = [&] {
    USeries x(n, 5);
    for (int k = 0; k <= 5; ++k) x[k] = n.rational(mpq_class(dist(rng), 1 + (dist(rng) + 9)));
    return x;
  };
  for (int trial = 0; trial < 20; ++trial) {
    USeries a = random_series(), b = random_series(), c = random_series();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a[0].is_zero()) EXPECT_EQ(a * a.recip(), USeries::one(n, 5));
  }
}
