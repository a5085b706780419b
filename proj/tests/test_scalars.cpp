#include <gtest/gtest.h>

#include "kmink/scalars.hpp"
#include "support.hpp"

using namespace kmink;
using kmink::testing::i_over_k;
using kmink::testing::Random;

TEST(Scalars, RingExamples)
{
	EXPECT_EQ(i_over_k() * i_over_k(), KScalar(GaussRat(-1), -2));
	EXPECT_EQ(KScalar::kappa(2) * KScalar::kappa(-1), KScalar::kappa());

	KScalar a(GaussRat::fraction(3, 2, true), -1);
	KScalar sum = a + KScalar(GaussRat::fraction(-3, 2, true), -1);
	EXPECT_TRUE(sum.is_zero());
	EXPECT_TRUE(sum.terms().empty());
}

TEST(Scalars, GaussRatLowestTerms)
{
	GaussRat g = GaussRat::fraction(2, -4);
	EXPECT_EQ(g.re(), mpq_class(-1, 2));
	EXPECT_GT(g.re().get_den(), 0);
	EXPECT_EQ(GaussRat::fraction(6, 8) * GaussRat(4), GaussRat(3));
	EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
	EXPECT_EQ(GaussRat(1) / GaussRat::i(), -GaussRat::i());
}

TEST(Scalars, NonInvertible)
{
	const KScalar two_terms = KScalar(1) + KScalar::kappa();
	EXPECT_THROW(KScalar(1) / KScalar(), std::domain_error);
	try
	{
		(void)(KScalar(1) / two_terms);
		FAIL() << "expected throw";
	}
	catch (const std::domain_error &e)
	{
		EXPECT_STREQ(e.what(), "non-invertible scalar");
	}
	EXPECT_EQ(KScalar(GaussRat(3), 2) / KScalar(GaussRat(6), -1), KScalar(GaussRat::fraction(1, 2), 3));
}

TEST(Scalars, Valuation)
{
	EXPECT_EQ(KScalar(2).kappa_valuation(), 0);
	EXPECT_EQ(i_over_k().kappa_valuation(), -1);
	EXPECT_EQ(KScalar().kappa_valuation(), kMinusInfinity);
}

TEST(Scalars, EvalNumeric)
{
	EXPECT_EQ(KScalar::kappa(2).eval_numeric(2.0), std::complex<double>(4, 0));
	EXPECT_EQ(i_over_k().eval_numeric(2.0), std::complex<double>(0, 0.5));
	EXPECT_EQ((KScalar(1) - KScalar(1)).eval_numeric(3.0), std::complex<double>(0, 0));
	EXPECT_THROW(KScalar(1).eval_numeric(0.0), std::domain_error);
}

TEST(Scalars, Printing)
{
	EXPECT_EQ(GaussRat(mpq_class(1, 2), mpq_class(3, 4)).to_string(), "1/2+3/4*i");
	EXPECT_EQ(GaussRat(mpq_class(1, 2), mpq_class(-3, 4)).to_string(), "1/2-3/4*i");
	EXPECT_EQ(GaussRat(0, mpq_class(5, 3)).to_string(), "5/3*i");
	EXPECT_EQ(KScalar().to_string(), "0");
	EXPECT_EQ((KScalar::kappa(2) * KScalar(2) - i_over_k() + KScalar(GaussRat::fraction(1, 2))).to_string(),
	          "2*k^2 + 1/2 - i*k^-1");
	EXPECT_EQ((i_over_k() * i_over_k()).to_string(), "-k^-2");
}

TEST(Scalars, CompactTermText)
{
	EXPECT_EQ(term_text(GaussRat(0, 2), -1).magnitude, "2i/k");
	EXPECT_EQ(term_text(GaussRat::fraction(1, 4), 0).magnitude, "1/4");
	EXPECT_TRUE(term_text(GaussRat(-1), -2).negative);
	EXPECT_EQ(term_text(GaussRat(-1), -2).magnitude, "1/k^2");
	EXPECT_EQ(term_text(GaussRat(1), 3).magnitude, "k^3");
	EXPECT_EQ(term_text(GaussRat::fraction(3, 4, true), 2).magnitude, "3/4*i*k^2");
}

TEST(Scalars, RingAxiomsRandomized)
{
	Random rnd(11);
	for (int n = 0; n < 200; ++n)
	{
		const KScalar a = rnd.scalar(3), b = rnd.scalar(3), c = rnd.scalar(3);
		EXPECT_EQ((a + b) + c, a + (b + c));
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_EQ(a * b, b * a);
		EXPECT_EQ(a + b, b + a);
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_TRUE((a + (-a)).is_zero());
		if (!a.is_zero() && !b.is_zero())
		{
			EXPECT_EQ((a * b).kappa_valuation(), a.kappa_valuation() + b.kappa_valuation());
		}
	}
}
