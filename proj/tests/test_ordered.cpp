#include <gtest/gtest.h>

#include "kmink/nc_words.hpp"
#include "kmink/ordered.hpp"
#include "support.hpp"

using namespace kmink;
using namespace kmink::testing;

namespace {

const KScalar kInvK2 = KScalar(GaussRat(1), -2);

} // namespace

TEST(Ordered, StarExamples)
{
	EXPECT_EQ(star(mono(0, 1), mono(1)), mono(1, 1) - i_over_k() * mono(0, 1));
	EXPECT_EQ(star(mono(1), mono(0, 1)), mono(1, 1));
	EXPECT_EQ(star(mono(0, 1), mono(0, 1)), mono(0, 2));
}

TEST(Ordered, Printing)
{
	const OrderedElement f = mono(2, 1) - KScalar(2) * i_over_k() * mono(1, 1);
	EXPECT_EQ(f.to_string(), ":x0^2*x1: - 2i/k :x0*x1:");
	EXPECT_EQ(OrderedElement().to_string(), "0");
	EXPECT_EQ(OrderedElement(rat(1, 4)).to_string(), "1/4");
	EXPECT_EQ(monomial_text({0, 0, 0, 0}), "1");
}

TEST(Ordered, ShiftExamples)
{
	EXPECT_EQ(shift0(mono(2), i_over_k()), mono(2) + KScalar(2) * i_over_k() * mono(1) - OrderedElement(kInvK2));
	EXPECT_EQ(shift0(mono(2), i_over_k()), shift_oracle(mono(2), i_over_k()));
	EXPECT_EQ(shift0(mono(0, 1), KScalar(GaussRat(7), 3)), mono(0, 1));
	Random rnd(5);
	for (int n = 0; n < 50; ++n)
	{
		const OrderedElement f = rnd.ordered(6);
		EXPECT_EQ(shift0(f, KScalar()), f);
		const KScalar c = rnd.scalar();
		EXPECT_EQ(shift0(f, c), shift_oracle(f, c));
	}
}

TEST(Ordered, ClassicalDifferentials)
{
	EXPECT_EQ(classical_partial(mono(0, 2), 1), KScalar(2) * mono(0, 1));
	EXPECT_EQ(classical_partial(mono(1, 1), 0), mono(0, 1));
	EXPECT_TRUE(classical_partial(mono(0, 1), 2).is_zero());
	EXPECT_EQ(laplacian(mono(0, 2)), OrderedElement(2));
	EXPECT_TRUE(laplacian(mono(2)).is_zero());
	EXPECT_EQ(laplacian(mono(0, 2) + mono(0, 0, 2) + mono(0, 0, 0, 2)), OrderedElement(6));
}

TEST(Ordered, TrigExamples)
{
	EXPECT_EQ(trig0(mono(1), Trig::Sin), OrderedElement(KScalar::kappa(-1)));
	EXPECT_EQ(trig0(mono(1), Trig::Sin) * KScalar::kappa(), OrderedElement(1));
	EXPECT_EQ(trig0(mono(1), Trig::Cos), mono(1));
	EXPECT_EQ(trig0(mono(2), Trig::Cos), mono(2) - OrderedElement(kInvK2));
	EXPECT_EQ(trig0(mono(1), Trig::ExpPlus), mono(1) + OrderedElement(i_over_k()));
	EXPECT_EQ(trig0(mono(1), Trig::ExpMinus), mono(1) - OrderedElement(i_over_k()));
	EXPECT_EQ(trig0(mono(1), Trig::Exp2Minus), mono(1) - OrderedElement(KScalar(2) * i_over_k()));
}

TEST(Ordered, CounitExamples)
{
	EXPECT_TRUE(counit(mono(0, 1)).is_zero());
	EXPECT_EQ(counit(OrderedElement(1)), KScalar(1));
	EXPECT_TRUE(counit(mono(1, 1) - i_over_k() * mono(0, 1)).is_zero());
}

TEST(Ordered, StarAssociativity)
{
	const auto monos = monomials_up_to(3);
	for (const Exponents &a : monos)
		for (const Exponents &b : monos)
			for (const Exponents &c : monos)
			{
				if (total_degree(a) + total_degree(b) + total_degree(c) > 3)
					continue;
				const OrderedElement f = OrderedElement::monomial(a), g = OrderedElement::monomial(b),
				                     h = OrderedElement::monomial(c);
				EXPECT_EQ(star(star(f, g), h), star(f, star(g, h)));
			}
	Random rnd(7);
	for (int n = 0; n < 100; ++n)
	{
		const OrderedElement f = rnd.ordered(3), g = rnd.ordered(3), h = rnd.ordered(3);
		EXPECT_EQ(star(star(f, g), h), star(f, star(g, h)));
	}
}

TEST(Ordered, StarUnit)
{
	Random rnd(8);
	for (int n = 0; n < 50; ++n)
	{
		const OrderedElement f = rnd.ordered(5);
		EXPECT_EQ(star(OrderedElement(1), f), f);
		EXPECT_EQ(star(f, OrderedElement(1)), f);
	}
}

TEST(Ordered, StarMatchesClosedShiftRule)
{
	const auto monos = monomials_up_to(4);
	for (const Exponents &a : monos)
		for (const Exponents &b : monos)
		{
			const OrderedElement f = OrderedElement::monomial(a), g = OrderedElement::monomial(b);
			ASSERT_EQ(star(f, g), star_oracle(f, g)) << monomial_text(a) << " * " << monomial_text(b);
		}
}

TEST(Ordered, ShiftCompositionAndHomomorphism)
{
	Random rnd(9);
	for (int n = 0; n < 100; ++n)
	{
		const OrderedElement f = rnd.ordered(5), g = rnd.ordered(4);
		const KScalar a = rnd.scalar(), b = rnd.scalar();
		EXPECT_EQ(shift0(shift0(f, a), b), shift0(f, a + b));
		EXPECT_EQ(shift0(f * g, a), shift0(f, a) * shift0(g, a));
		EXPECT_EQ(shift0(f + g, a), shift0(f, a) + shift0(g, a));
	}
}

TEST(Ordered, CounitIsCharacter)
{
	const auto monos = monomials_up_to(3);
	for (const Exponents &a : monos)
		for (const Exponents &b : monos)
		{
			const OrderedElement f = OrderedElement::monomial(a) + OrderedElement(2);
			const OrderedElement g = OrderedElement::monomial(b) - OrderedElement(i_over_k());
			EXPECT_EQ(counit(star(f, g)), counit(f) * counit(g));
		}
}

TEST(Ordered, PartialsCommute)
{
	Random rnd(10);
	for (int n = 0; n < 50; ++n)
	{
		const OrderedElement f = rnd.ordered(6);
		const KScalar c = rnd.scalar();
		for (int mu = 0; mu < 4; ++mu)
		{
			EXPECT_EQ(classical_partial(shift0(f, c), mu), shift0(classical_partial(f, mu), c));
			for (int nu = 0; nu < 4; ++nu)
				EXPECT_EQ(classical_partial(classical_partial(f, mu), nu), classical_partial(classical_partial(f, nu), mu));
		}
	}
}
