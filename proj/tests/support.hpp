#pragma once

// Test-only oracles and random generators. Nothing here calls the code path
// it is used to check: the star oracle never touches the rewriter and the
// shift oracle never calls shift0.

#include <random>
#include <vector>

#include "kmink/nc_words.hpp"
#include "kmink/ordered.hpp"
#include "kmink/parser.hpp"
#include "kmink/scalars.hpp"

namespace kmink::testing {

inline KScalar i_over_k() { return KScalar(GaussRat::i(), -1); }

inline KScalar rat(long num, long den = 1) { return KScalar(GaussRat::fraction(num, den)); }

inline OrderedElement mono(unsigned a, unsigned b = 0, unsigned c = 0, unsigned d = 0)
{
	return OrderedElement::monomial({a, b, c, d});
}

/// (x0 + c)^n by repeated commutative multiplication.
inline OrderedElement x0_plus_c_power(const KScalar &c, unsigned n)
{
	OrderedElement lin = OrderedElement::x(0) + OrderedElement(c);
	OrderedElement r(1);
	for (unsigned j = 0; j < n; ++j)
		r = r * lin;
	return r;
}

/// x0 -> x0 + c by direct substitution.
inline OrderedElement shift_oracle(const OrderedElement &f, const KScalar &c)
{
	OrderedElement r;
	for (const auto &[e, a] : f.terms())
	{
		Exponents rest = e;
		rest[0] = 0;
		r += x0_plus_c_power(c, e[0]) * OrderedElement::monomial(rest, a);
	}
	return r;
}

/// Star product from the closed rule x^i p(x0) = p(x0 - i/k) x^i:
/// :x0^p xs^a: * :x0^r xs^b: = x0^p (x0 - |a| i/k)^r xs^(a+b).
inline OrderedElement star_oracle(const OrderedElement &f, const OrderedElement &g)
{
	OrderedElement r;
	for (const auto &[ef, cf] : f.terms())
		for (const auto &[eg, cg] : g.terms())
		{
			const long spatial = static_cast<long>(ef[1] + ef[2] + ef[3]);
			const KScalar c = -i_over_k() * KScalar(spatial);
			Exponents left{ef[0], ef[1] + eg[1], ef[2] + eg[2], ef[3] + eg[3]};
			r += OrderedElement::monomial(left, cf * cg) * x0_plus_c_power(c, eg[0]);
		}
	return r;
}

class Random
{
  public:
	explicit Random(unsigned seed) : rng_(seed) {}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
	double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

	GaussRat gauss()
	{
		GaussRat g = GaussRat::fraction(uniform(-5, 5), uniform(1, 4));
		if (uniform(0, 1))
			g += GaussRat::fraction(uniform(-5, 5), uniform(1, 4), true);
		return g;
	}

	KScalar scalar(int terms = 2)
	{
		KScalar s;
		for (int n = 0; n < terms; ++n)
			s += KScalar(gauss(), uniform(-2, 2));
		return s.is_zero() ? KScalar(1) : s;
	}

	Word word(std::size_t max_length)
	{
		Word w(static_cast<std::size_t>(uniform(0, static_cast<int>(max_length))));
		for (auto &l : w)
			l = static_cast<Letter>(uniform(0, 3));
		return w;
	}

	NCElement nc_element(std::size_t max_length, int max_terms = 4)
	{
		NCElement a;
		for (int n = uniform(1, max_terms); n > 0; --n)
			a.add_term(word(max_length), scalar());
		return a;
	}

	Exponents exponents(unsigned max_degree)
	{
		Exponents e{0, 0, 0, 0};
		for (unsigned d = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree))); d > 0; --d)
			++e[static_cast<std::size_t>(uniform(0, 3))];
		return e;
	}

	OrderedElement ordered(unsigned max_degree, int max_terms = 4)
	{
		OrderedElement f;
		for (int n = uniform(1, max_terms); n > 0; --n)
			f.add_term(exponents(max_degree), scalar());
		return f;
	}

  private:
	std::mt19937 rng_;
};

inline Ast ast_leaf(Ast::Kind k)
{
	Ast a;
	a.kind = k;
	return a;
}

// Random tree in the shape the parser itself produces: no single-child
// products, no unsigned single-child sums, first factor never divided.
inline Ast random_ast(Random &rnd, int depth)
{
	const int pick = depth <= 0 ? rnd.uniform(0, 3) : rnd.uniform(0, 7);
	switch (pick)
	{
	case 0: {
		Ast a = ast_leaf(Ast::Kind::Number);
		a.number = rnd.uniform(0, 40);
		return a;
	}
	case 1:
		return ast_leaf(Ast::Kind::Imaginary);
	case 2:
		return ast_leaf(Ast::Kind::Kappa);
	case 3: {
		Ast a = ast_leaf(Ast::Kind::Generator);
		a.generator = rnd.uniform(0, 3);
		return a;
	}
	case 4: {
		Ast a = ast_leaf(Ast::Kind::Power);
		a.children.push_back(random_ast(rnd, depth - 1));
		a.exponent = rnd.uniform(-3, 4);
		return a;
	}
	case 5: {
		Ast a = ast_leaf(Ast::Kind::Ordered);
		a.children.push_back(random_ast(rnd, depth - 1));
		return a;
	}
	case 6: {
		Ast a = ast_leaf(Ast::Kind::Product);
		for (int n = rnd.uniform(2, 3); n > 0; --n)
		{
			a.inverted.push_back(!a.children.empty() && rnd.uniform(0, 3) == 0);
			a.children.push_back(random_ast(rnd, depth - 1));
		}
		return a;
	}
	default: {
		Ast a = ast_leaf(Ast::Kind::Sum);
		for (int n = rnd.uniform(1, 3); n > 0; --n)
		{
			a.inverted.push_back(rnd.uniform(0, 1) == 1);
			a.children.push_back(random_ast(rnd, depth - 1));
		}
		if (a.children.size() == 1)
			a.inverted[0] = true;
		return a;
	}
	}
}

} // namespace kmink::testing
