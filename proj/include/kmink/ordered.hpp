#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kmink/scalars.hpp"

namespace kmink {

/// Exponents (n0, n1, n2, n3) of a normally ordered monomial :x0^n0 x1^n1 x2^n2 x3^n3:.
using Exponents = std::array<unsigned, 4>;

inline unsigned total_degree(const Exponents &e) { return e[0] + e[1] + e[2] + e[3]; }

/// A normally ordered element :f: of kappa-Minkowski space, held as the
/// commutative polynomial f. Algebra-level products go through star();
/// operator* is the commutative product of representatives, which is what
/// the operator formulas mean by "x^j f" inside the ordering symbol.
class OrderedElement
{
  public:
	using Terms = std::map<Exponents, KScalar>;

	OrderedElement() = default;
	OrderedElement(const KScalar &c);
	OrderedElement(long c) : OrderedElement(KScalar(c)) {}

	static OrderedElement monomial(const Exponents &e, const KScalar &c = KScalar(1));
	static OrderedElement x(int mu);

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	KScalar coefficient(const Exponents &e) const;
	/// Largest total degree; -1 for zero.
	int degree() const;

	void add_term(const Exponents &e, const KScalar &c);

	OrderedElement operator-() const;
	OrderedElement &operator+=(const OrderedElement &o);
	OrderedElement &operator-=(const OrderedElement &o);
	OrderedElement &operator*=(const KScalar &c);

	friend OrderedElement operator+(OrderedElement a, const OrderedElement &b) { return a += b; }
	friend OrderedElement operator-(OrderedElement a, const OrderedElement &b) { return a -= b; }
	friend OrderedElement operator*(OrderedElement a, const KScalar &c) { return a *= c; }
	friend OrderedElement operator*(const KScalar &c, OrderedElement a) { return a *= c; }
	/// Commutative product of representatives (not the algebra product).
	friend OrderedElement operator*(const OrderedElement &a, const OrderedElement &b);
	friend bool operator==(const OrderedElement &a, const OrderedElement &b) = default;

	/// `:x0^2*x1: - 2i/k :x0*x1:`; monomials in decreasing lexicographic
	/// order, x0 exponent most significant, and kappa powers decreasing.
	std::string to_string() const;

  private:
	Terms terms_;
};

/// Algebra product of M_kappa on ordered representatives.
OrderedElement star(const OrderedElement &f, const OrderedElement &g);

/// Exact substitution x0 -> x0 + c.
OrderedElement shift0(const OrderedElement &f, const KScalar &c);

OrderedElement classical_partial(const OrderedElement &f, int mu);

/// Spatial Laplacian sum_i d_i^2.
OrderedElement laplacian(const OrderedElement &f);

enum class Trig
{
	Sin,     ///< sin(d0/k)
	Cos,     ///< cos(d0/k)
	ExpPlus, ///< e^{i d0/k}
	ExpMinus,
	Exp2Minus ///< e^{-2i d0/k}
};

OrderedElement trig0(const OrderedElement &f, Trig kind);

/// Evaluation at x = 0.
KScalar counit(const OrderedElement &f);

/// All exponent tuples of total degree <= max_degree, degree-major.
std::vector<Exponents> monomials_up_to(unsigned max_degree);

std::string monomial_text(const Exponents &e);

} // namespace kmink
