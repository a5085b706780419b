#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kmink/ordered.hpp"
#include "kmink/scalars.hpp"

namespace kmink {

/// Generator index 0..3.
using Letter = std::uint8_t;
/// A product of generators; the empty word is the unit.
using Word = std::vector<Letter>;

/// Element of the free algebra on x0..x3: a finite sum of words.
class NCElement
{
  public:
	using Terms = std::map<Word, KScalar>;

	NCElement() = default;
	NCElement(const KScalar &c);
	NCElement(long c) : NCElement(KScalar(c)) {}

	static NCElement word(Word w, const KScalar &c = KScalar(1));
	static NCElement x(int mu);

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void add_term(const Word &w, const KScalar &c);

	NCElement operator-() const;
	NCElement &operator+=(const NCElement &o);
	NCElement &operator-=(const NCElement &o);
	NCElement &operator*=(const KScalar &c);

	friend NCElement operator+(NCElement a, const NCElement &b) { return a += b; }
	friend NCElement operator-(NCElement a, const NCElement &b) { return a -= b; }
	friend NCElement operator*(NCElement a, const KScalar &c) { return a *= c; }
	friend NCElement operator*(const KScalar &c, NCElement a) { return a *= c; }
	/// Concatenation product; nothing is reordered.
	friend NCElement operator*(const NCElement &a, const NCElement &b);
	friend bool operator==(const NCElement &a, const NCElement &b) = default;

	/// Words printed `x0*x1*x1` with compact scalar prefixes, e.g. `x1*x0 - i/k*x1`.
	std::string to_string() const;

  private:
	Terms terms_;
};

inline NCElement nc_mul(const NCElement &a, const NCElement &b) { return a * b; }

/// Which redex the rewriter contracts first. Both must reach the same normal form.
enum class Strategy
{
	LeftmostFirst,
	RightmostFirst
};

/// Position p such that letters p, p+1 form a redex: a spatial letter before
/// x0, or two spatial letters out of ascending order.
std::optional<std::size_t> find_redex(const Word &w, Strategy strategy);

/// One rewrite step at position p:
///   x^i x^0 -> x^0 x^i - (i/k) x^i,   x^i x^j -> x^j x^i (i > j spatial).
NCElement rewrite_at(const Word &w, std::size_t p);

/// Termination measure: (spatial-before-x0 inversions, spatial inversions, length).
/// Strictly decreases for every word produced by rewrite_at.
using RewriteMeasure = std::tuple<std::size_t, std::size_t, std::size_t>;
RewriteMeasure rewrite_measure(const Word &w);

/// Rewrites until every word is in normal form (x0 letters leftmost, spatial
/// letters ascending) and reads off the exponent tuples.
OrderedElement normal_order(const NCElement &a, Strategy strategy = Strategy::LeftmostFirst);

/// :x0^n0 x1^n1 x2^n2 x3^n3: -> word 0^n0 1^n1 2^n2 3^n3.
NCElement embed(const OrderedElement &f);

Word embed_word(const Exponents &e);

/// Reverses every word and conjugates coefficients; the generators are selfadjoint.
NCElement involution(const NCElement &a);

/// Involution transported to ordered representatives.
OrderedElement involution(const OrderedElement &f);

} // namespace kmink
