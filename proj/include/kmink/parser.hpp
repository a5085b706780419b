#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "kmink/nc_words.hpp"
#include "kmink/ordered.hpp"

namespace kmink {

/// Syntax error tagged with a 0-based character offset into the source.
class ParseError : public std::runtime_error
{
  public:
	ParseError(std::size_t position, const std::string &what);
	std::size_t position() const { return position_; }

  private:
	std::size_t position_;
};

/// Expression tree of the input language. Products are noncommutative and
/// keep their operand order; `:e:` marks a normally ordered symbol.
struct Ast
{
	enum class Kind
	{
		Sum,       ///< children with per-child sign
		Product,   ///< children with per-child '*' or '/'
		Power,     ///< children[0] ^ exponent
		Number,    ///< non-negative integer literal
		Imaginary, ///< i
		Kappa,     ///< k
		Generator, ///< x0..x3
		Ordered    ///< :children[0]:
	};

	Kind kind = Kind::Number;
	std::vector<Ast> children;
	/// Sum: true = subtracted; Product: true = divided.
	std::vector<bool> inverted;
	mpz_class number = 0;
	int exponent = 0;
	int generator = 0;

	friend bool operator==(const Ast &a, const Ast &b);
};

/// expr := ['+'|'-'] term (('+'|'-') term)*
/// term := power (('*' | '/' | juxtaposition) power)*
/// power := primary ['^' ['-'] uint]
/// primary := uint | 'i' | 'k' | 'x0'..'x3' | '(' expr ')' | ':' expr ':'
Ast parse(std::string_view src);

/// Prints with explicit '*' and parentheses exactly where structure needs them;
/// parse(print(a)) == a.
std::string print(const Ast &a);

/// Value in the free algebra. Division and negative powers are allowed only
/// by invertible scalars c*k^n; anything else throws std::domain_error.
NCElement evaluate(const Ast &a);

/// Commutative image: every word collapsed to its letter counts.
OrderedElement commutative_image(const NCElement &a);

/// parse + evaluate.
NCElement parse_element(std::string_view src);

} // namespace kmink
