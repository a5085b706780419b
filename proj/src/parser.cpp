#include "kmink/parser.hpp"

#include <cctype>

namespace kmink {

ParseError::ParseError(std::size_t position, const std::string &what)
    : std::runtime_error("syntax error at column " + std::to_string(position + 1) + ": " + what),
      position_(position)
{
}

bool operator==(const Ast &a, const Ast &b)
{
	return a.kind == b.kind && a.children == b.children && a.inverted == b.inverted && a.number == b.number &&
	       a.exponent == b.exponent && a.generator == b.generator;
}

namespace {

Ast leaf(Ast::Kind kind)
{
	Ast a;
	a.kind = kind;
	return a;
}

class Parser
{
  public:
	explicit Parser(std::string_view src) : src_(src) {}

	Ast parse_all()
	{
		Ast a = expr();
		skip();
		if (pos_ != src_.size())
			fail("unexpected '" + std::string(1, src_[pos_]) + "'");
		return a;
	}

  private:
	[[noreturn]] void fail(const std::string &what) const { throw ParseError(pos_, what); }

	void skip()
	{
		while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
			++pos_;
	}

	char peek()
	{
		skip();
		return pos_ < src_.size() ? src_[pos_] : '\0';
	}

	bool accept(char c)
	{
		if (peek() != c)
			return false;
		++pos_;
		return true;
	}

	bool starts_primary()
	{
		char c = peek();
		if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'k' || c == 'x' || c == '(')
			return true;
		return c == ':' && !inside_ordered_;
	}

	Ast expr()
	{
		Ast sum = leaf(Ast::Kind::Sum);
		bool negative = false;
		if (accept('-'))
			negative = true;
		else
			accept('+');
		sum.children.push_back(term());
		sum.inverted.push_back(negative);
		for (;;)
		{
			if (accept('+'))
				negative = false;
			else if (accept('-'))
				negative = true;
			else
				break;
			sum.children.push_back(term());
			sum.inverted.push_back(negative);
		}
		if (sum.children.size() == 1 && !sum.inverted[0])
			return std::move(sum.children[0]);
		return sum;
	}

	Ast term()
	{
		Ast product = leaf(Ast::Kind::Product);
		product.children.push_back(power());
		product.inverted.push_back(false);
		for (;;)
		{
			bool divide = false;
			if (accept('*'))
				;
			else if (accept('/'))
				divide = true;
			else if (!starts_primary())
				break;
			product.children.push_back(power());
			product.inverted.push_back(divide);
		}
		if (product.children.size() == 1)
			return std::move(product.children[0]);
		return product;
	}

	Ast power()
	{
		Ast base = primary();
		if (!accept('^'))
			return base;
		bool negative = accept('-');
		skip();
		if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
			fail("expected exponent");
		mpz_class n = digits();
		if (n > 1000000)
			fail("exponent too large");
		Ast p = leaf(Ast::Kind::Power);
		p.exponent = static_cast<int>(n.get_si()) * (negative ? -1 : 1);
		p.children.push_back(std::move(base));
		return p;
	}

	mpz_class digits()
	{
		std::size_t start = pos_;
		while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		return mpz_class(std::string(src_.substr(start, pos_ - start)));
	}

	Ast primary()
	{
		char c = peek();
		if (c == '\0')
			fail("unexpected end of input");
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			Ast n = leaf(Ast::Kind::Number);
			n.number = digits();
			return n;
		}
		if (c == 'i' || c == 'k')
		{
			++pos_;
			return leaf(c == 'i' ? Ast::Kind::Imaginary : Ast::Kind::Kappa);
		}
		if (c == 'x')
		{
			++pos_;
			if (pos_ >= src_.size() || src_[pos_] < '0' || src_[pos_] > '3')
				fail("expected generator index 0..3 after 'x'");
			Ast g = leaf(Ast::Kind::Generator);
			g.generator = src_[pos_++] - '0';
			return g;
		}
		if (c == '(')
		{
			++pos_;
			const bool saved = inside_ordered_;
			inside_ordered_ = false;
			Ast inner = expr();
			inside_ordered_ = saved;
			if (!accept(')'))
				fail("expected ')'");
			return inner;
		}
		if (c == ':' && !inside_ordered_)
		{
			++pos_;
			inside_ordered_ = true;
			Ast inner = expr();
			inside_ordered_ = false;
			if (!accept(':'))
				fail("expected closing ':'");
			Ast o = leaf(Ast::Kind::Ordered);
			o.children.push_back(std::move(inner));
			return o;
		}
		fail("unexpected '" + std::string(1, c) + "'");
	}

	std::string_view src_;
	std::size_t pos_ = 0;
	bool inside_ordered_ = false;
};

bool is_atom(const Ast &a)
{
	switch (a.kind)
	{
	case Ast::Kind::Number:
	case Ast::Kind::Imaginary:
	case Ast::Kind::Kappa:
	case Ast::Kind::Generator:
	case Ast::Kind::Ordered:
		return true;
	default:
		return false;
	}
}

bool contains_ordered(const Ast &a)
{
	if (a.kind == Ast::Kind::Ordered)
		return true;
	for (const Ast &c : a.children)
		if (contains_ordered(c))
			return true;
	return false;
}

std::string wrapped(const Ast &a, bool wrap) { return wrap ? "(" + print(a) + ")" : print(a); }

/// Invertible scalar c*k^n hidden in an NCElement, if it is one.
const KScalar *as_unit_scalar(const NCElement &e)
{
	if (e.terms().size() != 1 || !e.terms().begin()->first.empty())
		return nullptr;
	const KScalar &c = e.terms().begin()->second;
	return c.is_monomial() ? &c : nullptr;
}

NCElement power_of(const NCElement &base, int exponent)
{
	if (exponent < 0)
	{
		const KScalar *c = as_unit_scalar(base);
		if (c == nullptr)
			throw std::domain_error("non-invertible scalar");
		return power_of(NCElement(KScalar(1) / *c), -exponent);
	}
	NCElement result(1);
	NCElement square = base;
	for (unsigned n = static_cast<unsigned>(exponent); n != 0; n >>= 1)
	{
		if (n & 1U)
			result = result * square;
		if (n > 1)
			square = square * square;
	}
	return result;
}

} // namespace

Ast parse(std::string_view src) { return Parser(src).parse_all(); }

std::string print(const Ast &a)
{
	switch (a.kind)
	{
	case Ast::Kind::Number:
		return a.number.get_str();
	case Ast::Kind::Imaginary:
		return "i";
	case Ast::Kind::Kappa:
		return "k";
	case Ast::Kind::Generator:
		return "x" + std::to_string(a.generator);
	case Ast::Kind::Ordered:
		return ":" + wrapped(a.children[0], contains_ordered(a.children[0])) + ":";
	case Ast::Kind::Power:
		return wrapped(a.children[0], !is_atom(a.children[0])) + "^" + std::to_string(a.exponent);
	case Ast::Kind::Product: {
		std::string out;
		for (std::size_t n = 0; n < a.children.size(); ++n)
		{
			if (n > 0)
				out += a.inverted[n] ? "/" : "*";
			const Ast &c = a.children[n];
			out += wrapped(c, c.kind == Ast::Kind::Sum || c.kind == Ast::Kind::Product);
		}
		return out;
	}
	case Ast::Kind::Sum: {
		std::string out;
		for (std::size_t n = 0; n < a.children.size(); ++n)
		{
			if (n == 0)
				out += a.inverted[n] ? "-" : "";
			else
				out += a.inverted[n] ? " - " : " + ";
			out += wrapped(a.children[n], a.children[n].kind == Ast::Kind::Sum);
		}
		return out;
	}
	}
	return {};
}

OrderedElement commutative_image(const NCElement &a)
{
	OrderedElement r;
	for (const auto &[w, c] : a.terms())
	{
		Exponents e{0, 0, 0, 0};
		for (Letter l : w)
			++e[l];
		r.add_term(e, c);
	}
	return r;
}

NCElement evaluate(const Ast &a)
{
	switch (a.kind)
	{
	case Ast::Kind::Number:
		return NCElement(KScalar(GaussRat(mpq_class(a.number))));
	case Ast::Kind::Imaginary:
		return NCElement(KScalar::i());
	case Ast::Kind::Kappa:
		return NCElement(KScalar::kappa());
	case Ast::Kind::Generator:
		return NCElement::x(a.generator);
	case Ast::Kind::Ordered:
		return embed(commutative_image(evaluate(a.children[0])));
	case Ast::Kind::Power:
		return power_of(evaluate(a.children[0]), a.exponent);
	case Ast::Kind::Product: {
		NCElement r(1);
		for (std::size_t n = 0; n < a.children.size(); ++n)
		{
			NCElement v = evaluate(a.children[n]);
			if (!a.inverted[n])
			{
				r = r * v;
				continue;
			}
			const KScalar *c = as_unit_scalar(v);
			if (c == nullptr)
				throw std::domain_error("non-invertible scalar");
			r *= KScalar(1) / *c;
		}
		return r;
	}
	case Ast::Kind::Sum: {
		NCElement r;
		for (std::size_t n = 0; n < a.children.size(); ++n)
		{
			if (a.inverted[n])
				r -= evaluate(a.children[n]);
			else
				r += evaluate(a.children[n]);
		}
		return r;
	}
	}
	return {};
}

NCElement parse_element(std::string_view src) { return evaluate(parse(src)); }

} // namespace kmink
