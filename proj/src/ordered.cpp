#include "kmink/ordered.hpp"

#include "kmink/nc_words.hpp"

namespace kmink {

OrderedElement::OrderedElement(const KScalar &c)
{
	if (!c.is_zero())
		terms_.emplace(Exponents{0, 0, 0, 0}, c);
}

OrderedElement OrderedElement::monomial(const Exponents &e, const KScalar &c)
{
	OrderedElement r;
	r.add_term(e, c);
	return r;
}

OrderedElement OrderedElement::x(int mu)
{
	Exponents e{0, 0, 0, 0};
	e.at(mu) = 1;
	return monomial(e);
}

KScalar OrderedElement::coefficient(const Exponents &e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? KScalar() : it->second;
}

int OrderedElement::degree() const
{
	int d = -1;
	for (const auto &[e, c] : terms_)
		d = std::max(d, static_cast<int>(total_degree(e)));
	return d;
}

void OrderedElement::add_term(const Exponents &e, const KScalar &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (inserted)
		return;
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

OrderedElement OrderedElement::operator-() const
{
	OrderedElement r;
	for (const auto &[e, c] : terms_)
		r.terms_.emplace(e, -c);
	return r;
}

OrderedElement &OrderedElement::operator+=(const OrderedElement &o)
{
	for (const auto &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

OrderedElement &OrderedElement::operator-=(const OrderedElement &o)
{
	for (const auto &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

OrderedElement &OrderedElement::operator*=(const KScalar &c)
{
	if (c.is_zero())
		return *this = OrderedElement();
	for (auto &[e, a] : terms_)
		a *= c;
	return *this;
}

OrderedElement operator*(const OrderedElement &a, const OrderedElement &b)
{
	OrderedElement r;
	for (const auto &[ea, ca] : a.terms_)
		for (const auto &[eb, cb] : b.terms_)
		{
			Exponents e;
			for (int mu = 0; mu < 4; ++mu)
				e[mu] = ea[mu] + eb[mu];
			r.add_term(e, ca * cb);
		}
	return r;
}

std::string monomial_text(const Exponents &e)
{
	std::string out;
	for (int mu = 0; mu < 4; ++mu)
	{
		if (e[mu] == 0)
			continue;
		if (!out.empty())
			out += "*";
		out += "x" + std::to_string(mu);
		if (e[mu] > 1)
			out += "^" + std::to_string(e[mu]);
	}
	return out.empty() ? "1" : out;
}

std::string OrderedElement::to_string() const
{
	std::string out;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		const auto &[e, c] = *it;
		std::string suffix = total_degree(e) == 0 ? "" : ":" + monomial_text(e) + ":";
		const auto &kt = c.terms();
		for (auto k = kt.rbegin(); k != kt.rend(); ++k)
			append_term(out, k->second, k->first, suffix, " ");
	}
	return out.empty() ? "0" : out;
}

OrderedElement star(const OrderedElement &f, const OrderedElement &g)
{
	return normal_order(embed(f) * embed(g));
}

OrderedElement shift0(const OrderedElement &f, const KScalar &c)
{
	OrderedElement r;
	for (const auto &[e, a] : f.terms())
	{
		const unsigned n = e[0];
		// (x0 + c)^n = sum_j C(n, j) c^(n-j) x0^j
		std::vector<KScalar> cpow(n + 1);
		cpow[0] = KScalar(1);
		for (unsigned j = 1; j <= n; ++j)
			cpow[j] = cpow[j - 1] * c;
		mpz_class binom = 1;
		for (unsigned j = 0; j <= n; ++j)
		{
			Exponents out = e;
			out[0] = j;
			r.add_term(out, a * cpow[n - j] * KScalar(GaussRat(mpq_class(binom))));
			binom = binom * (n - j) / (j + 1);
		}
	}
	return r;
}

OrderedElement classical_partial(const OrderedElement &f, int mu)
{
	OrderedElement r;
	for (const auto &[e, a] : f.terms())
	{
		if (e.at(mu) == 0)
			continue;
		Exponents out = e;
		--out[mu];
		r.add_term(out, a * KScalar(static_cast<long>(e[mu])));
	}
	return r;
}

OrderedElement laplacian(const OrderedElement &f)
{
	OrderedElement r;
	for (int i = 1; i <= 3; ++i)
		r += classical_partial(classical_partial(f, i), i);
	return r;
}

OrderedElement trig0(const OrderedElement &f, Trig kind)
{
	const KScalar step = KScalar(GaussRat::i(), -1);
	switch (kind)
	{
	case Trig::ExpPlus:
		return shift0(f, step);
	case Trig::ExpMinus:
		return shift0(f, -step);
	case Trig::Exp2Minus:
		return shift0(f, KScalar(-2) * step);
	case Trig::Sin:
		// (e^{+} - e^{-}) / 2i
		return (shift0(f, step) - shift0(f, -step)) * KScalar(GaussRat(0, mpq_class(-1, 2)));
	case Trig::Cos:
		return (shift0(f, step) + shift0(f, -step)) * KScalar(GaussRat(mpq_class(1, 2)));
	}
	return {};
}

KScalar counit(const OrderedElement &f) { return f.coefficient({0, 0, 0, 0}); }

std::vector<Exponents> monomials_up_to(unsigned max_degree)
{
	std::vector<Exponents> out;
	for (unsigned d = 0; d <= max_degree; ++d)
		for (unsigned a = d + 1; a-- > 0;)
			for (unsigned b = d - a + 1; b-- > 0;)
				for (unsigned c = d - a - b + 1; c-- > 0;)
					out.push_back({a, b, c, d - a - b - c});
	return out;
}

} // namespace kmink
