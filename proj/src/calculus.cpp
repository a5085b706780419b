#include "kmink/calculus.hpp"

#include <vector>

namespace kmink {

std::string label_name(FormLabel l)
{
	return l == FormLabel::Tau ? "tau" : "t" + std::to_string(index(l));
}

OneForm OneForm::basis(FormLabel l, const OrderedElement &coeff)
{
	OneForm w;
	w[l] = coeff;
	return w;
}

bool OneForm::is_zero() const
{
	for (const auto &c : coeffs_)
		if (!c.is_zero())
			return false;
	return true;
}

OneForm &OneForm::operator+=(const OneForm &o)
{
	for (int a = 0; a < 5; ++a)
		coeffs_[a] += o.coeffs_[a];
	return *this;
}

OneForm &OneForm::operator-=(const OneForm &o)
{
	for (int a = 0; a < 5; ++a)
		coeffs_[a] -= o.coeffs_[a];
	return *this;
}

std::string OneForm::to_string() const
{
	std::string out;
	for (FormLabel l : kFormLabels)
	{
		if (!out.empty())
			out += " | ";
		out += coeffs_[index(l)].to_string() + " :: " + label_name(l);
	}
	return out;
}

void TwoForm::add(FormLabel a, FormLabel b, const OrderedElement &c)
{
	if (a == b || c.is_zero())
		return;
	Key key = a < b ? Key{a, b} : Key{b, a};
	OrderedElement &slot = coeffs_[key];
	if (a < b)
		slot += c;
	else
		slot -= c;
	if (slot.is_zero())
		coeffs_.erase(key);
}

OrderedElement TwoForm::operator[](Key k) const
{
	auto it = coeffs_.find(k);
	return it == coeffs_.end() ? OrderedElement() : it->second;
}

TwoForm TwoForm::operator-() const
{
	TwoForm r;
	for (const auto &[k, c] : coeffs_)
		r.coeffs_.emplace(k, -c);
	return r;
}

TwoForm &TwoForm::operator+=(const TwoForm &o)
{
	for (const auto &[k, c] : o.coeffs_)
		add(k.first, k.second, c);
	return *this;
}

std::string TwoForm::to_string() const
{
	if (coeffs_.empty())
		return "0";
	std::string out;
	for (const auto &[k, c] : coeffs_)
	{
		if (!out.empty())
			out += " | ";
		out += c.to_string() + " :: " + label_name(k.first) + "^" + label_name(k.second);
	}
	return out;
}

namespace {

using NCOneForm = std::array<NCElement, 5>;

struct CommutatorTerm
{
	FormLabel label;
	KScalar coeff;
};

/// [tau^A, x^nu] = sum of constant multiples of basis forms.
std::vector<CommutatorTerm> commutator(FormLabel a, int nu)
{
	const KScalar i_over_k(GaussRat::i(), -1);
	std::vector<CommutatorTerm> out;
	if (a == FormLabel::Tau)
	{
		// [tau, x^mu] = -(4/k^2) tau^mu
		out.push_back({dx(nu), KScalar(GaussRat(-4), -2)});
		return out;
	}
	const int mu = index(a);
	// [tau^mu, x^nu] = (i/k) g^{0mu} tau^nu - (i/k) g^{mu nu} tau^0 + 1/4 g^{mu nu} tau
	if (Metric::g(0, mu) != 0)
		out.push_back({dx(nu), i_over_k * KScalar(Metric::g(0, mu))});
	if (Metric::g(mu, nu) != 0)
	{
		out.push_back({FormLabel::T0, -i_over_k * KScalar(Metric::g(mu, nu))});
		out.push_back({FormLabel::Tau, KScalar(GaussRat(mpq_class(Metric::g(mu, nu), 4)))});
	}
	return out;
}

/// tau^A * w[from..] with noncommutative left coefficients.
NCOneForm push_nc(FormLabel a, const Word &w, std::size_t from)
{
	NCOneForm out;
	if (from == w.size())
	{
		out[index(a)] = NCElement(1);
		return out;
	}
	const int nu = w[from];
	const NCElement letter = NCElement::x(nu);
	NCOneForm moved = push_nc(a, w, from + 1);
	for (int b = 0; b < 5; ++b)
		out[b] = letter * moved[b];
	for (const auto &term : commutator(a, nu))
	{
		NCOneForm rest = push_nc(term.label, w, from + 1);
		for (int b = 0; b < 5; ++b)
			out[b] += rest[b] * term.coeff;
	}
	return out;
}

OneForm ordered(const NCOneForm &w)
{
	OneForm out;
	for (FormLabel l : kFormLabels)
		out[l] = normal_order(w[index(l)]);
	return out;
}

} // namespace

OneForm left_mul(const OrderedElement &a, const OneForm &w)
{
	OneForm out;
	for (FormLabel l : kFormLabels)
		out[l] = star(a, w[l]);
	return out;
}

OneForm right_mul(const OneForm &w, const NCElement &b)
{
	NCOneForm acc;
	for (FormLabel a : kFormLabels)
	{
		if (w[a].is_zero())
			continue;
		const NCElement left = embed(w[a]);
		for (const auto &[word, c] : b.terms())
		{
			NCOneForm pushed = push_nc(a, word, 0);
			for (int k = 0; k < 5; ++k)
				acc[k] += left * pushed[k] * c;
		}
	}
	return ordered(acc);
}

OneForm push_form_left(FormLabel label, const Word &w) { return ordered(push_nc(label, w, 0)); }

OneForm exterior_d_leibniz(const NCElement &a)
{
	NCOneForm acc;
	for (const auto &[word, c] : a.terms())
	{
		for (std::size_t k = 0; k < word.size(); ++k)
		{
			// prefix * dx^{word[k]} * suffix
			const NCElement prefix = NCElement::word(Word(word.begin(), word.begin() + k), c);
			NCOneForm pushed = push_nc(dx(word[k]), word, k + 1);
			for (int b = 0; b < 5; ++b)
				acc[b] += prefix * pushed[b];
		}
	}
	return ordered(acc);
}

OrderedElement deformed_d0(const OrderedElement &f)
{
	// k sin(d0/k) f + (i/2k) e^{i d0/k} Lap f
	return trig0(f, Trig::Sin) * KScalar::kappa() +
	       trig0(laplacian(f), Trig::ExpPlus) * KScalar(GaussRat(0, mpq_class(1, 2)), -1);
}

OrderedElement deformed_di(const OrderedElement &f, int i)
{
	if (i < 1 || i > 3)
		throw std::invalid_argument("deformed_di: spatial index must be 1..3");
	return trig0(classical_partial(f, i), Trig::ExpPlus);
}

OrderedElement deformed_partial(const OrderedElement &f, int mu)
{
	return mu == 0 ? deformed_d0(f) : deformed_di(f, mu);
}

OrderedElement deformed_box(const OrderedElement &f)
{
	// k^2/4 (1 - cos(d0/k)) f - 1/8 e^{i d0/k} Lap f
	return (f - trig0(f, Trig::Cos)) * KScalar(GaussRat(mpq_class(1, 4)), 2) -
	       trig0(laplacian(f), Trig::ExpPlus) * KScalar(GaussRat(mpq_class(1, 8)));
}

OneForm exterior_d(const OrderedElement &f)
{
	OneForm w;
	for (int mu = 0; mu < 4; ++mu)
		w[dx(mu)] = deformed_partial(f, mu);
	w[FormLabel::Tau] = deformed_box(f);
	return w;
}

TwoForm wedge_with_basis(const OneForm &w, FormLabel label)
{
	TwoForm out;
	for (FormLabel a : kFormLabels)
		out.add(a, label, w[a]);
	return out;
}

TwoForm d_tau()
{
	TwoForm out;
	for (int mu = 0; mu < 4; ++mu)
		out.add(dx(mu), dx(mu), OrderedElement(-2 * Metric::g(mu, mu)));
	return out;
}

TwoForm d_oneform(const OneForm &w)
{
	TwoForm out;
	for (FormLabel a : kFormLabels)
	{
		if (w[a].is_zero())
			continue;
		out += wedge_with_basis(exterior_d(w[a]), a);
		if (a == FormLabel::Tau)
		{
			const TwoForm dt = d_tau();
			for (const auto &[key, c] : dt.coeffs())
				out.add(key.first, key.second, star(w[a], c));
		}
	}
	return out;
}

Report check_calculus(unsigned max_degree)
{
	Report report{"calculus", {}};
	for (const Exponents &e : monomials_up_to(max_degree))
	{
		const OrderedElement f = OrderedElement::monomial(e);
		const std::string name = monomial_text(e);
		report.add("d closed form = d Leibniz", name, exterior_d(f) - exterior_d_leibniz(embed(f)));
		report.add("d^2 = 0", name, d_oneform(exterior_d(f)));
	}

	// d(x^2 + (3i/k) x0) - 2 x_mu tau^mu = tau
	OrderedElement x2 = OrderedElement::x(0) * OrderedElement::x(0);
	for (int i = 1; i <= 3; ++i)
		x2 -= OrderedElement::x(i) * OrderedElement::x(i);
	OneForm lhs = exterior_d(x2 + OrderedElement::x(0) * KScalar(GaussRat(0, 3), -1));
	for (int mu = 0; mu < 4; ++mu)
		lhs[dx(mu)] -= OrderedElement::x(mu) * KScalar(2 * Metric::g(mu, mu));
	report.add("d(x^2 + 3i/k x0) - 2 x_mu tau^mu = tau", "x^2", lhs - OneForm::basis(FormLabel::Tau));
	report.add("d tau = -2 tau_mu ^ tau^mu", "tau", d_oneform(OneForm::basis(FormLabel::Tau)) - d_tau());
	return report;
}

} // namespace kmink
