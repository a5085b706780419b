#include "kmink/scalars.hpp"

#include <cmath>

namespace kmink {

namespace {

std::string rational_text(const mpq_class &q) { return q.get_str(); }

bool is_integer(const mpq_class &q) { return q.get_den() == 1; }

} // namespace

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
	re_.canonicalize();
	im_.canonicalize();
}

GaussRat GaussRat::fraction(long num, long den, bool imaginary)
{
	if (den == 0)
		throw std::domain_error("non-invertible scalar");
	mpq_class q(num, den);
	q.canonicalize();
	return imaginary ? GaussRat(0, q) : GaussRat(q, 0);
}

GaussRat &GaussRat::operator+=(const GaussRat &o)
{
	re_ += o.re_;
	im_ += o.im_;
	return *this;
}

GaussRat &GaussRat::operator-=(const GaussRat &o)
{
	re_ -= o.re_;
	im_ -= o.im_;
	return *this;
}

GaussRat &GaussRat::operator*=(const GaussRat &o)
{
	mpq_class re = re_ * o.re_ - im_ * o.im_;
	mpq_class im = re_ * o.im_ + im_ * o.re_;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

GaussRat &GaussRat::operator/=(const GaussRat &o)
{
	if (o.is_zero())
		throw std::domain_error("non-invertible scalar");
	mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
	*this *= o.conj();
	re_ /= norm;
	im_ /= norm;
	return *this;
}

std::string GaussRat::to_string() const
{
	if (is_real())
		return rational_text(re_);
	std::string imag;
	if (im_ == 1)
		imag = "i";
	else if (im_ == -1)
		imag = "-i";
	else
		imag = rational_text(im_) + "*i";
	if (is_imaginary())
		return imag;
	if (sgn(im_) > 0)
		return rational_text(re_) + "+" + imag;
	return rational_text(re_) + imag;
}

KScalar::KScalar(const GaussRat &c, int kappa_power)
{
	if (!c.is_zero())
		terms_.emplace(kappa_power, c);
}

void KScalar::add_term(int power, const GaussRat &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(power, c);
	if (inserted)
		return;
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

GaussRat KScalar::coefficient(int power) const
{
	auto it = terms_.find(power);
	return it == terms_.end() ? GaussRat() : it->second;
}

int KScalar::kappa_valuation() const
{
	if (terms_.empty())
		return kMinusInfinity;
	return terms_.rbegin()->first;
}

std::complex<double> KScalar::eval_numeric(double kappa) const
{
	if (kappa == 0.0)
		throw std::domain_error("eval_numeric: kappa must be nonzero");
	std::complex<double> sum = 0.0;
	for (const auto &[power, c] : terms_)
		sum += c.to_complex() * std::pow(kappa, power);
	return sum;
}

KScalar KScalar::conj() const
{
	KScalar r;
	for (const auto &[power, c] : terms_)
		r.terms_.emplace(power, c.conj());
	return r;
}

KScalar KScalar::operator-() const
{
	KScalar r;
	for (const auto &[power, c] : terms_)
		r.terms_.emplace(power, -c);
	return r;
}

KScalar &KScalar::operator+=(const KScalar &o)
{
	for (const auto &[power, c] : o.terms_)
		add_term(power, c);
	return *this;
}

KScalar &KScalar::operator-=(const KScalar &o)
{
	for (const auto &[power, c] : o.terms_)
		add_term(power, -c);
	return *this;
}

KScalar &KScalar::operator*=(const KScalar &o)
{
	KScalar r;
	for (const auto &[pa, ca] : terms_)
		for (const auto &[pb, cb] : o.terms_)
			r.add_term(pa + pb, ca * cb);
	return *this = std::move(r);
}

KScalar &KScalar::operator/=(const KScalar &o)
{
	if (!o.is_monomial())
		throw std::domain_error("non-invertible scalar");
	const auto &[power, c] = *o.terms_.begin();
	KScalar r;
	for (const auto &[p, a] : terms_)
		r.terms_.emplace(p - power, a / c);
	return *this = std::move(r);
}

std::string KScalar::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		const auto &[power, c] = *it;
		const bool compound = !c.is_real() && !c.is_imaginary();
		std::string text = c.to_string();
		bool negative = false;
		if (!compound && text.front() == '-')
		{
			negative = true;
			text.erase(0, 1);
		}
		if (compound && (power != 0 || terms_.size() > 1))
			text = "(" + text + ")";
		if (power != 0)
		{
			std::string kpart = "k^" + std::to_string(power);
			text = text == "1" ? kpart : text + "*" + kpart;
		}
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		out += text;
		first = false;
	}
	return out;
}

TermText term_text(const GaussRat &c, int kappa_power)
{
	TermText t;
	std::string g;
	if (c.is_real())
	{
		t.negative = sgn(c.re()) < 0;
		g = rational_text(abs(c.re()));
	}
	else if (c.is_imaginary())
	{
		t.negative = sgn(c.im()) < 0;
		mpq_class b = abs(c.im());
		if (b == 1)
			g = "i";
		else if (is_integer(b))
			g = rational_text(b) + "i";
		else
			g = rational_text(b) + "*i";
	}
	else
	{
		g = "(" + c.to_string() + ")";
	}

	if (kappa_power > 0)
	{
		std::string k = kappa_power == 1 ? "k" : "k^" + std::to_string(kappa_power);
		g = g == "1" ? k : g + "*" + k;
	}
	else if (kappa_power < 0)
	{
		g += kappa_power == -1 ? "/k" : "/k^" + std::to_string(-kappa_power);
	}
	t.is_unit = g == "1";
	t.magnitude = std::move(g);
	return t;
}

void append_term(std::string &out, const GaussRat &c, int kappa_power,
                 const std::string &suffix, const std::string &joiner)
{
	TermText t = term_text(c, kappa_power);
	if (out.empty())
		out += t.negative ? "-" : "";
	else
		out += t.negative ? " - " : " + ";
	if (suffix.empty())
		out += t.magnitude;
	else if (t.is_unit)
		out += suffix;
	else
		out += t.magnitude + joiner + suffix;
}

} // namespace kmink
