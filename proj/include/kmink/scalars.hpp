#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kmink {

/// Exact complex number re + im*i with rational parts, always in lowest terms.
class GaussRat
{
  public:
	GaussRat() = default;
	GaussRat(long re) : re_(re) {}
	GaussRat(mpq_class re, mpq_class im = 0);

	static GaussRat i() { return GaussRat(0, 1); }
	static GaussRat fraction(long num, long den, bool imaginary = false);

	const mpq_class &re() const { return re_; }
	const mpq_class &im() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	bool is_real() const { return sgn(im_) == 0; }
	bool is_imaginary() const { return sgn(re_) == 0; }

	GaussRat conj() const { return GaussRat(re_, -im_); }
	std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

	GaussRat operator-() const { return GaussRat(-re_, -im_); }
	GaussRat &operator+=(const GaussRat &o);
	GaussRat &operator-=(const GaussRat &o);
	GaussRat &operator*=(const GaussRat &o);
	GaussRat &operator/=(const GaussRat &o);

	friend GaussRat operator+(GaussRat a, const GaussRat &b) { return a += b; }
	friend GaussRat operator-(GaussRat a, const GaussRat &b) { return a -= b; }
	friend GaussRat operator*(GaussRat a, const GaussRat &b) { return a *= b; }
	friend GaussRat operator/(GaussRat a, const GaussRat &b) { return a /= b; }
	friend bool operator==(const GaussRat &a, const GaussRat &b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}

	/// `a`, `b*i` or `a+b*i` with reduced fractions.
	std::string to_string() const;

  private:
	mpq_class re_ = 0;
	mpq_class im_ = 0;
};

/// Valuation of the zero scalar.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Laurent polynomial in kappa over the Gaussian rationals.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// kept, so two scalars are equal iff their maps are identical.
class KScalar
{
  public:
	using Terms = std::map<int, GaussRat>;

	KScalar() = default;
	KScalar(long c) : KScalar(GaussRat(c)) {}
	KScalar(const GaussRat &c, int kappa_power = 0);

	static KScalar kappa(int power = 1) { return KScalar(GaussRat(1), power); }
	static KScalar i() { return KScalar(GaussRat::i()); }

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_monomial() const { return terms_.size() == 1; }

	/// Coefficient of kappa^power (zero if absent).
	GaussRat coefficient(int power) const;

	/// Largest kappa exponent present; kMinusInfinity for zero.
	int kappa_valuation() const;

	/// Substitute a numeric kappa.
	std::complex<double> eval_numeric(double kappa) const;

	/// Complex conjugate; kappa is real.
	KScalar conj() const;

	KScalar operator-() const;
	KScalar &operator+=(const KScalar &o);
	KScalar &operator-=(const KScalar &o);
	KScalar &operator*=(const KScalar &o);
	/// Only monomials c*kappa^n are invertible.
	KScalar &operator/=(const KScalar &o);

	friend KScalar operator+(KScalar a, const KScalar &b) { return a += b; }
	friend KScalar operator-(KScalar a, const KScalar &b) { return a -= b; }
	friend KScalar operator*(KScalar a, const KScalar &b) { return a *= b; }
	friend KScalar operator/(KScalar a, const KScalar &b) { return a /= b; }
	friend bool operator==(const KScalar &a, const KScalar &b) = default;

	/// Canonical form, decreasing kappa exponent, e.g. `2*k^2 + 1/2+3/4*i - i*k^-1`.
	std::string to_string() const;

  private:
	void add_term(int power, const GaussRat &c);

	Terms terms_;
};

/// Compact rendering of a single term c*kappa^n as used inside element
/// printing: `2i/k`, `1/4`, `3/4*i*k^2`. The sign is returned separately
/// when the coefficient is purely real or purely imaginary.
struct TermText
{
	bool negative = false;
	std::string magnitude;
	bool is_unit = false; ///< magnitude is exactly "1"
};
TermText term_text(const GaussRat &c, int kappa_power);

/// Render a sum of compact terms `t0 - t1 + ...`, each term a scalar factor
/// followed by `suffix` (empty for pure scalars).
void append_term(std::string &out, const GaussRat &c, int kappa_power,
                 const std::string &suffix, const std::string &joiner);

} // namespace kmink
