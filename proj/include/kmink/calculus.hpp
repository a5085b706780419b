#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "kmink/nc_words.hpp"
#include "kmink/ordered.hpp"
#include "kmink/report.hpp"

namespace kmink {

/// Basis of the five-dimensional calculus: tau^0..tau^3 = dx^mu and the extra form tau.
enum class FormLabel : int
{
	T0 = 0,
	T1 = 1,
	T2 = 2,
	T3 = 3,
	Tau = 4
};

inline constexpr std::array<FormLabel, 5> kFormLabels = {FormLabel::T0, FormLabel::T1, FormLabel::T2,
                                                          FormLabel::T3, FormLabel::Tau};

inline int index(FormLabel l) { return static_cast<int>(l); }
inline FormLabel dx(int mu) { return static_cast<FormLabel>(mu); }
std::string label_name(FormLabel l);

/// Minkowski metric diag(+1, -1, -1, -1).
struct Metric
{
	static constexpr int g(int mu, int nu) { return mu != nu ? 0 : (mu == 0 ? 1 : -1); }
};

/// Sum_A f_A tau^A with every coefficient standing to the LEFT of its basis form.
class OneForm
{
  public:
	OneForm() = default;
	static OneForm basis(FormLabel l, const OrderedElement &coeff = OrderedElement(1));

	const OrderedElement &operator[](FormLabel l) const { return coeffs_[index(l)]; }
	OrderedElement &operator[](FormLabel l) { return coeffs_[index(l)]; }

	bool is_zero() const;

	OneForm &operator+=(const OneForm &o);
	OneForm &operator-=(const OneForm &o);
	friend OneForm operator+(OneForm a, const OneForm &b) { return a += b; }
	friend OneForm operator-(OneForm a, const OneForm &b) { return a -= b; }
	friend bool operator==(const OneForm &a, const OneForm &b) = default;

	/// `f0 :: t0 | f1 :: t1 | f2 :: t2 | f3 :: t3 | fphi :: tau`
	std::string to_string() const;

  private:
	std::array<OrderedElement, 5> coeffs_;
};

/// a * w, coefficients multiplied on the left through the star product.
OneForm left_mul(const OrderedElement &a, const OneForm &w);
/// w * b, forms pushed right past b by the bimodule relations.
OneForm right_mul(const OneForm &w, const NCElement &b);

/// Two-form stored on ordered label pairs (A < B).
class TwoForm
{
  public:
	using Key = std::pair<FormLabel, FormLabel>;

	/// Adds c * tau^A ^ tau^B, reordering with a sign; A == B contributes nothing.
	void add(FormLabel a, FormLabel b, const OrderedElement &c);

	const std::map<Key, OrderedElement> &coeffs() const { return coeffs_; }
	OrderedElement operator[](Key k) const;
	bool is_zero() const { return coeffs_.empty(); }

	TwoForm operator-() const;
	TwoForm &operator+=(const TwoForm &o);
	friend TwoForm operator+(TwoForm a, const TwoForm &b) { return a += b; }
	friend TwoForm operator-(TwoForm a, const TwoForm &b) { return a += -b; }
	friend bool operator==(const TwoForm &a, const TwoForm &b) = default;

	std::string to_string() const;

  private:
	std::map<Key, OrderedElement> coeffs_;
};

/// tau^A * w rewritten as sum_B f_B tau^B.
OneForm push_form_left(FormLabel label, const Word &w);

/// d through the Leibniz rule on words and the bimodule relations.
OneForm exterior_d_leibniz(const NCElement &a);

/// Closed-form deformed derivatives: df = d_mu f tau^mu + d f tau.
OrderedElement deformed_d0(const OrderedElement &f);
OrderedElement deformed_di(const OrderedElement &f, int i);
OrderedElement deformed_box(const OrderedElement &f);
/// d_mu for mu = 0..3.
OrderedElement deformed_partial(const OrderedElement &f, int mu);

OneForm exterior_d(const OrderedElement &f);

TwoForm wedge_with_basis(const OneForm &w, FormLabel label);

/// d tau = -2 tau_mu ^ tau^mu, evaluated with the antisymmetric wedge.
TwoForm d_tau();

/// d(sum f_A tau^A) = sum (d f_A) ^ tau^A + f_A d tau^A.
TwoForm d_oneform(const OneForm &w);

/// Oracle equality, d^2 = 0 and the tau-definition identity on all
/// monomials up to max_degree.
Report check_calculus(unsigned max_degree);

} // namespace kmink
