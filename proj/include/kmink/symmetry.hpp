#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "kmink/ordered.hpp"
#include "kmink/report.hpp"

namespace kmink {

enum class Generator
{
	P0,
	P1,
	P2,
	P3,
	M1,
	M2,
	M3,
	N1,
	N2,
	N3
};

inline constexpr std::array<Generator, 10> kGenerators = {
    Generator::P0, Generator::P1, Generator::P2, Generator::P3, Generator::M1,
    Generator::M2, Generator::M3, Generator::N1, Generator::N2, Generator::N3};

std::string generator_name(Generator g);
Generator momentum(int mu);
Generator rotation(int i);
Generator boost(int i);

/// Global sign applied to the boost action. Literal is the transcribed
/// formula; Shipped (= -1) is the sign under which every algebra relation
/// closes with the operator commutator.
enum class BoostSign : int
{
	Literal = 1,
	Shipped = -1
};

/// Levi-Civita symbol on 1..3 with eps_123 = +1.
int epsilon(int i, int j, int k);

/// P_mu :f: = :i df/dx^mu:
OrderedElement act_P(int mu, const OrderedElement &f);
/// M_i :f: = :-i eps_ijl x^j df/dx^l:
OrderedElement act_M(int i, const OrderedElement &f);
/// N_i :f: = s_N :(i x0 d_i + x^i (k/2 (1 - e^{-2i d0/k}) - Lap/2k) + 1/k x^k d_k d_i) f:
OrderedElement act_N(int i, const OrderedElement &f, BoostSign sign = BoostSign::Shipped);
OrderedElement act(Generator g, const OrderedElement &f, BoostSign sign = BoostSign::Shipped);

/// Formal operator built from generator actions, functions of P0, the
/// deformed translations and the box. Composition a * b applies b first.
class OperatorExpr
{
  public:
	OperatorExpr();                    ///< identity
	OperatorExpr(const KScalar &c);    ///< multiple of the identity
	static OperatorExpr of(Generator g);
	/// e^{c P0}, acting as the shift x0 -> x0 + i c.
	static OperatorExpr exp_p0(const KScalar &c);
	/// Deformed translation d_mu of the calculus.
	static OperatorExpr translation(int mu);
	/// Deformed box d of the calculus (identified with the mass-square operator).
	static OperatorExpr box();

	OrderedElement apply(const OrderedElement &f, BoostSign sign = BoostSign::Shipped) const;

	/// True iff built only from P_mu, e^{c P0} and scalars.
	bool momentum_only() const;

	friend OperatorExpr operator+(const OperatorExpr &a, const OperatorExpr &b);
	friend OperatorExpr operator-(const OperatorExpr &a, const OperatorExpr &b);
	friend OperatorExpr operator*(const OperatorExpr &a, const OperatorExpr &b);
	friend OperatorExpr operator*(const KScalar &c, const OperatorExpr &a);

	std::string to_string() const;

	struct Node;

  private:
	explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
	std::shared_ptr<const Node> node_;
};

OperatorExpr commutator(const OperatorExpr &a, const OperatorExpr &b);

/// F(P) :f: = :F(i d/dx) f:. Throws std::invalid_argument when F involves
/// anything but momenta.
OrderedElement act_F_of_P(const OperatorExpr &F, const OrderedElement &f);

/// One commutation relation [X, Y] = rhs of the kappa-Poincare algebra.
struct Relation
{
	std::string family;
	std::string name;
	OperatorExpr lhs;
	OperatorExpr rhs;
};

/// The eight commutator families, fully indexed.
std::vector<Relation> poincare_relations();

Report check_relations(unsigned max_degree, BoostSign sign = BoostSign::Shipped);

/// One leg X_(1) (x) X_(2) of a coproduct, with scalar weight.
struct CoproductTerm
{
	KScalar coeff;
	OperatorExpr left;
	OperatorExpr right;
};

std::vector<CoproductTerm> coproduct(Generator g, BoostSign sign = BoostSign::Shipped);

/// X(f * g) - sum (X_(1) f) * (X_(2) g) in the star product.
OrderedElement check_leibniz(Generator g, const OrderedElement &f, const OrderedElement &h,
                             BoostSign sign = BoostSign::Shipped);

/// check_leibniz for every generator and monomial pair with deg f + deg g <= max_degree.
Report check_leibniz_suite(unsigned max_degree, BoostSign sign = BoostSign::Shipped);

/// [box, X] f = 0 for all generators and monomials up to max_degree.
Report check_invariance(unsigned max_degree, BoostSign sign = BoostSign::Shipped);

/// d0^2 - sum di^2 - 8 box + (16/k^2) box^2 annihilates monomials up to max_degree.
Report check_box_identity(unsigned max_degree);

/// (box + m^2/8) f.
OrderedElement kg_apply(const OrderedElement &f, const KScalar &m);

/// Plane-wave label, inverse-length units like kappa and the mass.
struct Momentum
{
	double k0 = 0;
	std::array<double, 3> kvec{};
};

/// R(k) = 4 k^2 sinh^2(k0/2k) - e^{-k0/k} |kvec|^2 - m^2, the eigenvalue of
/// -8 (box + m^2/8) on the normally ordered plane wave.
double dispersion_residual(const Momentum &k, double kappa, double m);

/// Non-negative root k0 of the mass shell by bracket expansion and bisection.
double solve_k0(const std::array<double, 3> &kvec, double kappa, double m, double rel_tol = 1e-12);

} // namespace kmink
