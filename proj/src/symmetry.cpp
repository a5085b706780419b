#include "kmink/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include "kmink/calculus.hpp"

namespace kmink {

std::string generator_name(Generator g)
{
	static const char *names[] = {"P0", "P1", "P2", "P3", "M1", "M2", "M3", "N1", "N2", "N3"};
	return names[static_cast<int>(g)];
}

Generator momentum(int mu)
{
	if (mu < 0 || mu > 3)
		throw std::invalid_argument("momentum index must be 0..3");
	return static_cast<Generator>(static_cast<int>(Generator::P0) + mu);
}

Generator rotation(int i)
{
	if (i < 1 || i > 3)
		throw std::invalid_argument("rotation index must be 1..3");
	return static_cast<Generator>(static_cast<int>(Generator::M1) + i - 1);
}

Generator boost(int i)
{
	if (i < 1 || i > 3)
		throw std::invalid_argument("boost index must be 1..3");
	return static_cast<Generator>(static_cast<int>(Generator::N1) + i - 1);
}

int epsilon(int i, int j, int k)
{
	if (i == j || j == k || i == k)
		return 0;
	// even permutations of (1,2,3)
	if ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1))
		return 1;
	return -1;
}

namespace {

const KScalar kI = KScalar::i();

KScalar over_kappa(const GaussRat &c) { return KScalar(c, -1); }

} // namespace

OrderedElement act_P(int mu, const OrderedElement &f) { return classical_partial(f, mu) * kI; }

OrderedElement act_M(int i, const OrderedElement &f)
{
	OrderedElement r;
	for (int j = 1; j <= 3; ++j)
		for (int l = 1; l <= 3; ++l)
			if (int e = epsilon(i, j, l); e != 0)
				r += OrderedElement::x(j) * classical_partial(f, l) * KScalar(-e);
	return r * kI;
}

OrderedElement act_N(int i, const OrderedElement &f, BoostSign sign)
{
	const OrderedElement di = classical_partial(f, i);
	OrderedElement r = OrderedElement::x(0) * di * kI;

	// x^i (k/2 (1 - e^{-2i d0/k}) - 1/2k Lap) f
	OrderedElement inner = (f - trig0(f, Trig::Exp2Minus)) * KScalar(GaussRat(mpq_class(1, 2)), 1) -
	                       laplacian(f) * over_kappa(GaussRat(mpq_class(1, 2)));
	r += OrderedElement::x(i) * inner;

	// 1/k x^k d_k d_i f, summed over k
	OrderedElement mixed;
	for (int k = 1; k <= 3; ++k)
		mixed += OrderedElement::x(k) * classical_partial(di, k);
	r += mixed * over_kappa(GaussRat(1));

	return r * KScalar(static_cast<long>(sign));
}

OrderedElement act(Generator g, const OrderedElement &f, BoostSign sign)
{
	const int n = static_cast<int>(g);
	if (n <= 3)
		return act_P(n, f);
	if (n <= 6)
		return act_M(n - 3, f);
	return act_N(n - 6, f, sign);
}

struct OperatorExpr::Node
{
	enum class Kind
	{
		Scalar,
		Gen,
		ExpP0,
		Translation,
		Box,
		Sum,
		Compose
	};

	Kind kind = Kind::Scalar;
	KScalar c = KScalar(1);
	Generator gen = Generator::P0;
	int mu = 0;
	std::shared_ptr<const Node> a, b;
};

OperatorExpr::OperatorExpr() : OperatorExpr(KScalar(1)) {}

OperatorExpr::OperatorExpr(const KScalar &c)
{
	auto n = std::make_shared<Node>();
	n->c = c;
	node_ = std::move(n);
}

OperatorExpr OperatorExpr::of(Generator g)
{
	auto n = std::make_shared<Node>();
	n->kind = Node::Kind::Gen;
	n->gen = g;
	return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::exp_p0(const KScalar &c)
{
	auto n = std::make_shared<Node>();
	n->kind = Node::Kind::ExpP0;
	n->c = c;
	return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::translation(int mu)
{
	if (mu < 0 || mu > 3)
		throw std::invalid_argument("translation index must be 0..3");
	auto n = std::make_shared<Node>();
	n->kind = Node::Kind::Translation;
	n->mu = mu;
	return OperatorExpr(std::move(n));
}

OperatorExpr OperatorExpr::box()
{
	auto n = std::make_shared<Node>();
	n->kind = Node::Kind::Box;
	return OperatorExpr(std::move(n));
}

OperatorExpr operator+(const OperatorExpr &a, const OperatorExpr &b)
{
	auto n = std::make_shared<OperatorExpr::Node>();
	n->kind = OperatorExpr::Node::Kind::Sum;
	n->a = a.node_;
	n->b = b.node_;
	return OperatorExpr(std::move(n));
}

OperatorExpr operator*(const OperatorExpr &a, const OperatorExpr &b)
{
	auto n = std::make_shared<OperatorExpr::Node>();
	n->kind = OperatorExpr::Node::Kind::Compose;
	n->a = a.node_;
	n->b = b.node_;
	return OperatorExpr(std::move(n));
}

OperatorExpr operator*(const KScalar &c, const OperatorExpr &a) { return OperatorExpr(c) * a; }

OperatorExpr operator-(const OperatorExpr &a, const OperatorExpr &b) { return a + KScalar(-1) * b; }

OperatorExpr commutator(const OperatorExpr &a, const OperatorExpr &b) { return a * b - b * a; }

namespace {

using Node = OperatorExpr::Node;

OrderedElement apply_node(const Node &n, const OrderedElement &f, BoostSign sign)
{
	switch (n.kind)
	{
	case Node::Kind::Scalar:
		return f * n.c;
	case Node::Kind::Gen:
		return act(n.gen, f, sign);
	case Node::Kind::ExpP0:
		// P0 = i d0, so e^{c P0} = e^{i c d0}: x0 -> x0 + i c
		return shift0(f, n.c * kI);
	case Node::Kind::Translation:
		return deformed_partial(f, n.mu);
	case Node::Kind::Box:
		return deformed_box(f);
	case Node::Kind::Sum:
		return apply_node(*n.a, f, sign) + apply_node(*n.b, f, sign);
	case Node::Kind::Compose:
		return apply_node(*n.a, apply_node(*n.b, f, sign), sign);
	}
	return {};
}

bool momentum_only_node(const Node &n)
{
	switch (n.kind)
	{
	case Node::Kind::Scalar:
	case Node::Kind::ExpP0:
		return true;
	case Node::Kind::Gen:
		return static_cast<int>(n.gen) <= 3;
	case Node::Kind::Translation:
	case Node::Kind::Box:
		return false;
	case Node::Kind::Sum:
	case Node::Kind::Compose:
		return momentum_only_node(*n.a) && momentum_only_node(*n.b);
	}
	return false;
}

std::string node_text(const Node &n)
{
	switch (n.kind)
	{
	case Node::Kind::Scalar:
		return n.c.to_string();
	case Node::Kind::Gen:
		return generator_name(n.gen);
	case Node::Kind::ExpP0:
		return "exp((" + n.c.to_string() + ")*P0)";
	case Node::Kind::Translation:
		return "d" + std::to_string(n.mu);
	case Node::Kind::Box:
		return "box";
	case Node::Kind::Sum:
		return "(" + node_text(*n.a) + " + " + node_text(*n.b) + ")";
	case Node::Kind::Compose:
		return node_text(*n.a) + "*" + node_text(*n.b);
	}
	return {};
}

} // namespace

OrderedElement OperatorExpr::apply(const OrderedElement &f, BoostSign sign) const
{
	return apply_node(*node_, f, sign);
}

bool OperatorExpr::momentum_only() const { return momentum_only_node(*node_); }

std::string OperatorExpr::to_string() const { return node_text(*node_); }

OrderedElement act_F_of_P(const OperatorExpr &F, const OrderedElement &f)
{
	if (!F.momentum_only())
		throw std::invalid_argument("act_F_of_P: operator must be a function of the momenta only");
	return F.apply(f);
}

std::vector<Relation> poincare_relations()
{
	using Op = OperatorExpr;
	auto P = [](int mu) { return Op::of(momentum(mu)); };
	auto M = [](int i) { return Op::of(rotation(i)); };
	auto N = [](int i) { return Op::of(boost(i)); };
	auto bracket = [](const std::string &x, const std::string &y) { return "[" + x + "," + y + "]"; };

	// sum_k c eps_ijk X_k
	auto eps_sum = [](int i, int j, const KScalar &c, auto X) {
		Op r(KScalar(0));
		for (int k = 1; k <= 3; ++k)
			if (int e = epsilon(i, j, k); e != 0)
				r = r + (c * KScalar(e)) * X(k);
		return r;
	};

	std::vector<Relation> out;
	for (int mu = 0; mu < 4; ++mu)
		for (int nu = mu + 1; nu < 4; ++nu)
			out.push_back({"[P_mu,P_nu] = 0", bracket("P" + std::to_string(mu), "P" + std::to_string(nu)),
			               commutator(P(mu), P(nu)), Op(KScalar(0))});

	const KScalar p_sq_coeff = KScalar(GaussRat(0, mpq_class(1, 2)), -1); // i/2k
	const Op one_minus_exp = Op(KScalar(1)) - Op::exp_p0(KScalar(GaussRat(-2), -1));
	Op p_vec_sq(KScalar(0));
	for (int k = 1; k <= 3; ++k)
		p_vec_sq = p_vec_sq + P(k) * P(k);

	for (int i = 1; i <= 3; ++i)
	{
		const std::string Mi = "M" + std::to_string(i), Ni = "N" + std::to_string(i);
		for (int j = 1; j <= 3; ++j)
		{
			const std::string Mj = "M" + std::to_string(j), Nj = "N" + std::to_string(j),
			                  Pj = "P" + std::to_string(j);
			out.push_back({"[M_i,M_j] = i eps_ijk M_k", bracket(Mi, Mj), commutator(M(i), M(j)),
			               eps_sum(i, j, kI, M)});
			out.push_back({"[M_i,N_j] = i eps_ijk N_k", bracket(Mi, Nj), commutator(M(i), N(j)),
			               eps_sum(i, j, kI, N)});
			out.push_back({"[N_i,N_j] = -i eps_ijk M_k", bracket(Ni, Nj), commutator(N(i), N(j)),
			               eps_sum(i, j, -kI, M)});
			out.push_back({"[M_i,P_j] = i eps_ijk P_k", bracket(Mi, Pj), commutator(M(i), P(j)),
			               eps_sum(i, j, kI, P)});

			// i delta_ij (k/2 (1 - e^{-2 P0/k}) + P^2/2k) - (i/k) P_i P_j
			Op rhs = KScalar(GaussRat(0, -1), -1) * (P(i) * P(j));
			if (i == j)
				rhs = rhs + KScalar(GaussRat(0, mpq_class(1, 2)), 1) * one_minus_exp + p_sq_coeff * p_vec_sq;
			out.push_back({"[N_i,P_j] = i delta_ij (k/2 (1 - e^{-2P0/k}) + P^2/2k) - (i/k) P_i P_j",
			               bracket(Ni, Pj), commutator(N(i), P(j)), rhs});
		}
		out.push_back({"[M_i,P_0] = 0", bracket(Mi, "P0"), commutator(M(i), P(0)), Op(KScalar(0))});
		out.push_back({"[N_i,P_0] = i P_i", bracket(Ni, "P0"), commutator(N(i), P(0)), kI * P(i)});
	}
	return out;
}

Report check_relations(unsigned max_degree, BoostSign sign)
{
	if (max_degree < 2)
		throw std::invalid_argument("check_relations: max degree must be at least 2");
	Report report{"relations", {}};
	const auto relations = poincare_relations();
	for (const Exponents &e : monomials_up_to(max_degree))
	{
		const OrderedElement f = OrderedElement::monomial(e);
		for (const auto &rel : relations)
			report.add(rel.name, monomial_text(e), rel.lhs.apply(f, sign) - rel.rhs.apply(f, sign));
	}
	return report;
}

std::vector<CoproductTerm> coproduct(Generator g, BoostSign sign)
{
	using Op = OperatorExpr;
	const Op id;
	const Op X = Op::of(g);
	const Op shift = Op::exp_p0(KScalar(GaussRat(-1), -1)); // e^{-P0/k}
	const int n = static_cast<int>(g);

	if (g == Generator::P0 || (n >= 4 && n <= 6))
		return {{KScalar(1), X, id}, {KScalar(1), id, X}};
	if (n <= 3)
		return {{KScalar(1), X, shift}, {KScalar(1), id, X}};

	// N_i (x) e^{-P0/k} + I (x) N_i - (1/k) eps_ijk M_j (x) P_k under the
	// shipped sign. Rescaling N by -1 leaves M (x) P alone, so the mixed leg
	// flips relative to N when the literal boost is used.
	const int i = n - 6;
	std::vector<CoproductTerm> out{{KScalar(1), X, shift}, {KScalar(1), id, X}};
	for (int j = 1; j <= 3; ++j)
		for (int k = 1; k <= 3; ++k)
			if (int e = epsilon(i, j, k); e != 0)
				out.push_back({KScalar(GaussRat(e * static_cast<long>(sign)), -1), Op::of(rotation(j)),
				               Op::of(momentum(k))});
	return out;
}

OrderedElement check_leibniz(Generator g, const OrderedElement &f, const OrderedElement &h, BoostSign sign)
{
	OrderedElement residual = act(g, star(f, h), sign);
	for (const auto &term : coproduct(g, sign))
		residual -= star(term.left.apply(f, sign), term.right.apply(h, sign)) * term.coeff;
	return residual;
}

Report check_leibniz_suite(unsigned max_degree, BoostSign sign)
{
	Report report{"leibniz", {}};
	const auto monomials = monomials_up_to(max_degree);
	for (const Exponents &a : monomials)
		for (const Exponents &b : monomials)
		{
			if (total_degree(a) + total_degree(b) > max_degree)
				continue;
			const OrderedElement f = OrderedElement::monomial(a), h = OrderedElement::monomial(b);
			for (Generator g : kGenerators)
				report.add("Delta(" + generator_name(g) + ")", monomial_text(a) + " (x) " + monomial_text(b),
				           check_leibniz(g, f, h, sign));
		}
	return report;
}

Report check_invariance(unsigned max_degree, BoostSign sign)
{
	if (max_degree < 2)
		throw std::invalid_argument("check_invariance: max degree must be at least 2");
	Report report{"invariance", {}};
	const OperatorExpr box = OperatorExpr::box();
	for (const Exponents &e : monomials_up_to(max_degree))
	{
		const OrderedElement f = OrderedElement::monomial(e);
		for (Generator g : kGenerators)
			report.add("[box," + generator_name(g) + "]", monomial_text(e),
			           commutator(box, OperatorExpr::of(g)).apply(f, sign));
	}
	return report;
}

Report check_box_identity(unsigned max_degree)
{
	if (max_degree < 2)
		throw std::invalid_argument("check_box_identity: max degree must be at least 2");
	Report report{"box identity", {}};
	for (const Exponents &e : monomials_up_to(max_degree))
	{
		const OrderedElement f = OrderedElement::monomial(e);
		OrderedElement lhs = deformed_d0(deformed_d0(f));
		for (int i = 1; i <= 3; ++i)
			lhs -= deformed_di(deformed_di(f, i), i);
		const OrderedElement box = deformed_box(f);
		const OrderedElement rhs = box * KScalar(8) - deformed_box(box) * KScalar(GaussRat(16), -2);
		report.add("d0^2 - di^2 = 8 box - 16/k^2 box^2", monomial_text(e), lhs - rhs);
	}
	return report;
}

OrderedElement kg_apply(const OrderedElement &f, const KScalar &m)
{
	return deformed_box(f) + f * (m * m * KScalar(GaussRat(mpq_class(1, 8))));
}

double dispersion_residual(const Momentum &k, double kappa, double m)
{
	if (!(kappa > 0))
		throw std::domain_error("dispersion_residual: kappa must be positive");
	const double s = std::sinh(k.k0 / (2 * kappa));
	const double kv2 = k.kvec[0] * k.kvec[0] + k.kvec[1] * k.kvec[1] + k.kvec[2] * k.kvec[2];
	return 4 * kappa * kappa * s * s - std::exp(-k.k0 / kappa) * kv2 - m * m;
}

double solve_k0(const std::array<double, 3> &kvec, double kappa, double m, double rel_tol)
{
	if (!(kappa > 0))
		throw std::domain_error("solve_k0: kappa must be positive");
	if (!(m >= 0))
		throw std::domain_error("solve_k0: mass must be non-negative");
	for (double c : kvec)
		if (!std::isfinite(c))
			throw std::domain_error("solve_k0: momentum must be finite");

	auto R = [&](double k0) { return dispersion_residual({k0, kvec}, kappa, m); };

	double lo = 0;
	const double r_lo = R(lo);
	if (r_lo == 0)
		return 0;
	double hi = std::max(1.0, std::sqrt(m * m + kvec[0] * kvec[0] + kvec[1] * kvec[1] + kvec[2] * kvec[2]));
	for (int n = 0; n < 1100 && R(hi) <= 0; ++n)
		hi *= 2;
	if (!(r_lo < 0 && R(hi) > 0) || !std::isfinite(hi))
		throw std::domain_error("no positive root bracketed");

	while (hi - lo > rel_tol * hi)
	{
		const double mid = 0.5 * (lo + hi);
		if (mid <= lo || mid >= hi)
			break;
		(R(mid) <= 0 ? lo : hi) = mid;
	}
	return 0.5 * (lo + hi);
}

} // namespace kmink
