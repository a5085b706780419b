#include "kmink/cli.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kmink/calculus.hpp"
#include "kmink/parser.hpp"
#include "kmink/symmetry.hpp"

namespace kmink {

namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Options
{
	bool json = false;
	std::string expr;
	std::string op;
	std::string suite;
	unsigned max_degree = 4;
	bool literal_boost = false;
	double kappa = 0;
	double mass = 0;
	std::string kvec;
	bool solve = false;
	double k0 = 0;
};

json envelope(const std::string &command)
{
	return {{"schema", kSchemaVersion}, {"command", command}};
}

std::array<double, 3> parse_kvec(const std::string &text)
{
	std::array<double, 3> k{};
	std::stringstream in(text);
	std::string item;
	std::size_t n = 0;
	while (std::getline(in, item, ','))
	{
		if (n == 3)
			throw CLI::ValidationError("--kvec", "expected three comma-separated numbers");
		std::size_t used = 0;
		try
		{
			k[n] = std::stod(item, &used);
		}
		catch (const std::exception &)
		{
			used = 0;
		}
		if (used == 0 || used != item.size())
			throw CLI::ValidationError("--kvec", "not a number: '" + item + "'");
		++n;
	}
	if (n != 3)
		throw CLI::ValidationError("--kvec", "expected three comma-separated numbers");
	return k;
}

OrderedElement apply_named(const std::string &op, const OrderedElement &f, BoostSign sign)
{
	if (op == "box")
		return deformed_box(f);
	for (Generator g : kGenerators)
		if (generator_name(g) == op)
			return act(g, f, sign);
	throw CLI::ValidationError("operator", "unknown operator " + op);
}

int run_check(const Options &o, std::ostream &out)
{
	const BoostSign sign = o.literal_boost ? BoostSign::Literal : BoostSign::Shipped;
	Report report;
	if (o.suite == "relations")
		report = check_relations(o.max_degree, sign);
	else if (o.suite == "calculus")
		report = check_calculus(o.max_degree);
	else if (o.suite == "invariance")
		report = check_invariance(o.max_degree, sign);
	else if (o.suite == "leibniz")
		report = check_leibniz_suite(o.max_degree, sign);
	else
		report = check_box_identity(o.max_degree);

	if (o.json)
	{
		json j = envelope("check");
		j["max_degree"] = o.max_degree;
		j.update(report.to_json());
		out << j.dump(2) << "\n";
	}
	else
	{
		out << report.to_text();
	}
	return report.passed() ? kExitOk : kExitCheckFailed;
}

int run_dispersion(const Options &o, std::ostream &out)
{
	const auto kvec = parse_kvec(o.kvec);
	double k0 = o.k0;
	if (o.solve)
		k0 = solve_k0(kvec, o.kappa, o.mass);
	const double residual = dispersion_residual({k0, kvec}, o.kappa, o.mass);
	if (o.json)
	{
		json j = envelope("dispersion");
		j["kappa"] = o.kappa;
		j["mass"] = o.mass;
		j["kvec"] = kvec;
		j["k0"] = k0;
		j["residual"] = residual;
		j["solved"] = o.solve;
		out << j.dump(2) << "\n";
	}
	else
	{
		out << std::setprecision(17) << "k0 = " << k0 << "\nresidual = " << residual << "\n";
	}
	return kExitOk;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	Options o;
	CLI::App app{"Exact computer algebra on kappa-Minkowski space", "kmink"};
	app.require_subcommand(1);
	app.add_flag("--json", o.json, "Emit the versioned JSON schema instead of text");

	auto *order = app.add_subcommand("order", "Normal-order an expression");
	order->add_option("expr", o.expr, "Expression, e.g. \"x1*x0\"")->required();

	auto *d = app.add_subcommand("d", "Exterior derivative: five coefficients on t0..t3, tau");
	d->add_option("expr", o.expr, "Expression")->required();

	auto *apply = app.add_subcommand("apply", "Apply a symmetry generator or the box operator");
	apply->add_option("operator", o.op, "P0..P3, M1..M3, N1..N3 or box")
	    ->required()
	    ->check(CLI::IsMember({"P0", "P1", "P2", "P3", "M1", "M2", "M3", "N1", "N2", "N3", "box"}));
	apply->add_option("expr", o.expr, "Expression")->required();
	apply->add_flag("--literal-boost", o.literal_boost, "Use s_N = +1 for the boost action");

	auto *check = app.add_subcommand("check", "Run a verification suite");
	check->add_option("suite", o.suite, "relations, calculus, invariance, leibniz or box")
	    ->required()
	    ->check(CLI::IsMember({"relations", "calculus", "invariance", "leibniz", "box"}));
	check->add_option("--max-degree", o.max_degree, "Largest monomial degree checked")
	    ->check(CLI::Range(2U, 10U));
	check->add_flag("--literal-boost", o.literal_boost, "Use s_N = +1 for the boost action");

	auto *dispersion = app.add_subcommand("dispersion", "Deformed mass shell of the Klein-Gordon operator");
	dispersion->add_option("--kappa", o.kappa, "Deformation scale kappa > 0")->required();
	dispersion->add_option("--mass", o.mass, "Mass m >= 0")->required();
	dispersion->add_option("--kvec", o.kvec, "Spatial momentum a,b,c")->required();
	auto *solve = dispersion->add_flag("--solve", o.solve, "Solve for the non-negative k0 on the mass shell");
	dispersion->add_option("--k0", o.k0, "Energy at which to evaluate the residual")->excludes(solve);

	for (auto *sub : {order, d, apply, check, dispersion})
		sub->fallthrough();

	std::vector<const char *> argv{"kmink"};
	for (const auto &a : args)
		argv.push_back(a.c_str());

	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (const CLI::CallForHelp &)
	{
		out << app.help();
		return kExitOk;
	}
	catch (const CLI::ParseError &e)
	{
		err << "error: " << e.what() << "\n" << app.help();
		return kExitUsage;
	}

	try
	{
		if (order->parsed())
		{
			const std::string result = normal_order(parse_element(o.expr)).to_string();
			if (o.json)
			{
				json j = envelope("order");
				j["input"] = o.expr;
				j["result"] = result;
				out << j.dump(2) << "\n";
			}
			else
			{
				out << result << "\n";
			}
			return kExitOk;
		}
		if (d->parsed())
		{
			const OneForm w = exterior_d(normal_order(parse_element(o.expr)));
			if (o.json)
			{
				json j = envelope("d");
				j["input"] = o.expr;
				for (FormLabel l : kFormLabels)
					j["coefficients"][label_name(l)] = w[l].to_string();
				out << j.dump(2) << "\n";
			}
			else
			{
				out << w.to_string() << "\n";
			}
			return kExitOk;
		}
		if (apply->parsed())
		{
			const BoostSign sign = o.literal_boost ? BoostSign::Literal : BoostSign::Shipped;
			const std::string result =
			    apply_named(o.op, normal_order(parse_element(o.expr)), sign).to_string();
			if (o.json)
			{
				json j = envelope("apply");
				j["operator"] = o.op;
				j["input"] = o.expr;
				j["result"] = result;
				out << j.dump(2) << "\n";
			}
			else
			{
				out << result << "\n";
			}
			return kExitOk;
		}
		if (check->parsed())
			return run_check(o, out);
		return run_dispersion(o, out);
	}
	catch (const ParseError &e)
	{
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	catch (const CLI::ValidationError &e)
	{
		err << "error: " << e.what() << "\n" << dispersion->help();
		return kExitUsage;
	}
	catch (const std::domain_error &e)
	{
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	catch (const std::invalid_argument &e)
	{
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	}
}

} // namespace kmink
