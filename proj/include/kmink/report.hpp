#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace kmink {

/// One (relation, monomial) check. The residual is kept in canonical text
/// form so that element, one-form and two-form residuals share a report;
/// the check passes iff the exact residual is zero.
struct ReportEntry
{
	std::string relation;
	std::string monomial;
	std::string residual;

	bool passed() const { return residual == "0"; }
};

struct Report
{
	std::string suite;
	std::vector<ReportEntry> entries;

	/// Residual is any value with is_zero() and a canonical to_string().
	template <class Residual>
	void add(std::string relation, std::string monomial, const Residual &residual)
	{
		entries.push_back({std::move(relation), std::move(monomial),
		                   residual.is_zero() ? std::string("0") : residual.to_string()});
	}
	void append(const Report &other)
	{
		entries.insert(entries.end(), other.entries.begin(), other.entries.end());
	}

	bool passed() const;
	std::size_t failures() const;

	/// `relation | monomial | PASS` or the residual in canonical syntax.
	std::string to_text() const;
	nlohmann::json to_json() const;
};

} // namespace kmink
