#include "kmink/report.hpp"

#include <algorithm>

namespace kmink {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const
{
	return static_cast<std::size_t>(
	    std::count_if(entries.begin(), entries.end(), [](const ReportEntry &e) { return !e.passed(); }));
}

std::string Report::to_text() const
{
	std::string out;
	for (const auto &e : entries)
	{
		out += e.relation + " | " + e.monomial + " | ";
		out += e.passed() ? "PASS" : e.residual;
		out += "\n";
	}
	out += suite + ": " + std::to_string(entries.size() - failures()) + "/" +
	       std::to_string(entries.size()) + " passed\n";
	return out;
}

nlohmann::json Report::to_json() const
{
	nlohmann::json rows = nlohmann::json::array();
	for (const auto &e : entries)
		rows.push_back({{"relation", e.relation},
		                {"monomial", e.monomial},
		                {"residual", e.residual},
		                {"pass", e.passed()}});
	return {{"suite", suite}, {"passed", passed()}, {"failures", failures()}, {"entries", rows}};
}

} // namespace kmink
