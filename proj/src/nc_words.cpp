#include "kmink/nc_words.hpp"

#include <algorithm>

namespace kmink {

NCElement::NCElement(const KScalar &c)
{
	if (!c.is_zero())
		terms_.emplace(Word{}, c);
}

NCElement NCElement::word(Word w, const KScalar &c)
{
	NCElement r;
	r.add_term(w, c);
	return r;
}

NCElement NCElement::x(int mu) { return word({static_cast<Letter>(mu)}); }

void NCElement::add_term(const Word &w, const KScalar &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (inserted)
		return;
	it->second += c;
	if (it->second.is_zero())
		terms_.erase(it);
}

NCElement NCElement::operator-() const
{
	NCElement r;
	for (const auto &[w, c] : terms_)
		r.terms_.emplace(w, -c);
	return r;
}

NCElement &NCElement::operator+=(const NCElement &o)
{
	for (const auto &[w, c] : o.terms_)
		add_term(w, c);
	return *this;
}

NCElement &NCElement::operator-=(const NCElement &o)
{
	for (const auto &[w, c] : o.terms_)
		add_term(w, -c);
	return *this;
}

NCElement &NCElement::operator*=(const KScalar &c)
{
	if (c.is_zero())
		return *this = NCElement();
	for (auto &[w, a] : terms_)
		a *= c;
	return *this;
}

NCElement operator*(const NCElement &a, const NCElement &b)
{
	NCElement r;
	for (const auto &[wa, ca] : a.terms_)
		for (const auto &[wb, cb] : b.terms_)
		{
			Word w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			r.add_term(w, ca * cb);
		}
	return r;
}

std::string NCElement::to_string() const
{
	std::string out;
	for (const auto &[w, c] : terms_)
	{
		std::string suffix;
		for (Letter l : w)
		{
			if (!suffix.empty())
				suffix += "*";
			suffix += "x" + std::to_string(l);
		}
		const auto &kt = c.terms();
		for (auto k = kt.rbegin(); k != kt.rend(); ++k)
			append_term(out, k->second, k->first, suffix, "*");
	}
	return out.empty() ? "0" : out;
}

namespace {

bool is_redex(Letter a, Letter b)
{
	if (a == 0)
		return false;
	return b == 0 || a > b;
}

} // namespace

std::optional<std::size_t> find_redex(const Word &w, Strategy strategy)
{
	if (w.size() < 2)
		return std::nullopt;
	if (strategy == Strategy::LeftmostFirst)
	{
		for (std::size_t p = 0; p + 1 < w.size(); ++p)
			if (is_redex(w[p], w[p + 1]))
				return p;
	}
	else
	{
		for (std::size_t p = w.size() - 1; p-- > 0;)
			if (is_redex(w[p], w[p + 1]))
				return p;
	}
	return std::nullopt;
}

NCElement rewrite_at(const Word &w, std::size_t p)
{
	const Letter b = w.at(p + 1);
	Word swapped = w;
	std::swap(swapped[p], swapped[p + 1]);
	NCElement r = NCElement::word(std::move(swapped));
	if (b == 0)
	{
		// x^i x^0 = x^0 x^i - (i/k) x^i
		Word dropped = w;
		dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(p) + 1);
		r.add_term(dropped, -KScalar(GaussRat::i(), -1));
	}
	return r;
}

RewriteMeasure rewrite_measure(const Word &w)
{
	std::size_t zero_inversions = 0;
	std::size_t spatial_inversions = 0;
	for (std::size_t p = 0; p < w.size(); ++p)
		for (std::size_t q = p + 1; q < w.size(); ++q)
		{
			if (w[p] != 0 && w[q] == 0)
				++zero_inversions;
			else if (w[q] != 0 && w[p] > w[q])
				++spatial_inversions;
		}
	return {zero_inversions, spatial_inversions, w.size()};
}

OrderedElement normal_order(const NCElement &a, Strategy strategy)
{
	NCElement::Terms pending = a.terms();
	OrderedElement result;
	while (!pending.empty())
	{
		auto it = strategy == Strategy::LeftmostFirst ? pending.begin() : std::prev(pending.end());
		Word w = it->first;
		KScalar c = std::move(it->second);
		pending.erase(it);

		auto p = find_redex(w, strategy);
		if (!p)
		{
			Exponents e{0, 0, 0, 0};
			for (Letter l : w)
				++e[l];
			result.add_term(e, c);
			continue;
		}
		const NCElement rewritten = rewrite_at(w, *p);
		for (const auto &[nw, nc] : rewritten.terms())
		{
			KScalar add = c * nc;
			auto [slot, inserted] = pending.try_emplace(nw, add);
			if (!inserted)
			{
				slot->second += add;
				if (slot->second.is_zero())
					pending.erase(slot);
			}
		}
	}
	return result;
}

Word embed_word(const Exponents &e)
{
	Word w;
	w.reserve(total_degree(e));
	for (int mu = 0; mu < 4; ++mu)
		w.insert(w.end(), e[mu], static_cast<Letter>(mu));
	return w;
}

NCElement embed(const OrderedElement &f)
{
	NCElement r;
	for (const auto &[e, c] : f.terms())
		r.add_term(embed_word(e), c);
	return r;
}

NCElement involution(const NCElement &a)
{
	NCElement r;
	for (const auto &[w, c] : a.terms())
		r.add_term(Word(w.rbegin(), w.rend()), c.conj());
	return r;
}

OrderedElement involution(const OrderedElement &f) { return normal_order(involution(embed(f))); }

} // namespace kmink
