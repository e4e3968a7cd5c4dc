#include "axial/infinite.hpp"

namespace axial {

namespace {

void add_term(SparseVector &v, const InfSymbol &sym, const Scalar &c)
{
	if (sym.kind == 1 && sym.index == 0)
		return; // p_0 = 0
	auto it = v.find(sym);
	if (it == v.end()) {
		if (!c.is_zero())
			v.emplace(sym, c);
		return;
	}
	it->second += c;
	if (it->second.is_zero())
		v.erase(it);
}

} // namespace

SparseVector inf_a(const FieldDescriptor &fd, int i)
{
	SparseVector v;
	add_term(v, {0, i}, Scalar::one(fd));
	return v;
}

SparseVector inf_p(const FieldDescriptor &fd, int i)
{
	SparseVector v;
	add_term(v, {1, i < 0 ? -i : i}, Scalar::one(fd));
	return v;
}

SparseVector inf_add(const SparseVector &x, const SparseVector &y)
{
	SparseVector r = x;
	for (auto &[sym, c] : y)
		add_term(r, sym, c);
	return r;
}

SparseVector inf_sub(const SparseVector &x, const SparseVector &y)
{
	SparseVector r = x;
	for (auto &[sym, c] : y)
		add_term(r, sym, -c);
	return r;
}

SparseVector inf_scale(const Scalar &c, const SparseVector &x)
{
	SparseVector r;
	for (auto &[sym, v] : x)
		add_term(r, sym, c * v);
	return r;
}

bool inf_is_zero(const SparseVector &x) { return x.empty(); }

std::string inf_str(const SparseVector &x)
{
	if (x.empty())
		return "0";
	std::string out;
	for (auto &[sym, c] : x) {
		std::string name = (sym.kind == 0 ? "a" : "p") + std::to_string(sym.index);
		std::string cs = c.str();
		std::string term;
		if (cs == "1")
			term = name;
		else if (cs == "-1")
			term = "-" + name;
		else {
			bool simple = cs.find_first_of("+-/") == std::string::npos ||
			              (cs[0] == '-' && cs.find_first_of("+-/", 1) == std::string::npos);
			term = (simple ? cs : "(" + cs + ")") + "*" + name;
		}
		if (out.empty())
			out = term;
		else if (term[0] == '-')
			out += term;
		else
			out += "+" + term;
	}
	return out;
}

SparseVector inf_multiply(const FieldDescriptor &fd, const SparseVector &x, const SparseVector &y)
{
	Scalar half = Scalar::from_fraction(fd, 1, 2);
	Scalar quarter = Scalar::from_fraction(fd, 1, 4);
	Scalar eighth = Scalar::from_fraction(fd, 1, 8);
	SparseVector r;
	auto basis_product = [&](InfSymbol s, InfSymbol t, const Scalar &c) {
		if (s.kind == 1 && t.kind == 0)
			std::swap(s, t);
		int i = s.index, j = t.index;
		if (s.kind == 0 && t.kind == 0) {
			add_term(r, {1, i < j ? j - i : i - j}, c);
			add_term(r, {0, i}, c * half);
			add_term(r, {0, j}, c * half);
		} else if (s.kind == 0 && t.kind == 1) {
			add_term(r, {1, j}, c * half);
			add_term(r, {0, i}, -(c * quarter));
			add_term(r, {0, i - j}, c * eighth);
			add_term(r, {0, i + j}, c * eighth);
		} else {
			add_term(r, {1, i}, -(c * quarter));
			add_term(r, {1, j}, -(c * quarter));
			add_term(r, {1, i + j}, c * eighth);
			add_term(r, {1, i < j ? j - i : i - j}, c * eighth);
		}
	};
	for (auto &[s, cx] : x)
		for (auto &[t, cy] : y)
			basis_product(s, t, cx * cy);
	return r;
}

SparseVector inf_x(const FieldDescriptor &fd, int i, int k)
{
	Scalar quarter = Scalar::from_fraction(fd, 1, 4);
	SparseVector v = inf_p(fd, k);
	add_term(v, {0, i + k}, quarter);
	add_term(v, {0, i - k}, quarter);
	return v;
}

SparseVector inf_z(const FieldDescriptor &fd, int i, int k)
{
	Scalar quarter = Scalar::from_fraction(fd, 1, 4);
	SparseVector v = inf_p(fd, k);
	add_term(v, {0, i}, Scalar::from_fraction(fd, 1, 2));
	add_term(v, {0, i + k}, -quarter);
	add_term(v, {0, i - k}, -quarter);
	return v;
}

InfAxisReport inf_axis_check(const FieldDescriptor &fd, int i, int window)
{
	InfAxisReport rep;
	Scalar half = Scalar::from_fraction(fd, 1, 2);
	SparseVector ai = inf_a(fd, i);
	auto ad = [&](const SparseVector &v) { return inf_multiply(fd, ai, v); };

	rep.is_idempotent = (ad(ai) == ai);

	rep.one_eigenvectors_ok = rep.zero_eigenvectors_ok = rep.half_eigenvectors_ok = true;
	std::vector<SparseVector> xs, zs, ds;
	for (int k = 1; k <= window; ++k) {
		SparseVector x = inf_x(fd, i, k), z = inf_z(fd, i, k);
		SparseVector d = inf_sub(inf_a(fd, i + k), inf_a(fd, i - k));
		if (!(ad(x) == x))
			rep.one_eigenvectors_ok = false;
		if (!inf_is_zero(ad(z)))
			rep.zero_eigenvectors_ok = false;
		if (!(ad(d) == inf_scale(half, d)))
			rep.half_eigenvectors_ok = false;
		xs.push_back(std::move(x));
		zs.push_back(std::move(z));
		ds.push_back(std::move(d));
	}

	// fusion sweep for the strictest rule (0 * 1 = empty): every product is
	// checked exactly through ad(a_i), no truncation involved
	rep.fusion_ok = true;
	auto in_e1 = [&](const SparseVector &v) { return ad(v) == v; };
	auto in_e0 = [&](const SparseVector &v) { return inf_is_zero(ad(v)); };
	auto in_ehalf = [&](const SparseVector &v) { return ad(v) == inf_scale(half, v); };
	auto in_e1_plus_e0 = [&](const SparseVector &v) {
		SparseVector w = ad(v);
		return ad(w) == w; // ad restricted to E_1 + E_0 is idempotent
	};
	for (int k = 0; k < window; ++k)
		for (int l = 0; l < window; ++l) {
			if (!in_e1(inf_multiply(fd, xs[k], xs[l])))
				rep.fusion_ok = false;
			if (!inf_is_zero(inf_multiply(fd, xs[k], zs[l])))
				rep.fusion_ok = false;
			if (!in_e0(inf_multiply(fd, zs[k], zs[l])))
				rep.fusion_ok = false;
			if (!in_ehalf(inf_multiply(fd, xs[k], ds[l])))
				rep.fusion_ok = false;
			if (!in_ehalf(inf_multiply(fd, zs[k], ds[l])))
				rep.fusion_ok = false;
			if (!in_e1_plus_e0(inf_multiply(fd, ds[k], ds[l])))
				rep.fusion_ok = false;
		}
	return rep;
}

} // namespace axial
