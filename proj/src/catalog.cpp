#include "axial/catalog.hpp"

namespace axial {

const std::vector<std::pair<CatalogName, std::string>> &catalog_names()
{
	static const std::vector<std::pair<CatalogName, std::string>> table = {
	    {CatalogName::OneA, "1A"},
	    {CatalogName::Hat1A, "hat1A"},
	    {CatalogName::TwoB, "2B"},
	    {CatalogName::Hat2B, "hat2B"},
	    {CatalogName::ThreeC, "3C"},
	    {CatalogName::ThreeCx, "3Cx"},
	    {CatalogName::Hat3C, "hat3C"},
	    {CatalogName::Hat3Cx, "hat3Cx"},
	    {CatalogName::Bar4NPminus, "bar4NPminus"},
	    {CatalogName::Bar4NP, "bar4NP"},
	    {CatalogName::Bar4NPprime, "bar4NPprime"},
	    {CatalogName::FourNP, "4NP"},
	    {CatalogName::Bar4NPminus_x, "bar4NPminus_x"},
	    {CatalogName::Bar4NP_x, "bar4NP_x"},
	    {CatalogName::Bar4NPprime_x, "bar4NPprime_x"},
	    {CatalogName::FourNP_x, "4NP_x"},
	    {CatalogName::Minf, "Minf"},
	};
	return table;
}

std::string catalog_name_string(CatalogName name)
{
	for (auto &[n, s] : catalog_names())
		if (n == name)
			return s;
	throw Error("unknown catalog name");
}

CatalogName catalog_name_from_string(const std::string &text)
{
	for (auto &[n, s] : catalog_names())
		if (s == text)
			return n;
	throw Error("unknown catalog name: " + text);
}

Algebra direct_sum(const Algebra &a, const Algebra &b)
{
	if (a.fd != b.fd)
		throw FieldMismatch();
	int na = a.dim(), nb = b.dim(), n = na + nb;
	Algebra r;
	r.fd = a.fd;
	r.basis_labels = a.basis_labels;
	r.basis_labels.insert(r.basis_labels.end(), b.basis_labels.begin(), b.basis_labels.end());
	r.sc.assign(n, std::vector<Vec>(n, zero_vec(r.fd, n)));
	for (int i = 0; i < na; ++i)
		for (int j = 0; j < na; ++j)
			for (int k = 0; k < na; ++k)
				r.sc[i][j][k] = a.sc[i][j][k];
	for (int i = 0; i < nb; ++i)
		for (int j = 0; j < nb; ++j)
			for (int k = 0; k < nb; ++k)
				r.sc[na + i][na + j][na + k] = b.sc[i][j][k];
	return r;
}

namespace {

Algebra one_a(const FieldDescriptor &fd, const std::string &label)
{
	Algebra a;
	a.fd = fd;
	a.basis_labels = {label};
	a.sc.assign(1, std::vector<Vec>(1, zero_vec(fd, 1)));
	a.sc[0][0][0] = Scalar::one(fd);
	return a;
}

Algebra two_b(const FieldDescriptor &fd, const std::string &l0, const std::string &l1)
{
	Algebra a;
	a.fd = fd;
	a.basis_labels = {l0, l1};
	a.sc.assign(2, std::vector<Vec>(2, zero_vec(fd, 2)));
	a.sc[0][0][0] = Scalar::one(fd);
	a.sc[1][1][1] = Scalar::one(fd);
	return a;
}

// basis (am1, a0, a1); a_i a_i = a_i, a_i a_j = (eta/2)(a_i + a_j - a_k)
Algebra three_c(const FieldDescriptor &fd, const Scalar &eta)
{
	Algebra a;
	a.fd = fd;
	a.basis_labels = {"am1", "a0", "a1"};
	a.sc.assign(3, std::vector<Vec>(3, zero_vec(fd, 3)));
	Scalar h = eta * Scalar::from_fraction(fd, 1, 2);
	for (int i = 0; i < 3; ++i)
		a.sc[i][i][i] = Scalar::one(fd);
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			if (i == j)
				continue;
			int k = 3 - i - j;
			a.sc[i][j][i] = h;
			a.sc[i][j][j] = h;
			a.sc[i][j][k] = -h;
		}
	return a;
}

// basis (q, am1, a0, a1); q acts as eta+1 on everything,
// a_i a_{i+1} = -q/2 + ((eta+1)/2)(a_i + a_{i+1}) + ((1-eta)/2) a_{i-1}
Algebra hat_three_c(const FieldDescriptor &fd, const Scalar &eta)
{
	Algebra a;
	a.fd = fd;
	a.basis_labels = {"q", "am1", "a0", "a1"};
	a.sc.assign(4, std::vector<Vec>(4, zero_vec(fd, 4)));
	Scalar one = Scalar::one(fd);
	Scalar half = Scalar::from_fraction(fd, 1, 2);
	Scalar ep1h = (eta + one) * half, em1h = (one - eta) * half;
	for (int j = 0; j < 4; ++j)
		a.sc[0][j][j] = a.sc[j][0][j] = eta + one;
	// cyclic index -1, 0, 1 maps to basis positions 1, 2, 3
	auto pos = [](int i) { return ((i + 1) % 3 + 3) % 3 + 1; };
	for (int i = -1; i <= 1; ++i) {
		a.sc[pos(i)][pos(i)] = zero_vec(fd, 4);
		a.sc[pos(i)][pos(i)][pos(i)] = one;
		Vec v = zero_vec(fd, 4);
		v[0] = -half;
		v[pos(i)] = ep1h;
		v[pos(i + 1)] = ep1h;
		v[pos(i - 1)] = em1h;
		a.sc[pos(i)][pos(i + 1)] = v;
		a.sc[pos(i + 1)][pos(i)] = std::move(v);
	}
	return a;
}

Vec embed_gen(const Algebra &big, const std::vector<std::pair<std::string, Scalar>> &terms)
{
	Vec v = zero_vec(big.fd, big.dim());
	for (auto &[label, c] : terms)
		v[big.label_index(label)] = c;
	return v;
}

PresentedAlgebra quotient_by(const PresentedAlgebra &p, const Vec &gen)
{
	Subspace line = Subspace::span(p.algebra.fd, p.algebra.dim(), {gen});
	QuotientResult q = quotient(p.algebra, line);
	PresentedAlgebra r;
	r.algebra = std::move(q.algebra);
	for (auto &g : p.generators)
		r.generators.push_back(q.projection.apply(g));
	return r;
}

} // namespace

PresentedAlgebra build(CatalogName name, const FieldDescriptor &fd, const std::optional<Scalar> &eta)
{
	Scalar one = Scalar::one(fd);
	Scalar e = Scalar::zero(fd);
	if (fd.generic_eta) {
		if (eta)
			throw BadEta("generic field takes no eta value");
		e = Scalar::eta(fd);
	} else if (eta) {
		if (eta->field() != fd || !eta->is_constant())
			throw BadEta("eta value must be a constant of the chosen field");
		e = *eta;
		if (e.is_zero() || e == one)
			throw BadEta("eta must avoid 0 and 1");
	}
	bool eta_needed = false;
	switch (name) {
	case CatalogName::ThreeC:
	case CatalogName::Hat3C:
	case CatalogName::Bar4NPminus:
	case CatalogName::Bar4NP:
	case CatalogName::Bar4NPprime:
	case CatalogName::FourNP:
		eta_needed = true;
		break;
	default:
		break;
	}
	bool x_variant = false;
	switch (name) {
	case CatalogName::ThreeCx:
	case CatalogName::Hat3Cx:
	case CatalogName::Bar4NPminus_x:
	case CatalogName::Bar4NP_x:
	case CatalogName::Bar4NPprime_x:
	case CatalogName::FourNP_x:
		x_variant = true;
		break;
	default:
		break;
	}
	if (eta_needed && !fd.generic_eta && !eta)
		throw BadEta("this algebra needs an eta value over a non-generic field");
	if (x_variant && (fd.generic_eta || e != -one))
		throw NameRequiresEtaMinusOne(catalog_name_string(name));

	switch (name) {
	case CatalogName::OneA: {
		Algebra a = one_a(fd, "a");
		Vec g = unit_vec(fd, 1, 0);
		return {a, {g, g}};
	}
	case CatalogName::Hat1A: {
		Algebra a = direct_sum(one_a(fd, "a"), one_a(fd, "b"));
		return {a, {embed_gen(a, {{"a", one}}), embed_gen(a, {{"a", one}, {"b", one}})}};
	}
	case CatalogName::TwoB: {
		Algebra a = two_b(fd, "a0", "a1");
		return {a, {unit_vec(fd, 2, 0), unit_vec(fd, 2, 1)}};
	}
	case CatalogName::Hat2B: {
		Algebra a = direct_sum(one_a(fd, "a"), two_b(fd, "s0", "s1"));
		return {a, {embed_gen(a, {{"a", one}, {"s0", one}}), embed_gen(a, {{"a", one}, {"s1", one}})}};
	}
	case CatalogName::ThreeC: {
		Algebra a = three_c(fd, e);
		return {a, {embed_gen(a, {{"a0", one}}), embed_gen(a, {{"a1", one}})}};
	}
	case CatalogName::ThreeCx: {
		PresentedAlgebra p = build(CatalogName::ThreeC, fd, eta);
		return quotient_by(p, embed_gen(p.algebra, {{"am1", one}, {"a0", one}, {"a1", one}}));
	}
	case CatalogName::Hat3C: {
		Algebra a = hat_three_c(fd, e);
		return {a, {embed_gen(a, {{"a0", one}}), embed_gen(a, {{"a1", one}})}};
	}
	case CatalogName::Hat3Cx: {
		PresentedAlgebra p = build(CatalogName::Hat3C, fd, eta);
		return quotient_by(p, embed_gen(p.algebra, {{"q", one}}));
	}
	case CatalogName::Bar4NPminus: {
		Algebra a = direct_sum(three_c(fd, e), one_a(fd, "s"));
		return {a, {embed_gen(a, {{"a0", one}}), embed_gen(a, {{"a1", one}, {"s", one}})}};
	}
	case CatalogName::Bar4NP: {
		Algebra a = direct_sum(three_c(fd, e), two_b(fd, "s0", "s1"));
		return {a, {embed_gen(a, {{"a0", one}, {"s0", one}}), embed_gen(a, {{"a1", one}, {"s1", one}})}};
	}
	case CatalogName::Bar4NPprime: {
		Algebra a = direct_sum(hat_three_c(fd, e), one_a(fd, "s"));
		return {a, {embed_gen(a, {{"a0", one}}), embed_gen(a, {{"a1", one}, {"s", one}})}};
	}
	case CatalogName::FourNP: {
		Algebra a = direct_sum(hat_three_c(fd, e), two_b(fd, "s0", "s1"));
		return {a, {embed_gen(a, {{"a0", one}, {"s0", one}}), embed_gen(a, {{"a1", one}, {"s1", one}})}};
	}
	case CatalogName::Bar4NPminus_x: {
		PresentedAlgebra p = build(CatalogName::Bar4NPminus, fd, eta);
		return quotient_by(p, embed_gen(p.algebra, {{"am1", one}, {"a0", one}, {"a1", one}}));
	}
	case CatalogName::Bar4NP_x: {
		PresentedAlgebra p = build(CatalogName::Bar4NP, fd, eta);
		return quotient_by(p, embed_gen(p.algebra, {{"am1", one}, {"a0", one}, {"a1", one}}));
	}
	case CatalogName::Bar4NPprime_x: {
		PresentedAlgebra p = build(CatalogName::Bar4NPprime, fd, eta);
		return quotient_by(p, embed_gen(p.algebra, {{"q", one}}));
	}
	case CatalogName::FourNP_x: {
		PresentedAlgebra p = build(CatalogName::FourNP, fd, eta);
		return quotient_by(p, embed_gen(p.algebra, {{"q", one}}));
	}
	case CatalogName::Minf:
		throw BadEta("Minf is infinite-dimensional; use the sparse interface");
	}
	throw Error("unknown catalog name");
}

std::optional<CatalogName> identify(const PresentedAlgebra &p, const std::optional<Scalar> &eta)
{
	const Algebra &a = p.algebra;
	int n = a.dim();
	if (p.generators.size() != 2)
		throw DimensionMismatch();
	const Vec &g0 = p.generators[0], &g1 = p.generators[1];
	bool z0 = vec_is_zero(g0), z1 = vec_is_zero(g1);
	if (z0 || z1) {
		if (z0 && z1)
			return std::nullopt;
		// generated by a single idempotent: only the one-dimensional line fits
		const Vec &g = z0 ? g1 : g0;
		if (n == 1 && multiply(a, g, g) == g)
			return CatalogName::OneA;
		return std::nullopt;
	}
	for (auto &[name, text] : catalog_names()) {
		if (name == CatalogName::Minf)
			continue;
		PresentedAlgebra c;
		try {
			c = build(name, a.fd, eta);
		} catch (const Error &) {
			continue; // name not available over this field / eta
		}
		if (c.algebra.dim() != n)
			continue;
		for (const auto &imgs :
		     {std::vector<Vec>{g0, g1}, std::vector<Vec>{g1, g0}}) {
			auto h = find_homomorphism(c, a, imgs);
			if (h && inverse(*h))
				return name;
		}
	}
	return std::nullopt;
}

} // namespace axial
