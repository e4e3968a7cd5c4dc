#include "axial/fusion.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace axial {

int FusionRule::label_index(const std::string &name) const
{
	for (int i = 0; i < size(); ++i)
		if (labels[i] == name)
			return i;
	throw Error("unknown fusion label: " + name);
}

bool FusionRule::star_contains(int s, int t, int u) const
{
	const auto &set = star[s][t];
	return std::find(set.begin(), set.end(), u) != set.end();
}

void FusionRule::check() const
{
	int n = size();
	if ((int)lambda.size() != n || (int)star.size() != n)
		throw Error("fusion rule tables have wrong size");
	for (int s = 0; s < n; ++s) {
		if ((int)star[s].size() != n)
			throw Error("fusion rule tables have wrong size");
		for (int t = 0; t < n; ++t) {
			if (star[s][t] != star[t][s])
				throw Error("fusion table is not symmetric");
			for (int u : star[s][t])
				if (u < 0 || u >= n)
					throw Error("fusion table entry out of range");
		}
	}
}

namespace {

void require_not_01(const FieldDescriptor &fd, const Scalar &v, const std::string &name)
{
	if (v == Scalar::zero(fd) || v == Scalar::one(fd))
		throw BadParameter(name + " must avoid 0 and 1");
}

FusionRule make_rule(const FieldDescriptor &fd, std::vector<std::string> labels,
                     std::vector<Scalar> lambda,
                     std::vector<std::vector<std::vector<int>>> star)
{
	FusionRule f{fd, std::move(labels), std::move(lambda), std::move(star)};
	f.check();
	return f;
}

} // namespace

FusionRule FusionRule::ising(const FieldDescriptor &fd)
{
	Scalar q = Scalar::from_fraction(fd, 1, 4), t = Scalar::from_fraction(fd, 1, 32);
	// labels 0,1,1/4,1/32
	return make_rule(fd, {"0", "1", "1/4", "1/32"},
	                 {Scalar::zero(fd), Scalar::one(fd), q, t},
	                 {
	                     {{0}, {0}, {2}, {3}},
	                     {{0}, {0}, {2}, {3}},
	                     {{2}, {2}, {0, 1}, {3}},
	                     {{3}, {3}, {3}, {0, 1, 2}},
	                 });
}

FusionRule FusionRule::jordan(const FieldDescriptor &fd, const Scalar &eta)
{
	require_not_01(fd, eta, "eta");
	return make_rule(fd, {"0", "1", "eta"}, {Scalar::zero(fd), Scalar::one(fd), eta},
	                 {
	                     {{0}, {}, {2}},
	                     {{}, {1}, {2}},
	                     {{2}, {2}, {0, 1}},
	                 });
}

FusionRule FusionRule::majorana(const FieldDescriptor &fd, const Scalar &xi, const Scalar &eta)
{
	require_not_01(fd, xi, "xi");
	require_not_01(fd, eta, "eta");
	if (xi == eta)
		throw BadParameter("xi and eta must be distinct");
	return make_rule(fd, {"0", "1", "xi", "eta"},
	                 {Scalar::zero(fd), Scalar::one(fd), xi, eta},
	                 {
	                     {{0}, {0}, {2}, {3}},
	                     {{0}, {0}, {2}, {3}},
	                     {{2}, {2}, {0, 1}, {3}},
	                     {{3}, {3}, {3}, {0, 1, 2}},
	                 });
}

FusionRule FusionRule::jordan_phi(const FieldDescriptor &fd, const std::vector<std::string> &phi,
                                  const Scalar &eta)
{
	require_not_01(fd, eta, "eta");
	// labels ordered (1, 0, eta) to match the edim convention
	std::vector<int> phi_set;
	for (auto &name : phi) {
		if (name == "1")
			phi_set.push_back(0);
		else if (name == "0")
			phi_set.push_back(1);
		else
			throw BadParameter("phi must be a subset of {0,1}");
	}
	std::sort(phi_set.begin(), phi_set.end());
	phi_set.erase(std::unique(phi_set.begin(), phi_set.end()), phi_set.end());
	return make_rule(fd, {"1", "0", "eta"}, {Scalar::one(fd), Scalar::zero(fd), eta},
	                 {
	                     {{0}, phi_set, {2}},
	                     {phi_set, {1}, {2}},
	                     {{2}, {2}, {0, 1}},
	                 });
}

FusionRule FusionRule::associative(const FieldDescriptor &fd)
{
	return make_rule(fd, {"1", "0"}, {Scalar::one(fd), Scalar::zero(fd)},
	                 {
	                     {{0}, {0, 1}},
	                     {{0, 1}, {1}},
	                 });
}

FusionRule FusionRule::parse(const FieldDescriptor &fd, std::istream &is)
{
	FusionRule f;
	f.fd = fd;
	std::vector<std::tuple<std::string, std::string, std::vector<std::string>>> star_lines;
	std::string line;
	while (std::getline(is, line)) {
		std::istringstream ls(line);
		std::string kw;
		if (!(ls >> kw) || kw[0] == '#')
			continue;
		if (kw == "label") {
			std::string name, eq, value;
			if (!(ls >> name >> eq) || eq != "=" || !std::getline(ls, value))
				throw ParseError("bad label line: " + line);
			f.labels.push_back(name);
			f.lambda.push_back(Scalar::parse(fd, value));
		} else if (kw == "star") {
			std::string s, t, eq, rest;
			if (!(ls >> s >> t >> eq) || eq != "=" || !std::getline(ls, rest))
				throw ParseError("bad star line: " + line);
			size_t lb = rest.find('{'), rb = rest.find('}');
			if (lb == std::string::npos || rb == std::string::npos || rb < lb)
				throw ParseError("bad star set: " + line);
			std::vector<std::string> members;
			std::istringstream ms(rest.substr(lb + 1, rb - lb - 1));
			std::string m;
			while (std::getline(ms, m, ',')) {
				size_t b = m.find_first_not_of(" \t");
				size_t e = m.find_last_not_of(" \t");
				if (b != std::string::npos)
					members.push_back(m.substr(b, e - b + 1));
			}
			star_lines.emplace_back(s, t, members);
		} else {
			throw ParseError("unknown fusion rule line: " + line);
		}
	}
	int n = f.size();
	f.star.assign(n, std::vector<std::vector<int>>(n));
	for (auto &[s, t, members] : star_lines) {
		int si = f.label_index(s), ti = f.label_index(t);
		std::vector<int> set;
		for (auto &m : members)
			set.push_back(f.label_index(m));
		std::sort(set.begin(), set.end());
		f.star[si][ti] = set;
		f.star[ti][si] = std::move(set);
	}
	f.check();
	return f;
}

AxisReport verify_axis(const Algebra &a, const Vec &axis, const FusionRule &f)
{
	int n = a.dim(), k = f.size();
	AxisReport rep;
	rep.is_idempotent = multiply(a, axis, axis) == axis;

	MatrixE ad = adjoint(a, axis);
	std::vector<Subspace> spaces;
	int total = 0;
	for (int s = 0; s < k; ++s) {
		Subspace es = kernel(ad - MatrixE::identity(a.fd, n).scaled(f.lambda[s]));
		rep.eigenspace_dims.push_back(es.dim());
		if (es.dim() > 0)
			rep.eigenvalues_found.push_back(f.lambda[s]);
		total += es.dim();
		spaces.push_back(std::move(es));
	}
	rep.semisimple = (total == n);
	rep.minimal_fusion.assign(k, std::vector<std::vector<int>>(k));
	if (!rep.semisimple)
		return rep;

	// change of basis to the concatenated eigenbases, then sweep all products
	MatrixE b = MatrixE::zero(a.fd, n, n);
	std::vector<int> owner(n);
	{
		int col = 0;
		for (int s = 0; s < k; ++s)
			for (auto &v : spaces[s].basis) {
				for (int i = 0; i < n; ++i)
					b.at(i, col) = v[i];
				owner[col] = s;
				++col;
			}
	}
	auto binv = inverse(b);
	if (!binv)
		throw Error("internal: eigenbasis change of basis is singular");

	for (int s = 0; s < k; ++s)
		for (int t = s; t < k; ++t) {
			std::vector<int> observed;
			for (auto &x : spaces[s].basis)
				for (auto &y : spaces[t].basis) {
					Vec coords = binv->apply(multiply(a, x, y));
					for (int c = 0; c < n; ++c)
						if (!coords[c].is_zero())
							observed.push_back(owner[c]);
				}
			std::sort(observed.begin(), observed.end());
			observed.erase(std::unique(observed.begin(), observed.end()), observed.end());
			rep.minimal_fusion[s][t] = observed;
			rep.minimal_fusion[t][s] = observed;
			for (int u : observed)
				if (!f.star_contains(s, t, u))
					rep.fusion_violations.push_back({s, t, u});
		}
	return rep;
}

MatrixE projection_via_polynomial(const Algebra &a, const Vec &axis, const FusionRule &f, int s)
{
	int n = a.dim(), k = f.size();
	for (int i = 0; i < k; ++i)
		for (int j = i + 1; j < k; ++j)
			if (f.lambda[i] == f.lambda[j])
				throw RepeatedEigenvalue();
	MatrixE ad = adjoint(a, axis);
	MatrixE p = MatrixE::identity(a.fd, n);
	for (int t = 0; t < k; ++t) {
		if (t == s)
			continue;
		MatrixE factor = ad - MatrixE::identity(a.fd, n).scaled(f.lambda[t]);
		p = p * factor.scaled((f.lambda[s] - f.lambda[t]).inverse());
	}
	// p projects onto the lambda_s eigenspace iff ad is semisimple with
	// eigenvalues among lambda(S): equivalent to (ad - lambda_s) p = 0
	MatrixE check = (ad - MatrixE::identity(a.fd, n).scaled(f.lambda[s])) * p;
	for (auto &e : check.entries)
		if (!e.is_zero())
			throw NotSemisimple("adjoint does not split over the fusion eigenvalues");
	return p;
}

MatrixE miyamoto(const Algebra &a, const Vec &axis, const FusionRule &f,
                 const std::map<std::string, Scalar> &signs)
{
	int n = a.dim(), k = f.size();
	std::vector<Scalar> chi;
	for (int s = 0; s < k; ++s) {
		auto it = signs.find(f.labels[s]);
		if (it == signs.end())
			throw SignsNotCompatible("missing sign for label " + f.labels[s]);
		chi.push_back(it->second);
	}
	for (int s = 0; s < k; ++s)
		for (int t = 0; t < k; ++t)
			for (int u : f.star[s][t])
				if (chi[u] != chi[s] * chi[t])
					throw SignsNotCompatible("signs are not multiplicative on " + f.labels[s] +
					                         " * " + f.labels[t]);

	MatrixE tau = MatrixE::zero(a.fd, n, n);
	MatrixE sum = MatrixE::zero(a.fd, n, n);
	for (int s = 0; s < k; ++s) {
		MatrixE p = projection_via_polynomial(a, axis, f, s);
		tau = tau + p.scaled(chi[s]);
		sum = sum + p;
	}
	if (!(sum == MatrixE::identity(a.fd, n)))
		throw NotSemisimple("eigenprojections do not resolve the identity");

	for (int i = 0; i < n; ++i)
		for (int j = i; j < n; ++j) {
			Vec lhs = tau.apply(a.sc[i][j]);
			Vec rhs = multiply(a, tau.apply(unit_vec(a.fd, n, i)), tau.apply(unit_vec(a.fd, n, j)));
			if (lhs != rhs)
				throw SignsNotCompatible("sign map is not an algebra automorphism");
		}
	return tau;
}

MatrixE miyamoto(const Algebra &a, const Vec &axis, const FusionRule &f)
{
	std::map<std::string, Scalar> signs;
	for (int s = 0; s < f.size(); ++s) {
		bool plus = f.lambda[s] == Scalar::zero(a.fd) || f.lambda[s] == Scalar::one(a.fd);
		signs[f.labels[s]] = plus ? Scalar::one(a.fd) : -Scalar::one(a.fd);
	}
	return miyamoto(a, axis, f, signs);
}

std::vector<Vec> enclosure(const PresentedAlgebra &p, const FusionRule &f, int cap)
{
	const Algebra &a = p.algebra;
	std::vector<Vec> axes;
	auto known = [&](const Vec &v) {
		for (auto &w : axes)
			if (w == v)
				return true;
		return false;
	};
	for (auto &g : p.generators)
		if (!known(g))
			axes.push_back(g);
	bool changed = true;
	while (changed) {
		changed = false;
		size_t count = axes.size();
		for (size_t b = 0; b < count; ++b) {
			MatrixE tau = miyamoto(a, axes[b], f);
			for (size_t i = 0; i < count; ++i) {
				Vec img = tau.apply(axes[i]);
				if (!known(img)) {
					axes.push_back(std::move(img));
					changed = true;
					if ((int)axes.size() > cap)
						throw CapExceeded(cap);
				}
			}
		}
	}
	return axes;
}

InvariantRecord invariants(const PresentedAlgebra &p, const FusionRule &f)
{
	const Algebra &a = p.algebra;
	InvariantRecord rec;
	std::vector<Vec> axes = enclosure(p, f);
	rec.enclosure_size = (int)axes.size();
	rec.adim = Subspace::span(a.fd, a.dim(), axes).dim();
	rec.vdim = a.dim();
	for (auto &axis : axes)
		rec.edim.push_back(verify_axis(a, axis, f).eigenspace_dims);
	return rec;
}

Subspace decomposition_closure(const Algebra &a, const std::vector<Vec> &seeds,
                               const std::vector<Vec> &axes, const FusionRule &f)
{
	int n = a.dim();
	std::vector<MatrixE> projs;
	for (auto &axis : axes)
		for (int s = 0; s < f.size(); ++s)
			projs.push_back(projection_via_polynomial(a, axis, f, s));

	Subspace sp = Subspace::span(a.fd, n, seeds);
	bool changed = true;
	while (changed) {
		changed = false;
		std::vector<Vec> extra;
		for (auto &v : sp.basis) {
			for (auto &w : sp.basis) {
				Vec prod = multiply(a, v, w);
				if (!sp.contains(prod))
					extra.push_back(std::move(prod));
			}
			for (auto &pm : projs) {
				Vec img = pm.apply(v);
				if (!sp.contains(img))
					extra.push_back(std::move(img));
			}
		}
		if (!extra.empty()) {
			std::vector<Vec> all = sp.basis;
			all.insert(all.end(), extra.begin(), extra.end());
			sp = Subspace::span(a.fd, n, all);
			changed = true;
		}
	}

	// with distinct eigenvalues the projections are polynomials in the
	// adjoints, so the plain subalgebra closure agrees once it contains the axes
	bool injective = true;
	for (int i = 0; i < f.size() && injective; ++i)
		for (int j = i + 1; j < f.size(); ++j)
			if (f.lambda[i] == f.lambda[j])
				injective = false;
	if (injective) {
		Subspace plain = subalgebra_closure(a, seeds);
		bool axes_inside = true;
		for (auto &axis : axes)
			if (!plain.contains(axis))
				axes_inside = false;
		if (axes_inside && !(sp == plain))
			throw Error("decomposition closure disagrees with subalgebra closure");
	}
	return sp;
}

} // namespace axial
