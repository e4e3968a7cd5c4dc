#include "axial/algebra.hpp"

#include <algorithm>

namespace axial {

void Algebra::check_commutative() const
{
	int n = dim();
	if ((int)sc.size() != n)
		throw Error("structure constant table has wrong size");
	for (int i = 0; i < n; ++i) {
		if ((int)sc[i].size() != n)
			throw Error("structure constant table has wrong size");
		for (int j = 0; j < n; ++j) {
			if ((int)sc[i][j].size() != n)
				throw Error("structure constant table has wrong size");
			for (int k = 0; k < n; ++k)
				if (sc[i][j][k] != sc[j][i][k])
					throw Error("structure constants are not symmetric");
		}
	}
}

int Algebra::label_index(const std::string &name) const
{
	for (int i = 0; i < dim(); ++i)
		if (basis_labels[i] == name)
			return i;
	throw Error("unknown basis label: " + name);
}

Vec multiply(const Algebra &a, const Vec &x, const Vec &y)
{
	int n = a.dim();
	if ((int)x.size() != n || (int)y.size() != n)
		throw DimensionMismatch();
	Vec r = zero_vec(a.fd, n);
	for (int i = 0; i < n; ++i) {
		if (x[i].is_zero())
			continue;
		for (int j = 0; j < n; ++j) {
			if (y[j].is_zero())
				continue;
			Scalar c = x[i] * y[j];
			for (int k = 0; k < n; ++k)
				if (!a.sc[i][j][k].is_zero())
					r[k] += c * a.sc[i][j][k];
		}
	}
	return r;
}

MatrixE adjoint(const Algebra &a, const Vec &x)
{
	int n = a.dim();
	MatrixE m = MatrixE::zero(a.fd, n, n);
	for (int j = 0; j < n; ++j) {
		Vec col = multiply(a, x, unit_vec(a.fd, n, j));
		for (int i = 0; i < n; ++i)
			m.at(i, j) = col[i];
	}
	return m;
}

namespace {

/// Grows the span by the given products until stable.  When full_products is
/// false only A*span is adjoined (ideal closure), otherwise span*span.
Subspace closure(const Algebra &a, const std::vector<Vec> &seeds, bool full_products)
{
	int n = a.dim();
	Subspace s = Subspace::span(a.fd, n, seeds);
	bool changed = true;
	while (changed) {
		changed = false;
		std::vector<Vec> extra;
		for (auto &v : s.basis) {
			if (full_products) {
				for (auto &w : s.basis) {
					Vec p = multiply(a, v, w);
					if (!s.contains(p))
						extra.push_back(std::move(p));
				}
			} else {
				for (int j = 0; j < n; ++j) {
					Vec p = multiply(a, unit_vec(a.fd, n, j), v);
					if (!s.contains(p))
						extra.push_back(std::move(p));
				}
			}
		}
		if (!extra.empty()) {
			std::vector<Vec> all = s.basis;
			all.insert(all.end(), extra.begin(), extra.end());
			s = Subspace::span(a.fd, n, all);
			changed = true;
		}
	}
	return s;
}

} // namespace

Subspace subalgebra_closure(const Algebra &a, const std::vector<Vec> &seeds)
{
	return closure(a, seeds, true);
}

Subspace ideal_closure(const Algebra &a, const std::vector<Vec> &seeds)
{
	return closure(a, seeds, false);
}

QuotientResult quotient(const Algebra &a, const Subspace &ideal)
{
	int n = a.dim();
	if (ideal.ambient != n)
		throw AmbientMismatch();
	for (auto &v : ideal.basis)
		for (int j = 0; j < n; ++j)
			if (!ideal.contains(multiply(a, unit_vec(a.fd, n, j), v)))
				throw NotAnIdeal();

	std::vector<bool> is_pivot(n, false);
	for (int p : ideal.pivots)
		is_pivot[p] = true;
	std::vector<int> comp;
	for (int j = 0; j < n; ++j)
		if (!is_pivot[j])
			comp.push_back(j);
	int q = (int)comp.size();

	// residuals of the standard basis are supported on the complement columns
	MatrixE proj = MatrixE::zero(a.fd, q, n);
	for (int j = 0; j < n; ++j) {
		Vec r = ideal.reduce(unit_vec(a.fd, n, j));
		for (int k = 0; k < q; ++k)
			proj.at(k, j) = r[comp[k]];
	}

	Algebra qa;
	qa.fd = a.fd;
	for (int k = 0; k < q; ++k)
		qa.basis_labels.push_back(a.basis_labels[comp[k]]);
	qa.sc.assign(q, std::vector<Vec>(q));
	for (int i = 0; i < q; ++i)
		for (int j = 0; j < q; ++j)
			qa.sc[i][j] = proj.apply(multiply(a, unit_vec(a.fd, n, comp[i]), unit_vec(a.fd, n, comp[j])));
	return {std::move(qa), std::move(proj), std::move(comp)};
}

std::optional<MatrixE> find_homomorphism(const PresentedAlgebra &src, const Algebra &dst,
                                         const std::vector<Vec> &images)
{
	const Algebra &a = src.algebra;
	int n = a.dim(), m = dst.dim();
	if (images.size() != src.generators.size())
		throw DimensionMismatch();

	// build a spanning set of products of generators together with the forced images
	std::vector<Vec> elems, elem_images;
	Subspace span = Subspace::zero(a.fd, n);
	auto adjoin = [&](const Vec &v, const Vec &w) {
		if (span.contains(v))
			return;
		elems.push_back(v);
		elem_images.push_back(w);
		span = subspace_sum(span, Subspace::span(a.fd, n, {v}));
	};
	for (size_t i = 0; i < src.generators.size(); ++i)
		adjoin(src.generators[i], images[i]);
	for (size_t fresh = 0; fresh < elems.size() && span.dim() < n;) {
		size_t upto = elems.size();
		for (size_t i = fresh; i < upto && span.dim() < n; ++i)
			for (size_t j = 0; j <= i && span.dim() < n; ++j)
				adjoin(multiply(a, elems[i], elems[j]), multiply(dst, elem_images[i], elem_images[j]));
		fresh = upto;
		if (elems.size() == upto)
			break;
	}
	if (span.dim() < n)
		throw Error("generators do not generate the source algebra");

	// the hom matrix is forced: M * elems = elem_images (columnwise)
	MatrixE v = MatrixE::zero(a.fd, n, n), w = MatrixE::zero(a.fd, m, n);
	for (int k = 0; k < n; ++k)
		for (int i = 0; i < n; ++i)
			v.at(i, k) = elems[k][i];
	for (int k = 0; k < n; ++k)
		for (int i = 0; i < m; ++i)
			w.at(i, k) = elem_images[k][i];
	auto vinv = inverse(v);
	if (!vinv)
		throw Error("internal: spanning elements are dependent");
	MatrixE hom = w * *vinv;

	// the candidate is unique; it remains to check it is multiplicative
	for (size_t i = 0; i < src.generators.size(); ++i)
		if (hom.apply(src.generators[i]) != images[i])
			return std::nullopt;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j <= i; ++j) {
			Vec lhs = hom.apply(a.sc[i][j]);
			Vec rhs = multiply(dst, hom.apply(unit_vec(a.fd, n, i)), hom.apply(unit_vec(a.fd, n, j)));
			if (lhs != rhs)
				return std::nullopt;
		}
	return hom;
}

std::optional<Vec> find_unit(const Algebra &a)
{
	int n = a.dim();
	// linear system in the coordinates of u: u * e_j = e_j for all j
	MatrixE m = MatrixE::zero(a.fd, n * n, n);
	Vec rhs = zero_vec(a.fd, n * n);
	for (int j = 0; j < n; ++j)
		for (int i = 0; i < n; ++i) {
			for (int k = 0; k < n; ++k)
				m.at(j * n + i, k) = a.sc[k][j][i];
			rhs[j * n + i] = (i == j) ? Scalar::one(a.fd) : Scalar::zero(a.fd);
		}
	return solve(m, rhs);
}

std::vector<Scalar> minimal_polynomial(const MatrixE &mat)
{
	if (mat.rows != mat.cols)
		throw DimensionMismatch();
	int n = mat.rows;
	const FieldDescriptor &fd = mat.fd;
	// flatten powers of the matrix and look for the first linear dependency
	std::vector<std::vector<Scalar>> powers;
	MatrixE p = MatrixE::identity(fd, n);
	for (int k = 0;; ++k) {
		powers.push_back(p.entries);
		MatrixE sys = MatrixE::zero(fd, n * n, k + 1);
		for (int c = 0; c <= k; ++c)
			for (int r = 0; r < n * n; ++r)
				sys.at(r, c) = powers[c][r];
		Vec target = (p * mat).entries;
		if (auto x = solve(sys, target)) {
			std::vector<Scalar> coeffs; // monic of degree k+1
			for (int c = 0; c <= k; ++c)
				coeffs.push_back(-(*x)[c]);
			coeffs.push_back(Scalar::one(fd));
			return coeffs;
		}
		p = p * mat;
	}
}

namespace {

std::vector<Scalar> candidate_roots(const FieldDescriptor &fd)
{
	std::vector<Scalar> out;
	auto add = [&](Scalar s) {
		for (auto &t : out)
			if (t == s)
				return;
		out.push_back(std::move(s));
	};
	if (fd.characteristic != 0 && !fd.generic_eta && fd.characteristic <= 997) {
		for (std::uint32_t r = 0; r < fd.characteristic; ++r)
			add(Scalar::from_int(fd, r));
		return out;
	}
	for (int num = -6; num <= 6; ++num)
		for (int den = 1; den <= 4; ++den)
			add(Scalar::from_fraction(fd, num, den));
	if (fd.generic_eta) {
		Scalar e = Scalar::eta(fd);
		Scalar one = Scalar::one(fd);
		Scalar two = Scalar::from_int(fd, 2);
		Scalar half = Scalar::from_fraction(fd, 1, 2);
		std::vector<Scalar> base = {e,       -e,        e + one,  e - one,   one - e,
		                            two * e, two * e - one, two * e + one, e * half, -e * half};
		for (auto &b : base)
			add(b);
		add((e + one) * half);
		add((e - one) * half);
		add((one - e) * half);
		add((e + one) / (e - one));
		add(e * e);
		add(e + two);
		add(e - two);
	}
	return out;
}

/// Synthetic division by (lambda - r); returns the remainder through *rem.
std::vector<Scalar> divide_linear(const std::vector<Scalar> &poly, const Scalar &r, Scalar *rem)
{
	int d = (int)poly.size() - 1;
	std::vector<Scalar> q(d);
	Scalar carry = poly[d];
	for (int i = d - 1; i >= 0; --i) {
		q[i] = carry;
		carry = poly[i] + r * carry;
	}
	*rem = carry;
	return q;
}

} // namespace

EigenDecomposition eigen_decomposition(const Algebra &a, const Vec &x)
{
	int n = a.dim();
	MatrixE ad = adjoint(a, x);
	std::vector<Scalar> poly = minimal_polynomial(ad);
	std::vector<Scalar> cands = candidate_roots(a.fd);

	std::vector<Scalar> roots;
	while (poly.size() > 1) {
		Scalar root = Scalar::zero(a.fd);
		bool found = false;
		if (poly.size() == 2) {
			root = -(poly[0] / poly[1]);
			found = true;
		} else {
			for (auto &c : cands) {
				Scalar rem = Scalar::zero(a.fd);
				divide_linear(poly, c, &rem);
				if (rem.is_zero()) {
					root = c;
					found = true;
					break;
				}
			}
		}
		if (!found)
			throw NotSemisimple("could not split the minimal polynomial into linear factors");
		// divide out the root to its full multiplicity
		for (;;) {
			Scalar rem = Scalar::zero(a.fd);
			auto q = divide_linear(poly, root, &rem);
			if (!rem.is_zero())
				break;
			poly = q;
		}
		roots.push_back(root);
	}

	EigenDecomposition dec;
	int total = 0;
	for (auto &r : roots) {
		MatrixE shifted = ad - MatrixE::identity(a.fd, n).scaled(r);
		Subspace es = kernel(shifted);
		total += es.dim();
		dec.values.push_back(r);
		dec.spaces.push_back(std::move(es));
	}
	if (total != n)
		throw NotSemisimple();
	return dec;
}

namespace {

bool is_ideal(const Algebra &a, const Subspace &s)
{
	int n = a.dim();
	for (auto &v : s.basis)
		for (int j = 0; j < n; ++j)
			if (!s.contains(multiply(a, unit_vec(a.fd, n, j), v)))
				return false;
	return true;
}

void add_unique(std::vector<Subspace> &list, const Subspace &s)
{
	for (auto &t : list)
		if (t == s)
			return;
	list.push_back(s);
}

} // namespace

IdealEnumeration enumerate_ideals_diagonalizable(const PresentedAlgebra &p)
{
	const Algebra &a = p.algebra;
	int n = a.dim();
	if (p.generators.size() != 2)
		throw Error("ideal enumeration expects two generators");
	IdealEnumeration out;

	EigenDecomposition d0 = eigen_decomposition(a, p.generators[0]);
	EigenDecomposition d1 = eigen_decomposition(a, p.generators[1]);

	std::vector<Subspace> cells;
	for (auto &e0 : d0.spaces)
		for (auto &e1 : d1.spaces) {
			Subspace c = subspace_intersection(e0, e1);
			if (c.dim() > 0) {
				if (c.dim() > 1)
					out.complete = false;
				cells.push_back(std::move(c));
			}
		}

	// every sum of common eigenspaces that happens to be an ideal
	size_t k = cells.size();
	for (size_t mask = 0; mask < ((size_t)1 << k); ++mask) {
		Subspace s = Subspace::zero(a.fd, n);
		for (size_t i = 0; i < k; ++i)
			if (mask & ((size_t)1 << i))
				s = subspace_sum(s, cells[i]);
		if (is_ideal(a, s))
			add_unique(out.ideals, s);
	}
	add_unique(out.ideals, Subspace::full(a.fd, n));

	// eigenvectors of the first generator outside eigenvalues {0,1} generate
	// an ideal; recurse through the quotient and pull the ideals back
	Scalar zero = Scalar::zero(a.fd), one = Scalar::one(a.fd);
	std::vector<Vec> wild;
	for (size_t i = 0; i < d0.values.size(); ++i)
		if (d0.values[i] != zero && d0.values[i] != one)
			for (auto &v : d0.spaces[i].basis)
				wild.push_back(v);
	if (!wild.empty()) {
		Subspace j0 = ideal_closure(a, wild);
		if (j0.dim() < n) {
			QuotientResult qr = quotient(a, j0);
			PresentedAlgebra pq{qr.algebra, {qr.projection.apply(p.generators[0]), qr.projection.apply(p.generators[1])}};
			IdealEnumeration sub = enumerate_ideals_diagonalizable(pq);
			out.complete = out.complete && sub.complete;
			for (auto &iq : sub.ideals) {
				std::vector<Vec> pre = j0.basis;
				for (auto &w : iq.basis) {
					auto v = solve(qr.projection, w);
					if (!v)
						throw Error("internal: quotient projection is not surjective");
					pre.push_back(*v);
				}
				add_unique(out.ideals, Subspace::span(a.fd, n, pre));
			}
		}
	}
	return out;
}

} // namespace axial
