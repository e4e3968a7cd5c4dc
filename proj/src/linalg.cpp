#include "axial/linalg.hpp"

namespace axial {

Vec zero_vec(const FieldDescriptor &fd, int n) { return Vec(n, Scalar::zero(fd)); }

Vec unit_vec(const FieldDescriptor &fd, int n, int i)
{
	Vec v = zero_vec(fd, n);
	v[i] = Scalar::one(fd);
	return v;
}

Vec vec_add(const Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw DimensionMismatch();
	Vec r = a;
	for (size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

Vec vec_sub(const Vec &a, const Vec &b)
{
	if (a.size() != b.size())
		throw DimensionMismatch();
	Vec r = a;
	for (size_t i = 0; i < r.size(); ++i)
		r[i] -= b[i];
	return r;
}

Vec vec_scale(const Scalar &c, const Vec &a)
{
	Vec r = a;
	for (auto &x : r)
		x *= c;
	return r;
}

bool vec_is_zero(const Vec &a)
{
	for (auto &x : a)
		if (!x.is_zero())
			return false;
	return true;
}

MatrixE MatrixE::zero(const FieldDescriptor &fd, int r, int c)
{
	return {fd, r, c, std::vector<Scalar>((size_t)r * c, Scalar::zero(fd))};
}

MatrixE MatrixE::identity(const FieldDescriptor &fd, int n)
{
	MatrixE m = zero(fd, n, n);
	for (int i = 0; i < n; ++i)
		m.at(i, i) = Scalar::one(fd);
	return m;
}

MatrixE MatrixE::from_rows(const FieldDescriptor &fd, const std::vector<Vec> &rows, int cols)
{
	MatrixE m = zero(fd, (int)rows.size(), cols);
	for (int i = 0; i < (int)rows.size(); ++i) {
		if ((int)rows[i].size() != cols)
			throw DimensionMismatch();
		for (int j = 0; j < cols; ++j)
			m.at(i, j) = rows[i][j];
	}
	return m;
}

MatrixE MatrixE::operator*(const MatrixE &b) const
{
	if (cols != b.rows)
		throw DimensionMismatch();
	MatrixE r = zero(fd, rows, b.cols);
	for (int i = 0; i < rows; ++i)
		for (int k = 0; k < cols; ++k) {
			const Scalar &aik = at(i, k);
			if (aik.is_zero())
				continue;
			for (int j = 0; j < b.cols; ++j)
				r.at(i, j) += aik * b.at(k, j);
		}
	return r;
}

MatrixE MatrixE::operator+(const MatrixE &b) const
{
	if (rows != b.rows || cols != b.cols)
		throw DimensionMismatch();
	MatrixE r = *this;
	for (size_t i = 0; i < entries.size(); ++i)
		r.entries[i] += b.entries[i];
	return r;
}

MatrixE MatrixE::operator-(const MatrixE &b) const
{
	if (rows != b.rows || cols != b.cols)
		throw DimensionMismatch();
	MatrixE r = *this;
	for (size_t i = 0; i < entries.size(); ++i)
		r.entries[i] -= b.entries[i];
	return r;
}

MatrixE MatrixE::scaled(const Scalar &c) const
{
	MatrixE r = *this;
	for (auto &x : r.entries)
		x *= c;
	return r;
}

Vec MatrixE::apply(const Vec &v) const
{
	if ((int)v.size() != cols)
		throw DimensionMismatch();
	Vec r = zero_vec(fd, rows);
	for (int i = 0; i < rows; ++i)
		for (int j = 0; j < cols; ++j)
			if (!at(i, j).is_zero())
				r[i] += at(i, j) * v[j];
	return r;
}

MatrixE MatrixE::transposed() const
{
	MatrixE r = zero(fd, cols, rows);
	for (int i = 0; i < rows; ++i)
		for (int j = 0; j < cols; ++j)
			r.at(j, i) = at(i, j);
	return r;
}

bool MatrixE::operator==(const MatrixE &b) const
{
	if (rows != b.rows || cols != b.cols)
		return false;
	for (size_t i = 0; i < entries.size(); ++i)
		if (entries[i] != b.entries[i])
			return false;
	return true;
}

std::pair<MatrixE, std::vector<int>> rref(const MatrixE &m)
{
	MatrixE a = m;
	std::vector<int> pivots;
	int row = 0;
	for (int col = 0; col < a.cols && row < a.rows; ++col) {
		// first nonzero entry, scanning top-down (exact arithmetic, no magnitude pivoting)
		int p = -1;
		for (int i = row; i < a.rows; ++i)
			if (!a.at(i, col).is_zero()) {
				p = i;
				break;
			}
		if (p < 0)
			continue;
		if (p != row)
			for (int j = 0; j < a.cols; ++j)
				std::swap(a.at(p, j), a.at(row, j));
		Scalar inv = a.at(row, col).inverse();
		for (int j = col; j < a.cols; ++j)
			a.at(row, j) *= inv;
		for (int i = 0; i < a.rows; ++i) {
			if (i == row || a.at(i, col).is_zero())
				continue;
			Scalar f = a.at(i, col);
			for (int j = col; j < a.cols; ++j)
				a.at(i, j) -= f * a.at(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	return {a, pivots};
}

Subspace Subspace::zero(const FieldDescriptor &fd, int ambient) { return {fd, ambient, {}, {}}; }

Subspace Subspace::full(const FieldDescriptor &fd, int ambient)
{
	Subspace s = zero(fd, ambient);
	for (int i = 0; i < ambient; ++i) {
		s.basis.push_back(unit_vec(fd, ambient, i));
		s.pivots.push_back(i);
	}
	return s;
}

Subspace Subspace::span(const FieldDescriptor &fd, int ambient, const std::vector<Vec> &vectors)
{
	auto [r, piv] = rref(MatrixE::from_rows(fd, vectors, ambient));
	Subspace s = zero(fd, ambient);
	for (int i = 0; i < (int)piv.size(); ++i) {
		Vec v(r.entries.begin() + (size_t)i * ambient, r.entries.begin() + (size_t)(i + 1) * ambient);
		s.basis.push_back(std::move(v));
	}
	s.pivots = piv;
	return s;
}

Vec Subspace::reduce(Vec v) const
{
	if ((int)v.size() != ambient)
		throw AmbientMismatch();
	for (size_t i = 0; i < basis.size(); ++i) {
		const Scalar &c = v[pivots[i]];
		if (c.is_zero())
			continue;
		Scalar f = c; // basis row has pivot 1
		for (int j = 0; j < ambient; ++j)
			v[j] -= f * basis[i][j];
	}
	return v;
}

bool Subspace::contains(const Vec &v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const
{
	for (auto &v : other.basis)
		if (!contains(v))
			return false;
	return true;
}

bool Subspace::operator==(const Subspace &b) const
{
	if (ambient != b.ambient || basis.size() != b.basis.size() || pivots != b.pivots)
		return false;
	for (size_t i = 0; i < basis.size(); ++i)
		for (int j = 0; j < ambient; ++j)
			if (basis[i][j] != b.basis[i][j])
				return false;
	return true;
}

Subspace kernel(const MatrixE &m)
{
	auto [r, piv] = rref(m);
	std::vector<bool> is_pivot(m.cols, false);
	for (int p : piv)
		is_pivot[p] = true;
	std::vector<Vec> vecs;
	for (int j = 0; j < m.cols; ++j) {
		if (is_pivot[j])
			continue;
		Vec v = zero_vec(m.fd, m.cols);
		v[j] = Scalar::one(m.fd);
		for (int i = 0; i < (int)piv.size(); ++i)
			v[piv[i]] = -r.at(i, j);
		vecs.push_back(std::move(v));
	}
	return Subspace::span(m.fd, m.cols, vecs);
}

Subspace subspace_sum(const Subspace &a, const Subspace &b)
{
	if (a.ambient != b.ambient)
		throw AmbientMismatch();
	std::vector<Vec> all = a.basis;
	all.insert(all.end(), b.basis.begin(), b.basis.end());
	return Subspace::span(a.fd, a.ambient, all);
}

Subspace subspace_intersection(const Subspace &a, const Subspace &b)
{
	if (a.ambient != b.ambient)
		throw AmbientMismatch();
	// kernel method: v = x^T A = y^T B; solve A^T x - B^T y = 0
	int ra = a.dim(), rb = b.dim();
	if (ra == 0 || rb == 0)
		return Subspace::zero(a.fd, a.ambient);
	MatrixE m = MatrixE::zero(a.fd, a.ambient, ra + rb);
	for (int i = 0; i < ra; ++i)
		for (int j = 0; j < a.ambient; ++j)
			m.at(j, i) = a.basis[i][j];
	for (int i = 0; i < rb; ++i)
		for (int j = 0; j < a.ambient; ++j)
			m.at(j, ra + i) = -b.basis[i][j];
	Subspace ker = kernel(m);
	std::vector<Vec> vecs;
	for (auto &xy : ker.basis) {
		Vec v = zero_vec(a.fd, a.ambient);
		for (int i = 0; i < ra; ++i)
			if (!xy[i].is_zero())
				v = vec_add(v, vec_scale(xy[i], a.basis[i]));
		vecs.push_back(std::move(v));
	}
	return Subspace::span(a.fd, a.ambient, vecs);
}

std::optional<Vec> solve(const MatrixE &m, const Vec &rhs)
{
	if ((int)rhs.size() != m.rows)
		throw DimensionMismatch();
	MatrixE aug = MatrixE::zero(m.fd, m.rows, m.cols + 1);
	for (int i = 0; i < m.rows; ++i) {
		for (int j = 0; j < m.cols; ++j)
			aug.at(i, j) = m.at(i, j);
		aug.at(i, m.cols) = rhs[i];
	}
	auto [r, piv] = rref(aug);
	for (int p : piv)
		if (p == m.cols)
			return std::nullopt; // inconsistent
	Vec x = zero_vec(m.fd, m.cols);
	for (int i = 0; i < (int)piv.size(); ++i)
		x[piv[i]] = r.at(i, m.cols);
	return x;
}

std::optional<MatrixE> inverse(const MatrixE &m)
{
	if (m.rows != m.cols)
		throw DimensionMismatch();
	int n = m.rows;
	MatrixE aug = MatrixE::zero(m.fd, n, 2 * n);
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j)
			aug.at(i, j) = m.at(i, j);
		aug.at(i, n + i) = Scalar::one(m.fd);
	}
	auto [r, piv] = rref(aug);
	if ((int)piv.size() != n || piv.back() != n - 1)
		return std::nullopt;
	MatrixE inv = MatrixE::zero(m.fd, n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			inv.at(i, j) = r.at(i, n + j);
	return inv;
}

} // namespace axial
