#pragma once

#include "axial/scalar.hpp"

#include <optional>
#include <utility>

namespace axial {

using Vec = std::vector<Scalar>;

struct DimensionMismatch : Error {
	DimensionMismatch() : Error("dimension mismatch") {}
};
struct AmbientMismatch : Error {
	AmbientMismatch() : Error("subspaces live in different ambient spaces") {}
};

Vec zero_vec(const FieldDescriptor &fd, int n);
Vec unit_vec(const FieldDescriptor &fd, int n, int i);
Vec vec_add(const Vec &a, const Vec &b);
Vec vec_sub(const Vec &a, const Vec &b);
Vec vec_scale(const Scalar &c, const Vec &a);
bool vec_is_zero(const Vec &a);

/// Dense matrix of exact scalars, row-major.
struct MatrixE {
	FieldDescriptor fd;
	int rows = 0, cols = 0;
	std::vector<Scalar> entries;

	static MatrixE zero(const FieldDescriptor &fd, int r, int c);
	static MatrixE identity(const FieldDescriptor &fd, int n);
	static MatrixE from_rows(const FieldDescriptor &fd, const std::vector<Vec> &rows, int cols);

	Scalar &at(int i, int j) { return entries[(size_t)i * cols + j]; }
	const Scalar &at(int i, int j) const { return entries[(size_t)i * cols + j]; }

	MatrixE operator*(const MatrixE &b) const;
	MatrixE operator+(const MatrixE &b) const;
	MatrixE operator-(const MatrixE &b) const;
	MatrixE scaled(const Scalar &c) const;
	Vec apply(const Vec &v) const;
	MatrixE transposed() const;
	bool operator==(const MatrixE &b) const;
};

/// Reduced row echelon form; returns (rref, pivot column indices).
std::pair<MatrixE, std::vector<int>> rref(const MatrixE &m);

/// Canonical subspace: RREF basis with strictly increasing pivot columns.
struct Subspace {
	FieldDescriptor fd;
	int ambient = 0;
	std::vector<Vec> basis; // RREF rows, pivots increasing
	std::vector<int> pivots;

	static Subspace zero(const FieldDescriptor &fd, int ambient);
	static Subspace full(const FieldDescriptor &fd, int ambient);
	static Subspace span(const FieldDescriptor &fd, int ambient, const std::vector<Vec> &vectors);

	int dim() const { return (int)basis.size(); }
	/// Residual of v after reduction against the basis; zero iff v is a member.
	Vec reduce(Vec v) const;
	bool contains(const Vec &v) const;
	bool contains(const Subspace &other) const;
	bool operator==(const Subspace &b) const;
};

Subspace kernel(const MatrixE &m);
Subspace subspace_sum(const Subspace &a, const Subspace &b);
Subspace subspace_intersection(const Subspace &a, const Subspace &b);

/// Solves m * x = rhs; returns one solution or nullopt.
std::optional<Vec> solve(const MatrixE &m, const Vec &rhs);
std::optional<MatrixE> inverse(const MatrixE &m);

} // namespace axial
