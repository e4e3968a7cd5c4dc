#pragma once

#include "axial/scalar.hpp"

#include <map>

namespace axial {

/// Basis symbol of the infinite-dimensional eta = 1/2 algebra:
/// kind 0 is a_i (i in Z), kind 1 is p_i (i > 0).
struct InfSymbol {
	int kind = 0;
	int index = 0;
	bool operator<(const InfSymbol &b) const
	{
		return kind != b.kind ? kind < b.kind : index < b.index;
	}
	bool operator==(const InfSymbol &b) const = default;
};

/// Finitely supported vector over the a_i / p_i basis; no explicit zeros.
using SparseVector = std::map<InfSymbol, Scalar>;

SparseVector inf_a(const FieldDescriptor &fd, int i);
SparseVector inf_p(const FieldDescriptor &fd, int i); // p_0 = 0
SparseVector inf_add(const SparseVector &x, const SparseVector &y);
SparseVector inf_sub(const SparseVector &x, const SparseVector &y);
SparseVector inf_scale(const Scalar &c, const SparseVector &x);
bool inf_is_zero(const SparseVector &x);
std::string inf_str(const SparseVector &x);

/// Product in the eta = 1/2 algebra: a_i a_j = p_|i-j| + (a_i+a_j)/2,
/// a_i p_j = p_j/2 - a_i/4 + (a_{i-j}+a_{i+j})/8,
/// p_i p_j = -(p_i+p_j)/4 + (p_{i+j}+p_|i-j|)/8, with p_0 = 0.
SparseVector inf_multiply(const FieldDescriptor &fd, const SparseVector &x, const SparseVector &y);

/// Eigenvector families of ad(a_i): x_k = p_k + (a_{i+k}+a_{i-k})/4 at
/// eigenvalue 1, z_k = p_k + a_i/2 - (a_{i+k}+a_{i-k})/4 at 0, and
/// a_{i+k} - a_{i-k} at 1/2.
SparseVector inf_x(const FieldDescriptor &fd, int i, int k);
SparseVector inf_z(const FieldDescriptor &fd, int i, int k);

struct InfAxisReport {
	bool is_idempotent = false;
	bool one_eigenvectors_ok = false;  // a_i x_k = x_k for k <= window
	bool zero_eigenvectors_ok = false; // a_i z_k = 0
	bool half_eigenvectors_ok = false; // a_i (a_{i+k} - a_{i-k}) = (...)/2
	/// Fusion products among the window families that stay expressible in the
	/// window: x*x and x*z in the 1+0 part with x*z = 0 exactly, z*z likewise,
	/// x*d and z*d in the 1/2 part, d*d back in the 1+0 part.
	bool fusion_ok = false;
	bool passes() const
	{
		return is_idempotent && one_eigenvectors_ok && zero_eigenvectors_ok &&
		       half_eigenvectors_ok && fusion_ok;
	}
};

InfAxisReport inf_axis_check(const FieldDescriptor &fd, int i, int window);

} // namespace axial
