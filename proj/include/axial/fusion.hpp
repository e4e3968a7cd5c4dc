#pragma once

#include "axial/algebra.hpp"

#include <iosfwd>
#include <map>

namespace axial {

struct BadParameter : Error {
	explicit BadParameter(const std::string &what) : Error(what) {}
};
struct RepeatedEigenvalue : Error {
	RepeatedEigenvalue() : Error("fusion rule eigenvalues are not pairwise distinct") {}
};
struct SignsNotCompatible : Error {
	explicit SignsNotCompatible(const std::string &what) : Error(what) {}
};
struct CapExceeded : Error {
	explicit CapExceeded(int cap) : Error("enclosure exceeded cap of " + std::to_string(cap)) {}
};

/// A finite label set S with eigenvalue map lambda and a symmetric product
/// star: S x S -> subsets of S, all indexed by position in `labels`.
struct FusionRule {
	FieldDescriptor fd;
	std::vector<std::string> labels;
	std::vector<Scalar> lambda;
	std::vector<std::vector<std::vector<int>>> star; // star[s][t] = sorted label indices

	int size() const { return (int)labels.size(); }
	int label_index(const std::string &name) const;
	bool star_contains(int s, int t, int u) const;
	void check() const; // symmetry and shape

	static FusionRule ising(const FieldDescriptor &fd);
	static FusionRule jordan(const FieldDescriptor &fd, const Scalar &eta);
	static FusionRule majorana(const FieldDescriptor &fd, const Scalar &xi, const Scalar &eta);
	/// phi is a subset of {"0","1"}; labels are ordered ("1","0","eta").
	static FusionRule jordan_phi(const FieldDescriptor &fd, const std::vector<std::string> &phi,
	                             const Scalar &eta);
	static FusionRule associative(const FieldDescriptor &fd);

	static FusionRule parse(const FieldDescriptor &fd, std::istream &is);
};

struct AxisReport {
	bool is_idempotent = false;
	std::vector<Scalar> eigenvalues_found; // distinct eigenvalues of ad(a)
	std::vector<int> eigenspace_dims;      // per fusion label
	bool semisimple = false;
	struct Violation {
		int s, t, u; // a product of E_s and E_t basis vectors met E_u outside s*t
	};
	std::vector<Violation> fusion_violations;
	std::vector<std::vector<std::vector<int>>> minimal_fusion; // observed table

	bool passes() const { return is_idempotent && semisimple && fusion_violations.empty(); }
};

AxisReport verify_axis(const Algebra &a, const Vec &axis, const FusionRule &f);

/// Projection onto the lambda_s-eigenspace via the adjoint polynomial
/// prod_{t != s} (ad(a) - lambda_t) / (lambda_s - lambda_t).
MatrixE projection_via_polynomial(const Algebra &a, const Vec &axis, const FusionRule &f, int s);

/// The linear map acting as signs[s] on each eigenspace, verified to be an
/// algebra automorphism.  The default sign pattern is +1 on eigenvalues 0 and
/// 1 and -1 elsewhere (the Miyamoto involution for Jordan type).
MatrixE miyamoto(const Algebra &a, const Vec &axis, const FusionRule &f,
                 const std::map<std::string, Scalar> &signs);
MatrixE miyamoto(const Algebra &a, const Vec &axis, const FusionRule &f);

/// Closure of the generator set under the Miyamoto maps of its members.
std::vector<Vec> enclosure(const PresentedAlgebra &p, const FusionRule &f, int cap = 64);

struct InvariantRecord {
	int enclosure_size = 0;
	int adim = 0;
	int vdim = 0;
	std::vector<std::vector<int>> edim; // per enclosure axis, in label order
};

InvariantRecord invariants(const PresentedAlgebra &p, const FusionRule &f);

/// Least subspace containing the seeds, closed under multiplication and under
/// every eigenspace projection of the given axes; asserts it coincides with
/// the subalgebra closure when the eigenvalue map is injective.
Subspace decomposition_closure(const Algebra &a, const std::vector<Vec> &seeds,
                               const std::vector<Vec> &axes, const FusionRule &f);

} // namespace axial
