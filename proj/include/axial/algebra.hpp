#pragma once

#include "axial/linalg.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace axial {

struct NotAnIdeal : Error {
	NotAnIdeal() : Error("subspace is not an ideal") {}
};
struct NotSemisimple : Error {
	explicit NotSemisimple(const std::string &what = "adjoint action is not semisimple") : Error(what) {}
};

/// Finite-dimensional commutative algebra given by a labeled basis and a
/// symmetric table of structure constants: sc[i][j] = coordinates of b_i*b_j.
struct Algebra {
	FieldDescriptor fd;
	std::vector<std::string> basis_labels;
	std::vector<std::vector<Vec>> sc;

	int dim() const { return (int)basis_labels.size(); }
	void check_commutative() const; // throws if sc is not symmetric
	int label_index(const std::string &name) const;
};

/// An algebra together with its designated generating elements (axes).
struct PresentedAlgebra {
	Algebra algebra;
	std::vector<Vec> generators;
};

Vec multiply(const Algebra &a, const Vec &x, const Vec &y);
MatrixE adjoint(const Algebra &a, const Vec &x);

/// Least subspace containing the seeds and closed under multiplication.
Subspace subalgebra_closure(const Algebra &a, const std::vector<Vec> &seeds);

/// Least subspace R containing the seeds with A*R inside R.
Subspace ideal_closure(const Algebra &a, const std::vector<Vec> &seeds);

struct QuotientResult {
	Algebra algebra;
	MatrixE projection;          // quotient-dim x dim
	std::vector<int> complement; // non-pivot standard basis indices retained
};

/// Quotient by an ideal (verified), on the canonical complement basis.
QuotientResult quotient(const Algebra &a, const Subspace &ideal);

/// The unique algebra homomorphism sending the i-th generator of src to
/// images[i], or nullopt if no such homomorphism exists.
std::optional<MatrixE> find_homomorphism(const PresentedAlgebra &src, const Algebra &dst,
                                         const std::vector<Vec> &images);

std::optional<Vec> find_unit(const Algebra &a);

/// Distinct eigenvalues with eigenspaces of ad(x); throws NotSemisimple if
/// the eigenspace dimensions do not sum to dim (or a root cannot be isolated).
struct EigenDecomposition {
	std::vector<Scalar> values;
	std::vector<Subspace> spaces;
};
EigenDecomposition eigen_decomposition(const Algebra &a, const Vec &x);

/// Minimal polynomial coefficients of a square matrix (monic, low to high).
std::vector<Scalar> minimal_polynomial(const MatrixE &m);

struct IdealEnumeration {
	std::vector<Subspace> ideals;
	/// True when every nonzero common-eigenspace intersection used in the
	/// enumeration was a line, the hypothesis under which the sweep is
	/// exhaustive.
	bool complete = true;
};

/// Enumerates ideals from common eigenspaces of the two generator adjoints,
/// recursing through the ideal generated by eigenvectors of eigenvalues
/// outside {0,1}.
IdealEnumeration enumerate_ideals_diagonalizable(const PresentedAlgebra &p);

// --- text format (see README for the grammar) ---

Vec parse_vector(const Algebra &a, const std::string &text);
std::string format_vector(const Algebra &a, const Vec &v);

void write_algebra(std::ostream &os, const PresentedAlgebra &p, const std::string &eta_text);
PresentedAlgebra read_algebra(std::istream &is);

} // namespace axial
