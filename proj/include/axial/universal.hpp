#pragma once

#include "axial/fusion.hpp"

#include <array>
#include <map>

namespace axial {

struct BoundTooLarge : Error {
	explicit BoundTooLarge(long guard)
	    : Error("term enumeration exceeds the guard of " + std::to_string(guard) + " terms") {}
};
struct TargetViolatesRelations : Error {
	explicit TargetViolatesRelations(const std::string &witness)
	    : Error("a relation instance is nonzero in the target: " + witness) {}
};

/// Canonical terms of the free commutative magma on n generators, enriched
/// with unary symbols (label, axis).  Duplicate-free, closed under subterms,
/// ordered by size (leaf plus unary node count), then shape, then components.
struct TermSpace {
	enum Kind { Leaf = 0, Unary = 1, Product = 2 };
	struct Term {
		Kind kind;
		int sym = -1; // Leaf: generator index; Unary: label * n + axis
		int c1 = -1;  // Unary: child; Product: child with the smaller id
		int c2 = -1;  // Product: child with the larger id
		int size = 1;
	};

	int n = 0;
	std::vector<std::string> unary_labels;
	int bound = 0;
	std::vector<Term> terms;
	std::vector<int> size_counts; // size_counts[k-1] = number of terms of size k

	int count() const { return (int)terms.size(); }
	int count_up_to(int size) const;
	/// Id of the unary application (label, axis) to `id`, or -1 when the
	/// result exceeds the size bound.
	int unary(int label, int axis, int id) const;
	/// Id of the canonical product of two term ids, or -1 out of bound.
	int product(int id1, int id2) const;
	std::string str(int id) const;

	std::map<std::array<int, 3>, int> index; // (kind, sym or c1, child or c2)
};

TermSpace enumerate_terms(int n, const std::vector<std::string> &unary_labels, int N,
                          long guard = 200000);

/// Sparse linear combination of terms by id.
using TermVec = std::map<int, Scalar>;

std::string term_vec_str(const TermSpace &ts, const TermVec &v);

/// decomposition: the four projection families; axial adds the eigenvector
/// family; axial_algebra adds generator idempotency.
enum class RelationLevel { Decomposition, Axial, AxialAlgebra };

/// Every instance of the selected relation families whose terms fit inside
/// the size bound, closed under applying unary symbols while they still fit.
std::vector<TermVec> relation_instances(const FusionRule &f, const TermSpace &ts,
                                        RelationLevel level = RelationLevel::AxialAlgebra);

struct Truncation {
	TermSpace terms;
	FusionRule rule;
	std::vector<TermVec> relations;
	std::vector<int> monomial_basis; // surviving term ids after elimination
	std::vector<int> window_dims;    // dim bound of the size-<=k span, k = 1..N

	int dim() const { return (int)monomial_basis.size(); }
};

/// Truncated linear quotient of the term span by the relation span: forward
/// elimination pivoting on the largest term id, so surviving monomials are
/// minimal and window dimensions are exact for the truncated relation set.
Truncation truncated_quotient(int n, const FusionRule &f, int N,
                              RelationLevel level = RelationLevel::AxialAlgebra,
                              long guard = 200000);

struct HomReport {
	bool surjective = false;
	int image_dim = 0;
};

/// Evaluates every term in the target (leaves to generators, unary symbols to
/// eigenspace projections of the generator adjoints, products to products)
/// and checks that every relation instance vanishes; throws
/// TargetViolatesRelations with a witness otherwise.
HomReport truncated_hom_onto(const Truncation &t, const PresentedAlgebra &target);

} // namespace axial
