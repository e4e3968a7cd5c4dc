#pragma once

#include "axial/fusion.hpp"

#include <map>

namespace axial {

struct ChainTooShort : Error {
	explicit ChainTooShort(int i) : Error("axis chain does not reach index " + std::to_string(i)) {}
};

/// The doubly infinite axis family a_i of a 2-generated algebra, realized on
/// a finite index range: a_{2i} = (tau_1 tau_0)^i(a_0), a_{2i+1} = (tau_1 tau_0)^i(a_1).
struct AxisChain {
	PresentedAlgebra host;
	Scalar eta;
	MatrixE tau0, tau1;
	std::map<int, Vec> a;

	const Vec &axis(int i) const;
};

/// Builds the chain on indices [-k, k+1] and checks tau_0(a_i) = a_{-i},
/// tau_1(a_i) = a_{2-i} on all stored pairs.
AxisChain build_chain(const PresentedAlgebra &p, const FusionRule &f, int k);

struct CheckItem {
	std::string name;
	bool holds = false;
	std::string witness; // formatted nonzero residual when the identity fails
};
using Report = std::vector<CheckItem>;

bool report_all_hold(const Report &r);

struct PXZ {
	Vec p, x, z;
};

/// p_{i,j} = a_j a_{i+j} - eta (a_j + a_{i+j}), x_i = p_{i,0} + (eta/2)(a_i + a_{-i}),
/// z_i = p_{i,0} + eta a_0 + ((eta-1)/2)(a_i + a_{-i}).  Asserts a_0 x_i = x_i
/// and a_0 z_i = 0.
PXZ p_x_z(const AxisChain &c, int i, int j);

/// Compares the two candidate readings of the p_{i,j} definition (a_j vs a_i
/// as the first summand inside the eta bracket) against the required
/// eigenvector identities.
Report verify_p_reading(const AxisChain &c);

/// The three product identities relating p_1 p_1 and a_0 p_{2,1}.
Report verify_prod1(const AxisChain &c);

/// The chain relation a_2 - a_{-2} + a_1 - a_{-1} = 0, the elements q and r
/// with q a_i = ((eta+1)/(eta-1)) a_i and r a_i = r, and p_{1,i} = p_{1,0}.
Report verify_chain_relations(const AxisChain &c);

/// In the infinite eta = 1/2 algebra: p_{i,j} = p_{i,0} and the closed
/// product formula p_i p_j = (p_{i+j} + p_|i-j|)/8 - (p_i + p_j)/4.
Report verify_proprod2(const FieldDescriptor &fd, int window);

struct LemquoGrid {
	/// cells[i][j] = E_i(g_0) intersect E_j(g_1) for eigenvalues i, j in {0, 1}.
	Subspace cells[2][2];
	Report checks;
};

/// The four {0,1}-eigenspace intersections of the two generator adjoints,
/// with ideal-ness of each line and the expected spanning vectors checked.
LemquoGrid verify_lemquo_grid(const PresentedAlgebra &p, const FusionRule &f);

/// The flip: the automorphism swapping the two generators; checks
/// theta(a_i) = a_{1-i} on the chain range.
Report verify_flip(const AxisChain &c);

/// a(xy) = x(ay) for x in E_0(a) + E_1(a) and all basis y.
Report seress_check(const Algebra &a, const Vec &axis, const FusionRule &f);

} // namespace axial
