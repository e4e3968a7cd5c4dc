#include "axial/infinite.hpp"

#include "doctest.h"

using namespace axial;

static const FieldDescriptor Q{0, false};

TEST_CASE("sparse products")
{
	// a_0 a_0 = a_0 via the p_0 = 0 convention
	CHECK(inf_multiply(Q, inf_a(Q, 0), inf_a(Q, 0)) == inf_a(Q, 0));

	// a_0 a_1 = p_1 + (a_0 + a_1)/2
	SparseVector prod = inf_multiply(Q, inf_a(Q, 0), inf_a(Q, 1));
	SparseVector expect = inf_p(Q, 1);
	Scalar half = Scalar::from_fraction(Q, 1, 2);
	expect = inf_add(expect, inf_scale(half, inf_add(inf_a(Q, 0), inf_a(Q, 1))));
	CHECK(prod == expect);

	// p_1 p_1 = -p_1/2 + p_2/8
	SparseVector pp = inf_multiply(Q, inf_p(Q, 1), inf_p(Q, 1));
	SparseVector want = inf_add(inf_scale(-half, inf_p(Q, 1)),
	                            inf_scale(Scalar::from_fraction(Q, 1, 8), inf_p(Q, 2)));
	CHECK(pp == want);
}

TEST_CASE("sparse product commutativity on a window")
{
	std::vector<SparseVector> basis;
	for (int i = -3; i <= 3; ++i)
		basis.push_back(inf_a(Q, i));
	for (int i = 1; i <= 4; ++i)
		basis.push_back(inf_p(Q, i));
	for (auto &x : basis)
		for (auto &y : basis)
			CHECK(inf_multiply(Q, x, y) == inf_multiply(Q, y, x));
}

TEST_CASE("axis eigenvector identities")
{
	SparseVector a0 = inf_a(Q, 0);
	CHECK(inf_multiply(Q, a0, inf_x(Q, 0, 1)) == inf_x(Q, 0, 1));
	CHECK(inf_is_zero(inf_multiply(Q, a0, inf_z(Q, 0, 1))));
	SparseVector d = inf_sub(inf_a(Q, 1), inf_a(Q, -1));
	CHECK(inf_multiply(Q, a0, d) == inf_scale(Scalar::from_fraction(Q, 1, 2), d));
}

TEST_CASE("window axis checks pass up to 8")
{
	for (int w : {1, 4, 8}) {
		InfAxisReport rep = inf_axis_check(Q, 0, w);
		CHECK(rep.is_idempotent);
		CHECK(rep.one_eigenvectors_ok);
		CHECK(rep.zero_eigenvectors_ok);
		CHECK(rep.half_eigenvectors_ok);
		CHECK(rep.fusion_ok);
		CHECK(rep.passes());
	}
	// translation invariance: the same holds around another axis
	CHECK(inf_axis_check(Q, 5, 4).passes());
	// and in odd characteristic other than 2
	CHECK(inf_axis_check(FieldDescriptor(7, false), 0, 4).passes());
}

TEST_CASE("formatting")
{
	CHECK(inf_str(SparseVector{}) == "0");
	SparseVector v = inf_add(inf_a(Q, -1), inf_scale(Scalar::from_fraction(Q, -1, 2), inf_p(Q, 2)));
	CHECK(inf_str(v) == "a-1+(-1/2)*p2");
}
