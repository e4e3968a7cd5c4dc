#include "axial/algebra.hpp"

#include "doctest.h"

#include <sstream>

using namespace axial;

static const FieldDescriptor Qeta{0, true};
static const FieldDescriptor Q{0, false};

static Scalar sc_parse(const FieldDescriptor &fd, const std::string &t) { return Scalar::parse(fd, t); }

// two orthogonal idempotents
static PresentedAlgebra make_2b()
{
	Algebra a;
	a.fd = Q;
	a.basis_labels = {"a0", "a1"};
	a.sc.assign(2, std::vector<Vec>(2, zero_vec(Q, 2)));
	a.sc[0][0] = unit_vec(Q, 2, 0);
	a.sc[1][1] = unit_vec(Q, 2, 1);
	return {a, {unit_vec(Q, 2, 0), unit_vec(Q, 2, 1)}};
}

// three idempotents with a_i a_j = (eta/2)(a_i + a_j - a_k)
static PresentedAlgebra make_3c()
{
	Algebra a;
	a.fd = Qeta;
	a.basis_labels = {"am1", "a0", "a1"};
	a.sc.assign(3, std::vector<Vec>(3, zero_vec(Qeta, 3)));
	Scalar h = sc_parse(Qeta, "eta") * Scalar::from_fraction(Qeta, 1, 2);
	for (int i = 0; i < 3; ++i)
		a.sc[i][i] = unit_vec(Qeta, 3, i);
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			if (i == j)
				continue;
			int k = 3 - i - j;
			Vec v = zero_vec(Qeta, 3);
			v[i] = h;
			v[j] = h;
			v[k] = -h;
			a.sc[i][j] = v;
		}
	return {a, {unit_vec(Qeta, 3, 1), unit_vec(Qeta, 3, 2)}};
}

TEST_CASE("multiply and adjoint")
{
	auto p = make_3c();
	const Algebra &a = p.algebra;
	a.check_commutative();

	Vec a0 = unit_vec(Qeta, 3, 1), a1 = unit_vec(Qeta, 3, 2);
	CHECK(multiply(a, a0, a0) == a0);
	Vec prod = multiply(a, a0, a1);
	CHECK(prod[0] == sc_parse(Qeta, "-1/2*eta"));
	CHECK(prod[1] == sc_parse(Qeta, "1/2*eta"));
	CHECK(prod[2] == sc_parse(Qeta, "1/2*eta"));

	MatrixE ad = adjoint(a, a0);
	CHECK(ad.apply(a1) == prod);
}

TEST_CASE("closures")
{
	auto p = make_3c();
	CHECK(subalgebra_closure(p.algebra, p.generators).dim() == 3);
	CHECK(ideal_closure(p.algebra, {p.generators[0]}).dim() == 3);

	auto b = make_2b();
	CHECK(subalgebra_closure(b.algebra, {b.generators[0]}).dim() == 1);
	Subspace i0 = ideal_closure(b.algebra, {b.generators[0]});
	CHECK(i0.dim() == 1);
}

TEST_CASE("quotient of 2B by one idempotent line")
{
	auto b = make_2b();
	Subspace i0 = ideal_closure(b.algebra, {b.generators[0]});
	QuotientResult q = quotient(b.algebra, i0);
	CHECK(q.algebra.dim() == 1);
	CHECK(q.algebra.sc[0][0] == unit_vec(Q, 1, 0)); // the image of a1 stays idempotent
	CHECK(q.projection.apply(b.generators[0]) == zero_vec(Q, 1));

	Subspace diag = Subspace::span(Q, 2, {{Scalar::one(Q), Scalar::one(Q)}});
	CHECK_THROWS_AS(quotient(b.algebra, diag), NotAnIdeal);
}

TEST_CASE("homomorphisms")
{
	auto b = make_2b();
	// swapping the idempotents is an automorphism
	auto swap = find_homomorphism(b, b.algebra, {b.generators[1], b.generators[0]});
	REQUIRE(swap);
	CHECK(swap->apply(b.generators[0]) == b.generators[1]);

	// sending both generators to the same idempotent breaks multiplicativity:
	// a0*a1 = 0 would have to map to a0*a0 = a0
	auto bad = find_homomorphism(b, b.algebra, {b.generators[0], b.generators[0]});
	CHECK_FALSE(bad);

	auto p = make_3c();
	auto collapse = find_homomorphism(p, p.algebra, {p.generators[0], p.generators[0]});
	CHECK_FALSE(collapse);
	auto ident = find_homomorphism(p, p.algebra, {p.generators[0], p.generators[1]});
	REQUIRE(ident);
	CHECK(*ident == MatrixE::identity(Qeta, 3));
}

TEST_CASE("find_unit")
{
	auto b = make_2b();
	auto u = find_unit(b.algebra);
	REQUIRE(u);
	CHECK(*u == Vec{Scalar::one(Q), Scalar::one(Q)});
}

TEST_CASE("minimal polynomial and eigen decomposition")
{
	auto b = make_2b();
	MatrixE ad = adjoint(b.algebra, b.generators[0]);
	auto mp = minimal_polynomial(ad);
	// ad(a0) has eigenvalues 1 and 0: minimal polynomial x^2 - x
	REQUIRE(mp.size() == 3);
	CHECK(mp[0].is_zero());
	CHECK(mp[1] == -Scalar::one(Q));
	CHECK(mp[2] == Scalar::one(Q));

	EigenDecomposition d = eigen_decomposition(b.algebra, b.generators[0]);
	REQUIRE(d.values.size() == 2);
	int total = 0;
	for (auto &s : d.spaces)
		total += s.dim();
	CHECK(total == 2);

	auto p = make_3c();
	EigenDecomposition d3 = eigen_decomposition(p.algebra, p.generators[0]);
	REQUIRE(d3.values.size() == 3);
	bool saw_eta = false;
	for (auto &v : d3.values)
		if (v == sc_parse(Qeta, "eta"))
			saw_eta = true;
	CHECK(saw_eta);
}

TEST_CASE("ideal enumeration on 2B")
{
	auto b = make_2b();
	IdealEnumeration e = enumerate_ideals_diagonalizable(b);
	CHECK(e.complete);
	CHECK(e.ideals.size() == 4); // 0, Fa0, Fa1, everything
}

TEST_CASE("algebra io round trip")
{
	auto p = make_3c();
	std::ostringstream os;
	write_algebra(os, p, "");
	std::istringstream is(os.str());
	PresentedAlgebra q = read_algebra(is);
	CHECK(q.algebra.dim() == 3);
	CHECK(q.algebra.basis_labels == p.algebra.basis_labels);
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			CHECK(q.algebra.sc[i][j] == p.algebra.sc[i][j]);
	REQUIRE(q.generators.size() == 2);
	CHECK(q.generators[0] == p.generators[0]);
	CHECK(q.generators[1] == p.generators[1]);
}

TEST_CASE("vector parse and format")
{
	auto p = make_3c();
	Vec v = parse_vector(p.algebra, "a0 - (eta/2)*a1 + 2*am1");
	CHECK(v[0] == Scalar::from_int(Qeta, 2));
	CHECK(v[1] == Scalar::one(Qeta));
	CHECK(v[2] == sc_parse(Qeta, "-1/2*eta"));
	CHECK(parse_vector(p.algebra, format_vector(p.algebra, v)) == v);
	CHECK(format_vector(p.algebra, zero_vec(Qeta, 3)) == "0");
	CHECK_THROWS_AS(parse_vector(p.algebra, "a7"), Error);
}
