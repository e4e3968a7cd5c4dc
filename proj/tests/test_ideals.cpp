#include "axial/catalog.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace axial;

static const FieldDescriptor Qeta{0, true};
static const FieldDescriptor Q{0, false};

namespace {

PresentedAlgebra project(const PresentedAlgebra &p, const Subspace &ideal)
{
	QuotientResult q = quotient(p.algebra, ideal);
	PresentedAlgebra r;
	r.algebra = std::move(q.algebra);
	for (auto &g : p.generators)
		r.generators.push_back(q.projection.apply(g));
	return r;
}

std::set<CatalogName> quotient_classes(const PresentedAlgebra &p, const IdealEnumeration &e,
                                       const std::optional<Scalar> &eta = std::nullopt)
{
	std::set<CatalogName> classes;
	for (auto &ideal : e.ideals) {
		if (ideal.dim() == p.algebra.dim())
			continue; // the zero quotient carries no name
		auto name = identify(project(p, ideal), eta);
		REQUIRE_MESSAGE(name, "unidentified quotient by an ideal of dim ", ideal.dim());
		classes.insert(*name);
	}
	return classes;
}

} // namespace

TEST_CASE("ideals and quotient classes of hat2B")
{
	PresentedAlgebra p = build(CatalogName::Hat2B, Q);
	IdealEnumeration e = enumerate_ideals_diagonalizable(p);
	CHECK(e.complete);
	CHECK(e.ideals.size() == 8);
	std::set<CatalogName> expect = {CatalogName::OneA, CatalogName::Hat1A, CatalogName::TwoB,
	                                CatalogName::Hat2B};
	CHECK(quotient_classes(p, e) == expect);
}

TEST_CASE("ideal lattice of 4NP at generic eta")
{
	PresentedAlgebra p = build(CatalogName::FourNP, Qeta);
	const Algebra &a = p.algebra;
	IdealEnumeration e = enumerate_ideals_diagonalizable(p);
	CHECK(e.complete);
	CHECK(e.ideals.size() == 16);

	// the ideals avoiding a1 - am1 are exactly the subset sums of Fs0, Fs1, Fr
	std::vector<Vec> lines = {parse_vector(a, "s0"), parse_vector(a, "s1"),
	                          parse_vector(a, "q-a0-a1-am1")};
	std::vector<Subspace> sums;
	for (int mask = 0; mask < 8; ++mask) {
		std::vector<Vec> gens;
		for (int b = 0; b < 3; ++b)
			if (mask & (1 << b))
				gens.push_back(lines[b]);
		sums.push_back(Subspace::span(Qeta, 6, gens));
	}
	Vec diff = parse_vector(a, "a1-am1");
	int avoiding = 0;
	for (auto &ideal : e.ideals) {
		if (ideal.contains(diff))
			continue;
		++avoiding;
		bool expected = std::any_of(sums.begin(), sums.end(),
		                            [&](const Subspace &s) { return s == ideal; });
		CHECK(expected);
	}
	CHECK(avoiding == 8);

	std::set<CatalogName> classes = quotient_classes(p, e);
	std::set<CatalogName> expect = {
	    CatalogName::OneA,        CatalogName::Hat1A,  CatalogName::TwoB,
	    CatalogName::Hat2B,       CatalogName::ThreeC, CatalogName::Hat3C,
	    CatalogName::Bar4NPminus, CatalogName::Bar4NP, CatalogName::Bar4NPprime,
	    CatalogName::FourNP};
	CHECK(classes == expect);
}

TEST_CASE("ideal lattice of 4NP at eta = -1")
{
	Scalar m1 = Scalar::from_int(Q, -1);
	PresentedAlgebra p = build(CatalogName::FourNP, Q, m1);
	const Algebra &a = p.algebra;
	IdealEnumeration e = enumerate_ideals_diagonalizable(p);
	CHECK(e.complete);
	CHECK(e.ideals.size() == 24);

	// the fourth line Fq joins the lattice of ideals avoiding a1 - am1
	std::vector<Vec> lines = {parse_vector(a, "s0"), parse_vector(a, "s1"),
	                          parse_vector(a, "q-a0-a1-am1"), parse_vector(a, "q")};
	std::vector<Subspace> sums;
	for (int mask = 0; mask < 16; ++mask) {
		std::vector<Vec> gens;
		for (int b = 0; b < 4; ++b)
			if (mask & (1 << b))
				gens.push_back(lines[b]);
		sums.push_back(Subspace::span(Q, 6, gens));
	}
	Vec diff = parse_vector(a, "a1-am1");
	int avoiding = 0;
	for (auto &ideal : e.ideals) {
		if (ideal.contains(diff))
			continue;
		++avoiding;
		bool expected = std::any_of(sums.begin(), sums.end(),
		                            [&](const Subspace &s) { return s == ideal; });
		CHECK(expected);
	}
	CHECK(avoiding == 16);

	std::set<CatalogName> classes = quotient_classes(p, e, m1);
	CHECK(classes.size() == 16);
	for (auto &[name, text] : catalog_names())
		if (name != CatalogName::Minf)
			CHECK(classes.count(name) == 1);
}

TEST_CASE("the stated quotients of 4NP")
{
	PresentedAlgebra p = build(CatalogName::FourNP, Qeta);
	const Algebra &a = p.algebra;
	auto expect_quotient = [&](CatalogName name, const std::vector<std::string> &gens) {
		std::vector<Vec> vs;
		for (auto &g : gens)
			vs.push_back(parse_vector(a, g));
		Subspace ideal = Subspace::span(Qeta, 6, vs);
		CHECK(ideal.dim() == (int)gens.size());
		auto found = identify(project(p, ideal)); // quotient() verifies ideal-ness
		REQUIRE(found);
		CHECK(*found == name);
	};
	expect_quotient(CatalogName::Bar4NP, {"q-a0-a1-am1"});
	expect_quotient(CatalogName::Bar4NPprime, {"s0"});
	expect_quotient(CatalogName::Bar4NPprime, {"s1"});
	expect_quotient(CatalogName::Bar4NPminus, {"s0", "q-a0-a1-am1"});
	expect_quotient(CatalogName::Bar4NPminus, {"s1", "q-a0-a1-am1"});
	expect_quotient(CatalogName::Hat3C, {"s0", "s1"});
	expect_quotient(CatalogName::ThreeC, {"s0", "s1", "q-a0-a1-am1"});
	expect_quotient(CatalogName::Hat2B, {"a1-a0", "am1-a0", "q-(eta+1)*a0"});
}

TEST_CASE("unit of 4NP")
{
	PresentedAlgebra p = build(CatalogName::FourNP, Qeta);
	auto u = find_unit(p.algebra);
	REQUIRE(u);
	Scalar e1 = Scalar::eta(Qeta) + Scalar::one(Qeta);
	CHECK(vec_scale(e1, *u) ==
	      parse_vector(p.algebra, "q+(eta+1)*s0+(eta+1)*s1"));
	for (int i = 0; i < 6; ++i)
		CHECK(multiply(p.algebra, *u, unit_vec(Qeta, 6, i)) == unit_vec(Qeta, 6, i));

	Scalar m1 = Scalar::from_int(Q, -1);
	PresentedAlgebra pm = build(CatalogName::FourNP, Q, m1);
	CHECK_FALSE(find_unit(pm.algebra));
}
