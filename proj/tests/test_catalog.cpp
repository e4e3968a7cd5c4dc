#include "axial/catalog.hpp"
#include "axial/fusion.hpp"

#include "doctest.h"

#include <algorithm>

using namespace axial;

static const FieldDescriptor Qeta{0, true};
static const FieldDescriptor Q{0, false};

namespace {

struct InvariantRow {
	CatalogName name;
	int enc, adim, vdim;
	std::vector<std::vector<int>> edims; // admissible triples
};

Scalar minus_one() { return Scalar::from_int(Q, -1); }

void check_row(const InvariantRow &row, const FieldDescriptor &fd, const std::optional<Scalar> &eta,
               const Scalar &eta_value)
{
	PresentedAlgebra p = build(row.name, fd, eta);
	FusionRule jp = FusionRule::jordan_phi(fd, {}, eta_value);
	INFO("algebra ", catalog_name_string(row.name));
	for (auto &g : p.generators)
		CHECK(verify_axis(p.algebra, g, jp).passes());
	CHECK(subalgebra_closure(p.algebra, p.generators).dim() == p.algebra.dim());
	InvariantRecord rec = invariants(p, jp);
	CHECK(rec.enclosure_size == row.enc);
	CHECK(rec.adim == row.adim);
	CHECK(rec.vdim == row.vdim);
	for (auto &ed : rec.edim) {
		bool admissible = std::find(row.edims.begin(), row.edims.end(), ed) != row.edims.end();
		INFO("edim (", ed[0], ",", ed[1], ",", ed[2], ")");
		CHECK(admissible);
	}
	// every admissible edim is realized by some enclosure axis
	for (auto &want : row.edims) {
		bool seen = std::find(rec.edim.begin(), rec.edim.end(), want) != rec.edim.end();
		CHECK(seen);
	}
}

} // namespace

TEST_CASE("generic-eta catalog invariants")
{
	const std::vector<InvariantRow> rows = {
	    {CatalogName::OneA, 1, 1, 1, {{1, 0, 0}}},
	    {CatalogName::Hat1A, 2, 2, 2, {{2, 0, 0}, {1, 1, 0}}},
	    {CatalogName::TwoB, 2, 2, 2, {{1, 1, 0}}},
	    {CatalogName::Hat2B, 2, 2, 3, {{2, 1, 0}}},
	    {CatalogName::ThreeC, 3, 3, 3, {{1, 1, 1}}},
	    {CatalogName::Hat3C, 3, 3, 4, {{2, 1, 1}}},
	    {CatalogName::Bar4NPminus, 6, 4, 4, {{2, 1, 1}, {1, 2, 1}}},
	    {CatalogName::Bar4NP, 6, 4, 5, {{2, 2, 1}}},
	    {CatalogName::Bar4NPprime, 6, 4, 5, {{3, 1, 1}, {2, 2, 1}}},
	    {CatalogName::FourNP, 6, 4, 6, {{3, 2, 1}}},
	};
	for (auto &row : rows)
		check_row(row, Qeta, std::nullopt, Scalar::eta(Qeta));
}

TEST_CASE("eta = -1 catalog invariants")
{
	const std::vector<InvariantRow> rows = {
	    {CatalogName::ThreeCx, 3, 2, 2, {{1, 0, 1}}},
	    {CatalogName::Hat3Cx, 3, 3, 3, {{2, 0, 1}}},
	    {CatalogName::Bar4NPminus_x, 6, 3, 3, {{2, 0, 1}, {1, 1, 1}}},
	    {CatalogName::Bar4NP_x, 6, 4, 4, {{2, 1, 1}}},
	    {CatalogName::Bar4NPprime_x, 6, 4, 4, {{3, 0, 1}, {2, 1, 1}}},
	    {CatalogName::FourNP_x, 6, 4, 5, {{3, 1, 1}}},
	};
	for (auto &row : rows)
		check_row(row, Q, minus_one(), minus_one());
}

TEST_CASE("structure constant spot checks")
{
	PresentedAlgebra c3 = build(CatalogName::ThreeC, Qeta);
	const Algebra &a = c3.algebra;
	Vec prod = multiply(a, c3.generators[0], c3.generators[1]);
	// a_0 a_1 = (eta/2)(a_0 + a_1 - a_{-1})
	Scalar h = Scalar::parse(Qeta, "eta/2");
	CHECK(prod[a.label_index("a0")] == h);
	CHECK(prod[a.label_index("a1")] == h);
	CHECK(prod[a.label_index("am1")] == -h);

	PresentedAlgebra hb = build(CatalogName::Hat2B, Qeta);
	CHECK(hb.algebra.dim() == 3);
	Vec ab = multiply(hb.algebra, hb.generators[0], hb.generators[1]);
	CHECK(ab == unit_vec(Qeta, 3, hb.algebra.label_index("a")));

	PresentedAlgebra p4 = build(CatalogName::FourNP, Qeta);
	CHECK(p4.algebra.basis_labels ==
	      std::vector<std::string>{"q", "am1", "a0", "a1", "s0", "s1"});
}

TEST_CASE("hat3C matches 3C plus 1A away from eta = 2")
{
	PresentedAlgebra h3 = build(CatalogName::Hat3C, Qeta);
	Algebra target = direct_sum(build(CatalogName::ThreeC, Qeta).algebra, [] {
		Algebra s;
		s.fd = Qeta;
		s.basis_labels = {"s"};
		s.sc.assign(1, std::vector<Vec>(1, zero_vec(Qeta, 1)));
		s.sc[0][0][0] = Scalar::one(Qeta);
		return s;
	}());
	// hat a_i -> a_i + s, q -> (eta+1)s + a_0 + a_1 + a_{-1}
	auto vec = [&](const std::string &text) { return parse_vector(target, text); };
	auto hom = find_homomorphism(h3, target, {vec("a0+s"), vec("a1+s")});
	REQUIRE(hom);
	const Algebra &src = h3.algebra;
	CHECK(hom->apply(unit_vec(Qeta, 4, src.label_index("am1"))) == vec("am1+s"));
	CHECK(hom->apply(unit_vec(Qeta, 4, src.label_index("q"))) ==
	      vec("(eta+1)*s+a0+a1+am1"));
	CHECK(inverse(*hom).has_value()); // isomorphism
}

TEST_CASE("catalog error paths")
{
	CHECK_THROWS_AS(build(CatalogName::ThreeC, Q, Scalar::one(Q)), BadEta);
	CHECK_THROWS_AS(build(CatalogName::ThreeC, Q, Scalar::zero(Q)), BadEta);
	CHECK_THROWS_AS(build(CatalogName::ThreeC, Q), BadEta);
	CHECK_THROWS_AS(build(CatalogName::FourNP_x, Qeta), NameRequiresEtaMinusOne);
	CHECK_THROWS_AS(build(CatalogName::FourNP_x, Q, Scalar::from_int(Q, 3)),
	                NameRequiresEtaMinusOne);
	CHECK_THROWS_AS(build(CatalogName::Minf, Qeta), Error);
	CHECK(catalog_name_from_string("bar4NPprime_x") == CatalogName::Bar4NPprime_x);
	CHECK_THROWS_AS(catalog_name_from_string("5A"), Error);
}

TEST_CASE("direct sum basics")
{
	PresentedAlgebra one = build(CatalogName::OneA, Qeta);
	Algebra two = direct_sum(one.algebra, one.algebra);
	// a + b is idempotent in 1A + 1A
	Vec ab = vec_add(unit_vec(Qeta, 2, 0), unit_vec(Qeta, 2, 1));
	CHECK(multiply(two, ab, ab) == ab);
	PresentedAlgebra c3 = build(CatalogName::ThreeC, Qeta);
	PresentedAlgebra tb = build(CatalogName::TwoB, Qeta);
	CHECK(direct_sum(c3.algebra, tb.algebra).dim() == 5);
}
