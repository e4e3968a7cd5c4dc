#include "axial/catalog.hpp"
#include "axial/infinite.hpp"
#include "axial/relations.hpp"
#include "axial/universal.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace axial;

namespace {

// thrown for bad files / bad arguments: exit code 2, never 1
struct UsageError : std::runtime_error {
	explicit UsageError(const std::string &what) : std::runtime_error(what) {}
};
// thrown when a mathematical check fails: exit code 1
struct CheckFailed : std::runtime_error {
	explicit CheckFailed(const std::string &what) : std::runtime_error(what) {}
};

struct FieldOpts {
	int char_p = 0;
	std::string eta_text = "generic";

	FieldDescriptor fd() const { return FieldDescriptor{char_p, eta_text == "generic"}; }
	std::optional<Scalar> eta_value() const
	{
		if (eta_text == "generic")
			return std::nullopt;
		try {
			return Scalar::parse(fd(), eta_text);
		} catch (const Error &e) {
			throw UsageError(std::string("bad --eta value: ") + e.what());
		}
	}
	Scalar eta_scalar() const
	{
		FieldDescriptor f = fd();
		return f.generic_eta ? Scalar::eta(f) : *eta_value();
	}

	void attach(CLI::App *cmd)
	{
		cmd->add_option("--char", char_p, "field characteristic (0 or an odd prime)");
		cmd->add_option("--eta", eta_text, "eta: 'generic' or an exact scalar such as -1 or 1/2");
	}
};

bool is_catalog_name(const std::string &text)
{
	for (auto &[n, s] : catalog_names())
		if (s == text)
			return true;
	return false;
}

PresentedAlgebra load_algebra(const std::string &arg, const FieldOpts &field)
{
	if (is_catalog_name(arg)) {
		CatalogName name = catalog_name_from_string(arg);
		try {
			return build(name, field.fd(), field.eta_value());
		} catch (const BadEta &e) {
			throw UsageError(e.what());
		} catch (const NameRequiresEtaMinusOne &e) {
			throw UsageError(e.what());
		}
	}
	std::ifstream is(arg);
	if (!is)
		throw UsageError("cannot open algebra file: " + arg);
	try {
		return read_algebra(is);
	} catch (const Error &e) {
		throw UsageError("bad algebra file " + arg + ": " + e.what());
	}
}

FusionRule load_fusion(const std::string &arg, const std::vector<std::string> &phi,
                       const FieldDescriptor &fd, const Scalar &eta)
{
	if (arg == "jordan")
		return FusionRule::jordan(fd, eta);
	if (arg == "jordan_phi")
		return FusionRule::jordan_phi(fd, phi, eta);
	if (arg == "associative")
		return FusionRule::associative(fd);
	if (arg == "ising")
		return FusionRule::ising(fd);
	std::ifstream is(arg);
	if (!is)
		throw UsageError("unknown fusion rule (and no such file): " + arg);
	try {
		return FusionRule::parse(fd, is);
	} catch (const Error &e) {
		throw UsageError("bad fusion file " + arg + ": " + e.what());
	}
}

std::string edim_str(const std::vector<int> &dims)
{
	std::string out = "(";
	for (size_t i = 0; i < dims.size(); ++i)
		out += (i ? "," : "") + std::to_string(dims[i]);
	return out + ")";
}

std::string edim_set_str(const std::vector<std::vector<int>> &rows)
{
	std::vector<std::vector<int>> distinct;
	for (auto &r : rows)
		if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
			distinct.push_back(r);
	std::string out;
	for (auto &r : distinct)
		out += (out.empty() ? "" : "|") + edim_str(r);
	return out;
}

std::vector<Vec> parse_vector_list(const Algebra &a, const std::string &text)
{
	std::vector<Vec> out;
	size_t pos = 0;
	while (pos <= text.size()) {
		size_t semi = text.find(';', pos);
		std::string part = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
		if (part.find_first_not_of(" \t") != std::string::npos)
			out.push_back(parse_vector(a, part));
		if (semi == std::string::npos)
			break;
		pos = semi + 1;
	}
	return out;
}

void emit_report(const Report &rep, bool &all_ok)
{
	for (auto &item : rep) {
		std::cout << "check=" << item.name << " holds=" << (item.holds ? 1 : 0);
		if (!item.holds)
			std::cout << " witness=" << item.witness;
		std::cout << "\n";
		all_ok = all_ok && item.holds;
	}
}

int cmd_catalog_list()
{
	for (auto &[name, text] : catalog_names())
		std::cout << "name=" << text << "\n";
	return 0;
}

int cmd_catalog_build(const std::string &name, const FieldOpts &field, const std::string &out)
{
	if (!is_catalog_name(name))
		throw UsageError("unknown catalog name: " + name);
	PresentedAlgebra p = load_algebra(name, field);
	if (out.empty()) {
		write_algebra(std::cout, p, field.eta_text);
	} else {
		std::ofstream os(out);
		if (!os)
			throw UsageError("cannot write file: " + out);
		write_algebra(os, p, field.eta_text);
	}
	return 0;
}

int cmd_verify_axis(const std::string &alg, const std::string &fusion,
                    const std::vector<std::string> &phi, const FieldOpts &field)
{
	PresentedAlgebra p = load_algebra(alg, field);
	FusionRule f = load_fusion(fusion, phi, p.algebra.fd,
	                           p.algebra.fd.generic_eta ? Scalar::eta(p.algebra.fd)
	                                                    : field.eta_scalar());
	bool ok = true;
	for (size_t i = 0; i < p.generators.size(); ++i) {
		AxisReport r = verify_axis(p.algebra, p.generators[i], f);
		std::cout << "axis=" << i << " idempotent=" << r.is_idempotent
		          << " semisimple=" << r.semisimple
		          << " violations=" << r.fusion_violations.size()
		          << " edim=" << edim_str(r.eigenspace_dims) << " pass=" << r.passes() << "\n";
		ok = ok && r.passes();
	}
	if (!ok)
		throw CheckFailed("an axis check failed");
	return 0;
}

int cmd_fusion_table(const std::string &fusion, const std::vector<std::string> &phi,
                     const FieldOpts &field)
{
	FieldDescriptor fd = field.fd();
	FusionRule f = load_fusion(fusion, phi, fd, field.eta_scalar());
	for (int s = 0; s < f.size(); ++s)
		std::cout << "label " << f.labels[s] << " = " << f.lambda[s].str() << "\n";
	for (int s = 0; s < f.size(); ++s)
		for (int t = s; t < f.size(); ++t) {
			std::cout << "star " << f.labels[s] << " " << f.labels[t] << " = {";
			for (size_t k = 0; k < f.star[s][t].size(); ++k)
				std::cout << (k ? "," : "") << f.labels[f.star[s][t][k]];
			std::cout << "}\n";
		}
	return 0;
}

int cmd_invariants(const std::string &alg, const std::string &fusion,
                   const std::vector<std::string> &phi, const FieldOpts &field)
{
	PresentedAlgebra p = load_algebra(alg, field);
	FusionRule f = load_fusion(fusion, phi, p.algebra.fd,
	                           p.algebra.fd.generic_eta ? Scalar::eta(p.algebra.fd)
	                                                    : field.eta_scalar());
	InvariantRecord rec = invariants(p, f);
	std::cout << "enclosure=" << rec.enclosure_size << " adim=" << rec.adim
	          << " vdim=" << rec.vdim << " edim=" << edim_set_str(rec.edim) << "\n";
	return 0;
}

int cmd_quotient(const std::string &alg, const std::string &ideal_text, const FieldOpts &field,
                 const std::string &out)
{
	PresentedAlgebra p = load_algebra(alg, field);
	std::vector<Vec> gens = parse_vector_list(p.algebra, ideal_text);
	Subspace ideal = ideal_closure(p.algebra, gens);
	Subspace plain = Subspace::span(p.algebra.fd, p.algebra.dim(), gens);
	std::cout << "ideal_dim=" << ideal.dim() << " span_dim=" << plain.dim()
	          << " already_ideal=" << (ideal == plain ? 1 : 0) << "\n";
	QuotientResult q = quotient(p.algebra, ideal);
	PresentedAlgebra r;
	r.algebra = std::move(q.algebra);
	for (auto &g : p.generators)
		r.generators.push_back(q.projection.apply(g));
	std::cout << "quotient_dim=" << r.algebra.dim() << "\n";
	if (auto name = identify(r, field.eta_value()))
		std::cout << "isomorphic_to=" << catalog_name_string(*name) << "\n";
	if (!out.empty()) {
		std::ofstream os(out);
		if (!os)
			throw UsageError("cannot write file: " + out);
		write_algebra(os, r, field.eta_text);
	}
	return 0;
}

int cmd_ideals(const std::string &alg, const FieldOpts &field)
{
	PresentedAlgebra p = load_algebra(alg, field);
	IdealEnumeration e = enumerate_ideals_diagonalizable(p);
	std::cout << "count=" << e.ideals.size() << " complete=" << (e.complete ? 1 : 0) << "\n";
	for (size_t i = 0; i < e.ideals.size(); ++i) {
		const Subspace &ideal = e.ideals[i];
		std::cout << "ideal=" << i << " dim=" << ideal.dim() << " basis=";
		for (size_t k = 0; k < ideal.basis.size(); ++k)
			std::cout << (k ? "|" : "") << format_vector(p.algebra, ideal.basis[k]);
		if (ideal.dim() < p.algebra.dim()) {
			QuotientResult q = quotient(p.algebra, ideal);
			PresentedAlgebra r;
			r.algebra = std::move(q.algebra);
			for (auto &g : p.generators)
				r.generators.push_back(q.projection.apply(g));
			auto name = identify(r, field.eta_value());
			std::cout << " quotient=" << (name ? catalog_name_string(*name) : "?");
		} else {
			std::cout << " quotient=0";
		}
		std::cout << "\n";
	}
	return 0;
}

int cmd_hom(const std::string &from, const std::string &to, const std::string &images_text,
            const FieldOpts &field)
{
	PresentedAlgebra src = load_algebra(from, field);
	PresentedAlgebra dst = load_algebra(to, field);
	std::vector<Vec> images = images_text.empty()
	                              ? dst.generators
	                              : parse_vector_list(dst.algebra, images_text);
	auto h = find_homomorphism(src, dst.algebra, images);
	std::cout << "exists=" << (h ? 1 : 0) << "\n";
	if (!h)
		throw CheckFailed("no homomorphism with the requested generator images");
	for (int i = 0; i < h->rows; ++i) {
		std::cout << "row=" << i << " ";
		for (int j = 0; j < h->cols; ++j)
			std::cout << (j ? "," : "") << h->at(i, j).str();
		std::cout << "\n";
	}
	bool bij = h->rows == h->cols && inverse(*h).has_value();
	std::cout << "bijective=" << (bij ? 1 : 0) << "\n";
	return 0;
}

int cmd_verify_lemmas(const std::string &alg, const FieldOpts &field, int window)
{
	bool ok = true;
	if (alg == "Minf") {
		FieldDescriptor fd{field.char_p, false};
		emit_report(verify_proprod2(fd, window), ok);
		if (!ok)
			throw CheckFailed("an identity failed");
		return 0;
	}
	PresentedAlgebra p = load_algebra(alg, field);
	FusionRule f = FusionRule::jordan_phi(p.algebra.fd, {},
	                                      p.algebra.fd.generic_eta ? Scalar::eta(p.algebra.fd)
	                                                               : field.eta_scalar());
	AxisChain c = build_chain(p, f, 3);
	emit_report(verify_prod1(c), ok);
	emit_report(verify_chain_relations(c), ok);
	emit_report(verify_flip(c), ok);
	LemquoGrid grid = verify_lemquo_grid(p, f);
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			std::cout << "cell_" << i << j << "_dim=" << grid.cells[i][j].dim() << "\n";
	emit_report(grid.checks, ok);
	if (!ok)
		throw CheckFailed("an identity failed");
	return 0;
}

int cmd_universal(const std::string &fusion, const std::vector<std::string> &phi, int gens,
                  int size, long guard, const std::string &target, const FieldOpts &field)
{
	FieldDescriptor fd = field.fd();
	FusionRule f = load_fusion(fusion, phi, fd, field.eta_scalar());
	Truncation t = truncated_quotient(gens, f, size, RelationLevel::AxialAlgebra, guard);
	std::cout << "terms=" << t.terms.count() << "\n";
	for (size_t k = 0; k < t.terms.size_counts.size(); ++k)
		std::cout << "terms_size_" << k + 1 << "=" << t.terms.size_counts[k] << "\n";
	std::cout << "relations=" << t.relations.size() << "\n";
	std::cout << "dim_bound=" << t.dim() << "\n";
	for (size_t k = 0; k < t.window_dims.size(); ++k)
		std::cout << "window_" << k + 1 << "=" << t.window_dims[k] << "\n";
	if (!target.empty()) {
		PresentedAlgebra p = load_algebra(target, field);
		try {
			HomReport h = truncated_hom_onto(t, p);
			std::cout << "target_well_defined=1 target_surjective=" << (h.surjective ? 1 : 0)
			          << " target_image_dim=" << h.image_dim << "\n";
		} catch (const TargetViolatesRelations &e) {
			std::cout << "target_well_defined=0\n";
			throw CheckFailed(e.what());
		}
	}
	return 0;
}

int cmd_tables(const FieldOpts &field)
{
	FieldDescriptor fd = field.fd();
	std::optional<Scalar> eta = field.eta_value();
	bool minus_one = eta && *eta == -Scalar::one(fd);
	std::vector<CatalogName> names;
	if (fd.generic_eta || !minus_one)
		names = {CatalogName::OneA,        CatalogName::Hat1A,  CatalogName::TwoB,
		         CatalogName::Hat2B,       CatalogName::ThreeC, CatalogName::Hat3C,
		         CatalogName::Bar4NPminus, CatalogName::Bar4NP, CatalogName::Bar4NPprime,
		         CatalogName::FourNP};
	else
		names = {CatalogName::ThreeCx,  CatalogName::Hat3Cx,        CatalogName::Bar4NPminus_x,
		         CatalogName::Bar4NP_x, CatalogName::Bar4NPprime_x, CatalogName::FourNP_x};
	for (CatalogName name : names) {
		PresentedAlgebra p = build(name, fd, eta);
		FusionRule f = FusionRule::jordan_phi(fd, {}, field.eta_scalar());
		InvariantRecord rec = invariants(p, f);
		std::cout << "name=" << catalog_name_string(name) << " Ac=" << rec.enclosure_size
		          << " adim=" << rec.adim << " vdim=" << rec.vdim
		          << " edim=" << edim_set_str(rec.edim) << "\n";
	}
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact toolkit for 2-generated non-primitive axial algebras of Jordan type"};
	app.require_subcommand(1);

	FieldOpts field;
	std::string alg, fusion = "jordan_phi", out, ideal_text, from, to, images_text, target,
	            build_name;
	std::vector<std::string> phi;
	int window = 8, gens = 2, size = 4;
	long guard = 200000;

	auto *cat = app.add_subcommand("catalog", "list or build the named algebras");
	cat->require_subcommand(1);
	cat->add_subcommand("list", "print all catalog names");
	auto *cb = cat->add_subcommand("build", "write an algebra file");
	cb->add_option("name", build_name, "catalog name")->required();
	field.attach(cb);
	cb->add_option("-o,--output", out, "output file (default stdout)");

	auto *ver = app.add_subcommand("verify", "run verification suites");
	ver->require_subcommand(1);
	auto *va = ver->add_subcommand("axis", "check every designated generator as an axis");
	va->add_option("--algebra", alg, "catalog name or algebra file")->required();
	va->add_option("--fusion", fusion, "fusion rule name or file");
	va->add_option("--phi", phi, "labels of phi for jordan_phi");
	field.attach(va);
	auto *vl = ver->add_subcommand("lemmas", "check the dihedral-chain identities");
	vl->add_option("--algebra", alg, "catalog name, algebra file, or Minf")->required();
	vl->add_option("--window", window, "index window for Minf");
	field.attach(vl);

	auto *fu = app.add_subcommand("fusion", "fusion rule utilities");
	fu->require_subcommand(1);
	auto *ft = fu->add_subcommand("table", "print a fusion rule");
	ft->add_option("--fusion", fusion, "fusion rule name or file")->required();
	ft->add_option("--phi", phi, "labels of phi for jordan_phi");
	field.attach(ft);

	auto *inv = app.add_subcommand("invariants", "enclosure size, adim, vdim, edim");
	inv->add_option("--algebra", alg, "catalog name or algebra file")->required();
	inv->add_option("--fusion", fusion, "fusion rule name or file");
	inv->add_option("--phi", phi, "labels of phi for jordan_phi");
	field.attach(inv);

	auto *quo = app.add_subcommand("quotient", "quotient by the ideal closure of given vectors");
	quo->add_option("--algebra", alg, "catalog name or algebra file")->required();
	quo->add_option("--ideal", ideal_text, "semicolon-separated generating vectors")->required();
	quo->add_option("-o,--output", out, "write the quotient as an algebra file");
	field.attach(quo);

	auto *ide = app.add_subcommand("ideals", "enumerate ideals from generator eigenspaces");
	ide->add_option("--algebra", alg, "catalog name or algebra file")->required();
	field.attach(ide);

	auto *hom = app.add_subcommand("hom", "find the generator-determined homomorphism");
	hom->add_option("--from", from, "source: catalog name or algebra file")->required();
	hom->add_option("--to", to, "destination: catalog name or algebra file")->required();
	hom->add_option("--images", images_text, "generator images (default: destination generators)");
	field.attach(hom);

	auto *uni = app.add_subcommand("universal", "bounded universal-object computations");
	uni->require_subcommand(1);
	auto *ux = uni->add_subcommand("expand", "enumerate terms and relations, reduce, map onto a target");
	ux->add_option("--fusion", fusion, "fusion rule name or file")->required();
	ux->add_option("--phi", phi, "labels of phi for jordan_phi");
	ux->add_option("--gens", gens, "number of generators");
	ux->add_option("--size", size, "term size bound")->required();
	ux->add_option("--guard", guard, "term count guard");
	ux->add_option("--target", target, "algebra to evaluate the truncation onto");
	field.attach(ux);

	auto *tab = app.add_subcommand("tables", "invariant rows of the whole catalog");
	field.attach(tab);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (cat->got_subcommand("list"))
			return cmd_catalog_list();
		if (cat->got_subcommand("build"))
			return cmd_catalog_build(build_name, field, out);
		if (ver->got_subcommand("axis"))
			return cmd_verify_axis(alg, fusion, phi, field);
		if (ver->got_subcommand("lemmas"))
			return cmd_verify_lemmas(alg, field, window);
		if (fu->got_subcommand("table"))
			return cmd_fusion_table(fusion, phi, field);
		if (app.got_subcommand(inv))
			return cmd_invariants(alg, fusion, phi, field);
		if (app.got_subcommand(quo))
			return cmd_quotient(alg, ideal_text, field, out);
		if (app.got_subcommand(ide))
			return cmd_ideals(alg, field);
		if (app.got_subcommand(hom))
			return cmd_hom(from, to, images_text, field);
		if (uni->got_subcommand("expand"))
			return cmd_universal(fusion, phi, gens, size, guard, target, field);
		if (app.got_subcommand(tab))
			return cmd_tables(field);
	} catch (const UsageError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const CheckFailed &e) {
		std::cerr << "failed: " << e.what() << "\n";
		return 1;
	} catch (const Error &e) {
		// a mathematical precondition was violated by well-formed input
		std::cerr << "failed: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
