#pragma once

#include "axial/algebra.hpp"

#include <optional>

namespace axial {

struct BadEta : Error {
	explicit BadEta(const std::string &what) : Error(what) {}
};
struct NameRequiresEtaMinusOne : Error {
	explicit NameRequiresEtaMinusOne(const std::string &name)
	    : Error(name + " exists only at eta = -1") {}
};

enum class CatalogName {
	OneA,
	Hat1A,
	TwoB,
	Hat2B,
	ThreeC,
	ThreeCx,
	Hat3C,
	Hat3Cx,
	Bar4NPminus,
	Bar4NP,
	Bar4NPprime,
	FourNP,
	Bar4NPminus_x,
	Bar4NP_x,
	Bar4NPprime_x,
	FourNP_x,
	Minf,
};

const std::vector<std::pair<CatalogName, std::string>> &catalog_names();
std::string catalog_name_string(CatalogName name);
CatalogName catalog_name_from_string(const std::string &text);

/// Builds a catalog algebra with its designated generator pair.  When the
/// field is generic, eta stays an indeterminate and `eta` must be empty;
/// otherwise `eta` gives the specialization value (a constant of `fd`).
PresentedAlgebra build(CatalogName name, const FieldDescriptor &fd,
                       const std::optional<Scalar> &eta = std::nullopt);

/// Block-diagonal product on the concatenated bases.
Algebra direct_sum(const Algebra &a, const Algebra &b);

/// Matches a presented algebra against the finite catalog: returns a name
/// when a bijective homomorphism carries that entry's generator pair onto the
/// presented generators (in either order).  When one presented generator is
/// zero the algebra can only be the one-dimensional idempotent line, which is
/// matched directly.  `eta` is forwarded to build() for eta-dependent names.
std::optional<CatalogName> identify(const PresentedAlgebra &p,
                                    const std::optional<Scalar> &eta = std::nullopt);

} // namespace axial
