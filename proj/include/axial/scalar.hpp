#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
	DivisionByZero() : Error("division by zero") {}
};
struct FieldMismatch : Error {
	FieldMismatch() : Error("operands belong to different fields") {}
};
struct PoleAtSpecialization : Error {
	explicit PoleAtSpecialization(const std::string &what) : Error(what) {}
};
struct BadCharacteristic : Error {
	explicit BadCharacteristic(const std::string &what) : Error(what) {}
};
struct ParseError : Error {
	explicit ParseError(const std::string &what) : Error(what) {}
};

/// Coefficient domain descriptor: Q or F_p (p an odd prime), optionally
/// extended by the indeterminate eta to the rational function field K(eta).
struct FieldDescriptor {
	std::uint32_t characteristic = 0; // 0 or an odd prime
	bool generic_eta = true;          // true: work in K(eta)

	FieldDescriptor() = default;
	FieldDescriptor(std::uint32_t p, bool generic);

	bool operator==(const FieldDescriptor &) const = default;
};

/// Exact field element: a reduced fraction of polynomials in eta over the
/// prime field. The denominator is monic; constants have denominator 1.
/// In non-generic mode both polynomials are constant.
class Scalar {
  public:
	// rational coefficient of eta^k; in characteristic p the denominator
	// is 1 and the numerator is a residue in [0, p)
	struct Coef {
		Int num{0};
		Int den{1};
	};
	using Poly = std::vector<Coef>; // coefficient of eta^k at index k; no trailing zeros

	Scalar() = default; // zero over Q(eta)

	static Scalar zero(const FieldDescriptor &fd);
	static Scalar one(const FieldDescriptor &fd);
	static Scalar from_int(const FieldDescriptor &fd, const Int &n);
	static Scalar from_fraction(const FieldDescriptor &fd, const Int &num, const Int &den);
	static Scalar eta(const FieldDescriptor &fd); // requires generic_eta
	static Scalar from_poly(const FieldDescriptor &fd, Poly num, Poly den);

	const FieldDescriptor &field() const { return fd_; }
	bool is_zero() const { return num_.empty(); }
	bool is_one() const;
	bool is_constant() const; // no eta in numerator or denominator

	friend Scalar operator+(const Scalar &a, const Scalar &b);
	friend Scalar operator-(const Scalar &a, const Scalar &b);
	friend Scalar operator*(const Scalar &a, const Scalar &b);
	friend Scalar operator/(const Scalar &a, const Scalar &b);
	Scalar operator-() const;
	Scalar inverse() const;
	Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
	Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
	Scalar &operator*=(const Scalar &b) { return *this = *this * b; }
	Scalar &operator/=(const Scalar &b) { return *this = *this / b; }

	bool operator==(const Scalar &b) const;
	bool operator!=(const Scalar &b) const { return !(*this == b); }

	/// Evaluate at eta = value (a constant over the same prime field).
	/// Throws PoleAtSpecialization if the denominator vanishes there.
	Scalar specialize(const Scalar &value) const;

	std::string str() const;

	/// Parses the scalar text syntax: signed integers, `eta`, + - * / ^
	/// and parentheses, e.g. `(eta+1)/(eta-1)`, `-1/2`, `eta^2-2`.
	static Scalar parse(const FieldDescriptor &fd, const std::string &text);

	const Poly &num() const { return num_; }
	const Poly &den() const { return den_; }

  private:
	FieldDescriptor fd_{0, true};
	Poly num_;        // empty means zero
	Poly den_{{1, 1}}; // monic, never empty

	void normalize();
};

} // namespace axial
