#include "axial/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace axial {

namespace {

bool is_odd_prime(std::uint32_t p)
{
	if (p < 3 || p % 2 == 0)
		return false;
	for (std::uint32_t d = 3; (std::uint64_t)d * d <= p; d += 2)
		if (p % d == 0)
			return false;
	return true;
}

Int int_gcd(Int a, Int b)
{
	if (a < 0)
		a = -a;
	if (b < 0)
		b = -b;
	while (!b.is_zero()) {
		Int r = a % b;
		a = b;
		b = r;
	}
	return a;
}

Int mod_pos(const Int &a, const Int &p)
{
	Int r = a % p;
	if (r < 0)
		r += p;
	return r;
}

// inverse of a mod p, p prime
Int mod_inverse(const Int &a, const Int &p)
{
	Int t = 0, newt = 1, r = p, newr = mod_pos(a, p);
	while (!newr.is_zero()) {
		Int q = r / newr;
		Int tmp = t - q * newt;
		t = newt;
		newt = tmp;
		tmp = r - q * newr;
		r = newr;
		newr = tmp;
	}
	if (r != 1)
		throw DivisionByZero();
	return mod_pos(t, p);
}

using Coef = Scalar::Coef;
using Poly = Scalar::Poly;

Coef cmake_(const FieldDescriptor &fd, Int n, Int d)
{
	if (d.is_zero())
		throw DivisionByZero();
	if (fd.characteristic != 0) {
		Int p = fd.characteristic;
		Int r = mod_pos(n, p);
		if (d != 1)
			r = mod_pos(r * mod_inverse(d, p), p);
		return {r, 1};
	}
	if (d < 0) {
		n = -n;
		d = -d;
	}
	Int g = int_gcd(n, d);
	if (g > 1) {
		n /= g;
		d /= g;
	}
	return {n, d};
}

bool czero(const Coef &c) { return c.num.is_zero(); }

Coef cadd(const FieldDescriptor &fd, const Coef &a, const Coef &b)
{
	return cmake_(fd, a.num * b.den + b.num * a.den, a.den * b.den);
}
Coef csub(const FieldDescriptor &fd, const Coef &a, const Coef &b)
{
	return cmake_(fd, a.num * b.den - b.num * a.den, a.den * b.den);
}
Coef cmul(const FieldDescriptor &fd, const Coef &a, const Coef &b)
{
	return cmake_(fd, a.num * b.num, a.den * b.den);
}
Coef cdiv(const FieldDescriptor &fd, const Coef &a, const Coef &b)
{
	if (czero(b))
		throw DivisionByZero();
	return cmake_(fd, a.num * b.den, a.den * b.num);
}
Coef cneg(const FieldDescriptor &fd, const Coef &a) { return cmake_(fd, -a.num, a.den); }
bool ceq(const Coef &a, const Coef &b) { return a.num == b.num && a.den == b.den; }

void ptrim(Poly &p)
{
	while (!p.empty() && czero(p.back()))
		p.pop_back();
}

Poly padd(const FieldDescriptor &fd, const Poly &a, const Poly &b)
{
	Poly r(std::max(a.size(), b.size()), Coef{0, 1});
	for (size_t i = 0; i < r.size(); ++i) {
		Coef x = i < a.size() ? a[i] : Coef{0, 1};
		Coef y = i < b.size() ? b[i] : Coef{0, 1};
		r[i] = cadd(fd, x, y);
	}
	ptrim(r);
	return r;
}

Poly psub(const FieldDescriptor &fd, const Poly &a, const Poly &b)
{
	Poly r(std::max(a.size(), b.size()), Coef{0, 1});
	for (size_t i = 0; i < r.size(); ++i) {
		Coef x = i < a.size() ? a[i] : Coef{0, 1};
		Coef y = i < b.size() ? b[i] : Coef{0, 1};
		r[i] = csub(fd, x, y);
	}
	ptrim(r);
	return r;
}

Poly pmul(const FieldDescriptor &fd, const Poly &a, const Poly &b)
{
	if (a.empty() || b.empty())
		return {};
	Poly r(a.size() + b.size() - 1, Coef{0, 1});
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j)
			r[i + j] = cadd(fd, r[i + j], cmul(fd, a[i], b[j]));
	ptrim(r);
	return r;
}

Poly pscale(const FieldDescriptor &fd, const Poly &a, const Coef &c)
{
	Poly r = a;
	for (auto &x : r)
		x = cmul(fd, x, c);
	ptrim(r);
	return r;
}

// remainder of a / b (b nonzero)
Poly prem(const FieldDescriptor &fd, Poly a, const Poly &b)
{
	if (b.empty())
		throw DivisionByZero();
	while (a.size() >= b.size()) {
		Coef q = cdiv(fd, a.back(), b.back());
		size_t shift = a.size() - b.size();
		for (size_t i = 0; i < b.size(); ++i)
			a[shift + i] = csub(fd, a[shift + i], cmul(fd, q, b[i]));
		ptrim(a);
		if (a.empty())
			break;
	}
	return a;
}

Poly pmonic(const FieldDescriptor &fd, const Poly &a)
{
	if (a.empty())
		return a;
	return pscale(fd, a, cdiv(fd, Coef{1, 1}, a.back()));
}

Poly pgcd(const FieldDescriptor &fd, Poly a, Poly b)
{
	while (!b.empty()) {
		Poly r = prem(fd, a, b);
		a = std::move(b);
		b = pmonic(fd, r);
	}
	return pmonic(fd, a);
}

Coef peval(const FieldDescriptor &fd, const Poly &p, const Coef &v)
{
	Coef r{0, 1};
	for (auto it = p.rbegin(); it != p.rend(); ++it)
		r = cadd(fd, cmul(fd, r, v), *it);
	return r;
}

std::string coef_str(const Coef &c)
{
	std::string s = c.num.str();
	if (c.den != 1)
		s += "/" + c.den.str();
	return s;
}

// number of nonzero terms
int pterms(const Poly &p)
{
	int n = 0;
	for (auto &c : p)
		if (!czero(c))
			++n;
	return n;
}

std::string poly_str(const Poly &p)
{
	if (p.empty())
		return "0";
	std::string out;
	for (int k = (int)p.size() - 1; k >= 0; --k) {
		const Coef &c = p[k];
		if (czero(c))
			continue;
		bool neg = c.num < 0;
		Coef abs = neg ? Coef{-c.num, c.den} : c;
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? "-" : "+";
		bool unit = abs.num == 1 && abs.den == 1;
		if (k == 0) {
			out += coef_str(abs);
		} else {
			if (!unit)
				out += coef_str(abs) + "*";
			out += "eta";
			if (k > 1)
				out += "^" + std::to_string(k);
		}
	}
	return out;
}

struct Parser {
	const FieldDescriptor &fd;
	const std::string &s;
	size_t pos = 0;

	void skip()
	{
		while (pos < s.size() && std::isspace((unsigned char)s[pos]))
			++pos;
	}
	bool eat(char c)
	{
		skip();
		if (pos < s.size() && s[pos] == c) {
			++pos;
			return true;
		}
		return false;
	}
	char peek()
	{
		skip();
		return pos < s.size() ? s[pos] : '\0';
	}

	Scalar expr()
	{
		Scalar r = term();
		for (;;) {
			if (eat('+'))
				r = r + term();
			else if (eat('-'))
				r = r - term();
			else
				return r;
		}
	}
	Scalar term()
	{
		Scalar r = factor();
		for (;;) {
			if (eat('*'))
				r = r * factor();
			else if (eat('/'))
				r = r / factor();
			else
				return r;
		}
	}
	Scalar factor()
	{
		if (eat('-'))
			return -factor();
		return power();
	}
	Scalar power()
	{
		Scalar base = atom();
		if (eat('^')) {
			skip();
			size_t start = pos;
			while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
				++pos;
			if (start == pos)
				throw ParseError("expected integer exponent at position " + std::to_string(pos));
			long e = std::stol(s.substr(start, pos - start));
			Scalar r = Scalar::one(fd);
			for (long i = 0; i < e; ++i)
				r = r * base;
			return r;
		}
		return base;
	}
	Scalar atom()
	{
		skip();
		if (pos >= s.size())
			throw ParseError("unexpected end of scalar expression");
		if (eat('(')) {
			Scalar r = expr();
			if (!eat(')'))
				throw ParseError("missing ')' in scalar expression");
			return r;
		}
		if (std::isdigit((unsigned char)s[pos])) {
			size_t start = pos;
			while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
				++pos;
			return Scalar::from_int(fd, Int(s.substr(start, pos - start)));
		}
		if (s.compare(pos, 3, "eta") == 0) {
			pos += 3;
			return Scalar::eta(fd);
		}
		throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in scalar expression");
	}
};

} // namespace

FieldDescriptor::FieldDescriptor(std::uint32_t p, bool generic) : characteristic(p), generic_eta(generic)
{
	if (p != 0 && !is_odd_prime(p))
		throw BadCharacteristic("characteristic must be 0 or an odd prime, got " + std::to_string(p));
}

void Scalar::normalize()
{
	ptrim(num_);
	ptrim(den_);
	if (den_.empty())
		throw DivisionByZero();
	if (num_.empty()) {
		den_ = {{1, 1}};
		return;
	}
	if (!fd_.generic_eta && (num_.size() > 1 || den_.size() > 1))
		throw Error("eta is not available in a non-generic field");
	Poly g = pgcd(fd_, num_, den_);
	if (g.size() > 1 || !ceq(g[0], {1, 1})) {
		// exact division by the gcd via repeated synthetic division
		auto pquo = [&](const Poly &a) {
			Poly q(a.size() - g.size() + 1, Coef{0, 1});
			Poly rem = a;
			while (rem.size() >= g.size()) {
				Coef c = cdiv(fd_, rem.back(), g.back());
				size_t shift = rem.size() - g.size();
				q[shift] = c;
				for (size_t i = 0; i < g.size(); ++i)
					rem[shift + i] = csub(fd_, rem[shift + i], cmul(fd_, c, g[i]));
				ptrim(rem);
				if (rem.empty())
					break;
			}
			ptrim(q);
			return q;
		};
		num_ = pquo(num_);
		den_ = pquo(den_);
	}
	// monic denominator
	Coef lead = den_.back();
	if (!ceq(lead, {1, 1})) {
		den_ = pscale(fd_, den_, cdiv(fd_, Coef{1, 1}, lead));
		num_ = pscale(fd_, num_, cdiv(fd_, Coef{1, 1}, lead));
	}
}

Scalar Scalar::zero(const FieldDescriptor &fd)
{
	Scalar s;
	s.fd_ = fd;
	return s;
}

Scalar Scalar::one(const FieldDescriptor &fd) { return from_int(fd, 1); }

Scalar Scalar::from_int(const FieldDescriptor &fd, const Int &n)
{
	Scalar s;
	s.fd_ = fd;
	s.num_ = {cmake_(fd, n, 1)};
	s.normalize();
	return s;
}

Scalar Scalar::from_fraction(const FieldDescriptor &fd, const Int &num, const Int &den)
{
	Scalar s;
	s.fd_ = fd;
	s.num_ = {cmake_(fd, num, den)};
	s.normalize();
	return s;
}

Scalar Scalar::eta(const FieldDescriptor &fd)
{
	if (!fd.generic_eta)
		throw Error("eta is not available in a non-generic field");
	Scalar s;
	s.fd_ = fd;
	s.num_ = {{0, 1}, {1, 1}};
	return s;
}

Scalar Scalar::from_poly(const FieldDescriptor &fd, Poly num, Poly den)
{
	Scalar s;
	s.fd_ = fd;
	s.num_ = std::move(num);
	s.den_ = std::move(den);
	s.normalize();
	return s;
}

bool Scalar::is_one() const
{
	return num_.size() == 1 && ceq(num_[0], {1, 1}) && den_.size() == 1 && ceq(den_[0], {1, 1});
}

bool Scalar::is_constant() const { return num_.size() <= 1 && den_.size() == 1; }

static void check_fields(const Scalar &a, const Scalar &b)
{
	if (!(a.field() == b.field()))
		throw FieldMismatch();
}

Scalar operator+(const Scalar &a, const Scalar &b)
{
	check_fields(a, b);
	const auto &fd = a.field();
	Poly num = padd(fd, pmul(fd, a.num(), b.den()), pmul(fd, b.num(), a.den()));
	Poly den = pmul(fd, a.den(), b.den());
	return Scalar::from_poly(fd, std::move(num), std::move(den));
}

Scalar operator-(const Scalar &a, const Scalar &b)
{
	check_fields(a, b);
	const auto &fd = a.field();
	Poly num = psub(fd, pmul(fd, a.num(), b.den()), pmul(fd, b.num(), a.den()));
	Poly den = pmul(fd, a.den(), b.den());
	return Scalar::from_poly(fd, std::move(num), std::move(den));
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
	check_fields(a, b);
	const auto &fd = a.field();
	return Scalar::from_poly(fd, pmul(fd, a.num(), b.num()), pmul(fd, a.den(), b.den()));
}

Scalar operator/(const Scalar &a, const Scalar &b)
{
	check_fields(a, b);
	if (b.is_zero())
		throw DivisionByZero();
	const auto &fd = a.field();
	return Scalar::from_poly(fd, pmul(fd, a.num(), b.den()), pmul(fd, a.den(), b.num()));
}

Scalar Scalar::operator-() const
{
	Scalar r = *this;
	for (auto &c : r.num_)
		c = cneg(fd_, c);
	return r;
}

Scalar Scalar::inverse() const { return one(fd_) / *this; }

bool Scalar::operator==(const Scalar &b) const
{
	check_fields(*this, b);
	if (num_.size() != b.num_.size() || den_.size() != b.den_.size())
		return false;
	for (size_t i = 0; i < num_.size(); ++i)
		if (!ceq(num_[i], b.num_[i]))
			return false;
	for (size_t i = 0; i < den_.size(); ++i)
		if (!ceq(den_[i], b.den_[i]))
			return false;
	return true;
}

Scalar Scalar::specialize(const Scalar &value) const
{
	if (value.field().characteristic != fd_.characteristic)
		throw FieldMismatch();
	if (!value.is_constant())
		throw Error("specialization value must be a constant");
	FieldDescriptor target = value.field();
	Coef v = value.num_.empty() ? Coef{0, 1} : value.num_[0];
	Coef dn = peval(target, den_, v);
	if (czero(dn))
		throw PoleAtSpecialization("denominator " + poly_str(den_) + " vanishes at eta = " + value.str());
	Coef nm = peval(target, num_, v);
	Scalar r;
	r.fd_ = target;
	r.num_ = {nm};
	r.den_ = {dn};
	r.normalize();
	return r;
}

std::string Scalar::str() const
{
	if (den_.size() == 1) // denominator 1 (monic constant)
		return poly_str(num_);
	std::string n = pterms(num_) > 1 ? "(" + poly_str(num_) + ")" : poly_str(num_);
	std::string d = pterms(den_) > 1 ? "(" + poly_str(den_) + ")" : poly_str(den_);
	return n + "/" + d;
}

Scalar Scalar::parse(const FieldDescriptor &fd, const std::string &text)
{
	Parser p{fd, text};
	Scalar r = p.expr();
	p.skip();
	if (p.pos != text.size())
		throw ParseError("trailing characters in scalar expression: '" + text.substr(p.pos) + "'");
	return r;
}

} // namespace axial
