#include "axial/algebra.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace axial {

namespace {

bool is_name_char(char c)
{
	return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string strip(const std::string &s)
{
	size_t b = s.find_first_not_of(" \t\r\n");
	if (b == std::string::npos)
		return "";
	size_t e = s.find_last_not_of(" \t\r\n");
	return s.substr(b, e - b + 1);
}

/// Splits a sum into signed chunks at paren depth zero.
std::vector<std::string> split_terms(const std::string &text)
{
	std::vector<std::string> chunks;
	std::string cur;
	int depth = 0;
	for (size_t i = 0; i < text.size(); ++i) {
		char c = text[i];
		if (c == '(')
			++depth;
		else if (c == ')')
			--depth;
		if (depth == 0 && (c == '+' || c == '-') && !strip(cur).empty()) {
			chunks.push_back(strip(cur));
			cur.clear();
			if (c == '-')
				cur = "-";
			continue;
		}
		cur += c;
	}
	if (!strip(cur).empty())
		chunks.push_back(strip(cur));
	return chunks;
}

} // namespace

Vec parse_vector(const Algebra &a, const std::string &text)
{
	Vec v = zero_vec(a.fd, a.dim());
	std::string body = strip(text);
	if (body.empty())
		throw ParseError("empty vector");
	if (body == "0")
		return v;
	for (auto &chunk : split_terms(body)) {
		std::string t = chunk;
		Scalar sign = Scalar::one(a.fd);
		if (!t.empty() && t[0] == '-') {
			sign = -sign;
			t = strip(t.substr(1));
		}
		// the basis name is the trailing identifier; anything before `*` is the coefficient
		size_t star = t.rfind('*');
		std::string coeff_text = "1", name = t;
		if (star != std::string::npos) {
			coeff_text = strip(t.substr(0, star));
			name = strip(t.substr(star + 1));
		}
		if (name.empty())
			throw ParseError("missing basis label in vector term: " + chunk);
		for (char c : name)
			if (!is_name_char(c))
				throw ParseError("bad basis label: " + name);
		int idx = a.label_index(name);
		v[idx] += sign * Scalar::parse(a.fd, coeff_text);
	}
	return v;
}

std::string format_vector(const Algebra &a, const Vec &v)
{
	std::string out;
	for (int i = 0; i < a.dim(); ++i) {
		if (v[i].is_zero())
			continue;
		std::string c = v[i].str();
		std::string term;
		if (c == "1")
			term = a.basis_labels[i];
		else if (c == "-1")
			term = "-" + a.basis_labels[i];
		else {
			bool simple = c.find_first_of("+-/") == std::string::npos ||
			              (c[0] == '-' && c.find_first_of("+-/", 1) == std::string::npos);
			term = (simple ? c : "(" + c + ")") + "*" + a.basis_labels[i];
		}
		if (out.empty())
			out = term;
		else if (term[0] == '-')
			out += term;
		else
			out += "+" + term;
	}
	return out.empty() ? "0" : out;
}

void write_algebra(std::ostream &os, const PresentedAlgebra &p, const std::string &eta_text)
{
	const Algebra &a = p.algebra;
	os << "algebra dim=" << a.dim() << " char=" << a.fd.characteristic << " eta="
	   << (a.fd.generic_eta ? std::string("generic") : eta_text) << "\n";
	os << "basis";
	for (auto &l : a.basis_labels)
		os << " " << l;
	os << "\n";
	for (int i = 0; i < a.dim(); ++i)
		for (int j = i; j < a.dim(); ++j) {
			if (vec_is_zero(a.sc[i][j]))
				continue;
			os << "sc " << i << " " << j << " = " << format_vector(a, a.sc[i][j]) << "\n";
		}
	os << "gens";
	for (size_t g = 0; g < p.generators.size(); ++g)
		os << (g ? ";" : " ") << format_vector(a, p.generators[g]);
	os << "\n";
}

PresentedAlgebra read_algebra(std::istream &is)
{
	PresentedAlgebra p;
	Algebra &a = p.algebra;
	int n = -1;
	bool saw_header = false, saw_basis = false, saw_gens = false;
	std::string line;
	while (std::getline(is, line)) {
		line = strip(line);
		if (line.empty() || line[0] == '#')
			continue;
		std::istringstream ls(line);
		std::string kw;
		ls >> kw;
		if (kw == "algebra") {
			std::string tok;
			std::uint32_t ch = 0;
			std::string eta_mode;
			while (ls >> tok) {
				size_t eq = tok.find('=');
				if (eq == std::string::npos)
					throw ParseError("bad header token: " + tok);
				std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
				if (key == "dim")
					n = std::stoi(val);
				else if (key == "char")
					ch = (std::uint32_t)std::stoul(val);
				else if (key == "eta")
					eta_mode = val;
				else
					throw ParseError("unknown header key: " + key);
			}
			if (n < 0 || eta_mode.empty())
				throw ParseError("incomplete algebra header");
			a.fd = FieldDescriptor(ch, eta_mode == "generic");
			saw_header = true;
		} else if (kw == "basis") {
			if (!saw_header)
				throw ParseError("basis line before algebra header");
			std::string name;
			while (ls >> name)
				a.basis_labels.push_back(name);
			if (a.dim() != n)
				throw ParseError("basis size does not match dim");
			a.sc.assign(n, std::vector<Vec>(n, zero_vec(a.fd, n)));
			saw_basis = true;
		} else if (kw == "sc") {
			if (!saw_basis)
				throw ParseError("sc line before basis line");
			int i, j;
			std::string eq;
			if (!(ls >> i >> j >> eq) || eq != "=")
				throw ParseError("bad sc line: " + line);
			if (i < 0 || i >= n || j < 0 || j >= n)
				throw ParseError("sc index out of range: " + line);
			std::string rest;
			std::getline(ls, rest);
			Vec v = parse_vector(a, rest);
			a.sc[i][j] = v;
			a.sc[j][i] = std::move(v);
		} else if (kw == "gens") {
			if (!saw_basis)
				throw ParseError("gens line before basis line");
			std::string rest;
			std::getline(ls, rest);
			std::string cur;
			std::istringstream parts(rest);
			while (std::getline(parts, cur, ';'))
				p.generators.push_back(parse_vector(a, cur));
			saw_gens = true;
		} else {
			throw ParseError("unknown line: " + line);
		}
	}
	if (!saw_header || !saw_basis || !saw_gens)
		throw ParseError("algebra file missing header, basis or gens line");
	return p;
}

} // namespace axial
