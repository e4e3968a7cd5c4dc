#include "axial/universal.hpp"

#include <set>
#include <unordered_map>

namespace axial {

int TermSpace::count_up_to(int size) const
{
	int total = 0;
	for (int k = 0; k < (int)size_counts.size() && k < size; ++k)
		total += size_counts[k];
	return total;
}

int TermSpace::unary(int label, int axis, int id) const
{
	auto it = index.find({Unary, label * n + axis, id});
	return it == index.end() ? -1 : it->second;
}

int TermSpace::product(int id1, int id2) const
{
	if (id1 > id2)
		std::swap(id1, id2);
	auto it = index.find({Product, id1, id2});
	return it == index.end() ? -1 : it->second;
}

std::string TermSpace::str(int id) const
{
	const Term &t = terms[id];
	switch (t.kind) {
	case Leaf:
		return "x" + std::to_string(t.sym + 1);
	case Unary:
		return unary_labels[t.sym / n] + "@" + std::to_string(t.sym % n + 1) + "(" + str(t.c1) + ")";
	default:
		return "(" + str(t.c1) + " " + str(t.c2) + ")";
	}
}

TermSpace enumerate_terms(int n, const std::vector<std::string> &unary_labels, int N, long guard)
{
	if (n < 1 || N < 1)
		throw BadParameter("need at least one generator and a positive size bound");
	TermSpace ts;
	ts.n = n;
	ts.unary_labels = unary_labels;
	ts.bound = N;
	int syms = n * (int)unary_labels.size();

	auto add = [&](TermSpace::Term t, std::array<int, 3> key) {
		if ((long)ts.terms.size() >= guard)
			throw BoundTooLarge(guard);
		ts.index.emplace(key, (int)ts.terms.size());
		ts.terms.push_back(t);
	};

	std::vector<int> first(N + 2, 0); // first id of each size
	for (int s = 1; s <= N; ++s) {
		first[s] = (int)ts.terms.size();
		if (s == 1) {
			for (int a = 0; a < n; ++a)
				add({TermSpace::Leaf, a, -1, -1, 1}, {TermSpace::Leaf, a, -1});
		} else {
			for (int sym = 0; sym < syms; ++sym)
				for (int c = first[s - 1]; c < first[s]; ++c)
					add({TermSpace::Unary, sym, c, -1, s}, {TermSpace::Unary, sym, c});
		}
		for (int c1 = 0; c1 < first[s]; ++c1) {
			int s2 = s - ts.terms[c1].size;
			if (s2 < ts.terms[c1].size)
				continue;
			for (int c2 = std::max(c1, first[s2]); c2 < first[s2 + 1]; ++c2)
				add({TermSpace::Product, -1, c1, c2, s}, {TermSpace::Product, c1, c2});
		}
		ts.size_counts.push_back((int)ts.terms.size() - first[s]);
		first[s + 1] = (int)ts.terms.size();
	}
	return ts;
}

std::string term_vec_str(const TermSpace &ts, const TermVec &v)
{
	if (v.empty())
		return "0";
	std::string out;
	for (auto &[id, c] : v) {
		if (!out.empty())
			out += " + ";
		out += "(" + c.str() + ")*" + ts.str(id);
	}
	return out;
}

namespace {

void row_add(TermVec &row, int id, const Scalar &c)
{
	auto [it, fresh] = row.emplace(id, c);
	if (!fresh) {
		it->second = it->second + c;
		if (it->second.is_zero())
			row.erase(it);
	}
}

std::string row_key(const TermVec &row)
{
	// scale-normalized textual form, for duplicate elimination
	if (row.empty())
		return "";
	Scalar lead = row.rbegin()->second;
	std::string key;
	for (auto &[id, c] : row)
		key += std::to_string(id) + ":" + (c / lead).str() + ";";
	return key;
}

} // namespace

std::vector<TermVec> relation_instances(const FusionRule &f, const TermSpace &ts, RelationLevel level)
{
	if (f.labels != ts.unary_labels)
		throw BadParameter("term space unary labels do not match the fusion rule");
	const FieldDescriptor &fd = f.fd;
	int n = ts.n, L = f.size(), total = ts.count();
	Scalar one = Scalar::one(fd);

	std::vector<TermVec> rows;
	std::set<std::string> seen;
	auto emit = [&](TermVec row) {
		if (row.empty())
			return;
		if (seen.insert(row_key(row)).second)
			rows.push_back(std::move(row));
	};

	// (1) every term equals the sum of its projections along any axis
	for (int j = 0; j < n; ++j)
		for (int x = 0; x < total; ++x) {
			if (ts.terms[x].size + 1 > ts.bound)
				break;
			TermVec row{{x, one}};
			for (int s = 0; s < L; ++s)
				row_add(row, ts.unary(s, j, x), -one);
			emit(std::move(row));
		}

	// (2) products of projections land inside the fused labels;
	// the factor pair ((s,x),(t,y)) is unordered
	for (int j = 0; j < n; ++j)
		for (int s = 0; s < L; ++s)
			for (int t = s; t < L; ++t)
				for (int x = 0; x < total; ++x) {
					if (ts.terms[x].size + 4 > ts.bound)
						break;
					for (int y = (s == t) ? x : 0; y < total; ++y) {
						if (ts.terms[x].size + ts.terms[y].size + 3 > ts.bound)
							break;
						int p = ts.product(ts.unary(s, j, x), ts.unary(t, j, y));
						for (int u = 0; u < L; ++u) {
							if (f.star_contains(s, t, u))
								continue;
							emit({{ts.unary(u, j, p), one}});
						}
					}
				}

	for (int j = 0; j < n; ++j)
		for (int s = 0; s < L; ++s)
			for (int t = 0; t < L; ++t)
				for (int x = 0; x < total; ++x) {
					if (ts.terms[x].size + 2 > ts.bound)
						break;
					int tx = ts.unary(t, j, x);
					if (s == t) {
						// (3) projections are idempotent maps
						TermVec row{{ts.unary(s, j, tx), one}};
						row_add(row, tx, -one);
						emit(std::move(row));
					} else {
						// (4) distinct projections along one axis annihilate
						emit({{ts.unary(s, j, tx), one}});
					}
				}

	// (5) projected vectors are eigenvectors of the generator
	if (level != RelationLevel::Decomposition)
		for (int j = 0; j < n; ++j)
			for (int s = 0; s < L; ++s)
				for (int x = 0; x < total; ++x) {
					if (ts.terms[x].size + 2 > ts.bound)
						break;
					int sx = ts.unary(s, j, x);
					TermVec row{{ts.product(j, sx), one}};
					row_add(row, sx, -f.lambda[s]);
					emit(std::move(row));
				}

	// (6) the generators are idempotent
	if (level == RelationLevel::AxialAlgebra && ts.bound >= 2)
		for (int j = 0; j < n; ++j) {
			TermVec row{{ts.product(j, j), one}};
			row_add(row, j, -one);
			emit(std::move(row));
		}

	// the tower: unary symbols applied to relation elements stay relations
	for (size_t fresh = 0; fresh < rows.size(); ++fresh)
		for (int sym = 0; sym < n * L; ++sym) {
			TermVec mapped;
			bool fits = true;
			for (auto &[id, c] : rows[fresh]) {
				int m = ts.unary(sym / n, sym % n, id);
				if (m < 0) {
					fits = false;
					break;
				}
				row_add(mapped, m, c);
			}
			if (fits)
				emit(std::move(mapped));
		}
	return rows;
}

Truncation truncated_quotient(int n, const FusionRule &f, int N, RelationLevel level, long guard)
{
	Truncation t{enumerate_terms(n, f.labels, N, guard), f, {}, {}, {}};
	t.relations = relation_instances(f, t.terms, level);

	// forward elimination, pivot = largest term id of each row; because term
	// ids grow with size, every pivot row is supported inside the size window
	// of its pivot, so pivot counts per window are exact ranks there
	std::unordered_map<int, TermVec> pivot_rows;
	auto reduce = [&](TermVec row) {
		while (!row.empty()) {
			bool changed = false;
			for (auto it = row.rbegin(); it != row.rend(); ++it) {
				auto p = pivot_rows.find(it->first);
				if (p == pivot_rows.end())
					continue;
				Scalar c = it->second;
				row.erase(it->first); // stored pivot rows omit their pivot entry
				for (auto &[id, pc] : p->second)
					row_add(row, id, -(c * pc));
				changed = true;
				break;
			}
			if (!changed)
				break;
		}
		return row;
	};
	for (auto &r : t.relations) {
		TermVec row = reduce(r);
		if (row.empty())
			continue;
		auto lead = row.rbegin();
		Scalar inv = Scalar::one(f.fd) / lead->second;
		int piv = lead->first;
		for (auto &[id, c] : row)
			c = c * inv;
		row.erase(piv);
		pivot_rows.emplace(piv, std::move(row));
	}

	for (int id = 0; id < t.terms.count(); ++id)
		if (!pivot_rows.count(id))
			t.monomial_basis.push_back(id);
	for (int k = 1; k <= N; ++k) {
		int limit = t.terms.count_up_to(k), pivots = 0;
		for (auto &[id, row] : pivot_rows)
			if (id < limit)
				++pivots;
		t.window_dims.push_back(limit - pivots);
	}
	return t;
}

HomReport truncated_hom_onto(const Truncation &t, const PresentedAlgebra &target)
{
	const Algebra &a = target.algebra;
	const TermSpace &ts = t.terms;
	if ((int)target.generators.size() != ts.n)
		throw DimensionMismatch();
	if (a.fd != t.rule.fd)
		throw FieldMismatch();
	int L = t.rule.size();

	std::vector<std::vector<MatrixE>> proj; // proj[j][s]
	for (int j = 0; j < ts.n; ++j) {
		proj.emplace_back();
		for (int s = 0; s < L; ++s)
			proj[j].push_back(projection_via_polynomial(a, target.generators[j], t.rule, s));
	}

	std::vector<Vec> val(ts.count());
	for (int id = 0; id < ts.count(); ++id) {
		const TermSpace::Term &term = ts.terms[id];
		switch (term.kind) {
		case TermSpace::Leaf:
			val[id] = target.generators[term.sym];
			break;
		case TermSpace::Unary:
			val[id] = proj[term.sym % ts.n][term.sym / ts.n].apply(val[term.c1]);
			break;
		default:
			val[id] = multiply(a, val[term.c1], val[term.c2]);
		}
	}

	for (auto &row : t.relations) {
		Vec image = zero_vec(a.fd, a.dim());
		for (auto &[id, c] : row)
			image = vec_add(image, vec_scale(c, val[id]));
		if (!vec_is_zero(image))
			throw TargetViolatesRelations(term_vec_str(ts, row) + " evaluates to " +
			                              format_vector(a, image));
	}

	Subspace span = Subspace::zero(a.fd, a.dim());
	for (int id = 0; id < ts.count() && span.dim() < a.dim(); ++id)
		span = subspace_sum(span, Subspace::span(a.fd, a.dim(), {val[id]}));
	return {span.dim() == a.dim(), span.dim()};
}

} // namespace axial
