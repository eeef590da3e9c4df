#include "latmax/cdim2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "latmax/error.hpp"
#include "latmax/io.hpp"
#include "latmax/properties.hpp"
#include "latmax/sublattice.hpp"

namespace latmax {

namespace {

// 1-based helpers for one (identity, phi) geometry.
struct Positions {
	std::vector<std::size_t> inv;   // inv[x] = position of x in phi
	std::vector<int> pmax;          // pmax[k] = max(phi[1..k])
	std::vector<std::size_t> imax;  // imax[j] = max(inv[1..j])
};

Positions positions(const std::vector<int>& phi) {
	const std::size_t m = phi.size();
	Positions p;
	p.inv.assign(m + 1, 0);
	p.pmax.assign(m + 1, 0);
	p.imax.assign(m + 1, 0);
	for(std::size_t k = 1; k <= m; ++k) {
		p.inv[static_cast<std::size_t>(phi[k - 1])] = k;
		p.pmax[k] = std::max(p.pmax[k - 1], phi[k - 1]);
	}
	for(std::size_t j = 1; j <= m; ++j) p.imax[j] = std::max(p.imax[j - 1], p.inv[j]);
	return p;
}

std::vector<int> sorted(std::vector<int> v) {
	std::sort(v.begin(), v.end());
	return v;
}

std::string join_name(int j, int chain) {
	return "[(" + std::to_string(j) + "),C" + std::to_string(chain) + "(" + std::to_string(j) + ")]";
}

}  // namespace

const char* to_string(ComplementShape s) {
	switch(s) {
	case ComplementShape::IntervalChain1: return "IntervalChain1";
	case ComplementShape::IntervalChain2: return "IntervalChain2";
	case ComplementShape::UnionBothChains: return "UnionBothChains";
	}
	return "?";
}

const char* to_string(ComplementClass c) {
	switch(c) {
	case ComplementClass::Type1: return "Type1";
	case ComplementClass::Type2: return "Type2";
	case ComplementClass::Type3: return "Type3";
	}
	return "?";
}

ComplementShape complement_shape_from_string(const std::string& s) {
	if(s == "IntervalChain1") return ComplementShape::IntervalChain1;
	if(s == "IntervalChain2") return ComplementShape::IntervalChain2;
	if(s == "UnionBothChains") return ComplementShape::UnionBothChains;
	throw std::invalid_argument("unknown complement shape '" + s + "'");
}

ComplementClass complement_class_from_string(const std::string& s) {
	if(s == "Type1") return ComplementClass::Type1;
	if(s == "Type2") return ComplementClass::Type2;
	if(s == "Type3") return ComplementClass::Type3;
	throw std::invalid_argument("unknown complement class '" + s + "'");
}

FastResult fast_complements(std::size_t m, const std::vector<int>& phi) {
	validate_permutation(m, phi);
	FastResult result;
	OpCounter& ops = result.ops;

	// Steps 1-7. C_1(j) is the length j, C_2(j) the length inv[j];
	// (j) = C_2(j) iff pmax[inv[j]] <= j and (j) = C_1(j) iff imax[j] <= inv[j].
	const Positions p = positions(phi);
	ops.set_ops += 3 * m;

	auto emit = [&](int j, ComplementShape shape, ComplementClass cls, bool singleton) {
		result.complements.push_back({j, shape, cls, singleton});
	};

	for(std::size_t j = 1; j <= m; ++j) {
		const std::size_t at = p.inv[j];
		const int jj = static_cast<int>(j);
		const bool j_is_c2 = static_cast<std::size_t>(p.pmax[at]) <= j;
		const bool j_is_c1 = p.imax[j] <= at;

		// Step 10.
		ops.comparisons += 1;
		bool has_succ = at != m;
		bool same_step = false;
		if(has_succ) {
			ops.comparisons += 1;
			same_step = phi[at] == jj + 1;
		}
		if(same_step) {
			ops.comparisons += 1;
			if(j_is_c2) {
				emit(jj, ComplementShape::IntervalChain1, ComplementClass::Type2, j_is_c1);
				continue;
			}
			ops.comparisons += 1;
			if(j_is_c1) {
				emit(jj, ComplementShape::IntervalChain2, ComplementClass::Type2, false);
			} else {
				emit(jj, ComplementShape::UnionBothChains, ComplementClass::Type3, false);
			}
			continue;
		}
		// Step 21: j+1 in C_2(j).
		ops.comparisons += 1;
		if(j < m) {
			ops.comparisons += 1;
			if(p.inv[j + 1] <= at) emit(jj, ComplementShape::IntervalChain1, ComplementClass::Type1, j_is_c1);
		}
		// Step 24: phi(inv(j)+1) in C_1(j).
		ops.comparisons += 1;
		if(has_succ) {
			ops.comparisons += 1;
			if(phi[at] <= jj) emit(jj, ComplementShape::IntervalChain2, ComplementClass::Type1, j_is_c2);
		}
	}
	return result;
}

Complement materialize(const std::vector<int>& phi, const SymbolicComplement& s) {
	const std::size_t m = phi.size();
	const std::size_t j = static_cast<std::size_t>(s.j);
	if(s.j < 1 || j > m) throw std::out_of_range("complement index out of range");
	const Positions p = positions(phi);

	std::vector<int> c1;
	for(int x = 1; x <= s.j; ++x) c1.push_back(x);
	std::vector<int> c2 = sorted(std::vector<int>(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(p.inv[j])));
	std::vector<int> low;
	std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(low));

	Complement c{s.j, s.shape, s.cls, {}};
	if(s.shape != ComplementShape::IntervalChain2) c.intervals.push_back({low, c1});
	if(s.shape != ComplementShape::IntervalChain1) c.intervals.push_back({low, c2});
	return c;
}

std::vector<Complement> materialize_all(const std::vector<int>& phi, const std::vector<SymbolicComplement>& list) {
	std::vector<Complement> out;
	out.reserve(list.size());
	for(const auto& s : list) out.push_back(materialize(phi, s));
	return out;
}

ElementSubset to_element_subset(const ConvexGeometry& G, const Complement& c) {
	ElementSubset out = G.lattice().empty_subset();
	for(const auto& iv : c.intervals) out |= G.lattice().interval(G.id_of_points(iv.lo), G.id_of_points(iv.hi));
	return out;
}

std::string to_text(const Complement& c) {
	if(c.singleton()) return "{(" + std::to_string(c.j) + ")}";
	switch(c.shape) {
	case ComplementShape::IntervalChain1: return join_name(c.j, 1);
	case ComplementShape::IntervalChain2: return join_name(c.j, 2);
	case ComplementShape::UnionBothChains: return join_name(c.j, 1) + " u " + join_name(c.j, 2);
	}
	return "?";
}

std::string to_json(const std::vector<Complement>& list) {
	nlohmann::ordered_json arr = nlohmann::ordered_json::array();
	for(const auto& c : list) {
		nlohmann::ordered_json item;
		item["j"] = c.j;
		item["shape"] = to_string(c.shape);
		item["class"] = to_string(c.cls);
		nlohmann::ordered_json ivs = nlohmann::ordered_json::array();
		for(const auto& iv : c.intervals) ivs.push_back({iv.lo, iv.hi});
		item["intervals"] = ivs;
		arr.push_back(item);
	}
	return arr.dump();
}

std::vector<Complement> complements_from_json(const std::string& text) {
	auto arr = nlohmann::json::parse(text);
	std::vector<Complement> out;
	for(const auto& item : arr) {
		Complement c;
		c.j = item.at("j").get<int>();
		c.shape = complement_shape_from_string(item.at("shape").get<std::string>());
		c.cls = complement_class_from_string(item.at("class").get<std::string>());
		for(const auto& iv : item.at("intervals")) {
			c.intervals.push_back({iv.at(0).get<std::vector<int>>(), iv.at(1).get<std::vector<int>>()});
		}
		out.push_back(std::move(c));
	}
	return out;
}

std::vector<Complement> decompose_and_run(std::size_t m, const ChainSpec& first, const ChainSpec& second) {
	validate_permutation(m, first.perm);
	validate_permutation(m, second.perm);

	std::vector<int> relabel(m + 1);
	for(std::size_t k = 0; k < m; ++k) relabel[static_cast<std::size_t>(first.perm[k])] = static_cast<int>(k + 1);
	std::vector<int> phi(m);
	for(std::size_t k = 0; k < m; ++k) phi[k] = relabel[static_cast<std::size_t>(second.perm[k])];

	// Common prefixes of the two chains end at the cuts.
	std::vector<std::size_t> cuts{0};
	int running = 0;
	for(std::size_t k = 1; k <= m; ++k) {
		running = std::max(running, phi[k - 1]);
		if(static_cast<std::size_t>(running) == k) cuts.push_back(k);
	}

	auto lift = [&](const std::vector<int>& local, std::size_t shift) {
		std::vector<int> out;
		for(std::size_t x = 1; x <= shift; ++x) out.push_back(first.perm[x - 1]);
		for(int x : local) out.push_back(first.perm[static_cast<std::size_t>(x) + shift - 1]);
		return sorted(std::move(out));
	};

	std::vector<Complement> out;
	for(std::size_t b = 0; b + 1 < cuts.size(); ++b) {
		const std::size_t lo = cuts[b];
		const std::size_t size = cuts[b + 1] - lo;
		if(size >= 2) {
			std::vector<int> local(size);
			for(std::size_t q = 0; q < size; ++q) local[q] = phi[lo + q] - static_cast<int>(lo);
			for(const auto& s : fast_complements(size, local).complements) {
				Complement c = materialize(local, s);
				c.j = first.perm[static_cast<std::size_t>(s.j) + lo - 1];
				for(auto& iv : c.intervals) {
					iv.lo = lift(iv.lo, lo);
					iv.hi = lift(iv.hi, lo);
				}
				out.push_back(std::move(c));
			}
		}
		// A cut flanked by two one-point blocks is doubly irreducible.
		const std::size_t cut = cuts[b + 1];
		if(size == 1 && b + 2 < cuts.size() && cuts[b + 2] - cut == 1) {
			std::vector<int> pts = lift({}, cut);
			out.push_back({first.perm[cut - 1], ComplementShape::IntervalChain1, ComplementClass::Type2, {{pts, pts}}});
		}
	}
	return out;
}

ComplementClass classify_complement(const ConvexGeometry& G, const ElementSubset& C) {
	auto none = [](const std::string& why) {
		return GeometryError(GeometryError::Kind::NoCaseMatches, "no case of the classification fits: " + why);
	};
	if(G.chain_count() != 2) throw none("geometry does not have two chains");
	if(C.empty()) throw none("empty complement");
	const Lattice& L = G.lattice();
	const ElementId low = L.meet_of(C);
	if(!C.contains(low)) throw none("complement has no least element");
	int j = 0;
	for(int x = 1; x <= static_cast<int>(G.m()) && j == 0; ++x) {
		if(G.closure_pt(x) == low) j = x;
	}
	if(j == 0) throw none("least element is not a point closure");

	const std::size_t m = G.m();
	std::size_t pos[2] = {G.position(0, j), G.position(1, j)};
	ElementId c[2] = {G.c_index(0, j), G.c_index(1, j)};
	// Point added by the chain-i cover of C_i(j), 0 when C_i(j) is the top.
	int step[2] = {pos[0] < m ? G.point_at(0, pos[0] + 1) : 0, pos[1] < m ? G.point_at(1, pos[1] + 1) : 0};

	std::set<ComplementClass> matched;
	for(std::size_t i = 0; i < 2; ++i) {
		const std::size_t o = 1 - i;
		if(L.interval(low, c[i]) != C) continue;
		const bool on_other = G.on_chain(o, low);
		if(!on_other) {
			bool drops = step[i] == 0 || G.position(o, step[i]) < pos[o];
			if(drops) matched.insert(ComplementClass::Type1);
		} else {
			bool together = step[i] == 0 || G.position(o, step[i]) == pos[o] + 1;
			if(together) matched.insert(ComplementClass::Type2);
		}
	}
	if((L.interval(low, c[0]) | L.interval(low, c[1])) == C && !G.on_chain(0, low) && !G.on_chain(1, low)
			&& step[0] != 0 && step[0] == step[1]) {
		matched.insert(ComplementClass::Type3);
	}
	if(matched.empty()) throw none("j=" + std::to_string(j));
	if(matched.size() > 1) {
		throw GeometryError(GeometryError::Kind::NoCaseMatches,
				"more than one case of the classification fits at j=" + std::to_string(j));
	}
	return *matched.begin();
}

CheckReport lemma_suite_64_65(const ConvexGeometry& G) {
	CheckReport report;
	report.claim = "lemma64_65";
	report.corpus = "single geometry";
	if(G.chain_count() != 2 || !has_trivial_intersection(G)) {
		report.status = CheckStatus::Skipped;
		report.note = "needs two chains with trivial intersection";
		return report;
	}
	const Lattice& L = G.lattice();
	const std::size_t m = G.m();
	auto removable = [&](const ElementSubset& S) { return is_sublattice(L, ~S); };
	auto fail = [&](const ElementSubset& S, std::vector<ElementId> elements, const std::string& detail) {
		report.fail(Witness{write_cover_list(L), (~S).elements(), S.elements(), std::move(elements), detail});
	};

	std::optional<Witness> excluded;
	for(int j = 1; j <= static_cast<int>(m); ++j) {
		std::size_t pos[2] = {G.position(0, j), G.position(1, j)};
		if(pos[0] == m || pos[1] == m) continue;
		++report.instances_checked;
		const ElementId low = G.closure_pt(j);
		ElementId c[2] = {G.c_index(0, j), G.c_index(1, j)};
		int x[2] = {G.point_at(0, pos[0] + 1), G.point_at(1, pos[1] + 1)};
		ElementSubset iv[2] = {L.interval(low, c[0]), L.interval(low, c[1])};
		const std::string at = " at j=" + std::to_string(j);

		if(x[0] == x[1]) {
			const ElementId px = G.closure_pt(x[0]);
			if(!G.on_chain(0, px) && !G.on_chain(1, px)) {
				if(G.on_chain(0, low) || G.on_chain(1, low)) {
					fail(iv[0] | iv[1], {low, px}, "(j) on a chain although (x) is on neither" + at);
					return report;
				}
				if(!removable(iv[0] | iv[1])) {
					fail(iv[0] | iv[1], {low}, "union of the two intervals is not a sublattice complement" + at);
					return report;
				}
			}
			for(std::size_t i = 0; i < 2; ++i) {
				if(!G.on_chain(i, px)) continue;
				if(low != c[i]) {
					fail(iv[i], {low, c[i]}, "(j) differs from C_i(j) although (x) is on chain i" + at);
					return report;
				}
				if(!removable(iv[1 - i])) {
					fail(iv[1 - i], {low, c[1 - i]}, "[(j),C_i'(j)] is not a sublattice complement" + at);
					return report;
				}
			}
			continue;
		}

		bool inside[2];
		for(std::size_t i = 0; i < 2; ++i) inside[i] = G.set_of(c[1 - i]).contains(static_cast<ElementId>(x[i] - 1));
		for(std::size_t i = 0; i < 2; ++i) {
			bool ok = removable(iv[i]);
			if(inside[i] && !ok) {
				fail(iv[i], {low, c[i]}, "[(j),C_i(j)] is not a sublattice complement" + at);
				return report;
			}
			if(!inside[i] && ok && !excluded) {
				excluded = Witness{write_cover_list(L), (~iv[i]).elements(), iv[i].elements(), {low, c[i]},
						"[(j),C_i(j)] is a sublattice complement in the excluded case" + at};
			}
		}
	}

	// The remaining parts are about a maximal join-irreducible (j) of a
	// complement C, here the complements of maximal sublattices.
	std::vector<int> point_of(L.size(), 0);
	for(int j = 1; j <= static_cast<int>(m); ++j) point_of[G.closure_pt(j)] = j;
	for(const ElementSubset& C : maximal_complements_oracle(L)) {
		for(ElementId e : C.elements()) {
			if(!is_join_irreducible(L, e)) continue;
			bool top_ji = true;
			for(ElementId f : C.elements()) {
				if(f != e && L.leq(e, f) && is_join_irreducible(L, f)) top_ji = false;
			}
			if(!top_ji) continue;
			const int j = point_of[e];
			std::size_t pos[2] = {G.position(0, j), G.position(1, j)};
			if(pos[0] == m || pos[1] == m) continue;
			++report.instances_checked;
			ElementId c[2] = {G.c_index(0, j), G.c_index(1, j)};
			int x[2] = {G.point_at(0, pos[0] + 1), G.point_at(1, pos[1] + 1)};
			ElementSubset iv[2] = {L.interval(e, c[0]), L.interval(e, c[1])};
			const std::string at = " at j=" + std::to_string(j);
			auto subset = [&](const ElementSubset& S) { return (S & C) == S; };

			if(x[0] == x[1]) {
				if(!subset(iv[0] | iv[1])) {
					fail(C, {e}, "union of the two intervals is not inside the complement" + at);
					return report;
				}
				continue;
			}
			bool inside[2];
			for(std::size_t i = 0; i < 2; ++i) inside[i] = G.set_of(c[1 - i]).contains(static_cast<ElementId>(x[i] - 1));
			if(!inside[0] && !inside[1]) {
				fail(C, {e}, "neither cover point lies in the other chain prefix" + at);
				return report;
			}
			for(std::size_t i = 0; i < 2; ++i) {
				if(inside[i] && !subset(iv[i]) && !(inside[1 - i] && subset(iv[1 - i]))) {
					fail(C, {e, c[i]}, "neither interval lies inside the complement" + at);
					return report;
				}
			}
			bool some_side = false;
			for(std::size_t i = 0; i < 2; ++i) some_side = some_side || (inside[i] && subset(iv[i]) && removable(iv[i]));
			if(!some_side) {
				fail(C, {e}, "no side gives a sublattice complement inside C" + at);
				return report;
			}
		}
	}
	// The negative case runs last so the positive parts are always reported.
	if(excluded) report.fail(*excluded);
	return report;
}

}  // namespace latmax
