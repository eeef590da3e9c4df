#include "latmax/convex_geometry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "latmax/error.hpp"
#include "latmax/io.hpp"
#include "latmax/properties.hpp"

namespace latmax {

namespace {

std::optional<std::string> cg_invariant_violation(const ConvexGeometry& G) {
	const Lattice& L = G.lattice();
	for(auto [a, b] : L.cover_pairs()) {
		if(G.set_of(b).count() != G.set_of(a).count() + 1) return "cover adds more than one point";
	}
	for(ElementId a = 0; a < L.size(); ++a) {
		if(is_meet_irreducible(L, a)) {
			bool somewhere = false;
			for(std::size_t i = 0; i < G.chain_count(); ++i) somewhere = somewhere || G.on_chain(i, a);
			if(!somewhere) return "meet-irreducible " + G.describe(a) + " is on no chain";
		}
		ElementSubset cut = ElementSubset::full(G.m());
		for(std::size_t i = 0; i < G.chain_count(); ++i) cut &= G.set_of(chain_prefix(G, i, a));
		if(cut != G.set_of(a)) return G.describe(a) + " is not the meet of its chain prefixes";
	}
	if(!is_sd_join(L)) return "lattice view is not join-semidistributive";
	if(!is_lower_semimodular(L)) return "lattice view is not lower semimodular";
	return std::nullopt;
}

// Kuhn's augmenting paths on the strict order restricted to `nodes`.
std::size_t max_matching(const Lattice& L, const std::vector<ElementId>& nodes) {
	const std::size_t k = nodes.size();
	std::vector<int> match_right(k, -1);
	std::vector<char> seen;
	std::function<bool(std::size_t)> augment = [&](std::size_t u) {
		for(std::size_t v = 0; v < k; ++v) {
			if(!L.lt(nodes[u], nodes[v]) || seen[v]) continue;
			seen[v] = 1;
			if(match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
				match_right[v] = static_cast<int>(u);
				return true;
			}
		}
		return false;
	};
	std::size_t matched = 0;
	for(std::size_t u = 0; u < k; ++u) {
		seen.assign(k, 0);
		if(augment(u)) ++matched;
	}
	return matched;
}

}  // namespace

void validate_permutation(std::size_t m, const std::vector<int>& perm) {
	if(perm.size() != m) {
		throw GeometryError(GeometryError::Kind::BadPermutation,
				"permutation has " + std::to_string(perm.size()) + " entries, expected " + std::to_string(m));
	}
	std::vector<char> seen(m + 1, 0);
	for(int v : perm) {
		if(v < 1 || static_cast<std::size_t>(v) > m || seen[static_cast<std::size_t>(v)]) {
			throw GeometryError(GeometryError::Kind::BadPermutation, "not a permutation of 1.." + std::to_string(m));
		}
		seen[static_cast<std::size_t>(v)] = 1;
	}
}

std::optional<ElementId> ConvexGeometry::find(const ElementSubset& points) const {
	auto it = index_.find(points);
	if(it == index_.end()) return std::nullopt;
	return it->second;
}

ElementId ConvexGeometry::id_of(const ElementSubset& points) const {
	auto id = find(points);
	if(!id) throw LatticeError(LatticeError::Kind::BadInput, "point set is not a member of the geometry");
	return *id;
}

ElementId ConvexGeometry::id_of_points(const std::vector<int>& pts) const {
	return id_of(point_set(pts));
}

std::vector<bool> ConvexGeometry::chain_member(ElementId a) const {
	std::vector<bool> out(chains_.size());
	for(std::size_t i = 0; i < chains_.size(); ++i) out[i] = on_chain(i, a);
	return out;
}

std::vector<int> ConvexGeometry::points(ElementId a) const {
	std::vector<int> out;
	family_[a].for_each([&](ElementId b) { out.push_back(static_cast<int>(b) + 1); });
	return out;
}

ElementSubset ConvexGeometry::point_set(const std::vector<int>& pts) const {
	ElementSubset s(m_);
	for(int x : pts) {
		if(x < 1 || static_cast<std::size_t>(x) > m_) throw LatticeError(LatticeError::Kind::BadInput, "point out of range");
		s.insert(static_cast<ElementId>(x - 1));
	}
	return s;
}

std::string ConvexGeometry::describe(ElementId a) const {
	std::string out = "{";
	bool first = true;
	for(int x : points(a)) {
		if(!first) out += ',';
		out += std::to_string(x);
		first = false;
	}
	return out + "}";
}

ConvexGeometry build_cg(std::size_t m, const std::vector<ChainSpec>& chains, bool verify) {
	if(chains.empty()) throw GeometryError(GeometryError::Kind::BadPermutation, "need at least one chain");
	if(m == 0) throw GeometryError(GeometryError::Kind::BadPermutation, "ground set is empty");
	for(const auto& c : chains) validate_permutation(m, c.perm);

	ConvexGeometry G;
	G.m_ = m;
	G.chains_ = chains;

	std::unordered_set<ElementSubset> seen;
	std::vector<ElementSubset> members;
	auto add = [&](ElementSubset s) {
		if(seen.insert(s).second) members.push_back(std::move(s));
	};
	for(const auto& c : chains) {
		ElementSubset prefix(m);
		add(prefix);
		for(int x : c.perm) {
			prefix.insert(static_cast<ElementId>(x - 1));
			add(prefix);
		}
	}
	for(std::size_t i = 0; i < members.size(); ++i) {
		for(std::size_t k = 0; k < i; ++k) add(members[i] & members[k]);
	}

	std::sort(members.begin(), members.end(), [](const ElementSubset& a, const ElementSubset& b) {
		if(a.count() != b.count()) return a.count() < b.count();
		return a < b;
	});
	const std::size_t n = members.size();
	std::vector<ElementSubset> up(n, ElementSubset(n));
	for(std::size_t a = 0; a < n; ++a) {
		for(std::size_t b = a; b < n; ++b) {
			if(members[a].is_subset_of(members[b])) up[a].insert(static_cast<ElementId>(b));
		}
	}
	G.family_ = std::move(members);
	for(std::size_t a = 0; a < n; ++a) G.index_.emplace(G.family_[a], static_cast<ElementId>(a));
	G.lattice_ = Lattice::from_up_sets(std::move(up));

	const std::size_t k = chains.size();
	G.pos_.assign(k, std::vector<std::size_t>(m + 1, 0));
	G.prefix_.assign(k, std::vector<ElementId>(m + 1, 0));
	G.on_chain_.assign(k, ElementSubset(n));
	for(std::size_t i = 0; i < k; ++i) {
		ElementSubset prefix(m);
		G.prefix_[i][0] = G.index_.at(prefix);
		G.on_chain_[i].insert(G.prefix_[i][0]);
		for(std::size_t p = 1; p <= m; ++p) {
			int x = chains[i].perm[p - 1];
			G.pos_[i][static_cast<std::size_t>(x)] = p;
			prefix.insert(static_cast<ElementId>(x - 1));
			G.prefix_[i][p] = G.index_.at(prefix);
			G.on_chain_[i].insert(G.prefix_[i][p]);
		}
	}
	G.closure_.assign(m + 1, 0);
	for(int x = 1; x <= static_cast<int>(m); ++x) {
		ElementSubset s = ElementSubset::full(m);
		for(std::size_t i = 0; i < k; ++i) s &= G.family_[G.c_index(i, x)];
		G.closure_[static_cast<std::size_t>(x)] = G.index_.at(s);
	}

	if(verify) {
		if(auto bad = cg_invariant_violation(G)) throw std::logic_error("convex geometry invariant: " + *bad);
	}
	return G;
}

ConvexGeometry build_cdim2(const std::vector<int>& phi, bool verify) {
	std::vector<int> identity(phi.size());
	for(std::size_t i = 0; i < phi.size(); ++i) identity[i] = static_cast<int>(i + 1);
	return build_cg(phi.size(), {ChainSpec{identity}, ChainSpec{phi}}, verify);
}

ElementId chain_prefix(const ConvexGeometry& G, std::size_t i, ElementId a) {
	std::size_t k = 0;
	G.set_of(a).for_each([&](ElementId b) { k = std::max(k, G.position(i, static_cast<int>(b) + 1)); });
	return G.prefix(i, k);
}

std::optional<ElementId> try_least_mi_on_chain(const ConvexGeometry& G, std::size_t i, int x) {
	for(std::size_t k = G.position(i, x); k < G.m(); ++k) {
		ElementId p = G.prefix(i, k);
		if(is_meet_irreducible(G.lattice(), p)) return p;
	}
	return std::nullopt;
}

ElementId least_mi_on_chain(const ConvexGeometry& G, std::size_t i, int x) {
	auto mi = try_least_mi_on_chain(G, i, x);
	if(!mi) {
		throw GeometryError(GeometryError::Kind::TopOnly,
				"only the full set qualifies for M_" + std::to_string(i + 1) + "(" + std::to_string(x) + ")");
	}
	return *mi;
}

ElementId point_closure(const ConvexGeometry& G, int x) {
	return G.closure_pt(x);
}

std::size_t cdim(const ConvexGeometry& G) {
	const Lattice& L = G.lattice();
	std::vector<ElementId> mi = irreducibles(L).mi.elements();
	return mi.size() - max_matching(L, mi);
}

bool has_trivial_intersection(const ConvexGeometry& G) {
	const Lattice& L = G.lattice();
	for(ElementId a = 0; a < L.size(); ++a) {
		if(a == L.bottom() || a == L.top()) continue;
		bool everywhere = true;
		for(std::size_t i = 0; i < G.chain_count(); ++i) everywhere = everywhere && G.on_chain(i, a);
		if(everywhere) return false;
	}
	return true;
}

CheckReport lemma_63_suite(const ConvexGeometry& G) {
	CheckReport report;
	report.claim = "lemma63";
	report.corpus = "single geometry";
	report.instances_checked = 1;
	if(G.chain_count() != 2) {
		report.status = CheckStatus::Skipped;
		report.note = "needs exactly two chains";
		return report;
	}
	const Lattice& L = G.lattice();
	const int m = static_cast<int>(G.m());
	auto fail = [&](std::vector<ElementId> elements, const std::string& detail) {
		report.fail(Witness{write_cover_list(L), {}, {}, std::move(elements), detail});
	};

	for(int x = 1; x <= m; ++x) {
		const ElementId px = G.closure_pt(x);
		const ElementId c[2] = {G.c_index(0, x), G.c_index(1, x)};
		const std::optional<ElementId> mi[2] = {try_least_mi_on_chain(G, 0, x), try_least_mi_on_chain(G, 1, x)};
		const std::string at = " at x=" + std::to_string(x);

		// (1)
		if(L.meet(c[0], c[1]) != px) {
			fail({px, c[0], c[1]}, "(x) is not C1(x) ^ C2(x)" + at);
			return report;
		}
		if(mi[0] && mi[1]) {
			if(L.meet(*mi[0], *mi[1]) != px) {
				fail({px, *mi[0], *mi[1]}, "(x) is not M1(x) ^ M2(x)" + at);
				return report;
			}
			for(ElementId c1 : L.interval(px, *mi[0]).elements()) {
				for(ElementId c2 : L.interval(px, *mi[1]).elements()) {
					if(L.meet(c1, c2) != px) {
						fail({px, c1, c2}, "c1 ^ c2 differs from (x)" + at);
						return report;
					}
				}
			}
			// (2)
			if((L.interval(px, *mi[0]) & L.interval(px, *mi[1])) != ElementSubset::of(L.size(), {px})) {
				fail({px, *mi[0], *mi[1]}, "[(x),M1(x)] and [(x),M2(x)] share more than (x)" + at);
				return report;
			}
		}
		if((L.interval(px, c[0]) & L.interval(px, c[1])) != ElementSubset::of(L.size(), {px})) {
			fail({px, c[0], c[1]}, "[(x),C1(x)] and [(x),C2(x)] share more than (x)" + at);
			return report;
		}

		for(std::size_t i = 0; i < 2; ++i) {
			// (6)
			std::size_t p = G.position(i, x);
			ElementSubset lower = L.down_set(G.prefix(i, p - 1));
			ElementSubset upper = L.interval(px, c[i]);
			if(lower.intersects(upper) || (lower | upper) != L.down_set(c[i])) {
				fail({px, c[i], G.prefix(i, p - 1)}, "[0,C_i(x)] does not split at C_i(p)" + at);
				return report;
			}
			// (7)
			if(c[i] == L.top() && !G.on_chain(1 - i, px)) {
				fail({px}, "C_i(x) is the top but (x) is not on the other chain" + at);
				return report;
			}
		}
	}

	// (5)
	for(ElementId a = 0; a < L.size(); ++a) {
		if(a == L.bottom()) continue;
		for(std::size_t i = 0; i < 2; ++i) {
			ElementId ca = chain_prefix(G, i, a);
			bool found = false;
			for(int j = 1; j <= m && !found; ++j) {
				found = L.leq(G.closure_pt(j), a) && G.c_index(i, j) == ca;
			}
			if(!found) {
				fail({a, ca}, "C_i(a) is not C_i(j) for any (j) below a");
				return report;
			}
		}
	}
	return report;
}

CheckReport lemma_63_item3(const ConvexGeometry& G) {
	CheckReport report;
	report.claim = "lemma63_3";
	report.corpus = "single geometry";
	report.instances_checked = 1;
	if(G.chain_count() != 2) {
		report.status = CheckStatus::Skipped;
		report.note = "needs exactly two chains";
		return report;
	}
	const Lattice& L = G.lattice();
	for(int x = 1; x <= static_cast<int>(G.m()); ++x) {
		const ElementId c[2] = {G.c_index(0, x), G.c_index(1, x)};
		const std::optional<ElementId> mi[2] = {try_least_mi_on_chain(G, 0, x), try_least_mi_on_chain(G, 1, x)};
		for(std::size_t i = 0; i < 2; ++i) {
			const std::size_t o = 1 - i;
			std::size_t pi = G.position(i, x);
			std::size_t po = G.position(o, x);
			if(pi == G.m() || po == G.m()) continue;
			int xi = G.point_at(i, pi + 1);
			int xo = G.point_at(o, po + 1);
			bool premise = G.set_of(c[o]).contains(static_cast<ElementId>(xi - 1)) || xi == xo;
			if(premise && (!mi[i] || *mi[i] != c[i])) {
				report.fail(Witness{write_cover_list(L), {}, {}, {c[i]},
						"C" + std::to_string(i + 1) + "(x) is not M" + std::to_string(i + 1) +
								"(x) although the cover condition holds at x=" + std::to_string(x)});
				return report;
			}
		}
	}
	return report;
}

}  // namespace latmax
