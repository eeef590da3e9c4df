#pragma once

// Slow, obviously-correct reference versions of library routines. Everything
// here is exponential or cubic on purpose; keep inputs tiny.

#include <algorithm>
#include <optional>
#include <vector>

#include "latmax/hypothesis.hpp"
#include "latmax/lattice.hpp"

namespace oracle {

using latmax::ElementId;
using latmax::ElementSubset;
using latmax::Lattice;

inline std::optional<ElementId> glb(const Lattice& L, ElementId a, ElementId b) {
	std::vector<ElementId> lower;
	for(ElementId x = 0; x < L.size(); ++x) {
		if(L.leq(x, a) && L.leq(x, b)) lower.push_back(x);
	}
	for(ElementId x : lower) {
		if(std::all_of(lower.begin(), lower.end(), [&](ElementId y) { return L.leq(y, x); })) return x;
	}
	return std::nullopt;
}

inline std::optional<ElementId> lub(const Lattice& L, ElementId a, ElementId b) {
	std::vector<ElementId> upper;
	for(ElementId x = 0; x < L.size(); ++x) {
		if(L.leq(a, x) && L.leq(b, x)) upper.push_back(x);
	}
	for(ElementId x : upper) {
		if(std::all_of(upper.begin(), upper.end(), [&](ElementId y) { return L.leq(x, y); })) return x;
	}
	return std::nullopt;
}

inline bool ji(const Lattice& L, ElementId x) {
	std::size_t below = 0;
	for(ElementId y = 0; y < L.size(); ++y) below += L.covered_by(y, x);
	return below == 1;
}

inline bool mi(const Lattice& L, ElementId x) {
	std::size_t above = 0;
	for(ElementId y = 0; y < L.size(); ++y) above += L.covered_by(x, y);
	return above == 1;
}

// Triple scan straight from the definition.
inline bool sd_join(const Lattice& L) {
	const ElementId n = static_cast<ElementId>(L.size());
	for(ElementId x = 0; x < n; ++x)
		for(ElementId y = 0; y < n; ++y)
			for(ElementId z = 0; z < n; ++z) {
				if(L.join(x, y) == L.join(x, z) && L.join(x, L.meet(y, z)) != L.join(x, y)) return false;
			}
	return true;
}

inline bool sd_meet(const Lattice& L) {
	const ElementId n = static_cast<ElementId>(L.size());
	for(ElementId x = 0; x < n; ++x)
		for(ElementId y = 0; y < n; ++y)
			for(ElementId z = 0; z < n; ++z) {
				if(L.meet(x, y) == L.meet(x, z) && L.meet(x, L.join(y, z)) != L.meet(x, y)) return false;
			}
	return true;
}

inline bool distributive(const Lattice& L) {
	const ElementId n = static_cast<ElementId>(L.size());
	for(ElementId x = 0; x < n; ++x)
		for(ElementId y = 0; y < n; ++y)
			for(ElementId z = 0; z < n; ++z) {
				if(L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
			}
	return true;
}

inline bool way_below(const Lattice& L, const ElementSubset& X, const ElementSubset& Y) {
	for(ElementId x : X.elements()) {
		bool found = false;
		for(ElementId y : Y.elements()) found = found || L.leq(x, y);
		if(!found) return false;
	}
	return true;
}

// All antichains of join-irreducibles below x whose join is x, then the one
// refining every other, if any.
inline std::optional<ElementSubset> canonical_join_rep(const Lattice& L, ElementId x) {
	std::vector<ElementId> cand;
	for(ElementId j = 0; j < L.size(); ++j) {
		if(ji(L, j) && L.leq(j, x)) cand.push_back(j);
	}
	std::vector<ElementSubset> reps;
	for(std::size_t mask = 0; mask < (std::size_t{1} << cand.size()); ++mask) {
		ElementSubset A(L.size());
		for(std::size_t b = 0; b < cand.size(); ++b) {
			if(mask >> b & 1) A.insert(cand[b]);
		}
		bool antichain = true;
		for(ElementId a : A.elements())
			for(ElementId c : A.elements()) antichain = antichain && (a == c || !L.leq(a, c));
		if(antichain && L.join_of(A) == x) reps.push_back(A);
	}
	for(const auto& A : reps) {
		if(std::all_of(reps.begin(), reps.end(), [&](const ElementSubset& B) { return oracle::way_below(L, A, B); })) return A;
	}
	return std::nullopt;
}

inline std::optional<ElementId> kappa(const Lattice& L, ElementId j) {
	ElementId low = L.lower_covers(j).front();
	std::vector<ElementId> K;
	for(ElementId u = 0; u < L.size(); ++u) {
		if(L.leq(low, u) && !L.leq(j, u)) K.push_back(u);
	}
	for(ElementId u : K) {
		if(std::all_of(K.begin(), K.end(), [&](ElementId v) { return L.leq(v, u); })) return u;
	}
	return std::nullopt;
}

// Pairwise closure until nothing changes.
inline ElementSubset closure(const Lattice& L, ElementSubset S) {
	bool grew = true;
	while(grew) {
		grew = false;
		for(ElementId a : S.elements())
			for(ElementId b : S.elements()) {
				for(ElementId c : {L.meet(a, b), L.join(a, b)}) {
					if(!S.contains(c)) {
						S.insert(c);
						grew = true;
					}
				}
			}
	}
	return S;
}

inline bool closed(const Lattice& L, const ElementSubset& S) {
	for(ElementId a : S.elements())
		for(ElementId b : S.elements()) {
			if(!S.contains(L.meet(a, b)) || !S.contains(L.join(a, b))) return false;
		}
	return true;
}

// Complements of maximal (0,1)-sublattices, by listing every subset.
inline std::vector<ElementSubset> maximal_complements(const Lattice& L) {
	const std::size_t n = L.size();
	std::vector<ElementId> inner;
	for(ElementId x = 0; x < n; ++x) {
		if(x != L.bottom() && x != L.top()) inner.push_back(x);
	}
	std::vector<ElementSubset> subs;
	for(std::size_t mask = 0; mask + 1 < (std::size_t{1} << inner.size()); ++mask) {
		ElementSubset S = ElementSubset::of(n, {L.bottom(), L.top()});
		for(std::size_t b = 0; b < inner.size(); ++b) {
			if(mask >> b & 1) S.insert(inner[b]);
		}
		if(closed(L, S)) subs.push_back(S);
	}
	std::vector<ElementSubset> out;
	for(const auto& S : subs) {
		bool maximal = true;
		for(const auto& T : subs) maximal = maximal && !(S != T && S.is_subset_of(T));
		if(maximal) out.push_back(~S);
	}
	std::sort(out.begin(), out.end());
	return out;
}

// Family generated by chain prefixes: intersect every choice of one prefix
// per chain.
inline std::vector<ElementSubset> cg_family(std::size_t m, const std::vector<std::vector<int>>& chains) {
	std::vector<ElementSubset> out;
	std::vector<std::size_t> len(chains.size(), 0);
	while(true) {
		ElementSubset s = ElementSubset::full(m);
		for(std::size_t i = 0; i < chains.size(); ++i) {
			ElementSubset p(m);
			for(std::size_t k = 0; k < len[i]; ++k) p.insert(static_cast<ElementId>(chains[i][k] - 1));
			s &= p;
		}
		out.push_back(s);
		std::size_t i = 0;
		while(i < len.size() && ++len[i] > m) len[i++] = 0;
		if(i == len.size()) break;
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

// Largest antichain of meet-irreducibles by trying every subset.
inline std::size_t mi_width(const Lattice& L) {
	std::vector<ElementId> M;
	for(ElementId x = 0; x < L.size(); ++x) {
		if(mi(L, x)) M.push_back(x);
	}
	std::size_t best = 0;
	for(std::size_t mask = 0; mask < (std::size_t{1} << M.size()); ++mask) {
		std::vector<ElementId> pick;
		for(std::size_t b = 0; b < M.size(); ++b) {
			if(mask >> b & 1) pick.push_back(M[b]);
		}
		bool anti = true;
		for(ElementId a : pick)
			for(ElementId c : pick) anti = anti && (a == c || !L.comparable(a, c));
		if(anti) best = std::max(best, pick.size());
	}
	return best;
}

// Small lattices of every flavour the library handles.
inline std::vector<Lattice> zoo(std::uint64_t seed = 3) {
	std::vector<Lattice> out;
	for(const auto& c : {latmax::n5_m3(), latmax::chain_products({3, 3}), latmax::boolean_corpus(3),
				 latmax::doubled_sequences(2, seed, 25), latmax::random_closure_lattices(4, seed, 40),
				 latmax::all_cdim2_geometries(4)}) {
		for(const auto& item : c.items) {
			if(item.lattice.size() <= 16) out.push_back(item.lattice);
		}
	}
	return out;
}

}  // namespace oracle
