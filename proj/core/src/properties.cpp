#include "latmax/properties.hpp"

#include <algorithm>
#include <string>

namespace latmax {

namespace {

// Read-only views of L and of its order dual, so each predicate is written once.
struct Primal {
	const Lattice& L;
	ElementId join(ElementId a, ElementId b) const { return L.join(a, b); }
	ElementId meet(ElementId a, ElementId b) const { return L.meet(a, b); }
	bool leq(ElementId a, ElementId b) const { return L.leq(a, b); }
	bool covered_by(ElementId a, ElementId b) const { return L.covered_by(a, b); }
	const ElementSubset& up(ElementId x) const { return L.up_set(x); }
	const ElementSubset& down(ElementId x) const { return L.down_set(x); }
	const std::vector<ElementId>& lower_covers(ElementId x) const { return L.lower_covers(x); }
	const std::vector<ElementId>& upper_covers(ElementId x) const { return L.upper_covers(x); }
	ElementId bottom() const { return L.bottom(); }
	ElementId top() const { return L.top(); }
	ElementId join_of(const ElementSubset& s) const { return L.join_of(s); }
	ElementId meet_of(const ElementSubset& s) const { return L.meet_of(s); }
};

struct Dual {
	const Lattice& L;
	ElementId join(ElementId a, ElementId b) const { return L.meet(a, b); }
	ElementId meet(ElementId a, ElementId b) const { return L.join(a, b); }
	bool leq(ElementId a, ElementId b) const { return L.leq(b, a); }
	bool covered_by(ElementId a, ElementId b) const { return L.covered_by(b, a); }
	const ElementSubset& up(ElementId x) const { return L.down_set(x); }
	const ElementSubset& down(ElementId x) const { return L.up_set(x); }
	const std::vector<ElementId>& lower_covers(ElementId x) const { return L.upper_covers(x); }
	const std::vector<ElementId>& upper_covers(ElementId x) const { return L.lower_covers(x); }
	ElementId bottom() const { return L.top(); }
	ElementId top() const { return L.bottom(); }
	ElementId join_of(const ElementSubset& s) const { return L.meet_of(s); }
	ElementId meet_of(const ElementSubset& s) const { return L.join_of(s); }
};

template <typename View>
bool sd_join_impl(const View& v, std::size_t n) {
	// For fixed x the classes { y : x v y = w } must be closed under meet;
	// equivalently the meet of each whole class stays in the class.
	std::vector<ElementId> acc(n);
	for(ElementId x = 0; x < n; ++x) {
		std::fill(acc.begin(), acc.end(), kNoElement);
		for(ElementId y = 0; y < n; ++y) {
			ElementId w = v.join(x, y);
			acc[w] = acc[w] == kNoElement ? y : v.meet(acc[w], y);
		}
		for(ElementId w = 0; w < n; ++w) {
			if(acc[w] != kNoElement && v.join(x, acc[w]) != w) return false;
		}
	}
	return true;
}

template <typename View>
bool lower_semimodular_impl(const View& v, std::size_t n) {
	for(ElementId x = 0; x < n; ++x) {
		for(ElementId y = 0; y < n; ++y) {
			if(v.covered_by(x, v.join(x, y)) && !v.covered_by(v.meet(x, y), y)) return false;
		}
	}
	return true;
}

template <typename View>
std::optional<ElementSubset> canonical_join_impl(const View& v, std::size_t n, ElementId x) {
	ElementSubset rep(n);
	if(x == v.bottom()) return rep;

	// One candidate joinand per lower cover y: the least element of
	// { z <= x : z !<= y }, when that set has a least element.
	for(ElementId y : v.lower_covers(x)) {
		ElementSubset outside = v.down(x) - v.down(y);
		ElementId least = v.meet_of(outside);
		if(!outside.contains(least)) return std::nullopt;
		rep.insert(least);
	}

	// rep refines every join representation of x iff, for each joinand j,
	// the elements of [0, x] that avoid j do not join to x.
	bool ok = true;
	rep.for_each([&](ElementId j) {
		if(!ok) return;
		if(!(v.down(j) & rep).without(j).empty()) {
			ok = false;
			return;
		}
		ElementSubset avoiding = v.down(x) - v.up(j);
		if(v.join_of(avoiding) == x) ok = false;
	});
	if(!ok || v.join_of(rep) != x) return std::nullopt;
	return rep;
}

template <typename View>
std::optional<ElementId> kappa_impl(const View& v, ElementId j) {
	const auto& lower = v.lower_covers(j);
	ElementSubset k = v.up(lower.front()) - v.up(j);
	ElementId g = v.join_of(k);
	if(!k.contains(g)) return std::nullopt;
	return g;
}

}  // namespace

bool is_join_irreducible(const Lattice& L, ElementId x) {
	return x != L.bottom() && L.lower_covers(x).size() == 1;
}

bool is_meet_irreducible(const Lattice& L, ElementId x) {
	return x != L.top() && L.upper_covers(x).size() == 1;
}

bool is_doubly_irreducible(const Lattice& L, ElementId x) {
	return is_join_irreducible(L, x) && is_meet_irreducible(L, x);
}

IrreducibleInfo irreducibles(const Lattice& L) {
	const std::size_t n = L.size();
	IrreducibleInfo info{ElementSubset(n), ElementSubset(n), std::vector<ElementId>(n, kNoElement),
			std::vector<ElementId>(n, kNoElement)};
	for(ElementId x = 0; x < n; ++x) {
		if(is_join_irreducible(L, x)) {
			info.ji.insert(x);
			info.lower_star[x] = L.lower_covers(x).front();
		}
		if(is_meet_irreducible(L, x)) {
			info.mi.insert(x);
			info.upper_star[x] = L.upper_covers(x).front();
		}
	}
	return info;
}

bool is_sd_join(const Lattice& L) { return sd_join_impl(Primal{L}, L.size()); }
bool is_sd_meet(const Lattice& L) { return sd_join_impl(Dual{L}, L.size()); }

bool is_lower_semimodular(const Lattice& L) { return lower_semimodular_impl(Primal{L}, L.size()); }
bool is_upper_semimodular(const Lattice& L) { return lower_semimodular_impl(Dual{L}, L.size()); }

bool is_distributive(const Lattice& L) {
	const std::size_t n = L.size();
	for(ElementId x = 0; x < n; ++x) {
		for(ElementId y = 0; y < n; ++y) {
			for(ElementId z = y + 1; z < n; ++z) {
				if(L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), L.join(x, z))) return false;
			}
		}
	}
	return true;
}

bool way_below(const Lattice& L, const ElementSubset& X, const ElementSubset& Y) {
	bool ok = true;
	X.for_each([&](ElementId x) {
		if(ok && !L.up_set(x).intersects(Y)) ok = false;
	});
	return ok;
}

std::optional<ElementSubset> canonical_join_rep(const Lattice& L, ElementId x) {
	return canonical_join_impl(Primal{L}, L.size(), x);
}

std::optional<ElementSubset> canonical_meet_rep(const Lattice& L, ElementId x) {
	return canonical_join_impl(Dual{L}, L.size(), x);
}

std::optional<ElementId> kappa(const Lattice& L, ElementId j) {
	if(!is_join_irreducible(L, j)) {
		throw LatticeError(LatticeError::Kind::BadInput, "kappa: " + std::to_string(j) + " is not join-irreducible");
	}
	return kappa_impl(Primal{L}, j);
}

std::optional<ElementId> kappa_sigma(const Lattice& L, ElementId m) {
	if(!is_meet_irreducible(L, m)) {
		throw LatticeError(LatticeError::Kind::BadInput, "kappa_sigma: " + std::to_string(m) + " is not meet-irreducible");
	}
	return kappa_impl(Dual{L}, m);
}

bool kappa_bijection_check(const Lattice& L) {
	auto info = irreducibles(L);
	if(info.ji.count() != info.mi.count()) return false;
	ElementSubset image(L.size());
	bool ok = true;
	info.ji.for_each([&](ElementId j) {
		if(!ok) return;
		auto k = kappa(L, j);
		if(!k || !info.mi.contains(*k) || image.contains(*k)) {
			ok = false;
			return;
		}
		image.insert(*k);
		auto back = kappa_sigma(L, *k);
		if(!back || *back != j) ok = false;
	});
	return ok && image == info.mi;
}

std::vector<ElementId> cut_elements(const Lattice& L) {
	std::vector<ElementId> cuts;
	for(ElementId x = 0; x < L.size(); ++x) {
		if((L.up_set(x) | L.down_set(x)).is_full()) cuts.push_back(x);
	}
	std::sort(cuts.begin(), cuts.end(), [&](ElementId a, ElementId b) { return L.lt(a, b); });
	return cuts;
}

std::vector<Interval> indecomposable_components(const Lattice& L) {
	auto cuts = cut_elements(L);
	std::vector<Interval> out;
	for(std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back({cuts[i], cuts[i + 1]});
	return out;
}

Lattice double_interval(const Lattice& L, Interval iv) {
	if(!L.leq(iv.lo, iv.hi)) {
		throw LatticeError(LatticeError::Kind::BadInput, "double_interval: lo is not below hi");
	}
	const std::size_t n = L.size();
	ElementSubset inside = L.interval(iv);
	std::vector<ElementId> doubled = inside.elements();
	const std::size_t total = n + doubled.size();

	// proj maps every new id to its element of L; level is 1 for upper copies,
	// 0 for lower copies, and unused outside the interval.
	std::vector<ElementId> proj(total);
	std::vector<int> level(total, 0);
	for(ElementId x = 0; x < n; ++x) proj[x] = x;
	for(std::size_t k = 0; k < doubled.size(); ++k) {
		proj[n + k] = doubled[k];
		level[n + k] = 1;
	}
	auto in_copy = [&](ElementId p) { return inside.contains(proj[p]); };

	std::vector<ElementSubset> up(total, ElementSubset(total));
	for(ElementId p = 0; p < total; ++p) {
		for(ElementId q = 0; q < total; ++q) {
			if(!L.leq(proj[p], proj[q])) continue;
			if(in_copy(p) && in_copy(q) && level[p] > level[q]) continue;
			up[p].insert(q);
		}
	}
	return Lattice::from_up_sets(std::move(up));
}

bool is_convex_subset(const Lattice& L, const ElementSubset& S) {
	bool ok = true;
	S.for_each([&](ElementId a) {
		if(!ok) return;
		(L.up_set(a) & S).for_each([&](ElementId c) {
			if(ok && !L.interval(a, c).is_subset_of(S)) ok = false;
		});
	});
	return ok;
}

bool is_interval(const Lattice& L, const ElementSubset& S) {
	if(S.empty()) return false;
	return L.interval(L.meet_of(S), L.join_of(S)) == S;
}

}  // namespace latmax
