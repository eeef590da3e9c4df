#include "latmax/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latmax {

namespace {

std::string pair_text(ElementId a, ElementId b) {
	return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Lattice Lattice::from_covers(std::size_t n, std::span<const CoverPair> covers) {
	if(n == 0) {
		throw LatticeError(LatticeError::Kind::BadInput, "a lattice needs at least one element");
	}
	std::vector<std::vector<ElementId>> succ(n);
	std::vector<std::size_t> indeg(n, 0);
	for(auto [lo, hi] : covers) {
		if(lo >= n || hi >= n) {
			throw LatticeError(LatticeError::Kind::BadInput, "cover pair " + pair_text(lo, hi) + " out of range");
		}
		if(lo == hi) {
			throw LatticeError(LatticeError::Kind::CyclicInput, "self loop at " + std::to_string(lo));
		}
		succ[lo].push_back(hi);
		++indeg[hi];
	}

	std::vector<ElementId> order;
	order.reserve(n);
	for(ElementId i = 0; i < n; ++i) {
		if(indeg[i] == 0) order.push_back(i);
	}
	for(std::size_t k = 0; k < order.size(); ++k) {
		for(ElementId s : succ[order[k]]) {
			if(--indeg[s] == 0) order.push_back(s);
		}
	}
	if(order.size() != n) {
		throw LatticeError(LatticeError::Kind::CyclicInput, "cover relation contains a cycle");
	}

	std::vector<ElementSubset> up(n, ElementSubset(n));
	for(auto it = order.rbegin(); it != order.rend(); ++it) {
		ElementId x = *it;
		up[x].insert(x);
		for(ElementId s : succ[x]) up[x] |= up[s];
	}

	Lattice L;
	L.n_ = n;
	L.up_ = std::move(up);
	L.finish();
	return L;
}

Lattice Lattice::from_up_sets(std::vector<ElementSubset> up) {
	const std::size_t n = up.size();
	if(n == 0) {
		throw LatticeError(LatticeError::Kind::BadInput, "a lattice needs at least one element");
	}
	for(ElementId x = 0; x < n; ++x) {
		if(up[x].universe() != n) {
			throw LatticeError(LatticeError::Kind::BadInput, "up-set universe mismatch at " + std::to_string(x));
		}
		if(!up[x].contains(x)) {
			throw LatticeError(LatticeError::Kind::BadInput, "order is not reflexive at " + std::to_string(x));
		}
	}
	for(ElementId x = 0; x < n; ++x) {
		bool bad = false;
		up[x].for_each([&](ElementId y) {
			if(bad) return;
			if(y != x && up[y].contains(x)) {
				throw LatticeError(LatticeError::Kind::CyclicInput, "order is not antisymmetric at " + pair_text(x, y));
			}
			if(!up[y].is_subset_of(up[x])) bad = true;
		});
		if(bad) {
			throw LatticeError(LatticeError::Kind::BadInput, "order is not transitive above " + std::to_string(x));
		}
	}
	Lattice L;
	L.n_ = n;
	L.up_ = std::move(up);
	L.finish();
	return L;
}

void Lattice::finish() {
	const std::size_t n = n_;
	down_.assign(n, ElementSubset(n));
	for(ElementId x = 0; x < n; ++x) {
		up_[x].for_each([&](ElementId y) { down_[y].insert(x); });
	}

	std::vector<std::size_t> below(n);
	for(ElementId x = 0; x < n; ++x) below[x] = down_[x].count();

	// A linear extension: fewer elements below comes first.
	std::vector<ElementId> order(n);
	std::iota(order.begin(), order.end(), ElementId{0});
	std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) { return below[a] < below[b]; });

	bottom_ = order.front();
	top_ = order.back();
	if(up_[bottom_].count() != n) {
		throw LatticeError(LatticeError::Kind::NotALattice, "no least element");
	}
	if(down_[top_].count() != n) {
		throw LatticeError(LatticeError::Kind::NotALattice, "no greatest element");
	}

	// The least upper bound, if it exists, is the unique bound with the fewest
	// elements below it; afterwards every bound must lie above it.
	auto least_of = [&](const ElementSubset& bounds, const std::vector<ElementSubset>& rel) {
		ElementId best = kNoElement;
		std::size_t best_below = n + 1;
		bounds.for_each([&](ElementId u) {
			if(below[u] < best_below) {
				best_below = below[u];
				best = u;
			}
		});
		if(best == kNoElement || !bounds.is_subset_of(rel[best])) return kNoElement;
		return best;
	};
	auto greatest_of = [&](const ElementSubset& bounds, const std::vector<ElementSubset>& rel) {
		ElementId best = kNoElement;
		std::size_t best_below = 0;
		bounds.for_each([&](ElementId u) {
			if(best == kNoElement || below[u] > best_below) {
				best_below = below[u];
				best = u;
			}
		});
		if(best == kNoElement || !bounds.is_subset_of(rel[best])) return kNoElement;
		return best;
	};

	meet_.assign(n * n, kNoElement);
	join_.assign(n * n, kNoElement);
	for(ElementId a = 0; a < n; ++a) {
		for(ElementId b = a; b < n; ++b) {
			ElementId j;
			ElementId m;
			if(leq(a, b)) {
				j = b;
				m = a;
			} else if(leq(b, a)) {
				j = a;
				m = b;
			} else {
				j = least_of(up_[a] & up_[b], up_);
				m = greatest_of(down_[a] & down_[b], down_);
				if(j == kNoElement) {
					throw LatticeError(LatticeError::Kind::NotALattice, "pair " + pair_text(a, b) + " has no unique least upper bound");
				}
				if(m == kNoElement) {
					throw LatticeError(LatticeError::Kind::NotALattice, "pair " + pair_text(a, b) + " has no unique greatest lower bound");
				}
			}
			join_[a * n + b] = join_[b * n + a] = j;
			meet_[a * n + b] = meet_[b * n + a] = m;
		}
	}

	upper_covers_.assign(n, {});
	lower_covers_.assign(n, {});
	upper_cover_sets_.assign(n, ElementSubset(n));
	lower_cover_sets_.assign(n, ElementSubset(n));
	for(ElementId a = 0; a < n; ++a) {
		up_[a].for_each([&](ElementId b) {
			if(a == b) return;
			if((up_[a] & down_[b]).count() == 2) {
				upper_covers_[a].push_back(b);
				lower_covers_[b].push_back(a);
				upper_cover_sets_[a].insert(b);
				lower_cover_sets_[b].insert(a);
			}
		});
	}
	for(auto& v : lower_covers_) std::sort(v.begin(), v.end());

	height_.assign(n, 0);
	for(ElementId x : order) {
		for(ElementId c : lower_covers_[x]) height_[x] = std::max(height_[x], height_[c] + 1);
	}
}

ElementId Lattice::meet_of(const ElementSubset& s) const {
	ElementId acc = top_;
	s.for_each([&](ElementId x) { acc = meet(acc, x); });
	return acc;
}

ElementId Lattice::join_of(const ElementSubset& s) const {
	ElementId acc = bottom_;
	s.for_each([&](ElementId x) { acc = join(acc, x); });
	return acc;
}

std::vector<CoverPair> Lattice::cover_pairs() const {
	std::vector<CoverPair> out;
	for(ElementId a = 0; a < n_; ++a) {
		for(ElementId b : upper_covers_[a]) out.emplace_back(a, b);
	}
	std::sort(out.begin(), out.end());
	return out;
}

ElementSubset Lattice::minimal_elements(const ElementSubset& s) const {
	ElementSubset out(n_);
	s.for_each([&](ElementId x) {
		if(!(down_[x] & s).without(x).empty()) return;
		out.insert(x);
	});
	return out;
}

ElementSubset Lattice::maximal_elements(const ElementSubset& s) const {
	ElementSubset out(n_);
	s.for_each([&](ElementId x) {
		if(!(up_[x] & s).without(x).empty()) return;
		out.insert(x);
	});
	return out;
}

Lattice Lattice::dual() const {
	Lattice d;
	d.n_ = n_;
	d.up_ = down_;
	d.finish();
	return d;
}

}  // namespace latmax
