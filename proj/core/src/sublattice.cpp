#include "latmax/sublattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>

#include "latmax/io.hpp"
#include "latmax/properties.hpp"

namespace latmax {

namespace {

// Closure of T under one binary operation.
template <typename Op>
ElementSubset close_under(const ElementSubset& T, Op op) {
	ElementSubset closed = T;
	std::vector<ElementId> members = T.elements();
	for(std::size_t i = 0; i < members.size(); ++i) {
		for(std::size_t k = 0; k <= i; ++k) {
			ElementId r = op(members[i], members[k]);
			if(!closed.contains(r)) {
				closed.insert(r);
				members.push_back(r);
			}
		}
	}
	return closed;
}

ElementSubset join_closure(const Lattice& L, const ElementSubset& T) {
	return close_under(T, [&](ElementId a, ElementId b) { return L.join(a, b); });
}

ElementSubset meet_closure(const Lattice& L, const ElementSubset& T) {
	return close_under(T, [&](ElementId a, ElementId b) { return L.meet(a, b); });
}

// A pair of elements outside C whose join or meet lands in C; nullopt when
// L \ C is a sublattice.
std::optional<std::pair<ElementId, ElementId>> find_violation(const Lattice& L, const ElementSubset& C,
		const std::vector<ElementId>& outside) {
	for(std::size_t i = 0; i < outside.size(); ++i) {
		ElementId x = outside[i];
		for(std::size_t k = i + 1; k < outside.size(); ++k) {
			ElementId y = outside[k];
			if(C.contains(L.join(x, y)) || C.contains(L.meet(x, y))) return std::make_pair(x, y);
		}
	}
	return std::nullopt;
}

class RemovableSetSearch {
public:
	explicit RemovableSetSearch(const Lattice& L) : L_(L), doubly_(L.size()) {
		for(ElementId x = 0; x < L.size(); ++x) {
			if(is_doubly_irreducible(L, x)) doubly_.insert(x);
		}
	}

	std::vector<ElementSubset> run() {
		// A doubly irreducible element is a removable singleton and nothing
		// larger through it can be minimal.
		doubly_.for_each([&](ElementId x) { found_.push_back(ElementSubset::of(L_.size(), {x})); });
		for(ElementId c = 0; c < L_.size(); ++c) {
			if(c == L_.bottom() || c == L_.top() || doubly_.contains(c)) continue;
			grow(ElementSubset::of(L_.size(), {c}));
		}

		std::vector<ElementSubset> minimal;
		for(const auto& r : found_) {
			bool has_smaller = std::any_of(found_.begin(), found_.end(),
					[&](const ElementSubset& f) { return f != r && f.is_subset_of(r); });
			if(!has_smaller) minimal.push_back(r);
		}
		std::sort(minimal.begin(), minimal.end());
		minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
		return minimal;
	}

private:
	void grow(const ElementSubset& C) {
		if(!visited_.insert(C).second) return;
		if(C.contains(L_.bottom()) || C.contains(L_.top())) return;
		if(C.count() >= 2 && C.intersects(doubly_)) return;
		for(const auto& f : found_) {
			if(f.is_subset_of(C)) return;
		}
		std::vector<ElementId> outside = (~C).elements();
		auto violation = find_violation(L_, C, outside);
		if(!violation) {
			found_.push_back(C);
			return;
		}
		// Any removable superset of C keeps one of the two.
		grow(C.with(violation->first));
		grow(C.with(violation->second));
	}

	const Lattice& L_;
	ElementSubset doubly_;
	std::vector<ElementSubset> found_;
	std::unordered_set<ElementSubset> visited_;
};

Witness make_witness(const Lattice& L, const ElementSubset& M, std::vector<ElementId> elements, std::string detail) {
	return Witness{write_cover_list(L), M.elements(), (~M).elements(), std::move(elements), std::move(detail)};
}

bool connected_by_comparability(const Lattice& L, const ElementSubset& C) {
	if(C.empty()) return true;
	ElementSubset seen = ElementSubset::of(L.size(), {C.first()});
	std::vector<ElementId> stack{C.first()};
	while(!stack.empty()) {
		ElementId x = stack.back();
		stack.pop_back();
		((L.up_set(x) | L.down_set(x)) & C).for_each([&](ElementId y) {
			if(!seen.contains(y)) {
				seen.insert(y);
				stack.push_back(y);
			}
		});
	}
	return seen == C;
}

std::optional<ElementId> meet_above(const Lattice& L, const ElementSubset& M, ElementId c) {
	ElementSubset s = (L.up_set(c) & M).without(c);
	if(s.empty()) return std::nullopt;
	return L.meet_of(s);
}

std::optional<ElementId> join_below(const Lattice& L, const ElementSubset& M, ElementId c) {
	ElementSubset s = (L.down_set(c) & M).without(c);
	if(s.empty()) return std::nullopt;
	return L.join_of(s);
}

}  // namespace

ElementSubset generate_sublattice(const Lattice& L, const ElementSubset& S, GenerationScheme scheme) {
	if(S.empty()) {
		throw SublatticeError(SublatticeError::Kind::EmptyGenerator, "cannot generate a sublattice from the empty set");
	}
	ElementSubset current = S;
	while(true) {
		ElementSubset next = scheme == GenerationScheme::Alternating
				? (join_closure(L, current) | meet_closure(L, current))
				: join_closure(L, meet_closure(L, current));
		if(next == current) return current;
		current = std::move(next);
	}
}

bool is_sublattice(const Lattice& L, const ElementSubset& S) {
	std::vector<ElementId> members = S.elements();
	for(std::size_t i = 0; i < members.size(); ++i) {
		for(std::size_t k = i + 1; k < members.size(); ++k) {
			if(!S.contains(L.join(members[i], members[k])) || !S.contains(L.meet(members[i], members[k]))) return false;
		}
	}
	return true;
}

bool is_maximal_sublattice(const Lattice& L, const ElementSubset& M) {
	if(M.is_full() || !M.contains(L.bottom()) || !M.contains(L.top())) return false;
	if(!is_sublattice(L, M)) return false;
	bool ok = true;
	(~M).for_each([&](ElementId x) {
		if(ok && !generate_sublattice(L, M.with(x)).is_full()) ok = false;
	});
	return ok;
}

std::vector<ElementSubset> maximal_complements_oracle(const Lattice& L, std::size_t bound) {
	if(L.size() > bound) {
		throw SublatticeError(SublatticeError::Kind::OracleBoundExceeded,
				"lattice has " + std::to_string(L.size()) + " elements, oracle bound is " + std::to_string(bound));
	}
	auto complements = RemovableSetSearch(L).run();
	for(const auto& C : complements) {
		if(!is_maximal_sublattice(L, ~C)) {
			throw SublatticeError(SublatticeError::Kind::OracleBoundExceeded, "oracle produced a non-maximal complement");
		}
	}
	return complements;
}

ElementSubset frattini_from_complements(const Lattice& L, const std::vector<ElementSubset>& complements) {
	ElementSubset out = L.all();
	for(const auto& C : complements) out -= C;
	return out;
}

ElementSubset frattini(const Lattice& L, std::size_t bound) {
	return frattini_from_complements(L, maximal_complements_oracle(L, bound));
}

ElementSubset strict_canonical_joinands(const Lattice& L, const ElementSubset& C, ElementId x) {
	auto rep = canonical_join_rep(L, x);
	if(!rep) {
		throw SublatticeError(SublatticeError::Kind::NoCanonicalRep, "no canonical join representation for " + std::to_string(x));
	}
	ElementSubset out(L.size());
	rep->for_each([&](ElementId j) {
		if(L.interval(j, x).is_subset_of(C)) out.insert(j);
	});
	return out;
}

ElementSubset strict_canonical_meetands(const Lattice& L, const ElementSubset& C, ElementId x) {
	auto rep = canonical_meet_rep(L, x);
	if(!rep) {
		throw SublatticeError(SublatticeError::Kind::NoCanonicalRep, "no canonical meet representation for " + std::to_string(x));
	}
	ElementSubset out(L.size());
	rep->for_each([&](ElementId k) {
		if(L.interval(x, k).is_subset_of(C)) out.insert(k);
	});
	return out;
}

ComplementBounds complement_bounds(const Lattice& L, const ElementSubset& M, ElementId c) {
	auto over = meet_above(L, M, c);
	auto under = join_below(L, M, c);
	if(!over || !under) {
		throw SublatticeError(SublatticeError::Kind::UndefinedBound,
				"no element of the sublattice " + std::string(over ? "below " : "above ") + std::to_string(c));
	}
	return {c, *over, *under};
}

CheckReport observation_suite(const Lattice& L, const ElementSubset& M) {
	CheckReport report;
	report.claim = "observations";
	report.corpus = "single lattice";
	report.instances_checked = 1;
	const ElementSubset C = ~M;
	auto fail = [&](std::vector<ElementId> elements, const std::string& detail) {
		report.fail(make_witness(L, M, std::move(elements), detail));
	};

	// Complement inside one indecomposable component.
	for(ElementId cut : cut_elements(L)) {
		if(!C.is_subset_of(L.up_set(cut)) && !C.is_subset_of(L.down_set(cut))) {
			fail({cut}, "complement straddles cut element");
			return report;
		}
	}

	// No doubly irreducible element inside a complement of two or more.
	if(C.count() >= 2) {
		for(ElementId x : C.elements()) {
			if(is_doubly_irreducible(L, x)) {
				fail({x}, "doubly irreducible element inside a larger complement");
				return report;
			}
		}
	}

	// Maximal elements meet-irreducible, minimal elements join-irreducible.
	for(ElementId a : L.maximal_elements(C).elements()) {
		if(!is_meet_irreducible(L, a)) {
			fail({a}, "maximal element of the complement is not meet-irreducible");
			return report;
		}
	}
	for(ElementId a : L.minimal_elements(C).elements()) {
		if(!is_join_irreducible(L, a)) {
			fail({a}, "minimal element of the complement is not join-irreducible");
			return report;
		}
	}

	// At least two atoms puts the bottom in M; two coatoms put the top in M.
	if(L.upper_covers(L.bottom()).size() >= 2 && !M.contains(L.bottom())) {
		fail({L.bottom()}, "bottom missing although there are two atoms");
		return report;
	}
	if(L.lower_covers(L.top()).size() >= 2 && !M.contains(L.top())) {
		fail({L.top()}, "top missing although there are two coatoms");
		return report;
	}

	if(!connected_by_comparability(L, C)) {
		fail(C.elements(), "complement splits into mutually incomparable parts");
		return report;
	}

	// Minimal elements c_i with m_0 = meet of m_over(c_i): C sits entirely
	// inside [m_0, 1] or misses it and is convex. Dually for maximal elements.
	{
		bool defined = true;
		ElementId m0 = L.top();
		L.minimal_elements(C).for_each([&](ElementId c) {
			auto over = meet_above(L, M, c);
			if(!over) defined = false;
			else m0 = L.meet(m0, *over);
		});
		if(defined && !C.empty()) {
			const ElementSubset& upper = L.up_set(m0);
			bool inside = C.is_subset_of(upper);
			bool outside = !C.intersects(upper);
			if(!inside && !(outside && is_convex_subset(L, C))) {
				fail({m0}, "complement neither inside nor convex outside [m0,1]");
				return report;
			}
		}
		defined = true;
		ElementId m1 = L.bottom();
		L.maximal_elements(C).for_each([&](ElementId c) {
			auto under = join_below(L, M, c);
			if(!under) defined = false;
			else m1 = L.join(m1, *under);
		});
		if(defined && !C.empty()) {
			const ElementSubset& lower = L.down_set(m1);
			bool inside = C.is_subset_of(lower);
			bool outside = !C.intersects(lower);
			if(!inside && !(outside && is_convex_subset(L, C))) {
				fail({m1}, "complement neither inside nor convex outside [0,m1]");
				return report;
			}
		}
	}

	// m* maximal in M \ {1}, c in (m*, 1), m in M with m !<= m*: m v c = 1. And dually.
	{
		ElementSubset below_top = M.without(L.top());
		for(ElementId mstar : L.maximal_elements(below_top).elements()) {
			ElementSubset open = (L.up_set(mstar).without(mstar)).without(L.top());
			for(ElementId c : open.elements()) {
				for(ElementId m : (M - L.down_set(mstar)).elements()) {
					if(L.join(m, c) != L.top()) {
						fail({mstar, c, m}, "join with an element above a maximal proper member is not the top");
						return report;
					}
				}
			}
		}
		ElementSubset above_bottom = M.without(L.bottom());
		for(ElementId mstar : L.minimal_elements(above_bottom).elements()) {
			ElementSubset open = (L.down_set(mstar).without(mstar)).without(L.bottom());
			for(ElementId c : open.elements()) {
				for(ElementId m : (M - L.up_set(mstar)).elements()) {
					if(L.meet(m, c) != L.bottom()) {
						fail({mstar, c, m}, "meet with an element below a minimal proper member is not the bottom");
						return report;
					}
				}
			}
		}
	}

	// A greatest element a of C (|C| >= 2) has m_under(a) covered by a. Dually.
	if(C.count() >= 2) {
		ElementId g = L.join_of(C);
		if(C.contains(g)) {
			if(auto under = join_below(L, M, g); under && !L.covered_by(*under, g)) {
				fail({g, *under}, "greatest element of the complement does not cover m_under");
				return report;
			}
		}
		ElementId l = L.meet_of(C);
		if(C.contains(l)) {
			if(auto over = meet_above(L, M, l); over && !L.covered_by(l, *over)) {
				fail({l, *over}, "least element of the complement is not covered by m_over");
				return report;
			}
		}
	}
	return report;
}

CheckReport check_chain_interval_removal(const Lattice& L) {
	CheckReport report;
	report.claim = "chain4";
	report.corpus = "single lattice";
	const std::size_t n = L.size();
	std::vector<std::optional<ElementSubset>> cj(n);
	std::vector<std::optional<ElementSubset>> cm(n);
	for(ElementId x = 0; x < n; ++x) {
		cj[x] = canonical_join_rep(L, x);
		cm[x] = canonical_meet_rep(L, x);
	}
	std::map<std::pair<ElementId, ElementId>, bool> verdict;
	for(ElementId z = 0; z < n; ++z) {
		if(!cj[z]) continue;
		for(ElementId x : cj[z]->elements()) {
			for(ElementId w : L.down_set(x).elements()) {
				if(!cm[w]) continue;
				for(ElementId y : cm[w]->elements()) {
					if(!L.leq(x, y) || !L.leq(y, z)) continue;
					++report.instances_checked;
					auto key = std::make_pair(x, y);
					auto it = verdict.find(key);
					if(it == verdict.end()) {
						it = verdict.emplace(key, is_sublattice(L, ~L.interval(x, y))).first;
					}
					if(!it->second) {
						ElementSubset rest = ~L.interval(x, y);
						report.fail(make_witness(L, rest, {w, x, y, z}, "L minus [x,y] is not a sublattice"));
						return report;
					}
				}
			}
		}
	}
	return report;
}

}  // namespace latmax
