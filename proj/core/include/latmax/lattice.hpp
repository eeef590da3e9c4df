#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "latmax/element_subset.hpp"
#include "latmax/error.hpp"

namespace latmax {

using CoverPair = std::pair<ElementId, ElementId>;

/// Closed interval [lo, hi] of a lattice.
struct Interval {
	ElementId lo = 0;
	ElementId hi = 0;

	friend bool operator==(const Interval&, const Interval&) = default;
	friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A finite lattice with a dense order relation and eagerly tabulated meet and
/// join. Immutable once built; every query after construction is a lookup.
class Lattice {
public:
	Lattice() = default;

	/// Builds a lattice from (lower, upper) pairs. Pairs need not be exactly
	/// the covering relation; the transitive reduction is recomputed.
	/// Throws LatticeError (CyclicInput, NotALattice, BadInput).
	static Lattice from_covers(std::size_t n, std::span<const CoverPair> covers);

	/// Builds a lattice from an order given as up-sets: up[x] = { y : x <= y }.
	/// The relation is checked to be a partial order before anything else.
	static Lattice from_up_sets(std::vector<ElementSubset> up);

	std::size_t size() const { return n_; }
	ElementId bottom() const { return bottom_; }
	ElementId top() const { return top_; }

	bool leq(ElementId a, ElementId b) const { return up_[a].contains(b); }
	bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }
	bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
	/// a is covered by b.
	bool covered_by(ElementId a, ElementId b) const { return upper_cover_sets_[a].contains(b); }

	ElementId meet(ElementId a, ElementId b) const { return meet_[a * n_ + b]; }
	ElementId join(ElementId a, ElementId b) const { return join_[a * n_ + b]; }
	/// Meet of a set; the top for the empty set.
	ElementId meet_of(const ElementSubset& s) const;
	/// Join of a set; the bottom for the empty set.
	ElementId join_of(const ElementSubset& s) const;

	const ElementSubset& up_set(ElementId x) const { return up_[x]; }
	const ElementSubset& down_set(ElementId x) const { return down_[x]; }
	const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_covers_[x]; }
	const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_covers_[x]; }
	const ElementSubset& upper_cover_set(ElementId x) const { return upper_cover_sets_[x]; }
	const ElementSubset& lower_cover_set(ElementId x) const { return lower_cover_sets_[x]; }

	/// Length of the longest chain from the bottom to x.
	std::size_t height(ElementId x) const { return height_[x]; }

	/// Sorted list of all covering pairs (lower, upper).
	std::vector<CoverPair> cover_pairs() const;

	ElementSubset interval(ElementId lo, ElementId hi) const { return up_[lo] & down_[hi]; }
	ElementSubset interval(Interval iv) const { return interval(iv.lo, iv.hi); }
	ElementSubset empty_subset() const { return ElementSubset(n_); }
	ElementSubset all() const { return ElementSubset::full(n_); }

	/// Elements of s with nothing of s strictly below them.
	ElementSubset minimal_elements(const ElementSubset& s) const;
	ElementSubset maximal_elements(const ElementSubset& s) const;

	/// The order-dual lattice on the same element ids.
	Lattice dual() const;

private:
	void finish();

	std::size_t n_ = 0;
	ElementId bottom_ = 0;
	ElementId top_ = 0;
	std::vector<ElementSubset> up_;
	std::vector<ElementSubset> down_;
	std::vector<ElementId> meet_;
	std::vector<ElementId> join_;
	std::vector<std::vector<ElementId>> upper_covers_;
	std::vector<std::vector<ElementId>> lower_covers_;
	std::vector<ElementSubset> upper_cover_sets_;
	std::vector<ElementSubset> lower_cover_sets_;
	std::vector<std::size_t> height_;
};

}  // namespace latmax
