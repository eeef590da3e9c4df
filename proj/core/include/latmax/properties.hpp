#pragma once

#include <optional>
#include <vector>

#include "latmax/lattice.hpp"

namespace latmax {

/// Join- and meet-irreducibles together with their unique lower / upper covers.
/// lower_star[j] and upper_star[m] hold kNoElement off Ji / Mi.
struct IrreducibleInfo {
	ElementSubset ji;
	ElementSubset mi;
	std::vector<ElementId> lower_star;
	std::vector<ElementId> upper_star;
};

IrreducibleInfo irreducibles(const Lattice& L);

bool is_join_irreducible(const Lattice& L, ElementId x);
bool is_meet_irreducible(const Lattice& L, ElementId x);
bool is_doubly_irreducible(const Lattice& L, ElementId x);

/// x v y = x v z implies x v (y ^ z) = x v y, for all triples.
bool is_sd_join(const Lattice& L);
bool is_sd_meet(const Lattice& L);
inline bool is_sd(const Lattice& L) { return is_sd_join(L) && is_sd_meet(L); }

bool is_lower_semimodular(const Lattice& L);
bool is_upper_semimodular(const Lattice& L);
bool is_distributive(const Lattice& L);

/// Every x in X lies below some y in Y.
bool way_below(const Lattice& L, const ElementSubset& X, const ElementSubset& Y);

/// The canonical join representation of x, or nullopt when x has none
/// (which happens somewhere exactly when L fails SD-join). The bottom is the
/// empty join.
std::optional<ElementSubset> canonical_join_rep(const Lattice& L, ElementId x);
/// Dual of canonical_join_rep; the top is the empty meet.
std::optional<ElementSubset> canonical_meet_rep(const Lattice& L, ElementId x);

/// Greatest element of K(j) = { u : u >= j_*, u !>= j }, if there is one.
/// Throws LatticeError(BadInput) when j is not join-irreducible.
std::optional<ElementId> kappa(const Lattice& L, ElementId j);
/// Least element of { v : v <= m^*, v !<= m }, if there is one.
/// Throws LatticeError(BadInput) when m is not meet-irreducible.
std::optional<ElementId> kappa_sigma(const Lattice& L, ElementId m);

/// kappa is a total bijection Ji -> Mi and kappa_sigma is its inverse.
bool kappa_bijection_check(const Lattice& L);

/// Elements comparable to every element, sorted bottom to top.
std::vector<ElementId> cut_elements(const Lattice& L);
/// Intervals between consecutive cut elements. A one-element lattice has none.
std::vector<Interval> indecomposable_components(const Lattice& L);

/// Day doubling of the interval iv. Ids of L are kept (an element of iv keeps
/// its id as the lower copy); the upper copies of iv get ids n, n+1, ... in
/// ascending order of the original id.
Lattice double_interval(const Lattice& L, Interval iv);

/// For all a, c in S with a <= c, the interval [a, c] lies in S.
bool is_convex_subset(const Lattice& L, const ElementSubset& S);

/// S equals [meet S, join S] as a set. The empty set is not an interval.
bool is_interval(const Lattice& L, const ElementSubset& S);

}  // namespace latmax
