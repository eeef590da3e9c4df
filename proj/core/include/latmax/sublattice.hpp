#pragma once

#include <cstddef>
#include <vector>

#include "latmax/lattice.hpp"
#include "latmax/report.hpp"

namespace latmax {

/// The two ways of growing <S> to a fixed point:
///  - Alternating: S_{k+1} = S_k^v  u  S_k^^
///  - MeetThenJoin: S_{k+1} = (S_k^^)^v
/// where T^v (T^^) is the set of all finite joins (meets) of members of T.
enum class GenerationScheme { Alternating, MeetThenJoin };

/// Smallest sublattice containing S. Throws SublatticeError(EmptyGenerator).
ElementSubset generate_sublattice(const Lattice& L, const ElementSubset& S,
		GenerationScheme scheme = GenerationScheme::Alternating);

/// Closed under pairwise meet and join.
bool is_sublattice(const Lattice& L, const ElementSubset& S);

/// M is a proper sublattice containing bottom and top, and adjoining any
/// outside element generates all of L.
bool is_maximal_sublattice(const Lattice& L, const ElementSubset& M);

inline constexpr std::size_t kDefaultOracleBound = 256;

/// Exact set of complements L \ M over all maximal sublattices M, found by
/// growing minimal removable sets from single seeds. Sorted, deduplicated,
/// each one re-verified with is_maximal_sublattice.
/// Throws SublatticeError(OracleBoundExceeded) when |L| > bound.
std::vector<ElementSubset> maximal_complements_oracle(const Lattice& L, std::size_t bound = kDefaultOracleBound);

/// Intersection of all maximal sublattices (L itself when there are none).
ElementSubset frattini(const Lattice& L, std::size_t bound = kDefaultOracleBound);
ElementSubset frattini_from_complements(const Lattice& L, const std::vector<ElementSubset>& complements);

/// Canonical joinands j of x with [j, x] inside C.
/// Throws SublatticeError(NoCanonicalRep) when x has no canonical join representation.
ElementSubset strict_canonical_joinands(const Lattice& L, const ElementSubset& C, ElementId x);
/// Canonical meetands k of x with [x, k] inside C.
ElementSubset strict_canonical_meetands(const Lattice& L, const ElementSubset& C, ElementId x);

/// m_over = meet of { m in M : m > c },  m_under = join of { m in M : m < c }.
struct ComplementBounds {
	ElementId c = 0;
	ElementId m_over = 0;
	ElementId m_under = 0;
};

/// Throws SublatticeError(UndefinedBound) when either defining set is empty.
ComplementBounds complement_bounds(const Lattice& L, const ElementSubset& M, ElementId c);

/// Runs the general observations on complements of maximal sublattices
/// against a claimed maximal sublattice M. Reports the first violated one.
CheckReport observation_suite(const Lattice& L, const ElementSubset& M);

/// For w <= x <= y <= z with x a canonical joinand of z and y a canonical
/// meetand of w, L \ [x, y] must be a sublattice. Meant for SD lattices.
CheckReport check_chain_interval_removal(const Lattice& L);

}  // namespace latmax
