#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latmax/lattice.hpp"
#include "latmax/report.hpp"

namespace latmax {

/// One generating chain: perm[0] <_i perm[1] <_i ... over the points 1..m.
struct ChainSpec {
	std::vector<int> perm;

	friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// Throws GeometryError(BadPermutation) unless perm is a bijection on 1..m.
void validate_permutation(std::size_t m, const std::vector<int>& perm);

/// Intersection-closed family generated by the prefix sets of the chains,
/// with its lattice view (inclusion order). Ground points are 1-based;
/// point p is bit p-1 of a family set. Chains are indexed from 0 in this
/// API, so chain 0 is C_1 and chain 1 is C_2.
class ConvexGeometry {
public:
	std::size_t m() const { return m_; }
	std::size_t chain_count() const { return chains_.size(); }
	const ChainSpec& chain(std::size_t i) const { return chains_[i]; }
	const std::vector<ChainSpec>& chains() const { return chains_; }

	/// Family members sorted by size, then by the ElementSubset order.
	/// Element id a of the lattice view is family()[a].
	const std::vector<ElementSubset>& family() const { return family_; }
	const ElementSubset& set_of(ElementId a) const { return family_[a]; }
	const Lattice& lattice() const { return lattice_; }

	std::optional<ElementId> find(const ElementSubset& points) const;
	/// Throws LatticeError(BadInput) when the set is not in the family.
	ElementId id_of(const ElementSubset& points) const;
	ElementId id_of_points(const std::vector<int>& points) const;

	bool on_chain(std::size_t i, ElementId a) const { return on_chain_[i].contains(a); }
	/// Bit i set when a is a prefix of chain i.
	std::vector<bool> chain_member(ElementId a) const;

	/// 1-based position of point x on chain i.
	std::size_t position(std::size_t i, int x) const { return pos_[i][static_cast<std::size_t>(x)]; }
	/// Point at 1-based position k on chain i.
	int point_at(std::size_t i, std::size_t k) const { return chains_[i].perm[k - 1]; }
	/// Prefix of chain i with k points, k in [0, m].
	ElementId prefix(std::size_t i, std::size_t k) const { return prefix_[i][k]; }

	/// C_i(x).
	ElementId c_index(std::size_t i, int x) const { return prefix(i, position(i, x)); }
	/// (x), the intersection of all C_i(x).
	ElementId closure_pt(int x) const { return closure_[static_cast<std::size_t>(x)]; }

	std::vector<int> points(ElementId a) const;
	ElementSubset point_set(const std::vector<int>& points) const;
	/// "{1,2,5}".
	std::string describe(ElementId a) const;

private:
	friend ConvexGeometry build_cg(std::size_t m, const std::vector<ChainSpec>& chains, bool verify);

	std::size_t m_ = 0;
	std::vector<ChainSpec> chains_;
	std::vector<ElementSubset> family_;
	std::unordered_map<ElementSubset, ElementId> index_;
	Lattice lattice_;
	std::vector<ElementSubset> on_chain_;
	std::vector<std::vector<std::size_t>> pos_;
	std::vector<std::vector<ElementId>> prefix_;
	std::vector<ElementId> closure_;
};

/// Closes all prefix sets under pairwise intersection and builds the lattice
/// view. With verify set, also checks the structural invariants (one point
/// per cover, meet-irreducibles on chains, a = meet of its chain prefixes,
/// SD-join, lower semimodular) and throws std::logic_error on a violation.
/// Throws GeometryError(BadPermutation) on bad chains.
ConvexGeometry build_cg(std::size_t m, const std::vector<ChainSpec>& chains, bool verify = true);

/// Two-chain shorthand: chain 1 is the identity, chain 2 is phi.
ConvexGeometry build_cdim2(const std::vector<int>& phi, bool verify = true);

/// Least prefix of chain i containing a.
ElementId chain_prefix(const ConvexGeometry& G, std::size_t i, ElementId a);

/// M_i(x): least proper meet-irreducible prefix of chain i containing x.
/// Throws GeometryError(TopOnly) when no such prefix exists.
ElementId least_mi_on_chain(const ConvexGeometry& G, std::size_t i, int x);
std::optional<ElementId> try_least_mi_on_chain(const ConvexGeometry& G, std::size_t i, int x);

ElementId point_closure(const ConvexGeometry& G, int x);

/// Width of the meet-irreducibles (Dilworth).
std::size_t cdim(const ConvexGeometry& G);

/// No proper nonempty family member lies on every generating chain.
bool has_trivial_intersection(const ConvexGeometry& G);

/// Structural facts about (x), C_i(x) and M_i(x) for two-chain geometries:
/// the meet and intersection identities, the chain prefix of any element,
/// the split of [0, C_i(x)], and where (x) sits when C_i(x) is the top.
/// Parts that need M_i(x) are skipped for points where it does not exist.
CheckReport lemma_63_suite(const ConvexGeometry& G);

/// With C_1(x) < C_1(x1) and C_2(x) < C_2(x2) covers on their chains: if x1
/// is in C_2(x) or x1 = x2 then C_1(x) = M_1(x); checked in both chain
/// orders. Fails already for m = 3, phi = 3 1 2, x = 1.
CheckReport lemma_63_item3(const ConvexGeometry& G);

}  // namespace latmax
