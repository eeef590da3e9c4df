#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "latmax/convex_geometry.hpp"
#include "latmax/report.hpp"

namespace latmax {

enum class ComplementShape { IntervalChain1, IntervalChain2, UnionBothChains };
enum class ComplementClass { Type1, Type2, Type3 };

const char* to_string(ComplementShape s);
const char* to_string(ComplementClass c);
ComplementShape complement_shape_from_string(const std::string& s);
ComplementClass complement_class_from_string(const std::string& s);

struct OpCounter {
	std::uint64_t comparisons = 0;
	std::uint64_t set_ops = 0;

	void reset() { *this = OpCounter{}; }
};

/// Output of the fast path: which intervals, not their contents.
struct SymbolicComplement {
	int j = 0;
	ComplementShape shape = ComplementShape::IntervalChain1;
	ComplementClass cls = ComplementClass::Type1;
	/// The interval collapses to {(j)}.
	bool singleton = false;

	friend bool operator==(const SymbolicComplement&, const SymbolicComplement&) = default;
};

struct FastResult {
	std::vector<SymbolicComplement> complements;
	OpCounter ops;
};

/// Linear-time enumeration for the geometry generated by 1 < 2 < ... < m and
/// phi(1) < phi(2) < ... < phi(m). Ascending j, chain-1 interval first.
/// Throws GeometryError(BadPermutation).
FastResult fast_complements(std::size_t m, const std::vector<int>& phi);

/// Interval [lo, hi] of the lattice view, both ends as sorted point lists.
struct PointInterval {
	std::vector<int> lo;
	std::vector<int> hi;

	friend bool operator==(const PointInterval&, const PointInterval&) = default;
};

struct Complement {
	int j = 0;
	ComplementShape shape = ComplementShape::IntervalChain1;
	ComplementClass cls = ComplementClass::Type1;
	std::vector<PointInterval> intervals;

	bool singleton() const { return intervals.size() == 1 && intervals[0].lo == intervals[0].hi; }

	friend bool operator==(const Complement&, const Complement&) = default;
};

/// Point lists for one symbolic complement of the (identity, phi) geometry.
Complement materialize(const std::vector<int>& phi, const SymbolicComplement& s);
std::vector<Complement> materialize_all(const std::vector<int>& phi, const std::vector<SymbolicComplement>& list);

/// Element set of the complement inside G's lattice view.
ElementSubset to_element_subset(const ConvexGeometry& G, const Complement& c);

/// `{(2)}`, `[(5),C1(5)]`, `[(8),C1(8)] u [(8),C2(8)]`.
std::string to_text(const Complement& c);

/// JSON array of {"j", "shape", "class", "intervals": [[lo, hi], ...]}.
std::string to_json(const std::vector<Complement>& list);
std::vector<Complement> complements_from_json(const std::string& text);

/// Any two chains: relabels so the first chain is the identity, cuts the
/// ground set at the common chain elements, runs the fast path on each block
/// and lifts the results back. Point lists use the original labels.
std::vector<Complement> decompose_and_run(std::size_t m, const ChainSpec& first, const ChainSpec& second);

/// Which of the three shapes C has. C must be a complement of a maximal
/// sublattice of a two-chain geometry. Throws GeometryError(NoCaseMatches)
/// when no case, or more than one, fits.
ComplementClass classify_complement(const ConvexGeometry& G, const ElementSubset& C);

/// For every j whose chain prefixes both have an upper cover on their chain,
/// checks which of [(j),C_i(j)] and their union are complements of
/// sublattices. Skipped unless G has two chains with trivial intersection.
/// The claim that [(j),C_i(j)] is never such a complement when x_i lies
/// outside C_i'(j) is checked after everything else; it fails for m = 4,
/// phi = 2 4 1 3, j = 1.
CheckReport lemma_suite_64_65(const ConvexGeometry& G);

}  // namespace latmax
