#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmax/convex_geometry.hpp"
#include "latmax/lattice.hpp"
#include "latmax/report.hpp"
#include "latmax/sublattice.hpp"

namespace latmax {

struct CorpusItem {
	std::string name;
	Lattice lattice;
	std::optional<ConvexGeometry> geometry;
};

struct Corpus {
	std::string name;
	std::vector<CorpusItem> items;
	std::optional<std::uint64_t> seed;
};

/// One item per permutation phi of 1..m, in lexicographic order, each the
/// geometry of (identity, phi).
Corpus all_cdim2_geometries(std::size_t m);
/// `count` geometries on m points with k uniformly random chains.
Corpus random_cdim_k(std::size_t m, std::size_t k, std::uint64_t seed, std::size_t count);
/// Products of chains with at most dims[i] elements per factor (factors of
/// one element dropped), one item per distinct multiset of factor sizes.
Corpus chain_products(const std::vector<std::size_t>& dims);
/// Boolean lattices 2^1 .. 2^k.
Corpus boolean_corpus(std::size_t k);
/// `count` lattices, each a small distributive lattice followed by one to
/// `depth` doublings of random intervals. Every output is checked to be SD.
Corpus doubled_sequences(std::size_t depth, std::uint64_t seed, std::size_t count);
/// Glued sum of the parts, bottom to top. A single item.
Corpus glued(const std::vector<Lattice>& parts);
/// Random intersection-closed families on a ground set of `ground` points.
Corpus random_closure_lattices(std::size_t ground, std::uint64_t seed, std::size_t count);
/// Pentagon and diamond.
Corpus n5_m3();

Corpus concat(std::string name, std::vector<Corpus> parts);

/// Exact isomorphism test: degree and height refinement, then backtracking
/// over cover-preserving bijections.
bool isomorphic(const Lattice& a, const Lattice& b);
/// Keeps the first item of every isomorphism class.
Corpus dedup_isomorphic(Corpus corpus);

struct LatticeFlags {
	bool sd_join = false;
	bool sd_meet = false;
	bool distributive = false;

	bool sd() const { return sd_join && sd_meet; }
};

LatticeFlags lattice_flags(const Lattice& L);

/// A corpus with per-item oracle complements and flags, computed on first use.
class AnalyzedCorpus {
public:
	explicit AnalyzedCorpus(Corpus corpus, std::size_t oracle_bound = kDefaultOracleBound);

	const Corpus& corpus() const { return corpus_; }
	std::size_t size() const { return corpus_.items.size(); }
	const CorpusItem& item(std::size_t i) const { return corpus_.items[i]; }
	const LatticeFlags& flags(std::size_t i) const;
	/// Complements of all maximal sublattices, as returned by the oracle.
	const std::vector<ElementSubset>& complements(std::size_t i) const;
	std::size_t oracle_bound() const { return bound_; }

private:
	Corpus corpus_;
	std::size_t bound_;
	mutable std::vector<std::optional<LatticeFlags>> flags_;
	mutable std::vector<std::optional<std::vector<ElementSubset>>> complements_;
};

using Violation = std::optional<std::pair<std::vector<ElementId>, std::string>>;

/// The complement-level claims: hyp1 hyp2 hyp3 hyp4 q2 thm44 thm45 thm51_55
/// distributive_baseline bounded_baseline. Each applies to complements of
/// maximal sublattices of lattices that meet the claim's class condition.
bool is_complement_claim(const std::string& claim);
/// Whether the claim applies to a lattice with these flags (and geometry).
bool claim_applies(const std::string& claim, const LatticeFlags& flags, bool is_geometry);
/// Failure of one complement-level claim on one complement, or nullopt.
Violation complement_violation(const std::string& claim, const Lattice& L, const LatticeFlags& flags,
		const ElementSubset& C);

CheckReport check_hyp1_sd_interval(const AnalyzedCorpus& corpus);
CheckReport check_hyp2_sd_join(const AnalyzedCorpus& corpus);
CheckReport check_hyp3_convex(const AnalyzedCorpus& corpus);
CheckReport check_hyp4_cover(const AnalyzedCorpus& corpus);
CheckReport check_q2_irreducibles(const AnalyzedCorpus& corpus);
CheckReport check_thm_44_gist(const AnalyzedCorpus& corpus);
CheckReport check_thm_45_greatest(const AnalyzedCorpus& corpus);
CheckReport check_thm_51_55(const AnalyzedCorpus& corpus);
/// The note reports the largest number of join-irreducibles in one complement.
CheckReport check_distributive_baseline(const AnalyzedCorpus& corpus);
CheckReport check_bounded_baseline(const AnalyzedCorpus& corpus);

/// Sublattices used by the lemma checks: every proper nonempty sublattice
/// when |L| <= 12, otherwise `samples` seeded generated sublattices plus the
/// maximal ones.
std::vector<ElementSubset> sublattice_sample(const Lattice& L, std::uint64_t seed, std::size_t samples = 64);

/// Failure of the strict-joinand lemma on complement C = L \ S of a sublattice.
Violation lemma42_violation(const Lattice& L, const LatticeFlags& flags, const ElementSubset& C);
/// Failure of the (u1, u2, t, x) configuration lemma on C = L \ S.
Violation lemma54_violation(const Lattice& L, const ElementSubset& C);

CheckReport check_lemma_42(const AnalyzedCorpus& corpus, std::uint64_t seed = 1);
CheckReport check_lemma_54(const AnalyzedCorpus& corpus, std::uint64_t seed = 1);
/// Interval removal for canonical joinand / meetand pairs, on SD items.
CheckReport check_lemma_52(const AnalyzedCorpus& corpus);

/// On items with |L| <= 12 that are SD-join or SD-meet: the kappa bijection
/// holds exactly when L is SD, and on SD items j v kappa(j) = kappa(j)^*
/// and j ^ kappa(j) = j_*.
Violation kappa_violation(const Lattice& L);
CheckReport check_kappa(const AnalyzedCorpus& corpus);

/// observation_suite on every oracle complement of every item.
CheckReport check_observations(const AnalyzedCorpus& corpus);
/// lemma_63_suite on every two-chain geometry item.
CheckReport check_lemma_63(const AnalyzedCorpus& corpus);
/// lemma_63_item3 on every two-chain geometry item.
CheckReport check_lemma_63_item3(const AnalyzedCorpus& corpus);
/// lemma_suite_64_65 on every two-chain geometry item.
CheckReport check_lemma_64_65(const AnalyzedCorpus& corpus);
/// fast_complements agrees with the oracle and classify_complement accepts
/// every complement, on identity-first two-chain geometry items.
CheckReport check_fast_vs_oracle(const AnalyzedCorpus& corpus);

/// Every claim id understood by run_claim, in a fixed order.
const std::vector<std::string>& claim_ids();
/// Throws std::invalid_argument on an unknown id.
CheckReport run_claim(const std::string& claim, const AnalyzedCorpus& corpus, std::uint64_t seed = 1);

/// Replays a counterexample from its witness alone. True when the failure
/// reproduces, false when it does not, nullopt when the claim needs more
/// than a cover list (the geometry-based claims).
std::optional<bool> reverify_witness(const CheckReport& report);

}  // namespace latmax
