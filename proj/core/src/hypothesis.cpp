#include "latmax/hypothesis.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "latmax/builders.hpp"
#include "latmax/cdim2.hpp"
#include "latmax/error.hpp"
#include "latmax/io.hpp"
#include "latmax/properties.hpp"

namespace latmax {

namespace {

std::string perm_name(const std::vector<int>& p) {
	std::string out;
	for(int x : p) out += (out.empty() ? "" : " ") + std::to_string(x);
	return out;
}

Lattice lattice_of_family(std::vector<ElementSubset> members) {
	std::sort(members.begin(), members.end(), [](const ElementSubset& a, const ElementSubset& b) {
		if(a.count() != b.count()) return a.count() < b.count();
		return a < b;
	});
	const std::size_t n = members.size();
	std::vector<ElementSubset> up(n, ElementSubset(n));
	for(std::size_t a = 0; a < n; ++a) {
		for(std::size_t b = a; b < n; ++b) {
			if(members[a].is_subset_of(members[b])) up[a].insert(static_cast<ElementId>(b));
		}
	}
	return Lattice::from_up_sets(std::move(up));
}

std::vector<int> random_perm(std::size_t m, std::mt19937_64& rng) {
	std::vector<int> p(m);
	std::iota(p.begin(), p.end(), 1);
	std::shuffle(p.begin(), p.end(), rng);
	return p;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
	return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Violation fail_with(std::vector<ElementId> elements, std::string why) {
	return std::make_pair(std::move(elements), std::move(why));
}

Witness witness_for(const Lattice& L, const ElementSubset& C, std::vector<ElementId> elements, std::string detail) {
	return Witness{write_cover_list(L), (~C).elements(), C.elements(), std::move(elements), std::move(detail)};
}

// Precomputed canonical representations for one lattice.
struct CanonicalReps {
	std::vector<std::optional<ElementSubset>> join;
	std::vector<std::optional<ElementSubset>> meet;

	explicit CanonicalReps(const Lattice& L) : join(L.size()), meet(L.size()) {
		for(ElementId x = 0; x < L.size(); ++x) {
			join[x] = canonical_join_rep(L, x);
			meet[x] = canonical_meet_rep(L, x);
		}
	}
};

ElementSubset strict_joinands(const Lattice& L, const CanonicalReps& reps, const ElementSubset& C, ElementId x) {
	ElementSubset out(L.size());
	if(reps.join[x]) {
		reps.join[x]->for_each([&](ElementId j) {
			if(L.interval(j, x).is_subset_of(C)) out.insert(j);
		});
	}
	return out;
}

ElementSubset strict_meetands(const Lattice& L, const CanonicalReps& reps, const ElementSubset& C, ElementId x) {
	ElementSubset out(L.size());
	if(reps.meet[x]) {
		reps.meet[x]->for_each([&](ElementId k) {
			if(L.interval(x, k).is_subset_of(C)) out.insert(k);
		});
	}
	return out;
}

Violation lemma42_impl(const Lattice& L, const LatticeFlags& flags, const CanonicalReps& reps, const ElementSubset& C) {
	Violation v;
	C.for_each([&](ElementId x) {
		if(v) return;
		if(flags.sd_join && x != L.bottom() && strict_joinands(L, reps, C, x).empty()) {
			v = fail_with({x}, "element without a strict canonical joinand");
		} else if(flags.sd_meet && x != L.top() && strict_meetands(L, reps, C, x).empty()) {
			v = fail_with({x}, "element without a strict canonical meetand");
		}
	});
	return v;
}

// One orientation of the configuration lemma; the other is this on the dual.
Violation lemma54_one_side(const Lattice& L, const CanonicalReps& reps, const ElementSubset& C) {
	const ElementSubset S = ~C;
	for(ElementId x : C.elements()) {
		for(ElementId u1 : strict_meetands(L, reps, C, x).elements()) {
			ElementSubset ts = (L.interval(x, u1) & C).without(x);
			for(ElementId t : ts.elements()) {
				ElementSubset u2s = L.up_set(t) & C;
				for(ElementId u2 : u2s.elements()) {
					if(L.leq(u2, u1)) continue;
					ElementSubset span = L.interval(x, u2);
					bool comparable = true;
					(span & C).for_each([&](ElementId y) { comparable = comparable && L.comparable(t, y); });
					if(comparable && !span.intersects(S)) {
						return fail_with({u1, u2, t, x}, "[x,u2] misses the sublattice");
					}
				}
			}
		}
	}
	return std::nullopt;
}

struct NonCoverContext {
	const Lattice& L;
	Lattice dual;
	CanonicalReps reps;
	CanonicalReps dual_reps;

	explicit NonCoverContext(const Lattice& lat) : L(lat), dual(lat.dual()), reps(lat), dual_reps(dual) {}

	Violation check(const ElementSubset& C) const {
		if(auto v = lemma54_one_side(L, reps, C)) return v;
		if(auto v = lemma54_one_side(dual, dual_reps, C)) {
			v->second += " (dual)";
			return v;
		}
		return std::nullopt;
	}
};

CheckReport blank_report(const std::string& claim, const AnalyzedCorpus& corpus) {
	CheckReport r;
	r.claim = claim;
	r.corpus = corpus.corpus().name;
	r.seed = corpus.corpus().seed;
	return r;
}

void skip_if_empty(CheckReport& r) {
	if(r.instances_checked == 0 && r.status == CheckStatus::Holds) {
		r.status = CheckStatus::Skipped;
		if(r.note.empty()) r.note = "no applicable lattice in corpus";
	}
}

CheckReport check_complement_claim(const std::string& claim, const AnalyzedCorpus& corpus) {
	CheckReport report = blank_report(claim, corpus);
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		const LatticeFlags& flags = corpus.flags(i);
		if(!claim_applies(claim, flags, item.geometry.has_value())) continue;
		++report.instances_checked;
		for(const auto& C : corpus.complements(i)) {
			if(auto v = complement_violation(claim, item.lattice, flags, C)) {
				report.fail(witness_for(item.lattice, C, v->first, item.name + ": " + v->second));
				return report;
			}
		}
	}
	skip_if_empty(report);
	return report;
}

bool two_chain(const CorpusItem& item) {
	return item.geometry && item.geometry->chain_count() == 2;
}

}  // namespace

Corpus all_cdim2_geometries(std::size_t m) {
	Corpus c;
	c.name = "all cdim2 geometries, m=" + std::to_string(m);
	std::vector<int> p(m);
	std::iota(p.begin(), p.end(), 1);
	do {
		ConvexGeometry G = build_cdim2(p);
		Lattice L = G.lattice();
		c.items.push_back({"phi=" + perm_name(p), std::move(L), std::move(G)});
	} while(std::next_permutation(p.begin(), p.end()));
	return c;
}

Corpus random_cdim_k(std::size_t m, std::size_t k, std::uint64_t seed, std::size_t count) {
	Corpus c;
	c.name = "random geometries, m=" + std::to_string(m) + ", k=" + std::to_string(k);
	c.seed = seed;
	std::mt19937_64 rng(seed);
	for(std::size_t n = 0; n < count; ++n) {
		std::vector<ChainSpec> chains;
		std::string name;
		for(std::size_t i = 0; i < k; ++i) {
			chains.push_back({random_perm(m, rng)});
			name += (i ? " | " : "") + perm_name(chains.back().perm);
		}
		ConvexGeometry G = build_cg(m, chains);
		Lattice L = G.lattice();
		c.items.push_back({name, std::move(L), std::move(G)});
	}
	return c;
}

Corpus chain_products(const std::vector<std::size_t>& dims) {
	Corpus c;
	c.name = "chain products";
	std::set<std::vector<std::size_t>> shapes;
	std::vector<std::size_t> cur(dims.size(), 1);
	while(true) {
		std::vector<std::size_t> shape;
		for(std::size_t v : cur) {
			if(v > 1) shape.push_back(v);
		}
		std::sort(shape.begin(), shape.end());
		if(!shape.empty()) shapes.insert(shape);
		std::size_t d = 0;
		while(d < dims.size() && cur[d] == dims[d]) cur[d++] = 1;
		if(d == dims.size()) break;
		++cur[d];
	}
	for(const auto& shape : shapes) {
		Lattice L = chain(shape[0]);
		std::string name = std::to_string(shape[0]);
		for(std::size_t i = 1; i < shape.size(); ++i) {
			L = product(L, chain(shape[i]));
			name += "x" + std::to_string(shape[i]);
		}
		c.items.push_back({name, std::move(L), std::nullopt});
	}
	return c;
}

Corpus boolean_corpus(std::size_t k) {
	Corpus c;
	c.name = "boolean lattices";
	for(std::size_t i = 1; i <= k; ++i) c.items.push_back({"2^" + std::to_string(i), boolean_lattice(i), std::nullopt});
	return c;
}

Corpus doubled_sequences(std::size_t depth, std::uint64_t seed, std::size_t count) {
	Corpus c;
	c.name = "doubled lattices, depth<=" + std::to_string(depth);
	c.seed = seed;
	std::mt19937_64 rng(seed);
	const std::vector<std::pair<std::string, Lattice>> bases = {
			{"C2", chain(2)},
			{"C3", chain(3)},
			{"2^2", boolean_lattice(2)},
			{"2x3", product(chain(2), chain(3))},
	};
	for(std::size_t n = 0; n < count; ++n) {
		const auto& base = bases[pick(rng, bases.size())];
		Lattice L = base.second;
		std::string name = base.first;
		const std::size_t steps = 1 + pick(rng, std::max<std::size_t>(depth, 1));
		for(std::size_t s = 0; s < steps; ++s) {
			ElementId a = static_cast<ElementId>(pick(rng, L.size()));
			std::vector<ElementId> above = L.up_set(a).elements();
			ElementId b = above[pick(rng, above.size())];
			L = double_interval(L, {a, b});
			name += " [" + std::to_string(a) + "," + std::to_string(b) + "]";
		}
		if(!is_sd(L)) throw std::logic_error("doubled lattice is not semidistributive: " + name);
		c.items.push_back({name, std::move(L), std::nullopt});
	}
	return c;
}

Corpus glued(const std::vector<Lattice>& parts) {
	if(parts.empty()) throw LatticeError(LatticeError::Kind::BadInput, "glued sum of nothing");
	Lattice L = parts[0];
	for(std::size_t i = 1; i < parts.size(); ++i) L = glued_sum(L, parts[i]);
	Corpus c;
	c.name = "glued sum";
	c.items.push_back({"glued " + std::to_string(parts.size()), std::move(L), std::nullopt});
	return c;
}

Corpus random_closure_lattices(std::size_t ground, std::uint64_t seed, std::size_t count) {
	Corpus c;
	c.name = "random closure systems, ground=" + std::to_string(ground);
	c.seed = seed;
	std::mt19937_64 rng(seed);
	const std::size_t subsets = std::size_t{1} << ground;
	for(std::size_t n = 0; n < count; ++n) {
		std::unordered_set<ElementSubset> seen;
		std::vector<ElementSubset> members;
		auto add = [&](ElementSubset s) {
			if(seen.insert(s).second) members.push_back(std::move(s));
		};
		add(ElementSubset::full(ground));
		const std::size_t picks = 1 + pick(rng, std::max<std::size_t>(subsets / 2, 1));
		for(std::size_t p = 0; p < picks; ++p) {
			std::size_t mask = pick(rng, subsets);
			ElementSubset s(ground);
			for(std::size_t b = 0; b < ground; ++b) {
				if(mask >> b & 1u) s.insert(static_cast<ElementId>(b));
			}
			add(std::move(s));
		}
		for(std::size_t i = 0; i < members.size(); ++i) {
			for(std::size_t k = 0; k < i; ++k) add(members[i] & members[k]);
		}
		c.items.push_back({"closure#" + std::to_string(n), lattice_of_family(std::move(members)), std::nullopt});
	}
	return c;
}

Corpus n5_m3() {
	Corpus c;
	c.name = "N5 and M3";
	c.items.push_back({"N5", pentagon(), std::nullopt});
	c.items.push_back({"M3", diamond(), std::nullopt});
	return c;
}

Corpus concat(std::string name, std::vector<Corpus> parts) {
	Corpus c;
	c.name = std::move(name);
	for(auto& p : parts) {
		if(!c.seed) c.seed = p.seed;
		for(auto& item : p.items) c.items.push_back(std::move(item));
	}
	return c;
}

bool isomorphic(const Lattice& a, const Lattice& b) {
	if(a.size() != b.size()) return false;
	const std::size_t n = a.size();
	using Sig = std::array<std::size_t, 5>;
	auto signature = [](const Lattice& L, ElementId x) {
		return Sig{L.height(x), L.up_set(x).count(), L.down_set(x).count(), L.upper_covers(x).size(),
				L.lower_covers(x).size()};
	};
	std::vector<Sig> sa(n), sb(n);
	for(ElementId x = 0; x < n; ++x) {
		sa[x] = signature(a, x);
		sb[x] = signature(b, x);
	}
	{
		auto ca = sa, cb = sb;
		std::sort(ca.begin(), ca.end());
		std::sort(cb.begin(), cb.end());
		if(ca != cb) return false;
	}
	// Map a's elements bottom-up so every cover check sees mapped neighbours.
	std::vector<ElementId> order(n);
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](ElementId x, ElementId y) { return a.height(x) < a.height(y); });
	std::vector<ElementId> image(n, kNoElement);
	std::vector<char> used(n, 0);
	auto consistent = [&](ElementId x, ElementId y) {
		for(ElementId lower : a.lower_covers(x)) {
			if(!b.covered_by(image[lower], y)) return false;
		}
		return true;
	};
	std::function<bool(std::size_t)> extend = [&](std::size_t k) {
		if(k == n) return true;
		ElementId x = order[k];
		for(ElementId y = 0; y < n; ++y) {
			if(used[y] || sb[y] != sa[x] || !consistent(x, y)) continue;
			image[x] = y;
			used[y] = 1;
			if(extend(k + 1)) return true;
			used[y] = 0;
		}
		image[x] = kNoElement;
		return false;
	};
	// Equal lower-cover counts plus injectivity make the cover map onto.
	return extend(0);
}

Corpus dedup_isomorphic(Corpus corpus) {
	Corpus out;
	out.name = corpus.name + " (up to isomorphism)";
	out.seed = corpus.seed;
	std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
	for(auto& item : corpus.items) {
		const Lattice& L = item.lattice;
		std::vector<std::size_t> key{L.size()};
		std::vector<std::size_t> heights;
		for(ElementId x = 0; x < L.size(); ++x) heights.push_back(L.height(x) * 1000 + L.up_set(x).count());
		std::sort(heights.begin(), heights.end());
		key.insert(key.end(), heights.begin(), heights.end());
		auto& bucket = buckets[key];
		bool duplicate = std::any_of(bucket.begin(), bucket.end(),
				[&](std::size_t idx) { return isomorphic(out.items[idx].lattice, L); });
		if(duplicate) continue;
		bucket.push_back(out.items.size());
		out.items.push_back(std::move(item));
	}
	return out;
}

LatticeFlags lattice_flags(const Lattice& L) {
	return LatticeFlags{is_sd_join(L), is_sd_meet(L), is_distributive(L)};
}

AnalyzedCorpus::AnalyzedCorpus(Corpus corpus, std::size_t oracle_bound)
	: corpus_(std::move(corpus)),
	  bound_(oracle_bound),
	  flags_(corpus_.items.size()),
	  complements_(corpus_.items.size()) {}

const LatticeFlags& AnalyzedCorpus::flags(std::size_t i) const {
	if(!flags_[i]) flags_[i] = lattice_flags(corpus_.items[i].lattice);
	return *flags_[i];
}

const std::vector<ElementSubset>& AnalyzedCorpus::complements(std::size_t i) const {
	if(!complements_[i]) complements_[i] = maximal_complements_oracle(corpus_.items[i].lattice, bound_);
	return *complements_[i];
}

bool is_complement_claim(const std::string& claim) {
	static const std::set<std::string> ids = {"hyp1", "hyp2", "hyp3", "hyp4", "q2", "thm44", "thm45", "thm51_55",
			"distributive_baseline", "bounded_baseline"};
	return ids.count(claim) > 0;
}

bool claim_applies(const std::string& claim, const LatticeFlags& flags, bool is_geometry) {
	if(claim == "hyp1" || claim == "thm51_55" || claim == "lemma52" || claim == "lemma54" || claim == "bounded_baseline") {
		return flags.sd();
	}
	if(claim == "hyp2" || claim == "thm44" || claim == "thm45" || claim == "lemma42") return flags.sd_join || flags.sd_meet;
	if(claim == "hyp4" || claim == "q2") return is_geometry;
	if(claim == "distributive_baseline") return flags.distributive;
	return true;
}

Violation complement_violation(const std::string& claim, const Lattice& L, const LatticeFlags& flags,
		const ElementSubset& C) {
	if(C.empty()) return fail_with({}, "empty complement");
	const ElementSubset mins = L.minimal_elements(C);
	const ElementSubset maxs = L.maximal_elements(C);
	const bool interval = is_interval(L, C);
	const auto ji = [&] {
		ElementSubset s(L.size());
		C.for_each([&](ElementId x) {
			if(is_join_irreducible(L, x)) s.insert(x);
		});
		return s;
	};
	const auto mi = [&] {
		ElementSubset s(L.size());
		C.for_each([&](ElementId x) {
			if(is_meet_irreducible(L, x)) s.insert(x);
		});
		return s;
	};

	if(claim == "hyp1" || claim == "bounded_baseline") {
		if(!interval) return fail_with(mins.elements(), "complement is not an interval");
		return std::nullopt;
	}
	if(claim == "hyp2") {
		if(flags.sd_join) {
			if(mins.count() != 1) return fail_with(mins.elements(), "no unique minimal element");
			ElementSubset cover(L.size());
			maxs.for_each([&](ElementId t) { cover |= L.interval(mins.first(), t); });
			if(cover != C) return fail_with(mins.elements(), "not the union of intervals from the minimum");
		}
		if(flags.sd_meet) {
			if(maxs.count() != 1) return fail_with(maxs.elements(), "no unique maximal element (dual)");
			ElementSubset cover(L.size());
			mins.for_each([&](ElementId b) { cover |= L.interval(b, maxs.first()); });
			if(cover != C) return fail_with(maxs.elements(), "not the union of intervals to the maximum (dual)");
		}
		return std::nullopt;
	}
	if(claim == "hyp3") {
		for(ElementId a : C.elements()) {
			for(ElementId b : (L.up_set(a) & C).elements()) {
				ElementSubset gap = L.interval(a, b) - C;
				if(!gap.empty()) return fail_with({a, gap.first(), b}, "complement is not convex");
			}
		}
		return std::nullopt;
	}
	if(claim == "hyp4") {
		for(ElementId x : C.elements()) {
			bool found = false;
			for(ElementId m : L.lower_covers(x)) {
				if(!C.contains(m) && !L.down_set(m).intersects(C)) found = true;
			}
			if(!found) return fail_with({x}, "no lower cover in M with its whole down-set in M");
		}
		if(!is_convex_subset(L, C)) return fail_with({}, "cover property holds but complement is not convex");
		return std::nullopt;
	}
	if(claim == "q2") {
		if(mins.count() != 1) return fail_with(mins.elements(), "no unique minimum");
		if(ji() != mins) return fail_with(ji().elements(), "join-irreducibles inside C other than the minimum");
		if(mi() != maxs) return fail_with(mi().elements(), "meet-irreducibles inside C other than the maxima");
		return std::nullopt;
	}
	if(claim == "thm44") {
		if(flags.sd_join) {
			for(ElementId c : L.lower_covers(L.top())) {
				if(!C.contains(c)) continue;
				if(maxs != ElementSubset::of(L.size(), {c})) return fail_with({c}, "coatom is not the unique maximal element");
				if(!interval) return fail_with({c}, "complement with a coatom is not an interval");
			}
		}
		if(flags.sd_meet) {
			for(ElementId a : L.upper_covers(L.bottom())) {
				if(!C.contains(a)) continue;
				if(mins != ElementSubset::of(L.size(), {a})) return fail_with({a}, "atom is not the unique minimal element");
				if(!interval) return fail_with({a}, "complement with an atom is not an interval");
			}
		}
		return std::nullopt;
	}
	if(claim == "thm45") {
		if(flags.sd_join && maxs.count() == 1 && !interval) {
			return fail_with(maxs.elements(), "complement with a greatest element is not an interval");
		}
		if(flags.sd_meet && mins.count() == 1 && !interval) {
			return fail_with(mins.elements(), "complement with a least element is not an interval");
		}
		return std::nullopt;
	}
	if(claim == "thm51_55") {
		if(interval) return std::nullopt;
		if(maxs.count() == 1 || mins.count() == 1) return fail_with({}, "greatest or least element but not an interval");
		for(ElementId a : L.upper_covers(L.bottom())) {
			if(C.contains(a)) return fail_with({a}, "contains an atom but is not an interval");
		}
		for(ElementId c : L.lower_covers(L.top())) {
			if(C.contains(c)) return fail_with({c}, "contains a coatom but is not an interval");
		}
		for(ElementId a : C.elements()) {
			bool all = true;
			C.for_each([&](ElementId y) { all = all && L.comparable(a, y); });
			if(all) return fail_with({a}, "element comparable to all of C but not an interval");
		}
		return std::nullopt;
	}
	if(claim == "distributive_baseline") {
		if(!interval) return fail_with({}, "complement is not an interval");
		const ElementSubset lo = ElementSubset::of(L.size(), {L.meet_of(C)});
		const ElementSubset hi = ElementSubset::of(L.size(), {L.join_of(C)});
		if(ji() != lo) return fail_with(ji().elements(), "join-irreducible inside other than the minimum");
		if(mi() != hi) return fail_with(mi().elements(), "meet-irreducible inside other than the maximum");
		return std::nullopt;
	}
	throw std::invalid_argument("not a complement claim: " + claim);
}

CheckReport check_hyp1_sd_interval(const AnalyzedCorpus& corpus) { return check_complement_claim("hyp1", corpus); }
CheckReport check_hyp2_sd_join(const AnalyzedCorpus& corpus) { return check_complement_claim("hyp2", corpus); }
CheckReport check_hyp3_convex(const AnalyzedCorpus& corpus) { return check_complement_claim("hyp3", corpus); }
CheckReport check_hyp4_cover(const AnalyzedCorpus& corpus) { return check_complement_claim("hyp4", corpus); }
CheckReport check_q2_irreducibles(const AnalyzedCorpus& corpus) { return check_complement_claim("q2", corpus); }
CheckReport check_thm_44_gist(const AnalyzedCorpus& corpus) { return check_complement_claim("thm44", corpus); }
CheckReport check_thm_45_greatest(const AnalyzedCorpus& corpus) { return check_complement_claim("thm45", corpus); }
CheckReport check_thm_51_55(const AnalyzedCorpus& corpus) { return check_complement_claim("thm51_55", corpus); }

CheckReport check_distributive_baseline(const AnalyzedCorpus& corpus) {
	return check_complement_claim("distributive_baseline", corpus);
}

CheckReport check_bounded_baseline(const AnalyzedCorpus& corpus) {
	CheckReport report = check_complement_claim("bounded_baseline", corpus);
	std::size_t worst = 0;
	std::size_t several = 0;
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const Lattice& L = corpus.item(i).lattice;
		for(const auto& C : corpus.complements(i)) {
			std::size_t count = 0;
			C.for_each([&](ElementId x) { count += is_join_irreducible(L, x) ? 1 : 0; });
			worst = std::max(worst, count);
			several += count > 1 ? 1 : 0;
		}
	}
	report.note = "max join-irreducibles in one complement: " + std::to_string(worst) +
			"; complements with more than one: " + std::to_string(several);
	return report;
}

std::vector<ElementSubset> sublattice_sample(const Lattice& L, std::uint64_t seed, std::size_t samples) {
	const std::size_t n = L.size();
	std::vector<ElementSubset> out;
	if(n <= 12) {
		for(std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
			ElementSubset s(n);
			for(std::size_t b = 0; b < n; ++b) {
				if(mask >> b & 1u) s.insert(static_cast<ElementId>(b));
			}
			if(is_sublattice(L, s)) out.push_back(std::move(s));
		}
		return out;
	}
	std::mt19937_64 rng(seed);
	std::set<ElementSubset> seen;
	for(std::size_t k = 0; k < samples; ++k) {
		ElementSubset gen(n);
		const std::size_t size = 1 + pick(rng, 3);
		for(std::size_t g = 0; g < size; ++g) gen.insert(static_cast<ElementId>(pick(rng, n)));
		ElementSubset s = generate_sublattice(L, gen);
		if(!s.is_full()) seen.insert(std::move(s));
	}
	for(const auto& C : maximal_complements_oracle(L)) seen.insert(~C);
	return {seen.begin(), seen.end()};
}

Violation lemma42_violation(const Lattice& L, const LatticeFlags& flags, const ElementSubset& C) {
	return lemma42_impl(L, flags, CanonicalReps(L), C);
}

Violation lemma54_violation(const Lattice& L, const ElementSubset& C) {
	return NonCoverContext(L).check(C);
}

CheckReport check_lemma_42(const AnalyzedCorpus& corpus, std::uint64_t seed) {
	CheckReport report = blank_report("lemma42", corpus);
	report.seed = seed;
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		const LatticeFlags& flags = corpus.flags(i);
		if(!claim_applies("lemma42", flags, item.geometry.has_value())) continue;
		CanonicalReps reps(item.lattice);
		for(const auto& S : sublattice_sample(item.lattice, seed + i)) {
			++report.instances_checked;
			ElementSubset C = ~S;
			if(auto v = lemma42_impl(item.lattice, flags, reps, C)) {
				report.fail(witness_for(item.lattice, C, v->first, item.name + ": " + v->second));
				return report;
			}
		}
	}
	skip_if_empty(report);
	return report;
}

CheckReport check_lemma_54(const AnalyzedCorpus& corpus, std::uint64_t seed) {
	CheckReport report = blank_report("lemma54", corpus);
	report.seed = seed;
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		if(!claim_applies("lemma54", corpus.flags(i), item.geometry.has_value())) continue;
		NonCoverContext ctx(item.lattice);
		for(const auto& S : sublattice_sample(item.lattice, seed + i)) {
			++report.instances_checked;
			ElementSubset C = ~S;
			if(auto v = ctx.check(C)) {
				report.fail(witness_for(item.lattice, C, v->first, item.name + ": " + v->second));
				return report;
			}
		}
	}
	skip_if_empty(report);
	return report;
}

CheckReport check_lemma_52(const AnalyzedCorpus& corpus) {
	CheckReport report = blank_report("lemma52", corpus);
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		if(!claim_applies("lemma52", corpus.flags(i), item.geometry.has_value())) continue;
		CheckReport part = check_chain_interval_removal(item.lattice);
		if(part.witness) part.witness->detail = item.name + ": " + part.witness->detail;
		merge_into(report, part);
		if(!report.holds()) return report;
	}
	skip_if_empty(report);
	return report;
}

Violation kappa_violation(const Lattice& L) {
	const bool sdj = is_sd_join(L);
	const bool sdm = is_sd_meet(L);
	if(!sdj && !sdm) return std::nullopt;
	const bool sd = sdj && sdm;
	if(kappa_bijection_check(L) != sd) {
		return fail_with({}, sd ? "SD lattice without a kappa bijection" : "kappa bijection on a lattice that is not SD");
	}
	if(!sd) return std::nullopt;
	for(ElementId j : irreducibles(L).ji.elements()) {
		auto k = kappa(L, j);
		if(!k) return fail_with({j}, "kappa undefined on an SD lattice");
		if(L.upper_covers(*k).size() != 1) return fail_with({j, *k}, "kappa(j) is not meet-irreducible");
		if(L.join(j, *k) != L.upper_covers(*k)[0]) return fail_with({j, *k}, "j v kappa(j) is not kappa(j)^*");
		if(L.meet(j, *k) != L.lower_covers(j)[0]) return fail_with({j, *k}, "j ^ kappa(j) is not j_*");
	}
	return std::nullopt;
}

CheckReport check_kappa(const AnalyzedCorpus& corpus) {
	CheckReport report = blank_report("kappa", corpus);
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		const LatticeFlags& flags = corpus.flags(i);
		if(item.lattice.size() > 12 || (!flags.sd_join && !flags.sd_meet)) continue;
		++report.instances_checked;
		if(auto v = kappa_violation(item.lattice)) {
			report.fail(witness_for(item.lattice, item.lattice.empty_subset(), v->first, item.name + ": " + v->second));
			return report;
		}
	}
	skip_if_empty(report);
	return report;
}

CheckReport check_observations(const AnalyzedCorpus& corpus) {
	CheckReport report = blank_report("observations", corpus);
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		++report.instances_checked;
		for(const auto& C : corpus.complements(i)) {
			CheckReport part = observation_suite(item.lattice, ~C);
			if(!part.holds()) {
				part.witness->detail = item.name + ": " + part.witness->detail;
				report.fail(*part.witness);
				return report;
			}
		}
	}
	skip_if_empty(report);
	return report;
}

namespace {

CheckReport per_geometry(const std::string& claim, const AnalyzedCorpus& corpus,
		CheckReport (*suite)(const ConvexGeometry&)) {
	CheckReport report = blank_report(claim, corpus);
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		if(!two_chain(item)) continue;
		++report.instances_checked;
		CheckReport part = suite(*item.geometry);
		if(!part.holds() && part.witness) {
			part.witness->detail = item.name + ": " + part.witness->detail;
			report.fail(*part.witness);
			return report;
		}
	}
	skip_if_empty(report);
	return report;
}

}  // namespace

CheckReport check_lemma_63(const AnalyzedCorpus& corpus) {
	return per_geometry("lemma63", corpus, lemma_63_suite);
}

CheckReport check_lemma_63_item3(const AnalyzedCorpus& corpus) {
	return per_geometry("lemma63_3", corpus, lemma_63_item3);
}

CheckReport check_lemma_64_65(const AnalyzedCorpus& corpus) {
	CheckReport report = blank_report("lemma64_65", corpus);
	std::size_t skipped = 0;
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		if(!two_chain(item)) continue;
		CheckReport part = lemma_suite_64_65(*item.geometry);
		if(part.status == CheckStatus::Skipped) {
			++skipped;
			continue;
		}
		++report.instances_checked;
		if(!part.holds()) {
			part.witness->detail = item.name + ": " + part.witness->detail;
			report.fail(*part.witness);
			return report;
		}
	}
	report.note = std::to_string(skipped) + " geometries with nontrivial intersection skipped";
	skip_if_empty(report);
	return report;
}

CheckReport check_fast_vs_oracle(const AnalyzedCorpus& corpus) {
	CheckReport report = blank_report("fast_vs_oracle", corpus);
	for(std::size_t i = 0; i < corpus.size(); ++i) {
		const CorpusItem& item = corpus.item(i);
		if(!two_chain(item)) continue;
		++report.instances_checked;
		const ConvexGeometry& G = *item.geometry;
		std::vector<ElementSubset> fast;
		for(const auto& c : decompose_and_run(G.m(), G.chain(0), G.chain(1))) fast.push_back(to_element_subset(G, c));
		std::sort(fast.begin(), fast.end());
		const auto& oracle = corpus.complements(i);
		if(fast != oracle) {
			report.fail(witness_for(G.lattice(), G.lattice().empty_subset(), {},
					item.name + ": fast path gives " + std::to_string(fast.size()) + " complements, oracle " +
							std::to_string(oracle.size())));
			return report;
		}
		for(const auto& C : oracle) {
			try {
				classify_complement(G, C);
			} catch(const GeometryError& e) {
				report.fail(witness_for(G.lattice(), C, {}, item.name + ": " + e.what()));
				return report;
			}
		}
	}
	skip_if_empty(report);
	return report;
}

const std::vector<std::string>& claim_ids() {
	static const std::vector<std::string> ids = {"hyp1", "hyp2", "hyp3", "hyp4", "q2", "thm44", "thm45", "thm51_55",
			"lemma42", "lemma52", "lemma54", "distributive_baseline", "bounded_baseline", "kappa", "observations",
			"lemma63", "lemma63_3", "lemma64_65", "fast_vs_oracle"};
	return ids;
}

CheckReport run_claim(const std::string& claim, const AnalyzedCorpus& corpus, std::uint64_t seed) {
	if(claim == "bounded_baseline") return check_bounded_baseline(corpus);
	if(is_complement_claim(claim)) return check_complement_claim(claim, corpus);
	if(claim == "lemma42") return check_lemma_42(corpus, seed);
	if(claim == "lemma52") return check_lemma_52(corpus);
	if(claim == "lemma54") return check_lemma_54(corpus, seed);
	if(claim == "kappa") return check_kappa(corpus);
	if(claim == "observations") return check_observations(corpus);
	if(claim == "lemma63") return check_lemma_63(corpus);
	if(claim == "lemma63_3") return check_lemma_63_item3(corpus);
	if(claim == "lemma64_65") return check_lemma_64_65(corpus);
	if(claim == "fast_vs_oracle") return check_fast_vs_oracle(corpus);
	throw std::invalid_argument("unknown claim '" + claim + "'");
}

std::optional<bool> reverify_witness(const CheckReport& report) {
	if(report.status != CheckStatus::CounterexampleFound || !report.witness) return false;
	const Witness& w = *report.witness;
	const Lattice L = parse_cover_list_text(w.lattice);
	const ElementSubset C = ElementSubset::of(L.size(), std::span<const ElementId>(w.complement));
	const std::string& claim = report.claim;
	if(is_complement_claim(claim)) return complement_violation(claim, L, lattice_flags(L), C).has_value();
	if(claim == "observations") return !observation_suite(L, ~C).holds();
	if(claim == "lemma42") return lemma42_violation(L, lattice_flags(L), C).has_value();
	if(claim == "lemma54") return lemma54_violation(L, C).has_value();
	if(claim == "lemma52") return !check_chain_interval_removal(L).holds();
	if(claim == "kappa") return kappa_violation(L).has_value();
	return std::nullopt;
}

}  // namespace latmax
