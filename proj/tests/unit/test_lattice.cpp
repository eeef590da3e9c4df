#include <gtest/gtest.h>

#include <sstream>

#include "latmax/builders.hpp"
#include "latmax/io.hpp"
#include "latmax/lattice.hpp"
#include "latmax/properties.hpp"
#include "oracles.hpp"

using namespace latmax;

namespace {

Lattice from_text(const std::string& text) { return parse_cover_list_text(text); }

}  // namespace

TEST(Lattice, MeetJoinMatchBruteForce) {
	for(const Lattice& L : oracle::zoo()) {
		for(ElementId a = 0; a < L.size(); ++a)
			for(ElementId b = 0; b < L.size(); ++b) {
				ASSERT_EQ(L.meet(a, b), *oracle::glb(L, a, b));
				ASSERT_EQ(L.join(a, b), *oracle::lub(L, a, b));
			}
	}
}

TEST(Lattice, CoverListAcceptsNonCoverPairs) {
	// 0 < 2 is implied by 0 < 1 < 2 and must drop out of the covers.
	std::vector<CoverPair> pairs = {{0, 1}, {1, 2}, {0, 2}};
	Lattice L = Lattice::from_covers(3, pairs);
	EXPECT_EQ(L.cover_pairs(), (std::vector<CoverPair>{{0, 1}, {1, 2}}));
	EXPECT_EQ(L.bottom(), 0u);
	EXPECT_EQ(L.top(), 2u);
	EXPECT_EQ(L.height(2), 2u);
}

TEST(Lattice, RejectsNonLattices) {
	// Two maximal elements.
	std::vector<CoverPair> two_tops = {{0, 1}, {0, 2}};
	try {
		Lattice::from_covers(3, two_tops);
		FAIL();
	} catch(const LatticeError& e) {
		EXPECT_EQ(e.kind(), LatticeError::Kind::NotALattice);
	}
	// Bowtie: 1 and 2 have two minimal upper bounds.
	std::vector<CoverPair> bowtie = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
	EXPECT_THROW(Lattice::from_covers(6, bowtie), LatticeError);
}

TEST(Lattice, RejectsCycles) {
	std::vector<CoverPair> cyc = {{0, 1}, {1, 2}, {2, 1}};
	try {
		Lattice::from_covers(3, cyc);
		FAIL();
	} catch(const LatticeError& e) {
		EXPECT_EQ(e.kind(), LatticeError::Kind::CyclicInput);
	}
}

TEST(Lattice, BadIds) {
	std::vector<CoverPair> bad = {{0, 7}};
	EXPECT_THROW(Lattice::from_covers(2, bad), LatticeError);
}

TEST(Lattice, DualKeepsIds) {
	Lattice N = pentagon();
	Lattice D = N.dual();
	EXPECT_EQ(D.bottom(), N.top());
	EXPECT_EQ(D.top(), N.bottom());
	for(ElementId a = 0; a < N.size(); ++a)
		for(ElementId b = 0; b < N.size(); ++b) {
			EXPECT_EQ(D.leq(a, b), N.leq(b, a));
			EXPECT_EQ(D.meet(a, b), N.join(a, b));
		}
}

TEST(Io, CoverListRoundTrip) {
	for(const Lattice& L : oracle::zoo()) {
		Lattice back = from_text(write_cover_list(L));
		EXPECT_EQ(back.cover_pairs(), L.cover_pairs());
	}
}

TEST(Io, CommentsAndBlankLines) {
	Lattice L = from_text("# pentagon\n\n5\n0 1  # a\n1 2\n0 3\n2 4\n3 4\n");
	EXPECT_EQ(L.size(), 5u);
	EXPECT_FALSE(is_distributive(L));
}

TEST(Io, ParseErrorsCarryLine) {
	try {
		from_text("3\n0 1\n1 x\n");
		FAIL();
	} catch(const ParseError& e) {
		EXPECT_EQ(e.line(), 3u);
	}
	EXPECT_THROW(from_text(""), ParseError);
	EXPECT_THROW(from_text("2\n0 1 2\n"), ParseError);
}

TEST(Io, ChainFile) {
	ChainFile f = parse_chain_file_text("4 2\n1 2 3 4\n2 4 1 3\n");
	EXPECT_EQ(f.m, 4u);
	ASSERT_EQ(f.chains.size(), 2u);
	EXPECT_EQ(f.chains[1], (std::vector<int>{2, 4, 1, 3}));
	EXPECT_EQ(parse_chain_file_text(write_chain_file(f)).chains, f.chains);
	EXPECT_TRUE(looks_like_chain_file("# x\n4 2\n1 2 3 4\n2 4 1 3\n"));
	EXPECT_FALSE(looks_like_chain_file("3\n0 1\n1 2\n"));
	EXPECT_THROW(parse_chain_file_text("4 2\n1 2 3 4\n"), ParseError);
}

TEST(Io, IntList) {
	EXPECT_EQ(parse_int_list("3 6, 7\t10"), (std::vector<int>{3, 6, 7, 10}));
	EXPECT_THROW(parse_int_list("1 two"), ParseError);
}

TEST(Builders, Sizes) {
	EXPECT_EQ(chain(1).size(), 1u);
	EXPECT_EQ(chain(5).size(), 5u);
	EXPECT_EQ(boolean_lattice(3).size(), 8u);
	EXPECT_EQ(product(chain(2), chain(3)).size(), 6u);
	EXPECT_EQ(glued_sum(chain(3), boolean_lattice(2)).size(), 6u);
	EXPECT_TRUE(is_distributive(boolean_lattice(3)));
	EXPECT_TRUE(is_distributive(product(chain(3), chain(4))));
}

TEST(Builders, PentagonAndDiamond) {
	Lattice N = pentagon();
	EXPECT_TRUE(N.lt(1, 2));
	EXPECT_FALSE(N.comparable(2, 3));
	EXPECT_TRUE(is_sd(N));
	EXPECT_FALSE(is_distributive(N));
	Lattice M = diamond();
	EXPECT_FALSE(is_sd_join(M));
	EXPECT_FALSE(is_sd_meet(M));
}

TEST(Properties, SemidistributivityMatchesTripleScan) {
	for(const Lattice& L : oracle::zoo()) {
		EXPECT_EQ(is_sd_join(L), oracle::sd_join(L));
		EXPECT_EQ(is_sd_meet(L), oracle::sd_meet(L));
		EXPECT_EQ(is_distributive(L), oracle::distributive(L));
	}
}

TEST(Properties, Irreducibles) {
	for(const Lattice& L : oracle::zoo()) {
		IrreducibleInfo info = irreducibles(L);
		for(ElementId x = 0; x < L.size(); ++x) {
			EXPECT_EQ(info.ji.contains(x), oracle::ji(L, x));
			EXPECT_EQ(info.mi.contains(x), oracle::mi(L, x));
			EXPECT_EQ(is_doubly_irreducible(L, x), oracle::ji(L, x) && oracle::mi(L, x));
			if(info.ji.contains(x)) {
				EXPECT_TRUE(L.covered_by(info.lower_star[x], x));
			}
		}
	}
}

TEST(Properties, CanonicalJoinRepMatchesSubsetSearch) {
	for(const Lattice& L : oracle::zoo()) {
		if(L.size() > 12) continue;
		bool all_exist = true;
		for(ElementId x = 0; x < L.size(); ++x) {
			auto got = canonical_join_rep(L, x);
			auto want = oracle::canonical_join_rep(L, x);
			ASSERT_EQ(got.has_value(), want.has_value());
			if(got) {
				EXPECT_EQ(*got, *want);
			}
			all_exist = all_exist && got.has_value();
		}
		EXPECT_EQ(all_exist, is_sd_join(L));
	}
}

TEST(Properties, CanonicalMeetRepIsDualJoinRep) {
	for(const Lattice& L : oracle::zoo()) {
		if(L.size() > 12) continue;
		Lattice D = L.dual();
		for(ElementId x = 0; x < L.size(); ++x) EXPECT_EQ(canonical_meet_rep(L, x), canonical_join_rep(D, x));
	}
}

TEST(Properties, KappaMatchesDefinition) {
	for(const Lattice& L : oracle::zoo()) {
		for(ElementId j = 0; j < L.size(); ++j) {
			if(!oracle::ji(L, j)) continue;
			EXPECT_EQ(kappa(L, j), oracle::kappa(L, j));
		}
	}
	EXPECT_THROW(kappa(pentagon(), 4), LatticeError);
}

TEST(Properties, KappaBijectionAgreesWithSd) {
	for(const Lattice& L : oracle::zoo()) {
		if(L.size() > 12) continue;
		if(!is_sd_join(L) && !is_sd_meet(L)) continue;
		EXPECT_EQ(kappa_bijection_check(L), is_sd(L));
	}
}

TEST(Properties, WayBelow) {
	Lattice B = boolean_lattice(2);
	EXPECT_TRUE(way_below(B, ElementSubset::of(4, {1, 2}), ElementSubset::of(4, {3})));
	EXPECT_FALSE(way_below(B, ElementSubset::of(4, {3}), ElementSubset::of(4, {1, 2})));
}

TEST(Properties, CutsAndComponents) {
	Lattice G = glued_sum(glued_sum(boolean_lattice(2), chain(2)), pentagon());
	std::vector<ElementId> cuts = cut_elements(G);
	ASSERT_EQ(cuts.size(), 4u);
	EXPECT_EQ(cuts.front(), G.bottom());
	EXPECT_EQ(cuts.back(), G.top());
	EXPECT_EQ(indecomposable_components(G).size(), 3u);
	EXPECT_TRUE(indecomposable_components(chain(1)).empty());
}

TEST(Properties, DoublingKeepsIdsAndAddsTheInterval) {
	Lattice B = boolean_lattice(2);
	// [a, 1] with a = {0}: the result is 2x3.
	Lattice D = double_interval(B, {1, 3});
	EXPECT_EQ(D.size(), 6u);
	EXPECT_TRUE(is_sd(D));
	EXPECT_TRUE(is_distributive(D));
	EXPECT_TRUE(D.lt(1, 4));  // lower copy of a under its upper copy
	EXPECT_TRUE(D.lt(3, 5));
	EXPECT_EQ(D.top(), 5u);
	// Doubling one atom gives the pentagon.
	Lattice P = double_interval(B, {1, 1});
	EXPECT_EQ(P.size(), 5u);
	EXPECT_TRUE(is_sd(P));
	EXPECT_FALSE(is_distributive(P));
	// Doubling a point of a chain gives a longer chain.
	EXPECT_EQ(double_interval(chain(3), {1, 1}).cover_pairs().size(), 3u);
}

TEST(Properties, SemimodularityOnBooleanAndPentagon) {
	EXPECT_TRUE(is_lower_semimodular(boolean_lattice(3)));
	EXPECT_TRUE(is_upper_semimodular(boolean_lattice(3)));
	EXPECT_FALSE(is_lower_semimodular(pentagon()));
	EXPECT_FALSE(is_upper_semimodular(pentagon()));
}

TEST(Properties, ConvexAndInterval) {
	Lattice C = chain(4);
	EXPECT_TRUE(is_interval(C, ElementSubset::of(4, {1, 2})));
	EXPECT_FALSE(is_interval(C, ElementSubset::of(4, {1, 3})));
	EXPECT_FALSE(is_convex_subset(C, ElementSubset::of(4, {1, 3})));
	EXPECT_FALSE(is_interval(C, C.empty_subset()));
	Lattice B = boolean_lattice(2);
	EXPECT_TRUE(is_convex_subset(B, ElementSubset::of(4, {1, 2})));
	EXPECT_FALSE(is_interval(B, ElementSubset::of(4, {1, 2})));
}
