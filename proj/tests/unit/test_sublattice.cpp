#include <gtest/gtest.h>

#include <random>

#include "latmax/builders.hpp"
#include "latmax/properties.hpp"
#include "latmax/sublattice.hpp"
#include "oracles.hpp"

using namespace latmax;

TEST(Generate, BothSchemesMatchPairwiseClosure) {
	std::mt19937_64 rng(11);
	for(const Lattice& L : oracle::zoo()) {
		for(int trial = 0; trial < 6; ++trial) {
			ElementSubset S(L.size());
			for(ElementId x = 0; x < L.size(); ++x) {
				if(rng() % 4 == 0) S.insert(x);
			}
			if(S.empty()) S.insert(static_cast<ElementId>(rng() % L.size()));
			ElementSubset want = oracle::closure(L, S);
			EXPECT_EQ(generate_sublattice(L, S, GenerationScheme::Alternating), want);
			EXPECT_EQ(generate_sublattice(L, S, GenerationScheme::MeetThenJoin), want);
		}
	}
}

TEST(Generate, EmptyGenerator) {
	Lattice C = chain(3);
	try {
		generate_sublattice(C, C.empty_subset());
		FAIL();
	} catch(const SublatticeError& e) {
		EXPECT_EQ(e.kind(), SublatticeError::Kind::EmptyGenerator);
	}
}

TEST(Sublattice, IsSublatticeMatchesBruteForce) {
	Lattice B = boolean_lattice(3);
	for(std::size_t mask = 0; mask < 256; ++mask) {
		ElementSubset S(8);
		for(ElementId b = 0; b < 8; ++b) {
			if(mask >> b & 1) S.insert(b);
		}
		EXPECT_EQ(is_sublattice(B, S), oracle::closed(B, S));
	}
}

TEST(Oracle, MatchesSubsetEnumeration) {
	for(const Lattice& L : oracle::zoo()) {
		if(L.size() > 13) continue;
		EXPECT_EQ(maximal_complements_oracle(L), oracle::maximal_complements(L));
	}
}

TEST(Oracle, EveryResultIsMaximal) {
	for(const Lattice& L : oracle::zoo()) {
		for(const auto& C : maximal_complements_oracle(L)) EXPECT_TRUE(is_maximal_sublattice(L, ~C));
	}
}

TEST(Oracle, SmallCases) {
	// The pentagon loses any one of its three middle elements.
	auto comps = maximal_complements_oracle(pentagon());
	ASSERT_EQ(comps.size(), 3u);
	for(const auto& C : comps) EXPECT_EQ(C.count(), 1u);
	// Two-element chain: nothing to remove without losing 0 or 1.
	EXPECT_TRUE(maximal_complements_oracle(chain(2)).empty());
	EXPECT_EQ(frattini(chain(2)), chain(2).all());
	// 2^2: each atom alone.
	EXPECT_EQ(maximal_complements_oracle(boolean_lattice(2)).size(), 2u);
}

TEST(Oracle, Bound) {
	try {
		maximal_complements_oracle(boolean_lattice(4), 10);
		FAIL();
	} catch(const SublatticeError& e) {
		EXPECT_EQ(e.kind(), SublatticeError::Kind::OracleBoundExceeded);
	}
}

TEST(Oracle, FrattiniIsIntersection) {
	for(const Lattice& L : oracle::zoo()) {
		auto comps = maximal_complements_oracle(L);
		ElementSubset want = L.all();
		for(const auto& C : comps) want &= ~C;
		EXPECT_EQ(frattini(L), want);
		EXPECT_EQ(frattini_from_complements(L, comps), want);
	}
}

TEST(Maximal, Definition) {
	Lattice N = pentagon();
	EXPECT_TRUE(is_maximal_sublattice(N, ElementSubset::of(5, {0, 1, 2, 4})));
	EXPECT_FALSE(is_maximal_sublattice(N, ElementSubset::of(5, {0, 2, 4})));  // not maximal
	EXPECT_FALSE(is_maximal_sublattice(N, N.all()));                          // not proper
	EXPECT_FALSE(is_maximal_sublattice(N, ElementSubset::of(5, {1, 2, 3, 4})));  // no bottom
}

TEST(Canonical, StrictJoinands) {
	// In 2^2 with C = {top}, the atoms are canonical joinands of the top but
	// neither [atom, top] lies in C.
	Lattice B = boolean_lattice(2);
	EXPECT_TRUE(strict_canonical_joinands(B, ElementSubset::of(4, {3}), 3).empty());
	ElementSubset C = ElementSubset::of(4, {1, 3});
	EXPECT_EQ(strict_canonical_joinands(B, C, 3), ElementSubset::of(4, {1}));
	EXPECT_EQ(strict_canonical_meetands(B, ElementSubset::of(4, {0, 1}), 0), ElementSubset::of(4, {1}));
	try {
		strict_canonical_joinands(diamond(), ElementSubset::of(5, {4}), 4);
		FAIL();
	} catch(const SublatticeError& e) {
		EXPECT_EQ(e.kind(), SublatticeError::Kind::NoCanonicalRep);
	}
}

TEST(Bounds, OverAndUnder) {
	Lattice C = chain(4);
	ElementSubset M = ElementSubset::of(4, {0, 1, 3});
	ComplementBounds b = complement_bounds(C, M, 2);
	EXPECT_EQ(b.m_over, 3u);
	EXPECT_EQ(b.m_under, 1u);
	EXPECT_THROW(complement_bounds(C, ElementSubset::of(4, {0, 1}), 2), SublatticeError);
}

TEST(Observations, HoldOnOracleOutput) {
	for(const Lattice& L : oracle::zoo()) {
		for(const auto& C : maximal_complements_oracle(L)) {
			CheckReport r = observation_suite(L, ~C);
			EXPECT_TRUE(r.holds()) << (r.witness ? r.witness->detail : "");
		}
	}
}

TEST(Observations, CatchAFakeMaximalSublattice) {
	// {0, 2, 4} in the pentagon is a sublattice but not maximal; its
	// complement {1, 3} straddles the comparability structure.
	CheckReport r = observation_suite(pentagon(), ElementSubset::of(5, {0, 2, 4}));
	EXPECT_EQ(r.status, CheckStatus::CounterexampleFound);
}

TEST(ChainInterval, HoldsOnSdLattices) {
	for(const Lattice& L : oracle::zoo()) {
		if(!is_sd(L)) continue;
		EXPECT_TRUE(check_chain_interval_removal(L).holds());
	}
}
