#include "latmax/builders.hpp"

#include <vector>

namespace latmax {

Lattice chain(std::size_t k) {
	std::vector<CoverPair> covers;
	for(ElementId i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
	return Lattice::from_covers(k, covers);
}

Lattice boolean_lattice(std::size_t k) {
	const std::size_t n = std::size_t{1} << k;
	std::vector<CoverPair> covers;
	for(ElementId s = 0; s < n; ++s) {
		for(std::size_t b = 0; b < k; ++b) {
			if(!(s & (1u << b))) covers.emplace_back(s, s | (1u << b));
		}
	}
	return Lattice::from_covers(n, covers);
}

Lattice product(const Lattice& first, const Lattice& second) {
	const std::size_t n1 = first.size();
	const std::size_t n2 = second.size();
	std::vector<CoverPair> covers;
	for(auto [a, b] : first.cover_pairs()) {
		for(ElementId y = 0; y < n2; ++y) covers.emplace_back(a * n2 + y, b * n2 + y);
	}
	for(auto [a, b] : second.cover_pairs()) {
		for(ElementId x = 0; x < n1; ++x) covers.emplace_back(x * n2 + a, x * n2 + b);
	}
	return Lattice::from_covers(n1 * n2, covers);
}

Lattice glued_sum(const Lattice& lower, const Lattice& upper) {
	const std::size_t n1 = lower.size();
	std::vector<ElementId> relabel(upper.size());
	ElementId next = static_cast<ElementId>(n1);
	for(ElementId u = 0; u < upper.size(); ++u) {
		relabel[u] = u == upper.bottom() ? lower.top() : next++;
	}
	std::vector<CoverPair> covers = lower.cover_pairs();
	for(auto [a, b] : upper.cover_pairs()) covers.emplace_back(relabel[a], relabel[b]);
	return Lattice::from_covers(next, covers);
}

Lattice pentagon() {
	const std::vector<CoverPair> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
	return Lattice::from_covers(5, covers);
}

Lattice diamond() {
	const std::vector<CoverPair> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
	return Lattice::from_covers(5, covers);
}

}  // namespace latmax
