#pragma once

#include <cstddef>

#include "latmax/lattice.hpp"

namespace latmax {

/// Chain 0 < 1 < ... < k-1 with k elements.
Lattice chain(std::size_t k);

/// Boolean lattice of all subsets of a k-set; element id is the subset bitmask.
Lattice boolean_lattice(std::size_t k);

/// Direct product; element (a, b) gets id a * |second| + b.
Lattice product(const Lattice& first, const Lattice& second);

/// Glued sum: top of `lower` identified with the bottom of `upper`. Ids of
/// `lower` are kept; the remaining elements of `upper` follow in id order.
Lattice glued_sum(const Lattice& lower, const Lattice& upper);

/// Pentagon: 0 < a < b < 1 and 0 < c < 1, ids 0=bottom, 1=a, 2=b, 3=c, 4=top.
Lattice pentagon();

/// Diamond M3: ids 0=bottom, 1..3 atoms, 4=top.
Lattice diamond();

}  // namespace latmax
