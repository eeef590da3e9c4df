#pragma once

#include <istream>
#include <string>
#include <vector>

#include "latmax/lattice.hpp"

namespace latmax {

/// Cover-list text format:
///
///     # comment
///     n
///     i j        (i is covered by j; 0-based ids)
///
/// Blank lines and text after '#' are ignored. Throws ParseError on malformed
/// text and LatticeError when the relation is not a lattice.
Lattice parse_cover_list(std::istream& in);
Lattice parse_cover_list_text(const std::string& text);

/// Canonical serialization: the element count, then the covering pairs in
/// ascending order, one per line.
std::string write_cover_list(const Lattice& L);

/// Chain file format for convex geometries:
///
///     m k
///     <permutation of 1..m>    (k lines)
struct ChainFile {
	std::size_t m = 0;
	std::vector<std::vector<int>> chains;
};

ChainFile parse_chain_file(std::istream& in);
ChainFile parse_chain_file_text(const std::string& text);
std::string write_chain_file(const ChainFile& file);

/// Whitespace- or comma-separated integers, e.g. "3 6 7 10 1 8 9 5 2 4".
std::vector<int> parse_int_list(const std::string& text);

/// True when the first data line holds exactly two integers (the chain-file
/// header); a cover list starts with a single integer.
bool looks_like_chain_file(const std::string& text);

}  // namespace latmax
