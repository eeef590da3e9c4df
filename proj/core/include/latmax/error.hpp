#pragma once

#include <stdexcept>
#include <string>

namespace latmax {

class LatticeError : public std::runtime_error {
public:
	enum class Kind { NotALattice, CyclicInput, BadInput };

	LatticeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

	Kind kind() const { return kind_; }

private:
	Kind kind_;
};

class SublatticeError : public std::runtime_error {
public:
	enum class Kind { EmptyGenerator, OracleBoundExceeded, UndefinedBound, NoCanonicalRep };

	SublatticeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

	Kind kind() const { return kind_; }

private:
	Kind kind_;
};

class GeometryError : public std::runtime_error {
public:
	enum class Kind { BadPermutation, TopOnly, NoCaseMatches };

	GeometryError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

	Kind kind() const { return kind_; }

private:
	Kind kind_;
};

/// Line-oriented input that could not be parsed. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, const std::string& what)
		: std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

	std::size_t line() const { return line_; }

private:
	std::size_t line_;
};

}  // namespace latmax
