#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latmax/element_subset.hpp"

namespace latmax {

enum class CheckStatus { Holds, CounterexampleFound, Skipped };

const char* to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

/// Everything needed to replay one failed assertion: the lattice in
/// cover-list text, the sublattice and its complement, and the elements the
/// assertion tripped on.
struct Witness {
	std::string lattice;
	std::vector<ElementId> sublattice;
	std::vector<ElementId> complement;
	std::vector<ElementId> elements;
	std::string detail;

	friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of running one claim over a corpus. Holds means no counterexample
/// was found, nothing more.
struct CheckReport {
	std::string claim;
	std::string corpus;
	std::size_t instances_checked = 0;
	CheckStatus status = CheckStatus::Holds;
	std::optional<Witness> witness;
	std::optional<std::uint64_t> seed;
	std::string note;

	bool holds() const { return status == CheckStatus::Holds; }

	/// Records the first counterexample; later ones are ignored.
	void fail(Witness w) {
		if(status == CheckStatus::CounterexampleFound) return;
		status = CheckStatus::CounterexampleFound;
		witness = std::move(w);
	}

	friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// One JSON object per report, no trailing newline.
std::string to_json_line(const CheckReport& r);
CheckReport report_from_json(const std::string& line);

/// Folds `part` into `total`: counts add up, the first witness wins.
void merge_into(CheckReport& total, const CheckReport& part);

}  // namespace latmax
