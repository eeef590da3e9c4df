#include "latmax/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace latmax {

const char* to_string(CheckStatus s) {
	switch(s) {
	case CheckStatus::Holds: return "Holds";
	case CheckStatus::CounterexampleFound: return "CounterexampleFound";
	case CheckStatus::Skipped: return "Skipped";
	}
	return "?";
}

CheckStatus check_status_from_string(const std::string& s) {
	if(s == "Holds") return CheckStatus::Holds;
	if(s == "CounterexampleFound") return CheckStatus::CounterexampleFound;
	if(s == "Skipped") return CheckStatus::Skipped;
	throw std::invalid_argument("unknown check status '" + s + "'");
}

std::string to_json_line(const CheckReport& r) {
	nlohmann::ordered_json j;
	j["claim"] = r.claim;
	j["corpus"] = r.corpus;
	j["instances_checked"] = r.instances_checked;
	j["status"] = to_string(r.status);
	if(r.seed) j["seed"] = *r.seed;
	if(!r.note.empty()) j["note"] = r.note;
	if(r.witness) {
		const auto& w = *r.witness;
		j["witness"] = {
				{"lattice", w.lattice},
				{"sublattice", w.sublattice},
				{"complement", w.complement},
				{"elements", w.elements},
				{"detail", w.detail},
		};
	}
	return j.dump();
}

CheckReport report_from_json(const std::string& line) {
	auto j = nlohmann::json::parse(line);
	CheckReport r;
	r.claim = j.at("claim").get<std::string>();
	r.corpus = j.at("corpus").get<std::string>();
	r.instances_checked = j.at("instances_checked").get<std::size_t>();
	r.status = check_status_from_string(j.at("status").get<std::string>());
	if(j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
	if(j.contains("note")) r.note = j["note"].get<std::string>();
	if(j.contains("witness")) {
		const auto& w = j["witness"];
		r.witness = Witness{
				w.at("lattice").get<std::string>(),
				w.at("sublattice").get<std::vector<ElementId>>(),
				w.at("complement").get<std::vector<ElementId>>(),
				w.at("elements").get<std::vector<ElementId>>(),
				w.at("detail").get<std::string>(),
		};
	}
	return r;
}

void merge_into(CheckReport& total, const CheckReport& part) {
	total.instances_checked += part.instances_checked;
	if(part.status == CheckStatus::CounterexampleFound && part.witness) total.fail(*part.witness);
	if(total.status == CheckStatus::Skipped && part.status == CheckStatus::Holds) total.status = CheckStatus::Holds;
}

}  // namespace latmax
