#include "latmax/io.hpp"

#include <charconv>
#include <sstream>

namespace latmax {

namespace {

struct DataLine {
	std::size_t number;
	std::vector<long long> values;
};

std::vector<long long> split_ints(const std::string& line, std::size_t number) {
	std::vector<long long> out;
	std::size_t i = 0;
	while(i < line.size()) {
		char c = line[i];
		if(c == ' ' || c == '\t' || c == ',' || c == '\r') {
			++i;
			continue;
		}
		std::size_t j = i;
		while(j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',' && line[j] != '\r') ++j;
		long long v = 0;
		auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
		if(ec != std::errc{} || ptr != line.data() + j) {
			throw ParseError(number, "expected an integer, got '" + line.substr(i, j - i) + "'");
		}
		out.push_back(v);
		i = j;
	}
	return out;
}

std::vector<DataLine> data_lines(std::istream& in) {
	std::vector<DataLine> out;
	std::string line;
	std::size_t number = 0;
	while(std::getline(in, line)) {
		++number;
		if(auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
		auto values = split_ints(line, number);
		if(!values.empty()) out.push_back({number, std::move(values)});
	}
	return out;
}

}  // namespace

Lattice parse_cover_list(std::istream& in) {
	auto lines = data_lines(in);
	if(lines.empty()) throw ParseError(0, "empty cover list");
	if(lines[0].values.size() != 1 || lines[0].values[0] <= 0) {
		throw ParseError(lines[0].number, "first line must hold the element count");
	}
	const auto n = static_cast<std::size_t>(lines[0].values[0]);
	std::vector<CoverPair> covers;
	for(std::size_t k = 1; k < lines.size(); ++k) {
		const auto& l = lines[k];
		if(l.values.size() != 2) throw ParseError(l.number, "expected a pair 'i j'");
		for(long long v : l.values) {
			if(v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError(l.number, "element id out of range");
		}
		covers.emplace_back(static_cast<ElementId>(l.values[0]), static_cast<ElementId>(l.values[1]));
	}
	return Lattice::from_covers(n, covers);
}

Lattice parse_cover_list_text(const std::string& text) {
	std::istringstream in(text);
	return parse_cover_list(in);
}

std::string write_cover_list(const Lattice& L) {
	std::ostringstream out;
	out << L.size() << '\n';
	for(auto [a, b] : L.cover_pairs()) out << a << ' ' << b << '\n';
	return out.str();
}

ChainFile parse_chain_file(std::istream& in) {
	auto lines = data_lines(in);
	if(lines.empty()) throw ParseError(0, "empty chain file");
	if(lines[0].values.size() != 2 || lines[0].values[0] <= 0 || lines[0].values[1] <= 0) {
		throw ParseError(lines[0].number, "header must be 'm k' with positive m and k");
	}
	ChainFile file;
	file.m = static_cast<std::size_t>(lines[0].values[0]);
	const auto k = static_cast<std::size_t>(lines[0].values[1]);
	if(lines.size() != k + 1) {
		throw ParseError(lines.back().number, "expected " + std::to_string(k) + " chain lines");
	}
	for(std::size_t c = 1; c <= k; ++c) {
		const auto& l = lines[c];
		if(l.values.size() != file.m) throw ParseError(l.number, "chain must list all m points");
		std::vector<int> perm;
		for(long long v : l.values) perm.push_back(static_cast<int>(v));
		file.chains.push_back(std::move(perm));
	}
	return file;
}

ChainFile parse_chain_file_text(const std::string& text) {
	std::istringstream in(text);
	return parse_chain_file(in);
}

std::string write_chain_file(const ChainFile& file) {
	std::ostringstream out;
	out << file.m << ' ' << file.chains.size() << '\n';
	for(const auto& c : file.chains) {
		for(std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
		out << '\n';
	}
	return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
	std::vector<int> out;
	for(long long v : split_ints(text, 1)) out.push_back(static_cast<int>(v));
	return out;
}

bool looks_like_chain_file(const std::string& text) {
	std::istringstream in(text);
	auto lines = data_lines(in);
	return !lines.empty() && lines[0].values.size() == 2;
}

}  // namespace latmax
