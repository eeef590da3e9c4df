#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latmax/cdim2.hpp"
#include "latmax/convex_geometry.hpp"
#include "latmax/error.hpp"
#include "latmax/hypothesis.hpp"
#include "latmax/io.hpp"
#include "latmax/properties.hpp"
#include "latmax/sublattice.hpp"

namespace latmax::cli {

namespace {

// Bad user input; maps to exit code 2.
struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Options {
	std::string perm;
	std::string file;
	bool json = false;
	bool verify = false;
	std::optional<std::size_t> oracle_bound;
	std::uint64_t seed = 1;
	std::string out;
	// check
	std::string claim;
	std::string corpus = "mixed";
	std::size_t max_m = 5;
	std::size_t count = 200;
	std::size_t depth = 3;
	// bench
	std::string sizes = "10,100,1000,10000,100000";
	bool no_assert = false;
};

std::size_t resolve_bound(const Options& o) {
	if(o.oracle_bound) return *o.oracle_bound;
	if(const char* env = std::getenv("LATMAX_ORACLE_BOUND")) {
		try {
			std::size_t used = 0;
			unsigned long long v = std::stoull(env, &used);
			if(used != std::string(env).size()) throw std::invalid_argument("trailing text");
			return static_cast<std::size_t>(v);
		} catch(const std::exception&) {
			throw InputError(std::string("LATMAX_ORACLE_BOUND is not a number: '") + env + "'");
		}
	}
	return kDefaultOracleBound;
}

std::string read_file(const std::string& path) {
	std::ifstream in(path);
	if(!in) throw InputError("cannot read '" + path + "'");
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

// Either a lattice or a convex geometry, from --perm or --file.
struct Input {
	Lattice lattice;
	std::optional<ConvexGeometry> geometry;
};

void require_one_source(const Options& o) {
	if(o.perm.empty() == o.file.empty()) throw InputError("give exactly one of --perm and --file");
}

std::vector<ChainSpec> chains_of(const ChainFile& f) {
	std::vector<ChainSpec> chains;
	for(const auto& c : f.chains) chains.push_back({c});
	return chains;
}

Input load_input(const Options& o) {
	require_one_source(o);
	Input in;
	if(!o.perm.empty()) {
		in.geometry = build_cdim2(parse_int_list(o.perm), false);
	} else {
		const std::string text = read_file(o.file);
		if(looks_like_chain_file(text)) {
			ChainFile f = parse_chain_file_text(text);
			in.geometry = build_cg(f.m, chains_of(f), false);
		} else {
			in.lattice = parse_cover_list_text(text);
			return in;
		}
	}
	in.lattice = in.geometry->lattice();
	return in;
}

std::string ids_text(const ElementSubset& s) {
	std::string out = "{";
	bool first = true;
	for(ElementId e : s.elements()) {
		if(!first) out += ",";
		out += std::to_string(e);
		first = false;
	}
	return out + "}";
}

std::string sets_text(const ConvexGeometry& G, const ElementSubset& s) {
	std::string out = "{";
	bool first = true;
	for(ElementId e : s.elements()) {
		if(!first) out += ", ";
		out += G.describe(e);
		first = false;
	}
	return out + "}";
}

std::string subset_text(const Input& in, const ElementSubset& s) {
	return in.geometry ? sets_text(*in.geometry, s) : ids_text(s);
}

int emit(const Options& o, const std::string& text, std::ostream& out) {
	if(o.out.empty()) {
		out << text;
		return kExitOk;
	}
	std::ofstream f(o.out);
	if(!f) throw InputError("cannot write '" + o.out + "'");
	f << text;
	return kExitOk;
}

int cmd_cg_complements(const Options& o, std::ostream& out, std::ostream& err) {
	require_one_source(o);
	std::vector<Complement> list;
	std::optional<ConvexGeometry> G;
	if(!o.perm.empty()) {
		std::vector<int> phi = parse_int_list(o.perm);
		list = materialize_all(phi, fast_complements(phi.size(), phi).complements);
		if(o.verify) G = build_cdim2(phi, false);
	} else {
		ChainFile f = parse_chain_file_text(read_file(o.file));
		if(f.chains.size() != 2) throw InputError("cg-complements needs exactly two chains");
		list = decompose_and_run(f.m, {f.chains[0]}, {f.chains[1]});
		if(o.verify) G = build_cg(f.m, chains_of(f), false);
	}

	std::string text;
	if(o.json) {
		text = to_json(list) + "\n";
	} else {
		for(const auto& c : list) text += to_text(c) + "\n";
	}
	emit(o, text, out);

	if(!o.verify) return kExitOk;
	std::vector<ElementSubset> fast;
	for(const auto& c : list) fast.push_back(to_element_subset(*G, c));
	std::sort(fast.begin(), fast.end());
	std::vector<ElementSubset> oracle = maximal_complements_oracle(G->lattice(), resolve_bound(o));
	if(fast == oracle) return kExitOk;
	err << "verify: fast path and oracle disagree\nfast:\n";
	for(const auto& s : fast) err << "  " << sets_text(*G, s) << "\n";
	err << "oracle:\n";
	for(const auto& s : oracle) err << "  " << sets_text(*G, s) << "\n";
	return kExitMismatch;
}

int cmd_oracle(const Options& o, std::ostream& out) {
	Input in = load_input(o);
	const std::vector<ElementSubset> comps = maximal_complements_oracle(in.lattice, resolve_bound(o));
	const ElementSubset phi = frattini_from_complements(in.lattice, comps);
	std::string text;
	if(o.json) {
		nlohmann::ordered_json j;
		nlohmann::ordered_json arr = nlohmann::ordered_json::array();
		for(const auto& c : comps) arr.push_back(c.elements());
		j["complements"] = arr;
		j["frattini"] = phi.elements();
		text = j.dump() + "\n";
	} else {
		text += std::to_string(comps.size()) + " maximal sublattices\n";
		for(const auto& c : comps) text += "complement " + subset_text(in, c) + "\n";
		text += "frattini " + subset_text(in, phi) + "\n";
	}
	return emit(o, text, out);
}

Corpus build_corpus(const Options& o) {
	const std::string& kind = o.corpus;
	if(kind == "cdim2") {
		std::vector<Corpus> parts;
		for(std::size_t m = 1; m <= o.max_m; ++m) parts.push_back(all_cdim2_geometries(m));
		return concat("cdim2 m<=" + std::to_string(o.max_m), std::move(parts));
	}
	if(kind == "random-cg") {
		if(o.max_m < 2) throw InputError("--max-m must be at least 2 for random-cg");
		std::vector<Corpus> parts;
		const std::size_t sizes = o.max_m - 1;
		for(std::size_t m = 2; m <= o.max_m; ++m) {
			std::size_t share = o.count / sizes + (m - 2 < o.count % sizes ? 1 : 0);
			parts.push_back(random_cdim_k(m, 2, o.seed + m, share));
		}
		return concat("random cdim2 m<=" + std::to_string(o.max_m), std::move(parts));
	}
	if(kind == "sd") return concat("SD", {n5_m3(), doubled_sequences(o.depth, o.seed, o.count)});
	if(kind == "distributive") return concat("distributive", {chain_products({4, 4, 3}), boolean_corpus(4)});
	if(kind == "closure") return random_closure_lattices(4, o.seed, o.count);
	if(kind == "file") {
		if(o.file.empty()) throw InputError("--corpus file needs --file");
		Input in = load_input(o);
		Corpus c{o.file, {}, std::nullopt};
		c.items.push_back({o.file, in.lattice, in.geometry});
		return c;
	}
	if(kind == "mixed") {
		std::vector<Corpus> parts;
		for(std::size_t m = 1; m <= o.max_m; ++m) parts.push_back(all_cdim2_geometries(m));
		parts.push_back(n5_m3());
		parts.push_back(doubled_sequences(o.depth, o.seed, o.count));
		parts.push_back(chain_products({4, 4, 3}));
		parts.push_back(boolean_corpus(4));
		return concat("mixed", std::move(parts));
	}
	throw InputError("unknown corpus '" + kind + "'");
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
	std::vector<std::string> claims;
	if(o.claim == "all") {
		claims = claim_ids();
	} else {
		const auto& ids = claim_ids();
		if(std::find(ids.begin(), ids.end(), o.claim) == ids.end()) throw InputError("unknown claim '" + o.claim + "'");
		claims = {o.claim};
	}
	const std::size_t bound = resolve_bound(o);
	AnalyzedCorpus corpus(build_corpus(o), bound);

	int code = kExitOk;
	for(const auto& claim : claims) {
		CheckReport r = run_claim(claim, corpus, o.seed);
		if(o.json) {
			out << to_json_line(r) << "\n";
		} else {
			out << r.claim << ": " << to_string(r.status) << " (" << r.instances_checked << " instances)";
			if(!r.note.empty()) out << " " << r.note;
			out << "\n";
		}
		if(r.status != CheckStatus::CounterexampleFound) continue;
		code = kExitCounterexample;
		std::string path = o.out.empty() ? "witness-" + claim + ".json"
				: claims.size() > 1 ? o.out + "-" + claim + ".json" : o.out;
		std::ofstream f(path);
		if(!f) throw InputError("cannot write '" + path + "'");
		f << to_json_line(r) << "\n";
		err << claim << ": counterexample written to " << path << "\n";
	}
	return code;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
	std::vector<std::size_t> out;
	for(int v : parse_int_list(text)) {
		if(v < 1) throw InputError("sizes must be positive");
		out.push_back(static_cast<std::size_t>(v));
	}
	if(out.empty()) throw InputError("no sizes given");
	return out;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
	const double ratio_bound = 12.0;
	std::mt19937_64 rng(o.seed);
	int code = kExitOk;
	nlohmann::ordered_json rows = nlohmann::ordered_json::array();
	std::string text = "m\twall_ms\tcomparisons\tset_ops\tcomparisons/m\n";
	for(std::size_t m : parse_sizes(o.sizes)) {
		std::vector<int> phi(m);
		std::iota(phi.begin(), phi.end(), 1);
		std::shuffle(phi.begin(), phi.end(), rng);
		auto t0 = std::chrono::steady_clock::now();
		FastResult r = fast_complements(m, phi);
		auto t1 = std::chrono::steady_clock::now();
		double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
		double ratio = static_cast<double>(r.ops.comparisons) / static_cast<double>(m);
		if(o.json) {
			rows.push_back({{"m", m}, {"wall_ms", ms}, {"comparisons", r.ops.comparisons}, {"set_ops", r.ops.set_ops},
					{"ratio", ratio}, {"complements", r.complements.size()}});
		} else {
			std::ostringstream line;
			line << m << "\t" << ms << "\t" << r.ops.comparisons << "\t" << r.ops.set_ops << "\t" << ratio << "\n";
			text += line.str();
		}
		if(!o.no_assert && ratio > ratio_bound) {
			err << "bench: comparisons/m = " << ratio << " exceeds " << ratio_bound << " at m=" << m << "\n";
			code = kExitMismatch;
		}
	}
	emit(o, o.json ? rows.dump() + "\n" : text, out);
	return code;
}

std::string dot_escape(const std::string& s) {
	std::string out;
	for(char ch : s) {
		if(ch == '"' || ch == '\\') out += '\\';
		out += ch;
	}
	return out;
}

int cmd_dot(const Options& o, std::ostream& out) {
	Input in = load_input(o);
	const Lattice& L = in.lattice;
	const auto comps = maximal_complements_oracle(L, resolve_bound(o));

	static const std::map<std::string, std::string> fill = {
			{"Type1", "lightblue"}, {"Type2", "khaki"}, {"Type3", "palegreen"}, {"Unclassified", "lightgray"}};
	std::vector<std::vector<std::string>> colors(L.size());
	for(const auto& C : comps) {
		std::string tag = "Unclassified";
		if(in.geometry && in.geometry->chain_count() == 2) {
			try {
				tag = to_string(classify_complement(*in.geometry, C));
			} catch(const GeometryError&) {
			}
		}
		for(ElementId e : C.elements()) {
			auto& c = colors[e];
			if(std::find(c.begin(), c.end(), fill.at(tag)) == c.end()) c.push_back(fill.at(tag));
		}
	}

	std::ostringstream dot;
	dot << "digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse];\n";
	std::map<std::size_t, std::vector<ElementId>> ranks;
	for(ElementId x = 0; x < L.size(); ++x) {
		ranks[L.height(x)].push_back(x);
		std::string label = in.geometry ? in.geometry->describe(x) : std::to_string(x);
		dot << "  n" << x << " [label=\"" << dot_escape(label) << "\"";
		const auto& c = colors[x];
		if(c.size() == 1) dot << ", style=filled, fillcolor=" << c[0];
		if(c.size() > 1) {
			std::string list;
			for(const auto& col : c) list += (list.empty() ? "" : ":") + col;
			dot << ", style=wedged, fillcolor=\"" << list << "\"";
		}
		if(is_meet_irreducible(L, x)) dot << ", penwidth=2.5";
		dot << "];\n";
	}
	for(const auto& [h, xs] : ranks) {
		dot << "  { rank=same;";
		for(ElementId x : xs) dot << " n" << x << ";";
		dot << " }\n";
	}
	for(const auto& [a, b] : L.cover_pairs()) dot << "  n" << a << " -> n" << b << " [dir=none];\n";
	dot << "}\n";
	return emit(o, dot.str(), out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	Options o;
	CLI::App app{"Maximal sublattices of finite lattices and convex geometries", "latmax"};
	app.require_subcommand(1);

	std::size_t bound = 0;
	auto add_bound = [&](CLI::App* sub) {
		sub->add_option("--oracle-bound", bound, "Largest lattice the brute-force oracle accepts");
	};
	auto add_input = [&](CLI::App* sub) {
		sub->add_option("--perm", o.perm, "Second chain as a permutation of 1..m; the first is the identity");
		sub->add_option("--file", o.file, "Chain file or cover list");
	};

	auto* cg = app.add_subcommand("cg-complements", "Complements of maximal sublattices of a cdim 2 geometry");
	add_input(cg);
	cg->add_flag("--json", o.json, "JSON output");
	cg->add_flag("--verify", o.verify, "Compare with the oracle; exit 3 on mismatch");
	cg->add_option("--out", o.out, "Write output here instead of stdout");
	add_bound(cg);

	auto* oracle = app.add_subcommand("oracle", "Brute-force complements and the Frattini sublattice");
	add_input(oracle);
	oracle->add_flag("--json", o.json, "JSON output");
	oracle->add_option("--out", o.out, "Write output here instead of stdout");
	add_bound(oracle);

	auto* check = app.add_subcommand("check", "Run a claim checker over a corpus; exit 4 on a counterexample");
	check->add_option("claim", o.claim, "Claim id or 'all'")->required();
	check->add_option("--corpus", o.corpus, "mixed, cdim2, random-cg, sd, distributive, closure or file");
	check->add_option("--max-m", o.max_m, "Largest ground set for cdim2 and random-cg");
	check->add_option("--count", o.count, "Number of generated items for sd, random-cg and closure");
	check->add_option("--depth", o.depth, "Most doublings per item in the sd corpus");
	check->add_option("--file", o.file, "Input for --corpus file");
	check->add_option("--seed", o.seed, "Seed for generated corpora and samples");
	check->add_flag("--json", o.json, "One JSON report per line");
	check->add_option("--out", o.out, "Witness file path (a prefix for 'all')");
	add_bound(check);

	auto* bench = app.add_subcommand("bench", "Time the fast path and count its operations");
	bench->add_option("--sizes", o.sizes, "Comma-separated ground set sizes");
	bench->add_option("--seed", o.seed, "Seed for the random permutations");
	bench->add_flag("--no-assert", o.no_assert, "Do not fail when comparisons/m exceeds 12");
	bench->add_flag("--json", o.json, "JSON output");
	bench->add_option("--out", o.out, "Write output here instead of stdout");

	auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT with complements shaded by type");
	add_input(dot);
	dot->add_option("--out", o.out, "Write output here instead of stdout");
	add_bound(dot);

	try {
		std::vector<std::string> rev(args.rbegin(), args.rend());
		app.parse(rev);
	} catch(const CLI::ParseError& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitParse;
	}
	for(auto* sub : {cg, oracle, check, dot}) {
		if(sub->parsed() && sub->count("--oracle-bound") > 0) o.oracle_bound = bound;
	}

	try {
		if(cg->parsed()) return cmd_cg_complements(o, out, err);
		if(oracle->parsed()) return cmd_oracle(o, out);
		if(check->parsed()) return cmd_check(o, out, err);
		if(bench->parsed()) return cmd_bench(o, out, err);
		if(dot->parsed()) return cmd_dot(o, out);
	} catch(const InputError& e) {
		err << "error: " << e.what() << "\n";
		return kExitParse;
	} catch(const ParseError& e) {
		err << "parse error: " << e.what() << "\n";
		return kExitParse;
	} catch(const GeometryError& e) {
		err << "error: " << e.what() << "\n";
		return e.kind() == GeometryError::Kind::BadPermutation ? kExitParse : kExitError;
	} catch(const LatticeError& e) {
		err << "error: " << e.what() << "\n";
		return kExitParse;
	} catch(const std::exception& e) {
		err << "error: " << e.what() << "\n";
		return kExitError;
	}
	return kExitError;
}

}  // namespace latmax::cli
