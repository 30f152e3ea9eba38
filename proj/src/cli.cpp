#include "balanced/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "balanced/constructions.hpp"
#include "balanced/decomposition.hpp"
#include "balanced/enumeration.hpp"
#include "balanced/errors.hpp"
#include "balanced/extrapolation.hpp"
#include "balanced/graph.hpp"
#include "balanced/measure.hpp"
#include "balanced/verify.hpp"

namespace balanced::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- generator specs ---------------------------------------------------
//
// The same tiny grammar backs the `gen` subcommand and every `--gen` flag:
// a family name followed by --key value pairs, e.g.
//   path --n 4
//   join-family --l 0 --k 2
//   gh --input h.json

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct GenOptions {
    std::string family;
    std::optional<int> n, l, k;
    std::optional<std::string> input, left, right;
};

GenOptions parse_gen_tokens(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw BadParameterError("empty generator spec");
    GenOptions opt;
    opt.family = tokens[0];
    for (std::size_t i = 1; i < tokens.size(); i += 2) {
        const std::string& key = tokens[i];
        if (i + 1 >= tokens.size())
            throw BadParameterError("generator option " + key + " needs a value");
        const std::string& val = tokens[i + 1];
        auto as_int = [&] {
            try {
                return std::stoi(val);
            } catch (...) {
                throw BadParameterError("bad integer for " + key + ": " + val);
            }
        };
        if (key == "--n")
            opt.n = as_int();
        else if (key == "--l")
            opt.l = as_int();
        else if (key == "--k")
            opt.k = as_int();
        else if (key == "--input")
            opt.input = val;
        else if (key == "--left")
            opt.left = val;
        else if (key == "--right")
            opt.right = val;
        else
            throw BadParameterError("unknown generator option: " + key);
    }
    return opt;
}

Graph graph_from_gen_spec(const std::string& spec) {
    GenOptions opt = parse_gen_tokens(tokenize(spec));
    auto need_n = [&]() {
        if (!opt.n) throw BadParameterError(opt.family + " needs --n");
        return *opt.n;
    };
    auto load = [&](const std::optional<std::string>& path, const char* what) {
        if (!path) throw BadParameterError(opt.family + std::string(" needs ") + what);
        return parse_graph(read_file(*path), /*allow_disconnected=*/true);
    };

    if (opt.family == "path") return make_path(need_n());
    if (opt.family == "cycle") return make_cycle(need_n());
    if (opt.family == "complete") return make_complete(need_n());
    if (opt.family == "empty") return make_empty(need_n());
    if (opt.family == "join") return join(load(opt.left, "--left"), load(opt.right, "--right"));
    if (opt.family == "product")
        return cartesian_product(load(opt.left, "--left"), load(opt.right, "--right"));
    if (opt.family == "complement") return complement(load(opt.input, "--input"));
    if (opt.family == "join-family") {
        if (!opt.l || !opt.k) throw BadParameterError("join-family needs --l and --k");
        return build_join_family({*opt.l, *opt.k});
    }
    if (opt.family == "example14") return build_example_14();
    if (opt.family == "c4c4") return make_c4_torus();
    if (opt.family == "gh") return build_gh(load(opt.input, "--input"));
    throw UnknownFamilyError("unknown graph family: " + opt.family);
}

// --- shared option plumbing --------------------------------------------

struct IoOptions {
    std::string graph_file;
    std::string gen_spec;
    std::string format = "json";
    std::string out_file;
    int max_n = -1;
};

void add_graph_options(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--graph", io.graph_file, "graph file (JSON or edge list)");
    cmd->add_option("--gen", io.gen_spec, "generator spec, e.g. 'cycle --n 8'");
}

void add_output_options(CLI::App* cmd, IoOptions& io,
                        const std::string& formats = "json,pretty") {
    cmd->add_option("--format", io.format, "output format (" + formats + ")");
    cmd->add_option("--out", io.out_file, "write the document to a file");
}

Graph load_graph(const IoOptions& io, bool allow_disconnected = false) {
    if (io.graph_file.empty() == io.gen_spec.empty())
        throw BadParameterError("provide exactly one of --graph and --gen");
    if (!io.gen_spec.empty()) return graph_from_gen_spec(io.gen_spec);
    return parse_graph(read_file(io.graph_file), allow_disconnected);
}

Measure load_measure(const std::string& arg) {
    if (arg.empty()) throw BadParameterError("missing measure");
    std::string text = arg.front() == '[' ? arg : read_file(arg);
    return parse_measure(text);
}

std::vector<Measure> load_measure_list(const std::string& arg) {
    if (arg.empty()) throw BadParameterError("missing measure list");
    std::string text = arg.front() == '[' ? arg : read_file(arg);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad measure list: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("measure list must be a JSON array");
    std::vector<Measure> out;
    for (const auto& inner : j) out.push_back(parse_measure(inner.dump()));
    return out;
}

int json_indent(const IoOptions& io) { return io.format == "pretty" ? 2 : -1; }

void emit(const IoOptions& io, std::ostream& out, const std::string& doc) {
    if (!io.out_file.empty()) {
        std::ofstream f(io.out_file, std::ios::binary);
        if (!f) throw ParseError("cannot write file: " + io.out_file);
        f << doc;
        if (doc.empty() || doc.back() != '\n') f << "\n";
    } else {
        out << doc;
        if (doc.empty() || doc.back() != '\n') out << "\n";
    }
}

json measure_json(const Measure& mu) { return json(to_fraction_strings(mu.weights())); }

json binding_json(const std::vector<Binding>& bs) {
    json arr = json::array();
    for (const auto& b : bs) {
        json e;
        e["kind"] = b.kind == Binding::Kind::Support ? "support" : "maxset";
        e["vertex"] = b.vertex;
        arr.push_back(e);
    }
    return arr;
}

std::vector<int> parse_seed(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for balanced measures on finite graphs", "balanced"};
    app.require_subcommand(1);

    IoOptions io;

    auto* gen = app.add_subcommand("gen", "generate a named graph");
    gen->allow_extras(); // family name and generator options, e.g. path --n 4
    add_output_options(gen, io, "json,dot,edgelist,pretty");

    auto* distances = app.add_subcommand("distances", "all-pairs hop distances");
    add_graph_options(distances, io);
    add_output_options(distances, io, "json,csv,pretty");

    std::string measure_arg, mu_arg, nu_arg, basics_arg, seed_arg = "0", eps_arg;
    int steps = 0;
    int cliques_upto = 0;

    bool with_costs = false;
    auto* check = app.add_subcommand("check", "balancedness with certificate");
    add_graph_options(check, io);
    check->add_option("--measure", measure_arg, "measure (inline JSON or file)")->required();
    check->add_flag("--costs", with_costs, "include the full transport cost vector");
    add_output_options(check, io);

    auto* energy_cmd = app.add_subcommand("energy", "distance quadratic form value");
    add_graph_options(energy_cmd, io);
    energy_cmd->add_option("--measure", measure_arg)->required();
    add_output_options(energy_cmd, io);

    auto* greedy = app.add_subcommand("greedy", "farthest-point greedy sequence");
    add_graph_options(greedy, io);
    greedy->add_option("--seed", seed_arg, "comma-separated seed vertices (default 0)");
    greedy->add_option("--steps", steps, "number of greedy additions")->required();
    greedy->add_option("--eps", eps_arg, "also report eps-balancedness at this tolerance");
    add_output_options(greedy, io);

    auto* enumerate = app.add_subcommand("enumerate", "all basic balanced measures");
    add_graph_options(enumerate, io);
    enumerate->add_option("--max-n", io.max_n, "override the vertex cap");
    add_output_options(enumerate, io, "json,dot,pretty");

    auto* compat = app.add_subcommand("compat", "compatibility graph of the catalog");
    add_graph_options(compat, io);
    compat->add_option("--cliques", cliques_upto, "also list cliques up to this size");
    compat->add_option("--max-n", io.max_n, "override the vertex cap");
    add_output_options(compat, io, "json,dot,pretty");

    auto* decompose_cmd = app.add_subcommand("decompose", "convex decomposition into basics");
    add_graph_options(decompose_cmd, io);
    decompose_cmd->add_option("--measure", measure_arg)->required();
    add_output_options(decompose_cmd, io);

    auto* extrapolate = app.add_subcommand("extrapolate", "one-sided extrapolation");
    add_graph_options(extrapolate, io);
    extrapolate->add_option("--mu", mu_arg, "measure extrapolated from")->required();
    extrapolate->add_option("--nu", nu_arg, "measure extrapolated past")->required();
    add_output_options(extrapolate, io);

    auto* hull = app.add_subcommand("hull", "exact convex hull membership");
    add_graph_options(hull, io);
    hull->add_option("--measure", measure_arg)->required();
    hull->add_option("--basics", basics_arg, "JSON array of measures or file")->required();
    add_output_options(hull, io);

    auto* verify = app.add_subcommand("verify", "run the certified example suite");
    verify->alias("verify-paper");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::string spec;
            for (const auto& t : gen->remaining()) spec += t + " ";
            Graph g = graph_from_gen_spec(spec);
            if (io.format == "dot")
                emit(io, out, graph_to_dot(g));
            else if (io.format == "edgelist") {
                std::ostringstream ss;
                ss << g.n() << "\n";
                for (const auto& e : g.edges()) ss << e.u << " " << e.v << "\n";
                emit(io, out, ss.str());
            } else {
                emit(io, out, graph_to_json(g, json_indent(io)));
            }
        } else if (distances->parsed()) {
            Graph g = load_graph(io);
            if (io.format == "csv") {
                emit(io, out, distances_to_csv(g.distances()));
            } else {
                json j;
                j["n"] = g.n();
                auto rows = json::array();
                for (int i = 0; i < g.n(); ++i) {
                    json row = json::array();
                    for (int v = 0; v < g.n(); ++v) row.push_back(g.distances().at(i, v));
                    rows.push_back(row);
                }
                j["distances"] = rows;
                emit(io, out, j.dump(json_indent(io)));
            }
        } else if (check->parsed()) {
            Graph g = load_graph(io);
            Measure mu = load_measure(measure_arg);
            auto cert = is_balanced(g, mu);
            json j;
            j["balanced"] = cert.balanced;
            j["max_cost"] = cert.max_cost.str();
            if (with_costs) j["costs"] = to_fraction_strings(transport_cost(g, mu));
            if (!cert.balanced) {
                json vs = json::array();
                for (const auto& v : cert.violations) {
                    json e;
                    e["vertex"] = v.vertex;
                    e["deficit"] = v.deficit.str();
                    vs.push_back(e);
                }
                j["violations"] = vs;
            }
            emit(io, out, j.dump(json_indent(io)));
        } else if (energy_cmd->parsed()) {
            Graph g = load_graph(io);
            json j;
            j["energy"] = energy(g, load_measure(measure_arg)).str();
            emit(io, out, j.dump(json_indent(io)));
        } else if (greedy->parsed()) {
            Graph g = load_graph(io);
            GreedyResult res = greedy_sequence(g, parse_seed(seed_arg), steps);
            json j;
            json picks = json::array();
            for (const auto& s : res.steps) picks.push_back(s.vertex);
            j["picks"] = picks;
            j["empirical"] = measure_json(res.final_empirical());
            if (!eps_arg.empty()) {
                Rational eps = Rational::parse(eps_arg);
                j["eps"] = eps.str();
                j["eps_balanced"] = epsilon_balanced(g, res.final_empirical(), eps);
            }
            emit(io, out, j.dump(json_indent(io)));
        } else if (enumerate->parsed()) {
            Graph g = load_graph(io);
            BasicCatalog cat = enumerate_basic(g, io.max_n);
            if (io.format == "dot")
                emit(io, out, compatibility_to_dot(cat, compatibility_graph(cat)));
            else
                emit(io, out, catalog_to_json(cat, json_indent(io)));
        } else if (compat->parsed()) {
            Graph g = load_graph(io);
            BasicCatalog cat = enumerate_basic(g, io.max_n);
            CompatibilityGraph cg = compatibility_graph(cat);
            if (io.format == "dot") {
                emit(io, out, compatibility_to_dot(cat, cg));
            } else {
                json j;
                j["count"] = cg.count;
                json edges = json::array();
                for (auto [a, b] : cg.edges()) edges.push_back({a, b});
                j["edges"] = edges;
                j["components"] = count_components(cg);
                if (cliques_upto > 0) j["cliques"] = compatible_cliques(cg, cliques_upto);
                emit(io, out, j.dump(json_indent(io)));
            }
        } else if (decompose_cmd->parsed()) {
            Graph g = load_graph(io);
            Decomposition d = decompose(g, load_measure(measure_arg));
            json j;
            json parts = json::array();
            for (const auto& p : d.parts) {
                json e;
                e["coeff"] = p.coeff.str();
                e["mu"] = measure_json(p.basic);
                parts.push_back(e);
            }
            j["parts"] = parts;
            j["chain_length"] = d.chain.size();
            j["verified"] = d.verified;
            emit(io, out, j.dump(json_indent(io)));
        } else if (extrapolate->parsed()) {
            Graph g = load_graph(io);
            LineFamily fam{&g, load_measure(mu_arg), load_measure(nu_arg)};
            BalancedInterval iv = balanced_interval(fam);
            json j;
            j["L"] = iv.left.str();
            j["R"] = iv.right.str();
            j["lambda_R"] = json(to_fraction_strings(line_measure(fam, iv.right)));
            j["binding"] = binding_json(iv.binding_at_right);
            emit(io, out, j.dump(json_indent(io)));
        } else if (hull->parsed()) {
            Graph g = load_graph(io);
            HullResult res =
                hull_membership(g, load_measure(measure_arg), load_measure_list(basics_arg));
            json j;
            j["inside"] = res.inside;
            if (res.inside)
                j["coefficients"] = to_fraction_strings(res.coefficients);
            else
                j["certificate"] = to_fraction_strings(res.certificate);
            emit(io, out, j.dump(json_indent(io)));
        } else if (verify->parsed()) {
            return run_verify(out) == 0 ? 0 : 1;
        }
        return 0;
    } catch (const Error& e) {
        json j;
        j["error"] = e.code();
        j["message"] = e.what();
        out << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j;
        j["error"] = "internal_error";
        j["message"] = e.what();
        out << j.dump() << "\n";
        return 1;
    }
}

} // namespace balanced::cli
