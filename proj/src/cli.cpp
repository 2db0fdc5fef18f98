#include "mutant/cli.hpp"

#include "mutant/identities.hpp"
#include "mutant/json_io.hpp"
#include "mutant/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutant::cli {

namespace {

json load_json(const std::string& path) {
    json j;
    if (path == "-") {
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    in >> j;
    return j;
}

/// --at accepts a matrix label or a 1-based index.
int resolve_index(const ExchangeMatrix& b, const std::string& at) {
    for (int i = 0; i < b.size(); ++i)
        if (b.labels()[i] == at) return i;
    try {
        int k = std::stoi(at);
        if (k >= 1 && k <= b.size()) return k - 1;
    } catch (...) {
    }
    throw DomainError("no row labeled '" + at + "'");
}

struct Options {
    std::string matrix_file, diagram_file, seed_file, type_str, at;
    std::string format = "text";
    std::string data_dir = "data";
    long long weight_cap = 3;
    long long size_cap = 1000000;
    long long seed_cap = 100000;
    int n = 0;
    bool count_only = false;
};

void apply_thread_env() {
#ifdef _OPENMP
    if (const char* t = std::getenv("MUTANT_THREADS")) {
        int n = std::atoi(t);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

int cmd_mutate(const Options& opt, std::ostream& out) {
    if (!opt.diagram_file.empty()) {
        Diagram g = diagram_from_json(load_json(opt.diagram_file));
        int k = std::stoi(opt.at) - 1;
        Diagram m = diagram_mutate(g, k);
        if (opt.format == "dot")
            out << diagram_dot(m);
        else
            out << diagram_to_json(m).dump(2) << "\n";
        return 0;
    }
    ExchangeMatrix b = matrix_from_json(load_json(opt.matrix_file));
    ExchangeMatrix m = mutate(b, resolve_index(b, opt.at));
    out << matrix_to_json(m).dump(2) << "\n";
    return 0;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    std::optional<CartanKillingType> t;
    if (!opt.matrix_file.empty())
        t = recognize_matrix_type(matrix_from_json(load_json(opt.matrix_file)));
    else
        t = recognize_type(diagram_from_json(load_json(opt.diagram_file)));
    if (opt.format == "json") {
        json jt;
        if (t) jt = t->str();
        out << json{{"finite", t.has_value()}, {"type", jt}}.dump(2) << "\n";
    } else {
        out << (t ? t->str() : "2-infinite") << "\n";
    }
    return 0;
}

int cmd_class(const Options& opt, std::ostream& out) {
    Diagram g = diagram_from_json(load_json(opt.diagram_file));
    MutationClassOptions mco;
    mco.weight_cap = opt.weight_cap;
    mco.size_cap = size_t(opt.size_cap);
    MutationClassResult r = mutation_class(g, mco);
    if (opt.format == "dot")
        out << mutation_class_dot(r);
    else if (opt.format == "json")
        out << mutation_class_to_json(r).dump(2) << "\n";
    else
        out << (r.closed ? "closed" : "not closed (cap reached)") << ", " << r.members.size()
            << " members\n";
    return 0;
}

int cmd_clusters(const Options& opt, std::ostream& out) {
    RootSystem rs(CartanKillingType::parse(opt.type_str));
    auto cls = clusters(rs);
    if (opt.count_only) {
        out << cls.size() << "\n";
        return 0;
    }
    if (opt.format == "json") {
        out << clusters_to_json(rs, cls).dump(2) << "\n";
        return 0;
    }
    for (auto& c : cls) {
        for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << root_str(rs.apr(c[i]));
        out << "\n";
    }
    return 0;
}

int cmd_exchange_graph(const Options& opt, std::ostream& out) {
    if (!opt.type_str.empty() && opt.matrix_file.empty() && opt.seed_file.empty()) {
        RootSystem rs(CartanKillingType::parse(opt.type_str));
        ComplexGraph g = complex_exchange_graph(rs);
        if (opt.format == "dot")
            out << complex_graph_dot(rs, g);
        else if (opt.format == "json")
            out << complex_graph_to_json(rs, g).dump(2) << "\n";
        else
            out << g.clusters.size() << " clusters, " << g.edges.size() << " exchanges\n";
        return 0;
    }
    Seed s0 = opt.seed_file.empty()
                  ? initial_seed(matrix_from_json(load_json(opt.matrix_file)))
                  : seed_from_json(load_json(opt.seed_file));
    EngineOptions eo;
    eo.seed_cap = size_t(opt.seed_cap);
    EngineGraph g = build_exchange_graph(s0, eo);
    if (opt.format == "dot")
        out << engine_graph_dot(g);
    else if (opt.format == "json")
        out << engine_graph_to_json(g).dump(2) << "\n";
    else
        out << (g.closed ? "closed" : "not closed (cap reached)") << ", " << g.seeds.size()
            << " seeds, " << g.variables.size() << " variables\n";
    return 0;
}

int cmd_variables(const Options& opt, std::ostream& out) {
    Seed s0;
    if (!opt.type_str.empty()) {
        RootSystem rs(CartanKillingType::parse(opt.type_str));
        s0 = initial_seed(initial_bipartite_matrix(rs));
    } else if (!opt.seed_file.empty()) {
        s0 = seed_from_json(load_json(opt.seed_file));
    } else {
        s0 = initial_seed(matrix_from_json(load_json(opt.matrix_file)));
    }
    EngineOptions eo;
    eo.seed_cap = size_t(opt.seed_cap);
    EngineGraph g = build_exchange_graph(s0, eo);
    if (!g.closed) throw DomainError("exchange graph did not close within the seed cap");
    if (opt.format == "json") {
        json vars = json::array();
        for (auto& v : g.variables) vars.push_back(v.str(s0.semifield));
        out << vars.dump(2) << "\n";
        return 0;
    }
    for (auto& v : g.variables) out << v.str(s0.semifield) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const Options& opt, std::ostream& out) {
    std::vector<verify::Check> checks;
    if (suite == "involution") {
        checks.push_back(verify::involution());
    } else if (suite == "commutation") {
        checks.push_back(verify::commutation());
    } else if (suite == "dynkin") {
        checks.push_back(verify::dynkin_recognition(8, opt.data_dir));
    } else if (suite == "counts") {
        checks.push_back(verify::small_counts());
    } else if (suite == "loops") {
        if (!opt.type_str.empty())
            checks.push_back(verify::geodesic_loop_law({CartanKillingType::parse(opt.type_str)}));
        else
            checks.push_back(verify::geodesic_loop_law());
    } else if (suite == "denominators") {
        checks.push_back(verify::denominator_bijection());
    } else if (suite == "positivity") {
        checks.push_back(verify::positivity());
    } else if (suite == "plucker") {
        if (!opt.type_str.empty() && opt.n > 0) {
            auto rep = verify_geometric_identities(opt.type_str[0], opt.n);
            bool ok = all_hold(rep);
            if (opt.format == "json") {
                out << identity_reports_to_json(rep).dump(2) << "\n";
                return ok ? 0 : 1;
            }
            for (auto& r : rep)
                out << (r.ok ? "pass" : "FAIL") << " " << r.name
                    << (r.ok ? "" : " — " + r.detail) << "\n";
            return ok ? 0 : 1;
        }
        checks.push_back(verify::geometric_identities());
    } else {
        throw CLI::ValidationError("--suite",
                                   "unknown suite '" + suite +
                                       "' (involution, commutation, dynkin, counts, loops, "
                                       "denominators, positivity, plucker)");
    }
    bool ok = true;
    for (auto& c : checks) {
        out << (c.pass ? "pass" : "FAIL") << " " << c.name << " — " << c.detail << "\n";
        ok = ok && c.pass;
    }
    return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_thread_env();
    CLI::App app{"finite-type cluster algebra toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::string suite;

    auto add_common = [&](CLI::App* c, bool with_inputs = true) {
        if (with_inputs) {
            c->add_option("--matrix", opt.matrix_file, "exchange matrix JSON file ('-' = stdin)");
            c->add_option("--diagram", opt.diagram_file, "diagram JSON file ('-' = stdin)");
        }
        c->add_option("--format", opt.format, "output format: text, json, dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
    };

    auto* m = app.add_subcommand("mutate", "mutate a matrix or diagram at an index");
    add_common(m);
    m->add_option("--at", opt.at, "mutation direction (label or 1-based index)")->required();

    auto* cl = app.add_subcommand("classify", "Cartan-Killing type of a matrix or diagram");
    add_common(cl);

    auto* mc = app.add_subcommand("class", "mutation class of a diagram modulo isomorphism");
    add_common(mc);
    mc->add_option("--cap", opt.weight_cap, "edge weight cap (default 3)");
    mc->add_option("--size-cap", opt.size_cap, "safety cap on the member count");

    auto* cu = app.add_subcommand("clusters", "clusters of the given Cartan-Killing type");
    add_common(cu, false);
    cu->add_option("--type", opt.type_str, "type, e.g. A2 or 'B2 x A1'")->required();
    cu->add_flag("--count", opt.count_only, "print only the number of clusters");

    auto* eg = app.add_subcommand("exchange-graph",
                                  "exchange graph of a type (root-theoretic) or of a seed");
    add_common(eg);
    eg->add_option("--type", opt.type_str, "Cartan-Killing type");
    eg->add_option("--seed", opt.seed_file, "seed JSON file");
    eg->add_option("--cap", opt.seed_cap, "seed cap for engine runs");

    auto* va = app.add_subcommand("variables", "cluster variables of a seed engine run");
    add_common(va);
    va->add_option("--type", opt.type_str, "Cartan-Killing type (bipartite trivial seed)");
    va->add_option("--seed", opt.seed_file, "seed JSON file");
    va->add_option("--cap", opt.seed_cap, "seed cap for engine runs");

    auto* ve = app.add_subcommand("verify", "run a named verification suite");
    ve->add_option("suite", suite, "involution | commutation | dynkin | counts | loops | "
                                   "denominators | positivity | plucker")
        ->required();
    ve->add_option("--type", opt.type_str, "restrict to one type where applicable");
    ve->add_option("--n", opt.n, "rank parameter for plucker");
    ve->add_option("--data", opt.data_dir, "directory with the bundled golden corpus");
    ve->add_option("--format", opt.format, "output format: text, json")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (m->parsed()) {
            if (opt.matrix_file.empty() == opt.diagram_file.empty())
                throw CLI::ValidationError("mutate", "give exactly one of --matrix/--diagram");
            return cmd_mutate(opt, out);
        }
        if (cl->parsed()) {
            if (opt.matrix_file.empty() == opt.diagram_file.empty())
                throw CLI::ValidationError("classify", "give exactly one of --matrix/--diagram");
            return cmd_classify(opt, out);
        }
        if (mc->parsed()) {
            if (opt.diagram_file.empty())
                throw CLI::ValidationError("class", "--diagram is required");
            return cmd_class(opt, out);
        }
        if (cu->parsed()) return cmd_clusters(opt, out);
        if (eg->parsed()) {
            if (opt.type_str.empty() && opt.matrix_file.empty() && opt.seed_file.empty())
                throw CLI::ValidationError("exchange-graph", "give --type, --matrix or --seed");
            return cmd_exchange_graph(opt, out);
        }
        if (va->parsed()) {
            if (opt.type_str.empty() && opt.matrix_file.empty() && opt.seed_file.empty())
                throw CLI::ValidationError("variables", "give --type, --matrix or --seed");
            return cmd_variables(opt, out);
        }
        if (ve->parsed()) return cmd_verify(suite, opt, out);
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace mutant::cli
