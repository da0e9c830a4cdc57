#include "report.hpp"

#include <rado/generation.hpp>
#include <rado/operations.hpp>
#include <rado/ramsey.hpp>
#include <rado/relations.hpp>
#include <rado/structures.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rado;
using namespace rado::cli;

namespace
{
    struct Globals
    {
        std::uint64_t seed = 0;
        unsigned threads = 0;
        bool json = false;
    };

    auto worker_count(const Globals & g) -> unsigned
    {
        if (g.threads > 0)
            return g.threads;
        if (const char * env = std::getenv("RADO_LAB_THREADS")) {
            try {
                return static_cast<unsigned>(std::max(1, std::stoi(env)));
            }
            catch (const std::exception &) {
                throw std::invalid_argument("RADO_LAB_THREADS must be a positive integer");
            }
        }
        return 1;
    }

    auto read_text(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    // constant graphs carry a "const:" line, everything else parses as partitioned
    auto load_structure(const std::string & path) -> PartitionedGraph
    {
        const auto text = read_text(path);
        std::istringstream in(text);
        if (text.find("const:") != std::string::npos)
            return as_structure(read_constant(in));
        return read_partitioned(in);
    }

    auto parse_vertex_list(const std::string & text) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        std::string cleaned = text;
        for (auto & c : cleaned)
            if (c == ',')
                c = ' ';
        std::istringstream in(cleaned);
        long long v;
        while (in >> v) {
            if (v < 0)
                throw std::invalid_argument("negative vertex id in '" + text + "'");
            out.push_back(static_cast<Vertex>(v));
        }
        if (! in.eof())
            throw std::invalid_argument("cannot parse vertex list '" + text + "'");
        return out;
    }

    auto split_names(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::string cur;
        for (char c : text + ",") {
            if (c == ',') {
                if (! cur.empty())
                    out.push_back(cur);
                cur.clear();
            }
            else if (c != ' ')
                cur += c;
        }
        return out;
    }

    void emit(const Globals & g, const RunReport & report, const std::string & human)
    {
        if (g.json)
            std::cout << report.dump() << '\n';
        else
            std::cout << human;
    }

    struct GenerateArgs
    {
        std::uint32_t q = 0;
        unsigned k = 2;
        std::optional<unsigned> check_k;
        std::string output;
        std::size_t max_vertices = 4096;
    };

    auto run_generate(const Globals & g, const std::string & kind, const GenerateArgs & a) -> int
    {
        Graph graph;
        unsigned check_k = 0;
        RunReport report;
        report.seed = g.seed;
        if (kind == "paley") {
            graph = build_paley(a.q).graph;
            check_k = a.check_k.value_or(2);
            report.command = "generate paley " + std::to_string(a.q);
        }
        else {
            graph = build_ec(a.k, g.seed, ExtensionBuildOptions{a.max_vertices});
            check_k = a.check_k.value_or(a.k);
            report.command = "generate ec -k " + std::to_string(a.k);
        }

        const auto ext = check_extension(graph, check_k);
        report.verdict = ext ? "fail" : "pass";
        report.certificates = {{"graph", graph_json(graph)}, {"extension", extension_json(ext, check_k)}};

        std::ostringstream human;
        human << check_k << "-e.c.: " << (ext ? "fail" : "pass") << '\n';
        if (a.output.empty()) {
            if (! g.json)
                write_graph(std::cout, graph);
            std::cerr << human.str();
        }
        else {
            save_graph(a.output, graph);
            emit(g, report, "wrote " + a.output + " (" + std::to_string(graph.size()) + " vertices)\n" + human.str());
            return 0;
        }
        if (g.json)
            std::cout << report.dump() << '\n';
        return 0;
    }

    auto run_check_extension(const Globals & g, const std::string & host_path, unsigned k) -> int
    {
        const auto host = load_graph(host_path);
        const auto ext = check_extension(host, k);
        RunReport report{"check-extension", {file_record(host_path)}, g.seed, ext ? "fail" : "pass",
            {{"graph", graph_json(host)}, {"extension", extension_json(ext, k)}}};

        std::ostringstream human;
        human << k << "-e.c.: " << report.verdict << '\n';
        if (ext) {
            human << "no vertex adjacent to {";
            for (auto v : ext->adjacent_to)
                human << ' ' << v;
            human << " } and non-adjacent to {";
            for (auto v : ext->non_adjacent_to)
                human << ' ' << v;
            human << " }\n";
        }
        emit(g, report, human.str());
        return 0;
    }

    auto host_or_default(const std::string & host_path, std::vector<InputRecord> & inputs) -> Graph
    {
        if (host_path.empty()) {
            auto host = build_paley(29).graph;
            inputs.push_back(InputRecord{"paley:29", hex64(fingerprint(host))});
            return host;
        }
        inputs.push_back(file_record(host_path));
        return load_graph(host_path);
    }

    auto run_classify_relation(const Globals & g, const std::vector<std::string> & specs, const std::string & host_path,
        unsigned k) -> int
    {
        std::vector<Relation> relations;
        for (const auto & s : specs)
            relations.push_back(parse_relation_spec(s));

        RunReport report;
        report.command = "classify-relation";
        report.seed = g.seed;
        const auto host = host_or_default(host_path, report.inputs);
        const auto verdict = classify_reduct(relations, host, k);
        report.verdict = to_string(verdict.cls);
        report.certificates = reduct_json(verdict);
        report.certificates["specs"] = specs;
        report.certificates["host"] = graph_json(host);
        report.certificates["k"] = k;

        std::ostringstream human;
        human << "class: " << report.verdict << '\n';
        for (const auto & c : verdict.certificates) {
            human << c.name << ": equality-definable " << (c.equality ? "no" : "yes") << ", complement "
                  << (c.complement.preserved() ? "preserved" : "violated") << ", switch "
                  << (c.switching.vertex ? "violated at " + std::to_string(*c.switching.vertex) : std::string("preserved"))
                  << '\n';
        }
        emit(g, report, human.str());
        return 0;
    }

    auto run_classify_function(const Globals & g, const std::string & gadget_path, const std::string & set_text,
        const std::string & parts_path) -> int
    {
        const auto f = load_gadget(gadget_path);
        RunReport report;
        report.command = "classify-function";
        report.seed = g.seed;
        report.inputs.push_back(file_record(gadget_path));
        std::ostringstream human;

        if (! parts_path.empty()) {
            report.inputs.push_back(file_record(parts_path));
            const auto profile = profile_partitioned(f, load_partitioned(parts_path));
            report.verdict = profile.canonical() ? "canonical" : "NonCanonical";
            report.certificates = {{"profile", profile_json(profile)}};
            human << "profile: " << report.verdict << '\n';
            for (std::size_t i = 0; i < profile.parts.size(); ++i) {
                human << "part " << i << ": " << profile.diag(i).label() << '\n';
                for (std::size_t j = i + 1; j < profile.parts.size(); ++j)
                    human << "parts " << i << "," << j << ": " << profile.between(i, j).label() << '\n';
            }
        }
        else {
            const auto set = set_text.empty() ? f.dom() : parse_vertex_list(set_text);
            const auto classes = classify_on_set(f, set);
            const auto conflicts = find_conflicts(f, set);
            report.verdict = classes.empty() ? "NonCanonical" : to_string(classes);
            report.certificates = {{"set", set}, {"classes", class_set_json(classes)}, {"conflicts", conflicts_json(conflicts)}};
            human << "classes: " << report.verdict << '\n';
            for (const auto & c : conflicts)
                human << "conflict: " << c.first.first << "," << c.first.second << " vs " << c.second.first << ","
                      << c.second.second << '\n';
        }
        emit(g, report, human.str());
        return 0;
    }

    struct RamseyArgs
    {
        std::string s_path, h_path, p_path, witness_path;
        unsigned k = 2;
        bool ordered = false;
        std::uint64_t budget_colorings = std::uint64_t{1} << 24;
        std::uint64_t budget_copies = 100000;
    };

    auto run_ramsey(const Globals & g, const RamseyArgs & a) -> int
    {
        if (a.budget_colorings == 0 || a.budget_copies == 0)
            throw std::invalid_argument("budgets must be positive");
        if (a.k == 0)
            throw std::invalid_argument("-k must be at least 1");

        ArrowQuery q{load_structure(a.s_path), load_structure(a.h_path), load_structure(a.p_path), a.k, a.ordered};
        ArrowOptions options;
        options.budget = RamseyBudget{a.budget_colorings, a.budget_copies};
        options.threads = worker_count(g);
        const auto verdict = verify_arrow(q, options);

        RunReport report;
        report.command = "ramsey verify";
        report.seed = g.seed;
        report.inputs = {file_record(a.s_path), file_record(a.h_path), file_record(a.p_path)};
        report.verdict = to_string(verdict.outcome);
        report.certificates = arrow_json(verdict);
        report.certificates["k"] = a.k;
        report.certificates["ordered"] = a.ordered;

        if (verdict.witness && ! a.witness_path.empty()) {
            std::ofstream out(a.witness_path);
            if (! out)
                throw std::runtime_error("cannot write " + a.witness_path);
            out << witness_text(verdict);
        }

        std::ostringstream human;
        human << "verdict: " << report.verdict << '\n'
              << "copies of P: " << verdict.stats.p_copies << ", copies of H: " << verdict.stats.h_copies
              << ", colourings examined: " << verdict.stats.colorings_examined << '\n';
        if (verdict.stats.vacuous)
            human << "note: P does not embed in H, every copy of H is trivially monochromatic\n";
        if (verdict.witness && a.witness_path.empty())
            human << witness_text(verdict);
        emit(g, report, human.str());
        return 0;
    }

    struct InterpolateArgs
    {
        std::string target_path;
        std::string gens = "identity";
        std::vector<std::string> custom_paths;
        std::vector<std::string> host_paths;
        unsigned depth = 3;
        bool pinned = false;
    };

    auto run_interpolate(const Globals & g, const InterpolateArgs & a) -> int
    {
        const auto target = load_gadget(a.target_path);
        GeneratorSet gens;
        gens.named.clear();
        for (const auto & name : split_names(a.gens))
            gens.named.push_back(parse_gadget_kind(name));
        for (const auto & p : a.custom_paths)
            gens.custom.push_back(load_gadget(p));
        gens.automorphism_free = ! a.pinned;

        RunReport report;
        report.command = "interpolate";
        report.seed = g.seed;
        report.inputs.push_back(file_record(a.target_path));
        for (const auto & p : a.custom_paths)
            report.inputs.push_back(file_record(p));

        std::vector<GraphPtr> hosts;
        for (const auto & p : a.host_paths) {
            report.inputs.push_back(file_record(p));
            hosts.push_back(std::make_shared<const Graph>(load_graph(p)));
        }
        if (hosts.empty())
            hosts.push_back(target.src_ptr());

        const auto witness = interpolate(target, gens, a.depth, hosts);
        std::ostringstream human;
        if (witness) {
            const auto check = verify_witness(*witness, target);
            report.verdict = "found";
            report.certificates = witness_json(*witness, check);
            human << "witness with " << witness->steps.size() << " step(s), verified: " << (check.ok ? "yes" : "no") << '\n';
            for (const auto & line : witness->transcript)
                human << line << '\n';
        }
        else {
            report.verdict = "inconclusive";
            report.certificates = {{"depth", a.depth}};
            human << "no witness within depth " << a.depth << " (inconclusive)\n";
        }
        emit(g, report, human.str());
        return 0;
    }

    auto run_orbit(const Globals & g, const std::string & start_path, const std::string & gens_text) -> int
    {
        const auto start = load_graph(start_path);
        std::vector<OrbitGenerator> gens;
        for (const auto & name : split_names(gens_text))
            gens.push_back(parse_orbit_generator(name));
        const auto closure = orbit_closure(start, gens);

        RunReport report{"orbit", {file_record(start_path)}, g.seed, std::to_string(closure.size()) + " types",
            {{"types", types_json(closure)}}};
        std::ostringstream human;
        human << closure.size() << " types\n";
        for (const auto & t : closure) {
            human << t.size() << " vertices:";
            for (auto [u, v] : t.edges())
                human << ' ' << u << '-' << v;
            human << '\n';
        }
        emit(g, report, human.str());
        return 0;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"rado-lab: finite experiments around the random graph and its reducts"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", globals.threads, "Worker cap (falls back to RADO_LAB_THREADS)");
    app.add_flag("--json", globals.json, "Emit a JSON report");

    std::function<int()> action;

    auto * generate = app.add_subcommand("generate", "Build a Paley or extension-property graph");
    generate->require_subcommand(1);
    GenerateArgs gen_args;
    auto * paley = generate->add_subcommand("paley", "Paley graph on a prime q = 1 mod 4");
    paley->add_option("q", gen_args.q, "Prime modulus")->required();
    paley->add_option("--check-k", gen_args.check_k, "Extension level to report (default 2)");
    paley->add_option("-o,--output", gen_args.output, "Output graph file");
    paley->callback([&] { action = [&] { return run_generate(globals, "paley", gen_args); }; });
    auto * ec = generate->add_subcommand("ec", "Random graph repaired to the k-extension property");
    ec->add_option("-k", gen_args.k, "Extension level")->required();
    ec->add_option("--check-k", gen_args.check_k, "Extension level to report (default k)");
    ec->add_option("--max-vertices", gen_args.max_vertices, "Vertex budget")->capture_default_str();
    ec->add_option("-o,--output", gen_args.output, "Output graph file");
    ec->callback([&] { action = [&] { return run_generate(globals, "ec", gen_args); }; });

    std::string host_path;
    unsigned k = 3;
    auto * check = app.add_subcommand("check-extension", "Check the k-extension property");
    check->add_option("--host", host_path, "Graph file")->required();
    check->add_option("-k", k, "Extension level")->required();
    check->callback([&] { action = [&] { return run_check_extension(globals, host_path, k); }; });

    std::vector<std::string> specs;
    auto * rel = app.add_subcommand("classify-relation", "Place relations in one of the five reduct classes");
    rel->add_option("--spec", specs, "Relation spec (repeat to classify jointly)")->required();
    rel->add_option("--host", host_path, "Host graph file (default Paley(29))");
    rel->add_option("-k", k, "Extension level the host must pass")->capture_default_str();
    rel->callback([&] { action = [&] { return run_classify_relation(globals, specs, host_path, k); }; });

    std::string gadget_path, set_text, parts_path;
    auto * fn = app.add_subcommand("classify-function", "Behaviour classes of a gadget");
    fn->add_option("--gadget", gadget_path, "Gadget file")->required();
    fn->add_option("--set", set_text, "Vertex set, e.g. \"0 1 2 3\" (default the whole domain)");
    fn->add_option("--parts", parts_path, "Partitioned graph file for a full profile");
    fn->get_option("--parts")->excludes("--set");
    fn->callback([&] { action = [&] { return run_classify_function(globals, gadget_path, set_text, parts_path); }; });

    RamseyArgs ramsey_args;
    auto * ramsey = app.add_subcommand("ramsey", "Arrow statements S -> (H)^P_k");
    ramsey->require_subcommand(1);
    auto * verify = ramsey->add_subcommand("verify", "Exhaustive check over colourings");
    verify->add_option("--S", ramsey_args.s_path, "Host structure")->required();
    verify->add_option("--H", ramsey_args.h_path, "Structure to find monochromatic")->required();
    verify->add_option("--P", ramsey_args.p_path, "Coloured substructure")->required();
    verify->add_option("-k", ramsey_args.k, "Colour count")->required();
    verify->add_flag("--ordered", ramsey_args.ordered, "Embeddings must increase in vertex id");
    verify->add_option("--budget-colorings", ramsey_args.budget_colorings, "Colouring budget")->capture_default_str();
    verify->add_option("--budget-copies", ramsey_args.budget_copies, "Copy budget")->capture_default_str();
    verify->add_option("--witness", ramsey_args.witness_path, "Write a failing colouring here");
    verify->callback([&] { action = [&] { return run_ramsey(globals, ramsey_args); }; });

    InterpolateArgs interp_args;
    auto * interp = app.add_subcommand("interpolate", "Search for a witness that generators interpolate a target");
    interp->add_option("--target", interp_args.target_path, "Target gadget file")->required();
    interp->add_option("--gens", interp_args.gens, "Named generators, comma separated")->capture_default_str();
    interp->add_option("--custom", interp_args.custom_paths, "Extra generator gadget files");
    interp->add_option("--host", interp_args.host_paths, "Host graphs for named generators");
    interp->add_option("--depth", interp_args.depth, "Maximum number of steps")->capture_default_str();
    interp->add_flag("--pinned", interp_args.pinned, "Disallow repositioning between steps");
    interp->callback([&] { action = [&] { return run_interpolate(globals, interp_args); }; });

    std::string start_path, orbit_gens = "identity";
    auto * orbit = app.add_subcommand("orbit", "Closure of a small graph type under local generator actions");
    orbit->add_option("--start", start_path, "Graph file with at most 5 vertices")->required();
    orbit->add_option("--gens", orbit_gens, "identity, minus, switch, clique, independent, point, delete-edge, add-edge")
        ->capture_default_str();
    orbit->callback([&] { action = [&] { return run_orbit(globals, start_path, orbit_gens); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }

    try {
        return action ? action() : 1;
    }
    catch (const ParseError & e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
    }
    catch (const SpecError & e) {
        std::cerr << "error: position " << e.position() << ": " << e.what() << '\n';
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
