#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "poc/enumerate.hpp"
#include "poc/gadgets.hpp"
#include "poc/io.hpp"
#include "poc/recognizers.hpp"
#include "poc/solver.hpp"
#include "poc/verify.hpp"

namespace {

using json = nlohmann::json;
using poc::Graph;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::string format = "auto";
    bool json_output = false;
    std::size_t vertex_cap = poc::kDefaultVertexCap;
    std::size_t verify_budget = 400;
};

std::size_t env_size(const char* name, std::size_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    try {
        std::size_t pos = 0;
        auto x = std::stoull(v, &pos);
        if (pos == std::string(v).size() && x > 0)
            return static_cast<std::size_t>(x);
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError(std::string(name), "must be a positive integer");
}

std::string read_all(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw poc::ParseError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

// First meaningful line of an edge list is an "n m" header; a graph6 line
// never consists of two decimal numbers.
bool looks_like_edge_list(const std::string& path, std::istream& in)
{
    for (const char* ext : {".g6", ".graph6"})
        if (path.ends_with(ext))
            return false;
    for (const char* ext : {".el", ".edges", ".edgelist"})
        if (path.ends_with(ext))
            return true;
    static const std::regex header(R"(\s*\d+\s+\d+\s*(#.*)?\r?)");
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return std::regex_match(line, header);
    }
    return false;
}

// Calls sink(graph, line) for every graph in the input. Edge lists hold one
// graph; graph6 input is streamed one line at a time.
void for_each_input(const Config& cfg, const std::string& path, const std::function<void(Graph, std::size_t)>& sink)
{
    std::ifstream file;
    std::istringstream buffered;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path, std::ios::binary);
        if (!file)
            throw poc::ParseError("cannot open '" + path + "'");
        in = &file;
    }
    bool edge_list = cfg.format == "edgelist";
    if (cfg.format == "auto") {
        if (path == "-") {
            buffered.str(read_all(path));
            in = &buffered;
        }
        edge_list = looks_like_edge_list(path, *in);
        in->clear();
        in->seekg(0);
    }
    if (edge_list) {
        std::string text{std::istreambuf_iterator<char>(*in), {}};
        sink(poc::parse_edge_list(text, cfg.vertex_cap), 1);
        return;
    }
    poc::for_each_graph6(*in, sink, cfg.vertex_cap);
}

Graph first_graph(const Config& cfg, const std::string& path)
{
    std::optional<Graph> out;
    for_each_input(cfg, path, [&](Graph g, std::size_t) {
        if (!out)
            out = std::move(g);
    });
    if (!out)
        throw poc::ParseError("'" + path + "' contains no graph");
    return std::move(*out);
}

std::string fixed4(double x)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(4);
    os << x;
    return os.str();
}

json vertices_json(const poc::VertexSet& s) { return s.to_vector(); }

// ------------------------------------------------------------------ analyze

int cmd_analyze(const Config& cfg, const std::string& path)
{
    for_each_input(cfg, path, [&](Graph g, std::size_t line) {
        json rec{{"line", line}, {"graph6", poc::emit_graph6(g)}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
        std::ostringstream text;
        text << "line " << line << ": n=" << g.vertex_count() << " m=" << g.edge_count();
        if (g.edge_count() == 0) {
            rec["tau"] = 0;
            rec["tauc"] = 0;
            rec["poc"] = nullptr;
            rec["note"] = "PoC undefined";
            text << " tau=0 tauc=0 PoC undefined";
        } else {
            auto vc = poc::vertex_cover_number(g);
            auto cvc = poc::connected_vertex_cover_number(g);
            poc::Ratio p(cvc.value, vc.value);
            rec["tau"] = vc.value;
            rec["tauc"] = cvc.value;
            rec["poc"] = p.to_string();
            rec["poc_display"] = fixed4(p.approximate());
            rec["vertex_cover"] = vertices_json(vc.witness);
            rec["connected_vertex_cover"] = vertices_json(cvc.witness);
            text << " tau=" << vc.value << " tauc=" << cvc.value << " PoC=" << p.to_string() << " (~"
                 << fixed4(p.approximate()) << ", display only) vc=" << vc.witness.to_string()
                 << " cvc=" << cvc.witness.to_string();
        }
        if (cfg.json_output)
            std::cout << rec.dump() << '\n';
        else
            std::cout << text.str() << '\n';
    });
    return kExitOk;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const Config& cfg, const std::string& path)
{
    for_each_input(cfg, path, [&](Graph g, std::size_t line) {
        auto label = poc::classify(g);
        json rec{{"line", line}, {"graph6", poc::emit_graph6(g)}, {"class", poc::to_string(label.poc_class)}};
        if (auto t = poc::class_threshold(label.poc_class))
            rec["threshold"] = t->to_string();
        else
            rec["threshold"] = nullptr;
        if (label.witness) {
            rec["witness"] = {{"pattern", poc::pattern(label.witness->pattern).name},
                              {"embedding", label.witness->embedding}};
        } else {
            rec["witness"] = nullptr;
        }
        if (cfg.json_output) {
            std::cout << rec.dump() << '\n';
            return;
        }
        std::cout << "line " << line << ": " << rec["class"].get<std::string>();
        if (label.witness) {
            std::cout << " (contains " << rec["witness"]["pattern"].get<std::string>() << " at";
            for (int v : label.witness->embedding)
                std::cout << ' ' << v;
            std::cout << ')';
        }
        std::cout << '\n';
    });
    return kExitOk;
}

// ------------------------------------------------------------------ gadgets

json gadget_json(const poc::GadgetOutput& out)
{
    json j{{"graph6", poc::emit_graph6(out.graph)},
           {"n", out.graph.vertex_count()},
           {"m", out.graph.edge_count()},
           {"predicted_tau", out.predicted_tau},
           {"provenance", out.provenance}};
    j["predicted_tauc"] = out.predicted_tauc ? json(*out.predicted_tauc) : json(nullptr);
    return j;
}

// Adds solver values to j; false on a mismatch.
bool verify_output(const poc::GadgetOutput& out, std::size_t budget, json& j)
{
    if (out.graph.vertex_count() > budget) {
        j["verified"] = nullptr;
        j["verify_note"] = "above the budget of " + std::to_string(budget) + " vertices";
        return true;
    }
    auto tau = poc::vertex_cover_number(out.graph).value;
    bool ok = tau == out.predicted_tau;
    j["solver_tau"] = tau;
    if (out.predicted_tauc) {
        auto tauc = poc::connected_vertex_cover_number(out.graph).value;
        j["solver_tauc"] = tauc;
        ok = ok && tauc == *out.predicted_tauc;
    }
    j["verified"] = ok;
    return ok;
}

void print_gadget_text(const json& j)
{
    std::cout << j["graph6"].get<std::string>() << '\n';
    std::cout << "  " << j["provenance"].get<std::string>() << ": n=" << j["n"] << " m=" << j["m"]
              << " predicted tau=" << j["predicted_tau"];
    if (!j["predicted_tauc"].is_null())
        std::cout << " tauc=" << j["predicted_tauc"];
    std::cout << '\n';
    if (j.contains("verified")) {
        if (j["verified"].is_null()) {
            std::cout << "  verify skipped: " << j["verify_note"].get<std::string>() << '\n';
        } else {
            std::cout << "  solver tau=" << j["solver_tau"];
            if (j.contains("solver_tauc"))
                std::cout << " tauc=" << j["solver_tauc"];
            std::cout << (j["verified"].get<bool>() ? " (match)" : " (MISMATCH)") << '\n';
        }
    }
}

struct GadgetArgs {
    std::string kind;
    std::string file;
    int k = 2;
    int anchor = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::string caterpillar_anchor = "support";
    bool verify = false;
};

int cmd_gadget(const Config& cfg, const GadgetArgs& args)
{
    int status = kExitOk;
    for_each_input(cfg, args.file, [&](Graph g, std::size_t line) {
        poc::GadgetOutput out{g, 0, std::nullopt, ""};
        if (args.kind == "fixtauc") {
            out = poc::fix_tauc(g);
        } else if (args.kind == "fixtau") {
            out = poc::fix_tau(g);
        } else if (args.kind == "replicate") {
            out = poc::replicate_join(g, args.k, args.anchor);
        } else if (args.kind == "connectify") {
            out = {poc::connectify(g), poc::vertex_cover_number(g).value + 1, std::nullopt, "connectify"};
        } else {
            // caterpillar: on the graph as given, predictions from the solver.
            auto vc = poc::vertex_cover_number(g).value;
            auto cvc = poc::connected_vertex_cover_number(g).value;
            auto anchor = args.caterpillar_anchor == "leaf" ? poc::CaterpillarAnchor::Leaf : poc::CaterpillarAnchor::Support;
            out = poc::attach_caterpillars({g, vc, cvc, "input"}, args.a, args.b, anchor);
        }
        auto j = gadget_json(out);
        j["line"] = line;
        if (args.verify && !verify_output(out, cfg.verify_budget, j))
            status = kExitViolation;
        if (cfg.json_output)
            std::cout << j.dump() << '\n';
        else
            print_gadget_text(j);
    });
    return status;
}

// ------------------------------------------------------------------- reduce

int cmd_reduce(const Config& cfg, const std::string& g_path, const std::string& h_path, const std::string& ratio,
               bool verify, const std::string& anchor_name)
{
    auto r = poc::Ratio::parse(ratio);
    auto g = first_graph(cfg, g_path);
    auto h = first_graph(cfg, h_path);
    if (r.numerator() > 1000000 || r.denominator() > 1000000)
        throw std::invalid_argument("ratio terms too large");
    const auto r1 = static_cast<std::int64_t>(r.numerator());
    const auto r2 = static_cast<std::int64_t>(r.denominator());
    auto anchor = anchor_name == "leaf" ? poc::CaterpillarAnchor::Leaf : poc::CaterpillarAnchor::Support;
    auto red = poc::full_reduction(g, h, r1, r2, anchor);
    const auto& p = red.plan;

    json plan{{"r1", p.r1},
              {"r2", p.r2},
              {"n_G", p.n_g},
              {"n_H", p.n_h},
              {"m_H", p.m_h},
              {"tau_G", p.tau_g},
              {"tau_H", p.tau_h},
              {"phi1", p.phi1},
              {"phi2", p.phi2},
              {"a", p.a},
              {"b", p.b},
              {"c", p.c},
              {"predicted_tau", p.predicted_tau},
              {"predicted_tauc", p.predicted_tauc},
              {"predicted_ratio", p.predicted_poc().to_string()},
              {"predicted_decision", p.predicted_decision()},
              {"expected_decision", p.expected_decision()},
              {"g_connectified", p.g_connectified},
              {"h_connectified", p.h_connectified}};
    json stages = json::array();
    for (const auto* stage : {&red.g_side, &red.h_side, &red.joined, &red.result})
        stages.push_back(gadget_json(*stage));
    json doc{{"graph6", poc::emit_graph6(red.result.graph)}, {"n", red.result.graph.vertex_count()}, {"plan", plan},
             {"stages", stages}};

    int status = kExitOk;
    if (verify) {
        json v;
        if (!verify_output(red.result, cfg.verify_budget, v))
            status = kExitViolation;
        doc["verify"] = v;
    }
    if (cfg.json_output) {
        std::cout << doc.dump(2) << '\n';
        return status;
    }
    std::cout << doc["graph6"].get<std::string>() << '\n';
    std::cout << "n=" << doc["n"] << " r=" << r1 << '/' << r2 << " phi1=" << p.phi1 << " phi2=" << p.phi2
              << " a=" << p.a << " b=" << p.b << " c=" << p.c << '\n';
    std::cout << "tau(G)=" << p.tau_g << " tau(H)=" << p.tau_h << " predicted tau=" << p.predicted_tau
              << " tauc=" << p.predicted_tauc << " ratio=" << p.predicted_poc().to_string() << '\n';
    std::cout << "decision (tauc/tau <= r): " << (p.predicted_decision() ? "true" : "false")
              << "; tau(H) <= tau(G): " << (p.expected_decision() ? "true" : "false") << '\n';
    if (verify) {
        const auto& v = doc["verify"];
        if (v["verified"].is_null())
            std::cout << "verify skipped: " << v["verify_note"].get<std::string>() << '\n';
        else
            std::cout << "solver tau=" << v["solver_tau"] << " tauc=" << v["solver_tauc"]
                      << (v["verified"].get<bool>() ? " (match)" : " (MISMATCH)") << '\n';
    }
    return status;
}

// --------------------------------------------------------------------- scan

int cmd_scan(const Config& cfg, const std::string& check, std::size_t max_n)
{
    poc::SolverCache cache;
    auto report = poc::run_check(check, max_n, cache);
    if (cfg.json_output)
        std::cout << poc::to_json(report).dump(2) << '\n';
    else
        std::cout << poc::to_text(report);
    return report.pass() ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------- special tree

int cmd_special_tree(const Config& cfg, const std::string& base_path, const std::string& recognize_path)
{
    if (!base_path.empty()) {
        for_each_input(cfg, base_path, [&](Graph g, std::size_t line) {
            auto t = poc::build_special_tree(g);
            if (cfg.json_output)
                std::cout << json{{"line", line}, {"graph6", poc::emit_graph6(t)}, {"n", t.vertex_count()}}.dump()
                          << '\n';
            else
                std::cout << poc::emit_graph6(t) << '\n';
        });
        return kExitOk;
    }
    for_each_input(cfg, recognize_path, [&](Graph g, std::size_t line) {
        auto rec = poc::recognize_special_tree(g);
        json j{{"line", line}, {"graph6", poc::emit_graph6(g)}, {"special_tree", rec.base.has_value()}};
        if (rec.base)
            j["base"] = poc::emit_graph6(*rec.base);
        else
            j["violation"] = rec.violation;
        if (cfg.json_output) {
            std::cout << j.dump() << '\n';
            return;
        }
        if (rec.base)
            std::cout << "line " << line << ": special tree, base " << j["base"].get<std::string>() << " ("
                      << rec.base->vertex_count() << " vertices)\n";
        else
            std::cout << "line " << line << ": not a special tree: " << rec.violation << '\n';
    });
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Price of connectivity toolkit: exact tau/tauc, class recognition, reduction gadgets, theorem scans"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    app.add_flag("--json", cfg.json_output, "JSON output");

    std::string file;
    auto* analyze = app.add_subcommand("analyze", "tau, tauc and PoC per input graph");
    analyze->add_option("file", file, "Input file, '-' for stdin")->required();

    auto* classify = app.add_subcommand("classify", "Hereditary PoC class with witness embedding");
    classify->add_option("file", file, "Input file, '-' for stdin")->required();

    GadgetArgs gargs;
    auto* gadget = app.add_subcommand("gadget", "Build a reduction gadget with predicted tau/tauc");
    gadget->add_option("kind", gargs.kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"fixtauc", "fixtau", "replicate", "caterpillar", "connectify"}));
    gadget->add_option("file", gargs.file, "Input file, '-' for stdin")->required();
    gadget->add_option("-k,--copies", gargs.k, "replicate: number of copies")->check(CLI::PositiveNumber);
    gadget->add_option("--anchor", gargs.anchor, "replicate: anchor vertex");
    gadget->add_option("-a", gargs.a, "caterpillar: length of the first path")->check(CLI::NonNegativeNumber);
    gadget->add_option("-b", gargs.b, "caterpillar: half length of the second path")->check(CLI::NonNegativeNumber);
    gadget->add_option("--attach", gargs.caterpillar_anchor, "caterpillar: attach at the support vertex or the leaf")
        ->check(CLI::IsMember({"support", "leaf"}));
    gadget->add_flag("--verify", gargs.verify, "Cross-check predictions with the solver");

    std::string g_path, h_path, ratio, reduce_anchor = "support";
    bool reduce_verify = false;
    auto* reduce = app.add_subcommand("reduce", "Full reduction U' from G, H and ratio r");
    reduce->set_help_flag("--help", "Print this help message and exit");
    reduce->add_option("--g", g_path, "File holding G")->required();
    reduce->add_option("--h", h_path, "File holding H")->required();
    reduce->add_option("--ratio", ratio, "r as p/q with 1 < r < 2")->required();
    reduce->add_option("--attach", reduce_anchor, "Caterpillar attachment")->check(CLI::IsMember({"support", "leaf"}));
    reduce->add_flag("--verify", reduce_verify, "Solve U' exactly when within the budget");

    std::string check;
    std::size_t max_n = 0;
    auto* scan = app.add_subcommand("scan", "Verify a theorem on enumerated small graphs");
    scan->add_option("--check", check, "Check id")->required()->check(CLI::IsMember(
        std::vector<std::string>(poc::check_ids().begin(), poc::check_ids().end())));
    scan->add_option("--max-n", max_n, "Largest vertex count")->required()->check(CLI::Range(1, 10));

    std::string base_path, recognize_path;
    auto* special = app.add_subcommand("special-tree", "Build or recognize special trees");
    auto* base_opt = special->add_option("--base", base_path, "Build from this base tree");
    auto* rec_opt = special->add_option("--recognize", recognize_path, "Recognize this graph");
    base_opt->excludes(rec_opt);
    special->require_option(1);

    try {
        app.parse(argc, argv);
        cfg.vertex_cap = env_size("POC_VERTEX_CAP", poc::kDefaultVertexCap);
        cfg.verify_budget = env_size("POC_VERIFY_BUDGET", cfg.verify_budget);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze)
            return cmd_analyze(cfg, file);
        if (*classify)
            return cmd_classify(cfg, file);
        if (*gadget)
            return cmd_gadget(cfg, gargs);
        if (*reduce)
            return cmd_reduce(cfg, g_path, h_path, ratio, reduce_verify, reduce_anchor);
        if (*scan)
            return cmd_scan(cfg, check, max_n);
        if (*special)
            return cmd_special_tree(cfg, base_path, recognize_path);
    } catch (const poc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
