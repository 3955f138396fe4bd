// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "poc/canonical.hpp"
#include "poc/enumerate.hpp"
#include "poc/gadgets.hpp"
#include "poc/io.hpp"
#include "poc/recognizers.hpp"
#include "poc/solver.hpp"
#include "poc/verify.hpp"

using namespace poc;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail << why;
        ok = false;
    }
};

void require_report(Outcome& out, const TheoremReport& r)
{
    if (!r.pass()) {
        std::ostringstream os;
        os << r.theorem << " has " << r.violations.size() << " violations, first " << r.violations.front().graph6
           << ": " << r.violations.front().detail;
        out.fail(os.str());
    }
    if (r.scanned == 0)
        out.fail(r.theorem + " scanned nothing");
}

void named_table(Outcome& out)
{
    struct Row {
        const char* name;
        Graph g;
        Ratio expected;
    };
    std::vector<Row> rows{
        {"P5", pattern(PatternId::P5).graph, Ratio(3, 2)},   {"C4", pattern(PatternId::C4).graph, Ratio(3, 2)},
        {"C5", pattern(PatternId::C5).graph, Ratio(4, 3)},   {"P7", pattern(PatternId::P7).graph, Ratio(5, 3)},
        {"C6", pattern(PatternId::C6).graph, Ratio(5, 3)},   {"D1", pattern(PatternId::Delta1).graph, Ratio(5, 3)},
        {"D2", pattern(PatternId::Delta2).graph, Ratio(5, 3)},
    };
    auto start = std::chrono::steady_clock::now();
    for (const auto& row : rows) {
        auto value = poc::poc(row.g);
        if (value != row.expected)
            out.fail(std::string(row.name) + " gave " + value.to_string());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (ms >= 1000)
        out.fail("table took " + std::to_string(ms) + " ms");
    out.detail << "7 graphs, " << ms << " ms";
}

void observation1(Outcome& out, SolverCache& cache)
{
    auto r = check_observation1(8, cache);
    require_report(out, r);
    auto levels = connected_graphs_up_to(8);
    if (levels[8].size() != 11117)
        out.fail("n = 8 has " + std::to_string(levels[8].size()) + " classes");
    out.detail << r.scanned << " graphs, " << r.elapsed_ms << " ms";
}

void scan(Outcome& out, SolverCache& cache, const std::string& id, std::size_t max_n)
{
    auto r = run_check(id, max_n, cache);
    require_report(out, r);
    out.detail << id << " " << r.scanned << " checks, " << r.elapsed_ms << " ms ";
}

void theorem3(Outcome& out, SolverCache& cache)
{
    scan(out, cache, "thm3", 8);
    auto c5 = pattern(PatternId::C5).graph;
    if (poc::poc(c5) != Ratio(4, 3))
        out.fail("C5 does not attain 4/3");
}

void theorem5(Outcome& out, SolverCache& cache)
{
    auto r = check_critical_chordal(9, cache);
    require_report(out, r);
    // independent cross-check of the expected list
    CriticalityChecker checker(cache);
    auto chordal = connected_chordal_graphs_up_to(9);
    std::vector<std::string> found;
    for (std::size_t n = 3; n <= 9; ++n)
        for (const auto& g : chordal[n])
            if (checker.is_critical(g)) {
                found.push_back(emit_graph6(g));
                auto t = vertex_cover_number(g).value;
                if (poc::poc(g) != Ratio(2) - Ratio(1, t))
                    out.fail(emit_graph6(g) + " is critical with PoC " + poc::poc(g).to_string());
            }
    std::vector<Graph> expected{build_special_tree(path_graph(2)), build_special_tree(path_graph(3)),
                                build_special_tree(path_graph(4)), build_special_tree(star_graph(3))};
    std::size_t fitting = 0;
    for (const auto& e : expected) {
        if (e.vertex_count() > 9)
            continue;
        ++fitting;
        bool seen = false;
        for (const auto& g : chordal[e.vertex_count()])
            if (are_isomorphic(g, e) && checker.is_critical(g))
                seen = true;
        if (!seen)
            out.fail("special tree " + emit_graph6(e) + " missing");
    }
    if (found.size() != fitting)
        out.fail(std::to_string(found.size()) + " critical graphs, expected " + std::to_string(fitting));
    out.detail << "critical:";
    for (const auto& s : found)
        out.detail << ' ' << s;
}

void gadgets(Outcome& out, SolverCache& cache)
{
    auto levels = connected_graphs_up_to(5);
    std::size_t graphs = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const auto& g : levels[n]) {
            ++graphs;
            for (const auto& built : {fix_tauc(g), fix_tau(g)}) {
                auto numbers = cache.numbers(built.graph);
                if (numbers.tau != built.predicted_tau || numbers.tauc != *built.predicted_tauc)
                    out.fail(built.provenance + " on " + emit_graph6(g) + " mispredicted");
            }
        }
    }
    if (graphs != 30)
        out.fail(std::to_string(graphs) + " connected graphs, expected 30");
    auto r = verify_gadgets(5, cache);
    require_report(out, r);
    out.detail << graphs << " graphs, " << r.scanned << " constructions";
}

void solve_ab_suite(Outcome& out)
{
    std::mt19937_64 rng(20261018);
    std::size_t cases = 0;
    for (auto [r1, r2] : {std::pair<std::int64_t, std::int64_t>{4, 3}, {3, 2}, {7, 4}}) {
        std::uniform_int_distribution<std::int64_t> pick2(2, 1'000'000);
        for (int i = 0; i < 1000; ++i) {
            const auto phi2 = pick2(rng);
            std::uniform_int_distribution<std::int64_t> pick1(phi2 + 1, 2 * phi2 - 1);
            const auto phi1 = pick1(rng);
            ++cases;
            auto s = solve_ab(phi1, phi2, r1, r2);
            const std::string tag = "(" + std::to_string(phi1) + ", " + std::to_string(phi2) + ")";
            if (s.a < 0 || s.b < 0 || s.a + 2 * s.b + phi1 != r1 * s.c || s.a + s.b + phi2 != r2 * s.c)
                out.fail(tag + " does not solve the equations");
            // c - 1 must leave a or b negative
            const auto c = s.c - 1;
            const auto b = (r1 - r2) * c - (phi1 - phi2);
            const auto a = (2 * r2 - r1) * c - (2 * phi2 - phi1);
            if (c >= 1 && a >= 0 && b >= 0)
                out.fail(tag + " has a smaller c");
            const auto bound = 2 * r2 * (phi1 + phi2 + 2);
            if (s.a > bound || s.b > bound)
                out.fail(tag + " exceeds the size bound");
        }
    }
    out.detail << cases << " cases";
}

void reduction(Outcome& out, SolverCache& cache)
{
    std::vector<Graph> graphs{path_graph(2), path_graph(3), complete_graph(3), path_graph(4)};
    auto r = check_reduction_decisions(graphs, 3, 2, 400, cache);
    require_report(out, r);
    if (r.scanned != 16)
        out.fail(std::to_string(r.scanned) + " pairs");
    out.detail << r.scanned << " pairs; " << (r.notes.empty() ? "" : r.notes.front());
}

void oracle_equivalence(Outcome& out)
{
    std::size_t checked = 0;
    auto check = [&](const Graph& g) {
        ++checked;
        auto t = vertex_cover_number(g);
        if (t.value != oracle::tau(g) || !is_vertex_cover(g, t.witness) ||
            static_cast<std::int64_t>(t.witness.size()) != t.value)
            out.fail("tau wrong on " + emit_graph6(g));
        if (g.edge_count() == 0)
            return;
        auto tc = connected_vertex_cover_number(g);
        if (!is_connected_vertex_cover(g, tc.witness) || static_cast<std::int64_t>(tc.witness.size()) != tc.value)
            out.fail("tauc witness invalid on " + emit_graph6(g));
    };
    auto levels = all_graphs_up_to(7);
    for (const auto& level : levels)
        for (const auto& g : level)
            check(g);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 1000; ++i)
        check(oracle::random_graph(8, density(rng), rng));
    out.detail << checked << " graphs";
}

void round_trip(Outcome& out)
{
    std::size_t checked = 0;
    auto check = [&](const Graph& g) {
        ++checked;
        auto text = emit_graph6(g);
        if (parse_graph6(text) != g || emit_graph6(parse_graph6(text)) != text)
            out.fail("round trip failed on " + text);
    };
    for (const auto& level : all_graphs_up_to(8))
        for (const auto& g : level)
            check(g);
    out.detail << checked << " graphs";
}

} // namespace

int main()
{
    SolverCache cache;
    std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"named PoC table", named_table},
        {"tauc <= 2 tau - 1, n <= 8", [&](Outcome& o) { observation1(o, cache); }},
        {"{P5,C5,C4}-free sweep and equivalence, n <= 8", [&](Outcome& o) { scan(o, cache, "thm2", 8); }},
        {"{P5,C4}-free sweep, n <= 8", [&](Outcome& o) { theorem3(o, cache); }},
        {"{P7,C6,D1,D2}-free and chordal P7-free sweeps, n <= 8",
         [&](Outcome& o) {
             scan(o, cache, "thm4", 8);
             scan(o, cache, "cor1", 8);
         }},
        {"critical chordal graphs are special trees, n <= 9", [&](Outcome& o) { theorem5(o, cache); }},
        {"strongly critical structure, n <= 7", [&](Outcome& o) { scan(o, cache, "thm6", 7); }},
        {"gadget predictions on 30 connected graphs", [&](Outcome& o) { gadgets(o, cache); }},
        {"solve_ab property suite", solve_ab_suite},
        {"reduction decisions on 16 pairs", [&](Outcome& o) { reduction(o, cache); }},
        {"solver against brute force", oracle_equivalence},
        {"graph6 round trip, n <= 8", round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            criteria[i].second(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        failed += out.ok ? 0 : 1;
        std::cout << "criterion " << (i + 1) << " " << (out.ok ? "PASS" : "FAIL") << ": " << criteria[i].first
                  << " (" << out.detail.str() << ")" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed;
}
