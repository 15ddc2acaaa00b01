#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sq17/color.hpp"
#include "sq17/discharge.hpp"
#include "sq17/gen.hpp"
#include "sq17/metrics.hpp"
#include "sq17/reduce.hpp"
#include "sq17/square.hpp"

using namespace sq17;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIrreducible = 3;
constexpr int kExitUsage = 64;

EmbeddedGraph load_epg(const std::string& path) {
    if (path == "-") return parse_epg(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_epg(in);
}

SquareColoring load_sqc(const std::string& path, int n) {
    if (path == "-") return parse_sqc(std::cin, n);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_sqc(in, n);
}

// Whole-file replace so a failure never leaves partial output behind.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot rename " + tmp + " to " + path);
}

// Colors each component separately and merges under the original ids.
SquareColoring color_components(const EmbeddedGraph& g) {
    if (g.connected()) return color_square_17(g);
    SquareColoring merged;
    merged.assignment.assign(g.vertex_count(), 0);
    std::vector<int> comp(g.vertex_count(), -1);
    int comps = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = comps;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.rotation(v))
                if (comp[u] < 0) {
                    comp[u] = comps;
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        std::vector<int> local(g.vertex_count(), -1);
        for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> rot(members.size());
        for (size_t i = 0; i < members.size(); ++i)
            for (int u : g.rotation(members[i])) rot[i].push_back(local[u]);
        auto sub = EmbeddedGraph::build_from_rotations(static_cast<int>(members.size()),
                                                       std::move(rot));
        auto c = color_square_17(sub);
        for (size_t i = 0; i < members.size(); ++i)
            merged.assignment[members[i]] = c.assignment[i];
        ++comps;
    }
    return merged;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-of-planar-graph coloring toolkit"};
    app.require_subcommand(1);

    std::string input = "-", output, sqc_path;
    int chi_limit = kDefaultOracleLimit;
    int profile_vertex = -1;
    std::string gen_name;
    std::vector<int> gen_random;

    auto* color = app.add_subcommand("color", "17-color the square of a plane graph");
    color->add_option("input", input, "EPG file or - for stdin");
    color->add_option("-o,--output", output, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check a square coloring");
    verify->add_option("input", input, "EPG file or - for stdin");
    verify->add_option("coloring", sqc_path, "sqc file or - for stdin")->required();

    auto* chi2 = app.add_subcommand("chi2", "exact square chromatic number");
    chi2->add_option("input", input, "EPG file or - for stdin");
    chi2->add_option("--limit", chi_limit, "vertex limit for the exact search");

    auto* reduce = app.add_subcommand("reduce", "print the first reduction witness");
    reduce->add_option("input", input, "EPG file or - for stdin");

    auto* audit_cmd = app.add_subcommand("audit", "discharging charge report");
    audit_cmd->add_option("input", input, "EPG file or - for stdin");
    audit_cmd->add_option("-o,--output", output, "output file (default stdout)");

    auto* profile = app.add_subcommand("profile", "per-vertex incidence statistics");
    profile->add_option("input", input, "EPG file or - for stdin");
    profile->add_option("--vertex", profile_vertex, "restrict to one vertex");

    auto* gen = app.add_subcommand("gen", "emit a named or random instance as EPG");
    gen->add_option("--name", gen_name, "named instance, e.g. cycle-5");
    gen->add_option("--random", gen_random, "n seed")->expected(2);
    gen->add_option("-o,--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*color) {
            auto g = load_epg(input);
            if (g.max_degree() > 5) {
                std::cerr << "error: max degree exceeds 5\n";
                return kExitBadInput;
            }
            emit(output, to_sqc(color_components(g)));
        } else if (*verify) {
            auto g = load_epg(input);
            auto c = load_sqc(sqc_path, g.vertex_count());
            auto violations = verify_square_coloring(g, c);
            if (!violations.empty()) {
                for (const auto& v : violations)
                    std::cout << "violation " << v.u << " " << v.v
                              << " distance " << v.distance << "\n";
                return kExitVerifyFailed;
            }
            std::cout << "ok " << c.colors_used() << " colors\n";
        } else if (*chi2) {
            std::cout << chi2_exact(load_epg(input), chi_limit) << "\n";
        } else if (*reduce) {
            std::cout << find_reduction(load_epg(input)).serialize() << "\n";
        } else if (*audit_cmd) {
            emit(output, to_text(audit(load_epg(input))));
        } else if (*profile) {
            auto g = load_epg(input);
            std::ostringstream out;
            auto dump = [&](int v) {
                auto p = vertex_profile(g, v);
                out << "v " << v << " degree " << p.degree << " n2 " << p.n2_size
                    << " f3 " << p.f3() << " f4 " << p.f4() << " f5+ " << p.f5plus()
                    << " bad5 " << (p.is_bad5 ? 1 : 0) << " t5 " << p.t5 << " corners";
                for (int u : p.corners) out << " " << u;
                out << "\n";
            };
            if (profile_vertex >= 0)
                dump(profile_vertex);
            else
                for (int v = 0; v < g.vertex_count(); ++v) dump(v);
            std::cout << out.str();
        } else if (*gen) {
            if (gen_name.empty() == gen_random.empty()) {
                std::cerr << "error: pass exactly one of --name or --random\n";
                return kExitUsage;
            }
            auto g = gen_name.empty()
                         ? gen_random_delta5({gen_random[0],
                                              static_cast<std::uint64_t>(gen_random[1])})
                         : named_graph(gen_name);
            emit(output, to_epg(g));
        }
    } catch (const IrreducibleGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIrreducible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
