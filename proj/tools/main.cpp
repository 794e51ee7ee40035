#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowgraph/generator.hpp"
#include "flowgraph/io.hpp"
#include "flowgraph/iso.hpp"
#include "flowgraph/realize.hpp"
#include "flowgraph/reduce.hpp"
#include "flowgraph/restore.hpp"

using namespace flowgraph;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1; // negative or invalid-graph verdicts
constexpr int kExitError = 2; // unusable input

using Value = std::variant<std::string, int, bool, std::vector<std::string>,
                           std::vector<int>>;

struct Reporter {
    bool json = false;

    void line(const std::vector<std::pair<std::string, Value>>& fields) const {
        if (json) {
            nlohmann::json obj;
            for (const auto& [key, value] : fields)
                std::visit([&](const auto& v) { obj[key] = v; }, value);
            std::cout << obj.dump() << "\n";
            return;
        }
        bool first = true;
        for (const auto& [key, value] : fields) {
            if (!first) std::cout << " ";
            first = false;
            std::cout << key << "=";
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, bool>) {
                        std::cout << (v ? "true" : "false");
                    } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
                        for (std::size_t i = 0; i < v.size(); ++i)
                            std::cout << (i ? "," : "") << v[i];
                    } else if constexpr (std::is_same_v<T, std::vector<int>>) {
                        for (std::size_t i = 0; i < v.size(); ++i)
                            std::cout << (i ? "," : "") << v[i];
                    } else {
                        std::cout << v;
                    }
                },
                value);
        }
        std::cout << "\n";
    }
};

// A selected block: either a four-colour or an equipped graph.
struct Selection {
    const FourColourGraph* fcg = nullptr;
    const EquippedGraph* eqg = nullptr;
};

Selection select_block(const ParsedFile& file, const std::string& wanted) {
    if (!wanted.empty()) {
        for (const FourColourGraph& g : file.four_colour)
            if (g.name == wanted) return {&g, nullptr};
        for (const EquippedGraph& u : file.equipped)
            if (u.name == wanted) return {nullptr, &u};
        throw ParseError("no block named '" + wanted + "' in the file", 0);
    }
    if (file.block_count() == 1) {
        if (file.order[0].first) return {nullptr, &file.equipped[0]};
        return {&file.four_colour[0], nullptr};
    }
    // Several blocks: an eqg that uses every fcg block as equipment is an
    // unambiguous default (the common single-graph file layout).
    if (file.equipped.size() == 1 &&
        file.four_colour.size() + 1 == static_cast<std::size_t>(file.block_count()))
        return {nullptr, &file.equipped[0]};
    throw ParseError("file holds several graphs; select one with --graph <name>", 0);
}

std::vector<std::pair<std::string, Value>> violation_fields(const Violation& v) {
    return {{"violation", std::string(violation_name(v.code))}, {"detail", v.detail}};
}

int cmd_validate(const Selection& sel, const Reporter& out) {
    ValidationReport report =
        sel.fcg ? validate_four_colour(*sel.fcg) : validate_equipped(*sel.eqg);
    for (const Violation& v : report) out.line(violation_fields(v));
    out.line({{"valid", report.empty()}});
    return report.empty() ? kExitTrue : kExitFalse;
}

int cmd_invariants(const Selection& sel, const Reporter& out) {
    int chi = 0;
    bool orientable = false;
    std::optional<std::vector<int>> nu;
    if (sel.fcg) {
        CycleCensus census = cycle_census(*sel.fcg);
        chi = census.nu0() - census.nu1() + census.nu2();
        orientable = orientable_four_colour(*sel.fcg);
        nu = std::vector<int>{census.nu0(), census.nu1(), census.nu2()};
    } else {
        chi = euler_equipped(*sel.eqg);
        orientable = orientable_equipped(*sel.eqg);
    }
    SurfaceType type = surface_type(chi, orientable);
    out.line({{"chi", chi}});
    out.line({{"orientable", orientable}});
    out.line({{"genus", type.genus}});
    if (nu) out.line({{"nu", *nu}});
    return kExitTrue;
}

std::vector<std::string> dart_names(const FourColourGraph& g, const OrientedCycle& c) {
    std::vector<std::string> out;
    for (const Dart& d : c.darts) {
        out.push_back(g.vertex_names[d.vertex]);
        out.push_back(g.edges[d.edge].name);
    }
    return out;
}

int cmd_cycles(const Selection& sel, const Reporter& out) {
    if (!sel.fcg) throw ParseError("cycles needs a four-colour graph input", 0);
    CycleCensus census = cycle_census(*sel.fcg);
    for (const auto* family : {&census.tu, &census.cstar, &census.st})
        for (const OrientedCycle& c : *family)
            out.line({{"kind", std::string(cycle_kind_name(c.kind))},
                      {"darts", dart_names(*sel.fcg, c)}});
    return kExitTrue;
}

int cmd_iso(const Selection& a, const Selection& b, bool use_oracle, bool emit_mapping,
            const Reporter& out) {
    if (static_cast<bool>(a.fcg) != static_cast<bool>(b.fcg))
        throw ParseError("iso needs two graphs of the same kind", 0);

    bool iso = false;
    std::optional<IsoCertificate> cert;
    if (a.fcg) {
        if (use_oracle) {
            iso = direct_iso_oracle(*a.fcg, *b.fcg);
        } else {
            cert = four_colour_iso_mapping(*a.fcg, *b.fcg);
            iso = cert.has_value();
        }
    } else {
        if (use_oracle) {
            iso = direct_iso_oracle(*a.eqg, *b.eqg);
        } else {
            cert = equipped_iso_mapping(*a.eqg, *b.eqg);
            iso = cert.has_value();
        }
    }
    out.line({{"isomorphic", iso}});
    if (iso && emit_mapping && cert) {
        for (std::size_t v = 0; v < cert->mapping.size(); ++v) {
            const std::string from =
                a.fcg ? a.fcg->vertex_names[v] : a.eqg->vertices[v].name;
            const std::string to = a.fcg ? b.fcg->vertex_names[cert->mapping[v]]
                                         : b.eqg->vertices[cert->mapping[v]].name;
            out.line({{"map", std::vector<std::string>{from, to}}});
        }
    }
    return iso ? kExitTrue : kExitFalse;
}

int cmd_reduce(const Selection& sel, const Reporter& out) {
    const SimpleGraph sg =
        sel.fcg ? to_simple_four_colour(*sel.fcg).graph : to_simple_equipped(*sel.eqg).graph;
    if (out.json) {
        for (auto [a, b] : sg.edges) {
            const std::string &na = sg.vertex_names[a], &nb = sg.vertex_names[b];
            out.line({{"edge", std::vector<std::string>{std::min(na, nb), std::max(na, nb)}}});
        }
        return kExitTrue;
    }
    std::cout << serialize(sg);
    return kExitTrue;
}

int cmd_restore(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    const SimpleGraph sg = parse_simple_graph(buf.str());

    bool has_pendant = false;
    for (const auto& nbrs : sg.adjacency())
        if (nbrs.size() == 1) has_pendant = true;
    if (has_pendant)
        std::cout << serialize(restore_equipped(sg));
    else
        std::cout << serialize(restore_four_colour(sg));
    return kExitTrue;
}

int cmd_realize(const Selection& sel, const Reporter& out) {
    if (sel.fcg) {
        const CellComplex cc = glue(*sel.fcg);
        out.line({{"F", cc.face_count()},
                  {"E", cc.edge_class_count()},
                  {"V", cc.vertex_class_count()},
                  {"chi", complex_euler(cc)},
                  {"orientable", complex_orientable(cc)}});
    } else {
        out.line({{"chi", equipped_euler_oracle(*sel.eqg)},
                  {"orientable", orientable_equipped(*sel.eqg)}});
    }
    return kExitTrue;
}

int cmd_gen(int vertices, std::uint64_t seed, int count) {
    for (int i = 0; i < count; ++i) {
        FourColourGraph g = random_admissible(vertices, seed + static_cast<std::uint64_t>(i));
        if (count > 1) g.name += "_" + std::to_string(i);
        std::cout << serialize(g);
    }
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surface-flow graph toolkit: validation, invariants, isomorphism,"
                 " polygonal realization"};
    app.require_subcommand(1);
    std::string format = "plain";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "json-lines"}));

    std::string file1, file2, graph_name;
    bool use_oracle = false, emit_mapping = false;
    int vertices = 0, count = 1;
    std::uint64_t seed = 0;

    auto add_file_cmd = [&](const char* name, const char* desc, bool with_graph = true) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("file", file1, "Input graph file")->required();
        if (with_graph) cmd->add_option("--graph", graph_name, "Block to use");
        return cmd;
    };

    CLI::App* validate = add_file_cmd("validate", "Check well-formedness and admissibility");
    CLI::App* invariants =
        add_file_cmd("invariants", "Euler characteristic, orientability, genus");
    CLI::App* cycles = add_file_cmd("cycles", "List tu-, c*- and st-cycles");
    CLI::App* reduce = add_file_cmd("reduce", "Emit the simple-graph reduction");
    CLI::App* realize = add_file_cmd("realize", "Glue polygons and report the surface");
    CLI::App* restore =
        add_file_cmd("restore", "Rebuild a graph from a reduction edge list", false);

    CLI::App* iso = app.add_subcommand("iso", "Decide topological equivalence");
    iso->add_option("file1", file1, "First graph file")->required();
    iso->add_option("file2", file2, "Second graph file")->required();
    iso->add_option("--graph", graph_name, "Block to use (both files)");
    iso->add_flag("--oracle", use_oracle, "Use the exhaustive oracle backend");
    iso->add_flag("--emit-mapping", emit_mapping, "Print the vertex mapping");

    CLI::App* gen = app.add_subcommand("gen", "Generate admissible four-colour graphs");
    gen->add_option("--vertices", vertices, "Vertex count (even, >= 4)")->required();
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("--count", count, "Number of graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }

    Reporter out{format == "json-lines"};
    try {
        if (*validate) return cmd_validate(select_block(parse_file(file1), graph_name), out);
        if (*invariants)
            return cmd_invariants(select_block(parse_file(file1), graph_name), out);
        if (*cycles) return cmd_cycles(select_block(parse_file(file1), graph_name), out);
        if (*reduce) return cmd_reduce(select_block(parse_file(file1), graph_name), out);
        if (*realize) return cmd_realize(select_block(parse_file(file1), graph_name), out);
        if (*restore) return cmd_restore(file1);
        if (*iso) {
            if (use_oracle && emit_mapping)
                throw ParseError("--emit-mapping requires the gadget pipeline", 0);
            const ParsedFile a = parse_file(file1);
            const ParsedFile b = parse_file(file2);
            return cmd_iso(select_block(a, graph_name), select_block(b, graph_name),
                           use_oracle, emit_mapping, out);
        }
        if (*gen) return cmd_gen(vertices, seed, count);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
        std::cerr << "\n";
        return kExitError;
    } catch (const NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFalse;
    } catch (const NotWellFormed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFalse;
    } catch (const NotInImage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFalse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
