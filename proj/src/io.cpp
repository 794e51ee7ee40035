#include "flowgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace flowgraph {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) { throw ParseError(msg, line); }

void check_name(const std::string& name, int line, const char* what) {
    if (name.empty() || name.find(':') != std::string::npos)
        fail(line, std::string(what) + " name '" + name + "' is invalid");
}

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        fail(line, std::string("expected an integer ") + what + ", got '" + tok + "'");
    }
}

FourColourGraph parse_fcg_block(const std::string& name, const std::vector<Line>& body,
                                int header_line) {
    FourColourGraph g;
    g.name = name;
    std::map<std::string, int> vertex_of;
    std::map<std::string, int> edge_of;

    for (const Line& line : body) {
        if (line.tokens[0] != "v") continue;
        if (line.tokens.size() != 2) fail(line.number, "expected: v <vid>");
        check_name(line.tokens[1], line.number, "vertex");
        if (!vertex_of.emplace(line.tokens[1], g.vertex_count()).second)
            fail(line.number, "duplicate vertex name '" + line.tokens[1] + "'");
        g.vertex_names.push_back(line.tokens[1]);
    }

    for (const Line& line : body) {
        if (line.tokens[0] == "v") continue;
        if (line.tokens[0] != "e")
            fail(line.number, "unexpected directive '" + line.tokens[0] + "' in fcg block");
        if (line.tokens.size() < 3) fail(line.number, "expected: e <eid> <colour> ...");
        const std::string& ename = line.tokens[1];
        check_name(ename, line.number, "edge");
        if (!edge_of.emplace(ename, g.edge_count()).second)
            fail(line.number, "duplicate edge name '" + ename + "'");
        if (line.tokens[2].size() != 1)
            fail(line.number, "unknown colour '" + line.tokens[2] + "'");
        auto colour = colour_from_letter(line.tokens[2][0]);
        if (!colour) fail(line.number, "unknown colour '" + line.tokens[2] + "'");

        auto vertex = [&](const std::string& vname) {
            auto it = vertex_of.find(vname);
            if (it == vertex_of.end())
                fail(line.number, "unknown vertex '" + vname + "' in edge " + ename);
            return it->second;
        };

        FcEdge e;
        e.name = ename;
        e.colour = *colour;
        if (*colour == Colour::C) {
            if (line.tokens.size() != 7)
                fail(line.number, "expected: e <eid> c <v1> <pos1> <v2> <pos2>");
            e.a = vertex(line.tokens[3]);
            e.pos_a = parse_int(line.tokens[4], line.number, "position");
            e.b = vertex(line.tokens[5]);
            e.pos_b = parse_int(line.tokens[6], line.number, "position");
        } else {
            if (line.tokens.size() != 5)
                fail(line.number, "expected: e <eid> s|t|u <v1> <v2>");
            e.a = vertex(line.tokens[3]);
            e.b = vertex(line.tokens[4]);
        }
        g.edges.push_back(std::move(e));
    }

    if (g.vertex_count() == 0 && g.edge_count() == 0)
        fail(header_line, "fcg block '" + name + "' is empty");
    return g;
}

EquippedGraph parse_eqg_block(const std::string& name, const std::vector<Line>& body,
                              const std::vector<FourColourGraph>& known_fcgs) {
    EquippedGraph u;
    u.name = name;
    std::map<std::string, int> vertex_of;
    std::map<std::string, int> edge_of;

    for (const Line& line : body) {
        if (line.tokens[0] != "vx") continue;
        if (line.tokens.size() != 3) fail(line.number, "expected: vx <vid> A|E+|E-|L|M:<fcg>");
        check_name(line.tokens[1], line.number, "vertex");
        if (!vertex_of.emplace(line.tokens[1], u.vertex_count()).second)
            fail(line.number, "duplicate vertex name '" + line.tokens[1] + "'");

        EqVertex v;
        v.name = line.tokens[1];
        const std::string& kind = line.tokens[2];
        if (kind == "A") {
            v.kind = VertexKind::A;
        } else if (kind == "L") {
            v.kind = VertexKind::L;
        } else if (kind == "E+") {
            v.kind = VertexKind::E;
            v.weight = Weight::plus;
        } else if (kind == "E-") {
            v.kind = VertexKind::E;
            v.weight = Weight::minus;
        } else if (kind.rfind("M:", 0) == 0) {
            v.kind = VertexKind::M;
            v.graph_name = kind.substr(2);
            const FourColourGraph* found = nullptr;
            for (const FourColourGraph& g : known_fcgs)
                if (g.name == v.graph_name) found = &g;
            if (!found)
                fail(line.number, "unknown fcg reference '" + v.graph_name + "'");
            v.graph = *found;
        } else {
            fail(line.number, "unknown vertex kind '" + kind + "'");
        }
        u.vertices.push_back(std::move(v));
    }

    for (const Line& line : body) {
        if (line.tokens[0] == "vx") continue;
        if (line.tokens[0] != "ed")
            fail(line.number, "unexpected directive '" + line.tokens[0] + "' in eqg block");
        if (line.tokens.size() < 4)
            fail(line.number, "expected: ed <eid> <tail> <head> [cycle ...]");
        const std::string& ename = line.tokens[1];
        check_name(ename, line.number, "edge");
        if (!edge_of.emplace(ename, u.edge_count()).second)
            fail(line.number, "duplicate edge name '" + ename + "'");

        auto vertex = [&](const std::string& vname) {
            auto it = vertex_of.find(vname);
            if (it == vertex_of.end())
                fail(line.number, "unknown vertex '" + vname + "' in edge " + ename);
            return it->second;
        };

        EqEdge e;
        e.name = ename;
        e.tail = vertex(line.tokens[2]);
        e.head = vertex(line.tokens[3]);

        if (line.tokens.size() > 4) {
            if (line.tokens[4] != "cycle")
                fail(line.number, "unexpected token '" + line.tokens[4] + "' after edge ends");
            const bool tail_m = u.vertices[e.tail].kind == VertexKind::M;
            const bool head_m = u.vertices[e.head].kind == VertexKind::M;
            if (tail_m == head_m)
                fail(line.number,
                     "cycle tag on edge " + ename + " needs exactly one M endpoint");
            const FourColourGraph& mg =
                tail_m ? *u.vertices[e.tail].graph : *u.vertices[e.head].graph;
            const std::size_t rest = line.tokens.size() - 5;
            if (rest < 4 || rest % 2 != 0)
                fail(line.number, "cycle needs dart pairs: <v0> <e0> <v1> <e1> ...");
            std::vector<Dart> darts;
            for (std::size_t i = 5; i < line.tokens.size(); i += 2) {
                auto v = mg.find_vertex(line.tokens[i]);
                if (!v)
                    fail(line.number, "unknown vertex '" + line.tokens[i] +
                                          "' in cycle of edge " + ename);
                auto ed = mg.find_edge(line.tokens[i + 1]);
                if (!ed)
                    fail(line.number, "unknown edge '" + line.tokens[i + 1] +
                                          "' in cycle of edge " + ename);
                darts.push_back({*v, *ed});
            }
            e.tag = OrientedCycle::make(tail_m ? CycleKind::tu : CycleKind::st,
                                        std::move(darts));
        }
        u.edges.push_back(std::move(e));
    }

    return u;
}

} // namespace

ParsedFile parse_string(const std::string& text) {
    ParsedFile out;
    const std::vector<Line> lines = tokenize(text);

    std::size_t i = 0;
    std::map<std::string, int> block_names;
    while (i < lines.size()) {
        const Line& header = lines[i];
        if (header.tokens[0] != "fcg" && header.tokens[0] != "eqg")
            fail(header.number, "expected 'fcg <name>' or 'eqg <name>', got '" +
                                    header.tokens[0] + "'");
        if (header.tokens.size() != 2)
            fail(header.number, "expected: " + header.tokens[0] + " <name>");
        const std::string& name = header.tokens[1];
        check_name(name, header.number, "block");
        if (block_names.count(name))
            fail(header.number, "duplicate block name '" + name + "'");
        block_names[name] = 1;

        std::vector<Line> body;
        std::size_t j = i + 1;
        bool closed = false;
        for (; j < lines.size(); ++j) {
            if (lines[j].tokens[0] == "end") {
                if (lines[j].tokens.size() != 1) fail(lines[j].number, "expected: end");
                closed = true;
                break;
            }
            body.push_back(lines[j]);
        }
        if (!closed) fail(header.number, "block '" + name + "' has no matching 'end'");

        if (header.tokens[0] == "fcg") {
            out.four_colour.push_back(parse_fcg_block(name, body, header.number));
            out.order.emplace_back(false, static_cast<int>(out.four_colour.size()) - 1);
        } else {
            out.equipped.push_back(parse_eqg_block(name, body, out.four_colour));
            out.order.emplace_back(true, static_cast<int>(out.equipped.size()) - 1);
        }
        i = j + 1;
    }
    return out;
}

ParsedFile parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

std::string serialize(const FourColourGraph& g) {
    std::ostringstream out;
    out << "fcg " << (g.name.empty() ? "g" : g.name) << "\n";
    for (const std::string& v : g.vertex_names) out << "v " << v << "\n";
    for (const FcEdge& e : g.edges) {
        out << "e " << e.name << " " << colour_letter(e.colour) << " ";
        if (e.colour == Colour::C)
            out << g.vertex_names[e.a] << " " << e.pos_a << " " << g.vertex_names[e.b] << " "
                << e.pos_b << "\n";
        else
            out << g.vertex_names[e.a] << " " << g.vertex_names[e.b] << "\n";
    }
    out << "end\n";
    return out.str();
}

std::string serialize(const EquippedGraph& u) {
    std::ostringstream out;

    // Referenced four-colour graphs first, one block per distinct name.
    std::vector<std::pair<std::string, const FourColourGraph*>> blocks;
    std::vector<std::string> names_of(u.vertices.size());
    for (std::size_t v = 0; v < u.vertices.size(); ++v) {
        const EqVertex& vx = u.vertices[v];
        if (vx.kind != VertexKind::M || !vx.graph) continue;
        std::string gname = vx.graph_name.empty()
                                ? (u.name.empty() ? "g" : u.name) + "." + vx.name
                                : vx.graph_name;
        bool emit = true;
        for (auto& [known, graph] : blocks) {
            if (known != gname) continue;
            if (*graph == *vx.graph) {
                emit = false;
            } else {
                gname += ".alt"; // same name, different graph: keep both
            }
        }
        names_of[v] = gname;
        if (emit) blocks.emplace_back(gname, &*vx.graph);
    }
    for (auto& [gname, graph] : blocks) {
        FourColourGraph copy = *graph;
        copy.name = gname;
        out << serialize(copy);
    }

    out << "eqg " << (u.name.empty() ? "g" : u.name) << "\n";
    for (std::size_t v = 0; v < u.vertices.size(); ++v) {
        const EqVertex& vx = u.vertices[v];
        out << "vx " << vx.name << " ";
        switch (vx.kind) {
        case VertexKind::A: out << "A"; break;
        case VertexKind::L: out << "L"; break;
        case VertexKind::E: out << (vx.weight == Weight::plus ? "E+" : "E-"); break;
        case VertexKind::M: out << "M:" << names_of[v]; break;
        }
        out << "\n";
    }
    for (const EqEdge& e : u.edges) {
        out << "ed " << e.name << " " << u.vertices[e.tail].name << " "
            << u.vertices[e.head].name;
        if (e.tag) {
            const int m = u.vertices[e.tail].kind == VertexKind::M ? e.tail : e.head;
            const FourColourGraph& mg = *u.vertices[m].graph;
            out << " cycle";
            for (const Dart& d : e.tag->darts)
                out << " " << mg.vertex_names[d.vertex] << " " << mg.edges[d.edge].name;
        }
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

std::string serialize(const SimpleGraph& sg) {
    std::vector<std::string> lines;
    std::vector<char> used(sg.vertex_names.size(), 0);
    for (auto [a, b] : sg.edges) {
        used[a] = used[b] = 1;
        const std::string &na = sg.vertex_names[a], &nb = sg.vertex_names[b];
        lines.push_back(na <= nb ? na + " " + nb : nb + " " + na);
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    for (std::size_t v = 0; v < sg.vertex_names.size(); ++v)
        if (!used[v]) out << sg.vertex_names[v] << "\n";
    for (const std::string& line : lines) out << line << "\n";
    return out.str();
}

SimpleGraph parse_simple_graph(const std::string& text) {
    SimpleGraph sg;
    std::map<std::string, int> vertex_of;
    auto vertex = [&](const std::string& name) {
        auto it = vertex_of.find(name);
        if (it != vertex_of.end()) return it->second;
        int id = sg.add_vertex(name);
        vertex_of.emplace(name, id);
        return id;
    };
    for (const Line& line : tokenize(text)) {
        if (line.tokens.size() == 1) {
            vertex(line.tokens[0]);
        } else if (line.tokens.size() == 2) {
            const int a = vertex(line.tokens[0]);
            const int b = vertex(line.tokens[1]);
            if (a == b) fail(line.number, "loop edges are not allowed in simple graphs");
            sg.add_edge(a, b);
        } else {
            fail(line.number, "expected '<u> <v>' edge lines");
        }
    }
    sg.normalize();
    return sg;
}

} // namespace flowgraph
