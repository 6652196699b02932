#include "bhc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bhc {

using nlohmann::json;

std::vector<int> to_digits(Vertex v, int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = digit_of(v, i);
    return out;
}

Vertex from_digits(const std::vector<int>& digits) {
    Vertex v = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) v = with_digit(v, static_cast<int>(i), digits[i]);
    return v;
}

namespace {

json vertex_json(Vertex v, int n) { return to_digits(v, n); }

json edge_json(const Edge& e, int n) { return json::array({vertex_json(e.u, n), vertex_json(e.v, n)}); }

json edges_json(const std::vector<Edge>& edges, int n) {
    json a = json::array();
    for (const Edge& e : edges) a.push_back(edge_json(e, n));
    return a;
}

json vertices_json(const std::vector<Vertex>& vs, int n) {
    json a = json::array();
    for (Vertex v : vs) a.push_back(vertex_json(v, n));
    return a;
}

Vertex parse_vertex(const json& j, int n, long pos) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("entry " + std::to_string(pos) + ": vertex must have " + std::to_string(n) + " digits", pos);
    std::vector<int> d;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() > 3)
            throw ParseError("entry " + std::to_string(pos) + ": digits must be 0..3", pos);
        d.push_back(x.get<int>());
    }
    return from_digits(d);
}

Edge parse_edge(const json& j, int n, long pos) {
    if (!j.is_array() || j.size() != 2) throw ParseError("entry " + std::to_string(pos) + ": edge needs two vertices", pos);
    return Edge(parse_vertex(j[0], n, pos), parse_vertex(j[1], n, pos));
}

std::vector<Edge> parse_edges(const json& j, int n) {
    std::vector<Edge> out;
    if (!j.is_array()) throw ParseError("expected an array of edges", -1);
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_edge(j[i], n, static_cast<long>(i)));
    return out;
}

std::vector<Vertex> parse_vertices(const json& j, int n) {
    std::vector<Vertex> out;
    if (!j.is_array()) throw ParseError("expected an array of vertices", -1);
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_vertex(j[i], n, static_cast<long>(i)));
    return out;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), -1);
    }
}

}  // namespace

std::string faults_to_json(const Topology& t, const std::vector<Edge>& faults) {
    return edges_json(faults, t.dimension()).dump();
}

std::vector<Edge> parse_faults(const Topology& t, const std::string& text) {
    auto edges = parse_edges(parse_text(text), t.dimension());
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!t.is_edge(edges[i]))
            throw ParseError("entry " + std::to_string(i) + ": not an edge of BH_" + std::to_string(t.dimension()),
                             static_cast<long>(i));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::string cycle_to_json(const Topology& t, const HamCycle& c) {
    return json{{"n", t.dimension()}, {"cycle", vertices_json(c.order, t.dimension())}}.dump();
}

HamCycle parse_cycle(const Topology& t, const std::string& text) {
    const json j = parse_text(text);
    const json& list = j.is_object() ? j.at("cycle") : j;
    if (j.is_object() && j.value("n", t.dimension()) != t.dimension())
        throw ParseError("cycle file is for n = " + std::to_string(j.value("n", 0)), -1);
    return HamCycle{parse_vertices(list, t.dimension())};
}

std::string trace_to_json(const Topology&, const CaseTrace& trace) {
    json levels = json::array();
    for (const auto& l : trace.levels) {
        const json w{{"cross_edges", edges_json(l.witnesses.cross_edges, l.n)},
                     {"r_edges", edges_json(l.witnesses.r_edges, l.n)},
                     {"non_r_edges", edges_json(l.witnesses.non_r_edges, l.n)},
                     {"pivots", vertices_json(l.witnesses.pivots, l.n)},
                     {"isolated", vertices_json(l.witnesses.isolated, l.n)},
                     {"f4_pair", vertices_json(l.witnesses.f4_pair, l.n)}};
        levels.push_back({{"level", l.depth},
                          {"n", l.n},
                          {"split_dim", l.split_dim},
                          {"role0_part", l.role0_part},
                          {"ring_dir", l.ring_dir},
                          {"cross_faults", l.cross_faults},
                          {"subcube_faults", l.subcube_faults},
                          {"dictated", l.dictated},
                          {"case", l.case_label},
                          {"sibling", l.sibling},
                          {"faults", edges_json(l.faults, l.n)},
                          {"witnesses", w},
                          {"events", l.events}});
    }
    return json{{"levels", levels}, {"fallbacks", trace.fallbacks}, {"impasses", trace.impasses}}.dump();
}

CaseTrace parse_trace(const std::string& text) {
    const json j = parse_text(text);
    CaseTrace out;
    try {
        for (const auto& l : j.at("levels")) {
            TraceLevel r;
            r.depth = l.at("level").get<int>();
            r.n = l.at("n").get<int>();
            if (r.n < 1 || r.n > 8) throw ParseError("level n out of range", static_cast<long>(out.levels.size()));
            r.split_dim = l.at("split_dim").get<int>();
            r.role0_part = l.at("role0_part").get<int>();
            r.ring_dir = l.at("ring_dir").get<int>();
            r.cross_faults = l.at("cross_faults").get<int>();
            r.subcube_faults = l.at("subcube_faults").get<std::array<int, 4>>();
            r.dictated = l.at("dictated").get<std::string>();
            r.case_label = l.at("case").get<std::string>();
            r.sibling = l.at("sibling").get<bool>();
            r.faults = parse_edges(l.at("faults"), r.n);
            const auto& w = l.at("witnesses");
            r.witnesses.cross_edges = parse_edges(w.at("cross_edges"), r.n);
            r.witnesses.r_edges = parse_edges(w.at("r_edges"), r.n);
            r.witnesses.non_r_edges = parse_edges(w.at("non_r_edges"), r.n);
            r.witnesses.pivots = parse_vertices(w.at("pivots"), r.n);
            r.witnesses.isolated = parse_vertices(w.at("isolated"), r.n);
            r.witnesses.f4_pair = parse_vertices(w.at("f4_pair"), r.n);
            r.events = l.at("events").get<std::vector<std::string>>();
            out.levels.push_back(std::move(r));
        }
        out.fallbacks = j.at("fallbacks").get<std::vector<std::string>>();
        out.impasses = j.at("impasses").get<std::size_t>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed trace: ") + e.what(), static_cast<long>(out.levels.size()));
    }
    return out;
}

std::string topology_to_json(const Topology& t) {
    const int n = t.dimension();
    json vs = json::array();
    for (Vertex v = 0; v < t.vertex_count(); ++v) vs.push_back(vertex_json(v, n));
    json es = json::array();
    for (const Edge& e : t.edges()) {
        json x = edge_json(e, n);
        es.push_back({{"edge", x}, {"dimension", t.edge_dimension(e)}});
    }
    return json{{"n", n}, {"vertices", vs}, {"edges", es}}.dump();
}

namespace {

std::string dot_name(Vertex v, int n) {
    std::string s = "\"(";
    for (int i = 0; i < n; ++i) {
        if (i) s += ',';
        s += std::to_string(digit_of(v, i));
    }
    return s + ")\"";
}

}  // namespace

std::string topology_to_dot(const Topology& t, const std::vector<Edge>& faults, const HamCycle* cycle) {
    static const char* colors[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "gray"};
    const int n = t.dimension();
    std::vector<Edge> sorted_faults = faults;
    std::sort(sorted_faults.begin(), sorted_faults.end());
    std::vector<Edge> on_cycle;
    if (cycle && cycle->order.size() > 1)
        for (std::size_t i = 0; i < cycle->order.size(); ++i)
            on_cycle.emplace_back(cycle->order[i], cycle->order[(i + 1) % cycle->order.size()]);
    std::sort(on_cycle.begin(), on_cycle.end());
    std::ostringstream out;
    out << "graph BH_" << n << " {\n";
    for (Vertex v = 0; v < t.vertex_count(); ++v) out << "  " << dot_name(v, n) << ";\n";
    for (const Edge& e : t.edges()) {
        const int dim = t.edge_dimension(e);
        out << "  " << dot_name(e.u, n) << " -- " << dot_name(e.v, n) << " [color=" << colors[dim % 8]
            << ", label=" << dim;
        if (std::binary_search(sorted_faults.begin(), sorted_faults.end(), e)) out << ", style=dashed";
        if (std::binary_search(on_cycle.begin(), on_cycle.end(), e)) out << ", penwidth=3";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace bhc
