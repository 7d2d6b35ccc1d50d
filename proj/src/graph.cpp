#include "c2/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace c2 {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

Graph::Graph(int n_vertices, const std::vector<std::pair<int, int>>& edges)
    : n_vertices_(n_vertices) {
    if (n_vertices < 0) throw std::invalid_argument("Graph: negative vertex count");
    edges_.reserve(edges.size());
    int label = 1;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
        edges_.push_back(Edge{u, v, label++});
    }
}

Graph Graph::with_labeled_edges(int n_vertices, std::vector<Edge> edges) {
    Graph g;
    g.n_vertices_ = n_vertices;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n_vertices || e.v < 0 || e.v >= n_vertices)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (e.label < 1) throw std::invalid_argument("Graph: labels must be positive");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].label == edges[j].label)
                throw std::invalid_argument("Graph: duplicate edge label");
    // Edge lists are kept in ascending label order everywhere.
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.label < b.label; });
    g.edges_ = std::move(edges);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_vertices_) throw std::invalid_argument("Graph: unknown vertex");
}

const Edge& Graph::edge_by_label(int label) const {
    for (auto& e : edges_)
        if (e.label == label) return e;
    throw std::invalid_argument("Graph: unknown edge label " + std::to_string(label));
}

bool Graph::has_label(int label) const {
    for (auto& e : edges_)
        if (e.label == label) return true;
    return false;
}

int Graph::max_label() const {
    int m = 0;
    for (auto& e : edges_) m = std::max(m, e.label);
    return m;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d; // loops count twice
    }
    return d;
}

std::vector<int> Graph::incident_labels(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (auto& e : edges_)
        if (e.u == v || e.v == v) out.push_back(e.label);
    return out;
}

std::vector<int> Graph::neighbors_by_label(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (auto& e : edges_)
        if (e.u == v || e.v == v) out.push_back(e.u == v ? e.v : e.u);
    return out;
}

int Graph::components() const {
    if (n_vertices_ == 0) return 0;
    UnionFind uf(n_vertices_);
    int k = n_vertices_;
    for (auto& e : edges_)
        if (uf.unite(e.u, e.v)) --k;
    return k;
}

bool Graph::is_connected() const { return components() <= 1; }

int Graph::loop_number() const { return n_edges() - n_vertices_ + components(); }

GraphInvariants Graph::invariants() const {
    GraphInvariants inv;
    inv.n_edges = n_edges();
    inv.n_vertices = n_vertices_;
    inv.components = components();
    inv.loop_number = loop_number();
    inv.delta = 2 * inv.loop_number - inv.n_edges;
    for (int v = 0; v < n_vertices_; ++v) inv.degree_sequence.push_back(degree(v));
    std::sort(inv.degree_sequence.rbegin(), inv.degree_sequence.rend());
    return inv;
}

Graph Graph::delete_edge(int label) const {
    edge_by_label(label); // throws on unknown label
    Graph g;
    g.n_vertices_ = n_vertices_;
    for (auto& e : edges_)
        if (e.label != label) g.edges_.push_back(e);
    return g;
}

Graph Graph::contract_edge(int label) const {
    const Edge& c = edge_by_label(label);
    if (c.is_loop()) throw std::invalid_argument("contract_edge: cannot contract a self-loop");
    // Merge the higher endpoint into the lower one, then close the id gap.
    int keep = c.u, gone = c.v;
    Graph g;
    g.n_vertices_ = n_vertices_ - 1;
    for (auto& e : edges_) {
        if (e.label == label) continue;
        auto remap = [&](int w) {
            if (w == gone) w = keep;
            return w > gone ? w - 1 : w;
        };
        int u = remap(e.u), v = remap(e.v);
        if (u > v) std::swap(u, v);
        g.edges_.push_back(Edge{u, v, e.label});
    }
    return g;
}

Graph Graph::remove_vertex(int v) const {
    check_vertex(v);
    Graph g;
    g.n_vertices_ = n_vertices_ - 1;
    for (auto& e : edges_) {
        if (e.u == v || e.v == v) continue;
        int u = e.u > v ? e.u - 1 : e.u;
        int w = e.v > v ? e.v - 1 : e.v;
        g.edges_.push_back(Edge{u, w, e.label});
    }
    return g;
}

Graph Graph::complete() const {
    std::vector<int> three;
    for (int v = 0; v < n_vertices_; ++v) {
        int d = degree(v);
        if (d == 3)
            three.push_back(v);
        else if (d != 4)
            throw std::invalid_argument("complete: degree profile is not of phi^4 shape");
    }
    if (three.size() != 4)
        throw std::invalid_argument("complete: expected exactly four 3-valent vertices");
    Graph g = *this;
    int nv = n_vertices_;
    g.n_vertices_ = nv + 1;
    int label = max_label();
    for (int v : three) g.edges_.push_back(Edge{v, nv, ++label});
    return g;
}

Graph zigzag(int h, bool completed) {
    if (h < 3) throw std::invalid_argument("zigzag: loop number must be at least 3");
    int n = h + 2;
    std::vector<std::pair<int, int>> edges;
    for (int step : {1, 2})
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + step) % n);
    Graph g(n, edges);
    if (completed) return g;
    // Relabel so the remaining 2h edges are 1..2h again.
    Graph cut = g.remove_vertex(0);
    std::vector<std::pair<int, int>> kept;
    for (auto& e : cut.edges()) kept.emplace_back(e.u, e.v);
    return Graph(cut.n_vertices(), kept);
}

std::string Graph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = n_vertices_;
    auto arr = nlohmann::ordered_json::array();
    for (auto& e : edges_) arr.push_back({e.u, e.v});
    j["edges"] = arr;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected {\"vertices\", \"edges\"}");
    int n = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < n_vertices_; ++v) os << "  " << v << ";\n";
    for (auto& e : edges_)
        os << "  " << e.u << " -- " << e.v << " [label=" << e.label << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace c2
