#pragma once

#include <string>
#include <vector>

namespace c2 {

// Edge endpoints are stored low -> high; that orientation is fixed at
// construction and feeds the incidence-matrix sign convention.
struct Edge {
    int u = 0;
    int v = 0;
    int label = 0; // stable, 1-based
    bool is_loop() const { return u == v; }
};

struct GraphInvariants {
    int n_edges = 0;
    int n_vertices = 0;
    int components = 0;
    int loop_number = 0; // N - |V| + components
    int delta = 0;       // 2 h - N
    std::vector<int> degree_sequence; // descending
};

// Labeled multigraph. Values are immutable after construction; edit
// operations return new graphs. Surviving edge labels are preserved.
class Graph {
public:
    Graph() = default;
    // Edges labeled 1..N in list order.
    Graph(int n_vertices, const std::vector<std::pair<int, int>>& edges);
    // Keeps the given labels; they must be positive and distinct.
    static Graph with_labeled_edges(int n_vertices, std::vector<Edge> edges);

    int n_vertices() const { return n_vertices_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge_by_label(int label) const;
    bool has_label(int label) const;
    int max_label() const;

    int degree(int v) const;
    std::vector<int> incident_labels(int v) const;
    // Far endpoints of the incident edges, aligned with incident_labels();
    // loops contribute v itself.
    std::vector<int> neighbors_by_label(int v) const;

    int components() const;
    bool is_connected() const;
    int loop_number() const;
    GraphInvariants invariants() const;

    Graph delete_edge(int label) const;
    // Non-loop edges only; endpoints merged, parallel edges kept.
    Graph contract_edge(int label) const;
    Graph remove_vertex(int v) const;
    // Requires exactly four 3-valent vertices, all others 4-valent. Adds one
    // vertex joined to each of the four; labels continue from max_label().
    Graph complete() const;

    std::string to_json() const;
    static Graph from_json(const std::string& text);
    std::string to_dot() const;

private:
    void check_vertex(int v) const;
    int n_vertices_ = 0;
    std::vector<Edge> edges_;
};

// Completed zigzag: the circulant graph C_{h+2}(1,2). With completed=false
// vertex 0 is removed, giving the 2h-edge, (h+1)-vertex zigzag itself.
Graph zigzag(int h, bool completed);

} // namespace c2
