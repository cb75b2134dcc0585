#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace slopebound {

struct Edge {
    int id;
    int a;
    int b;
    bool loop() const { return a == b; }
    int other(int v) const { return v == a ? b : a; }
};

struct GraphSpec {
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

// Finite multigraph. Loops and parallel edges allowed; immutable after build.
class Multigraph {
public:
    Multigraph() = default;

    static Multigraph build(const GraphSpec& spec);

    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Dense indices follow id order.
    const std::vector<int>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_index(int id) const;   // -1 if absent
    int edge_index(int id) const;     // -1 if absent
    bool has_vertex(int id) const { return vertex_index(id) >= 0; }
    const Edge& edge(int id) const;

    // Edge indices incident to vertex index vi; a loop is listed once.
    const std::vector<int>& incident(int vi) const { return incident_[vi]; }
    int valence(int vi) const { return valence_[vi]; }
    int endpoint_index(int ei, int side) const { return side == 0 ? ea_[ei] : eb_[ei]; }

    int euler_char() const { return num_vertices() - num_edges(); }

    GraphSpec spec() const { return GraphSpec{vertex_ids_, edges_}; }

private:
    std::vector<int> vertex_ids_;
    std::vector<Edge> edges_;
    std::vector<int> ea_, eb_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> valence_;
};

// Vertex and edge index masks over a fixed parent graph.
class Subgraph {
public:
    Subgraph() = default;
    explicit Subgraph(const Multigraph& g);

    static Subgraph full(const Multigraph& g);
    static Subgraph from_ids(const Multigraph& g, const std::vector<int>& vertex_ids,
                             const std::vector<int>& edge_ids);
    // Edges plus all their endpoints.
    static Subgraph from_edge_ids(const Multigraph& g, const std::vector<int>& edge_ids);

    const Multigraph& parent() const { return *g_; }

    bool has_vertex_index(int vi) const { return vmask_[vi] != 0; }
    bool has_edge_index(int ei) const { return emask_[ei] != 0; }
    bool has_vertex(int id) const;
    bool has_edge(int id) const;

    void add_vertex_index(int vi) { vmask_[vi] = 1; }
    void add_edge_index(int ei);  // adds endpoints too
    void remove_vertex_index(int vi) { vmask_[vi] = 0; }
    void remove_edge_index(int ei) { emask_[ei] = 0; }

    int num_vertices() const;
    int num_edges() const;
    int euler_char() const { return num_vertices() - num_edges(); }
    int valence_index(int vi) const;

    std::vector<int> vertex_ids() const;
    std::vector<int> edge_ids() const;
    std::vector<int> vertex_indices() const;
    std::vector<int> edge_indices() const;

    bool is_valid() const;  // every retained edge has retained endpoints
    bool subset_of(const Subgraph& o) const;
    bool operator==(const Subgraph& o) const { return vmask_ == o.vmask_ && emask_ == o.emask_; }

    Subgraph unite(const Subgraph& o) const;

    // Standalone multigraph with the same ids.
    Multigraph to_graph() const;

    const std::vector<char>& vmask() const { return vmask_; }
    const std::vector<char>& emask() const { return emask_; }

private:
    const Multigraph* g_ = nullptr;
    std::vector<char> vmask_;
    std::vector<char> emask_;
};

int euler_char(const Multigraph& g);
int euler_char(const Subgraph& s);

// N_r(seed): seed plus tracks of edge paths of length <= r starting in seed.
Subgraph neighborhood(const Multigraph& g, const Subgraph& seed, int r);
Subgraph ball(const Multigraph& g, int vertex_id, int r);

struct ComponentInfo {
    std::vector<int> vertex_ids;
    std::vector<int> edge_ids;
    int betti;  // E - V + 1
};

struct ComponentsAndBetti {
    int count = 0;
    std::vector<ComponentInfo> components;  // ordered by least vertex id
    int total_betti() const;
};

ComponentsAndBetti components_and_betti(const Subgraph& s);
ComponentsAndBetti components_and_betti(const Multigraph& g);

// Per vertex index: component number, -1 for vertices outside the subgraph.
std::vector<int> component_labels(const Subgraph& s, int* count = nullptr);

bool is_connected(const Subgraph& s);

} // namespace slopebound
