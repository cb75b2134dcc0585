#pragma once

#include "slopebound/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slopebound {

// Subgraph references its parent; keep the parent alive.
struct BigirthWitness {
    Subgraph subgraph;
    int length = 0;
    int chi = 0;
    std::string route;  // which construction branch produced it
};

enum class BigirthStrategy { Auto, CyclePairs, Exhaustive };

struct BigirthResult {
    std::optional<int> value;  // empty = infinity
    std::optional<BigirthWitness> witness;
};

BigirthResult bigirth_exact(const Multigraph& g, BigirthStrategy strategy = BigirthStrategy::Auto);

// Brute force over every edge subset; refuses more than 24 edges.
BigirthResult bigirth_exhaustive(const Multigraph& g);

bool is_valid_witness(const Multigraph& g, const BigirthWitness& w);

struct TieSet {
    std::vector<int> edges;              // edge ids
    std::vector<int> interior_vertices;  // vertex ids
    std::vector<int> closure_vertices;   // W: vertices of the closure lying in the inner subgraph
    int E_t = 0;
    int V_t = 0;
    int w = 0;
    bool single_vertex_case = false;
};

struct TieCounts {
    int n0 = 0;
    int n1 = 0;
};

TieCounts tie_counts(const Multigraph& g, const Subgraph& inner);

TieSet extract_tie(const Multigraph& g, const Subgraph& inner);

// Structural check of the three tie conclusions against (g, inner).
bool check_tie(const Multigraph& g, const Subgraph& inner, const TieSet& t, std::string* why = nullptr);

// Number of valence-1 vertices of B_r(v).
int ball_leaves(const Multigraph& g, int vertex_id, int r);

BigirthWitness trivalent_witness(const Multigraph& g);

struct PruneResult {
    Subgraph sub;
    int alpha_floor = 0;
    std::vector<std::string> steps;
};

PruneResult prune_balanced(const Multigraph& g);

// Conclusions (1)-(4) for a pruned subgraph with threshold floor(alpha).
bool check_balanced(const Subgraph& s, int alpha_floor, std::string* why = nullptr);

// Maximal valence-2 chains of s between vertices of valence >= 3.
struct Chain {
    int a = -1, b = -1;                 // end vertex ids (valence >= 3)
    std::vector<int> edges;             // edge ids in traversal order
    std::vector<int> interior;          // vertex ids in traversal order
};
std::vector<Chain> chains_of(const Subgraph& s);

BigirthWitness general_witness(const Multigraph& g);

// Exact forms of the two logarithmic bounds.
bool trivalent_bound_holds(int length, int num_vertices);                 // 2^len <= V^4
bool general_bound_holds(int length, int chi, int length_graph);          // 2^len <= (2|chi|)^(4 floor(alpha))
int general_bound_floor_alpha(int chi, int length_graph);

} // namespace slopebound
