#pragma once

#include "slopebound/arcsys.hpp"
#include "slopebound/bounds.hpp"
#include "slopebound/graph.hpp"
#include "slopebound/norms.hpp"
#include "slopebound/rational.hpp"
#include "slopebound/rng.hpp"

#include <map>
#include <set>
#include <vector>

namespace slopebound {

// Connected multigraph on V vertices with every valence >= 3.
// Configuration model on valence 3 half-edges plus `extra` random edges.
Multigraph random_min_valence3(Rng& rng, int V, int extra = 0);

// Graph with no tree component and chi < 0: subdivided min-valence-3 cores,
// optional cycle components and hanging trees. Caps: cores <= 8 vertices.
Multigraph random_general_graph(Rng& rng, int max_components = 2);

struct ArcModelParams {
    int theta = 10;          // number of arcs
    int max_circles = 3;
    bool planar = false;     // force every region to have genus 0
    int max_regions = 4;
};

// Reduced (no parallel arcs), essential, connected, non-annulus model.
ArcModel random_arc_model(Rng& rng, const ArcModelParams& p);

std::map<int, int> random_widths(Rng& rng, const ArcModel& m, int max_width = 5);

struct LabeledInstance {
    std::map<int, int> labels;      // arc id -> label
    std::set<int> excluded;         // E*
};

// Surjective labels onto 0..k-1 and an E* with at most floor(theta_i / q) arcs per label.
LabeledInstance random_labels(Rng& rng, const std::vector<int>& arcs, const Rat& q, int max_labels = 4,
                              bool with_excluded = true);

// Balanced parallelogram with rational vertices and no interior nonzero lattice point.
ParallelogramNorm random_lattice_free_parallelogram(Rng& rng);

struct ChainTuple {
    HomologyClass a1, a2, mu;
    Rat t;
};

// Tuple satisfying every hypothesis of knot_chain_verify.
ChainTuple random_chain_tuple(Rng& rng);

// Data with |chi_i| <= m1 m2 Delta / 2 and g2 >= 2; about half with |chi2| >= 333.
KnotData random_knot_data(Rng& rng);

} // namespace slopebound
