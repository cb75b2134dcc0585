#pragma once

#include "slopebound/graph.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace slopebound {

// Each vertex carries one arc end and two boundary-edge ends, in cyclic
// order (arc, in, out). A boundary edge runs from tail to head along the
// oriented boundary circle; an arc has ends (a, b) and no orientation.
struct RibbonVertexSpec {
    int id;
    int arc;
    int in;
    int out;
};

struct RibbonEdgeSpec {
    int id;
    bool interior;
    int a;  // arc: first end; boundary edge: tail
    int b;  // arc: second end; boundary edge: head
};

struct RegionSpec {
    int genus = 0;
    int frontier = 1;
    int free_boundary = 0;
    // Optional: one (arc id, starting vertex id) per frontier circuit.
    std::vector<std::pair<int, int>> circuits;
    int chi() const { return 2 - 2 * genus - frontier - free_boundary; }
    bool disk() const { return genus == 0 && frontier == 1 && free_boundary == 0; }
};

struct ArcModelSpec {
    std::vector<RibbonVertexSpec> vertices;
    std::vector<RibbonEdgeSpec> edges;
    std::vector<RegionSpec> regions;
};

// An arc traversed starting at ends[dir].
struct Side {
    int arc;
    int dir;
    auto operator<=>(const Side&) const = default;
};

// runs[k] lists the boundary edges (traversed backwards) between sides[k] and sides[k+1].
struct Circuit {
    std::vector<Side> sides;
    std::vector<std::vector<int>> runs;
    int region = -1;
};

class ArcModel {
public:
    static ArcModel build(const ArcModelSpec& spec);

    const ArcModelSpec& spec() const { return spec_; }
    const Multigraph& graph() const { return *graph_; }

    const std::vector<int>& arcs() const { return arcs_; }
    const std::vector<int>& bedges() const { return bedges_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    bool is_arc(int edge_id) const;
    int arc_index(int arc_id) const;  // position in arcs(), -1 if absent

    int arc_at(int vertex_id) const;
    int in_at(int vertex_id) const;
    int out_at(int vertex_id) const;
    int end(int arc_id, int dir) const;   // vertex id
    int tail(int bedge_id) const;
    int head(int bedge_id) const;

    const std::vector<Circuit>& circuits() const { return circuits_; }
    const std::vector<RegionSpec>& regions() const { return regions_; }
    int circuit_of(Side s) const;
    int region_of(Side s) const { return circuits_[circuit_of(s)].region; }
    int circuit_of_bedge(int bedge_id) const;
    // Boundary circles meeting the arcs, as forward bedge sequences.
    const std::vector<std::vector<int>>& boundary_circles() const { return circles_; }

    int chi() const { return chi_; }
    int num_boundary() const { return num_boundary_; }
    int genus() const { return genus_; }
    bool is_annulus() const { return chi_ == 0 && num_boundary_ == 2; }
    bool all_planar() const;

private:
    ArcModelSpec spec_;
    std::shared_ptr<const Multigraph> graph_;
    std::vector<int> arcs_, bedges_;
    std::map<int, int> vidx_, eidx_;  // id -> spec index
    std::vector<Circuit> circuits_;
    std::vector<int> side_circuit_;  // 2*arc_index + dir
    std::map<int, int> bedge_circuit_;
    std::vector<std::vector<int>> circles_;
    std::vector<RegionSpec> regions_;
    int chi_ = 0, num_boundary_ = 0, genus_ = 0;
};

// Dual graph: vertex k = region k, edge id = arc id.
Multigraph dual_graph(const ArcModel& m);

// Hypothesis not annulus: throws HypothesisViolated otherwise.
void require_not_annulus(const ArcModel& m);

// Complementary regions of a sub-collection of arcs.
struct CutRegion {
    int chi = 0;
    int genus = 0;
    int free_boundary = 0;
    std::vector<Circuit> circuits;
    std::vector<std::vector<int>> vertex_free_circles;  // circles all of whose arcs were removed
    std::vector<int> model_regions;
    bool disk() const { return chi == 1; }
};

struct CutResult {
    std::vector<CutRegion> regions;
    std::vector<int> class_of_model_region;
};

CutResult cut_regions(const ArcModel& m, const std::vector<int>& kept_arc_ids);

// Parallel families inside one model: disk regions with two sides on distinct arcs.
std::vector<std::vector<int>> parallel_classes(const ArcModel& m);

struct BedgeChain {
    std::vector<int> bedges;          // ids in the finer model, forward order
    std::vector<int> inner_vertices;  // ids in the finer model
};

struct Reduction {
    ArcModel reduced;
    std::map<int, int> width;                     // reduced arc -> class size
    std::map<int, std::vector<int>> arc_class;    // reduced arc -> arcs of the input
    std::map<int, BedgeChain> chain;              // reduced bedge -> chain in the input
};

Reduction reduce_system(const ArcModel& fine);

struct Widening {
    ArcModel fine;
    std::map<int, int> width;
    std::map<int, BedgeChain> chain;  // coarse bedge -> chain in fine
};

// Replace each arc e by width(e) parallel copies; e keeps its id.
Widening widen_model(const ArcModel& coarse, const std::map<int, int>& widths);

// Subgraph of the finer model with the same underlying set.
Subgraph associated_subgraph(const ArcModel& fine, const std::map<int, BedgeChain>& chain, const Subgraph& coarse);
Subgraph widen_subgraph(const Widening& w, const Subgraph& coarse);

// Cyclically reduced word; signed letters.
std::vector<int> cyclic_reduce(std::vector<int> word);

bool pi1_oracle(const ArcModel& m, const Subgraph& g);

struct Pi1Result {
    Subgraph sub;
    int nu = 0;
    int mu = 0;
    int kept_arcs = 0;
    std::vector<int> dropped;  // arc ids in drop order
};

Pi1Result pi1_subgraph(const ArcModel& m, const Subgraph& g0);

// Interior-edge and vertex counts of a subgraph of the model graph.
int interior_edge_count(const ArcModel& m, const Subgraph& g);

} // namespace slopebound
