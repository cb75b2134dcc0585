#pragma once

#include "slopebound/arcsys.hpp"
#include "slopebound/bigirth.hpp"
#include "slopebound/bounds.hpp"
#include "slopebound/rational.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace slopebound {

using Labeling = std::map<int, int>;      // arc id -> label
using WeightSystem = std::map<int, Rat>;  // label -> positive weight

struct LabelStats {
    std::map<int, long> theta;  // label -> number of arcs
    long Theta = 0;
    long theta_inf = 0;
};

// Requires a surjective labeling defined on exactly the arcs of the model.
LabelStats label_stats(const ArcModel& m, const Labeling& labels);

// lambda(G): sum of weights of the labels of the vertices of G.
Rat weight_of(const ArcModel& m, const Labeling& labels, const WeightSystem& w, const Subgraph& g);
// theta(G): least label multiplicity over interior edges of G; -1 without interior edges.
long theta_of(const ArcModel& m, const Labeling& labels, const LabelStats& st, const Subgraph& g);

// lambda(i) = max width over the arcs with label i.
WeightSystem standard_weights(const Labeling& labels, const std::map<int, int>& widths);

struct StandardWeightsCheck {
    long length0 = 0;
    Rat bound;  // (3/2) lambda(G)
    bool holds = false;
};
StandardWeightsCheck standard_weights_check(const Widening& w, const ArcModel& coarse, const Labeling& labels,
                                            const Subgraph& g);

struct KeyIneqChecks {
    bool injective = false;      // (1) pi1_oracle
    bool avoids_excluded = false; // (2)
    bool negative_chi = false;   // (3)
    bool ratio_bound = false;    // (4), exact
    bool no_tree_component = false; // (5)
    int chi = 0;
    Rat lambda;
    long theta = 0;
    Rat lhs;          // lambda / (theta |chi|)
    std::string rhs;  // phi_tau(theta_inf) * omega, decimal
    bool all() const { return injective && avoids_excluded && negative_chi && ratio_bound && no_tree_component; }
    std::string failed() const;
};

KeyIneqChecks verify_key_inequality(const ArcModel& m, const Labeling& labels, const WeightSystem& w,
                                    const std::set<int>& excluded, const Rat& q, const Subgraph& g1);

struct KeyIneqResult {
    Subgraph gamma0;
    Subgraph gamma1;
    Pi1Result pi1;
    int m = 1;
    int k = 0;
    Rat tau, A, omega;
    std::vector<std::vector<int>> split;  // labels in I_0 .. I_m
    std::vector<int> dropped_tree_components;  // least vertex id of each dropped component
    KeyIneqChecks checks;
};

// Throws HypothesisViolated when the model is an annulus, not reduced, or some
// theta*_i exceeds theta_i / q; ConstructionFailed if a postcondition fails.
KeyIneqResult key_inequality_subgraph(const ArcModel& m, const Labeling& labels, const WeightSystem& w,
                                      const std::set<int>& excluded, const Rat& q);

struct KeyConsChecks {
    bool injective = false;       // (1)
    bool avoids_excluded = false; // (2)
    bool betti_two = false;       // (3), connected with b1 = 2
    bool min_valence_two = false; // (4)
    BoundReport length_bound;     // (5)
    bool associated = false;      // K0 is the subgraph associated to K
    bool all() const
    {
        return injective && avoids_excluded && betti_two && min_valence_two && length_bound.holds() && associated;
    }
    std::string failed() const;
};

struct KeyConsResult {
    std::shared_ptr<Reduction> red;  // owns the reduced model K lives in
    KeyIneqResult ineq;
    WeightSystem lambda;
    Subgraph gamma1_0;   // in model0
    int witness_length = 0;
    std::string witness_route;
    Subgraph K;          // in the reduced model
    Subgraph K0;         // in model0
    std::vector<int> trimmed;  // model0 edge ids removed while trimming to Betti 2
    KeyConsChecks checks;
};

// Labels and excluded edges refer to arcs of the reduction (lowest id per parallel class).
KeyConsResult key_consequence(const ArcModel& model0, const Labeling& labels, const std::set<int>& excluded,
                              const Rat& q, Precision prec = {});

KeyConsChecks verify_key_consequence(const ArcModel& model0, const Reduction& red, const Labeling& labels,
                                     const WeightSystem& lambda, const std::set<int>& excluded, const Rat& q,
                                     const Subgraph& K, const Subgraph& K0, Precision prec);

} // namespace slopebound
