#include "slopebound/keyineq.hpp"

#include "slopebound/errors.hpp"

#include <algorithm>
#include <string>

namespace slopebound {

namespace {

std::string sid(long x) { return std::to_string(x); }

int label_of_arc(const Labeling& labels, int arc)
{
    auto it = labels.find(arc);
    if (it == labels.end())
        fail(ErrorKind::HypothesisViolated, "arc " + sid(arc) + " has no label");
    return it->second;
}

Subgraph drop_tree_components(const Subgraph& s, std::vector<int>* dropped)
{
    Subgraph out = s;
    const Multigraph& g = s.parent();
    for (const auto& c : components_and_betti(s).components) {
        if (c.betti > 0)
            continue;
        if (dropped)
            dropped->push_back(c.vertex_ids.front());
        for (int e : c.edge_ids)
            out.remove_edge_index(g.edge_index(e));
        for (int v : c.vertex_ids)
            out.remove_vertex_index(g.vertex_index(v));
    }
    return out;
}

bool connected_without(const Subgraph& h, int ei)
{
    Subgraph t = h;
    t.remove_edge_index(ei);
    return is_connected(t);
}

void prune_low_valence(Subgraph& h)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int vi : h.vertex_indices()) {
            if (h.valence_index(vi) > 1)
                continue;
            for (int ei : h.parent().incident(vi))
                if (h.has_edge_index(ei))
                    h.remove_edge_index(ei);
            h.remove_vertex_index(vi);
            changed = true;
        }
    }
}

} // namespace

std::string KeyIneqChecks::failed() const
{
    std::string s;
    if (!injective)
        s += "(1) not pi1-injective; ";
    if (!avoids_excluded)
        s += "(2) contains an excluded edge; ";
    if (!negative_chi)
        s += "(3) chi = " + sid(chi) + "; ";
    if (!ratio_bound)
        s += "(4) ratio " + to_string(lhs) + " not below " + rhs + "; ";
    if (!no_tree_component)
        s += "(5) simply-connected component; ";
    return s;
}

std::string KeyConsChecks::failed() const
{
    std::string s;
    if (!injective)
        s += "(1) not pi1-injective; ";
    if (!avoids_excluded)
        s += "(2) contains an excluded edge; ";
    if (!betti_two)
        s += "(3) not connected with b1 = 2; ";
    if (!min_valence_two)
        s += "(4) vertex of valence <= 1; ";
    if (!length_bound.holds())
        s += std::string("(5) length bound ") + status_name(length_bound.status) + "; ";
    if (!associated)
        s += "K0 is not the subgraph associated to K; ";
    return s;
}

LabelStats label_stats(const ArcModel& m, const Labeling& labels)
{
    LabelStats st;
    for (const auto& [arc, lab] : labels)
        if (!m.is_arc(arc))
            fail(ErrorKind::HypothesisViolated, "label given for non-arc " + sid(arc));
    for (int a : m.arcs())
        st.theta[label_of_arc(labels, a)] += 1;
    st.Theta = m.num_arcs();
    for (const auto& [lab, t] : st.theta)
        st.theta_inf = std::max(st.theta_inf, t);
    return st;
}

Rat weight_of(const ArcModel& m, const Labeling& labels, const WeightSystem& w, const Subgraph& g)
{
    Rat s = 0;
    for (int v : g.vertex_ids()) {
        int lab = label_of_arc(labels, m.arc_at(v));
        auto it = w.find(lab);
        if (it == w.end())
            fail(ErrorKind::HypothesisViolated, "label " + sid(lab) + " has no weight");
        s += it->second;
    }
    return s;
}

long theta_of(const ArcModel& m, const Labeling& labels, const LabelStats& st, const Subgraph& g)
{
    long best = -1;
    for (int a : m.arcs())
        if (g.has_edge(a)) {
            long t = st.theta.at(label_of_arc(labels, a));
            best = best < 0 ? t : std::min(best, t);
        }
    return best;
}

WeightSystem standard_weights(const Labeling& labels, const std::map<int, int>& widths)
{
    WeightSystem w;
    for (const auto& [arc, lab] : labels) {
        auto it = widths.find(arc);
        int wd = it == widths.end() ? 1 : it->second;
        auto cur = w.find(lab);
        if (cur == w.end() || cur->second < wd)
            w[lab] = wd;
    }
    return w;
}

StandardWeightsCheck standard_weights_check(const Widening& w, const ArcModel& coarse, const Labeling& labels,
                                            const Subgraph& g)
{
    StandardWeightsCheck c;
    Subgraph g0 = widen_subgraph(w, g);
    c.length0 = g0.num_edges();
    c.bound = Rat(3, 2) * weight_of(coarse, labels, standard_weights(labels, w.width), g);
    c.holds = Rat(c.length0) <= c.bound;
    return c;
}

KeyIneqChecks verify_key_inequality(const ArcModel& m, const Labeling& labels, const WeightSystem& w,
                                    const std::set<int>& excluded, const Rat& q, const Subgraph& g1)
{
    KeyIneqChecks c;
    LabelStats st = label_stats(m, labels);
    Rat tau = tau_of_q(q);
    int mm = phi_argmin(tau, Rat(st.theta_inf));

    c.injective = pi1_oracle(m, g1);
    c.avoids_excluded = std::none_of(excluded.begin(), excluded.end(), [&](int e) { return g1.has_edge(e); });
    c.chi = g1.euler_char();
    c.negative_chi = c.chi < 0;
    c.lambda = weight_of(m, labels, w, g1);
    c.theta = theta_of(m, labels, st, g1);
    Rat sum = 0;
    for (const auto& [lab, t] : st.theta)
        sum += w.at(lab);
    Rat omega = sum / st.Theta;
    if (c.negative_chi && c.theta > 0) {
        c.lhs = c.lambda / (Rat(c.theta) * (-c.chi));
        // lhs < tau^(2m+2) theta_inf^(1/m) omega / (tau - 1)  iff  r^m < theta_inf
        Rat r = c.lhs * (tau - 1) / (rpow(tau, 2 * mm + 2) * omega);
        c.ratio_bound = rpow(r, mm) < Rat(st.theta_inf);
    }
    Precision prec;
    auto phi = phi_tau(tau, Rat(st.theta_inf), prec);
    c.rhs = (phi.value * omega).mid_str(20);
    c.no_tree_component = true;
    for (const auto& comp : components_and_betti(g1).components)
        c.no_tree_component = c.no_tree_component && comp.betti > 0;
    return c;
}

KeyIneqResult key_inequality_subgraph(const ArcModel& m, const Labeling& labels, const WeightSystem& w,
                                      const std::set<int>& excluded, const Rat& q)
{
    require_not_annulus(m);
    for (const auto& cls : parallel_classes(m))
        if (cls.size() > 1)
            fail(ErrorKind::HypothesisViolated, "arc system is not reduced (arcs " + sid(cls[0]) + " and " +
                                                    sid(cls[1]) + " are parallel)");
    LabelStats st = label_stats(m, labels);
    for (const auto& [lab, t] : st.theta) {
        auto it = w.find(lab);
        if (it == w.end() || it->second <= 0)
            fail(ErrorKind::HypothesisViolated, "label " + sid(lab) + " needs a positive weight");
    }
    std::map<int, long> theta_star;
    for (int e : excluded) {
        if (!m.is_arc(e))
            fail(ErrorKind::HypothesisViolated, "excluded edge " + sid(e) + " is not an interior edge");
        theta_star[labels.at(e)] += 1;
    }
    for (const auto& [lab, ts] : theta_star)
        if (Rat(ts) * q > Rat(st.theta.at(lab)))
            fail(ErrorKind::HypothesisViolated, "theta*_" + sid(lab) + " = " + sid(ts) + " exceeds theta_" + sid(lab) +
                                                    "/q");

    KeyIneqResult r;
    r.tau = tau_of_q(q);
    r.m = phi_argmin(r.tau, Rat(st.theta_inf));
    const int m_ = r.m;
    r.A = rpow(r.tau, m_ + 1) / (r.tau - 1);
    Rat alpha = 1 / r.A;
    Rat sum = 0;
    for (const auto& [lab, t] : st.theta)
        sum += w.at(lab);
    r.omega = sum / st.Theta;

    r.split.assign(m_ + 1, {});
    std::map<int, int> part;
    Int tinf(st.theta_inf);
    for (const auto& [lab, t] : st.theta) {
        int j = -1;
        if (w.at(lab) > r.A * r.omega * t) {
            j = 0;
        } else {
            Int tm = ipow(Int(t), static_cast<unsigned long>(m_));
            for (int jj = 1; jj < m_ && j < 0; ++jj)
                if (ipow(tinf, static_cast<unsigned long>(m_ - jj)) < tm &&
                    tm <= ipow(tinf, static_cast<unsigned long>(m_ - jj + 1)))
                    j = jj;
            if (j < 0 && tm <= tinf)
                j = m_;
        }
        if (j < 0)
            fail(ErrorKind::ConstructionFailed, "label " + sid(lab) + " falls in no class");
        part[lab] = j;
        r.split[j].push_back(lab);
    }
    std::vector<long> Theta_j(m_ + 1, 0);
    for (const auto& [lab, j] : part)
        Theta_j[j] += st.theta.at(lab);
    r.k = -1;
    for (int j = 0; j <= m_ && r.k < 0; ++j)
        if (Rat(Theta_j[j]) > rpow(r.tau, j) * alpha * st.Theta)
            r.k = j;
    if (r.k <= 0)
        fail(ErrorKind::ConstructionFailed, "no admissible index k > 0");

    const Multigraph& G = m.graph();
    r.gamma0 = Subgraph(G);
    auto plus = [&](int v) { return part.at(labels.at(m.arc_at(v))) >= r.k; };
    for (int v : G.vertex_ids())
        if (plus(v))
            r.gamma0.add_vertex_index(G.vertex_index(v));
    for (int a : m.arcs())
        if (part.at(labels.at(a)) == r.k && !excluded.count(a))
            r.gamma0.add_edge_index(G.edge_index(a));
    for (int g : m.bedges())
        if (plus(m.tail(g)) && plus(m.head(g)))
            r.gamma0.add_edge_index(G.edge_index(g));

    r.pi1 = pi1_subgraph(m, r.gamma0);
    r.gamma1 = drop_tree_components(r.pi1.sub, &r.dropped_tree_components);
    r.checks = verify_key_inequality(m, labels, w, excluded, q, r.gamma1);
    if (!r.checks.all())
        fail(ErrorKind::ConstructionFailed, "key inequality postcondition: " + r.checks.failed());
    return r;
}

KeyConsChecks verify_key_consequence(const ArcModel& model0, const Reduction& red, const Labeling& labels,
                                     const WeightSystem& lambda, const std::set<int>& excluded, const Rat& q,
                                     const Subgraph& K, const Subgraph& K0, Precision prec)
{
    KeyConsChecks c;
    const ArcModel& m = red.reduced;
    c.injective = pi1_oracle(m, K);
    c.avoids_excluded = std::none_of(excluded.begin(), excluded.end(), [&](int e) { return K.has_edge(e); });
    auto cb = components_and_betti(K);
    c.betti_two = cb.count == 1 && cb.total_betti() == 2;
    c.min_valence_two = true;
    for (int vi : K.vertex_indices())
        c.min_valence_two = c.min_valence_two && K.valence_index(vi) >= 2;
    c.associated = associated_subgraph(model0, red.chain, K) == K0;

    LabelStats st = label_stats(m, labels);
    long th = theta_of(m, labels, st, K);
    Rat tau = tau_of_q(q);
    Rat sum = 0;
    for (const auto& [lab, t] : st.theta)
        sum += lambda.at(lab);
    if (th <= 0) {
        c.length_bound.name = "length(K0)/theta(K) bound";
        c.length_bound.status = BoundStatus::Fails;
        c.length_bound.note = "K has no interior edge";
        return c;
    }
    auto phi = phi_tau(tau, Rat(st.theta_inf), prec);
    Interval lhs = Interval::of(Rat(K0.num_edges(), th), prec.bits());
    Interval rhs = Interval::of(6, prec.bits()) * phi.value * Interval::of(2 * st.Theta, prec.bits()).log2() *
                   Interval::of(sum / st.Theta, prec.bits());
    c.length_bound = compare_interval("length(K0)/theta(K) < 6 phi_tau(theta_inf) log2(2 Theta) omega", lhs, rhs, prec);
    return c;
}

KeyConsResult key_consequence(const ArcModel& model0, const Labeling& labels, const std::set<int>& excluded,
                              const Rat& q, Precision prec)
{
    require_not_annulus(model0);
    KeyConsResult r;
    r.red = std::make_shared<Reduction>(reduce_system(model0));
    const ArcModel& m = r.red->reduced;
    r.lambda = standard_weights(labels, r.red->width);
    r.ineq = key_inequality_subgraph(m, labels, r.lambda, excluded, q);
    r.gamma1_0 = associated_subgraph(model0, r.red->chain, r.ineq.gamma1);

    const Multigraph& G0 = model0.graph();
    Multigraph standalone = r.gamma1_0.to_graph();
    BigirthWitness wit = general_witness(standalone);
    r.witness_length = wit.length;
    r.witness_route = wit.route;
    Subgraph H = Subgraph::from_ids(G0, wit.subgraph.vertex_ids(), wit.subgraph.edge_ids());
    if (!is_connected(H))
        fail(ErrorKind::ConstructionFailed, "bigirth witness is disconnected");

    prune_low_valence(H);
    while (H.num_edges() - H.num_vertices() + 1 > 2) {
        int pick = -1;
        for (int ei : H.edge_indices())
            if (connected_without(H, ei)) {
                pick = ei;
                break;
            }
        if (pick < 0)
            fail(ErrorKind::ConstructionFailed, "no non-separating edge while trimming");
        H.remove_edge_index(pick);
        r.trimmed.push_back(G0.edges()[pick].id);
        prune_low_valence(H);
    }

    // pull back to the reduced model
    const Multigraph& G = m.graph();
    r.K = Subgraph(G);
    int accounted = 0;
    for (int v : G.vertex_ids())
        if (H.has_vertex(v))
            r.K.add_vertex_index(G.vertex_index(v));
    for (int a : m.arcs())
        if (H.has_edge(a)) {
            r.K.add_edge_index(G.edge_index(a));
            ++accounted;
        }
    for (const auto& [g, ch] : r.red->chain) {
        int in = 0;
        for (int e : ch.bedges)
            in += H.has_edge(e) ? 1 : 0;
        if (in == 0)
            continue;
        if (in != static_cast<int>(ch.bedges.size()))
            fail(ErrorKind::ConstructionFailed, "trimmed subgraph covers part of a subdivided edge");
        r.K.add_edge_index(G.edge_index(g));
        accounted += in;
    }
    if (accounted != H.num_edges())
        fail(ErrorKind::ConstructionFailed, "trimmed subgraph uses edges outside the reduction");
    r.K0 = H;
    r.checks = verify_key_consequence(model0, *r.red, labels, r.lambda, excluded, q, r.K, r.K0, prec);
    if (!r.checks.all())
        fail(ErrorKind::ConstructionFailed, "key consequence postcondition: " + r.checks.failed());
    return r;
}

} // namespace slopebound
