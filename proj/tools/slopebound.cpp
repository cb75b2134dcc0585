// slopebound: command-line front end for the checkers and the corpus runner.
// Exit codes: 0 all checks pass, 1 a checked inequality or postcondition failed,
// 2 usage or hypothesis error.

#include "slopebound/bigirth.hpp"
#include "slopebound/corpus.hpp"
#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"
#include "slopebound/json_io.hpp"
#include "slopebound/keyineq.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace slopebound;

namespace {

struct Global {
    std::uint64_t seed = 1;
    long count = 100;
    unsigned digits = 50;
    std::string out;
    bool timing = false;
};

Precision precision(const Global& g) { return Precision{g.digits}; }

void emit(const Global& g, const json& j)
{
    if (g.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(g.out, j);
}

int status_code(bool ok) { return ok ? 0 : 1; }

// ---- bigirth ----

struct BigirthOpts {
    std::string graph;
    std::string witness;
    bool exact = false, trivalent = false, general = false;
};

int run_bigirth(const Global& g, const BigirthOpts& o)
{
    Multigraph G = graph_from_json(read_json_arg(o.graph));
    json j{{"vertices", G.num_vertices()}, {"edges", G.num_edges()}, {"chi", G.euler_char()}};
    bool ok = true;
    std::optional<BigirthWitness> w;
    std::string mode = o.trivalent ? "trivalent" : o.general ? "general" : "exact";
    j["mode"] = mode;
    if (mode == "exact") {
        auto r = bigirth_exact(G);
        j["bigirth"] = r.value ? json(*r.value) : json("inf");
        w = r.witness;
    } else if (mode == "trivalent") {
        w = trivalent_witness(G);
        ok = trivalent_bound_holds(w->length, G.num_vertices());
        j["bound"] = "2^length <= V^4";
        j["bound_holds"] = ok;
    } else {
        w = general_witness(G);
        ok = general_bound_holds(w->length, G.euler_char(), G.num_edges());
        j["floor_alpha"] = general_bound_floor_alpha(G.euler_char(), G.num_edges());
        j["bound"] = "2^length <= (2|chi|)^(4 floor(alpha))";
        j["bound_holds"] = ok;
    }
    if (w) {
        bool valid = is_valid_witness(G, *w);
        ok = ok && valid;
        j["witness"] = {{"length", w->length},
                        {"chi", w->chi},
                        {"route", w->route},
                        {"valid", valid},
                        {"graph", subgraph_to_json(w->subgraph)}};
        if (!o.witness.empty())
            write_json_file(o.witness, subgraph_to_json(w->subgraph));
    }
    emit(g, j);
    return status_code(ok);
}

// ---- arc systems ----

struct ArcOpts {
    std::string model, op = "validate", labels, excluded, weights, subgraph;
    std::string q = "2";
};

json subgraph_ids(const Subgraph& s) { return {{"vertices", s.vertex_ids()}, {"edges", s.edge_ids()}}; }

int run_arcsys(const Global& g, const ArcOpts& o)
{
    json in = read_json_arg(o.model);
    // Corpus witnesses bundle the model with its labels.
    json bundle = in.contains("model") ? in : json::object();
    ArcModel M = ArcModel::build(arcmodel_from_json(in.contains("model") ? in.at("model") : in));
    json j{{"arcs", M.num_arcs()},
           {"chi", M.chi()},
           {"genus", M.genus()},
           {"boundary", M.num_boundary()},
           {"regions", M.regions().size()},
           {"all_planar", M.all_planar()}};
    auto labels_or_default = [&]() {
        if (!o.labels.empty())
            return int_map_from_json(read_json_arg(o.labels));
        if (bundle.contains("labels"))
            return int_map_from_json(bundle.at("labels"));
        Labeling l;
        for (int a : M.arcs())
            l[a] = 0;
        return l;
    };
    auto excluded = [&]() {
        if (!o.excluded.empty())
            return id_set_from_json(read_json_arg(o.excluded));
        if (bundle.contains("excluded"))
            return id_set_from_json(bundle.at("excluded"));
        return std::set<int>{};
    };
    Rat q = bundle.contains("q") && o.q == "2" ? rat_from_json(bundle.at("q")) : parse_rat(o.q);
    bool ok = true;
    if (o.op == "validate") {
        j["valid"] = true;
    } else if (o.op == "dual") {
        Multigraph d = dual_graph(M);
        int b1 = components_and_betti(d).total_betti();
        j["dual"] = graph_to_json(d);
        j["b1"] = b1;
        if (M.all_planar()) {
            ok = b1 >= M.genus();
            j["genus_bound_holds"] = ok;
        }
    } else if (o.op == "reduce") {
        Reduction r = reduce_system(M);
        j["reduced"] = arcmodel_to_json(r.reduced.spec());
        j["width"] = int_map_to_json(r.width);
    } else if (o.op == "pi1") {
        Subgraph g0 = Subgraph::full(M.graph());
        if (!o.subgraph.empty())
            g0 = Subgraph::from_edge_ids(M.graph(), read_json_arg(o.subgraph).get<std::vector<int>>());
        auto r = pi1_subgraph(M, g0);
        bool inj = pi1_oracle(M, r.sub);
        ok = inj && 3 * r.kept_arcs >= r.nu;
        j["input_injective"] = pi1_oracle(M, g0);
        j["nu"] = r.nu;
        j["mu"] = r.mu;
        j["kept_arcs"] = r.kept_arcs;
        j["dropped"] = r.dropped;
        j["injective"] = inj;
        j["subgraph"] = subgraph_ids(r.sub);
    } else if (o.op == "keyineq") {
        Labeling l = labels_or_default();
        WeightSystem w;
        if (!o.weights.empty() || bundle.contains("weights")) {
            json jw = !o.weights.empty() ? read_json_arg(o.weights) : bundle.at("weights");
            for (const auto& [k, v] : jw.items())
                w[std::stoi(k)] = rat_from_json(v);
        } else {
            for (auto& [a, lab] : l)
                w[lab] = 1;
        }
        auto r = key_inequality_subgraph(M, l, w, excluded(), q);
        const auto& c = r.checks;
        ok = c.all();
        j["q"] = to_string(q);
        j["m"] = r.m;
        j["k"] = r.k;
        j["tau"] = to_string(r.tau);
        j["checks"] = {{"injective", c.injective},
                       {"avoids_excluded", c.avoids_excluded},
                       {"negative_chi", c.negative_chi},
                       {"ratio_bound", c.ratio_bound},
                       {"no_tree_component", c.no_tree_component},
                       {"chi", c.chi},
                       {"lambda", to_string(c.lambda)},
                       {"theta", c.theta},
                       {"lhs", to_string(c.lhs)},
                       {"rhs", c.rhs}};
        j["gamma1"] = subgraph_ids(r.gamma1);
    } else if (o.op == "keycons") {
        auto r = key_consequence(M, labels_or_default(), excluded(), q, precision(g));
        const auto& c = r.checks;
        ok = c.all();
        j["q"] = to_string(q);
        j["checks"] = {{"injective", c.injective},
                       {"avoids_excluded", c.avoids_excluded},
                       {"betti_two", c.betti_two},
                       {"min_valence_two", c.min_valence_two},
                       {"associated", c.associated},
                       {"length_bound", report_to_json(c.length_bound)}};
        j["witness_route"] = r.witness_route;
        j["K"] = subgraph_ids(r.K);
        j["K0"] = subgraph_ids(r.K0);
    } else {
        fail(ErrorKind::Usage, "unknown arcsys op " + o.op);
    }
    emit(g, j);
    return status_code(ok);
}

// ---- tree ----

struct TreeOpts {
    std::string field, op = "length", matrix;
    long t = -1;
};

int run_tree(const Global& g, const TreeOpts& o)
{
    json in = read_json_arg(o.matrix);
    std::string fname = !o.field.empty() ? o.field : in.is_object() && in.contains("field") ? in.at("field").get<std::string>() : "";
    if (fname.empty())
        fail(ErrorKind::Usage, "--field is required");
    Field f = Field::parse(fname);
    json j{{"field", f.name()}, {"op", o.op}};
    bool ok = true;
    if (o.op == "commutator") {
        long t = o.t >= 0 ? o.t : in.value("t", 1L);
        if (!in.is_object() || !in.contains("x") || !in.contains("y"))
            fail(ErrorKind::Usage, "commutator input needs \"x\" and \"y\" matrices");
        auto c = arc_commutator_check(t, matrix_from_json(in.at("x"), f), matrix_from_json(in.at("y"), f), f);
        ok = c.holds;
        j["t"] = t;
        j["valuation"] = c.valuation == kInfValuation ? json("inf") : json(c.valuation);
        j["holds"] = c.holds;
    } else {
        Mat2 A = matrix_from_json(in, f);
        if (o.op == "distance") {
            j["distance"] = displacement(A, base_vertex(f));
        } else if (o.op == "length") {
            j["trace_valuation"] = A.trace().is_zero() ? json("inf") : json(f.valuation(A.trace()));
            j["length"] = translation_length(A, f);
        } else if (o.op == "oracle") {
            auto r = translation_length_oracle(A, f);
            long formula = translation_length(A, f);
            long d0 = displacement(A, base_vertex(f));
            ok = r.certified && r.length == formula && d0 % 2 == 0;
            j["oracle"] = r.length;
            j["formula"] = formula;
            j["certified"] = r.certified;
            j["steps"] = r.steps;
            j["method"] = r.method;
            j["base_displacement"] = d0;
            j["witness_basis"] = matrix_to_json(r.witness.basis);
        } else {
            fail(ErrorKind::Usage, "unknown tree op " + o.op);
        }
    }
    emit(g, j);
    return status_code(ok);
}

// ---- norms ----

int run_norms(const Global& g, const std::string& op, const std::string& data)
{
    json in = read_json_arg(data);
    json j{{"op", op}};
    bool ok = true;
    auto slope = [](const json& x) {
        auto c = class_from_json(x);
        return Slope::make(c.p, c.q);
    };
    if (op == "delta") {
        j["delta"] = to_string(delta(slope(in.at("s1")), slope(in.at("s2"))));
    } else if (op == "slope") {
        HomologyClass mu{1, 0}, lambda{0, 1};
        if (in.contains("mu"))
            mu = class_from_json(in.at("mu"));
        if (in.contains("lambda"))
            lambda = class_from_json(in.at("lambda"));
        auto a = class_from_json(in.at("alpha"));
        auto s = numerical_slope(a, mu, lambda);
        j["slope"] = s.str();
        Int w = omega(a, mu);
        j["denominator"] = to_string(w < 0 ? Int(-w) : w);
    } else if (op == "norm") {
        if (in.contains("surfaces")) {
            std::vector<SurfaceTerm> terms;
            for (const auto& s : in.at("surfaces"))
                terms.push_back({num(rat_from_json(s.value("N", json(1)))), num(rat_from_json(s.value("m", json(1)))),
                                 slope(s.at("slope"))});
            j["norm"] = to_string(norm_from_surfaces(terms, slope(in.at("c"))));
        } else {
            auto B = ParallelogramNorm::make(vec_from_json(in.at("v1")), vec_from_json(in.at("v2")));
            j["norm"] = to_string(B.eval(vec_from_json(in.at("v"))));
        }
    } else if (op == "minkowski") {
        auto m = minkowski_check(ParallelogramNorm::make(vec_from_json(in.at("v1")), vec_from_json(in.at("v2"))));
        ok = m.holds;
        j["area"] = to_string(m.area);
        if (m.interior) {
            j["interior_point"] = class_to_json(*m.interior);
            j["gauge"] = to_string(m.interior_gauge);
        } else {
            j["interior_point"] = nullptr;
        }
        j["holds"] = m.holds;
    } else if (op == "chain") {
        ChainConfig cfg;
        if (in.contains("factor"))
            cfg.factor = rat_from_json(in.at("factor"));
        auto c = knot_chain_verify(class_from_json(in.at("alpha1")), class_from_json(in.at("alpha2")),
                                   class_from_json(in.at("mu")), rat_from_json(in.at("t")), cfg);
        ok = c.report.holds() && c.identity_holds;
        j["report"] = report_to_json(c.report);
        j["q1"] = to_string(c.q1);
        j["Delta"] = to_string(c.Delta);
        j["ratio"] = to_string(c.ratio);
        j["omega_v"] = to_string(c.omega_v);
        j["identity_holds"] = c.identity_holds;
        j["area"] = to_string(c.minkowski.area);
    } else {
        fail(ErrorKind::Usage, "unknown norms op " + op);
    }
    emit(g, j);
    return status_code(ok);
}

// ---- bounds ----

KnotData knot_from_json(const json& in)
{
    return KnotData::make(in.at("g1").get<long>(), in.value("m1", 1L), in.at("g2").get<long>(), in.value("m2", 1L),
                          in.at("q1").get<long>(), in.at("delta").get<long>());
}

int run_bounds(const Global& g, const std::string& op, const std::string& data, bool serial)
{
    json in = data.empty() ? json::object() : read_json_arg(data);
    Precision prec = precision(g);
    json j{{"op", op}, {"digits", prec.digits}};
    bool ok = true;
    if (op == "phi") {
        Rat tau = in.contains("tau") ? rat_from_json(in.at("tau")) : tau_of_q(rat_from_json(in.at("q")));
        auto p = phi_tau(tau, rat_from_json(in.at("n")), prec);
        ok = p.in_window;
        j["tau"] = to_string(tau);
        j["argmin"] = p.argmin;
        j["window"] = p.window;
        j["in_window"] = p.in_window;
        j["value"] = {{"lo", p.value.lo_str(prec.digits)}, {"hi", p.value.hi_str(prec.digits)}};
    } else if (op == "chooseq") {
        auto c = choose_q_tau(rat_from_json(in.at("x")), prec);
        ok = c.cert1.holds() && c.cert2.holds();
        j["mu"] = c.mu;
        j["q"] = to_string(c.q);
        j["tau"] = to_string(c.tau);
        j["cert1"] = report_to_json(c.cert1);
        j["cert2"] = report_to_json(c.cert2);
    } else if (op == "calculus") {
        long lo = in.value("lo", 333L), hi = in.value("hi", 1000001L);
        auto s = f_monotone_check(lo, hi, prec, serial);
        ok = s.ok();
        j["lo"] = lo;
        j["hi"] = hi;
        j["checked"] = s.checked;
        j["failures"] = s.failures;
        j["inconclusive"] = s.inconclusive;
        j["worst_n"] = s.worst_n;
        j["worst_margin"] = s.worst_margin;
        j["f334_vs_f333"] = report_to_json(s.f334_vs_f333);
        j["xfprime_333_positive"] = report_to_json(s.xfprime_333_positive);
        j["xfprime_334_negative"] = report_to_json(s.xfprime_334_negative);
    } else if (op == "kappa") {
        KnotData d = knot_from_json(in);
        std::string which = in.value("which", "easy");
        if (which == "easy") {
            auto t = kappa_easy(d);
            auto v = t.eval(prec);
            j["kappa"] = t.str();
            j["value"] = {{"lo", v.lo_str(prec.digits)}, {"hi", v.hi_str(prec.digits)}};
        } else if (which == "hard") {
            Rat theta = in.contains("theta") ? rat_from_json(in.at("theta")) : Rat(-d.chi2);
            Rat q = in.contains("q") ? rat_from_json(in.at("q")) : choose_q_tau(theta, prec).q;
            auto v = kappa_hard(d, theta, q, prec);
            j["theta"] = to_string(theta);
            j["q"] = to_string(q);
            j["value"] = {{"lo", v.lo_str(prec.digits)}, {"hi", v.hi_str(prec.digits)}};
        } else if (which == "explicit") {
            auto v = kappa_explicit(d, prec);
            j["value"] = {{"lo", v.lo_str(prec.digits)}, {"hi", v.hi_str(prec.digits)}};
        } else if (which == "hard-vs-explicit") {
            auto r = kappa_hard_vs_explicit(d, prec);
            ok = r.holds();
            j["report"] = report_to_json(r);
        } else {
            fail(ErrorKind::Usage, "kappa which must be easy, hard, explicit or hard-vs-explicit");
        }
        j["which"] = which;
    } else if (op == "theorem") {
        std::string which = in.value("which", "easy");
        BoundReport r;
        if (which == "easycorollary") {
            r = easy_corollary(in.at("g").get<long>(), rat_from_json(in.at("r")), prec);
        } else {
            KnotData d = knot_from_json(in);
            ChainConfig cfg;
            if (in.contains("factor"))
                cfg.factor = rat_from_json(in.at("factor"));
            if (which == "easy")
                r = theorem_easy(d, prec, cfg);
            else if (which == "hard")
                r = theorem_hard(d, prec, cfg);
            else if (which == "chibound")
                r = theorem_chibound(d);
            else
                fail(ErrorKind::Usage, "theorem which must be easy, hard, chibound or easycorollary");
        }
        ok = r.holds();
        j["which"] = which;
        j["report"] = report_to_json(r);
    } else if (op == "torus") {
        auto k = torus_knot_data(in.at("p").get<long>(), in.at("q").get<long>());
        j["slope"] = k.slope;
        j["genus"] = k.genus;
        if (k.genus >= 2) {
            auto r = easy_corollary(k.genus, Rat(k.slope), prec);
            ok = r.holds();
            j["corollary"] = report_to_json(r);
        } else {
            j["corollary"] = "genus below 2, outside the hypotheses";
        }
    } else if (op == "qual") {
        if (in.contains("g1")) {
            auto q = qualitative_derivation(knot_from_json(in), prec);
            ok = q.ok();
            j["chibound"] = report_to_json(q.chibound);
            j["b_le_c"] = report_to_json(q.b_le_c);
            j["envelope"] = report_to_json(q.envelope);
        } else {
            std::string fam = in.value("family", "f0");
            Rat eps = in.contains("eps") ? rat_from_json(in.at("eps")) : Rat(1, 2);
            auto s = qualitative_check(fam, eps, prec);
            ok = s.tail_decreasing;
            j["family"] = s.family;
            j["eps"] = to_string(s.eps);
            j["last_value"] = s.last_value;
            j["decreasing_from"] = s.decreasing_from;
            j["tail_decreasing"] = s.tail_decreasing;
            json grid = json::array();
            for (auto& [x, v] : s.grid)
                grid.push_back({x, v});
            j["grid"] = grid;
        }
    } else {
        fail(ErrorKind::Usage, "unknown bounds op " + op);
    }
    emit(g, j);
    return status_code(ok);
}

// ---- corpus ----

struct CorpusOpts {
    std::string suite;
    long index = -1;
    std::string witness_dir, primes;
    int max_theta = 40, max_vertices = 14;
    bool serial = false;
    std::string factor = "1";
};

int run_corpus(const Global& g, const CorpusOpts& o)
{
    CorpusConfig cfg;
    cfg.suite = o.suite;
    cfg.count = g.count;
    cfg.seed = g.seed;
    cfg.prec = precision(g);
    cfg.max_theta = o.max_theta;
    cfg.max_vertices = o.max_vertices;
    cfg.serial = o.serial;
    cfg.timing = g.timing;
    cfg.witness_dir = o.witness_dir;
    cfg.chain.factor = parse_rat(o.factor);
    if (!o.primes.empty()) {
        cfg.primes.clear();
        std::stringstream ss(o.primes);
        for (std::string tok; std::getline(ss, tok, ',');)
            cfg.primes.push_back(tok == "t" ? 0 : std::stol(tok));
    }
    if (!known_suite(cfg.suite))
        fail(ErrorKind::Usage, "unknown suite " + cfg.suite);
    if (o.index >= 0) {
        auto r = run_instance(cfg, o.index);
        json j{{"suite", cfg.suite}, {"seed", cfg.seed}, {"index", r.index}, {"status", r.status}};
        if (!r.message.empty())
            j["message"] = r.message;
        j["detail"] = r.detail;
        if (!r.witness.is_null())
            j["witness"] = r.witness;
        emit(g, j);
        return r.status == "pass" || r.status == "excluded" ? 0 : r.status == "fail" ? 1 : 2;
    }
    RunReport rep = corpus_run(cfg);
    json j = report_json(rep);
    emit(g, j);
    if (!g.out.empty()) {
        std::string csv = g.out;
        if (csv.size() > 5 && csv.substr(csv.size() - 5) == ".json")
            csv.resize(csv.size() - 5);
        std::ofstream(csv + ".csv") << report_csv(rep);
    }
    std::cerr << cfg.suite << ": " << rep.passed << " passed, " << rep.failed << " failed, " << rep.errors
              << " errors, " << rep.excluded << " excluded\n";
    return rep.failed ? 1 : rep.errors ? 2 : 0;
}

int exit_code_for(const Error& e)
{
    return e.kind() == ErrorKind::ConstructionFailed ? 1 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"slopebound: bigirth, arc systems, SL2 trees, plane norms and slope bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    if (const char* env = std::getenv("SLOPEBOUND_DIGITS"))
        g.digits = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    app.add_option("--seed", g.seed, "RNG seed");
    app.add_option("--count", g.count, "instance count");
    app.add_option("--digits", g.digits, "decimal digits of interval precision (env SLOPEBOUND_DIGITS)")
        ->check(CLI::Range(10u, 2000u));
    app.add_option("--out", g.out, "write JSON here instead of stdout");
    app.add_flag("--timing", g.timing, "include wall-clock times in reports");

    BigirthOpts bo;
    auto* bg = app.add_subcommand("bigirth", "bigirth of a multigraph");
    bg->add_option("--graph", bo.graph, "graph JSON")->required();
    bg->add_option("--witness", bo.witness, "write the witness subgraph here");
    auto* ex = bg->add_flag("--exact", bo.exact, "exact bigirth");
    auto* tv = bg->add_flag("--trivalent", bo.trivalent, "min-valence-3 witness and bound");
    auto* gn = bg->add_flag("--general", bo.general, "general witness and bound");
    ex->excludes(tv)->excludes(gn);
    tv->excludes(gn);

    ArcOpts ao;
    auto* ar = app.add_subcommand("arcsys", "arc systems on surfaces");
    ar->add_option("--model", ao.model, "arc model JSON")->required();
    ar->add_option("--op", ao.op)->check(CLI::IsMember({"validate", "dual", "reduce", "pi1", "keyineq", "keycons"}));
    ar->add_option("--q", ao.q, "q > 1");
    ar->add_option("--labels", ao.labels, "arc -> label JSON");
    ar->add_option("--excluded", ao.excluded, "excluded arc ids JSON");
    ar->add_option("--weights", ao.weights, "label -> weight JSON");
    ar->add_option("--subgraph", ao.subgraph, "edge ids for pi1");

    TreeOpts to;
    auto* tr = app.add_subcommand("tree", "SL2 action on the tree of a valued field");
    tr->add_option("--field", to.field, "p:<prime> or t");
    tr->add_option("--op", to.op)->check(CLI::IsMember({"distance", "length", "oracle", "commutator"}));
    tr->add_option("--matrix", to.matrix, "matrix JSON")->required();
    tr->add_option("--t", to.t, "stabilized arc length");

    std::string nop, ndata;
    auto* nm = app.add_subcommand("norms", "slopes and parallelogram norms");
    nm->add_option("--op", nop)->required()->check(CLI::IsMember({"delta", "slope", "norm", "minkowski", "chain"}));
    nm->add_option("--data", ndata, "input JSON")->required();

    std::string bop, bdata;
    bool bserial = false;
    auto* bd = app.add_subcommand("bounds", "slope-genus bound formulas");
    bd->add_option("--op", bop)->required()->check(
        CLI::IsMember({"phi", "chooseq", "calculus", "kappa", "theorem", "torus", "qual"}));
    bd->add_option("--data", bdata, "input JSON");
    bd->add_flag("--serial", bserial, "serial reference loop for the calculus sweep");

    CorpusOpts co;
    auto* cp = app.add_subcommand("corpus", "seeded acceptance suites");
    cp->add_option("--suite", co.suite)->required()->check(CLI::IsMember(suite_names()));
    cp->add_option("--index", co.index, "replay one instance");
    cp->add_option("--witness-dir", co.witness_dir, "dump failure witnesses here");
    cp->add_option("--max-theta", co.max_theta);
    cp->add_option("--max-vertices", co.max_vertices);
    cp->add_option("--primes", co.primes, "comma-separated primes, t for the function field");
    cp->add_option("--factor", co.factor, "chain constant factor");
    cp->add_flag("--serial", co.serial, "run instances serially");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bg->parsed())
            return run_bigirth(g, bo);
        if (ar->parsed())
            return run_arcsys(g, ao);
        if (tr->parsed())
            return run_tree(g, to);
        if (nm->parsed())
            return run_norms(g, nop, ndata);
        if (bd->parsed())
            return run_bounds(g, bop, bdata, bserial);
        if (cp->parsed())
            return run_corpus(g, co);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const json::exception& e) {
        std::cerr << "error: bad input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
