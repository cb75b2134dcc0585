#include "slopebound/corpus.hpp"

#include "slopebound/bigirth.hpp"
#include "slopebound/errors.hpp"
#include "slopebound/generators.hpp"
#include "slopebound/keyineq.hpp"
#include "slopebound/rng.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace slopebound {

namespace {

struct Outcome {
    bool pass = false;
    json detail = json::object();
    json witness;
    std::string message;
    bool excluded = false;
};

using SuiteFn = std::function<Outcome(const CorpusConfig&, long, Rng&)>;

// ---- graphs ----

Outcome bigirth_trivalent(const CorpusConfig& cfg, long, Rng& rng)
{
    int V = rng.uniform_int(2, std::max(2, cfg.max_vertices));
    int extra = rng.uniform_int(0, 2);
    Multigraph g = random_min_valence3(rng, V, extra);
    Outcome o;
    o.witness = graph_to_json(g);
    auto r = bigirth_exact(g);
    auto w = trivalent_witness(g);
    bool valid = is_valid_witness(g, w);
    o.pass = r.value && trivalent_bound_holds(*r.value, V) && valid && trivalent_bound_holds(w.length, V);
    o.detail = {{"V", V}, {"E", g.num_edges()}, {"bigirth", r.value ? *r.value : -1},
                {"witness_length", w.length}, {"witness_route", w.route}, {"witness_valid", valid}};
    if (!o.pass)
        o.message = "bigirth or witness exceeds 4 log2 V";
    return o;
}

Outcome bigirth_general(const CorpusConfig&, long, Rng& rng)
{
    Multigraph g = random_general_graph(rng, 2);
    Outcome o;
    o.witness = graph_to_json(g);
    int chi = g.euler_char();
    int len = g.num_edges();
    auto r = bigirth_exact(g);
    auto w = general_witness(g);
    bool valid = is_valid_witness(g, w);
    o.pass = r.value && general_bound_holds(*r.value, chi, len) && valid && general_bound_holds(w.length, chi, len);
    o.detail = {{"chi", chi},
                {"length", len},
                {"floor_alpha", general_bound_floor_alpha(chi, len)},
                {"bigirth", r.value ? *r.value : -1},
                {"witness_length", w.length},
                {"witness_chi", w.chi},
                {"witness_route", w.route},
                {"witness_valid", valid}};
    if (!o.pass)
        o.message = "bigirth or witness exceeds 4 log2|2 chi| floor(length/|chi|)";
    return o;
}

// ---- tree ----

Field tree_field(const CorpusConfig& cfg, long k)
{
    if (cfg.primes.empty())
        fail(ErrorKind::Usage, "no primes configured");
    long p = cfg.primes[static_cast<size_t>(k) % cfg.primes.size()];
    return p == 0 ? Field::function() : Field::padic(p);
}

Outcome tree_length(const CorpusConfig& cfg, long index, Rng& rng)
{
    Field f = tree_field(cfg, index);
    int L = rng.uniform_int(1, 10);
    Mat2 A = random_sl2(rng, f, L);
    Outcome o;
    o.witness = {{"field", f.name()}, {"matrix", matrix_to_json(A)}};
    long formula = translation_length(A, f);
    auto orc = translation_length_oracle(A, f);
    long d0 = displacement(A, base_vertex(f));
    o.pass = orc.certified && orc.length == formula && d0 % 2 == 0;
    o.detail = {{"field", f.name()},       {"word_length", L},          {"formula", formula},
                {"oracle", orc.length},    {"certified", orc.certified}, {"steps", orc.steps},
                {"base_displacement", d0}, {"method", orc.method}};
    if (!o.pass)
        o.message = "oracle differs from 2 max(0, -v(tr)) or odd displacement";
    return o;
}

Outcome tree_commutator(const CorpusConfig& cfg, long index, Rng& rng)
{
    long t = 1 + index % 5;
    Field f = tree_field(cfg, index / 5);
    Mat2 X = random_stabilizer(rng, f, t), Y = random_stabilizer(rng, f, t);
    Outcome o;
    o.witness = {{"field", f.name()}, {"t", t}, {"x", matrix_to_json(X)}, {"y", matrix_to_json(Y)}};
    auto c = arc_commutator_check(t, X, Y, f);
    o.pass = c.holds;
    o.detail = {{"field", f.name()},
                {"t", t},
                {"valuation", c.valuation == kInfValuation ? json("inf") : json(c.valuation)}};
    if (!o.pass)
        o.message = "v(tr[X,Y] - 2) < t";
    return o;
}

// ---- arc systems ----

struct ArcInstance {
    ArcModel model;
    LabeledInstance lab;
    WeightSystem weights;
    std::map<int, int> widths;
    Rat q;
};

ArcInstance arc_instance(const CorpusConfig& cfg, long index, Rng& rng, bool planar = false)
{
    ArcModelParams p;
    p.theta = rng.uniform_int(2, std::max(2, cfg.max_theta));
    p.planar = planar;
    ArcModel m = random_arc_model(rng, p);
    Rat q(2 + index % 2);
    auto lab = random_labels(rng, m.arcs(), q);
    WeightSystem w;
    for (auto& [a, l] : lab.labels)
        if (!w.count(l))
            w[l] = Rat(rng.uniform_int(1, 20), rng.uniform_int(1, 5));
    auto widths = random_widths(rng, m);
    return {std::move(m), std::move(lab), std::move(w), std::move(widths), q};
}

json weights_to_json(const WeightSystem& w)
{
    json j = json::object();
    for (auto& [l, x] : w)
        j[std::to_string(l)] = to_string(x);
    return j;
}

json arc_witness(const ArcInstance& a, const ArcModelSpec& model)
{
    json excl = json::array();
    for (int e : a.lab.excluded)
        excl.push_back(e);
    return {{"model", arcmodel_to_json(model)},
            {"labels", int_map_to_json(a.lab.labels)},
            {"excluded", excl},
            {"weights", weights_to_json(a.weights)},
            {"widths", int_map_to_json(a.widths)},
            {"q", to_string(a.q)}};
}

Outcome keyineq(const CorpusConfig& cfg, long index, Rng& rng)
{
    ArcInstance a = arc_instance(cfg, index, rng);
    Outcome o;
    o.witness = arc_witness(a, a.model.spec());
    auto r = key_inequality_subgraph(a.model, a.lab.labels, a.weights, a.lab.excluded, a.q);
    o.pass = r.checks.all();
    o.detail = {{"theta", a.model.num_arcs()}, {"q", to_string(a.q)},           {"m", r.m},
                {"k", r.k},                    {"chi", r.checks.chi},            {"lhs", to_string(r.checks.lhs)},
                {"rhs", r.checks.rhs},         {"gamma1_edges", r.gamma1.num_edges()}};
    if (!o.pass)
        o.message = "failed " + r.checks.failed();
    return o;
}

Outcome keycons(const CorpusConfig& cfg, long index, Rng& rng)
{
    ArcInstance a = arc_instance(cfg, index, rng);
    Widening W = widen_model(a.model, a.widths);
    Outcome o;
    o.witness = arc_witness(a, W.fine.spec());
    o.witness.erase("widths");
    auto r = key_consequence(W.fine, a.lab.labels, a.lab.excluded, a.q, cfg.prec);
    o.pass = r.checks.all();
    o.detail = {{"theta", a.model.num_arcs()},
                {"theta0", W.fine.num_arcs()},
                {"q", to_string(a.q)},
                {"K_edges", r.K.num_edges()},
                {"K0_edges", r.K0.num_edges()},
                {"witness_route", r.witness_route},
                {"length_bound", report_to_json(r.checks.length_bound)}};
    if (!o.pass)
        o.message = "failed " + r.checks.failed();
    return o;
}

Outcome standard_weights_suite(const CorpusConfig& cfg, long index, Rng& rng)
{
    ArcInstance a = arc_instance(cfg, index, rng);
    Widening W = widen_model(a.model, a.widths);
    std::vector<int> es;
    for (const auto& e : a.model.spec().edges)
        if (rng.coin())
            es.push_back(e.id);
    Subgraph G = Subgraph::from_edge_ids(a.model.graph(), es);
    Outcome o;
    o.witness = arc_witness(a, a.model.spec());
    o.witness["subgraph_edges"] = es;
    auto c = standard_weights_check(W, a.model, a.lab.labels, G);
    o.pass = c.holds;
    o.detail = {{"length0", c.length0}, {"bound", to_string(c.bound)}, {"edges", G.num_edges()}};
    if (!o.pass)
        o.message = "length of the associated subgraph exceeds (3/2) lambda";
    return o;
}

Outcome dual_genus(const CorpusConfig& cfg, long, Rng& rng)
{
    ArcModelParams p;
    p.theta = rng.uniform_int(2, std::max(2, cfg.max_theta));
    p.planar = true;
    ArcModel m = random_arc_model(rng, p);
    Outcome o;
    o.witness = arcmodel_to_json(m.spec());
    Multigraph d = dual_graph(m);
    int b1 = components_and_betti(d).total_betti();
    o.pass = m.all_planar() && b1 >= m.genus();
    o.detail = {{"theta", m.num_arcs()}, {"regions", d.num_vertices()}, {"b1", b1}, {"genus", m.genus()}};
    if (!o.pass)
        o.message = "b1(dual) < genus";
    return o;
}

// ---- plane geometry ----

Outcome minkowski(const CorpusConfig&, long, Rng& rng)
{
    auto B = random_lattice_free_parallelogram(rng);
    Outcome o;
    o.witness = {{"v1", vec_to_json(B.v1)}, {"v2", vec_to_json(B.v2)}};
    auto m = minkowski_check(B);
    o.pass = m.holds && !m.interior && m.area <= 4;
    o.detail = {{"area", to_string(m.area)}, {"interior", m.interior.has_value()}};
    if (!o.pass)
        o.message = "lattice-free parallelogram with area above 4";
    return o;
}

Outcome knot_chain(const CorpusConfig& cfg, long, Rng& rng)
{
    auto t = random_chain_tuple(rng);
    Outcome o;
    o.witness = {{"alpha1", class_to_json(t.a1)},
                 {"alpha2", class_to_json(t.a2)},
                 {"mu", class_to_json(t.mu)},
                 {"t", to_string(t.t)}};
    auto c = knot_chain_verify(t.a1, t.a2, t.mu, t.t, cfg.chain);
    o.pass = c.report.holds() && c.identity_holds;
    o.detail = report_to_json(c.report);
    o.detail["q1"] = to_string(c.q1);
    o.detail["Delta"] = to_string(c.Delta);
    o.detail["ratio"] = to_string(c.ratio);
    if (!o.pass)
        o.message = c.report.note.empty() ? "q1^2/Delta > 2 ratio" : c.report.note;
    return o;
}

// ---- bounds ----

std::vector<std::pair<long, long>> torus_pairs()
{
    std::vector<std::pair<long, long>> v;
    for (long p = 2; p <= 25; ++p)
        for (long q = p + 1; q <= 25; ++q)
            if (std::gcd(p, q) == 1)
                v.push_back({p, q});
    return v;
}

Outcome torus(const CorpusConfig& cfg, long index, Rng&)
{
    static const auto pairs = torus_pairs();
    auto [p, q] = pairs[static_cast<size_t>(index)];
    auto k = torus_knot_data(p, q);
    Outcome o;
    o.witness = {{"p", p}, {"q", q}};
    o.detail = {{"p", p}, {"q", q}, {"slope", k.slope}, {"genus", k.genus}};
    if (k.genus < 2) {
        o.excluded = true;
        o.message = "genus below 2 is outside the corollary's hypotheses";
        return o;
    }
    auto r = easy_corollary(k.genus, Rat(k.slope), cfg.prec);
    o.pass = r.holds();
    o.detail["report"] = report_to_json(r);
    if (!o.pass)
        o.message = "corollary bound not certified";
    return o;
}

constexpr long kCalcLo = 333, kCalcHi = 1000001, kCalcChunk = 10000;

Outcome calculus(const CorpusConfig& cfg, long index, Rng&)
{
    long lo = kCalcLo + index * kCalcChunk, hi = std::min(kCalcHi, lo + kCalcChunk);
    auto s = f_monotone_check(lo, hi, cfg.prec, true);
    Outcome o;
    o.witness = {{"lo", lo}, {"hi", hi}};
    o.pass = s.ok();
    o.detail = {{"lo", lo},
                {"hi", hi},
                {"checked", s.checked},
                {"failures", s.failures},
                {"inconclusive", s.inconclusive},
                {"worst_n", s.worst_n},
                {"worst_margin", s.worst_margin}};
    if (index == 0) {
        o.detail["f334_vs_f333"] = report_to_json(s.f334_vs_f333);
        o.detail["xfprime_333_positive"] = report_to_json(s.xfprime_333_positive);
        o.detail["xfprime_334_negative"] = report_to_json(s.xfprime_334_negative);
    }
    if (!o.pass)
        o.message = "f(n+1) <= f(n) not certified on the whole chunk";
    return o;
}

const std::vector<long>& precalc_grid()
{
    static const auto g = log_grid(2, 1000000);
    return g;
}

Outcome precalculus(const CorpusConfig& cfg, long index, Rng&)
{
    long x = precalc_grid()[static_cast<size_t>(index)];
    auto c = choose_q_tau(Rat(x), cfg.prec);
    Outcome o;
    o.witness = {{"x", x}};
    o.pass = c.cert1.holds() && c.cert2.holds();
    o.detail = {{"x", x},
                {"mu", c.mu},
                {"q", to_string(c.q)},
                {"tau", to_string(c.tau)},
                {"cert1", report_to_json(c.cert1)},
                {"cert2", report_to_json(c.cert2)}};
    if (!o.pass)
        o.message = "choice of q and tau not certified";
    return o;
}

json knot_json(const KnotData& d)
{
    return {{"g1", d.g1}, {"m1", d.m1}, {"g2", d.g2}, {"m2", d.m2}, {"q1", d.q1}, {"delta", d.delta}};
}

Outcome constants(const CorpusConfig& cfg, long, Rng& rng)
{
    KnotData d = random_knot_data(rng);
    Outcome o;
    o.witness = knot_json(d);
    bool easy = easy_constant_consistent(d, cfg.chain);
    auto qd = qualitative_derivation(d, cfg.prec);
    o.pass = easy && qd.ok();
    o.detail = {{"chi2", d.chi2},
                {"easy_consistent", easy},
                {"chibound", report_to_json(qd.chibound)},
                {"b_le_c", report_to_json(qd.b_le_c)},
                {"envelope", report_to_json(qd.envelope)}};
    if (-d.chi2 >= 333) {
        auto hx = kappa_hard_vs_explicit(d, cfg.prec);
        o.pass = o.pass && hx.holds();
        o.detail["hard_vs_explicit"] = report_to_json(hx);
    }
    if (!o.pass)
        o.message = "constant chain does not close";
    return o;
}

const std::map<std::string, SuiteFn>& suites()
{
    static const std::map<std::string, SuiteFn> m{
        {"bigirth-trivalent", bigirth_trivalent},
        {"bigirth-general", bigirth_general},
        {"tree-length", tree_length},
        {"tree-commutator", tree_commutator},
        {"keyineq", keyineq},
        {"keycons", keycons},
        {"standard-weights", standard_weights_suite},
        {"dual-genus", dual_genus},
        {"minkowski", minkowski},
        {"knot-chain", knot_chain},
        {"torus", torus},
        {"calculus", calculus},
        {"precalculus", precalculus},
        {"constants", constants},
    };
    return m;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> v{"bigirth-trivalent", "bigirth-general", "tree-length", "tree-commutator",
                                            "keyineq",           "keycons",         "standard-weights",
                                            "dual-genus",        "minkowski",       "knot-chain",
                                            "torus",             "calculus",        "precalculus",
                                            "constants"};
    return v;
}

bool known_suite(const std::string& s) { return suites().count(s) > 0; }

long suite_size(const std::string& s)
{
    if (s == "torus")
        return static_cast<long>(torus_pairs().size());
    if (s == "calculus")
        return (kCalcHi - kCalcLo + kCalcChunk - 1) / kCalcChunk;
    if (s == "precalculus")
        return static_cast<long>(precalc_grid().size());
    return -1;
}

InstanceResult run_instance(const CorpusConfig& cfg, long index)
{
    auto it = suites().find(cfg.suite);
    if (it == suites().end())
        fail(ErrorKind::Usage, "unknown suite " + cfg.suite);
    long cap = suite_size(cfg.suite);
    if (index < 0 || (cap >= 0 && index >= cap))
        fail(ErrorKind::Usage, "instance index out of range");
    InstanceResult r;
    r.index = index;
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(cfg.seed, static_cast<std::uint64_t>(index));
    try {
        Outcome o = it->second(cfg, index, rng);
        r.status = o.excluded ? "excluded" : o.pass ? "pass" : "fail";
        r.message = o.message;
        r.detail = std::move(o.detail);
        if (!o.pass && !o.excluded)
            r.witness = std::move(o.witness);
    } catch (const Error& e) {
        r.status = "error";
        r.message = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RunReport corpus_run(const CorpusConfig& cfg)
{
    if (!known_suite(cfg.suite))
        fail(ErrorKind::Usage, "unknown suite " + cfg.suite);
    RunReport rep;
    rep.config = cfg;
    long n = std::max(0L, cfg.count);
    long cap = suite_size(cfg.suite);
    if (cap >= 0)
        n = std::min(n, cap);
    rep.instances.resize(static_cast<size_t>(n));
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.serial) {
        for (long i = 0; i < n; ++i)
            rep.instances[static_cast<size_t>(i)] = run_instance(cfg, i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i)
            rep.instances[static_cast<size_t>(i)] = run_instance(cfg, i);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : rep.instances) {
        if (r.status == "pass")
            ++rep.passed;
        else if (r.status == "fail")
            ++rep.failed;
        else if (r.status == "excluded")
            ++rep.excluded;
        else
            ++rep.errors;
    }
    if (!cfg.witness_dir.empty()) {
        for (const auto& r : rep.instances)
            if (r.status == "fail") {
                std::filesystem::create_directories(cfg.witness_dir);
                write_json_file(cfg.witness_dir + "/" + cfg.suite + "-" + std::to_string(r.index) + ".json",
                                r.witness);
            }
    }
    return rep;
}

json report_json(const RunReport& r)
{
    json primes = json::array();
    for (long p : r.config.primes)
        primes.push_back(p);
    json j;
    j["schema"] = kReportSchema;
    j["suite"] = r.config.suite;
    j["rng"] = kRngName;
    j["seed"] = r.config.seed;
    j["count"] = r.instances.size();
    j["digits"] = r.config.prec.digits;
    j["chain_factor"] = to_string(r.config.chain.factor);
    j["max_theta"] = r.config.max_theta;
    j["max_vertices"] = r.config.max_vertices;
    j["primes"] = primes;
    j["summary"] = {{"passed", r.passed}, {"failed", r.failed}, {"errors", r.errors}, {"excluded", r.excluded}};
    if (r.config.timing)
        j["seconds"] = r.seconds;
    json inst = json::array();
    for (const auto& x : r.instances) {
        json e{{"index", x.index}, {"status", x.status}};
        if (!x.message.empty())
            e["message"] = x.message;
        e["detail"] = x.detail;
        if (!x.witness.is_null())
            e["witness"] = x.witness;
        if (r.config.timing)
            e["seconds"] = x.seconds;
        inst.push_back(e);
    }
    j["instances"] = inst;
    return j;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// Flattens nested objects with dotted keys.
void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else {
        out[prefix] = j.is_string() ? j.get<std::string>() : j.dump();
    }
}

} // namespace

std::string report_csv(const RunReport& r)
{
    std::vector<std::map<std::string, std::string>> rows;
    std::vector<std::string> cols;
    for (const auto& x : r.instances) {
        std::map<std::string, std::string> row;
        flatten(x.detail, "", row);
        for (const auto& [k, v] : row)
            if (std::find(cols.begin(), cols.end(), k) == cols.end())
                cols.push_back(k);
        rows.push_back(std::move(row));
    }
    std::ostringstream os;
    os << "suite,seed,index,status,message";
    for (const auto& c : cols)
        os << "," << csv_field(c);
    if (r.config.timing)
        os << ",seconds";
    os << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& x = r.instances[i];
        os << r.config.suite << "," << r.config.seed << "," << x.index << "," << x.status << ","
           << csv_field(x.message);
        for (const auto& c : cols) {
            auto it = rows[i].find(c);
            os << "," << (it == rows[i].end() ? "" : csv_field(it->second));
        }
        if (r.config.timing)
            os << "," << x.seconds;
        os << "\n";
    }
    return os.str();
}

} // namespace slopebound
