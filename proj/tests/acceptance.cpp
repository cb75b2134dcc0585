// Runs the pinned acceptance corpora and prints one line per criterion.
#include "slopebound/bounds.hpp"
#include "slopebound/corpus.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace slopebound;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr unsigned kDigits = 50;

struct Outcome {
    bool ok = true;
    std::string info;
};

struct Timed {
    RunReport rep;
    double seconds;
};

Timed run(const std::string& suite, long count)
{
    CorpusConfig c;
    c.suite = suite;
    c.count = count;
    c.seed = kSeed;
    c.prec = Precision{kDigits};
    auto t0 = std::chrono::steady_clock::now();
    auto r = corpus_run(c);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(r), s};
}

std::string summary(const std::string& suite, const Timed& t)
{
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s %ld/%zu pass, %ld fail, %ld error, %ld excluded, %.1fs", suite.c_str(),
                  t.rep.passed, t.rep.instances.size(), t.rep.failed, t.rep.errors, t.rep.excluded, t.seconds);
    return buf;
}

// Every instance passes, the count is exact and the run is within the time limit (0 = none).
void expect_clean(Outcome& o, const std::string& suite, const Timed& t, long count, double limit)
{
    if (!o.info.empty())
        o.info += "; ";
    o.info += summary(suite, t);
    if (static_cast<long>(t.rep.instances.size()) != count || t.rep.passed != count) {
        o.ok = false;
        for (const auto& i : t.rep.instances)
            if (i.status != "pass") {
                o.info += " [first bad #" + std::to_string(i.index) + ": " + i.message + "]";
                break;
            }
    }
    if (limit > 0 && t.seconds >= limit) {
        o.ok = false;
        o.info += " [over " + std::to_string(static_cast<int>(limit)) + "s]";
    }
}

Outcome simple(const std::string& suite, long count, double limit = 0)
{
    Outcome o;
    expect_clean(o, suite, run(suite, count), count, limit);
    return o;
}

Outcome split_check(const std::string& suite, long count, const char* key, long per)
{
    Outcome o;
    auto t = run(suite, count);
    expect_clean(o, suite, t, count, 0);
    std::map<std::string, long> by;
    for (const auto& i : t.rep.instances)
        if (i.status == "pass")
            by[i.detail.at(key).is_string() ? i.detail.at(key).get<std::string>() : i.detail.at(key).dump()]++;
    for (const auto& [k, n] : by)
        if (n != per) {
            o.ok = false;
            o.info += " [" + std::string(key) + "=" + k + " has " + std::to_string(n) + "]";
        }
    return o;
}

Outcome torus()
{
    Outcome o;
    auto t = run("torus", 1000);
    o.info = summary("torus", t);
    o.ok = t.rep.instances.size() == 175 && t.rep.failed == 0 && t.rep.errors == 0 && t.rep.excluded == 1;
    for (const auto& i : t.rep.instances)
        if (i.status == "excluded") {
            bool trefoil = i.detail.at("p") == 2 && i.detail.at("q") == 3;
            o.ok = o.ok && trefoil;
            o.info += "; excluded (" + i.detail.at("p").dump() + "," + i.detail.at("q").dump() + ") genus " +
                      i.detail.at("genus").dump();
        }
    return o;
}

Outcome calculus()
{
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto c = run("calculus", 1000);
    expect_clean(o, "calculus", c, 100, 0);
    long expect_lo = 333;
    for (const auto& i : c.rep.instances) {
        if (i.detail.at("lo") != expect_lo)
            o.ok = false;
        expect_lo = i.detail.at("hi").get<long>();
    }
    if (expect_lo != 1000001) {
        o.ok = false;
        o.info += " [sweep ends at " + std::to_string(expect_lo) + "]";
    }
    Precision p{kDigits};
    bool f334 = f_calculus(Rat(334), p).certainly_less(f_calculus(Rat(333), p));
    bool signs = xfprime_calculus(Rat(333), p).certainly_positive() && xfprime_calculus(Rat(334), p).certainly_negative();
    o.ok = o.ok && f334 && signs;
    o.info += std::string("; f(334)<f(333) ") + (f334 ? "yes" : "no") + ", x f'(x) signs " + (signs ? "yes" : "no");
    auto pc = run("precalculus", 1000);
    expect_clean(o, "precalculus", pc, static_cast<long>(log_grid(2, 1000000).size()), 0);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= 300) {
        o.ok = false;
        o.info += " [over 300s]";
    }
    return o;
}

} // namespace

int main()
{
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"bigirth trivalent bound", [] { return simple("bigirth-trivalent", 500, 60); }},
        {"general bigirth bound", [] { return simple("bigirth-general", 500); }},
        {"tree translation length", [] { return simple("tree-length", 500, 120); }},
        {"fixed-arc commutators", [] { return split_check("tree-commutator", 500, "t", 100); }},
        {"key inequality", [] { return split_check("keyineq", 200, "q", 100); }},
        {"key consequence", [] { return split_check("keycons", 200, "q", 100); }},
        {"standard weights", [] { return simple("standard-weights", 200); }},
        {"dual graph genus", [] { return simple("dual-genus", 200); }},
        {"minkowski and knot chain",
         [] {
             Outcome o;
             expect_clean(o, "minkowski", run("minkowski", 1000), 1000, 0);
             expect_clean(o, "knot-chain", run("knot-chain", 500), 500, 0);
             return o;
         }},
        {"torus knot corollary", torus},
        {"calculus and precalculus", calculus},
        {"constant consistency", [] { return simple("constants", 100); }},
    };
    std::printf("acceptance: seed %llu, %u digits, inconclusive margin %g\n", static_cast<unsigned long long>(kSeed),
                kDigits, kInconclusiveMargin);
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.info = std::string("exception: ") + e.what();
        }
        failed += !o.ok;
        std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.info.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
