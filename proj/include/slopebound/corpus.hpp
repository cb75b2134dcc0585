#pragma once

#include "slopebound/bounds.hpp"
#include "slopebound/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace slopebound {

inline constexpr const char* kReportSchema = "slopebound.report/1";

struct CorpusConfig {
    std::string suite;
    long count = 100;
    std::uint64_t seed = 1;
    Precision prec;
    int max_theta = 40;                 // arc-model suites
    int max_vertices = 14;              // bigirth-trivalent
    std::vector<long> primes{2, 3, 5};  // tree suites
    ChainConfig chain;
    bool serial = false;
    bool timing = false;                // adds seconds to the report, breaking byte equality
    std::string witness_dir;            // failure witnesses are written here when set
};

struct InstanceResult {
    long index = 0;
    std::string status;  // pass, fail, error, excluded
    std::string message;
    json detail;
    json witness;        // replayable input of the single-instance subcommand
    double seconds = 0;
};

struct RunReport {
    CorpusConfig config;
    std::vector<InstanceResult> instances;
    long passed = 0, failed = 0, errors = 0, excluded = 0;
    double seconds = 0;
    bool ok() const { return failed == 0 && errors == 0; }
};

const std::vector<std::string>& suite_names();
bool known_suite(const std::string& s);
// Fixed instance lists (torus, calculus, precalculus) cap the count; -1 means unbounded.
long suite_size(const std::string& s);

InstanceResult run_instance(const CorpusConfig& cfg, long index);
RunReport corpus_run(const CorpusConfig& cfg);

json report_json(const RunReport& r);
std::string report_csv(const RunReport& r);

} // namespace slopebound
