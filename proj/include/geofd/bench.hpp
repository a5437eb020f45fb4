#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geofd/dgp.hpp"
#include "geofd/lof.hpp"
#include "geofd/metric.hpp"

namespace geofd::bench {

enum class PipelineKind { RawLof, MdsLof, IsomapLof };

// One scoring pipeline: functional metric, optional derivative
// preprocessing, embedding choice and LOF neighborhood size
// (defaults to round(0.75 n) per dataset).
struct MethodSpec {
    PipelineKind pipeline = PipelineKind::MdsLof;
    MetricSpec metric = MetricSpec::lp(2.0);
    int isomap_k = 5;
    bool derivative = false;
    std::optional<int> min_pts;

    // Grammar: {raw | mds | isomap:<k>}:<metric>[+deriv], e.g.
    // "mds:lp:2", "isomap:90:lp:10+deriv", "raw:wasserstein1".
    static MethodSpec parse(const std::string& text);

    std::string id(int embed_dim) const;
};

// A DGP template; when n1000_at_r001 is set, replications at r = 0.01 use
// n = 1000 regardless of the template's n.
struct DgpTemplate {
    dgp::DgpConfig cfg;
    bool n1000_at_r001 = true;
};

struct BenchmarkConfig {
    std::vector<DgpTemplate> dgps;
    std::vector<MethodSpec> methods;
    std::vector<double> r_values;
    int B = 500;
    std::uint64_t base_seed = 0;
    int embed_dim = 5;
};

struct AucRecord {
    std::string dgp;
    std::string method;
    double r = 0.0;
    int replication = 0;
    std::uint64_t seed = 0;
    double auc = 0.0;
    double wall_ms = 0.0;               // excluded from the deterministic CSV
    std::optional<double> spearman_vs_first; // score correlation diagnostic
    std::string error;                  // nonempty = failed cell, auc invalid
};

struct SummaryRow {
    std::string dgp;
    std::string method;
    double r = 0.0;
    int count = 0;  // successful replications
    int errors = 0;
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
};

struct BenchmarkResult {
    std::vector<AucRecord> records;
    std::vector<SummaryRow> summary;
};

// Applies one method to a dataset and returns its scores.
ScoreVector run_method(const MethodSpec& method, const FunctionalDataset& ds,
                       int embed_dim);

// Full replication protocol: per (dgp, r, replication) cell, derive a
// substream seed, generate one dataset and run every method on it.
// Replications execute in parallel; results do not depend on thread count.
BenchmarkResult run_benchmark(const BenchmarkConfig& cfg);

void validate(const BenchmarkConfig& cfg);

// Deterministic outputs (no wall times).
void write_records_csv(const BenchmarkResult& res, const std::string& path);
std::string summary_json(const BenchmarkResult& res);

// Wall-clock sidecar; contents vary run to run.
void write_timings_csv(const BenchmarkResult& res, const std::string& path);

} // namespace geofd::bench
