#include "geofd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>

#include "geofd/csv.hpp"
#include "geofd/deriv.hpp"
#include "geofd/isomap.hpp"
#include "geofd/rng.hpp"
#include "geofd/stats.hpp"

namespace geofd::bench {

MethodSpec MethodSpec::parse(const std::string& text) {
    MethodSpec spec;
    std::string body = text;
    if (body.size() >= 6 && body.substr(body.size() - 6) == "+deriv") {
        spec.derivative = true;
        body = body.substr(0, body.size() - 6);
    }
    if (body.rfind("raw:", 0) == 0) {
        spec.pipeline = PipelineKind::RawLof;
        spec.metric = MetricSpec::parse(body.substr(4));
    } else if (body.rfind("mds:", 0) == 0) {
        spec.pipeline = PipelineKind::MdsLof;
        spec.metric = MetricSpec::parse(body.substr(4));
    } else if (body.rfind("isomap:", 0) == 0) {
        spec.pipeline = PipelineKind::IsomapLof;
        const std::string rest = body.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ValidationError("method '" + text + "' is missing a metric");
        try {
            spec.isomap_k = std::stoi(rest.substr(0, colon));
        } catch (const std::exception&) {
            throw ValidationError("cannot parse isomap k in '" + text + "'");
        }
        if (spec.isomap_k < 1)
            throw ValidationError("isomap k must be >= 1 in '" + text + "'");
        spec.metric = MetricSpec::parse(rest.substr(colon + 1));
    } else {
        throw ValidationError("unknown pipeline in method '" + text +
                              "' (expected raw:, mds: or isomap:<k>:)");
    }
    return spec;
}

std::string MethodSpec::id(int embed_dim) const {
    std::string s;
    switch (pipeline) {
        case PipelineKind::RawLof:
            s = "raw";
            break;
        case PipelineKind::MdsLof:
            s = "mds" + std::to_string(embed_dim);
            break;
        case PipelineKind::IsomapLof:
            s = "isomap" + std::to_string(embed_dim) + "-k" + std::to_string(isomap_k);
            break;
    }
    s += "(" + metric.tag() + ")";
    if (derivative) s += "+deriv";
    if (min_pts) s += "[minPts=" + std::to_string(*min_pts) + "]";
    return s;
}

void validate(const BenchmarkConfig& cfg) {
    if (cfg.B < 1) throw ValidationError("benchmark: B must be >= 1");
    if (cfg.embed_dim < 1) throw ValidationError("benchmark: embed_dim must be >= 1");
    if (cfg.dgps.empty()) throw ValidationError("benchmark: DGP list is empty");
    if (cfg.methods.empty()) throw ValidationError("benchmark: method list is empty");
    if (cfg.r_values.empty()) throw ValidationError("benchmark: r list is empty");
    for (double r : cfg.r_values)
        if (!(r >= 0.0 && r <= 0.1))
            throw ValidationError("benchmark: r values must lie in [0, 0.1]");
}

ScoreVector run_method(const MethodSpec& method, const FunctionalDataset& ds,
                       int embed_dim) {
    const FunctionalDataset* input = &ds;
    std::optional<FunctionalDataset> deriv_ds;
    if (method.derivative) {
        deriv_ds = to_derivative(ds);
        input = &*deriv_ds;
    }
    const auto D = pairwise(*input, method.metric);
    LofConfig lof_cfg{method.min_pts ? *method.min_pts : default_min_pts(ds.n())};
    ScoreVector scores;
    switch (method.pipeline) {
        case PipelineKind::RawLof:
            scores = lof_from_distances(D, lof_cfg);
            break;
        case PipelineKind::MdsLof:
            scores = lof_on_embedding(classical_mds(D, embed_dim), lof_cfg);
            break;
        case PipelineKind::IsomapLof:
            scores = lof_on_embedding(isomap(D, method.isomap_k, embed_dim), lof_cfg);
            break;
    }
    scores.method_tag = method.id(embed_dim);
    return scores;
}

BenchmarkResult run_benchmark(const BenchmarkConfig& cfg) {
    validate(cfg);
    const auto n_dgps = static_cast<int>(cfg.dgps.size());
    const auto n_methods = static_cast<int>(cfg.methods.size());
    const auto n_r = static_cast<int>(cfg.r_values.size());
    const std::int64_t n_cells =
        static_cast<std::int64_t>(n_dgps) * n_r * cfg.B;

    BenchmarkResult res;
    res.records.resize(static_cast<std::size_t>(n_cells) *
                       static_cast<std::size_t>(n_methods));

    // Cell index ((dgp * |r|) + r) * B + b; one substream per cell so any
    // execution order produces the same records.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t cell = 0; cell < n_cells; ++cell) {
        const int b = static_cast<int>(cell % cfg.B);
        const int r_idx = static_cast<int>((cell / cfg.B) % n_r);
        const int dgp_idx = static_cast<int>(cell / (static_cast<std::int64_t>(cfg.B) * n_r));
        const auto& tmpl = cfg.dgps[static_cast<std::size_t>(dgp_idx)];
        const double r = cfg.r_values[static_cast<std::size_t>(r_idx)];

        dgp::DgpConfig dcfg = tmpl.cfg;
        dcfg.r = r;
        if (tmpl.n1000_at_r001 && std::abs(r - 0.01) < 1e-12) dcfg.n = 1000;
        dcfg.seed = Rng::substream_seed(cfg.base_seed, static_cast<std::uint64_t>(cell));

        const auto slot = static_cast<std::size_t>(cell) *
                          static_cast<std::size_t>(n_methods);

        std::optional<FunctionalDataset> ds;
        std::string gen_error;
        try {
            ds = dgp::generate(dcfg);
        } catch (const std::exception& e) {
            gen_error = std::string("generate: ") + e.what();
        }

        std::optional<std::vector<double>> first_scores;
        for (int mi = 0; mi < n_methods; ++mi) {
            const auto& method = cfg.methods[static_cast<std::size_t>(mi)];
            AucRecord rec;
            rec.dgp = tmpl.cfg.name;
            rec.method = method.id(cfg.embed_dim);
            rec.r = r;
            rec.replication = b;
            rec.seed = dcfg.seed;
            if (!gen_error.empty()) {
                rec.error = gen_error;
            } else {
                const auto t0 = std::chrono::steady_clock::now();
                try {
                    auto scores = run_method(method, *ds, cfg.embed_dim);
                    rec.auc = auc(scores.scores, *ds->labels);
                    if (mi == 0) {
                        first_scores = scores.scores;
                    } else if (first_scores) {
                        try {
                            rec.spearman_vs_first =
                                spearman(scores.scores, *first_scores);
                        } catch (const std::exception&) {
                            // constant scores have no rank correlation
                        }
                    }
                } catch (const std::exception& e) {
                    rec.error = e.what();
                }
                const auto t1 = std::chrono::steady_clock::now();
                rec.wall_ms =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
            }
            res.records[slot + static_cast<std::size_t>(mi)] = std::move(rec);
        }
    }

    // Summaries: deterministic fold over the (already cell-ordered) records.
    for (int dgp_idx = 0; dgp_idx < n_dgps; ++dgp_idx)
        for (int r_idx = 0; r_idx < n_r; ++r_idx)
            for (int mi = 0; mi < n_methods; ++mi) {
                SummaryRow row;
                row.dgp = cfg.dgps[static_cast<std::size_t>(dgp_idx)].cfg.name;
                row.method =
                    cfg.methods[static_cast<std::size_t>(mi)].id(cfg.embed_dim);
                row.r = cfg.r_values[static_cast<std::size_t>(r_idx)];
                std::vector<double> aucs;
                for (int b = 0; b < cfg.B; ++b) {
                    const auto cell =
                        (static_cast<std::int64_t>(dgp_idx) * n_r + r_idx) * cfg.B + b;
                    const auto& rec =
                        res.records[static_cast<std::size_t>(cell) *
                                        static_cast<std::size_t>(n_methods) +
                                    static_cast<std::size_t>(mi)];
                    if (rec.error.empty())
                        aucs.push_back(rec.auc);
                    else
                        ++row.errors;
                }
                row.count = static_cast<int>(aucs.size());
                if (!aucs.empty()) {
                    row.median = quantile(aucs, 0.5);
                    row.q1 = quantile(aucs, 0.25);
                    row.q3 = quantile(aucs, 0.75);
                }
                res.summary.push_back(std::move(row));
            }
    return res;
}

void write_records_csv(const BenchmarkResult& res, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << "dgp,method,r,replication,seed,auc,spearman_vs_first,error\n";
    for (const auto& rec : res.records) {
        out << rec.dgp << ',' << rec.method << ',' << fmt_double(rec.r) << ','
            << rec.replication << ',' << rec.seed << ',';
        if (rec.error.empty()) out << fmt_double(rec.auc);
        out << ',';
        if (rec.spearman_vs_first) out << fmt_double(*rec.spearman_vs_first);
        // Keep the row parseable: commas in error messages become semicolons.
        std::string err = rec.error;
        for (auto& ch : err)
            if (ch == ',' || ch == '\n') ch = ';';
        out << ',' << err << '\n';
    }
}

void write_timings_csv(const BenchmarkResult& res, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << "dgp,method,r,replication,wall_ms\n";
    for (const auto& rec : res.records)
        out << rec.dgp << ',' << rec.method << ',' << fmt_double(rec.r) << ','
            << rec.replication << ',' << fmt_double(rec.wall_ms) << '\n';
}

std::string summary_json(const BenchmarkResult& res) {
    std::ostringstream out;
    out << "{\n  \"cells\": [\n";
    for (std::size_t i = 0; i < res.summary.size(); ++i) {
        const auto& row = res.summary[i];
        out << "    {\"dgp\": \"" << row.dgp << "\", \"method\": \"" << row.method
            << "\", \"r\": " << fmt_double(row.r) << ", \"count\": " << row.count
            << ", \"errors\": " << row.errors;
        if (row.count > 0)
            out << ", \"median\": " << fmt_double(row.median)
                << ", \"q1\": " << fmt_double(row.q1)
                << ", \"q3\": " << fmt_double(row.q3);
        out << "}" << (i + 1 < res.summary.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

} // namespace geofd::bench
