// geofd: geometric outlier detection for functional data.
//
// Subcommands: generate | embed | score | benchmark | gof | plot.
// Every command writes a <output>.manifest.json recording the resolved
// configuration; exit codes: 0 ok, 1 validation error, 2 runtime error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "geofd/bench.hpp"
#include "geofd/csv.hpp"
#include "geofd/deriv.hpp"
#include "geofd/dgp.hpp"
#include "geofd/isomap.hpp"
#include "geofd/lof.hpp"
#include "geofd/mds.hpp"
#include "geofd/stats.hpp"
#include "geofd/svg.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw geofd::ValidationError("cannot write file: " + path);
    out << content;
}

void write_manifest(const std::string& out_base, const std::string& command,
                    const json& config, const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs,
                    std::optional<std::uint64_t> seed = std::nullopt) {
    json m;
    m["command"] = command;
    m["config"] = config;
    if (seed) m["seed"] = *seed;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    m["version"] = kVersion;
    m["timestamp"] = timestamp_utc();
    write_text(out_base + ".manifest.json", m.dump(2) + "\n");
}

void set_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

// ---- generate -----------------------------------------------------------------

struct GenerateArgs {
    std::string dgp;
    int n = 100;
    double r = 0.1;
    int m = 50;
    std::uint64_t seed = 0;
    std::vector<std::string> params;
    std::string output;
};

int cmd_generate(const GenerateArgs& args) {
    geofd::dgp::DgpConfig cfg;
    cfg.name = args.dgp;
    cfg.n = args.n;
    cfg.r = args.r;
    cfg.m = args.m;
    cfg.seed = args.seed;
    for (const auto& kv : args.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw geofd::ValidationError("--param expects key=value, got '" + kv + "'");
        cfg.params[kv.substr(0, eq)] =
            geofd::parse_double(kv.substr(eq + 1), "in --param " + kv);
    }

    const auto ds = geofd::dgp::generate(cfg);
    geofd::write_csv(ds, args.output);

    json meta;
    meta["dgp"] = cfg.name;
    meta["seed"] = cfg.seed;
    json jcfg = {{"name", cfg.name}, {"n", cfg.n},       {"r", cfg.r},
                 {"m", cfg.m},       {"seed", cfg.seed}, {"params", cfg.params}};
    meta["cfg"] = jcfg;
    for (const auto& [key, value] : ds.meta) meta["provenance"][key] = value;
    write_text(args.output + ".meta.json", meta.dump(2) + "\n");
    write_manifest(args.output, "generate", jcfg, {}, {args.output}, cfg.seed);
    return 0;
}

// ---- embed / gof ----------------------------------------------------------------

struct EmbedArgs {
    std::string input;
    bool no_header = false;
    std::string label_column = "label";
    bool no_labels = false;
    std::string metric = "lp:2";
    std::string method = "mds";
    int dim = 5;
    bool deriv = false;
    std::string save_distances;
    std::string output;
};

geofd::FunctionalDataset load_dataset(const EmbedArgs& args) {
    std::optional<std::string> label;
    if (!args.no_header && !args.no_labels) {
        // Probe the header cells for the label column; absence is fine.
        std::ifstream in(args.input);
        std::string first, cell;
        std::getline(in, first);
        std::stringstream cells(first);
        while (std::getline(cells, cell, ','))
            if (cell == args.label_column) label = args.label_column;
    }
    return geofd::load_csv(args.input, !args.no_header, label);
}

struct MethodChoice {
    bool isomap = false;
    int k = 0;
};

MethodChoice parse_method(const std::string& text) {
    if (text == "mds") return {};
    if (text.rfind("isomap:", 0) == 0) {
        MethodChoice c;
        c.isomap = true;
        try {
            c.k = std::stoi(text.substr(7));
        } catch (const std::exception&) {
            throw geofd::ValidationError("cannot parse isomap k in '" + text + "'");
        }
        return c;
    }
    throw geofd::ValidationError("unknown method '" + text +
                                 "' (expected mds or isomap:<k>)");
}

int cmd_embed(const EmbedArgs& args) {
    auto ds = load_dataset(args);
    if (args.deriv) ds = geofd::to_derivative(ds);
    const auto spec = geofd::MetricSpec::parse(args.metric);
    const auto method = parse_method(args.method);
    const auto D = geofd::pairwise(ds, spec);
    if (!args.save_distances.empty())
        geofd::write_matrix_csv(D.d, args.save_distances);
    const auto emb = method.isomap ? geofd::isomap(D, method.k, args.dim)
                                   : geofd::classical_mds(D, args.dim);

    geofd::write_embedding_csv(emb.coords, ds.labels, args.output + ".embedding.csv");

    std::string eig = "index,eigenvalue\n";
    for (Eigen::Index i = 0; i < emb.eigenvalues.size(); ++i)
        eig += std::to_string(i + 1) + "," + geofd::fmt_double(emb.eigenvalues(i)) + "\n";
    write_text(args.output + ".eigenvalues.csv", eig);

    std::string gof = "dim,gof\n";
    for (int d = 1; d <= ds.n(); ++d)
        gof += std::to_string(d) + "," +
               geofd::fmt_double(geofd::gof_of(emb.eigenvalues, d)) + "\n";
    write_text(args.output + ".gof.csv", gof);

    json cfg = {{"input", args.input},   {"metric", spec.tag()},
                {"method", args.method}, {"dim", args.dim},
                {"deriv", args.deriv},   {"gof", emb.gof}};
    write_manifest(args.output, "embed", cfg, {args.input},
                   {args.output + ".embedding.csv", args.output + ".eigenvalues.csv",
                    args.output + ".gof.csv"});
    return 0;
}

int cmd_gof(const EmbedArgs& args) {
    auto ds = load_dataset(args);
    if (args.deriv) ds = geofd::to_derivative(ds);
    const auto spec = geofd::MetricSpec::parse(args.metric);
    const auto D = geofd::pairwise(ds, spec);
    const auto emb = geofd::classical_mds(D, 1);

    std::string gof = "dim,gof\n";
    for (int d = 1; d <= ds.n(); ++d)
        gof += std::to_string(d) + "," +
               geofd::fmt_double(geofd::gof_of(emb.eigenvalues, d)) + "\n";
    write_text(args.output, gof);

    json cfg = {{"input", args.input}, {"metric", spec.tag()}, {"deriv", args.deriv}};
    write_manifest(args.output, "gof", cfg, {args.input}, {args.output});
    return 0;
}

// ---- score -----------------------------------------------------------------------

struct ScoreArgs {
    std::string embedding;
    std::string distances;
    std::optional<int> min_pts; // default: round(0.75 n)
    std::string output;
};

int cmd_score(const ScoreArgs& args) {
    if (args.embedding.empty() == args.distances.empty())
        throw geofd::ValidationError(
            "score needs exactly one of --embedding or --distances");

    geofd::ScoreVector scores;
    std::optional<geofd::LabelVector> labels;
    int n = 0;
    std::string input;
    int resolved = 0;
    if (!args.embedding.empty()) {
        input = args.embedding;
        auto emb = geofd::load_embedding_csv(args.embedding);
        n = static_cast<int>(emb.coords.rows());
        labels = emb.labels;
        resolved = args.min_pts ? *args.min_pts : geofd::default_min_pts(n);
        scores = geofd::lof_from_distances(
            geofd::euclidean_pairwise(emb.coords, "euclidean(embedding)"),
            geofd::LofConfig{resolved});
    } else {
        input = args.distances;
        auto D = geofd::load_distance_csv(args.distances, "file");
        n = D.n();
        resolved = args.min_pts ? *args.min_pts : geofd::default_min_pts(n);
        scores = geofd::lof_from_distances(D, geofd::LofConfig{resolved});
    }

    geofd::write_scores_csv(scores.scores, labels, args.output);
    json cfg = {{"input", input},
                {"minPts", resolved},
                {"method", scores.method_tag}};
    write_manifest(args.output, "score", cfg, {input}, {args.output});
    return 0;
}

// ---- benchmark --------------------------------------------------------------------

struct BenchArgs {
    std::string config_file;
    std::string dgp;
    int n = 100;
    int m = 50;
    std::vector<std::string> methods;
    std::vector<double> r_values;
    int B = 0;
    std::optional<std::uint64_t> seed;
    int embed_dim = 0;
    std::string output;
};

std::vector<geofd::bench::MethodSpec> methods_from_json(const json& j) {
    std::vector<geofd::bench::MethodSpec> methods;
    for (const auto& m : j.value("methods", json::array())) {
        if (m.is_string()) {
            methods.push_back(geofd::bench::MethodSpec::parse(m.get<std::string>()));
            continue;
        }
        geofd::bench::MethodSpec spec;
        const std::string pipeline = m.value("pipeline", "mds");
        if (pipeline == "raw") {
            spec.pipeline = geofd::bench::PipelineKind::RawLof;
        } else if (pipeline == "mds") {
            spec.pipeline = geofd::bench::PipelineKind::MdsLof;
        } else if (pipeline == "isomap") {
            spec.pipeline = geofd::bench::PipelineKind::IsomapLof;
            spec.isomap_k = m.value("k", 5);
        } else {
            throw geofd::ValidationError("unknown pipeline '" + pipeline +
                                         "' in benchmark config");
        }
        spec.metric = geofd::MetricSpec::parse(m.value("metric", "lp:2"));
        spec.derivative = m.value("deriv", false);
        if (m.contains("min_pts")) spec.min_pts = m["min_pts"].get<int>();
        methods.push_back(std::move(spec));
    }
    return methods;
}

json method_json(const geofd::bench::MethodSpec& spec) {
    json m;
    switch (spec.pipeline) {
        case geofd::bench::PipelineKind::RawLof:
            m["pipeline"] = "raw";
            break;
        case geofd::bench::PipelineKind::MdsLof:
            m["pipeline"] = "mds";
            break;
        case geofd::bench::PipelineKind::IsomapLof:
            m["pipeline"] = "isomap";
            m["k"] = spec.isomap_k;
            break;
    }
    m["metric"] = spec.metric.tag();
    m["deriv"] = spec.derivative;
    if (spec.min_pts) m["min_pts"] = *spec.min_pts;
    return m;
}

geofd::bench::BenchmarkConfig build_bench_config(const BenchArgs& args) {
    geofd::bench::BenchmarkConfig cfg;
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in)
            throw geofd::ValidationError("cannot open config: " + args.config_file);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw geofd::ValidationError("malformed benchmark config: " +
                                         std::string(e.what()));
        }
        cfg.B = j.value("B", 500);
        cfg.base_seed = j.value("base_seed", 0ull);
        cfg.embed_dim = j.value("embed_dim", 5);
        for (const auto& r : j.value("r_values", std::vector<double>{}))
            cfg.r_values.push_back(r);
        for (const auto& d : j.value("dgps", json::array())) {
            geofd::bench::DgpTemplate tmpl;
            tmpl.cfg.name = d.value("name", "");
            tmpl.cfg.n = d.value("n", 100);
            tmpl.cfg.m = d.value("m", 50);
            if (d.contains("params"))
                for (const auto& [key, value] : d["params"].items())
                    tmpl.cfg.params[key] = value.get<double>();
            tmpl.n1000_at_r001 = d.value("n1000_at_r001", true);
            cfg.dgps.push_back(std::move(tmpl));
        }
        cfg.methods = methods_from_json(j);
    }
    // Inline flags override file values.
    if (!args.dgp.empty()) {
        geofd::bench::DgpTemplate tmpl;
        tmpl.cfg.name = args.dgp;
        tmpl.cfg.n = args.n;
        tmpl.cfg.m = args.m;
        cfg.dgps = {std::move(tmpl)};
    }
    if (!args.methods.empty()) {
        cfg.methods.clear();
        for (const auto& m : args.methods)
            cfg.methods.push_back(geofd::bench::MethodSpec::parse(m));
    }
    if (!args.r_values.empty()) cfg.r_values = args.r_values;
    if (args.B > 0) cfg.B = args.B;
    if (args.seed) cfg.base_seed = *args.seed;
    if (args.embed_dim > 0) cfg.embed_dim = args.embed_dim;
    return cfg;
}

int cmd_benchmark(const BenchArgs& args, bool quiet) {
    const auto cfg = build_bench_config(args);
    geofd::bench::validate(cfg);
    const auto res = geofd::bench::run_benchmark(cfg);
    if (!quiet)
        for (const auto& row : res.summary)
            std::printf("%-16s %-28s r=%-5g median %.3f  [q1 %.3f, q3 %.3f]  (%d ok, %d failed)\n",
                        row.dgp.c_str(), row.method.c_str(), row.r, row.median,
                        row.q1, row.q3, row.count, row.errors);
    geofd::bench::write_records_csv(res, args.output + ".records.csv");
    write_text(args.output + ".summary.json", geofd::bench::summary_json(res));
    geofd::bench::write_timings_csv(res, args.output + ".timings.csv");

    json jcfg;
    jcfg["B"] = cfg.B;
    jcfg["base_seed"] = cfg.base_seed;
    jcfg["embed_dim"] = cfg.embed_dim;
    jcfg["r_values"] = cfg.r_values;
    for (const auto& d : cfg.dgps)
        jcfg["dgps"].push_back({{"name", d.cfg.name},
                                {"n", d.cfg.n},
                                {"m", d.cfg.m},
                                {"params", d.cfg.params},
                                {"n1000_at_r001", d.n1000_at_r001}});
    for (const auto& m : cfg.methods) jcfg["methods"].push_back(method_json(m));
    write_manifest(args.output, "benchmark", jcfg,
                   args.config_file.empty()
                       ? std::vector<std::string>{}
                       : std::vector<std::string>{args.config_file},
                   {args.output + ".records.csv", args.output + ".summary.json"},
                   cfg.base_seed);
    return 0;
}

// ---- plot -------------------------------------------------------------------------

struct PlotArgs {
    std::string embedding;
    std::string scores;
    std::string output;
};

int cmd_plot(const PlotArgs& args) {
    auto emb = geofd::load_embedding_csv(args.embedding);
    std::optional<std::vector<double>> scores;
    if (!args.scores.empty()) scores = geofd::load_scores_csv(args.scores);
    geofd::write_scatter_matrix_svg(emb.coords, scores, emb.labels, args.output);
    json cfg = {{"embedding", args.embedding}, {"scores", args.scores}};
    write_manifest(args.output, "plot", cfg, {args.embedding}, {args.output});
    return 0;
}

void emit_error(const std::string& kind, const std::string& message) {
    json err = {{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric outlier detection for functional data"};
    app.require_subcommand(1);

    int jobs = 0;
    bool quiet = false;
    app.add_option("--jobs", jobs, "worker threads (0 = library default)");
    app.add_flag("--quiet", quiet, "suppress progress output");

    GenerateArgs gen;
    auto* sc_gen = app.add_subcommand("generate", "sample a synthetic dataset");
    sc_gen->fallthrough();
    sc_gen->add_option("--dgp", gen.dgp, "DGP name")->required();
    sc_gen->add_option("--n", gen.n, "observations");
    sc_gen->add_option("--r", gen.r, "outlier ratio in [0, 0.1]");
    sc_gen->add_option("--m", gen.m, "grid size");
    sc_gen->add_option("--seed", gen.seed, "RNG seed");
    sc_gen->add_option("--param", gen.params, "DGP parameter key=value")
        ->take_all();
    sc_gen->add_option("-o,--output", gen.output, "output CSV path")->required();

    EmbedArgs emb;
    auto* sc_emb = app.add_subcommand("embed", "compute a low-dimensional embedding");
    sc_emb->fallthrough();
    sc_emb->add_option("--input", emb.input, "dataset CSV")->required();
    sc_emb->add_flag("--no-header", emb.no_header, "input has no header row");
    sc_emb->add_flag("--no-labels", emb.no_labels, "ignore any label column");
    sc_emb->add_option("--metric", emb.metric, "lp:<p> | wasserstein1 | dtw[:w]");
    sc_emb->add_option("--method", emb.method, "mds | isomap:<k>");
    sc_emb->add_option("--dim", emb.dim, "embedding dimension");
    sc_emb->add_flag("--deriv", emb.deriv, "embed first derivatives");
    sc_emb->add_option("--save-distances", emb.save_distances,
                       "also write the distance matrix CSV");
    sc_emb->add_option("-o,--output", emb.output, "output prefix")->required();

    EmbedArgs gof_args;
    auto* sc_gof = app.add_subcommand("gof", "goodness-of-fit per dimension");
    sc_gof->fallthrough();
    sc_gof->add_option("--input", gof_args.input, "dataset CSV")->required();
    sc_gof->add_flag("--no-header", gof_args.no_header, "input has no header row");
    sc_gof->add_flag("--no-labels", gof_args.no_labels, "ignore any label column");
    sc_gof->add_option("--metric", gof_args.metric, "lp:<p> | wasserstein1 | dtw[:w]");
    sc_gof->add_flag("--deriv", gof_args.deriv, "use first derivatives");
    sc_gof->add_option("-o,--output", gof_args.output, "output CSV path")->required();

    ScoreArgs score;
    auto* sc_score = app.add_subcommand("score", "LOF outlier scores");
    sc_score->fallthrough();
    sc_score->add_option("--embedding", score.embedding, "embedding CSV input");
    sc_score->add_option("--distances", score.distances, "distance-matrix CSV input");
    sc_score->add_option("--minpts", score.min_pts, "LOF neighborhood size");
    sc_score->add_option("-o,--output", score.output, "output CSV path")->required();

    BenchArgs bench;
    auto* sc_bench = app.add_subcommand("benchmark", "replicated AUC benchmark");
    sc_bench->fallthrough();
    sc_bench->add_option("--config", bench.config_file, "benchmark config JSON");
    sc_bench->add_option("--dgp", bench.dgp, "inline DGP name");
    sc_bench->add_option("--n", bench.n, "inline DGP observations");
    sc_bench->add_option("--m", bench.m, "inline DGP grid size");
    sc_bench->add_option("--method", bench.methods,
                         "pipeline spec {raw|mds|isomap:<k>}:<metric>[+deriv]")
        ->take_all();
    sc_bench->add_option("--r-values", bench.r_values, "outlier ratios")->take_all();
    sc_bench->add_option("--B", bench.B, "replications");
    sc_bench->add_option("--seed", bench.seed, "base seed");
    sc_bench->add_option("--embed-dim", bench.embed_dim, "embedding dimension");
    sc_bench->add_option("-o,--output", bench.output, "output prefix")->required();

    PlotArgs plot;
    auto* sc_plot = app.add_subcommand("plot", "scatterplot matrix SVG");
    sc_plot->fallthrough();
    sc_plot->add_option("--embedding", plot.embedding, "embedding CSV")->required();
    sc_plot->add_option("--scores", plot.scores, "score CSV");
    sc_plot->add_option("-o,--output", plot.output, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("validation", e.what());
        return 1;
    }

    set_jobs(jobs);

    try {
        if (*sc_gen) return cmd_generate(gen);
        if (*sc_emb) return cmd_embed(emb);
        if (*sc_gof) return cmd_gof(gof_args);
        if (*sc_score) return cmd_score(score);
        if (*sc_bench) return cmd_benchmark(bench, quiet);
        if (*sc_plot) return cmd_plot(plot);
    } catch (const geofd::ValidationError& e) {
        emit_error("validation", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("runtime", e.what());
        return 2;
    }
    return 0;
}
