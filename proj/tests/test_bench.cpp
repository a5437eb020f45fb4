#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "geofd/bench.hpp"
#include "geofd/rng.hpp"
#include "geofd/stats.hpp"
#include "reference.hpp"

using namespace geofd;
using namespace geofd::bench;

namespace {

BenchmarkConfig small_config() {
    BenchmarkConfig cfg;
    DgpTemplate tmpl;
    tmpl.cfg.name = "sim1";
    tmpl.cfg.n = 24;
    tmpl.cfg.m = 20;
    cfg.dgps.push_back(tmpl);
    cfg.methods.push_back(MethodSpec::parse("raw:lp:2"));
    cfg.methods.push_back(MethodSpec::parse("mds:lp:2"));
    cfg.r_values = {0.1, 0.05};
    cfg.B = 3;
    cfg.base_seed = 77;
    cfg.embed_dim = 3;
    return cfg;
}

} // namespace

// ---- AUC -----------------------------------------------------------------------

TEST_CASE("auc fixtures") {
    CHECK(auc({0.9, 0.8, 0.2, 0.1}, {1, 1, 0, 0}) == 1.0);
    CHECK(auc({0.5, 0.5, 0.5, 0.5}, {1, 0, 1, 0}) == 0.5);
    CHECK(auc({3, 1, 2, 0}, {1, 0, 1, 0}) == 1.0);
    CHECK(auc({3, 1, 2, 0}, {1, 0, 0, 1}) == 0.5);
    CHECK_THROWS_AS(auc({1, 2}, {1, 1}), ValidationError);
    CHECK_THROWS_AS(auc({1, 2}, {0, 0}), ValidationError);
}

TEST_CASE("auc equals exhaustive pair counting with ties") {
    Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 40));
        std::vector<double> scores(static_cast<std::size_t>(n));
        LabelVector labels(static_cast<std::size_t>(n));
        int pos = 0;
        for (int i = 0; i < n; ++i) {
            // Coarse levels force plenty of ties.
            scores[static_cast<std::size_t>(i)] =
                static_cast<double>(rng.uniform_int(0, 5)) / 2.0;
            labels[static_cast<std::size_t>(i)] = rng.uniform() < 0.4 ? 1 : 0;
            pos += labels[static_cast<std::size_t>(i)];
        }
        if (pos == 0 || pos == n) continue;
        const double got = auc(scores, labels);
        const double want = ref::auc_pair_count(scores, labels);
        CHECK(std::abs(got - want) <= 1e-12);

        std::vector<double> neg(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i) neg[i] = -scores[i];
        CHECK(std::abs(auc(neg, labels) - (1.0 - got)) <= 1e-12);
    }
}

TEST_CASE("auc is invariant under strictly increasing transforms") {
    Rng rng(43);
    std::vector<double> scores(25);
    LabelVector labels(25);
    for (std::size_t i = 0; i < scores.size(); ++i) {
        scores[i] = rng.normal();
        labels[i] = i % 3 == 0 ? 1 : 0;
    }
    const double base = auc(scores, labels);
    std::vector<double> warped(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        warped[i] = std::exp(3.0 * scores[i]) + 7.0;
    CHECK(auc(warped, labels) == base);
}

// ---- Spearman ------------------------------------------------------------------

TEST_CASE("spearman fixtures") {
    CHECK(spearman({1, 2, 3, 4}, {1, 2, 3, 4}) == doctest::Approx(1.0));
    CHECK(spearman({1, 2, 3, 4}, {4, 3, 2, 1}) == doctest::Approx(-1.0));
    CHECK(spearman({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK_THROWS_AS(spearman({1, 2}, {1, 2}), ValidationError);
    CHECK_THROWS_AS(spearman({1, 1, 1}, {1, 2, 3}), ValidationError);
}

TEST_CASE("quantile type-7") {
    CHECK(quantile({4.0, 1.0, 3.0, 2.0}, 0.5) == doctest::Approx(2.5));
    CHECK(quantile({1.0, 2.0, 3.0}, 0.5) == doctest::Approx(2.0));
    CHECK(quantile({1.0, 2.0, 3.0, 4.0}, 0.25) == doctest::Approx(1.75));
    CHECK(quantile({5.0}, 0.9) == doctest::Approx(5.0));
}

// ---- Method specs -----------------------------------------------------------------

TEST_CASE("method spec parsing") {
    auto raw = MethodSpec::parse("raw:lp:2");
    CHECK(raw.pipeline == PipelineKind::RawLof);
    CHECK(raw.id(5) == "raw(lp:2)");

    auto mds = MethodSpec::parse("mds:lp:10+deriv");
    CHECK(mds.pipeline == PipelineKind::MdsLof);
    CHECK(mds.derivative);
    CHECK(mds.metric.p == 10.0);
    CHECK(mds.id(5) == "mds5(lp:10)+deriv");

    auto iso = MethodSpec::parse("isomap:90:wasserstein1");
    CHECK(iso.pipeline == PipelineKind::IsomapLof);
    CHECK(iso.isomap_k == 90);
    CHECK(iso.id(5) == "isomap5-k90(wasserstein1)");

    CHECK_THROWS_AS(MethodSpec::parse("pca:lp:2"), ValidationError);
    CHECK_THROWS_AS(MethodSpec::parse("isomap:lp:2"), ValidationError);
    CHECK_THROWS_AS(MethodSpec::parse("mds"), ValidationError);
}

// ---- Benchmark runner ---------------------------------------------------------------

TEST_CASE("record count is the full cartesian product") {
    auto res = run_benchmark(small_config());
    CHECK(res.records.size() == 1 * 2 * 2 * 3);
    CHECK(res.summary.size() == 1 * 2 * 2);
    for (const auto& rec : res.records) {
        CHECK(rec.error.empty());
        CHECK(rec.auc >= 0.0);
        CHECK(rec.auc <= 1.0);
    }
}

TEST_CASE("same base seed reproduces records bit for bit") {
    auto a = run_benchmark(small_config());
    auto b = run_benchmark(small_config());
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].auc == b.records[i].auc);
        CHECK(a.records[i].seed == b.records[i].seed);
        CHECK(a.records[i].method == b.records[i].method);
    }
}

TEST_CASE("thread count does not change records") {
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    auto a = run_benchmark(small_config());
    omp_set_num_threads(4);
    auto b = run_benchmark(small_config());
    omp_set_num_threads(saved);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i)
        CHECK(a.records[i].auc == b.records[i].auc);
#endif
}

TEST_CASE("summary medians equal recomputation from records") {
    auto res = run_benchmark(small_config());
    for (const auto& row : res.summary) {
        std::vector<double> aucs;
        for (const auto& rec : res.records)
            if (rec.dgp == row.dgp && rec.method == row.method && rec.r == row.r &&
                rec.error.empty())
                aucs.push_back(rec.auc);
        REQUIRE(static_cast<int>(aucs.size()) == row.count);
        CHECK(quantile(aucs, 0.5) == row.median);
        CHECK(quantile(aucs, 0.25) == row.q1);
        CHECK(quantile(aucs, 0.75) == row.q3);
    }
}

TEST_CASE("score correlation diagnostic is attached to later methods") {
    auto res = run_benchmark(small_config());
    for (std::size_t i = 0; i < res.records.size(); ++i) {
        if (res.records[i].method == "raw(lp:2)")
            CHECK_FALSE(res.records[i].spearman_vs_first.has_value());
        else
            CHECK(res.records[i].spearman_vs_first.has_value());
    }
    // Raw LOF and MDS LOF agree strongly on the same replication.
    for (const auto& rec : res.records)
        if (rec.spearman_vs_first) CHECK(*rec.spearman_vs_first > 0.5);
}

TEST_CASE("failing cells are recorded, not thrown") {
    auto cfg = small_config();
    // isomap k far beyond n makes every cell fail validation.
    cfg.methods = {MethodSpec::parse("isomap:500:lp:2")};
    auto res = run_benchmark(cfg);
    for (const auto& rec : res.records) CHECK_FALSE(rec.error.empty());
    for (const auto& row : res.summary) {
        CHECK(row.count == 0);
        CHECK(row.errors == cfg.B);
    }
}

TEST_CASE("paper n rule swaps in n=1000 at r=0.01") {
    BenchmarkConfig cfg;
    DgpTemplate tmpl;
    tmpl.cfg.name = "sim1";
    tmpl.cfg.n = 20; // r=0.01 would give zero outliers at this n
    tmpl.cfg.m = 12;
    tmpl.n1000_at_r001 = true;
    cfg.dgps.push_back(tmpl);
    cfg.methods = {MethodSpec::parse("raw:lp:2")};
    cfg.r_values = {0.01};
    cfg.B = 1;
    cfg.base_seed = 5;
    auto res = run_benchmark(cfg);
    REQUIRE(res.records.size() == 1);
    CHECK(res.records[0].error.empty()); // n=1000 gives 10 outliers

    cfg.dgps[0].n1000_at_r001 = false;
    auto res2 = run_benchmark(cfg);
    CHECK_FALSE(res2.records[0].error.empty()); // degenerate labels at n=20
}

TEST_CASE("benchmark config validation") {
    BenchmarkConfig cfg = small_config();
    cfg.methods.clear();
    CHECK_THROWS_AS(run_benchmark(cfg), ValidationError);
    cfg = small_config();
    cfg.B = 0;
    CHECK_THROWS_AS(run_benchmark(cfg), ValidationError);
    cfg = small_config();
    cfg.r_values = {0.2};
    CHECK_THROWS_AS(run_benchmark(cfg), ValidationError);
}

TEST_CASE("run_method derivative preprocessing changes the pipeline input") {
    auto ds = dgp::generate([] {
        dgp::DgpConfig c;
        c.name = "sim-shape";
        c.n = 30;
        c.m = 25;
        c.seed = 9;
        c.params["level_sd"] = 4.0;
        return c;
    }());
    auto plain = run_method(MethodSpec::parse("mds:lp:2"), ds, 3);
    auto deriv = run_method(MethodSpec::parse("mds:lp:2+deriv"), ds, 3);
    CHECK(plain.scores != deriv.scores);
}
