#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "geofd/betafun.hpp"
#include "geofd/bspline.hpp"
#include "geofd/dgp.hpp"
#include "geofd/gp.hpp"
#include "geofd/rng.hpp"

using namespace geofd;
using namespace geofd::dgp;

namespace {

DgpConfig cfg_of(const std::string& name, int n, double r, int m,
                 std::uint64_t seed) {
    DgpConfig cfg;
    cfg.name = name;
    cfg.n = n;
    cfg.r = r;
    cfg.m = m;
    cfg.seed = seed;
    return cfg;
}

int count_labels(const FunctionalDataset& ds) {
    int c = 0;
    for (auto l : *ds.labels) c += l ? 1 : 0;
    return c;
}

// Composite Simpson on [lo, hi].
double simpson(const std::function<double(double)>& f, double lo, double hi,
               int intervals) {
    const double h = (hi - lo) / intervals;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < intervals; ++i)
        acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Incomplete beta integral by numeric quadrature, independent of the library
// path. Endpoint singularities (shape < 1) are removed by substituting
// u = t^a, which maps t^(a-1) dt to du/a.
double beta_cdf_oracle(double x, double a, double b) {
    auto lower = [](double x0, double a0, double b0) {
        if (a0 >= 1.0)
            return simpson(
                [&](double t) {
                    return std::pow(t, a0 - 1.0) * std::pow(1.0 - t, b0 - 1.0);
                },
                0.0, x0, 20000);
        const double top = std::pow(x0, a0);
        return simpson(
            [&](double u) {
                return (1.0 - std::pow(u, 1.0 / a0)) == 0.0 && b0 < 1.0
                           ? 0.0
                           : std::pow(1.0 - std::pow(u, 1.0 / a0), b0 - 1.0) / a0;
            },
            0.0, top, 20000);
    };
    const double beta_fn = std::exp(std::lgamma(a) + std::lgamma(b) -
                                    std::lgamma(a + b));
    if (x <= 0.5) return lower(x, a, b) / beta_fn;
    return 1.0 - lower(1.0 - x, b, a) / beta_fn;
}

} // namespace

// ---- Generic generator contracts ------------------------------------------------

TEST_CASE("label counts and determinism for every DGP") {
    for (const auto& name : dgp_names()) {
        CAPTURE(name);
        auto cfg = cfg_of(name, 60, 0.1, 30, 99);
        auto a = generate(cfg);
        auto b = generate(cfg);
        REQUIRE(a.labels.has_value());
        CHECK(a.n() == 60);
        CHECK(a.m() == 30);
        const int expected = name == "phase-i" ? 0 : 6;
        CHECK(count_labels(a) == expected);
        CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
        CHECK(*a.labels == *b.labels);
        CHECK(a.grid.points() == b.grid.points());

        auto c = generate(cfg_of(name, 60, 0.1, 30, 100));
        CHECK((a.values - c.values).cwiseAbs().maxCoeff() > 0.0);

        auto none = generate(cfg_of(name, 40, 0.0, 30, 5));
        CHECK(count_labels(none) == 0);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(generate(cfg_of("sim1", 100, 0.2, 50, 1)), ValidationError);
    CHECK_THROWS_AS(generate(cfg_of("sim1", 100, -0.01, 50, 1)), ValidationError);
    CHECK_THROWS_AS(generate(cfg_of("sim1", 100, 0.1, 9, 1)), ValidationError);
    CHECK_THROWS_AS(generate(cfg_of("nope", 100, 0.1, 50, 1)), ValidationError);
    auto bad = cfg_of("sim1", 100, 0.1, 50, 1);
    bad.params["unknown_knob"] = 1.0;
    CHECK_THROWS_AS(generate(bad), ValidationError);
}

TEST_CASE("outliers are shuffled into random positions") {
    auto ds = generate(cfg_of("sim1", 100, 0.1, 20, 7));
    // Not all outliers at the tail.
    int tail = 0;
    for (int i = 90; i < 100; ++i) tail += (*ds.labels)[static_cast<std::size_t>(i)];
    CHECK(tail < 10);
}

// ---- Taxonomy shape --------------------------------------------------------------

TEST_CASE("taxonomy-shape example counts") {
    auto ds = gen_taxonomy_shape(cfg_of("taxonomy-shape", 54, 0.09, 50, 3));
    CHECK(count_labels(ds) == 5);
    CHECK(ds.n() == 54);
}

// ---- Beta shift -------------------------------------------------------------------

TEST_CASE("beta-shift inlier rows integrate to one") {
    // Trapezoid error for Beta(a, b) with a, b in [1, 2] is dominated by the
    // endpoint behavior t^(a-1), giving O(h^a) convergence; at m = 201 the
    // mass is good to a few 1e-3.
    auto ds = gen_beta_shift(cfg_of("beta-shift", 40, 0.1, 201, 11));
    const auto& g = ds.grid;
    for (int i = 0; i < ds.n(); ++i) {
        if ((*ds.labels)[static_cast<std::size_t>(i)]) continue;
        double mass = 0.0;
        for (int k = 1; k < ds.m(); ++k)
            mass += 0.5 * (ds.values(i, k) + ds.values(i, k - 1)) * (g[k] - g[k - 1]);
        CHECK(mass == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("beta-shift outliers sit above their density by the shift") {
    auto ds = gen_beta_shift(cfg_of("beta-shift", 100, 0.1, 101, 17));
    // Shifted densities integrate to 1 + shift (mass excess in [0, 0.5]).
    for (int i = 0; i < ds.n(); ++i) {
        if (!(*ds.labels)[static_cast<std::size_t>(i)]) continue;
        double mass = 0.0;
        for (int k = 1; k < ds.m(); ++k)
            mass += 0.5 * (ds.values(i, k) + ds.values(i, k - 1)) *
                    (ds.grid[k] - ds.grid[k - 1]);
        CHECK(mass >= 1.0 - 1e-3);
        CHECK(mass <= 1.5 + 1e-3);
    }
}

// ---- Phase cases ---------------------------------------------------------------------

TEST_CASE("phase case I never labels outliers") {
    auto ds = gen_phase_case(PhaseCase::I, cfg_of("phase-i", 80, 0.1, 64, 23));
    CHECK(count_labels(ds) == 0);
}

TEST_CASE("phase case II counts") {
    auto ds = gen_phase_case(PhaseCase::II, cfg_of("phase-ii", 100, 0.05, 64, 23));
    CHECK(count_labels(ds) == 5);
}

TEST_CASE("phase case III peak locations sit in the parameter boxes") {
    auto ds = gen_phase_case(PhaseCase::III, cfg_of("phase-iii", 120, 0.1, 401, 29));
    for (int i = 0; i < ds.n(); ++i) {
        int arg = 0;
        for (int k = 1; k < ds.m(); ++k)
            if (ds.values(i, k) > ds.values(i, arg)) arg = k;
        const double peak = ds.grid[arg];
        const double tol = 8.0 / 400.0 + 1e-9; // one grid step
        if ((*ds.labels)[static_cast<std::size_t>(i)]) {
            CHECK(peak >= -0.5 - tol);
            CHECK(peak <= 0.1 + tol);
        } else {
            CHECK(peak >= -1.3 - tol);
            CHECK(peak <= -0.7 + tol);
        }
    }
}

// ---- B-spline basis ---------------------------------------------------------------------

TEST_CASE("bspline partition of unity") {
    for (int n_basis : {15, 25}) {
        BsplineBasis basis(n_basis);
        for (int k = 0; k <= 200; ++k) {
            const double t = static_cast<double>(k) / 200.0;
            const auto b = basis.eval(t);
            double sum = 0.0;
            for (double v : b) {
                CHECK(v >= -1e-12);
                sum += v;
            }
            CHECK(std::abs(sum - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("bspline locality and combination") {
    BsplineBasis basis(15);
    std::vector<double> coef(15, 0.0);
    coef[7] = 1.0;
    // A single coefficient only influences its local support.
    CHECK(basis.combine(coef, 0.0) == 0.0);
    CHECK(basis.combine(coef, 1.0) == 0.0);
    double peak = 0.0;
    for (int k = 0; k <= 100; ++k)
        peak = std::max(peak, basis.combine(coef, k / 100.0));
    CHECK(peak > 0.4);
}

// ---- Beta CDF warps -------------------------------------------------------------------------

TEST_CASE("beta cdf matches the numeric integration oracle") {
    const double cases[][2] = {{1.0, 1.0}, {2.0, 5.0}, {4.7, 5.3}, {0.5, 0.5},
                               {0.1, 2.9}, {3.0, 0.2}, {7.9, 3.1}};
    for (const auto& ab : cases) {
        for (double x : {0.05, 0.25, 0.5, 0.75, 0.95}) {
            const double got = beta_cdf(x, ab[0], ab[1]);
            const double want = beta_cdf_oracle(x, ab[0], ab[1]);
            CAPTURE(ab[0]);
            CAPTURE(ab[1]);
            CAPTURE(x);
            CHECK(std::abs(got - want) <= 1e-8);
        }
    }
}

TEST_CASE("beta cdf symmetric midpoint") {
    for (double a : {0.3, 1.0, 2.5, 6.0})
        CHECK(std::abs(beta_cdf(0.5, a, a) - 0.5) <= 1e-9);
}

TEST_CASE("beta ecdf warps are monotone and fix the endpoints") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = rng.uniform(0.1, 8.0);
        const double b = rng.uniform(0.1, 8.0);
        CHECK(beta_cdf(0.0, a, b) == 0.0);
        CHECK(beta_cdf(1.0, a, b) == 1.0);
        double prev = 0.0;
        for (int k = 1; k <= 100; ++k) {
            const double w = beta_cdf(k / 100.0, a, b);
            CHECK(w >= prev - 1e-12);
            prev = w;
        }
    }
    // Mixture warps, as used by the variant-4 outliers.
    const double w_mid = 0.5 * beta_cdf(0.0, 3.0, 4.0) + 0.5 * beta_cdf(0.0, 1.0, 2.0);
    CHECK(w_mid == 0.0);
}

TEST_CASE("beta pdf rejects bad shapes") {
    CHECK_THROWS_AS(beta_pdf(0.5, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(beta_cdf(0.5, 1.0, -2.0), ValidationError);
}

// ---- Template DGPs -------------------------------------------------------------------------

TEST_CASE("template DGPs differ across seeds and variants") {
    auto a = gen_dgp_templates(3, cfg_of("dgp3", 20, 0.1, 40, 1));
    auto b = gen_dgp_templates(3, cfg_of("dgp3", 20, 0.1, 40, 2));
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() > 0.0);
    CHECK_THROWS_AS(gen_dgp_templates(5, cfg_of("dgp5", 20, 0.1, 40, 1)),
                    ValidationError);
}

// ---- Gaussian process sampler ----------------------------------------------------------------

TEST_CASE("gp empirical covariance converges to exp(-|s-t|)") {
    const int m = 50;
    const int draws = 2000;
    auto grid = Grid::uniform(0.0, 1.0, m);
    ExpGpSampler gp(grid);
    Rng rng(2718);

    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m, m);
    for (int d = 0; d < draws; ++d) {
        const Eigen::VectorXd path = gp.draw(rng);
        sum += path * path.transpose();
    }
    const Eigen::MatrixXd emp = sum / draws;

    Eigen::MatrixXd target(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            target(i, j) = std::exp(-std::abs(grid[i] - grid[j]));

    const double rel_err = (emp - target).norm() / target.norm();
    CHECK(rel_err <= 0.15);
    // Pointwise variance at a fixed argument.
    CHECK(std::abs(emp(17, 17) - 1.0) <= 0.1);
}

// ---- Simulation models ------------------------------------------------------------------------

TEST_CASE("sim1 outlier level deviates by about eight") {
    double dev_sum = 0.0;
    int count = 0;
    for (int s = 0; s < 200; ++s) {
        auto ds = gen_sim_model(SimModel::Shift,
                                cfg_of("sim1", 40, 0.1, 50, 4000 + s));
        for (int i = 0; i < ds.n(); ++i) {
            if (!(*ds.labels)[static_cast<std::size_t>(i)]) continue;
            double mean_dev = 0.0;
            for (int k = 0; k < ds.m(); ++k)
                mean_dev += ds.values(i, k) - 4.0 * ds.grid[k];
            dev_sum += std::abs(mean_dev / ds.m());
            ++count;
        }
    }
    CHECK(count == 200 * 4);
    CHECK(dev_sum / count == doctest::Approx(8.0).epsilon(0.5 / 8.0));
}

TEST_CASE("sim2 spikes touch at most five percent of the grid") {
    for (int s = 0; s < 50; ++s) {
        auto ds = gen_sim_model(SimModel::Isolated,
                                cfg_of("sim2", 40, 0.1, 50, 8000 + s));
        for (int i = 0; i < ds.n(); ++i) {
            if (!(*ds.labels)[static_cast<std::size_t>(i)]) continue;
            int big = 0;
            for (int k = 0; k < ds.m(); ++k)
                if (std::abs(ds.values(i, k) - 4.0 * ds.grid[k]) > 5.0) ++big;
            CHECK(big <= static_cast<int>(0.05 * ds.m()));
        }
    }
}

TEST_CASE("sim models accept the level_sd parameter") {
    auto cfg = cfg_of("sim-shape", 50, 0.1, 50, 3);
    cfg.params["level_sd"] = 4.0;
    auto ds = gen_sim_model(SimModel::Shape, cfg);
    // Dispersed levels: the spread of row means is far beyond noise alone.
    std::vector<double> means;
    for (int i = 0; i < ds.n(); ++i) {
        double mu = 0.0;
        for (int k = 0; k < ds.m(); ++k) mu += ds.values(i, k) - 4.0 * ds.grid[k];
        means.push_back(mu / ds.m());
    }
    double lo = means[0], hi = means[0];
    for (double v : means) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo > 6.0);
}

// ---- Mixture DGPs -------------------------------------------------------------------------------

TEST_CASE("mixture kinds recorded in meta") {
    auto ds = gen_dgp_mixture(2, cfg_of("dgp2", 100, 0.1, 50, 12));
    REQUIRE(ds.meta.count("outlier_kinds") == 1);
    const auto kinds = ds.meta.at("outlier_kinds");
    CHECK(std::count(kinds.begin(), kinds.end(), ';') == 9);
    CHECK(count_labels(ds) == 10);
}

TEST_CASE("mixture variant 1 splits evenly") {
    auto ds = gen_dgp_mixture(1, cfg_of("dgp1", 100, 0.1, 50, 12));
    const auto kinds = ds.meta.at("outlier_kinds");
    std::size_t shift = 0, pos = 0;
    while ((pos = kinds.find("shift", pos)) != std::string::npos) {
        ++shift;
        pos += 5;
    }
    CHECK(shift == 5);
}

TEST_CASE("full scale: r=0.01 with n=1000 gives ten outliers") {
    auto ds = gen_dgp_mixture(2, cfg_of("dgp2", 1000, 0.01, 20, 5));
    CHECK(count_labels(ds) == 10);
}
