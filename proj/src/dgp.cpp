#include "geofd/dgp.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "geofd/betafun.hpp"
#include "geofd/bspline.hpp"
#include "geofd/csv.hpp"
#include "geofd/gp.hpp"
#include "geofd/rng.hpp"

namespace geofd::dgp {

namespace {

constexpr double pi = std::numbers::pi;

void check_cfg(const DgpConfig& cfg,
               std::initializer_list<const char*> allowed_params = {}) {
    if (cfg.n < 1) throw ValidationError("DGP config: n must be >= 1");
    if (!(cfg.r >= 0.0 && cfg.r <= 0.1))
        throw ValidationError("DGP config: outlier ratio r must lie in [0, 0.1]");
    if (cfg.m < 10) throw ValidationError("DGP config: m must be >= 10");
    for (const auto& [key, value] : cfg.params) {
        bool ok = false;
        for (const char* name : allowed_params) ok = ok || key == name;
        if (!ok)
            throw ValidationError("DGP config: unknown parameter '" + key +
                                  "' for " + cfg.name);
    }
}

double param_or(const DgpConfig& cfg, const std::string& key, double fallback) {
    auto it = cfg.params.find(key);
    return it == cfg.params.end() ? fallback : it->second;
}

// Curves generated class-by-class, then placed at seeded random positions.
struct RowBuffer {
    std::vector<std::vector<double>> curves;
    LabelVector labels;
    std::vector<std::string> kinds;

    void add(std::vector<double> curve, bool outlier, std::string kind = {}) {
        curves.push_back(std::move(curve));
        labels.push_back(outlier ? 1 : 0);
        if (outlier && !kind.empty()) kinds.push_back(std::move(kind));
    }
};

MetaMap base_meta(const DgpConfig& cfg) {
    MetaMap meta;
    meta["dgp"] = cfg.name;
    meta["n"] = std::to_string(cfg.n);
    meta["m"] = std::to_string(cfg.m);
    meta["r"] = fmt_double(cfg.r);
    meta["seed"] = std::to_string(cfg.seed);
    for (const auto& [key, value] : cfg.params)
        meta["param." + key] = fmt_double(value);
    return meta;
}

FunctionalDataset assemble(Grid grid, RowBuffer rows, Rng& rng, MetaMap meta) {
    const auto n = static_cast<int>(rows.curves.size());
    const auto m = grid.size();
    const auto perm = rng.permutation(n);
    CurveMatrix values(n, m);
    LabelVector labels(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        const auto at = static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]);
        const auto& curve = rows.curves[static_cast<std::size_t>(j)];
        for (int k = 0; k < m; ++k)
            values(static_cast<Eigen::Index>(at), k) = curve[static_cast<std::size_t>(k)];
        labels[at] = rows.labels[static_cast<std::size_t>(j)];
    }
    if (!rows.kinds.empty()) {
        std::string joined;
        for (std::size_t i = 0; i < rows.kinds.size(); ++i) {
            if (i) joined += ";";
            joined += rows.kinds[i];
        }
        meta["outlier_kinds"] = joined;
    }
    return FunctionalDataset(std::move(grid), std::move(values), std::move(labels),
                             std::move(meta));
}

double gauss_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi);
}

} // namespace

int outlier_count(const DgpConfig& cfg) {
    return static_cast<int>(std::llround(cfg.r * cfg.n));
}

FunctionalDataset gen_taxonomy_shape(const DgpConfig& cfg) {
    check_cfg(cfg);
    const int n_out = outlier_count(cfg);
    auto grid = Grid::uniform(0.0, 1.0, cfg.m);
    Rng rng(cfg.seed);
    RowBuffer rows;
    for (int i = 0; i < cfg.n - n_out; ++i) {
        const double b = rng.normal(5.0, 3.0);
        std::vector<double> c(static_cast<std::size_t>(cfg.m));
        for (int k = 0; k < cfg.m; ++k) {
            const double t = grid[k];
            c[static_cast<std::size_t>(k)] = b + 0.05 * t + std::cos(20.0 * pi * t);
        }
        rows.add(std::move(c), false);
    }
    for (int i = 0; i < n_out; ++i) {
        const double a = rng.normal(5.0, 4.0);
        std::vector<double> c(static_cast<std::size_t>(cfg.m));
        for (int k = 0; k < cfg.m; ++k) {
            const double t = grid[k];
            c[static_cast<std::size_t>(k)] = a + 0.05 * t + std::sin(pi * t * t);
        }
        rows.add(std::move(c), true);
    }
    return assemble(std::move(grid), std::move(rows), rng, base_meta(cfg));
}

FunctionalDataset gen_beta_shift(const DgpConfig& cfg) {
    check_cfg(cfg);
    const int n_out = outlier_count(cfg);
    auto grid = Grid::uniform(0.0, 1.0, cfg.m);
    Rng rng(cfg.seed);
    RowBuffer rows;
    auto density_row = [&](double a, double b, double shift) {
        std::vector<double> c(static_cast<std::size_t>(cfg.m));
        for (int k = 0; k < cfg.m; ++k)
            c[static_cast<std::size_t>(k)] = beta_pdf(grid[k], a, b) + shift;
        return c;
    };
    for (int i = 0; i < cfg.n - n_out; ++i) {
        const double a = rng.uniform(1.0, 2.0);
        const double b = rng.uniform(1.0, 2.0);
        rows.add(density_row(a, b, 0.0), false);
    }
    for (int i = 0; i < n_out; ++i) {
        const double a = rng.uniform(1.0, 2.0);
        const double b = rng.uniform(1.0, 2.0);
        const double shift = rng.uniform(0.0, 0.5);
        rows.add(density_row(a, b, shift), true);
    }
    return assemble(std::move(grid), std::move(rows), rng, base_meta(cfg));
}

FunctionalDataset gen_phase_case(PhaseCase c, const DgpConfig& cfg) {
    check_cfg(cfg);
    const int n_out = c == PhaseCase::I ? 0 : outlier_count(cfg);
    auto grid = Grid::uniform(-4.0, 4.0, cfg.m);
    Rng rng(cfg.seed);
    RowBuffer rows;
    auto bump_row = [&](double amp, double center) {
        std::vector<double> row(static_cast<std::size_t>(cfg.m));
        for (int k = 0; k < cfg.m; ++k)
            row[static_cast<std::size_t>(k)] = amp * gauss_pdf(grid[k] - center);
        return row;
    };
    for (int i = 0; i < cfg.n - n_out; ++i) {
        switch (c) {
            case PhaseCase::I:
                rows.add(bump_row(rng.uniform(0.1, 2.0), rng.uniform(-2.0, 2.0)), false);
                break;
            case PhaseCase::II:
                rows.add(bump_row(rng.uniform(0.1, 2.0), -1.0), false);
                break;
            case PhaseCase::III:
                rows.add(bump_row(rng.uniform(0.1, 2.0), rng.uniform(-1.3, -0.7)), false);
                break;
        }
    }
    for (int i = 0; i < n_out; ++i) {
        if (c == PhaseCase::II)
            rows.add(bump_row(rng.uniform(0.1, 2.0), 0.0), true);
        else
            rows.add(bump_row(rng.uniform(0.1, 2.0), rng.uniform(-0.5, 0.1)), true);
    }
    return assemble(std::move(grid), std::move(rows), rng, base_meta(cfg));
}

FunctionalDataset gen_dgp_templates(int variant, const DgpConfig& cfg) {
    if (variant != 3 && variant != 4)
        throw ValidationError("template DGP variant must be 3 or 4");
    check_cfg(cfg);
    const int n_out = outlier_count(cfg);
    const int n_basis = variant == 3 ? 15 : 25;
    const double noise_sd = variant == 3 ? 0.10 : 0.15;
    auto grid = Grid::uniform(0.0, 1.0, cfg.m);
    Rng rng(cfg.seed);

    BsplineBasis basis(n_basis);
    std::vector<double> coef(static_cast<std::size_t>(n_basis));
    for (auto& ck : coef) ck = rng.normal();

    auto warped_row = [&](auto&& warp) {
        std::vector<double> row(static_cast<std::size_t>(cfg.m));
        for (int k = 0; k < cfg.m; ++k)
            row[static_cast<std::size_t>(k)] =
                basis.combine(coef, warp(grid[k])) + rng.normal(0.0, noise_sd);
        return row;
    };

    RowBuffer rows;
    const double in_lo = variant == 3 ? 4.0 : 3.0;
    const double in_hi = variant == 3 ? 6.0 : 8.0;
    for (int i = 0; i < cfg.n - n_out; ++i) {
        const double a = rng.uniform(in_lo, in_hi);
        const double b = rng.uniform(in_lo, in_hi);
        rows.add(warped_row([&](double t) { return beta_cdf(t, a, b); }), false);
    }
    for (int i = 0; i < n_out; ++i) {
        if (variant == 3) {
            const double a = rng.uniform(3.0, 4.0);
            const double b = rng.uniform(3.0, 4.0);
            rows.add(warped_row([&](double t) { return beta_cdf(t, a, b); }), true);
        } else {
            const double a1 = rng.uniform(3.0, 8.0);
            const double b1 = rng.uniform(3.0, 8.0);
            const double a2 = rng.uniform(0.1, 3.0);
            const double b2 = rng.uniform(0.1, 3.0);
            rows.add(warped_row([&](double t) {
                         return 0.5 * beta_cdf(t, a1, b1) + 0.5 * beta_cdf(t, a2, b2);
                     }),
                     true);
        }
    }
    return assemble(std::move(grid), std::move(rows), rng, base_meta(cfg));
}

FunctionalDataset gen_sim_model(SimModel id, const DgpConfig& cfg) {
    check_cfg(cfg, {"level_sd"});
    const double level_sd = param_or(cfg, "level_sd", 0.0);
    const int n_out = outlier_count(cfg);
    auto grid = Grid::uniform(0.0, 1.0, cfg.m);
    Rng rng(cfg.seed);
    ExpGpSampler gp(grid);

    auto trend_row = [&](double level) {
        const Eigen::VectorXd noise = gp.draw(rng);
        std::vector<double> row(static_cast<std::size_t>(cfg.m));
        for (int k = 0; k < cfg.m; ++k)
            row[static_cast<std::size_t>(k)] = 4.0 * grid[k] + level + noise(k);
        return row;
    };

    RowBuffer rows;
    for (int i = 0; i < cfg.n - n_out; ++i) {
        const double level = level_sd > 0.0 ? rng.normal(0.0, level_sd) : 0.0;
        rows.add(trend_row(level), false);
    }
    for (int i = 0; i < n_out; ++i) {
        const double level = level_sd > 0.0 ? rng.normal(0.0, level_sd) : 0.0;
        switch (id) {
            case SimModel::Shift: {
                const double s = rng.sign();
                auto row = trend_row(level + 8.0 * s);
                rows.add(std::move(row), true, "shift");
                break;
            }
            case SimModel::Isolated: {
                const double s = rng.sign();
                const double u = rng.uniform(0.0, 0.96);
                auto row = trend_row(level);
                for (int k = 0; k < cfg.m; ++k)
                    if (grid[k] >= u && grid[k] <= u + 0.04)
                        row[static_cast<std::size_t>(k)] += 6.0 * s;
                rows.add(std::move(row), true, "isolated");
                break;
            }
            case SimModel::Shape: {
                const double u = rng.uniform(0.0, 2.0 * pi);
                auto row = trend_row(level);
                for (int k = 0; k < cfg.m; ++k)
                    row[static_cast<std::size_t>(k)] +=
                        2.0 * std::sin(4.0 * pi * grid[k] + u);
                rows.add(std::move(row), true, "shape");
                break;
            }
        }
    }
    return assemble(std::move(grid), std::move(rows), rng, base_meta(cfg));
}

FunctionalDataset gen_dgp_mixture(int variant, const DgpConfig& cfg) {
    if (variant != 1 && variant != 2)
        throw ValidationError("mixture DGP variant must be 1 or 2");
    check_cfg(cfg);
    const int n_out = outlier_count(cfg);
    auto grid = Grid::uniform(0.0, 1.0, cfg.m);
    Rng rng(cfg.seed);
    ExpGpSampler gp(grid);

    auto trend_row = [&]() {
        const Eigen::VectorXd noise = gp.draw(rng);
        std::vector<double> row(static_cast<std::size_t>(cfg.m));
        for (int k = 0; k < cfg.m; ++k)
            row[static_cast<std::size_t>(k)] = 4.0 * grid[k] + noise(k);
        return row;
    };

    RowBuffer rows;
    for (int i = 0; i < cfg.n - n_out; ++i) rows.add(trend_row(), false);

    const int n_shape_v1 = n_out / 2; // variant 1: extra outlier goes to shift
    for (int i = 0; i < n_out; ++i) {
        int kind; // 0 = shift, 1 = isolated, 2 = shape
        if (variant == 1)
            kind = i < n_out - n_shape_v1 ? 0 : 2;
        else
            kind = static_cast<int>(rng.uniform_int(0, 2));
        switch (kind) {
            case 0: {
                const double s = rng.sign();
                auto row = trend_row();
                for (auto& v : row) v += 8.0 * s;
                rows.add(std::move(row), true, "shift");
                break;
            }
            case 1: {
                const double s = rng.sign();
                const double u = rng.uniform(0.0, 0.96);
                auto row = trend_row();
                for (int k = 0; k < cfg.m; ++k)
                    if (grid[k] >= u && grid[k] <= u + 0.04)
                        row[static_cast<std::size_t>(k)] += 6.0 * s;
                rows.add(std::move(row), true, "isolated");
                break;
            }
            default: {
                const double u = rng.uniform(0.0, 2.0 * pi);
                auto row = trend_row();
                for (int k = 0; k < cfg.m; ++k)
                    row[static_cast<std::size_t>(k)] +=
                        2.0 * std::sin(4.0 * pi * grid[k] + u);
                rows.add(std::move(row), true, "shape");
                break;
            }
        }
    }
    return assemble(std::move(grid), std::move(rows), rng, base_meta(cfg));
}

FunctionalDataset generate(const DgpConfig& cfg) {
    const auto& name = cfg.name;
    if (name == "taxonomy-shape") return gen_taxonomy_shape(cfg);
    if (name == "beta-shift") return gen_beta_shift(cfg);
    if (name == "phase-i") return gen_phase_case(PhaseCase::I, cfg);
    if (name == "phase-ii") return gen_phase_case(PhaseCase::II, cfg);
    if (name == "phase-iii") return gen_phase_case(PhaseCase::III, cfg);
    if (name == "dgp1") return gen_dgp_mixture(1, cfg);
    if (name == "dgp2") return gen_dgp_mixture(2, cfg);
    if (name == "dgp3") return gen_dgp_templates(3, cfg);
    if (name == "dgp4") return gen_dgp_templates(4, cfg);
    if (name == "sim1") return gen_sim_model(SimModel::Shift, cfg);
    if (name == "sim2") return gen_sim_model(SimModel::Isolated, cfg);
    if (name == "sim-shape") return gen_sim_model(SimModel::Shape, cfg);
    throw ValidationError("unknown DGP '" + name + "'");
}

const std::vector<std::string>& dgp_names() {
    static const std::vector<std::string> names = {
        "taxonomy-shape", "beta-shift", "phase-i", "phase-ii", "phase-iii",
        "dgp1", "dgp2", "dgp3", "dgp4", "sim1", "sim2", "sim-shape"};
    return names;
}

} // namespace geofd::dgp
