#include "geofd/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

namespace geofd {

MetricSpec MetricSpec::lp(double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw ValidationError("Lp metric requires finite p > 0");
    MetricSpec s;
    s.kind = Kind::Lp;
    s.p = p;
    return s;
}

MetricSpec MetricSpec::wasserstein1() {
    MetricSpec s;
    s.kind = Kind::Wasserstein1;
    return s;
}

MetricSpec MetricSpec::dtw(std::optional<int> window) {
    if (window && *window < 0)
        throw ValidationError("DTW band half-width must be >= 0");
    MetricSpec s;
    s.kind = Kind::Dtw;
    s.window = window;
    return s;
}

MetricSpec MetricSpec::parse(const std::string& text) {
    if (text == "wasserstein1") return wasserstein1();
    if (text == "dtw") return dtw();
    if (text.rfind("dtw:", 0) == 0) {
        const std::string arg = text.substr(4);
        int w = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), w);
        if (ec != std::errc{} || ptr != arg.data() + arg.size())
            throw ValidationError("cannot parse DTW window in '" + text + "'");
        return dtw(w);
    }
    if (text.rfind("lp:", 0) == 0) {
        const std::string arg = text.substr(3);
        double p = 0.0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
        if (ec != std::errc{} || ptr != arg.data() + arg.size())
            throw ValidationError("cannot parse Lp exponent in '" + text + "'");
        return lp(p);
    }
    throw ValidationError("unknown metric '" + text +
                          "' (expected lp:<p>, wasserstein1, dtw[:<window>])");
}

std::string MetricSpec::tag() const {
    switch (kind) {
        case Kind::Lp: {
            char buf[32];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p);
            return "lp:" + std::string(buf, ptr);
        }
        case Kind::Wasserstein1:
            return "wasserstein1";
        case Kind::Dtw:
            return window ? "dtw:" + std::to_string(*window) : "dtw";
    }
    return "?";
}

namespace {

void check_lengths(std::span<const double> x, std::span<const double> y,
                   const Grid& grid) {
    if (x.size() != y.size())
        throw ValidationError("curve length mismatch");
    if (x.size() != static_cast<std::size_t>(grid.size()))
        throw ValidationError("curve length does not match grid size");
}

} // namespace

double lp_distance(std::span<const double> x, std::span<const double> y,
                   const Grid& grid, double p) {
    check_lengths(x, y, grid);
    if (!(p > 0.0) || !std::isfinite(p))
        throw ValidationError("Lp metric requires finite p > 0");
    const int m = grid.size();
    double acc = 0.0;
    double prev = std::pow(std::abs(x[0] - y[0]), p);
    for (int k = 1; k < m; ++k) {
        const double cur = std::pow(std::abs(x[static_cast<std::size_t>(k)] -
                                             y[static_cast<std::size_t>(k)]),
                                    p);
        acc += 0.5 * (prev + cur) * (grid[k] - grid[k - 1]);
        prev = cur;
    }
    return std::pow(acc, 1.0 / p);
}

double wasserstein1_distance(std::span<const double> x, std::span<const double> y,
                             const Grid& grid) {
    check_lengths(x, y, grid);
    const int m = grid.size();
    // |F_x - F_y| sampled on the grid; both cumulative integrals share the
    // trapezoidal weights, so track the running difference directly.
    double gap = 0.0;
    double acc = 0.0;
    double prev_abs = 0.0;
    for (int k = 1; k < m; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const double h = grid[k] - grid[k - 1];
        gap += 0.5 * ((x[ku] - y[ku]) + (x[ku - 1] - y[ku - 1])) * h;
        const double cur_abs = std::abs(gap);
        acc += 0.5 * (prev_abs + cur_abs) * h;
        prev_abs = cur_abs;
    }
    return acc;
}

double dtw_distance(std::span<const double> x, std::span<const double> y,
                    std::optional<int> window) {
    const auto n1 = static_cast<int>(x.size());
    const auto n2 = static_cast<int>(y.size());
    if (n1 == 0 || n2 == 0) throw ValidationError("DTW requires nonempty inputs");
    if (window) {
        if (*window < 0) throw ValidationError("DTW band half-width must be >= 0");
        if (std::abs(n1 - n2) > *window)
            throw ValidationError("DTW band infeasible: |len(x)-len(y)| exceeds window");
    }

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(static_cast<std::size_t>(n2) + 1, inf);
    std::vector<double> cur(static_cast<std::size_t>(n2) + 1, inf);
    prev[0] = 0.0;
    for (int i = 1; i <= n1; ++i) {
        std::fill(cur.begin(), cur.end(), inf);
        int j_lo = 1, j_hi = n2;
        if (window) {
            j_lo = std::max(1, i - *window);
            j_hi = std::min(n2, i + *window);
        }
        const double xi = x[static_cast<std::size_t>(i - 1)];
        for (int j = j_lo; j <= j_hi; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const double d = xi - y[ju - 1];
            cur[ju] = d * d + std::min({cur[ju - 1], prev[ju], prev[ju - 1]});
        }
        std::swap(prev, cur);
    }
    return std::sqrt(prev[static_cast<std::size_t>(n2)]);
}

double metric_distance(std::span<const double> x, std::span<const double> y,
                       const Grid& grid, const MetricSpec& spec) {
    switch (spec.kind) {
        case MetricSpec::Kind::Lp:
            return lp_distance(x, y, grid, spec.p);
        case MetricSpec::Kind::Wasserstein1:
            return wasserstein1_distance(x, y, grid);
        case MetricSpec::Kind::Dtw:
            return dtw_distance(x, y, spec.window);
    }
    throw ValidationError("unknown metric kind");
}

} // namespace geofd
