#pragma once

#include <optional>
#include <span>
#include <string>

#include "geofd/types.hpp"

namespace geofd {

// Dissimilarity measure selector. Lp carries the exponent p (p < 1 gives a
// quasi-metric and is allowed); Dtw carries an optional Sakoe-Chiba band
// half-width.
struct MetricSpec {
    enum class Kind { Lp, Wasserstein1, Dtw };

    Kind kind = Kind::Lp;
    double p = 2.0;
    std::optional<int> window;

    static MetricSpec lp(double p);
    static MetricSpec wasserstein1();
    static MetricSpec dtw(std::optional<int> window = std::nullopt);

    // Accepts "lp:<p>", "wasserstein1", "dtw" and "dtw:<window>".
    static MetricSpec parse(const std::string& text);

    std::string tag() const;
};

// ( integral |x-y|^p dt )^(1/p), trapezoidal rule on the grid.
double lp_distance(std::span<const double> x, std::span<const double> y,
                   const Grid& grid, double p);

// integral |F_x - F_y| dt with F_z the running trapezoidal integral of z.
// Equals the unnormalized 1-D W1 distance when total masses agree.
double wasserstein1_distance(std::span<const double> x, std::span<const double> y,
                             const Grid& grid);

// Dynamic time warping with squared pointwise cost; returns the square root
// of the optimal path cost. Optional Sakoe-Chiba band |i-j| <= window.
double dtw_distance(std::span<const double> x, std::span<const double> y,
                    std::optional<int> window = std::nullopt);

// Dispatch on the spec.
double metric_distance(std::span<const double> x, std::span<const double> y,
                       const Grid& grid, const MetricSpec& spec);

} // namespace geofd
