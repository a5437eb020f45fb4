#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geofd/errors.hpp"

namespace geofd {

// Curves are stored row-major so each observation is a contiguous span.
using CurveMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// 1 = structural (off-manifold) outlier, 0 = common-process observation.
using LabelVector = std::vector<std::uint8_t>;

// Free-form provenance (DGP name, seed, parameters, ...).
using MetaMap = std::map<std::string, std::string>;

// Shared argument grid t_1 < ... < t_m.
class Grid {
public:
    explicit Grid(std::vector<double> points);

    // m equally spaced points covering [lo, hi].
    static Grid uniform(double lo, double hi, int m);

    int size() const { return static_cast<int>(points_.size()); }
    double operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& points() const { return points_; }
    std::span<const double> span() const { return points_; }

    bool operator==(const Grid& other) const { return points_ == other.points_; }

private:
    std::vector<double> points_;
};

// n curves evaluated on one shared grid, with optional outlier labels.
struct FunctionalDataset {
    Grid grid;
    CurveMatrix values; // n x m, row i = observation i
    std::optional<LabelVector> labels;
    MetaMap meta;

    FunctionalDataset(Grid g, CurveMatrix v,
                      std::optional<LabelVector> l = std::nullopt,
                      MetaMap meta_in = {});

    int n() const { return static_cast<int>(values.rows()); }
    int m() const { return static_cast<int>(values.cols()); }

    std::span<const double> curve(int i) const {
        return {values.data() + static_cast<std::ptrdiff_t>(i) * values.cols(),
                static_cast<std::size_t>(values.cols())};
    }
};

} // namespace geofd
