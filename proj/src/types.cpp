#include "geofd/types.hpp"

#include <cmath>
#include <utility>

namespace geofd {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2)
        throw ValidationError("grid must contain at least 2 points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]))
            throw ValidationError("grid contains a non-finite value");
        if (i > 0 && points_[i] <= points_[i - 1])
            throw ValidationError("grid points must be strictly increasing");
    }
}

Grid Grid::uniform(double lo, double hi, int m) {
    if (m < 2) throw ValidationError("uniform grid needs m >= 2");
    if (!(lo < hi)) throw ValidationError("uniform grid needs lo < hi");
    std::vector<double> pts(static_cast<std::size_t>(m));
    const double h = (hi - lo) / (m - 1);
    for (int i = 0; i < m; ++i) pts[static_cast<std::size_t>(i)] = lo + h * i;
    pts.back() = hi;
    return Grid(std::move(pts));
}

FunctionalDataset::FunctionalDataset(Grid g, CurveMatrix v,
                                     std::optional<LabelVector> l, MetaMap meta_in)
    : grid(std::move(g)), values(std::move(v)), labels(std::move(l)),
      meta(std::move(meta_in)) {
    if (values.cols() != grid.size())
        throw ValidationError("row length does not match grid size");
    if (!values.allFinite())
        throw ValidationError("dataset contains a non-finite value");
    if (labels && static_cast<Eigen::Index>(labels->size()) != values.rows())
        throw ValidationError("label vector length does not match row count");
}

} // namespace geofd
