#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "geofd/types.hpp"

namespace geofd {

// Static scatterplot matrix of embedding dimensions: d x d panel grid,
// points shaded by score quantile (darker = higher) and drawn as triangles
// when labeled as outliers. Without scores every point gets the same shade.
void write_scatter_matrix_svg(const Eigen::MatrixXd& coords,
                              const std::optional<std::vector<double>>& scores,
                              const std::optional<LabelVector>& labels,
                              const std::string& path);

} // namespace geofd
