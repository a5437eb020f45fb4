#pragma once

#include <Eigen/Core>
#include <string>

#include "geofd/metric.hpp"
#include "geofd/types.hpp"

namespace geofd {

// Symmetric n x n dissimilarities with zero diagonal. DTW entries need not
// satisfy the triangle inequality.
struct DistanceMatrix {
    Eigen::MatrixXd d;
    std::string metric_tag;

    int n() const { return static_cast<int>(d.rows()); }
};

// Checks symmetry (1e-12), zero diagonal, nonnegativity and finiteness.
void validate(const DistanceMatrix& dm);

// Pairwise distances for all curve pairs. Only the upper triangle is
// computed and then mirrored; pairs are evaluated in parallel.
DistanceMatrix pairwise(const FunctionalDataset& ds, const MetricSpec& spec);

// Euclidean distances between the rows of a coordinate matrix.
DistanceMatrix euclidean_pairwise(const Eigen::MatrixXd& coords,
                                  const std::string& tag = "euclidean");

} // namespace geofd
