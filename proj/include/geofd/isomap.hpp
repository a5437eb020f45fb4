#pragma once

#include "geofd/mds.hpp"
#include "geofd/pairwise.hpp"

namespace geofd {

// Geodesic distances on the symmetrized k-nearest-neighbor graph (edge if
// either endpoint lists the other). A disconnected graph is repaired by
// adding the single shortest inter-component edge per component pair before
// running shortest paths.
Eigen::MatrixXd geodesic_distances(const DistanceMatrix& D, int k);

// Classical MDS applied to the geodesic distance matrix.
Embedding isomap(const DistanceMatrix& D, int k, int d1);

} // namespace geofd
