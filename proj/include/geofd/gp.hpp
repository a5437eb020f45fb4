#pragma once

#include <Eigen/Core>

#include "geofd/rng.hpp"
#include "geofd/types.hpp"

namespace geofd {

// Zero-mean Gaussian process on a fixed grid with covariance exp(-|s-t|),
// sampled through a Cholesky factor of the grid covariance.
class ExpGpSampler {
public:
    explicit ExpGpSampler(const Grid& grid);

    // One path; consumes grid-size normal draws from rng.
    Eigen::VectorXd draw(Rng& rng) const;

private:
    Eigen::MatrixXd chol_; // lower factor
};

} // namespace geofd
