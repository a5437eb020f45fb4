#include "geofd/gp.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

namespace geofd {

ExpGpSampler::ExpGpSampler(const Grid& grid) {
    const int m = grid.size();
    Eigen::MatrixXd cov(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            cov(i, j) = std::exp(-std::abs(grid[i] - grid[j]));

    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
        // Distinct grid points make the kernel strictly positive definite;
        // a tiny diagonal shift covers borderline conditioning.
        cov.diagonal().array() += 1e-10;
        llt.compute(cov);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("exp-covariance Cholesky failed");
    }
    chol_ = llt.matrixL();
}

Eigen::VectorXd ExpGpSampler::draw(Rng& rng) const {
    Eigen::VectorXd z(chol_.rows());
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
    return chol_ * z;
}

} // namespace geofd
