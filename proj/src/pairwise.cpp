#include "geofd/pairwise.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <string>

namespace geofd {

void validate(const DistanceMatrix& dm) {
    const auto& d = dm.d;
    if (d.rows() != d.cols())
        throw ValidationError("distance matrix must be square");
    if (!d.allFinite())
        throw ValidationError("distance matrix contains a non-finite value");
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        if (d(i, i) != 0.0)
            throw ValidationError("distance matrix diagonal must be zero");
        for (Eigen::Index j = i + 1; j < d.cols(); ++j) {
            if (d(i, j) < 0.0)
                throw ValidationError("distance matrix entries must be >= 0");
            if (std::abs(d(i, j) - d(j, i)) > 1e-12)
                throw ValidationError("distance matrix must be symmetric to 1e-12");
        }
    }
}

DistanceMatrix pairwise(const FunctionalDataset& ds, const MetricSpec& spec) {
    const int n = ds.n();
    if (n < 2) throw ValidationError("pairwise needs at least 2 observations");
    // Surface config errors before entering the parallel region.
    if (spec.kind == MetricSpec::Kind::Lp && (!(spec.p > 0.0) || !std::isfinite(spec.p)))
        throw ValidationError("Lp metric requires finite p > 0");
    if (spec.kind == MetricSpec::Kind::Dtw && spec.window && *spec.window < 0)
        throw ValidationError("DTW band half-width must be >= 0");

    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);

    bool failed = false;
    std::string fail_msg;

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        if (failed) continue;
        for (int j = i + 1; j < n; ++j) {
            try {
                d(i, j) = metric_distance(ds.curve(i), ds.curve(j), ds.grid, spec);
            } catch (const std::exception& e) {
#pragma omp critical(geofd_pairwise_error)
                {
                    if (!failed) {
                        failed = true;
                        fail_msg = "pairwise failed at pair (" + std::to_string(i) +
                                   ", " + std::to_string(j) + "): " + e.what();
                    }
                }
                break;
            }
        }
    }
    if (failed) throw ValidationError(fail_msg);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d(j, i) = d(i, j);

    return DistanceMatrix{std::move(d), spec.tag()};
}

DistanceMatrix euclidean_pairwise(const Eigen::MatrixXd& coords,
                                  const std::string& tag) {
    const auto n = coords.rows();
    if (n < 2) throw ValidationError("pairwise needs at least 2 observations");
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            d(i, j) = (coords.row(i) - coords.row(j)).norm();
            d(j, i) = d(i, j);
        }
    return DistanceMatrix{std::move(d), tag};
}

} // namespace geofd
