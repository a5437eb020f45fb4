#pragma once

#include <span>
#include <vector>

#include "geofd/lof.hpp"
#include "geofd/pairwise.hpp"
#include "geofd/types.hpp"

// Straightforward serial implementations kept apart from the parallel
// kernels. Tests use them as independent oracles; the perf tool compares
// them against the parallel paths.
namespace geofd::ref {

// Plain double loop over all pairs, no threading.
DistanceMatrix pairwise_serial(const FunctionalDataset& ds, const MetricSpec& spec);

// LOF computed directly from its textbook definitions, one observation at a
// time (k-distance with ties, reachability, local reachability density).
std::vector<double> lof_reference(const Eigen::MatrixXd& d, int min_pts);

// Minimum alignment cost over all monotone warping paths, enumerated
// exhaustively. Only feasible for short inputs (lengths <= ~8).
double dtw_exhaustive(std::span<const double> x, std::span<const double> y);

// AUC by counting concordant/tied positive-negative pairs.
double auc_pair_count(const std::vector<double>& scores, const LabelVector& labels);

} // namespace geofd::ref
