#pragma once

#include <string>
#include <vector>

#include "geofd/mds.hpp"
#include "geofd/pairwise.hpp"

namespace geofd {

struct LofConfig {
    int min_pts = 2; // neighborhood size, must satisfy 2 <= min_pts <= n-1
};

// One anomaly score per observation; higher = more outlying.
struct ScoreVector {
    std::vector<double> scores;
    std::string method_tag;
};

// round(0.75 n), half away from zero, clamped to [2, n-1]. Requires n >= 4.
int default_min_pts(int n);

// Local outlier factor on arbitrary dissimilarities. k-distance neighborhoods
// include all ties; reachability sums are floored at 1e-12 so exact
// duplicates get large equal finite densities instead of infinities.
ScoreVector lof_from_distances(const DistanceMatrix& D, LofConfig cfg);

// LOF on Euclidean distances between embedding coordinates.
ScoreVector lof_on_embedding(const Embedding& emb, LofConfig cfg);

} // namespace geofd
