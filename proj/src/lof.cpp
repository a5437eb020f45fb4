#include "geofd/lof.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geofd {

int default_min_pts(int n) {
    if (n < 4) throw ValidationError("default_min_pts requires n >= 4");
    auto k = static_cast<int>(std::llround(0.75 * n));
    return std::clamp(k, 2, n - 1);
}

ScoreVector lof_from_distances(const DistanceMatrix& D, LofConfig cfg) {
    const int n = D.n();
    const int k = cfg.min_pts;
    if (k < 2 || k > n - 1)
        throw ValidationError("minPts out of range [2, n-1]");

    std::vector<double> kdist(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(static)
    for (int a = 0; a < n; ++a) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n) - 1);
        for (int b = 0; b < n; ++b)
            if (b != a) order.push_back(b);
        std::sort(order.begin(), order.end(), [&](int u, int v) {
            return D.d(a, u) < D.d(a, v) || (D.d(a, u) == D.d(a, v) && u < v);
        });
        const double kd = D.d(a, order[static_cast<std::size_t>(k - 1)]);
        kdist[static_cast<std::size_t>(a)] = kd;
        auto& nb = nbrs[static_cast<std::size_t>(a)];
        for (int b : order) {
            if (D.d(a, b) > kd) break;
            nb.push_back(b);
        }
    }

    std::vector<double> lrd(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (int a = 0; a < n; ++a) {
        double sum = 0.0;
        for (int b : nbrs[static_cast<std::size_t>(a)])
            sum += std::max(kdist[static_cast<std::size_t>(b)], D.d(a, b));
        lrd[static_cast<std::size_t>(a)] =
            static_cast<double>(nbrs[static_cast<std::size_t>(a)].size()) /
            std::max(sum, 1e-12);
    }

    std::vector<double> scores(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (int a = 0; a < n; ++a) {
        double sum = 0.0;
        for (int b : nbrs[static_cast<std::size_t>(a)])
            sum += lrd[static_cast<std::size_t>(b)];
        scores[static_cast<std::size_t>(a)] =
            sum / (static_cast<double>(nbrs[static_cast<std::size_t>(a)].size()) *
                   lrd[static_cast<std::size_t>(a)]);
    }

    return ScoreVector{std::move(scores),
                       "lof(minPts=" + std::to_string(k) + ")@" + D.metric_tag};
}

ScoreVector lof_on_embedding(const Embedding& emb, LofConfig cfg) {
    auto D = euclidean_pairwise(emb.coords,
                                "euclidean(mds-" + std::to_string(emb.d1) + ")");
    return lof_from_distances(D, cfg);
}

} // namespace geofd
