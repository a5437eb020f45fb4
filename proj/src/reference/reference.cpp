#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace geofd::ref {

DistanceMatrix pairwise_serial(const FunctionalDataset& ds, const MetricSpec& spec) {
    const int n = ds.n();
    if (n < 2) throw ValidationError("pairwise needs at least 2 observations");
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d(i, j) = metric_distance(ds.curve(i), ds.curve(j), ds.grid, spec);
            d(j, i) = d(i, j);
        }
    return DistanceMatrix{std::move(d), spec.tag()};
}

std::vector<double> lof_reference(const Eigen::MatrixXd& d, int min_pts) {
    const auto n = static_cast<int>(d.rows());

    auto k_distance = [&](int a) {
        std::vector<double> others;
        for (int b = 0; b < n; ++b)
            if (b != a) others.push_back(d(a, b));
        std::sort(others.begin(), others.end());
        return others[static_cast<std::size_t>(min_pts - 1)];
    };

    auto neighborhood = [&](int a) {
        const double kd = k_distance(a);
        std::vector<int> nb;
        for (int b = 0; b < n; ++b)
            if (b != a && d(a, b) <= kd) nb.push_back(b);
        return nb;
    };

    auto reach = [&](int a, int b) { return std::max(k_distance(b), d(a, b)); };

    auto lrd = [&](int a) {
        const auto nb = neighborhood(a);
        double sum = 0.0;
        for (int b : nb) sum += reach(a, b);
        return static_cast<double>(nb.size()) / std::max(sum, 1e-12);
    };

    std::vector<double> scores(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        const auto nb = neighborhood(a);
        double sum = 0.0;
        for (int b : nb) sum += lrd(b);
        scores[static_cast<std::size_t>(a)] =
            sum / (static_cast<double>(nb.size()) * lrd(a));
    }
    return scores;
}

double dtw_exhaustive(std::span<const double> x, std::span<const double> y) {
    const auto n1 = static_cast<int>(x.size());
    const auto n2 = static_cast<int>(y.size());
    if (n1 == 0 || n2 == 0) throw ValidationError("DTW requires nonempty inputs");

    double best = std::numeric_limits<double>::infinity();
    // Walk every monotone path from (0,0) to (n1-1,n2-1) with steps
    // right/down/diagonal, accumulating squared costs.
    std::function<void(int, int, double)> walk = [&](int i, int j, double cost) {
        const double di = x[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
        cost += di * di;
        if (cost >= best) return;
        if (i == n1 - 1 && j == n2 - 1) {
            best = cost;
            return;
        }
        if (i + 1 < n1 && j + 1 < n2) walk(i + 1, j + 1, cost);
        if (i + 1 < n1) walk(i + 1, j, cost);
        if (j + 1 < n2) walk(i, j + 1, cost);
    };
    walk(0, 0, 0.0);
    return std::sqrt(best);
}

double auc_pair_count(const std::vector<double>& scores, const LabelVector& labels) {
    double concordant = 0.0;
    double pairs = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!labels[i]) continue;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (labels[j]) continue;
            pairs += 1.0;
            if (scores[i] > scores[j])
                concordant += 1.0;
            else if (scores[i] == scores[j])
                concordant += 0.5;
        }
    }
    if (pairs == 0.0)
        throw ValidationError("auc: need at least one positive and one negative label");
    return concordant / pairs;
}

} // namespace geofd::ref
