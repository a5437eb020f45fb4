#include "geofd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "geofd/errors.hpp"

namespace geofd {

std::vector<double> midranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double auc(const std::vector<double>& scores, const LabelVector& labels) {
    if (scores.size() != labels.size())
        throw ValidationError("auc: score/label length mismatch");
    std::size_t n_pos = 0;
    for (auto l : labels) n_pos += l ? 1 : 0;
    const std::size_t n_neg = labels.size() - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw ValidationError("auc: need at least one positive and one negative label");

    const auto ranks = midranks(scores);
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i]) rank_sum += ranks[i];
    const double np = static_cast<double>(n_pos);
    return (rank_sum - np * (np + 1.0) / 2.0) / (np * static_cast<double>(n_neg));
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw ValidationError("spearman: length mismatch");
    if (a.size() < 3) throw ValidationError("spearman: need length >= 3");
    const auto ra = midranks(a);
    const auto rb = midranks(b);
    const auto n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        const double dx = ra[i] - mean;
        const double dy = rb[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw ValidationError("spearman: constant input has no rank variance");
    return sxy / std::sqrt(sxx * syy);
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) throw ValidationError("quantile of empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("quantile: p must lie in [0,1]");
    std::sort(values.begin(), values.end());
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

} // namespace geofd
