#include "geofd/isomap.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <vector>

namespace geofd {

namespace {

struct Edge {
    int to;
    double w;
};

using AdjList = std::vector<std::vector<Edge>>;

void add_edge(AdjList& adj, int u, int v, double w) {
    for (const auto& e : adj[static_cast<std::size_t>(u)])
        if (e.to == v) return;
    adj[static_cast<std::size_t>(u)].push_back({v, w});
    adj[static_cast<std::size_t>(v)].push_back({u, w});
}

std::vector<int> components(const AdjList& adj) {
    const auto n = static_cast<int>(adj.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& e : adj[static_cast<std::size_t>(u)])
                if (comp[static_cast<std::size_t>(e.to)] < 0) {
                    comp[static_cast<std::size_t>(e.to)] = c;
                    stack.push_back(e.to);
                }
        }
        ++c;
    }
    return comp;
}

} // namespace

Eigen::MatrixXd geodesic_distances(const DistanceMatrix& D, int k) {
    const int n = D.n();
    if (k < 1 || k > n - 1) throw ValidationError("isomap: k out of range [1, n-1]");

    // k nearest neighbors per vertex, ties broken by index.
    AdjList adj(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double da = a == i ? -1.0 : D.d(i, a);
            const double db = b == i ? -1.0 : D.d(i, b);
            return da < db || (da == db && a < b);
        });
        // order[0] == i itself (sorted with key -1).
        for (int r = 1; r <= k; ++r) {
            const int j = order[static_cast<std::size_t>(r)];
            add_edge(adj, i, j, D.d(i, j));
        }
    }

    // Bridge disconnected components with their shortest crossing edge.
    auto comp = components(adj);
    const int n_comp = 1 + *std::max_element(comp.begin(), comp.end());
    if (n_comp > 1) {
        for (int a = 0; a < n_comp; ++a)
            for (int b = a + 1; b < n_comp; ++b) {
                int bi = -1, bj = -1;
                double best = std::numeric_limits<double>::infinity();
                for (int i = 0; i < n; ++i) {
                    if (comp[static_cast<std::size_t>(i)] != a) continue;
                    for (int j = 0; j < n; ++j) {
                        if (comp[static_cast<std::size_t>(j)] != b) continue;
                        if (D.d(i, j) < best) {
                            best = D.d(i, j);
                            bi = i;
                            bj = j;
                        }
                    }
                }
                add_edge(adj, bi, bj, best);
            }
    }

    // Dijkstra per source; sources fan out in parallel.
    Eigen::MatrixXd geo(n, n);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        std::vector<double> dist(static_cast<std::size_t>(n),
                                 std::numeric_limits<double>::infinity());
        dist[static_cast<std::size_t>(s)] = 0.0;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.emplace(0.0, s);
        while (!pq.empty()) {
            const auto [du, u] = pq.top();
            pq.pop();
            if (du > dist[static_cast<std::size_t>(u)]) continue;
            for (const auto& e : adj[static_cast<std::size_t>(u)]) {
                const double nd = du + e.w;
                if (nd < dist[static_cast<std::size_t>(e.to)]) {
                    dist[static_cast<std::size_t>(e.to)] = nd;
                    pq.emplace(nd, e.to);
                }
            }
        }
        for (int t = 0; t < n; ++t) geo(s, t) = dist[static_cast<std::size_t>(t)];
    }

    // Exact symmetry: keep the upper triangle.
    for (int i = 0; i < n; ++i) {
        geo(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) geo(j, i) = geo(i, j);
    }
    return geo;
}

Embedding isomap(const DistanceMatrix& D, int k, int d1) {
    const int n = D.n();
    if (d1 < 1 || d1 > n - 1) throw ValidationError("isomap: d1 out of range [1, n-1]");
    DistanceMatrix geo{geodesic_distances(D, k), D.metric_tag + "+geodesic"};
    return classical_mds(geo, d1);
}

} // namespace geofd
