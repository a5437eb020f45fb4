#include "geofd/deriv.hpp"

namespace geofd {

FunctionalDataset to_derivative(const FunctionalDataset& ds) {
    const int n = ds.n();
    const int m = ds.m();
    if (m < 3) throw ValidationError("to_derivative needs m >= 3 grid points");

    const auto& g = ds.grid;
    CurveMatrix out(n, m);
    for (int i = 0; i < n; ++i) {
        out(i, 0) = (ds.values(i, 1) - ds.values(i, 0)) / (g[1] - g[0]);
        for (int k = 1; k < m - 1; ++k)
            out(i, k) = (ds.values(i, k + 1) - ds.values(i, k - 1)) /
                        (g[k + 1] - g[k - 1]);
        out(i, m - 1) =
            (ds.values(i, m - 1) - ds.values(i, m - 2)) / (g[m - 1] - g[m - 2]);
    }

    MetaMap meta = ds.meta;
    meta["derivative"] = "1";
    return FunctionalDataset(ds.grid, std::move(out), ds.labels, std::move(meta));
}

} // namespace geofd
