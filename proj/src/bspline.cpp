#include "geofd/bspline.hpp"

#include <algorithm>

#include "geofd/errors.hpp"

namespace geofd {

BsplineBasis::BsplineBasis(int n_basis, int degree)
    : n_basis_(n_basis), degree_(degree) {
    if (degree < 0) throw ValidationError("B-spline degree must be >= 0");
    if (n_basis < degree + 1)
        throw ValidationError("B-spline basis needs at least degree+1 functions");
    // Clamped knot vector: degree+1 copies of the ends, equidistant interior.
    const int n_interior = n_basis - degree - 1;
    knots_.assign(static_cast<std::size_t>(degree + 1), 0.0);
    for (int i = 1; i <= n_interior; ++i)
        knots_.push_back(static_cast<double>(i) / (n_interior + 1));
    knots_.insert(knots_.end(), static_cast<std::size_t>(degree + 1), 1.0);
}

std::vector<double> BsplineBasis::eval(double t) const {
    t = std::clamp(t, 0.0, 1.0);
    std::vector<double> b(static_cast<std::size_t>(n_basis_), 0.0);

    // Degree 0: indicator of the knot span containing t; the final span is
    // closed on the right so the basis sums to one at t = 1.
    for (int i = 0; i < n_basis_; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        if ((knots_[iu] <= t && t < knots_[iu + 1]) ||
            (t == 1.0 && knots_[iu] < knots_[iu + 1] && knots_[iu + 1] == 1.0)) {
            b[iu] = 1.0;
            break;
        }
    }

    std::vector<double> prev(b.size());
    for (int p = 1; p <= degree_; ++p) {
        prev = b;
        for (int i = 0; i < n_basis_; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            const auto pu = static_cast<std::size_t>(p);
            double v = 0.0;
            const double den1 = knots_[iu + pu] - knots_[iu];
            if (den1 > 0.0) v += (t - knots_[iu]) / den1 * prev[iu];
            const double den2 = knots_[iu + pu + 1] - knots_[iu + 1];
            if (den2 > 0.0 && i + 1 < n_basis_)
                v += (knots_[iu + pu + 1] - t) / den2 * prev[iu + 1];
            b[iu] = v;
        }
    }
    return b;
}

double BsplineBasis::combine(std::span<const double> coef, double t) const {
    if (static_cast<int>(coef.size()) != n_basis_)
        throw ValidationError("coefficient count does not match basis size");
    const auto b = eval(t);
    double s = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) s += coef[k] * b[k];
    return s;
}

} // namespace geofd
