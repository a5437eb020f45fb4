#pragma once

#include <span>
#include <vector>

namespace geofd {

// B-spline basis on [0, 1] with clamped, equidistant interior knots.
// The n_basis functions form a partition of unity on the whole interval.
class BsplineBasis {
public:
    explicit BsplineBasis(int n_basis, int degree = 3);

    int size() const { return n_basis_; }

    // All basis values at t (Cox-de Boor recursion); t clamped to [0, 1].
    std::vector<double> eval(double t) const;

    // sum_k coef[k] * B_k(t).
    double combine(std::span<const double> coef, double t) const;

private:
    int n_basis_;
    int degree_;
    std::vector<double> knots_;
};

} // namespace geofd
