#include "geofd/betafun.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "geofd/errors.hpp"

namespace geofd {

namespace {

void check_shape(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw ValidationError("Beta shape parameters must be finite and > 0");
}

} // namespace

double beta_pdf(double t, double a, double b) {
    check_shape(a, b);
    if (t < 0.0 || t > 1.0) return 0.0;
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    // pow(0, 0) == 1, so the a == 1 / b == 1 edges come out right.
    return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0) / std::exp(log_beta);
}

double beta_cdf(double t, double a, double b) {
    check_shape(a, b);
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return boost::math::ibeta(a, b, t);
}

} // namespace geofd
