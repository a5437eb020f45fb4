#pragma once

namespace geofd {

// Beta(a, b) density on [0, 1].
double beta_pdf(double t, double a, double b);

// Regularized incomplete beta function I_t(a, b), i.e. the Beta(a, b) CDF.
double beta_cdf(double t, double a, double b);

} // namespace geofd
