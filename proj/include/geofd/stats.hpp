#pragma once

#include <vector>

#include "geofd/types.hpp"

namespace geofd {

// Average ranks (1-based), ties receive the midrank.
std::vector<double> midranks(const std::vector<double>& values);

// Mann-Whitney AUC with midrank tie correction:
// (sum of positive ranks - n+(n+ + 1)/2) / (n+ * n-). Requires at least one
// positive and one negative label.
double auc(const std::vector<double>& scores, const LabelVector& labels);

// Spearman rank correlation: Pearson correlation of midranks. Requires
// length >= 3 and non-constant inputs.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

// Type-7 (linear interpolation) sample quantile, p in [0, 1].
double quantile(std::vector<double> values, double p);

} // namespace geofd
