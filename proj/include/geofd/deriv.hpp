#pragma once

#include "geofd/types.hpp"

namespace geofd {

// First derivatives on the same grid: central differences on interior
// points, one-sided differences at the endpoints. Labels carry over.
FunctionalDataset to_derivative(const FunctionalDataset& ds);

} // namespace geofd
