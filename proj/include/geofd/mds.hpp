#pragma once

#include <Eigen/Core>

#include "geofd/pairwise.hpp"

namespace geofd {

// Low-dimensional coordinates from classical scaling, together with the full
// eigenvalue spectrum of the double-centered squared-distance matrix.
struct Embedding {
    Eigen::MatrixXd coords;      // n x d1, columns ordered by descending eigenvalue
    Eigen::VectorXd eigenvalues; // all n values, sorted descending
    int d1 = 0;
    double gof = 0.0;
};

// Retained nonnegative eigenvalue mass over total nonnegative mass;
// returns 1 when the spectrum has no positive mass.
double gof_of(const Eigen::VectorXd& eigenvalues, int d1);

// Classical (Torgerson) multidimensional scaling: eigendecomposition of
// B = -1/2 J (D o D) J. Negative eigenvalues are clamped to zero when
// scaling coordinates but kept in the reported spectrum. Each eigenvector is
// flipped so its largest-magnitude entry is positive (ties: lowest index).
Embedding classical_mds(const DistanceMatrix& D, int d1);

} // namespace geofd
