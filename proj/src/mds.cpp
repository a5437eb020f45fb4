#include "geofd/mds.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace geofd {

double gof_of(const Eigen::VectorXd& eigenvalues, int d1) {
    const auto n = eigenvalues.size();
    if (d1 < 1 || d1 > n) throw ValidationError("gof_of: d1 out of range");
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        if (eigenvalues[i] < eigenvalues[i + 1])
            throw ValidationError("gof_of: eigenvalues must be sorted descending");

    double kept = 0.0, total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double v = std::max(0.0, eigenvalues[i]);
        total += v;
        if (i < d1) kept += v;
    }
    if (total == 0.0) return 1.0;
    return kept / total;
}

Embedding classical_mds(const DistanceMatrix& D, int d1) {
    const int n = D.n();
    if (D.d.rows() != D.d.cols()) throw ValidationError("distance matrix must be square");
    if (d1 < 1 || d1 > n - 1) throw ValidationError("classical_mds: d1 out of range [1, n-1]");

    // B = -1/2 J (D o D) J, expanded through row/column/grand means.
    const Eigen::MatrixXd sq = D.d.array().square();
    const Eigen::VectorXd row_mean = sq.rowwise().mean();
    const double grand = row_mean.mean();
    Eigen::MatrixXd b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b(i, j) = -0.5 * (sq(i, j) - row_mean(i) - row_mean(j) + grand);
    b = 0.5 * (b + b.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("classical_mds: eigensolver failed to converge");

    // Solver returns ascending order; flip to descending.
    Eigen::VectorXd eigs(n);
    Eigen::MatrixXd vecs(n, n);
    for (int k = 0; k < n; ++k) {
        eigs(k) = solver.eigenvalues()(n - 1 - k);
        vecs.col(k) = solver.eigenvectors().col(n - 1 - k);
    }

    // Deterministic sign: largest-magnitude entry positive, lowest index on ties.
    for (int k = 0; k < n; ++k) {
        int arg = 0;
        double best = std::abs(vecs(0, k));
        for (int i = 1; i < n; ++i) {
            const double a = std::abs(vecs(i, k));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (vecs(arg, k) < 0.0) vecs.col(k) = -vecs.col(k);
    }

    Embedding emb;
    emb.eigenvalues = eigs;
    emb.d1 = d1;
    emb.coords.resize(n, d1);
    for (int k = 0; k < d1; ++k)
        emb.coords.col(k) = std::sqrt(std::max(0.0, eigs(k))) * vecs.col(k);
    emb.gof = gof_of(eigs, d1);
    return emb;
}

} // namespace geofd
