#pragma once

#include "pcade/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace pcade {

/// Default number of retained principal directions.
inline constexpr std::size_t kDefaultRetainedDims = 5;

/// min(5, n), or min(requested, n) when requested > 0.
inline std::size_t effective_retained_dims(std::size_t requested, std::size_t dimension) {
    return std::min(requested == 0 ? kDefaultRetainedDims : requested, dimension);
}

/// Principal axes of a point cloud: mean, full eigen-spectrum of the
/// covariance (descending), and how many leading axes are kept.
struct PcaBasis {
    Vector mean;
    Vector eigenvalues;
    Matrix eigenvectors; ///< n x n, orthonormal columns
    std::size_t retained = 0;

    std::size_t dimension() const { return mean.size(); }

    /// y = V_r^T (x - m), length `retained`.
    Vector project(std::span<const double> x) const;
    /// x' = m + V_r y.
    Vector reconstruct(std::span<const double> y) const;
    /// reconstruct(project(x)).
    Vector project_onto_subspace(std::span<const double> x) const;
};

/// Fits the basis on `points` (k >= 2) and keeps `retained` in [1, n] axes.
PcaBasis fit_pca(std::span<const Vector> points, std::size_t retained);

/// The PCA-projection search operator: fit PCA on the given points, project
/// each onto the affine subspace through their mean spanned by the leading
/// `retained` eigenvectors, and return the reconstructions in input order.
/// Identical or collinear inputs come back unchanged, and retained == n is the
/// identity up to round-off.
std::vector<Vector> pca_projection(std::span<const Vector> points, std::size_t retained);

} // namespace pcade
