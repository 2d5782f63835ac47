#include "pcade/pca.hpp"

#include <stdexcept>
#include <string>

namespace pcade {

Vector PcaBasis::project(std::span<const double> x) const {
    const std::size_t n = dimension();
    if (x.size() != n) {
        throw std::invalid_argument("PcaBasis::project: dimension mismatch");
    }
    Vector y(retained, 0.0);
    for (std::size_t j = 0; j < retained; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += eigenvectors(i, j) * (x[i] - mean[i]);
        }
        y[j] = s;
    }
    return y;
}

Vector PcaBasis::reconstruct(std::span<const double> y) const {
    if (y.size() != retained) {
        throw std::invalid_argument("PcaBasis::reconstruct: coordinate count mismatch");
    }
    Vector x = mean;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < retained; ++j) {
            s += eigenvectors(i, j) * y[j];
        }
        x[i] += s;
    }
    return x;
}

Vector PcaBasis::project_onto_subspace(std::span<const double> x) const {
    return reconstruct(project(x));
}

PcaBasis fit_pca(std::span<const Vector> points, std::size_t retained) {
    auto mc = mean_covariance(points);
    const std::size_t n = mc.mean.size();
    if (retained < 1 || retained > n) {
        throw std::invalid_argument("fit_pca: retained dimensions must lie in [1, " + std::to_string(n) + "]");
    }
    auto eig = sym_eigen(mc.covariance);
    return PcaBasis{std::move(mc.mean), std::move(eig.values), std::move(eig.vectors), retained};
}

std::vector<Vector> pca_projection(std::span<const Vector> points, std::size_t retained) {
    const PcaBasis basis = fit_pca(points, retained);
    std::vector<Vector> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(basis.project_onto_subspace(p));
    }
    return out;
}

} // namespace pcade
