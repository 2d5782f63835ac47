#include "pcade/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pcade {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

void Matrix::set_column(std::size_t c, std::span<const double> values) {
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = values[r];
    }
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) {
        s += v * v;
    }
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("Matrix product: inner dimensions differ");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols_ != x.size()) {
        throw std::invalid_argument("Matrix-vector product: size mismatch");
    }
    Vector out(a.rows_, 0.0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols_; ++j) {
            s += a(i, j) * x[j];
        }
        out[i] = s;
    }
    return out;
}

MeanCovariance mean_covariance(std::span<const Vector> points) {
    const std::size_t k = points.size();
    if (k < 2) {
        throw std::invalid_argument("mean_covariance: need at least 2 points, got " + std::to_string(k));
    }
    const std::size_t n = points.front().size();
    MeanCovariance out{Vector(n, 0.0), Matrix(n, n)};
    for (const auto& p : points) {
        if (p.size() != n) {
            throw std::invalid_argument("mean_covariance: points differ in length");
        }
        for (std::size_t i = 0; i < n; ++i) {
            out.mean[i] += p[i];
        }
    }
    for (double& m : out.mean) {
        m /= static_cast<double>(k);
    }

    Vector d(n);
    for (const auto& p : points) {
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = p[i] - out.mean[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                out.covariance(i, j) += d[i] * d[j];
            }
        }
    }
    const double scale = 1.0 / static_cast<double>(k - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = out.covariance(i, j) * scale;
            out.covariance(i, j) = v;
            out.covariance(j, i) = v;
        }
    }
    return out;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                s += a(i, j) * a(i, j);
            }
        }
    }
    return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;
constexpr double kConvergence = 1e-12;
constexpr double kSymmetryTolerance = 1e-10;
constexpr double kSignThreshold = 1e-12;

} // namespace

SymmetricEigen sym_eigen(const Matrix& input) {
    const std::size_t n = input.rows();
    if (input.cols() != n) {
        throw std::invalid_argument("sym_eigen: matrix must be square");
    }
    const double norm = input.frobenius_norm();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(input(i, j) - input(j, i)) > kSymmetryTolerance * norm) {
                throw std::invalid_argument("sym_eigen: matrix is not symmetric");
            }
        }
    }

    Matrix a = input;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = avg;
            a(j, i) = avg;
        }
    }
    Matrix v = Matrix::identity(n);
    const double tolerance = kConvergence * (1.0 + norm);

    int sweep = 0;
    while (sweep < kMaxSweeps && off_diagonal_norm(a) >= tolerance) {
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- J^T A J, with J the (p, q) rotation.
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    SymmetricEigen out{Vector(n), Matrix(n, n), sweep};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.values[j] = a(src, src);
        Vector col = v.column(src);
        for (double c : col) {
            if (std::abs(c) > kSignThreshold) {
                if (c < 0.0) {
                    for (double& x : col) {
                        x = -x;
                    }
                }
                break;
            }
        }
        out.vectors.set_column(j, col);
    }
    return out;
}

} // namespace pcade
