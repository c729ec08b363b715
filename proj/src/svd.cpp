#include "sumforge/lsa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "sumforge/error.hpp"

namespace sumforge {

namespace {

// Column-major workspace: one-sided Jacobi lives on columns.
struct ColMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    ColMat() = default;
    ColMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double* col(std::size_t c) { return a.data() + c * rows; }
    const double* col(std::size_t c) const { return a.data() + c * rows; }
    double& at(std::size_t r, std::size_t c) { return a[c * rows + r]; }
    double at(std::size_t r, std::size_t c) const { return a[c * rows + r]; }
};

double dot(const double* x, const double* y, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
    return sum;
}

ColMat identity(std::size_t n) {
    ColMat eye(n, n);
    for (std::size_t i = 0; i < n; ++i) eye.at(i, i) = 1.0;
    return eye;
}

// Hestenes one-sided Jacobi: rotate column pairs of b until all are mutually
// orthogonal relative to their norms; v accumulates the right-hand rotations
// so that b_final = b_initial * v throughout.
void jacobi_orthogonalize(ColMat& b, ColMat& v) {
    const std::size_t m = b.rows;
    const std::size_t n = b.cols;
    if (n < 2) return;

    // Threshold sits above the rounding noise of an m-term dot product.
    const double eps = std::numeric_limits<double>::epsilon();
    const double tol = std::max(1e-14, 8.0 * static_cast<double>(m) * eps);
    constexpr int kMaxSweeps = 100;

    std::vector<double> norm2(n);
    double scale2 = 0.0; // largest column norm^2 seen, for deflation
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        for (std::size_t j = 0; j < n; ++j) {
            norm2[j] = dot(b.col(j), b.col(j), m);
            scale2 = std::max(scale2, norm2[j]);
        }
        // Rank-deficient inputs drive some columns down to rounding noise,
        // where rotations would chase noise forever; such columns are
        // numerically zero singular directions and are deflated outright.
        const double deflate2 = scale2 * 1e-22;
        for (std::size_t j = 0; j < n; ++j) {
            if (norm2[j] > 0.0 && norm2[j] <= deflate2) {
                std::fill(b.col(j), b.col(j) + m, 0.0);
                norm2[j] = 0.0;
            }
        }

        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = norm2[p];
                const double beta = norm2[q];
                const double gamma = dot(b.col(p), b.col(q), m);
                const double scale = std::sqrt(alpha * beta);
                if (!(std::abs(gamma) > tol * scale)) continue; // also skips scale 0

                ++rotations;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                double* bp = b.col(p);
                double* bq = b.col(q);
                for (std::size_t i = 0; i < m; ++i) {
                    const double x = bp[i];
                    const double y = bq[i];
                    bp[i] = c * x - s * y;
                    bq[i] = s * x + c * y;
                }
                double* vp = v.col(p);
                double* vq = v.col(q);
                for (std::size_t i = 0; i < v.rows; ++i) {
                    const double x = vp[i];
                    const double y = vq[i];
                    vp[i] = c * x - s * y;
                    vq[i] = s * x + c * y;
                }
                // update identities can round below zero when a column is
                // annihilated exactly (duplicated columns)
                norm2[p] = std::max(0.0, alpha - t * gamma);
                norm2[q] = std::max(0.0, beta + t * gamma);
            }
        }
        if (rotations == 0) return;
    }
    throw Error(errc::numerical_failure, "one-sided Jacobi SVD did not converge");
}

// Householder QR of a tall matrix (m >= n): work is reduced to R in its upper
// triangle and q receives the thin orthonormal factor.
void householder_qr(const ColMat& input, ColMat& q, ColMat& r) {
    const std::size_t m = input.rows;
    const std::size_t n = input.cols;
    ColMat work = input;

    std::vector<std::vector<double>> reflectors(n);
    std::vector<double> betas(n, 0.0);

    for (std::size_t k = 0; k < n; ++k) {
        double* xk = work.col(k);
        const double normx = std::sqrt(dot(xk + k, xk + k, m - k));
        std::vector<double>& v = reflectors[k];
        v.assign(m - k, 0.0);
        if (normx > 0.0) {
            const double alpha = xk[k] >= 0.0 ? -normx : normx;
            for (std::size_t i = 0; i < m - k; ++i) v[i] = xk[k + i];
            v[0] -= alpha;
            const double vtv = dot(v.data(), v.data(), m - k);
            if (vtv > 0.0) {
                betas[k] = 2.0 / vtv;
                for (std::size_t j = k; j < n; ++j) {
                    double* cj = work.col(j);
                    const double w = betas[k] * dot(v.data(), cj + k, m - k);
                    for (std::size_t i = 0; i < m - k; ++i) cj[k + i] -= w * v[i];
                }
            }
        }
    }

    r = ColMat(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) r.at(i, j) = work.at(i, j);

    // Accumulate the thin Q by applying the reflectors to I(m, n) in reverse.
    q = ColMat(m, n);
    for (std::size_t j = 0; j < n; ++j) q.at(j, j) = 1.0;
    for (std::size_t k = n; k-- > 0;) {
        if (betas[k] == 0.0) continue;
        const std::vector<double>& v = reflectors[k];
        for (std::size_t j = 0; j < n; ++j) {
            double* cj = q.col(j);
            const double w = betas[k] * dot(v.data(), cj + k, m - k);
            for (std::size_t i = 0; i < m - k; ++i) cj[k + i] -= w * v[i];
        }
    }
}

// Fill exactly-zero singular directions of u with orthonormal completions so
// the factor stays orthonormal even for rank-deficient input.
void complete_orthonormal(ColMat& u, const std::vector<bool>& needs_fill) {
    const std::size_t m = u.rows;
    std::vector<std::size_t> existing;
    for (std::size_t j = 0; j < u.cols; ++j)
        if (!needs_fill[j]) existing.push_back(j);

    for (std::size_t j = 0; j < u.cols; ++j) {
        if (!needs_fill[j]) continue;
        std::vector<double> best;
        double best_norm = -1.0;
        for (std::size_t cand = 0; cand < m; ++cand) {
            std::vector<double> r(m, 0.0);
            r[cand] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t e : existing) {
                    const double proj = dot(r.data(), u.col(e), m);
                    const double* ue = u.col(e);
                    for (std::size_t i = 0; i < m; ++i) r[i] -= proj * ue[i];
                }
            }
            const double nr = std::sqrt(dot(r.data(), r.data(), m));
            if (nr > best_norm) {
                best_norm = nr;
                best = std::move(r);
            }
        }
        for (std::size_t i = 0; i < m; ++i) u.at(i, j) = best[i] / best_norm;
        existing.push_back(j);
    }
}

struct RawFactors {
    ColMat u;  // m x r
    std::vector<double> s;
    ColMat v;  // n x r (columns are right singular vectors)
};

// Thin SVD for m >= n via one-sided Jacobi, preconditioned with QR when the
// matrix is markedly tall.
RawFactors svd_tall(const ColMat& a) {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;

    ColMat b;
    ColMat v = identity(n);
    ColMat q;           // only used on the QR path
    bool used_qr = false;

    if (m >= 2 * n && n > 0) {
        ColMat r;
        householder_qr(a, q, r);
        b = std::move(r); // n x n
        used_qr = true;
    } else {
        b = a;
    }

    jacobi_orthogonalize(b, v);

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(dot(b.col(j), b.col(j), b.rows));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    RawFactors out;
    out.s.resize(n);
    out.v = ColMat(n, n);
    ColMat u_small(b.rows, n);
    std::vector<bool> needs_fill(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.s[j] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) out.v.at(i, j) = v.at(i, src);
        if (sigma[src] == 0.0) {
            needs_fill[j] = true;
        } else {
            const double* bc = b.col(src);
            for (std::size_t i = 0; i < b.rows; ++i) u_small.at(i, j) = bc[i] / sigma[src];
        }
    }
    complete_orthonormal(u_small, needs_fill);

    if (used_qr) {
        out.u = ColMat(m, n);
        for (std::size_t j = 0; j < n; ++j) {
            double* uj = out.u.col(j);
            for (std::size_t k = 0; k < n; ++k) {
                const double w = u_small.at(k, j);
                if (w == 0.0) continue;
                const double* qk = q.col(k);
                for (std::size_t i = 0; i < m; ++i) uj[i] += qk[i] * w;
            }
        }
    } else {
        out.u = std::move(u_small);
    }
    return out;
}

ColMat to_colmajor(const Matrix& a) {
    ColMat out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
    return out;
}

} // namespace

SvdFactors svd(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m == 0 || n == 0) {
        throw Error(errc::invalid_parameter, "svd requires a non-empty matrix");
    }

    RawFactors raw;
    bool transposed = false;
    if (m >= n) {
        raw = svd_tall(to_colmajor(a));
    } else {
        ColMat at(n, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) at.at(j, i) = a(i, j);
        raw = svd_tall(at);
        transposed = true;
    }

    const std::size_t r = std::min(m, n);
    SvdFactors out;
    out.singular_values = std::move(raw.s);

    // For A^T = U' S V'^T we have A = V' S U'^T: swap the roles back.
    const ColMat& left = transposed ? raw.v : raw.u;   // m x r
    const ColMat& right = transposed ? raw.u : raw.v;  // n x r

    out.u = Matrix(m, r);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < r; ++j) out.u(i, j) = left.at(i, j);

    out.vt = Matrix(r, n);
    for (std::size_t t = 0; t < r; ++t)
        for (std::size_t j = 0; j < n; ++j) out.vt(t, j) = right.at(j, t);

    // Sign convention: the dominant entry of each right singular vector
    // (lowest index on magnitude ties) is nonnegative.
    for (std::size_t t = 0; t < r; ++t) {
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double mag = std::abs(out.vt(t, j));
            if (mag > best) {
                best = mag;
                arg = j;
            }
        }
        if (out.vt(t, arg) < 0.0) {
            for (std::size_t j = 0; j < n; ++j) out.vt(t, j) = -out.vt(t, j);
            for (std::size_t i = 0; i < m; ++i) out.u(i, t) = -out.u(i, t);
        }
    }
    return out;
}

} // namespace sumforge
