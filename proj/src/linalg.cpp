#include "mfp/linalg.hpp"

#include <cmath>
#include <string>

namespace mfp {

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols != b.rows)
        throw DimensionMismatch("real matmul: " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                                " * " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
    RealMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        double* outi = &out.data[i * out.cols];
        const double* ai = &a.data[i * a.cols];
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = &b.data[k * b.cols];
            for (std::size_t j = 0; j < b.cols; ++j) outi[j] += aik * bk[j];
        }
    }
    return out;
}

RealMatrix transpose(const RealMatrix& a) {
    RealMatrix out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = a(i, j);
    return out;
}

RealMatrix add(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("real add: shape mismatch");
    RealMatrix out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

RealMatrix scale(const RealMatrix& a, double s) {
    RealMatrix out = a;
    for (double& x : out.data) x *= s;
    return out;
}

double frobenius_norm(const RealMatrix& a) {
    double sum = 0.0;
    for (double x : a.data) sum += x * x;
    return std::sqrt(sum);
}

bool all_finite(const RealMatrix& a) {
    for (double x : a.data)
        if (!std::isfinite(x)) return false;
    return true;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.re[i * n + i] = 1.0;
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("complex matmul: inner dimensions differ");
    ComplexMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double ar = a.re[i * a.cols + k];
            const double ai = a.im[i * a.cols + k];
            if (ar == 0.0 && ai == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const double br = b.re[k * b.cols + j];
                const double bi = b.im[k * b.cols + j];
                out.re[i * out.cols + j] += ar * br - ai * bi;
                out.im[i * out.cols + j] += ar * bi + ai * br;
            }
        }
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("complex add: shape mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.re.size(); ++i) {
        out.re[i] += b.re[i];
        out.im[i] += b.im[i];
    }
    return out;
}

ComplexMatrix scale(const ComplexMatrix& a, std::complex<double> s) {
    ComplexMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.re.size(); ++i) {
        out.re[i] = a.re[i] * s.real() - a.im[i] * s.imag();
        out.im[i] = a.re[i] * s.imag() + a.im[i] * s.real();
    }
    return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            out.re[j * out.cols + i] = a.re[i * a.cols + j];
            out.im[j * out.cols + i] = -a.im[i * a.cols + j];
        }
    }
    return out;
}

ComplexMatrix hconcat(const std::vector<ComplexMatrix>& parts) {
    if (parts.empty()) throw DimensionMismatch("hconcat: no blocks");
    std::size_t rows = parts.front().rows;
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows != rows) throw DimensionMismatch("hconcat: row counts differ");
        cols += p.cols;
    }
    ComplexMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < p.cols; ++j) out.set(i, offset + j, p.at(i, j));
        offset += p.cols;
    }
    return out;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.re.size(); ++i) sum += a.re[i] * a.re[i] + a.im[i] * a.im[i];
    return std::sqrt(sum);
}

bool all_finite(const ComplexMatrix& a) {
    for (std::size_t i = 0; i < a.re.size(); ++i)
        if (!std::isfinite(a.re[i]) || !std::isfinite(a.im[i])) return false;
    return true;
}

double trace_gram(const ComplexMatrix& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.re.size(); ++i) sum += g.re[i] * g.re[i] + g.im[i] * g.im[i];
    return sum;
}

RealEmbedding real_embed(const ComplexMatrix& g) {
    const std::size_t a = g.rows, b = g.cols;
    RealEmbedding out;
    out.mat = RealMatrix(2 * a, 2 * b);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            const double re = g.re[i * b + j];
            const double im = g.im[i * b + j];
            out.mat(i, j) = re;
            out.mat(i, b + j) = -im;
            out.mat(a + i, j) = im;
            out.mat(a + i, b + j) = re;
        }
    }
    return out;
}

ComplexMatrix complex_extract(const RealEmbedding& e) {
    if (e.mat.rows % 2 != 0 || e.mat.cols % 2 != 0)
        throw BlockStructureViolation("embedding has odd dimensions");
    const std::size_t a = e.mat.rows / 2, b = e.mat.cols / 2;
    double scale = 0.0;
    for (double x : e.mat.data) scale = std::max(scale, std::abs(x));
    const double tol = 1e-12 * std::max(scale, 1.0);
    ComplexMatrix out(a, b);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            const double re = e.mat(i, j);
            const double im = e.mat(a + i, j);
            if (std::abs(e.mat(a + i, b + j) - re) > tol || std::abs(e.mat(i, b + j) + im) > tol)
                throw BlockStructureViolation("tied block structure violated at (" + std::to_string(i) +
                                              "," + std::to_string(j) + ")");
            out.re[i * b + j] = re;
            out.im[i * b + j] = im;
        }
    }
    return out;
}

}  // namespace mfp
