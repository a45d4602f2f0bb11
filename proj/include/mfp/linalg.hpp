#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mfp/errors.hpp"

namespace mfp {

/// Dense real matrix, row-major. Doubles throughout; batches are stored one
/// sample per column so the innermost loops run over contiguous memory.
struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static RealMatrix identity(std::size_t n);
};

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);
RealMatrix add(const RealMatrix& a, const RealMatrix& b);
RealMatrix scale(const RealMatrix& a, double s);
double frobenius_norm(const RealMatrix& a);
bool all_finite(const RealMatrix& a);

/// Dense complex matrix with real and imaginary planes stored as separate
/// row-major arrays, so stacked-real vectors and the real embedding can be
/// built without deinterleaving.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> re;
    std::vector<double> im;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), re(r * c, 0.0), im(r * c, 0.0) {}

    std::complex<double> at(std::size_t i, std::size_t j) const {
        return {re[i * cols + j], im[i * cols + j]};
    }
    void set(std::size_t i, std::size_t j, std::complex<double> z) {
        re[i * cols + j] = z.real();
        im[i * cols + j] = z.imag();
    }

    static ComplexMatrix identity(std::size_t n);
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, std::complex<double> s);
ComplexMatrix conj_transpose(const ComplexMatrix& a);
ComplexMatrix hconcat(const std::vector<ComplexMatrix>& parts);
double frobenius_norm(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

/// Tr{G^H G} = sum of squared magnitudes of all entries.
double trace_gram(const ComplexMatrix& g);

/// Real matrix of shape 2a x 2b holding the block form [[A, -B], [B, A]] of a
/// complex a x b matrix A + jB. Acts on stacked [Re; Im] vectors.
struct RealEmbedding {
    RealMatrix mat;
};

RealEmbedding real_embed(const ComplexMatrix& g);

/// Inverse of real_embed. Throws BlockStructureViolation if the tied block
/// invariant is broken beyond 1e-12 relative tolerance.
ComplexMatrix complex_extract(const RealEmbedding& e);

}  // namespace mfp
