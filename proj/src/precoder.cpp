#include "mfp/precoder.hpp"

#include <cmath>

namespace mfp {

ComplexMatrix random_precoder_matrix(std::size_t n_t, std::mt19937_64& rng) {
    ComplexMatrix g(n_t, n_t);
    std::normal_distribution<double> dist(0.0, std::sqrt(1.0 / (2.0 * static_cast<double>(n_t))));
    for (std::size_t i = 0; i < g.re.size(); ++i) {
        g.re[i] = dist(rng);
        g.im[i] = dist(rng);
    }
    return g;
}

PrecoderParams init_precoder(std::size_t n_t, std::mt19937_64& rng, AdamConfig opt) {
    PrecoderParams params;
    params.g = random_precoder_matrix(n_t, rng);
    params.adam = AdamState(2 * n_t * n_t, opt);
    power_project(params);
    return params;
}

PrecoderParams init_precoder(std::size_t n_t, std::uint64_t seed, AdamConfig opt) {
    std::mt19937_64 rng(seed);
    return init_precoder(n_t, rng, opt);
}

RealMatrix precode(const PrecoderParams& params, const RealMatrix& x) {
    if (x.rows != 2 * params.n_t()) throw DimensionMismatch("precode: input rows != 2 n_t");
    return matmul(params.theta().mat, x);
}

void power_project(PrecoderParams& params) {
    const double budget = static_cast<double>(params.n_t());
    const double power = trace_gram(params.g);
    if (power > budget) {
        const double factor = std::sqrt(budget / power);
        for (std::size_t i = 0; i < params.g.re.size(); ++i) {
            params.g.re[i] *= factor;
            params.g.im[i] *= factor;
        }
    }
}

RealMatrix relax(const RealMatrix& xbar, RelaxationSpec spec, std::mt19937_64& rng) {
    const double mean_scale = std::sqrt(1.0 - spec.sigma_pi * spec.sigma_pi);
    RealMatrix out(xbar.rows, xbar.cols);
    std::normal_distribution<double> dist(0.0, spec.sigma_pi);
    for (std::size_t s = 0; s < xbar.cols; ++s)
        for (std::size_t r = 0; r < xbar.rows; ++r) out(r, s) = mean_scale * xbar(r, s) + dist(rng);
    return out;
}

RealMatrix score_log_density_grad(const RealMatrix& xbar, const RealMatrix& x_tilde, RelaxationSpec spec) {
    if (xbar.rows != x_tilde.rows || xbar.cols != x_tilde.cols)
        throw DimensionMismatch("score_log_density_grad: shape mismatch");
    const double mean_scale = std::sqrt(1.0 - spec.sigma_pi * spec.sigma_pi);
    const double factor = mean_scale / (spec.sigma_pi * spec.sigma_pi);
    RealMatrix out(xbar.rows, xbar.cols);
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = factor * (x_tilde.data[i] - mean_scale * xbar.data[i]);
    return out;
}

ComplexMatrix fold_embedding_grad(const RealMatrix& dtheta) {
    if (dtheta.rows != dtheta.cols || dtheta.rows % 2 != 0)
        throw DimensionMismatch("fold_embedding_grad: expected square 2n x 2n gradient");
    const std::size_t n = dtheta.rows / 2;
    ComplexMatrix out(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            out.re[a * n + b] = dtheta(a, b) + dtheta(n + a, n + b);
            out.im[a * n + b] = dtheta(n + a, b) - dtheta(a, n + b);
        }
    }
    return out;
}

ComplexMatrix precoder_grad_estimate(std::span<const double> per_sample_loss, const RealMatrix& x_symbols,
                                     const RealMatrix& grad_logpi, double baseline) {
    const std::size_t s_count = per_sample_loss.size();
    if (x_symbols.cols != s_count || grad_logpi.cols != s_count || x_symbols.rows != grad_logpi.rows)
        throw DimensionMismatch("precoder_grad_estimate: batch shapes disagree");
    const std::size_t dim = x_symbols.rows;
    RealMatrix dtheta(dim, dim);
    for (std::size_t s = 0; s < s_count; ++s) {
        const double weight = (per_sample_loss[s] - baseline) / static_cast<double>(s_count);
        if (weight == 0.0) continue;
        for (std::size_t a = 0; a < dim; ++a) {
            const double ga = weight * grad_logpi(a, s);
            for (std::size_t b = 0; b < dim; ++b) dtheta(a, b) += ga * x_symbols(b, s);
        }
    }
    return fold_embedding_grad(dtheta);
}

void precoder_adam_step(PrecoderParams& params, const ComplexMatrix& grad) {
    const std::size_t n2 = params.g.re.size();
    if (grad.re.size() != n2) throw ShapeMismatch("precoder_adam_step: gradient size mismatch");
    std::vector<double> flat_params(2 * n2), flat_grad(2 * n2);
    for (std::size_t i = 0; i < n2; ++i) {
        flat_params[i] = params.g.re[i];
        flat_params[n2 + i] = params.g.im[i];
        flat_grad[i] = grad.re[i];
        flat_grad[n2 + i] = grad.im[i];
    }
    adam_step(params.adam, flat_params, flat_grad);
    for (std::size_t i = 0; i < n2; ++i) {
        params.g.re[i] = flat_params[i];
        params.g.im[i] = flat_params[n2 + i];
    }
    params.step_count += 1;
}

}  // namespace mfp
