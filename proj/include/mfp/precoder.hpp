#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "mfp/linalg.hpp"
#include "mfp/optimizer.hpp"

namespace mfp {

/// Trainable linear precoder. The free parameters are the complex entries of
/// G; the tied real embedding [[Re G, -Im G], [Im G, Re G]] is rebuilt from
/// them whenever it is applied, so the block tie can never drift.
struct PrecoderParams {
    ComplexMatrix g;
    AdamState adam;  // over the flattened free parameters [re | im]
    std::size_t step_count = 0;

    std::size_t n_t() const { return g.rows; }
    RealEmbedding theta() const { return real_embed(g); }
};

struct RelaxationSpec {
    double sigma_pi = 0.05;
};

/// Pre-projection draw: each real component i.i.d. N(0, 1/(2 n_t)).
ComplexMatrix random_precoder_matrix(std::size_t n_t, std::mt19937_64& rng);

PrecoderParams init_precoder(std::size_t n_t, std::uint64_t seed, AdamConfig opt = {});
PrecoderParams init_precoder(std::size_t n_t, std::mt19937_64& rng, AdamConfig opt = {});

/// theta * X on stacked-real batches (2 n_t x S).
RealMatrix precode(const PrecoderParams& params, const RealMatrix& x);

/// Scale G down so Tr{G^H G} <= n_t; interior points are left untouched.
void power_project(PrecoderParams& params);

/// x_tilde = sqrt(1 - sigma_pi^2) * xbar + w, w i.i.d. N(0, sigma_pi^2) per entry.
RealMatrix relax(const RealMatrix& xbar, RelaxationSpec spec, std::mt19937_64& rng);

/// Gradient of log N(x_tilde; sqrt(1-sigma_pi^2) xbar, sigma_pi^2 I) w.r.t. xbar:
/// (sqrt(1-sigma_pi^2)/sigma_pi^2) * (x_tilde - sqrt(1-sigma_pi^2) xbar).
RealMatrix score_log_density_grad(const RealMatrix& xbar, const RealMatrix& x_tilde, RelaxationSpec spec);

/// Score-function estimate of the loss gradient on the free parameters of G:
/// (1/S) sum_i (l_i - baseline) * grad_logpi_i * x_i^T, with the two tied block
/// copies of each complex entry summed into one complex derivative.
ComplexMatrix precoder_grad_estimate(std::span<const double> per_sample_loss, const RealMatrix& x_symbols,
                                     const RealMatrix& grad_logpi, double baseline);

/// Fold a gradient on the full 2n x 2n embedded matrix onto the complex free
/// parameters (exact chain rule of the tied parameterization).
ComplexMatrix fold_embedding_grad(const RealMatrix& dtheta);

/// One Adam update of G from a gradient on its free parameters, in place.
void precoder_adam_step(PrecoderParams& params, const ComplexMatrix& grad);

}  // namespace mfp
