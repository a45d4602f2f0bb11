#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "mfp/constellation.hpp"
#include "mfp/linalg.hpp"

namespace mfp {

namespace detail {
struct ChannelState {
    ComplexMatrix h;
    RealEmbedding h_embed;
    double sigma2 = 0.0;
    std::mt19937_64 rng;
};
}  // namespace detail

/// Blinded view of the channel: forward sampling only. No accessor for the
/// channel matrix or the noise variance exists on this type; the model-free
/// trainer sees nothing else.
class ChannelOracle {
  public:
    /// y = embed(H) xbar + n per column, noise i.i.d. N(0, sigma2/2) per real
    /// component. Input 2*n_tx x S, output 2*n_rx x S.
    RealMatrix sample(const RealMatrix& xbar);

    std::size_t n_tx() const;
    std::size_t n_rx() const;

  private:
    friend class PrivilegedChannel;
    friend std::pair<ChannelOracle, PrivilegedChannel> make_channel(const ComplexMatrix& h,
                                                                    double snr_db, std::uint64_t seed);
    explicit ChannelOracle(std::shared_ptr<detail::ChannelState> state) : state_(std::move(state)) {}
    std::shared_ptr<detail::ChannelState> state_;
};

/// Evaluation-side view sharing the oracle's state. Holds the ground truth the
/// blinded interface hides.
class PrivilegedChannel {
  public:
    const ComplexMatrix& channel_matrix() const;
    const RealEmbedding& channel_embedding() const;
    double noise_variance() const;

    /// Blinded view over the same shared state (same noise stream).
    ChannelOracle oracle() const;
    RealMatrix sample(const RealMatrix& xbar);

  private:
    friend std::pair<ChannelOracle, PrivilegedChannel> make_channel(const ComplexMatrix& h,
                                                                    double snr_db, std::uint64_t seed);
    explicit PrivilegedChannel(std::shared_ptr<detail::ChannelState> state) : state_(std::move(state)) {}
    std::shared_ptr<detail::ChannelState> state_;
};

/// sigma2 = Tr{H^H H} / (n_tx * 10^(snr_db/10)). Throws ZeroChannel for H = 0.
std::pair<ChannelOracle, PrivilegedChannel> make_channel(const ComplexMatrix& h, double snr_db,
                                                         std::uint64_t seed);

/// Exact message posterior p(x_m | y) under the true channel and precoder G:
/// proportional to exp(-||y - embed(HG) x_m||^2 / sigma2), max-shifted and
/// normalized. y is a stacked-real vector of length 2*n_rx.
std::vector<double> exact_posterior(const PrivilegedChannel& priv, const ComplexMatrix& g,
                                    const MessageSpace& space, std::span<const double> y);

}  // namespace mfp
