#include "mfp/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mfp {

RealMatrix ChannelOracle::sample(const RealMatrix& xbar) {
    auto& st = *state_;
    if (xbar.rows != 2 * st.h.cols)
        throw DimensionMismatch("channel sample: expected " + std::to_string(2 * st.h.cols) +
                                " input rows, got " + std::to_string(xbar.rows));
    if (xbar.cols < 1) throw DimensionMismatch("channel sample: empty batch");
    RealMatrix y = matmul(st.h_embed.mat, xbar);
    std::normal_distribution<double> noise(0.0, std::sqrt(st.sigma2 / 2.0));
    for (std::size_t s = 0; s < y.cols; ++s)
        for (std::size_t r = 0; r < y.rows; ++r) y(r, s) += noise(st.rng);
    return y;
}

std::size_t ChannelOracle::n_tx() const { return state_->h.cols; }
std::size_t ChannelOracle::n_rx() const { return state_->h.rows; }

const ComplexMatrix& PrivilegedChannel::channel_matrix() const { return state_->h; }
const RealEmbedding& PrivilegedChannel::channel_embedding() const { return state_->h_embed; }
double PrivilegedChannel::noise_variance() const { return state_->sigma2; }
ChannelOracle PrivilegedChannel::oracle() const { return ChannelOracle(state_); }
RealMatrix PrivilegedChannel::sample(const RealMatrix& xbar) { return ChannelOracle(state_).sample(xbar); }

std::pair<ChannelOracle, PrivilegedChannel> make_channel(const ComplexMatrix& h, double snr_db,
                                                         std::uint64_t seed) {
    const double gram = trace_gram(h);
    if (gram <= 0.0) throw ZeroChannel("channel matrix is identically zero");
    auto state = std::make_shared<detail::ChannelState>();
    state->h = h;
    state->h_embed = real_embed(h);
    state->sigma2 = gram / (static_cast<double>(h.cols) * std::pow(10.0, snr_db / 10.0));
    state->rng.seed(seed);
    return {ChannelOracle(state), PrivilegedChannel(state)};
}

std::vector<double> exact_posterior(const PrivilegedChannel& priv, const ComplexMatrix& g,
                                    const MessageSpace& space, std::span<const double> y) {
    const ComplexMatrix& h = priv.channel_matrix();
    if (y.size() != 2 * h.rows) throw DimensionMismatch("exact_posterior: received vector length mismatch");
    const double sigma2 = priv.noise_variance();
    const RealEmbedding hg = real_embed(matmul(h, g));

    std::vector<double> logp(space.size);
    const std::size_t dim = 2 * h.rows;
    std::vector<double> image(dim);
    for (std::size_t m = 0; m < space.size; ++m) {
        const auto symbols = index_to_symbols(space, m);
        std::fill(image.begin(), image.end(), 0.0);
        for (std::size_t r = 0; r < dim; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < space.n_streams; ++c) {
                acc += hg.mat(r, c) * symbols[c].real();
                acc += hg.mat(r, space.n_streams + c) * symbols[c].imag();
            }
            image[r] = acc;
        }
        double dist2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            const double d = y[r] - image[r];
            dist2 += d * d;
        }
        logp[m] = -dist2 / sigma2;
    }
    const double shift = *std::max_element(logp.begin(), logp.end());
    double total = 0.0;
    for (double& lp : logp) {
        lp = std::exp(lp - shift);
        total += lp;
    }
    for (double& lp : logp) lp /= total;
    return logp;
}

}  // namespace mfp
