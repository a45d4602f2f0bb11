#include "mfp/optimizer.hpp"

#include <cmath>

namespace mfp {

void adam_step(AdamState& state, std::span<double> params, std::span<const double> grad) {
    if (params.size() != grad.size() || params.size() != state.m.size() || params.size() != state.v.size())
        throw ShapeMismatch("adam_step: parameter/gradient/moment sizes disagree");
    for (double g : grad)
        if (!std::isfinite(g)) throw NonFiniteGradient("adam_step: non-finite gradient entry");

    state.t += 1;
    const auto& c = state.cfg;
    const double bc1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grad[i];
        state.m[i] = c.beta1 * state.m[i] + (1.0 - c.beta1) * g;
        state.v[i] = c.beta2 * state.v[i] + (1.0 - c.beta2) * g * g;
        const double mhat = state.m[i] / bc1;
        const double vhat = state.v[i] / bc2;
        params[i] -= c.lr * mhat / (std::sqrt(vhat) + c.eps);
    }
}

}  // namespace mfp
