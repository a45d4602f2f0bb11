#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mfp/errors.hpp"

namespace mfp {

struct AdamConfig {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    std::size_t t = 0;
    AdamConfig cfg;

    AdamState() = default;
    AdamState(std::size_t n, AdamConfig c) : m(n, 0.0), v(n, 0.0), cfg(c) {}
};

/// One Adam update in place. Throws ShapeMismatch on size disagreement and
/// NonFiniteGradient if any gradient entry is NaN/Inf.
void adam_step(AdamState& state, std::span<double> params, std::span<const double> grad);

}  // namespace mfp
