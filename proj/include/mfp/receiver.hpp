#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mfp/linalg.hpp"
#include "mfp/optimizer.hpp"

namespace mfp {

enum class Activation { None, Tanh, Relu, Softmax, Sigmoid };
enum class HeadType { Softmax, Sigmoid };

struct DenseLayer {
    RealMatrix weight;  // out x in
    std::vector<double> bias;
    Activation activation = Activation::None;
};

/// Receiver f_theta_R: an equalization subnet (2 dense layers, tanh between)
/// that extracts an implicit channel vector hhat from y, an analytic
/// conjugate-product equalization z_i = conj(hhat_i) y_i / ||hhat||^2, and a
/// decision subnet (3 dense layers, ReLU between) ending in the head.
struct ReceiverParams {
    std::size_t n_r = 0;  // complex receive dimension; equalizer output is 2*n_r reals
    HeadType head = HeadType::Softmax;
    DenseLayer eq1, eq2;
    DenseLayer dec1, dec2, dec3;
    // Adam moments per parameter tensor, ordered
    // [eq1.w, eq1.b, eq2.w, eq2.b, dec1.w, dec1.b, dec2.w, dec2.b, dec3.w, dec3.b].
    std::vector<AdamState> adam;

    std::size_t n_outputs() const { return dec3.weight.rows; }
};

ReceiverParams init_receiver(std::size_t n_r, std::size_t n_outputs, HeadType head, std::mt19937_64& rng,
                             AdamConfig opt = {}, std::size_t eq_hidden = 64, std::size_t dec_hidden = 128);
ReceiverParams init_receiver(std::size_t n_r, std::size_t n_outputs, HeadType head, std::uint64_t seed,
                             AdamConfig opt = {}, std::size_t eq_hidden = 64, std::size_t dec_hidden = 128);

/// Everything the backward pass needs to replay the recorded forward pass.
struct ForwardTape {
    RealMatrix y;
    RealMatrix eq_pre1, eq_act1;
    RealMatrix hhat;
    std::vector<double> hnorm2;
    RealMatrix z;
    RealMatrix dec_pre1, dec_act1, dec_pre2, dec_act2, dec_pre3;
    RealMatrix probs;
};

/// Batch forward pass; returns class probabilities (Softmax head, columns sum
/// to 1) or per-bit probabilities (Sigmoid head). Throws DegenerateEqualizer
/// if ||hhat||^2 < 1e-12 for any sample.
RealMatrix receiver_forward(const ReceiverParams& params, const RealMatrix& y, ForwardTape* tape = nullptr);

struct LossResult {
    double mean = 0.0;  // nats
    std::vector<double> per_sample;
};

/// Categorical cross-entropy against class indices (Softmax head).
LossResult ce_loss(const RealMatrix& probs, std::span<const std::size_t> classes);

/// Binary cross-entropy against a 0/1 bit matrix (Sigmoid head), summed over
/// bits per sample.
LossResult binary_ce_loss(const RealMatrix& probs, const RealMatrix& target_bits);

struct ReceiverGrad {
    RealMatrix d_eq1_w, d_eq2_w, d_dec1_w, d_dec2_w, d_dec3_w;
    std::vector<double> d_eq1_b, d_eq2_b, d_dec1_b, d_dec2_b, d_dec3_b;
    RealMatrix dy;  // gradient of the mean batch loss w.r.t. the received signal
};

/// Exact gradient of the mean batch CE loss for the Softmax head.
ReceiverGrad receiver_backward(const ReceiverParams& params, const ForwardTape& tape,
                               std::span<const std::size_t> classes);

/// Exact gradient of the mean batch binary CE loss for the Sigmoid head.
ReceiverGrad receiver_backward(const ReceiverParams& params, const ForwardTape& tape,
                               const RealMatrix& target_bits);

/// One Adam update of every receiver tensor from a batch gradient.
void receiver_adam_step(ReceiverParams& params, const ReceiverGrad& grad);

/// Argmax per column, ties broken by the lowest index.
std::vector<std::size_t> detect_classes(const RealMatrix& probs);

/// Per-bit threshold at 0.5.
RealMatrix detect_bits(const RealMatrix& probs);

}  // namespace mfp
