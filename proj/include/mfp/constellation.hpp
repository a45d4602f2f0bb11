#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mfp/errors.hpp"
#include "mfp/linalg.hpp"

namespace mfp {

enum class ConstellationKind { Psk, Qam };

/// Finite signal alphabet, normalized to unit average energy, with Gray bit
/// labels. bit_labels[i] packs the log2(M) label bits of point i, MSB first.
struct Constellation {
    ConstellationKind kind = ConstellationKind::Psk;
    std::size_t order = 0;
    std::vector<std::complex<double>> points;
    std::vector<std::uint32_t> bit_labels;

    std::size_t bits_per_symbol() const;
};

/// Supported orders: PSK 2/4/8/16, QAM 4/16/64. Throws UnsupportedOrder otherwise.
Constellation make_constellation(ConstellationKind kind, std::size_t order);

/// Index space of message vectors: n_streams constellation symbols, indexed by
/// a stream-major mixed-radix integer (stream 0 is the most significant digit).
struct MessageSpace {
    std::size_t n_streams = 0;
    Constellation alphabet;
    std::size_t size = 0;

    std::size_t bits_per_message() const { return n_streams * alphabet.bits_per_symbol(); }
};

MessageSpace make_message_space(const Constellation& alphabet, std::size_t n_streams);

std::vector<std::complex<double>> index_to_symbols(const MessageSpace& space, std::size_t idx);
std::size_t index_from_symbols(const MessageSpace& space, const std::vector<std::complex<double>>& symbols);

/// Concatenated per-stream Gray labels, stream 0 first, MSB-first within a stream.
std::vector<int> index_to_bits(const MessageSpace& space, std::size_t idx);

std::vector<double> one_hot(const MessageSpace& space, std::size_t idx);

/// Stacked-real batch of message symbol vectors: column s holds
/// [Re x(indices[s]); Im x(indices[s])], shape 2*n_streams x S.
RealMatrix symbols_to_stacked(const MessageSpace& space, const std::vector<std::size_t>& indices);

}  // namespace mfp
