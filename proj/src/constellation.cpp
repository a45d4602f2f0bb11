#include "mfp/constellation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mfp {

namespace {

std::size_t ilog2(std::size_t m) {
    std::size_t b = 0;
    while ((std::size_t{1} << b) < m) ++b;
    return b;
}

std::uint32_t gray(std::uint32_t i) { return i ^ (i >> 1); }

Constellation make_psk(std::size_t m) {
    Constellation c;
    c.kind = ConstellationKind::Psk;
    c.order = m;
    c.points.resize(m);
    c.bit_labels.resize(m);
    // BPSK stays on the real axis; larger orders get the conventional half-step
    // rotation so no point lies on an I/Q axis.
    const double offset = (m == 2) ? 0.0 : std::numbers::pi / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m) + offset;
        c.points[i] = {std::cos(phi), std::sin(phi)};
        c.bit_labels[i] = gray(static_cast<std::uint32_t>(i));
    }
    return c;
}

Constellation make_qam(std::size_t m) {
    Constellation c;
    c.kind = ConstellationKind::Qam;
    c.order = m;
    c.points.resize(m);
    c.bit_labels.resize(m);
    const std::size_t side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(m))));
    const std::size_t bits_per_axis = ilog2(side);
    // Average energy of the unscaled {+-1, +-3, ...} lattice is 2(side^2-1)/3.
    const double energy = 2.0 * (static_cast<double>(side * side) - 1.0) / 3.0;
    const double scale = 1.0 / std::sqrt(energy);
    for (std::size_t ix = 0; ix < side; ++ix) {
        for (std::size_t iq = 0; iq < side; ++iq) {
            const std::size_t i = ix * side + iq;
            const double lx = -static_cast<double>(side - 1) + 2.0 * static_cast<double>(ix);
            const double lq = -static_cast<double>(side - 1) + 2.0 * static_cast<double>(iq);
            c.points[i] = {lx * scale, lq * scale};
            c.bit_labels[i] = (gray(static_cast<std::uint32_t>(ix)) << bits_per_axis) |
                              gray(static_cast<std::uint32_t>(iq));
        }
    }
    return c;
}

}  // namespace

std::size_t Constellation::bits_per_symbol() const { return ilog2(order); }

Constellation make_constellation(ConstellationKind kind, std::size_t order) {
    if (kind == ConstellationKind::Psk) {
        if (order != 2 && order != 4 && order != 8 && order != 16)
            throw UnsupportedOrder("PSK order " + std::to_string(order) + " not supported");
        return make_psk(order);
    }
    if (order != 4 && order != 16 && order != 64)
        throw UnsupportedOrder("QAM order " + std::to_string(order) + " not supported");
    return make_qam(order);
}

MessageSpace make_message_space(const Constellation& alphabet, std::size_t n_streams) {
    if (n_streams == 0) throw DimensionMismatch("message space needs at least one stream");
    MessageSpace space;
    space.n_streams = n_streams;
    space.alphabet = alphabet;
    const double bits = static_cast<double>(n_streams) * std::log2(static_cast<double>(alphabet.order));
    if (bits > 62.0) throw AlphabetTooLarge("message space exceeds 2^62 entries");
    space.size = 1;
    for (std::size_t i = 0; i < n_streams; ++i) space.size *= alphabet.order;
    return space;
}

std::vector<std::complex<double>> index_to_symbols(const MessageSpace& space, std::size_t idx) {
    if (idx >= space.size) throw IndexOutOfRange("message index " + std::to_string(idx));
    std::vector<std::complex<double>> out(space.n_streams);
    const std::size_t m = space.alphabet.order;
    std::size_t rem = idx;
    for (std::size_t s = space.n_streams; s-- > 0;) {
        out[s] = space.alphabet.points[rem % m];
        rem /= m;
    }
    return out;
}

std::size_t index_from_symbols(const MessageSpace& space, const std::vector<std::complex<double>>& symbols) {
    if (symbols.size() != space.n_streams) throw DimensionMismatch("symbol vector length mismatch");
    const std::size_t m = space.alphabet.order;
    std::size_t idx = 0;
    for (std::size_t s = 0; s < space.n_streams; ++s) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < m; ++k) {
            const double d = std::norm(symbols[s] - space.alphabet.points[k]);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        idx = idx * m + best;
    }
    return idx;
}

std::vector<int> index_to_bits(const MessageSpace& space, std::size_t idx) {
    if (idx >= space.size) throw IndexOutOfRange("message index " + std::to_string(idx));
    const std::size_t m = space.alphabet.order;
    const std::size_t bps = space.alphabet.bits_per_symbol();
    std::vector<std::size_t> digits(space.n_streams);
    std::size_t rem = idx;
    for (std::size_t s = space.n_streams; s-- > 0;) {
        digits[s] = rem % m;
        rem /= m;
    }
    std::vector<int> bits;
    bits.reserve(space.n_streams * bps);
    for (std::size_t s = 0; s < space.n_streams; ++s) {
        const std::uint32_t label = space.alphabet.bit_labels[digits[s]];
        for (std::size_t b = bps; b-- > 0;) bits.push_back((label >> b) & 1u);
    }
    return bits;
}

std::vector<double> one_hot(const MessageSpace& space, std::size_t idx) {
    if (idx >= space.size) throw IndexOutOfRange("message index " + std::to_string(idx));
    std::vector<double> out(space.size, 0.0);
    out[idx] = 1.0;
    return out;
}

RealMatrix symbols_to_stacked(const MessageSpace& space, const std::vector<std::size_t>& indices) {
    const std::size_t n = space.n_streams;
    RealMatrix x(2 * n, indices.size());
    for (std::size_t s = 0; s < indices.size(); ++s) {
        const auto symbols = index_to_symbols(space, indices[s]);
        for (std::size_t i = 0; i < n; ++i) {
            x(i, s) = symbols[i].real();
            x(n + i, s) = symbols[i].imag();
        }
    }
    return x;
}

}  // namespace mfp
