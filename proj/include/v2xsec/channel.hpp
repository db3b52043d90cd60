#pragma once

#include "v2xsec/config.hpp"
#include "v2xsec/random.hpp"

#include <complex>
#include <span>
#include <vector>

namespace v2xsec {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Orthonormal basis of the orthogonal complement of a channel vector:
/// N - 1 columns of length N.
struct NullSpaceBasis {
    std::vector<ComplexVector> columns;

    std::size_t dimension() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
};

/// Power gains seen by one Eve.
struct EveChannelDraw {
    double g_msg{0.0};          // |h_AE^H h_a / |h_a||^2
    double g_an{0.0};           // |h_AE^H W_a|^2
    std::vector<double> g_cj;   // |h_ck^H W_c|^2, one per Charlie
};

struct BobChannelDraw {
    double g_bob{0.0};  // |h_a|^2
};

/// <a, b> = a^H b.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double squared_norm(std::span<const Complex> v);

/// i.i.d. CN(0, 1) entries: real and imaginary parts N(0, 1/2).
ComplexVector sample_cn_vector(std::size_t n, Rng& rng);

/// Throws std::invalid_argument for length < 2 and std::domain_error for the
/// zero vector.
NullSpaceBasis null_space_basis(std::span<const Complex> h);

/// |h^H W|^2 summed over the basis columns.
double projected_power(std::span<const Complex> h, const NullSpaceBasis& w);

BobChannelDraw sample_bob_channel_gain(int n_a, ChannelMode mode, Rng& rng);

/// Standalone draw: in exact mode every vector (h_a, h_AE, and each Charlie's
/// h_c and h_ck) is fresh.
EveChannelDraw sample_eve_channel_gains(int n_a, int n_c, std::size_t n_charlies, ChannelMode mode,
                                        Rng& rng);

/// A transmitter's beamforming state for exact-mode simulation.
struct Beamformer {
    ComplexVector h;
    NullSpaceBasis null_space;

    static Beamformer sample(int antennas, Rng& rng);
};

/// Exact-mode Eve gains against a fixed Alice beamformer and fixed Charlie
/// null spaces; only the Eve-side channel vectors are drawn.
EveChannelDraw sample_eve_gains_given(const Beamformer& alice, std::span<const Beamformer> charlies,
                                      Rng& rng);

}  // namespace v2xsec
