#include "v2xsec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace v2xsec {

namespace {

void require_antennas(int n, const char* who)
{
    if (n < 2) {
        throw std::domain_error(std::string(who) + " needs at least 2 antennas");
    }
}

double sample_gamma(int shape, Rng& rng)
{
    std::gamma_distribution<double> dist(static_cast<double>(shape), 1.0);
    return dist(rng);
}

double sample_exp(Rng& rng)
{
    std::exponential_distribution<double> dist(1.0);
    return dist(rng);
}

}  // namespace

Complex inner(std::span<const Complex> a, std::span<const Complex> b)
{
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double squared_norm(std::span<const Complex> v)
{
    double acc = 0.0;
    for (const auto& z : v) {
        acc += std::norm(z);
    }
    return acc;
}

ComplexVector sample_cn_vector(std::size_t n, Rng& rng)
{
    std::normal_distribution<double> half_var(0.0, std::numbers::sqrt2 / 2.0);
    ComplexVector v(n);
    for (auto& z : v) {
        const double re = half_var(rng);
        const double im = half_var(rng);
        z = {re, im};
    }
    return v;
}

NullSpaceBasis null_space_basis(std::span<const Complex> h)
{
    const std::size_t n = h.size();
    if (n < 2) {
        throw std::invalid_argument("no null space: channel vector needs at least 2 entries");
    }
    const double h_norm = std::sqrt(squared_norm(h));
    if (!(h_norm > 0.0) || !std::isfinite(h_norm)) {
        throw std::domain_error("null space of a zero or non-finite vector is undefined");
    }

    // Householder reflector Q = I - 2 v v^H / (v^H v) with Q u = a e_0,
    // u = h / |h|, |a| = 1. Columns 1..n-1 of Q span the complement of u.
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = h[i] / h_norm;
    }
    const double mag0 = std::abs(v[0]);
    const Complex phase = mag0 > 0.0 ? v[0] / mag0 : Complex{1.0, 0.0};
    v[0] += phase;  // v = u - a e_0 with a = -phase
    const double vv = squared_norm(v);

    NullSpaceBasis basis;
    basis.columns.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j) {
        ComplexVector col(n);
        const Complex coeff = 2.0 * std::conj(v[j]) / vv;
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0}) - coeff * v[i];
        }
        basis.columns.push_back(std::move(col));
    }
    return basis;
}

double projected_power(std::span<const Complex> h, const NullSpaceBasis& w)
{
    double acc = 0.0;
    for (const auto& col : w.columns) {
        acc += std::norm(inner(h, col));
    }
    return acc;
}

Beamformer Beamformer::sample(int antennas, Rng& rng)
{
    require_antennas(antennas, "a beamforming transmitter");
    Beamformer bf;
    bf.h = sample_cn_vector(static_cast<std::size_t>(antennas), rng);
    bf.null_space = null_space_basis(bf.h);
    return bf;
}

BobChannelDraw sample_bob_channel_gain(int n_a, ChannelMode mode, Rng& rng)
{
    require_antennas(n_a, "Alice");
    if (mode == ChannelMode::approx) {
        return {sample_gamma(n_a, rng)};
    }
    return {squared_norm(sample_cn_vector(static_cast<std::size_t>(n_a), rng))};
}

EveChannelDraw sample_eve_gains_given(const Beamformer& alice, std::span<const Beamformer> charlies, Rng& rng)
{
    const auto n_a = alice.h.size();
    const auto h_ae = sample_cn_vector(n_a, rng);

    EveChannelDraw draw;
    draw.g_msg = std::norm(inner(h_ae, alice.h)) / squared_norm(alice.h);
    draw.g_an = projected_power(h_ae, alice.null_space);
    draw.g_cj.reserve(charlies.size());
    for (const auto& charlie : charlies) {
        const auto h_ck = sample_cn_vector(charlie.h.size(), rng);
        draw.g_cj.push_back(projected_power(h_ck, charlie.null_space));
    }
    return draw;
}

EveChannelDraw sample_eve_channel_gains(int n_a, int n_c, std::size_t n_charlies, ChannelMode mode, Rng& rng)
{
    require_antennas(n_a, "Alice");
    if (n_charlies > 0) {
        require_antennas(n_c, "a Charlie");
    }

    if (mode == ChannelMode::approx) {
        EveChannelDraw draw;
        draw.g_msg = sample_exp(rng);
        draw.g_an = sample_gamma(n_a - 1, rng);
        draw.g_cj.resize(n_charlies);
        for (auto& g : draw.g_cj) {
            g = sample_gamma(n_c - 1, rng);
        }
        return draw;
    }

    const auto alice = Beamformer::sample(n_a, rng);
    std::vector<Beamformer> charlies;
    charlies.reserve(n_charlies);
    for (std::size_t i = 0; i < n_charlies; ++i) {
        charlies.push_back(Beamformer::sample(n_c, rng));
    }
    return sample_eve_gains_given(alice, charlies, rng);
}

}  // namespace v2xsec
