#include "v2xsec/secrecy.hpp"

#include "v2xsec/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace v2xsec {

namespace {

double path_gain(double d, double alpha)
{
    if (!(d > 0.0)) {
        throw std::domain_error("distance must be positive");
    }
    return std::pow(d, -alpha);
}

}  // namespace

void check_budget(const LinkBudget& b)
{
    if (!(b.p_t >= 0.0) || !(b.p_c >= 0.0)) {
        throw std::domain_error("powers must be non-negative");
    }
    if (!(b.phi >= 0.0 && b.phi <= 1.0)) {
        throw std::domain_error("power allocation ratio must lie in [0, 1]");
    }
    if (!(b.alpha > 2.0)) {
        throw std::domain_error("path-loss exponent must exceed 2");
    }
    if (b.n_a < 2 || b.n_c < 2) {
        throw std::domain_error("antenna counts must be at least 2");
    }
}

SecrecyThreshold SecrecyThreshold::from_redundancy(double r_e)
{
    return {r_e, beta_from_redundancy(r_e)};
}

double sir_bob(const LinkBudget& budget, double g_bob, double d_ab)
{
    if (g_bob < 0.0) {
        throw std::domain_error("channel gain must be non-negative");
    }
    return budget.p_t * budget.phi * g_bob * path_gain(d_ab, budget.alpha);
}

double charlie_interference(const LinkBudget& budget, std::span<const double> g_cj, std::span<const double> d_ck)
{
    if (g_cj.size() != d_ck.size()) {
        throw std::invalid_argument("Charlie gain and distance lists differ in length");
    }
    if (g_cj.empty()) {
        return 0.0;
    }
    const double scale = budget.p_c / static_cast<double>(budget.n_c - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < g_cj.size(); ++i) {
        sum += g_cj[i] * path_gain(d_ck[i], budget.alpha);
    }
    return scale * sum;
}

double sir_eve(const LinkBudget& budget, const EveChannelDraw& draw, double d_ae, std::span<const double> d_ck)
{
    const double loss = path_gain(d_ae, budget.alpha);
    const double signal = budget.p_t * budget.phi * draw.g_msg * loss;
    const double an = budget.p_t * (1.0 - budget.phi) / static_cast<double>(budget.n_a - 1) * draw.g_an * loss;
    const double jam = d_ck.empty() ? 0.0 : charlie_interference(budget, draw.g_cj, d_ck);
    const double interference = an + jam;
    if (interference == 0.0) {
        return signal > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return signal / interference;
}

double secrecy_capacity(double gamma_b, double gamma_e)
{
    if (!(gamma_b >= 0.0) || !(gamma_e >= 0.0)) {
        throw std::domain_error("SIR must be non-negative");
    }
    if (gamma_b == gamma_e) {
        return 0.0;
    }
    if (std::isinf(gamma_e)) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log2(1.0 + gamma_b) - std::log2(1.0 + gamma_e);
}

double beta_from_redundancy(double r_e)
{
    if (!(r_e >= 0.0)) {
        throw std::domain_error("redundancy rate must be non-negative");
    }
    return std::exp2(r_e) - 1.0;
}

double dbm_to_watts(double p_dbm) noexcept
{
    return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

double db_to_linear(double x_db) noexcept
{
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x) noexcept
{
    return 10.0 * std::log10(x);
}

}  // namespace v2xsec
