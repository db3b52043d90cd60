#pragma once

#include <span>

namespace v2xsec {

struct EveChannelDraw;

/// Power and antenna parameters entering the SIR expressions.
struct LinkBudget {
    double p_t{1.0};  // W
    double p_c{1.0};  // W
    double phi{0.5};  // fraction of P_t on the message, [0, 1]
    double alpha{3.0};
    int n_a{4};
    int n_c{4};
};

/// Throws std::domain_error on a violated LinkBudget invariant.
void check_budget(const LinkBudget& budget);

struct SecrecyThreshold {
    double redundancy_rate{0.0};  // R_e, bits/s/Hz
    double beta_linear{0.0};      // 2^R_e - 1

    static SecrecyThreshold from_redundancy(double r_e);
};

/// P_t phi |h_a|^2 d_ab^-alpha.
double sir_bob(const LinkBudget& budget, double g_bob, double d_ab);

/// Sum over Charlies of P_c / (N_C - 1) g d^-alpha. Lists must have equal length.
double charlie_interference(const LinkBudget& budget, std::span<const double> g_cj,
                            std::span<const double> d_ck);

/// SIR of one Eve. Zero interference gives +inf when the message term is
/// positive and 0 when it is zero. Pass an empty `d_ck` for AN only; the
/// Charlie gains in `draw` are then ignored.
double sir_eve(const LinkBudget& budget, const EveChannelDraw& draw, double d_ae,
               std::span<const double> d_ck);

/// log2(1 + gamma_b) - log2(1 + gamma_e).
double secrecy_capacity(double gamma_b, double gamma_e);

/// 2^r_e - 1.
double beta_from_redundancy(double r_e);

double dbm_to_watts(double p_dbm) noexcept;
double db_to_linear(double x_db) noexcept;
double linear_to_db(double x) noexcept;

}  // namespace v2xsec
