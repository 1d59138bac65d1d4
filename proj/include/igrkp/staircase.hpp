#pragma once

#include <map>
#include <optional>
#include <vector>

#include "igrkp/weights.hpp"

namespace igrkp {

/* Vanishing values V(abar) = { abar_j - j : j = 1..len } written against the
   full weight alpha = (alpha_1; abar) this is { alpha_j - j + 1 : j >= 2 }. */
std::vector<int> vanishing_set(const Weight& abar);

/* Symplectic vanishing values (-V(abar) - 2l) u {-l} u V(abar). */
std::vector<int> vanishing_set_sp(const Weight& abar, int l);

/* Counting function d_abar(z) = |(z, inf) n V(abar)| + 1, for z not in V. */
int count_d(const Weight& abar, int z);

/* BBW map: the dominant sort of (z, abar) with its rho-shift bookkeeping. */
Weight bbw_map(const Weight& abar, int z);

/* v(alpha) = |(alpha_1, inf) n V(abar)|. */
int v_of(const Weight& alpha);

/* z_i: the decreasing enumeration of Z \ V(abar) with z_0 the largest
   value <= alpha_1. */
int z_of(const Weight& alpha, int i);

/* d(alpha, i), b^i(alpha) and alpha^{(i)}. */
int d_of(const Weight& alpha, int i);
int b_of(const Weight& alpha, int i);
Weight alpha_i(const Weight& alpha, int i);

/* Number of staircase terms minus one for a rank-r complex:
   |[alpha_1 - r, alpha_1] \ V(abar)| - 1. */
int m_of(const Weight& alpha, int r);

struct StaircaseData {
    Weight alpha;
    std::vector<int> V;
    std::vector<int> VSp;
    int v = 0;
    std::optional<int> m;  // set when a rank was supplied
    int i_min = 0, i_max = 0;
    std::map<int, int> z, d, b;
    std::map<int, Weight> alpha_i;
};

/* Populates every field on the window; alpha^{(i)} is computed both through
   the BBW map at z_i and by the closed formula, and the two are checked to
   agree. */
StaircaseData staircase_data(const Weight& alpha, int i_min, int i_max, std::optional<int> rank = std::nullopt);

/* ins_{b,d}(beta) = (beta_d + b - d + 1; beta_1+1, ..., beta_{d-1}+1,
   beta_{d+1}, ..., beta_t). */
Weight ins(const Weight& beta, int b, int d);

/* f(beta, d) = d^2 + sum 2 i beta_i. */
long long marked_f(const Weight& beta, int d);

/* The unique index with b^i = d(alpha, i), namely v(alpha) + 1. */
int i_alpha(const Weight& alpha);

}  // namespace igrkp
