#include "igrkp/staircase.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace igrkp {

namespace {

void require_tail_dominant(const Weight& alpha) {
    if (alpha.empty()) throw std::invalid_argument("staircase: empty weight");
    if (alpha.length() > 1 && !alpha.bar().is_dominant())
        throw std::invalid_argument("staircase: tail of " + alpha.str() + " not weakly decreasing");
}

}  // namespace

std::vector<int> vanishing_set(const Weight& abar) {
    std::vector<int> v;
    for (int j = 0; j < abar.length(); ++j) v.push_back(abar[j] - j - 1);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (static_cast<int>(v.size()) != abar.length())
        throw std::logic_error("vanishing_set: collision");  // impossible for dominant abar
    return v;
}

std::vector<int> vanishing_set_sp(const Weight& abar, int l) {
    std::vector<int> base = vanishing_set(abar);
    std::vector<int> v;
    for (int x : base) v.push_back(-x - 2 * l);
    v.push_back(-l);
    v.insert(v.end(), base.begin(), base.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int count_d(const Weight& abar, int z) {
    int c = 1;
    for (int j = 0; j < abar.length(); ++j) {
        int val = abar[j] - j - 1;
        if (val == z) throw std::invalid_argument("count_d: z is a vanishing value");
        if (val > z) ++c;
    }
    return c;
}

Weight bbw_map(const Weight& abar, int z) {
    int d = count_d(abar, z);
    std::vector<int> r;
    r.reserve(static_cast<size_t>(abar.length()) + 1);
    for (int j = 0; j < d - 1; ++j) r.push_back(abar[j] - 1);
    r.push_back(z + d - 1);
    for (int j = d - 1; j < abar.length(); ++j) r.push_back(abar[j]);
    Weight w(std::move(r));
    if (!w.is_dominant()) throw std::logic_error("bbw_map: output not dominant");
    return w;
}

int v_of(const Weight& alpha) {
    require_tail_dominant(alpha);
    int a1 = alpha[0], v = 0;
    for (int j = 1; j < alpha.length(); ++j)
        if (alpha[j] - j > a1) ++v;
    return v;
}

int z_of(const Weight& alpha, int i) {
    require_tail_dominant(alpha);
    std::set<int> van;
    for (int j = 1; j < alpha.length(); ++j) van.insert(alpha[j] - j);
    int z = alpha[0];
    while (van.count(z)) --z;  // z_0
    if (i >= 0) {
        for (int step = 0; step < i;) {
            --z;
            if (!van.count(z)) ++step;
        }
    } else {
        for (int step = 0; step > i;) {
            ++z;
            if (!van.count(z)) --step;
        }
    }
    return z;
}

int d_of(const Weight& alpha, int i) { return count_d(alpha.bar(), z_of(alpha, i)); }

int b_of(const Weight& alpha, int i) { return alpha[0] - z_of(alpha, i); }

Weight alpha_i(const Weight& alpha, int i) { return bbw_map(alpha.bar(), z_of(alpha, i)); }

int m_of(const Weight& alpha, int r) {
    require_tail_dominant(alpha);
    std::set<int> van;
    for (int j = 1; j < alpha.length(); ++j) van.insert(alpha[j] - j);
    int count = 0;
    for (int z = alpha[0] - r; z <= alpha[0]; ++z)
        if (!van.count(z)) ++count;
    return count - 1;
}

StaircaseData staircase_data(const Weight& alpha, int i_min, int i_max, std::optional<int> rank) {
    require_tail_dominant(alpha);
    StaircaseData out;
    out.alpha = alpha;
    out.V = vanishing_set(alpha.bar());
    out.VSp = vanishing_set_sp(alpha.bar(), alpha.length());
    out.v = v_of(alpha);
    if (rank) out.m = m_of(alpha, *rank);
    out.i_min = i_min;
    out.i_max = i_max;
    for (int i = i_min; i <= i_max; ++i) {
        int z = z_of(alpha, i);
        int d = count_d(alpha.bar(), z);
        out.z[i] = z;
        out.d[i] = d;
        out.b[i] = alpha[0] - z;
        Weight via_bbw = bbw_map(alpha.bar(), z);
        // closed formula: (alpha_2-1, ..., alpha_d-1, alpha_1-i+v, alpha_{d+1}, ...)
        std::vector<int> e;
        for (int j = 1; j < d; ++j) e.push_back(alpha[j] - 1);
        e.push_back(alpha[0] - i + out.v);
        for (int j = d; j < alpha.length(); ++j) e.push_back(alpha[j]);
        if (Weight(e) != via_bbw) throw std::logic_error("staircase_data: BBW map and closed formula disagree");
        out.alpha_i[i] = via_bbw;
    }
    return out;
}

Weight ins(const Weight& beta, int b, int d) {
    int t = beta.length();
    if (d < 1 || d > t) throw std::invalid_argument("ins: d out of range");
    if (!beta.is_dominant()) throw std::invalid_argument("ins: beta must be dominant");
    std::vector<int> e;
    e.push_back(beta[d - 1] + b - d + 1);
    for (int j = 0; j < d - 1; ++j) e.push_back(beta[j] + 1);
    for (int j = d; j < t; ++j) e.push_back(beta[j]);
    return Weight(std::move(e));
}

long long marked_f(const Weight& beta, int d) {
    long long f = static_cast<long long>(d) * d;
    for (int i = 0; i < beta.length(); ++i) f += 2LL * (i + 1) * beta[i];
    return f;
}

int i_alpha(const Weight& alpha) { return v_of(alpha) + 1; }

}  // namespace igrkp
