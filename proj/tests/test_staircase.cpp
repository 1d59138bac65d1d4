#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "igrkp/staircase.hpp"

using namespace igrkp;

namespace {

/* weights (a1; abar) with abar weakly decreasing, all entries in [lo, hi] */
std::vector<Weight> tail_dominant_box(int len, int lo, int hi) {
    std::vector<Weight> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int bound) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = lo; v <= bound; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    for (int a1 = lo; a1 <= hi; ++a1) {
        cur = {a1};
        rec(rec, hi);
        cur.clear();
    }
    return out;
}

std::vector<Weight> diagram_box(int len, int hi) {
    std::vector<Weight> out;
    for (auto& w : tail_dominant_box(len, 0, hi))
        if (w.is_young_diagram() || (w.length() >= 1 && w[0] >= 0 && w.bar().is_young_diagram())) out.push_back(w);
    std::vector<Weight> uniq;
    for (auto& w : out) {
        bool ok = w[0] >= 0;
        for (int i = 1; i < w.length(); ++i) ok = ok && w[i] >= 0;
        if (ok) uniq.push_back(w);
    }
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    return uniq;
}

}  // namespace

TEST_CASE("paper example alpha = (3,2,2,1)") {
    Weight alpha{3, 2, 2, 1};
    auto d = staircase_data(alpha, -1, 5, 8);
    CHECK(d.V == std::vector<int>{-2, 0, 1});
    CHECK(d.v == 0);
    CHECK(d.z.at(0) == 3);
    CHECK(d.z.at(1) == 2);
    CHECK(d.z.at(2) == -1);
    CHECK(d.z.at(3) == -3);
    CHECK(d.z.at(4) == -4);
    CHECK(d.z.at(-1) == 4);
    for (int i = 3; i <= 5; ++i) CHECK(d.z.at(i) == -i);
    for (int i = -1; i <= 1; ++i) CHECK(d.z.at(i) == 3 - i);
    // d-graph: 1 on i <= 1, 3 at i = 2, 4 from i = 3 on
    for (int i = -1; i <= 1; ++i) CHECK(d.d.at(i) == 1);
    CHECK(d.d.at(2) == 3);
    for (int i = 3; i <= 5; ++i) CHECK(d.d.at(i) == 4);
    // alpha^(2) and b^2
    CHECK(d.alpha_i.at(2) == Weight{1, 1, 1, 1});
    CHECK(d.b.at(2) == 4);
}

TEST_CASE("dominant weights have v = 0 and z_0 = alpha_1") {
    for (auto& alpha : diagram_box(3, 4)) {
        CHECK(v_of(alpha) == 0);
        CHECK(z_of(alpha, 0) == alpha[0]);
    }
}

TEST_CASE("staircase identities, exhaustive over entries in [-3,6], lengths <= 5") {
    for (int len = 2; len <= 5; ++len) {
        int hi = len >= 5 ? 4 : 6, lo = len >= 5 ? -2 : -3;
        for (auto& alpha : tail_dominant_box(len, lo, hi)) {
            int v = v_of(alpha);
            int lo_i = -3, hi_i = alpha[0] + v + 3;
            auto data = staircase_data(alpha, lo_i, hi_i);
            // both expressions for v agree: (def-vv1) vs (def-vv)
            CHECK(data.d.at(0) - 1 + data.z.at(0) - alpha[0] == v);
            long long asum = alpha.sum();
            for (int i = lo_i; i <= hi_i; ++i) {
                // b^i = |alpha| - |alpha^(i)|
                CHECK(data.b.at(i) == asum - data.alpha_i.at(i).sum());
                // b^i = i - v + d(alpha,i) - 1
                CHECK(data.b.at(i) == i - v + data.d.at(i) - 1);
                // d(alpha,i) = max{1, j | alpha_1 - i + v < alpha_j}
                int dval = 1;
                for (int j = 1; j < len; ++j)
                    if (alpha[0] - i + v < alpha[j]) dval = j + 1;
                CHECK(data.d.at(i) == dval);
                if (i < hi_i) {
                    // d(alpha,i+1) - d(alpha,i) = z_i - z_{i+1} - 1
                    CHECK(data.d.at(i + 1) - data.d.at(i) == data.z.at(i) - data.z.at(i + 1) - 1);
                    CHECK(data.b.at(i + 1) > data.b.at(i));
                    CHECK(data.z.at(i + 1) < data.z.at(i));
                }
            }
        }
    }
}

TEST_CASE("the family {alpha^(i)} depends only on abar, up to index shift") {
    for (auto& abar : diagram_box(3, 3)) {
        std::vector<int> e1 = {5};
        std::vector<int> e2 = {2};
        e1.insert(e1.end(), abar.begin(), abar.end());
        e2.insert(e2.end(), abar.begin(), abar.end());
        Weight a1(e1), a2(e2);
        std::set<Weight> s1, s2;
        for (int i = -6; i <= 12; ++i) {
            s1.insert(alpha_i(a1, i));
            s2.insert(alpha_i(a2, i));
        }
        // compare on the common central range: each set contains the other's middle
        std::set<Weight> inter;
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(inter, inter.begin()));
        CHECK(inter.size() >= 12);
        // and the shift is forced: alpha^(i) of a1 equals alpha^(i - (a1_1 - a2_1) + dv) of a2 for central i
        for (int i = 0; i <= 6; ++i) {
            Weight w = alpha_i(a1, i);
            bool found = false;
            for (int j = -6; j <= 12 && !found; ++j) found = alpha_i(a2, j) == w;
            CHECK(found);
        }
    }
}

TEST_CASE("m(alpha) bounds: r - k + 1 <= m <= r") {
    for (int len = 2; len <= 4; ++len)
        for (auto& alpha : tail_dominant_box(len, -2, 4))
            for (int r = len + 1; r <= 8; ++r) {
                int m = m_of(alpha, r);
                CHECK(m >= r - len + 1);
                CHECK(m <= r);
            }
}

TEST_CASE("diagram bound: alpha^(i) stays a diagram of bounded width") {
    // alpha in YD^w_1 x YD^w_{l-1}, 0 <= i <= alpha_1 + v: alpha^(i) in YD^w_l,
    // and in YD^{w-1}_l when b^i >= 1
    for (int l = 2; l <= 4; ++l)
        for (int w = 1; w <= 4; ++w)
            for (auto& alpha : diagram_box(l, w)) {
                int v = v_of(alpha);
                for (int i = 0; i <= alpha[0] + v; ++i) {
                    Weight ai = alpha_i(alpha, i);
                    CHECK(ai.is_young_diagram());
                    CHECK(ai.fits_width(w));
                    if (b_of(alpha, i) >= 1) CHECK(ai.fits_width(w - 1));
                }
            }
}

TEST_CASE("ins examples") {
    Weight r = ins(Weight{1, 1}, 1, 1);
    CHECK(r == Weight{2, 1});
    // corollary case b = d
    CHECK(ins(Weight{2, 1, 0}, 2, 2) == Weight{2, 3, 0});
    // zero diagram fixed point
    Weight z = ins(Weight{0, 0, 0}, 0, 1);
    CHECK(z == Weight{0, 0, 0});
    CHECK(alpha_i(z, 0) == Weight{0, 0, 0});
    CHECK(b_of(z, 0) == 0);
    CHECK_THROWS_AS(ins(Weight{1, 0}, 1, 3), std::invalid_argument);
}

TEST_CASE("ins roundtrip: unique index with the three properties (exhaustive, entries <= 5, lengths <= 5)") {
    for (int t = 1; t <= 5; ++t) {
        int hi = t >= 4 ? 3 : 5;
        for (auto& beta : diagram_box(t, hi))
            for (int d = 1; d <= t; ++d)
                for (int b = d - 1 + (beta[d - 1] == (d < t ? beta[d] : 0) ? 1 : 0) - 6; b <= 6; ++b) {
                    Weight lam = ins(beta, b, d);
                    if (!lam.bar().is_dominant()) continue;
                    int hits = 0, hit_i = 0;
                    for (int i = -8; i <= lam[0] + v_of(lam) + 10; ++i) {
                        if (alpha_i(lam, i) == beta && b_of(lam, i) == b && d_of(lam, i) == d) {
                            ++hits;
                            hit_i = i;
                        }
                    }
                    CHECK(hits == 1);
                    // and the index is the predicted one
                    CHECK(hit_i == v_of(lam) + d - 1 - (d - 1 - b));
                }
    }
}

TEST_CASE("corollary b = d: the unique weight with b^i = d = d(alpha,i)") {
    for (int t = 1; t <= 4; ++t)
        for (int w = 0; w <= 4; ++w)
            for (auto& beta : diagram_box(t, w))
                for (int d = 1; d <= t; ++d) {
                    Weight rho = ins(beta, d, d);
                    CHECK(rho[0] == beta[d - 1] + 1);
                    CHECK(rho.is_young_diagram());
                    CHECK(rho.fits_width(w + 1));
                    int i = i_alpha(rho);
                    CHECK(alpha_i(rho, i) == beta);
                    CHECK(b_of(rho, i) == d);
                    CHECK(d_of(rho, i) == d);
                }
}

TEST_CASE("marked f examples and identities") {
    CHECK(marked_f(Weight{2, 1}, 1) == 9);
    // dominant weights have i_alpha = 1
    for (auto& alpha : diagram_box(3, 3)) CHECK(i_alpha(alpha) == 1);
    // b^{i_alpha} = d(alpha, i_alpha)
    for (int t = 2; t <= 4; ++t)
        for (auto& alpha : tail_dominant_box(t, -2, 4)) {
            int i = i_alpha(alpha);
            CHECK(b_of(alpha, i) == d_of(alpha, i));
        }
}

TEST_CASE("f difference identity") {
    // f(a^{i+1}, b^{i+1}) - f(a^i, b^i) = (b^{i+1} - b^i)(1 + 2(b^i - d(alpha,i)))
    for (int t = 2; t <= 4; ++t)
        for (auto& alpha : diagram_box(t, 4)) {
            int v = v_of(alpha);
            for (int i = 0; i < alpha[0] + v; ++i) {
                long long lhs = marked_f(alpha_i(alpha, i + 1), b_of(alpha, i + 1)) -
                                marked_f(alpha_i(alpha, i), b_of(alpha, i));
                long long rhs = static_cast<long long>(b_of(alpha, i + 1) - b_of(alpha, i)) *
                                (1 + 2 * (b_of(alpha, i) - d_of(alpha, i)));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("f minimality on the tau window (brute force, t <= 4, width <= 5)") {
    for (int t = 1; t <= 4; ++t) {
        int w = t >= 4 ? 3 : 5;
        for (auto& alpha : diagram_box(t, w)) {
            int v = v_of(alpha);
            std::vector<std::pair<long long, int>> marked;  // (f, i) over 1 <= b^i <= t
            int unique_bd = 0;
            for (int i = 0; i <= alpha[0] + v + t + 2; ++i) {
                int b = b_of(alpha, i);
                if (b < 1 || b > t) continue;
                marked.push_back({marked_f(alpha_i(alpha, i), b), i});
                if (b == d_of(alpha, i)) ++unique_bd;
            }
            if (marked.empty()) continue;
            CHECK(unique_bd == 1);
            std::sort(marked.begin(), marked.end());
            if (marked.size() > 1) CHECK(marked[0].first < marked[1].first);
            CHECK(marked[0].second == i_alpha(alpha));
        }
    }
}
