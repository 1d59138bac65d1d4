#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igrkp/weights.hpp"

using namespace igrkp;

namespace {

/* independent enumeration used as the oracle for enumerate_diagrams */
void gen(std::vector<std::vector<int>>& out, std::vector<int>& cur, int l, int bound) {
    if (static_cast<int>(cur.size()) == l) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= bound; ++v) {
        cur.push_back(v);
        gen(out, cur, l, v);
        cur.pop_back();
    }
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("enumerate_diagrams basics") {
    CHECK(enumerate_diagrams(0, 5) == std::vector<Weight>{Weight{}});
    auto d = enumerate_diagrams(2, 2);
    CHECK(d.size() == 6);
    CHECK(d == std::vector<Weight>{Weight{0, 0}, Weight{1, 0}, Weight{1, 1}, Weight{2, 0}, Weight{2, 1},
                                   Weight{2, 2}});
    // the B_1 block of P^{2n-1}: 2n-1 diagrams of length 1
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_diagrams(1, 2 * n - 2).size() == static_cast<size_t>(2 * n - 1));
}

TEST_CASE("enumerate_diagrams against brute force") {
    for (int l = 0; l <= 4; ++l) {
        for (int w = 0; w <= 4; ++w) {
            std::vector<std::vector<int>> expect;
            std::vector<int> cur;
            gen(expect, cur, l, w);
            auto got = enumerate_diagrams(l, w);
            REQUIRE(got.size() == expect.size());
            CHECK(got.size() == static_cast<size_t>(binom(l + w, l)));
            for (size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].entries() == expect[i]);
                CHECK(got[i].is_young_diagram());
                CHECK(got[i].fits_width(w));
            }
        }
    }
}

TEST_CASE("kp_prec examples") {
    BlockWeight zero{Weight{0}, Weight{0}};
    CHECK(kp_prec(zero, zero));  // reflexivity
    CHECK(kp_prec(BlockWeight{Weight{1, 0}, Weight{1}}, BlockWeight{Weight{1, 1}, Weight{0}}));
    CHECK_FALSE(kp_prec(BlockWeight{Weight{2, 0}, Weight{0}}, BlockWeight{Weight{1, 1}, Weight{5}}));
    CHECK_THROWS_AS(kp_prec(BlockWeight{Weight{1}, Weight{0}}, BlockWeight{Weight{1, 1}, Weight{0}}),
                    std::invalid_argument);
}

TEST_CASE("kp_prec is reflexive and transitive; restricts to entrywise order") {
    auto gls = enumerate_diagrams(2, 3);
    auto sps = enumerate_diagrams(1, 2);
    std::vector<BlockWeight> all;
    for (auto& g : gls)
        for (auto& s : sps) all.emplace_back(g, s);
    for (auto& a : all) CHECK(kp_prec(a, a));
    for (auto& a : all)
        for (auto& b : all)
            for (auto& c : all)
                if (kp_prec(a, b) && kp_prec(b, c)) CHECK(kp_prec(a, c));
    // on sp = 0 the order is the entrywise one
    for (auto& g1 : gls)
        for (auto& g2 : gls) {
            bool entrywise = true;
            for (int i = 0; i < 2; ++i) entrywise = entrywise && g1[i] <= g2[i];
            CHECK(kp_prec(BlockWeight{g1, Weight{0}}, BlockWeight{g2, Weight{0}}) == entrywise);
        }
}

TEST_CASE("transform operations") {
    CHECK(Weight{3, 1}.negated() == Weight{-1, -3});
    CHECK(hat_weight(Weight{1, 0}, 2, 1) == Weight{1, 1, 1, 0});
    CHECK(Weight{3, 2, 2, 1}.bar() == Weight{2, 2, 1});
    CHECK(Weight{3, 1}.shifted(2) == Weight{1, -1});
    CHECK(Weight{2, 1}.prepended(4, 2) == Weight{4, 4, 2, 1});
    CHECK_THROWS_AS(hat_weight(Weight{2, 0}, 1, 1), std::invalid_argument);

    // involutions and inverses
    for (auto& d : enumerate_diagrams(3, 3)) {
        CHECK(d.negated().negated() == d);
        CHECK(d.prepended(7, 1).bar() == d);
    }
}

TEST_CASE("validated wrappers") {
    CHECK_THROWS_AS(DominantWeight(Weight{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram(Weight{1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram(Weight{3, 1}, 2), std::invalid_argument);
    CHECK(YoungDiagram(Weight{2, 1}, 2).weight() == Weight{2, 1});
    CHECK(DominantWeight(Weight{1, -1}).weight() == Weight{1, -1});
    CHECK_THROWS_AS(BlockWeight(Weight{0, 1}, Weight{0}), std::invalid_argument);
}

TEST_CASE("weight parsing") {
    CHECK(parse_weight("3,2,2,1") == Weight{3, 2, 2, 1});
    CHECK(parse_weight("-2,0") == Weight{-2, 0});
    CHECK(parse_weight("()") == Weight{});
    CHECK_THROWS(parse_weight("1,x"));
}
