#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "igrkp/characters.hpp"

using namespace igrkp;

namespace {

Expo e2(int a, int b) { return {a, b}; }

/* all dominant weights of given length with entries in [lo, hi] */
std::vector<Weight> dominant_box(int len, int lo, int hi) {
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
    rec(rec, hi);
    return out;
}

}  // namespace

TEST_CASE("GL characters: small fixtures") {
    Character std2 = irreducible_character(Group::gl(2), Weight{1, 0});
    CHECK(std2.term_count() == 2);
    CHECK(std2.coefficient(e2(1, 0)) == 1);
    CHECK(std2.coefficient(e2(0, 1)) == 1);

    Character det = irreducible_character(Group::gl(2), Weight{1, 1});
    CHECK(det.term_count() == 1);
    CHECK(det.coefficient(e2(1, 1)) == 1);

    // negative entries through the determinant shift
    Character dual = irreducible_character(Group::gl(2), Weight{0, -1});
    CHECK(dual.coefficient(e2(-1, 0)) == 1);
    CHECK(dual.coefficient(e2(0, -1)) == 1);
}

TEST_CASE("Sp characters: small fixtures") {
    Character v = irreducible_character(Group::sp(2), Weight{1});
    CHECK(v.dimension() == 2);
    CHECK(v.coefficient({1}) == 1);
    CHECK(v.coefficient({-1}) == 1);

    Character v4 = irreducible_character(Group::sp(2), Weight{4});
    CHECK(v4.dimension() == 5);  // S^4 of the 2-dimensional symplectic space

    Character f = irreducible_character(Group::sp(4), Weight{1, 0});
    CHECK(f.dimension() == 4);
    for (auto ex : {e2(1, 0), e2(-1, 0), e2(0, 1), e2(0, -1)}) CHECK(f.coefficient(ex) == 1);

    CHECK(irreducible_character(Group::sp(4), Weight{1, 1}).dimension() == 5);
    CHECK(irreducible_character(Group::sp(0), Weight{}).dimension() == 1);
}

TEST_CASE("Weyl-group invariance of characters") {
    // GL: permutation invariance on samples
    Character c = irreducible_character(Group::gl(3), Weight{3, 1, 0});
    for (auto& [e, coef] : c.terms()) {
        Expo p = {e[1], e[2], e[0]};
        CHECK(c.coefficient(p) == coef);
    }
    // Sp: signed permutations
    Character s = irreducible_character(Group::sp(3), Weight{2, 1, 0});
    for (auto& [e, coef] : s.terms()) {
        Expo p = {-e[0], e[2], -e[1]};
        CHECK(s.coefficient(p) == coef);
    }
}

TEST_CASE("decompose recovers irreducibles") {
    for (int l = 1; l <= 4; ++l)
        for (auto& w : dominant_box(l, 0, l > 3 ? 2 : 3)) {
            auto d = decompose(irreducible_character(Group::gl(l), w), Group::gl(l));
            REQUIRE(d.parts.size() == 1);
            CHECK(d.parts[0].weight == w);
            CHECK(d.parts[0].mult == 1);
        }
    for (int m = 1; m <= 4; ++m)
        for (auto& w : dominant_box(m, 0, m > 3 ? 2 : 3)) {
            auto d = decompose(irreducible_character(Group::sp(m), w), Group::sp(m));
            REQUIRE(d.parts.size() == 1);
            CHECK(d.parts[0].weight == w);
            CHECK(d.parts[0].mult == 1);
            CHECK(d.nonnegative);
        }
}

TEST_CASE("tensor product fixtures") {
    Character c = irreducible_character(Group::gl(2), Weight{1, 0});
    auto d = decompose(c * c, Group::gl(2));
    REQUIRE(d.parts.size() == 2);
    CHECK(d.multiplicity(Weight{2, 0}) == 1);
    CHECK(d.multiplicity(Weight{1, 1}) == 1);

    Character f = irreducible_character(Group::sp(4), Weight{1, 0});
    auto ds = decompose(f * f, Group::sp(4));
    CHECK(ds.multiplicity(Weight{2, 0}) == 1);
    CHECK(ds.multiplicity(Weight{1, 1}) == 1);
    CHECK(ds.multiplicity(Weight{0, 0}) == 1);
    CHECK(ds.total_dimension(Group::sp(2)) == 16);

    auto triv = decompose(irreducible_character(Group::sp(3), Weight{0, 0, 0}), Group::sp(3));
    REQUIRE(triv.parts.size() == 1);
    CHECK(triv.parts[0].weight == Weight{0, 0, 0});
}

TEST_CASE("decompose rejects non-invariant input") {
    Character c = Character::monomial({2, 0});  // x1^2 alone is no GL(2)-character
    CHECK_THROWS_AS(decompose(c, Group::gl(2)), std::invalid_argument);
    Character v = irreducible_character(Group::gl(2), Weight{1, 0}) -
                  irreducible_character(Group::gl(2), Weight{1, 1}) * Int(2);
    auto d = decompose(v, Group::gl(2));  // virtual character: signed multiplicities
    CHECK_FALSE(d.nonnegative);
    CHECK(d.multiplicity(Weight{1, 1}) == -2);
}

TEST_CASE("lr_coefficient agrees with the character oracle (exhaustive, entries <= 3, length <= 3)") {
    for (int l = 1; l <= 3; ++l) {
        auto box = dominant_box(l, 0, 3);
        for (auto& a : box)
            for (auto& b : box) {
                auto prod = decompose(irreducible_character(Group::gl(l), a) * irreducible_character(Group::gl(l), b),
                                      Group::gl(l));
                for (auto& g : dominant_box(l, 0, 6)) {
                    CHECK(lr_coefficient(a, b, g) == prod.multiplicity(g));
                }
            }
    }
}

TEST_CASE("lr_coefficient handles negative entries by shifting") {
    // c^gamma_{alpha,beta} = c^{gamma+m+m'}_{alpha+m,beta+m'}
    CHECK(lr_coefficient(Weight{0, -1}, Weight{1, 0}, Weight{1, -1}) ==
          lr_coefficient(Weight{1, 0}, Weight{1, 0}, Weight{2, 0}));
    CHECK(lr_coefficient(Weight{2, 0}, Weight{0, -2}, Weight{0, 0}) == 1);
}

TEST_CASE("PRV multiplicity one: c^{alpha+w beta}_{alpha,beta} = 1 when dominant") {
    std::vector<Weight> ws = dominant_box(3, 0, 2);
    int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& a : ws)
        for (auto& b : ws)
            for (auto& p : perm) {
                std::vector<int> g = {a[0] + b[p[0]], a[1] + b[p[1]], a[2] + b[p[2]]};
                Weight gamma(g);
                if (!gamma.is_dominant()) continue;
                CHECK(lr_coefficient(a, b, gamma) == 1);
            }
}

TEST_CASE("LR support bounds from the convex-hull lemma") {
    auto box = dominant_box(3, 0, 3);
    for (auto& a : box)
        for (auto& b : box) {
            auto prod = decompose(irreducible_character(Group::gl(3), a) * irreducible_character(Group::gl(3), b),
                                  Group::gl(3));
            for (auto& p : prod.parts) {
                CHECK(p.weight[0] <= a[0] + b[0]);
                CHECK(p.weight[2] >= a[2] + b[2]);
            }
        }
}

TEST_CASE("weyl_dimension") {
    CHECK(weyl_dimension(Group::gl(4), Weight{0, 0, 0, 0}) == 1);
    CHECK(weyl_dimension(Group::gl(3), Weight{1, 1, 0}) == 3);  // wedge square of the standard rep
    CHECK(weyl_dimension(Group::gl(3), Weight{1, 0, 0}) == 3);
    CHECK(weyl_dimension(Group::sp(2), Weight{1, 1}) == 5);
    CHECK(weyl_dimension(Group::sp(2), Weight{1, 0}) == 4);
    CHECK(weyl_dimension(Group::sp(3), Weight{1, 1, 1}) == 14);  // Lambda^3_Sp of the 6-dim space
    // dimension = character at all-ones, on a sample box
    for (auto& w : dominant_box(2, 0, 3)) {
        CHECK(weyl_dimension(Group::sp(2), w) == irreducible_character(Group::sp(2), w).dimension());
        CHECK(weyl_dimension(Group::gl(2), w) == irreducible_character(Group::gl(2), w).dimension());
    }
}

TEST_CASE("branch_sp_to_gl_sp fixtures") {
    // theta = 0: single trivial subquotient
    auto b0 = branch_sp_to_gl_sp(Weight{0, 0}, 1, 1);
    REQUIRE(b0.parts.size() == 1);
    CHECK(b0.parts[0].gl == Weight{0});
    CHECK(b0.parts[0].sp == Weight{0});

    // Sp(4) -> GL(1) x Sp(2) on the fundamental: y + y^{-1} + (2-dim)
    auto b1 = branch_sp_to_gl_sp(Weight{1, 0}, 1, 1);
    CHECK(b1.parts.size() == 3);
    CHECK(b1.multiplicity(Weight{1}, Weight{0}) == 1);
    CHECK(b1.multiplicity(Weight{-1}, Weight{0}) == 1);
    CHECK(b1.multiplicity(Weight{0}, Weight{1}) == 1);
    CHECK(b1.total_dimension(1, 1) == 4);
}

TEST_CASE("branch_sp_to_gl_sp conserves dimension and obeys the filtration bounds") {
    std::mt19937 rng(7);
    for (int t = 1; t <= 2; ++t)
        for (int m = 1; m <= 2; ++m)
            for (auto& theta : dominant_box(t + m, 0, 2)) {
                if (!theta.is_young_diagram()) continue;
                auto br = branch_sp_to_gl_sp(theta, t, m);
                CHECK(br.total_dimension(t, m) == weyl_dimension(Group::sp(t + m), theta));
                int a = theta.length() ? theta[0] : 0;
                for (auto& p : br.parts) {
                    for (int i = 0; i < t; ++i) {
                        CHECK(p.gl[i] >= -a);
                        CHECK(p.gl[i] <= a);
                    }
                    for (int i = 0; i < m; ++i) CHECK(p.sp[i] <= theta[i]);  // eta contained in theta
                    CHECK(p.sp.fits_width(a));
                }
            }
}

TEST_CASE("branch of hat weights has the top term with multiplicity one") {
    for (int t = 1; t <= 2; ++t)
        for (int m = 1; m <= 3; ++m)
            for (int a = 0; a <= 2; ++a)
                for (auto& mu : dominant_box(m, 0, a)) {
                    Weight hat = hat_weight(mu, t, a);
                    auto br = branch_sp_to_gl_sp(hat, t, m);
                    Weight top(std::vector<int>(static_cast<size_t>(t), a));
                    CHECK(br.multiplicity(top, mu) == 1);
                }
}

TEST_CASE("character dump is deterministic") {
    Character c = irreducible_character(Group::gl(2), Weight{1, 0});
    CHECK(c.dump() == "0,1:1\n1,0:1\n");
}
