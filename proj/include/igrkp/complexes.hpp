#pragma once

#include <optional>

#include "igrkp/bbw.hpp"
#include "igrkp/staircase.hpp"

namespace igrkp {

/* A complex is its graded term data; differentials are not represented.
   Degrees strictly increase along the term list. */
struct ChainComplex {
    Space space;
    std::vector<std::pair<VirtualBundle, int>> terms;  // (term, degree)
    std::optional<VirtualBundle> claimed;              // claimed total cohomology
    std::string name;
};

/* Koszul complex on Gr_X(l, V) (or its isotropic restriction):
   0 -> L^m Q^vee -> L^m V^vee (x) O -> ... -> S^m U^vee -> 0,
   with degrees 0..m+1. */
ChainComplex build_koszul(int m, const Space& s);

/* Generalized staircase complex for a GL_1 x GL_{k-1}-dominant weight on
   Gr(k, V) with dim V = r; term i = L^{b^i} V^vee (x) S^{alpha^(i)} U^vee
   sits in degree -i. */
ChainComplex build_generalized_staircase(const Weight& alpha, int r, const Space& s);

/* Symplectic staircase complex on IGr(2a, 2n) for mu in YD_{n-2a} with
   mu_1 = a; self-dual up to O(-H). */
ChainComplex build_symplectic_staircase(const Weight& mu, int a, int n);

/* Truncation bundle K^alpha_l on Gr(l, 2n) or its restriction to
   IGr(l, 2n): the cohomology of the staircase truncation at index
   alpha_1 + v(alpha).  Kept as its K-class. */
struct KClass {
    Weight alpha;
    int l = 0, n = 0;
    VirtualBundle virtual_class;  // signed sum, all degrees 0
    int r_alpha = 0;              // #{ j >= 2 : alpha_j > 0 }
};

KClass k_class(const Weight& alpha, int l, int n, bool isotropic = true);
KClass c_class(const Weight& alpha, int l, int n, bool isotropic = true);  // dual bundle

/* The two defining resolutions give the same class (checked by character). */
bool k_class_routes_agree(const Weight& alpha, int l, int n, bool isotropic = true);

/* Secondary staircase complex on IGr(k, 2n) for
   alpha in YD^{2n-k}_1 x YD^{2n-k}_{k-2}; terms are K-classes. */
struct SecondaryStaircase {
    Weight alpha;
    int k = 0, n = 0;
    struct Term {
        int i;           // staircase index
        int b;           // b^i(alpha)
        int d;           // d(alpha, i)
        Weight kweight;  // (2n-k-b^i, alpha^(i))
        VirtualBundle kclass;
        int degree;  // i - alpha_1 - v(alpha)
    };
    std::vector<Term> terms;
    VirtualBundle claimed;  // graded claimed cohomology

    ChainComplex as_chain_complex() const;
};

SecondaryStaircase build_secondary_staircase(const Weight& alpha, int k, int n);

/* Terms of the secondary staircase with 1 <= b^i <= t, order preserved. */
std::vector<SecondaryStaircase::Term> tau_truncate(const SecondaryStaircase& h, int t);

struct KReport {
    bool exact_in_K = false;
    Character defect;
};

/* Alternating equivariant character sum over the Levi torus, compared with
   the claimed cohomology class (or zero). */
KReport check_ktheory_exact(const ChainComplex& c);

}  // namespace igrkp
