#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igrkp/characters.hpp"
#include "igrkp/weights.hpp"

namespace igrkp {

/* Result of a Borel-Bott-Weil sort: either no cohomology, or a dominant
   weight together with the length of the Weyl element used.  A shift of
   l places the pushforward in cohomological degree +l. */
struct BBWResult {
    bool vanishes = true;
    Weight weight;
    int shift = 0;
};

/* GL case: concatenate (lambda, mu), add rho = (r, ..., 1); vanishes on a
   repeated entry, otherwise sorts strictly decreasing. */
BBWResult bbw_gl(const Weight& lambda, const Weight& mu);

/* Symplectic case: vanishes when an entry of (lambda, mu) + rho is zero or
   two entries share an absolute value; otherwise sorts the absolute values
   strictly decreasing.  The shift is the length of the signed permutation. */
BBWResult bbw_sp(const Weight& lambda, const Weight& mu);

/* Homogeneous spaces and partial flags supported by the pushforward engine.
   steps lists the subspace dimensions; ambient is dim V. */
struct Space {
    enum class Kind { Gr, Fl, IGr, IFl, IFl12k };
    Kind kind = Kind::Gr;
    std::vector<int> steps;
    int ambient = 0;

    static Space gr(int l, int r) { return {Kind::Gr, {l}, r}; }
    static Space fl(int a, int b, int r) { return {Kind::Fl, {a, b}, r}; }
    static Space igr(int k, int two_n) { return {Kind::IGr, {k}, two_n}; }
    static Space ifl(int a, int b, int two_n) { return {Kind::IFl, {a, b}, two_n}; }
    static Space ifl12k(int k, int two_n) { return {Kind::IFl12k, {1, 2, k}, two_n}; }

    bool isotropic() const { return kind == Kind::IGr || kind == Kind::IFl || kind == Kind::IFl12k; }
    int sp_rank() const;                       // rank of the symplectic quotient factor; -1 for Gr/Fl
    std::vector<int> gl_factor_ranks() const;  // includes the Q^vee factor on Gr/Fl
    int last_step() const { return steps.back(); }
    void validate() const;

    friend bool operator==(const Space&, const Space&) = default;
    friend auto operator<=>(const Space&, const Space&) = default;
    std::string str() const;
};

/* Extra wedge-power factors that are not irreducible for the Levi:
   Lambda^d of the ambient V (or its dual) and of the quotient V/U_last. */
struct WedgeFactor {
    enum class Base { Ambient, AmbientDual, Quotient, QuotientDual };
    Base base;
    int degree;
    friend bool operator==(const WedgeFactor&, const WedgeFactor&) = default;
    friend auto operator<=>(const WedgeFactor&, const WedgeFactor&) = default;
};

/* Irreducible equivariant bundle (possibly tensored with wedge factors),
   with a twist, homological degree and integer multiplicity.  GL factor
   weights follow the dual convention: factors[i] = w means Sigma^w F_i^vee. */
struct Bundle {
    Space space;
    std::vector<Weight> factors;
    Weight sp;
    std::vector<WedgeFactor> wedges;
    int twist = 0;  // powers of O(H_{last step})
    int degree = 0;
    Int mult = 1;

    void validate() const;
    Bundle folded() const;  // twist absorbed into the subbundle factors
    Bundle dual() const;
    bool same_shape(const Bundle& o) const;  // equal up to mult
    bool shape_less(const Bundle& o) const;
    std::string str() const;
};

/* Z-linear combination of bundles; normal form is sorted, merged and
   zero-free. */
class VirtualBundle {
public:
    VirtualBundle() = default;
    explicit VirtualBundle(Bundle b) { add(std::move(b)); }

    void add(Bundle b);
    void add(const VirtualBundle& o);
    const std::vector<Bundle>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    VirtualBundle dual() const;
    VirtualBundle twisted(int t) const;
    VirtualBundle degree_shifted(int s) const;
    VirtualBundle scaled(const Int& c) const;

    bool concentrated_in_degree(int d) const;
    bool nonnegative() const;

    friend bool operator==(const VirtualBundle&, const VirtualBundle&) = default;
    std::string str() const;

private:
    std::vector<Bundle> terms_;
};

/* Torus model of a space: monomial lists for each tautological factor over
   the fixed variable layout x_1..x_b, s_1..s_{n-b} (GL variables first). */
struct TorusModel {
    int nvars = 0;
    std::vector<std::vector<Expo>> gl_factors;  // subquotient bundles, not duals
    std::vector<Expo> sp_pairs;                 // one monomial per hyperbolic pair
    std::vector<Expo> ambient;                  // weights of V
};

TorusModel torus_model(const Space& s);

/* Character of a bundle (its mult included, degree ignored) over the torus
   model of its space. */
Character bundle_character(const Bundle& b);

/* Graded character sum_t mult(t) (-1)^{deg(t)} ch(t). */
Character virtual_character(const VirtualBundle& v);

enum class Projection { p, q, phi_k, phi_2 };
Projection projection_from_name(const std::string& name);

/* Derived pushforward of an irreducible bundle along a one-step flag
   forgetting.  Wedge factors are not allowed here. */
VirtualBundle pushforward(const Bundle& b, Projection proj);
Space projection_target(const Space& source, Projection proj);

struct GradedPart {
    Weight weight;
    int degree;
    Int mult;
};

/* Cohomology of an irreducible bundle on Gr(l,r) or IGr(k,2n): ambient
   GL(r)- resp. Sp(2n)-irreducibles by degree. */
std::vector<GradedPart> cohomology(const Bundle& b);

/* Ext groups between (virtual) equivariant bundles on IGr(k,2n), graded by
   degree, as ambient Sp(2n)-decompositions. */
std::vector<GradedPart> ext_groups(const Bundle& a, const VirtualBundle& b);
std::map<int, Int> ext_invariant_dims(const Bundle& a, const VirtualBundle& b);
std::map<int, Int> ext_full_dims(const Bundle& a, const VirtualBundle& b);

}  // namespace igrkp
