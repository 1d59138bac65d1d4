#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "igrkp/weights.hpp"

namespace igrkp {

using Int = mpz_class;
using Expo = std::vector<int>;  // one exponent per torus variable

/* Sparse Laurent polynomial in torus variables with exact integer
   coefficients. No zero coefficients are stored. */
class Character {
public:
    Character() = default;
    explicit Character(int nvars) : nvars_(nvars) {}

    static Character one(int nvars);
    static Character monomial(Expo e, Int c = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Int>& terms() const { return terms_; }

    Int coefficient(const Expo& e) const;
    Int dimension() const;  // evaluation at all-ones

    Character& add_term(const Expo& e, const Int& c);
    Character& operator+=(const Character& o);
    Character& operator-=(const Character& o);
    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator*(const Character& o) const;
    Character operator*(const Int& c) const;
    friend bool operator==(const Character&, const Character&) = default;

    Character inverse_vars() const;  // x_i -> x_i^{-1}

    /* Substitute variable i by the Laurent monomial images[i], given over
       an ambient set of ambient_nvars variables. */
    Character substituted(const std::vector<Expo>& images, int ambient_nvars) const;

    /* Tensor with a character in fresh trailing variables. */
    Character kron(const Character& o) const;

    std::string dump() const;  // sorted monomial list, for golden tests

private:
    int nvars_ = 0;
    std::map<Expo, Int> terms_;
};

struct Group {
    enum class Kind { GL, Sp };
    Kind kind;
    int rank;  // GL(rank); Sp(2*rank)

    static Group gl(int l) { return {Kind::GL, l}; }
    static Group sp(int m) { return {Kind::Sp, m}; }
    friend bool operator==(const Group&, const Group&) = default;
    std::string str() const;
};

/* Character of the irreducible representation of highest weight w.
   GL: any weakly decreasing integer weight of length rank.
   Sp: a Young diagram of length rank.
   Results are memoized; returned by value. */
Character irreducible_character(Group g, const Weight& w);

struct DecompTerm {
    Weight weight;
    Int mult;
};

struct Decomposition {
    std::vector<DecompTerm> parts;  // pairwise distinct weights
    bool nonnegative = true;        // false if any multiplicity < 0

    Int multiplicity(const Weight& w) const;
    Int total_dimension(Group g) const;
};

/* Iterated highest-weight extraction. Requires c to be a virtual
   character of g (Weyl-invariant); throws otherwise. */
Decomposition decompose(const Character& c, Group g);

/* Littlewood-Richardson coefficient c^gamma_{alpha,beta} for weights of a
   common length; negative entries handled by uniform entry shifts.
   Computed by the combinatorial rule (skew tableau count). */
Int lr_coefficient(const Weight& alpha, const Weight& beta, const Weight& gamma);

struct BranchTerm {
    Weight gl;  // length t, dominant (entries may be negative)
    Weight sp;  // length m, Young diagram
    Int mult;
};

struct BranchDecomposition {
    std::vector<BranchTerm> parts;
    Int total_dimension(int t, int m) const;
    Int multiplicity(const Weight& gl, const Weight& sp) const;
};

/* Restriction of the irreducible Sp(2(m+t))-representation of highest
   weight theta to the Levi GL(t) x Sp(2m), by torus specialization of the
   character (the first t variables become GL variables). The GL weights
   act on the tautological sub factor (not its dual). */
BranchDecomposition branch_sp_to_gl_sp(const Weight& theta, int t, int m);

/* Weyl dimension formula, exact. */
Int weyl_dimension(Group g, const Weight& w);

/* Schur / symplectic Schur functor applied to a bundle given by the list
   of its torus weights (Laurent monomials over ambient_nvars variables).
   For the symplectic version the monomials are one per hyperbolic pair;
   the inverses are implied. */
Character schur_of_monomials(const Weight& w, const std::vector<Expo>& monomials, int ambient_nvars);
Character sp_schur_of_monomials(const Weight& w, const std::vector<Expo>& monomials, int ambient_nvars);

/* Elementary symmetric polynomial e_b of the given monomials. */
Character elementary_of_monomials(int b, const std::vector<Expo>& monomials, int ambient_nvars);

}  // namespace igrkp
