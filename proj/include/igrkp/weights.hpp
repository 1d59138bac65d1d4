#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace igrkp {

/* Integer weight vector of fixed length. Immutable value object;
   equality is entrywise, ordering is lexicographic (map keys). */
class Weight {
public:
    Weight() = default;
    Weight(std::initializer_list<int> e) : e_(e) {}
    explicit Weight(std::vector<int> e) : e_(std::move(e)) {}

    int length() const { return static_cast<int>(e_.size()); }
    bool empty() const { return e_.empty(); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    long long sum() const;

    bool is_dominant() const;       // weakly decreasing
    bool is_young_diagram() const;  // weakly decreasing, entries >= 0
    bool fits_width(int w) const;   // first entry <= w

    Weight bar() const;                    // drop the first entry
    Weight negated() const;                // (-a_n, ..., -a_1)
    Weight shifted(int m) const;           // entrywise subtract m
    Weight prepended(int m, int t) const;  // ((m)^t, a)

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string str() const;  // comma-separated, "()" when empty

private:
    std::vector<int> e_;
};

Weight parse_weight(const std::string& text);  // "3,2,2,1"; "" or "()" -> empty

/* Validated wrapper: weakly decreasing entries. */
class DominantWeight {
public:
    explicit DominantWeight(Weight w) : w_(std::move(w)) {
        if (!w_.is_dominant()) throw std::invalid_argument("weight is not weakly decreasing: " + w_.str());
    }
    const Weight& weight() const { return w_; }
    operator const Weight&() const { return w_; }
    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    Weight w_;
};

/* Validated wrapper: Young diagram, optionally with a width bound.
   The bound is construction-time metadata only. */
class YoungDiagram {
public:
    explicit YoungDiagram(Weight w, int width = -1) : w_(std::move(w)), width_(width) {
        if (!w_.is_young_diagram()) throw std::invalid_argument("not a Young diagram: " + w_.str());
        if (width_ >= 0 && !w_.fits_width(width_))
            throw std::invalid_argument("diagram exceeds width bound " + std::to_string(width_) + ": " + w_.str());
    }
    const Weight& weight() const { return w_; }
    operator const Weight&() const { return w_; }
    int width_bound() const { return width_; }
    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.w_ == b.w_; }

private:
    Weight w_;
    int width_;
};

/* Weight of the Levi GL(k) x Sp(2(n-k)): a GL part (any dominant weight)
   and an Sp part (a Young diagram). */
struct BlockWeight {
    Weight gl;
    Weight sp;

    BlockWeight(Weight gl_part, Weight sp_part) : gl(std::move(gl_part)), sp(std::move(sp_part)) {
        if (!gl.is_dominant()) throw std::invalid_argument("GL part not dominant: " + gl.str());
        if (!sp.is_young_diagram()) throw std::invalid_argument("Sp part not a Young diagram: " + sp.str());
    }
    friend bool operator==(const BlockWeight&, const BlockWeight&) = default;
    friend auto operator<=>(const BlockWeight&, const BlockWeight&) = default;
    std::string str() const { return gl.str() + ";" + sp.str(); }
};

/* Partial order on Y_k x YD_{n-k}: entrywise <= on the GL part and
   total size |gl|+|sp| <= on the pair. */
bool kp_prec(const BlockWeight& a, const BlockWeight& b);

/* All Young diagrams of length l and width at most w, lexicographically
   sorted ascending. Count is binomial(l+w, l). */
std::vector<Weight> enumerate_diagrams(int l, int w);

/* ((a)^t, mu) for a diagram mu with mu_1 <= a. */
Weight hat_weight(const Weight& mu, int t, int a);

}  // namespace igrkp
