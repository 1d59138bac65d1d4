#include "igrkp/complexes.hpp"

#include <algorithm>

namespace igrkp {

namespace {

Weight zero_weight(int len) { return Weight(std::vector<int>(static_cast<size_t>(len), 0)); }

std::vector<Weight> trivial_factors(const Space& s) {
    std::vector<Weight> f;
    for (int r : s.gl_factor_ranks()) f.push_back(zero_weight(r));
    return f;
}

Weight sp_zero(const Space& s) {
    int r = s.sp_rank();
    return zero_weight(r < 0 ? 0 : r);
}

Weight pad_to(const Weight& w, int len) {
    std::vector<int> e = w.entries();
    while (static_cast<int>(e.size()) < len) e.push_back(0);
    if (static_cast<int>(e.size()) != len) throw std::invalid_argument("pad_to: weight too long");
    return Weight(std::move(e));
}

}  // namespace

ChainComplex build_koszul(int m, const Space& s) {
    if (m < 0) throw std::invalid_argument("koszul: m must be non-negative");
    s.validate();
    if (s.kind != Space::Kind::Gr && s.kind != Space::Kind::IGr)
        throw std::invalid_argument("koszul: space must be Gr or IGr");
    int l = s.steps[0];
    int qrank = s.ambient - l;
    ChainComplex c;
    c.space = s;
    c.name = "koszul(m=" + std::to_string(m) + ")";
    if (m <= qrank) {
        Bundle head;
        head.space = s;
        head.factors = trivial_factors(s);
        head.sp = sp_zero(s);
        head.wedges = {{WedgeFactor::Base::QuotientDual, m}};
        c.terms.push_back({VirtualBundle(std::move(head)), 0});
    }
    for (int j = 1; j <= m + 1; ++j) {
        if (m + 1 - j > s.ambient) continue;
        Bundle t;
        t.space = s;
        t.factors = trivial_factors(s);
        t.factors[0] = pad_to(Weight{j - 1}, l);
        t.sp = sp_zero(s);
        if (m + 1 - j > 0) t.wedges = {{WedgeFactor::Base::AmbientDual, m + 1 - j}};
        c.terms.push_back({VirtualBundle(std::move(t)), j});
    }
    return c;
}

ChainComplex build_generalized_staircase(const Weight& alpha, const Space& s) {
    s.validate();
    if (s.kind != Space::Kind::Gr && s.kind != Space::Kind::IGr)
        throw std::invalid_argument("staircase: space must be Gr or IGr");
    int k = s.steps[0], r = s.ambient;
    if (alpha.length() != k) throw std::invalid_argument("staircase: weight length must equal k");
    if (r <= k) throw std::invalid_argument("staircase: rank must exceed k");
    int m = m_of(alpha, r);
    ChainComplex c;
    c.space = s;
    c.name = "gsc(" + alpha.str() + ")";
    for (int i = m; i >= 0; --i) {
        Bundle t;
        t.space = s;
        t.factors = trivial_factors(s);
        t.factors[0] = alpha_i(alpha, i);
        t.sp = sp_zero(s);
        int b = b_of(alpha, i);
        if (b > 0) t.wedges = {{WedgeFactor::Base::AmbientDual, b}};
        c.terms.push_back({VirtualBundle(std::move(t)), -i});
    }
    return c;
}

ChainComplex build_symplectic_staircase(const Weight& mu, int a, int n) {
    if (!(0 < a && 2 * a < n)) throw std::invalid_argument("ssc: need 0 < a < n/2");
    if (mu.length() != n - 2 * a) throw std::invalid_argument("ssc: mu must have length n-2a");
    if (!mu.is_young_diagram()) throw std::invalid_argument("ssc: mu must be a Young diagram");
    if (mu.empty() || mu[0] != a) throw std::invalid_argument("ssc: mu_1 must equal a");
    Space s = Space::igr(2 * a, 2 * n);
    ChainComplex c;
    c.space = s;
    c.name = "ssc(" + mu.str() + ")";
    auto term = [&](int i, bool left) {
        Bundle t;
        t.space = s;
        t.factors = trivial_factors(s);
        t.sp = alpha_i(mu, i);
        int b = b_of(mu, i);
        if (left) {
            if (b > 0) t.wedges = {{WedgeFactor::Base::Quotient, b}};
            t.twist = -1;
        } else if (b > 0) {
            t.wedges = {{WedgeFactor::Base::QuotientDual, b}};
        }
        return t;
    };
    for (int i = 0; i <= a; ++i) c.terms.push_back({VirtualBundle(term(i, true)), i - 2 * a - 1});
    for (int i = a; i >= 0; --i) c.terms.push_back({VirtualBundle(term(i, false)), -i});
    return c;
}

namespace {

/* Terms of the rank-2n generalized staircase for a length-l weight, as
   bundles on Gr(l,2n) or IGr(l,2n). */
Bundle staircase_term(const Weight& alpha, int i, const Space& s) {
    Bundle t;
    t.space = s;
    t.factors = trivial_factors(s);
    t.factors[0] = alpha_i(alpha, i);
    t.sp = sp_zero(s);
    int b = b_of(alpha, i);
    if (b > 0) t.wedges = {{WedgeFactor::Base::AmbientDual, b}};
    return t;
}

}  // namespace

KClass k_class(const Weight& alpha, int l, int n, bool isotropic) {
    if (alpha.length() != l) throw std::invalid_argument("k_class: weight length must equal l");
    Space s = isotropic ? Space::igr(l, 2 * n) : Space::gr(l, 2 * n);
    KClass out;
    out.alpha = alpha;
    out.l = l;
    out.n = n;
    for (int j = 1; j < l; ++j)
        if (alpha[j] > 0) ++out.r_alpha;
    int c = alpha[0] + v_of(alpha);
    int m = m_of(alpha, 2 * n);
    // choose the shorter of the two defining resolutions
    int kern_terms = c < 0 ? 0 : std::min(c, m) + 1;
    int coker_terms = c >= m ? 0 : m - c;
    if (coker_terms <= kern_terms) {
        for (int i = c + 1; i <= m; ++i) {
            Bundle t = staircase_term(alpha, i, s);
            if ((i - c - 1) % 2 != 0) t.mult = -t.mult;
            out.virtual_class.add(std::move(t));
        }
    } else {
        for (int i = 0; i <= std::min(c, m); ++i) {
            Bundle t = staircase_term(alpha, i, s);
            if ((c - i) % 2 != 0) t.mult = -t.mult;
            out.virtual_class.add(std::move(t));
        }
    }
    return out;
}

KClass c_class(const Weight& alpha, int l, int n, bool isotropic) {
    KClass k = k_class(alpha, l, n, isotropic);
    k.virtual_class = k.virtual_class.dual();
    return k;
}

bool k_class_routes_agree(const Weight& alpha, int l, int n, bool isotropic) {
    Space s = isotropic ? Space::igr(l, 2 * n) : Space::gr(l, 2 * n);
    int c = alpha[0] + v_of(alpha);
    int m = m_of(alpha, 2 * n);
    VirtualBundle kern, coker;
    for (int i = 0; i <= std::min(c, m); ++i) {
        Bundle t = staircase_term(alpha, i, s);
        if ((c - i) % 2 != 0) t.mult = -t.mult;
        kern.add(std::move(t));
    }
    for (int i = c + 1; i <= m; ++i) {
        Bundle t = staircase_term(alpha, i, s);
        if ((i - c - 1) % 2 != 0) t.mult = -t.mult;
        coker.add(std::move(t));
    }
    return virtual_character(kern) == virtual_character(coker);
}

namespace {

/* Fourier-Mukai image q_{k-2 *}(Sigma^{abar-1}(U_k/U_2) (x) p^* E) for
   E = Lambda^r_Sp S_{2(n-2)}, as a virtual bundle on IGr(k, 2n). */
VirtualBundle phi_of_sp_wedge(const Weight& alpha, int k, int n, int r) {
    Weight theta = pad_to(Weight(std::vector<int>(static_cast<size_t>(r), 1)), n - 2);
    if (k == 2) {
        Bundle b;
        b.space = Space::igr(2, 2 * n);
        b.factors = {zero_weight(2)};
        b.sp = theta;
        return VirtualBundle(std::move(b));
    }
    Space flag = Space::ifl(2, k, 2 * n);
    Weight kernel_weight = alpha.bar().shifted(1).negated();  // Sigma^{abar-1}(U_k/U_2), dual convention
    VirtualBundle out;
    BranchDecomposition br = branch_sp_to_gl_sp(theta, k - 2, n - k);
    for (auto& part : br.parts) {
        Character prod = irreducible_character(Group::gl(k - 2), part.gl.negated()) *
                         irreducible_character(Group::gl(k - 2), kernel_weight);
        Decomposition dec = decompose(prod, Group::gl(k - 2));
        for (auto& piece : dec.parts) {
            Bundle b;
            b.space = flag;
            b.factors = {zero_weight(2), piece.weight};
            b.sp = part.sp;
            b.mult = part.mult * piece.mult;
            out.add(pushforward(b, Projection::q));
        }
    }
    return out;
}

}  // namespace

SecondaryStaircase build_secondary_staircase(const Weight& alpha, int k, int n) {
    if (alpha.length() != k - 1) throw std::invalid_argument("secondary: alpha must have length k-1");
    if (!alpha.is_young_diagram() || !alpha.fits_width(2 * n - k))
        throw std::invalid_argument("secondary: alpha must lie in YD^{2n-k}_1 x YD^{2n-k}_{k-2}");
    if (alpha.length() > 1 && !alpha.bar().is_dominant())
        throw std::invalid_argument("secondary: tail not dominant");
    SecondaryStaircase h;
    h.alpha = alpha;
    h.k = k;
    h.n = n;
    int delta = alpha[0] + v_of(alpha);
    for (int i = 0; i <= delta; ++i) {
        SecondaryStaircase::Term t;
        t.i = i;
        t.b = b_of(alpha, i);
        t.d = d_of(alpha, i);
        Weight ai = alpha_i(alpha, i);
        std::vector<int> kw;
        kw.push_back(2 * n - k - t.b);
        kw.insert(kw.end(), ai.begin(), ai.end());
        t.kweight = Weight(std::move(kw));
        t.kclass = k_class(t.kweight, k, n, true).virtual_class;
        t.degree = i - delta;
        h.terms.push_back(std::move(t));
    }
    int a1 = alpha[0];
    if (a1 != n - k + 1) {
        int r = a1 <= n - k ? a1 + k - 2 : 2 * n - k - a1;
        VirtualBundle w = phi_of_sp_wedge(alpha, k, n, r);
        h.claimed = w.twisted(1).dual();
        if (a1 > n - k) h.claimed = h.claimed.degree_shifted(1);
    }
    return h;
}

ChainComplex SecondaryStaircase::as_chain_complex() const {
    ChainComplex c;
    c.space = Space::igr(k, 2 * n);
    c.name = "secondary(" + alpha.str() + ")";
    for (auto& t : terms)
        if (!t.kclass.is_zero()) c.terms.push_back({t.kclass, t.degree});
    c.claimed = claimed;
    return c;
}

std::vector<SecondaryStaircase::Term> tau_truncate(const SecondaryStaircase& h, int t) {
    if (t < 1 || t > h.k - 1) throw std::invalid_argument("tau: need 1 <= t <= k-1");
    std::vector<SecondaryStaircase::Term> out;
    for (auto& term : h.terms)
        if (1 <= term.b && term.b <= t) out.push_back(term);
    return out;
}

KReport check_ktheory_exact(const ChainComplex& c) {
    KReport rep;
    for (auto& [vb, deg] : c.terms)
        for (auto& b : vb.terms())
            if (!(b.space == c.space)) throw std::invalid_argument("check: mixed spaces in complex");
    Character sum;
    bool first = true;
    for (auto& [vb, deg] : c.terms) {
        Character ch = virtual_character(vb);
        if (deg % 2 != 0) ch = ch * Int(-1);
        if (first) {
            sum = std::move(ch);
            first = false;
        } else {
            sum += ch;
        }
    }
    if (c.claimed) sum -= virtual_character(*c.claimed);
    rep.defect = std::move(sum);
    rep.exact_in_K = rep.defect.is_zero();
    return rep;
}

}  // namespace igrkp
