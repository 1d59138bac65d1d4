#include "igrkp/bbw.hpp"

#include <algorithm>
#include <sstream>

namespace igrkp {

namespace {

std::vector<int> rho(int r) {
    std::vector<int> v(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] = r - i;
    return v;
}

std::vector<int> concat_plus_rho(const Weight& lambda, const Weight& mu) {
    int r = lambda.length() + mu.length();
    std::vector<int> v;
    v.reserve(static_cast<size_t>(r));
    v.insert(v.end(), lambda.begin(), lambda.end());
    v.insert(v.end(), mu.begin(), mu.end());
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] += r - i;
    return v;
}

}  // namespace

BBWResult bbw_gl(const Weight& lambda, const Weight& mu) {
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw std::invalid_argument("bbw_gl: factor weights must be weakly decreasing");
    std::vector<int> v = concat_plus_rho(lambda, mu);
    int r = static_cast<int>(v.size());
    int shift = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)]) return {};
            if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(j)]) ++shift;
        }
    std::sort(v.begin(), v.end(), std::greater<int>());
    std::vector<int> p = rho(r);
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] -= p[static_cast<size_t>(i)];
    return {false, Weight(std::move(v)), shift};
}

BBWResult bbw_sp(const Weight& lambda, const Weight& mu) {
    if (!lambda.is_dominant()) throw std::invalid_argument("bbw_sp: lambda must be weakly decreasing");
    if (!mu.is_young_diagram()) throw std::invalid_argument("bbw_sp: mu must be a Young diagram");
    std::vector<int> v = concat_plus_rho(lambda, mu);
    int r = static_cast<int>(v.size());
    int shift = 0;
    for (int i = 0; i < r; ++i) {
        if (v[static_cast<size_t>(i)] == 0) return {};
        if (v[static_cast<size_t>(i)] < 0) ++shift;  // long roots 2e_i
        for (int j = i + 1; j < r; ++j) {
            int a = v[static_cast<size_t>(i)], b = v[static_cast<size_t>(j)];
            if (std::abs(a) == std::abs(b)) return {};
            if (a - b < 0) ++shift;  // roots e_i - e_j
            if (a + b < 0) ++shift;  // roots e_i + e_j
        }
    }
    for (int& x : v) x = std::abs(x);
    std::sort(v.begin(), v.end(), std::greater<int>());
    std::vector<int> p = rho(r);
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] -= p[static_cast<size_t>(i)];
    return {false, Weight(std::move(v)), shift};
}

int Space::sp_rank() const {
    if (!isotropic()) return -1;
    return ambient / 2 - steps.back();
}

std::vector<int> Space::gl_factor_ranks() const {
    std::vector<int> r;
    int prev = 0;
    for (int s : steps) {
        r.push_back(s - prev);
        prev = s;
    }
    if (!isotropic()) r.push_back(ambient - prev);
    return r;
}

void Space::validate() const {
    if (steps.empty()) throw std::invalid_argument("space: no flag steps");
    int prev = 0;
    for (int s : steps) {
        if (s <= prev) throw std::invalid_argument("space: flag steps must increase");
        prev = s;
    }
    if (isotropic()) {
        if (ambient % 2 != 0) throw std::invalid_argument("space: isotropic kind needs even ambient dimension");
        if (steps.back() > ambient / 2) throw std::invalid_argument("space: isotropic step exceeds n");
    } else if (steps.back() >= ambient) {
        throw std::invalid_argument("space: step must be smaller than the ambient rank");
    }
    if ((kind == Kind::Gr || kind == Kind::IGr) && steps.size() != 1) throw std::invalid_argument("space: bad steps");
    if ((kind == Kind::Fl || kind == Kind::IFl) && steps.size() != 2) throw std::invalid_argument("space: bad steps");
    if (kind == Kind::IFl12k && (steps.size() != 3 || steps[0] != 1 || steps[1] != 2))
        throw std::invalid_argument("space: bad steps");
}

std::string Space::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Gr: os << "Gr(" << steps[0] << "," << ambient << ")"; break;
        case Kind::Fl: os << "Fl(" << steps[0] << "," << steps[1] << ";" << ambient << ")"; break;
        case Kind::IGr: os << "IGr(" << steps[0] << "," << ambient << ")"; break;
        case Kind::IFl: os << "IFl(" << steps[0] << "," << steps[1] << ";" << ambient << ")"; break;
        case Kind::IFl12k: os << "IFl(1,2," << steps[2] << ";" << ambient << ")"; break;
    }
    return os.str();
}

void Bundle::validate() const {
    space.validate();
    auto ranks = space.gl_factor_ranks();
    if (factors.size() != ranks.size()) throw std::invalid_argument("bundle: wrong number of GL factors");
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (factors[i].length() != ranks[i]) throw std::invalid_argument("bundle: factor length mismatch");
        if (!factors[i].is_dominant()) throw std::invalid_argument("bundle: factor weight not dominant");
    }
    int sr = space.sp_rank();
    if (sr >= 0) {
        if (sp.length() != sr) throw std::invalid_argument("bundle: Sp weight length mismatch");
        if (!sp.is_young_diagram()) throw std::invalid_argument("bundle: Sp weight not a Young diagram");
    } else if (!sp.empty()) {
        throw std::invalid_argument("bundle: Sp weight on a non-isotropic space");
    }
    for (auto& w : wedges)
        if (w.degree < 0) throw std::invalid_argument("bundle: negative wedge degree");
}

Bundle Bundle::folded() const {
    if (twist == 0) return *this;
    Bundle b = *this;
    size_t nsub = space.isotropic() ? b.factors.size() : b.factors.size() - 1;
    for (size_t i = 0; i < nsub; ++i) b.factors[i] = b.factors[i].shifted(-twist);
    b.twist = 0;
    return b;
}

Bundle Bundle::dual() const {
    Bundle b = *this;
    for (auto& f : b.factors) f = f.negated();
    for (auto& w : b.wedges) {
        switch (w.base) {
            case WedgeFactor::Base::Ambient: w.base = WedgeFactor::Base::AmbientDual; break;
            case WedgeFactor::Base::AmbientDual: w.base = WedgeFactor::Base::Ambient; break;
            case WedgeFactor::Base::Quotient: w.base = WedgeFactor::Base::QuotientDual; break;
            case WedgeFactor::Base::QuotientDual: w.base = WedgeFactor::Base::Quotient; break;
        }
    }
    b.twist = -twist;
    b.degree = -degree;
    return b;
}

bool Bundle::same_shape(const Bundle& o) const {
    return space == o.space && factors == o.factors && sp == o.sp && wedges == o.wedges && twist == o.twist &&
           degree == o.degree;
}

bool Bundle::shape_less(const Bundle& o) const {
    return std::tie(space, factors, sp, wedges, twist, degree) <
           std::tie(o.space, o.factors, o.sp, o.wedges, o.twist, o.degree);
}

std::string Bundle::str() const {
    std::ostringstream os;
    if (mult != 1) os << mult.get_str() << "*";
    bool first = true;
    for (auto& w : wedges) {
        if (!first) os << "(x)";
        first = false;
        os << "L^" << w.degree;
        switch (w.base) {
            case WedgeFactor::Base::Ambient: os << "V"; break;
            case WedgeFactor::Base::AmbientDual: os << "V'"; break;
            case WedgeFactor::Base::Quotient: os << "Q"; break;
            case WedgeFactor::Base::QuotientDual: os << "Q'"; break;
        }
    }
    for (size_t i = 0; i < factors.size(); ++i) {
        bool zero = true;
        for (int x : factors[i]) zero = zero && x == 0;
        if (zero && factors.size() + (sp.empty() ? 0 : 1) > 1) continue;
        if (!first) os << "(x)";
        first = false;
        os << "S[" << factors[i].str() << "]F" << i << "'";
    }
    if (!sp.empty() && sp.sum() != 0) {
        if (!first) os << "(x)";
        first = false;
        os << "Sp[" << sp.str() << "]";
    }
    if (first) os << "O";
    if (twist) os << "(" << twist << ")";
    if (degree) os << "[deg " << degree << "]";
    return os.str();
}

void VirtualBundle::add(Bundle b) {
    if (b.mult == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Bundle& x, const Bundle& y) { return x.shape_less(y); });
    if (it != terms_.end() && it->same_shape(b)) {
        it->mult += b.mult;
        if (it->mult == 0) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(b));
    }
}

void VirtualBundle::add(const VirtualBundle& o) {
    for (auto& t : o.terms_) add(t);
}

VirtualBundle VirtualBundle::dual() const {
    VirtualBundle r;
    for (auto& t : terms_) r.add(t.dual());
    return r;
}

VirtualBundle VirtualBundle::twisted(int t) const {
    VirtualBundle r;
    for (auto& b : terms_) {
        Bundle c = b;
        c.twist += t;
        r.add(std::move(c));
    }
    return r;
}

VirtualBundle VirtualBundle::degree_shifted(int s) const {
    VirtualBundle r;
    for (auto& b : terms_) {
        Bundle c = b;
        c.degree += s;
        r.add(std::move(c));
    }
    return r;
}

VirtualBundle VirtualBundle::scaled(const Int& c) const {
    VirtualBundle r;
    if (c == 0) return r;
    for (auto& b : terms_) {
        Bundle d = b;
        d.mult *= c;
        r.add(std::move(d));
    }
    return r;
}

bool VirtualBundle::concentrated_in_degree(int d) const {
    for (auto& b : terms_)
        if (b.degree != d) return false;
    return true;
}

bool VirtualBundle::nonnegative() const {
    for (auto& b : terms_)
        if (b.mult < 0) return false;
    return true;
}

std::string VirtualBundle::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << terms_[i].str();
    }
    return os.str();
}

TorusModel torus_model(const Space& s) {
    s.validate();
    TorusModel m;
    int b = s.steps.back();
    int nsp = s.isotropic() ? s.ambient / 2 - b : 0;
    int nq = s.isotropic() ? 0 : s.ambient - b;
    m.nvars = b + nsp + nq;
    auto var = [&](int i) {
        Expo e(static_cast<size_t>(m.nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        return e;
    };
    auto inv = [&](int i) {
        Expo e(static_cast<size_t>(m.nvars), 0);
        e[static_cast<size_t>(i)] = -1;
        return e;
    };
    int prev = 0;
    for (int step : s.steps) {
        std::vector<Expo> f;
        for (int i = prev; i < step; ++i) f.push_back(var(i));
        m.gl_factors.push_back(std::move(f));
        prev = step;
    }
    if (s.isotropic()) {
        for (int j = 0; j < nsp; ++j) m.sp_pairs.push_back(var(b + j));
        for (int i = 0; i < b; ++i) m.ambient.push_back(var(i));
        for (int j = 0; j < nsp; ++j) m.ambient.push_back(var(b + j));
        for (int j = 0; j < nsp; ++j) m.ambient.push_back(inv(b + j));
        for (int i = b - 1; i >= 0; --i) m.ambient.push_back(inv(i));
    } else {
        std::vector<Expo> q;
        for (int j = 0; j < nq; ++j) q.push_back(var(b + j));
        m.gl_factors.push_back(q);
        for (int i = 0; i < b + nq; ++i) m.ambient.push_back(var(i));
    }
    return m;
}

namespace {

std::vector<Expo> inverted(const std::vector<Expo>& ms) {
    std::vector<Expo> r = ms;
    for (auto& e : r)
        for (int& x : e) x = -x;
    return r;
}

}  // namespace

Character bundle_character(const Bundle& bundle) {
    Bundle b = bundle.folded();
    b.validate();
    TorusModel m = torus_model(b.space);
    Character ch = Character::one(m.nvars) * b.mult;
    for (size_t i = 0; i < b.factors.size(); ++i)
        ch = ch * schur_of_monomials(b.factors[i], inverted(m.gl_factors[i]), m.nvars);
    if (!b.sp.empty()) ch = ch * sp_schur_of_monomials(b.sp, m.sp_pairs, m.nvars);
    for (auto& w : b.wedges) {
        std::vector<Expo> base;
        switch (w.base) {
            case WedgeFactor::Base::Ambient: base = m.ambient; break;
            case WedgeFactor::Base::AmbientDual: base = inverted(m.ambient); break;
            case WedgeFactor::Base::Quotient: {
                base.assign(m.ambient.begin() + b.space.last_step(), m.ambient.end());
                break;
            }
            case WedgeFactor::Base::QuotientDual: {
                base.assign(m.ambient.begin() + b.space.last_step(), m.ambient.end());
                base = inverted(base);
                break;
            }
        }
        ch = ch * elementary_of_monomials(w.degree, base, m.nvars);
    }
    return ch;
}

Character virtual_character(const VirtualBundle& v) {
    Character sum;
    bool first = true;
    for (auto& b : v.terms()) {
        Character ch = bundle_character(b);
        if (b.degree % 2 != 0) ch = ch * Int(-1);
        if (first) {
            sum = std::move(ch);
            first = false;
        } else {
            sum += ch;
        }
    }
    return sum;
}

Projection projection_from_name(const std::string& name) {
    if (name == "p" || name == "p_t") return Projection::p;
    if (name == "q" || name == "q_t" || name == "psi" || name == "psi_l" || name == "q_k1" || name == "q_k2")
        return Projection::q;
    if (name == "phi_k") return Projection::phi_k;
    if (name == "phi_2") return Projection::phi_2;
    throw std::invalid_argument("unsupported projection: " + name);
}

Space projection_target(const Space& source, Projection proj) {
    switch (proj) {
        case Projection::p:
            if (source.kind != Space::Kind::IFl) throw std::invalid_argument("p: source must be IFl(a,b;2n)");
            return Space::igr(source.steps[0], source.ambient);
        case Projection::q:
            if (source.kind == Space::Kind::IFl) return Space::igr(source.steps[1], source.ambient);
            if (source.kind == Space::Kind::Fl) return Space::gr(source.steps[1], source.ambient);
            throw std::invalid_argument("q: source must be a two-step flag");
        case Projection::phi_k:
            if (source.kind != Space::Kind::IFl12k) throw std::invalid_argument("phi_k: source must be IFl(1,2,k)");
            return Space::ifl(1, source.steps[2], source.ambient);
        case Projection::phi_2:
            if (source.kind != Space::Kind::IFl12k) throw std::invalid_argument("phi_2: source must be IFl(1,2,k)");
            return Space::ifl(2, source.steps[2], source.ambient);
    }
    throw std::logic_error("bad projection");
}

VirtualBundle pushforward(const Bundle& bundle, Projection proj) {
    Bundle b = bundle.folded();
    b.validate();
    for (auto& w : b.wedges) {
        bool quotient = w.base == WedgeFactor::Base::Quotient || w.base == WedgeFactor::Base::QuotientDual;
        // ambient wedges are pulled back from the base; quotient wedges only
        // survive projections that keep the last flag step
        if (quotient && proj == Projection::p)
            throw std::invalid_argument("pushforward: quotient wedge not pulled back along p");
    }
    Space target = projection_target(b.space, proj);
    VirtualBundle out;
    BBWResult r;
    Bundle img;
    img.space = target;
    img.mult = b.mult;
    switch (proj) {
        case Projection::p:
            // fiber IGr(b-a, S_{2(n-a)})
            r = bbw_sp(b.factors[1], b.sp);
            if (r.vanishes) return out;
            img.factors = {b.factors[0]};
            img.sp = r.weight;
            break;
        case Projection::q:
            // fiber Gr(a, U_b)
            r = bbw_gl(b.factors[0], b.factors[1]);
            if (r.vanishes) return out;
            img.factors = {r.weight};
            if (b.space.kind == Space::Kind::Fl) img.factors.push_back(b.factors[2]);
            img.sp = b.sp;
            break;
        case Projection::phi_k:
            // fiber P(U_k/U_1)
            r = bbw_gl(b.factors[1], b.factors[2]);
            if (r.vanishes) return out;
            img.factors = {b.factors[0], r.weight};
            img.sp = b.sp;
            break;
        case Projection::phi_2:
            // fiber P(U_2)
            r = bbw_gl(b.factors[0], b.factors[1]);
            if (r.vanishes) return out;
            img.factors = {r.weight, b.factors[2]};
            img.sp = b.sp;
            break;
    }
    img.degree = b.degree + r.shift;
    img.wedges = b.wedges;
    img.validate();
    out.add(std::move(img));
    return out;
}

std::vector<GradedPart> cohomology(const Bundle& bundle) {
    Bundle b = bundle.folded();
    b.validate();
    if (!b.wedges.empty()) throw std::invalid_argument("cohomology: resolve wedge factors first");
    std::vector<GradedPart> out;
    BBWResult r;
    if (b.space.kind == Space::Kind::Gr) {
        r = bbw_gl(b.factors[0], b.factors[1]);
    } else if (b.space.kind == Space::Kind::IGr) {
        r = bbw_sp(b.factors[0], b.sp);
    } else {
        throw std::invalid_argument("cohomology: supported on Gr and IGr only");
    }
    if (!r.vanishes) out.push_back({r.weight, b.degree + r.shift, b.mult});
    return out;
}

std::vector<GradedPart> ext_groups(const Bundle& a, const VirtualBundle& bb) {
    Bundle av = a.folded();
    av.validate();
    if (av.space.kind != Space::Kind::IGr) throw std::invalid_argument("ext_groups: bundles must live on IGr(k,2n)");
    int k = av.space.steps[0];
    int spr = av.space.sp_rank();
    std::map<std::pair<Expo, int>, Int> acc;
    for (auto& tb : bb.terms()) {
        Bundle t = tb.folded();
        t.validate();
        if (!(t.space == av.space)) throw std::invalid_argument("ext_groups: space mismatch");
        if (!t.wedges.empty() || !av.wedges.empty())
            throw std::invalid_argument("ext_groups: wedge factors unsupported");
        Character glc =
            irreducible_character(Group::gl(k), av.factors[0].negated()) * irreducible_character(Group::gl(k), t.factors[0]);
        Decomposition gld = decompose(glc, Group::gl(k));
        Character spc = irreducible_character(Group::sp(spr), av.sp) * irreducible_character(Group::sp(spr), t.sp);
        Decomposition spd = decompose(spc, Group::sp(spr));
        for (auto& g : gld.parts) {
            for (auto& s : spd.parts) {
                BBWResult r = bbw_sp(g.weight, s.weight);
                if (r.vanishes) continue;
                int deg = r.shift + t.degree - av.degree;
                acc[{r.weight.entries(), deg}] += av.mult * t.mult * g.mult * s.mult;
            }
        }
    }
    std::vector<GradedPart> out;
    for (auto& [key, mult] : acc)
        if (mult != 0) out.push_back({Weight(key.first), key.second, mult});
    return out;
}

std::map<int, Int> ext_invariant_dims(const Bundle& a, const VirtualBundle& b) {
    std::map<int, Int> out;
    for (auto& p : ext_groups(a, b))
        if (p.weight.sum() == 0 && p.weight.is_young_diagram()) out[p.degree] += p.mult;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, Int> ext_full_dims(const Bundle& a, const VirtualBundle& b) {
    Bundle av = a.folded();
    int n = av.space.ambient / 2;
    std::map<int, Int> out;
    for (auto& p : ext_groups(a, b)) out[p.degree] += p.mult * weyl_dimension(Group::sp(n), p.weight);
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace igrkp
