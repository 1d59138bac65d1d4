#include "igrkp/characters.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace igrkp {

Character Character::one(int nvars) {
    Character c(nvars);
    c.terms_[Expo(static_cast<size_t>(nvars), 0)] = 1;
    return c;
}

Character Character::monomial(Expo e, Int c) {
    Character r(static_cast<int>(e.size()));
    if (c != 0) r.terms_[std::move(e)] = std::move(c);
    return r;
}

Int Character::coefficient(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int Character::dimension() const {
    Int d = 0;
    for (auto& [e, c] : terms_) d += c;
    return d;
}

Character& Character::add_term(const Expo& e, const Int& c) {
    if (c == 0) return *this;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Character& Character::operator+=(const Character& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Character& Character::operator-=(const Character& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Character Character::operator+(const Character& o) const {
    Character r = *this;
    r += o;
    return r;
}

Character Character::operator-(const Character& o) const {
    Character r = *this;
    r -= o;
    return r;
}

Character Character::operator*(const Character& o) const {
    Character r(nvars_);
    Expo e(terms_.empty() ? 0 : terms_.begin()->first.size());
    for (auto& [e1, c1] : terms_) {
        for (auto& [e2, c2] : o.terms_) {
            e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Character Character::operator*(const Int& c) const {
    Character r(nvars_);
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Character Character::inverse_vars() const {
    Character r(nvars_);
    for (auto& [e, c] : terms_) {
        Expo f = e;
        for (int& x : f) x = -x;
        r.terms_[std::move(f)] = c;
    }
    return r;
}

Character Character::substituted(const std::vector<Expo>& images, int ambient_nvars) const {
    Character r(ambient_nvars);
    Expo m(static_cast<size_t>(ambient_nvars), 0);
    for (auto& [e, c] : terms_) {
        std::fill(m.begin(), m.end(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const Expo& im = images[i];
            for (size_t j = 0; j < m.size(); ++j) m[j] += e[i] * im[j];
        }
        r.add_term(m, c);
    }
    return r;
}

Character Character::kron(const Character& o) const {
    Character r(nvars_ + o.nvars_);
    for (auto& [e1, c1] : terms_) {
        for (auto& [e2, c2] : o.terms_) {
            Expo e = e1;
            e.insert(e.end(), e2.begin(), e2.end());
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

std::string Character::dump() const {
    std::ostringstream os;
    for (auto& [e, c] : terms_) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        os << ':' << c.get_str() << '\n';
    }
    return os.str();
}

std::string Group::str() const {
    std::ostringstream os;
    if (kind == Kind::GL)
        os << "GL(" << rank << ")";
    else
        os << "Sp(" << 2 * rank << ")";
    return os.str();
}

namespace {

/* GL character by the Gelfand-Tsetlin branching recursion; weights are
   normalized to Young diagrams, determinant twists handled by the caller. */
Character gl_char_nonneg(int l, const std::vector<int>& lam);

std::map<std::pair<int, std::vector<int>>, Character> g_gl_cache;
std::mutex g_gl_mutex;

Character gl_char_nonneg_uncached(int l, const std::vector<int>& lam) {
    if (l == 0) return Character::one(0);
    if (l == 1) return Character::monomial({lam[0]});
    long long total = 0;
    for (int x : lam) total += x;
    Character r(l);
    // mu runs over diagrams interlacing lam
    std::vector<int> mu(static_cast<size_t>(l - 1));
    auto rec = [&](auto&& self, int pos, long long musum) -> void {
        if (pos == l - 1) {
            Character sub = gl_char_nonneg(l - 1, mu);
            int last = static_cast<int>(total - musum);
            for (auto& [e, c] : sub.terms()) {
                Expo f = e;
                f.push_back(last);
                r.add_term(f, c);
            }
            return;
        }
        int lo = lam[static_cast<size_t>(pos) + 1], hi = lam[static_cast<size_t>(pos)];
        for (int v = lo; v <= hi; ++v) {
            mu[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, musum + v);
        }
    };
    rec(rec, 0, 0);
    return r;
}

Character gl_char_nonneg(int l, const std::vector<int>& lam) {
    {
        std::lock_guard<std::mutex> lock(g_gl_mutex);
        auto it = g_gl_cache.find({l, lam});
        if (it != g_gl_cache.end()) return it->second;
    }
    Character r = gl_char_nonneg_uncached(l, lam);
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    return g_gl_cache.try_emplace({l, lam}, std::move(r)).first->second;
}

Character gl_character(int l, const Weight& w) {
    if (w.length() != l) throw std::invalid_argument("GL weight length mismatch");
    if (!w.is_dominant()) throw std::invalid_argument("GL weight not dominant: " + w.str());
    if (l == 0) return Character::one(0);
    int m = std::min(0, w[l - 1]);
    Character c = gl_char_nonneg(l, w.shifted(m).entries());
    if (m == 0) return c;
    Character r(l);
    for (auto& [e, coef] : c.terms()) {
        Expo f = e;
        for (int& x : f) x += m;
        r.add_term(f, coef);
    }
    return r;
}

/* Symplectic character by the Weyl character formula: the alternant for
   lam+rho divided by the C_m Weyl denominator
     prod_i (s_i - s_i^{-1}) * prod_{i<j} (s_i + s_i^{-1} - s_j - s_j^{-1}),
   all divisions exact. */

Character sp_alternant(int m, const std::vector<int>& l) {
    Character r(m);
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int psign = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) psign = -psign;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            Expo e(static_cast<size_t>(m));
            int sign = psign;
            for (int i = 0; i < m; ++i) {
                int v = l[static_cast<size_t>(perm[static_cast<size_t>(i)])];
                if (mask & (1u << i)) {
                    e[static_cast<size_t>(i)] = -v;
                    sign = -sign;
                } else {
                    e[static_cast<size_t>(i)] = v;
                }
            }
            r.add_term(e, sign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

/* Exact division by a factor whose maximal term in variable v is s_v with
   coefficient one; remaining factor terms have smaller s_v exponent. */
Character divide_by_factor(const Character& p, const Character& f, int v) {
    Character rem = p, quo(p.nvars());
    long long guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 4000000) throw std::logic_error("non-exact Weyl denominator division");
        int emax = rem.terms().begin()->first[static_cast<size_t>(v)];
        for (auto& [e, c] : rem.terms()) emax = std::max(emax, e[static_cast<size_t>(v)]);
        Character chunk(p.nvars());
        for (auto& [e, c] : rem.terms()) {
            if (e[static_cast<size_t>(v)] == emax) {
                Expo q = e;
                q[static_cast<size_t>(v)] -= 1;
                chunk.add_term(q, c);
            }
        }
        quo += chunk;
        rem -= chunk * f;
    }
    return quo;
}

std::map<std::pair<int, std::vector<int>>, Character> g_sp_cache;
std::mutex g_sp_mutex;

Character sp_character(int m, const Weight& w) {
    if (w.length() != m) throw std::invalid_argument("Sp weight length mismatch");
    if (!w.is_young_diagram()) throw std::invalid_argument("Sp weight not a Young diagram: " + w.str());
    if (m == 0) return Character::one(0);
    {
        std::lock_guard<std::mutex> lock(g_sp_mutex);
        auto it = g_sp_cache.find({m, w.entries()});
        if (it != g_sp_cache.end()) return it->second;
    }
    std::vector<int> l(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) l[static_cast<size_t>(i)] = w[i] + (m - i);
    Character num = sp_alternant(m, l);
    for (int i = 0; i < m; ++i) {
        Character f(m);
        Expo a(static_cast<size_t>(m), 0), b(static_cast<size_t>(m), 0);
        a[static_cast<size_t>(i)] = 1;
        b[static_cast<size_t>(i)] = -1;
        f.add_term(a, 1).add_term(b, -1);
        num = divide_by_factor(num, f, i);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            Character f(m);
            Expo a(static_cast<size_t>(m), 0);
            a[static_cast<size_t>(i)] = 1;
            f.add_term(a, 1);
            a[static_cast<size_t>(i)] = -1;
            f.add_term(a, 1);
            a[static_cast<size_t>(i)] = 0;
            a[static_cast<size_t>(j)] = 1;
            f.add_term(a, -1);
            a[static_cast<size_t>(j)] = -1;
            f.add_term(a, -1);
            num = divide_by_factor(num, f, i);
        }
    }
    std::lock_guard<std::mutex> lock(g_sp_mutex);
    return g_sp_cache.try_emplace({m, w.entries()}, std::move(num)).first->second;
}

bool dominant_for(Group g, const Expo& e) {
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] < e[i]) return false;
    if (g.kind == Group::Kind::Sp && !e.empty() && e.back() < 0) return false;
    return true;
}

}  // namespace

Character irreducible_character(Group g, const Weight& w) {
    return g.kind == Group::Kind::GL ? gl_character(g.rank, w) : sp_character(g.rank, w);
}

Int Decomposition::multiplicity(const Weight& w) const {
    for (auto& p : parts)
        if (p.weight == w) return p.mult;
    return 0;
}

Int Decomposition::total_dimension(Group g) const {
    Int d = 0;
    for (auto& p : parts) d += p.mult * weyl_dimension(g, p.weight);
    return d;
}

Decomposition decompose(const Character& c, Group g) {
    Decomposition out;
    Character rem = c;
    long long guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 1000000) throw std::logic_error("decompose: too many extraction steps");
        const Expo& e = rem.terms().rbegin()->first;  // lexicographically greatest
        if (!dominant_for(g, e))
            throw std::invalid_argument("decompose: leading exponent not dominant (not a virtual character of " +
                                        g.str() + ")");
        Int mult = rem.terms().rbegin()->second;
        Weight w(Expo(e));
        if (mult < 0) out.nonnegative = false;
        rem -= irreducible_character(g, w) * mult;
        out.parts.push_back({std::move(w), std::move(mult)});
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const DecompTerm& a, const DecompTerm& b) { return a.weight < b.weight; });
    return out;
}

namespace {

/* Count Littlewood-Richardson tableaux of shape gamma/alpha and content
   beta: semistandard filling whose reverse reading word is a lattice word. */
Int lr_count(const std::vector<int>& alpha, const std::vector<int>& beta, const std::vector<int>& gamma) {
    size_t rows = gamma.size();
    for (size_t i = 0; i < rows; ++i) {
        int a = i < alpha.size() ? alpha[i] : 0;
        if (a > gamma[i]) return 0;
    }
    long long asum = 0, bsum = 0, gsum = 0;
    for (int x : alpha) asum += x;
    for (int x : beta) bsum += x;
    for (int x : gamma) gsum += x;
    if (asum + bsum != gsum) return 0;
    int nvals = static_cast<int>(beta.size());
    std::vector<int> counts(static_cast<size_t>(nvals) + 1, 0);
    // entry grid, 0 = unfilled
    std::vector<std::vector<int>> cell(rows);
    for (size_t i = 0; i < rows; ++i) cell[i].assign(static_cast<size_t>(gamma[i]), 0);

    Int total = 0;
    // fill in reverse reading order: rows top to bottom, each row right to left
    auto rec = [&](auto&& self, size_t row, int col) -> void {
        while (row < rows) {
            int a = row < alpha.size() ? alpha[row] : 0;
            if (col >= a) break;
            ++row;
            col = (row < rows) ? gamma[row] - 1 : 0;
        }
        if (row == rows) {
            total += 1;
            return;
        }
        int a = row < alpha.size() ? alpha[row] : 0;
        int right = (col + 1 < gamma[row]) ? cell[row][static_cast<size_t>(col) + 1] : nvals;
        int above = 0;
        if (row > 0 && col < gamma[row - 1]) {
            int a_up = row - 1 < alpha.size() ? alpha[row - 1] : 0;
            above = (col >= a_up) ? cell[row - 1][static_cast<size_t>(col)] : 0;
        }
        for (int v = above + 1; v <= std::min(right, nvals); ++v) {
            if (counts[static_cast<size_t>(v)] >= beta[static_cast<size_t>(v) - 1]) continue;
            if (v > 1 && counts[static_cast<size_t>(v)] + 1 > counts[static_cast<size_t>(v) - 1]) continue;
            cell[row][static_cast<size_t>(col)] = v;
            ++counts[static_cast<size_t>(v)];
            if (col > a)
                self(self, row, col - 1);
            else
                self(self, row + 1, row + 1 < rows ? gamma[row + 1] - 1 : 0);
            --counts[static_cast<size_t>(v)];
            cell[row][static_cast<size_t>(col)] = 0;
        }
    };
    rec(rec, 0, rows ? gamma[0] - 1 : 0);
    return total;
}

}  // namespace

Int lr_coefficient(const Weight& alpha, const Weight& beta, const Weight& gamma) {
    int l = alpha.length();
    if (beta.length() != l || gamma.length() != l) throw std::invalid_argument("lr_coefficient: length mismatch");
    if (!alpha.is_dominant() || !beta.is_dominant() || !gamma.is_dominant())
        throw std::invalid_argument("lr_coefficient: weights must be dominant");
    if (l == 0) return 1;
    int m = std::min(0, alpha[l - 1]);
    int mp = std::min(0, beta[l - 1]);
    Weight a = alpha.shifted(m), b = beta.shifted(mp), g = gamma.shifted(m + mp);
    if (g.length() && g[g.length() - 1] < 0) return 0;
    return lr_count(a.entries(), b.entries(), g.entries());
}

Int BranchDecomposition::total_dimension(int t, int m) const {
    Int d = 0;
    for (auto& p : parts) d += p.mult * weyl_dimension(Group::gl(t), p.gl) * weyl_dimension(Group::sp(m), p.sp);
    return d;
}

Int BranchDecomposition::multiplicity(const Weight& gl, const Weight& sp) const {
    for (auto& p : parts)
        if (p.gl == gl && p.sp == sp) return p.mult;
    return 0;
}

BranchDecomposition branch_sp_to_gl_sp(const Weight& theta, int t, int m) {
    if (theta.length() != t + m) throw std::invalid_argument("branch: theta must have length t+m");
    Character rem = sp_character(t + m, theta);
    BranchDecomposition out;
    long long guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 1000000) throw std::logic_error("branch: too many extraction steps");
        const Expo& e = rem.terms().rbegin()->first;
        Weight gl(Expo(e.begin(), e.begin() + t));
        Weight sp(Expo(e.begin() + t, e.end()));
        if (!gl.is_dominant() || !sp.is_young_diagram())
            throw std::logic_error("branch: leading exponent not Levi-dominant");
        Int mult = rem.terms().rbegin()->second;
        if (mult <= 0) throw std::logic_error("branch: negative leading multiplicity");
        Character piece = irreducible_character(Group::gl(t), gl).kron(irreducible_character(Group::sp(m), sp));
        rem -= piece * mult;
        out.parts.push_back({std::move(gl), std::move(sp), std::move(mult)});
    }
    std::sort(out.parts.begin(), out.parts.end(), [](const BranchTerm& a, const BranchTerm& b) {
        return std::tie(a.gl, a.sp) < std::tie(b.gl, b.sp);
    });
    return out;
}

Int weyl_dimension(Group g, const Weight& w) {
    int r = g.rank;
    if (w.length() != r) throw std::invalid_argument("weyl_dimension: rank mismatch");
    if (g.kind == Group::Kind::GL) {
        if (!w.is_dominant()) throw std::invalid_argument("weyl_dimension: not dominant");
        Int num = 1, den = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                num *= (w[i] - w[j]) + (j - i);
                den *= j - i;
            }
        Int d;
        mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return d;
    }
    if (!w.is_young_diagram()) throw std::invalid_argument("weyl_dimension: Sp weight not a Young diagram");
    Int num = 1, den = 1;
    std::vector<long long> l(static_cast<size_t>(r)), p(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        l[static_cast<size_t>(i)] = w[i] + (r - i);
        p[static_cast<size_t>(i)] = r - i;
    }
    for (int i = 0; i < r; ++i) {
        num *= l[static_cast<size_t>(i)];
        den *= p[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j) {
            num *= (l[static_cast<size_t>(i)] - l[static_cast<size_t>(j)]) *
                   (l[static_cast<size_t>(i)] + l[static_cast<size_t>(j)]);
            den *= (p[static_cast<size_t>(i)] - p[static_cast<size_t>(j)]) *
                   (p[static_cast<size_t>(i)] + p[static_cast<size_t>(j)]);
        }
    }
    Int d;
    mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return d;
}

Character elementary_of_monomials(int b, const std::vector<Expo>& monomials, int ambient_nvars) {
    if (b < 0 || b > static_cast<int>(monomials.size())) return Character(ambient_nvars);
    std::vector<Character> e(static_cast<size_t>(b) + 1, Character(ambient_nvars));
    e[0] = Character::one(ambient_nvars);
    for (size_t i = 0; i < monomials.size(); ++i) {
        Character x = Character::monomial(monomials[i]);
        for (int j = std::min<int>(b, static_cast<int>(i) + 1); j >= 1; --j)
            e[static_cast<size_t>(j)] += e[static_cast<size_t>(j) - 1] * x;
    }
    return e[static_cast<size_t>(b)];
}

namespace {

Character homogeneous_of_monomials(int b, const std::vector<Expo>& monomials, int ambient_nvars) {
    std::vector<Character> h(static_cast<size_t>(b) + 1, Character(ambient_nvars));
    h[0] = Character::one(ambient_nvars);
    for (auto& mono : monomials) {
        Character x = Character::monomial(mono);
        for (int j = 1; j <= b; ++j) h[static_cast<size_t>(j)] += h[static_cast<size_t>(j) - 1] * x;
    }
    return h[static_cast<size_t>(b)];
}

bool is_wedge_weight(const Weight& w, int& b) {
    b = 0;
    for (int i = 0; i < w.length(); ++i) {
        if (w[i] == 1)
            ++b;
        else if (w[i] != 0)
            return false;
        if (i && w[i] > w[i - 1]) return false;
    }
    return true;
}

bool is_sym_weight(const Weight& w, int& b) {
    if (w.length() == 0) {
        b = 0;
        return true;
    }
    for (int i = 1; i < w.length(); ++i)
        if (w[i] != 0) return false;
    b = w[0];
    return b >= 0;
}

}  // namespace

Character schur_of_monomials(const Weight& w, const std::vector<Expo>& monomials, int ambient_nvars) {
    int rank = static_cast<int>(monomials.size());
    if (w.length() != rank) throw std::invalid_argument("schur_of_monomials: rank mismatch");
    int b;
    if (is_wedge_weight(w, b)) return elementary_of_monomials(b, monomials, ambient_nvars);
    if (is_sym_weight(w, b)) return homogeneous_of_monomials(b, monomials, ambient_nvars);
    return gl_character(rank, w).substituted(monomials, ambient_nvars);
}

Character sp_schur_of_monomials(const Weight& w, const std::vector<Expo>& monomials, int ambient_nvars) {
    int rank = static_cast<int>(monomials.size());
    if (w.length() != rank) throw std::invalid_argument("sp_schur_of_monomials: rank mismatch");
    return sp_character(rank, w).substituted(monomials, ambient_nvars);
}

}  // namespace igrkp
