#include "igrkp/weights.hpp"

#include <algorithm>
#include <sstream>

namespace igrkp {

long long Weight::sum() const {
    long long s = 0;
    for (int x : e_) s += x;
    return s;
}

bool Weight::is_dominant() const {
    for (size_t i = 1; i < e_.size(); ++i)
        if (e_[i - 1] < e_[i]) return false;
    return true;
}

bool Weight::is_young_diagram() const {
    return is_dominant() && (e_.empty() || e_.back() >= 0);
}

bool Weight::fits_width(int w) const { return e_.empty() || e_.front() <= w; }

Weight Weight::bar() const {
    if (e_.empty()) throw std::invalid_argument("bar of empty weight");
    return Weight(std::vector<int>(e_.begin() + 1, e_.end()));
}

Weight Weight::negated() const {
    std::vector<int> r(e_.rbegin(), e_.rend());
    for (int& x : r) x = -x;
    return Weight(std::move(r));
}

Weight Weight::shifted(int m) const {
    std::vector<int> r = e_;
    for (int& x : r) x -= m;
    return Weight(std::move(r));
}

Weight Weight::prepended(int m, int t) const {
    std::vector<int> r(static_cast<size_t>(t), m);
    r.insert(r.end(), e_.begin(), e_.end());
    return Weight(std::move(r));
}

std::string Weight::str() const {
    if (e_.empty()) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    return os.str();
}

Weight parse_weight(const std::string& text) {
    std::string t = text;
    if (t == "()" || t.empty()) return Weight{};
    std::vector<int> e;
    std::istringstream is(t);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad weight entry: '" + item + "'");
        e.push_back(v);
    }
    return Weight(std::move(e));
}

bool kp_prec(const BlockWeight& a, const BlockWeight& b) {
    if (a.gl.length() != b.gl.length() || a.sp.length() != b.sp.length())
        throw std::invalid_argument("kp_prec: length mismatch");
    for (int i = 0; i < a.gl.length(); ++i)
        if (a.gl[i] > b.gl[i]) return false;
    return a.gl.sum() + a.sp.sum() <= b.gl.sum() + b.sp.sum();
}

std::vector<Weight> enumerate_diagrams(int l, int w) {
    if (l < 0 || w < 0) throw std::invalid_argument("enumerate_diagrams: negative argument");
    std::vector<Weight> out;
    std::vector<int> cur(static_cast<size_t>(l), 0);
    // lexicographic ascending generation
    auto rec = [&](auto&& self, int pos, int bound) -> void {
        if (pos == l) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, w);
    return out;
}

Weight hat_weight(const Weight& mu, int t, int a) {
    if (!mu.is_young_diagram()) throw std::invalid_argument("hat: not a Young diagram: " + mu.str());
    if (!mu.fits_width(a)) throw std::invalid_argument("hat: diagram wider than " + std::to_string(a));
    return mu.prepended(a, t);
}

}  // namespace igrkp
