#include "igrkp/io.hpp"

#include <sstream>

namespace igrkp {

json to_json(const Weight& w) { return json(w.entries()); }

json to_json(const BlockWeight& w) { return json{{"gl", to_json(w.gl)}, {"sp", to_json(w.sp)}}; }

namespace {

std::string kind_name(Space::Kind k) {
    switch (k) {
        case Space::Kind::Gr: return "Gr";
        case Space::Kind::Fl: return "Fl";
        case Space::Kind::IGr: return "IGr";
        case Space::Kind::IFl: return "IFl";
        case Space::Kind::IFl12k: return "IFl12k";
    }
    return "?";
}

std::string wedge_name(WedgeFactor::Base b) {
    switch (b) {
        case WedgeFactor::Base::Ambient: return "ambient";
        case WedgeFactor::Base::AmbientDual: return "ambient_dual";
        case WedgeFactor::Base::Quotient: return "quotient";
        case WedgeFactor::Base::QuotientDual: return "quotient_dual";
    }
    return "?";
}

WedgeFactor::Base wedge_base(const std::string& s) {
    if (s == "ambient") return WedgeFactor::Base::Ambient;
    if (s == "ambient_dual") return WedgeFactor::Base::AmbientDual;
    if (s == "quotient") return WedgeFactor::Base::Quotient;
    if (s == "quotient_dual") return WedgeFactor::Base::QuotientDual;
    throw std::invalid_argument("bad wedge base: " + s);
}

}  // namespace

json to_json(const Space& s) {
    return json{{"kind", kind_name(s.kind)}, {"steps", s.steps}, {"ambient", s.ambient}};
}

json to_json(const Bundle& b) {
    json factors = json::array();
    for (auto& f : b.factors) factors.push_back(to_json(f));
    json j{{"space", to_json(b.space)}, {"factors", factors}, {"sp", to_json(b.sp)},
           {"twist", b.twist},          {"degree", b.degree}, {"mult", b.mult.get_str()}};
    if (!b.wedges.empty()) {
        json ws = json::array();
        for (auto& w : b.wedges) ws.push_back(json{{"base", wedge_name(w.base)}, {"degree", w.degree}});
        j["wedges"] = ws;
    }
    return j;
}

json to_json(const VirtualBundle& v) {
    json j = json::array();
    for (auto& t : v.terms()) j.push_back(to_json(t));
    return j;
}

json to_json(const ChainComplex& c) {
    json terms = json::array();
    for (auto& [vb, deg] : c.terms) terms.push_back(json{{"bundle", to_json(vb)}, {"degree", deg}});
    json j{{"space", to_json(c.space)}, {"terms", terms}};
    if (!c.name.empty()) j["name"] = c.name;
    j["claimed"] = c.claimed ? to_json(*c.claimed) : json(nullptr);
    return j;
}

json to_json(const StaircaseData& d) {
    json rows = json::array();
    for (auto& [i, z] : d.z) {
        rows.push_back(json{{"i", i},
                            {"z", z},
                            {"d", d.d.at(i)},
                            {"b", d.b.at(i)},
                            {"alpha_i", to_json(d.alpha_i.at(i))}});
    }
    json j{{"alpha", to_json(d.alpha)}, {"V", d.V},       {"VSp", d.VSp},
           {"v", d.v},                  {"rows", rows},   {"window", json::array({d.i_min, d.i_max})}};
    if (d.m) j["m"] = *d.m;
    return j;
}

json to_json(const Census& c) {
    return json{{"n", c.n},           {"k", c.k},
                {"sizes", c.sizes},   {"total", c.total},
                {"schubert_rank", c.schubert_rank.get_str()}, {"pass", c.pass}};
}

json to_json(const Block& b) {
    json ws = json::array();
    for (auto& w : b.weights) ws.push_back(to_json(w));
    return json{{"n", b.n},     {"k", b.k},
                {"t", b.t},     {"big", b.big},
                {"a_t", b.a_t}, {"gl_width", b.gl_width},
                {"weights", ws}};
}

json to_json(const FClassReport& r) {
    return json{{"t", r.t},
                {"lambda", to_json(r.lambda)},
                {"mu", to_json(r.mu)},
                {"virtual", to_json(r.virt)},
                {"concentrated_degree_zero", r.concentrated_degree_zero},
                {"nonnegative", r.nonnegative}};
}

json to_json(const DualCharReport& r) {
    return json{{"t", r.t},           {"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)},
                {"pass", r.pass},     {"pairs_checked", r.pairs_checked},
                {"failures", r.failures}};
}

json to_json(const ExcReport& r) {
    return json{{"t", r.t},
                {"big", r.big},
                {"dimension_level_pass", r.dimension_level_pass},
                {"backward_vanishing", r.backward_vanishing},
                {"ext_positive_vanishes", r.ext_positive_vanishes},
                {"pairs_checked", r.pairs_checked},
                {"failures", r.failures}};
}

json to_json(const SemiReport& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"pass", r.pass},
                {"pairs_checked", r.pairs_checked},
                {"pairs_total", r.pairs_total},
                {"failures", r.failures}};
}

Weight weight_from_json(const json& j) { return Weight(j.get<std::vector<int>>()); }

Space space_from_json(const json& j) {
    Space s;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Gr")
        s.kind = Space::Kind::Gr;
    else if (kind == "Fl")
        s.kind = Space::Kind::Fl;
    else if (kind == "IGr")
        s.kind = Space::Kind::IGr;
    else if (kind == "IFl")
        s.kind = Space::Kind::IFl;
    else if (kind == "IFl12k")
        s.kind = Space::Kind::IFl12k;
    else
        throw std::invalid_argument("bad space kind: " + kind);
    s.steps = j.at("steps").get<std::vector<int>>();
    s.ambient = j.at("ambient").get<int>();
    s.validate();
    return s;
}

Bundle bundle_from_json(const json& j) {
    Bundle b;
    b.space = space_from_json(j.at("space"));
    for (auto& f : j.at("factors")) b.factors.push_back(weight_from_json(f));
    b.sp = weight_from_json(j.at("sp"));
    b.twist = j.value("twist", 0);
    b.degree = j.value("degree", 0);
    b.mult = Int(j.value("mult", std::string("1")));
    if (j.contains("wedges"))
        for (auto& w : j.at("wedges"))
            b.wedges.push_back({wedge_base(w.at("base").get<std::string>()), w.at("degree").get<int>()});
    b.validate();
    return b;
}

namespace {

std::string latex_weight(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < w.length(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string latex(const Bundle& b) {
    std::ostringstream os;
    if (b.mult != 1) os << b.mult.get_str() << "\\cdot ";
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " \\otimes ";
        first = false;
    };
    for (auto& w : b.wedges) {
        sep();
        os << "\\Lambda^{" << w.degree << "}";
        switch (w.base) {
            case WedgeFactor::Base::Ambient: os << "V"; break;
            case WedgeFactor::Base::AmbientDual: os << "V^{\\vee}"; break;
            case WedgeFactor::Base::Quotient: os << "\\mathcal{Q}"; break;
            case WedgeFactor::Base::QuotientDual: os << "\\mathcal{Q}^{\\vee}"; break;
        }
    }
    static const char* names[] = {"\\mathcal{U}", "\\mathcal{U}'", "\\mathcal{U}''"};
    for (size_t i = 0; i < b.factors.size(); ++i) {
        bool zero = true;
        for (int x : b.factors[i]) zero = zero && x == 0;
        if (zero) continue;
        sep();
        os << "\\Sigma^{" << latex_weight(b.factors[i]) << "}" << names[std::min<size_t>(i, 2)] << "^{\\vee}";
    }
    if (!b.sp.empty() && b.sp.sum() != 0) {
        sep();
        os << "\\Sigma_{\\mathrm{Sp}}^{" << latex_weight(b.sp) << "}\\mathcal{S}";
    }
    if (first) os << "\\mathcal{O}";
    if (b.twist) os << "(" << b.twist << ")";
    if (b.degree) os << "[" << -b.degree << "]";
    return os.str();
}

std::string latex(const ChainComplex& c) {
    std::ostringstream os;
    os << "0 \\to ";
    for (auto& [vb, deg] : c.terms) {
        if (vb.terms().size() == 1) {
            os << latex(vb.terms()[0]);
        } else {
            os << "\\big(";
            for (size_t i = 0; i < vb.terms().size(); ++i) {
                if (i) os << " \\oplus ";
                os << latex(vb.terms()[i]);
            }
            os << "\\big)";
        }
        os << " \\to ";
    }
    os << "0";
    return os.str();
}

}  // namespace igrkp
