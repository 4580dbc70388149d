#include "flatsurf/hyperell.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace flatsurf {

BranchSet::BranchSet(std::vector<Rational> points) : points_(std::move(points)) {
    if (points_.size() < 4 || points_.size() % 2 != 0)
        throw std::invalid_argument("branch set needs an even number (>= 4) of points");
    for (auto& p : points_) p.canonicalize();
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j]) throw std::invalid_argument("branch points must be distinct");
}

FactoredForm::FactoredForm(Rational constant, std::vector<RootFactor> factors) : constant_(std::move(constant)) {
    constant_.canonicalize();
    if (constant_ == 0) throw std::invalid_argument("form constant must be nonzero");
    for (auto& f : factors) {
        f.root.canonicalize();
        if (f.multiplicity <= 0) throw std::invalid_argument("root multiplicities must be positive");
        auto it = std::find_if(factors_.begin(), factors_.end(), [&](const RootFactor& g) { return g.root == f.root; });
        if (it == factors_.end())
            factors_.push_back(std::move(f));
        else
            it->multiplicity += f.multiplicity;
    }
    std::sort(factors_.begin(), factors_.end(), [](const RootFactor& a, const RootFactor& b) { return a.root < b.root; });
}

int FactoredForm::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.multiplicity;
    return d;
}

int FactoredForm::multiplicity_at(const Rational& b) const {
    for (const auto& f : factors_)
        if (f.root == b) return f.multiplicity;
    return 0;
}

std::string FactoredForm::to_string() const {
    std::string s = flatsurf::to_string(constant_);
    for (const auto& f : factors_) {
        s += "*(z";
        if (f.root > 0) s += "-" + flatsurf::to_string(f.root);
        if (f.root < 0) s += "+" + flatsurf::to_string(-f.root);
        s += ")";
        if (f.multiplicity != 1) s += "^" + std::to_string(f.multiplicity);
    }
    return s;
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    return s;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_exponent(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad exponent '" + s + "'");
    return std::stoi(s);
}

}  // namespace

FactoredForm FactoredForm::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty form");
    Rational c = 1;
    std::vector<RootFactor> factors;
    for (const std::string& part : split_top_level(s, '*')) {
        if (part.empty()) throw std::invalid_argument("empty factor in '" + s + "'");
        std::string base = part;
        int exponent = 1;
        const auto caret = part.rfind('^');
        if (caret != std::string::npos && part.find(')', caret) == std::string::npos) {
            base = part.substr(0, caret);
            exponent = parse_exponent(part.substr(caret + 1));
        }
        if (base == "z") {
            if (exponent > 0) factors.push_back({0, exponent});
            continue;
        }
        if (base.size() >= 3 && base.front() == '(' && base.back() == ')' && base[1] == 'z') {
            const std::string inner = base.substr(2, base.size() - 3);
            Rational root = 0;
            if (!inner.empty()) {
                if (inner[0] != '-' && inner[0] != '+') throw std::invalid_argument("bad factor '" + part + "'");
                root = parse_rational(inner.substr(1));
                if (inner[0] == '+') root = -root;
            }
            if (exponent > 0) factors.push_back({root, exponent});
            continue;
        }
        if (base.find('z') != std::string::npos) throw std::invalid_argument("bad factor '" + part + "'");
        const std::string num = (base.size() >= 2 && base.front() == '(' && base.back() == ')') ? base.substr(1, base.size() - 2) : base;
        Rational value = parse_rational(num);
        Rational power = 1;
        for (int i = 0; i < exponent; ++i) power *= value;
        c *= power;
    }
    return FactoredForm(c, std::move(factors));
}

std::string Place::to_string() const {
    switch (kind) {
        case PlaceKind::Weierstrass: return "W(" + flatsurf::to_string(value) + ")";
        case PlaceKind::Conjugate: return std::string(sheet > 0 ? "P+(" : "P-(") + flatsurf::to_string(value) + ")";
        case PlaceKind::InfinityPlus: return "inf+";
        case PlaceKind::InfinityMinus: return "inf-";
    }
    return "?";
}

int DivisorOnCurve::degree() const {
    int d = 0;
    for (const auto& e : entries) d += e.order;
    return d;
}

bool DivisorOnCurve::effective() const {
    return std::all_of(entries.begin(), entries.end(), [](const DivisorEntry& e) { return e.order >= 0; });
}

DivisorOnCurve divisor_of_form(const BranchSet& b, const FactoredForm& f) {
    DivisorOnCurve div;
    const int g = b.genus();
    // x is a local parameter at a branch point and z - a_i vanishes to order 2 there.
    for (std::size_t i = 0; i < b.points().size(); ++i) {
        const int m = f.multiplicity_at(b.points()[i]);
        if (m) div.entries.push_back({Place{PlaceKind::Weierstrass, i, b.points()[i], 0}, 2 * m});
    }
    for (const auto& factor : f.factors()) {
        const auto& pts = b.points();
        if (std::find(pts.begin(), pts.end(), factor.root) != pts.end()) continue;
        div.entries.push_back({Place{PlaceKind::Conjugate, 0, factor.root, +1}, factor.multiplicity});
        div.entries.push_back({Place{PlaceKind::Conjugate, 0, factor.root, -1}, factor.multiplicity});
    }
    // Chart t = 1/z, y = x / z^{g+1}: dz/x = -t^{g-1} dt / y, so f dz/x has order g-1-deg f.
    const int at_infinity = g - 1 - f.degree();
    if (at_infinity != 0) {
        div.entries.push_back({Place{PlaceKind::InfinityPlus, 0, 0, +1}, at_infinity});
        div.entries.push_back({Place{PlaceKind::InfinityMinus, 0, 0, -1}, at_infinity});
    }
    return div;
}

bool is_holomorphic(const BranchSet& b, const FactoredForm& f) { return divisor_of_form(b, f).effective(); }

bool BasisCheck::ok() const {
    return static_cast<int>(holomorphic.size()) == genus &&
           std::all_of(holomorphic.begin(), holomorphic.end(), [](bool x) { return x; }) && !next_is_holomorphic;
}

BasisCheck basis_check(const BranchSet& b) {
    BasisCheck check;
    check.genus = b.genus();
    auto monomial = [](int k) {
        std::vector<RootFactor> f;
        if (k > 0) f.push_back({0, k});
        return FactoredForm(1, std::move(f));
    };
    for (int k = 0; k < check.genus; ++k) check.holomorphic.push_back(is_holomorphic(b, monomial(k)));
    check.next_is_holomorphic = is_holomorphic(b, monomial(check.genus));
    return check;
}

int h0_weierstrass_multiple(int k, int g) {
    if (g < 1 || k < 0 || k > 2 * g - 1)
        throw std::out_of_range("h0_weierstrass_multiple: need 0 <= k <= 2g-1, got k=" + std::to_string(k) +
                                ", g=" + std::to_string(g));
    return 1 + k / 2;
}

int hyperelliptic_component_parity(int g) {
    if (g < 2) throw std::invalid_argument("hyperelliptic_component_parity: genus must be at least 2");
    return h0_weierstrass_multiple(g - 1, g) % 2;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

}  // namespace flatsurf
