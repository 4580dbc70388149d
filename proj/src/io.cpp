#include "flatsurf/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace flatsurf {

using nlohmann::json;

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                                  : what),
      line_(line),
      column_(column) {}

namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational coordinate(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>(), true);
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, 0, where + ": " + e.what());
        }
    }
    throw ParseError(0, 0, where + ": coordinate must be an integer or a \"p/q\" string");
}

std::size_t index_of(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(0, 0, where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

json coordinate_json(const Rational& r) {
    if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return to_string(r);
}

}  // namespace

Surface parse_surface_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, col, "invalid JSON");
    }
    if (!doc.is_object() || !doc.contains("polygons") || !doc.contains("pairings"))
        throw ParseError(0, 0, "surface JSON needs \"polygons\" and \"pairings\"");
    const json& polys = doc["polygons"];
    const json& pairs = doc["pairings"];
    if (!polys.is_array() || !pairs.is_array()) throw ParseError(0, 0, "\"polygons\" and \"pairings\" must be arrays");

    Surface s;
    for (std::size_t p = 0; p < polys.size(); ++p) {
        const std::string where = "polygons[" + std::to_string(p) + "]";
        if (!polys[p].is_array()) throw ParseError(0, 0, where + ": expected a list of vertices");
        Polygon poly;
        for (std::size_t k = 0; k < polys[p].size(); ++k) {
            const json& v = polys[p][k];
            const std::string vw = where + "[" + std::to_string(k) + "]";
            if (!v.is_array() || v.size() != 2) throw ParseError(0, 0, vw + ": expected [x, y]");
            poly.push_back({coordinate(v[0], vw), coordinate(v[1], vw)});
        }
        s.polygons.push_back(std::move(poly));
    }

    std::map<EdgeRef, EdgeRef> partner;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string where = "pairings[" + std::to_string(i) + "]";
        const json& pr = pairs[i];
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_array() || pr[0].size() != 2 || !pr[1].is_array() ||
            pr[1].size() != 2)
            throw ParseError(0, 0, where + ": expected [[p, e], [p', e']]");
        EdgeRef a{index_of(pr[0][0], where), index_of(pr[0][1], where)};
        EdgeRef b{index_of(pr[1][0], where), index_of(pr[1][1], where)};
        for (const EdgeRef& r : {a, b}) {
            if (r.polygon >= s.polygons.size() || r.edge >= s.polygons[r.polygon].size())
                throw ParseError(0, 0, where + ": edge [" + std::to_string(r.polygon) + "," + std::to_string(r.edge) +
                                           "] out of range");
        }
        if (a == b || partner.count(a) || partner.count(b))
            throw ParseError(0, 0, where + ": edge paired more than once");
        partner[a] = b;
        partner[b] = a;
    }
    s.pairing.resize(s.polygons.size());
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) {
            auto it = partner.find({p, e});
            if (it == partner.end())
                throw ParseError(0, 0, "edge [" + std::to_string(p) + "," + std::to_string(e) + "] is unpaired");
            s.pairing[p].push_back(it->second);
        }
    }
    return normalize_orientation(std::move(s));
}

std::string surface_to_json(const Surface& s) {
    json polys = json::array();
    for (const auto& poly : s.polygons) {
        json jp = json::array();
        for (const auto& v : poly) jp.push_back({coordinate_json(v.x), coordinate_json(v.y)});
        polys.push_back(std::move(jp));
    }
    json pairs = json::array();
    for (std::size_t p = 0; p < s.polygons.size(); ++p)
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) {
            const EdgeRef self{p, e};
            const EdgeRef q = s.partner(self);
            if (self < q) pairs.push_back({{p, e}, {q.polygon, q.edge}});
        }
    json doc;
    doc["polygons"] = std::move(polys);
    doc["pairings"] = std::move(pairs);
    return doc.dump() + "\n";
}

Origami parse_origami_text(std::string_view text) {
    std::optional<std::size_t> degree;
    std::optional<std::string> h_text, v_text;
    int h_line = 0, v_line = 0;
    std::size_t h_col = 0, v_col = 0;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, static_cast<int>(first + 1), "expected '<key>: <value>'");
        std::string key(line.substr(first, colon - first));
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string value(line.substr(colon + 1));
        if (key == "d") {
            try {
                std::size_t used = 0;
                const long n = std::stol(value, &used);
                if (n <= 0 || value.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
                degree = static_cast<std::size_t>(n);
            } catch (const std::exception&) {
                throw ParseError(line_no, static_cast<int>(colon + 2), "degree must be a positive integer");
            }
        } else if (key == "h") {
            h_text = value;
            h_line = line_no;
            h_col = colon + 2;
        } else if (key == "v") {
            v_text = value;
            v_line = line_no;
            v_col = colon + 2;
        } else {
            throw ParseError(line_no, static_cast<int>(first + 1), "unknown key '" + key + "'");
        }
        if (end == text.size()) break;
    }
    if (!degree) throw ParseError(0, 0, "missing 'd: <n>' line");
    if (!h_text) throw ParseError(0, 0, "missing 'h: <cycles>' line");
    if (!v_text) throw ParseError(0, 0, "missing 'v: <cycles>' line");

    auto perm = [&](const std::string& t, int line, std::size_t col) {
        try {
            return Permutation::from_cycles(*degree, t);
        } catch (const CycleSyntaxError& e) {
            throw ParseError(line, static_cast<int>(col + e.column() - 1), e.reason());
        }
    };
    Permutation h = perm(*h_text, h_line, h_col);
    Permutation v = perm(*v_text, v_line, v_col);
    try {
        return make_origami(std::move(h), std::move(v));
    } catch (const OrigamiError& e) {
        throw ParseError(0, 0, e.what());
    }
}

std::string origami_to_text(const Origami& o) {
    return "d: " + std::to_string(o.degree()) + "\nh: " + o.h.to_cycle_string() + "\nv: " + o.v.to_cycle_string() + "\n";
}

namespace {

std::string hsl_color(std::size_t i, std::size_t n, int lightness) {
    const unsigned hue = static_cast<unsigned>((360.0 * static_cast<double>(i)) / static_cast<double>(std::max<std::size_t>(n, 1)));
    return "hsl(" + std::to_string(hue) + ",75%," + std::to_string(lightness) + "%)";
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace

std::string render_svg(const Surface& s) {
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const auto& poly : s.polygons)
        for (const auto& v : poly) {
            const double x = v.x.get_d(), y = v.y.get_d();
            if (first) {
                minx = maxx = x;
                miny = maxy = y;
                first = false;
            }
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    const double span = std::max({maxx - minx, maxy - miny, 1e-9});
    const double scale = 560.0 / span;
    const double margin = 20.0;
    const double width = (maxx - minx) * scale + 2 * margin;
    const double height = (maxy - miny) * scale + 2 * margin;
    auto px = [&](const Vec2& v) { return margin + (v.x.get_d() - minx) * scale; };
    auto py = [&](const Vec2& v) { return margin + (maxy - v.y.get_d()) * scale; };  // y axis points up

    std::vector<EdgeRef> reps;
    std::map<EdgeRef, std::size_t> pair_index;
    for (std::size_t p = 0; p < s.polygons.size(); ++p)
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) {
            const EdgeRef self{p, e};
            const EdgeRef q = s.partner(self);
            if (self < q) {
                pair_index[self] = pair_index[q] = reps.size();
                reps.push_back(self);
            }
        }

    const auto cones = singularities(s);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    for (const auto& poly : s.polygons) {
        out << "  <polygon points=\"";
        for (std::size_t k = 0; k < poly.size(); ++k) out << (k ? " " : "") << fmt(px(poly[k])) << "," << fmt(py(poly[k]));
        out << "\" fill=\"#f2f2f2\" stroke=\"none\"/>\n";
    }
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        const auto& poly = s.polygons[p];
        for (std::size_t e = 0; e < poly.size(); ++e) {
            const Vec2& a = poly[e];
            const Vec2& b = poly[(e + 1) % poly.size()];
            const std::size_t k = pair_index.at({p, e});
            out << "  <line class=\"edge-pair-" << k << "\" x1=\"" << fmt(px(a)) << "\" y1=\"" << fmt(py(a)) << "\" x2=\""
                << fmt(px(b)) << "\" y2=\"" << fmt(py(b)) << "\" stroke=\"" << hsl_color(k, reps.size(), 40)
                << "\" stroke-width=\"3\"/>\n";
            out << "  <text x=\"" << fmt((px(a) + px(b)) / 2) << "\" y=\"" << fmt((py(a) + py(b)) / 2)
                << "\" font-size=\"11\" fill=\"" << hsl_color(k, reps.size(), 30) << "\">v" << k + 1 << "</text>\n";
        }
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const bool singular = cones[i].angle_turns > 1;
        for (const Corner& c : cones[i].corners) {
            const Vec2& v = s.polygons[c.polygon][c.vertex];
            out << "  <circle class=\"cone-" << i << "\" cx=\"" << fmt(px(v)) << "\" cy=\"" << fmt(py(v)) << "\" r=\""
                << (singular ? 5 : 3) << "\" fill=\"" << (singular ? hsl_color(i, cones.size(), 45) : "#555") << "\"><title>angle "
                << 2 * cones[i].angle_turns << "pi</title></circle>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace flatsurf
