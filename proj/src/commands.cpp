#include "flatsurf/commands.hpp"

#include "flatsurf/hyperell.hpp"
#include "flatsurf/io.hpp"
#include "flatsurf/spin.hpp"
#include "flatsurf/strata.hpp"

#include <fstream>
#include <sstream>

namespace flatsurf {

using nlohmann::json;

json Report::to_json() const {
    json out = data;
    out["ok"] = ok();
    out["errors"] = errors;
    return out;
}

namespace {

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void text_lines(const json& j, const std::string& prefix, std::ostringstream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_object()) {
            text_lines(v, prefix + it.key() + ".", out);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << prefix << it.key() << ":\n";
            for (const auto& row : v) {
                out << "  ";
                bool first = true;
                for (auto r = row.begin(); r != row.end(); ++r) {
                    out << (first ? "" : "  ") << r.key() << "=" << scalar_text(r.value());
                    first = false;
                }
                out << "\n";
            }
        } else {
            out << prefix << it.key() << ": " << scalar_text(v) << "\n";
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

json vec_json(const Vec2& v) { return json::array({to_string(v.x), to_string(v.y)}); }

std::string angle_text(int turns) { return std::to_string(2 * turns) + "pi"; }

// Flat-surface analysis shared by analyze and act; false when validation failed.
bool analyze_surface(const Surface& s, Report& r) {
    const ValidationReport v = validate(s);
    if (!v.ok()) {
        r.data["valid"] = false;
        for (const auto& msg : v.violations) r.errors.push_back("invalid surface: " + msg);
        return false;
    }
    r.data["valid"] = true;
    const auto cones = singularities(s);
    const StratumSignature sig = stratum(s);
    const PeriodData per = periods(s);
    r.data["polygons"] = s.polygons.size();
    r.data["edge_pairs"] = per.representatives.size();
    r.data["genus"] = sig.genus;
    r.data["stratum"] = sig.to_string();
    json angles = json::array();
    json cone_rows = json::array();
    for (std::size_t i = 0; i < cones.size(); ++i) {
        cone_rows.push_back({{"index", i}, {"angle", angle_text(cones[i].angle_turns)}, {"corners", cones[i].corners.size()},
                             {"zero_order", cones[i].zero_order()}});
        if (cones[i].zero_order() > 0 || sig.genus == 1) angles.push_back(angle_text(cones[i].angle_turns));
    }
    r.data["cone_angles"] = angles;
    r.data["cone_points"] = cone_rows;
    r.data["period_rank"] = per.rank;
    json vectors = json::array();
    for (const auto& p : per.vectors) vectors.push_back(vec_json(p));
    r.data["periods"] = vectors;
    r.data["integral"] = is_integral(s);
    return true;
}

void analyze_origami(const Origami& o, Report& r, bool with_structure) {
    const StratumSignature sig = singularity_orders(o);
    r.data["origami"] = {{"d", o.degree()}, {"h", o.h.to_cycle_string()}, {"v", o.v.to_cycle_string()}};
    r.data["stratum"] = sig.to_string();
    r.data["genus"] = sig.genus;
    if (with_structure) {
        json cyl = json::array();
        for (const auto& c : cylinders(o)) cyl.push_back({{"width", c.width}, {"height", c.height}});
        r.data["cylinders"] = cyl;
    }
    auto w = hyperelliptic_involution(o);
    r.data["hyperelliptic"] = w.has_value();
    if (w) r.data["hyperelliptic_involution"] = w->sigma.to_cycle_string();
    const bool even = std::all_of(sig.orders.begin(), sig.orders.end(), [](int m) { return m % 2 == 0; });
    if (even) r.data["spin_parity"] = spin_parity(o);
    if (sig.genus >= 2) r.data["component"] = to_string(classify_component(o));
}

template <class F>
Report guarded(F&& body) {
    Report r;
    try {
        body(r);
    } catch (const std::exception& e) {
        r.errors.push_back(e.what());
    }
    return r;
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    text_lines(data, "", out);
    for (const auto& e : errors) out << "error: " << e << "\n";
    return out.str();
}

Input parse_input(const std::string& id, std::string_view text) {
    Input in;
    in.id = id;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        in.surface = parse_surface_json(text);
    } else {
        in.origami = parse_origami_text(text);
        in.surface = to_polygons(*in.origami);
    }
    return in;
}

Input load_input(const std::string& path) { return parse_input(path, read_file(path)); }

Report cmd_analyze(const std::string& path) {
    return guarded([&](Report& r) {
        const Input in = load_input(path);
        r.data["id"] = in.id;
        if (!analyze_surface(in.surface, r)) return;
        if (in.origami) analyze_origami(*in.origami, r, true);
    });
}

Report cmd_orbit(const std::string& path, std::size_t max_elements) {
    return guarded([&](Report& r) {
        const Input in = load_input(path);
        r.data["id"] = in.id;
        if (!in.origami) throw std::runtime_error("orbit needs an origami file");
        const OrbitData orb = orbit(*in.origami, max_elements);
        r.data["orbit_size"] = orb.elements.size();
        r.data["cusp_widths"] = orb.cusp_widths;
        r.data["stratum"] = commutator_signature(*in.origami).to_string();
        json elements = json::array();
        for (const auto& form : orb.elements) {
            const Origami x = from_canonical(form);
            elements.push_back({{"h", x.h.to_cycle_string()}, {"v", x.v.to_cycle_string()}});
        }
        r.data["elements"] = elements;
    });
}

Report cmd_spin(const std::string& path) {
    return guarded([&](Report& r) {
        const Input in = load_input(path);
        r.data["id"] = in.id;
        if (!in.origami) throw std::runtime_error("spin needs an origami file");
        const Origami& o = *in.origami;
        const StratumSignature sig = singularity_orders(o);
        r.data["stratum"] = sig.to_string();
        r.data["genus"] = sig.genus;
        const CycleBasis basis = fundamental_cycles(o);
        r.data["cycles"] = basis.cycles.size();
        r.data["spin_parity"] = spin_parity(o, basis);
        const QuadraticFormData q = quadratic_form(o, basis.cycles);
        r.data["symplectic_rank"] = q.symplectic_rank;
        r.data["radical_rank"] = q.radical_rank;
        if (sig.genus >= 2) r.data["component"] = to_string(classify_component(o));
    });
}

Report cmd_act(const std::string& path, const Mat2& m, const std::optional<std::string>& output) {
    return guarded([&](Report& r) {
        const Input in = load_input(path);
        r.data["id"] = in.id;
        const Surface image = apply(in.surface, m);
        if (!analyze_surface(image, r)) return;
        const std::string text = surface_to_json(image);
        r.data["surface"] = json::parse(text);
        if (output) write_file(*output, text);
    });
}

Report cmd_strata(int genus) {
    return guarded([&](Report& r) {
        r.data["genus"] = genus;
        r.data["hodge_dimension"] = hodge_dimension(genus);
        r.data["hyp_locus_dimension"] = hyp_locus_dimension(genus);
        json rows = json::array();
        for (const auto& mu : partitions(genus)) {
            json labels = json::array();
            for (auto l : components(mu)) labels.push_back(to_string(l));
            rows.push_back({{"stratum", "H" + mu.to_string()}, {"dimension", dimension(mu)}, {"components", labels}});
        }
        r.data["strata"] = rows;
    });
}

Report cmd_divisor(int genus, const std::string& branch, const std::string& form) {
    return guarded([&](Report& r) {
        const BranchSet b(parse_rational_list(branch));
        if (b.genus() != genus)
            throw std::invalid_argument("genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus + 2) +
                                        " branch points, got " + std::to_string(b.points().size()));
        const FactoredForm f = FactoredForm::parse(form);
        const DivisorOnCurve div = divisor_of_form(b, f);
        r.data["genus"] = genus;
        r.data["form"] = f.to_string() + " dz/x";
        json rows = json::array();
        for (const auto& e : div.entries) rows.push_back({{"place", e.place.to_string()}, {"order", e.order}});
        r.data["divisor"] = rows;
        r.data["degree"] = div.degree();
        r.data["holomorphic"] = div.effective();
    });
}

Report cmd_render(const std::string& path, const std::string& output) {
    return guarded([&](Report& r) {
        const Input in = load_input(path);
        r.data["id"] = in.id;
        const ValidationReport v = validate(in.surface);
        if (!v.ok()) {
            for (const auto& msg : v.violations) r.errors.push_back("invalid surface: " + msg);
            return;
        }
        write_file(output, render_svg(in.surface));
        r.data["output"] = output;
    });
}

}  // namespace flatsurf
