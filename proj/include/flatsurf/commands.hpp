#pragma once

#include "flatsurf/gl2.hpp"
#include "flatsurf/origami.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace flatsurf {

/// Result of one CLI command. `data` keys serialize in sorted order.
struct Report {
    nlohmann::json data = nlohmann::json::object();
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// An input file: either a surface JSON or an origami text file.
struct Input {
    std::string id;
    Surface surface;
    std::optional<Origami> origami;
};

/// Detects the format from the first non-blank character ('{' means surface JSON).
Input load_input(const std::string& path);
Input parse_input(const std::string& id, std::string_view text);

Report cmd_analyze(const std::string& path);
Report cmd_orbit(const std::string& path, std::size_t max_elements);
Report cmd_spin(const std::string& path);
/// The transformed surface is in data["surface"]; written to `output` when given.
Report cmd_act(const std::string& path, const Mat2& m, const std::optional<std::string>& output);
Report cmd_strata(int genus);
Report cmd_divisor(int genus, const std::string& branch, const std::string& form);
Report cmd_render(const std::string& path, const std::string& output);

}  // namespace flatsurf
