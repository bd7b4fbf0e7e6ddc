#ifndef SYZ_IO_HPP
#define SYZ_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "syz/checks.hpp"

namespace syz {

// Instance file schema (JSON):
// {
//   "label": "...",
//   "field": 0 | prime,
//   "variables": ["x", ...],
//   "ideal": ["x^2", ...],
//   "module": { "matrix": [["y", ...], ...], "row_twists": [0, ...] },
//   "options": { "window": N, "declared_min_primes": [["e"], ...],
//                "minor_cap": n, "pair_cap": n, "degree_cap": n }
// }
Instance instance_from_json(const nlohmann::json& j, const Limits& base = {});
nlohmann::json instance_to_json(const Instance& inst);
Instance load_instance(const std::string& path, const Limits& base = {});

// machine-readable reports: stable schema with a version field
nlohmann::json report_to_json(const CheckReport& rep);
CheckReport report_from_json(const nlohmann::json& j);

// resolution snapshot for machine output; round-trips losslessly
struct ResolutionData {
    std::string label;
    FieldSpec field;
    int window = 0;
    bool terminated = false;
    std::vector<int> betti;
    struct Step {
        int rows = 0, cols = 0;
        std::vector<int> row_twists, col_twists;
        std::vector<std::vector<std::string>> entries; // rows of printed polynomials
        bool operator==(const Step&) const = default;
    };
    std::vector<Step> steps;
    bool operator==(const ResolutionData&) const = default;
};
ResolutionData resolution_data(const Resolution& res, const std::string& label);
nlohmann::json resolution_to_json(const ResolutionData& d);
ResolutionData resolution_from_json(const nlohmann::json& j);

// human-readable renderers
void print_resolution_text(std::ostream& os, const ResolutionData& d);
void print_report_text(std::ostream& os, const CheckReport& rep);

// caps from the environment (SYZ_PAIR_CAP, SYZ_DEGREE_CAP, SYZ_MINOR_CAP),
// over the built-in defaults
Limits limits_from_env();

} // namespace syz

#endif
