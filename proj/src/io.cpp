#include "syz/io.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace syz {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

[[noreturn]] void bad(const std::string& what) { throw parse_error("instance file: " + what); }

} // namespace

Instance instance_from_json(const json& j, const Limits& base) {
    if (!j.is_object()) bad("top level must be an object");
    FieldSpec field{};
    if (j.contains("field")) {
        if (!j["field"].is_number_integer() || j["field"].get<std::int64_t>() < 0)
            bad("\"field\" must be 0 or a prime");
        field.p = std::uint32_t(j["field"].get<std::int64_t>());
    }
    if (!j.contains("variables") || !j["variables"].is_array()) bad("missing \"variables\"");
    std::vector<std::string> vars = j["variables"].get<std::vector<std::string>>();

    Limits lim = base;
    int window = 8;
    std::vector<std::vector<std::string>> declared;
    if (j.contains("options")) {
        const json& o = j["options"];
        if (o.contains("window")) window = o["window"].get<int>();
        if (o.contains("pair_cap")) lim.pair_cap = o["pair_cap"].get<std::uint64_t>();
        if (o.contains("degree_cap")) lim.degree_cap = o["degree_cap"].get<int>();
        if (o.contains("minor_cap")) lim.minor_cap = o["minor_cap"].get<std::uint64_t>();
        if (o.contains("declared_min_primes"))
            declared = o["declared_min_primes"].get<std::vector<std::vector<std::string>>>();
    }
    std::optional<int> assume;
    if (j.contains("options") && j["options"].contains("assume_nondecreasing_from"))
        assume = j["options"]["assume_nondecreasing_from"].get<int>();

    std::vector<std::string> igens;
    if (j.contains("ideal")) igens = j["ideal"].get<std::vector<std::string>>();

    RingPtr ring;
    try {
        auto scratch = std::make_shared<QuotientRing>(vars, field, std::vector<Polynomial>{});
        std::vector<Polynomial> I;
        for (const auto& s : igens) I.push_back(scratch->parse(s));
        std::vector<std::vector<Polynomial>> primes;
        for (const auto& plist : declared) {
            primes.emplace_back();
            for (const auto& s : plist) primes.back().push_back(scratch->parse(s));
        }
        ring = std::make_shared<QuotientRing>(vars, field, std::move(I),
                                              MonomialOrder{OrderKind::Grevlex}, std::move(primes),
                                              lim);
    } catch (const invariant_error& e) {
        bad(e.what());
    }

    if (!j.contains("module") || !j["module"].is_object() || !j["module"].contains("matrix"))
        bad("missing \"module\"/\"matrix\"");
    auto matrix = j["module"]["matrix"].get<std::vector<std::vector<std::string>>>();
    int rows = int(matrix.size());
    std::vector<int> twists(rows, 0);
    if (j["module"].contains("row_twists")) {
        twists = j["module"]["row_twists"].get<std::vector<int>>();
        if (int(twists.size()) != rows) bad("row_twists length mismatch");
    }
    std::vector<std::vector<Polynomial>> entries;
    for (const auto& row : matrix) {
        entries.emplace_back();
        for (const auto& s : row) entries.back().push_back(ring->parse(s));
    }
    std::string label = j.value("label", std::string("instance"));
    try {
        return Instance{ring, Presentation::from_entries(ring, rows, std::move(entries), twists),
                        window, label, lim, assume};
    } catch (const invariant_error& e) {
        bad(e.what());
    }
}

nlohmann::json instance_to_json(const Instance& inst) {
    json j;
    j["label"] = inst.label;
    j["field"] = inst.ring->field().p;
    j["variables"] = inst.ring->names();
    json igens = json::array();
    for (const auto& g : inst.ring->ideal()) igens.push_back(inst.ring->str(g));
    j["ideal"] = std::move(igens);
    const PolyMatrix& m = inst.module.matrix();
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(inst.ring->str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["module"] = {{"matrix", std::move(rows)}, {"row_twists", m.row_deg}};
    json opts;
    opts["window"] = inst.window;
    opts["pair_cap"] = inst.limits.pair_cap;
    opts["degree_cap"] = inst.limits.degree_cap;
    opts["minor_cap"] = inst.limits.minor_cap;
    if (inst.assume_nondecreasing_from)
        opts["assume_nondecreasing_from"] = *inst.assume_nondecreasing_from;
    if (!inst.ring->declared_min_primes().empty()) {
        json primes = json::array();
        for (const auto& p : inst.ring->declared_min_primes()) {
            json gens = json::array();
            for (const auto& g : p) gens.push_back(inst.ring->str(g));
            primes.push_back(std::move(gens));
        }
        opts["declared_min_primes"] = std::move(primes);
    }
    j["options"] = std::move(opts);
    return j;
}

Instance load_instance(const std::string& path, const Limits& base) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("instance file is not valid JSON: " + std::string(e.what()));
    }
    return instance_from_json(j, base);
}

json report_to_json(const CheckReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "check_report";
    j["label"] = rep.label;
    j["field"] = rep.field.p;
    j["window"] = rep.window;
    j["betti"] = rep.betti;
    j["terminated"] = rep.terminated;
    j["dims"] = rep.dims;
    if (rep.nondecreasing_from)
        j["nondecreasing_from"] = *rep.nondecreasing_from;
    else
        j["nondecreasing_from"] = nullptr;
    j["supp_classes"] = rep.supp_classes;
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"claim", e.claim}, {"verdict", verdict_str(e.verdict)},
                           {"detail", e.detail}});
    j["entries"] = std::move(entries);
    return j;
}

CheckReport report_from_json(const json& j) {
    if (j.value("schema_version", -1) != kSchemaVersion)
        throw parse_error("unsupported report schema version");
    CheckReport rep;
    rep.label = j.at("label").get<std::string>();
    rep.field.p = j.at("field").get<std::uint32_t>();
    rep.window = j.at("window").get<int>();
    rep.betti = j.at("betti").get<std::vector<int>>();
    rep.terminated = j.at("terminated").get<bool>();
    rep.dims = j.at("dims").get<std::vector<std::string>>();
    if (!j.at("nondecreasing_from").is_null())
        rep.nondecreasing_from = j.at("nondecreasing_from").get<int>();
    rep.supp_classes = j.at("supp_classes").get<std::vector<std::vector<int>>>();
    for (const auto& e : j.at("entries")) {
        auto v = verdict_from_str(e.at("verdict").get<std::string>());
        if (!v) throw parse_error("unknown verdict in report");
        rep.entries.push_back({e.at("claim").get<std::string>(), *v,
                               e.at("detail").get<std::string>()});
    }
    return rep;
}

ResolutionData resolution_data(const Resolution& res, const std::string& label) {
    ResolutionData d;
    d.label = label;
    d.field = res.ring->field();
    d.window = res.window;
    d.terminated = res.terminated;
    d.betti = res.betti();
    for (const auto& m : res.steps) {
        ResolutionData::Step s;
        s.rows = m.rows;
        s.cols = m.cols;
        s.row_twists = m.row_deg;
        s.col_twists = m.col_deg;
        for (int r = 0; r < m.rows; ++r) {
            s.entries.emplace_back();
            for (int c = 0; c < m.cols; ++c) s.entries.back().push_back(res.ring->str(m.at(r, c)));
        }
        d.steps.push_back(std::move(s));
    }
    return d;
}

json resolution_to_json(const ResolutionData& d) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "resolution";
    j["label"] = d.label;
    j["field"] = d.field.p;
    j["window"] = d.window;
    j["terminated"] = d.terminated;
    j["betti"] = d.betti;
    json steps = json::array();
    for (const auto& s : d.steps)
        steps.push_back({{"rows", s.rows},
                         {"cols", s.cols},
                         {"row_twists", s.row_twists},
                         {"col_twists", s.col_twists},
                         {"entries", s.entries}});
    j["steps"] = std::move(steps);
    return j;
}

ResolutionData resolution_from_json(const json& j) {
    if (j.value("schema_version", -1) != kSchemaVersion)
        throw parse_error("unsupported resolution schema version");
    ResolutionData d;
    d.label = j.at("label").get<std::string>();
    d.field.p = j.at("field").get<std::uint32_t>();
    d.window = j.at("window").get<int>();
    d.terminated = j.at("terminated").get<bool>();
    d.betti = j.at("betti").get<std::vector<int>>();
    for (const auto& s : j.at("steps")) {
        ResolutionData::Step step;
        step.rows = s.at("rows").get<int>();
        step.cols = s.at("cols").get<int>();
        step.row_twists = s.at("row_twists").get<std::vector<int>>();
        step.col_twists = s.at("col_twists").get<std::vector<int>>();
        step.entries = s.at("entries").get<std::vector<std::vector<std::string>>>();
        d.steps.push_back(std::move(step));
    }
    return d;
}

void print_resolution_text(std::ostream& os, const ResolutionData& d) {
    os << "instance: " << d.label << "  (field " << d.field.str() << ", window " << d.window
       << ")\n";
    os << "betti:";
    for (int b : d.betti) os << " " << b;
    os << "\n" << (d.terminated ? "terminated (finite projective dimension)" : "truncated at window")
       << "\n";
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const auto& s = d.steps[i];
        os << "delta_" << i + 1 << " (" << s.rows << " x " << s.cols << "), generator degrees";
        for (int t : s.col_twists) os << " " << t;
        os << "\n";
        for (const auto& row : s.entries) {
            os << "  [";
            for (std::size_t c = 0; c < row.size(); ++c) os << (c ? ", " : "") << row[c];
            os << "]\n";
        }
    }
}

void print_report_text(std::ostream& os, const CheckReport& rep) {
    os << "instance: " << rep.label << "  (field " << rep.field.str() << ", window " << rep.window
       << ")\n";
    os << "betti:";
    for (int b : rep.betti) os << " " << b;
    os << (rep.terminated ? "  [terminated]" : "") << "\n";
    os << "dims:";
    for (const auto& d : rep.dims) os << " " << d;
    os << "\n";
    if (rep.nondecreasing_from)
        os << "betti non-decreasing from index " << *rep.nondecreasing_from << "\n";
    else
        os << "betti not eventually non-decreasing within window\n";
    os << "support classes:";
    for (const auto& cls : rep.supp_classes) {
        os << " {";
        for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? "," : "") << cls[i];
        os << "}";
    }
    os << "\n";
    for (const auto& e : rep.entries)
        os << "  " << e.claim << ": " << verdict_str(e.verdict)
           << (e.detail.empty() ? "" : " -- " + e.detail) << "\n";
}

Limits limits_from_env() {
    Limits lim;
    if (const char* s = std::getenv("SYZ_PAIR_CAP")) lim.pair_cap = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("SYZ_DEGREE_CAP")) lim.degree_cap = int(std::strtol(s, nullptr, 10));
    if (const char* s = std::getenv("SYZ_MINOR_CAP")) lim.minor_cap = std::strtoull(s, nullptr, 10);
    return lim;
}

} // namespace syz
