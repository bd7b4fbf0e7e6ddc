#include <iostream>

#include <CLI11.hpp>

#include "syz/io.hpp"

using namespace syz;

// exit codes: 0 success, 1 parse error, 2 resource cap, 3 failing claim
// verdict (engine-defect signal), 4 oracle bounds uncertified
namespace {

constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kResourceCap = 2;
constexpr int kFailsVerdict = 3;
constexpr int kUncertified = 4;

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "q" || s == "Q") return FieldSpec{0};
    if (!s.empty() && (s[0] == 'p' || s[0] == 'P')) {
        FieldSpec f{std::uint32_t(std::stoul(s.substr(1)))};
        f.validate();
        return f;
    }
    throw parse_error("bad --field value (want q or p<prime>): " + s);
}

Instance reload_with_field(const Instance& inst, const FieldSpec& f) {
    nlohmann::json j = instance_to_json(inst);
    j["field"] = f.p;
    return instance_from_json(j);
}

int run_resolve(const std::string& path, int window_override, const std::string& field_flag,
                const std::string& out_mode, const Limits& env) {
    Instance inst = load_instance(path, env);
    if (!field_flag.empty()) inst = reload_with_field(inst, parse_field_flag(field_flag));
    if (window_override >= 0) inst.window = window_override;
    Resolution res = resolve(inst.module, inst.window, inst.limits);
    ResolutionData data = resolution_data(res, inst.label);
    if (out_mode == "machine")
        std::cout << resolution_to_json(data).dump(2) << "\n";
    else
        print_resolution_text(std::cout, data);
    return kOk;
}

int run_check(const std::string& path, int window_override, const std::string& claims_flag,
              const std::string& out_mode, int corpus_count, std::uint64_t seed,
              const std::string& profile_flag, const Limits& env) {
    auto claims = ClaimSet::from_flag(claims_flag);
    if (!claims) throw parse_error("unknown --claims value: " + claims_flag);

    std::vector<Instance> instances;
    if (corpus_count > 0) {
        CorpusProfile profile = CorpusProfile::Default;
        if (profile_flag == "hypersurface") profile = CorpusProfile::Hypersurface;
        else if (profile_flag == "paper") profile = CorpusProfile::Paper;
        else if (profile_flag != "default") throw parse_error("unknown --profile: " + profile_flag);
        instances = generate_corpus(seed, corpus_count, profile);
    } else {
        if (path.empty()) throw parse_error("check needs an instance file or --corpus N");
        instances.push_back(load_instance(path, env));
    }

    bool any_fails = false;
    nlohmann::json all = nlohmann::json::array();
    for (auto& inst : instances) {
        if (window_override >= 0) inst.window = window_override;
        CheckReport rep = run_checks(inst, *claims);
        any_fails = any_fails || rep.any_fails();
        if (out_mode == "machine")
            all.push_back(report_to_json(rep));
        else
            print_report_text(std::cout, rep);
    }
    if (out_mode == "machine") std::cout << all.dump(2) << "\n";
    return any_fails ? kFailsVerdict : kOk;
}

int run_oracle_compare(const std::string& path, int degree_bound, int hom_bound,
                       const Limits& env) {
    Instance inst = load_instance(path, env);
    Resolution res = resolve(inst.module, std::max(hom_bound, 1), inst.limits);
    BettiTable table = graded_betti_oracle(inst.module, degree_bound, hom_bound);
    auto resolve_betti = res.betti();
    auto oracle_totals = table.totals();

    bool all_equal = true;
    std::cout << "level  resolve  oracle  status\n";
    for (int i = 0; i <= hom_bound; ++i) {
        bool have_resolve = i < int(resolve_betti.size());
        // certified when every generator the resolution found at this level
        // has degree within the oracle window
        bool certified = have_resolve;
        if (certified && i >= 1 && i - 1 < int(res.steps.size()))
            for (int d : res.steps[i - 1].col_deg)
                if (d > degree_bound) certified = false;
        std::cout << i << "      ";
        if (!have_resolve) {
            std::cout << "-        " << oracle_totals[i] << "      uncertified (window)\n";
            continue;
        }
        int rb = resolve_betti[i];
        if (!certified) {
            std::cout << rb << "        " << oracle_totals[i] << "      uncertified (degree bound)\n";
            continue;
        }
        bool eq = rb == oracle_totals[i];
        all_equal = all_equal && eq;
        std::cout << rb << "        " << oracle_totals[i] << "      "
                  << (eq ? "equal" : "MISMATCH") << "\n";
    }
    return all_equal ? kOk : kFailsVerdict;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"syz: graded free resolutions, syzygy supports and dimensions over R = S/I, "
                 "with an executable claim checker"};
    app.require_subcommand(1);
    Limits env = limits_from_env();

    std::string path, field_flag, out_mode = "text", claims_flag = "all",
                profile_flag = "default";
    int window = -1, degree_bound = 8, hom_bound = 4, corpus_count = 0;
    std::uint64_t seed = 1;

    auto* resolve_cmd = app.add_subcommand("resolve", "compute a minimal graded free resolution");
    resolve_cmd->add_option("path", path, "instance file")->required();
    resolve_cmd->add_option("--window", window, "homological window N");
    resolve_cmd->add_option("--field", field_flag, "coefficient field: q or p<prime>");
    resolve_cmd->add_option("--out", out_mode, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* check_cmd = app.add_subcommand("check", "run the claim checks");
    check_cmd->add_option("path", path, "instance file");
    check_cmd->add_option("--window", window, "homological window N");
    check_cmd->add_option("--claims", claims_flag,
                          "all | strict | supp | main | dim | shrink | quick");
    check_cmd->add_option("--out", out_mode, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));
    check_cmd->add_option("--corpus", corpus_count, "run a generated corpus of this size");
    check_cmd->add_option("--seed", seed, "corpus seed");
    check_cmd->add_option("--profile", profile_flag, "default | hypersurface | paper");

    auto* oracle_cmd = app.add_subcommand("oracle-compare",
                                          "compare resolve Betti numbers with the graded oracle");
    oracle_cmd->add_option("path", path, "instance file")->required();
    oracle_cmd->add_option("-D,--degree-bound", degree_bound, "internal degree bound");
    oracle_cmd->add_option("-H,--hom-bound", hom_bound, "homological bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (resolve_cmd->parsed())
            return run_resolve(path, window, field_flag, out_mode, env);
        if (check_cmd->parsed())
            return run_check(path, window, claims_flag, out_mode, corpus_count, seed, profile_flag,
                             env);
        if (oracle_cmd->parsed())
            return run_oracle_compare(path, degree_bound, hom_bound, env);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const limit_error& e) {
        std::cerr << "resource cap (" << e.cap << "): " << e.what() << "\n";
        return kResourceCap;
    } catch (const uncertified_error& e) {
        std::cerr << "uncertified: " << e.what() << "\n";
        return kUncertified;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}
