// shearscope: classify bivariate polynomial maps, decompose shear maps, and
// run the enumeration harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "shearscope/expr_io.hpp"
#include "shearscope/harness.hpp"
#include "shearscope/report.hpp"

using namespace shearscope;

namespace {

enum Exit : int {
    kOk = 0,
    kCounterexamples = 1,
    kUsage = 2,
    kSingular = 3,
    kInternal = 4,
    kNotShear = 5,
    kBudget = 6,
};

struct MapInput {
    std::vector<std::string> exprs;
    std::string file;
    bool json = false;
    std::string side = "right";
};

void add_map_options(CLI::App* cmd, MapInput& in) {
    auto* map = cmd->add_option("--map", in.exprs, "the two components: --map \"P\" \"Q\"")->expected(2);
    auto* file = cmd->add_option("--file", in.file, "file holding P and Q on two lines");
    map->excludes(file);
    cmd->add_flag("--json", in.json, "emit a JSON document");
    cmd->add_option("--side", in.side, "side the inverse linear part is composed on")
        ->check(CLI::IsMember({"right", "left"}));
}

PolyMap read_map(const MapInput& in) {
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw CLI::ValidationError("--file", "cannot open " + in.file);
        std::vector<std::string> lines;
        for (std::string line; std::getline(f, line);) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            lines.push_back(line);
        }
        if (lines.size() != 2) throw CLI::ValidationError("--file", "expected exactly two expression lines");
        return parse_map(lines[0], lines[1]);
    }
    if (in.exprs.size() != 2) throw CLI::ValidationError("--map", "a map needs --map \"P\" \"Q\" or --file");
    return parse_map(in.exprs[0], in.exprs[1]);
}

NormalizationSide side_of(const MapInput& in) {
    return in.side == "left" ? NormalizationSide::left : NormalizationSide::right;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string map_text(const PolyMap& m) { return "(" + format_poly(m.P) + ", " + format_poly(m.Q) + ")"; }

int require_shear(const ClassificationReport& r) {
    if (r.verdict == Verdict::shear || r.verdict == Verdict::linear) return kOk;
    std::cerr << "error: not a shear map (verdict " << to_string(r.verdict) << ")\n";
    return kNotShear;
}

std::vector<Rational> parse_coeffs(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw InvalidSpec("bad coefficient '" + item + "'");
        }
    }
    return out;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SHEARSCOPE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidSpec(std::string("SHEARSCOPE_BUDGET is not a number: ") + env);
        }
    }
    return EnumerationSpec{}.budget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify bivariate polynomial maps and decompose divergence-free jacobian maps into shears"};
    app.require_subcommand(1);

    MapInput in;
    auto* classify_cmd = app.add_subcommand("classify", "full classification report");
    auto* decompose_cmd = app.add_subcommand("decompose", "shear decomposition of the normalized map");
    auto* invert_cmd = app.add_subcommand("invert", "polynomial inverse of a shear map");
    auto* normal_cmd = app.add_subcommand("normal-form", "conjugate to (u, v) -> (u, v + g(u))");
    auto* conditions_cmd = app.add_subcommand("check-conditions", "degree/order/gap conditions of the corollaries");
    for (auto* cmd : {classify_cmd, decompose_cmd, invert_cmd, normal_cmd, conditions_cmd}) add_map_options(cmd, in);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive or sampled verification over small maps");
    EnumerationSpec spec;
    std::string coeffs = "-1,0,1", mode = "exhaustive", corollary, preset;
    std::optional<std::uint64_t> budget;
    bool all_linear = false, naive = false, list_presets = false;
    enumerate_cmd->add_option("--max-degree", spec.max_degree, "largest monomial degree of p and q");
    enumerate_cmd->add_option("--coeffs", coeffs, "comma-separated coefficient set, must contain 0");
    enumerate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
    enumerate_cmd->add_option("--count", spec.count, "samples in random mode");
    enumerate_cmd->add_option("--seed", spec.seed, "seed in random mode");
    enumerate_cmd->add_option("--threads", spec.threads, "worker threads (0 = all cores)");
    enumerate_cmd->add_option("--budget", budget, "candidate cap (default 1e8 or SHEARSCOPE_BUDGET)");
    enumerate_cmd->add_option("--corollary", corollary, "cross-check a hypothesis: c1_i..c1_iv, c2_i, c2_ii");
    enumerate_cmd->add_flag("--all-linear-parts", all_linear, "with a c1_* corollary, range over linear parts too");
    enumerate_cmd->add_flag("--naive", naive, "unpruned enumeration (oracle, exhaustive only)");
    enumerate_cmd->add_option("--preset", preset, "run a shipped preset by name");
    enumerate_cmd->add_flag("--list-presets", list_presets, "print preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (enumerate_cmd->parsed()) {
            if (list_presets) {
                for (const auto& p : presets()) std::cout << p.name << "\n";
                return kOk;
            }
            std::optional<CrossCheckOptions> cross;
            if (!preset.empty()) {
                const auto all = presets();
                const auto it = std::find_if(all.begin(), all.end(), [&](const Preset& p) { return p.name == preset; });
                if (it == all.end()) throw InvalidSpec("unknown preset '" + preset + "'");
                spec = it->spec;
                cross = it->cross_check;
            } else {
                spec.coefficient_set = parse_coeffs(coeffs);
                spec.mode = mode == "random" ? EnumerationMode::random : EnumerationMode::exhaustive;
                if (!corollary.empty()) cross = CrossCheckOptions{parse_hypothesis(corollary), all_linear};
            }
            spec.budget = budget ? *budget : default_budget();
            spec.validate();

            EnumerationResult result;
            if (naive) {
                result = enumerate_naive(spec);
            } else if (cross) {
                result = cross_check_corollaries(spec, *cross);
            } else {
                result = enumerate_divergence_free(spec);
            }
            nlohmann::json doc = to_json(result);
            doc["spec"] = to_json(spec);
            doc["claim"] = cross ? to_string(cross->hypothesis) : (naive ? "naive" : "theorem1");
            if (cross) doc["all_linear_parts"] = cross->all_linear_parts;
            emit(doc);
            return result.counterexamples.empty() ? kOk : kCounterexamples;
        }

        const PolyMap m = read_map(in);
        const ClassificationReport r = classify(m, side_of(in));

        if (classify_cmd->parsed()) {
            if (in.json) {
                emit(to_json(r));
            } else {
                std::cout << to_text(r);
            }
            if (r.singular_linear_part) {
                std::cerr << "error: linear part at the origin is singular\n";
                return kSingular;
            }
            return kOk;
        }

        if (conditions_cmd->parsed()) {
            if (in.json) {
                emit({{"input", to_json(r.input)},
                      {"conditions", to_json(r.conditions)},
                      {"components", component_conditions_json(r.input)}});
            } else {
                const std::string text = to_text(r);
                std::cout << component_conditions_text(r.input) << text.substr(text.find("conditions:"));
            }
            return kOk;
        }

        if (r.singular_linear_part) {
            std::cerr << "error: linear part at the origin is singular\n";
            return kSingular;
        }
        if (const int code = require_shear(r); code != kOk) return code;

        if (decompose_cmd->parsed()) {
            if (in.json) {
                emit({{"input", to_json(r.input)},
                      {"translation", {r.translation.first.str(), r.translation.second.str()}},
                      {"normalized", to_json(r.normalized->psi)},
                      {"verdict", to_string(r.verdict)},
                      {"shear", to_json(r.decomposition->decomposition)}});
            } else {
                const std::string text = to_text(r);
                std::cout << text.substr(0, text.find("inverse:"));
            }
        } else if (invert_cmd->parsed()) {
            if (in.json) {
                emit({{"input", to_json(r.input)}, {"inverse", to_json(*r.inverse)}});
            } else {
                std::cout << map_text(*r.inverse) << "\n";
            }
        } else if (normal_cmd->parsed()) {
            if (in.json) {
                emit({{"input", to_json(r.input)}, {"normal_form", to_json(*r.normal_form)}});
            } else {
                const PolyMap T = r.normal_form->change_of_variables.as_map();
                std::cout << "T = " << map_text(T) << "\ng(u) = " << format_univariate(r.normal_form->g_poly(), 'u')
                          << "\n";
            }
        }
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidSpec& e) {
        std::cerr << "invalid enumeration spec: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const InternalVerificationFailed& e) {
        std::cerr << "internal verification failed: " << e.what() << "\n";
        return kInternal;
    }
}
