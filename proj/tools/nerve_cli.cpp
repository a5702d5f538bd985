// Batch front-end: parse structure files, dispatch validations and
// computations, emit deterministic reports.
//
// Exit codes: 0 pass/success, 1 verdict false, 2 malformed input or usage.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "nerf/equivalence.hpp"
#include "nerf/fixtures.hpp"
#include "nerf/homotopy.hpp"
#include "nerf/io.hpp"
#include "nerf/nerf_validator.hpp"
#include "nerf/truncation.hpp"
#include "nerf/weak2.hpp"

using namespace nerf;
using nlohmann::json;

namespace {

std::vector<int> parse_bounds(const std::string& text, int arity) {
    MultiIndex b = parse_multi_index(text);
    if (b.size() == 1 && arity > 1) return std::vector<int>(static_cast<size_t>(arity), b[0]);
    return b;
}

int default_bound() {
    if (const char* env = std::getenv("NERVE_BOUND")) return std::atoi(env);
    return 4;
}

PresheafPtr load_as_presheaf(const std::string& path, const std::string& bound_flag) {
    std::string kind = io::kind_of_file(path);
    if (kind == "presheaf") return io::load_presheaf(path);
    if (kind == "category") {
        int b = bound_flag.empty() ? default_bound() : parse_bounds(bound_flag, 1)[0];
        return nerve(io::load_category(path), b);
    }
    if (kind == "strict_ncat") {
        StrictNCategory c = io::load_strict(path);
        std::vector<int> b = bound_flag.empty()
                                 ? std::vector<int>(static_cast<size_t>(c.n), default_bound())
                                 : parse_bounds(bound_flag, c.n);
        return multi_nerve(c, b);
    }
    if (kind == "weak2") {
        std::vector<int> b = bound_flag.empty() ? std::vector<int>{default_bound(), default_bound()}
                                                : parse_bounds(bound_flag, 2);
        return double_nerve(io::load_weak2(path), b);
    }
    throw io::ParseError("file kind '" + kind + "' does not define a presheaf");
}

json report_json(const std::string& command, bool verdict, const json& detail) {
    json j;
    j["command"] = command;
    j["verdict"] = verdict;
    j["detail"] = detail;
    return j;
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream f(out);
        f << j.dump(1) << "\n";
        std::cout << "report written to " << out << "\n";
    }
}

json witnesses_json(const EquivalenceReport& r) {
    json w = json::array();
    for (const auto& x : r.witnesses)
        w.push_back({{"h", x.h}, {"u", x.u}, {"v", x.v}, {"w", x.w}, {"reason", x.reason}});
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite multi-simplicial nerves: validation, truncation, homotopy"};
    app.require_subcommand(1);

    std::string in_file, in_file2, in_file3, out_file, as_kind = "presheaf", base_label, bound_flag;
    int times = 1, level_i = 1, level_k = 0;

    auto* validate = app.add_subcommand("validate", "validate a structure file");
    validate->add_option("file", in_file)->required();
    validate->add_option("--as", as_kind,
                         "presheaf|one-nerve|n-nerve|strict|groupoid (default presheaf)");
    validate->add_option("--bound", bound_flag);
    validate->add_option("--out", out_file);

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a category file");
    nerve_cmd->add_option("file", in_file)->required();
    nerve_cmd->add_option("--bound", bound_flag);
    nerve_cmd->add_option("--out", out_file);

    auto* multinerve = app.add_subcommand("multinerve", "multi-nerve of a strict n-category file");
    multinerve->add_option("file", in_file)->required();
    multinerve->add_option("--bound", bound_flag);
    multinerve->add_option("--out", out_file);

    auto* doublenerve = app.add_subcommand("doublenerve", "double nerve of a weak 2-category file");
    doublenerve->add_option("file", in_file)->required();
    doublenerve->add_option("--bound", bound_flag);
    doublenerve->add_option("--out", out_file);

    auto* extract2 = app.add_subcommand("extract2", "extract a weak 2-category from a 2-nerf");
    extract2->add_option("file", in_file)->required();
    extract2->add_option("--bound", bound_flag);
    extract2->add_option("--out", out_file);

    auto* strictify_cmd = app.add_subcommand("strictify", "strictification of a 2-nerf");
    strictify_cmd->add_option("file", in_file)->required();
    strictify_cmd->add_option("--bound", bound_flag);
    strictify_cmd->add_option("--out", out_file);

    auto* truncate_cmd = app.add_subcommand("truncate", "iterated truncation");
    truncate_cmd->add_option("file", in_file)->required();
    truncate_cmd->add_option("--times", times);
    truncate_cmd->add_option("--bound", bound_flag);
    truncate_cmd->add_option("--out", out_file);

    auto* pi0_cmd = app.add_subcommand("pi0", "connected components");
    pi0_cmd->add_option("file", in_file)->required();
    pi0_cmd->add_option("--bound", bound_flag);
    pi0_cmd->add_option("--out", out_file);

    auto* pi_cmd = app.add_subcommand("pi", "homotopy group at a basepoint");
    pi_cmd->add_option("file", in_file)->required();
    pi_cmd->add_option("--i", level_i, "group level")->required();
    pi_cmd->add_option("--base", base_label, "basepoint label or #index (default first)");
    pi_cmd->add_option("--bound", bound_flag);
    pi_cmd->add_option("--out", out_file);

    auto* equiv = app.add_subcommand("equiv", "outer k-equivalence of a morphism");
    equiv->add_option("source", in_file)->required();
    equiv->add_option("target", in_file2)->required();
    equiv->add_option("morphism", in_file3)->required();
    equiv->add_option("--k", level_k)->required();
    equiv->add_option("--bound", bound_flag);
    equiv->add_option("--out", out_file);

    auto* fixture = app.add_subcommand("fixture", "write a named fixture file");
    fixture->add_option("name", in_file)->required();
    fixture->add_option("--out", out_file)->required();

    auto* report = app.add_subcommand("report", "summary of a structure file");
    report->add_option("file", in_file)->required();
    report->add_option("--bound", bound_flag);
    report->add_option("--out", out_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            bool ok = false;
            json detail;
            if (as_kind == "presheaf") {
                std::string kind = io::kind_of_file(in_file);
                if (kind == "category") {
                    ValidationReport r = io::load_category(in_file, false).validate();
                    ok = r.ok;
                    detail["message"] = r.message;
                } else if (kind == "strict_ncat") {
                    StrictReport r = validate_strict(io::load_strict(in_file, false));
                    ok = r.ok;
                    detail["message"] = r.detail;
                } else if (kind == "weak2") {
                    Weak2Report r = validate_weak2(io::load_weak2(in_file, false));
                    ok = r.ok;
                    detail["axiom"] = r.axiom;
                    detail["message"] = r.detail;
                } else {
                    ValidationReport r = io::load_presheaf(in_file)->validate();
                    ok = r.ok;
                    detail["message"] = r.message;
                    detail["at"] = to_string(r.at);
                }
            } else if (as_kind == "one-nerve") {
                OneNerveReport r = is_one_nerve(load_as_presheaf(in_file, bound_flag));
                ok = r.ok;
                detail["m"] = r.m;
                detail["message"] = r.reason;
            } else if (as_kind == "n-nerve") {
                NerfReport r = is_n_nerf(load_as_presheaf(in_file, bound_flag));
                ok = r.ok;
                detail["axiom"] = r.failed_axiom;
                detail["message"] = r.detail;
                detail["at"] = to_string(r.at);
            } else if (as_kind == "strict") {
                StrictNerfReport r = is_strict_nerf(load_as_presheaf(in_file, bound_flag));
                ok = r.ok;
                detail["message"] = r.detail;
            } else if (as_kind == "groupoid") {
                GroupoidReport r = is_n_groupoid(load_as_presheaf(in_file, bound_flag));
                ok = r.ok;
                detail["level"] = r.failing_level;
                detail["message"] = r.detail;
            } else {
                std::cerr << "unknown --as kind: " << as_kind << "\n";
                return 2;
            }
            emit(report_json("validate", ok, detail), out_file);
            return ok ? 0 : 1;
        }
        if (*nerve_cmd || *multinerve || *doublenerve) {
            PresheafPtr phi = load_as_presheaf(in_file, bound_flag);
            if (out_file.empty())
                std::cout << phi->describe() << "\n";
            else {
                io::save_presheaf(phi, out_file);
                std::cout << "presheaf written to " << out_file << "\n";
            }
            return 0;
        }
        if (*extract2) {
            PresheafPtr phi = load_as_presheaf(in_file, bound_flag);
            ExtractedWeak2 e = extract_weak2(phi);
            Weak2Report r = validate_weak2(e.cat);
            if (!out_file.empty()) io::save_weak2(e.cat, out_file);
            emit(report_json("extract2", r.ok,
                             {{"c0", e.cat.c0}, {"c1", e.cat.c1}, {"c2", e.cat.c2}}),
                 "");
            return r.ok ? 0 : 1;
        }
        if (*strictify_cmd) {
            PresheafPtr phi = load_as_presheaf(in_file, bound_flag);
            Strictification st = strictify(phi);
            bool strict_ok = is_strict_nerf(st.s).ok;
            json detail;
            detail["s_is_strict_nerf"] = strict_ok;
            detail["alpha"] =
                st.alpha.has_value()
                    ? json{{"direction", st.alpha_to_s ? "to_S" : "from_S"},
                           {"outer_2_equivalence", is_outer_k_equivalence(*st.alpha, 2).verdict}}
                    : json{{"absent", st.alpha_note}};
            detail["beta"] =
                st.beta.has_value()
                    ? json{{"direction", st.beta_to_s ? "to_S" : "from_S"},
                           {"outer_2_equivalence", is_outer_k_equivalence(*st.beta, 2).verdict}}
                    : json{{"absent", st.beta_note}};
            if (!out_file.empty()) io::save_presheaf(st.s, out_file);
            bool ok = strict_ok && st.alpha.has_value() && st.beta.has_value();
            emit(report_json("strictify", ok, detail), "");
            return ok ? 0 : 1;
        }
        if (*truncate_cmd) {
            PresheafPtr phi = load_as_presheaf(in_file, bound_flag);
            TruncationTower tw = truncation_tower(phi, times);
            PresheafPtr top = tw.levels.back();
            if (out_file.empty())
                std::cout << top->describe() << "\n";
            else {
                io::save_presheaf(top, out_file);
                std::cout << "T^" << times << " written to " << out_file << "\n";
            }
            return 0;
        }
        if (*pi0_cmd) {
            PresheafPtr phi = load_as_presheaf(in_file, bound_flag);
            std::vector<std::string> classes = pi0(phi);
            json detail;
            detail["count"] = classes.size();
            detail["classes"] = classes;
            emit(report_json("pi0", true, detail), out_file);
            return 0;
        }
        if (*pi_cmd) {
            PresheafPtr phi = load_as_presheaf(in_file, bound_flag);
            int n = phi->arity();
            MultiIndex obj_idx(static_cast<size_t>(level_i - 1), 1);
            obj_idx.insert(obj_idx.end(), static_cast<size_t>(n - level_i + 1), 0);
            int base = 0;
            if (!base_label.empty()) {
                auto found = phi->cell_by_label(obj_idx, base_label);
                if (!found) {
                    std::cerr << "basepoint '" << base_label << "' not found at ("
                              << to_string(obj_idx) << ")\n";
                    return 2;
                }
                base = *found;
            }
            HomotopyGroup g = homotopy_group(phi, level_i, base);
            json detail;
            detail["i"] = level_i;
            detail["base"] = g.base_label;
            detail["order"] = g.order();
            detail["abelian"] = g.abelian();
            detail["elements"] = g.element_labels;
            detail["table"] = g.table;
            emit(report_json("pi", true, detail), out_file);
            return 0;
        }
        if (*equiv) {
            PresheafPtr src = load_as_presheaf(in_file, bound_flag);
            PresheafPtr dst = load_as_presheaf(in_file2, bound_flag);
            PresheafMorphism f = io::load_morphism(in_file3, src, dst);
            EquivalenceReport r = is_outer_k_equivalence(f, level_k);
            json detail;
            detail["k"] = level_k;
            detail["witnesses"] = witnesses_json(r);
            emit(report_json("equiv", r.verdict, detail), out_file);
            return r.verdict ? 0 : 1;
        }
        if (*fixture) {
            const std::string& name = in_file;
            using namespace nerf::fixtures;
            if (name == "terminal")
                io::save_category(terminal_category(), out_file);
            else if (name == "z2_delooping")
                io::save_category(z2_delooping(), out_file);
            else if (name == "arrow_cat")
                io::save_category(arrow_category(), out_file);
            else if (name == "contractible_groupoid")
                io::save_category(contractible_groupoid(2), out_file);
            else if (name == "s3_delooping")
                io::save_category(s3_delooping(), out_file);
            else if (name == "discrete2")
                io::save_category(discrete_category(2), out_file);
            else if (name == "strict2_z2")
                io::save_strict(strict2_z2(), out_file);
            else if (name == "strict2_z2xz2")
                io::save_strict(strict2_group_with_autos(2, 2), out_file);
            else if (name == "strict3_z2")
                io::save_strict(strict3_z2(), out_file);
            else if (name == "weak_cocycle")
                io::save_weak2(weak_cocycle(), out_file);
            else if (name == "weak_trivial")
                io::save_weak2(weak_trivial_cocycle(), out_file);
            else if (name == "broken_pentagon")
                io::save_weak2(weak_cocycle_broken(), out_file);
            else if (name == "broken_action")
                io::save_presheaf(fixtures::broken_presheaf_action(), out_file);
            else if (name == "broken_segal_inj")
                io::save_presheaf(fixtures::broken_segal_injectivity(), out_file);
            else if (name == "broken_segal_surj")
                io::save_presheaf(fixtures::broken_segal_surjectivity(), out_file);
            else if (name == "broken_interchange")
                io::save_strict(fixtures::broken_interchange(), out_file);
            else {
                std::cerr << "unknown fixture '" << name << "'; known:";
                for (const auto& s : fixture_names()) std::cerr << " " << s;
                std::cerr << "\n";
                return 2;
            }
            std::cout << "fixture " << name << " written to " << out_file << "\n";
            return 0;
        }
        if (*report) {
            std::string kind = io::kind_of_file(in_file);
            json detail;
            detail["kind"] = kind;
            if (kind == "presheaf") {
                PresheafPtr phi = io::load_presheaf(in_file);
                detail["describe"] = phi->describe();
                detail["valid"] = phi->validate().ok;
            } else if (kind == "category") {
                FinCategory c = io::load_category(in_file);
                detail["objects"] = c.objects();
                detail["arrows"] = c.arrows();
            } else if (kind == "strict_ncat") {
                detail["n"] = io::load_strict(in_file).n;
            } else if (kind == "weak2") {
                Weak2Category c = io::load_weak2(in_file);
                detail["c0"] = c.c0;
                detail["c1"] = c.c1;
                detail["c2"] = c.c2;
            }
            emit(report_json("report", true, detail), out_file);
            return 0;
        }
    } catch (const io::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
