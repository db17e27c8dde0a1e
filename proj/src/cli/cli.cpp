#include "lowdeg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "lowdeg/classifier.hpp"
#include "lowdeg/config_lab.hpp"
#include "lowdeg/error.hpp"
#include "lowdeg/json_io.hpp"
#include "lowdeg/numerology.hpp"
#include "lowdeg/picard.hpp"

namespace lowdeg::cli {

namespace {

using linalg::Json;
using numerology::Int;

enum class Format { json, table };

// A result plus the exit code it should produce.
struct Outcome {
    Json body;
    int code = kExitOk;
};

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "table") return Format::table;
    throw ParseError("unknown output format '" + name + "' (expected json or table)");
}

Json read_input(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(path);
        if (!file) throw ParseError("cannot open input file '" + path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json class_json(picard::SurfaceClass c) { return Json{{"a", c.a}, {"b", c.b}}; }

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

// Library calls that may throw are evaluated before any Json literal: an
// exception thrown mid-initializer-list leaks the partially built elements.

Outcome cmd_pi(Int delta, Int ambient) {
    const Int pi = numerology::castelnuovo_pi(delta, ambient);
    return {Json{{"delta", delta}, {"ambient", ambient}, {"pi", pi}}};
}

struct BoundsArgs {
    Int d = 0;
    std::optional<Int> e;
    std::optional<Int> r;
    std::optional<Int> genus;
    bool elliptic_cover = false;
    bool df = false;
};

Outcome cmd_bounds(const BoundsArgs& a) {
    const auto rep = numerology::genus_bound_main(a.d);
    Json j{{"d", rep.d},
           {"m", rep.m},
           {"epsilon", rep.epsilon},
           {"bound_dagger", rep.bound_dagger},
           {"bound_no_dagger", rep.bound_no_dagger},
           {"bound_nonDF_dagger", optional_json(rep.bound_nonDF_dagger)},
           {"overall", rep.overall},
           {"governing", numerology::to_string(rep.governing)}};
    if (a.e || a.r) {
        if (!a.e || !a.r) throw ParseError("--e and --r must be given together");
        const Int bound = numerology::genus_bound_special(*a.e, *a.r, a.d);
        j["special"] = Json{{"e", *a.e}, {"r", *a.r}, {"bound", bound}};
    }
    if (a.genus) {
        const auto g = numerology::gonality_bounds(a.d, a.elliptic_cover, a.df, *a.genus);
        j["gonality"] = Json{{"genus", *a.genus},
                             {"airr_based", g.airr_based},
                             {"genus_based_geometric", g.genus_based_geometric},
                             {"genus_based_arithmetic", g.genus_based_arithmetic},
                             {"combined", g.combined}};
    }
    return {j};
}

Outcome cmd_profile(int d, bool dagger, int r2, std::optional<int> n_max, std::optional<int> dim_a) {
    numerology::ProfileOptions opts;
    opts.conjectural_dim_a = dim_a;
    const auto prof = numerology::rs_profile(d, n_max.value_or(d), dagger, r2, opts);
    Json rows = Json::array();
    for (int n = 2; n <= prof.n_max; ++n) {
        rows.push_back(Json{{"n", n},
                            {"r", prof.r(n)},
                            {"s", prof.s(n)},
                            {"rprime", prof.rprime(n)},
                            {"sprime", prof.sprime(n)}});
    }
    Json j{{"d", prof.d},
           {"dagger", prof.dagger},
           {"dagger_forced", prof.dagger_forced},
           {"n_max", prof.n_max},
           {"codim_V_lb2", prof.codim_V_lb2},
           {"conjectural_dim_a", optional_json(prof.conjectural_dim_a)},
           {"applied", prof.applied},
           {"rows", rows}};
    return {j};
}

Outcome cmd_df(Int d, Int m) {
    const picard::DFParams p(d, m);
    const auto c = picard::df_class(p);
    const Int genus = picard::df_genus(p);
    const Int degree = picard::pair(c, picard::kH);
    return {Json{{"d", d},
                 {"m", m},
                 {"class", class_json(c)},
                 {"genus", genus},
                 {"degree", degree},
                 {"effective", picard::is_effective(c)},
                 {"gonality_guard", picard::df_gonality_guard(p)},
                 {"very_ample_certified", picard::df_very_ample_certified(p)}}};
}

Outcome cmd_cone(Int a, Int b) {
    const picard::SurfaceClass c{a, b};
    const Int self = picard::pair(c, c);
    const Int degree = picard::pair(c, picard::kH);
    const Int genus = picard::adjunction_genus(c);
    return {Json{{"class", class_json(c)},
                 {"effective", picard::is_effective(c)},
                 {"nef", picard::is_nef(c)},
                 {"self_intersection", self},
                 {"degree", degree},
                 {"adjunction_genus", genus}}};
}

Json case_json(const classifier::ClassificationCase& c) {
    Json j{{"kind", classifier::to_string(c.kind)}};
    if (c.degree) j["degree"] = *c.degree;
    if (c.genus) j["genus"] = *c.genus;
    if (c.m_min) j["m_min"] = *c.m_min;
    if (c.m_max) j["m_max"] = *c.m_max;
    if (c.kind == classifier::CaseKind::cover_of_elliptic) j["positive_rank"] = c.positive_rank;
    j["provenance"] = c.provenance;
    return j;
}

Outcome cmd_classify(int d, bool geometric) {
    const auto cases = classifier::classify(d, !geometric);
    Json list = Json::array();
    for (const auto& c : cases) list.push_back(case_json(c));
    return {Json{{"d", d},
                 {"mode", geometric ? "geometric" : "arithmetic"},
                 {"cell", classifier::table_cell(cases)},
                 {"cases", list}}};
}

Outcome cmd_audit(int d) {
    const auto rep = classifier::audit(d);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {Json{{"d", d},
                 {"sporadic_cap", optional_json(rep.sporadic_cap)},
                 {"passed", rep.passed()},
                 {"checks", checks}},
            rep.passed() ? kExitOk : kExitDomain};
}

config::PointConfig points_from_json(const Json& j) {
    const Json* list = &j;
    std::optional<int> ambient;
    if (j.is_object()) {
        if (!j.contains("points")) throw ParseError("points file needs a \"points\" array");
        list = &j.at("points");
        if (j.contains("ambient")) {
            if (!j.at("ambient").is_number_integer()) throw ParseError("\"ambient\" must be an integer");
            ambient = j.at("ambient").get<int>();
        }
    }
    if (!list->is_array()) throw ParseError("points must be a JSON array");
    std::vector<linalg::ProjPoint> pts;
    for (const auto& p : *list) pts.push_back(linalg::point_from_json(p));
    if (!ambient) {
        if (pts.empty()) throw ParseError("cannot infer the ambient dimension of an empty point list");
        ambient = pts.front().ambient();
    }
    return config::PointConfig(*ambient, std::move(pts));
}

Json pair_json(const config::IndexPair& p) { return Json::array({p.first, p.second}); }

Outcome cmd_sg(const std::optional<std::string>& input, bool hesse, std::istream& in) {
    if (hesse == input.has_value()) throw ParseError("sg needs exactly one of --input or --hesse");
    const auto cfg = hesse ? config::hesse_config() : points_from_json(read_input(*input, in));
    const auto rep = config::sg_check(cfg);
    Json witness = rep.witness ? pair_json(*rep.witness) : Json(nullptr);
    return {Json{{"points", cfg.size()},
                 {"field", cfg.field().to_string()},
                 {"is_sylvester_gallai", rep.is_sylvester_gallai},
                 {"max_collinear", rep.max_collinear},
                 {"witness", witness},
                 {"rich_lines", rep.rich_lines},
                 {"ordinary_pairs", rep.ordinary_pairs.size()}}};
}

std::vector<linalg::ProjSubspace> subspaces_from_json(const Json& j) {
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("subspaces")) throw ParseError("subspaces file needs a \"subspaces\" array");
        list = &j.at("subspaces");
    }
    if (!list->is_array()) throw ParseError("subspaces must be a JSON array");
    std::vector<linalg::ProjSubspace> out;
    for (const auto& s : *list) out.push_back(linalg::subspace_from_json(s));
    return out;
}

struct CommonSubspaceArgs {
    std::optional<std::string> input;
    int trials = 200;
    std::uint64_t seed = 0;
    Int modulus = 5;
    int ambient = 4;
    int count = 4;
};

Outcome cmd_common_subspace(const CommonSubspaceArgs& a, std::istream& in) {
    if (a.input) {
        const auto subs = subspaces_from_json(read_input(*a.input, in));
        const auto res = config::common_subspace(subs);
        Json sub = res.subspace ? linalg::to_json(*res.subspace) : Json(nullptr);
        return {Json{{"inputs", subs.size()}, {"found", res.found()}, {"subspace", sub}, {"violations", res.violations}},
                res.found() ? kExitOk : kExitDomain};
    }
    if (a.trials < 1 || a.trials > 1'000'000) throw DomainError("--trials must lie in [1, 1000000]");
    if (a.ambient < 3 || a.ambient > 64) throw DomainError("--ambient must lie in [3, 64]");
    if (a.count < 3 || a.count > 64) throw DomainError("--count must lie in [3, 64]");
    const auto field = linalg::Field::prime(a.modulus);
    std::mt19937_64 rng(a.seed);
    std::size_t failures = 0;
    std::vector<std::string> violations;
    for (int t = 0; t < a.trials; ++t) {
        const auto planted = config::planted_configuration(field, a.ambient, static_cast<std::size_t>(a.count), rng);
        const auto res = config::common_subspace(planted.subspaces);
        if (!res.found() || !(*res.subspace == planted.lambda)) {
            ++failures;
            violations.push_back("trial " + std::to_string(t) + ": common subspace differs from the planted one");
        }
    }
    return {Json{{"trials", a.trials},
                 {"seed", a.seed},
                 {"field", field.to_string()},
                 {"ambient", a.ambient},
                 {"count", a.count},
                 {"failures", failures},
                 {"violations", violations}},
            failures == 0 ? kExitOk : kExitDomain};
}

Outcome cmd_sym2(int modulus, bool check, int trials, std::uint64_t seed) {
    const config::Sym2GroupModel model(modulus);
    Json j{{"modulus", modulus}, {"size", model.size()}};
    int code = kExitOk;
    if (check) {
        const auto rep = config::incidence_pairing_check(model);
        j["pairing"] = Json{{"checks_hh", rep.checks_hh},
                            {"checks_hf", rep.checks_hf},
                            {"checks_ff", rep.checks_ff},
                            {"hh", optional_json(rep.hh)},
                            {"hf", optional_json(rep.hf)},
                            {"ff", optional_json(rep.ff)},
                            {"ok", rep.ok()},
                            {"violations", rep.violations}};
        if (!rep.ok()) code = kExitDomain;
    }
    if (trials < 0 || trials > 1'000'000) throw DomainError("--trials must lie in [0, 1000000]");
    if (trials > 0) {
        // Random off-diagonal subsets: each point lies on two H-divisors, so
        // the H-degrees add up to twice the subset size.
        std::mt19937_64 rng(seed);
        std::size_t failures = 0;
        for (int t = 0; t < trials; ++t) {
            std::vector<config::Sym2GroupModel::Element> subset;
            const auto want = 1 + rng() % static_cast<std::uint64_t>(modulus);
            while (subset.size() < want) {
                const auto e = model.make(static_cast<long>(rng() % modulus), static_cast<long>(rng() % modulus));
                if (e.is_diagonal() || std::find(subset.begin(), subset.end(), e) != subset.end()) continue;
                subset.push_back(e);
            }
            const auto rep = config::two_divisor_check(model, subset);
            std::size_t total = 0;
            for (auto deg : rep.degree) total += deg;
            if (!rep.ok() || total != 2 * subset.size()) ++failures;
        }
        j["random_subsets"] = Json{{"trials", trials}, {"seed", seed}, {"failures", failures}};
        if (failures) code = kExitDomain;
    }
    return {j, code};
}

struct RhArgs {
    std::optional<Int> gx;
    std::optional<Int> gy;
    std::optional<Int> deg;
    std::optional<Int> ram;
    std::optional<Int> ramified_points;
};

Outcome cmd_rh(const RhArgs& a) {
    if (a.ramified_points) {
        if (!a.gx) throw ParseError("--ramified-points needs --gx");
        const auto bound = numerology::riemann_hurwitz_min_degree(*a.gx, *a.ramified_points);
        return {Json{{"source_genus", *a.gx}, {"ramified_points", *a.ramified_points}, {"degree", optional_json(bound)}}};
    }
    if (!a.gx || !a.gy || !a.deg || !a.ram) throw ParseError("rh needs --gx, --gy, --deg and --ram");
    const bool holds = numerology::riemann_hurwitz_check(*a.gx, *a.gy, *a.deg, *a.ram);
    return {Json{{"g_X", *a.gx},
                 {"g_Y", *a.gy},
                 {"deg", *a.deg},
                 {"ram", *a.ram},
                 {"holds", holds}}};
}

// ---------------------------------------------------------------------------
// Table rendering.

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        return;
    }
    if (j.is_array()) {
        const bool simple = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
        if (simple) {
            std::string line;
            for (const auto& x : j) line += (line.empty() ? "" : ", ") + scalar_text(x);
            rows.emplace_back(prefix, line.empty() ? "(none)" : line);
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
        return;
    }
    rows.emplace_back(prefix, scalar_text(j));
}

void render_table(const std::string& command, const Json& j, std::ostream& out) {
    if (command == "pi") {
        out << j.at("pi").dump() << '\n';
        return;
    }
    if (command == "profile") {
        out << "d = " << j.at("d") << ", dagger = " << j.at("dagger")
            << (j.at("dagger_forced").get<bool>() ? " (forced by r(2) = 2)" : "") << '\n';
        out << std::setw(4) << "n" << std::setw(8) << "r" << std::setw(8) << "s" << std::setw(8) << "r'"
            << std::setw(8) << "s'" << '\n';
        for (const auto& row : j.at("rows")) {
            out << std::setw(4) << row.at("n").get<Int>();
            for (const char* key : {"r", "s", "rprime", "sprime"}) out << std::setw(8) << row.at(key).get<Int>();
            out << '\n';
        }
        for (const auto& note : j.at("applied")) out << "applied: " << note.get<std::string>() << '\n';
        return;
    }
    if (command == "classify") {
        out << "d = " << j.at("d") << " (" << j.at("mode").get<std::string>()
            << "): " << j.at("cell").get<std::string>() << '\n';
        for (const auto& c : j.at("cases")) {
            out << "  " << c.at("kind").get<std::string>() << ": " << c.at("provenance").get<std::string>() << '\n';
        }
        return;
    }
    if (command == "audit") {
        for (const auto& c : j.at("checks")) {
            out << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
            const auto detail = c.at("detail").get<std::string>();
            if (!detail.empty()) out << "  (" << detail << ")";
            out << '\n';
        }
        out << (j.at("passed").get<bool>() ? "audit passed" : "audit FAILED") << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Exact computations for curves with many low degree points", "lowdeg"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::optional<std::string> format_flag;
    app.add_option("--format", format_flag, "Output format: json or table (env LOWDEG_FORMAT)");

    Int delta = 0, ambient = 0;
    auto* pi = app.add_subcommand("pi", "Castelnuovo function pi(delta, n)");
    pi->add_option("--delta", delta)->required();
    pi->add_option("--ambient", ambient)->required();

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Genus bounds for a given d");
    bounds->add_option("--d", bounds_args.d)->required();
    bounds->add_option("--e", bounds_args.e, "Degree of a special curve (with --r)");
    bounds->add_option("--r", bounds_args.r, "Ambient dimension of the special curve");
    bounds->add_option("--genus", bounds_args.genus, "Genus for the gonality bounds");
    bounds->add_flag("--elliptic-cover", bounds_args.elliptic_cover);
    bounds->add_flag("--df", bounds_args.df);

    int prof_d = 0, prof_r2 = 2;
    bool prof_dagger = false;
    std::optional<int> prof_n_max, prof_dim_a;
    auto* profile = app.add_subcommand("profile", "Dimension recursion lower bounds");
    profile->add_option("--d", prof_d)->required();
    profile->add_flag("--dagger", prof_dagger);
    profile->add_option("--r2", prof_r2, "Lower bound for r(2)");
    profile->add_option("--n-max", prof_n_max, "Largest n (default d)");
    profile->add_option("--conjectural-dim-a", prof_dim_a, "Apply the unproven growth s(n) - s(n-1) >= a");

    Int df_d = 0, df_m = 0;
    auto* df = app.add_subcommand("df", "Debarre-Fahlaoui class data");
    df->add_option("--d", df_d)->required();
    df->add_option("--m", df_m)->required();

    Int cone_a = 0, cone_b = 0;
    auto* cone = app.add_subcommand("cone", "Cone membership of aH + bF");
    cone->add_option("--a", cone_a)->required();
    cone->add_option("--b", cone_b)->required();

    int cls_d = 0;
    bool cls_geometric = false;
    auto* classify = app.add_subcommand("classify", "Classification cases for 2 <= d <= 5");
    classify->add_option("--d", cls_d)->required();
    classify->add_flag("--geometric", cls_geometric);

    int audit_d = 0;
    auto* audit = app.add_subcommand("audit", "Cross-check the classification against the bounds");
    audit->add_option("--d", audit_d)->required();

    std::optional<std::string> sg_input;
    bool sg_hesse = false;
    auto* sg = app.add_subcommand("sg", "Sylvester-Gallai check for points in P^2");
    sg->add_option("--input", sg_input, "Points JSON file, or - for stdin");
    sg->add_flag("--hesse", sg_hesse, "Use the nine flexes of a plane cubic over F_3");

    CommonSubspaceArgs cs;
    auto* common = app.add_subcommand("lemma52", "Common codimension-3 subspace of codimension-2 subspaces");
    common->add_option("--input", cs.input, "Subspaces JSON file, or - for stdin");
    common->add_option("--trials", cs.trials);
    common->add_option("--seed", cs.seed);
    common->add_option("--modulus", cs.modulus);
    common->add_option("--ambient", cs.ambient);
    common->add_option("--count", cs.count, "Subspaces per random trial");

    int sym_n = 0, sym_trials = 0;
    std::uint64_t sym_seed = 0;
    bool sym_check = false;
    auto* sym2 = app.add_subcommand("sym2", "Combinatorial model of Sym^2 of Z/N");
    sym2->add_option("--modulus", sym_n)->required();
    sym2->add_flag("--check", sym_check, "Exhaustive pairing check");
    sym2->add_option("--trials", sym_trials, "Random two-divisor checks");
    sym2->add_option("--seed", sym_seed);

    RhArgs rh_args;
    auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz check or degree bound");
    rh->add_option("--gx", rh_args.gx);
    rh->add_option("--gy", rh_args.gy);
    rh->add_option("--deg", rh_args.deg);
    rh->add_option("--ram", rh_args.ram);
    rh->add_option("--ramified-points", rh_args.ramified_points, "Totally ramified points over P^1");

    if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
        app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "error: unknown subcommand '" << args.front() << "'\n" << app.help();
        return kExitMalformed;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitMalformed;
    }

    try {
        Format format = Format::table;
        if (const char* env = std::getenv("LOWDEG_FORMAT"); env && *env) format = parse_format(env);
        if (format_flag) format = parse_format(*format_flag);

        auto* chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();
        Outcome result;
        if (chosen == pi) result = cmd_pi(delta, ambient);
        else if (chosen == bounds) result = cmd_bounds(bounds_args);
        else if (chosen == profile) result = cmd_profile(prof_d, prof_dagger, prof_r2, prof_n_max, prof_dim_a);
        else if (chosen == df) result = cmd_df(df_d, df_m);
        else if (chosen == cone) result = cmd_cone(cone_a, cone_b);
        else if (chosen == classify) result = cmd_classify(cls_d, cls_geometric);
        else if (chosen == audit) result = cmd_audit(audit_d);
        else if (chosen == sg) result = cmd_sg(sg_input, sg_hesse, in);
        else if (chosen == common) result = cmd_common_subspace(cs, in);
        else if (chosen == sym2) result = cmd_sym2(sym_n, sym_check, sym_trials, sym_seed);
        else result = cmd_rh(rh_args);

        if (format == Format::json) {
            out << result.body.dump(2) << '\n';
        } else {
            render_table(name, result.body, out);
        }
        return result.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const Json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace lowdeg::cli
