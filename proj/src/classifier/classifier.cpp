#include "lowdeg/classifier.hpp"

#include <algorithm>

#include "lowdeg/error.hpp"
#include "lowdeg/picard.hpp"

namespace lowdeg::classifier {

namespace {

void require_degree(int d) {
    if (d < 2 || d > 5) {
        throw DomainError("classification is only known for 2 <= d <= 5, got d = " + std::to_string(d));
    }
}

// Sporadic genera of d-minimal curves that occur only over non-closed fields.
// Lower endpoints are table data; see the audit for the upper endpoints.
std::vector<Int> sporadic_genera(int d) {
    switch (d) {
        case 4: return {4, 5};
        case 5: return {5, 6, 7, 8};
        default: return {};
    }
}

std::vector<ClassificationCase> covers(int d, bool arithmetic) {
    ClassificationCase p1;
    p1.kind = CaseKind::cover_of_P1;
    p1.degree = d;
    p1.provenance = "degree d cover of the projective line";

    ClassificationCase ell;
    ell.kind = CaseKind::cover_of_elliptic;
    ell.degree = d;
    ell.positive_rank = arithmetic;
    ell.provenance = arithmetic ? "degree d cover of a positive rank elliptic curve"
                                : "degree d cover of an elliptic curve";
    return {p1, ell};
}

ClassificationCase df_case(int d, Int m_min, Int m_max) {
    ClassificationCase c;
    c.kind = CaseKind::debarre_fahlaoui;
    c.degree = d;
    c.m_min = m_min;
    c.m_max = m_max;
    c.provenance = "normalization of a curve of class (d+m)H - mF on Sym^2 A, r(2) = 2";
    return c;
}

std::string join_ints(const std::vector<Int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

std::string to_string(CaseKind kind) {
    switch (kind) {
        case CaseKind::cover_of_P1: return "cover_of_P1";
        case CaseKind::cover_of_elliptic: return "cover_of_elliptic";
        case CaseKind::debarre_fahlaoui: return "debarre_fahlaoui";
        case CaseKind::sporadic_genus: return "sporadic_genus";
        case CaseKind::plane_quartic_pointless: return "plane_quartic_pointless";
    }
    return "unknown";
}

std::vector<ClassificationCase> classify(int d, bool arithmetic) {
    require_degree(d);
    auto out = covers(d, arithmetic);
    if (d == 2) return out;

    if (d == 3) {
        if (!arithmetic) return out;
        auto df = df_case(d, 1, 1);
        df.provenance = "genus 4 Debarre-Fahlaoui curve, class 4H - F";
        out.push_back(df);
        ClassificationCase quartic;
        quartic.kind = CaseKind::plane_quartic_pointless;
        quartic.genus = 3;
        quartic.provenance = "smooth plane quartic without rational points, positive rank Jacobian, a cubic point";
        out.push_back(quartic);
        return out;
    }

    out.push_back(df_case(d, 1, d));
    if (arithmetic) {
        for (Int g : sporadic_genera(d)) {
            ClassificationCase c;
            c.kind = CaseKind::sporadic_genus;
            c.degree = d;
            c.genus = g;
            c.provenance = "d-minimal, not DF; genus below the dagger or Castelnuovo cap, geometric gonality at most d";
            out.push_back(c);
        }
    }
    return out;
}

std::string table_cell(const std::vector<ClassificationCase>& cases) {
    bool has_cover = false;
    bool has_df = false;
    std::vector<Int> genera;
    for (const auto& c : cases) {
        switch (c.kind) {
            case CaseKind::cover_of_P1:
            case CaseKind::cover_of_elliptic: has_cover = true; break;
            case CaseKind::debarre_fahlaoui: has_df = true; break;
            case CaseKind::sporadic_genus:
            case CaseKind::plane_quartic_pointless:
                if (c.genus) genera.push_back(*c.genus);
                break;
        }
    }
    std::sort(genera.begin(), genera.end());
    genera.erase(std::unique(genera.begin(), genera.end()), genera.end());

    std::vector<std::string> parts;
    if (has_cover) parts.emplace_back("covers");
    if (has_df) parts.emplace_back("DF");
    if (!genera.empty()) parts.push_back("g = " + join_ints(genera));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    return out;
}

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

AuditReport audit(int d) {
    require_degree(d);
    AuditReport rep;
    rep.d = d;
    auto check = [&rep](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const auto geometric = classify(d, false);
    const auto arithmetic = classify(d, true);
    const auto bounds = numerology::genus_bound_main(d);

    // Geometric cases reappear in arithmetic mode up to the rank qualifier.
    bool subset = true;
    for (auto c : geometric) {
        const bool found = std::any_of(arithmetic.begin(), arithmetic.end(), [&](ClassificationCase a) {
            a.positive_rank = false;
            a.provenance.clear();
            c.provenance.clear();
            return a == c;
        });
        subset = subset && found;
    }
    check("geometric_subset_of_arithmetic", subset,
          std::to_string(geometric.size()) + " geometric, " + std::to_string(arithmetic.size()) + " arithmetic cases");

    bool geometric_has_sporadic = std::any_of(geometric.begin(), geometric.end(), [](const auto& c) {
        return c.kind == CaseKind::sporadic_genus || c.kind == CaseKind::plane_quartic_pointless;
    });
    check("no_sporadic_in_geometric_mode", !geometric_has_sporadic, "");

    std::vector<Int> genera;
    for (const auto& c : arithmetic) {
        if ((c.kind == CaseKind::sporadic_genus || c.kind == CaseKind::plane_quartic_pointless) && c.genus) {
            genera.push_back(*c.genus);
        }
    }

    if (d == 2) {
        check("no_sporadic_cases", genera.empty() && arithmetic.size() == 2, "there are no 2-minimal curves");
    } else {
        // Non-DF with dagger, or the weak bound without it; for d = 5 the
        // no-dagger case is sharpened to pi(20, 12).
        const Int non_df = numerology::genus_bound_nonDF(d);
        const Int no_dagger = d == 5 ? numerology::castelnuovo_pi(20, 12) : bounds.bound_no_dagger;
        rep.sporadic_cap = std::max(non_df, no_dagger);
        check("sporadic_cap", true,
              "max(nonDF " + std::to_string(non_df) + ", no-dagger " + std::to_string(no_dagger) +
                  ") = " + std::to_string(*rep.sporadic_cap));

        for (Int g : genera) {
            const std::string tag = "g = " + std::to_string(g);
            check("sporadic_within_cap: " + tag, g <= *rep.sporadic_cap,
                  std::to_string(g) + " <= " + std::to_string(*rep.sporadic_cap));
            check("sporadic_within_main_bound: " + tag, g <= bounds.overall,
                  std::to_string(g) + " <= " + std::to_string(bounds.overall));
            const Int gon = (g + 3) / 2;
            check("sporadic_geometric_gonality: " + tag, gon <= d,
                  "floor((g+3)/2) = " + std::to_string(gon) + " <= " + std::to_string(d));
        }
        if (!genera.empty()) {
            const Int top = *std::max_element(genera.begin(), genera.end());
            check("sporadic_top_equals_cap", top == *rep.sporadic_cap,
                  std::to_string(top) + " == " + std::to_string(*rep.sporadic_cap));
        }
    }

    for (const auto& c : arithmetic) {
        if (c.kind == CaseKind::plane_quartic_pointless) {
            check("plane_quartic_genus", d == 3 && c.genus == Int{3}, "(4-1)(4-2)/2 = 3");
        }
        if (c.kind != CaseKind::debarre_fahlaoui) continue;
        Int lo = 0;
        Int hi = 0;
        bool effective = true;
        bool first = true;
        for (Int m = *c.m_min; m <= *c.m_max; ++m) {
            const picard::DFParams p(d, m);
            const Int g = picard::df_genus(p);
            effective = effective && picard::is_effective(picard::df_class(p)) &&
                        picard::pair(picard::df_class(p), picard::kH) == d;
            lo = first ? g : std::min(lo, g);
            hi = first ? g : std::max(hi, g);
            first = false;
        }
        check("df_classes_effective_degree_d", effective, "");
        check("df_max_genus_is_dagger_bound", hi == bounds.bound_dagger,
              "genus range [" + std::to_string(lo) + ", " + std::to_string(hi) + "], dagger bound " +
                  std::to_string(bounds.bound_dagger));
        if (d == 3) check("df_genus_4", lo == 4 && hi == 4, "class 4H - F has genus 4");
    }
    return rep;
}

}  // namespace lowdeg::classifier
