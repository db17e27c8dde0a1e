#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowdeg/numerology.hpp"

namespace lowdeg::classifier {

using numerology::Int;

enum class CaseKind {
    cover_of_P1,
    cover_of_elliptic,
    debarre_fahlaoui,
    sporadic_genus,
    plane_quartic_pointless,
};

std::string to_string(CaseKind kind);

/// One entry of a classification cell.
struct ClassificationCase {
    CaseKind kind = CaseKind::cover_of_P1;
    /// Degree of the cover, or the d of the DF class.
    std::optional<Int> degree;
    /// Genus value for sporadic and plane quartic cases.
    std::optional<Int> genus;
    /// Inclusive DF parameter range m_min..m_max.
    std::optional<Int> m_min;
    std::optional<Int> m_max;
    /// Elliptic targets must have positive rank (arithmetic mode only).
    bool positive_rank = false;
    std::string provenance;

    friend bool operator==(const ClassificationCase&, const ClassificationCase&) = default;
};

/// Every case for curves with arithmetic (or geometric) irrationality d.
/// Throws DomainError unless 2 <= d <= 5.
std::vector<ClassificationCase> classify(int d, bool arithmetic);

/// Compact rendering in the style "covers + DF + g = 4, 5".
std::string table_cell(const std::vector<ClassificationCase>& cases);

struct AuditCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AuditReport {
    int d = 0;
    /// Upper bound for sporadic genera; absent when there are none.
    std::optional<Int> sporadic_cap;
    std::vector<AuditCheck> checks;

    bool passed() const;
};

/// Cross-checks both modes of classify(d) against the genus bounds, the
/// gonality bound and the DF genus formula. Throws DomainError unless
/// 2 <= d <= 5.
AuditReport audit(int d);

}  // namespace lowdeg::classifier
