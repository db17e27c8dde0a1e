#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lowdeg/projective.hpp"

namespace lowdeg::config {

using linalg::Field;
using linalg::ProjPoint;
using linalg::ProjSubspace;

/// Pairwise distinct points of P^n over one field.
class PointConfig {
public:
    /// Throws DomainError on duplicates, AmbientMismatchError or
    /// FieldMismatchError on inconsistent points.
    PointConfig(int ambient, std::vector<ProjPoint> points);

    int ambient() const { return ambient_; }
    const Field& field() const { return field_; }
    const std::vector<ProjPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    int ambient_;
    Field field_;
    std::vector<ProjPoint> points_;
};

// ---------------------------------------------------------------------------
// Common codimension-3 subspace of codimension-2 subspaces that pairwise lie
// in a hyperplane and together span the ambient space.

struct CommonSubspaceResult {
    std::optional<ProjSubspace> subspace;
    /// One entry per failed precondition or per input missing the candidate.
    std::vector<std::string> violations;

    bool found() const { return subspace.has_value(); }
};

/// Meets the first pair of distinct inputs and checks that every other input
/// contains that meet. Never throws on bad configurations; every problem is
/// listed in `violations`.
CommonSubspaceResult common_subspace(std::span<const ProjSubspace> subspaces);

struct PlantedConfiguration {
    ProjSubspace lambda;
    std::vector<ProjSubspace> subspaces;
};

/// `count` distinct random codimension-2 subspaces through a random
/// codimension-3 subspace `lambda`, jointly spanning P^n. Needs a prime
/// field, ambient >= 3 and 3 <= count <= p^2 + p + 1.
PlantedConfiguration planted_configuration(const Field& field, int ambient, std::size_t count,
                                           std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Sylvester-Gallai detection in the plane.

using IndexPair = std::pair<std::size_t, std::size_t>;

struct SGReport {
    /// Every line through two of the points contains a third.
    bool is_sylvester_gallai = false;
    /// Size of the largest collinear subset.
    std::size_t max_collinear = 0;
    /// First pair (lexicographically) whose line has no third point.
    std::optional<IndexPair> witness;
    /// Every line with at least three points, as sorted index lists.
    std::vector<std::vector<std::size_t>> rich_lines;
    /// All pairs whose line carries no third point.
    std::vector<IndexPair> ordinary_pairs;
};

/// Cubic-time check with exact 3x3 determinants. Requires a configuration
/// of at least three points in P^2.
SGReport sg_check(const PointConfig& config);

/// The nine points (x : y : 1), x, y in F_3.
PointConfig hesse_config();

// ---------------------------------------------------------------------------
// Combinatorial model of Sym^2 of a cyclic group Z/N.

class Sym2GroupModel {
public:
    /// Unordered pair {x, y}, stored with x <= y.
    struct Element {
        int x = 0;
        int y = 0;
        friend auto operator<=>(const Element&, const Element&) = default;
        bool is_diagonal() const { return x == y; }
    };

    /// Requires 5 <= N <= 4096.
    explicit Sym2GroupModel(int modulus);

    int modulus() const { return modulus_; }
    /// N(N+1)/2.
    std::size_t size() const;
    std::vector<Element> elements() const;
    /// Reduces both entries mod N and orders them.
    Element make(long x, long y) const;

    /// All pairs containing x, including {x, x}.
    std::vector<Element> h_divisor(long x) const;
    /// All pairs with x + y = s in Z/N.
    std::vector<Element> f_divisor(long s) const;

private:
    int modulus_;
};

struct PairingReport {
    int modulus = 0;
    std::size_t checks_hh = 0;
    std::size_t checks_hf = 0;
    std::size_t checks_ff = 0;
    /// Common intersection size of each family, when uniform.
    std::optional<std::size_t> hh;
    std::optional<std::size_t> hf;
    std::optional<std::size_t> ff;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Exhaustively compares |H_x ∩ H_y| (x != y), |H_x ∩ F_s| and
/// |F_s ∩ F_t| (s != t) against 1, 1 and 0.
PairingReport incidence_pairing_check(const Sym2GroupModel& model);

struct TwoDivisorReport {
    /// degree[x] = |H_x ∩ X|.
    std::vector<std::size_t> degree;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks that every off-diagonal pair of `subset` lies on exactly two
/// H-divisors. Diagonal or repeated elements are reported as violations.
TwoDivisorReport two_divisor_check(const Sym2GroupModel& model,
                                   std::span<const Sym2GroupModel::Element> subset);

}  // namespace lowdeg::config
