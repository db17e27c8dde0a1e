#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lowdeg::numerology {

using Int = std::int64_t;

/// Largest degree accepted by the bound functions.
inline constexpr Int kMaxDegree = 1'000'000;

/// Castelnuovo's bound on the genus of a nondegenerate degree-delta curve
/// in P^n: with delta - 1 = m(n - 1) + eps, 0 <= eps < n - 1,
/// pi = m(m - 1)/2 * (n - 1) + m * eps.
/// Throws DomainError for delta < 1, n < 2, or a result beyond 64 bits.
Int castelnuovo_pi(Int delta, Int n);

/// Lower bounds on the dimensions of the linear systems |nD|, |nD|' and of
/// the divisor spans inside them, for 2 <= n <= n_max.
struct ConfigProfile {
    int d = 0;
    /// Whether a general point is the exact intersection of two divisors.
    bool dagger = false;
    /// True when dagger was not requested but r(2) = 2 forces it.
    bool dagger_forced = false;
    int n_max = 0;
    std::vector<Int> r_lb;       ///< r_lb[n - 2] bounds dim |nD|
    std::vector<Int> s_lb;       ///< s_lb[n - 2] bounds dim Span_{nD}(D')
    std::vector<Int> rprime_lb;  ///< bounds dim |nD|'
    std::vector<Int> sprime_lb;  ///< bounds dim Span_{|nD|'}(D')
    /// The common subspace of the divisor spans in |2D| has codimension >= 3.
    Int codim_V_lb2 = 3;
    /// Set when the conjectural growth s(n) - s(n-1) >= dim A was applied.
    std::optional<int> conjectural_dim_a;
    /// Which extra bounds were applied, in application order.
    std::vector<std::string> applied;

    Int r(int n) const { return r_lb.at(static_cast<std::size_t>(n - 2)); }
    Int s(int n) const { return s_lb.at(static_cast<std::size_t>(n - 2)); }
    Int rprime(int n) const { return rprime_lb.at(static_cast<std::size_t>(n - 2)); }
    Int sprime(int n) const { return sprime_lb.at(static_cast<std::size_t>(n - 2)); }
};

struct ProfileOptions {
    /// Experimental: assume s(n) >= min(s(n-1) + a, d - 1) for dim A = a.
    /// This growth rate is unproven; leave unset for rigorous bounds.
    std::optional<int> conjectural_dim_a;
};

/// Propagates the dimension recursion r(n) = r(n-1) + 1 + s(n) from r(2) = r2.
/// Preconditions: 2 <= d <= kMaxDegree, 2 <= r2 <= d, 2 <= n_max <= 10000.
ConfigProfile rs_profile(int d, int n_max, bool dagger, int r2, const ProfileOptions& options = {});

enum class GoverningCase { dagger, no_dagger };

struct GenusBoundReport {
    Int d = 0;
    Int m = 0;        ///< ceil(d/2) - 1
    Int epsilon = 0;  ///< 3d - 1 - 6m, always in [0, 6)
    Int bound_dagger = 0;
    Int bound_no_dagger = 0;
    /// Bound for non-Debarre-Fahlaoui curves with dagger; absent for d < 3.
    std::optional<Int> bound_nonDF_dagger;
    Int overall = 0;
    GoverningCase governing = GoverningCase::dagger;
};

GenusBoundReport genus_bound_main(Int d);

/// (d-1)(d-2)/2 + 2, for d >= 3.
Int genus_bound_nonDF(Int d);

/// pi(e + 2d, 2r + 1) for a degree-e curve in P^r with many degree-d points
/// off hyperplanes.
Int genus_bound_special(Int e, Int r, Int d);

/// Smallest d in [2, limit] whose no-dagger bound exceeds its dagger bound.
std::optional<Int> first_no_dagger_dominant(Int limit);

struct GonalityBounds {
    Int airr_based = 0;
    Int genus_based_geometric = 0;
    Int genus_based_arithmetic = 0;
    /// min(airr_based, genus_based_geometric): both bound the geometric gonality.
    Int combined = 0;
};

GonalityBounds gonality_bounds(Int d, bool is_elliptic_cover, bool is_DF, Int g);

/// Largest degree of a cover of P^1 by a curve of genus `source_genus` that
/// is totally ramified over `ramified_points` points. nullopt when the
/// Riemann-Hurwitz inequality puts no upper limit on the degree.
std::optional<Int> riemann_hurwitz_min_degree(Int source_genus, Int ramified_points);

/// 2 g_X - 2 == deg (2 g_Y - 2) + ram_excess with ram_excess >= 0.
bool riemann_hurwitz_check(Int g_X, Int g_Y, Int deg, Int ram_excess);

std::string to_string(GoverningCase c);

}  // namespace lowdeg::numerology
