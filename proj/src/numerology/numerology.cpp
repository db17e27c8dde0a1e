#include "lowdeg/numerology.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lowdeg/error.hpp"

namespace lowdeg::numerology {

namespace {

__extension__ typedef __int128 Wide;

Int narrow(Wide v, const char* what) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
        throw DomainError(std::string(what) + " does not fit in 64 bits");
    }
    return static_cast<Int>(v);
}

void require_degree(Int d, Int min_d) {
    if (d < min_d || d > kMaxDegree) {
        throw DomainError("degree d = " + std::to_string(d) + " outside [" + std::to_string(min_d) +
                          ", " + std::to_string(kMaxDegree) + "]");
    }
}

}  // namespace

Int castelnuovo_pi(Int delta, Int n) {
    if (n < 2) throw DomainError("castelnuovo_pi needs n >= 2, got " + std::to_string(n));
    if (delta < 1) throw DomainError("castelnuovo_pi needs delta >= 1, got " + std::to_string(delta));
    const Wide m = (delta - 1) / (n - 1);
    const Wide eps = (delta - 1) % (n - 1);
    return narrow(m * (m - 1) / 2 * (n - 1) + m * eps, "castelnuovo_pi");
}

ConfigProfile rs_profile(int d, int n_max, bool dagger, int r2, const ProfileOptions& options) {
    require_degree(d, 2);
    if (r2 < 2) throw DomainError("r(2) must be at least 2, got " + std::to_string(r2));
    if (r2 > d) {
        // s(2) = r(2) - 1 is the span of d points, so at most d - 1.
        throw DomainError("r(2) = " + std::to_string(r2) + " exceeds d = " + std::to_string(d));
    }
    if (n_max < 2 || n_max > 10000) throw DomainError("n_max must lie in [2, 10000]");
    if (options.conjectural_dim_a && *options.conjectural_dim_a < 1) {
        throw DomainError("conjectural dim A must be positive");
    }

    ConfigProfile p;
    p.d = d;
    p.n_max = n_max;
    p.dagger_forced = !dagger && r2 == 2;
    p.dagger = dagger || p.dagger_forced;
    p.conjectural_dim_a = options.conjectural_dim_a;
    if (p.dagger_forced) p.applied.emplace_back("r(2) = 2 forces the dagger condition");

    const Int cap = d - 1;
    p.r_lb.push_back(r2);
    p.s_lb.push_back(r2 - 1);
    p.rprime_lb.push_back(2);
    p.sprime_lb.push_back(1);

    for (int n = 3; n <= n_max; ++n) {
        const Int r_prev = p.r_lb.back();
        const Int s_prev = p.s_lb.back();

        Int sp = s_prev;
        if (p.dagger) sp = std::max(sp, std::min(s_prev + 1, cap));
        Int rp = r_prev + 1 + sp;

        if (!p.dagger && n == 3 && r2 >= 3 && d >= 4 && rp < 7) {
            rp = 7;
            p.applied.emplace_back("r'(3) >= 7");
        }
        if (!p.dagger && n == 4 && d >= 5 && d % 2 == 1 && rp < 12) {
            rp = 12;
            p.applied.emplace_back("r'(4) >= 12");
        }
        sp = rp - r_prev - 1;

        Int s = std::max(sp, s_prev);
        if (p.conjectural_dim_a) s = std::max(s, std::min(s_prev + *p.conjectural_dim_a, cap));
        if (s > cap) throw std::logic_error("divisor span bound exceeded d - 1");

        p.sprime_lb.push_back(sp);
        p.rprime_lb.push_back(rp);
        p.s_lb.push_back(s);
        p.r_lb.push_back(r_prev + 1 + s);
    }
    return p;
}

GenusBoundReport genus_bound_main(Int d) {
    require_degree(d, 2);
    GenusBoundReport rep;
    rep.d = d;
    rep.m = (d + 1) / 2 - 1;
    rep.epsilon = 3 * d - 1 - 6 * rep.m;
    rep.bound_dagger = d * (d - 1) / 2 + 1;
    rep.bound_no_dagger = 3 * rep.m * (rep.m - 1) + rep.m * rep.epsilon;
    if (d >= 3) rep.bound_nonDF_dagger = genus_bound_nonDF(d);
    if (rep.bound_dagger >= rep.bound_no_dagger) {
        rep.overall = rep.bound_dagger;
        rep.governing = GoverningCase::dagger;
    } else {
        rep.overall = rep.bound_no_dagger;
        rep.governing = GoverningCase::no_dagger;
    }
    return rep;
}

Int genus_bound_nonDF(Int d) {
    require_degree(d, 3);
    return (d - 1) * (d - 2) / 2 + 2;
}

Int genus_bound_special(Int e, Int r, Int d) {
    if (e < 1) throw DomainError("curve degree e must be positive");
    if (r < 2) throw DomainError("ambient dimension r must be at least 2");
    require_degree(d, 1);
    if (e > std::numeric_limits<Int>::max() / 4 || r > std::numeric_limits<Int>::max() / 4) {
        throw DomainError("genus_bound_special arguments too large");
    }
    return castelnuovo_pi(e + 2 * d, 2 * r + 1);
}

std::optional<Int> first_no_dagger_dominant(Int limit) {
    for (Int d = 2; d <= std::min(limit, kMaxDegree); ++d) {
        const auto rep = genus_bound_main(d);
        if (rep.bound_no_dagger > rep.bound_dagger) return d;
    }
    return std::nullopt;
}

GonalityBounds gonality_bounds(Int d, bool is_elliptic_cover, bool is_DF, Int g) {
    require_degree(d, 2);
    if (g < 2) throw DomainError("gonality bounds need genus g >= 2");
    GonalityBounds b;
    b.airr_based = is_elliptic_cover ? 2 * d : (is_DF ? 2 * d - 1 : 2 * d - 2);
    b.genus_based_geometric = (g + 3) / 2;
    b.genus_based_arithmetic = 2 * g - 2;
    b.combined = std::min(b.airr_based, b.genus_based_geometric);
    return b;
}

std::optional<Int> riemann_hurwitz_min_degree(Int source_genus, Int ramified_points) {
    if (source_genus < 0 || ramified_points < 0) {
        throw DomainError("genus and number of ramified points must be nonnegative");
    }
    // 2g - 2 = -2 deg + sum (e_P - 1) >= -2 deg + t (deg - 1), i.e.
    // (t - 2) deg <= 2g - 2 + t.
    if (ramified_points <= 2) return std::nullopt;
    const Wide bound = (Wide{2} * source_genus - 2 + ramified_points) / (ramified_points - 2);
    return narrow(bound, "riemann_hurwitz_min_degree");
}

bool riemann_hurwitz_check(Int g_X, Int g_Y, Int deg, Int ram_excess) {
    if (g_X < 0 || g_Y < 0 || ram_excess < 0) {
        throw DomainError("genera and ramification must be nonnegative");
    }
    if (deg < 1) throw DomainError("degree must be positive");
    const Wide lhs = Wide{2} * g_X - 2;
    const Wide rhs = Wide{deg} * (Wide{2} * g_Y - 2) + ram_excess;
    return lhs == rhs;
}

std::string to_string(GoverningCase c) {
    return c == GoverningCase::dagger ? "dagger" : "no_dagger";
}

}  // namespace lowdeg::numerology
