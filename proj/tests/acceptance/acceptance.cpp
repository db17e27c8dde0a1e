// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lowdeg/classifier.hpp"
#include "lowdeg/config_lab.hpp"
#include "lowdeg/numerology.hpp"
#include "lowdeg/picard.hpp"

namespace {

using lowdeg::numerology::Int;
namespace num = lowdeg::numerology;
namespace pic = lowdeg::picard;
namespace cfg = lowdeg::config;
namespace la = lowdeg::linalg;

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

Verdict ac1_castelnuovo() {
    Verdict v;
    if (num::castelnuovo_pi(20, 12) != 8) v.fail("pi(20, 12) != 8");
    std::size_t checked = 0;
    for (Int n = 2; n <= 30; ++n) {
        for (Int delta = 1; delta <= 200; ++delta) {
            const Int here = num::castelnuovo_pi(delta, n);
            if (delta > 1 && here < num::castelnuovo_pi(delta - 1, n)) {
                v.fail("decreases in delta at (" + std::to_string(delta) + ", " + std::to_string(n) + ")");
            }
            if (n > 2 && here > num::castelnuovo_pi(delta, n - 1)) {
                v.fail("increases in n at (" + std::to_string(delta) + ", " + std::to_string(n) + ")");
            }
            ++checked;
        }
    }
    if (v.pass) v.detail = "pi(20, 12) = 8; monotone on " + std::to_string(checked) + " pairs";
    return v;
}

Verdict ac2_genus_bounds() {
    Verdict v;
    for (Int d = 2; d <= 50; ++d) {
        const auto rep = num::genus_bound_main(d);
        if (rep.bound_dagger != d * (d - 1) / 2 + 1) v.fail("dagger bound formula at d = " + std::to_string(d));
        if (rep.bound_dagger != pic::df_genus(pic::DFParams(d, 1))) {
            v.fail("dagger bound != DF genus at d = " + std::to_string(d));
        }
    }
    const Int overall3 = num::genus_bound_main(3).overall;
    if (overall3 != 4) v.fail("overall bound for d = 3 is " + std::to_string(overall3));
    if (v.pass) v.detail = "d = 2..50 dagger bound = d(d-1)/2 + 1 = DF genus(d, 1); d = 3 overall 4";
    return v;
}

Verdict ac3_recursion() {
    Verdict v;
    for (int d = 2; d <= 20; ++d) {
        const auto p = num::rs_profile(d, d, true, 2);
        for (int n = 2; n <= d; ++n) {
            if (p.r(n) != n * (n + 1) / 2 - 1) {
                v.fail("r(" + std::to_string(n) + ") = " + std::to_string(p.r(n)) + " for d = " + std::to_string(d));
            }
        }
    }
    std::size_t steps = 0;
    for (int d = 2; d <= 20; ++d) {
        for (int r2 = 2; r2 <= d; ++r2) {
            for (bool dagger : {false, true}) {
                const auto p = num::rs_profile(d, 2 * d, dagger, r2);
                for (int n = 3; n <= p.n_max; ++n, ++steps) {
                    const Int lhs = p.r(n) - p.s(n);
                    const Int mid = p.rprime(n) - p.sprime(n);
                    if (lhs != p.r(n - 1) + 1 || mid != p.r(n - 1) + 1) {
                        v.fail("identity fails at d = " + std::to_string(d) + ", n = " + std::to_string(n));
                    }
                }
                if (!dagger && r2 >= 3 && d >= 4 && p.rprime(3) < 7) {
                    v.fail("r'(3) < 7 at d = " + std::to_string(d) + ", r2 = " + std::to_string(r2));
                }
                if (!dagger && r2 >= 3 && d >= 5 && d % 2 == 1 && p.rprime(4) < 12) {
                    v.fail("r'(4) < 12 at d = " + std::to_string(d) + ", r2 = " + std::to_string(r2));
                }
            }
        }
    }
    if (v.pass) {
        v.detail = "r(n) = n(n+1)/2 - 1 for d <= 20; identity on " + std::to_string(steps) +
                   " steps; r'(3) >= 7, r'(4) >= 12 without dagger";
    }
    return v;
}

Verdict ac4_lattice() {
    Verdict v;
    const auto hh = static_cast<std::size_t>(pic::pair(pic::kH, pic::kH));
    const auto hf = static_cast<std::size_t>(pic::pair(pic::kH, pic::kF));
    const auto ff = static_cast<std::size_t>(pic::pair(pic::kF, pic::kF));
    for (int n = 5; n <= 31; ++n) {
        const auto rep = cfg::incidence_pairing_check(cfg::Sym2GroupModel(n));
        if (!rep.ok()) v.fail("pairing violations at N = " + std::to_string(n) + ": " + rep.violations.front());
        if (rep.hh != hh || rep.hf != hf || rep.ff != ff) {
            v.fail("counts disagree with the lattice at N = " + std::to_string(n));
        }
    }
    const pic::SurfaceClass K = pic::canonical_class();
    for (Int a = -50; a <= 50; ++a) {
        for (Int b = -50; b <= 50; ++b) {
            const pic::SurfaceClass c{a, b};
            const Int twice = pic::pair(c, c) + pic::pair(c, K);
            if (twice % 2 != 0 || 2 * (pic::adjunction_genus(c) - 1) != twice) {
                v.fail("adjunction not integral at " + c.to_string());
            }
        }
    }
    // DF classes need d >= 2; m = d = 1 is outside their domain.
    for (Int d = 2; d <= 30; ++d) {
        for (Int m = 1; m <= d; ++m) {
            const auto cls = pic::df_class(pic::DFParams(d, m));
            if (!pic::is_effective(cls) || pic::pair(cls, pic::kH) != d) {
                v.fail("DF class " + cls.to_string() + " fails at d = " + std::to_string(d));
            }
        }
    }
    if (v.pass) v.detail = "N = 5..31 give (1, 1, 0); adjunction integral on [-50, 50]^2; DF classes have H-degree d";
    return v;
}

// Independent construction of valid configurations: a random codimension-3
// subspace plus one random vector per member.
std::vector<la::Scalar> random_vector(std::uint32_t p, int n, std::mt19937_64& rng) {
    std::vector<la::Scalar> out;
    for (int i = 0; i <= n; ++i) out.push_back(la::Scalar::modular(static_cast<std::int64_t>(rng() % p), p));
    return out;
}

Verdict ac5_common_subspace() {
    Verdict v;
    std::mt19937_64 rng(52);
    std::size_t configs = 0;
    for (std::int64_t p : {3, 5, 101}) {
        const auto field = la::Field::prime(p);
        const auto up = static_cast<std::uint32_t>(p);
        for (int n : {4, 5}) {
            const auto cols = static_cast<std::size_t>(n) + 1;
            for (int trial = 0; trial < 500; ++trial) {
                la::Matrix lam(field, 0, cols);
                while (la::rank(lam) != cols - 3) {
                    lam = la::Matrix(field, 0, cols);
                    for (std::size_t i = 0; i + 3 < cols; ++i) lam.append_row(random_vector(up, n, rng));
                }
                const la::ProjSubspace lambda(n, lam);
                const int count = 3 + static_cast<int>(rng() % 4);
                std::vector<la::ProjSubspace> subs;
                for (;;) {
                    subs.clear();
                    la::Matrix all = lam;
                    for (int i = 0; i < count; ++i) {
                        auto gens = lam;
                        const auto extra = random_vector(up, n, rng);
                        gens.append_row(extra);
                        all.append_row(extra);
                        subs.emplace_back(n, gens);
                    }
                    bool valid = la::rank(all) == cols;
                    for (std::size_t i = 0; i < subs.size() && valid; ++i) {
                        valid = subs[i].codim() == 2;
                        for (std::size_t j = i + 1; j < subs.size() && valid; ++j) {
                            valid = la::join(subs[i], subs[j]).dim() < n;
                        }
                    }
                    if (valid) break;
                }
                const auto res = cfg::common_subspace(subs);
                ++configs;
                if (!res.found()) {
                    v.fail("no common subspace over F_" + std::to_string(p) + " in P^" + std::to_string(n));
                    continue;
                }
                bool ok = res.subspace->codim() == 3 && *res.subspace == lambda;
                for (const auto& s : subs) ok = ok && la::contains(s, *res.subspace);
                if (!ok) v.fail("wrong common subspace over F_" + std::to_string(p) + " in P^" + std::to_string(n));
            }
        }
    }
    if (v.pass) v.detail = std::to_string(configs) + " configurations over F_3, F_5, F_101 in P^4, P^5; zero failures";
    return v;
}

Int det3(const std::vector<Int>& a, const std::vector<Int>& b, const std::vector<Int>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Verdict ac6_sylvester_gallai() {
    Verdict v;
    const auto hesse = cfg::sg_check(cfg::hesse_config());
    if (!hesse.is_sylvester_gallai || hesse.max_collinear != 3 || hesse.rich_lines.size() != 12) {
        v.fail("Hesse configuration: max_collinear " + std::to_string(hesse.max_collinear) + ", " +
               std::to_string(hesse.rich_lines.size()) + " lines");
    }
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<Int> coord(-100, 100);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::vector<Int>> raw;
        for (;;) {
            raw.clear();
            for (int i = 0; i < 9; ++i) raw.push_back({coord(rng), coord(rng), coord(rng)});
            bool generic = true;
            for (int i = 0; i < 9 && generic; ++i)
                for (int j = i + 1; j < 9 && generic; ++j)
                    for (int k = j + 1; k < 9 && generic; ++k) generic = det3(raw[i], raw[j], raw[k]) != 0;
            if (generic) break;
        }
        std::vector<la::ProjPoint> pts;
        for (const auto& r : raw) pts.push_back(la::ProjPoint::from_ints(la::Field::rational(), {r[0], r[1], r[2]}));
        const auto rep = cfg::sg_check(cfg::PointConfig(2, pts));
        if (rep.is_sylvester_gallai || !rep.witness || rep.ordinary_pairs.size() != 36) {
            v.fail("generic set " + std::to_string(t) + " not rejected with a witness");
        }
    }
    if (v.pass) v.detail = "Hesse: 12 lines of 3; 100 generic rational 9-point sets rejected with witnesses";
    return v;
}

Verdict ac7_classification() {
    Verdict v;
    std::ifstream in(LOWDEG_FIXTURE_DIR "/table1.tsv");
    if (!in) {
        v.fail("fixture missing");
        return v;
    }
    std::string line;
    int cells = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string d, mode, cell;
        std::getline(fields, d, '\t');
        std::getline(fields, mode, '\t');
        std::getline(fields, cell);
        const auto got = lowdeg::classifier::table_cell(lowdeg::classifier::classify(std::stoi(d), mode == "arithmetic"));
        if (got != cell) v.fail("d = " + d + " " + mode + ": got '" + got + "', expected '" + cell + "'");
        ++cells;
    }
    if (cells != 8) v.fail("fixture has " + std::to_string(cells) + " cells");
    for (int d = 2; d <= 5; ++d) {
        const auto rep = lowdeg::classifier::audit(d);
        if (!rep.passed()) v.fail("audit fails for d = " + std::to_string(d));
    }
    const auto five = lowdeg::classifier::audit(5);
    if (five.sporadic_cap != num::castelnuovo_pi(20, 12) || five.sporadic_cap != Int{8}) {
        v.fail("d = 5 sporadic cap is not pi(20, 12) = 8");
    }
    if (v.pass) v.detail = "8 cells match the fixture; audits pass for d = 2..5; d = 5 cap 8";
    return v;
}

Verdict ac8_riemann_hurwitz() {
    Verdict v;
    const auto deg = num::riemann_hurwitz_min_degree(1, 4);
    if (deg != Int{2}) v.fail("genus 1, 4 totally ramified points gives " + (deg ? std::to_string(*deg) : "none"));
    if (v.pass) v.detail = "genus 1 source over 4 totally ramified points: degree 2";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"AC1 castelnuovo", ac1_castelnuovo},
        {"AC2 genus bounds", ac2_genus_bounds},
        {"AC3 recursion", ac3_recursion},
        {"AC4 lattice", ac4_lattice},
        {"AC5 common subspace", ac5_common_subspace},
        {"AC6 sylvester-gallai", ac6_sylvester_gallai},
        {"AC7 classification", ac7_classification},
        {"AC8 riemann-hurwitz", ac8_riemann_hurwitz},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << '\n';
        if (!v.pass) ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
