#include "lowdeg/picard.hpp"

#include "lowdeg/error.hpp"

namespace lowdeg::picard {

namespace {

// Keeps a^2 and friends well inside 64 bits.
constexpr Int kMaxCoefficient = Int{1} << 30;

void require_small(SurfaceClass c) {
    if (c.a > kMaxCoefficient || c.a < -kMaxCoefficient || c.b > kMaxCoefficient ||
        c.b < -kMaxCoefficient) {
        throw DomainError("class " + c.to_string() + " has coefficients beyond 2^30");
    }
}

}  // namespace

std::string SurfaceClass::to_string() const {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

Int pair(SurfaceClass x, SurfaceClass y) {
    require_small(x);
    require_small(y);
    return x.a * y.a + x.a * y.b + y.a * x.b;
}

SurfaceClass canonical_class() { return {-2, 1}; }

bool is_effective(SurfaceClass c) { return c.a >= 0 && c.a + 2 * c.b >= 0; }

bool is_nef(SurfaceClass c) { return is_effective(c); }

Int adjunction_genus(SurfaceClass c) {
    const Int twice = pair(c, c) + pair(c, canonical_class());
    // C.(C + K) = (a - 1)(a + 2b) is always even.
    return 1 + twice / 2;
}

DFParams::DFParams(Int d, Int m) : d_(d), m_(m) {
    if (d < 2 || d > kMaxCoefficient / 2) throw DomainError("DF degree d must lie in [2, 2^29]");
    if (m < 1 || m > d) {
        throw DomainError("DF parameter m = " + std::to_string(m) + " outside [1, " +
                          std::to_string(d) + "]");
    }
}

SurfaceClass df_class(const DFParams& p) { return {p.d() + p.m(), -p.m()}; }

Int df_genus(const DFParams& p) { return adjunction_genus(df_class(p)); }

bool df_gonality_guard(const DFParams& p) { return 2 * p.m() < p.d(); }

bool df_very_ample_certified(const DFParams& p) { return p.m() == 1; }

}  // namespace lowdeg::picard
