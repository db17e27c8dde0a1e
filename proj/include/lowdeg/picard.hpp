#pragma once

#include <cstdint>
#include <string>

namespace lowdeg::picard {

using Int = std::int64_t;

/// Numerical class aH + bF on the symmetric square of an elliptic curve.
/// H is the class of the divisors containing a fixed point, F the fiber
/// class of the addition map.
struct SurfaceClass {
    Int a = 0;
    Int b = 0;

    friend SurfaceClass operator+(SurfaceClass x, SurfaceClass y) { return {x.a + y.a, x.b + y.b}; }
    friend SurfaceClass operator-(SurfaceClass x, SurfaceClass y) { return {x.a - y.a, x.b - y.b}; }
    friend SurfaceClass operator*(Int k, SurfaceClass x) { return {k * x.a, k * x.b}; }
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

    std::string to_string() const;
};

inline constexpr SurfaceClass kH{1, 0};
inline constexpr SurfaceClass kF{0, 1};

/// Intersection pairing determined by H.H = 1, H.F = 1, F.F = 0.
Int pair(SurfaceClass x, SurfaceClass y);

/// K = -2H + F.
SurfaceClass canonical_class();

/// Both cones are {aH + bF : a >= 0, a + 2b >= 0}, boundary included.
bool is_effective(SurfaceClass c);
bool is_nef(SurfaceClass c);

/// Arithmetic genus 1 + (C.C + C.K)/2 of a curve in class C.
Int adjunction_genus(SurfaceClass c);

/// Debarre-Fahlaoui class parameters; the constructor enforces
/// d >= 2 and 1 <= m <= d.
class DFParams {
public:
    DFParams(Int d, Int m);
    Int d() const { return d_; }
    Int m() const { return m_; }

private:
    Int d_;
    Int m_;
};

/// (d + m)H - mF.
SurfaceClass df_class(const DFParams& p);

/// adjunction_genus(df_class(p)).
Int df_genus(const DFParams& p);

/// m < d/2: curves in the class have geometric gonality above d.
bool df_gonality_guard(const DFParams& p);

/// Very ampleness is only known for m = 1; other classes are not certified.
bool df_very_ample_certified(const DFParams& p);

}  // namespace lowdeg::picard
