#pragma once

// The trigroup law [x,y,e] = -F(x,y) e + F(x,e) y + F(y,e) x, with F the polarization of f.

#include "normed_forms/pairings.hpp"

#include <array>

namespace nforms {

/// Integer vector with f([x,y,e]) = f(x) f(y) f(e). Computed from the doubled polarization;
/// the halving is exact for every integer form.
inline Vec2 bracket(const Form& f, const Vec2& x, const Vec2& y, const Vec2& e) {
    const DoubledPolarization F2(f);
    const Vec2 doubled = F2(x, e) * y + F2(y, e) * x - F2(x, y) * e;
    if (!divides(Int(2), doubled.x1) || !divides(Int(2), doubled.x2)) {
        throw InternalError("bracket: doubled trigroup value is not even");
    }
    return {doubled.x1 / 2, doubled.x2 / 2};
}

/// Decides f([x,y,e]) = f(x) f(y) f(e) as a polynomial identity (degree <= 2 in each of the
/// six coordinates, so the grid {0,1,2}^6 suffices).
inline bool bracket_multiplicativity_check(const Form& f) {
    std::array<Vec2, 9> grid;
    std::array<Int, 9> values;
    for (int i = 0; i < 9; ++i) {
        grid[i] = Vec2{i % 3, i / 3};
        values[i] = eval(f, grid[i]);
    }
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            for (int l = 0; l < 9; ++l) {
                if (eval(f, bracket(f, grid[i], grid[j], grid[l])) != values[i] * values[j] * values[l]) return false;
            }
    return true;
}

struct AnchorPairings {
    Int r;     ///< g(e0)
    Form form; ///< r * g
    PairingWithForm s1; ///< [x, y, e0] / r
    PairingWithForm s2; ///< [y, e0, x] / r
    PairingWithForm s3; ///< [x, e0, y] / r

    const PairingWithForm& variant(int v) const { return v == 1 ? s1 : (v == 2 ? s2 : s3); }
};

namespace detail {

template <class Law>
Pairing pairing_from_law(Law&& law, const Int& r) {
    const std::array<Vec2, 2> basis{Vec2{1, 0}, Vec2{0, 1}};
    Pairing s;
    for (int i = 0; i < 2; ++i)
        for (int l = 0; l < 2; ++l) {
            Vec2 z = law(basis[i], basis[l]);
            if (!divides(r, z.x1) || !divides(r, z.x2)) {
                throw InternalError("pairing_from_anchor: trigroup value not divisible by r");
            }
            s.a1.at(i, l) = z.x1 / r;
            s.a2.at(i, l) = z.x2 / r;
        }
    return s;
}

} // namespace detail

/// The three normed pairings for f = r g obtained from the trigroup law of f anchored at e0,
/// where r = g(e0) must be nonzero.
inline AnchorPairings pairing_from_anchor(const Form& g, const Vec2& e0) {
    const Int r = eval(g, e0);
    if (r == 0) throw PreconditionError("pairing_from_anchor: g(e0) = 0");
    const Form f = r * g;
    auto law = [&](const Vec2& x, const Vec2& y, const Vec2& e) { return bracket(f, x, y, e); };
    AnchorPairings out;
    out.r = r;
    out.form = f;
    out.s1 = {detail::pairing_from_law([&](const Vec2& x, const Vec2& y) { return law(x, y, e0); }, r), f};
    out.s2 = {detail::pairing_from_law([&](const Vec2& x, const Vec2& y) { return law(y, e0, x); }, r), f};
    out.s3 = {detail::pairing_from_law([&](const Vec2& x, const Vec2& y) { return law(x, e0, y); }, r), f};
    return out;
}

} // namespace nforms
