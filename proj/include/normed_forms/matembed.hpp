#pragma once

// Two-dimensional sublattices span(A, rE) of Mat2(Z), the determinant-normed products
// S1..S4 and the integer pairings they induce in the basis (A, rE).

#include "normed_forms/pairings.hpp"

#include <optional>
#include <utility>
#include <variant>

namespace nforms {

inline Mat2 adjugate(const Mat2& a) { return a.adjugate(); }

/// S1 = AB, S2 = adj(A) B, S3 = A adj(B), S4 = adj(AB).
inline Mat2 S(int k, const Mat2& a, const Mat2& b) {
    switch (k) {
    case 1: return a * b;
    case 2: return a.adjugate() * b;
    case 3: return a * b.adjugate();
    case 4: return (a * b).adjugate();
    default: throw PreconditionError("S: k must be 1, 2, 3 or 4");
    }
}

/// span_Z(A, rE). A is never scalar and r > 0.
struct Sublattice {
    Mat2 a;
    Int r{1};

    Sublattice() = default;
    Sublattice(Mat2 a_, Int r_) : a(std::move(a_)), r(std::move(r_)) {
        if (r <= 0) throw PreconditionError("Sublattice: r must be positive");
        if (a.is_scalar()) throw PreconditionError("Sublattice: A is scalar, so (A, rE) has rank 1");
    }

    Mat2 scalar() const { return Mat2::scalar(r); }
    Mat2 at(const Vec2& x) const { return x.x1 * a + x.x2 * scalar(); }

    friend bool operator==(const Sublattice&, const Sublattice&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Sublattice& L) {
    return os << "span(" << L.a << ", " << L.r << "E)";
}

/// Rational coordinates (x1, x2) with X = x1 A + x2 rE, or nullopt when X is outside the
/// rational span.
inline std::optional<std::pair<Rat, Rat>> coordinates(const Sublattice& L, const Mat2& X) {
    const Mat2& A = L.a;
    Rat x1;
    if (A.a12 != 0) x1 = make_rat(X.a12, A.a12);
    else if (A.a21 != 0) x1 = make_rat(X.a21, A.a21);
    else x1 = make_rat(X.a11 - X.a22, A.a11 - A.a22);
    Rat x2 = (Rat(X.a11) - x1 * A.a11) / L.r;
    x2.canonicalize();
    auto same = [](const Rat& lhs, const Int& rhs) { return lhs == Rat(rhs); };
    if (!same(x1 * A.a12, X.a12) || !same(x1 * A.a21, X.a21) || !same(x1 * A.a22 + x2 * L.r, X.a22)) {
        return std::nullopt;
    }
    return std::make_pair(x1, x2);
}

inline std::optional<Vec2> integer_coordinates(const Sublattice& L, const Mat2& X) {
    auto c = coordinates(L, X);
    if (!c || !is_integer(c->first) || !is_integer(c->second)) return std::nullopt;
    return Vec2{to_int(c->first), to_int(c->second)};
}

inline bool contains(const Sublattice& L, const Mat2& X) { return integer_coordinates(L, X).has_value(); }

/// S_k(x, y) in L for x, y in {A, rE}; bilinearity makes this sufficient.
inline bool check_stability(const Sublattice& L, int k) {
    const Mat2 basis[2] = {L.a, L.scalar()};
    for (const Mat2& x : basis)
        for (const Mat2& y : basis)
            if (!contains(L, S(k, x, y))) return false;
    return true;
}

/// The stability criterion in closed form: r | det(A) for k <= 3, r | tr(A)^2 - det(A) for k = 4.
inline bool stability_criterion(const Sublattice& L, int k) {
    if (k < 1 || k > 4) throw PreconditionError("stability_criterion: k must be 1, 2, 3 or 4");
    const Int det = L.a.det();
    return k <= 3 ? divides(L.r, det) : divides(L.r, L.a.trace() * L.a.trace() - det);
}

/// x -> det(x1 A + x2 rE) = (det A, r tr A, r^2).
inline Form determinant_form(const Sublattice& L) {
    return {L.a.det(), L.r * L.a.trace(), L.r * L.r};
}

namespace detail {

inline void normalize_sublattice_basis(Mat2& a, const Int& r) {
    // sign: first nonzero of (a21, a12, a22 - a11) positive
    const Int lead = a.a21 != 0 ? a.a21 : (a.a12 != 0 ? a.a12 : a.a22 - a.a11);
    if (lead < 0) a = -a;
    const Int t = floor_div(a.a11, r);
    if (t != 0) a = a - Mat2::scalar(t * r);
}

} // namespace detail

/// Canonical basis (A, rE) of span(gen1, gen2): r is the least positive scalar in the span,
/// A is sign-normalized with 0 <= a11 < r.
inline Sublattice canonicalize(const Mat2& g1, const Mat2& g2, int k) {
    if (k < 1 || k > 4) throw PreconditionError("canonicalize: k must be 1, 2, 3 or 4");
    const Int minors[6] = {g1.a11 * g2.a12 - g1.a12 * g2.a11, g1.a11 * g2.a21 - g1.a21 * g2.a11,
                           g1.a11 * g2.a22 - g1.a22 * g2.a11, g1.a12 * g2.a21 - g1.a21 * g2.a12,
                           g1.a12 * g2.a22 - g1.a22 * g2.a12, g1.a21 * g2.a22 - g1.a22 * g2.a21};
    bool rank2 = false;
    for (const Int& mnr : minors) rank2 = rank2 || mnr != 0;
    if (!rank2) throw PreconditionError("canonicalize: generators do not span a rank-2 lattice");
    if (k <= 3 && g1.det() == 0 && g2.det() == 0 && (g1 + g2).det() == 0) {
        throw PreconditionError("canonicalize: null sublattice (determinant vanishes identically)");
    }

    // x g1 + y g2 is scalar iff it is killed by the three rows below
    const Int rows[3][2] = {{g1.a12, g2.a12}, {g1.a21, g2.a21}, {g1.a11 - g1.a22, g2.a11 - g2.a22}};
    std::optional<std::pair<Int, Int>> kernel;
    for (const auto& row : rows) {
        if (row[0] == 0 && row[1] == 0) continue;
        const Int g = gcd(row[0], row[1]);
        kernel = std::make_pair(Int(row[1] / g), Int(-row[0] / g));
        break;
    }
    if (!kernel) throw PreconditionError("canonicalize: both generators are scalar");
    auto [x, y] = *kernel;
    for (const auto& row : rows) {
        if (row[0] * x + row[1] * y != 0) throw PreconditionError("canonicalize: span contains no nonzero scalar matrix");
    }
    Mat2 scalar = x * g1 + y * g2;
    if (scalar.a11 < 0) {
        x = -x;
        y = -y;
        scalar = -scalar;
    }
    const Int r = scalar.a11;
    Int s, t;
    xgcd(x, y, s, t); // s x + t y = 1, so (x, y), (-t, s) is a unimodular change of basis
    Mat2 a = (-t) * g1 + s * g2;
    detail::normalize_sublattice_basis(a, r);
    Sublattice L(a, r);
    if (!check_stability(L, k)) throw PreconditionError("canonicalize: span is not stable under S_k");
    return L;
}

using InducedParameters = std::variant<PlusParams, Quadruple>;

struct InducedPairing {
    Pairing pairing;
    Form form;              ///< determinant form (det A, r tr A, r^2)
    InducedParameters params; ///< PlusParams for k <= 3, Quadruple for k = 4
};

/// S_k restricted to L, written in the basis (A, rE), with the matching family parameters.
/// For k <= 3 the pairing equals make_splus(k, (det/r, tr, r, 0, 1)); for k = 4 it equals
/// make_s4(-tr, 0, -r, -(tr^2 - det)/r). Both equalities are checked.
inline InducedPairing induced_pairing(const Sublattice& L, int k) {
    if (k < 1 || k > 4) throw PreconditionError("induced_pairing: k must be 1, 2, 3 or 4");
    if (!check_stability(L, k)) throw PreconditionError("induced_pairing: sublattice is not stable under S_k");
    const Mat2 basis[2] = {L.a, L.scalar()};
    Pairing s;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto z = integer_coordinates(L, S(k, basis[i], basis[j]));
            if (!z) throw InternalError("induced_pairing: product of basis elements left the lattice");
            s.a1.at(i, j) = z->x1;
            s.a2.at(i, j) = z->x2;
        }
    const Form f = determinant_form(L);
    const Int det = L.a.det();
    const Int tr = L.a.trace();
    if (k <= 3) {
        if (!divides(L.r, det)) throw InternalError("induced_pairing: r does not divide det(A)");
        PlusParams P{det / L.r, tr, L.r, 0, 1};
        if (make_splus(k, P).pairing != s) throw InternalError("induced_pairing: pairing differs from the plus family");
        return {s, f, P};
    }
    const Int gap = tr * tr - det;
    if (!divides(L.r, gap)) throw InternalError("induced_pairing: r does not divide tr^2 - det");
    Quadruple Q{-tr, 0, -L.r, -gap / L.r};
    if (make_s4(Q).pairing != s) throw InternalError("induced_pairing: pairing differs from the (-,-) family");
    return {s, f, Q};
}

} // namespace nforms
