#pragma once

// Integer bilinear pairings s: Z^2 x Z^2 -> Z^2 written as (A1|A2), with z_j = x^T A_j y,
// the four constructor families and the (eps1; eps2) type classifier.

#include "normed_forms/forms.hpp"

#include <ostream>
#include <string>

namespace nforms {

struct Pairing {
    Mat2 a1;
    Mat2 a2;

    friend bool operator==(const Pairing&, const Pairing&) = default;
    friend Pairing operator-(const Pairing& s) { return {-s.a1, -s.a2}; }
};

inline std::ostream& operator<<(std::ostream& os, const Pairing& s) {
    return os << '(' << s.a1 << '|' << s.a2 << ')';
}

struct PairingType {
    int eps1 = 1;
    int eps2 = 1;

    friend bool operator==(const PairingType&, const PairingType&) = default;
};

inline constexpr PairingType kPlusPlus{1, 1};
inline constexpr PairingType kMinusPlus{-1, 1};
inline constexpr PairingType kPlusMinus{1, -1};
inline constexpr PairingType kMinusMinus{-1, -1};

inline std::string to_string(const PairingType& t) {
    return std::string("(") + (t.eps1 > 0 ? '+' : '-') + ',' + (t.eps2 > 0 ? '+' : '-') + ')';
}

/// Parameters of the three plus-type families; the form is r * (m, k, n) with r = (m,k,n)(p,q).
struct PlusParams {
    Int m{0}, k{0}, n{0}, p{0}, q{0};

    Form base() const { return {m, k, n}; }
    Int r() const { return m * p * p + k * p * q + n * q * q; }

    friend bool operator==(const PlusParams&, const PlusParams&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const PlusParams& P) {
    return os << "(m,k,n,p,q)=(" << P.m << ',' << P.k << ',' << P.n << ',' << P.p << ',' << P.q << ')';
}

struct Quadruple {
    Int a{0}, b{0}, c{0}, d{0};

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
    Quadruple operator-() const { return {-a, -b, -c, -d}; }
};

inline std::ostream& operator<<(std::ostream& os, const Quadruple& Q) {
    return os << '(' << Q.a << ',' << Q.b << ',' << Q.c << ',' << Q.d << ')';
}

struct PairingWithForm {
    Pairing pairing;
    Form form;
};

inline Vec2 eval(const Pairing& s, const Vec2& x, const Vec2& y) {
    return {bilinear(x, s.a1, y), bilinear(x, s.a2, y)};
}

/// Plus-type families, variant 1, 2, 3 of types (+,+), (-,+), (+,-). Variants 2 and 3 are
/// each other with the arguments swapped; the variant number follows the type.
inline PairingWithForm make_splus(int variant, const PlusParams& P) {
    const Int& m = P.m;
    const Int& k = P.k;
    const Int& n = P.n;
    const Int& p = P.p;
    const Int& q = P.q;
    Pairing s;
    switch (variant) {
    case 1:
        s.a1 = {m * p + k * q, n * q, n * q, -n * p};
        s.a2 = {-m * q, m * p, m * p, n * q + k * p};
        break;
    case 2:
        s.a1 = {m * p, -n * q, n * q + k * p, n * p};
        s.a2 = {m * q, m * p + k * q, -m * p, n * q};
        break;
    case 3:
        s.a1 = {m * p, n * q + k * p, -n * q, n * p};
        s.a2 = {m * q, -m * p, m * p + k * q, n * q};
        break;
    default:
        throw PreconditionError("make_splus: variant must be 1, 2 or 3");
    }
    return {s, P.r() * P.base()};
}

inline Form s4_form(const Quadruple& Q) {
    return {Q.a * Q.a - Q.c * Q.d, Q.a * Q.c - Q.b * Q.d, Q.c * Q.c - Q.a * Q.b};
}

/// The (-,-) family: ((a,c;c,b) | (-d,-a;-a,-c)).
inline PairingWithForm make_s4(const Quadruple& Q) {
    Pairing s{{Q.a, Q.c, Q.c, Q.b}, {-Q.d, -Q.a, -Q.a, -Q.c}};
    return {s, s4_form(Q)};
}

/// f(s(x,y)) = f(x) f(y) as a polynomial identity. Both sides have degree <= 2 in each of
/// x1, x2, y1, y2, so agreement on {0,1,2}^4 decides it.
inline bool is_normed(const Pairing& s, const Form& f) {
    for (int x1 = 0; x1 <= 2; ++x1)
        for (int x2 = 0; x2 <= 2; ++x2) {
            const Vec2 x{x1, x2};
            const Int fx = eval(f, x);
            for (int y1 = 0; y1 <= 2; ++y1)
                for (int y2 = 0; y2 <= 2; ++y2) {
                    const Vec2 y{y1, y2};
                    if (eval(f, eval(s, x, y)) != fx * eval(f, y)) return false;
                }
        }
    return true;
}

/// det(x -> s(x, y)) as a quadratic form in y.
inline Form left_determinant_form(const Pairing& s) {
    auto det_at = [&](const Vec2& y) {
        Vec2 r1 = s.a1 * y;
        Vec2 r2 = s.a2 * y;
        return Int(r1.x1 * r2.x2 - r1.x2 * r2.x1);
    };
    Int cm = det_at({1, 0});
    Int cn = det_at({0, 1});
    return {cm, det_at({1, 1}) - cm - cn, cn};
}

/// det(y -> s(x, y)) as a quadratic form in x.
inline Form right_determinant_form(const Pairing& s) {
    auto det_at = [&](const Vec2& x) {
        Vec2 r1 = s.a1.transpose() * x;
        Vec2 r2 = s.a2.transpose() * x;
        return Int(r1.x1 * r2.x2 - r1.x2 * r2.x1);
    };
    Int cm = det_at({1, 0});
    Int cn = det_at({0, 1});
    return {cm, det_at({1, 1}) - cm - cn, cn};
}

/// The type (eps1; eps2) of a normed pairing over a nondegenerate form, from the identities
/// det(x -> s(x,y)) = eps1 f(y) and det(y -> s(x,y)) = eps2 f(x).
inline PairingType type_of(const Pairing& s, const Form& f) {
    require_nondegenerate(f, "type_of");
    auto sign_against = [&](const Form& d, const char* which) {
        if (d == f) return 1;
        if (d == -f) return -1;
        std::ostringstream os;
        os << "type_of: " << which << " determinant " << d << " is not +-" << f;
        throw PreconditionError(os.str());
    };
    return {sign_against(left_determinant_form(s), "left"), sign_against(right_determinant_form(s), "right")};
}

/// s(x,y) = s(y,x): both A_j symmetric.
inline bool is_commutative(const Pairing& s) { return s.a1.is_symmetric() && s.a2.is_symmetric(); }

/// Operators M_e1, M_e2 of y -> s(e_i, y): row i of A1 over row i of A2.
inline Mat2 left_operator(const Pairing& s, int i) {
    return {s.a1(i, 0), s.a1(i, 1), s.a2(i, 0), s.a2(i, 1)};
}

inline bool is_traceless(const Pairing& s) {
    return left_operator(s, 0).trace() == 0 && left_operator(s, 1).trace() == 0;
}

/// Pairing with M_e1 = [[a,c],[-d,-a]], M_e2 = [[c,b],[-a,-c]].
inline Pairing from_commutative_traceless(const Quadruple& Q) {
    const Mat2 m1{Q.a, Q.c, -Q.d, -Q.a};
    const Mat2 m2{Q.c, Q.b, -Q.a, -Q.c};
    return {{m1.a11, m1.a12, m2.a11, m2.a12}, {m1.a21, m1.a22, m2.a21, m2.a22}};
}

/// Reads (a,b,c,d) off a commutative traceless pairing.
inline Quadruple quadruple_of(const Pairing& s) {
    if (!is_commutative(s) || !is_traceless(s)) throw PreconditionError("quadruple_of: pairing is not commutative and traceless");
    return {s.a1.a11, s.a1.a22, s.a1.a12, -s.a2.a11};
}

/// Recovers f from s(x, s(x, y)) = f(x) y; checked on {0,1,2}^2 x {e1, e2}.
inline Form derive_form_minus_minus(const Pairing& s) {
    if (!is_commutative(s) || !is_traceless(s)) {
        throw PreconditionError("derive_form_minus_minus: pairing is not commutative and traceless");
    }
    auto scalar_at = [&](const Vec2& x) {
        Vec2 w1 = eval(s, x, eval(s, x, Vec2{1, 0}));
        Vec2 w2 = eval(s, x, eval(s, x, Vec2{0, 1}));
        if (w1.x2 != 0 || w2.x1 != 0 || w1.x1 != w2.x2) {
            throw PreconditionError("derive_form_minus_minus: s(x, s(x, .)) is not scalar");
        }
        return w1.x1;
    };
    Int m = scalar_at({1, 0});
    Int n = scalar_at({0, 1});
    Form f{m, scalar_at({1, 1}) - m - n, n};
    for (int x1 = 0; x1 <= 2; ++x1)
        for (int x2 = 0; x2 <= 2; ++x2) {
            if (scalar_at({x1, x2}) != eval(f, {x1, x2})) {
                throw PreconditionError("derive_form_minus_minus: s(x, s(x, .)) is not quadratic in x");
            }
        }
    return f;
}

} // namespace nforms
