#pragma once

// Which of the four pairing types a form admits. Positive definite answers are decisions;
// indefinite ones come from box-bounded searches and say so.
//
// The (-,-) curve: for mn != 0 every integer quadruple of f lies on
//   a = sqrt(m) s(3t+p)/s(p),            b = (n/sqrt(m)) s(t+p)(4c^2(t+p)-1)/s(p),
//   c = sqrt(n) s(3t+2p)/s(p),           d = (m/sqrt(n)) s(t)(4c^2(t)-1)/s(p),
// or its negation, with k = 2 sqrt(mn) c(p). (s, c) = (sin, cos) for positive definite f
// and (sinh, cosh) for indefinite f.

#include "normed_forms/pairings.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace nforms {

enum class Decision { Decided, BoundedSearchOnly };

inline std::string to_string(Decision d) { return d == Decision::Decided ? "decided" : "bounded_search_only"; }

enum class Branch { Plus, Minus };

struct CurvePoint {
    double theta = 0;
    double a = 0, b = 0, c = 0, d = 0;
};

/// Real 2x2 matrix [[alpha, beta], [gamma, delta]] of an oriented map phi: R^2 -> A with
/// f = |phi|^2, i.e. alpha^2 + eps gamma^2 = m, beta^2 + eps delta^2 = n,
/// 2 (alpha beta + eps gamma delta) = k.
struct EmbeddingMatrix {
    double alpha = 0, beta = 0, gamma = 0, delta = 0;
    int eps = 1;
};

using RealQuadruple = std::array<double, 4>;

namespace detail {

struct CurveParams {
    double sm, sn;    // sqrt(m), sqrt(n)
    double m, n;
    double phi, sphi; // phi and s(phi)
    bool hyperbolic;
    bool flip;        // indefinite with k < 0: computed for |k|, then (a,b,c,d) -> (a,b,-c,-d)
};

inline CurveParams curve_params(const Form& f) {
    require_nondegenerate(f, "curve");
    if (f.m == 0 || f.n == 0) throw PreconditionError("curve: requires m n != 0");
    const Definiteness def = classify_definiteness(f);
    if (def == Definiteness::NegativeDefinite) throw PreconditionError("curve: negative definite forms admit no normed pairing");
    if (f.m < 0 || f.n < 0) throw PreconditionError("curve: the hyperbolic branch requires m > 0 and n > 0");
    CurveParams p{};
    p.m = f.m.get_d();
    p.n = f.n.get_d();
    p.sm = std::sqrt(p.m);
    p.sn = std::sqrt(p.n);
    const double kd = f.k.get_d();
    const double ratio = std::abs(kd) / (2.0 * p.sm * p.sn);
    p.hyperbolic = def == Definiteness::Indefinite;
    if (p.hyperbolic) {
        p.phi = std::acosh(ratio);
        p.sphi = std::sinh(p.phi);
        p.flip = f.k < 0;
    } else {
        const double sk = f.k < 0 ? -1.0 : 1.0;
        p.phi = sk * std::acos(sk * ratio);
        p.sphi = std::sin(p.phi);
        p.flip = false;
    }
    return p;
}

inline double s_fn(const CurveParams& p, double x) { return p.hyperbolic ? std::sinh(x) : std::sin(x); }
inline double c_fn(const CurveParams& p, double x) { return p.hyperbolic ? std::cosh(x) : std::cos(x); }

} // namespace detail

inline std::vector<CurvePoint> curve_sample(const Form& f, const std::vector<double>& thetas, Branch branch = Branch::Plus) {
    const auto p = detail::curve_params(f);
    const double sign = branch == Branch::Plus ? 1.0 : -1.0;
    std::vector<CurvePoint> out;
    out.reserve(thetas.size());
    for (double t : thetas) {
        const double ctp = detail::c_fn(p, t + p.phi);
        const double ct = detail::c_fn(p, t);
        CurvePoint q;
        q.theta = t;
        q.a = sign * p.sm * detail::s_fn(p, 3 * t + p.phi) / p.sphi;
        q.b = sign * (p.n / p.sm) * detail::s_fn(p, t + p.phi) * (4 * ctp * ctp - 1) / p.sphi;
        q.c = sign * p.sn * detail::s_fn(p, 3 * t + 2 * p.phi) / p.sphi;
        q.d = sign * (p.m / p.sn) * detail::s_fn(p, t) * (4 * ct * ct - 1) / p.sphi;
        if (p.flip) {
            q.c = -q.c;
            q.d = -q.d;
        }
        out.push_back(q);
    }
    return out;
}

/// alpha = sqrt(m) c(t), beta = sqrt(n) c(t+p), gamma = sqrt(m) s(t), delta = sqrt(n) s(t+p),
/// all negated for the minus branch. Indefinite k < 0 uses |k| with beta, delta negated.
inline EmbeddingMatrix embedding_matrix(const Form& f, double theta, Branch branch = Branch::Plus) {
    const auto p = detail::curve_params(f);
    const double sign = branch == Branch::Plus ? 1.0 : -1.0;
    EmbeddingMatrix E;
    E.eps = p.hyperbolic ? -1 : 1;
    E.alpha = sign * p.sm * detail::c_fn(p, theta);
    E.gamma = sign * p.sm * detail::s_fn(p, theta);
    E.beta = sign * p.sn * detail::c_fn(p, theta + p.phi);
    E.delta = sign * p.sn * detail::s_fn(p, theta + p.phi);
    if (p.flip) {
        E.beta = -E.beta;
        E.delta = -E.delta;
    }
    return E;
}

/// (a, b, c, d) of phi^{-1} sigma_4(phi x, phi y) for the embedding E.
inline RealQuadruple embedding_to_quadruple(const EmbeddingMatrix& E, int eps) {
    const double al = E.alpha, be = E.beta, ga = E.gamma, de = E.delta;
    const double den = al * de - be * ga;
    if (den == 0.0) throw PreconditionError("embedding_to_quadruple: degenerate embedding (alpha delta - beta gamma = 0)");
    return {(de * (al * al - eps * ga * ga) + 2 * al * be * ga) / den, de * (3 * be * be - eps * de * de) / den,
            (ga * (be * be - eps * de * de) + 2 * al * be * de) / den, ga * (3 * al * al - eps * ga * ga) / den};
}

/// Integer bounds on |a|, |b|, |c|, |d| for positive definite f.
struct QuadrupleBox {
    Int a, b, c, d;

    friend bool operator==(const QuadrupleBox&, const QuadrupleBox&) = default;
    Int candidates() const { return (2 * a + 1) * (2 * b + 1) * (2 * c + 1) * (2 * d + 1); }
};

/// floor of the curve amplitudes sqrt(m)/s(p), (n/sqrt(m))/s(p), sqrt(n)/s(p), (m/sqrt(n))/s(p),
/// with s(p)^2 = |D|/(4mn), computed exactly: |a| <= isqrt(floor(4 m^2 n / |D|)) and so on.
inline QuadrupleBox s4_search_bounds(const Form& f) {
    if (!is_positive_definite(f)) throw PreconditionError("s4_search_bounds: form is not positive definite");
    const Int ad = -discriminant(f);
    auto bound = [&](const Int& num) { return isqrt(floor_div(num, ad)); };
    return {bound(4 * f.m * f.m * f.n), bound(4 * f.n * f.n * f.n), bound(4 * f.m * f.n * f.n), bound(4 * f.m * f.m * f.m)};
}

template <class T>
struct Verdict {
    std::optional<T> witness;
    Decision quality = Decision::Decided;

    bool admitted() const { return witness.has_value(); }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

/// Quadruples with s4_form == f, a and c ranging over the given bounds (magnitude-first,
/// a outer); b and d are solved from a^2 - cd = m and c^2 - ab = n.
inline std::optional<Quadruple> search_quadruples(const Form& f, const Int& a_bound, const Int& c_bound, const Int& free_bound) {
    std::optional<Quadruple> found;
    auto accept = [&](const Quadruple& Q) {
        if (s4_form(Q) != f) return false;
        found = Q;
        return true;
    };
    for_each_by_magnitude(a_bound, [&](const Int& a) {
        return for_each_by_magnitude(c_bound, [&](const Int& c) {
            std::optional<Int> d, b;
            if (c != 0) {
                if (!divides(c, a * a - f.m)) return false;
                d = (a * a - f.m) / c;
            } else if (a * a != f.m) {
                return false;
            }
            if (a != 0) {
                if (!divides(a, c * c - f.n)) return false;
                b = (c * c - f.n) / a;
            } else if (c * c != f.n) {
                return false;
            }
            // k = ac - bd fixes the remaining unknown
            if (b && d) return accept({a, *b, c, *d});
            if (b) {
                if (*b == 0) return false;
                if (!divides(*b, a * c - f.k)) return false;
                return accept({a, *b, c, (a * c - f.k) / *b});
            }
            if (d) {
                if (*d == 0) return false;
                if (!divides(*d, a * c - f.k)) return false;
                return accept({a, (a * c - f.k) / *d, c, *d});
            }
            return for_each_by_magnitude(free_bound, [&](const Int& bb) {
                if (bb == 0 || !divides(bb, a * c - f.k)) return false;
                return accept({a, bb, c, (a * c - f.k) / bb});
            });
        });
    });
    return found;
}

} // namespace detail

/// A quadruple (a,b,c,d) with (a^2-cd, ac-bd, c^2-ab) = f. Positive definite: exhaustive over
/// the curve box, so nullopt is a proof. Negative definite: no normed pairing exists.
/// Indefinite: |a|, |c| <= box_bound.
inline Verdict<Quadruple> admits_type_minus_minus(const Form& f, const Int& box_bound = 100) {
    require_nondegenerate(f, "admits_type_minus_minus");
    switch (classify_definiteness(f)) {
    case Definiteness::NegativeDefinite: return {std::nullopt, Decision::Decided};
    case Definiteness::PositiveDefinite: {
        const QuadrupleBox box = s4_search_bounds(f);
        return {detail::search_quadruples(f, box.a, box.c, 0), Decision::Decided};
    }
    default: {
        auto w = detail::search_quadruples(f, box_bound, box_bound, box_bound);
        return {w, w ? Decision::Decided : Decision::BoundedSearchOnly};
    }
    }
}

/// Positive divisors of |x| in increasing order.
inline std::vector<Int> positive_divisors(const Int& x) {
    const Int ax = abs(x);
    std::vector<Int> low, high;
    for (Int d = 1; d * d <= ax; ++d) {
        if (!divides(d, ax)) continue;
        low.push_back(d);
        if (d * d != ax) high.push_back(ax / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// Parameters (m,k,n,p,q) with f = r (m,k,n), r = (m,k,n)(p,q) > 0, trying r | content(f) in
/// increasing order. Negative r adds nothing: f(p,q) = r^2 either way.
inline Verdict<PlusParams> admits_plus_types(const Form& f, const Int& box_bound = 100) {
    require_nondegenerate(f, "admits_plus_types");
    const Definiteness def = classify_definiteness(f);
    if (def == Definiteness::NegativeDefinite) return {std::nullopt, Decision::Decided};
    for (const Int& r : positive_divisors(content(f))) {
        const Form g{f.m / r, f.k / r, f.n / r};
        if (auto v = represents(g, r, box_bound)) return {PlusParams{g.m, g.k, g.n, v->x1, v->x2}, Decision::Decided};
    }
    return {std::nullopt, def == Definiteness::PositiveDefinite ? Decision::Decided : Decision::BoundedSearchOnly};
}

struct ClassificationReport {
    Form form;
    Verdict<PlusParams> pp; ///< (+,+)
    Verdict<PlusParams> mp; ///< (-,+)
    Verdict<PlusParams> pm; ///< (+,-)
    Verdict<Quadruple> mm;  ///< (-,-)

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Runs both searches and checks every witness against the form, is_normed and type_of.
inline ClassificationReport full_classification(const Form& f, const Int& box_bound = 100) {
    ClassificationReport rep;
    rep.form = f;
    const auto plus = admits_plus_types(f, box_bound);
    rep.pp = rep.mp = rep.pm = plus;
    rep.mm = admits_type_minus_minus(f, box_bound);
    if (plus.witness) {
        const PairingType expected[3] = {kPlusPlus, kMinusPlus, kPlusMinus};
        for (int v = 1; v <= 3; ++v) {
            const auto sw = make_splus(v, *plus.witness);
            if (sw.form != f || !is_normed(sw.pairing, f) || type_of(sw.pairing, f) != expected[v - 1]) {
                throw InternalError("full_classification: plus-type witness does not verify");
            }
        }
    }
    if (rep.mm.witness) {
        const auto sw = make_s4(*rep.mm.witness);
        if (sw.form != f || !is_normed(sw.pairing, f) || type_of(sw.pairing, f) != kMinusMinus) {
            throw InternalError("full_classification: (-,-) witness does not verify");
        }
    }
    return rep;
}

enum class Order3Verdict { Order1, Order3, NotApplicable };

inline std::string to_string(Order3Verdict v) {
    switch (v) {
    case Order3Verdict::Order1: return "order1";
    case Order3Verdict::Order3: return "order3";
    case Order3Verdict::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

/// Class of f4 = s4_form(Q): its order divides 3, so it is 1 exactly when f4 reduces to the
/// principal form.
inline Order3Verdict order3_verdict(const Quadruple& Q) {
    const Form f = s4_form(Q);
    if (!is_positive_definite(f) || !is_primitive(f)) return Order3Verdict::NotApplicable;
    return reduce(f).form == principal_form(discriminant(f)) ? Order3Verdict::Order1 : Order3Verdict::Order3;
}

} // namespace nforms
