#pragma once

// Exact arithmetic in Q(tau), tau^2 = D, and rank-2 lattices in it. D < 0 models the complex
// numbers, D > 0 the hyperbolic numbers; both share one code path.

#include "normed_forms/forms.hpp"
#include "normed_forms/matembed.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace nforms {

/// Q(tau) with tau^2 = delta; delta nonzero and 0 or 1 mod 4.
struct Context {
    Int delta;

    explicit Context(Int d) : delta(std::move(d)) {
        if (!is_valid_discriminant(delta)) {
            throw PreconditionError("Context: discriminant must be nonzero and 0 or 1 mod 4, got " + to_string(delta));
        }
    }

    /// +1 for the complex case (delta < 0), -1 for the hyperbolic case.
    int epsilon() const { return delta < 0 ? 1 : -1; }

    friend bool operator==(const Context&, const Context&) = default;
};

/// u + v tau.
struct AElem {
    Rat u;
    Rat v;
    Int delta;

    friend bool operator==(const AElem&, const AElem&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const AElem& z) {
    return os << z.u << (sgn(z.v) < 0 ? "-" : "+") << abs(Rat(z.v)) << "t";
}

namespace detail {

inline void require_same_context(const Int& a, const Int& b, const char* what) {
    if (a != b) throw PreconditionError(std::string(what) + ": context mismatch");
}

inline Rat canon(Rat q) {
    q.canonicalize();
    return q;
}

} // namespace detail

/// u + v tau in ctx, with u and v canonicalized so that equality is structural.
inline AElem elem(const Context& ctx, const Rat& u, const Rat& v = 0) { return {detail::canon(u), detail::canon(v), ctx.delta}; }

inline AElem operator+(const AElem& z, const AElem& w) {
    detail::require_same_context(z.delta, w.delta, "add");
    return {detail::canon(z.u + w.u), detail::canon(z.v + w.v), z.delta};
}

inline AElem operator-(const AElem& z, const AElem& w) {
    detail::require_same_context(z.delta, w.delta, "sub");
    return {detail::canon(z.u - w.u), detail::canon(z.v - w.v), z.delta};
}

inline AElem operator-(const AElem& z) { return {-z.u, -z.v, z.delta}; }

inline AElem operator*(const AElem& z, const AElem& w) {
    detail::require_same_context(z.delta, w.delta, "mul");
    return {detail::canon(z.u * w.u + Rat(z.delta) * z.v * w.v), detail::canon(z.u * w.v + z.v * w.u), z.delta};
}

inline AElem operator*(const Rat& q, const AElem& z) {
    return {detail::canon(q * z.u), detail::canon(q * z.v), z.delta};
}

inline AElem conj(const AElem& z) { return {z.u, -z.v, z.delta}; }

/// z conj(z) = u^2 - D v^2.
inline Rat norm(const AElem& z) { return detail::canon(z.u * z.u - Rat(z.delta) * z.v * z.v); }

/// z + conj(z) = 2u.
inline Rat trace(const AElem& z) { return detail::canon(2 * z.u); }

/// Non-real element with integer trace and norm.
inline bool is_quadratic_integer(const AElem& z) {
    return z.v != 0 && is_integer(trace(z)) && is_integer(norm(z));
}

/// sigma_1..sigma_4: zw, conj(z) w, z conj(w), conj(zw).
inline AElem sigma(int k, const AElem& z, const AElem& w) {
    switch (k) {
    case 1: return z * w;
    case 2: return conj(z) * w;
    case 3: return z * conj(w);
    case 4: return conj(z * w);
    default: throw PreconditionError("sigma: k must be 1, 2, 3 or 4");
    }
}

struct CanonicalBasis {
    Rat r;      ///< least positive rational in the lattice
    AElem zeta; ///< zeta.v > 0 minimal, zeta.u in (-r/2, r/2]
};

/// Rank-2 Z-module in Q(tau), stored by its canonical basis (r, zeta). Two lattices are equal
/// iff their stored bases are.
class Lattice {
public:
    /// Hermite form of the Z-span of gens; throws when the span has rank < 2.
    static Lattice from_generators(const Context& ctx, const std::vector<AElem>& gens) {
        for (const auto& g : gens) detail::require_same_context(g.delta, ctx.delta, "Lattice");
        Int den = 1;
        for (const auto& g : gens) den = lcm(den, lcm(g.u.get_den(), g.v.get_den()));

        // pivot has v = gcd of all v; every other combination is pushed onto the u-axis
        Int pu = 0, pv = 0, axis = 0;
        for (const auto& g : gens) {
            const Int a = to_int(g.u * den);
            const Int b = to_int(g.v * den);
            if (b == 0) {
                axis = gcd(axis, a);
                continue;
            }
            Int s, t;
            const Int d = xgcd(pv, b, s, t);
            const Int leftover = (b / d) * pu - (pv / d) * a;
            axis = gcd(axis, leftover);
            pu = s * pu + t * a;
            pv = d;
        }
        if (pv == 0 || axis == 0) throw PreconditionError("Lattice: generators span rank < 2");
        // bring pu into (-axis/2, axis/2]
        pu -= axis * floor_div(2 * pu + axis - 1, 2 * axis);
        Lattice L(ctx);
        L.r_ = make_rat(axis, den);
        L.zeta_ = {make_rat(pu, den), make_rat(pv, den), ctx.delta};
        return L;
    }

    static Lattice from_basis(const AElem& e1, const AElem& e2) {
        detail::require_same_context(e1.delta, e2.delta, "Lattice");
        return from_generators(Context(e1.delta), {e1, e2});
    }

    const Context& context() const { return ctx_; }
    const Int& delta() const { return ctx_.delta; }
    const Rat& r() const { return r_; }
    const AElem& zeta() const { return zeta_; }
    AElem e1() const { return {r_, 0, ctx_.delta}; }
    const AElem& e2() const { return zeta_; }
    CanonicalBasis canonical() const { return {r_, zeta_}; }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.ctx_ == b.ctx_ && a.r_ == b.r_ && a.zeta_ == b.zeta_;
    }

private:
    explicit Lattice(Context ctx) : ctx_(std::move(ctx)) {}

    Context ctx_;
    Rat r_;
    AElem zeta_;
};

inline std::ostream& operator<<(std::ostream& os, const Lattice& L) {
    return os << "span(" << L.r() << ", " << L.zeta() << ") [t^2=" << L.delta() << "]";
}

inline Lattice hnf_from_generators(const Context& ctx, const std::vector<AElem>& gens) {
    return Lattice::from_generators(ctx, gens);
}

inline CanonicalBasis canonical_r_zeta(const Lattice& L) { return L.canonical(); }

/// Integer coordinates of z in the basis (r, zeta), if any.
inline std::optional<std::pair<Int, Int>> lattice_coordinates(const Lattice& L, const AElem& z) {
    detail::require_same_context(L.delta(), z.delta, "contains");
    const Rat b = detail::canon(z.v / L.zeta().v);
    const Rat a = detail::canon((z.u - b * L.zeta().u) / L.r());
    if (!is_integer(a) || !is_integer(b)) return std::nullopt;
    return std::make_pair(to_int(a), to_int(b));
}

inline bool contains(const Lattice& L, const AElem& z) { return lattice_coordinates(L, z).has_value(); }

/// 4 D (u1 v2 - u2 v1)^2 = (e1 conj(e2) - e2 conj(e1))^2.
inline Rat discriminant(const Lattice& L) {
    const Rat cross = L.r() * L.zeta().v;
    return detail::canon(4 * Rat(L.delta()) * cross * cross);
}

/// (N(e1), tr(e1 conj(e2)), N(e2)), i.e. x -> N(x1 e1 + x2 e2). Throws unless integral.
inline Form form_of_basis(const AElem& e1, const AElem& e2) {
    const Rat m = norm(e1);
    const Rat k = trace(e1 * conj(e2));
    const Rat n = norm(e2);
    if (!is_integer(m) || !is_integer(k) || !is_integer(n)) {
        throw PreconditionError("lattice is not integer-normed");
    }
    return {to_int(m), to_int(k), to_int(n)};
}

/// The form of the canonical basis (r, zeta), which is positively oriented like (1, tau).
inline Form lattice_to_form(const Lattice& L) { return form_of_basis(L.e1(), L.e2()); }

inline bool is_integer_normed(const Lattice& L) {
    return is_integer(norm(L.e1())) && is_integer(norm(L.e2())) && is_integer(trace(L.e1() * conj(L.e2())));
}

/// sigma_k(e_i, e_j) in L for all basis pairs.
inline bool stable_under(const Lattice& L, int k) {
    const AElem basis[2] = {L.e1(), L.e2()};
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (!contains(L, sigma(k, x, y))) return false;
    return true;
}

/// R_D = span(1, tau/2) for D = 0 mod 4, span(1, (1+tau)/2) for D = 1 mod 4.
inline Lattice ring_R(const Int& delta) {
    const Context ctx(delta);
    const Rat half(1, 2);
    const AElem omega = divides(Int(4), delta) ? elem(ctx, 0, half) : elem(ctx, half, half);
    return Lattice::from_generators(ctx, {elem(ctx, 1), omega});
}

inline Lattice conj_lattice(const Lattice& L) {
    return Lattice::from_generators(L.context(), {conj(L.e1()), conj(L.e2())});
}

inline Lattice product(const Lattice& a, const Lattice& b) {
    detail::require_same_context(a.delta(), b.delta(), "product");
    return Lattice::from_generators(a.context(), {a.e1() * b.e1(), a.e1() * b.e2(), a.e2() * b.e1(), a.e2() * b.e2()});
}

namespace detail {

/// s > 0 with s^2 = from / to; throws when the two discriminants give different fields.
inline Rat square_ratio(const Int& from, const Int& to, const char* what) {
    const Context check(to);
    const Rat ratio = make_rat(from, to);
    if (sgn(ratio) <= 0 || !is_square(ratio.get_num()) || !is_square(ratio.get_den())) {
        throw PreconditionError(std::string(what) + ": discriminants generate different quadratic extensions");
    }
    return make_rat(isqrt(ratio.get_num()), isqrt(ratio.get_den()));
}

} // namespace detail

/// The same subset of Q(sqrt(delta)) written with tau' = s tau, tau'^2 = delta_new.
inline Lattice in_context(const Lattice& L, const Int& delta_new) {
    const Rat s = detail::square_ratio(delta_new, L.delta(), "in_context");
    const Context ctx(delta_new);
    auto move = [&](const AElem& z) { return elem(ctx, z.u, z.v / s); };
    return Lattice::from_basis(move(L.e1()), move(L.e2()));
}

/// Whether L is an ideal of R_{delta_star}. Requires delta / delta_star to be a rational square,
/// so that tau_star = tau / s with s^2 = delta / delta_star.
inline bool is_ideal_of(const Lattice& L, const Int& delta_star) {
    const Rat s = detail::square_ratio(L.delta(), delta_star, "is_ideal_of");
    const Context& ctx = L.context();
    const AElem tau_star = elem(ctx, 0, detail::canon(1 / s));
    const Rat half(1, 2);
    const AElem omega = divides(Int(4), delta_star) ? half * tau_star : half * (elem(ctx, 1) + tau_star);
    const Lattice ring = Lattice::from_generators(ctx, {elem(ctx, 1), omega});
    for (const auto& e : {L.e1(), L.e2()}) {
        if (!contains(ring, e) || !contains(L, omega * e)) return false;
    }
    return true;
}

/// Whether the class of L is trivial: the primitive part of its form reduces to the principal
/// form. Negative discriminants only.
inline bool is_principal(const Lattice& L) {
    if (L.delta() > 0) throw PreconditionError("is_principal: only negative discriminants are supported");
    const Form f = content_and_primitive(lattice_to_form(L)).primitive;
    return reduce(f).form == principal_form(discriminant(f));
}

inline bool cube_is_principal(const Lattice& L) { return is_principal(product(product(L, L), L)); }

struct FormEmbedding {
    Lattice lattice;
    AElem e1; ///< form_of_basis(e1, e2) == f exactly, positively oriented
    AElem e2;
};

namespace detail {

/// Least-height rational point u + v tau with norm t: u = a/c, v = b/c, a^2 - D b^2 = t c^2,
/// scanning c = 1.., then b = 0, 1, -1, ..., then a >= 0.
inline std::optional<AElem> conic_point(const Context& ctx, const Int& t, const Int& height_bound) {
    for (Int c = 1; c <= height_bound; ++c) {
        std::optional<AElem> found;
        for_each_by_magnitude(height_bound, [&](const Int& b) {
            const Int a2 = t * c * c + ctx.delta * b * b;
            if (!is_square(a2)) return false;
            found = elem(ctx, make_rat(isqrt(a2), c), make_rat(b, c));
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

inline Rat orientation(const AElem& e1, const AElem& e2) { return canon(e1.u * e2.v - e2.u * e1.v); }

} // namespace detail

/// Finds e1, e2 in Q(tau), tau^2 = disc(f), with N(e1) = m, tr(e1 conj(e2)) = k, N(e2) = n.
/// Uses a conic point of norm m (or n when m = 0) and e2 = e1 (k +- tau) / (2m). nullopt means
/// no point of height <= height_bound exists.
inline std::optional<FormEmbedding> embed_form(const Form& f, const Int& height_bound = 100) {
    require_nondegenerate(f, "embed_form");
    const Context ctx(discriminant(f));
    const AElem tau = elem(ctx, 0, 1);
    auto oriented = [&](const AElem& e1, const AElem& e2) -> std::optional<FormEmbedding> {
        if (form_of_basis(e1, e2) != f || sgn(detail::orientation(e1, e2)) <= 0) {
            throw InternalError("embed_form: constructed basis does not realize the form");
        }
        return FormEmbedding{Lattice::from_basis(e1, e2), e1, e2};
    };
    if (f.m == 0 && f.n == 0) {
        // N(k - tau) = 0 and ((k - tau), (k + tau)/(4k)) realizes (0, k, 0)
        const AElem e1 = elem(ctx, f.k) - tau;
        const AElem e2 = make_rat(1, 4 * f.k) * (elem(ctx, f.k) + tau);
        return oriented(e1, e2);
    }
    const bool use_m = f.m != 0;
    const Int& t = use_m ? f.m : f.n;
    auto point = detail::conic_point(ctx, t, height_bound);
    if (!point) return std::nullopt;
    for (int s : {1, -1}) {
        const AElem w = make_rat(1, 2 * t) * (elem(ctx, f.k) + elem(ctx, 0, s));
        AElem e1 = use_m ? *point : *point * w;
        AElem e2 = use_m ? *point * w : *point;
        if (sgn(detail::orientation(e1, e2)) > 0) return oriented(e1, e2);
    }
    throw InternalError("embed_form: neither sign gives a positively oriented basis");
}

/// iota(z) = multiplication by z (k = 1) or by conj(z) (k = 2, 3) in the basis (r, zeta):
/// iota(sigma_k(z, w)) = S_k(iota(z), iota(w)). Returned as span(iota(zeta), rE).
inline Sublattice matrix_embedding(const Lattice& L, int k) {
    if (k < 1 || k > 3) throw PreconditionError("matrix_embedding: k must be 1, 2 or 3");
    if (!is_integer_normed(L)) throw PreconditionError("matrix_embedding: lattice is not integer-normed");
    if (!stable_under(L, k)) throw PreconditionError("matrix_embedding: lattice is not stable under sigma_k");
    const Rat& r = L.r();
    const AElem& zeta = L.zeta();
    if (!is_integer(r) || !is_quadratic_integer(zeta) || !is_integer(detail::canon(norm(zeta) / r))) {
        throw PreconditionError("matrix_embedding: canonical basis is not (integer r, quadratic integer zeta) with r | N(zeta)");
    }
    const Int ri = to_int(r);
    const Int nz = to_int(norm(zeta)) / ri;
    const Int tz = to_int(trace(zeta));
    // zeta * r = r zeta, zeta * zeta = -(N/r) r + tr zeta
    const Mat2 mult{0, -nz, ri, tz};
    return Sublattice(k == 1 ? mult : mult.adjugate(), ri);
}

/// iota(z) for z in L under the embedding of matrix_embedding(L, k).
inline Mat2 embed_element(const Lattice& L, int k, const AElem& z) {
    const Sublattice M = matrix_embedding(L, k);
    auto c = lattice_coordinates(L, z);
    if (!c) throw PreconditionError("embed_element: element is not in the lattice");
    return c->first * M.scalar() + c->second * M.a;
}

} // namespace nforms
