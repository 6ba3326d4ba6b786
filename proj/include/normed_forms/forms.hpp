#pragma once

// Binary integer quadratic forms m*x1^2 + k*x1*x2 + n*x2^2.

#include "normed_forms/integer.hpp"
#include "normed_forms/matrix.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace nforms {

struct Form {
    Int m{0};
    Int k{0};
    Int n{0};

    friend bool operator==(const Form&, const Form&) = default;

    Form operator-() const { return {-m, -k, -n}; }
    friend Form operator*(const Int& r, const Form& f) { return {r * f.m, r * f.k, r * f.n}; }
    bool is_zero() const { return m == 0 && k == 0 && n == 0; }
};

inline std::ostream& operator<<(std::ostream& os, const Form& f) {
    return os << '(' << f.m << ',' << f.k << ',' << f.n << ')';
}

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, Degenerate };

inline std::string to_string(Definiteness d) {
    switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::NegativeDefinite: return "negative_definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
    }
    return "unknown";
}

inline Int eval(const Form& f, const Vec2& v) {
    return f.m * v.x1 * v.x1 + f.k * v.x1 * v.x2 + f.n * v.x2 * v.x2;
}

inline Int discriminant(const Form& f) { return f.k * f.k - 4 * f.m * f.n; }

inline Definiteness classify_definiteness(const Form& f) {
    const Int d = discriminant(f);
    if (d == 0) return Definiteness::Degenerate;
    if (d > 0) return Definiteness::Indefinite;
    return f.m > 0 ? Definiteness::PositiveDefinite : Definiteness::NegativeDefinite;
}

inline bool is_degenerate(const Form& f) { return discriminant(f) == 0; }
inline bool is_positive_definite(const Form& f) {
    return classify_definiteness(f) == Definiteness::PositiveDefinite;
}

inline void require_nondegenerate(const Form& f, const char* what) {
    if (is_degenerate(f)) {
        std::ostringstream os;
        os << what << ": degenerate form " << f;
        throw DegenerateFormError(os.str());
    }
}

/// Doubled polarization 2F = [[2m, k], [k, 2n]]; x^T (2F) y = 2 F(x, y).
struct DoubledPolarization {
    Mat2 matrix;

    explicit DoubledPolarization(const Form& f) : matrix{2 * f.m, f.k, f.k, 2 * f.n} {}

    Int operator()(const Vec2& x, const Vec2& y) const { return bilinear(x, matrix, y); }
};

struct ContentSplit {
    Int content;
    Form primitive;
};

inline Int content(const Form& f) { return gcd(gcd(f.m, f.k), f.n); }

inline bool is_primitive(const Form& f) { return content(f) == 1; }

inline ContentSplit content_and_primitive(const Form& f) {
    if (f.is_zero()) throw PreconditionError("content of the zero form is undefined");
    Int g = content(f);
    return {g, Form{f.m / g, f.k / g, f.n / g}};
}

/// f o M, i.e. (f o M)(x) = f(M x). M must have determinant 1.
inline Form sl2_apply(const Form& f, const Mat2& M) {
    if (M.det() != 1) throw PreconditionError("sl2_apply: matrix determinant is not 1");
    return {eval(f, {M.a11, M.a21}), 2 * f.m * M.a11 * M.a12 + f.k * (M.a11 * M.a22 + M.a12 * M.a21) +
                                         2 * f.n * M.a21 * M.a22,
            eval(f, {M.a12, M.a22})};
}

/// |k| <= m <= n, with k >= 0 when |k| = m or m = n.
inline bool is_reduced(const Form& f) {
    if (!is_positive_definite(f)) return false;
    if (abs(f.k) > f.m || f.m > f.n) return false;
    if ((abs(f.k) == f.m || f.m == f.n) && f.k < 0) return false;
    return true;
}

struct Reduction {
    Form form;
    Mat2 transform; ///< det 1, sl2_apply(input, transform) == form
};

/// Gauss reduction of a primitive positive definite form.
inline Reduction reduce(const Form& f) {
    if (!is_positive_definite(f)) throw PreconditionError("reduce: form is not positive definite");
    if (!is_primitive(f)) throw PreconditionError("reduce: form is not primitive");
    const Mat2 swap{0, -1, 1, 0};
    Form g = f;
    Mat2 M = Mat2::identity();
    for (;;) {
        // bring k into (-m, m]
        Int t = floor_div(g.m - g.k, 2 * g.m);
        if (t != 0) {
            Mat2 shift{1, t, 0, 1};
            g = sl2_apply(g, shift);
            M = M * shift;
        }
        if (g.m > g.n) {
            g = sl2_apply(g, swap);
            M = M * swap;
            continue;
        }
        if (g.m == g.n && g.k < 0) {
            g = sl2_apply(g, swap);
            M = M * swap;
        }
        return {g, M};
    }
}

inline bool is_valid_discriminant(const Int& d) {
    if (d == 0) return false;
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), 4);
    return r == 0 || r == 1;
}

/// The form of the ring R_D: (1, 0, -D/4) or (1, 1, (1-D)/4).
inline Form principal_form(const Int& d) {
    if (!is_valid_discriminant(d)) throw PreconditionError("principal_form: discriminant must be nonzero and 0 or 1 mod 4");
    if (divides(Int(4), d)) return {1, 0, -d / 4};
    return {1, 1, (1 - d) / 4};
}

/// Primitive (or all) reduced positive definite forms of discriminant d < 0,
/// ordered by m, then |k|, positive k first.
inline std::vector<Form> reduced_forms(const Int& d, bool primitive_only = true) {
    std::vector<Form> out;
    if (d >= 0 || !is_valid_discriminant(d)) return out;
    const Int ad = -d;
    for (Int m = 1; 3 * m * m <= ad; ++m) {
        for (Int a = 0; a <= m; ++a) {
            for (int s : {1, -1}) {
                if (a == 0 && s == -1) continue;
                Int k = s * a;
                if (k == -m) continue;
                Int num = k * k - d;
                if (!divides(4 * m, num)) continue;
                Int n = num / (4 * m);
                Form f{m, k, n};
                if (!is_reduced(f)) continue;
                if (primitive_only && !is_primitive(f)) continue;
                out.push_back(f);
            }
        }
    }
    return out;
}

namespace detail {

/// Integer roots x1 of f(x1, x2) = t for fixed x2, in magnitude order.
/// When every x1 solves the equation only 0 is returned.
inline std::vector<Int> solve_for_x1(const Form& f, const Int& x2, const Int& t) {
    std::vector<Int> roots;
    const Int b = f.k * x2;
    const Int c = f.n * x2 * x2 - t;
    if (f.m == 0) {
        if (b == 0) {
            if (c == 0) roots.push_back(0);
        } else if (divides(b, c)) {
            roots.push_back(-c / b);
        }
        return roots;
    }
    const Int disc = b * b - 4 * f.m * c;
    if (!is_square(disc)) return roots;
    const Int s = isqrt(disc);
    for (const Int& num : {Int(-b + s), Int(-b - s)}) {
        if (divides(2 * f.m, num)) {
            Int x = num / (2 * f.m);
            bool seen = false;
            for (const auto& r : roots) seen = seen || r == x;
            if (!seen) roots.push_back(x);
        }
    }
    if (roots.size() == 2) {
        auto key = [](const Int& x) { return std::make_pair(abs(x), x < 0); };
        if (key(roots[1]) < key(roots[0])) std::swap(roots[0], roots[1]);
    }
    return roots;
}

inline std::optional<Vec2> search_rows(const Form& f, const Int& t, const Int& x2_bound, const std::optional<Int>& x1_bound) {
    std::optional<Vec2> found;
    for_each_by_magnitude(x2_bound, [&](const Int& x2) {
        for (const Int& x1 : solve_for_x1(f, x2, t)) {
            if (x1_bound && abs(x1) > *x1_bound) continue;
            found = Vec2{x1, x2};
            return true;
        }
        return false;
    });
    return found;
}

} // namespace detail

/// Searches v with f(v) = t. For positive (negative) definite f the search covers the whole
/// ellipse, so nullopt proves t is not represented; otherwise the box |x1|,|x2| <= box_bound
/// is searched and nullopt only means "not found within the box".
inline std::optional<Vec2> represents(const Form& f, const Int& t, const Int& box_bound = 100) {
    switch (classify_definiteness(f)) {
    case Definiteness::NegativeDefinite:
        return represents(-f, -t, box_bound);
    case Definiteness::PositiveDefinite: {
        if (t < 0) return std::nullopt;
        if (t == 0) return Vec2{0, 0};
        // 4m f(x) = (2m x1 + k x2)^2 + |D| x2^2
        const Int x2_bound = isqrt((4 * f.m * t) / -discriminant(f));
        return detail::search_rows(f, t, x2_bound, std::nullopt);
    }
    default:
        return detail::search_rows(f, t, box_bound, box_bound);
    }
}

/// Whether represents() answers are decisions for this form.
inline bool represents_is_exact(const Form& f) {
    auto d = classify_definiteness(f);
    return d == Definiteness::PositiveDefinite || d == Definiteness::NegativeDefinite;
}

struct SemigroupCounterexample {
    Vec2 x;
    Vec2 y;
    Int product;
};

struct SemigroupReport {
    std::size_t values_sampled = 0;
    std::size_t products_checked = 0;
    std::optional<SemigroupCounterexample> counterexample;
    bool exact = false; ///< counterexamples are proofs (definite forms)
};

/// Checks that f(x) f(y) is a value of f for all x, y in the box |xi| <= sample_bound.
inline SemigroupReport semigroup_probe(const Form& f, const Int& sample_bound, const Int& search_bound = 100) {
    require_nondegenerate(f, "semigroup_probe");
    std::map<Int, Vec2> witnesses;
    for_each_by_magnitude(sample_bound, [&](const Int& x2) {
        for_each_by_magnitude(sample_bound, [&](const Int& x1) {
            Vec2 v{x1, x2};
            witnesses.try_emplace(eval(f, v), v);
            return false;
        });
        return false;
    });

    SemigroupReport report;
    report.exact = represents_is_exact(f);
    report.values_sampled = witnesses.size();
    std::vector<std::pair<Int, Vec2>> values(witnesses.begin(), witnesses.end());
    std::map<Int, bool> cache;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i; j < values.size(); ++j) {
            Int product = values[i].first * values[j].first;
            ++report.products_checked;
            auto it = cache.find(product);
            if (it == cache.end()) {
                it = cache.emplace(product, represents(f, product, search_bound).has_value()).first;
            }
            if (!it->second) {
                report.counterexample = SemigroupCounterexample{values[i].second, values[j].second, product};
                return report;
            }
        }
    }
    return report;
}

} // namespace nforms
