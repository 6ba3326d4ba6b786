#pragma once

// Arbitrary-precision scalars and the error types shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nforms {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The operation requires a nondegenerate form and got a degenerate one.
class DegenerateFormError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An invariant the mathematics guarantees did not hold.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline int sign(const Int& a) { return sgn(a); }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor of the square root; a must be non-negative.
inline Int isqrt(const Int& a) {
    if (sgn(a) < 0) throw PreconditionError("isqrt of a negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int& a) {
    return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Floor division (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& a) {
    if (sgn(d) == 0) return sgn(a) == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Extended gcd: returns g = gcd(a,b) >= 0 with g = s*a + t*b.
inline Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw PreconditionError("rational " + q.get_str() + " is not an integer");
    return q.get_num();
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses an optionally signed decimal integer; throws PreconditionError otherwise.
inline Int parse_int(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw PreconditionError("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw PreconditionError("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

/// Enumerates 0, 1, -1, 2, -2, ... up to +-bound, stopping early when fn returns true.
template <class Fn>
bool for_each_by_magnitude(const Int& bound, Fn&& fn) {
    if (sgn(bound) < 0) return false;
    if (fn(Int(0))) return true;
    for (Int i = 1; i <= bound; ++i) {
        if (fn(Int(i))) return true;
        if (fn(Int(-i))) return true;
    }
    return false;
}

} // namespace nforms
