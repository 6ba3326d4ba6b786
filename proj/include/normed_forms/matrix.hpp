#pragma once

#include "normed_forms/integer.hpp"

#include <array>
#include <ostream>

namespace nforms {

template <class T>
struct Vector2 {
    T x1{0};
    T x2{0};

    friend bool operator==(const Vector2&, const Vector2&) = default;

    friend Vector2 operator+(const Vector2& a, const Vector2& b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
    friend Vector2 operator-(const Vector2& a, const Vector2& b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
    friend Vector2 operator*(const T& s, const Vector2& a) { return {s * a.x1, s * a.x2}; }
};

using Vec2 = Vector2<Int>;

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x1 << ',' << v.x2 << ')';
}

/// 2x2 matrix [[a11, a12], [a21, a22]].
template <class T>
struct Matrix2 {
    T a11{0}, a12{0}, a21{0}, a22{0};

    static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }
    static Matrix2 scalar(const T& s) { return {s, T(0), T(0), s}; }

    T operator()(int i, int j) const {
        if (i == 0) return j == 0 ? a11 : a12;
        return j == 0 ? a21 : a22;
    }
    T& at(int i, int j) {
        if (i == 0) return j == 0 ? a11 : a12;
        return j == 0 ? a21 : a22;
    }

    T det() const { return a11 * a22 - a12 * a21; }
    T trace() const { return a11 + a22; }
    Matrix2 transpose() const { return {a11, a21, a12, a22}; }
    /// Classical adjoint: A * adj(A) = det(A) * E.
    Matrix2 adjugate() const { return {a22, -a12, -a21, a11}; }
    bool is_symmetric() const { return a12 == a21; }
    bool is_scalar() const { return a12 == 0 && a21 == 0 && a11 == a22; }

    friend bool operator==(const Matrix2&, const Matrix2&) = default;

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend Matrix2 operator-(const Matrix2& a) { return {-a.a11, -a.a12, -a.a21, -a.a22}; }
    friend Matrix2 operator*(const T& s, const Matrix2& a) {
        return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend Vector2<T> operator*(const Matrix2& a, const Vector2<T>& v) {
        return {a.a11 * v.x1 + a.a12 * v.x2, a.a21 * v.x1 + a.a22 * v.x2};
    }
};

using Mat2 = Matrix2<Int>;

/// x^T A y.
template <class T>
T bilinear(const Vector2<T>& x, const Matrix2<T>& a, const Vector2<T>& y) {
    return x.x1 * (a.a11 * y.x1 + a.a12 * y.x2) + x.x2 * (a.a21 * y.x1 + a.a22 * y.x2);
}

inline std::ostream& operator<<(std::ostream& os, const Mat2& a) {
    return os << "[[" << a.a11 << ',' << a.a12 << "],[" << a.a21 << ',' << a.a22 << "]]";
}

} // namespace nforms
