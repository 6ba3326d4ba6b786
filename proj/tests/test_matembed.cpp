#include "normed_forms/matembed.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nforms;
using oracle::i64;

namespace {

struct M {
    i64 a, b, c, d;
};

M mul(M x, M y) { return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d}; }
M adj(M x) { return {x.d, -x.b, -x.c, x.a}; }

M s_oracle(int k, M x, M y) {
    switch (k) {
    case 1: return mul(x, y);
    case 2: return mul(adj(x), y);
    case 3: return mul(x, adj(y));
    default: return adj(mul(x, y));
    }
}

// X in span_Z(A, rE), searching the A-coefficient in a box
bool in_span(M x, M a, i64 r, i64 R = 400) {
    for (i64 t = -R; t <= R; ++t) {
        const i64 d11 = x.a - t * a.a, d22 = x.d - t * a.d;
        if (x.b != t * a.b || x.c != t * a.c || d11 != d22 || d11 % r != 0) continue;
        return true;
    }
    return false;
}

bool stable_oracle(M a, i64 r, int k) {
    const M basis[2] = {a, {r, 0, 0, r}};
    for (const M& x : basis)
        for (const M& y : basis)
            if (!in_span(s_oracle(k, x, y), a, r)) return false;
    return true;
}

Mat2 to_mat(M x) { return {x.a, x.b, x.c, x.d}; }

Mat2 random_mat(std::mt19937_64& g, i64 R) {
    return {oracle::uniform(g, -R, R), oracle::uniform(g, -R, R), oracle::uniform(g, -R, R), oracle::uniform(g, -R, R)};
}

oracle::P to_oracle(const Pairing& s) {
    auto g = [](const Int& x) { return x.get_si(); };
    return {g(s.a1.a11), g(s.a1.a12), g(s.a1.a21), g(s.a1.a22), g(s.a2.a11), g(s.a2.a12), g(s.a2.a21), g(s.a2.a22)};
}

} // namespace

TEST(Matembed, Adjugate) {
    EXPECT_EQ(adjugate(Mat2::identity()), Mat2::identity());
    EXPECT_EQ(adjugate(Mat2{1, 2, 3, 4}), (Mat2{4, -2, -3, 1}));
    auto g = oracle::rng(41);
    for (int i = 0; i < 200; ++i) {
        const Mat2 a = random_mat(g, 50);
        EXPECT_EQ(adjugate(a).trace(), a.trace());
        EXPECT_EQ(adjugate(a).det(), a.det());
        EXPECT_EQ(a + adjugate(a), Mat2::scalar(a.trace()));
        EXPECT_EQ(a * adjugate(a), Mat2::scalar(a.det()));
    }
}

TEST(Matembed, PairingsS) {
    auto g = oracle::rng(42);
    for (int i = 0; i < 200; ++i) {
        const Mat2 a = random_mat(g, 30), b = random_mat(g, 30);
        EXPECT_EQ(S(1, Mat2::identity(), b), b);
        EXPECT_EQ(S(2, a, a), Mat2::scalar(a.det()));
        for (int k = 1; k <= 4; ++k) EXPECT_EQ(S(k, a, b).det(), a.det() * b.det()) << k;
    }
    EXPECT_THROW(S(5, Mat2::identity(), Mat2::identity()), PreconditionError);
}

TEST(Matembed, SublatticeConstruction) {
    EXPECT_THROW(Sublattice(Mat2::identity(), 1), PreconditionError);
    EXPECT_THROW(Sublattice(Mat2{0, -1, 1, 0}, 0), PreconditionError);
    const Sublattice L(Mat2{0, -1, 1, 0}, 3);
    EXPECT_EQ(L.at({1, 1}), (Mat2{3, -1, 1, 3}));
    EXPECT_TRUE(contains(L, Mat2{3, -1, 1, 3}));
    EXPECT_FALSE(contains(L, Mat2{1, -1, 1, 1}));
    EXPECT_FALSE(contains(L, Mat2{0, 1, 1, 0}));
    EXPECT_EQ(integer_coordinates(L, Mat2{-6, 2, -2, -6}), (Vec2{-2, -2}));
}

TEST(Matembed, StabilityExamples) {
    EXPECT_TRUE(check_stability(Sublattice(Mat2{0, -1, 1, 0}, 1), 1));
    EXPECT_TRUE(check_stability(Sublattice(Mat2{0, -3, 2, 1}, 3), 1)); // det 6
    EXPECT_FALSE(check_stability(Sublattice(Mat2{1, 1, 0, 1}, 2), 4));
    EXPECT_FALSE(stable_oracle({1, 1, 0, 1}, 2, 4));
}

TEST(Matembed, StabilityCriterionGrid) {
    int stable_seen = 0, unstable_seen = 0;
    for (i64 a = -2; a <= 2; ++a)
        for (i64 b = -2; b <= 2; ++b)
            for (i64 c = -2; c <= 2; ++c)
                for (i64 d = -2; d <= 2; ++d) {
                    if (b == 0 && c == 0 && a == d) continue;
                    for (i64 r = 1; r <= 6; ++r) {
                        const Sublattice L(to_mat({a, b, c, d}), r);
                        for (int k = 1; k <= 4; ++k) {
                            const bool direct = check_stability(L, k);
                            ASSERT_EQ(direct, stable_oracle({a, b, c, d}, r, k)) << L << " k=" << k;
                            ASSERT_EQ(direct, stability_criterion(L, k)) << L << " k=" << k;
                            (direct ? stable_seen : unstable_seen)++;
                        }
                    }
                }
    EXPECT_GT(stable_seen, 1000);
    EXPECT_GT(unstable_seen, 1000);
}

TEST(Matembed, DeterminantForm) {
    auto g = oracle::rng(43);
    for (int i = 0; i < 200; ++i) {
        const Mat2 a = random_mat(g, 20);
        if (a.is_scalar()) continue;
        const Sublattice L(a, oracle::uniform(g, 1, 9));
        const Form f = determinant_form(L);
        for (int j = 0; j < 10; ++j) {
            const Vec2 x{oracle::uniform(g, -9, 9), oracle::uniform(g, -9, 9)};
            EXPECT_EQ(eval(f, x), L.at(x).det());
        }
    }
}

TEST(Matembed, CanonicalizeExamples) {
    const Mat2 A{2, -1, 1, 0}; // det 1, tr 2
    const Sublattice L0 = canonicalize(A, Mat2::scalar(1), 1);
    EXPECT_EQ(L0.r, 1);
    EXPECT_EQ(L0.a, (Mat2{0, -1, 1, -2}));
    EXPECT_EQ(canonicalize(L0.a, Mat2::scalar(1), 1), L0);

    const Mat2 B{1, -4, 1, 1}; // det 5
    const Sublattice L1 = canonicalize(B + Mat2::scalar(5), Mat2::scalar(5), 1);
    EXPECT_EQ(L1.r, 5);
    EXPECT_EQ(L1.a, B);
    EXPECT_EQ(L1, canonicalize(B, Mat2::scalar(5), 1));
    EXPECT_EQ(L1, canonicalize(Mat2::scalar(5), -B, 1));

    // det(x [[1,0],[0,0]] + y [[0,1],[0,0]]) vanishes identically
    EXPECT_THROW(canonicalize(Mat2{1, 0, 0, 0}, Mat2{0, 1, 0, 0}, 1), PreconditionError);
    EXPECT_THROW(canonicalize(Mat2{1, 2, 3, 4}, Mat2{2, 4, 6, 8}, 1), PreconditionError);
    EXPECT_THROW(canonicalize(Mat2{1, 1, 0, 1}, Mat2::scalar(2), 4), PreconditionError);
    EXPECT_THROW(canonicalize(Mat2{1, 0, 0, 2}, Mat2{0, 1, 0, 0}, 1), PreconditionError);
}

TEST(Matembed, CanonicalizeRecoversRandomBasisChanges) {
    auto g = oracle::rng(44);
    int checked = 0;
    while (checked < 300) {
        const Mat2 a = random_mat(g, 9);
        if (a.is_scalar()) continue;
        const Int r = oracle::uniform(g, 1, 8);
        const int k = static_cast<int>(oracle::uniform(g, 1, 4));
        const Sublattice L(a, r);
        if (!check_stability(L, k)) continue;
        // random unimodular change of basis
        Int p = 1, q = 0, u = 0, v = 1;
        for (int s = 0; s < 4; ++s) {
            const Int t = oracle::uniform(g, -3, 3);
            if (s % 2) { p += t * q; u += t * v; }
            else { q += t * p; v += t * u; }
        }
        const Mat2 g1 = p * L.a + u * L.scalar();
        const Mat2 g2 = q * L.a + v * L.scalar();
        const Sublattice C = canonicalize(g1, g2, k);
        EXPECT_EQ(C.r, r);
        EXPECT_TRUE(C.a.a11 >= 0 && C.a.a11 < r);
        EXPECT_TRUE(contains(L, C.a));
        EXPECT_TRUE(contains(C, L.a));
        EXPECT_EQ(C, canonicalize(L.a, L.scalar(), k));
        ++checked;
    }
}

TEST(Matembed, InducedPairingExamples) {
    const auto ip = induced_pairing(Sublattice(Mat2{0, -1, 1, 0}, 1), 1);
    EXPECT_EQ(ip.form, (Form{1, 0, 1}));
    EXPECT_TRUE(is_normed(ip.pairing, ip.form));
    EXPECT_EQ(std::get<PlusParams>(ip.params), (PlusParams{1, 0, 1, 0, 1}));

    const Mat2 A{1, -5, 1, 2}; // tr 3, det 7, tr^2 - det = 2
    const auto q = induced_pairing(Sublattice(A, 2), 4);
    EXPECT_EQ(std::get<Quadruple>(q.params), (Quadruple{-3, 0, -2, -1}));
    EXPECT_EQ(q.form, (Form{7, 6, 4}));
    EXPECT_TRUE(is_normed(q.pairing, q.form));

    EXPECT_THROW(induced_pairing(Sublattice(Mat2{1, 1, 0, 1}, 2), 4), PreconditionError);
}

TEST(Matembed, InducedPairingProperties) {
    auto g = oracle::rng(45);
    const PairingType expected[4] = {kPlusPlus, kMinusPlus, kPlusMinus, kMinusMinus};
    int checked[4] = {0, 0, 0, 0};
    for (int i = 0; i < 3000; ++i) {
        const Mat2 a = random_mat(g, 7);
        if (a.is_scalar()) continue;
        const Sublattice L(a, oracle::uniform(g, 1, 6));
        for (int k = 1; k <= 4; ++k) {
            if (!check_stability(L, k)) continue;
            const auto ip = induced_pairing(L, k);
            EXPECT_EQ(ip.form, determinant_form(L));
            EXPECT_TRUE(oracle::normed_on_box(to_oracle(ip.pairing), {ip.form.m.get_si(), ip.form.k.get_si(), ip.form.n.get_si()}, 2))
                << L << " k=" << k;
            // the pairing is S_k transported through x -> x1 A + x2 rE
            for (int j = 0; j < 4; ++j) {
                const Vec2 x{oracle::uniform(g, -4, 4), oracle::uniform(g, -4, 4)};
                const Vec2 y{oracle::uniform(g, -4, 4), oracle::uniform(g, -4, 4)};
                EXPECT_EQ(L.at(eval(ip.pairing, x, y)), S(k, L.at(x), L.at(y)));
            }
            if (k <= 3) {
                EXPECT_EQ(make_splus(1, std::get<PlusParams>(ip.params)).form, ip.form);
            } else {
                EXPECT_EQ(make_s4(std::get<Quadruple>(ip.params)).form, ip.form);
            }
            if (!is_degenerate(ip.form)) {
                EXPECT_EQ(type_of(ip.pairing, ip.form), expected[k - 1]) << L << " k=" << k;
                ++checked[k - 1];
            }
        }
    }
    for (int k = 0; k < 4; ++k) EXPECT_GT(checked[k], 100) << k + 1;
}
