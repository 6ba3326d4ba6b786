#include "normed_forms/forms.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nforms;

namespace {

Form to_form(const oracle::F& f) { return {f.m, f.k, f.n}; }

} // namespace

TEST(Forms, Eval) {
    EXPECT_EQ(eval(Form{1, 0, 1}, {3, 4}), 25);
    EXPECT_EQ(eval(Form{2, 1, 3}, {1, 0}), 2);
    EXPECT_EQ(eval(Form{4, 2, 6}, {0, 1}), 6);
}

TEST(Forms, Discriminant) {
    EXPECT_EQ(discriminant({2, 1, 3}), -23);
    EXPECT_EQ(discriminant({1, 0, 1}), -4);
    EXPECT_EQ(discriminant({4, 2, 6}), -92);
}

TEST(Forms, DiscriminantIsZeroOrOneModFour) {
    auto g = oracle::rng(11);
    for (int i = 0; i < 500; ++i) {
        Form f{oracle::uniform(g, -50, 50), oracle::uniform(g, -50, 50), oracle::uniform(g, -50, 50)};
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), discriminant(f).get_mpz_t(), 4);
        EXPECT_TRUE(r == 0 || r == 1) << f;
    }
}

TEST(Forms, Definiteness) {
    EXPECT_EQ(classify_definiteness({1, 0, 1}), Definiteness::PositiveDefinite);
    EXPECT_EQ(classify_definiteness({-1, 0, -1}), Definiteness::NegativeDefinite);
    EXPECT_EQ(classify_definiteness({1, 0, -1}), Definiteness::Indefinite);
    EXPECT_EQ(classify_definiteness({1, 2, 1}), Definiteness::Degenerate);
    EXPECT_EQ(classify_definiteness({0, 0, 0}), Definiteness::Degenerate);
    EXPECT_EQ(classify_definiteness({0, 1, 0}), Definiteness::Indefinite);
}

TEST(Forms, DefinitenessMatchesSampledValues) {
    auto g = oracle::rng(12);
    for (int i = 0; i < 300; ++i) {
        oracle::F f{oracle::uniform(g, -9, 9), oracle::uniform(g, -9, 9), oracle::uniform(g, -9, 9)};
        bool pos = false, neg = false;
        for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y) {
                pos = pos || f(x, y) > 0;
                neg = neg || f(x, y) < 0;
            }
        const auto d = classify_definiteness(to_form(f));
        if (d == Definiteness::PositiveDefinite) {
            EXPECT_FALSE(neg);
        }
        if (d == Definiteness::NegativeDefinite) {
            EXPECT_FALSE(pos);
        }
        if (d == Definiteness::Indefinite && f.disc() > 0 && f.m != 0) {
            EXPECT_TRUE(pos && neg);
        }
    }
}

TEST(Forms, ContentAndPrimitive) {
    auto a = content_and_primitive({4, 2, 6});
    EXPECT_EQ(a.content, 2);
    EXPECT_EQ(a.primitive, (Form{2, 1, 3}));
    auto b = content_and_primitive({2, 1, 3});
    EXPECT_EQ(b.content, 1);
    EXPECT_EQ(b.primitive, (Form{2, 1, 3}));
    auto c = content_and_primitive({-6, 0, -9});
    EXPECT_EQ(c.content, 3);
    EXPECT_EQ(c.primitive, (Form{-2, 0, -3}));
    EXPECT_THROW(content_and_primitive({0, 0, 0}), PreconditionError);
}

TEST(Forms, ReduceExamples) {
    auto r1 = reduce({2, 1, 3});
    EXPECT_EQ(r1.form, (Form{2, 1, 3}));
    EXPECT_EQ(r1.transform, Mat2::identity());
    auto r2 = reduce({1, 1, 6});
    EXPECT_EQ(r2.form, (Form{1, 1, 6}));
    EXPECT_EQ(r2.transform, Mat2::identity());
    auto r3 = reduce({3, 4, 2});
    EXPECT_EQ(r3.form, (Form{1, 0, 2}));
    EXPECT_EQ(sl2_apply({3, 4, 2}, r3.transform), r3.form);
    EXPECT_EQ(oracle::reduced_by_search({3, 4, 2}, 6), (oracle::F{1, 0, 2}));
}

TEST(Forms, ReduceErrors) {
    EXPECT_THROW(reduce({1, 0, -1}), PreconditionError);
    EXPECT_THROW(reduce({-1, 0, -1}), PreconditionError);
    EXPECT_THROW(reduce({2, 2, 2}), PreconditionError);
}

TEST(Forms, ReduceAgreesWithWordSearch) {
    auto g = oracle::rng(13);
    int checked = 0;
    while (checked < 200) {
        // a random reduced form moved by a random SL2 word
        const auto all = oracle::reduced_forms_brute(-oracle::uniform(g, 3, 150), true);
        if (all.empty()) continue;
        const oracle::F base = all[oracle::uniform(g, 0, static_cast<oracle::i64>(all.size()) - 1)];
        oracle::F f = base;
        for (int step = 0; step < 6; ++step) {
            switch (oracle::uniform(g, 0, 2)) {
            case 0: f = oracle::act(f, 1, 1, 0, 1); break;
            case 1: f = oracle::act(f, 1, -1, 0, 1); break;
            default: f = oracle::act(f, 0, -1, 1, 0); break;
            }
        }
        const auto r = reduce(to_form(f));
        EXPECT_EQ(r.form, to_form(base)) << "input " << to_form(f);
        EXPECT_EQ(r.transform.det(), 1);
        EXPECT_EQ(sl2_apply(to_form(f), r.transform), r.form);
        EXPECT_TRUE(is_reduced(r.form));
        ++checked;
    }
}

TEST(Forms, PrincipalForm) {
    EXPECT_EQ(principal_form(-4), (Form{1, 0, 1}));
    EXPECT_EQ(principal_form(-23), (Form{1, 1, 6}));
    EXPECT_EQ(principal_form(8), (Form{1, 0, -2}));
    EXPECT_THROW(principal_form(-5), PreconditionError);
    EXPECT_THROW(principal_form(0), PreconditionError);
    for (int d = -200; d <= 200; ++d) {
        if (!is_valid_discriminant(d)) continue;
        EXPECT_EQ(discriminant(principal_form(d)), d);
    }
}

TEST(Forms, Sl2Apply) {
    EXPECT_EQ(sl2_apply({1, 0, 1}, Mat2::identity()), (Form{1, 0, 1}));
    EXPECT_EQ(sl2_apply({1, 0, 1}, Mat2{1, 1, 0, 1}), (Form{1, 2, 2}));
    EXPECT_THROW(sl2_apply({1, 0, 1}, Mat2{2, 0, 0, 1}), PreconditionError);
    auto g = oracle::rng(14);
    for (int i = 0; i < 200; ++i) {
        oracle::F f{oracle::uniform(g, -20, 20), oracle::uniform(g, -20, 20), oracle::uniform(g, -20, 20)};
        const oracle::i64 p = oracle::uniform(g, -5, 5), q = oracle::uniform(g, -5, 5);
        // complete (p, q) to a determinant-one matrix when gcd(p, q) = 1
        Int s, t;
        if (gcd(Int(p), Int(q)) != 1) continue;
        xgcd(Int(p), Int(q), s, t); // s p + t q = 1
        const Mat2 M{p, -t, q, s};
        ASSERT_EQ(M.det(), 1);
        const Form h = sl2_apply(to_form(f), M);
        EXPECT_EQ(discriminant(h), f.disc());
        const auto o = oracle::act(f, p, -t.get_si(), q, s.get_si());
        EXPECT_EQ(h, to_form(o));
    }
}

TEST(Forms, ReducedFormsMatchEnumeration) {
    for (int d = -3; d >= -400; --d) {
        if (!is_valid_discriminant(d)) continue;
        for (bool prim : {true, false}) {
            auto got = reduced_forms(d, prim);
            auto want = oracle::reduced_forms_brute(d, prim);
            ASSERT_EQ(got.size(), want.size()) << "D=" << d;
            std::set<oracle::F> gs;
            for (const auto& f : got) gs.insert({f.m.get_si(), f.k.get_si(), f.n.get_si()});
            EXPECT_EQ(gs, std::set<oracle::F>(want.begin(), want.end())) << "D=" << d;
        }
    }
    // class numbers
    EXPECT_EQ(reduced_forms(-23).size(), 3u);
    EXPECT_EQ(reduced_forms(-4).size(), 1u);
    EXPECT_EQ(reduced_forms(-20).size(), 2u);
    EXPECT_EQ(reduced_forms(-56).size(), 4u);
}

TEST(Forms, RepresentsExamples) {
    auto w = represents({1, 0, 1}, 25);
    ASSERT_TRUE(w);
    EXPECT_EQ(eval(Form{1, 0, 1}, *w), 25);
    EXPECT_FALSE(represents({2, 1, 3}, 1));
    EXPECT_TRUE(represents_is_exact({2, 1, 3}));
    EXPECT_EQ(represents({1, 0, -2}, 1, 10), (Vec2{1, 0}));
    EXPECT_FALSE(represents({1, 0, -2}, 1, 10) == std::nullopt);
    EXPECT_FALSE(represents({1, 0, 1}, -3));
    EXPECT_EQ(represents({1, 0, 1}, 0), (Vec2{0, 0}));
    EXPECT_FALSE(represents_is_exact({1, 0, -2}));
}

TEST(Forms, RepresentsAgreesWithBruteForceOnDefiniteForms) {
    auto g = oracle::rng(15);
    for (int i = 0; i < 150; ++i) {
        const auto all = oracle::reduced_forms_brute(-oracle::uniform(g, 3, 120), false);
        if (all.empty()) continue;
        oracle::F f = all[oracle::uniform(g, 0, static_cast<oracle::i64>(all.size()) - 1)];
        const bool negate = oracle::uniform(g, 0, 1) == 1;
        if (negate) f = {-f.m, -f.k, -f.n};
        for (oracle::i64 t = -30; t <= 60; ++t) {
            // on a reduced form, f(x,y) = t forces |x|, |y| <= |t|
            const bool brute = !oracle::representations(f, t, std::max<oracle::i64>(1, t < 0 ? -t : t)).empty();
            const auto w = represents(to_form(f), t);
            EXPECT_EQ(w.has_value(), brute) << to_form(f) << " t=" << t;
            if (w) {
                EXPECT_EQ(eval(to_form(f), *w), t);
            }
        }
    }
}

TEST(Forms, RepresentsIndefiniteWitnessesAreValid) {
    auto g = oracle::rng(16);
    for (int i = 0; i < 100; ++i) {
        oracle::F f{oracle::uniform(g, -6, 6), oracle::uniform(g, -6, 6), oracle::uniform(g, -6, 6)};
        if (f.disc() <= 0) continue;
        for (oracle::i64 t = -10; t <= 10; ++t) {
            const auto w = represents(to_form(f), t, 8);
            const bool brute = !oracle::representations(f, t, 8).empty();
            EXPECT_EQ(w.has_value(), brute);
            if (w) {
                EXPECT_EQ(eval(to_form(f), *w), t);
            }
        }
    }
}

TEST(Forms, SemigroupProbe) {
    const auto ok = semigroup_probe({1, 0, 1}, 3);
    EXPECT_FALSE(ok.counterexample);
    EXPECT_TRUE(ok.exact);
    EXPECT_GT(ok.products_checked, 0u);
    // 2 is a value of (2,2,3) but 2*2 = 4 is not
    const auto bad = semigroup_probe({2, 2, 3}, 2);
    ASSERT_TRUE(bad.counterexample);
    EXPECT_TRUE(oracle::representations({2, 2, 3}, bad.counterexample->product.get_si(), 20).empty());
    EXPECT_EQ(eval(Form{2, 2, 3}, bad.counterexample->x) * eval(Form{2, 2, 3}, bad.counterexample->y),
              bad.counterexample->product);
    // forms admitting a normed pairing have the property, including the order-3 class (2,1,3)
    EXPECT_FALSE(semigroup_probe({4, 2, 6}, 3).counterexample);
    EXPECT_FALSE(semigroup_probe({2, 1, 3}, 3).counterexample);
    EXPECT_THROW(semigroup_probe({1, 2, 1}, 2), DegenerateFormError);
}

TEST(Forms, DoubledPolarization) {
    const Form f{2, 1, 3};
    const DoubledPolarization F2(f);
    EXPECT_TRUE(F2.matrix.is_symmetric());
    for (int x1 = -2; x1 <= 2; ++x1)
        for (int x2 = -2; x2 <= 2; ++x2) EXPECT_EQ(F2({x1, x2}, {x1, x2}), 2 * eval(f, {x1, x2}));
}
