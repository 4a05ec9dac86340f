#include <doctest.h>

#include "helpers.hpp"

using namespace gabfield;
using namespace testhelpers;

namespace {

ThetaPoly random_theta_poly(const CyclicExtension& ext, int max_deg, Rng& rng) {
    std::vector<LElement> c;
    int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
    for (int i = 0; i <= d; ++i) c.push_back(random_lelement(ext, 1, rng));
    return ThetaPoly(&ext, std::move(c));
}

ThetaPoly z_power(const CyclicExtension& ext, std::size_t k) {
    return ThetaPoly::monomial(ext.one(), k);
}

}  // namespace

TEST_CASE("canonical form and unity") {
    auto ext = kummer_ext();
    ThetaPoly zero(ext.get());
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    ThetaPoly unit = ThetaPoly::one(ext.get());
    CHECK(unit.degree() == 0);
    CHECK(unit.is_monic());
    // trailing zero coefficients are trimmed
    CHECK(ThetaPoly(ext.get(), {ext->one(), ext->zero()}).degree() == 0);
}

TEST_CASE("addition") {
    auto ext = kummer_ext();
    Rng rng(0xadd);
    ThetaPoly p = random_theta_poly(*ext, 3, rng);
    CHECK(p + ThetaPoly(ext.get()) == p);
    ThetaPoly yz = ThetaPoly::monomial(ext->y_power(1), 1);
    CHECK((yz + (-yz)).is_zero());
    for (int i = 0; i < 200; ++i) {
        ThetaPoly a = random_theta_poly(*ext, 3, rng);
        ThetaPoly b = random_theta_poly(*ext, 3, rng);
        CHECK((a + b).degree() <= std::max(a.degree(), b.degree()));
    }
}

TEST_CASE("skew product basics") {
    auto kum = kummer_ext();
    ThetaPoly z = z_power(*kum, 1);
    ThetaPoly y0 = ThetaPoly::monomial(kum->y_power(1), 0);
    // Z·(y Z^0) = θ(y) Z = β^3 y Z
    CHECK(z * y0 == ThetaPoly::monomial(parse_lelement("β^3*y", *kum), 1));
    // (y Z)·(y Z) = y θ(y) Z^2 = β^3 y^2 Z^2
    ThetaPoly yz = ThetaPoly::monomial(kum->y_power(1), 1);
    CHECK(yz * yz == ThetaPoly::monomial(parse_lelement("β^3*y^2", *kum), 2));

    auto as = artin_schreier_ext();
    ThetaPoly z5 = z_power(*as, 1);
    ThetaPoly y05 = ThetaPoly::monomial(as->y_power(1), 0);
    CHECK(z5 * y05 == ThetaPoly::monomial(parse_lelement("y + 1", *as), 1));
}

TEST_CASE("ring axioms, degree additivity and non-commutativity") {
    Rng rng(0x57e3);
    for (auto ext : {kummer_ext(), artin_schreier_ext()}) {
        for (int i = 0; i < 300; ++i) {
            ThetaPoly a = random_theta_poly(*ext, 2, rng);
            ThetaPoly b = random_theta_poly(*ext, 2, rng);
            ThetaPoly c = random_theta_poly(*ext, 2, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            if (!a.is_zero() && !b.is_zero())
                CHECK((a * b).degree() == a.degree() + b.degree());
        }
        // a concrete non-commuting pair: Z and y
        ThetaPoly z = z_power(*ext, 1);
        ThetaPoly y0 = ThetaPoly::monomial(ext->y_power(1), 0);
        CHECK(z * y0 != y0 * z);
    }
}

TEST_CASE("left division") {
    Rng rng(0x1ef7);
    for (auto ext : {kummer_ext(), artin_schreier_ext()}) {
        // reconstruct a constructed product
        for (int i = 0; i < 50; ++i) {
            ThetaPoly b = random_theta_poly(*ext, 2, rng);
            ThetaPoly q0 = random_theta_poly(*ext, 2, rng);
            if (b.is_zero()) continue;
            auto [q, r] = left_divmod(b * q0, b);
            CHECK(q == q0);
            CHECK(r.is_zero());
        }
        // degree < divisor degree: quotient 0
        ThetaPoly small = ThetaPoly::monomial(ext->y_power(1), 0);
        ThetaPoly big = z_power(*ext, 2);
        auto [q, r] = left_divmod(small, big);
        CHECK(q.is_zero());
        CHECK(r == small);
        CHECK_THROWS_AS(left_divmod(small, ThetaPoly(ext.get())), std::invalid_argument);
        // random recomposition
        for (int i = 0; i < 300; ++i) {
            ThetaPoly a = random_theta_poly(*ext, 4, rng);
            ThetaPoly b = random_theta_poly(*ext, 2, rng);
            if (b.is_zero()) continue;
            auto [q2, r2] = left_divmod(a, b);
            CHECK(b * q2 + r2 == a);
            CHECK(r2.degree() < b.degree());
        }
    }
}

TEST_CASE("right division") {
    Rng rng(0x2ef7);
    for (auto ext : {kummer_ext(), artin_schreier_ext()}) {
        for (int i = 0; i < 50; ++i) {
            ThetaPoly b = random_theta_poly(*ext, 2, rng);
            ThetaPoly q0 = random_theta_poly(*ext, 2, rng);
            if (b.is_zero()) continue;
            auto [q, r] = right_divmod(q0 * b, b);
            CHECK(q == q0);
            CHECK(r.is_zero());
        }
        // degree-0 divisor b: quotient coefficients are a_i θ^i(b)^{-1}
        ThetaPoly a = random_theta_poly(*ext, 3, rng);
        LElement b = random_lelement(*ext, 1, rng);
        if (!b.is_zero() && !a.is_zero()) {
            auto [q, r] = right_divmod(a, ThetaPoly::monomial(b, 0));
            CHECK(r.is_zero());
            for (int i = 0; i <= a.degree(); ++i)
                CHECK(q.coeff(static_cast<std::size_t>(i)) ==
                      a.coeff(static_cast<std::size_t>(i)) *
                          apply_theta(b, i).inverse());
        }
        for (int i = 0; i < 300; ++i) {
            ThetaPoly a2 = random_theta_poly(*ext, 4, rng);
            ThetaPoly b2 = random_theta_poly(*ext, 2, rng);
            if (b2.is_zero()) continue;
            auto [q2, r2] = right_divmod(a2, b2);
            CHECK(q2 * b2 + r2 == a2);
            CHECK(r2.degree() < b2.degree());
        }
    }
}

TEST_CASE("evaluation") {
    auto kum = kummer_ext();
    Rng rng(0xe7a1);
    LElement g = random_lelement(*kum, 2, rng);
    CHECK(ThetaPoly::one(kum.get()).eval(g) == g);
    CHECK(z_power(*kum, 1).eval(kum->y_power(1)) == parse_lelement("β^3*y", *kum));
    auto as = artin_schreier_ext();
    CHECK(z_power(*as, 1).eval(as->y_power(1)) == parse_lelement("y + 1", *as));

    // K-linearity in the argument
    for (auto ext : {kummer_ext(), artin_schreier_ext()}) {
        for (int i = 0; i < 100; ++i) {
            ThetaPoly p = random_theta_poly(*ext, 3, rng);
            LElement u = random_lelement(*ext, 1, rng);
            LElement v = random_lelement(*ext, 1, rng);
            LElement scalar = ext->from_scalar(random_ratfunc(ext->base(), 2, rng));
            CHECK(p.eval(scalar * u + v) == scalar * p.eval(u) + p.eval(v));
        }
        // composition: ev(P·Q, g) = ev(P, ev(Q, g))
        for (int i = 0; i < 300; ++i) {
            ThetaPoly p = random_theta_poly(*ext, 2, rng);
            ThetaPoly q = random_theta_poly(*ext, 2, rng);
            LElement x = random_lelement(*ext, 1, rng);
            CHECK((p * q).eval(x) == p.eval(q.eval(x)));
        }
    }
}

TEST_CASE("operator matrix") {
    auto ext = kummer_ext();
    CHECK(ThetaPoly::one(ext.get()).operator_matrix() ==
          Matrix<RatFunc>::identity(5, RatFunc::one(ext->base())));
    CHECK(z_power(*ext, 1).operator_matrix() == ext->theta_matrix(1));

    // rank + nullity = n
    Rng rng(0x9a7e);
    for (int i = 0; i < 50; ++i) {
        ThetaPoly p = random_theta_poly(*ext, 3, rng);
        if (p.is_zero()) continue;
        CHECK(rank_of(p.operator_matrix()) + root_space_dim(p) == 5);
    }
}

TEST_CASE("root space dimensions") {
    auto ext = kummer_ext();
    CHECK(root_space_dim(ThetaPoly::one(ext.get())) == 0);
    CHECK_THROWS_AS(root_space_dim(ThetaPoly(ext.get())), std::invalid_argument);

    // annihilator of span(y) kills exactly a 1-dimensional space: y is a
    // root by construction and the bound caps the dimension at 1
    std::vector<LElement> v = {ext->y_power(1)};
    ThetaPoly ann = annihilator(ext.get(), v);
    CHECK(ann.degree() == 1);
    CHECK(ann.eval(ext->y_power(1)).is_zero());
    CHECK(root_space_dim(ann) == 1);

    // Z - Z^0 fixes exactly K·1 inside L
    ThetaPoly fix = ThetaPoly::monomial(ext->one(), 1) - ThetaPoly::one(ext.get());
    CHECK(root_space_dim(fix) == 1);
    CHECK(fix.eval(ext->one()).is_zero());

    Rng rng(0xd13);
    for (auto e : {kummer_ext(), artin_schreier_ext()})
        for (int i = 0; i < 300; ++i) {
            ThetaPoly p = random_theta_poly(*e, 4, rng);
            if (p.is_zero()) continue;
            CHECK(root_space_dim(p) <= static_cast<std::size_t>(p.degree()));
        }
}

TEST_CASE("annihilator") {
    auto ext = kummer_ext();
    Rng rng(0xa221);

    // empty list: unity
    CHECK(annihilator(ext.get(), {}) == ThetaPoly::one(ext.get()));

    // singleton: Z - θ(g)/g
    LElement g = random_lelement(*ext, 1, rng);
    if (g.is_zero()) g = ext->y_power(1);
    std::vector<LElement> single = {g};
    ThetaPoly ann1 = annihilator(ext.get(), single);
    CHECK(ann1 == ThetaPoly::monomial(ext->one(), 1) -
                      ThetaPoly::monomial(apply_theta(g) * g.inverse(), 0));
    CHECK(ann1.eval(g).is_zero());

    // full basis: degree 5 and vanishes on 100 random elements of L
    std::vector<LElement> basis;
    for (std::uint32_t j = 0; j < 5; ++j) basis.push_back(ext->y_power(j));
    ThetaPoly full = annihilator(ext.get(), basis);
    CHECK(full.degree() == 5);
    CHECK(full.is_monic());
    for (int i = 0; i < 100; ++i)
        CHECK(full.eval(random_lelement(*ext, 2, rng)).is_zero());

    for (auto e : {kummer_ext(), artin_schreier_ext()}) {
        for (int i = 0; i < 30; ++i) {
            std::vector<LElement> v;
            for (int j = 0; j < 3; ++j) v.push_back(random_lelement(*e, 1, rng));
            ThetaPoly ann = annihilator(e.get(), v);
            CHECK(ann.is_monic());
            CHECK(ann.degree() == static_cast<int>(rank_weight(v)));
            // vanishes on random span combinations
            for (int s = 0; s < 20; ++s) {
                LElement combo = e->zero();
                for (const LElement& w : v)
                    combo = combo + e->from_scalar(random_ratfunc(e->base(), 1, rng)) * w;
                CHECK(ann.eval(combo).is_zero());
            }
            // order invariance
            std::vector<LElement> perm = {v[2], v[0], v[1]};
            CHECK(annihilator(e.get(), perm) == ann);
            // minimality: no smaller-degree polynomial vanishes on the span
            if (ann.degree() >= 1) {
                for (int s = 0; s < 10; ++s) {
                    ThetaPoly smaller = random_theta_poly(*e, ann.degree() - 1, rng);
                    if (smaller.is_zero()) continue;
                    bool vanishes_everywhere = true;
                    for (const LElement& w : v)
                        if (!smaller.eval(w).is_zero()) vanishes_everywhere = false;
                    CHECK_FALSE(vanishes_everywhere);
                }
            }
        }
    }
}

TEST_CASE("minimal ideal generator") {
    auto ext = kummer_ext();
    Rng rng(0x3456);

    std::vector<LElement> zero_vec(5, ext->zero());
    CHECK(min_ideal_generator(ext.get(), zero_vec) == ThetaPoly::one(ext.get()));

    std::vector<LElement> basis;
    for (std::uint32_t j = 0; j < 5; ++j) basis.push_back(ext->y_power(j));
    CHECK(min_ideal_generator(ext.get(), basis).degree() == 5);

    // entries confined to K·y span a single dimension
    std::vector<LElement> line;
    for (int i = 0; i < 5; ++i)
        line.push_back(ext->from_scalar(random_ratfunc(ext->base(), 2, rng)) * ext->y_power(1));
    CHECK(min_ideal_generator(ext.get(), line).degree() == 1);

    // every vanishing polynomial is a left multiple Q·gen of the generator
    for (int i = 0; i < 20; ++i) {
        std::vector<LElement> v;
        for (int j = 0; j < 2; ++j) v.push_back(random_lelement(*ext, 1, rng));
        ThetaPoly gen = min_ideal_generator(ext.get(), v);
        std::vector<LElement> all;
        for (std::uint32_t j = 0; j < 5; ++j) all.push_back(ext->y_power(j));
        ThetaPoly big = annihilator(ext.get(), all);  // vanishes on everything
        auto [q, r] = right_divmod(big, gen);
        CHECK(r.is_zero());
    }
}
