#include <doctest.h>

#include "oracles.hpp"

#include <qtcat/symfunc.hpp>

#include <random>

using namespace qtcat;

namespace {

RatQT rq_q(int e = 1) { return RatQT(LaurentQT::q(e)); }
RatQT rq_t(int e = 1) { return RatQT(LaurentQT::t(e)); }

LaurentQT M_poly() {
    return (LaurentQT::one() - LaurentQT::q()) * (LaurentQT::one() - LaurentQT::t());
}

SymFunc random_symfunc(std::mt19937& rng, Basis b, int max_deg) {
    SymFunc f(b);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int trial = 0; trial < 4; ++trial) {
        auto parts = partitions_of(deg(rng));
        const Partition& lam = parts[rng() % parts.size()];
        int c = coeff(rng);
        if (c != 0) f.add_term(lam, RatQT(c));
    }
    return f;
}

const Basis kClassical[5] = {Basis::Monomial, Basis::Elementary, Basis::Homogeneous,
                             Basis::PowerSum, Basis::Schur};

}  // namespace

TEST_CASE("partition generation") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    auto p3 = partitions_of(3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK(!dominates(Partition({2, 2}), Partition({3, 1})));
}

TEST_CASE("composition generation") {
    CHECK(compositions_of(0).size() == 1);
    CHECK(compositions_of(4).size() == 8);
    auto c3 = compositions_of(3);
    CHECK(c3[0] == Composition({3}));
    CHECK(c3[1] == Composition({2, 1}));
    CHECK(c3[2] == Composition({1, 2}));
    CHECK(c3[3] == Composition({1, 1, 1}));
}

TEST_CASE("conversions match the monomial expansion oracle") {
    for (int n = 0; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            for (Basis b : kClassical) {
                SymFunc in_m = convert(SymFunc::element(b, lam), Basis::Monomial);
                auto expect = oracle::monomial_coeffs(oracle::expand_element(b, lam, n));
                for (const auto& [mu, c] : expect) CHECK(in_m.coeff(mu) == RatQT(c));
                for (const auto& [mu, c] : in_m.coeffs()) {
                    auto it = expect.find(mu);
                    CHECK((it != expect.end() && RatQT(it->second) == c));
                }
            }
}

TEST_CASE("basic conversions") {
    CHECK(convert(sf_h(2), Basis::Schur) == sf_s(Partition({2})));
    CHECK(convert(sf_e(2), Basis::Schur) == sf_s(Partition({1, 1})));
    CHECK(convert(sf_p(2), Basis::Schur) ==
          sf_s(Partition({2})) - sf_s(Partition({1, 1})));
}

TEST_CASE("conversion roundtrips") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        Basis b0 = kClassical[rng() % 5], b1 = kClassical[rng() % 5];
        SymFunc f = random_symfunc(rng, b0, 6);
        CHECK(convert(convert(f, b1), b0) == f);
    }
}

TEST_CASE("products") {
    SymFunc e1e1 = convert(sf_e(1) * sf_e(1), Basis::Schur);
    CHECK(e1e1 == sf_s(Partition({2})) + sf_s(Partition({1, 1})));
    SymFunc h1h1 = convert(sf_h(1) * sf_h(1), Basis::Schur);
    CHECK(h1h1 == sf_s(Partition({2})) + sf_s(Partition({1, 1})));
    std::mt19937 rng(29);
    SymFunc f = random_symfunc(rng, Basis::Schur, 4);
    CHECK(f * SymFunc::one(Basis::Schur) == f);
}

TEST_CASE("Hall scalar product") {
    CHECK(hall_inner(sf_s(Partition({2, 1})), sf_s(Partition({2, 1}))) == RatQT(1));
    CHECK(hall_inner(sf_s(Partition({2})), sf_s(Partition({1, 1}))).is_zero());
    CHECK(hall_inner(sf_p(2), sf_p(2)) == RatQT(2));
}

TEST_CASE("h and m are dual bases") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                RatQT v = hall_inner(SymFunc::element(Basis::Homogeneous, lam),
                                     SymFunc::element(Basis::Monomial, mu));
                CHECK(v == (lam == mu ? RatQT(1) : RatQT()));
            }
}

TEST_CASE("perp is adjoint to multiplication") {
    CHECK(perp(sf_h(1), sf_s(Partition({2}))) == convert(sf_s(Partition({1})), Basis::Schur));
    CHECK(perp(sf_h(1), sf_s(Partition({1, 1}))) == convert(sf_s(Partition({1})), Basis::Schur));
    CHECK(perp(sf_h(2), sf_s(Partition({1}))).is_zero());

    std::mt19937 rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        SymFunc g = SymFunc::element(Basis::Homogeneous, Partition({1 + (int)(rng() % 2)}));
        SymFunc a = random_symfunc(rng, Basis::Schur, 3);
        SymFunc b = random_symfunc(rng, Basis::Schur, 4);
        CHECK(hall_inner(g * a, b) == hall_inner(a, perp(g, b)));
    }
}

TEST_CASE("omega involution") {
    CHECK(same_symfunc(omega_involution(sf_e(3)), sf_h(3)));
    CHECK(omega_involution(sf_s(Partition({2, 1}))) == sf_s(Partition({2, 1})));
    CHECK(omega_involution(sf_p(2)) == -sf_p(2));
    CHECK(omega_involution(sf_s(Partition({3, 1}))) == sf_s(Partition({2, 1, 1})));
    std::mt19937 rng(37);
    for (int iter = 0; iter < 30; ++iter) {
        SymFunc f = random_symfunc(rng, Basis::Schur, 6);
        CHECK(omega_involution(omega_involution(f)) == f);
    }
}

TEST_CASE("plethystic evaluation at scalar alphabets") {
    LaurentQT B21 = LaurentQT::one() + LaurentQT::q() + LaurentQT::t();
    CHECK(pleth_eval(sf_e(1), B21) == RatQT(B21));
    CHECK(pleth_eval(sf_h(2), LaurentQT::one()) == RatQT(1));
    CHECK(pleth_eval(sf_e(2), -LaurentQT::one()) == RatQT(1));
    // elementary on a finite alphabet vanishes beyond its size
    CHECK(pleth_eval(sf_e(3), LaurentQT::q() + LaurentQT::t()).is_zero());
}

TEST_CASE("plethystic scaling") {
    RatQT invM(LaurentQT::one(), M_poly());
    SymFunc p2s = pleth_scale(sf_p(2), invM);
    RatQT expect(LaurentQT::one(), (LaurentQT::one() - LaurentQT::q(2)) *
                                       (LaurentQT::one() - LaurentQT::t(2)));
    CHECK(p2s.coeff(Partition({2})) == expect);

    std::mt19937 rng(41);
    SymFunc f = random_symfunc(rng, Basis::PowerSum, 4);
    CHECK(pleth_scale(f, RatQT(1), false) == f);

    // f[-eps X] = omega f
    SymFunc twisted = pleth_scale(sf_e(2), RatQT(-1), true);
    CHECK(same_symfunc(twisted, sf_h(2)));
}

TEST_CASE("alphabet shifts") {
    VirtualAlphabet plus_one{RatQT(1), LaurentQT::one(), false};
    SymFunc lhs = pleth_shift(sf_h(2), plus_one);
    SymFunc rhs =
        convert(sf_h(2), Basis::Homogeneous) + sf_h(1) + SymFunc::one(Basis::Homogeneous);
    CHECK(same_symfunc(lhs, rhs));

    VirtualAlphabet minus_one{RatQT(1), -LaurentQT::one(), false};
    CHECK(same_symfunc(pleth_shift(sf_p(3), minus_one),
                       sf_p(3) - SymFunc::one(Basis::PowerSum)));

    // addition formula on two scalar alphabets X = {q}, Y = {t}:
    // e_2[X+Y] = e_2[X] + e_1[X]e_1[Y] + e_2[Y]
    RatQT lhs2 = pleth_eval(sf_e(2), LaurentQT::q() + LaurentQT::t());
    RatQT rhs2 = pleth_eval(sf_e(2), LaurentQT::q()) +
                 pleth_eval(sf_e(1), LaurentQT::q()) * pleth_eval(sf_e(1), LaurentQT::t()) +
                 pleth_eval(sf_e(2), LaurentQT::t());
    CHECK(lhs2 == rhs2);

    // shift by a scalar alphabet and back
    std::mt19937 rng(43);
    for (int iter = 0; iter < 20; ++iter) {
        SymFunc f = random_symfunc(rng, Basis::Schur, 4);
        LaurentQT A = LaurentQT::q() + LaurentQT::t(2);
        VirtualAlphabet fwd{RatQT(1), A, false};
        VirtualAlphabet back{RatQT(1), -A, false};
        CHECK(same_symfunc(pleth_shift(pleth_shift(f, fwd), back), f));
    }
}

TEST_CASE("dual-basis kernel on scalar alphabets") {
    // Omega[XY] expands as sum_lambda h_lambda[X] m_lambda[Y]; in each degree
    // d this reads h_d[XY] = sum_{|lambda|=d} h_lambda[X] m_lambda[Y].
    LaurentQT X = LaurentQT::q() + LaurentQT::t();
    LaurentQT Y = LaurentQT::one() + LaurentQT::q() * LaurentQT::t();
    for (int d = 0; d <= 4; ++d) {
        RatQT lhs = pleth_eval(sf_h(d), X * Y);
        RatQT rhs;
        for (const Partition& lam : partitions_of(d))
            rhs += pleth_eval(SymFunc::element(Basis::Homogeneous, lam), X) *
                   pleth_eval(SymFunc::element(Basis::Monomial, lam), Y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("omega factor series") {
    AlphaSeries b2 = omega_series(OmegaKind::CreationB, 2);
    CHECK(same_symfunc(b2.extract(0), SymFunc::one(Basis::Schur)));
    CHECK(same_symfunc(b2.extract(1), sf_e(1)));
    CHECK(same_symfunc(b2.extract(2), sf_e(2)));

    AlphaSeries c1 = omega_series(OmegaKind::CreationC, 1);
    CHECK(same_symfunc(c1.extract(0), SymFunc::one(Basis::Schur)));
    SymFunc expect = convert(sf_h(1), Basis::PowerSum).scaled(-RatQT(LaurentQT::q(-1)));
    CHECK(same_symfunc(c1.extract(1), expect));

    CHECK(same_symfunc(omega_series(OmegaKind::DualB, 0).extract(0),
                       SymFunc::one(Basis::Schur)));
}

TEST_CASE("hook Schur coefficients") {
    CHECK(hook_coefficient(sf_s(Partition({2, 1})), 1, 3) == RatQT(1));
    CHECK(hook_coefficient(sf_s(Partition({3})), 1, 3).is_zero());
    std::mt19937 rng(47);
    for (int iter = 0; iter < 30; ++iter) {
        SymFunc f = random_symfunc(rng, Basis::Schur, 6);
        for (int d = 1; d <= 6; ++d)
            for (int k = 0; k < d; ++k)
                CHECK(hook_coefficient(f, k, d) == hook_coefficient_via_he(f, k, d));
    }
}

TEST_CASE("canonical text form") {
    SymFunc f = sf_s(Partition({2})) + sf_s(Partition({1, 1})).scaled(rq_q());
    CHECK(f.str() == "s[2] + q*s[1,1]");
    CHECK(convert(sf_h(2), Basis::Schur).str() == "s[2]");
    SymFunc z;
    CHECK(z.str() == "0");
    CHECK((rq_q() + rq_t()).str() == "q + t");
}
