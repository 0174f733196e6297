#include <doctest.h>

#include "oracles.hpp"

#include <qtcat/dyck.hpp>

using namespace qtcat;

namespace {

const std::vector<int> kExampleArea = {0, 1, 2, 2, 1, 1, 2, 0, 1, 1, 2, 1, 0, 1, 2};
const std::vector<int> kExampleB = {0, 1, 2, 3, 4, 4, 5, 5, 6, 6, 7, 6, 6, 4, 2};
const std::vector<int> kRotatedArea = {0, 1, 1, 2, 1, 0, 1, 2, 0, 1, 1, 0, 0, 1};

DecoratedPath undecorated(const DyckPath& p) {
    return DecoratedPath(p, std::vector<bool>(p.rows(), false));
}

DecoratedPath with_rows(const DyckPath& p, std::initializer_list<int> rows1based) {
    std::vector<bool> dec(p.rows(), false);
    for (int r : rows1based) dec[r - 1] = true;
    return DecoratedPath(p, dec);
}

}  // namespace

TEST_CASE("path enumeration") {
    auto p2 = DyckPath::all(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].area_seq() == std::vector<int>{0, 0});
    CHECK(p2[1].area_seq() == std::vector<int>{0, 1});
    CHECK(DyckPath::all(3).size() == 5);
    long count8 = 0;
    DyckPath::enumerate(8, [&](const DyckPath&) { ++count8; });
    CHECK(count8 == 1430);
    CHECK_THROWS_AS(DyckPath({1}), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath({0, 2}), std::invalid_argument);
}

TEST_CASE("fifteen-row worked example") {
    DyckPath p(kExampleArea);
    CHECK(p.area() == 17);
    CHECK(p.b_sequence() == kExampleB);
    CHECK(p.dinv() == oracle::brute_dinv(p));

    auto [rotated, info] = rotate(undecorated(p));
    CHECK(rotated.path().area_seq() == kRotatedArea);
    CHECK(rotated.path().area() == 11);
    std::vector<int> expect_b = kExampleB;
    expect_b.pop_back();
    CHECK(rotated.path().b_sequence() == expect_b);
    CHECK(info.moved_rows == 6);
    CHECK(!info.removed_decorated);
    CHECK(unrotate(rotated, info) == undecorated(p));
}

TEST_CASE("b-sequence on tiny paths") {
    CHECK(DyckPath({0, 0}).b_sequence() == std::vector<int>{0, 1});
    CHECK(DyckPath({0, 1}).b_sequence() == std::vector<int>{0, 0});
}

TEST_CASE("b-sequence sums to the pairwise inversion count") {
    for (int n = 0; n <= 8; ++n)
        DyckPath::enumerate(n, [&](const DyckPath& p) {
            long sum = 0;
            auto b = p.b_sequence();
            for (int v : b) sum += v;
            CHECK(sum == oracle::brute_dinv(p));
            if (!b.empty()) CHECK(b[0] == 0);
        });
}

TEST_CASE("peak rows strictly increase the b-value") {
    for (int n = 1; n <= 7; ++n)
        DyckPath::enumerate(n, [&](const DyckPath& p) {
            auto order = p.reading_order();
            auto b = p.b_sequence();
            for (size_t i = 1; i < order.size(); ++i)
                if (!p.is_double_rise(order[i])) CHECK(b[i] > b[i - 1]);
        });
}

TEST_CASE("touch composition and area") {
    CHECK(DyckPath({0, 0}).touch_composition() == Composition({1, 1}));
    CHECK(DyckPath(kExampleArea).touch_composition() == Composition({7, 5, 3}));
    CHECK(DyckPath(kRotatedArea).area() == 11);
}

TEST_CASE("decoration constraints and counts") {
    // a single row is first in reading order and cannot be decorated
    DyckPath p1({0});
    int count = 0;
    DecoratedPath::enumerate(p1, [&](const DecoratedPath&) { ++count; });
    CHECK(count == 1);
    CHECK_THROWS_AS(DecoratedPath(p1, {true}), std::invalid_argument);

    // for (0,0) the reading order starts at row 2, so only row 1 is free
    count = 0;
    DecoratedPath::enumerate(DyckPath({0, 0}), [&](const DecoratedPath&) { ++count; });
    CHECK(count == 2);

    long total3 = 0;
    DecoratedPath::enumerate_all(3, [&](const DecoratedPath&) { ++total3; });
    CHECK(total3 == 20);

    for (int n = 1; n <= 5; ++n) {
        long total = 0;
        DecoratedPath::enumerate_all(n, [&](const DecoratedPath&) { ++total; });
        mpz_class cat;
        mpz_bin_uiui(cat.get_mpz_t(), 2 * n, n);
        cat /= (n + 1);
        CHECK(mpz_class(total) == cat << (n - 1));
    }
}

TEST_CASE("decorated statistics") {
    DecoratedPath a = with_rows(DyckPath({0, 0}), {1});
    PathStats sa = path_stats(a);
    CHECK(sa.peak_circ == 1);
    CHECK(sa.rise_circ == 0);
    CHECK(sa.dinv_circ == 0);
    CHECK(sa.area_circ == 0);

    DecoratedPath b = with_rows(DyckPath({0, 1}), {1});
    PathStats sb = path_stats(b);
    CHECK(sb.rise_circ == 1);
    CHECK(sb.peak_circ == 0);
    CHECK(sb.area_circ == 0);
    CHECK(sb.dinv_circ == 0);

    DecoratedPath c = undecorated(DyckPath(kExampleArea));
    PathStats sc = path_stats(c);
    CHECK(sc.area_circ == sc.area);
    CHECK(sc.dinv_circ == sc.dinv);
    CHECK(sc.b_seq == kExampleB);
}

TEST_CASE("rise-touch composition") {
    CHECK(rise_touch_composition(with_rows(DyckPath({0, 1}), {1})) == Composition({1}));
    CHECK(rise_touch_composition(with_rows(DyckPath({0, 0}), {1})) == Composition({1, 1}));
    DyckPath p(kExampleArea);
    CHECK(rise_touch_composition(undecorated(p)) == p.touch_composition());
}

TEST_CASE("rotation is a bijection with the b-sequence law") {
    DyckPath p1({0});
    auto [empty, info] = rotate(undecorated(p1));
    CHECK(empty.path().rows() == 0);
    CHECK(unrotate(empty, info) == undecorated(p1));

    for (int n = 1; n <= 6; ++n)
        DecoratedPath::enumerate_all(n, [&](const DecoratedPath& dp) {
            auto [rot, info2] = rotate(dp);
            CHECK(unrotate(rot, info2) == dp);
            std::vector<int> b0 = dp.path().b_sequence();
            b0.pop_back();
            CHECK(rot.path().b_sequence() == b0);
        });
}

TEST_CASE("rise-touch generating polynomials") {
    for (int ell = 0; ell <= 3; ++ell) {
        MultiPoly p = cat_rise(Composition({1}), 0, ell);
        CHECK(p == MultiPoly::one());
    }
    MultiPoly q_poly = cat_rise(Composition({1, 1}), 0, 0);
    MultiPoly expect_q;
    expect_q.add_term({1, 0, 0, 0}, 1);
    CHECK(q_poly == expect_q);

    MultiPoly t_poly = cat_rise(Composition({2}), 0, 0);
    MultiPoly expect_t;
    expect_t.add_term({0, 1, 0, 0}, 1);
    CHECK(t_poly == expect_t);

    CHECK(cat_rise(Composition(), 0, 0) == MultiPoly::one());
    CHECK(cat_rise(Composition(), 1, 0).is_zero());
    CHECK(cat_rise(Composition(), 0, 2).is_zero());
}

TEST_CASE("four-variable Catalan polynomial") {
    MultiPoly c2 = cat_poly(2, CatMethod::DecoratedSum);
    MultiPoly expect;
    expect.add_term({1, 0, 0, 0}, 1);
    expect.add_term({0, 1, 0, 0}, 1);
    expect.add_term({0, 0, 1, 0}, 1);
    expect.add_term({0, 0, 0, 1}, 1);
    CHECK(c2 == expect);
    CHECK(c2.str() == "q + t + z + w");
    CHECK(cat_poly(2, CatMethod::ProductForm) == c2);

    CHECK(cat_poly(3, CatMethod::DecoratedSum)
              .eval(BigRat(1), BigRat(1), BigRat(1), BigRat(1)) == BigRat(20));
    CHECK(c2.eval(BigRat(1), BigRat(1), BigRat(0), BigRat(0)) == BigRat(2));

    for (int n = 0; n <= 5; ++n)
        CHECK(cat_poly(n, CatMethod::DecoratedSum) == cat_poly(n, CatMethod::ProductForm));
}

TEST_CASE("multipoly JSON form") {
    MultiPoly p;
    p.add_term({1, 0, 0, 0}, 1);
    p.add_term({0, 1, 0, 0}, 2);
    CHECK(p.to_json() == "{\"vars\":[\"q\",\"t\",\"z\",\"w\"],\"terms\":[[[1,0,0,0],\"1\"],[[0,1,0,0],\"2\"]]}");
    CHECK(MultiPoly().to_json() == "{\"vars\":[\"q\",\"t\",\"z\",\"w\"],\"terms\":[]}");
    MultiPoly qt = cat_rise(Composition({1, 1}), 0, 0);
    CHECK(qt.to_laurent_qt() == LaurentQT::q());
}
