#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenskit/array.hpp"
#include "tenskit/bilateral.hpp"
#include "tenskit/error.hpp"
#include "tenskit/scalar.hpp"
#include "tenskit/tensormap.hpp"

using namespace tenskit;

namespace {

Array rows2(const std::vector<std::vector<Scalar>>& rows)
{
    return array_from_rows(rows, Valence{1, 1}, 2);
}

Array vec2(const Scalar& a, const Scalar& b)
{
    Array v(2, Valence{0, 1});
    v.set({}, {1}, a);
    v.set({}, {2}, b);
    return v;
}

Array covec2(const Scalar& a, const Scalar& b)
{
    Array v(2, Valence{1, 0});
    v.set({1}, {}, a);
    v.set({2}, {}, b);
    return v;
}

} // namespace

TEST_CASE("the identification keeps labels and coefficients")
{
    const BilateralTensor b(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const TensorMap t = lambda_B(b);
    CHECK(t.subs() == b.subs());
    CHECK(t.supers() == b.supers());
    CHECK(t.coeffs() == b.coeffs());
    CHECK(lambda_B_inv(t) == b);
}

TEST_CASE("a form times a vector through the bilateral product")
{
    const BilateralTensor f(2, {lbl("a")}, {}, covec2(1, 2));
    const BilateralTensor v(2, {}, {lbl("b")}, vec2(2, 5));
    MatchSpec m;
    m.pairs.emplace_back(lbl("a"), lbl("b"));
    const BilateralTensor s = bilateral_mul(f, v, m);
    CHECK(s.subs().empty());
    CHECK(s.supers().empty());
    CHECK(s.coeffs().flat(0) == Scalar(12));
}

TEST_CASE("bilateral product agrees with map composition on a fixed example")
{
    const BilateralTensor x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const BilateralTensor y(2, {lbl("c")}, {lbl("a")}, rows2({{5, 6}, {7, 8}}));
    MatchSpec m;
    m.pairs.emplace_back(lbl("a"), lbl("a"));
    const BilateralTensor p = bilateral_mul(x, y, m);
    CHECK(p.coeffs() == rows2({{23, 34}, {31, 46}}));
    CHECK(lambda_B(p) == compose_general(lambda_B(x), lambda_B(y), m));
}

TEST_CASE("bilateral contraction matches map contraction")
{
    const BilateralTensor x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const BilateralTensor tr = bilateral_contract(x, {{lbl("a"), lbl("b")}});
    CHECK(tr.coeffs().flat(0) == Scalar(5));
    CHECK(lambda_B(tr) == contract(lambda_B(x), {{lbl("a"), lbl("b")}}));
    CHECK_THROWS_AS((void)bilateral_contract(x, {{lbl("b"), lbl("a")}}), Error);
}

TEST_CASE("addition and scaling work slotwise")
{
    const BilateralTensor v(2, {}, {lbl("a")}, vec2(1, 2));
    const BilateralTensor w(2, {}, {lbl("a")}, vec2(3, 4));
    CHECK(bi_add(v, w) == BilateralTensor(2, {}, {lbl("a")}, vec2(4, 6)));
    CHECK(bi_scale(Scalar(2), v) == BilateralTensor(2, {}, {lbl("a")}, vec2(2, 4)));
    CHECK_THROWS_AS((void)bi_add(v, BilateralTensor(2, {}, {lbl("b")}, vec2(3, 4))), Error);
}

TEST_CASE("bilateral permutation mirrors the map version")
{
    Array a(2, Valence{2, 0});
    a.set({1, 1}, {}, Scalar(1));
    a.set({1, 2}, {}, Scalar(2));
    a.set({2, 1}, {}, Scalar(3));
    a.set({2, 2}, {}, Scalar(4));
    const BilateralTensor t(2, {lbl("a"), lbl("b")}, {}, a);
    const BilateralTensor p = bilateral_permute(t, {2, 1}, {});
    CHECK(p.subs() == std::vector<IndexLabel>{lbl("b"), lbl("a")});
    CHECK(lambda_B(p) == permute(lambda_B(t), {2, 1}, {}));
}
