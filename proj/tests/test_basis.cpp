#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenskit/array.hpp"
#include "tenskit/basis.hpp"
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

TEST_CASE("changes must be square and invertible, and inverses are stored")
{
    const BasisChange c(rows2({{2, 0}, {0, 1}}));
    CHECK(array_inner(c.a(), c.ainv()) == delta(2, 1));
    CHECK_THROWS_AS(BasisChange(rows2({{1, 2}, {2, 4}})), Error);
    CHECK_THROWS_AS(BasisChange(Array(2, Valence{2, 0})), Error);
}

TEST_CASE("vector coordinates pick up one inverse factor")
{
    const BasisChange c(rows2({{2, 0}, {0, 1}}), "e", "f");
    const TensorMap v = vector_like(2, vec2(4, 5), lbl("a"));
    const TensorMap vbar = transform(v, c);
    CHECK(vbar.basis() == "f");
    CHECK(vbar.coeffs() == vec2(2, 5));

    // non-diagonal change, to pin the orientation: the j-th row of the
    // coefficient array holds the old coordinates of the j-th new basis
    // vector
    const BasisChange c2(rows2({{1, 1}, {0, 1}}), "e", "f");
    CHECK(transform(v, c2).coeffs() == vec2(4, 1));
}

TEST_CASE("form coordinates pick up one forward factor")
{
    const BasisChange c(rows2({{2, 0}, {0, 1}}), "e", "f");
    const TensorMap f = form_like(2, covec2(5, 7), lbl("a"));
    const TensorMap fbar = transform(f, c);
    CHECK(fbar.basis() == "f");
    CHECK(fbar.coeffs() == covec2(10, 7));

    // the pairing of a form with a vector does not move
    const TensorMap v = vector_like(2, vec2(4, 5), lbl("a"));
    CHECK(inner(fbar, transform(v, c)).coeffs().flat(0) == inner(f, v).coeffs().flat(0));
}

TEST_CASE("operators transform by the similarity product")
{
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));

    const BasisChange cd(rows2({{2, 0}, {0, 1}}), "e", "f");
    const TensorMap xd = transform_operator(x, cd);
    CHECK(xd.coeffs() == rows2({{1, 4}, {Scalar(3, 2), 4}}));
    CHECK(xd == transform(x, cd));

    const BasisChange cn(rows2({{1, 1}, {0, 1}}), "e", "f");
    const TensorMap xn = transform_operator(x, cn);
    CHECK(xn.coeffs() == rows2({{4, 2}, {3, 1}}));
    CHECK(xn == transform(x, cn));

    // similarity form only exists for one sub and one super
    const TensorMap v = vector_like(2, vec2(4, 5), lbl("a"));
    CHECK_THROWS_AS((void)transform_operator(v, cd), Error);
}

TEST_CASE("basis names chain and mismatches are refused")
{
    const BasisChange c1(rows2({{2, 0}, {0, 1}}), "e", "f");
    const BasisChange c2(rows2({{1, 1}, {0, 1}}), "f", "g");
    const TensorMap v = vector_like(2, vec2(4, 5), lbl("a"));

    const TensorMap step = transform(transform(v, c1), c2);
    CHECK(step.basis() == "g");
    CHECK(step == transform(v, compose_changes(c2, c1)));

    // c2 expects basis "f"
    CHECK_THROWS_AS((void)transform(v, c2), Error);
    // chains must connect
    CHECK_THROWS_AS((void)compose_changes(c1, c2), Error);

    // an unnamed change tags the result with a primed basis
    const BasisChange anon(rows2({{2, 0}, {0, 1}}));
    CHECK(transform(v, anon).basis() == "e'");
}

TEST_CASE("scalars and traces do not move")
{
    const BasisChange c1(rows2({{2, 0}, {0, 1}}), "e", "f");
    const BasisChange c2(rows2({{1, 1}, {0, 1}}), "f", "g");
    CHECK(scalar_invariance_check(scalar_like(2, Scalar(7, 3)), {c1, c2}));

    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const auto tracePair = std::vector<std::pair<IndexLabel, IndexLabel>>{{lbl("a"), lbl("b")}};
    CHECK(contract(transform(x, c1), tracePair).coeffs().flat(0)
          == contract(x, tracePair).coeffs().flat(0));
}
