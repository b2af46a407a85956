#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenskit/array.hpp"
#include "tenskit/error.hpp"
#include "tenskit/metric.hpp"
#include "tenskit/scalar.hpp"
#include "tenskit/tensormap.hpp"

using namespace tenskit;

namespace {

Array diag_metric(const Scalar& a, const Scalar& b)
{
    Array g(2, Valence{2, 0});
    g.set({1, 1}, {}, a);
    g.set({2, 2}, {}, b);
    return g;
}

Array rows2(const std::vector<std::vector<Scalar>>& rows)
{
    return array_from_rows(rows, Valence{1, 1}, 2);
}

} // namespace

TEST_CASE("the inverse coefficient array inverts the metric")
{
    const Metric g(diag_metric(2, 3));
    CHECK(g.dim() == 2);
    CHECK(g.ginv().valence() == Valence{0, 2});
    CHECK(g.ginv().at({}, {1, 1}) == Scalar(1, 2));
    CHECK(g.ginv().at({}, {2, 2}) == Scalar(1, 3));
    CHECK(g.ginv().at({}, {1, 2}) == Scalar(0));
    CHECK(array_mul(g.ginv(), g.g(), {{2, 1}}) == delta(2, 1));
}

TEST_CASE("metrics must be square, symmetric, and invertible")
{
    CHECK_THROWS_AS(Metric(Array(2, Valence{1, 1})), Error);
    Array asym(2, Valence{2, 0});
    asym.set({1, 1}, {}, Scalar(1));
    asym.set({1, 2}, {}, Scalar(2));
    asym.set({2, 1}, {}, Scalar(3));
    asym.set({2, 2}, {}, Scalar(4));
    CHECK_THROWS_AS((void)Metric(asym), Error);
    CHECK_THROWS_AS(Metric(Array(2, Valence{2, 0})), Error);
}

TEST_CASE("lowering a vector scales by the metric diagonal")
{
    const Metric g(diag_metric(2, 3));
    Array coords(2, Valence{0, 1});
    coords.set({}, {1}, Scalar(1));
    coords.set({}, {2}, Scalar(1));
    const TensorMap v = vector_like(2, coords, lbl("a"));
    const TensorMap low = lower_index(v, lbl("a"), g);
    CHECK(low.subs() == std::vector<IndexLabel>{lbl("a'")});
    CHECK(low.supers().empty());
    CHECK(low.coeffs().at({1}, {}) == Scalar(2));
    CHECK(low.coeffs().at({2}, {}) == Scalar(3));

    const TensorMap back = raise_index(low, lbl("a'"), g);
    CHECK(back.supers() == std::vector<IndexLabel>{lbl("a''")});
    CHECK(back.coeffs().at({}, {1}) == Scalar(1));
    CHECK(back.coeffs().at({}, {2}) == Scalar(1));
}

TEST_CASE("lowering an operator prepends the primed subscript")
{
    const Metric g(diag_metric(2, 3));
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const TensorMap low = lower_index(x, lbl("b"), g);
    CHECK(low.subs() == std::vector<IndexLabel>{lbl("b'"), lbl("a")});
    CHECK(low.supers().empty());
    CHECK(low.coeffs().at({1, 1}, {}) == Scalar(2));
    CHECK(low.coeffs().at({1, 2}, {}) == Scalar(6));
    CHECK(low.coeffs().at({2, 1}, {}) == Scalar(6));
    CHECK(low.coeffs().at({2, 2}, {}) == Scalar(12));
    CHECK_THROWS_AS((void)lower_index(x, lbl("a"), g), Error);
    CHECK_THROWS_AS((void)raise_index(x, lbl("b"), g), Error);
    CHECK_THROWS_AS((void)lower_index(x, lbl("q"), g), Error);
}

TEST_CASE("raising appends the primed superscript")
{
    const Metric g(diag_metric(2, 3));
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const TensorMap up = raise_index(x, lbl("a"), g);
    CHECK(up.subs().empty());
    CHECK(up.supers() == std::vector<IndexLabel>{lbl("b"), lbl("a'")});
    // up^{b,a'} = sum_w x_w^b ginv^{w,a'}
    CHECK(up.coeffs().at({}, {1, 1}) == Scalar(1, 2));
    CHECK(up.coeffs().at({}, {1, 2}) == Scalar(1));  // x_2^1 / 3 = 3/3
    CHECK(up.coeffs().at({}, {2, 1}) == Scalar(1));  // x_1^2 / 2 = 2/2
    CHECK(up.coeffs().at({}, {2, 2}) == Scalar(4, 3));
}

TEST_CASE("dual shift moves a slot across and stars it, keeping every value")
{
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));

    const TensorMap s1 = dual_shift(x, lbl("b"));
    CHECK(s1.subs() == std::vector<IndexLabel>{lbl("a"), lbl("b*")});
    CHECK(s1.supers().empty());
    CHECK(s1.coeffs().at({1, 2}, {}) == x.coeffs().at({1}, {2}));

    const TensorMap s2 = dual_shift(s1, lbl("a"));
    CHECK(s2.subs() == std::vector<IndexLabel>{lbl("b*")});
    CHECK(s2.supers() == std::vector<IndexLabel>{lbl("a*")});
    CHECK(s2.coeffs() == array_transpose(x.coeffs(), {1, 2}));

    // shifting the starred slot back is the identity up to label order
    const TensorMap back = dual_shift(s1, lbl("b*"));
    CHECK(reorder_like(back, x.subs(), x.supers()) == x);

    CHECK_THROWS_AS((void)dual_shift(x, lbl("q")), Error);
}
