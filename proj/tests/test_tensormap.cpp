#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenskit/array.hpp"
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

TEST_CASE("index labels parse names, stars, and primes")
{
    const IndexLabel a = IndexLabel::parse("a");
    CHECK(a.name == "a");
    CHECK_FALSE(a.dual);
    CHECK(a.generation == 0);

    const IndexLabel s = IndexLabel::parse("b*'");
    CHECK(s.name == "b");
    CHECK(s.dual);
    CHECK(s.generation == 1);
    CHECK(s.str() == "b*'");

    CHECK(IndexLabel::parse("x12''").generation == 2);
    CHECK_THROWS_AS((void)IndexLabel::parse(""), Error);
    CHECK_THROWS_AS((void)IndexLabel::parse("1a"), Error);
    CHECK_THROWS_AS((void)IndexLabel::parse("a'*"), Error);
}

TEST_CASE("construction rejects duplicate labels and shape mismatches")
{
    CHECK_THROWS_AS(TensorMap(2, {lbl("a"), lbl("a")}, {}, Array(2, Valence{2, 0})), Error);
    CHECK_THROWS_AS(TensorMap(2, {lbl("a")}, {lbl("a")}, Array(2, Valence{1, 1})), Error);
    CHECK_THROWS_AS(TensorMap(2, {lbl("a")}, {}, Array(2, Valence{0, 1})), Error);
    // a starred copy of the same name is a different label
    CHECK_NOTHROW(TensorMap(2, {lbl("a")}, {lbl("a*")}, Array(2, Valence{1, 1})));
}

TEST_CASE("a form applied to a vector is their pairing")
{
    const TensorMap f = form_like(2, covec2(1, 2), lbl("a"));
    const TensorMap v = vector_like(2, vec2(2, 5), lbl("a"));
    const TensorMap s = inner(f, v);
    CHECK(s.subs().empty());
    CHECK(s.supers().empty());
    CHECK(s.coeffs().flat(0) == Scalar(12));
}

TEST_CASE("matched composition multiplies coefficient arrays in reverse order")
{
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const TensorMap y(2, {lbl("c")}, {lbl("a")}, rows2({{5, 6}, {7, 8}}));
    MatchSpec m;
    m.pairs.emplace_back(lbl("a"), lbl("a"));
    const TensorMap r = compose_general(x, y, m);
    CHECK(r.subs() == std::vector<IndexLabel>{lbl("c")});
    CHECK(r.supers() == std::vector<IndexLabel>{lbl("b")});
    CHECK(r.coeffs() == rows2({{23, 34}, {31, 46}}));
    // the array product of the same two matrices goes the other way
    CHECK(array_inner(rows2({{1, 2}, {3, 4}}), rows2({{5, 6}, {7, 8}}))
          == rows2({{19, 22}, {43, 50}}));
}

TEST_CASE("composition validates its match pairs")
{
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const TensorMap y(2, {lbl("c")}, {lbl("d")}, rows2({{5, 6}, {7, 8}}));
    MatchSpec m;
    m.pairs.emplace_back(lbl("q"), lbl("d"));
    CHECK_THROWS_AS((void)compose_general(x, y, m), Error);
    MatchSpec m2;
    m2.pairs.emplace_back(lbl("a"), lbl("c"));
    CHECK_THROWS_AS((void)compose_general(x, y, m2), Error);
    // dual flags must agree even though names may differ
    const TensorMap z(2, {lbl("c")}, {lbl("d*")}, rows2({{5, 6}, {7, 8}}));
    MatchSpec m3;
    m3.pairs.emplace_back(lbl("a"), lbl("d*"));
    CHECK_THROWS_AS((void)compose_general(x, z, m3), Error);
}

TEST_CASE("outer composition is composition with no matches")
{
    const TensorMap v = vector_like(2, vec2(1, 2), lbl("a"));
    const TensorMap w = vector_like(2, vec2(3, 4), lbl("b"));
    const TensorMap o = outer(v, w);
    CHECK(o == compose_general(v, w, MatchSpec{}));
    CHECK(o.coeffs().flat(0) == Scalar(3));
    CHECK(o.coeffs().flat(1) == Scalar(4));
    CHECK(o.coeffs().flat(2) == Scalar(6));
    CHECK(o.coeffs().flat(3) == Scalar(8));
    // shared labels cannot survive into the result
    CHECK_THROWS_AS((void)outer(v, vector_like(2, vec2(1, 1), lbl("a"))), Error);
}

TEST_CASE("contraction sums matching slots")
{
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const TensorMap tr = contract(x, {{lbl("a"), lbl("b")}});
    CHECK(tr.subs().empty());
    CHECK(tr.supers().empty());
    CHECK(tr.coeffs().flat(0) == Scalar(5));
    CHECK_THROWS_AS((void)contract(x, {{lbl("b"), lbl("a")}}), Error);
}

TEST_CASE("permutation reorders labels and reindexes coefficients")
{
    Array a(2, Valence{2, 0});
    a.set({1, 1}, {}, Scalar(1));
    a.set({1, 2}, {}, Scalar(2));
    a.set({2, 1}, {}, Scalar(3));
    a.set({2, 2}, {}, Scalar(4));
    const TensorMap t(2, {lbl("a"), lbl("b")}, {}, a);
    const TensorMap p = permute(t, {2, 1}, {});
    CHECK(p.subs() == std::vector<IndexLabel>{lbl("b"), lbl("a")});
    CHECK(p.coeffs().flat(0) == Scalar(1));
    CHECK(p.coeffs().flat(1) == Scalar(3));
    CHECK(p.coeffs().flat(2) == Scalar(2));
    CHECK(p.coeffs().flat(3) == Scalar(4));
    CHECK(permute(p, {2, 1}, {}) == t);
    CHECK(reorder_like(p, t.subs(), t.supers()) == t);
    CHECK_THROWS_AS((void)permute(t, {1, 1}, {}), Error);
}

TEST_CASE("application evaluates the map on coordinates")
{
    const TensorMap x(2, {lbl("a")}, {lbl("b")}, rows2({{1, 2}, {3, 4}}));
    const Array img = apply(x, vec2(1, 0));
    CHECK(img == vec2(1, 2));
    CHECK(apply(x, vec2(0, 1)) == vec2(3, 4));
    CHECK_THROWS_AS((void)apply(x, Array(2, Valence{0, 2})), Error);
}

TEST_CASE("multi-argument application is multilinear evaluation")
{
    // g as a (0 over 2) map pairs two vectors
    Array g(2, Valence{2, 0});
    g.set({1, 1}, {}, Scalar(1));
    g.set({1, 2}, {}, Scalar(2));
    g.set({2, 1}, {}, Scalar(2));
    g.set({2, 2}, {}, Scalar(5));
    const TensorMap gm(2, {lbl("a"), lbl("b")}, {}, g);
    const Array out = apply_multi(gm, {vec2(1, 0), vec2(0, 1)});
    CHECK(out.valence() == Valence{0, 0});
    CHECK(out.flat(0) == Scalar(2));
    CHECK(out == apply(gm, kron({vec2(1, 0), vec2(0, 1)}, 2)));
    CHECK_THROWS_AS((void)apply_multi(gm, {vec2(1, 0)}), Error);
}

TEST_CASE("sums need identical labels; scaling is entrywise")
{
    const TensorMap v = vector_like(2, vec2(1, 2), lbl("a"));
    const TensorMap w = vector_like(2, vec2(3, 4), lbl("a"));
    CHECK(tm_add(v, w) == vector_like(2, vec2(4, 6), lbl("a")));
    CHECK(tm_scale(Scalar(1, 2), v) == vector_like(2, vec2(Scalar(1, 2), 1), lbl("a")));
    CHECK_THROWS_AS((void)tm_add(v, vector_like(2, vec2(3, 4), lbl("b"))), Error);
    CHECK_THROWS_AS((void)tm_add(v, vector_like(2, vec2(3, 4), lbl("a"), "f")), Error);
}

TEST_CASE("scalar maps carry one coefficient")
{
    const TensorMap s = scalar_like(2, Scalar(7, 3));
    CHECK(s.subs().empty());
    CHECK(s.supers().empty());
    CHECK(s.coeffs().flat(0) == Scalar(7, 3));
}
