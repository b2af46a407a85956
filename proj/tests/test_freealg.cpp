#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenskit/array.hpp"
#include "tenskit/error.hpp"
#include "tenskit/freealg.hpp"
#include "tenskit/scalar.hpp"

using namespace tenskit;

namespace {

FreeAlgebra two_spaces()
{
    FreeAlgebra alg;
    alg.add_space("U", 2);
    alg.add_space("V", 2);
    return alg;
}

Array vec2(const Scalar& a, const Scalar& b)
{
    Array v(2, Valence{0, 1});
    v.set({}, {1}, a);
    v.set({}, {2}, b);
    return v;
}

} // namespace

TEST_CASE("spaces register once with a positive dimension")
{
    FreeAlgebra alg;
    alg.add_space("U", 2);
    CHECK(alg.space_dim("U") == 2);
    CHECK_THROWS_AS(alg.add_space("U", 3), Error);
    CHECK_THROWS_AS(alg.add_space("W", 0), Error);
    CHECK_THROWS_AS(alg.add_space("", 2), Error);
    CHECK_THROWS_AS((void)alg.space_dim("V"), Error);
    CHECK_THROWS_AS((void)alg.basis_letter("U", 3), Error);
}

TEST_CASE("words compare by letters and know their degree")
{
    Word w;
    w.letters.push_back({"U", 1});
    w.letters.push_back({"V", 2});
    CHECK(w.degree() == 2);
    CHECK(w.str() == "(U:1,V:2)");
    CHECK(Word{}.degree() == 0);

    FreeElement x;
    x.add_term(w, Scalar(2));
    x.add_term(w, Scalar(-2));
    CHECK(x.is_zero());
    CHECK(x.degree() == 0);

    FreeElement mixed;
    mixed.add_term(w, Scalar(1));
    mixed.add_term(Word{}, Scalar(1));
    CHECK(mixed.degree() == -1);
}

TEST_CASE("the unit is neutral and multiplication concatenates words")
{
    FreeAlgebra alg = two_spaces();
    const FreeElement a = alg.basis_letter("U", 1);
    const FreeElement b = alg.basis_letter("V", 2);
    CHECK(alg.free_mul(alg.unit(), a) == a);
    CHECK(alg.free_mul(a, alg.unit()) == a);

    const FreeElement ab = alg.free_mul(a, b);
    Word expect;
    expect.letters.push_back({"U", 1});
    expect.letters.push_back({"V", 2});
    FreeElement manual;
    manual.add_term(expect, Scalar(1));
    CHECK(ab == manual);

    // order matters
    CHECK(!(ab == alg.free_mul(b, a)));
}

TEST_CASE("embedding a vector expands it over basis letters")
{
    FreeAlgebra alg = two_spaces();
    const FreeElement x = alg.embed_vector("U", vec2(1, 2));
    CHECK(alg.to_coeff_array(x, {"U"}) == vec2(1, 2));
    CHECK(x == fe_add(alg.basis_letter("U", 1), fe_scale(Scalar(2), alg.basis_letter("U", 2))));
    CHECK_THROWS_AS((void)alg.embed_vector("U", Array(3, Valence{0, 1})), Error);
    CHECK_THROWS_AS((void)alg.embed_vector("U", Array(2, Valence{1, 0})), Error);
}

TEST_CASE("a product of embedded vectors has outer-product coefficients")
{
    FreeAlgebra alg = two_spaces();
    const FreeElement p = alg.tensor_product(alg.embed_vector("U", vec2(1, 2)),
                                             alg.embed_vector("V", vec2(3, 4)));
    const Array c = alg.to_coeff_array(p, {"U", "V"});
    CHECK(c.valence() == Valence{0, 2});
    CHECK(c.flat(0) == Scalar(3));
    CHECK(c.flat(1) == Scalar(4));
    CHECK(c.flat(2) == Scalar(6));
    CHECK(c.flat(3) == Scalar(8));
}

TEST_CASE("expansion readback rejects terms outside the signature")
{
    FreeAlgebra alg = two_spaces();
    const FreeElement u1 = alg.basis_letter("U", 1);
    // wrong length
    CHECK_THROWS_AS((void)alg.to_coeff_array(u1, {"U", "U"}), Error);
    // wrong space
    CHECK_THROWS_AS((void)alg.to_coeff_array(u1, {"V"}), Error);
    // scalar signature reads back the unit coefficient
    CHECK(alg.to_coeff_array(fe_scale(Scalar(5), alg.unit()), {}).flat(0) == Scalar(5));
}

TEST_CASE("mixed-degree operands are fine for multiplication, not for products of tensors")
{
    FreeAlgebra alg = two_spaces();
    FreeElement mixed = alg.unit();
    mixed = fe_add(mixed, alg.basis_letter("U", 1));
    const FreeElement hom = alg.basis_letter("V", 1);
    CHECK_NOTHROW((void)alg.free_mul(mixed, hom));
    CHECK_THROWS_AS((void)alg.tensor_product(mixed, hom), Error);
}

TEST_CASE("caps on degree and term count are hard errors")
{
    FreeAlgebra alg = two_spaces();
    Word w4;
    for (int i = 0; i < 4; ++i)
        w4.letters.push_back({"U", 1});
    FreeElement deep;
    deep.add_term(w4, Scalar(1));
    CHECK_THROWS_AS((void)alg.free_mul(deep, deep), Error);

    FreeAlgebra tiny(6, 3);
    tiny.add_space("U", 2);
    FreeElement wide;
    wide.add_term(Word{{{"U", 1}}}, Scalar(1));
    wide.add_term(Word{{{"U", 2}}}, Scalar(1));
    // the square has four distinct words, one over the term cap
    CHECK_THROWS_AS((void)tiny.free_mul(wide, wide), Error);
}
