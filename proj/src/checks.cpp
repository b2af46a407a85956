// Property suites behind the `check` verb and the acceptance runner.
//
// Each suite replays deterministically from (dim, seed, cases): randomness
// comes from a seeded mt19937_64 reduced by modulo, and shuffles are done
// by hand, so the case stream does not depend on the standard library's
// distribution objects.

#include "tenskit/checks.hpp"

#include "tenskit/array.hpp"
#include "tenskit/basis.hpp"
#include "tenskit/bilateral.hpp"
#include "tenskit/error.hpp"
#include "tenskit/exprlang.hpp"
#include "tenskit/freealg.hpp"
#include "tenskit/metric.hpp"
#include "tenskit/scalar.hpp"
#include "tenskit/tensormap.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tenskit {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    // inclusive on both ends
    int ri(int lo, int hi)
    {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar entry() { return Scalar(ri(-3, 3)); }
};

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng)
{
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.ri(0, i))]);
}

// k distinct positions in [0, n), in random order
std::vector<int> pick_positions(Rng& rng, int n, int k)
{
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    shuffle_vec(all, rng);
    all.resize(static_cast<std::size_t>(k));
    return all;
}

std::vector<IndexLabel> letters(const std::string& pool, int count)
{
    std::vector<IndexLabel> out;
    for (int i = 0; i < count; ++i)
        out.push_back(IndexLabel{std::string(1, pool[static_cast<std::size_t>(i)]), false, 0});
    return out;
}

Array random_array(Rng& rng, int dim, Valence v)
{
    Array a(dim, v);
    for (std::size_t i = 0; i < a.size(); ++i)
        a.flat(i) = rng.entry();
    return a;
}

TensorMap random_map(Rng& rng, int dim, const std::string& subPool, int m,
                     const std::string& supPool, int n)
{
    return TensorMap(dim, letters(subPool, m), letters(supPool, n),
                     random_array(rng, dim, Valence{m, n}));
}

Array random_invertible(Rng& rng, int dim)
{
    for (;;) {
        Array a = random_array(rng, dim, Valence{1, 1});
        try {
            (void)array_inverse(a);
            return a;
        } catch (const Error&) {
        }
    }
}

Metric random_metric(Rng& rng, int dim)
{
    for (;;) {
        Array g(dim, Valence{2, 0});
        for (int i = 1; i <= dim; ++i)
            for (int j = i; j <= dim; ++j) {
                const Scalar v = rng.entry();
                g.set({i, j}, {}, v);
                g.set({j, i}, {}, v);
            }
        try {
            return Metric(g);
        } catch (const Error&) {
        }
    }
}

bool has_label(const std::vector<IndexLabel>& ls, const IndexLabel& l)
{
    return std::find(ls.begin(), ls.end(), l) != ls.end();
}

IndexLabel primed(IndexLabel l)
{
    ++l.generation;
    return l;
}

IndexLabel starred(IndexLabel l)
{
    l.dual = !l.dual;
    return l;
}

template <typename F>
bool throws_error(F&& f)
{
    try {
        f();
    } catch (const Error&) {
        return true;
    }
    return false;
}

// split a random total valence t <= cap into (subs, supers)
void split_valence(Rng& rng, int cap, int& m, int& n)
{
    const int tot = rng.ri(0, cap);
    m = rng.ri(0, tot);
    n = tot - m;
}

// ---------------------------------------------------------------------------

int suite_lambda_b(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        int m1, n1, m2, n2;
        split_valence(rng, 2, m1, n1);
        split_valence(rng, 2, m2, n2);
        const BilateralTensor s(dim, letters("ab", m1), letters("cd", n1),
                                random_array(rng, dim, Valence{m1, n1}));
        const BilateralTensor t(dim, letters("fg", m2), letters("hk", n2),
                                random_array(rng, dim, Valence{m2, n2}));

        const int k = rng.ri(0, std::min(m1, n2));
        MatchSpec ms;
        {
            const auto sp = pick_positions(rng, m1, k);
            const auto tp = pick_positions(rng, n2, k);
            for (int i = 0; i < k; ++i)
                ms.pairs.emplace_back(s.subs()[static_cast<std::size_t>(sp[static_cast<std::size_t>(i)])],
                                      t.supers()[static_cast<std::size_t>(tp[static_cast<std::size_t>(i)])]);
        }

        bool ok = true;
        const BilateralTensor prod = bilateral_mul(s, t, ms);
        ok = ok && compose_general(lambda_B(s), lambda_B(t), ms) == lambda_B(prod);
        ok = ok && lambda_B_inv(lambda_B(s)) == s;

        if (!prod.subs().empty() && !prod.supers().empty()) {
            const std::size_t a = static_cast<std::size_t>(rng.ri(0, static_cast<int>(prod.subs().size()) - 1));
            const std::size_t b = static_cast<std::size_t>(rng.ri(0, static_cast<int>(prod.supers().size()) - 1));
            const std::vector<std::pair<IndexLabel, IndexLabel>> pr{{prod.subs()[a], prod.supers()[b]}};
            ok = ok && lambda_B(bilateral_contract(prod, pr)) == contract(lambda_B(prod), pr);
        }

        {
            const BilateralTensor s2(dim, s.subs(), s.supers(), random_array(rng, dim, Valence{m1, n1}));
            const Scalar w(rng.ri(-3, 3));
            ok = ok && lambda_B(bi_add(bi_scale(w, s), s2))
                           == tm_add(tm_scale(w, lambda_B(s)), lambda_B(s2));
        }

        if (!ok)
            ++failures;
    }
    return failures;
}

int suite_funccomp(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        const int k = rng.ri(0, 2);  // shared middle power
        const int n = rng.ri(0, 2);
        const int q = rng.ri(0, 2);
        const TensorMap s = random_map(rng, dim, "ab", k, "cd", n);
        const TensorMap t = random_map(rng, dim, "fg", q, "hk", k);
        const TensorMap u = inner(s, t);

        bool ok = true;
        // pointwise on every basis coordinate tuple of the domain power
        Multi j(static_cast<std::size_t>(q), 1);
        bool more = true;
        while (more) {
            Array arg(dim, Valence{0, q});
            arg.set({}, j, Scalar(1));
            ok = ok && apply(u, arg) == apply(s, apply(t, arg));
            more = next_multi(j, dim);
        }
        // and on a random argument
        const Array arg = random_array(rng, dim, Valence{0, q});
        ok = ok && apply(u, arg) == apply(s, apply(t, arg));

        if (!ok)
            ++failures;
    }
    return failures;
}

int suite_assoc(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        int m1, n1, m2, n2, m3, n3;
        split_valence(rng, 2, m1, n1);
        split_valence(rng, 2, m2, n2);
        split_valence(rng, std::min(2, 5 - (m1 + n1) - (m2 + n2)), m3, n3);
        const TensorMap s = random_map(rng, dim, "ab", m1, "cd", n1);
        const TensorMap t = random_map(rng, dim, "fg", m2, "hk", n2);
        const TensorMap u = random_map(rng, dim, "lm", m3, "pq", n3);

        // matches s->t on disjoint slots, then s->u and t->u on what is left
        const int k1 = rng.ri(0, std::min(m1, n2));
        const auto sp1 = pick_positions(rng, m1, k1);
        const auto tp1 = pick_positions(rng, n2, k1);
        MatchSpec rst;
        for (int i = 0; i < k1; ++i)
            rst.pairs.emplace_back(s.subs()[static_cast<std::size_t>(sp1[static_cast<std::size_t>(i)])],
                                   t.supers()[static_cast<std::size_t>(tp1[static_cast<std::size_t>(i)])]);

        std::vector<IndexLabel> sFree;
        for (int p = 0; p < m1; ++p)
            if (std::find(sp1.begin(), sp1.end(), p) == sp1.end())
                sFree.push_back(s.subs()[static_cast<std::size_t>(p)]);
        shuffle_vec(sFree, rng);

        const auto uPos = pick_positions(rng, n3, n3);
        const int k3 = rng.ri(0, std::min(static_cast<int>(sFree.size()), n3));
        const int k2 = rng.ri(0, std::min(m2, n3 - k3));
        MatchSpec rsu, rtu;
        for (int i = 0; i < k3; ++i)
            rsu.pairs.emplace_back(sFree[static_cast<std::size_t>(i)],
                                   u.supers()[static_cast<std::size_t>(uPos[static_cast<std::size_t>(i)])]);
        const auto tp2 = pick_positions(rng, m2, k2);
        for (int i = 0; i < k2; ++i)
            rtu.pairs.emplace_back(t.subs()[static_cast<std::size_t>(tp2[static_cast<std::size_t>(i)])],
                                   u.supers()[static_cast<std::size_t>(uPos[static_cast<std::size_t>(k3 + i)])]);

        MatchSpec joinLeft = rtu;
        joinLeft.pairs.insert(joinLeft.pairs.end(), rsu.pairs.begin(), rsu.pairs.end());
        MatchSpec joinRight = rst;
        joinRight.pairs.insert(joinRight.pairs.end(), rsu.pairs.begin(), rsu.pairs.end());

        const TensorMap lhs = compose_general(compose_general(s, t, rst), u, joinLeft);
        const TensorMap rhs = compose_general(s, compose_general(t, u, rtu), joinRight);
        bool ok = lhs == rhs;

        const BilateralTensor bs(dim, s.subs(), s.supers(), s.coeffs());
        const BilateralTensor bt(dim, t.subs(), t.supers(), t.coeffs());
        const BilateralTensor bu(dim, u.subs(), u.supers(), u.coeffs());
        const BilateralTensor bl = bilateral_mul(bilateral_mul(bs, bt, rst), bu, joinLeft);
        const BilateralTensor br = bilateral_mul(bs, bilateral_mul(bt, bu, rtu), joinRight);
        ok = ok && bl == br;
        ok = ok && lambda_B(bl) == lhs;

        if (!ok)
            ++failures;
    }
    return failures;
}

int suite_metric(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        const Metric g = random_metric(rng, dim);
        bool ok = true;

        // both inverse products give the identity
        ok = ok && array_mul(g.ginv(), g.g(), {{2, 1}}) == delta(dim, 1);
        Array gm(dim, Valence{1, 1});
        Array gim(dim, Valence{1, 1});
        for (std::size_t i = 0; i < gm.size(); ++i) {
            gm.flat(i) = g.g().flat(i);
            gim.flat(i) = g.ginv().flat(i);
        }
        ok = ok && array_inner(gm, gim) == delta(dim, 1);
        ok = ok && array_inner(gim, gm) == delta(dim, 1);

        const int m = rng.ri(0, 1);
        const int n = rng.ri(1, 2);
        const TensorMap t = random_map(rng, dim, "ab", m, "cd", n);

        // lower then raise is the identity once the revived label gets its
        // old name back
        const IndexLabel lab = t.supers()[static_cast<std::size_t>(rng.ri(0, n - 1))];
        const TensorMap low = lower_index(t, lab, g);
        const TensorMap back = raise_index(low, primed(lab), g);
        {
            std::vector<IndexLabel> sups = back.supers();
            ok = ok && sups.back() == primed(primed(lab));
            sups.back() = lab;
            ok = ok && reorder_like(relabel(back, back.subs(), sups), t.subs(), t.supers()) == t;
        }

        // raise then lower, starting from a subscript
        if (m >= 1) {
            const IndexLabel lab2 = t.subs()[0];
            const TensorMap up = raise_index(t, lab2, g);
            const TensorMap down = lower_index(up, primed(lab2), g);
            std::vector<IndexLabel> subs = down.subs();
            ok = ok && subs.front() == primed(primed(lab2));
            subs.front() = lab2;
            ok = ok && reorder_like(relabel(down, subs, down.supers()), t.subs(), t.supers()) == t;
        }

        // lowering agrees with contracting against an explicit metric factor
        {
            const IndexLabel z8{"z", false, 8};
            const IndexLabel z9{"z", false, 9};
            const TensorMap gmap(dim, {z8, z9}, {}, g.g());
            const TensorMap via = contract(outer(gmap, t), {{z9, lab}});
            std::vector<IndexLabel> subs = via.subs();
            subs.front() = primed(lab);
            ok = ok && relabel(via, subs, via.supers()) == low;
        }

        // dual shift is an involution and costs nothing numerically
        {
            const TensorMap rt = dual_shift(dual_shift(t, lab), starred(lab));
            ok = ok && reorder_like(rt, t.subs(), t.supers()) == t;
        }
        if (m >= 1) {
            const IndexLabel lab2 = t.subs()[0];
            const TensorMap rt = dual_shift(dual_shift(t, lab2), starred(lab2));
            ok = ok && reorder_like(rt, t.subs(), t.supers()) == t;
        }

        // shifting both slots of an operator is the array transpose
        {
            const TensorMap x = random_map(rng, dim, "a", 1, "b", 1);
            const TensorMap shifted = dual_shift(dual_shift(x, x.supers()[0]), x.subs()[0]);
            ok = ok && shifted.coeffs() == array_transpose(x.coeffs(), {1, 2});
            ok = ok && shifted.subs()[0] == starred(x.supers()[0]);
            ok = ok && shifted.supers()[0] == starred(x.subs()[0]);
        }

        // bad metrics are refused
        if (dim >= 2) {
            Array bad = g.g();
            bad.set({1, 2}, {}, bad.at({1, 2}, {}) + 1);
            ok = ok && throws_error([&] { Metric mm(bad); (void)mm; });
        }
        ok = ok && throws_error([&] {
            Metric mm((Array(dim, Valence{2, 0})));
            (void)mm;
        });

        if (!ok)
            ++failures;
    }
    return failures;
}

int suite_basis(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        const BasisChange c1(random_invertible(rng, dim), "e", "f");
        const BasisChange c2(random_invertible(rng, dim), "f", "g");
        bool ok = true;

        int m, n;
        split_valence(rng, 3, m, n);
        const TensorMap t = random_map(rng, dim, "ab", m, "cd", n);

        // two changes in a row equal their composite
        ok = ok && transform(transform(t, c1), c2) == transform(t, compose_changes(c2, c1));

        // change of basis commutes with composition
        {
            int m2, n2;
            split_valence(rng, 2, m2, n2);
            const TensorMap t2 = random_map(rng, dim, "fg", m2, "hk", n2);
            const int k = rng.ri(0, std::min(m, n2));
            const auto sp = pick_positions(rng, m, k);
            const auto tp = pick_positions(rng, n2, k);
            MatchSpec ms;
            for (int i = 0; i < k; ++i)
                ms.pairs.emplace_back(t.subs()[static_cast<std::size_t>(sp[static_cast<std::size_t>(i)])],
                                      t2.supers()[static_cast<std::size_t>(tp[static_cast<std::size_t>(i)])]);
            ok = ok && transform(compose_general(t, t2, ms), c1)
                           == compose_general(transform(t, c1), transform(t2, c1), ms);
        }

        // and with self-contraction
        if (m >= 1 && n >= 1) {
            const std::vector<std::pair<IndexLabel, IndexLabel>> pr{{t.subs()[0], t.supers()[0]}};
            ok = ok && transform(contract(t, pr), c1) == contract(transform(t, c1), pr);
        }

        // applying the transformed map to transformed coordinates gives the
        // transformed image
        {
            const TensorMap argMap(dim, {}, letters("pq", m), random_array(rng, dim, Valence{0, m}));
            const Array lhs = apply(transform(t, c1), transform(argMap, c1).coeffs());
            const TensorMap img(dim, {}, letters("uw", n), apply(t, argMap.coeffs()));
            ok = ok && lhs == transform(img, c1).coeffs();
        }

        // valence (0,1): one inverse factor; valence (1,0): one forward factor
        {
            const TensorMap v = random_map(rng, dim, "", 0, "a", 1);
            ok = ok && transform(v, c1).coeffs() == array_mul(v.coeffs(), c1.ainv(), {{1, 1}});
            const TensorMap f = random_map(rng, dim, "a", 1, "", 0);
            ok = ok && transform(f, c1).coeffs() == array_mul(c1.a(), f.coeffs(), {{1, 1}});
            ok = ok && inner(transform(f, c1), transform(v, c1)).coeffs().flat(0)
                           == inner(f, v).coeffs().flat(0);
        }

        // operators go through the similarity product
        {
            const TensorMap op = random_map(rng, dim, "a", 1, "b", 1);
            ok = ok && transform_operator(op, c1) == transform(op, c1);
            const std::vector<std::pair<IndexLabel, IndexLabel>> pr{{op.subs()[0], op.supers()[0]}};
            ok = ok && contract(op, pr).coeffs().flat(0)
                           == contract(transform(op, c1), pr).coeffs().flat(0);
        }

        // scalars never move
        ok = ok && scalar_invariance_check(scalar_like(dim, Scalar(rng.ri(-5, 5))), {c1, c2});

        if (!ok)
            ++failures;
    }
    return failures;
}

int suite_array(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        const Array a = random_array(rng, dim, Valence{1, 1});
        const Array b = random_array(rng, dim, Valence{1, 1});
        const Array d = random_array(rng, dim, Valence{1, 1});
        bool ok = true;

        ok = ok && array_transpose(array_inner(a, b), {1, 2})
                       == array_inner(array_transpose(b, {1, 2}), array_transpose(a, {1, 2}));

        {
            const Array mi = random_invertible(rng, dim);
            const Array im = array_inverse(mi);
            ok = ok && array_inner(mi, im) == delta(dim, 1);
            ok = ok && array_inner(im, mi) == delta(dim, 1);
        }

        ok = ok && array_inner(array_inner(a, b), d) == array_inner(a, array_inner(b, d));

        {
            const Scalar k = rng.entry();
            const Array a2 = random_array(rng, dim, Valence{1, 1});
            const Array mix = array_add(array_scale(k, a), a2);
            ok = ok && array_inner(mix, b) == array_add(array_scale(k, array_inner(a, b)), array_inner(a2, b));
            ok = ok && array_inner(b, mix) == array_add(array_scale(k, array_inner(b, a)), array_inner(b, a2));
        }

        // transposing every slot twice is the identity
        {
            int tm, tn;
            split_valence(rng, 3, tm, tn);
            const Array r = random_array(rng, dim, Valence{tm, tn});
            std::vector<int> flips(static_cast<std::size_t>(tm + tn));
            std::iota(flips.begin(), flips.end(), 1);
            ok = ok && array_transpose(array_transpose(r, flips), flips) == r;
        }

        ok = ok && throws_error([&] { (void)array_inverse(Array(dim, Valence{1, 1})); });

        if (dim == 2) {
            const Array x = array_from_rows({{1, 2}, {3, 4}}, Valence{1, 1}, 2);
            ok = ok && array_inner(x, x) == array_from_rows({{7, 10}, {15, 22}}, Valence{1, 1}, 2);
        }

        if (!ok)
            ++failures;
    }
    return failures;
}

int suite_freealg(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    FreeAlgebra alg;
    alg.add_space("U", dim);
    alg.add_space("V", dim);

    const auto randomWord = [&](int deg) {
        Word w;
        for (int i = 0; i < deg; ++i)
            w.letters.push_back({rng.ri(0, 1) ? "U" : "V", rng.ri(1, dim)});
        return w;
    };
    const auto randomElement = [&](int maxDeg) {
        FreeElement x;
        const int nt = rng.ri(1, 3);
        for (int i = 0; i < nt; ++i)
            x.add_term(randomWord(rng.ri(0, maxDeg)), rng.entry());
        return x;
    };
    const auto randomHomogeneous = [&](int deg) {
        FreeElement x;
        const int nt = rng.ri(1, 3);
        for (int i = 0; i < nt; ++i)
            x.add_term(randomWord(deg), rng.entry());
        return x;
    };

    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        bool ok = true;
        const FreeElement x = randomElement(2);
        const FreeElement y = randomElement(2);
        const FreeElement z = randomElement(2);

        ok = ok && alg.free_mul(alg.free_mul(x, y), z) == alg.free_mul(x, alg.free_mul(y, z));
        ok = ok && alg.free_mul(alg.unit(), x) == x;
        ok = ok && alg.free_mul(x, alg.unit()) == x;

        {
            const Scalar k = rng.entry();
            const FreeElement x2 = randomElement(2);
            const FreeElement mix = fe_add(fe_scale(k, x), x2);
            ok = ok && alg.free_mul(mix, y)
                           == fe_add(fe_scale(k, alg.free_mul(x, y)), alg.free_mul(x2, y));
            ok = ok && alg.free_mul(y, mix)
                           == fe_add(fe_scale(k, alg.free_mul(y, x)), alg.free_mul(y, x2));
        }

        // degree-homogeneous bilinearity of the product as a tensor product
        {
            const Scalar k = rng.entry();
            const int d1 = rng.ri(0, 2);
            const int d2 = rng.ri(0, 2);
            const FreeElement u = randomHomogeneous(d1);
            const FreeElement u2 = randomHomogeneous(d1);
            const FreeElement v = randomHomogeneous(d2);
            ok = ok && alg.tensor_product(fe_add(fe_scale(k, u), u2), v)
                           == fe_add(fe_scale(k, alg.tensor_product(u, v)), alg.tensor_product(u2, v));
        }

        // an expansion over basis words recovers exactly its coefficients
        {
            const int kk = rng.ri(0, 2);
            const std::vector<std::string> sig(static_cast<std::size_t>(kk), "U");
            // an empty signature names no space, so its coefficient array is
            // the dimensionless scalar (dim 1)
            const Array coords = random_array(rng, kk ? dim : 1, Valence{0, kk});
            FreeElement e;
            Multi ix(static_cast<std::size_t>(kk), 1);
            bool more = true;
            while (more) {
                Word w;
                for (int p = 0; p < kk; ++p)
                    w.letters.push_back({"U", ix[static_cast<std::size_t>(p)]});
                e.add_term(w, coords.at({}, ix));
                more = next_multi(ix, dim);
            }
            ok = ok && alg.to_coeff_array(e, sig) == coords;
        }

        {
            const Array vec = random_array(rng, dim, Valence{0, 1});
            ok = ok && alg.to_coeff_array(alg.embed_vector("U", vec), {"U"}) == vec;
        }

        // product of embedded vectors has the outer-product coefficients
        {
            const Array va = random_array(rng, dim, Valence{0, 1});
            const Array vb = random_array(rng, dim, Valence{0, 1});
            const FreeElement prod =
                alg.tensor_product(alg.embed_vector("U", va), alg.embed_vector("V", vb));
            ok = ok && alg.to_coeff_array(prod, {"U", "V"}) == array_outer(va, vb);
        }

        {
            const FreeElement p = alg.tensor_product(alg.basis_letter("U", 1), alg.basis_letter("V", 1));
            const FreeElement q = alg.tensor_product(alg.basis_letter("V", 1), alg.basis_letter("U", 1));
            ok = ok && !(p == q);
        }

        // the degree cap is an error, not silent truncation
        {
            FreeElement deep;
            Word w;
            for (int i = 0; i < 4; ++i)
                w.letters.push_back({"U", 1});
            deep.add_term(w, Scalar(1));
            ok = ok && throws_error([&] { (void)alg.free_mul(deep, deep); });
        }

        if (!ok)
            ++failures;
    }

    // the term cap as well; needs enough short words to stay under the
    // degree cap, so only run where the alphabet is big enough
    if (2 * dim >= 5) {
        FreeElement big;
        int made = 0;
        Multi ix(3, 1);
        bool more = true;
        while (more && made < 101) {
            Word w;
            for (int p = 0; p < 3; ++p) {
                const int v = ix[static_cast<std::size_t>(p)];
                w.letters.push_back({v <= dim ? "U" : "V", v <= dim ? v : v - dim});
            }
            big.add_term(w, Scalar(1));
            ++made;
            more = next_multi(ix, 2 * dim);
        }
        if (!throws_error([&] { (void)alg.free_mul(big, big); }))
            ++failures;
    }

    return failures;
}

// --- parser suite ----------------------------------------------------------

struct GenFactor {
    std::string name;
    std::vector<std::string> subs, sups;
};

std::vector<IndexLabel> labelize(const std::vector<std::string>& names)
{
    std::vector<IndexLabel> out;
    for (const auto& s : names)
        out.push_back(IndexLabel{s, false, 0});
    return out;
}

// Random factor chain with injected matches. Fails (returns false) when an
// intermediate of the left fold would outgrow the working envelope.
bool gen_chain(Rng& rng, std::vector<GenFactor>& out)
{
    const std::string pool = "abcdfghklmnpqrstuvwxyz";
    static const char* const names[] = {"A", "B", "C"};
    const int L = rng.ri(2, 3);
    out.clear();
    std::size_t next = 0;
    for (int i = 0; i < L; ++i) {
        GenFactor f;
        f.name = names[i];
        int m, n;
        split_valence(rng, 2, m, n);
        for (int p = 0; p < m; ++p)
            f.subs.push_back(std::string(1, pool[next++]));
        for (int p = 0; p < n; ++p)
            f.sups.push_back(std::string(1, pool[next++]));
        out.push_back(f);
    }

    struct Cand {
        int fi, si, fj, sj;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
            for (int si = 0; si < static_cast<int>(out[static_cast<std::size_t>(i)].subs.size()); ++si)
                for (int sj = 0; sj < static_cast<int>(out[static_cast<std::size_t>(j)].sups.size()); ++sj)
                    cands.push_back({i, si, j, sj});
    shuffle_vec(cands, rng);
    const int want = cands.empty() ? 0 : rng.ri(0, static_cast<int>(cands.size()));
    std::set<std::pair<int, int>> usedSub, usedSup;
    int got = 0;
    for (const Cand& cd : cands) {
        if (got >= want)
            break;
        if (usedSub.count({cd.fi, cd.si}) || usedSup.count({cd.fj, cd.sj}))
            continue;
        usedSub.insert({cd.fi, cd.si});
        usedSup.insert({cd.fj, cd.sj});
        out[static_cast<std::size_t>(cd.fj)].sups[static_cast<std::size_t>(cd.sj)] =
            out[static_cast<std::size_t>(cd.fi)].subs[static_cast<std::size_t>(cd.si)];
        ++got;
    }

    // dry-run the fold to keep intermediate valences small
    std::vector<std::string> fs = out[0].subs, fu = out[0].sups;
    for (std::size_t j = 1; j < out.size(); ++j) {
        std::vector<std::string> nfs, nfu;
        for (const auto& sname : fs)
            if (std::find(out[j].sups.begin(), out[j].sups.end(), sname) == out[j].sups.end())
                nfs.push_back(sname);
        nfs.insert(nfs.end(), out[j].subs.begin(), out[j].subs.end());
        nfu = fu;
        for (const auto& sname : out[j].sups)
            if (std::find(fs.begin(), fs.end(), sname) == fs.end())
                nfu.push_back(sname);
        if (nfs.size() + nfu.size() > 4)
            return false;
        fs = nfs;
        fu = nfu;
    }
    return true;
}

std::string factor_text(Rng& rng, const GenFactor& f)
{
    std::string s = f.name;
    if (!f.subs.empty()) {
        s += "_";
        for (const auto& l : f.subs)
            s += l;
    }
    if (!f.sups.empty()) {
        s += "^";
        for (const auto& l : f.sups)
            s += l;
    }
    if (rng.ri(0, 3) == 0)
        s = "(" + s + ")";
    return s;
}

std::string chain_text(Rng& rng, const std::vector<GenFactor>& fs)
{
    std::string text;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) {
            const int sep = rng.ri(0, 2);
            text += sep == 0 ? " " : (sep == 1 ? " . " : " \xE2\x88\x98 ");
        }
        text += factor_text(rng, fs[i]);
    }
    return text;
}

int parser_fixed_checks()
{
    int bad = 0;
    const auto ok_parse = [&](const std::string& text) {
        try {
            const ExprPtr e = parse_expr_text(text);
            const ExprPtr e2 = parse_expr_text(pretty_print(*e));
            if (!expr_equal(*e, *e2))
                ++bad;
        } catch (const Error&) {
            ++bad;
        }
    };
    const auto no_parse = [&](const std::string& text) {
        if (!throws_error([&] { (void)parse_expr_text(text); }))
            ++bad;
    };

    ok_parse("s_a t^a");
    ok_parse("x_a^a");
    ok_parse("(s_a) (t^a)");
    ok_parse("2 a_b + c_b");
    ok_parse("u^a \xE2\x8A\x97 w^b");
    ok_parse("f_a^b . g_c^a");
    ok_parse("s_ab t_f^bda");
    ok_parse("g_ab u^a v^b");
    ok_parse("3/2 v^a");
    ok_parse("p_a^a q_b^b");
    ok_parse("(f_a^b) . ((g_c^a))");
    ok_parse("v^a - w^a");
    ok_parse("1/2 x_a^a + 2 y");

    no_parse("t^a . s_a");
    no_parse("s_a t^a u^a");
    no_parse("x_aa");
    no_parse("v^a + w^b");
    no_parse("u^a \xE2\x8A\x97 w^a");
    no_parse("2/0 v^a");
    no_parse("v^a +");
    no_parse("(v^a");
    no_parse("");
    no_parse("_a");
    no_parse("x_a^a^b");

    // juxtaposition, dot and the ring are one operator
    {
        const ExprPtr e1 = parse_expr_text("A_a B^a");
        const ExprPtr e2 = parse_expr_text("A_a . B^a");
        const ExprPtr e3 = parse_expr_text("A_a \xE2\x88\x98 B^a");
        if (!expr_equal(*e1, *e2) || !expr_equal(*e1, *e3))
            ++bad;
    }

    // the plan carries the matches and the result shape
    {
        const Plan p = build_plan(*parse_expr_text("f_a^b . g_c^a"));
        const IndexLabel a{"a", false, 0}, b{"b", false, 0}, cc{"c", false, 0};
        if (!(p.outSubs == std::vector<IndexLabel>{cc} && p.outSupers == std::vector<IndexLabel>{b}))
            ++bad;
        bool found = false;
        for (const auto& st : p.steps)
            if (st.kind == PlanStep::Kind::Compose
                && st.pairs == std::vector<std::pair<IndexLabel, IndexLabel>>{{a, a}})
                found = true;
        if (!found)
            ++bad;
    }
    {
        const Plan p = build_plan(*parse_expr_text("s_ab t_f^bda"));
        const IndexLabel f{"f", false, 0}, d{"d", false, 0};
        if (!(p.outSubs == std::vector<IndexLabel>{f} && p.outSupers == std::vector<IndexLabel>{d}))
            ++bad;
    }
    return bad;
}

int suite_parser(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = parser_fixed_checks();

    for (int c = 0; c < cases; ++c) {
        bool ok = true;
        const int kind = rng.ri(0, 5);

        if (kind == 0) {
            // self-contraction evaluates to the trace
            const TensorMap A = random_map(rng, dim, "p", 1, "q", 1);
            Env env;
            env.emplace("A", A);
            const ExprPtr e = parse_expr_text("A_a^a");
            ok = ok && expr_equal(*e, *parse_expr_text(pretty_print(*e)));
            const TensorMap res = evaluate(validate(*e, env), env);
            Scalar tr(0);
            for (int i = 1; i <= dim; ++i)
                tr += A.coeffs().at({i}, {i});
            ok = ok && res.subs().empty() && res.supers().empty() && res.coeffs().flat(0) == tr;
        } else if (kind == 1) {
            // the no-match product against the engine's outer composition
            const TensorMap A = random_map(rng, dim, "a", rng.ri(0, 1), "b", rng.ri(0, 1));
            const TensorMap B = random_map(rng, dim, "c", rng.ri(0, 1), "d", rng.ri(0, 1));
            Env env;
            env.emplace("A", A);
            env.emplace("B", B);
            GenFactor fa{"A", {}, {}}, fb{"B", {}, {}};
            for (const auto& l : A.subs())
                fa.subs.push_back(l.name);
            for (const auto& l : A.supers())
                fa.sups.push_back(l.name);
            for (const auto& l : B.subs())
                fb.subs.push_back(l.name);
            for (const auto& l : B.supers())
                fb.sups.push_back(l.name);
            const std::string text =
                factor_text(rng, fa) + " \xE2\x8A\x97 " + factor_text(rng, fb);
            const ExprPtr e = parse_expr_text(text);
            ok = ok && expr_equal(*e, *parse_expr_text(pretty_print(*e)));
            const TensorMap res = evaluate(validate(*e, env), env);
            ok = ok && res == compose_general(A, B, MatchSpec{});
        } else {
            std::vector<GenFactor> fs;
            int guard = 0;
            while (!gen_chain(rng, fs) && ++guard < 64) {
            }
            if (guard >= 64)
                continue;

            Env env;
            for (const auto& f : fs)
                env.emplace(f.name,
                            TensorMap(dim, labelize(f.subs), labelize(f.sups),
                                      random_array(rng, dim,
                                                   Valence{static_cast<int>(f.subs.size()),
                                                           static_cast<int>(f.sups.size())})));

            TensorMap oracle = env.at(fs[0].name);
            for (std::size_t j = 1; j < fs.size(); ++j) {
                const TensorMap& f = env.at(fs[j].name);
                MatchSpec ms;
                for (const IndexLabel& l : oracle.subs())
                    if (has_label(f.supers(), l))
                        ms.pairs.emplace_back(l, l);
                oracle = compose_general(oracle, f, ms);
            }

            const std::string chainText = chain_text(rng, fs);
            std::string text = chainText;
            TensorMap expected = oracle;
            const int deco = rng.ri(0, 3);
            if (deco == 1) {
                const Scalar k(rng.ri(1, 3), rng.ri(1, 3));
                text = scalar_to_string(k) + " " + text;
                expected = tm_scale(k, oracle);
            } else if (deco == 2) {
                const Scalar k(rng.ri(1, 3));
                const bool minus = rng.ri(0, 1) == 1;
                text += (minus ? " - " : " + ") + scalar_to_string(k) + " " + chainText;
                expected = tm_add(oracle, tm_scale(minus ? Scalar(-k) : k, oracle));
            }

            const ExprPtr e = parse_expr_text(text);
            ok = ok && expr_equal(*e, *parse_expr_text(pretty_print(*e)));
            const TensorMap res = evaluate(validate(*e, env), env);
            ok = ok && res == expected;
        }

        if (!ok)
            ++failures;
    }
    return failures;
}

int suite_lambda_m(int dim, std::uint64_t seed, int cases)
{
    Rng rng(seed);
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        const int m = rng.ri(0, 3);
        const int n = rng.ri(0, std::min(2, 4 - m));
        const TensorMap t = random_map(rng, dim, "abc", m, "fg", n);
        std::vector<Array> args;
        for (int p = 0; p < m; ++p)
            args.push_back(random_array(rng, dim, Valence{0, 1}));

        bool ok = true;
        const Array direct = apply_multi(t, args);
        ok = ok && direct == apply(t, kron(args, dim));

        if (m >= 1) {
            const int j = rng.ri(0, m - 1);
            const Scalar k = rng.entry();
            const Array extra = random_array(rng, dim, Valence{0, 1});

            std::vector<Array> scaled = args;
            scaled[static_cast<std::size_t>(j)] = array_scale(k, args[static_cast<std::size_t>(j)]);
            ok = ok && apply_multi(t, scaled) == array_scale(k, direct);

            std::vector<Array> summed = args;
            summed[static_cast<std::size_t>(j)] = array_add(args[static_cast<std::size_t>(j)], extra);
            std::vector<Array> other = args;
            other[static_cast<std::size_t>(j)] = extra;
            ok = ok && apply_multi(t, summed) == array_add(direct, apply_multi(t, other));
        }

        if (!ok)
            ++failures;
    }
    return failures;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "lambdaB", "funccomp", "assoc", "metric", "basis",
        "array",   "freealg",  "parser", "lambdaM"};
    return names;
}

SuiteResult run_suite(const std::string& name, int dim, std::uint64_t seed, int cases)
{
    if (dim < 1 || dim > 4)
        fail_domain("dimension must be between 1 and 4");
    if (cases < 1)
        fail_domain("case count must be positive");

    int failures = 0;
    if (name == "lambdaB")
        failures = suite_lambda_b(dim, seed, cases);
    else if (name == "funccomp")
        failures = suite_funccomp(dim, seed, cases);
    else if (name == "assoc")
        failures = suite_assoc(dim, seed, cases);
    else if (name == "metric")
        failures = suite_metric(dim, seed, cases);
    else if (name == "basis")
        failures = suite_basis(dim, seed, cases);
    else if (name == "array")
        failures = suite_array(dim, seed, cases);
    else if (name == "freealg")
        failures = suite_freealg(dim, seed, cases);
    else if (name == "parser")
        failures = suite_parser(dim, seed, cases);
    else if (name == "lambdaM")
        failures = suite_lambda_m(dim, seed, cases);
    else
        fail_usage("unknown suite '" + name + "'");

    return SuiteResult{name, dim, seed, cases, failures};
}

} // namespace tenskit
