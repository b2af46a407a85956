#include "tenskit/array.hpp"

#include "tenskit/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace tenskit {

namespace {

std::size_t ipow(int base, int exp)
{
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= static_cast<std::size_t>(base);
    return r;
}

std::size_t rank_of(const Multi& ix, int dim)
{
    std::size_t r = 0;
    for (int v : ix)
        r = r * static_cast<std::size_t>(dim) + static_cast<std::size_t>(v - 1);
    return r;
}

void check_range(const Multi& ix, int dim)
{
    for (int v : ix)
        if (v < 1 || v > dim)
            fail_domain("index value " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
}

} // namespace

Array::Array(int dim, Valence v) : dim_(dim), val_(v)
{
    if (dim < 1)
        fail_domain("array dimension must be at least 1");
    if (v.subs < 0 || v.supers < 0)
        fail_domain("negative valence");
    entries_.assign(ipow(dim, v.total()), Scalar(0));
}

std::size_t Array::offset(const Multi& subs, const Multi& supers) const
{
    if (static_cast<int>(subs.size()) != val_.subs || static_cast<int>(supers.size()) != val_.supers)
        fail_domain("multi-index arity does not match array valence");
    check_range(subs, dim_);
    check_range(supers, dim_);
    return rank_of(subs, dim_) * ipow(dim_, val_.supers) + rank_of(supers, dim_);
}

const Scalar& Array::at(const Multi& subs, const Multi& supers) const
{
    return entries_[offset(subs, supers)];
}

void Array::set(const Multi& subs, const Multi& supers, const Scalar& v)
{
    entries_[offset(subs, supers)] = v;
}

bool next_multi(Multi& ix, int dim)
{
    for (std::size_t k = ix.size(); k-- > 0;) {
        if (ix[k] < dim) {
            ++ix[k];
            return true;
        }
        ix[k] = 1;
    }
    return false;
}

Array array_from_rows(const std::vector<std::vector<Scalar>>& rows, Valence v, int dim)
{
    Array out(dim, v);
    const std::size_t nrows = ipow(dim, v.subs);
    const std::size_t ncols = ipow(dim, v.supers);
    if (rows.size() != nrows)
        fail_domain("expected " + std::to_string(nrows) + " rows, got " + std::to_string(rows.size()));
    for (std::size_t r = 0; r < nrows; ++r) {
        if (rows[r].size() != ncols)
            fail_domain("expected " + std::to_string(ncols) + " columns in row " + std::to_string(r + 1));
        for (std::size_t c = 0; c < ncols; ++c)
            out.flat(r * ncols + c) = rows[r][c];
    }
    return out;
}

Array array_add(const Array& a, const Array& b)
{
    if (a.dim() != b.dim() || !(a.valence() == b.valence()))
        fail_domain("array sum needs equal dimension and valence");
    Array out(a.dim(), a.valence());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.flat(i) = a.flat(i) + b.flat(i);
    return out;
}

Array array_scale(const Scalar& k, const Array& a)
{
    Array out(a.dim(), a.valence());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.flat(i) = k * a.flat(i);
    return out;
}

Array array_mul(const Array& a, const Array& b,
                const std::vector<std::pair<int, int>>& matches)
{
    if (a.dim() != b.dim())
        fail_domain("array product needs equal dimensions");
    const int dim = a.dim();
    const int am = a.valence().subs, an = a.valence().supers;
    const int bm = b.valence().subs, bn = b.valence().supers;

    std::vector<bool> aMatched(static_cast<std::size_t>(an), false);
    std::vector<bool> bMatched(static_cast<std::size_t>(bm), false);
    for (const auto& [sup, sub] : matches) {
        if (sup < 1 || sup > an)
            fail_domain("matched superscript position " + std::to_string(sup) + " out of range");
        if (sub < 1 || sub > bm)
            fail_domain("matched subscript position " + std::to_string(sub) + " out of range");
        if (aMatched[static_cast<std::size_t>(sup - 1)] || bMatched[static_cast<std::size_t>(sub - 1)])
            fail_domain("duplicate matched position in array product");
        aMatched[static_cast<std::size_t>(sup - 1)] = true;
        bMatched[static_cast<std::size_t>(sub - 1)] = true;
    }
    const int k = static_cast<int>(matches.size());

    Array out(dim, Valence{am + bm - k, an + bn - k});

    // Result index layout: a.subs ++ b's unmatched subs ; a's unmatched
    // supers ++ b.supers.
    Multi rsubs(static_cast<std::size_t>(am + bm - k), 1);
    Multi rsups(static_cast<std::size_t>(an + bn - k), 1);
    Multi asubs(static_cast<std::size_t>(am)), asups(static_cast<std::size_t>(an));
    Multi bsubs(static_cast<std::size_t>(bm)), bsups(static_cast<std::size_t>(bn));
    Multi w(static_cast<std::size_t>(k), 1);

    bool more = true;
    while (more) {
        // Scatter the result tuple onto the factor tuples.
        int p = 0;
        for (int i = 0; i < am; ++i)
            asubs[static_cast<std::size_t>(i)] = rsubs[static_cast<std::size_t>(p++)];
        for (int i = 0; i < bm; ++i)
            if (!bMatched[static_cast<std::size_t>(i)])
                bsubs[static_cast<std::size_t>(i)] = rsubs[static_cast<std::size_t>(p++)];
        p = 0;
        for (int i = 0; i < an; ++i)
            if (!aMatched[static_cast<std::size_t>(i)])
                asups[static_cast<std::size_t>(i)] = rsups[static_cast<std::size_t>(p++)];
        for (int i = 0; i < bn; ++i)
            bsups[static_cast<std::size_t>(i)] = rsups[static_cast<std::size_t>(p++)];

        Scalar acc(0);
        std::fill(w.begin(), w.end(), 1);
        bool wmore = true;
        while (wmore) {
            for (int i = 0; i < k; ++i) {
                asups[static_cast<std::size_t>(matches[static_cast<std::size_t>(i)].first - 1)] =
                    w[static_cast<std::size_t>(i)];
                bsubs[static_cast<std::size_t>(matches[static_cast<std::size_t>(i)].second - 1)] =
                    w[static_cast<std::size_t>(i)];
            }
            acc += a.at(asubs, asups) * b.at(bsubs, bsups);
            wmore = next_multi(w, dim);
        }
        out.set(rsubs, rsups, acc);

        // Advance the combined result tuple.
        if (next_multi(rsups, dim))
            continue;
        more = next_multi(rsubs, dim);
    }
    return out;
}

Array array_transpose(const Array& a, const std::vector<int>& flips)
{
    const int m = a.valence().subs, n = a.valence().supers;
    std::vector<bool> flip(static_cast<std::size_t>(m + n), false);
    for (int pos : flips) {
        if (pos < 1 || pos > m + n)
            fail_domain("transpose position " + std::to_string(pos) + " out of range");
        if (flip[static_cast<std::size_t>(pos - 1)])
            fail_domain("duplicate transpose position " + std::to_string(pos));
        flip[static_cast<std::size_t>(pos - 1)] = true;
    }

    // Where each original position lands in the result's full tuple.
    // Result subscripts: surviving subscripts, then lowered superscripts in
    // flip order. Result superscripts: raised subscripts in flip order, then
    // surviving superscripts.
    std::vector<int> keptSubs, keptSups, lowered, raised;
    for (int i = 0; i < m; ++i)
        (flip[static_cast<std::size_t>(i)] ? raised : keptSubs).push_back(i);
    for (int i = m; i < m + n; ++i)
        (flip[static_cast<std::size_t>(i)] ? lowered : keptSups).push_back(i);
    std::vector<int> raisedInOrder, loweredInOrder;
    for (int pos : flips) {
        if (pos <= m)
            raisedInOrder.push_back(pos - 1);
        else
            loweredInOrder.push_back(pos - 1);
    }

    std::vector<int> order; // original full-tuple position for each result position
    order.reserve(static_cast<std::size_t>(m + n));
    for (int i : keptSubs)
        order.push_back(i);
    for (int i : loweredInOrder)
        order.push_back(i);
    for (int i : raisedInOrder)
        order.push_back(i);
    for (int i : keptSups)
        order.push_back(i);

    const int rm = static_cast<int>(keptSubs.size() + loweredInOrder.size());
    const int rn = static_cast<int>(raisedInOrder.size() + keptSups.size());
    Array out(a.dim(), Valence{rm, rn});

    Multi full(static_cast<std::size_t>(m + n), 1);
    Multi osubs(static_cast<std::size_t>(m)), osups(static_cast<std::size_t>(n));
    Multi rsubs(static_cast<std::size_t>(rm)), rsups(static_cast<std::size_t>(rn));
    bool more = true;
    while (more) {
        for (int i = 0; i < m; ++i)
            osubs[static_cast<std::size_t>(i)] = full[static_cast<std::size_t>(i)];
        for (int i = 0; i < n; ++i)
            osups[static_cast<std::size_t>(i)] = full[static_cast<std::size_t>(m + i)];
        for (int i = 0; i < rm + rn; ++i) {
            const int v = full[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            if (i < rm)
                rsubs[static_cast<std::size_t>(i)] = v;
            else
                rsups[static_cast<std::size_t>(i - rm)] = v;
        }
        out.set(rsubs, rsups, a.at(osubs, osups));
        more = next_multi(full, a.dim());
    }
    return out;
}

Array array_inverse(const Array& a)
{
    if (a.valence().subs != a.valence().supers)
        fail_domain("inverse needs valence (n over n)");
    const std::size_t n = ipow(a.dim(), a.valence().subs);

    // Gauss-Jordan on the matrix view [A | I].
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(2 * n, Scalar(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            mat[r][c] = a.flat(r * n + c);
        mat[r][n + r] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && mat[piv][col] == 0)
            ++piv;
        if (piv == n)
            fail_domain("singular array");
        std::swap(mat[piv], mat[col]);
        const Scalar inv = Scalar(1) / mat[col][col];
        for (std::size_t c = 0; c < 2 * n; ++c)
            mat[col][c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || mat[r][col] == 0)
                continue;
            const Scalar f = mat[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c)
                mat[r][c] -= f * mat[col][c];
        }
    }

    Array out(a.dim(), a.valence());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out.flat(r * n + c) = mat[r][n + c];
    return out;
}

Array delta(int dim, int pairs)
{
    if (pairs < 0)
        fail_domain("negative pair count");
    Array out(dim, Valence{pairs, pairs});
    Multi ix(static_cast<std::size_t>(pairs), 1);
    bool more = true;
    while (more) {
        out.set(ix, ix, Scalar(1));
        more = next_multi(ix, dim);
    }
    return out;
}

Array array_inner(const Array& a, const Array& b)
{
    if (a.valence().supers != b.valence().subs)
        fail_domain("inner product needs a's superscript count to equal b's subscript count");
    std::vector<std::pair<int, int>> matches;
    for (int i = 1; i <= a.valence().supers; ++i)
        matches.emplace_back(i, i);
    return array_mul(a, b, matches);
}

Array array_outer(const Array& a, const Array& b)
{
    return array_mul(a, b, {});
}

Array kron(const std::vector<Array>& vectors, int dim)
{
    Array out(dim, Valence{0, 0});
    out.flat(0) = 1;
    for (const auto& v : vectors) {
        if (v.dim() != dim)
            fail_domain("kron factor dimension mismatch");
        if (!(v.valence() == Valence{0, 1}))
            fail_domain("kron factors must be coordinate vectors");
        out = array_outer(out, v);
    }
    return out;
}

} // namespace tenskit
