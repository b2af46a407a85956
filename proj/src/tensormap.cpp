#include "tenskit/tensormap.hpp"

#include "tenskit/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tenskit {

namespace {

void check_distinct(const std::vector<IndexLabel>& subs, const std::vector<IndexLabel>& supers)
{
    std::set<IndexLabel> seen;
    for (const auto& l : subs)
        if (!seen.insert(l).second)
            fail_domain("label '" + l.str() + "' occurs twice");
    for (const auto& l : supers)
        if (!seen.insert(l).second)
            fail_domain("label '" + l.str() + "' occurs twice");
}

int find_label(const std::vector<IndexLabel>& labels, const IndexLabel& l)
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l)
            return static_cast<int>(i);
    return -1;
}

} // namespace

std::string IndexLabel::str() const
{
    std::string out = name;
    if (dual)
        out += '*';
    out.append(static_cast<std::size_t>(generation), '\'');
    return out;
}

IndexLabel IndexLabel::parse(const std::string& text)
{
    std::size_t i = 0;
    if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
        fail_domain("bad index label '" + text + "'");
    std::string name(1, text[i++]);
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        name += text[i++];
    bool dual = false;
    if (i < text.size() && text[i] == '*') {
        dual = true;
        ++i;
    }
    int gen = 0;
    while (i < text.size() && text[i] == '\'') {
        ++gen;
        ++i;
    }
    if (i != text.size())
        fail_domain("bad index label '" + text + "'");
    return IndexLabel{name, dual, gen};
}

TensorMap::TensorMap(int dim, std::vector<IndexLabel> subs, std::vector<IndexLabel> supers,
                     Array coeffs, std::string basis)
    : dim_(dim), subs_(std::move(subs)), supers_(std::move(supers)),
      coeffs_(std::move(coeffs)), basis_(std::move(basis))
{
    if (dim_ < 1)
        fail_domain("dimension must be at least 1");
    check_distinct(subs_, supers_);
    if (coeffs_.dim() != dim_)
        fail_domain("coefficient array dimension mismatch");
    const Valence want{static_cast<int>(subs_.size()), static_cast<int>(supers_.size())};
    if (!(coeffs_.valence() == want))
        fail_domain("coefficient array valence does not match label lists");
}

TensorMap scalar_like(int dim, const Scalar& value, const std::string& basis)
{
    Array c(dim, Valence{0, 0});
    c.flat(0) = value;
    return TensorMap(dim, {}, {}, std::move(c), basis);
}

TensorMap vector_like(int dim, const Array& coords, const IndexLabel& label,
                      const std::string& basis)
{
    if (coords.dim() != dim || !(coords.valence() == Valence{0, 1}))
        fail_domain("vector coordinates must have valence (1 over 0) at the given dimension");
    return TensorMap(dim, {}, {label}, coords, basis);
}

TensorMap form_like(int dim, const Array& coords, const IndexLabel& label,
                    const std::string& basis)
{
    if (coords.dim() != dim || !(coords.valence() == Valence{1, 0}))
        fail_domain("form coordinates must have valence (0 over 1) at the given dimension");
    return TensorMap(dim, {label}, {}, coords, basis);
}

TensorMap compose_general(const TensorMap& s, const TensorMap& t, const MatchSpec& m)
{
    if (s.dim() != t.dim())
        fail_domain("composition needs equal dimensions");
    if (s.basis() != t.basis())
        fail_domain("composition refused across bases '" + s.basis() + "' and '" + t.basis() + "'");
    const int dim = s.dim();

    std::vector<int> sPos, tPos; // matched positions within s.subs / t.supers
    std::set<int> sSeen, tSeen;
    for (const auto& [ls, lt] : m.pairs) {
        const int ps = find_label(s.subs(), ls);
        if (ps < 0)
            fail_domain("label '" + ls.str() + "' is not a subscript of the left operand");
        const int pt = find_label(t.supers(), lt);
        if (pt < 0)
            fail_domain("label '" + lt.str() + "' is not a superscript of the right operand");
        if (ls.dual != lt.dual)
            fail_domain("matched labels '" + ls.str() + "' and '" + lt.str() + "' live on different spaces");
        if (!sSeen.insert(ps).second || !tSeen.insert(pt).second)
            fail_domain("label matched twice in composition");
        sPos.push_back(ps);
        tPos.push_back(pt);
    }

    std::vector<IndexLabel> rsubs, rsups;
    for (std::size_t i = 0; i < s.subs().size(); ++i)
        if (!sSeen.count(static_cast<int>(i)))
            rsubs.push_back(s.subs()[i]);
    for (const auto& l : t.subs())
        rsubs.push_back(l);
    for (const auto& l : s.supers())
        rsups.push_back(l);
    for (std::size_t i = 0; i < t.supers().size(); ++i)
        if (!tSeen.count(static_cast<int>(i)))
            rsups.push_back(t.supers()[i]);
    check_distinct(rsubs, rsups); // collisions surface here

    const int sm = static_cast<int>(s.subs().size()), sn = static_cast<int>(s.supers().size());
    const int tm = static_cast<int>(t.subs().size()), tn = static_cast<int>(t.supers().size());
    const int rho = static_cast<int>(m.pairs.size());

    Array out(dim, Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});
    Multi oSub(rsubs.size(), 1), oSup(rsups.size(), 1);
    Multi sSub(static_cast<std::size_t>(sm)), sSup(static_cast<std::size_t>(sn));
    Multi tSub(static_cast<std::size_t>(tm)), tSup(static_cast<std::size_t>(tn));
    Multi w(static_cast<std::size_t>(rho), 1);

    bool more = true;
    while (more) {
        // Scatter result values onto the operands' tuples.
        int p = 0;
        for (int i = 0; i < sm; ++i)
            if (!sSeen.count(i))
                sSub[static_cast<std::size_t>(i)] = oSub[static_cast<std::size_t>(p++)];
        for (int i = 0; i < tm; ++i)
            tSub[static_cast<std::size_t>(i)] = oSub[static_cast<std::size_t>(p++)];
        p = 0;
        for (int i = 0; i < sn; ++i)
            sSup[static_cast<std::size_t>(i)] = oSup[static_cast<std::size_t>(p++)];
        for (int i = 0; i < tn; ++i)
            if (!tSeen.count(i))
                tSup[static_cast<std::size_t>(i)] = oSup[static_cast<std::size_t>(p++)];

        Scalar acc(0);
        std::fill(w.begin(), w.end(), 1);
        bool wmore = true;
        while (wmore) {
            for (int i = 0; i < rho; ++i) {
                sSub[static_cast<std::size_t>(sPos[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
                tSup[static_cast<std::size_t>(tPos[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
            }
            acc += s.coeffs().at(sSub, sSup) * t.coeffs().at(tSub, tSup);
            wmore = next_multi(w, dim);
        }
        out.set(oSub, oSup, acc);

        if (next_multi(oSup, dim))
            continue;
        more = next_multi(oSub, dim);
    }
    return TensorMap(dim, std::move(rsubs), std::move(rsups), std::move(out), s.basis());
}

TensorMap outer(const TensorMap& s, const TensorMap& t)
{
    return compose_general(s, t, MatchSpec{});
}

TensorMap inner(const TensorMap& s, const TensorMap& t)
{
    if (s.subs().size() != t.supers().size())
        fail_domain("inner composition needs the left subscript count to equal the right superscript count");
    MatchSpec m;
    for (std::size_t i = 0; i < s.subs().size(); ++i)
        m.pairs.emplace_back(s.subs()[i], t.supers()[i]);
    return compose_general(s, t, m);
}

TensorMap contract(const TensorMap& t,
                   const std::vector<std::pair<IndexLabel, IndexLabel>>& pairs)
{
    std::vector<int> subPos, supPos;
    std::set<int> subSeen, supSeen;
    for (const auto& [lsub, lsup] : pairs) {
        const int ps = find_label(t.subs(), lsub);
        if (ps < 0)
            fail_domain("label '" + lsub.str() + "' is not a subscript");
        const int pu = find_label(t.supers(), lsup);
        if (pu < 0)
            fail_domain("label '" + lsup.str() + "' is not a superscript");
        if (!subSeen.insert(ps).second || !supSeen.insert(pu).second)
            fail_domain("label contracted twice");
        subPos.push_back(ps);
        supPos.push_back(pu);
    }
    const int rho = static_cast<int>(pairs.size());
    const int m = static_cast<int>(t.subs().size()), n = static_cast<int>(t.supers().size());

    std::vector<IndexLabel> rsubs, rsups;
    for (int i = 0; i < m; ++i)
        if (!subSeen.count(i))
            rsubs.push_back(t.subs()[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
        if (!supSeen.count(i))
            rsups.push_back(t.supers()[static_cast<std::size_t>(i)]);

    Array out(t.dim(), Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});
    Multi oSub(rsubs.size(), 1), oSup(rsups.size(), 1);
    Multi fSub(static_cast<std::size_t>(m)), fSup(static_cast<std::size_t>(n));
    Multi w(static_cast<std::size_t>(rho), 1);

    bool more = true;
    while (more) {
        int p = 0;
        for (int i = 0; i < m; ++i)
            if (!subSeen.count(i))
                fSub[static_cast<std::size_t>(i)] = oSub[static_cast<std::size_t>(p++)];
        p = 0;
        for (int i = 0; i < n; ++i)
            if (!supSeen.count(i))
                fSup[static_cast<std::size_t>(i)] = oSup[static_cast<std::size_t>(p++)];

        Scalar acc(0);
        std::fill(w.begin(), w.end(), 1);
        bool wmore = true;
        while (wmore) {
            for (int i = 0; i < rho; ++i) {
                fSub[static_cast<std::size_t>(subPos[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
                fSup[static_cast<std::size_t>(supPos[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
            }
            acc += t.coeffs().at(fSub, fSup);
            wmore = next_multi(w, t.dim());
        }
        out.set(oSub, oSup, acc);

        if (next_multi(oSup, t.dim()))
            continue;
        more = next_multi(oSub, t.dim());
    }
    return TensorMap(t.dim(), std::move(rsubs), std::move(rsups), std::move(out), t.basis());
}

namespace {

void check_perm(const std::vector<int>& perm, std::size_t n)
{
    if (perm.size() != n)
        fail_domain("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
            fail_domain("not a permutation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

} // namespace

TensorMap permute(const TensorMap& t, const std::vector<int>& subPerm,
                  const std::vector<int>& superPerm)
{
    check_perm(subPerm, t.subs().size());
    check_perm(superPerm, t.supers().size());

    std::vector<IndexLabel> rsubs, rsups;
    for (int v : subPerm)
        rsubs.push_back(t.subs()[static_cast<std::size_t>(v - 1)]);
    for (int v : superPerm)
        rsups.push_back(t.supers()[static_cast<std::size_t>(v - 1)]);

    Array out(t.dim(), t.coeffs().valence());
    Multi oSub(rsubs.size(), 1), oSup(rsups.size(), 1);
    Multi fSub(t.subs().size()), fSup(t.supers().size());
    bool more = true;
    while (more) {
        // Result position k carries the label from old position perm[k], so
        // the old tuple reads the result tuple through the permutation.
        for (std::size_t k = 0; k < oSub.size(); ++k)
            fSub[static_cast<std::size_t>(subPerm[k] - 1)] = oSub[k];
        for (std::size_t k = 0; k < oSup.size(); ++k)
            fSup[static_cast<std::size_t>(superPerm[k] - 1)] = oSup[k];
        out.set(oSub, oSup, t.coeffs().at(fSub, fSup));
        if (next_multi(oSup, t.dim()))
            continue;
        more = next_multi(oSub, t.dim());
    }
    return TensorMap(t.dim(), std::move(rsubs), std::move(rsups), std::move(out), t.basis());
}

Array apply(const TensorMap& t, const Array& arg)
{
    const int m = static_cast<int>(t.subs().size());
    const int n = static_cast<int>(t.supers().size());
    if (arg.dim() != t.dim() && !(m == 0 && arg.valence().total() == 0))
        fail_domain("argument dimension mismatch");
    if (!(arg.valence() == Valence{0, m}))
        fail_domain("argument must have valence (m over 0) for a map with m subscripts");

    Array out(t.dim(), Valence{0, n});
    Multi img(static_cast<std::size_t>(n), 1);
    Multi j(static_cast<std::size_t>(m), 1);
    bool more = true;
    while (more) {
        Scalar acc(0);
        std::fill(j.begin(), j.end(), 1);
        bool jmore = true;
        while (jmore) {
            acc += arg.at({}, j) * t.coeffs().at(j, img);
            jmore = next_multi(j, t.dim());
        }
        out.set({}, img, acc);
        more = next_multi(img, t.dim());
    }
    return out;
}

Array apply_multi(const TensorMap& t, const std::vector<Array>& args)
{
    const int m = static_cast<int>(t.subs().size());
    const int n = static_cast<int>(t.supers().size());
    if (args.size() != static_cast<std::size_t>(m))
        fail_domain("expected " + std::to_string(t.subs().size()) + " arguments");
    for (const Array& a : args) {
        if (a.dim() != t.dim())
            fail_domain("argument dimension mismatch");
        if (!(a.valence() == Valence{0, 1}))
            fail_domain("each argument must be a coordinate vector");
    }

    // Feed the vectors one slot at a time instead of assembling their joint
    // coordinate array, so separate linearity in each slot is used directly.
    Array out(t.dim(), Valence{0, n});
    Multi img(static_cast<std::size_t>(n), 1);
    Multi j(static_cast<std::size_t>(m), 1);
    bool more = true;
    while (more) {
        Scalar acc(0);
        std::fill(j.begin(), j.end(), 1);
        bool jmore = true;
        while (jmore) {
            Scalar term = t.coeffs().at(j, img);
            for (std::size_t p = 0; p < j.size() && term != 0; ++p)
                term *= args[p].at({}, {j[p]});
            acc += term;
            jmore = next_multi(j, t.dim());
        }
        out.set({}, img, acc);
        more = next_multi(img, t.dim());
    }
    return out;
}

TensorMap tm_add(const TensorMap& a, const TensorMap& b)
{
    if (a.dim() != b.dim() || a.basis() != b.basis() || a.subs() != b.subs() || a.supers() != b.supers())
        fail_domain("sum needs identical dimension, basis, and labels");
    return TensorMap(a.dim(), a.subs(), a.supers(), array_add(a.coeffs(), b.coeffs()), a.basis());
}

TensorMap tm_scale(const Scalar& k, const TensorMap& t)
{
    return TensorMap(t.dim(), t.subs(), t.supers(), array_scale(k, t.coeffs()), t.basis());
}

TensorMap relabel(const TensorMap& t, std::vector<IndexLabel> subs, std::vector<IndexLabel> supers)
{
    if (subs.size() != t.subs().size() || supers.size() != t.supers().size())
        fail_domain("relabel arity mismatch");
    return TensorMap(t.dim(), std::move(subs), std::move(supers), t.coeffs(), t.basis());
}

TensorMap reorder_like(const TensorMap& t, const std::vector<IndexLabel>& subs,
                       const std::vector<IndexLabel>& supers)
{
    std::vector<int> subPerm, superPerm;
    for (const auto& l : subs) {
        const int p = find_label(t.subs(), l);
        if (p < 0)
            fail_domain("label '" + l.str() + "' is not a subscript");
        subPerm.push_back(p + 1);
    }
    for (const auto& l : supers) {
        const int p = find_label(t.supers(), l);
        if (p < 0)
            fail_domain("label '" + l.str() + "' is not a superscript");
        superPerm.push_back(p + 1);
    }
    return permute(t, subPerm, superPerm);
}

} // namespace tenskit
