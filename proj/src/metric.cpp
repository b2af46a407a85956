#include "tenskit/metric.hpp"

#include "tenskit/error.hpp"

#include <algorithm>

namespace tenskit {

namespace {

int position_of(const std::vector<IndexLabel>& labels, const IndexLabel& l)
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l)
            return static_cast<int>(i);
    return -1;
}

IndexLabel primed(const IndexLabel& l)
{
    IndexLabel out = l;
    ++out.generation;
    return out;
}

} // namespace

Metric::Metric(Array g) : g_(std::move(g)), ginv_(g_.dim(), Valence{0, 2})
{
    if (!(g_.valence() == Valence{2, 0}))
        fail_domain("metric coefficients must carry exactly two subscripts");
    const int N = g_.dim();
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (g_.at({i, j}, {}) != g_.at({j, i}, {}))
                fail_domain("metric is not symmetric");

    // Both the two-subscript array and its matrix view lay out entries as
    // row-major (i,j), so inversion can run on the reinterpreted view.
    Array view(N, Valence{1, 1});
    for (std::size_t k = 0; k < g_.size(); ++k)
        view.flat(k) = g_.flat(k);
    const Array viewInv = array_inverse(view); // throws on singular input
    for (std::size_t k = 0; k < ginv_.size(); ++k)
        ginv_.flat(k) = viewInv.flat(k);
}

TensorMap lower_index(const TensorMap& t, const IndexLabel& label, const Metric& g)
{
    if (t.dim() != g.dim())
        fail_domain("metric dimension does not match tensor dimension");
    const int pos = position_of(t.supers(), label);
    if (pos < 0)
        fail_domain("label '" + label.str() + "' is not a superscript");

    std::vector<IndexLabel> rsubs{primed(label)};
    rsubs.insert(rsubs.end(), t.subs().begin(), t.subs().end());
    std::vector<IndexLabel> rsups;
    for (std::size_t i = 0; i < t.supers().size(); ++i)
        if (static_cast<int>(i) != pos)
            rsups.push_back(t.supers()[i]);

    const int N = t.dim();
    Array out(N, Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});
    Multi oSub(t.subs().size(), 1), oSup(t.supers().size(), 1);
    bool more = true;
    while (more) {
        Multi fSup;
        for (std::size_t i = 0; i < oSup.size(); ++i)
            if (static_cast<int>(i) != pos)
                fSup.push_back(oSup[i]);
        // new subscript value w pairs with the summed-out superscript value
        for (int w = 1; w <= N; ++w) {
            Multi fSub{w};
            fSub.insert(fSub.end(), oSub.begin(), oSub.end());
            const int b = oSup[static_cast<std::size_t>(pos)];
            out.set(fSub, fSup, out.at(fSub, fSup) + g.g().at({w, b}, {}) * t.coeffs().at(oSub, oSup));
        }
        if (next_multi(oSup, N))
            continue;
        more = next_multi(oSub, N);
    }
    return TensorMap(N, std::move(rsubs), std::move(rsups), std::move(out), t.basis());
}

TensorMap raise_index(const TensorMap& t, const IndexLabel& label, const Metric& g)
{
    if (t.dim() != g.dim())
        fail_domain("metric dimension does not match tensor dimension");
    const int pos = position_of(t.subs(), label);
    if (pos < 0)
        fail_domain("label '" + label.str() + "' is not a subscript");

    std::vector<IndexLabel> rsubs;
    for (std::size_t i = 0; i < t.subs().size(); ++i)
        if (static_cast<int>(i) != pos)
            rsubs.push_back(t.subs()[i]);
    std::vector<IndexLabel> rsups(t.supers());
    rsups.push_back(primed(label));

    const int N = t.dim();
    Array out(N, Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});
    Multi oSub(t.subs().size(), 1), oSup(t.supers().size(), 1);
    bool more = true;
    while (more) {
        Multi fSub;
        for (std::size_t i = 0; i < oSub.size(); ++i)
            if (static_cast<int>(i) != pos)
                fSub.push_back(oSub[i]);
        for (int w = 1; w <= N; ++w) {
            Multi fSup(oSup);
            fSup.push_back(w);
            const int a = oSub[static_cast<std::size_t>(pos)];
            out.set(fSub, fSup, out.at(fSub, fSup) + t.coeffs().at(oSub, oSup) * g.ginv().at({}, {a, w}));
        }
        if (next_multi(oSup, N))
            continue;
        more = next_multi(oSub, N);
    }
    return TensorMap(N, std::move(rsubs), std::move(rsups), std::move(out), t.basis());
}

TensorMap dual_shift(const TensorMap& t, const IndexLabel& label)
{
    IndexLabel starred = label;
    starred.dual = !starred.dual;
    const int N = t.dim();

    int pos = position_of(t.supers(), label);
    if (pos >= 0) {
        // superscript becomes a subscript, after any existing subscripts
        std::vector<IndexLabel> rsubs(t.subs());
        rsubs.push_back(starred);
        std::vector<IndexLabel> rsups;
        for (std::size_t i = 0; i < t.supers().size(); ++i)
            if (static_cast<int>(i) != pos)
                rsups.push_back(t.supers()[i]);

        Array out(N, Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});
        Multi oSub(t.subs().size(), 1), oSup(t.supers().size(), 1);
        bool more = true;
        while (more) {
            Multi fSub(oSub);
            fSub.push_back(oSup[static_cast<std::size_t>(pos)]);
            Multi fSup;
            for (std::size_t i = 0; i < oSup.size(); ++i)
                if (static_cast<int>(i) != pos)
                    fSup.push_back(oSup[i]);
            out.set(fSub, fSup, t.coeffs().at(oSub, oSup));
            if (next_multi(oSup, N))
                continue;
            more = next_multi(oSub, N);
        }
        return TensorMap(N, std::move(rsubs), std::move(rsups), std::move(out), t.basis());
    }

    pos = position_of(t.subs(), label);
    if (pos < 0)
        fail_domain("label '" + label.str() + "' not found");

    // subscript becomes a superscript, before any existing superscripts
    std::vector<IndexLabel> rsubs;
    for (std::size_t i = 0; i < t.subs().size(); ++i)
        if (static_cast<int>(i) != pos)
            rsubs.push_back(t.subs()[i]);
    std::vector<IndexLabel> rsups{starred};
    rsups.insert(rsups.end(), t.supers().begin(), t.supers().end());

    Array out(N, Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});
    Multi oSub(t.subs().size(), 1), oSup(t.supers().size(), 1);
    bool more = true;
    while (more) {
        Multi fSub;
        for (std::size_t i = 0; i < oSub.size(); ++i)
            if (static_cast<int>(i) != pos)
                fSub.push_back(oSub[i]);
        Multi fSup{oSub[static_cast<std::size_t>(pos)]};
        fSup.insert(fSup.end(), oSup.begin(), oSup.end());
        out.set(fSub, fSup, t.coeffs().at(oSub, oSup));
        if (next_multi(oSup, N))
            continue;
        more = next_multi(oSub, N);
    }
    return TensorMap(N, std::move(rsubs), std::move(rsups), std::move(out), t.basis());
}

} // namespace tenskit
