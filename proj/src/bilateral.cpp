#include "tenskit/bilateral.hpp"

#include "tenskit/error.hpp"

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

BilateralTensor::BilateralTensor(int dim, std::vector<IndexLabel> subs,
                                 std::vector<IndexLabel> supers, Array coeffs, std::string basis)
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

TensorMap lambda_B(const BilateralTensor& b)
{
    return TensorMap(b.dim(), b.subs(), b.supers(), b.coeffs(), b.basis());
}

BilateralTensor lambda_B_inv(const TensorMap& t)
{
    return BilateralTensor(t.dim(), t.subs(), t.supers(), t.coeffs(), t.basis());
}

BilateralTensor bilateral_mul(const BilateralTensor& s, const BilateralTensor& t,
                              const MatchSpec& m)
{
    if (s.dim() != t.dim())
        fail_domain("product needs equal dimensions");
    if (s.basis() != t.basis())
        fail_domain("product refused across bases '" + s.basis() + "' and '" + t.basis() + "'");
    const int dim = s.dim();

    std::vector<int> sPos, tPos;
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
            fail_domain("label matched twice in product");
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
    check_distinct(rsubs, rsups);

    Array out(dim, Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});

    // Brute force over all coefficient pairs: a term survives exactly when
    // every matched dual factor of s meets the equal-valued vector factor of
    // t (the pairing of e^i against e_j is 1 when i = j, else 0). This is a
    // deliberately different loop organization from the composition kernel.
    Multi sSub(s.subs().size(), 1), sSup(s.supers().size(), 1);
    Multi tSub(t.subs().size(), 1), tSup(t.supers().size(), 1);
    Multi oSub(rsubs.size()), oSup(rsups.size());

    bool sMore = true;
    while (sMore) {
        bool tMore = true;
        std::fill(tSub.begin(), tSub.end(), 1);
        std::fill(tSup.begin(), tSup.end(), 1);
        while (tMore) {
            bool live = true;
            for (std::size_t i = 0; i < sPos.size() && live; ++i)
                live = sSub[static_cast<std::size_t>(sPos[i])] == tSup[static_cast<std::size_t>(tPos[i])];
            if (live) {
                const Scalar term = s.coeffs().at(sSub, sSup) * t.coeffs().at(tSub, tSup);
                if (term != 0) {
                    std::size_t p = 0;
                    for (std::size_t i = 0; i < s.subs().size(); ++i)
                        if (!sSeen.count(static_cast<int>(i)))
                            oSub[p++] = sSub[i];
                    for (std::size_t i = 0; i < t.subs().size(); ++i)
                        oSub[p++] = tSub[i];
                    p = 0;
                    for (std::size_t i = 0; i < s.supers().size(); ++i)
                        oSup[p++] = sSup[i];
                    for (std::size_t i = 0; i < t.supers().size(); ++i)
                        if (!tSeen.count(static_cast<int>(i)))
                            oSup[p++] = tSup[i];
                    out.set(oSub, oSup, out.at(oSub, oSup) + term);
                }
            }
            if (next_multi(tSup, dim))
                continue;
            tMore = next_multi(tSub, dim);
        }
        if (next_multi(sSup, dim))
            continue;
        sMore = next_multi(sSub, dim);
    }
    return BilateralTensor(dim, std::move(rsubs), std::move(rsups), std::move(out), s.basis());
}

BilateralTensor bilateral_contract(const BilateralTensor& t,
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

    std::vector<IndexLabel> rsubs, rsups;
    for (std::size_t i = 0; i < t.subs().size(); ++i)
        if (!subSeen.count(static_cast<int>(i)))
            rsubs.push_back(t.subs()[i]);
    for (std::size_t i = 0; i < t.supers().size(); ++i)
        if (!supSeen.count(static_cast<int>(i)))
            rsups.push_back(t.supers()[i]);

    // Single sweep over every coefficient; entries on the pairwise diagonal
    // accumulate into the reduced position (again organized differently from
    // the map-side contraction, which loops result positions outermost).
    Array out(t.dim(), Valence{static_cast<int>(rsubs.size()), static_cast<int>(rsups.size())});
    Multi fSub(t.subs().size(), 1), fSup(t.supers().size(), 1);
    Multi oSub(rsubs.size()), oSup(rsups.size());
    bool more = true;
    while (more) {
        bool diag = true;
        for (std::size_t i = 0; i < subPos.size() && diag; ++i)
            diag = fSub[static_cast<std::size_t>(subPos[i])] == fSup[static_cast<std::size_t>(supPos[i])];
        if (diag) {
            std::size_t p = 0;
            for (std::size_t i = 0; i < fSub.size(); ++i)
                if (!subSeen.count(static_cast<int>(i)))
                    oSub[p++] = fSub[i];
            p = 0;
            for (std::size_t i = 0; i < fSup.size(); ++i)
                if (!supSeen.count(static_cast<int>(i)))
                    oSup[p++] = fSup[i];
            out.set(oSub, oSup, out.at(oSub, oSup) + t.coeffs().at(fSub, fSup));
        }
        if (next_multi(fSup, t.dim()))
            continue;
        more = next_multi(fSub, t.dim());
    }
    return BilateralTensor(t.dim(), std::move(rsubs), std::move(rsups), std::move(out), t.basis());
}

BilateralTensor bilateral_permute(const BilateralTensor& t, const std::vector<int>& subPerm,
                                  const std::vector<int>& superPerm)
{
    return lambda_B_inv(permute(lambda_B(t), subPerm, superPerm));
}

BilateralTensor bi_add(const BilateralTensor& a, const BilateralTensor& b)
{
    return lambda_B_inv(tm_add(lambda_B(a), lambda_B(b)));
}

BilateralTensor bi_scale(const Scalar& k, const BilateralTensor& t)
{
    return lambda_B_inv(tm_scale(k, lambda_B(t)));
}

} // namespace tenskit
