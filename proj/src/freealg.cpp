#include "tenskit/freealg.hpp"

#include "tenskit/error.hpp"

namespace tenskit {

std::string Word::str() const
{
    if (letters.empty())
        return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            out += ",";
        out += letters[i].first + ":" + std::to_string(letters[i].second);
    }
    return out + ")";
}

int FreeElement::degree() const
{
    int d = 0;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            d = w.degree();
            first = false;
        } else if (w.degree() != d) {
            return -1;
        }
    }
    return d;
}

void FreeElement::add_term(const Word& w, const Scalar& c)
{
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (c != 0)
            terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

FreeElement fe_add(const FreeElement& x, const FreeElement& y)
{
    FreeElement out = x;
    for (const auto& [w, c] : y.terms())
        out.add_term(w, c);
    return out;
}

FreeElement fe_scale(const Scalar& k, const FreeElement& x)
{
    FreeElement out;
    if (k == 0)
        return out;
    for (const auto& [w, c] : x.terms())
        out.add_term(w, k * c);
    return out;
}

FreeAlgebra::FreeAlgebra(int maxDegree, std::size_t maxTerms)
    : maxDegree_(maxDegree), maxTerms_(maxTerms)
{
    if (maxDegree < 0)
        fail_domain("negative degree cap");
}

void FreeAlgebra::add_space(const std::string& id, int dim)
{
    if (id.empty())
        fail_domain("space id must be nonempty");
    if (dim < 1)
        fail_domain("space dimension must be at least 1");
    if (!spaces_.emplace(id, dim).second)
        fail_domain("space '" + id + "' already registered");
}

int FreeAlgebra::space_dim(const std::string& id) const
{
    auto it = spaces_.find(id);
    if (it == spaces_.end())
        fail_domain("unknown space '" + id + "'");
    return it->second;
}

FreeElement FreeAlgebra::unit() const
{
    FreeElement out;
    out.add_term(Word{}, Scalar(1));
    return out;
}

FreeElement FreeAlgebra::basis_letter(const std::string& space, int index) const
{
    const int N = space_dim(space);
    if (index < 1 || index > N)
        fail_domain("basis index " + std::to_string(index) + " out of range 1.." + std::to_string(N));
    FreeElement out;
    out.add_term(Word{{{space, index}}}, Scalar(1));
    return out;
}

FreeElement FreeAlgebra::embed_vector(const std::string& space, const Array& coords) const
{
    const int N = space_dim(space);
    if (coords.dim() != N || !(coords.valence() == Valence{0, 1}))
        fail_domain("embedding needs a coordinate vector of the space");
    FreeElement out;
    for (int i = 1; i <= N; ++i)
        out.add_term(Word{{{space, i}}}, coords.at({}, {i}));
    return out;
}

void FreeAlgebra::check_caps(const FreeElement& x) const
{
    if (x.terms().size() > maxTerms_)
        fail_domain("free element exceeds the term cap of " + std::to_string(maxTerms_));
    for (const auto& [w, c] : x.terms())
        if (w.degree() > maxDegree_)
            fail_domain("free element exceeds the degree cap of " + std::to_string(maxDegree_));
}

FreeElement FreeAlgebra::free_mul(const FreeElement& x, const FreeElement& y) const
{
    FreeElement out;
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            Word w = wx;
            w.letters.insert(w.letters.end(), wy.letters.begin(), wy.letters.end());
            out.add_term(w, cx * cy);
        }
    }
    check_caps(out);
    return out;
}

FreeElement FreeAlgebra::tensor_product(const FreeElement& u, const FreeElement& v) const
{
    if (u.degree() < 0 || v.degree() < 0)
        fail_domain("tensor product needs degree-homogeneous factors");
    return free_mul(u, v);
}

Array FreeAlgebra::to_coeff_array(const FreeElement& x, const std::vector<std::string>& signature) const
{
    int dim = 1;
    for (std::size_t i = 0; i < signature.size(); ++i) {
        const int d = space_dim(signature[i]);
        if (i == 0)
            dim = d;
        else if (d != dim)
            fail_domain("signature spaces must share one dimension");
    }

    Array out(dim, Valence{0, static_cast<int>(signature.size())});
    for (const auto& [w, c] : x.terms()) {
        if (w.letters.size() != signature.size())
            fail_domain("term " + w.str() + " does not match the signature length");
        Multi ix;
        for (std::size_t i = 0; i < signature.size(); ++i) {
            if (w.letters[i].first != signature[i])
                fail_domain("term " + w.str() + " letter " + std::to_string(i + 1) +
                            " is not from space '" + signature[i] + "'");
            ix.push_back(w.letters[i].second);
        }
        out.set({}, ix, c);
    }
    return out;
}

} // namespace tenskit
