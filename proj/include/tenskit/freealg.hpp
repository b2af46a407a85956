#ifndef TENSKIT_FREEALG_HPP
#define TENSKIT_FREEALG_HPP

#include "tenskit/array.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tenskit {

// A basis word: a finite string of letters, each naming a basis vector of
// some registered space. The empty word is the algebra unit.
struct Word {
    std::vector<std::pair<std::string, int>> letters; // (space id, basis index 1..N)

    int degree() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const Word&) const = default;
    std::string str() const;
};

// A formal finite sum of basis words with rational coefficients, kept in
// normal form: no zero coefficient is ever stored, so the zero element is
// the empty sum.
class FreeElement {
public:
    FreeElement() = default;

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Homogeneous degree, or -1 for mixed degrees. The zero element counts
    // as homogeneous of every degree and reports 0.
    int degree() const;

    void add_term(const Word& w, const Scalar& c);

    bool operator==(const FreeElement&) const = default;

private:
    std::map<Word, Scalar> terms_;
};

FreeElement fe_add(const FreeElement& x, const FreeElement& y);
FreeElement fe_scale(const Scalar& k, const FreeElement& x);

// The free unital associative algebra over one or more named coordinate
// spaces, truncated to desk scale: words longer than the degree cap or
// sums wider than the term cap are refused outright, never truncated.
class FreeAlgebra {
public:
    explicit FreeAlgebra(int maxDegree = 6, std::size_t maxTerms = 10000);

    void add_space(const std::string& id, int dim);
    int space_dim(const std::string& id) const;

    FreeElement unit() const;
    FreeElement basis_letter(const std::string& space, int index) const;

    // Image of a general vector of the space, expanded over basis words:
    // sum_i coords[i] * (e_i).
    FreeElement embed_vector(const std::string& space, const Array& coords) const;

    // Convolution product: distribute, concatenate words, collect.
    FreeElement free_mul(const FreeElement& x, const FreeElement& y) const;

    // The distinguished tensor product: the same product, but only for
    // degree-homogeneous arguments.
    FreeElement tensor_product(const FreeElement& u, const FreeElement& v) const;

    // Coordinate array of a pure-degree element whose words all follow the
    // given space signature. All signature spaces must share one dimension
    // (arrays carry a single index range). Empty signature gives the
    // singleton holding the unit-word coefficient.
    Array to_coeff_array(const FreeElement& x, const std::vector<std::string>& signature) const;

private:
    void check_caps(const FreeElement& x) const;

    int maxDegree_;
    std::size_t maxTerms_;
    std::map<std::string, int> spaces_;
};

} // namespace tenskit

#endif
