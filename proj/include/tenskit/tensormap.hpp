#ifndef TENSKIT_TENSORMAP_HPP
#define TENSKIT_TENSORMAP_HPP

#include "tenskit/array.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace tenskit {

// Abstract index label. Subscripts name input slots, superscripts output
// slots. `dual` marks a slot on the dual space (printed with a trailing *);
// `generation` counts primes, used for the fresh labels created by metric
// raising and lowering. Labels are equal only when all three parts agree.
struct IndexLabel {
    std::string name;
    bool dual = false;
    int generation = 0;

    auto operator<=>(const IndexLabel&) const = default;

    std::string str() const;
    // Accepts a letter plus optional digits, then optional '*', then
    // optional primes: "a", "b2", "a*", "a''", "a*'".
    static IndexLabel parse(const std::string& text);
};

inline IndexLabel lbl(const std::string& text) { return IndexLabel::parse(text); }

// Pairs a subscript label of the left operand with a superscript label of
// the right operand. Only this direction composes; the labels in a pair may
// differ by name but must live on the same space (base vs dual).
struct MatchSpec {
    std::vector<std::pair<IndexLabel, IndexLabel>> pairs;
};

// A classical tensor as a linear map between tensor powers of an
// N-dimensional space, stored extensionally: the coefficient array holds
// t[subs; supers] relative to the named basis, subscripts indexing the
// argument basis tuple and superscripts the image expansion.
class TensorMap {
public:
    TensorMap(int dim, std::vector<IndexLabel> subs, std::vector<IndexLabel> supers,
              Array coeffs, std::string basis = "e");

    int dim() const { return dim_; }
    const std::vector<IndexLabel>& subs() const { return subs_; }
    const std::vector<IndexLabel>& supers() const { return supers_; }
    const Array& coeffs() const { return coeffs_; }
    const std::string& basis() const { return basis_; }

    bool operator==(const TensorMap&) const = default;

private:
    int dim_;
    std::vector<IndexLabel> subs_, supers_;
    Array coeffs_;
    std::string basis_;
};

TensorMap scalar_like(int dim, const Scalar& value, const std::string& basis = "e");
TensorMap vector_like(int dim, const Array& coords, const IndexLabel& label,
                      const std::string& basis = "e");
TensorMap form_like(int dim, const Array& coords, const IndexLabel& label,
                    const std::string& basis = "e");

// General composition: sums the coefficient product over the matched
// (subscript of s, superscript of t) pairs. Result layout: subscripts are
// s's unmatched ones then all of t's; superscripts are all of s's then t's
// unmatched ones. No matches is the outer composition (tensor product of
// maps); matching everything available is ordinary function composition.
TensorMap compose_general(const TensorMap& s, const TensorMap& t, const MatchSpec& m);

TensorMap outer(const TensorMap& s, const TensorMap& t);

// Matches all of s's subscripts against all of t's superscripts in
// positional order.
TensorMap inner(const TensorMap& s, const TensorMap& t);

// Self-contraction: sum coefficients over each paired (subscript,
// superscript) of one map, dropping both labels.
TensorMap contract(const TensorMap& t,
                   const std::vector<std::pair<IndexLabel, IndexLabel>>& pairs);

// Reorders labels; perm[k] is the 1-based old position supplying the new
// k-th label. Coefficients are reindexed so the map itself is unchanged up
// to the slot reordering automorphisms.
TensorMap permute(const TensorMap& t, const std::vector<int>& subPerm,
                  const std::vector<int>& superPerm);

// Applies the map to coordinates of an element of the m-th tensor power
// (valence (m over 0) array), returning image coordinates (n over 0).
Array apply(const TensorMap& t, const Array& arg);

// Separately-linear view: apply to the coordinate tensor product of m
// vectors.
Array apply_multi(const TensorMap& t, const std::vector<Array>& args);

// Linear structure; operands must agree in dim, basis, and labels.
TensorMap tm_add(const TensorMap& a, const TensorMap& b);
TensorMap tm_scale(const Scalar& k, const TensorMap& t);

// Same coefficients under new label lists (lengths must match).
TensorMap relabel(const TensorMap& t, std::vector<IndexLabel> subs,
                  std::vector<IndexLabel> supers);

// Reorder t's labels to the given target order (a permutation of them).
TensorMap reorder_like(const TensorMap& t, const std::vector<IndexLabel>& subs,
                       const std::vector<IndexLabel>& supers);

} // namespace tenskit

#endif
