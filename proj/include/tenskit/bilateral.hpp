#ifndef TENSKIT_BILATERAL_HPP
#define TENSKIT_BILATERAL_HPP

#include "tenskit/tensormap.hpp"

#include <utility>
#include <vector>

namespace tenskit {

// A classical tensor in its two-sided product-space reading: an element of
// the m-th dual power tensored with the n-th power of V, expanded over the
// basis e^{i_1} x ... x e^{i_m} x e_{j_1} x ... x e_{j_n}. Coefficients are
// stored like a TensorMap's (subscripts = dual factors), which makes the
// map/bilateral correspondence a relabeling; multiplication below is coded
// against the two-sided pairing directly so the two kernels stay
// independent cross-checks of each other.
class BilateralTensor {
public:
    BilateralTensor(int dim, std::vector<IndexLabel> subs, std::vector<IndexLabel> supers,
                    Array coeffs, std::string basis = "e");

    int dim() const { return dim_; }
    const std::vector<IndexLabel>& subs() const { return subs_; }
    const std::vector<IndexLabel>& supers() const { return supers_; }
    const Array& coeffs() const { return coeffs_; }
    const std::string& basis() const { return basis_; }

    bool operator==(const BilateralTensor&) const = default;

private:
    int dim_;
    std::vector<IndexLabel> subs_, supers_;
    Array coeffs_;
    std::string basis_;
};

// The coefficient-preserving bijection with tensor maps: the basis element
// e^I x e_J corresponds to the basis map sending e_I to e_J.
TensorMap lambda_B(const BilateralTensor& b);
BilateralTensor lambda_B_inv(const TensorMap& t);

// Product with matched (subscript of s, superscript of t) pairs: each match
// evaluates s's dual factor against t's vector factor; unmatched factors
// concatenate, s's before t's within each kind.
BilateralTensor bilateral_mul(const BilateralTensor& s, const BilateralTensor& t,
                              const MatchSpec& m);

BilateralTensor bilateral_contract(const BilateralTensor& t,
                                   const std::vector<std::pair<IndexLabel, IndexLabel>>& pairs);

BilateralTensor bilateral_permute(const BilateralTensor& t, const std::vector<int>& subPerm,
                                  const std::vector<int>& superPerm);

BilateralTensor bi_add(const BilateralTensor& a, const BilateralTensor& b);
BilateralTensor bi_scale(const Scalar& k, const BilateralTensor& t);

} // namespace tenskit

#endif
