#ifndef TENSKIT_BASIS_HPP
#define TENSKIT_BASIS_HPP

#include "tenskit/tensormap.hpp"

#include <string>
#include <vector>

namespace tenskit {

// Invertible change of basis: the array a_j^i expresses each new basis
// vector in the old basis (new_j = sum_i a_j^i old_i). The inverse array is
// cached eagerly. Basis identifiers are optional; when absent, `from`
// defaults to the basis of whatever tensor is being transformed and `to` to
// that identifier with a prime appended.
class BasisChange {
public:
    explicit BasisChange(Array a, std::string from = "", std::string to = "");

    int dim() const { return a_.dim(); }
    const Array& a() const { return a_; }
    const Array& ainv() const { return ainv_; }
    const std::string& from() const { return from_; }
    const std::string& to() const { return to_; }

private:
    Array a_;
    Array ainv_;
    std::string from_, to_;
};

// Rewrite t's coefficients relative to the new basis: one factor of [a] per
// subscript and one factor of [a]^-1 per superscript. Labels and valence
// are unchanged; the result is tagged with the new basis identifier.
TensorMap transform(const TensorMap& t, const BasisChange& c);

// Specialization of transform to matrix-shaped maps, computed as the array
// product [a][t][a]^-1 (same value, different route; useful as an oracle).
TensorMap transform_operator(const TensorMap& t, const BasisChange& c);

// True iff a scalar-like map keeps its single coefficient under every given
// change of basis. Errors when t is not scalar-like.
bool scalar_invariance_check(const TensorMap& t, const std::vector<BasisChange>& changes);

// The change performing `first` and then `second`; its array is the product
// [a_second][a_first].
BasisChange compose_changes(const BasisChange& second, const BasisChange& first);

} // namespace tenskit

#endif
