#ifndef TENSKIT_ARRAY_HPP
#define TENSKIT_ARRAY_HPP

#include "tenskit/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tenskit {

// Valence (n over m): n superscripts, m subscripts.
struct Valence {
    int subs = 0;
    int supers = 0;

    int total() const { return subs + supers; }
    bool operator==(const Valence&) const = default;
};

// A multi-index: tuple of 1-based index values, each in 1..N.
using Multi = std::vector<int>;

// Dense array of scalars indexed by m subscripts and n superscripts, each
// running over 1..N. Subscripts index rows, superscripts columns. Flat
// storage is the lexicographic order of the full tuple (subscripts first,
// then superscripts), so for a matrix-shaped array the layout is row-major.
class Array {
public:
    Array(int dim, Valence v); // zero-filled

    int dim() const { return dim_; }
    const Valence& valence() const { return val_; }
    std::size_t size() const { return entries_.size(); }

    const Scalar& flat(std::size_t i) const { return entries_[i]; }
    Scalar& flat(std::size_t i) { return entries_[i]; }

    std::size_t offset(const Multi& subs, const Multi& supers) const;
    const Scalar& at(const Multi& subs, const Multi& supers) const;
    void set(const Multi& subs, const Multi& supers, const Scalar& v);

    bool operator==(const Array&) const = default;

private:
    int dim_ = 1;
    Valence val_;
    std::vector<Scalar> entries_;
};

// Odometer over 1-based tuples: advances ix in lexicographic order (last
// component fastest) and returns false after wrapping from the last tuple.
// A zero-length tuple enumerates exactly once.
bool next_multi(Multi& ix, int dim);

// Rebuild a flat matrix (N^m rows of N^n columns, both lexicographically
// ordered) into an array, i.e. attach an indexation to a plain matrix.
Array array_from_rows(const std::vector<std::vector<Scalar>>& rows, Valence v, int dim);

Array array_add(const Array& a, const Array& b);
Array array_scale(const Scalar& k, const Array& a);

// Generalized product: each match pairs a superscript of `a` (by 1-based
// position among a's superscripts) with a subscript of `b`; the paired
// indices are summed over. Result indexation: a's subscripts, then b's
// unmatched subscripts; a's unmatched superscripts, then b's superscripts.
// No matches = entrywise (outer) product.
Array array_mul(const Array& a, const Array& b,
                const std::vector<std::pair<int, int>>& matches);

// Flip the given index positions (1-based over the full tuple: 1..m are
// subscripts, m+1..m+n superscripts). Lowered superscripts are placed after
// the remaining subscripts and raised subscripts before the remaining
// superscripts, each group in flip order. Flipping everything is the usual
// transpose for matrix-shaped arrays.
Array array_transpose(const Array& a, const std::vector<int>& flips);

// Exact Gauss-Jordan inverse of a valence-(n over n) array, viewed as an
// N^n x N^n matrix. Throws on singular input.
Array array_inverse(const Array& a);

// Generalized identity: valence (n over n), entry 1 iff the subscript tuple
// equals the superscript tuple.
Array delta(int dim, int pairs);

// Inner product: match all of a's superscripts with all of b's subscripts in
// order (generalizes matrix multiplication). Outer product: no matches
// (generalizes the Kronecker product).
Array array_inner(const Array& a, const Array& b);
Array array_outer(const Array& a, const Array& b);

// Coordinate tensor product of vectors (valence (1 over 0) each): the
// valence-(m over 0) array with entry at (j_1..j_m) equal to the product of
// the components. Zero vectors give the singleton [1].
Array kron(const std::vector<Array>& vectors, int dim);

} // namespace tenskit

#endif
