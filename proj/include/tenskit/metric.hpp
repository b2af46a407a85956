#ifndef TENSKIT_METRIC_HPP
#define TENSKIT_METRIC_HPP

#include "tenskit/tensormap.hpp"

namespace tenskit {

// Symmetric nondegenerate bilinear form given by its coefficient array
// g_ij (two subscripts). The inverse array g^ij is computed eagerly at
// construction, so raising can never fail later.
class Metric {
public:
    explicit Metric(Array g);

    int dim() const { return g_.dim(); }
    const Array& g() const { return g_; }
    const Array& ginv() const { return ginv_; }

private:
    Array g_;
    Array ginv_;
};

// Convert the named superscript of t into a subscript by contracting with
// g_ij. The new subscript carries the old name with one more prime and is
// placed before any existing subscripts.
TensorMap lower_index(const TensorMap& t, const IndexLabel& label, const Metric& g);

// Converse of lower_index: contract the named subscript with g^ij. The new
// superscript (one more prime) is placed after any existing superscripts.
TensorMap raise_index(const TensorMap& t, const IndexLabel& label, const Metric& g);

// Move the named index to the other side, toggling its dual-space star. The
// coefficients are untouched: the shifted index merely runs over the dual
// basis instead. Shifted superscripts land after existing subscripts;
// shifted subscripts land before existing superscripts. Shifting every
// index of a matrix-shaped map transposes its coefficient array.
TensorMap dual_shift(const TensorMap& t, const IndexLabel& label);

} // namespace tenskit

#endif
