#ifndef TENSKIT_IO_HPP
#define TENSKIT_IO_HPP

#include "tenskit/basis.hpp"
#include "tenskit/bilateral.hpp"
#include "tenskit/exprlang.hpp"
#include "tenskit/metric.hpp"

#include <json.hpp>

#include <string>

namespace tenskit {

// JSON shapes (all entries are canonical "p" or "p/q" strings, flat in the
// lexicographic subscripts-major order of the Array container):
//   array:     {"dim", "subs", "supers", "entries"}
//   tensor:    {"name", "dim", "sub", "super", "basis", "entries"}
//   bilateral: tensor shape plus "kind": "bilateral"
//   metric / change of basis: array shape plus "role": "metric" or
//   "basis_change"; a change may carry "from"/"to" basis identifiers.

nlohmann::ordered_json array_to_json(const Array& a);
Array array_from_json(const nlohmann::json& j);

nlohmann::ordered_json tensor_to_json(const TensorMap& t, const std::string& name);
TensorMap tensor_from_json(const nlohmann::json& j, std::string* nameOut = nullptr);

nlohmann::ordered_json bilateral_to_json(const BilateralTensor& b, const std::string& name);
BilateralTensor bilateral_from_json(const nlohmann::json& j, std::string* nameOut = nullptr);

// File layer. Unreadable or unwritable paths raise I/O errors; malformed
// JSON, a wrong schema, or unparseable entries raise usage errors;
// value-level violations (label clashes, singular metrics) surface as
// domain errors.
nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::ordered_json& j);

Array load_array_file(const std::string& path);
Metric load_metric_file(const std::string& path);
BasisChange load_change_file(const std::string& path);
TensorMap load_tensor_file(const std::string& path, std::string* nameOut = nullptr);

// An environment is a directory of *.json tensor files (loaded in filename
// order) or a single file, either one tensor object or {"tensors": [...]}.
// Names come from each object's "name" field. A tensor from a standalone
// file shadows a same-named tensor from a collection list, with a warning
// on the error stream; within the same rank, the later file wins.
Env load_env(const std::string& path);

} // namespace tenskit

#endif
