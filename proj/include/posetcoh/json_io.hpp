#pragma once

#include <json.hpp>

#include "posetcoh/arrangement.hpp"
#include "posetcoh/functor.hpp"
#include "posetcoh/mackey.hpp"
#include "posetcoh/shellability.hpp"

namespace posetcoh {

using Json = nlohmann::ordered_json;

// Poset: {"elements": [...], "covers": [["q","p"],...]} with optional
// "bottom"/"top". Absent bounds are inferred when unique.
struct PosetFile {
  Poset poset;
  std::optional<std::string> bottom;
  std::optional<std::string> top;

  BoundedPoset bounded() const;
};

PosetFile parse_poset(const Json& j);
Json poset_to_json(const Poset& p, const std::optional<std::string>& bottom = {},
                   const std::optional<std::string>& top = {});

// Functor: {"poset": {...}|"path", "variance": "contra"|"co", "field": "Q",
// "dims": {...}, "maps": {"q<p": [[...]]}}. `base_dir` resolves a poset
// given as a file path.
struct FunctorFile {
  FunctorOnPoset functor;
  PosetFile poset_file;
};

FunctorFile parse_functor(const Json& j, const std::string& base_dir = ".");
Json functor_to_json(const FunctorOnPoset& f);

// Mackey data: the functor format plus "transfers": {"j<i": [[...]]}.
MackeyData parse_mackey(const Json& j, const std::string& base_dir = ".");

// Ordering: {"global": [...]} or {"chains": {"c0<c1<...": [...]}}.
OrderingFamily parse_ordering(const Json& j);
Json ordering_to_json(const OrderingFamily& f);

// Arrangement: {"ambient_dim": n, "hyperplanes": [["1","-1","0"],...]}.
Arrangement parse_arrangement(const Json& j);

Json graded_dims_to_json(const GradedDims& dims);
Json matrix_to_json(const Matrix& m);
Matrix parse_matrix(const Json& j, const Field& field, int rows, int cols,
                    const std::string& what);

Json load_json_file(const std::string& path);

}  // namespace posetcoh
