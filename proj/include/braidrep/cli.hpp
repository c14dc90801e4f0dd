#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidrep/matrix.hpp"

namespace braidrep {

/// Runs one `braidrep` invocation.  `args` excludes the program name.
/// Returns 0 on success (all relators hold for `verify`), 1 when `verify`
/// finds a failing relator, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const AlgebraMatrix& m);
PolyMatrix poly_matrix_from_json(const nlohmann::json& j);
AlgebraMatrix algebra_matrix_from_json(const nlohmann::json& j);

}  // namespace braidrep
