#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "partdist/exactnum.hpp"
#include "partdist/partitions.hpp"

namespace partdist {

/// Vectors print 1-indexed in order, e.g. "(2,0,1,0,0)'".
std::string column_string(const std::vector<int>& values);

/// Rationals are "p/q" strings; vectors and matrices are (nested, row-major)
/// arrays of those.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const BigInt& value);
nlohmann::json to_json(const std::vector<Rational>& values);
nlohmann::json to_json(const RationalMatrix& m);
/// Array of parts, e.g. [3,1,1].
nlohmann::json to_json(const Partition& p);

Partition partition_from_json(const nlohmann::json& j);

/// Rounds to 12 significant digits; non-finite values become null.
nlohmann::json decimal_json(double value);
std::string decimal_string(double value);

/// Right-aligned rows of p/q strings.
std::string pretty_matrix(const RationalMatrix& m, const std::string& indent = "  ");

} // namespace partdist
