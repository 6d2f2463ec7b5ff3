#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "toricmin/toric_bundle.hpp"

namespace toricmin {

// Malformed input. `where` is a JSON pointer to the offending field, or
// "line L, column C" for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &where, const std::string &what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string &where() const { return where_; }

 private:
  std::string where_;
};

// Scalars are written as integers, "p/q" strings (exact) or JSON floats
// (approximate, with tolerance `tol`).
Scalar scalar_from_json(const nlohmann::json &j, const std::string &where, double tol = kDefaultTolerance);
nlohmann::json scalar_to_json(const Scalar &s);

ChartPoint point_from_json(const nlohmann::json &j, const std::string &where);
nlohmann::json point_to_json(const ChartPoint &p);

BundleProblem problem_from_json(const nlohmann::json &j, double tol = kDefaultTolerance);
BundleProblem parse_problem(const std::string &text, double tol = kDefaultTolerance);

// Canonical form: parse_problem(emit_problem(p)) == p, bit for bit on exact
// scalars.
nlohmann::json problem_to_json(const BundleProblem &p);
std::string emit_problem(const BundleProblem &p);

// Exact values as "p/q", approximate ones with 12 digits after the point.
std::string format_scalar(const Scalar &s);
std::string format_vector(const Point &p);

}  // namespace toricmin
