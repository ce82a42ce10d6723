#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "linecalc/grass.hpp"

namespace linecalc::cli {

/// A problem file: X, optional parameter values, optional line and curve.
///
///   # comment
///   field: F:7
///   N: 3
///   degrees: 3
///   params: 2, -1/3          (values for c1, c2, ...)
///   form: S^3 + T^3 + Z1^3 + Z2^3
///   line: 1 0 ; 0 1          (a_1 .. a_{N-1} ; b_1 .. b_{N-1})
///   curve: s^2 ; -s^2 ; t^2 ; -t^2
///
/// A JSON object with the same keys (or a report carrying one under
/// "problem") is accepted as well.
struct Problem {
  FieldSpec field;
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  std::vector<std::string> forms;
  std::vector<std::string> params;
  std::optional<std::vector<std::string>> line_a, line_b;
  std::optional<std::vector<std::string>> curve;

  /// Throws Error(ParseError) on grammar problems.
  static Problem parse(const std::string& text);
  static Problem load(const std::string& path);

  /// Parameters substituted when params are given; NotHomogeneous propagates.
  CompleteIntersection variety() const;
  std::optional<LineChartPoint> line() const;
  std::optional<RationalCurve> rational_curve() const;

  nlohmann::json to_json() const;
};

Scalar parse_scalar(const std::string& text, const FieldSpec& f);

}  // namespace linecalc::cli
