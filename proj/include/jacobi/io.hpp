#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi/operator.hpp"
#include "jacobi/polynomial.hpp"
#include "jacobi/regions.hpp"
#include "jacobi/spectrum.hpp"

namespace jacobi::io {

/// Operator spec document that fails validation. The message names the
/// offending key.
class SchemaError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses
///   {"name": "...", "a": [{"n": 1, "re": 2.0, "im": 0.0}, ...], "b": [...], "c": [...]}
/// where every key is optional.
JacobiOperator parse_operator_spec(std::string_view text);
JacobiOperator load_operator_spec(const std::filesystem::path& path);

/// Normalized document (background entries elided, indices ascending).
std::string serialize_operator_spec(const JacobiOperator& op);

/// 17 significant digits, enough to round-trip a double.
std::string format_number(double value);

/// "RE0:RE1:IM0:IM1:RES", same resolution on both axes.
GridSpec parse_grid_spec(std::string_view text);

/// Header `re,im,label`.
void write_region_grid_csv(std::ostream& out, const std::vector<GridPoint>& points);

/// |v_0(z)| on a z-grid; header `re,im,abs_v0`, row-major like GridSpec.
void write_jost_grid_csv(std::ostream& out, const ComplexPolynomial& jost_function,
                         const GridSpec& grid);

/// Schematic of the lambda-plane on [-4, 4] x [-2, 2]: the essential band,
/// the boundary of the spectrum-free region, the two rectangles when they
/// apply, and the given eigenvalues.
std::string region_svg(const RegionReport& report, const std::vector<Eigenvalue>& eigenvalues);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace jacobi::io
