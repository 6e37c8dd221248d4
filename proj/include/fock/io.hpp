#pragma once

#include "fock/criterion.hpp"
#include "fock/errors.hpp"
#include "fock/operators.hpp"
#include "fock/symbols.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace fock {

/// Malformed input file (CSV sample grids).
class InputFormatError : public Error {
public:
  using Error::Error;
};

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

/// {label, s, N, exact_band, exact_window, abs_error, entries: [[row, col, re, im], ...]}
/// with only nonzero entries listed.
nlohmann::json to_json(const TruncatedOperator &op);

/// Full report: ranges, every cell with error bars, tolerances, verdict.
nlohmann::json to_json(const CriterionReport &report);

nlohmann::json to_json(const SymbolSpec &spec, const std::vector<double> &radii);

/// Header "row,col,re,im" then all N^2 entries, row-major.
void write_matrix_csv(std::ostream &os, const TruncatedOperator &op);

/// Header "s,j,k,abs_phi,abs_psi,abs_product,matrix_discrepancy"; one row per
/// cell across all reports. Missing discrepancies are left empty.
void write_criterion_csv(std::ostream &os, const std::vector<CriterionReport> &reports);

/// Header "r,theta,re,im"; one row per sample.
void write_polar_csv(std::ostream &os, const PolarSamples &samples);

/// Reads "r,theta,re,im" rows (header optional) forming a full tensor grid:
/// every radius carries the same uniform angle set theta_k = 2 pi k / M.
/// Throws InputFormatError with the offending line number.
PolarSamples read_polar_csv(std::istream &is);

/// Header "j,r,re,im": each recovered mode tabulated on the given radii.
void write_modes_csv(std::ostream &os, const SymbolSpec &spec,
                     const std::vector<double> &radii);

/// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::string &path, const std::string &text);

} // namespace fock
