#include "fock/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace fock {

std::string format_double(double x) {
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json estimate_json(const Estimate &e) {
  return {{"re", e.value.real()}, {"im", e.value.imag()}, {"abs_error", e.abs_error}};
}

} // namespace

nlohmann::json to_json(const TruncatedOperator &op) {
  nlohmann::json entries = nlohmann::json::array();
  for (int n = 0; n < op.size; ++n)
    for (int m = 0; m < op.size; ++m) {
      const cplx z = op.entries(n, m);
      if (z != 0.0)
        entries.push_back({n, m, z.real(), z.imag()});
    }
  return {{"label", op.label},         {"s", op.s.value()},
          {"N", op.size},              {"exact_band", op.exact_band},
          {"exact_window", op.exact_window}, {"abs_error", op.abs_error},
          {"entries", std::move(entries)}};
}

nlohmann::json to_json(const CriterionReport &report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto &[idx, cell] : report.cells) {
    nlohmann::json c = {{"j", cell.j}, {"k", cell.k}};
    if (cell.ok()) {
      c["phi"] = estimate_json(cell.phi);
      c["psi"] = estimate_json(cell.psi);
      c["product"] = estimate_json(cell.product);
      c["q"] = complex_json(q_value(cell.product, cell.k, report.s));
      c["phi_vanishes"] = cell.phi.vanishes(report.verdict_multiplier);
      c["psi_vanishes"] = cell.psi.vanishes(report.verdict_multiplier);
      c["product_vanishes"] = cell.product.vanishes(report.verdict_multiplier);
    } else {
      c["note"] = cell.note;
    }
    c["matrix_residual"] = cell.matrix_residual ? nlohmann::json(*cell.matrix_residual)
                                                : nlohmann::json(nullptr);
    cells.push_back(std::move(c));
  }
  nlohmann::json verdict = {{"kind", Verdict::kind_name(report.verdict.kind)},
                            {"modes", report.verdict.modes},
                            {"reason", report.verdict.reason}};
  return {{"s", report.s.value()},
          {"k_range", {report.k_min, report.k_max}},
          {"j_range", {report.j_min, report.j_max}},
          {"u", report.u_label},
          {"v", report.v_label},
          {"verdict_multiplier", report.verdict_multiplier},
          {"commutation_observed", report.commutation_observed},
          {"commutation_asserted", report.commutation_asserted
                                       ? nlohmann::json(*report.commutation_asserted)
                                       : nlohmann::json(nullptr)},
          {"verdict", std::move(verdict)},
          {"cells", std::move(cells)}};
}

nlohmann::json to_json(const SymbolSpec &spec, const std::vector<double> &radii) {
  nlohmann::json modes = nlohmann::json::array();
  for (const auto &[j, v] : spec.modes()) {
    double peak = 0.0;
    for (double r : radii)
      peak = std::max(peak, std::abs(v(r)));
    modes.push_back({{"j", j}, {"profile", v.description()}, {"max_abs", peak}});
  }
  return {{"name", spec.name()}, {"radial", spec.is_radial()}, {"modes", std::move(modes)}};
}

void write_matrix_csv(std::ostream &os, const TruncatedOperator &op) {
  os << "row,col,re,im\n";
  for (int n = 0; n < op.size; ++n)
    for (int m = 0; m < op.size; ++m) {
      const cplx z = op.entries(n, m);
      os << n << ',' << m << ',' << format_double(z.real()) << ','
         << format_double(z.imag()) << '\n';
    }
}

void write_criterion_csv(std::ostream &os, const std::vector<CriterionReport> &reports) {
  os << "s,j,k,abs_phi,abs_psi,abs_product,matrix_discrepancy\n";
  for (const auto &report : reports)
    for (const auto &[idx, cell] : report.cells) {
      os << format_double(report.s.value()) << ',' << cell.j << ',' << cell.k << ',';
      if (cell.ok())
        os << format_double(std::abs(cell.phi.value)) << ','
           << format_double(std::abs(cell.psi.value)) << ','
           << format_double(std::abs(cell.product.value)) << ',';
      else
        os << ",,,";
      if (cell.matrix_residual)
        os << format_double(*cell.matrix_residual);
      os << '\n';
    }
}

void write_polar_csv(std::ostream &os, const PolarSamples &samples) {
  os << "r,theta,re,im\n";
  for (std::size_t i = 0; i < samples.radii.size(); ++i)
    for (int k = 0; k < samples.angle_count; ++k) {
      const cplx z = samples.at(i, k);
      os << format_double(samples.radii[i]) << ',' << format_double(samples.angle(k))
         << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << '\n';
    }
}

namespace {

double parse_field(const std::string &text, int line) {
  double value = 0.0;
  const char *begin = text.data();
  const char *end = begin + text.size();
  while (begin < end && (*begin == ' ' || *begin == '\t'))
    ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r'))
    --end;
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    std::ostringstream msg;
    msg << "line " << line << ": cannot parse number '" << text << "'";
    throw InputFormatError(msg.str());
  }
  return value;
}

} // namespace

PolarSamples read_polar_csv(std::istream &is) {
  struct Row {
    double theta;
    cplx value;
    int line;
  };
  std::map<double, std::vector<Row>> rings;
  std::string text;
  int line = 0;
  while (std::getline(is, text)) {
    ++line;
    if (text.empty() || text == "\r" || text[0] == '#')
      continue;
    if (line == 1 && text.find_first_of("rR") == 0 && text.find("theta") != std::string::npos)
      continue; // header
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ','))
      fields.push_back(field);
    if (fields.size() != 4) {
      std::ostringstream msg;
      msg << "line " << line << ": expected 4 fields (r,theta,re,im), got " << fields.size();
      throw InputFormatError(msg.str());
    }
    const double r = parse_field(fields[0], line);
    if (!(r > 0.0)) {
      std::ostringstream msg;
      msg << "line " << line << ": radius must be positive";
      throw InputFormatError(msg.str());
    }
    rings[r].push_back({parse_field(fields[1], line),
                        {parse_field(fields[2], line), parse_field(fields[3], line)},
                        line});
  }
  if (rings.empty())
    throw InputFormatError("polar sample file contains no samples");

  PolarSamples out;
  out.angle_count = static_cast<int>(rings.begin()->second.size());
  const int M = out.angle_count;
  const double step = 2.0 * std::numbers::pi / M;
  for (auto &[r, rows] : rings) {
    if (static_cast<int>(rows.size()) != M) {
      std::ostringstream msg;
      msg << "radius " << r << " has " << rows.size() << " samples, expected " << M
          << " (the grid must be a full tensor product)";
      throw InputFormatError(msg.str());
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row &a, const Row &b) { return a.theta < b.theta; });
    out.radii.push_back(r);
    for (int k = 0; k < M; ++k) {
      if (std::abs(rows[k].theta - k * step) > 1e-9 * std::max(1.0, k * step)) {
        std::ostringstream msg;
        msg << "line " << rows[k].line << ": angle " << rows[k].theta
            << " is not on the uniform grid 2*pi*k/" << M;
        throw InputFormatError(msg.str());
      }
      out.values.push_back(rows[k].value);
    }
  }
  return out;
}

void write_modes_csv(std::ostream &os, const SymbolSpec &spec,
                     const std::vector<double> &radii) {
  os << "j,r,re,im\n";
  for (const auto &[j, v] : spec.modes())
    for (double r : radii) {
      const cplx z = v(r);
      os << j << ',' << format_double(r) << ',' << format_double(z.real()) << ','
         << format_double(z.imag()) << '\n';
    }
}

void write_text_file(const std::string &path, const std::string &text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out)
    throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out)
    throw Error("failed writing '" + path + "'");
}

} // namespace fock
