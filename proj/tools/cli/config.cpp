#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fock::cli {

namespace {

std::string where(const YAML::Node &node) {
  const YAML::Mark m = node.Mark();
  if (m.line < 0)
    return "";
  return " (line " + std::to_string(m.line + 1) + ")";
}

[[noreturn]] void fail(const std::string &field, const YAML::Node &node, const std::string &what) {
  throw ConfigError("config field '" + field + "'" + where(node) + ": " + what);
}

template <class T> T scalar(const YAML::Node &node, const std::string &field, const char *type) {
  if (!node.IsScalar())
    fail(field, node, std::string("expected ") + type);
  try {
    return node.as<T>();
  } catch (const YAML::Exception &) {
    fail(field, node, std::string("expected ") + type + ", got '" + node.Scalar() + "'");
  }
}

double real_value(const YAML::Node &node, const std::string &field) {
  return scalar<double>(node, field, "a number");
}

int int_value(const YAML::Node &node, const std::string &field) {
  return scalar<int>(node, field, "an integer");
}

// Real scalar or [re, im] pair.
cplx complex_value(const YAML::Node &node, const std::string &field) {
  if (node.IsSequence()) {
    if (node.size() != 2)
      fail(field, node, "complex values are written [re, im]");
    return {real_value(node[0], field + "[0]"), real_value(node[1], field + "[1]")};
  }
  return real_value(node, field);
}

RadialProfile parse_profile(const YAML::Node &node, const std::string &field) {
  const YAML::Node kind_node = node["kind"];
  if (!kind_node)
    fail(field + ".kind", node, "missing required field");
  const std::string kind = scalar<std::string>(kind_node, field + ".kind", "a string");
  auto coeff = [&]() {
    return node["coeff"] ? complex_value(node["coeff"], field + ".coeff") : cplx(1.0);
  };
  auto power = [&]() {
    const double p = node["p"] ? real_value(node["p"], field + ".p") : 0.0;
    if (!(p >= 0.0))
      fail(field + ".p", node["p"], "power must be >= 0");
    return p;
  };
  if (kind == "zero")
    return RadialProfile::zero();
  if (kind == "monomial") {
    if (!node["p"])
      fail(field + ".p", node, "missing required field");
    return RadialProfile::monomial(power(), coeff());
  }
  if (kind == "polynomial") {
    const YAML::Node cs = node["coefficients"];
    if (!cs || !cs.IsSequence() || cs.size() == 0)
      fail(field + ".coefficients", cs ? cs : node, "expected a nonempty list");
    std::vector<cplx> c;
    for (std::size_t i = 0; i < cs.size(); ++i)
      c.push_back(complex_value(cs[i], field + ".coefficients[" + std::to_string(i) + "]"));
    return RadialProfile::polynomial(std::move(c));
  }
  if (kind == "exponential" || kind == "gaussian") {
    if (!node["a"])
      fail(field + ".a", node, "missing required field");
    const double a = real_value(node["a"], field + ".a");
    if (!(a > 0.0))
      fail(field + ".a", node["a"], "decay rate must be positive");
    const double p = power();
    const cplx c = coeff();
    if (c == 0.0)
      return RadialProfile::zero();
    const bool gauss = kind == "gaussian";
    std::ostringstream d;
    d << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)*r^" << p
      << (gauss ? "*exp(-" : "*exp(-") << a << (gauss ? "*r^2)" : "*r)");
    // r^p e^{-a r} <= (1 + r)^p, likewise for the Gaussian.
    return RadialProfile::callable(
        [c, p, a, gauss](double r) {
          return c * std::pow(r, p) * std::exp(-a * (gauss ? r * r : r));
        },
        p, std::abs(c), d.str());
  }
  fail(field + ".kind", kind_node,
       "unknown profile kind '" + kind + "' (zero, monomial, polynomial, exponential, gaussian)");
}

SymbolSpec parse_symbol(const YAML::Node &node, const std::string &field) {
  if (!node.IsMap())
    fail(field, node, "expected a mapping with 'name' and 'modes'");
  const std::string name =
      node["name"] ? scalar<std::string>(node["name"], field + ".name", "a string") : field;
  const YAML::Node modes = node["modes"];
  if (!modes || !modes.IsSequence())
    fail(field + ".modes", modes ? modes : node, "expected a list of modes");
  std::map<int, RadialProfile> out;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const std::string f = field + ".modes[" + std::to_string(i) + "]";
    const YAML::Node m = modes[i];
    if (!m.IsMap())
      fail(f, m, "expected a mapping");
    const int j = m["j"] ? int_value(m["j"], f + ".j") : 0;
    if (out.count(j))
      fail(f + ".j", m["j"], "mode " + std::to_string(j) + " given twice");
    try {
      out.emplace(j, parse_profile(m, f));
    } catch (const ConfigError &) {
      throw;
    } catch (const Error &e) {
      fail(f, m, e.what());
    }
  }
  return SymbolSpec(std::move(out), name);
}

void check_keys(const YAML::Node &node, std::initializer_list<const char *> allowed,
                const std::string &prefix) {
  for (const auto &kv : node) {
    const std::string key = kv.first.as<std::string>();
    bool ok = false;
    for (const char *a : allowed)
      ok = ok || key == a;
    if (!ok)
      fail(prefix + key, kv.first, "unknown field");
  }
}

} // namespace

void apply_format(OutputSpec &out, const std::string &format) {
  if (format == "json") {
    out.json = true;
    out.csv = false;
  } else if (format == "csv") {
    out.json = false;
    out.csv = true;
  } else if (format == "both") {
    out.json = out.csv = true;
  } else {
    throw ConfigError("format must be json, csv or both, got '" + format + "'");
  }
}

ExperimentConfig parse_config(const std::string &text, const std::string &source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception &e) {
    throw ConfigError(source + ": YAML error at line " + std::to_string(e.mark.line + 1) + ": " +
                      e.msg);
  }
  if (!root.IsMap())
    throw ConfigError(source + ": top level must be a mapping");
  check_keys(root,
             {"s_values", "N", "k_max", "j_max", "u", "v", "tolerances", "output",
              "assert_commutation", "samples"},
             "");

  ExperimentConfig cfg;
  cfg.source = source;
  if (const YAML::Node s = root["s_values"]) {
    if (!s.IsSequence() || s.size() == 0)
      fail("s_values", s, "expected a nonempty list");
    cfg.s_values.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double v = real_value(s[i], "s_values[" + std::to_string(i) + "]");
      if (!(v >= 0.0))
        fail("s_values[" + std::to_string(i) + "]", s[i], "order s must be >= 0");
      cfg.s_values.push_back(v);
    }
  }
  auto positive_int = [&](const char *key, int min) -> std::optional<int> {
    const YAML::Node n = root[key];
    if (!n)
      return std::nullopt;
    const int v = int_value(n, key);
    if (v < min)
      fail(key, n, "must be >= " + std::to_string(min));
    return v;
  };
  cfg.N = positive_int("N", 1);
  cfg.k_max = positive_int("k_max", 0);
  cfg.j_max = positive_int("j_max", 1);
  if (root["u"])
    cfg.u = parse_symbol(root["u"], "u");
  if (root["v"])
    cfg.v = parse_symbol(root["v"], "v");
  if (const YAML::Node t = root["tolerances"]) {
    if (!t.IsMap())
      fail("tolerances", t, "expected a mapping");
    check_keys(t, {"quad_abs", "quad_rel", "verdict_multiplier"}, "tolerances.");
    auto tol = [&](const char *key, double &slot) {
      if (const YAML::Node n = t[key]) {
        slot = real_value(n, std::string("tolerances.") + key);
        if (!(slot > 0.0))
          fail(std::string("tolerances.") + key, n, "must be positive");
      }
    };
    tol("quad_abs", cfg.tolerances.quad_abs);
    tol("quad_rel", cfg.tolerances.quad_rel);
    tol("verdict_multiplier", cfg.tolerances.verdict_multiplier);
  }
  if (const YAML::Node o = root["output"]) {
    if (!o.IsMap())
      fail("output", o, "expected a mapping");
    check_keys(o, {"directory", "formats"}, "output.");
    if (o["directory"])
      cfg.output.directory = scalar<std::string>(o["directory"], "output.directory", "a path");
    if (const YAML::Node f = o["formats"]) {
      if (!f.IsSequence() || f.size() == 0)
        fail("output.formats", f, "expected a nonempty list drawn from {json, csv}");
      cfg.output.json = cfg.output.csv = false;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string v = scalar<std::string>(f[i], "output.formats", "a string");
        if (v == "json")
          cfg.output.json = true;
        else if (v == "csv")
          cfg.output.csv = true;
        else
          fail("output.formats", f[i], "unknown format '" + v + "'");
      }
    }
  }
  if (const YAML::Node a = root["assert_commutation"])
    cfg.assert_commutation = scalar<bool>(a, "assert_commutation", "true or false");
  if (const YAML::Node p = root["samples"]) {
    std::filesystem::path path = scalar<std::string>(p, "samples", "a path");
    if (path.is_relative() && source != "<string>")
      path = std::filesystem::path(source).parent_path() / path;
    cfg.samples = path.string();
  }

  if (cfg.N) {
    const int k = cfg.k_max.value_or(0);
    int j = cfg.j_max.value_or(0);
    if (cfg.v)
      j = std::max(j, cfg.v->max_abs_mode());
    if (cfg.u)
      j = std::max(j, cfg.u->max_abs_mode());
    if (*cfg.N < k + j + 2)
      fail("N", root["N"],
           "N = " + std::to_string(*cfg.N) + " leaves an empty exactness window; need N >= k_max + j_max + 2 = " +
               std::to_string(k + j + 2));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

QuadratureSpec ExperimentConfig::quadrature() const {
  QuadratureSpec q;
  q.abs_tol = tolerances.quad_abs;
  q.rel_tol = tolerances.quad_rel;
  return q;
}

int ExperimentConfig::require_N() const {
  if (!N)
    throw ConfigError("config is missing required field 'N'");
  return *N;
}

int ExperimentConfig::require_k_max() const {
  if (!k_max)
    throw ConfigError("config is missing required field 'k_max'");
  return *k_max;
}

const SymbolSpec &ExperimentConfig::require_u() const {
  if (!u)
    throw ConfigError("config is missing required field 'u'");
  return *u;
}

const SymbolSpec &ExperimentConfig::require_v() const {
  if (!v)
    throw ConfigError("config is missing required field 'v'");
  return *v;
}

const std::string &ExperimentConfig::require_samples() const {
  if (!samples)
    throw ConfigError("config is missing required field 'samples' (or pass --samples)");
  return *samples;
}

} // namespace fock::cli
