#include "hwgraph/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hwg {
namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json entries_json(std::span<const Complex> values) {
  Json out = Json::array();
  for (const auto& z : values) out.push_back(complex_json(z));
  return out;
}

Vector entries_from_json(const Json& arr, std::size_t expected) {
  if (!arr.is_array() || arr.size() != expected) throw std::invalid_argument("entries array has the wrong length");
  Vector out;
  out.reserve(expected);
  for (const auto& z : arr) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      throw std::invalid_argument("complex entry must be [re, im]");
    out.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return out;
}

void write_double(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float:
      write_double(out, j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars (complex pairs) stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(out, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(const Matrix& m) {
  Json out;
  out["dim"] = m.dim();
  out["entries"] = entries_json(m.entries());
  return out;
}

Json to_json(const Vector& v) {
  Json out;
  out["rows"] = v.size();
  out["cols"] = 1;
  out["entries"] = entries_json(v);
  return out;
}

Json to_json(const CheckResult& c) {
  Json out;
  out["id"] = c.id;
  out["pass"] = c.pass;
  out["max_residual"] = c.max_residual;
  if (!c.details.empty()) out["details"] = c.details;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["n"] = r.n;
  out["tol"] = r.tol;
  out["checks"] = Json::array();
  for (const auto& c : r.checks) out["checks"].push_back(to_json(c));
  out["graph"] = {
      {"dim_orbit", r.graph.dim_orbit},
      {"dim_z_span", r.graph.dim_z_span},
      {"dim_h_span", r.graph.dim_h_span},
      {"orbit_equals_z", r.graph.orbit_equals_z},
      {"orbit_equals_h", r.graph.orbit_equals_h},
  };
  out["discrepancies"] = Json::array();
  for (const auto& d : r.discrepancies) out["discrepancies"].push_back({{"claim", d.claim}, {"observed", d.observed}});
  out["timing_ms"] = r.timing_ms;
  return out;
}

Json to_json(const AnticliqueReport& r) {
  Json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["s"] = r.s;
  out["is_anticlique"] = r.is_anticlique;
  out["rank"] = r.rank;
  out["max_residual"] = r.max_residual;
  out["lambda"] = Json::array();
  for (const auto& l : r.lambda) {
    out["lambda"].push_back(
        {{"p", l.label.p}, {"q", l.label.q}, {"lambda", complex_json(l.lambda)}, {"residual", l.residual}});
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) throw std::invalid_argument("not a matrix object");
  const auto dim = j.at("dim").get<std::size_t>();
  return Matrix(dim, entries_from_json(j.at("entries"), dim * dim));
}

Vector vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("entries")) throw std::invalid_argument("not a vector object");
  if (j.value("cols", std::size_t{1}) != 1) throw std::invalid_argument("vector must have one column");
  return entries_from_json(j.at("entries"), j.at("rows").get<std::size_t>());
}

std::string dump(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

}  // namespace hwg
