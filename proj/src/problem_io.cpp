#include "toricmin/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace toricmin {

using nlohmann::json;

namespace {

const json &field(const json &j, const std::string &key, const std::string &where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

const json &array_at(const json &j, const std::string &where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  return j;
}

std::int64_t integer(const json &j, const std::string &where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<std::int64_t>();
}

IntVector int_vector(const json &j, const std::string &where) {
  IntVector out;
  const json &a = array_at(j, where);
  for (size_t i = 0; i < a.size(); ++i) out.push_back(integer(a[i], where + "/" + std::to_string(i)));
  return out;
}

Point scalar_vector(const json &j, const std::string &where, double tol) {
  Point out;
  const json &a = array_at(j, where);
  for (size_t i = 0; i < a.size(); ++i) out.push_back(scalar_from_json(a[i], where + "/" + std::to_string(i), tol));
  return out;
}

Matrix scalar_matrix(const json &j, const std::string &where, double tol) {
  Matrix out;
  const json &a = array_at(j, where);
  for (size_t i = 0; i < a.size(); ++i) out.push_back(scalar_vector(a[i], where + "/" + std::to_string(i), tol));
  return out;
}

Complex complex_from_json(const json &j, const std::string &where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw ParseError(where, "expected a number or [re, im]");
}

json complex_to_json(const Complex &c) {
  if (c.imag() == 0.0) return c.real();
  return json::array({c.real(), c.imag()});
}

json matrix_to_json(const Matrix &m) {
  json out = json::array();
  for (const auto &row : m) {
    json r = json::array();
    for (const auto &x : row) r.push_back(scalar_to_json(x));
    out.push_back(r);
  }
  return out;
}

}  // namespace

Scalar scalar_from_json(const json &j, const std::string &where, double tol) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_float()) return Scalar::approx(j.get<double>(), tol);
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const std::exception &e) {
      throw ParseError(where, e.what());
    }
  }
  throw ParseError(where, "expected a number or a \"p/q\" string");
}

json scalar_to_json(const Scalar &s) {
  if (!s.is_exact()) return s.value();
  const Rational &q = s.exact();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

ChartPoint point_from_json(const json &j, const std::string &where) {
  ChartPoint p;
  std::int64_t sigma = integer(field(j, "sigma", where), where + "/sigma");
  if (sigma < 0) throw ParseError(where + "/sigma", "cone id must be nonnegative");
  p.sigma = static_cast<std::size_t>(sigma);
  const json &x = array_at(field(j, "x", where), where + "/x");
  for (size_t i = 0; i < x.size(); ++i) p.x.push_back(complex_from_json(x[i], where + "/x/" + std::to_string(i)));
  if (j.contains("z")) {
    const json &z = array_at(j["z"], where + "/z");
    for (size_t i = 0; i < z.size(); ++i) p.z.push_back(complex_from_json(z[i], where + "/z/" + std::to_string(i)));
  }
  return p;
}

json point_to_json(const ChartPoint &p) {
  json x = json::array(), z = json::array();
  for (const auto &c : p.x) x.push_back(complex_to_json(c));
  for (const auto &c : p.z) z.push_back(complex_to_json(c));
  return json{{"sigma", p.sigma}, {"x", x}, {"z", z}};
}

BundleProblem problem_from_json(const json &j, double tol) {
  BundleProblem p;
  if (!j.is_object()) throw ParseError("", "problem must be a JSON object");
  const json &base = field(j, "base", "");
  const json &kind = field(base, "kind", "/base");
  if (!kind.is_string()) throw ParseError("/base/kind", "expected a string");
  std::string k = kind.get<std::string>();
  if (k == "ExE") {
    p.base = TorusBase::exe();
  } else if (k == "hermitian") {
    p.base.kind = TorusBase::Kind::Hermitian;
    std::int64_t d = integer(field(base, "d", "/base"), "/base/d");
    if (d <= 0) throw ParseError("/base/d", "dimension must be positive");
    p.base.d = static_cast<std::size_t>(d);
    const json &forms = array_at(field(base, "forms", "/base"), "/base/forms");
    for (size_t i = 0; i < forms.size(); ++i) {
      std::string w = "/base/forms/" + std::to_string(i);
      HermitianMatrix h;
      if (forms[i].is_object()) {
        h.re = scalar_matrix(field(forms[i], "re", w), w + "/re", tol);
        h.im = forms[i].contains("im") ? scalar_matrix(forms[i]["im"], w + "/im", tol)
                                       : HermitianMatrix::zero(h.re.size()).im;
      } else {
        h = HermitianMatrix::real(scalar_matrix(forms[i], w, tol));
      }
      if (h.re.size() != p.base.d || h.im.size() != p.base.d) throw ParseError(w, "form has the wrong size");
      for (size_t r = 0; r < p.base.d; ++r)
        if (h.re[r].size() != p.base.d || h.im[r].size() != p.base.d) throw ParseError(w, "form has the wrong size");
      p.base.basis_forms.push_back(h);
    }
  } else {
    throw ParseError("/base/kind", "unknown base kind \"" + k + "\"");
  }

  const json &fan = field(j, "fan", "");
  const json &rays = array_at(field(fan, "rays", "/fan"), "/fan/rays");
  for (size_t i = 0; i < rays.size(); ++i) p.fan.rays.push_back(int_vector(rays[i], "/fan/rays/" + std::to_string(i)));
  const json &cones = array_at(field(fan, "max_cones", "/fan"), "/fan/max_cones");
  for (size_t i = 0; i < cones.size(); ++i) {
    std::vector<std::size_t> c;
    for (auto v : int_vector(cones[i], "/fan/max_cones/" + std::to_string(i))) {
      if (v < 0) throw ParseError("/fan/max_cones/" + std::to_string(i), "ray index must be nonnegative");
      c.push_back(static_cast<std::size_t>(v));
    }
    p.fan.max_cones.push_back(c);
  }
  if (j.contains("fiber_rank")) {
    std::int64_t n = integer(j["fiber_rank"], "/fiber_rank");
    if (n < 0 || static_cast<std::size_t>(n) != p.fan.dim()) throw ParseError("/fiber_rank", "does not match the rays");
  }
  const json &lh = array_at(field(j, "L_hom", ""), "/L_hom");
  for (size_t i = 0; i < lh.size(); ++i) p.L_hom.push_back(scalar_vector(lh[i], "/L_hom/" + std::to_string(i), tol));
  p.L0 = scalar_vector(field(j, "L0", ""), "/L0", tol);
  p.h = scalar_vector(field(j, "h", ""), "/h", tol);
  if (j.contains("assume_projective")) {
    if (!j["assume_projective"].is_boolean()) throw ParseError("/assume_projective", "expected a boolean");
    p.assume_projective = j["assume_projective"].get<bool>();
  }
  if (j.contains("points")) {
    const json &pts = j["points"];
    if (!pts.is_object()) throw ParseError("/points", "expected an object");
    for (auto it = pts.begin(); it != pts.end(); ++it) p.points[it.key()] = point_from_json(it.value(), "/points/" + it.key());
  }
  return p;
}

BundleProblem parse_problem(const std::string &text, double tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "invalid JSON");
  }
  return problem_from_json(j, tol);
}

json problem_to_json(const BundleProblem &p) {
  json j;
  if (p.base.kind == TorusBase::Kind::ExE) {
    j["base"] = json{{"kind", "ExE"}};
  } else {
    json forms = json::array();
    for (const auto &h : p.base.basis_forms) forms.push_back(json{{"re", matrix_to_json(h.re)}, {"im", matrix_to_json(h.im)}});
    j["base"] = json{{"kind", "hermitian"}, {"d", p.base.d}, {"forms", forms}};
  }
  j["fiber_rank"] = p.fan.dim();
  j["fan"] = json{{"rays", p.fan.rays}, {"max_cones", p.fan.max_cones}};
  j["L_hom"] = matrix_to_json(p.L_hom);
  json l0 = json::array();
  for (const auto &x : p.L0) l0.push_back(scalar_to_json(x));
  j["L0"] = l0;
  json h = json::array();
  for (const auto &x : p.h) h.push_back(scalar_to_json(x));
  j["h"] = h;
  if (p.assume_projective) j["assume_projective"] = true;
  if (!p.points.empty()) {
    json pts = json::object();
    for (const auto &[name, pt] : p.points) pts[name] = point_to_json(pt);
    j["points"] = pts;
  }
  return j;
}

std::string emit_problem(const BundleProblem &p) { return problem_to_json(p).dump(2) + "\n"; }

std::string format_scalar(const Scalar &s) {
  if (s.is_exact()) return s.str();
  double v = s.value();
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string out = buf;
  if (out == "-0.000000000000") out = "0.000000000000";
  return out;
}

std::string format_vector(const Point &p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += format_scalar(p[i]);
  }
  return out + ")";
}

}  // namespace toricmin
