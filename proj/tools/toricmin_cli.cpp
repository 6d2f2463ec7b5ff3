// Command line front end. Problems are read as JSON from --problem or stdin;
// `fixture` writes one to stdout, so commands compose with pipes:
//   toricmin fixture nakayama --a 2 | toricmin lct --point 'P(L0)'

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "toricmin/boundary.hpp"
#include "toricmin/envelope.hpp"
#include "toricmin/fixtures.hpp"
#include "toricmin/lattice_points.hpp"
#include "toricmin/mult_ideal.hpp"
#include "toricmin/optimize.hpp"
#include "toricmin/positivity.hpp"
#include "toricmin/problem_io.hpp"
#include "toricmin/svg.hpp"

using namespace toricmin;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream &in) { return std::string(std::istreambuf_iterator<char>(in), {}); }

ChartPoint resolve_point(const ToricBundle &bundle, const std::string &name) {
  if (!name.empty() && name[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(name);
    } catch (const nlohmann::json::parse_error &) {
      throw ParseError("--point", "invalid JSON");
    }
    ChartPoint p = point_from_json(j, "--point");
    if (p.z.empty()) p.z.assign(bundle.base().d, Complex(0, 0));
    bundle.check_point(p);
    return p;
  }
  return bundle.named_point(name);
}

Scalar parse_number(const std::string &text, const std::string &what) {
  try {
    return Scalar::parse(text);
  } catch (const std::exception &) {
    throw ParseError(what, "not a number: " + text);
  }
}

std::vector<Scalar> parse_list(const std::string &text, const std::string &what) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, what));
  return out;
}

// "1", "x1^2*x2 + x2^3"; variables are the fiber coordinates x1..xn.
Polynomial parse_polynomial(const std::string &text, std::size_t n) {
  Polynomial f;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::stringstream terms(s);
  std::string term;
  while (std::getline(terms, term, '+')) {
    Monomial m{IntVector(n, 0)};
    std::stringstream factors(term);
    std::string fac;
    while (std::getline(factors, fac, '*')) {
      if (fac == "1") continue;
      if (fac.size() < 2 || fac[0] != 'x') throw ParseError("--f", "bad factor \"" + fac + "\"");
      auto caret = fac.find('^');
      long idx, e = 1;
      try {
        idx = std::stol(fac.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        if (caret != std::string::npos) e = std::stol(fac.substr(caret + 1));
      } catch (const std::exception &) {
        throw ParseError("--f", "bad factor \"" + fac + "\"");
      }
      if (idx < 1 || static_cast<std::size_t>(idx) > n || e < 0) throw ParseError("--f", "bad factor \"" + fac + "\"");
      m.exponents[static_cast<std::size_t>(idx - 1)] += e;
    }
    f.push_back(m);
  }
  if (f.empty()) throw ParseError("--f", "empty polynomial");
  return f;
}

std::string format_monomial(const Monomial &m) {
  std::string out;
  for (size_t j = 0; j < m.exponents.size(); ++j) {
    if (m.exponents[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(j + 1);
    if (m.exponents[j] > 1) out += "^" + std::to_string(m.exponents[j]);
  }
  return out.empty() ? "1" : out;
}

std::string format_cone(const std::vector<std::size_t> &rays) {
  std::string out = "{";
  for (size_t i = 0; i < rays.size(); ++i) out += (i ? "," : "") + std::string("v") + std::to_string(rays[i]);
  return out + "}";
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// S_t in exponent coordinates of chart sigma, drawn with its lattice points.
std::string sset_svg(const ToricBundle &bundle, std::size_t sigma, const Scalar &t) {
  ConvexRegion base = bundle.to_exponent(bundle.box_nef(), sigma).scaled(t);
  PlanarBoundary b = trace_boundary(base);
  double reach = 0;
  for (const auto &c : b.corners)
    for (const auto &x : c) reach = std::max(reach, x.value());
  for (const auto &pt : sample_boundary(b, base)) reach = std::max({reach, pt.first, pt.second});
  double lim = std::ceil(reach) + 2;
  SvgPlot plot;
  plot.region = orthant_hull_polygon(base, lim, lim);
  plot.xmin = plot.ymin = -0.5;
  plot.xmax = plot.ymax = lim;
  ConvexRegion s = base.with_recession(standard_basis(2));
  long L = static_cast<long>(lim);
  for (const auto &q : lattice_points(s, false, IntBox{{0, 0}, {L, L}})) plot.lattice.emplace_back(q[0], q[1]);
  plot.title = "S_t, chart " + std::to_string(sigma) + ", t = " + format_scalar(t);
  return render_svg(plot);
}

std::string boxnef_svg(const ToricBundle &bundle) {
  const ConvexRegion &nef = bundle.box_nef();
  SvgPlot plot;
  plot.region = region_polygon(nef);
  IntBox box = bounding_box(bundle.box_h());
  plot.xmin = static_cast<double>(box.first[0]) - 0.25;
  plot.ymin = static_cast<double>(box.first[1]) - 0.25;
  plot.xmax = static_cast<double>(box.second[0]) + 0.25;
  plot.ymax = static_cast<double>(box.second[1]) + 0.25;
  for (const auto &q : lattice_points(nef, false)) plot.lattice.emplace_back(q[0], q[1]);
  plot.title = "box_nef";
  return render_svg(plot);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Minimal singular metrics on toric bundles over complex tori"};
  app.require_subcommand(1);
  std::string problem_path;
  double tol = kDefaultTolerance;
  app.add_option("--problem", problem_path, "problem JSON file (default: stdin)");
  app.add_option("--tol", tol, "tolerance for approximate values")->check(CLI::PositiveNumber);

  std::string point, weights, t_text = "1", f_text = "1", max_text, svg_path;
  std::size_t sigma = 0;
  bool gens = false;
  long fa = 2, fu = 1, fv = 2;
  bool literal = false;

  std::function<int(const ToricBundle &)> action;
  std::function<int()> standalone;

  auto *validate_cmd = app.add_subcommand("validate", "check a problem and report every issue");
  auto *pseff = app.add_subcommand("pseff", "is L pseudo-effective (box_nef nonempty)");
  auto *big = app.add_subcommand("big", "is L big");
  auto *boxnef = app.add_subcommand("boxnef", "vertices of box_nef");
  boxnef->add_option("--svg", svg_path, "write a plot");
  auto *sset = app.add_subcommand("sset", "the set S_t of a chart in exponent coordinates");
  sset->add_option("--sigma", sigma, "chart id")->required();
  sset->add_option("--t", t_text, "scale t");
  sset->add_option("--svg", svg_path, "write a plot");
  auto *eval = app.add_subcommand("eval", "psi_sigma at a point");
  auto *lelong = app.add_subcommand("lelong", "Lelong number at a point");
  auto *kiselman = app.add_subcommand("kiselman", "Kiselman number at a point");
  kiselman->add_option("--w", weights, "comma separated weights for the vanishing coordinates")->required();
  auto *nnef = app.add_subcommand("nnef", "non-nef locus strata");
  auto *negpart = app.add_subcommand("negpart", "divisorial negative part");
  auto *zariski = app.add_subcommand("zariski", "rational polyhedrality of box_nef");
  auto *mideal = app.add_subcommand("mideal", "multiplier ideal membership");
  mideal->add_option("--t", t_text, "exponent t")->required();
  mideal->add_option("--f", f_text, "polynomial in x1..xn (default 1)");
  mideal->add_flag("--gens", gens, "print minimal monomial generators");
  auto *jumps = app.add_subcommand("jumps", "jumping numbers up to a bound");
  jumps->add_option("--max", max_text, "bound T")->required();
  auto *lctc = app.add_subcommand("lct", "log canonical threshold at a point");
  for (auto *c : {eval, lelong, kiselman, mideal, jumps, lctc})
    c->add_option("--point", point, "named point or {\"sigma\":k,\"x\":[...],\"z\":[...]}")->required();
  auto *sections = app.add_subcommand("sections", "count sections over the lattice points of box_nef");

  auto *fixture = app.add_subcommand("fixture", "emit a built-in problem");
  fixture->require_subcommand(1);
  auto *fx_nak = fixture->add_subcommand("nakayama", "Nakayama's example");
  fx_nak->add_option("--a", fa, "integer a > 1");
  fx_nak->add_flag("--literal-classes", literal, "use the divisor classes verbatim");
  auto *fx_62 = fixture->add_subcommand("ex62", "rational polyhedral example");
  fx_62->add_option("--u", fu, "u");
  fx_62->add_option("--v", fv, "v");
  auto *fx_65 = fixture->add_subcommand("ex65", "polyhedral, irrational example");

  std::ostream &out = std::cout;
  fx_nak->callback([&] { standalone = [&] {
    if (fa <= 1) throw UsageError("--a must be > 1");
    out << emit_problem(nakayama(fa, literal));
    return 0;
  }; });
  fx_62->callback([&] { standalone = [&] {
    if (fu <= 0 || fv <= fu) throw UsageError("need 0 < u < v");
    out << emit_problem(ex62(fu, fv));
    return 0;
  }; });
  fx_65->callback([&] { standalone = [&] {
    out << emit_problem(ex65());
    return 0;
  }; });

  pseff->callback([&] { action = [&](const ToricBundle &b) {
    out << (is_pseudoeffective(b) ? "true" : "false") << "\n";
    return 0;
  }; });
  big->callback([&] { action = [&](const ToricBundle &b) {
    out << bigness_name(is_big(b)) << "\n";
    return 0;
  }; });
  boxnef->callback([&] { action = [&](const ToricBundle &b) {
    PlanarBoundary pb = trace_boundary(b.box_nef());
    for (const auto &c : pb.corners) out << "vertex " << format_vector(c) << "\n";
    out << "boundary " << (pb.straight() ? "straight" : "curved") << "\n";
    if (!svg_path.empty()) write_file(svg_path, boxnef_svg(b));
    return 0;
  }; });
  sset->callback([&] { action = [&](const ToricBundle &b) {
    Scalar t = parse_number(t_text, "--t");
    if (t.sign() <= 0) throw UsageError("--t must be positive");
    SSet s = s_set(b, sigma);
    if (b.n() == 2) {
      PlanarBoundary pb = trace_boundary(s.exponent.base().scaled(t));
      for (const auto &c : pb.corners) out << "vertex " << format_vector(c) << "\n";
      out << "boundary " << (pb.straight() ? "straight" : "curved") << "\n";
    }
    out << "recession orthant\n";
    if (!svg_path.empty()) write_file(svg_path, sset_svg(b, sigma, t));
    return 0;
  }; });
  eval->callback([&] { action = [&](const ToricBundle &b) {
    out << format_weight(psi_sigma(b, resolve_point(b, point))) << "\n";
    return 0;
  }; });
  lelong->callback([&] { action = [&](const ToricBundle &b) {
    out << format_scalar(lelong_number(b, resolve_point(b, point))) << "\n";
    return 0;
  }; });
  kiselman->callback([&] { action = [&](const ToricBundle &b) {
    out << format_scalar(kiselman_number(b, resolve_point(b, point), parse_list(weights, "--w"))) << "\n";
    return 0;
  }; });
  nnef->callback([&] { action = [&](const ToricBundle &b) {
    StratumReport rep = nnef_locus(b);
    std::string positive;
    for (const auto &s : rep.strata) {
      out << "cone " << format_cone(s.rays) << " lelong " << format_scalar(s.lelong);
      if (!s.name.empty()) out << " " << s.name;
      out << "\n";
      if (s.lelong.sign() > 0) positive += " " + (s.name.empty() ? format_cone(s.rays) : s.name);
    }
    out << "nnef" << (positive.empty() ? " none" : positive) << "\n";
    return 0;
  }; });
  negpart->callback([&] { action = [&](const ToricBundle &b) {
    for (const auto &[r, c] : negative_part(b)) out << "v" << r << " " << format_scalar(c) << "\n";
    return 0;
  }; });
  zariski->callback([&] { action = [&](const ToricBundle &b) {
    out << polyhedrality_name(zariski_polyhedrality(b)) << "\n";
    return 0;
  }; });
  mideal->callback([&] { action = [&](const ToricBundle &b) {
    ChartPoint p = resolve_point(b, point);
    Scalar t = parse_number(t_text, "--t");
    out << (in_multiplier_ideal(b, p, parse_polynomial(f_text, b.n()), t) ? "true" : "false") << "\n";
    if (gens)
      for (const auto &m : ideal_generators(b, p, t)) out << "generator " << format_monomial(m) << "\n";
    return 0;
  }; });
  jumps->callback([&] { action = [&](const ToricBundle &b) {
    JumpingSpectrum s = jumping_numbers(b, resolve_point(b, point), parse_number(max_text, "--max"));
    for (const auto &j : s.jumps) {
      out << format_scalar(j.value);
      for (const auto &q : j.points) out << " " << format_int_vector(q);
      out << "\n";
    }
    return 0;
  }; });
  lctc->callback([&] { action = [&](const ToricBundle &b) {
    auto c = lct(b, resolve_point(b, point));
    out << (c ? format_scalar(*c) : std::string("inf")) << "\n";
    return 0;
  }; });
  sections->callback([&] { action = [&](const ToricBundle &b) {
    SectionCount sc = section_count(b);
    for (const auto &e : sc.per_point) {
      out << "m " << format_int_vector(e.m) << " class " << format_vector(e.cls) << " count "
          << (e.count ? format_scalar(*e.count) : std::string("BoundaryUnknown")) << "\n";
    }
    out << "total " << (sc.total ? format_scalar(*sc.total) : std::string("Unknown")) << "\n";
    return 0;
  }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (standalone) return standalone();
    std::string text;
    if (problem_path.empty()) {
      text = read_all(std::cin);
    } else {
      std::ifstream in(problem_path);
      if (!in) throw UsageError("cannot read " + problem_path);
      text = read_all(in);
    }
    BundleProblem problem = parse_problem(text, tol);
    if (validate_cmd->parsed()) {
      ValidationReport rep = validate(problem);
      for (const auto &i : rep.issues)
        out << (i.warning ? "warning " : "error ") << error_name(i.code) << ": " << i.message << "\n";
      if (rep.ok()) out << "ok\n";
      return rep.ok() ? 0 : 2;
    }
    ToricBundle bundle(std::move(problem));
    return action(bundle);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const MathError &e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
