// lace: exact-arithmetic subdivision operators, real-rootedness and
// interlacing certificates, simplicial subdivisions and lattice zonotopes.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 parse
// error, 3 precondition violation, 4 internal cross-assertion mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lace/errors.hpp"
#include "lace/operators.hpp"
#include "lace/realroot.hpp"
#include "lace/simplicial.hpp"
#include "lace/theorems.hpp"
#include "lace/zonotope.hpp"

namespace {

using nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw lace::ParseError("cannot open output file " + out_path);
    out << text;
  }
}

// Every emitted certificate carries the full run configuration.
int emit_certificate(const lace::Certificate& cert, const ordered_json& config,
                     const std::string& out_path) {
  ordered_json j = cert.to_json();
  j["run_config"] = config;
  write_output(j.dump(2) + "\n", out_path);
  return cert.positive() ? 0 : 1;
}

lace::Poly read_poly(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty() && !file.empty())
    throw lace::ParseError("give the polynomial inline or as a file, not both");
  if (!inline_text.empty()) return lace::poly_from_inline(inline_text);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw lace::ParseError("cannot open " + file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw lace::ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
    return lace::poly_from_json(j);
  }
  throw lace::ParseError("missing polynomial (--h or --h-file)");
}

lace::FTriangle make_ftriangle(const std::string& name, int r, int d) {
  if (name == "trivial") return lace::FTriangle::trivial(d);
  if (name == "barycentric") return lace::FTriangle::barycentric(d);
  if (name == "edgewise") return lace::extract_ftriangle(lace::SubdivKind::Esd, r, d);
  if (name == "colored")
    return lace::extract_ftriangle(lace::SubdivKind::Colored, r, d);
  std::ifstream in(name);
  if (!in) throw lace::ParseError("cannot open f-triangle file " + name);
  return lace::FTriangle::parse(in, name);
}

lace::SimplicialComplex read_complex(const std::string& path) {
  if (path.empty()) throw lace::ParseError("missing --in complex file");
  std::ifstream in(path);
  if (!in) throw lace::ParseError("cannot open complex file " + path);
  return lace::SimplicialComplex::parse(in);
}

lace::Zonotope read_zonotope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lace::ParseError("cannot open zonotope file " + path);
  return lace::Zonotope::parse(in);
}

struct Options {
  std::string kind, h, h_file, F = "barycentric", out, variant = "a";
  std::string action, in, gamma, file, what = "hstar";
  int n = 0, r = 1, d = -1, k = 0, m = 1;
  int v = 6, size = 3, draws = 4;
  bool certify_flag = false, include_top = false;
  std::optional<std::uint64_t> seed;

  int effective_d(int fallback) const { return d >= 0 ? d : fallback; }

  ordered_json config(const std::string& command) const {
    ordered_json j;
    j["command"] = command;
    if (!kind.empty()) j["kind"] = kind;
    if (!F.empty()) j["F"] = F;
    j["n"] = n;
    j["r"] = r;
    if (d >= 0) j["d"] = d;
    if (!h.empty()) j["h"] = h;
    if (!h_file.empty()) j["h_file"] = h_file;
    if (!gamma.empty()) j["gamma_h"] = gamma;
    if (!file.empty()) j["file"] = file;
    if (!variant.empty()) j["variant"] = variant;
    if (include_top) j["include_top"] = true;
    if (seed) j["seed"] = *seed;
    if (!out.empty()) j["out"] = out;
    return j;
  }
};

std::vector<lace::Rat> parse_rat_list(const std::string& text) {
  std::vector<lace::Rat> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) throw lace::ParseError("empty entry in list");
    size_t b = tok.find_last_not_of(" \t");
    out.push_back(lace::parse_rational(tok.substr(a, b - a + 1)));
  }
  return out;
}

int run_op(const Options& opt) {
  lace::Poly h = read_poly(opt.h, opt.h_file);
  lace::Poly result;
  if (opt.kind == "D") {
    result = lace::bary_D(opt.n, h);
  } else if (opt.kind == "U") {
    result = lace::edgewise_U(opt.n, opt.r, h);
  } else if (opt.kind == "Dr") {
    result = lace::colored_D(opt.n, opt.r, h);
  } else if (opt.kind == "EF") {
    lace::FTriangle F = make_ftriangle(opt.F, opt.r, opt.effective_d(opt.n));
    result = lace::apply_EF(F, h);
  } else if (opt.kind == "DF") {
    lace::FTriangle F = make_ftriangle(opt.F, opt.r, opt.effective_d(opt.n));
    result = lace::apply_DF(F, opt.n, h);
  } else {
    throw lace::ParseError("unknown operator kind '" + opt.kind + "'");
  }
  std::ostringstream text;
  text << result.to_string() << "\n";
  if (opt.certify_flag) {
    lace::Certificate cert = lace::is_real_rooted(result);
    ordered_json j = cert.to_json();
    j["run_config"] = opt.config("op");
    text << j.dump(2) << "\n";
  }
  write_output(text.str(), opt.out);
  return 0;
}

int run_certify_main(const Options& opt) {
  lace::FTriangle F = make_ftriangle(opt.F, opt.r, opt.effective_d(opt.n));
  lace::Poly h = read_poly(opt.h, opt.h_file);
  lace::MainVariant variant =
      opt.variant == "b" ? lace::MainVariant::B : lace::MainVariant::A;
  if (opt.variant != "a" && opt.variant != "b")
    throw lace::ParseError("--variant must be a or b");
  lace::Certificate cert = lace::certify_main_theorem(F, opt.n, h, variant);
  return emit_certificate(cert, opt.config("certify main-thm"), opt.out);
}

int run_certify_strong(const Options& opt) {
  lace::FTriangle F = make_ftriangle(opt.F, opt.r, opt.effective_d(opt.n));
  lace::Certificate cert = lace::strong_interlacing_check(F, opt.n, opt.include_top);
  return emit_certificate(cert, opt.config("certify strong-lace"), opt.out);
}

int run_certify_skeleton(const Options& opt) {
  lace::FTriangle F = make_ftriangle(opt.F, opt.r, opt.effective_d(opt.n + 1));
  std::vector<lace::Rat> gamma = parse_rat_list(opt.gamma);
  lace::Certificate cert = lace::skeleton_theorem_check(F, gamma, opt.n);
  return emit_certificate(cert, opt.config("certify skeleton"), opt.out);
}

int run_certify_zonotope(const Options& opt) {
  lace::Zonotope z = read_zonotope(opt.file);
  lace::Certificate cert = lace::certify_zonotope(z, opt.r);
  return emit_certificate(cert, opt.config("certify zonotope"), opt.out);
}

int run_complex(const Options& opt) {
  const std::string& action = opt.action;
  if (action == "random") {
    if (!opt.seed) throw lace::ParseError("random requires an explicit --seed");
    lace::SimplicialComplex cx =
        lace::random_complex(opt.v, opt.size, opt.draws, *opt.seed);
    write_output("# seed " + std::to_string(*opt.seed) + "\n" + cx.to_text(), opt.out);
    return 0;
  }
  if (action == "extract-ftriangle") {
    lace::SubdivKind kind;
    if (opt.kind == "trivial")
      kind = lace::SubdivKind::Trivial;
    else if (opt.kind == "sd")
      kind = lace::SubdivKind::Sd;
    else if (opt.kind == "esd")
      kind = lace::SubdivKind::Esd;
    else if (opt.kind == "colored")
      kind = lace::SubdivKind::Colored;
    else
      throw lace::ParseError("extract-ftriangle kind must be trivial|sd|esd|colored");
    write_output(lace::extract_ftriangle(kind, opt.r, opt.d >= 0 ? opt.d : 3).to_text(),
                 opt.out);
    return 0;
  }
  lace::SimplicialComplex cx = read_complex(opt.in);
  if (action == "fvec" || action == "hvec") {
    std::ostringstream text;
    if (action == "fvec") {
      for (const auto& f : cx.f_vector()) text << f.get_str() << " ";
    } else {
      lace::Poly h = cx.h_polynomial();
      for (int i = 0; i <= std::max(h.degree(), 0); ++i)
        text << lace::rational_to_string(h.coeff(i)) << (i < h.degree() ? " " : "");
    }
    std::string s = text.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    write_output(s + "\n", opt.out);
    return 0;
  }
  if (action == "sd") {
    write_output(lace::barycentric_subdivision(cx).to_text(), opt.out);
    return 0;
  }
  if (action == "esd") {
    write_output(lace::edgewise_subdivision(cx, opt.r).to_text(), opt.out);
    return 0;
  }
  if (action == "colored") {
    write_output(lace::colored_subdivision(cx, opt.r).to_text(), opt.out);
    return 0;
  }
  if (action == "skeleton") {
    write_output(cx.skeleton(opt.k).to_text(), opt.out);
    return 0;
  }
  throw lace::ParseError("unknown complex action '" + action + "'");
}

int run_zonotope(const Options& opt) {
  lace::Zonotope z = read_zonotope(opt.file);
  std::ostringstream text;
  if (opt.what == "ehrhart")
    text << lace::ehrhart_polynomial(z).to_string() << "\n";
  else if (opt.what == "hstar")
    text << lace::hstar(z).to_string() << "\n";
  else if (opt.what == "hstar-r")
    text << lace::hstar_r(z, opt.r).to_string() << "\n";
  else if (opt.what == "count")
    text << lace::count_lattice_points(z, opt.m).get_str() << "\n";
  else if (opt.what == "interior")
    text << (lace::interior_point_exists(z) ? "yes" : "no") << "\n";
  else
    throw lace::ParseError("unknown zonotope query '" + opt.what + "'");
  write_output(text.str(), opt.out);
  return 0;
}

int run_table(const Options& opt) {
  ordered_json j;
  if (opt.kind == "colored") {
    lace::ColoredPTable table = lace::colored_p_table(opt.n, opt.r);
    j["kind"] = "colored";
    j["n"] = opt.n;
    j["r"] = opt.r;
    auto levels = ordered_json::array();
    for (int m = 0; m <= table.levels(); ++m) {
      auto per_j = ordered_json::array();
      for (int jj = 0; jj < opt.r; ++jj) {
        auto per_k = ordered_json::array();
        for (int k = 0; k <= m; ++k) per_k.push_back(lace::poly_to_json(table.p(m, jj, k)));
        per_j.push_back(std::move(per_k));
      }
      levels.push_back(std::move(per_j));
    }
    j["entries"] = std::move(levels);
  } else if (opt.kind == "prow" || opt.kind.empty()) {
    lace::FTriangle F = make_ftriangle(opt.F, opt.r, opt.effective_d(opt.n));
    lace::PRowTable table = lace::PRowTable::build(F, opt.n);
    j["kind"] = "prow";
    j["F"] = F.name();
    j["n"] = opt.n;
    auto rows = ordered_json::array();
    for (int m = 0; m <= table.levels(); ++m) {
      auto row = ordered_json::array();
      for (int k = 0; k <= m; ++k) row.push_back(lace::poly_to_json(table.p(m, k)));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    auto thetas = ordered_json::array();
    thetas.push_back(nullptr);
    for (int m = 1; m <= table.levels(); ++m)
      thetas.push_back(lace::poly_to_json(table.theta(m)));
    j["theta"] = std::move(thetas);
  } else {
    throw lace::ParseError("table kind must be prow or colored");
  }
  write_output(j.dump(2) + "\n", opt.out);
  return 0;
}

}  // namespace

namespace {

// --h is taken by polynomial input, so help is --help only (recursively).
void use_long_help(CLI::App* app) {
  app->set_help_flag("--help", "print help");
  for (CLI::App* sub : app->get_subcommands({})) use_long_help(sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subdivision-operator and certification toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* op = app.add_subcommand("op", "apply a subdivision operator");
  op->add_option("--kind", opt.kind, "D | U | Dr | EF | DF")->required();
  op->add_option("--n", opt.n)->required();
  op->add_option("--r", opt.r);
  op->add_option("--h", opt.h, "comma-separated coefficients, low to high");
  op->add_option("--h-file", opt.h_file, "JSON array of rationals");
  op->add_option("--F", opt.F, "trivial|barycentric|edgewise|colored|<file>");
  op->add_option("--d", opt.d, "f-triangle size (default n)");
  op->add_option("--out", opt.out);
  op->add_flag("--certify", opt.certify_flag, "also certify real-rootedness");

  auto* certify = app.add_subcommand("certify", "emit a certificate");
  certify->require_subcommand(1);
  auto* main_thm = certify->add_subcommand("main-thm");
  main_thm->add_option("--F", opt.F)->required();
  main_thm->add_option("--n", opt.n)->required();
  main_thm->add_option("--r", opt.r);
  main_thm->add_option("--d", opt.d);
  main_thm->add_option("--h", opt.h);
  main_thm->add_option("--h-file", opt.h_file);
  main_thm->add_option("--variant", opt.variant, "a | b");
  main_thm->add_option("--out", opt.out);
  auto* strong = certify->add_subcommand("strong-lace");
  strong->add_option("--F", opt.F)->required();
  strong->add_option("--n", opt.n)->required();
  strong->add_option("--r", opt.r);
  strong->add_option("--d", opt.d);
  strong->add_flag("--include-top", opt.include_top);
  strong->add_option("--out", opt.out);
  auto* skeleton = certify->add_subcommand("skeleton");
  skeleton->add_option("--F", opt.F)->required();
  skeleton->add_option("--n", opt.n)->required();
  skeleton->add_option("--r", opt.r);
  skeleton->add_option("--d", opt.d);
  skeleton->add_option("--gamma-h", opt.gamma, "h-vector of Gamma, length n+2")->required();
  skeleton->add_option("--out", opt.out);
  auto* zono_cert = certify->add_subcommand("zonotope");
  zono_cert->add_option("--file", opt.file)->required();
  zono_cert->add_option("--r", opt.r);
  zono_cert->add_option("--out", opt.out);

  auto* complex = app.add_subcommand("complex", "simplicial complex utilities");
  complex->add_option("action", opt.action,
                      "fvec|hvec|sd|esd|colored|skeleton|extract-ftriangle|random")
      ->required();
  complex->add_option("--in", opt.in);
  complex->add_option("--out", opt.out);
  complex->add_option("--r", opt.r);
  complex->add_option("--kind", opt.kind, "trivial|sd|esd|colored");
  complex->add_option("--d", opt.d);
  complex->add_option("--k", opt.k, "skeleton dimension");
  complex->add_option("--v", opt.v, "random: vertex pool size");
  complex->add_option("--size", opt.size, "random: facet size");
  complex->add_option("--m", opt.draws, "random: facet draws");
  complex->add_option("--seed", opt.seed, "random: required seed");

  auto* zono = app.add_subcommand("zonotope", "Ehrhart and h* computations");
  zono->add_option("--file", opt.file)->required();
  zono->add_option("what", opt.what, "ehrhart|hstar|hstar-r|count|interior");
  zono->add_option("--r", opt.r);
  zono->add_option("--m", opt.m, "dilation for count");
  zono->add_option("--out", opt.out);

  auto* table = app.add_subcommand("table", "dump p-row / colored tables as JSON");
  table->add_option("--kind", opt.kind, "prow | colored");
  table->add_option("--F", opt.F);
  table->add_option("--n", opt.n)->required();
  table->add_option("--r", opt.r);
  table->add_option("--d", opt.d);
  table->add_option("--out", opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(op)) return run_op(opt);
    if (app.got_subcommand(certify)) {
      if (certify->got_subcommand(main_thm)) return run_certify_main(opt);
      if (certify->got_subcommand(strong)) return run_certify_strong(opt);
      if (certify->got_subcommand(skeleton)) return run_certify_skeleton(opt);
      if (certify->got_subcommand(zono_cert)) return run_certify_zonotope(opt);
    }
    if (app.got_subcommand(complex)) return run_complex(opt);
    if (app.got_subcommand(zono)) return run_zonotope(opt);
    if (app.got_subcommand(table)) return run_table(opt);
  } catch (const lace::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const lace::CountRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal cross-assertion failed: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
