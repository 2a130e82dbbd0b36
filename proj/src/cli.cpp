#include "blockmagic/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "blockmagic/classify.hpp"
#include "blockmagic/error.hpp"
#include "blockmagic/fixtures.hpp"
#include "blockmagic/io.hpp"
#include "blockmagic/qform.hpp"
#include "blockmagic/quasinv.hpp"

namespace blockmagic::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string in;
  std::string spec;
  std::string other;
  std::string weight;
  std::string emit = "all";
  std::string source = "all";
  unsigned cap = 0;
  bool full = false;
  bool canonical = false;
  bool json_out = false;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

json opt_scalar(const std::optional<QuadScalar>& s) { return s ? json(s->to_string()) : json(nullptr); }

/// Pulls out the rational content so that the remaining matrix is integral
/// and primitive, which is how worked examples are usually printed.
json content_view(const Matrix& m) {
  if (!m.is_rational() || m.is_zero()) return nullptr;
  Rational g;
  for (const auto& x : m.entries()) g = rational_gcd(g, x.rat());
  return {{"prefactor", g.to_string()}, {"matrix", matrix_to_json(QuadScalar(g.reciprocal()) * m)}};
}

json symmetry_json(const Matrix& m) {
  const SymmetryReport r = classify(m);
  json j = {{"dimension", r.dimension},   {"is_semimagic", r.is_semimagic}, {"weight", opt_scalar(r.weight)},
            {"is_magic", r.is_magic},     {"is_associated", r.is_associated}, {"is_balanced", r.is_balanced},
            {"is_trivial", r.is_trivial}, {"trace", trace(m).to_string()}};
  QuadScalar anti;
  for (std::size_t i = 0; i < m.rows(); ++i) anti += m(i, m.rows() - 1 - i);
  j["antidiagonal_sum"] = anti.to_string();
  return j;
}

json power_scan_json(const PowerScanResult& r) {
  json history = json::array();
  for (const auto& f : r.history) history.push_back({{"power", f.power}, {"magic", f.magic}, {"trivial", f.trivial}});
  auto opt_bool = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  return {{"first_bad_N", r.first_bad_N ? json(*r.first_bad_N) : json(nullptr)},
          {"verdict", r.verdict ? json(*r.verdict == PowerVerdict::Trivial ? "trivial" : "not_magic") : json(nullptr)},
          {"bound", r.bound},
          {"cap", r.cap},
          {"balanced", r.balanced},
          {"balanced_bound_holds", opt_bool(r.balanced_bound_holds)},
          {"dimension_bound_holds", opt_bool(r.dimension_bound_holds)},
          {"history", history}};
}

json binary_json(const BinaryForm& f) {
  return {{"kind", "binary"},
          {"a", f.a.to_string()},
          {"b", f.b.to_string()},
          {"c", f.c.to_string()},
          {"scale", f.scale.to_string()},
          {"text", f.to_string()},
          {"normalized", f.normalized().to_string()},
          {"discriminant", discriminant(f).to_string()}};
}

json ternary_json(const TernaryForm& t) {
  json c = json::array();
  json d = json::array();
  json functional = json::array();
  for (std::size_t i = 0; i < t.c.size(); ++i) {
    c.push_back(t.c[i].to_string());
    d.push_back(t.d[i].to_string());
    functional.push_back(t.functional[i].to_string());
  }
  return {{"kind", "ternary"},
          {"scale", t.scale.to_string()},
          {"binary", binary_json(t.binary)},
          {"cross", t.cross.to_string()},
          {"collapsed", t.collapsed},
          {"columns", t.columns},
          {"labels", t.labels},
          {"c", c},
          {"d", d},
          {"functional", functional},
          {"functional_text", t.functional_string()},
          {"text", t.to_string()}};
}

json form_json(const QuadraticForm& f) {
  if (const auto* b = std::get_if<BinaryForm>(&f)) return binary_json(*b);
  return ternary_json(std::get<TernaryForm>(f));
}

json multiplicity_json(const Multiplicity& m) { return {{"algebraic", m.algebraic}, {"geometric", m.geometric}}; }

json rank1_json(const Rank1Spec& spec, const QuadScalar& w, const std::string& emit) {
  json j;
  const bool all = emit == "all";
  bool known = all;
  if (all || emit == "M") {
    known = true;
    const Matrix m = build_rank1(spec, w);
    j["M"] = matrix_to_json(m);
    j["M_content"] = content_view(m);
  }
  if (all || emit == "verdict") {
    known = true;
    const AlternativeVerdict v = alternative_classify(spec);
    j["verdict"] = {{"case", v.which == AlternativeCase::Rank2NotMagic ? "rank2_not_magic" : "nilpotent_magic"},
                    {"lambda", v.lambda.to_string()},
                    {"uTx", v.ux.to_string()},
                    {"yTv", v.yv.to_string()},
                    {"rank_of_square", v.rank_of_square},
                    {"square_magic", v.square_magic},
                    {"fourth_power_zero", v.fourth_power_zero},
                    {"consistent", v.consistent}};
    const Matrix m = build_rank1(spec);
    const auto k = parasym_factor(spec);
    j["parasymmetric"] = is_parasymmetric(m);
    j["paranormal"] = is_paranormal(m);
    j["parasym_factor"] = opt_scalar(k);
  }
  if (all || emit == "minpoly") {
    known = true;
    const MinimalPolyResult r = minimal_poly_rank1(spec);
    j["minpoly"] = {{"poly", r.poly.to_string()},
                    {"from_lemma", r.from_lemma},
                    {"verified", r.verified},
                    {"annihilates", r.annihilates}};
  }
  const bool lambda_zero = spec.lambda().is_zero();
  if ((all && !lambda_zero) || emit == "eigen") {
    known = true;
    const EigenStructure e = eigen_structure(spec);
    j["eigen"] = {{"lambda", e.lambda.to_string()},
                  {"right", {vector_to_json(e.right.first), vector_to_json(e.right.second)}},
                  {"left", {vector_to_json(e.left.first), vector_to_json(e.left.second)}},
                  {"right_verified", e.right_verified},
                  {"left_verified", e.left_verified},
                  {"right_orthogonal", e.right_orthogonal},
                  {"left_orthogonal", e.left_orthogonal},
                  {"sqrt_lambda", opt_scalar(e.sqrt_lambda)},
                  {"eigvals_of_M", e.eigvals_of_M},
                  {"square_lambda_multiplicity", multiplicity_json(e.square_lambda)},
                  {"square_zero_multiplicity", multiplicity_json(e.square_zero)}};
  }
  if ((all && !lambda_zero) || emit == "P" || emit == "Pinv") {
    known = true;
    const TwoSidedEigenMatrix t = build_two_sided_P(spec);
    json p = {{"lambda", t.lambda.to_string()},
              {"pivot_rows", {t.pivot_rows.first, t.pivot_rows.second}},
              {"inverse_ok", t.inverse_ok},
              {"right_ok", t.right_ok},
              {"left_ok", t.left_ok}};
    if (emit != "Pinv") {
      p["P"] = matrix_to_json(t.P);
      p["P_content"] = content_view(t.P);
    }
    if (emit != "P") {
      p["P_inv"] = matrix_to_json(t.P_inv);
      p["P_inv_content"] = content_view(t.P_inv);
    }
    j["two_sided"] = p;
  }
  if (!known) throw Error(ErrorCode::InvalidArgument, "unknown --emit value " + emit);
  return j;
}

json qform_spec_json(const Rank1Spec& spec, const std::string& source) {
  json j;
  const bool all = source == "all";
  const bool parasym = parasym_factor(spec).has_value();
  bool known = all;
  if ((all && parasym) || source == "q1") {
    known = true;
    j["q1"] = binary_json(reduced_q1(spec));
  }
  if ((all && parasym) || source == "natural") {
    known = true;
    j["natural"] = form_json(q_from_eigenbasis(spec, EigenSource::Natural).form);
  }
  if (all || source == "teigen") {
    known = true;
    j["teigen"] = form_json(q_from_eigenbasis(spec, EigenSource::Teigen).form);
  }
  if (!known) throw Error(ErrorCode::InvalidArgument, "unknown --source value " + source);
  if (j.contains("q1") && j.contains("natural") && j["natural"]["kind"] == "binary") {
    const BinaryForm q1 = reduced_q1(spec);
    const auto q3 = std::get<BinaryForm>(q_from_eigenbasis(spec, EigenSource::Natural).form);
    j["q1_vs_natural"] =
        z_equivalence_necessary(q1, q3) == Equivalence::NotEquivalent ? "not_equivalent" : "maybe_equivalent";
  }
  return j;
}

json quasi_json(const QuasiInverseReport& r) {
  return {{"exists", r.exists},
          {"side", quasi_side_name(r.side)},
          {"reason", r.reason},
          {"Q", r.Q ? matrix_to_json(*r.Q) : json(nullptr)}};
}

void render(const json& j, const std::string& indent, std::string& out);

bool is_matrix_json(const json& j) {
  return j.is_object() && j.size() == 3 && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render_value(const std::string& key, const json& v, const std::string& indent, std::string& out) {
  if (is_matrix_json(v)) {
    out += indent + key + ":\n";
    std::istringstream grid(format_matrix_text(matrix_from_json(v)));
    for (std::string line; std::getline(grid, line);) out += indent + "  " + line + "\n";
  } else if (v.is_object()) {
    out += indent + key + ":\n";
    render(v, indent + "  ", out);
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& x : v)
      if (x.is_object() || x.is_array()) flat = false;
    if (flat) {
      std::string line;
      for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar_text(x);
      out += indent + key + ": [" + line + "]\n";
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) render_value(key + "[" + std::to_string(i) + "]", v[i], indent, out);
    }
  } else {
    out += indent + key + ": " + scalar_text(v) + "\n";
  }
}

void render(const json& j, const std::string& indent, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it) render_value(it.key(), it.value(), indent, out);
}

void emit(const json& report, const Options& o, std::ostream& out) {
  if (o.json_out) {
    out << report.dump(2) << '\n';
  } else {
    out << render_text(report);
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::string out;
  if (is_matrix_json(report)) {
    out = format_matrix_text(matrix_from_json(report));
  } else {
    render(report, "", out);
  }
  return out;
}

std::vector<SelfCheck> selftest() {
  namespace fx = fixtures;
  std::vector<SelfCheck> checks;
  auto check = [&](std::string name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    checks.push_back({std::move(name), ok});
  };
  const QuadScalar lambda(8736);

  check("involution X_4 squares to I", [] { return involution(4) * involution(4) == Matrix::identity(4); });
  check("block form of E_4 is diag(2E_2, 0)", [] {
    Matrix b(4, 4);
    b.set_block(0, 0, QuadScalar(2) * Matrix::ones(2));
    return to_block(Matrix::ones(4)) == b;
  });
  check("Loh Shu assembled from w=5, V=(2), W=(4)", [&] { return assemble(fx::loh_shu_components()) == fx::loh_shu(); });
  check("Loh Shu trace is 15", [&] { return trace(fx::loh_shu()) == QuadScalar(15); });
  check("Loh Shu components extracted", [&] { return extract_components(fx::loh_shu()) == fx::loh_shu_components(); });
  check("5x5 balanced square assembled and classified", [&] {
    const Matrix m = assemble(fx::balanced5_components());
    const SymmetryReport r = classify(m);
    return m == fx::balanced5() && r.is_balanced && r.is_magic && r.weight->is_zero() &&
           magic_criteria_balanced(fx::balanced5_components()).magic;
  });
  check("4x4 balanced square has the printed block form", [&] { return to_block(fx::balanced4()) == fx::balanced4_block(); });
  check("4x4 balanced square: odd powers magic, even powers not", [&] {
    const PowerScanResult r = power_scan(fx::balanced4(), 6, true);
    for (const auto& f : r.history)
      if (f.magic != (f.power % 2 == 1)) return false;
    return r.first_bad_N == 2u;
  });
  check("3x3 block Y is semimagic with trace 0 but not magic", [&] {
    const SymmetryReport r = classify(fx::semimagic_y3());
    return r.is_semimagic && r.weight->is_zero() && trace(fx::semimagic_y3()).is_zero() && !r.is_magic;
  });
  check("nilpotent example: rank M = 2, rank M^2 = 1, M^4 = 0", [&] {
    const Matrix m = build_rank1(fx::nilpotent_spec());
    const AlternativeVerdict v = alternative_classify(fx::nilpotent_spec());
    return m == fx::nilpotent_square() && rank(m) == 2 && v.rank_of_square == 1 &&
           v.which == AlternativeCase::NilpotentMagic && v.fourth_power_zero;
  });
  check("Example 1: M, block form of M^2, lambda", [&] {
    const Matrix m = build_rank1(fx::example1_spec());
    return m == fx::example1_M() && to_block(m * m) == QuadScalar(8) * fx::example1_square_block() &&
           fx::example1_spec().lambda() == lambda;
  });
  check("Example 1: minimal polynomial x^3 - 8736x", [&] {
    return minimal_poly_rank1(fx::example1_spec()).poly.to_string() == "x^3 - 8736*x";
  });
  check("Example 1: two-sided P and its inverse", [&] {
    const TwoSidedEigenMatrix t = build_two_sided_P(fx::example1_spec());
    return t.P == fx::example1_P() && t.P_inv == fx::example1_P_inv() && t.inverse_ok && t.right_ok && t.left_ok;
  });
  check("Example 1: q1, q2, q3 and discriminants", [&] {
    const BinaryForm q1 = reduced_q1(fx::example1_spec());
    const auto q3 = std::get<BinaryForm>(q_from_eigenbasis(fx::example1_spec(), EigenSource::Natural).form);
    const auto q2 = std::get<BinaryForm>(q_from_eigenbasis(fx::example1_spec(), EigenSource::Teigen).form);
    return q1 == BinaryForm{1092, 0, 4, 1} && q3 == BinaryForm{4, 0, 1092, 17472} &&
           q2 == BinaryForm{197, -152, 197, QuadScalar(Rational(34944, 121))} &&
           z_equivalence_necessary(q1, q3) == Equivalence::NotEquivalent;
  });
  check("Example 2: M is half the printed matrix, block form of M^2", [&] {
    const Matrix m = build_rank1(fx::example2_spec());
    return QuadScalar(2) * m == fx::example2_M_printed() &&
           to_block(m * m) == QuadScalar(8) * fx::example2_square_block() && !is_parasymmetric(m) &&
           !is_paranormal(m);
  });
  check("Example 2: two-sided P", [&] {
    const TwoSidedEigenMatrix t = build_two_sided_P(fx::example2_spec());
    return t.P == fx::example2_P() && t.inverse_ok && t.right_ok && t.left_ok;
  });
  check("Example 2: ternary form and collapse functional", [&] {
    const auto q = std::get<TernaryForm>(q_from_eigenbasis(fx::example2_spec(), EigenSource::Teigen).form);
    return q.scale == lambda && q.binary == BinaryForm{809, -560, 809, QuadScalar(Rational(4, 529))} &&
           q.cross == QuadScalar(Rational(6, 115)) && q.collapsed &&
           q.functional_string() == "4*(a3 - a6) - (a4 - a7) - 3*(a5 - a8)";
  });
  check("quasi-unit block form is diag(U_2, I_2)", [] {
    Matrix b(4, 4);
    b.set_block(0, 0, quasi_unit(2));
    b.set_block(2, 2, Matrix::identity(2));
    return to_block(quasi_unit(4)) == b;
  });
  check("Loh Shu minus 5E has the quasi-inverse W' = 1/6, V' = 1/12", [&] {
    const Matrix m0 = fx::loh_shu() - QuadScalar(5) * Matrix::ones(3);
    const QuasiInverseReport r = quasi_inverse(m0);
    if (!r.exists) return false;
    const BlockComponents q = extract_components(*r.Q);
    return q.W == Matrix{{QuadScalar(Rational(1, 6))}} && q.V == Matrix{{QuadScalar(Rational(1, 12))}};
  });
  check("Example 1 has no quasi-inverse", [&] { return !quasi_inverse(fx::example1_M()).exists; });
  return checks;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact block-representation toolkit for semimagic and magic square matrices", "blockmagic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "Emit JSON instead of text");

  auto add_in = [&](CLI::App* sub, const char* what) { sub->add_option("--in", o.in, what); };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "Rank-1 spec JSON {u, v, x, y, w}");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Symmetry flags and weight of a square");
  add_in(classify_cmd, "Matrix file (text or JSON), default stdin");
  CLI::App* blockrep_cmd = app.add_subcommand("blockrep", "Block representation X M X");
  add_in(blockrep_cmd, "Matrix file");
  CLI::App* assemble_cmd = app.add_subcommand("assemble", "Square from block components");
  add_in(assemble_cmd, "Components JSON");
  CLI::App* extract_cmd = app.add_subcommand("extract", "Block components of a semimagic square");
  add_in(extract_cmd, "Matrix file");
  extract_cmd->add_option("--weight", o.weight, "Expected weight");
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Associated + balanced + weight split");
  add_in(decompose_cmd, "Matrix file");
  CLI::App* dihedral_cmd = app.add_subcommand("dihedral", "Dihedral orbit, canonical form, equivalence");
  add_in(dihedral_cmd, "Matrix file");
  dihedral_cmd->add_flag("--canonical", o.canonical, "Only print the canonical representative");
  dihedral_cmd->add_option("--other", o.other, "Second matrix to test for equivalence");
  CLI::App* magic_cmd = app.add_subcommand("magic-check", "Magic criteria for balanced components");
  add_in(magic_cmd, "Components JSON");
  CLI::App* power_cmd = app.add_subcommand("power-scan", "First power that is trivial or not magic");
  add_in(power_cmd, "Matrix file");
  power_cmd->add_option("--cap", o.cap, "Highest power to scan (default: dimension)");
  power_cmd->add_flag("--full", o.full, "Record flags up to the cap");
  CLI::App* rank1_cmd = app.add_subcommand("rank1", "Rank-1 block construction and spectral data");
  add_spec(rank1_cmd);
  rank1_cmd->add_option("--emit", o.emit, "M | verdict | minpoly | eigen | P | Pinv | all")
      ->check(CLI::IsMember({"M", "verdict", "minpoly", "eigen", "P", "Pinv", "all"}));
  CLI::App* quasi_cmd = app.add_subcommand("quasi-inverse", "Quasi-inverse of a weight-0 square");
  add_in(quasi_cmd, "Matrix file");
  CLI::App* shift_cmd = app.add_subcommand("weight-shift", "Rank and spectrum change when adding weight");
  add_in(shift_cmd, "Matrix file (weight-0 associated)");
  shift_cmd->add_option("--weight", o.weight, "Weight w to add")->required();
  CLI::App* qform_cmd = app.add_subcommand("qform", "Quadratic forms of squared associated squares");
  add_in(qform_cmd, "Matrix file: report the block form pieces");
  add_spec(qform_cmd);
  qform_cmd->add_option("--source", o.source, "q1 | natural | teigen | all")
      ->check(CLI::IsMember({"q1", "natural", "teigen", "all"}));
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Check the bundled worked examples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  auto usage = [&](const std::string& msg) {
    err << "usage error: " << msg << "\n" << app.help();
    return kExitUsage;
  };

  json report;
  try {
    auto matrix_in = [&] { return parse_matrix_any(slurp(o.in, in)); };
    if (*classify_cmd) {
      report = symmetry_json(matrix_in());
    } else if (*blockrep_cmd) {
      const Matrix m = matrix_in();
      report = {{"block", matrix_to_json(to_block(m))}};
    } else if (*assemble_cmd) {
      report = matrix_to_json(assemble(components_from_json(parse_json(slurp(o.in, in)))));
    } else if (*extract_cmd) {
      const Matrix m = matrix_in();
      std::optional<QuadScalar> w;
      if (!o.weight.empty()) w = QuadScalar::parse(o.weight);
      report = components_to_json(extract_components(m, w));
    } else if (*decompose_cmd) {
      const AbwDecomposition d = decompose_abw(matrix_in());
      report = {{"associated", matrix_to_json(d.associated)},
                {"balanced", matrix_to_json(d.balanced)},
                {"weight", d.weight.to_string()}};
    } else if (*dihedral_cmd) {
      const Matrix m = matrix_in();
      report["canonical"] = matrix_to_json(dihedral_canonical(m));
      if (!o.canonical) {
        json orbit = json::array();
        for (const auto& x : dihedral_orbit(m)) orbit.push_back(matrix_to_json(x));
        report["orbit"] = orbit;
      }
      if (!o.other.empty()) {
        std::istringstream none;
        report["equivalent"] = dihedral_equivalent(m, parse_matrix_any(slurp(o.other, none)));
      }
    } else if (*magic_cmd) {
      const MagicCriteria c = magic_criteria_balanced(components_from_json(parse_json(slurp(o.in, in))));
      report = {{"magic", c.magic},
                {"trace_y", c.trace_y.to_string()},
                {"trace_z", c.trace_z.to_string()},
                {"y_total", opt_scalar(c.y_total)}};
    } else if (*power_cmd) {
      report = power_scan_json(power_scan(matrix_in(), o.cap, o.full));
    } else if (*rank1_cmd) {
      if (o.spec.empty() && o.in.empty()) return usage("rank1 needs --spec");
      const auto [spec, w] = spec_from_json(parse_json(slurp(o.spec.empty() ? o.in : o.spec, in)));
      report = rank1_json(spec, w, o.emit);
    } else if (*quasi_cmd) {
      report = quasi_json(quasi_inverse(matrix_in()));
    } else if (*shift_cmd) {
      const WeightShiftReport r = weight_shift_report(matrix_in(), QuadScalar::parse(o.weight));
      report = {{"half", r.half},
                {"w", r.w.to_string()},
                {"rank0", r.rank0},
                {"rank_w", r.rank_w},
                {"rank_increased_by_one", r.rank_increased_by_one},
                {"extra_eig_M", opt_scalar(r.extra_eig_M)},
                {"extra_eig_Msq", opt_scalar(r.extra_eig_Msq)},
                {"extra_eig_M_is_2nw", r.extra_eig_M_is_2nw},
                {"msq_matches_2n2w2", r.msq_matches_2n2w2},
                {"msq_matches_4n2w2", r.msq_matches_4n2w2},
                {"shared_spectrum_ok", r.shared_spectrum_ok}};
    } else if (*qform_cmd) {
      if (!o.spec.empty()) {
        const auto [spec, w] = spec_from_json(parse_json(slurp(o.spec, in)));
        if (!w.is_zero()) return usage("quadratic forms from a spec need w = 0");
        report = qform_spec_json(spec, o.source);
      } else {
        const QFormCoefficients q = qform_coefficients(matrix_in());
        report = {{"weight_part", matrix_to_json(q.weight_part)},
                  {"xi_matrix", matrix_to_json(q.xi_matrix)},
                  {"eta_matrix", matrix_to_json(q.eta_matrix)},
                  {"relations_ok", q.relations_ok},
                  {"square_block_ok", q.square_block_ok}};
      }
    } else if (*selftest_cmd) {
      const std::vector<SelfCheck> checks = selftest();
      bool all = true;
      json list = json::array();
      for (const auto& c : checks) {
        all = all && c.passed;
        list.push_back({{"name", c.name}, {"passed", c.passed}});
      }
      if (o.json_out) {
        out << json{{"checks", list}, {"all_passed", all}}.dump(2) << '\n';
      } else {
        for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
      }
      return all ? kExitOk : kExitFailedChecks;
    }
  } catch (const Error& e) {
    const json failure = {{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
    emit(failure, o, out);
    return kExitDomainError;
  }
  emit(report, o, out);
  return kExitOk;
}

}  // namespace blockmagic::cli
