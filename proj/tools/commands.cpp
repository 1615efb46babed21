#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "crown/errors.hpp"
#include "crown/exponents.hpp"
#include "crown/rootsys.hpp"
#include "suites.hpp"
#include "tables.hpp"

namespace crown::cli {

namespace {

Rat parse_one(const std::string& flag, const std::string& text, std::vector<std::string>& warnings) {
  auto p = parse_rational(text);
  if (!p) throw std::invalid_argument(flag + " expects a rational such as 3/2, got '" + text + "'");
  if (p->from_decimal)
    warnings.push_back(flag + " " + text + " is a decimal; read exactly as " + crown::to_string(p->value) +
                       " (use p/q for exact input)");
  return p->value;
}

std::vector<std::string> point_labels(const std::vector<BoundaryPoint>& pts) {
  std::vector<std::string> v;
  for (const auto& p : pts) v.push_back(p.label());
  return v;
}

RootSystemData root_system(const std::string& type, int rank) { return build_root_system(parse_family(type), rank); }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned seed_from_env() {
  const char* env = std::getenv("CROWN_SEED");
  if (!env || !*env) return kDefaultSeed;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string("CROWN_SEED is not an unsigned integer: ") + env);
  return static_cast<unsigned>(v);
}

}  // namespace

MultiplicityFunction parse_multiplicities(const MultiplicityFlags& f, std::vector<std::string>& warnings) {
  MultiplicityFunction m{Rat(0), Rat(1), Rat(1), false};
  if (f.m) {
    if (f.m1 || f.m2) throw std::invalid_argument("--m cannot be combined with --m1/--m2");
    m.m_long = m.m_other = parse_one("--m", *f.m, warnings);
  }
  if (f.m1) m.m_long = parse_one("--m1", *f.m1, warnings);
  if (f.m2) m.m_other = parse_one("--m2", *f.m2, warnings);
  if (f.mh) m.m_half = parse_one("--mh", *f.mh, warnings);
  return m;
}

ReportDocument boundary_command(const std::string& type, std::optional<int> rank, bool all) {
  ReportDocument doc;
  doc.command = "boundary";
  doc.table.columns = {{"type", ColumnType::Text},
                       {"extremal", ColumnType::List},
                       {"minuscule", ColumnType::List},
                       {"highest_root", ColumnType::List}};
  std::vector<std::pair<Family, int>> types;
  if (all) types = all_types();
  else types.emplace_back(parse_family(type), rank.value());
  for (auto [f, n] : types) {
    auto rs = build_root_system(f, n);
    std::vector<std::string> k;
    for (int c : rs.highest_root_coeffs) k.push_back(std::to_string(c));
    doc.table.rows.push_back({Cell::of(rs.label()), Cell::list(point_labels(extremal_points(rs))),
                              Cell::list(point_labels(minuscule_points(rs))), Cell::list(k)});
  }
  return doc;
}

ReportDocument exponents_command(const std::string& type, int rank, const std::optional<std::string>& eta,
                                 const MultiplicityFlags& mf) {
  ReportDocument doc;
  doc.command = "exponents";
  auto rs = root_system(type, rank);
  bool sl = rs.simply_laced();
  std::optional<MultiplicityFunction> m;
  if (mf.any()) m = parse_multiplicities(mf, doc.warnings);
  doc.table.columns = {{"type", ColumnType::Text},        {"eta", ColumnType::Text},
                       {"affine_isotropy", ColumnType::Text}, {"sigma", ColumnType::Text},
                       {"s", ColumnType::Text},           {"degeneracy", ColumnType::Text},
                       {"complex_s2", ColumnType::Integer}, {"lower_bound_rate", ColumnType::Text},
                       {"s_value", ColumnType::Text},     {"d_flag", ColumnType::Integer}};
  bool matched = false;
  for (const auto& p : extremal_points(rs)) {
    if (eta && p.label() != *eta) continue;
    matched = true;
    auto rep = exponent_report(rs, p);
    std::string value, flag;
    if (m) {
      value = crown::to_string(rep.leading_exponent.evaluate(*m));
      if (in_cone(rs, *m)) flag = rep.degeneracy.holds(*m) ? "1" : "0";
    }
    doc.table.rows.push_back({Cell::of(rs.label()), Cell::of(p.label()),
                              Cell::of(rep.isotropy.classified_affine_type), Cell::of(rep.leading_character.to_string()),
                              Cell::of(rep.leading_exponent.to_factored_string(sl)), Cell::of(rep.degeneracy.description),
                              Cell::of(rep.complex_check ? std::to_string(*rep.complex_check) : ""),
                              Cell::of(rep.lower_bound_rate.to_string(sl)), Cell::of(value), Cell::of(flag)});
  }
  if (eta && !matched) throw Error(ErrorKind::NotExtremal, *eta + " is not an extremal point of " + rs.label());
  if (m && !in_cone(rs, *m))
    doc.warnings.push_back("multiplicities lie outside the cone 1 <= m1 <= m2; s values are formal, d_flag omitted");
  return doc;
}

ReportDocument decay_command(const std::string& type, int rank, const MultiplicityFlags& mf,
                             const std::vector<double>& periods, const std::vector<double>& constants) {
  ReportDocument doc;
  doc.command = "decay";
  auto rs = root_system(type, rank);
  auto m = parse_multiplicities(mf, doc.warnings);
  auto d = decay_profile(rs, m, periods, constants);
  std::vector<std::string> rates;
  for (double r : d.rates) rates.push_back(format_number(r));
  doc.table.columns = {{"type", ColumnType::Text},           {"dim_X", ColumnType::Text},
                       {"r_X", ColumnType::Text},            {"s_X", ColumnType::Text},
                       {"d_X", ColumnType::Integer},         {"argmax", ColumnType::List},
                       {"rates", ColumnType::List},          {"polynomial_exponent", ColumnType::Number},
                       {"log_power", ColumnType::Number},    {"outside_cone", ColumnType::Boolean}};
  doc.table.rows.push_back({Cell::of(rs.label()), Cell::of(crown::to_string(d.dim_X)), Cell::of(crown::to_string(d.r_X)),
                            Cell::of(crown::to_string(d.s_X)), Cell::integer(d.d_X), Cell::list(d.argmax), Cell::list(rates),
                            Cell::number(d.polynomial_exponent), Cell::number(d.log_power),
                            Cell::boolean(d.outside_cone)});
  doc.notes.push_back(d.normalization_note);
  if (d.outside_cone) doc.warnings.push_back("multiplicities lie outside the cone 1 <= m1 <= m2");
  return doc;
}

ReportDocument complex_check_command(const std::optional<std::string>& type, std::optional<int> rank) {
  ReportDocument doc;
  doc.command = "complex-check";
  doc.table.columns = {{"type", ColumnType::Text},
                       {"eta", ColumnType::Text},
                       {"expected", ColumnType::Integer},
                       {"value", ColumnType::Integer},
                       {"ok", ColumnType::Boolean}};
  std::vector<std::pair<Family, int>> types;
  if (type) types.emplace_back(parse_family(*type), rank.value());
  else
    for (auto t : all_types())
      if (t.first != Family::BC) types.push_back(t);
  for (auto [f, n] : types) {
    auto rs = build_root_system(f, n);
    for (const auto& p : extremal_points(rs)) {
      auto c = complex_cross_check(rs, p);
      doc.table.rows.push_back({Cell::of(rs.label()), Cell::of(p.label()), Cell::integer(c.expected),
                                Cell::integer(c.value), Cell::boolean(c.ok)});
      doc.verification.push_back({"complex", rs.label() + " " + p.label(), c.ok ? Status::Pass : Status::Fail,
                                  static_cast<double>(c.value), 0, "expected " + std::to_string(c.expected)});
    }
  }
  return doc;
}

ReportDocument verify_command(const std::string& suite, unsigned seed) {
  ReportDocument doc;
  doc.command = "verify";
  doc.seed = seed;
  doc.verification = run_suite(suite, seed);
  doc.table = verification_table(doc.verification);
  return doc;
}

std::string emit(const ReportDocument& doc, Format format) {
  switch (format) {
    case Format::Json: return emit_json(doc);
    case Format::Tsv: return emit_tsv(doc.table);
    case Format::Human: return emit_human(doc);
  }
  return {};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"crown: crown domain boundaries, leading exponents and numerical checks", "crown"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool json = false, tsv = false, timing = false;
  std::string format = "human";
  std::optional<unsigned> seed;
  app.add_flag("--json", json, "JSON output (same as --format json)");
  app.add_flag("--tsv", tsv, "TSV output (same as --format tsv)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json", "tsv"}));
  app.add_option("--seed", seed, "Seed for randomized checks (overrides CROWN_SEED)");
  app.add_flag("--timing", timing, "Report elapsed time (makes output run dependent)");

  std::string type;
  std::optional<int> rank;
  std::optional<std::string> eta;
  bool all = false;
  MultiplicityFlags mf;
  std::vector<double> periods{1.0}, constants{1.0};
  std::string suite;

  auto add_type = [&](CLI::App* sub, bool required) {
    auto t = sub->add_option("--type", type, "Root system family: A B C D E F G BC");
    auto r = sub->add_option("--rank", rank, "Rank")->check(CLI::Range(1, 8));
    if (required) {
      t->required();
      r->required();
    }
  };
  auto add_mult = [&](CLI::App* sub) {
    sub->add_option("--m", mf.m, "Multiplicity for simply laced systems (sets m1 and m2)");
    sub->add_option("--m1", mf.m1, "Multiplicity of the long roots, e.g. 3/2");
    sub->add_option("--m2", mf.m2, "Multiplicity of the other roots");
    sub->add_option("--mh", mf.mh, "Multiplicity of the half roots (BC)");
  };

  auto* boundary = app.add_subcommand("boundary", "Distinguished and minuscule boundary points");
  add_type(boundary, false);
  boundary->add_flag("--all", all, "Every type of rank <= 8");
  auto* exponents = app.add_subcommand("exponents", "Leading characters, exponents and degeneracy per point");
  add_type(exponents, true);
  exponents->add_option("--eta", eta, "Restrict to one boundary point, e.g. w4/2");
  add_mult(exponents);
  auto* decay = app.add_subcommand("decay", "Decay profile of the spherical functions");
  add_type(decay, true);
  add_mult(decay);
  decay->add_option("--period", periods, "Period r_alpha per simple root, or one value for all");
  decay->add_option("--constant", constants, "Constant c_alpha per simple root, or one value for all");
  auto* complex = app.add_subcommand("complex-check", "Exponent at m = 2 against the level-one root count");
  add_type(complex, false);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "rootsys weylchar tables complex matrix hypergeom maass stirling all")
      ->required()
      ->check(CLI::IsMember({"rootsys", "weylchar", "tables", "complex", "matrix", "hypergeom", "maass", "stirling",
                             "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  ReportDocument doc;
  Format fmt = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Human;
  if (json && tsv) {
    err << "error: --json and --tsv are exclusive\n";
    return 2;
  }
  if (json) fmt = Format::Json;
  if (tsv) fmt = Format::Tsv;

  auto start = std::chrono::steady_clock::now();
  try {
    auto* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    bool typed = !type.empty();
    if (typed != rank.has_value()) throw UsageError(name + ": --type and --rank go together");
    if (name == "boundary") {
      if (all == typed) throw UsageError("boundary: give either --type and --rank, or --all");
      doc = boundary_command(type, rank, all);
    } else if (name == "exponents") {
      doc = exponents_command(type, *rank, eta, mf);
    } else if (name == "decay") {
      doc = decay_command(type, *rank, mf, periods, constants);
    } else if (name == "complex-check") {
      doc = complex_check_command(typed ? std::optional<std::string>(type) : std::nullopt, rank);
    } else {
      unsigned s = seed ? *seed : seed_from_env();
      doc = verify_command(suite, s);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (int i = 1; i < argc; ++i) doc.argv.emplace_back(argv[i]);
  if (timing)
    doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (const auto& w : doc.warnings) err << "warning: " << w << "\n";
  out << emit(doc, fmt);
  return doc.any_failure() ? 1 : 0;
}

}  // namespace crown::cli
