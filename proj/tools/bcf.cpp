// bcf: command-line front end for building and evaluating branched
// continued fractions from truncated double power series.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcf/bcf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConditions = 2;

// Condition report failures carry their own exit code.
struct ConditionFailure {
  bcf::ConditionReport report;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<bcf::Rational> parse_point(const std::string& text) {
  std::vector<bcf::Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(bcf::parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty point");
  return out;
}

std::string short_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", x);
  return buf;
}

void print_report(const bcf::ConditionReport& report, std::ostream& os) {
  for (const auto& v : report.violations) os << v.str() << "\n";
}

void print_runs(const std::vector<bcf::RunTrace>& runs, std::ostream& os) {
  for (const auto& run : runs) {
    os << "run at " << run.origin << " along z" << run.direction + 1 << "\n  c:";
    for (const auto& c : run.coefficients) os << " " << bcf::to_string(c);
    os << "\n";
    for (int n = 0; n <= run.trace.max_index(); ++n) {
      os << "  n=" << n << " sigma=" << bcf::to_string(run.trace.sigma(n)) << " tau=" << bcf::to_string(run.trace.tau(n))
         << " B=";
      for (int r = 0; r <= n + 1; ++r) os << (r ? "," : "") << bcf::to_string(run.trace.B(n + 1, r));
      os << "\n";
    }
  }
}

int cmd_build(const std::string& series_path, int depth, const std::string& out, bool trace) {
  const auto L = bcf::series_from_json(bcf::read_file(series_path));
  const auto outcome = bcf::build_afraction(L, depth);
  if (trace) print_runs(outcome.runs, std::cerr);
  if (!outcome.ok()) throw ConditionFailure{outcome.report()};
  bcf::write_file(out, bcf::fraction_to_json(outcome.fraction()));
  std::cout << "built " << outcome.fraction().size() << " nodes through level " << depth << "\n";
  return kExitOk;
}

int cmd_check(const std::string& series_path, int depth) {
  const auto L = bcf::series_from_json(bcf::read_file(series_path));
  const auto report = bcf::check_conditions(L, depth);
  if (!report.ok()) throw ConditionFailure{report};
  std::cout << "conditions hold through level " << depth << "\n";
  return kExitOk;
}

template <class T>
void print_eval(const bcf::EvalOutcome<T>& v) {
  if (!v) {
    std::cout << "pole at branch " << v.pole().branch << "\n";
    return;
  }
  if constexpr (std::is_same_v<T, bcf::Rational>) {
    std::cout << bcf::to_string(v.value()) << "\n" << bcf::sci(bcf::to_double(v.value())) << "\n";
  } else {
    std::cout << bcf::sci(v.value()) << "\n";
  }
}

int cmd_eval(const std::string& path, const std::string& point, int n, const std::string& form_opt, bool exact) {
  bcf::FractionForm stored;
  const auto f = bcf::fraction_from_json(bcf::read_file(path), &stored);
  bcf::FractionForm form = stored;
  if (form_opt == "A") form = bcf::FractionForm::A;
  if (form_opt == "J") form = bcf::FractionForm::J;
  const auto x = parse_point(point);
  if (exact) {
    if (form == bcf::FractionForm::A)
      print_eval(bcf::eval_approximant<bcf::Rational>(f, x, n));
    else
      print_eval(bcf::eval_j_approximant<bcf::Rational>(bcf::to_jfraction(f), x, n));
    return kExitOk;
  }
  std::vector<double> xd;
  for (const auto& r : x) xd.push_back(bcf::to_double(r));
  if (form == bcf::FractionForm::A)
    print_eval(bcf::eval_approximant<double>(f, xd, n));
  else
    print_eval(bcf::eval_j_approximant<double>(bcf::to_jfraction(f), xd, n));
  return kExitOk;
}

int cmd_expand(const std::string& path, int n, int degree, const std::string& out) {
  const auto f = bcf::fraction_from_json(bcf::read_file(path));
  bcf::write_file(out, bcf::series_to_json(bcf::expand_approximant(f, n, degree)));
  return kExitOk;
}

int cmd_example(const std::string& name, int degree, const std::string& out) {
  bcf::write_file(out, bcf::series_to_json(bcf::example_series(bcf::parse_example(name), degree)));
  return kExitOk;
}

std::vector<bcf::Point2> read_points(const std::string& path) {
  std::vector<bcf::Point2> pts;
  std::istringstream in(bcf::read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line)
      if (ch == ' ' || ch == '\t' || ch == ';') ch = ',';
    std::vector<double> v;
    for (const auto& item : split(line, ','))
      if (!item.empty()) v.push_back(bcf::to_double(bcf::parse_rational(item)));
    if (v.size() != 2) throw std::invalid_argument("points file lines need two coordinates: '" + line + "'");
    pts.push_back({v[0], v[1]});
  }
  return pts;
}

int cmd_table(const std::string& name, int n, const std::string& points_path) {
  const auto ex = bcf::parse_example(name);
  const auto points = points_path.empty() ? bcf::default_table_points(ex) : read_points(points_path);
  const auto rows = bcf::error_table(ex, points, n);
  std::cout << "# example " << bcf::example_name(ex) << ", n = " << n << ", partial sum through total degree "
            << bcf::partial_sum_degree(ex, n) << ", approximant in " << (ex == bcf::Example::Arctan ? "A" : "J")
            << "-form\n";
  std::cout << "# x1 x2 reference partial_sum_rel_err approximant_rel_err | reference partial_sum approximant\n";
  for (const auto& r : rows) {
    std::cout << r.point[0] << " " << r.point[1] << " " << bcf::sci(r.reference) << " " << bcf::sci(r.partial_sum_rel_err)
              << " " << (r.approximant_rel_err ? bcf::sci(*r.approximant_rel_err) : std::string("pole")) << " | "
              << short_sci(r.reference) << " " << short_sci(r.partial_sum_rel_err) << " "
              << (r.approximant_rel_err ? short_sci(*r.approximant_rel_err) : "pole@" + r.pole->str()) << "\n";
  }
  return kExitOk;
}

int cmd_grid(const std::string& name, const std::string& orders_text, const std::string& region_text, int res,
             const std::string& out_dir) {
  const auto ex = bcf::parse_example(name);
  std::vector<int> orders;
  for (const auto& item : split(orders_text, ',')) orders.push_back(std::stoi(item));
  const auto r = split(region_text, ',');
  if (r.size() != 4) throw std::invalid_argument("--region needs x0,x1,y0,y1");
  const std::array<double, 4> region{std::stod(r[0]), std::stod(r[1]), std::stod(r[2]), std::stod(r[3])};
  const auto rows = bcf::grid_values(ex, orders, region, res);
  std::filesystem::create_directories(out_dir);
  const std::string stem = (std::filesystem::path(out_dir) / bcf::example_name(ex)).string();
  const char* c1 = ex == bcf::Example::Arctan ? "z1" : "w1";
  const char* c2 = ex == bcf::Example::Arctan ? "z2" : "w2";
  auto cell = [](const std::optional<double>& v) { return v ? bcf::sci(*v) : std::string("pole"); };

  std::ostringstream values;
  values << "# " << c1 << " " << c2;
  for (int n : orders) values << " f" << n;
  values << " ref\n";
  for (const auto& row : rows) {
    values << bcf::sci(row.point[0]) << " " << bcf::sci(row.point[1]);
    for (const auto& v : row.values) values << " " << cell(v);
    values << " " << bcf::sci(row.reference) << "\n";
  }
  bcf::write_file(stem + "_values.dat", values.str());

  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::ostringstream err;
    err << "# " << c1 << " " << c2 << " abs_err_f" << orders[i] << "\n";
    for (const auto& row : rows) {
      const auto& v = row.values[i];
      err << bcf::sci(row.point[0]) << " " << bcf::sci(row.point[1]) << " "
          << cell(v ? std::optional<double>(std::fabs(*v - row.reference)) : std::nullopt) << "\n";
    }
    bcf::write_file(stem + "_error_f" + std::to_string(orders[i]) + ".dat", err.str());
  }
  std::cout << "wrote " << rows.size() << " grid rows to " << out_dir << "\n";
  return kExitOk;
}

int cmd_fork(const std::string& path, const std::string& point, int nmax) {
  const auto f = bcf::fraction_from_json(bcf::read_file(path));
  std::vector<double> z;
  for (const auto& r : parse_point(point)) z.push_back(bcf::to_double(r));
  const auto rep = bcf::fork_check(f, z, nmax);
  for (std::size_t i = 0; i < rep.values.size(); ++i) std::cout << "f" << i + 1 << " " << bcf::sci(rep.values[i]) << "\n";
  std::cout << "fork property " << bcf::fork_status_name(rep.status);
  if (rep.pole) std::cout << " (pole of f" << rep.pole_order << " at branch " << rep.pole->branch << ")";
  std::cout << "\n";
  for (const auto& v : rep.violations)
    std::cout << "  f" << v.lower << " exceeds f" << v.upper << " by " << bcf::sci(v.excess) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branched continued fractions from double power series"};
  app.require_subcommand(1);

  std::string series, out, fraction, point, form, name, points, orders, region;
  int depth = 0, n = 0, degree = 0, res = 0, nmax = 0;
  bool trace = false, exact = false;
  int rc = kExitOk;

  auto* build = app.add_subcommand("build", "Build the A-fraction of a series");
  build->add_option("--series", series, "series file")->required();
  build->add_option("--depth", depth, "number of levels")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--out", out, "fraction file")->required();
  build->add_flag("--trace", trace, "print the Gragg tables of every run to stderr");

  auto* check = app.add_subcommand("check", "Check the existence conditions for a series");
  check->add_option("--series", series, "series file")->required();
  check->add_option("--depth", depth, "number of levels")->required()->check(CLI::NonNegativeNumber);

  auto* eval = app.add_subcommand("eval", "Evaluate an approximant at a point");
  eval->add_option("--fraction", fraction, "fraction file")->required();
  eval->add_option("--point", point, "comma-separated coordinates")->required();
  eval->add_option("--n", n, "approximant order")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--form", form, "A (point is z) or J (point is w); defaults to the file's form")
      ->check(CLI::IsMember({"A", "J"}));
  eval->add_flag("--exact", exact, "evaluate in exact rational arithmetic");

  auto* expand = app.add_subcommand("expand", "Expand an approximant into a series");
  expand->add_option("--fraction", fraction, "fraction file")->required();
  expand->add_option("--n", n, "approximant order")->required()->check(CLI::NonNegativeNumber);
  expand->add_option("--degree", degree, "total degree cap")->required()->check(CLI::NonNegativeNumber);
  expand->add_option("--out", out, "series file")->required();

  auto* example = app.add_subcommand("example", "Write a built-in example series");
  example->add_option("--name", name, "arctan2d or trigamma2d")->required();
  example->add_option("--degree", degree, "total degree cap")->required()->check(CLI::PositiveNumber);
  example->add_option("--out", out, "series file")->required();

  auto* table = app.add_subcommand("table", "Relative error table of an example");
  table->add_option("--example", name, "arctan2d or trigamma2d")->required();
  table->add_option("--n", n, "approximant order")->required()->check(CLI::PositiveNumber);
  table->add_option("--points", points, "file with one x1,x2 pair per line");

  auto* grid = app.add_subcommand("grid", "Grid data of approximants and reference values");
  grid->add_option("--example", name, "arctan2d or trigamma2d")->required();
  grid->add_option("--n", orders, "comma-separated approximant orders")->required();
  grid->add_option("--region", region, "x0,x1,y0,y1")->required();
  grid->add_option("--res", res, "points per axis")->required()->check(CLI::PositiveNumber);
  grid->add_option("--out", out, "output directory")->required();

  auto* fork = app.add_subcommand("fork", "Check the fork property at a point");
  fork->add_option("--fraction", fraction, "fraction file")->required();
  fork->add_option("--point", point, "comma-separated coordinates")->required();
  fork->add_option("--nmax", nmax, "largest approximant order")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) rc = cmd_build(series, depth, out, trace);
    if (*check) rc = cmd_check(series, depth);
    if (*eval) rc = cmd_eval(fraction, point, n, form, exact);
    if (*expand) rc = cmd_expand(fraction, n, degree, out);
    if (*example) rc = cmd_example(name, degree, out);
    if (*table) rc = cmd_table(name, n, points);
    if (*grid) rc = cmd_grid(name, orders, region, res, out);
    if (*fork) rc = cmd_fork(fraction, point, nmax);
  } catch (const ConditionFailure& f) {
    std::cerr << "conditions fail:\n";
    print_report(f.report, std::cerr);
    return kExitConditions;
  } catch (const bcf::ConstructionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConditions;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
