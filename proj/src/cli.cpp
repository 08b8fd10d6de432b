#include "slipflow/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slipflow/bounds.hpp"
#include "slipflow/errors.hpp"
#include "slipflow/fd_oracle.hpp"
#include "slipflow/geometry.hpp"
#include "slipflow/pinf_solver.hpp"
#include "slipflow/rectangle.hpp"
#include "slipflow/reference_tables.hpp"
#include "slipflow/robin_solver.hpp"

namespace slipflow {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Rescale rescale_ellipse(double a, double b) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("ellipse semi-axes must be positive and finite");
  if (a < b) std::swap(a, b);
  Rescale r;
  r.s = 1.0 / std::sqrt(a * b);
  r.aspect = std::sqrt(a / b);
  r.flow_factor = (a * b) * (a * b);
  return r;
}

namespace {

constexpr double kPi = std::numbers::pi;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr Method kAllMethods[] = {
    Method::FOURIER, Method::QUAD_VARL, Method::R_BOUND, Method::RA_BOUND,
    Method::KM93_LB, Method::UPPER_U, Method::UPPER_ISO, Method::SMALL_BETA,
    Method::LARGE_BETA, Method::NEAR_CIRC, Method::FD};

// Truncation used when --nmax is absent: thin ellipses need more modes.
int auto_truncation(const EllipseGeom& g) {
  // Modes decay roughly like exp(-4 n eta0) once n eta0 passes 1.
  if (g.is_circle) return kDefaultTruncation;
  double n = std::ceil(8.0 / g.eta0);
  return static_cast<int>(std::clamp(n, double(kDefaultTruncation), 1024.0));
}

std::vector<Method> parse_methods(const std::string& name) {
  std::vector<Method> out;
  if (name == "all") {
    // the FD oracle is expensive and only runs when named
    for (Method m : kAllMethods)
      if (m != Method::FD) out.push_back(m);
    return out;
  }
  for (Method m : kAllMethods)
    if (method_name(m) == name) return {m};
  throw UsageError("unknown method '" + name + "'");
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    double v;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw UsageError(std::string("cannot parse ") + what + " value '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// lo:hi:count, logarithmically spaced
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(parse_list(tok, "range").at(0));
  if (parts.size() != 3 || parts[2] < 1 || !(parts[0] > 0.0) || !(parts[1] >= parts[0]))
    throw UsageError("--beta-range expects lo:hi:count with 0 < lo <= hi");
  int n = static_cast<int>(parts[2]);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out.push_back(parts[0] * std::pow(parts[1] / parts[0], t));
  }
  return out;
}

struct Row {
  double a = 0.0, b = 0.0, beta = 0.0;
  Method method = Method::FOURIER;
  double value = 0.0;
  BoundKind kind = BoundKind::EXACT_SERIES;
  std::optional<double> error;
};

struct EllipseContext {
  Rescale rs;
  EllipseGeom g;
  MomentSet m;
  PinfSolution pinf;
  double Q0 = 0.0, Q1 = 0.0;
  int N = kDefaultTruncation;
};

EllipseContext make_ellipse_context(double a, double b, int nmax) {
  EllipseContext c;
  c.rs = rescale_ellipse(a, b);
  c.g = ellipse_from_aspect(c.rs.aspect);
  c.m = moment_set(c.g);
  c.pinf = solve_pinf(c.g);
  c.Q0 = q0_ellipse(c.g);
  c.Q1 = q1_ellipse(c.g);
  c.N = nmax > 0 ? nmax : auto_truncation(c.g);
  return c;
}

std::optional<Row> eval_ellipse(const EllipseContext& c, double a, double b, double beta,
                                Method method) {
  const double bn = beta * c.rs.s;
  const double P = c.m.P;
  Row r{a, b, beta, method, 0.0, BoundKind::LOWER, std::nullopt};
  switch (method) {
    case Method::FOURIER: {
      RobinSolution sol = solve(c.g, bn, c.N);
      r.value = flow_rate(sol);
      r.kind = BoundKind::EXACT_SERIES;
      r.error = sol.residual_norm / (c.rs.s * c.rs.s);
      break;
    }
    case Method::QUAD_VARL:
      r.value = quad_varl_lb(c.m, bn).J;
      break;
    case Method::R_BOUND:
      r.value = r_bound(kPi, P, c.Q0, c.pinf.sigma_inf, c.pinf.sigma_1, bn).value;
      break;
    case Method::RA_BOUND:
      r.value = ra_bound(c.g, c.m, bn).value;
      break;
    case Method::KM93_LB:
      r.value = km93_lower(kPi, P, c.Q0, bn).value;
      break;
    case Method::UPPER_U:
      r.value = upper_bounds(c.g, bn, c.pinf.sigma_inf).U;
      r.kind = BoundKind::UPPER;
      break;
    case Method::UPPER_ISO:
      r.value = upper_bounds(c.g, bn, c.pinf.sigma_inf).Q_iso;
      r.kind = BoundKind::UPPER;
      break;
    case Method::SMALL_BETA:
      r.value = q_small_beta(c.g, bn).value;
      r.kind = BoundKind::ASYMPTOTIC;
      break;
    case Method::LARGE_BETA:
      if (!(bn > 0.0)) return std::nullopt;
      r.value = q_large_beta(c.g, bn, c.pinf.sigma_inf, c.pinf.sigma_1).value;
      r.kind = BoundKind::ASYMPTOTIC;
      break;
    case Method::NEAR_CIRC:
      r.value = q_near_circular(c.g.e, bn).value;
      r.kind = BoundKind::ASYMPTOTIC;
      break;
    case Method::FD: {
      if (c.g.is_circle) {
        r.value = kPi * (1.0 + 4.0 * bn) / 8.0;
        r.kind = BoundKind::EXACT_SERIES;
        break;
      }
      FdResult fd = fd_solve_ellipse(c.g, bn);
      r.value = fd.Q;
      r.kind = BoundKind::EXACT_SERIES;
      r.error = fd.error_estimate * c.rs.flow_factor;
      break;
    }
  }
  r.value *= c.rs.flow_factor;
  return r;
}

std::optional<Row> eval_rect(const RectGeom& g, double beta, Method method) {
  const double A = 4.0 * g.a * g.b, P = 4.0 * (g.a + g.b);
  Row r{g.a, g.b, beta, method, 0.0, BoundKind::LOWER, std::nullopt};
  switch (method) {
    case Method::R_BOUND:
      r.value = r_bound_rect(g, beta).value;
      break;
    case Method::KM93_LB:
      r.value = km93_lower(A, P, q0_rect(g).value, beta).value;
      break;
    case Method::QUAD_VARL:
      r.value = quad_lb_rect(g, beta).value;
      break;
    case Method::UPPER_U:
      r.value = beta * A * A / P + sigma_rect(g).sigma_inf;
      r.kind = BoundKind::UPPER;
      break;
    case Method::LARGE_BETA: {
      if (!(beta > 0.0)) return std::nullopt;
      RectSigma s = sigma_rect(g);
      r.value = beta * A * A / P + s.sigma_inf + s.sigma_1 / beta;
      r.kind = BoundKind::ASYMPTOTIC;
      break;
    }
    case Method::FD: {
      FdResult fd = fd_solve_rect(g, beta);
      r.value = fd.Q;
      r.kind = BoundKind::EXACT_SERIES;
      r.error = fd.error_estimate;
      break;
    }
    default:
      return std::nullopt;
  }
  return r;
}

struct Spec {
  std::string shape = "ellipse";
  std::string a_text, b_text, beta_text, beta_range;
  std::string method = "all";
  int nmax = 0;
  std::string format = "table";
};

std::vector<Row> run_rows(const Spec& sp) {
  if (sp.shape != "ellipse" && sp.shape != "rect")
    throw UsageError("--shape must be ellipse or rect");
  std::vector<double> as = parse_list(sp.a_text, "--a");
  if (as.empty()) throw UsageError("--a is required");
  std::vector<double> bs = parse_list(sp.b_text, "--b");
  if (bs.size() > 1) throw UsageError("--b takes a single value");
  std::vector<double> betas =
      sp.beta_range.empty() ? parse_list(sp.beta_text, "--beta") : parse_range(sp.beta_range);
  if (betas.empty()) throw UsageError("no beta values given");
  for (double bt : betas)
    if (!(bt >= 0.0) || !std::isfinite(bt)) throw UsageError("beta must be finite and >= 0");
  std::vector<Method> methods = parse_methods(sp.method);
  const bool explicit_method = sp.method != "all";
  std::vector<Row> rows;
  for (double a : as) {
    if (!(a > 0.0)) throw UsageError("--a must be positive");
    double b = bs.empty() ? 1.0 / a : bs[0];
    if (sp.shape == "ellipse") {
      EllipseContext ctx = make_ellipse_context(a, b, sp.nmax);
      for (double bt : betas)
        for (Method m : methods)
          if (auto r = eval_ellipse(ctx, a, b, bt, m)) rows.push_back(*r);
    } else {
      RectGeom g = make_rect(a, b);
      for (double bt : betas)
        for (Method m : methods) {
          auto r = eval_rect(g, bt, m);
          if (!r && explicit_method && m != Method::LARGE_BETA)
            throw UsageError("method '" + std::string(method_name(m)) +
                             "' is not available for rectangles");
          if (r) rows.push_back(*r);
        }
    }
  }
  return rows;
}

void print_rows(const std::vector<Row>& rows, const std::string& format, bool with_b_error,
                std::ostream& out) {
  std::vector<std::string> keys = with_b_error
      ? std::vector<std::string>{"a", "b", "beta", "method", "value", "kind", "error"}
      : std::vector<std::string>{"a", "beta", "method", "value", "kind"};
  auto cells = [&](const Row& r) {
    std::map<std::string, std::string> c{
        {"a", format_double(r.a)},
        {"b", format_double(r.b)},
        {"beta", format_double(r.beta)},
        {"method", std::string(method_name(r.method))},
        {"value", format_double(r.value)},
        {"kind", std::string(kind_name(r.kind))},
        {"error", r.error ? format_double(*r.error) : ""}};
    std::vector<std::string> v;
    for (const auto& k : keys) v.push_back(c[k]);
    return v;
  };
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& r : rows) {
      nlohmann::ordered_json o;
      for (const auto& k : keys) {
        if (k == "method") o[k] = std::string(method_name(r.method));
        else if (k == "kind") o[k] = std::string(kind_name(r.kind));
        else if (k == "a") o[k] = r.a;
        else if (k == "b") o[k] = r.b;
        else if (k == "beta") o[k] = r.beta;
        else if (k == "value") o[k] = r.value;
        else if (k == "error") o[k] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json();
      }
      arr.push_back(o);
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << "\n";
    for (const Row& r : rows) {
      auto v = cells(r);
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
      out << "\n";
    }
    return;
  }
  std::vector<std::vector<std::string>> grid{keys};
  for (const Row& r : rows) grid.push_back(cells(r));
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : grid)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i)
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << line[i];
    out << "\n";
  }
}

// ---- table ----------------------------------------------------------------

struct TableOut {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
  int excluded = 0;
};

TableOut regenerate(const std::string& id, int nmax) {
  TableOut t;
  std::map<double, EllipseContext> ctx;
  auto context = [&](double a) -> const EllipseContext& {
    auto it = ctx.find(a);
    if (it == ctx.end()) it = ctx.emplace(a, make_ellipse_context(a, 1.0 / a, nmax)).first;
    return it->second;
  };
  auto fourier = [&](const EllipseContext& c, double beta) {
    return flow_rate(solve(c.g, beta, c.N));
  };
  double dA = 0.0, dV = 0.0, dF = 0.0;
  if (id == "wang") {
    t.header = {"lambda", "c", "A", "A_ref", "V", "V_ref", "F", "F_ref", "ritz"};
    for (const RitzRow& r : ritz_table()) {
      double a = 1.0 / std::sqrt(r.c), beta = r.lambda / std::sqrt(r.c), f = r.c * r.c;
      const EllipseContext& c = context(a);
      double A = f * (beta < 1.0 ? q_small_beta(c.g, beta).value
                                     : q_large_beta_dominant(c.g, beta).value);
      double V = f * quad_varl_lb(c.m, beta).J;
      double F = f * fourier(c, beta);
      t.rows.push_back({r.lambda, r.c, A, r.A, V, r.V, F, r.F, r.ritz});
      dA = std::max(dA, std::abs(A - r.A));
      dV = std::max(dV, std::abs(V - r.V));
      dF = std::max(dF, std::abs(F - r.F));
    }
  } else {
    std::span<const TableRow> ref;
    if (id == "nearcirc") ref = near_circular_table();
    else if (id == "small") ref = small_beta_table();
    else if (id == "large") ref = large_beta_table();
    else throw UsageError("unknown table '" + id + "' (nearcirc, small, large, wang)");
    t.header = {"a", "beta", "A", "A_ref", "V", "V_ref", "F", "F_ref"};
    for (const TableRow& r : ref) {
      const EllipseContext& c = context(r.a);
      double A = id == "nearcirc" ? q_near_circular(c.g.e, r.beta).value
                 : id == "small"  ? q_small_beta(c.g, r.beta).value
                                  : q_large_beta_dominant(c.g, r.beta).value;
      double V = quad_varl_lb(c.m, r.beta).J;
      double F = fourier(c, r.beta);
      t.rows.push_back({r.a, r.beta, A, r.A, V, r.V, F, r.F});
      dA = std::max(dA, std::abs(A - r.A));
      dV = std::max(dV, std::abs(V - r.V));
      if (f_entry_unreliable(r.a, r.beta)) ++t.excluded;
      else dF = std::max(dF, std::abs(F - r.F));
    }
  }
  t.summary = {{"max_abs_dA", dA}, {"max_abs_dV", dV}, {"max_abs_dF", dF}};
  return t;
}

void print_table(const TableOut& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json o;
      for (std::size_t i = 0; i < row.size(); ++i) o[t.header[i]] = row[i];
      j["rows"].push_back(o);
    }
    for (const auto& [k, v] : t.summary) j["summary"][k] = v;
    j["summary"]["excluded_F_entries"] = t.excluded;
    out << j.dump(2) << "\n";
    return;
  }
  const std::string sep = format == "csv" ? "," : "  ";
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? sep : "") << t.header[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? sep : "") << format_double(row[i]);
    out << "\n";
  }
  for (const auto& [k, v] : t.summary) out << "# " << k << " = " << format_double(v) << "\n";
  out << "# excluded_F_entries = " << t.excluded << "\n";
}

// ---- field ----------------------------------------------------------------

std::pair<int, int> parse_grid(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("--grid expects NXxNY, e.g. 101x51");
  int nx = 0, ny = 0;
  auto r1 = std::from_chars(text.data(), text.data() + x, nx);
  auto r2 = std::from_chars(text.data() + x + 1, text.data() + text.size(), ny);
  if (r1.ec != std::errc() || r2.ec != std::errc() || nx < 2 || ny < 2)
    throw UsageError("--grid expects NXxNY with both at least 2");
  return {nx, ny};
}

void run_field(const Spec& sp, const std::string& grid_text, bool uinf, std::ostream& out) {
  auto [nx, ny] = parse_grid(grid_text);
  std::vector<double> as = parse_list(sp.a_text, "--a");
  std::vector<double> bs = parse_list(sp.b_text, "--b");
  std::vector<double> betas = parse_list(sp.beta_text, "--beta");
  if (as.size() != 1) throw UsageError("field needs exactly one --a");
  double a = as[0];
  double b = bs.empty() ? 1.0 / a : bs.at(0);
  if (!uinf && betas.size() != 1) throw UsageError("field needs exactly one --beta");
  double beta = uinf ? 0.0 : betas[0];
  if (beta < 0.0) throw UsageError("beta must be >= 0");
  std::function<double(double, double)> u;
  std::function<bool(double, double)> inside;
  if (sp.shape == "rect") {
    if (!uinf) throw UsageError("rectangle field export supports --uinf only");
    RectGeom g = make_rect(a, b);
    u = [g](double x, double y) { return uinf_rect(g, x, y); };
    inside = [](double, double) { return true; };
  } else if (sp.shape == "ellipse") {
    Rescale rs = rescale_ellipse(a, b);
    EllipseGeom g = ellipse_from_aspect(rs.aspect);
    bool swapped = a < b;
    auto to_norm = [rs, swapped](double x, double y) {
      return swapped ? std::pair{y * rs.s, x * rs.s} : std::pair{x * rs.s, y * rs.s};
    };
    inside = [a, b](double x, double y) { return x * x / (a * a) + y * y / (b * b) <= 1.0 + 1e-12; };
    double back = 1.0 / (rs.s * rs.s);
    if (uinf) {
      auto sol = std::make_shared<PinfSolution>(solve_pinf(g));
      u = [sol, to_norm, back](double x, double y) {
        auto [xn, yn] = to_norm(x, y);
        return eval_uinf_xy(*sol, xn, yn) * back;
      };
    } else {
      int N = sp.nmax > 0 ? sp.nmax : auto_truncation(g);
      auto sol = std::make_shared<RobinSolution>(solve(g, beta * rs.s, N));
      u = [sol, to_norm, back](double x, double y) {
        auto [xn, yn] = to_norm(x, y);
        return eval_u_xy(*sol, xn, yn) * back;
      };
    }
  } else {
    throw UsageError("--shape must be ellipse or rect");
  }
  out << "x,y,u\n";
  for (int j = 0; j < ny; ++j) {
    double y = -b + 2.0 * b * j / (ny - 1);
    for (int i = 0; i < nx; ++i) {
      double x = -a + 2.0 * a * i / (nx - 1);
      if (!inside(x, y)) continue;
      out << format_double(x) << "," << format_double(y) << "," << format_double(u(x, y)) << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"slipflow: Robin-boundary Poisson flow rates in elliptic and rectangular ducts"};
  app.require_subcommand(1);
  Spec sp;
  std::string table_id, grid_text = "101x51";
  bool uinf = false;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--shape", sp.shape, "ellipse or rect")->default_str("ellipse");
    c->add_option("--a", sp.a_text, "semi-axis / half-width (comma list allowed)");
    c->add_option("--b", sp.b_text, "semi-axis / half-height (default 1/a)");
    c->add_option("--beta", sp.beta_text, "slip length(s), comma separated");
    c->add_option("--nmax", sp.nmax, "Fourier truncation N");
  };
  CLI::App* q = app.add_subcommand("q", "flow rate by one or all methods");
  add_common(q);
  q->add_option("--method", sp.method, "method name or all");
  q->add_option("--format", sp.format, "table, csv or json");
  CLI::App* table = app.add_subcommand("table", "regenerate a published table and report deviations");
  table->add_option("id", table_id, "nearcirc, small, large or wang")->required();
  table->add_option("--nmax", sp.nmax, "Fourier truncation N");
  table->add_option("--format", sp.format, "table, csv or json");
  CLI::App* field = app.add_subcommand("field", "export u (or u_inf) on a grid as CSV");
  add_common(field);
  field->add_option("--grid", grid_text, "NXxNY sample grid");
  field->add_flag("--uinf", uinf, "export the beta -> infinity profile u_inf");
  CLI::App* sweep = app.add_subcommand("sweep", "sweep a and beta, CSV or JSON rows");
  add_common(sweep);
  sweep->add_option("--beta-range", sp.beta_range, "lo:hi:count, log spaced");
  sweep->add_option("--method", sp.method, "method name or all");
  sweep->add_option("--format", sp.format, "csv or json")->default_str("csv");

  std::vector<std::string> argv_store{"slipflow"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sweep->parsed() && sp.format == "table") sp.format = "csv";
    if (sp.format != "table" && sp.format != "csv" && sp.format != "json")
      throw UsageError("--format must be table, csv or json");
    if (q->parsed()) {
      print_rows(run_rows(sp), sp.format, true, out);
    } else if (sweep->parsed()) {
      print_rows(run_rows(sp), sp.format, false, out);
    } else if (table->parsed()) {
      print_table(regenerate(table_id, sp.nmax), sp.format, out);
    } else if (field->parsed()) {
      run_field(sp, grid_text, uinf, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace slipflow
