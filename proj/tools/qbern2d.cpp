// qbern2d: evaluate modified q-Bernstein bases and operators, emit tables,
// and run the identity-verification suites.
//
// Exit codes: 0 success, 1 runtime or verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qbern2d/qbern2d.hpp"
#include "suites.hpp"
#include "table.hpp"

namespace {

using namespace qbern2d;
using namespace qbern2d::cli;

/// Bad flags or flag combinations; exits with status 2.
struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::optional<std::string> q, x, y, qx, qy;
  std::string mode = "auto";
  std::optional<int> k, j, n, m;
  std::optional<int> nx, ny;
  bool classical = false;
  std::string format = "csv";
  std::optional<std::string> output;
  // verify
  std::string suite = "all";
  std::optional<unsigned> threads;
  std::optional<double> tolerance;
  // series / table
  std::string kind;
  int order = 12;
  int max_n = 6;
  int max_k = 6;
  // contour
  int nodes = 128;
  double radius = 1.0;
  // interp
  double s_re = 1.0;
  double s_im = 0.0;
  int deriv = 0;
  bool mellin = false;
  // operator
  std::string function = "one";
};

// ---------------------------------------------------------------------------
// Numeric flags and mode

bool is_rational_text(const std::string& s) { return !looks_decimal(s); }

struct NumericFlag {
  const char* name;
  const std::optional<std::string>* value;
};

std::vector<NumericFlag> numeric_flags(const RunConfig& c) {
  return {{"--q", &c.q}, {"--x", &c.x}, {"--y", &c.y}, {"--qx", &c.qx}, {"--qy", &c.qy}};
}

/// Exact unless a decimal literal appears or --mode float was asked for.
bool resolve_exact(const RunConfig& c) {
  if (c.mode != "auto" && c.mode != "exact" && c.mode != "float") throw UsageError("--mode: expected exact or float");
  if (c.mode == "float") return false;
  for (const auto& f : numeric_flags(c)) {
    if (!*f.value || is_rational_text(**f.value)) continue;
    if (c.mode == "exact") {
      throw UsageError(std::string(f.name) + ": exact mode needs a rational value, got '" + **f.value + "'");
    }
    return false;
  }
  return true;
}

template <Field T>
T parse_flag(const std::string& text, const char* flag) {
  try {
    if constexpr (is_exact_v<T>) {
      return parse_rational(text);
    } else {
      if (is_rational_text(text)) return to_double(parse_rational(text));
      return parse_double(text);
    }
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

template <Field T>
QContext<T> make_context(const RunConfig& c) {
  if (!c.q) throw UsageError("--q is required unless --classical is given");
  try {
    return QContext<T>(parse_flag<T>(*c.q, "--q"));
  } catch (const DomainError& e) {
    throw UsageError(std::string("--q: ") + e.what());
  }
}

template <Field T>
QPoint<T> make_axis(const RunConfig& c, const std::optional<std::string>& plain, const std::optional<std::string>& power,
                    const char* plain_flag, const char* power_flag, const QContext<T>& ctx) {
  (void)c;
  if (plain && power) throw UsageError(std::string(plain_flag) + " and " + power_flag + " are mutually exclusive");
  try {
    if (power) {
      const T v = parse_flag<T>(*power, power_flag);
      if constexpr (is_exact_v<T>) return make_qpoint_exact(v, ctx);
      else return make_qpoint_from_power(v, ctx);
    }
    if (!plain) throw UsageError(std::string(plain_flag) + " or " + power_flag + " is required");
    const T v = parse_flag<T>(*plain, plain_flag);
    if constexpr (is_exact_v<T>) {
      if (v == 0) return make_qpoint_exact(T(1), ctx);
      if (v == 1) return make_qpoint_exact(ctx.q(), ctx);
      if (v < 0 || v > 1) throw DomainError("point must lie in [0, 1]");
      throw UsageError(std::string(plain_flag) + ": exact mode takes interior points as " + power_flag + " (q^x)");
    } else {
      return make_qpoint(v, ctx);
    }
  } catch (const DomainError& e) {
    throw UsageError(std::string(plain ? plain_flag : power_flag) + ": " + e.what());
  }
}

template <Field T>
EvalPoint2D<T> make_point(const RunConfig& c, const QContext<T>& ctx) {
  return EvalPoint2D<T>(make_axis(c, c.x, c.qx, "--x", "--qx", ctx), make_axis(c, c.y, c.qy, "--y", "--qy", ctx));
}

template <Field T>
T unit_coordinate(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  const T t = parse_flag<T>(*v, flag);
  if (t < 0 || t > 1) throw UsageError(std::string(flag) + ": point must lie in [0, 1]");
  return t;
}

int require_index(const std::optional<int>& v, const char* flag, int min = 0) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  if (*v < min) throw UsageError(std::string(flag) + " must be >= " + std::to_string(min));
  return *v;
}

// ---------------------------------------------------------------------------
// Output

Table new_table(const RunConfig& c, bool exact) {
  Table t;
  t.command = c.command;
  auto put = [&](const char* key, const auto& v) {
    if (v) {
      std::ostringstream os;
      os << *v;
      t.params.emplace_back(key, os.str());
    }
  };
  t.params.emplace_back("mode", exact ? "exact" : "float");
  if (c.classical) t.params.emplace_back("classical", "true");
  put("q", c.q);
  put("x", c.x);
  put("y", c.y);
  put("qx", c.qx);
  put("qy", c.qy);
  put("k", c.k);
  put("j", c.j);
  put("n", c.n);
  put("m", c.m);
  put("nx", c.nx);
  put("ny", c.ny);
  return t;
}

void emit(const RunConfig& c, const Table& t) {
  std::ostringstream os;
  if (c.format == "json") write_json(os, t);
  else write_csv(os, t);
  if (!c.output) {
    std::cout << os.str();
    return;
  }
  std::ofstream f(*c.output, std::ios::binary);
  if (!f) throw Error("cannot open '" + *c.output + "' for writing");
  f << os.str();
  if (!f.flush()) throw Error("write to '" + *c.output + "' failed");
}

// ---------------------------------------------------------------------------
// Commands

template <Field T>
void eval_at(const RunConfig& c, Table& t, const std::vector<BasisIndex>& indices) {
  t.columns = {{"k", ColumnType::integer}, {"j", ColumnType::integer}, {"n", ColumnType::integer},
               {"m", ColumnType::integer}, {"value", ColumnType::scalar}};
  auto row = [&](const BasisIndex& idx, const T& v) {
    t.add_row({std::int64_t(idx.k), std::int64_t(idx.j), std::int64_t(idx.n), std::int64_t(idx.m), Scalar(v)});
  };
  if (c.classical) {
    if (c.q || c.qx || c.qy) throw UsageError("--classical takes --x and --y only");
    const T x = unit_coordinate<T>(c.x, "--x");
    const T y = unit_coordinate<T>(c.y, "--y");
    for (const auto& idx : indices) row(idx, bernstein2_classical(idx, x, y));
    return;
  }
  const auto ctx = make_context<T>(c);
  const auto pt = make_point<T>(c, ctx);
  for (const auto& idx : indices) row(idx, qbernstein2(idx, pt, ctx));
}

/// Basis values over an nx-by-ny grid of points (float or classical), for plots.
template <Field T>
void eval_grid(const RunConfig& c, Table& t, const std::vector<BasisIndex>& indices) {
  const int nx = require_index(c.nx, "--nx", 2), ny = require_index(c.ny, "--ny", 2);
  std::optional<QContext<T>> ctx;
  if (!c.classical) {
    if constexpr (is_exact_v<T>) throw UsageError("--nx/--ny: exact q grids are not supported; use --mode float");
    ctx = make_context<T>(c);
  }
  t.columns = {{"x", ColumnType::scalar}, {"y", ColumnType::scalar}, {"k", ColumnType::integer},
               {"j", ColumnType::integer}, {"value", ColumnType::scalar}};
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy) {
      const T x = T(ix) / T(nx - 1), y = T(iy) / T(ny - 1);
      for (const auto& idx : indices) {
        T v;
        if (ctx) {
          if constexpr (!is_exact_v<T>) v = qbernstein2(idx, EvalPoint2D<T>(make_qpoint(x, *ctx), make_qpoint(y, *ctx)), *ctx);
        } else {
          v = bernstein2_classical(idx, x, y);
        }
        t.add_row({Scalar(x), Scalar(y), std::int64_t(idx.k), std::int64_t(idx.j), Scalar(v)});
      }
    }
}

std::vector<BasisIndex> requested_indices(const RunConfig& c) {
  const int n = require_index(c.n, "--n"), m = require_index(c.m, "--m");
  std::vector<BasisIndex> out;
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= m; ++j) {
      if ((c.k && *c.k != k) || (c.j && *c.j != j)) continue;
      out.emplace_back(k, j, n, m);
    }
  if (out.empty()) throw UsageError("--k/--j: index outside 0..n, 0..m");
  return out;
}

void cmd_eval(const RunConfig& c) {
  const bool exact = resolve_exact(c);
  const auto indices = requested_indices(c);
  Table t = new_table(c, exact);
  const bool grid = c.nx || c.ny;
  if (exact) grid ? eval_grid<Rational>(c, t, indices) : eval_at<Rational>(c, t, indices);
  else grid ? eval_grid<double>(c, t, indices) : eval_at<double>(c, t, indices);
  emit(c, t);
}

template <Field T>
OperandFunction<T> operand(const std::string& name) {
  if (name == "one") return [](const T&, const T&) { return T(1); };
  if (name == "u") return [](const T& u, const T&) { return u; };
  if (name == "v") return [](const T&, const T& v) { return v; };
  if (name == "uv") return [](const T& u, const T& v) { return T(u * v); };
  if (name == "u2v2") return [](const T& u, const T& v) { return T(u * u * v * v); };
  if constexpr (!is_exact_v<T>) {
    if (name == "expcos") return [](const T& u, const T& v) { return T(std::exp(u) * std::cos(v)); };
  }
  throw UsageError("--function: unknown or unavailable in this mode: '" + name + "'");
}

template <Field T>
Table operator_table(const RunConfig& c, bool exact) {
  const int n = require_index(c.n, "--n", 1), m = require_index(c.m, "--m", 1);
  const GridSpec grid{c.nx.value_or(5), c.ny.value_or(5)};
  if (grid.nx < 2 || grid.ny < 2) throw UsageError("--nx/--ny: at least 2");
  const auto f = operand<T>(c.function);
  std::optional<QContext<T>> ctx;
  if (!c.classical) ctx = make_context<T>(c);
  Table t = new_table(c, exact);
  t.params.emplace_back("function", c.function);
  t.columns = {{"ix", ColumnType::integer}, {"iy", ColumnType::integer}, {"x", ColumnType::scalar},
               {"y", ColumnType::scalar}, {"value", ColumnType::scalar}};
  for (const auto& r : operator_grid_table(f, n, m, grid, ctx)) {
    t.add_row({std::int64_t(r.ix), std::int64_t(r.iy), Scalar(r.x), Scalar(r.y), Scalar(r.value)});
  }
  return t;
}

void cmd_operator(const RunConfig& c) {
  const bool exact = resolve_exact(c);
  emit(c, exact ? operator_table<Rational>(c, exact) : operator_table<double>(c, exact));
}

unsigned thread_count(const RunConfig& c) {
  if (c.threads) {
    if (*c.threads == 0) throw UsageError("--threads must be positive");
    return *c.threads;
  }
  if (const char* env = std::getenv("QBERN2D_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw UsageError("QBERN2D_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_verify(const RunConfig& c) {
  std::vector<const Suite*> selected;
  if (c.suite == "all") {
    for (const auto& s : suite_registry()) selected.push_back(&s);
  } else {
    const Suite* s = find_suite(c.suite);
    if (!s) throw UsageError("--suite: unknown suite '" + c.suite + "'");
    selected.push_back(s);
  }
  SuiteRanges ranges;
  ranges.tolerance = c.tolerance;
  const auto reports = run_suites(selected, ranges, thread_count(c));

  Table t;
  t.command = "verify";
  t.params.emplace_back("suite", c.suite);
  t.columns = {{"suite", ColumnType::text},         {"kind", ColumnType::text},    {"status", ColumnType::text},
               {"cases_run", ColumnType::integer},  {"cases_passed", ColumnType::integer},
               {"worst_error", ColumnType::text},   {"first_failure", ColumnType::text},
               {"seconds", ColumnType::text}};
  bool all_passed = true;
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed();
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    t.add_row({r.suite, std::string(r.exact ? "exact" : "float"), std::string(r.passed() ? "pass" : "FAIL"),
               std::int64_t(r.cases_run), std::int64_t(r.cases_passed),
               r.exact ? std::string(r.passed() ? "0" : "nonzero") : format_double(r.worst_error), r.first_failure,
               std::string(secs)});
  }
  emit(c, t);
  return all_passed ? 0 : 1;
}

template <Field T>
Table factor_egf_table(const RunConfig& c, bool exact) {
  const auto ctx = make_context<T>(c);
  const auto p = make_axis(c, c.x, c.qx, "--x", "--qx", ctx);
  const int k = require_index(c.k, "--k");
  if (k > c.order) throw UsageError("--k: must not exceed --order");
  Table t = new_table(c, exact);
  t.columns = {{"n", ColumnType::integer}, {"coefficient", ColumnType::scalar}};
  const auto egf = qbernstein_factor_egf(std::size_t(k), p, ctx, std::size_t(c.order));
  for (std::size_t n = 0; n <= egf.order(); ++n) t.add_row({std::int64_t(n), Scalar(egf[n])});
  return t;
}

void cmd_series(const RunConfig& c) {
  if (c.order < 0) throw UsageError("--order must be nonnegative");
  const std::size_t N = std::size_t(c.order);
  if (c.kind == "stirling") {
    const int k = require_index(c.k, "--k");
    Table t = new_table(c, true);
    t.params.emplace_back("kind", c.kind);
    t.columns = {{"n", ColumnType::integer}, {"coefficient", ColumnType::scalar}};
    const auto egf = stirling_egf(std::size_t(k), N);
    for (std::size_t n = 0; n <= N; ++n) t.add_row({std::int64_t(n), Scalar(egf[n])});
    emit(c, t);
  } else if (c.kind == "bernoulli") {
    const int k = require_index(c.k, "--k");
    const bool exact = resolve_exact(c);
    Table t = new_table(c, exact);
    t.params.emplace_back("kind", c.kind);
    t.columns = {{"n", ColumnType::integer}, {"coefficient", ColumnType::scalar}};
    if (exact) {
      const Rational x = c.x ? parse_flag<Rational>(*c.x, "--x") : Rational(0);
      const auto egf = bernoulli_higher_egf(std::size_t(k), x, N);
      for (std::size_t n = 0; n <= N; ++n) t.add_row({std::int64_t(n), Scalar(egf[n])});
    } else {
      const double x = c.x ? parse_flag<double>(*c.x, "--x") : 0.0;
      const auto egf = bernoulli_higher_egf(std::size_t(k), x, N);
      for (std::size_t n = 0; n <= N; ++n) t.add_row({std::int64_t(n), Scalar(egf[n])});
    }
    emit(c, t);
  } else if (c.kind == "factor") {
    const bool exact = resolve_exact(c);
    Table t = exact ? factor_egf_table<Rational>(c, exact) : factor_egf_table<double>(c, exact);
    t.params.emplace_back("kind", c.kind);
    emit(c, t);
  } else {
    throw UsageError("--kind: expected stirling, bernoulli or factor");
  }
}

void cmd_contour(const RunConfig& c) {
  if (c.mode == "exact") throw UsageError("--mode: the contour integral is float only");
  RunConfig fc = c;
  fc.mode = "float";
  const auto ctx = make_context<double>(fc);
  const auto pt = make_point<double>(fc, ctx);
  const BasisIndex idx(require_index(c.k, "--k"), require_index(c.j, "--j"), require_index(c.n, "--n"),
                       require_index(c.m, "--m"));
  const ContourSpec spec{c.radius, c.nodes};
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("--nodes/--radius: ") + e.what());
  }
  const auto v = contour_integral_eval(idx, pt, ctx, spec);
  const double closed = qbernstein2(idx, pt, ctx);
  Table t = new_table(fc, false);
  t.params.emplace_back("nodes", std::to_string(c.nodes));
  t.params.emplace_back("radius", format_double(c.radius));
  t.columns = {{"real", ColumnType::scalar}, {"imag", ColumnType::scalar}, {"closed_form", ColumnType::scalar},
               {"abs_error", ColumnType::scalar}};
  t.add_row({Scalar(v.real()), Scalar(v.imag()), Scalar(closed), Scalar(std::abs(v - closed))});
  emit(c, t);
}

void cmd_interp(const RunConfig& c) {
  if (c.mode == "exact") throw UsageError("--mode: the interpolation function is float only");
  RunConfig fc = c;
  fc.mode = "float";
  const Complex s(c.s_re, c.s_im);
  const int k = require_index(c.k, "--k"), j = require_index(c.j, "--j");
  if (c.deriv < 0) throw UsageError("--deriv must be nonnegative");
  // the classical form reads x, y directly; a context is still needed for the point type
  const QContext<double> ctx = c.classical && !c.q ? QContext<double>(0.5) : make_context<double>(fc);
  if (c.classical && (c.qx || c.qy)) throw UsageError("--classical takes --x and --y only");
  const auto pt = make_point<double>(fc, ctx);
  const InterpParams p{s, k, j, pt, c.deriv};

  Table t = new_table(fc, false);
  t.params.emplace_back("s", format_double(c.s_re) + (c.s_im < 0 ? "" : "+") + format_double(c.s_im) + "i");
  t.params.emplace_back("deriv", std::to_string(c.deriv));
  if (c.mellin) {
    if (c.classical) throw UsageError("--mellin checks the q-form; drop --classical");
    if (!(s.real() > 0.0)) throw UsageError("--s: the Mellin check needs Re(s) > 0");
    const auto rep = mellin_consistency_check(p, ctx);
    t.columns = {{"quadrature_real", ColumnType::scalar}, {"quadrature_imag", ColumnType::scalar},
                 {"closed_real", ColumnType::scalar},     {"closed_imag", ColumnType::scalar},
                 {"abs_difference", ColumnType::scalar},  {"error_estimate", ColumnType::scalar}};
    t.add_row({Scalar(rep.quadrature.real()), Scalar(rep.quadrature.imag()), Scalar(rep.closed_form.real()),
               Scalar(rep.closed_form.imag()), Scalar(rep.abs_difference), Scalar(rep.error_estimate)});
  } else {
    const Complex v = c.classical ? interp_s_derivative(p) : interp_q_s_derivative(p, ctx);
    t.columns = {{"real", ColumnType::scalar}, {"imag", ColumnType::scalar}};
    t.add_row({Scalar(v.real()), Scalar(v.imag())});
  }
  emit(c, t);
}

void cmd_table(const RunConfig& c) {
  if (c.kind == "stirling" || c.kind == "qstirling") {
    if (c.max_n < 0 || c.max_k < 0) throw UsageError("--max-n/--max-k must be nonnegative");
    const bool q_form = c.kind == "qstirling";
    const bool exact = q_form ? resolve_exact(c) : true;
    Table t = new_table(c, exact);
    t.params.emplace_back("kind", c.kind);
    t.columns.push_back({"n", ColumnType::integer});
    for (int k = 0; k <= c.max_k; ++k) t.columns.push_back({std::to_string(k), q_form ? ColumnType::scalar : ColumnType::integer});
    std::optional<QContext<Rational>> qe;
    std::optional<QContext<double>> qf;
    if (q_form) exact ? (void)qe.emplace(make_context<Rational>(c)) : (void)qf.emplace(make_context<double>(c));
    for (int n = 0; n <= c.max_n; ++n) {
      std::vector<Cell> row{std::int64_t(n)};
      for (int k = 0; k <= c.max_k; ++k) {
        if (!q_form) row.emplace_back(static_cast<std::int64_t>(stirling2_int(n, k)));
        else if (qe) row.emplace_back(Scalar(q_stirling2<Rational>(n, k, *qe)));
        else row.emplace_back(Scalar(q_stirling2<double>(n, k, *qf)));
      }
      t.add_row(std::move(row));
    }
    emit(c, t);
  } else if (c.kind == "operator") {
    cmd_operator(c);
  } else if (c.kind == "basis") {
    RunConfig g = c;
    if (!g.nx) g.nx = 5;
    if (!g.ny) g.ny = 5;
    cmd_eval(g);
  } else {
    throw UsageError("--kind: expected stirling, qstirling, operator or basis");
  }
}

// ---------------------------------------------------------------------------
// Flag wiring

void add_point_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--q", c.q, "deformation parameter, \"p/q\" or decimal, 0 < q < 1");
  sub->add_option("--mode", c.mode, "exact|float (default: exact unless a decimal is given)");
  sub->add_option("--x", c.x, "x in [0, 1]");
  sub->add_option("--y", c.y, "y in [0, 1]");
  sub->add_option("--qx", c.qx, "q^x in [q, 1] (exact mode interior points)");
  sub->add_option("--qy", c.qy, "q^y in [q, 1]");
}

void add_output_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", c.output, "write to a file instead of stdout");
}

void add_index_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--k", c.k);
  sub->add_option("--j", c.j);
  sub->add_option("--n", c.n);
  sub->add_option("--m", c.m);
}

std::string suite_names() {
  std::string out = "all";
  for (const auto& s : suite_registry()) out += ", " + s.name;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bivariate modified q-Bernstein polynomials: evaluation, tables and identity checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto* eval = app.add_subcommand("eval", "basis values B_{k,j;n,m}(x,y) (all k, j unless given)");
  add_index_flags(eval, c);
  add_point_flags(eval, c);
  add_output_flags(eval, c);
  eval->add_flag("--classical", c.classical, "classical basis, q = 1");
  eval->add_option("--nx", c.nx, "grid points along x (plot data)");
  eval->add_option("--ny", c.ny, "grid points along y");

  auto* op = app.add_subcommand("operator", "operator values on an nx-by-ny grid");
  add_index_flags(op, c);
  add_point_flags(op, c);
  add_output_flags(op, c);
  op->add_flag("--classical", c.classical);
  op->add_option("--nx", c.nx);
  op->add_option("--ny", c.ny);
  op->add_option("--function", c.function, "one|u|v|uv|u2v2|expcos");

  auto* verify = app.add_subcommand("verify", "run identity-verification suites");
  verify->add_option("--suite", c.suite, "one of: " + suite_names());
  verify->add_option("--threads", c.threads, "worker threads (env QBERN2D_THREADS)");
  verify->add_option("--tol", c.tolerance, "override the tolerance of the float suites");
  verify->add_option("--mode", c.mode, "accepted for symmetry with other commands; suites fix their own mode");
  add_output_flags(verify, c);

  auto* series = app.add_subcommand("series", "generating-function coefficients");
  series->add_option("--kind", c.kind, "stirling|bernoulli|factor")->required();
  series->add_option("--order", c.order, "truncation order N");
  add_index_flags(series, c);
  add_point_flags(series, c);
  add_output_flags(series, c);

  auto* contour = app.add_subcommand("contour", "contour-integral representation by the trapezoid rule");
  add_index_flags(contour, c);
  add_point_flags(contour, c);
  add_output_flags(contour, c);
  contour->add_option("--nodes", c.nodes, "nodes per circle");
  contour->add_option("--radius", c.radius, "contour radius");

  auto* interp = app.add_subcommand("interp", "interpolation function and its s-derivatives");
  add_index_flags(interp, c);
  add_point_flags(interp, c);
  add_output_flags(interp, c);
  interp->add_option("--s", c.s_re, "Re(s)");
  interp->add_option("--s-imag", c.s_im, "Im(s)");
  interp->add_option("--deriv", c.deriv, "s-derivative order");
  interp->add_flag("--classical", c.classical, "q -> 1 form");
  interp->add_flag("--mellin", c.mellin, "compare against quadrature of the Mellin integral");

  auto* table = app.add_subcommand("table", "tables: stirling, qstirling, operator, basis");
  table->add_option("--kind", c.kind, "stirling|qstirling|operator|basis")->required();
  table->add_option("--max-n", c.max_n);
  table->add_option("--max-k", c.max_k);
  add_index_flags(table, c);
  add_point_flags(table, c);
  add_output_flags(table, c);
  table->add_flag("--classical", c.classical);
  table->add_option("--nx", c.nx);
  table->add_option("--ny", c.ny);
  table->add_option("--function", c.function);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    if (c.command == "eval") cmd_eval(c);
    else if (c.command == "operator") cmd_operator(c);
    else if (c.command == "verify") return cmd_verify(c);
    else if (c.command == "series") cmd_series(c);
    else if (c.command == "contour") cmd_contour(c);
    else if (c.command == "interp") cmd_interp(c);
    else if (c.command == "table") cmd_table(c);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "qbern2d: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qbern2d: " << e.what() << '\n';
    return 1;
  }
}
