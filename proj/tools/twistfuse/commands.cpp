#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistfuse/branching.hpp"
#include "twistfuse/cli.hpp"
#include "twistfuse/json.hpp"
#include "twistfuse/log.hpp"

namespace twistfuse::cli {
namespace {

using nlohmann::json;

struct Options {
  bool as_json = false;
  std::string cache_dir;
  int n = 0;
  int level = 0;
  std::string f, g, h;
  bool twisted = false;
  bool grid = false;
  int order = 0;
  std::string out_path;
};

// Two-column table, left aligned, header underlined.
void print_table(std::ostream& out, const std::string& left, const std::string& right,
                 const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = left.size();
  for (const auto& r : rows) width = std::max(width, r.first.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << left << right << '\n';
  for (const auto& [a, b] : rows)
    out << std::left << std::setw(static_cast<int>(width) + 2) << a << b << '\n';
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

template <class Label>
void print_combination(std::ostream& out, const FormalCombination<Label>& combo) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [label, mult] : combo) rows.emplace_back(label.str(), std::to_string(mult));
  print_table(out, "signature", "multiplicity", rows);
}

std::string describe(const CheckResult& c) {
  const char* op = c.comparison == Comparison::Below   ? "<"
                   : c.comparison == Comparison::Above ? ">"
                                                       : "==";
  std::ostringstream os;
  os << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << std::setprecision(6)
     << c.measured << ' ' << op << ' ' << c.threshold;
  if (!c.detail.empty()) os << "  (" << c.detail << ')';
  return os.str();
}

void print_report(std::ostream& out, const VerifyReport& r) {
  out << "N=" << r.n << " level=" << r.level << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) out << "  " << describe(c) << '\n';
}

std::filesystem::path resolve_cache_dir(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  return {};
}

int cmd_fuse_untwisted(const Options& o, std::ostream& out) {
  const FusionModel model(LevelContext(o.n, o.level));
  const auto f = model.require_untwisted(parse_gl(o.f));
  const auto g = model.require_untwisted(parse_gl(o.g));
  const auto result = model.fuse_untwisted(f, g);
  if (o.as_json) {
    out << json{{"result", result}}.dump() << '\n';
  } else {
    out << "H_(" << f.str() << ") x H_(" << g.str() << ") at N=" << o.n
        << " level=" << o.level << '\n';
    print_combination(out, result);
  }
  return kExitOk;
}

int cmd_fuse_module(const Options& o, std::ostream& out) {
  const FusionModel model(LevelContext(o.n, o.level));
  const auto f = model.require_untwisted(parse_gl(o.f));
  const auto h = model.require_twisted(parse_sp(o.h));
  const auto result = model.fuse_module(f, h);
  if (o.as_json) {
    out << json{{"result", result}}.dump() << '\n';
  } else {
    out << "H_(" << f.str() << ") x K_(" << h.str() << ") at N=" << o.n
        << " level=" << o.level << '\n';
    print_combination(out, result);
  }
  return kExitOk;
}

int cmd_dims(const Options& o, std::ostream& out) {
  const auto dims = quantum_dims(LevelContext(o.n, o.level));
  std::vector<std::pair<std::string, double>> values;
  if (o.twisted) {
    for (std::size_t i = 0; i < dims.twisted_basis.size(); ++i)
      values.emplace_back(dims.twisted_basis[i].str(), dims.twisted[i]);
  } else {
    for (std::size_t i = 0; i < dims.untwisted_basis.size(); ++i)
      values.emplace_back(dims.untwisted_basis[i].str(), dims.untwisted[i]);
  }
  if (o.as_json) {
    json d = json::object();
    for (const auto& [label, v] : values) d[label] = v;
    out << json{{"N", o.n},
                {"level", o.level},
                {"kind", o.twisted ? "twisted" : "untwisted"},
                {"C", dims.c},
                {"dims", d}}
               .dump()
        << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [label, v] : values) rows.emplace_back(label, fmt(v));
    print_table(out, "signature", "quantum dimension", rows);
    out << "C = " << fmt(dims.c) << '\n';
  }
  return kExitOk;
}

int cmd_points(const Options& o, std::ostream& out) {
  const LevelContext ctx(o.n, o.level);
  std::vector<EvalPoint> points;
  for (const auto& g : enumerate_eval_set(ctx)) points.push_back(eval_point(g, ctx));
  if (o.as_json) {
    out << json{{"N", o.n}, {"level", o.level}, {"points", points}}.dump() << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& pt : points) {
      std::string angles;
      for (std::size_t i = 0; i < pt.size(); ++i) {
        const auto x = pt.angle(i);
        if (i) angles += ", ";
        angles += std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
      }
      rows.emplace_back(pt.origin().str(), angles);
    }
    print_table(out, "g", "angles (turns)", rows);
  }
  return kExitOk;
}

int cmd_k0square(const Options& o, std::ostream& out) {
  const auto k0 = k0_square(LevelContext(o.n, o.level));
  if (o.as_json) {
    out << json(k0).dump() << '\n';
  } else {
    out << "K_0 x K_0 at N=" << o.n << " level=" << o.level << '\n';
    print_combination(out, k0.decomposition);
    out << "C^2 = " << fmt(k0.c_squared) << ", sum of paired quantum dimensions = "
        << fmt(k0.paired_sum) << " (" << (k0.consistent() ? "consistent" : "INCONSISTENT")
        << ")\n";
  }
  return k0.consistent() ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<GridCell> cells;
  if (o.grid) {
    cells = default_grid();
  } else {
    if (o.n == 0 || o.level == 0)
      throw InvalidArgument("verify needs --n and --level, or --grid");
    LevelContext(o.n, o.level);  // validates
    cells.push_back({o.n, o.level});
  }
  const GridReport report = run_grid_verify(cells);

  if (const auto dir = resolve_cache_dir(o); !dir.empty()) {
    for (const auto& cell : report.cells) {
      if (!cell.passed()) continue;
      const LevelContext ctx(cell.n, cell.level);
      try {
        export_tables(ctx, cache_file(dir, ctx));
      } catch (const std::exception& e) {
        err << "twistfuse: cache write failed: " << e.what() << '\n';
      }
    }
  }

  if (o.as_json) {
    json doc = o.grid ? json{{"grid", report.cells}, {"passed", report.passed()}}
                      : json(report.cells.front());
    out << doc.dump() << '\n';
  } else {
    for (const auto& cell : report.cells) print_report(out, cell);
    out << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_euler(const Options& o, std::ostream& out) {
  const auto check = euler_check(o.order);
  if (o.as_json) {
    out << json{{"order", o.order},
                {"ok", check.ok},
                {"firstMismatch", check.first_mismatch ? json(*check.first_mismatch) : json()},
                {"distinct", series_json(check.distinct_side)},
                {"odd", series_json(check.odd_side)}}
               .dump()
        << '\n';
  } else if (check.ok) {
    out << "OK through t^" << o.order << '\n';
  } else {
    out << "MISMATCH at t^" << *check.first_mismatch << '\n';
  }
  return check.ok ? kExitOk : kExitFailed;
}

int cmd_diagnostics(const Options& o, std::ostream& out) {
  const auto report = closed_form_diagnostics(LevelContext(o.n, o.level));
  if (o.as_json) {
    out << json(report).dump() << '\n';
    return kExitOk;
  }
  std::size_t width = 4;
  for (const auto& p : report.pairs) width = std::max(width, p.name.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "name" << std::setw(20)
      << "direct" << std::setw(20) << "closed form"
      << "abs diff\n";
  for (const auto& p : report.pairs)
    out << std::left << std::setw(static_cast<int>(width) + 2) << p.name << std::setw(20)
        << fmt(p.direct) << std::setw(20) << fmt(p.closed_form) << fmt(p.abs_diff()) << '\n';
  return kExitOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const LevelContext ctx(o.n, o.level);
  std::filesystem::path target = o.out_path;
  if (target.empty()) {
    if (const auto dir = resolve_cache_dir(o); !dir.empty()) target = cache_file(dir, ctx);
  }
  if (target.empty()) {
    out << fusion_tables_document(FusionModel(ctx)).dump(2) << '\n';
    return kExitOk;
  }
  const auto result = export_tables(ctx, target);
  if (o.as_json)
    out << json{{"path", result.path.string()}, {"reused", result.reused}}.dump() << '\n';
  else
    out << (result.reused ? "reused " : "wrote ") << result.path.string() << '\n';
  return kExitOk;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Level-l fusion for LSU(2N) and its twisted module", "twistfuse"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.as_json, "Emit a single JSON document on stdout");
  app.add_option("--cache-dir", o.cache_dir,
                 std::string("Directory for cached fusion tables (env ") + kCacheEnv + ")");

  auto add_ctx = [&](CLI::App* sub, bool required = true) {
    auto* n = sub->add_option("--n", o.n, "N, for SU(2N)")->check(CLI::PositiveNumber);
    auto* l = sub->add_option("--level", o.level, "Level l >= 1")->check(CLI::PositiveNumber);
    if (required) {
      n->required();
      l->required();
    }
  };

  auto* fuse = app.add_subcommand("fuse", "Fusion products");
  fuse->require_subcommand(1);
  auto* fuse_u = fuse->add_subcommand("untwisted", "H_f boxtimes H_g");
  add_ctx(fuse_u);
  fuse_u->add_option("--f", o.f, "Signature, comma separated")->required();
  fuse_u->add_option("--g", o.g, "Signature, comma separated")->required();
  auto* fuse_m = fuse->add_subcommand("module", "H_f boxtimes K_h");
  fuse_m->set_help_flag("--help", "Print this help message and exit");
  add_ctx(fuse_m);
  fuse_m->add_option("--f", o.f, "SU(2N) signature")->required();
  fuse_m->add_option("--h", o.h, "Sp(N) signature")->required();

  auto* dims = app.add_subcommand("dims", "Quantum dimensions");
  add_ctx(dims);
  dims->add_flag("--twisted", o.twisted, "Twisted representations K_h");

  auto* points = app.add_subcommand("points", "Evaluation points D(g)");
  add_ctx(points);

  auto* k0 = app.add_subcommand("k0square", "K_0 boxtimes K_0 decomposition");
  add_ctx(k0);

  auto* verify = app.add_subcommand("verify", "Run the consistency suite");
  add_ctx(verify, false);
  verify->add_flag("--grid", o.grid, "Run the default (N, level) grid");

  auto* qseries = app.add_subcommand("qseries", "Series identities");
  qseries->require_subcommand(1);
  auto* euler = qseries->add_subcommand("euler", "prod(1+t^m) = prod(1-t^(2m-1))^-1");
  euler->add_option("--order", o.order, "Truncation order T")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* diagnostics = app.add_subcommand("diagnostics", "Closed-form diagnostics");
  add_ctx(diagnostics);

  auto* tables = app.add_subcommand("tables", "Export fusion tables");
  add_ctx(tables);
  tables->add_option("--out", o.out_path, "Output file (default: cache dir or stdout)");

  try {
    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "twistfuse: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*fuse_u) return cmd_fuse_untwisted(o, out);
    if (*fuse_m) return cmd_fuse_module(o, out);
    if (*dims) return cmd_dims(o, out);
    if (*points) return cmd_points(o, out);
    if (*k0) return cmd_k0square(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*euler) return cmd_euler(o, out);
    if (*diagnostics) return cmd_diagnostics(o, out);
    if (*tables) return cmd_tables(o, out);
  } catch (const InvalidArgument& e) {
    err << "twistfuse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "twistfuse: " << e.what() << '\n';
    return kExitFailed;
  }
  err << "twistfuse: no command given\n";
  return kExitUsage;
}

}  // namespace twistfuse::cli
