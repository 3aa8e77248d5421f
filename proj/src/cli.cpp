#include "venn/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "venn/doubling.hpp"
#include "venn/export_render.hpp"
#include "venn/gray_runs.hpp"
#include "venn/isometric_partition.hpp"
#include "venn/venn_builder.hpp"
#include "venn/verifier.hpp"

namespace venn {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  int n = 0;
  std::string out;
  std::string format = "json";
  int cap = kDefaultMaterializationCap;
};

int emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write " + path);
  return kOk;
}

int cmd_build(const BuildOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n < 8) throw UsageError("n >= 8 required");
  if (o.n > o.cap) {
    throw UsageError("n = " + std::to_string(o.n) + " exceeds the materialization cap " + std::to_string(o.cap) +
                     " (raise with --cap, at most " + std::to_string(kMaxMaterializationCap) + ")");
  }
  const int k = base_exponent(o.n);
  const int m = o.n - (1 << k);
  std::optional<BuildTrace> trace;
  PlaneDualGraph g(1);
  if (m == 0) {
    auto b = build_venn_dual(k, o.cap);
    g = std::move(b.graph);
    trace = std::move(b.trace);
  } else {
    g = build_venn_from(k, m, o.cap);
  }

  const auto report = verify(g);
  err << to_text(report);
  if (!report.passed()) return kFailed;

  std::string text;
  if (o.format == "json") {
    auto doc = to_json(g);
    if (trace) doc["trace"] = to_json(*trace);
    doc["report"] = to_json(report);
    text = doc.dump() + "\n";
  } else if (o.format == "dot") {
    text = to_dot(g);
  } else if (o.format == "svg-dual") {
    text = render_dual_svg(g);
  } else {
    text = render_primal_svg(g);
  }
  return emit(text, o.out, out);
}

int cmd_verify(const std::string& path, std::ostream& err) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    err << "not a JSON document: " << e.what() << "\n";
    return kFailed;
  }
  try {
    const auto report = verify(from_json(doc));
    err << to_text(report);
    return report.passed() ? kOk : kFailed;
  } catch (const std::exception& e) {
    err << "rejected: " << e.what() << "\n";
    return kFailed;
  }
}

int cmd_stats(int n_max, std::ostream& out) {
  if (n_max < 1 || n_max > 62) throw UsageError("--n-max must be in [1, 62]");
  out << std::setw(3) << "n" << std::setw(22) << "L_n" << std::setw(22) << "achieved" << std::setw(22) << "monotone" << "\n";
  for (int n = 1; n <= n_max; ++n) {
    out << std::setw(3) << n << std::setw(22) << (n >= 2 ? lower_bound(n) : 0);
    std::string achieved = "-";
    if (n >= 8) {
      const int k = base_exponent(n);
      try {
        achieved = std::to_string(expected_crossings(k, n - (1 << k)));
      } catch (const std::overflow_error&) {
        achieved = "overflow";
      }
    }
    out << std::setw(22) << achieved << std::setw(22) << monotone_reference(n) << "\n";
  }
  return kOk;
}

int cmd_gray(int k, int m, bool stats, std::ostream& out) {
  if (k < 2 || k > 4) throw UsageError("--k must be in [2, 4]");
  if (m < 0 || (1 << k) + m > 24) throw UsageError("--m out of range");
  const CubePath path = m == 0 ? longrun_path(k) : product_path(k, m);
  const int rho = (1 << k) - 1;
  for (std::size_t i = 0; i < path.flips.size(); ++i) out << (i ? " " : "") << path.flips[i];
  out << "\n";
  if (stats) {
    const auto runs = run_partition(path.flips, rho);
    out << "n = " << path.dimension() << ", rho = " << rho << ", nu = " << runs.nu << ", lambda = " << runs.lambda
        << ", mu = " << mu(path.flips.view()) << "\n";
  }
  return kOk;
}

int cmd_partition(int k, std::ostream& out, std::ostream& err) {
  if (k < 1 || k > 4) throw UsageError("--k must be in [1, 4]");
  const int n = 1 << k;
  for (const auto& c : partition_cycles(k)) {
    const auto vs = walk(c);
    out << "C(" << c.start.to_string() << "):";
    for (const auto& v : vs) out << " " << v.bits();
    out << "\n";
  }
  const auto paths = check_path_partition(k);
  const auto cycles = check_cycle_partition(k);
  err << "paths of Q_" << n - 1 << ": " << paths.vertices_covered << "/" << paths.expected << " "
      << (paths.ok ? "disjoint cover" : "FAILED: " + paths.message) << "\n";
  err << "cycles of Q_" << n << ": " << cycles.vertices_covered << "/" << cycles.expected << " "
      << (cycles.ok ? "disjoint cover" : "FAILED: " + cycles.message) << "\n";
  return paths.ok && cycles.ok ? kOk : kFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual graphs of Venn diagrams with few crossings", "venn"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Build, verify and export the dual graph of an n-Venn diagram");
  b->add_option("--n", build.n, "Number of curves")->required();
  b->add_option("--out", build.out, "Output file (default stdout)");
  b->add_option("--format", build.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "svg-dual", "svg-primal"}));
  b->add_option("--cap", build.cap, "Materialization cap on n")->check(CLI::Range(8, kMaxMaterializationCap));

  std::string file;
  auto* v = app.add_subcommand("verify", "Verify a JSON dual graph document");
  v->add_option("file", file, "Document to verify")->required();

  int n_max = 16;
  auto* s = app.add_subcommand("stats", "Lower bound, achieved and monotone crossing counts");
  s->add_option("--n-max", n_max, "Largest n");

  int k = 0;
  int m = 0;
  bool with_stats = false;
  auto* g = app.add_subcommand("gray", "Long-run Hamiltonian path flip sequence");
  g->add_option("--k", k, "Path of Q_{2^k}")->required();
  g->add_option("--m", m, "Extra Gray-code dimensions");
  g->add_flag("--stats", with_stats, "Print nu, lambda and mu");

  int pk = 0;
  auto* p = app.add_subcommand("partition", "Isometric cycle partition of Q_{2^k}");
  p->add_option("--k", pk, "Exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*b) return cmd_build(build, out, err);
    if (*v) return cmd_verify(file, err);
    if (*s) return cmd_stats(n_max, out);
    if (*g) return cmd_gray(k, m, with_stats, out);
    return cmd_partition(pk, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace venn
