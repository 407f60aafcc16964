// rbsep: exact red-blue point separation toolbox.
//
// Exit codes: 0 success/feasible, 1 infeasible or no solution within bounds,
// 2 usage or input error, 3 resource budget exceeded.

#include "rbsep/axis_fpt.hpp"
#include "rbsep/exact_search.hpp"
#include "rbsep/io.hpp"
#include "rbsep/reduction.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace rbsep;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int thread_count() {
  if (const char* env = std::getenv("RBSEP_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

struct SolveOutcome {
  bool solved = false;
  bool inseparable = false;
  std::vector<Line> lines;
};

SolveOutcome run_solver(const Instance& inst, bool axis, const std::string& method, int kmax) {
  SolveOutcome out;
  if (axis && method == "fpt") {
    auto res = solve_axis_parallel(inst);
    if (res.status == AxisSolveResult::Status::Inseparable) {
      out.inseparable = true;
      return out;
    }
    out.solved = true;
    out.lines = res.lines;
    return out;
  }
  auto res = axis ? solve_axis_bruteforce(inst, kmax) : solve_general_bruteforce(inst, kmax);
  if (res.status == BruteforceResult::Status::Solved) {
    out.solved = true;
    out.lines = res.lines;
  }
  return out;
}

int cmd_solve(const std::string& input, bool axis, bool general, const std::string& method,
              int kmax, const std::string& out_path) {
  if (axis == general) {
    std::cerr << "solve: pick exactly one of --axis-parallel / --general\n";
    return 2;
  }
  if (method == "fpt" && !axis) {
    std::cerr << "solve: --method fpt requires --axis-parallel\n";
    return 2;
  }
  Instance inst = parse_instance(read_file(input));
  SolveOutcome res = run_solver(inst, axis, method, kmax);
  if (res.inseparable) {
    std::cerr << "no solution exists: a red point coincides with a blue point\n";
    return 1;
  }
  if (!res.solved) {
    std::cerr << "no solution within k_max\n";
    return 1;
  }
  const std::string solver = (axis ? std::string("axis-") : std::string("general-")) + method;
  if (!out_path.empty()) write_file(out_path, emit_solution(res.lines, solver));
  std::cout << "cost " << res.lines.size() << '\n';
  return 0;
}

int cmd_check(const std::string& instance_path, const std::string& solution_path) {
  Instance inst = parse_instance(read_file(instance_path));
  std::vector<Line> lines = parse_solution(read_file(solution_path));
  FeasibilityReport report = is_feasible(inst, lines);
  if (report.feasible) {
    std::cout << "feasible: " << lines.size() << " lines separate " << inst.red.size() << " red / "
              << inst.blue.size() << " blue points\n";
    return 0;
  }
  const Violation& v = *report.violation;
  if (v.kind == Violation::Kind::PointOnLine) {
    std::cout << "infeasible: point (" << to_string(v.p.x) << ", " << to_string(v.p.y)
              << ") lies on a separating line\n";
  } else {
    std::cout << "infeasible: red (" << to_string(v.p.x) << ", " << to_string(v.p.y) << ") and blue ("
              << to_string(v.q.x) << ", " << to_string(v.q.y) << ") are not separated\n";
  }
  return 1;
}

int cmd_plot(const std::string& instance_path, const std::string& solution_path,
             const std::string& svg_path) {
  Instance inst = parse_instance(read_file(instance_path));
  std::vector<Line> lines;
  if (!solution_path.empty()) lines = parse_solution(read_file(solution_path));
  write_file(svg_path, render_svg(inst, lines));
  return 0;
}

int cmd_bench(const std::string& corpus_dir, const std::string& method, int kmax,
              const std::string& csv_path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Row {
    std::string name;
    std::size_t n, b;
    std::string cost;
    long long wall_ms;
  };
  std::vector<Row> rows(files.size());
  auto run_one = [&](std::size_t idx) {
    Instance inst = parse_instance(read_file(files[idx].string()));
    const auto start = std::chrono::steady_clock::now();
    std::string cost = "-";
    try {
      SolveOutcome res = run_solver(inst, method != "general-bruteforce",
                                    method == "fpt" ? "fpt" : "bruteforce", kmax);
      if (res.solved) cost = std::to_string(res.lines.size());
    } catch (const ResourceLimitError&) {
      cost = "resource";
    }
    const auto stop = std::chrono::steady_clock::now();
    rows[idx] = {files[idx].filename().string(), inst.n(), inst.blue.size(), cost,
                 std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
  };

  const int threads = thread_count();
  if (threads <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) run_one(i);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t i = 0; i < files.size(); ++i) {
      pending.push_back(std::async(std::launch::async, run_one, i));
      if (pending.size() >= static_cast<std::size_t>(threads)) {
        pending.front().get();
        pending.erase(pending.begin());
      }
    }
    for (auto& f : pending) f.get();
  }

  std::ostringstream csv;
  csv << "instance,n,b,method,cost,wall_ms\n";
  for (const Row& r : rows)
    csv << r.name << ',' << r.n << ',' << r.b << ',' << method << ',' << r.cost << ',' << r.wall_ms
        << '\n';
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    write_file(csv_path, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact red-blue point separation"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance exactly");
  std::string solve_input, solve_method = "fpt", solve_out;
  bool axis = false, general = false;
  int kmax = 4;
  solve_cmd->add_option("instance", solve_input)->required();
  solve_cmd->add_flag("--axis-parallel", axis);
  solve_cmd->add_flag("--general", general);
  solve_cmd->add_option("--method", solve_method)->check(CLI::IsMember({"fpt", "bruteforce"}));
  solve_cmd->add_option("--kmax", kmax);
  solve_cmd->add_option("--out", solve_out);

  // check
  auto* check_cmd = app.add_subcommand("check", "verify a solution strictly separates");
  std::string check_instance, check_solution;
  check_cmd->add_option("instance", check_instance)->required();
  check_cmd->add_option("solution", check_solution)->required();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_random = gen_cmd->add_subcommand("random", "seeded random points on an integer grid");
  int g_red = 10, g_blue = 5;
  long g_grid = 32;
  uint64_t g_seed = 1;
  std::string g_out;
  gen_random->add_option("--red", g_red);
  gen_random->add_option("--blue", g_blue);
  gen_random->add_option("--grid", g_grid);
  gen_random->add_option("--seed", g_seed);
  gen_random->add_option("--out", g_out)->required();

  auto* gen_grid = gen_cmd->add_subcommand("grid", "checkerboard grid instance");
  int gw = 4, gh = 4;
  std::string gg_out;
  gen_grid->add_option("--width", gw);
  gen_grid->add_option("--height", gh);
  gen_grid->add_option("--out", gg_out)->required();

  auto* gen_red = gen_cmd->add_subcommand("reduction", "hardness-reduction instance from S2-THS");
  std::string r_s2ths, r_out, r_witness_out, r_sidecar, r_s2ths_out;
  int r_k = 1, r_t = 2, r_na = 2, r_nb = 2;
  uint64_t r_seed = 1;
  bool r_plant = false;
  gen_red->add_option("--s2ths", r_s2ths, "S2-THS description file");
  gen_red->add_flag("--plant", r_plant, "generate a planted YES instance instead");
  gen_red->add_option("--k", r_k);
  gen_red->add_option("--t", r_t);
  gen_red->add_option("--na", r_na);
  gen_red->add_option("--nb", r_nb);
  gen_red->add_option("--seed", r_seed);
  gen_red->add_option("--out", r_out)->required();
  gen_red->add_option("--witness-out", r_witness_out, "solution file with the 6k+14 witness lines");
  gen_red->add_option("--sidecar", r_sidecar, "layout sidecar (JSON)");
  gen_red->add_option("--s2ths-out", r_s2ths_out, "write the planted S2-THS description");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "render an instance (and solution) as SVG");
  std::string p_instance, p_solution, p_svg;
  plot_cmd->add_option("instance", p_instance)->required();
  plot_cmd->add_option("--solution", p_solution);
  plot_cmd->add_option("--svg", p_svg)->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "solve a corpus and emit a CSV");
  std::string b_dir, b_method = "fpt", b_csv;
  int b_kmax = 4;
  bench_cmd->add_option("corpus", b_dir)->required();
  bench_cmd->add_option("--method", b_method)
      ->check(CLI::IsMember({"fpt", "axis-bruteforce", "general-bruteforce"}));
  bench_cmd->add_option("--kmax", b_kmax);
  bench_cmd->add_option("--csv", b_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_input, axis, general, solve_method, kmax, solve_out);
    if (*check_cmd) return cmd_check(check_instance, check_solution);
    if (*plot_cmd) return cmd_plot(p_instance, p_solution, p_svg);
    if (*bench_cmd) return cmd_bench(b_dir, b_method, b_kmax, b_csv);
    if (*gen_random) {
      write_file(g_out, emit_instance(generate_random_instance(g_red, g_blue, g_grid, g_seed)));
      return 0;
    }
    if (*gen_grid) {
      write_file(gg_out, emit_instance(generate_grid_instance(gw, gh)));
      return 0;
    }
    if (*gen_red) {
      S2THSInstance s2;
      std::vector<int> witness;
      if (r_plant) {
        s2 = plant_s2ths(r_k, r_t, r_na, r_nb, r_seed, &witness);
      } else if (!r_s2ths.empty()) {
        s2 = parse_s2ths(read_file(r_s2ths));
        auto w = solve_s2ths_bruteforce(s2);
        if (w) witness = *w;
      } else {
        std::cerr << "gen reduction: need --s2ths FILE or --plant\n";
        return 2;
      }
      BuiltReduction built = build_rbs_instance(s2);
      write_file(r_out, emit_instance(built.instance));
      if (!r_s2ths_out.empty()) write_file(r_s2ths_out, emit_s2ths(s2));
      if (!r_sidecar.empty()) write_file(r_sidecar, emit_layout_sidecar(built.layout));
      if (!r_witness_out.empty()) {
        if (witness.empty()) {
          std::cerr << "gen reduction: instance is a NO-instance, no witness lines\n";
          return 1;
        }
        write_file(r_witness_out, emit_solution(witness_lines(s2, built.layout, witness), "reduction-witness"));
      }
      std::cout << "points " << built.instance.n() << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
