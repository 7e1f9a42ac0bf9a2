#include "mpma/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mpma/bench.hpp"
#include "mpma/kernels.hpp"
#include "mpma/module_io.hpp"

namespace mpma {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write '" + path + "'");
  f << data;
}

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> v;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad value in ") + what + ": '" + tok + "'");
    }
  }
  return v;
}

// "auto" or "l1,l2,...:h1,h2,..."
std::optional<Box> parse_box(const std::string& s, std::size_t n) {
  if (s.empty() || s == "auto") return std::nullopt;
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--box expects 'auto' or LOW:HIGH");
  Box b{parse_list(s.substr(0, colon), "--box"), parse_list(s.substr(colon + 1), "--box")};
  if (b.low.size() != n || b.high.size() != n)
    throw UsageError("--box needs " + std::to_string(n) + " coordinates on each side");
  for (std::size_t i = 0; i < n; ++i)
    if (!(b.low[i] <= b.high[i])) throw UsageError("--box low must not exceed high");
  return b;
}

struct Input {
  FilteredComplex complex;
  std::optional<Fixture> fx;
};

Input load_input(const std::string& path, const std::string& fixture_name) {
  if (path.empty() == fixture_name.empty()) throw UsageError("give exactly one of INPUT or --fixture");
  Input in;
  if (!fixture_name.empty()) {
    in.fx = fixture(fixture_name);
    in.complex = in.fx->complex;
  } else {
    in.complex = parse_complex(read_file(path));
  }
  return in;
}

Matcher parse_matcher(const std::string& s) { return s == "compatibility" ? Matcher::compatibility : Matcher::vineyard; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval-decomposable approximation of multi-parameter persistence modules"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = runtime default)")->envname("MPMA_THREADS");

  // approximate
  auto* approx = app.add_subcommand("approximate", "Decompose a complex's module into intervals");
  std::string a_input, a_fixture, a_box = "auto", a_matcher = "vineyard", a_dims, a_out;
  double a_delta = 0, a_tol = -1;
  bool a_lenient = false;
  approx->add_option("input", a_input, "Complex file");
  approx->add_option("--fixture", a_fixture, "Built-in fixture name");
  approx->add_option("--delta", a_delta, "Grid spacing")->required();
  approx->add_option("--box", a_box, "auto or LOW:HIGH, e.g. 0,0:4,4");
  approx->add_option("--matcher", a_matcher)->check(CLI::IsMember({"vineyard", "compatibility"}));
  approx->add_option("--dims", a_dims, "Homology degrees, comma separated");
  approx->add_option("--tol", a_tol, "Coordinate equality tolerance");
  approx->add_flag("--lenient", a_lenient, "Warn instead of failing on unlabeled endpoints outside K");
  approx->add_option("-o,--output", a_out, "Module JSON path (stdout if omitted)");

  auto* inspect = app.add_subcommand("inspect", "Validate and summarize a complex");
  std::string i_input, i_fixture;
  inspect->add_option("input", i_input);
  inspect->add_option("--fixture", i_fixture);

  auto* fix = app.add_subcommand("fixture", "Write a built-in fixture");
  std::string f_name, f_out;
  bool f_list = false, f_truth = false;
  double f_delta = 1.0;
  fix->add_option("name", f_name);
  fix->add_flag("--list", f_list, "List fixture names");
  fix->add_flag("--truth", f_truth, "Write the recorded decomposition as a module document");
  fix->add_option("--delta", f_delta, "Scale of the fig12 module fixtures");
  fix->add_option("-o,--output", f_out);

  auto* rast = app.add_subcommand("rasterize", "Pointwise dimension raster of a module document");
  std::string r_module, r_box = "auto", r_format = "csv", r_out;
  int r_res = 100;
  rast->add_option("module", r_module)->required();
  rast->add_option("--box", r_box);
  rast->add_option("--resolution", r_res)->check(CLI::PositiveNumber);
  rast->add_option("--format", r_format)->check(CLI::IsMember({"csv", "json"}));
  rast->add_option("-o,--output", r_out);

  auto* cmp = app.add_subcommand("compare", "Interleaving and bottleneck estimates between two module documents");
  std::string c_a, c_b, c_probe = "auto";
  double c_res = 0;
  cmp->add_option("a", c_a)->required();
  cmp->add_option("b", c_b)->required();
  cmp->add_option("--resolution", c_res, "Probe resolution (default: diameter/200)");
  cmp->add_option("--probe", c_probe, "auto or LOW:HIGH");

  auto* bench = app.add_subcommand("bench", "Time approximation on synthetic lower-star bifiltrations");
  std::string b_sizes = "1000", b_deltas = "0.05", b_matcher = "vineyard", b_out, b_dims = "0,1";
  std::uint64_t b_seed = 1;
  bench->add_option("--sizes", b_sizes, "Target simplex counts");
  bench->add_option("--deltas", b_deltas, "Grid spacings");
  bench->add_option("--matcher", b_matcher)->check(CLI::IsMember({"vineyard", "compatibility"}));
  bench->add_option("--dims", b_dims);
  bench->add_option("--seed", b_seed);
  bench->add_option("-o,--output", b_out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    kernels::set_threads(threads);

    if (*approx) {
      if (!(a_delta > 0) || !std::isfinite(a_delta)) throw UsageError("--delta must be positive");
      Input in = load_input(a_input, a_fixture);
      ApproxOptions opt;
      opt.delta = a_delta;
      opt.matcher = parse_matcher(a_matcher);
      opt.tol = a_tol;
      opt.lenient = a_lenient;
      if (!a_dims.empty()) {
        opt.dims.clear();
        for (double d : parse_list(a_dims, "--dims")) opt.dims.push_back(static_cast<int>(d));
      } else if (in.fx) {
        opt.dims = {in.fx->hom_dim};
      }
      if (opt.dims.empty()) throw UsageError("--dims must name at least one degree");
      const Box K = parse_box(a_box, static_cast<std::size_t>(in.complex.n_params)).value_or(in.complex.grade_box());
      const auto t0 = std::chrono::steady_clock::now();
      ApproxModule M = approximate_module(in.complex, K, opt);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      write_output(a_out, module_to_json(M), out);
      std::ostream& log = a_out.empty() ? err : out;
      log << "summands: " << M.intervals.size() << "\nlines: " << M.n_lines << "\nwall time: " << secs << " s\n";
      if (opt.matcher == Matcher::vineyard) log << "max transpositions per step: " << M.max_transpositions << "\n";
      log << "warnings: " << M.warnings.size() << "\n";
      for (const auto& w : M.warnings) log << "  " << w << "\n";
      return kOk;
    }

    if (*inspect) {
      Input in = load_input(i_input, i_fixture);
      const auto& c = in.complex;
      std::vector<std::size_t> per_dim(static_cast<std::size_t>(std::max(0, c.max_dim() + 1)), 0);
      for (const auto& s : c.simplices) ++per_dim[s.dim];
      Box b = c.grade_box();
      out << "n_params: " << c.n_params << "\nsimplices: " << c.size() << "\n";
      for (std::size_t d = 0; d < per_dim.size(); ++d) out << "  dim " << d << ": " << per_dim[d] << "\n";
      out << "grade box:";
      for (std::size_t i = 0; i < b.dim(); ++i) out << " [" << b.low[i] << ", " << b.high[i] << "]";
      out << "\nvalid: yes\n";
      return kOk;
    }

    if (*fix) {
      if (f_list) {
        for (const auto& n : fixture_names()) out << n << "\n";
        out << "fig12_two_squares\nfig12_square\n";
        return kOk;
      }
      if (f_name.empty()) throw UsageError("fixture name required (see --list)");
      if (f_name == "fig12_two_squares" || f_name == "fig12_square") {
        if (!(f_delta > 0)) throw UsageError("--delta must be positive");
        write_output(f_out, module_to_json(fig12_module(f_name == "fig12_two_squares", f_delta)), out);
        return kOk;
      }
      Fixture fx = fixture(f_name);
      write_output(f_out, f_truth ? module_to_json(truth_module(fx)) : serialize(fx.complex), out);
      return kOk;
    }

    if (*rast) {
      ApproxModule M = module_from_json(read_file(r_module));
      auto box = parse_box(r_box, static_cast<std::size_t>(M.n_params));
      if (!box) {
        if (M.box.dim() != static_cast<std::size_t>(M.n_params)) throw DataError("module has no box; pass --box");
        box = M.box;
      }
      Raster r = rasterize(M.intervals, *box, r_res);
      write_output(r_out, r_format == "json" ? raster_to_json(r) : raster_to_csv(r), out);
      return kOk;
    }

    if (*cmp) {
      ApproxModule A = module_from_json(read_file(c_a)), B = module_from_json(read_file(c_b));
      if (A.n_params != B.n_params) throw DataError("modules have different parameter counts");
      auto probe = parse_box(c_probe, static_cast<std::size_t>(A.n_params)).value_or(default_probe(A.intervals, B.intervals));
      double res = c_res > 0 ? c_res : probe.diameter() / 200;
      if (!(res > 0)) res = 1e-3;
      double di = estimate_interleaving(A.intervals, B.intervals, probe, res);
      double db = bottleneck_estimate(A.intervals, B.intervals, probe, res);
      out << "d_I estimate: " << di << "\nd_b estimate: " << db << "\nprobe low:";
      for (double v : probe.low) out << ' ' << v;
      out << "\nprobe high:";
      for (double v : probe.high) out << ' ' << v;
      out << "\nresolution: " << res << "\n";
      return kOk;
    }

    if (*bench) {
      std::vector<int> dims;
      for (double d : parse_list(b_dims, "--dims")) dims.push_back(static_cast<int>(d));
      std::vector<double> deltas = parse_list(b_deltas, "--deltas");
      for (double d : deltas)
        if (!(d > 0)) throw UsageError("--deltas must be positive");
      std::ostringstream csv;
      csv << "n_simplices,n_lines,seconds\n";
      for (double size : parse_list(b_sizes, "--sizes")) {
        if (size < 0) throw UsageError("--sizes must be nonnegative");
        int side = side_for_size(static_cast<std::size_t>(size));
        if (side < 1) continue;
        FilteredComplex c = synthetic_lower_star(side, b_seed);
        for (double d : deltas) {
          BenchRow row = bench_once(c, d, parse_matcher(b_matcher), dims);
          csv << row.n_simplices << ',' << row.n_lines << ',' << row.seconds << "\n";
        }
      }
      write_output(b_out, csv.str(), out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const AlgorithmError& e) {
    err << "error: " << e.what() << "\n";
    return kAlgorithmError;
  }
  return kOk;
}

}  // namespace mpma
