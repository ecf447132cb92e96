// cteig: eigenvalues of the tridiagonal Hermitian Toeplitz matrix with
// corner perturbations, through characteristic-equation fixed points.
//
// Subcommands:
//   spectrum  all n eigenvalues for a single (alpha, n)
//   table     asymptotic-error table over a list of n
//   verify    solver-vs-oracle comparison plus residual certificates
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 solver failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cteig/report.hpp"

namespace {

struct CommonOptions {
  std::string alpha_re = "0";
  std::string alpha_im = "0";
  long precision_bits = 256;
  std::string method = "auto";
  std::string format = "csv";
  std::string output;
  bool emit_plot_data = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--alpha-re", o.alpha_re, "Real part of alpha (decimal string)");
  cmd->add_option("--alpha-im", o.alpha_im, "Imaginary part of alpha (decimal string)");
  cmd->add_option("--precision-bits", o.precision_bits, "Mantissa bits (>= 53)");
  cmd->add_option("--method", o.method, "auto|fixed_point|asymptotic|oracle")
      ->check(CLI::IsMember({"auto", "fixed_point", "asymptotic", "oracle"}));
  cmd->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "Output path (default stdout)");
  cmd->add_flag("--emit-plot-data", o.emit_plot_data,
                "Also write plot-ready (x,y) columns next to the output");
}

cteig::SpectrumMethod parse_method(const std::string& m) {
  if (m == "fixed_point") return cteig::SpectrumMethod::kFixedPoint;
  if (m == "asymptotic") return cteig::SpectrumMethod::kAsymptotic;
  if (m == "oracle") return cteig::SpectrumMethod::kOracle;
  return cteig::SpectrumMethod::kAuto;
}

cteig::OutputFormat parse_format(const std::string& f) {
  return f == "json" ? cteig::OutputFormat::kJson : cteig::OutputFormat::kCsv;
}

// Parses alpha at the full target precision before any classification, so
// the regime decision never sees a double-rounded value.
cteig::PerturbationParams make_params(const CommonOptions& o, long n) {
  cteig::PrecisionContext ctx(o.precision_bits);
  cteig::Complex alpha(cteig::Real::from_string(o.alpha_re, ctx),
                       cteig::Real::from_string(o.alpha_im, ctx));
  return cteig::PerturbationParams::create(alpha, n, ctx);
}

// Solver failures must name the regime and the contraction thresholds.
std::string regime_context(const cteig::PerturbationParams& p) {
  std::string msg = std::string(" [regime=") + cteig::regime_name(p.regime);
  msg += ", N1=" + std::to_string(p.n1_threshold.to_double());
  if (p.regime == cteig::Regime::kStrong) {
    msg += ", N2=" + std::to_string(p.n2_threshold.to_double());
  }
  msg += ", n=" + std::to_string(p.n) + "]";
  return msg;
}

template <typename F>
auto with_regime_context(const cteig::PerturbationParams& p, F&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(e.what() + regime_context(p));
  }
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output path: " + path);
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  // Sibling stream for plot data: "<path>.<tag>.csv", or stdout sections.
  std::unique_ptr<std::ofstream> sibling(const std::string& tag) {
    if (path_.empty()) {
      std::cout << "# --- " << tag << " ---\n";
      return nullptr;
    }
    auto f = std::make_unique<std::ofstream>(path_ + "." + tag + ".csv");
    if (!*f) throw std::invalid_argument("cannot open plot output for " + tag);
    return f;
  }

 private:
  std::string path_;
  std::ofstream file_;
};

int run_spectrum(const CommonOptions& o, long n, bool with_vectors) {
  cteig::PerturbationParams p = make_params(o, n);
  cteig::Spectrum s =
      with_regime_context(p, [&] { return cteig::full_spectrum(p, parse_method(o.method)); });
  OutputSink sink(o.output);
  cteig::write_spectrum(sink.stream(), s, parse_format(o.format), with_vectors);
  if (o.emit_plot_data) {
    if (p.regime != cteig::Regime::kCirculantPlus &&
        p.regime != cteig::Regime::kCirculantMinus) {
      auto f = sink.sibling("phase");
      cteig::write_phase_curves(f ? *f : std::cout, p, 512);
    }
    auto f = sink.sibling("theta_lambda");
    cteig::write_theta_lambda(f ? *f : std::cout, s);
  }
  return 0;
}

int run_table(const CommonOptions& o, const std::vector<long>& n_list) {
  if (n_list.empty()) throw CLI::ValidationError("--n-list", "must be nonempty");
  cteig::PrecisionContext ctx(o.precision_bits);
  cteig::Complex alpha(cteig::Real::from_string(o.alpha_re, ctx),
                       cteig::Real::from_string(o.alpha_im, ctx));
  std::vector<cteig::ErrorTableRow> rows;
  rows.reserve(n_list.size());
  for (long n : n_list) {
    if (n < 3) throw CLI::ValidationError("--n-list", "entries must be >= 3");
    rows.push_back(cteig::error_table_row(alpha, n, ctx));
  }
  OutputSink sink(o.output);
  cteig::write_table(sink.stream(), alpha, ctx, rows, parse_format(o.format));
  if (o.emit_plot_data) {
    auto f = sink.sibling("decay");
    cteig::write_decay(f ? *f : std::cout, rows);
  }
  return 0;
}

int run_verify(const CommonOptions& o, long n) {
  cteig::PerturbationParams p = make_params(o, n);
  cteig::VerifyReport rep = with_regime_context(p, [&] { return cteig::verify_run(p); });
  OutputSink sink(o.output);
  cteig::write_verify(sink.stream(), p, rep);
  return (rep.lambda_ok && rep.residual_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigensolver for tridiagonal Hermitian Toeplitz matrices with corner perturbations"};
  app.require_subcommand(1);

  CommonOptions spectrum_opts, table_opts, verify_opts;
  long spectrum_n = 0;
  bool with_vectors = false;
  std::vector<long> n_list;
  long verify_n = 50;

  CLI::App* spectrum = app.add_subcommand("spectrum", "Compute all eigenvalues for one n");
  add_common(spectrum, spectrum_opts);
  spectrum->add_option("--n", spectrum_n, "Matrix order (>= 3)")->required();
  spectrum->add_flag("--with-vectors", with_vectors, "Also compute eigenvector residuals");

  CLI::App* table = app.add_subcommand("table", "Asymptotic-error table over a list of n");
  add_common(table, table_opts);
  table->add_option("--n-list", n_list, "Comma-separated matrix orders")
      ->required()
      ->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "Solver-vs-oracle verification");
  add_common(verify, verify_opts);
  verify->add_option("--n", verify_n, "Matrix order (default 50, <= 4096)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(spectrum_opts, spectrum_n, with_vectors);
    if (table->parsed()) return run_table(table_opts, n_list);
    return run_verify(verify_opts, verify_n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return 3;
  }
}
