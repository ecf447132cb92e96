#include "cteig/report.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include <json.hpp>

#include "cteig/interior.hpp"

namespace cteig {

namespace {

std::vector<Real> asymptotic_values(const PerturbationParams& p) {
  Spectrum a = full_spectrum(p, SpectrumMethod::kAsymptotic);
  return a.eigenvalues;
}

}  // namespace

ErrorTableRow error_table_row(const Complex& alpha, long n, const PrecisionContext& ctx) {
  PerturbationParams p = PerturbationParams::create(alpha, n, ctx);
  Spectrum fp = full_spectrum(p, SpectrumMethod::kFixedPoint);
  std::vector<Real> asym = asymptotic_values(p);

  ErrorTableRow row;
  row.n = n;
  Real r_inf(0L, ctx);
  for (long i = 0; i < n; ++i) {
    r_inf = max(r_inf, abs(asym[i] - fp.eigenvalues[i]));
  }
  row.r_inf = r_inf;
  row.n3_r_inf = r_inf * n * n * n;

  if (p.regime == Regime::kStrong) {
    Real growth = exp(n * log(p.alpha_abs));
    // Once |R| sinks below the rounding floor of the eigenvalues themselves,
    // |alpha|^n |R| amplifies noise instead of signal; leave those fields
    // empty (a higher --precision-bits resolves them).
    Real floor = pow2(32 - ctx.mantissa_bits, ctx) * max(Real(1L, ctx), abs(asym[n - 1]));
    Real first = abs(asym[0] - fp.eigenvalues[0]);
    Real last = abs(asym[n - 1] - fp.eigenvalues[n - 1]);
    if (first > floor) row.extreme_scaled_first = growth * first;
    if (last > floor) row.extreme_scaled_last = growth * last;
  }

  std::set<SolveMethod> seen(fp.methods.begin(), fp.methods.end());
  std::string joined;
  for (SolveMethod m : {SolveMethod::kClosedForm, SolveMethod::kFixedPoint,
                        SolveMethod::kBisection, SolveMethod::kOracle}) {
    if (seen.count(m)) {
      if (!joined.empty()) joined += "+";
      joined += method_name(m);
    }
  }
  row.methods = joined;
  row.oracle_extremes = fp.used_oracle_fallback ||
                        (p.regime == Regime::kStrong &&
                         (fp.methods.front() == SolveMethod::kOracle ||
                          fp.methods.back() == SolveMethod::kOracle));
  return row;
}

VerifyReport verify_run(const PerturbationParams& p) {
  if (p.n > kDenseLimit) {
    throw OracleLimitError("verify_run: n exceeds the oracle limit");
  }
  Spectrum sol = full_spectrum(p, SpectrumMethod::kAuto);
  OracleResult gen = oracle_spectrum(p, PrecisionContext(53));

  VerifyReport rep;
  rep.max_delta_lambda = Real(0L, p.ctx);
  rep.max_residual = Real(0L, p.ctx);
  for (long i = 0; i < p.n; ++i) {
    Real d = abs(sol.eigenvalues[i] - gen.eigenvalues[i]);
    if (rep.worst_delta_index < 0 || d > rep.max_delta_lambda) {
      rep.max_delta_lambda = d;
      rep.worst_delta_index = i + 1;
    }
  }
  for (long i = 0; i < p.n; ++i) {
    if (!sol.thetas[i].has_value()) continue;
    EigenPair pair = eigenvector(p, *sol.thetas[i]);
    ++rep.vector_count;
    if (rep.worst_residual_index < 0 || pair.residual > rep.max_residual) {
      rep.max_residual = pair.residual;
      rep.worst_residual_index = i + 1;
    }
  }
  rep.lambda_ok = rep.max_delta_lambda < Real::from_string("2e-13", p.ctx);
  rep.residual_ok =
      rep.vector_count == 0 || rep.max_residual < pow2(-p.ctx.mantissa_bits / 2, p.ctx);
  return rep;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string format_sig3(const Real& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", x.to_double());
  return buf;
}

std::string format_fixed2(const Real& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x.to_double());
  return buf;
}

namespace {

struct SpectrumRowView {
  long j;
  std::string theta;
  std::string branch;
  std::string lambda;
  std::string method;
  long multiplicity;
  std::string interval_lo;
  std::string interval_hi;
  std::string residual;  // empty unless requested and available
};

std::vector<SpectrumRowView> spectrum_rows(const Spectrum& s, bool with_vectors) {
  const PerturbationParams& p = s.params;
  std::vector<SpectrumRowView> rows;
  rows.reserve(p.n);
  for (long i = 0; i < p.n; ++i) {
    SpectrumRowView r;
    r.j = i + 1;
    r.lambda = s.eigenvalues[i].str();
    r.method = method_name(s.methods[i]);
    r.multiplicity = s.multiplicity[i];
    r.interval_lo = lambda_map((i)*p.pi / p.n).str();
    r.interval_hi = lambda_map((i + 1) * p.pi / p.n).str();
    if (s.thetas[i].has_value()) {
      r.theta = s.thetas[i]->theta.str();
      r.branch = branch_name(s.thetas[i]->branch);
      if (with_vectors) {
        r.residual = eigenvector(p, *s.thetas[i]).residual.str();
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

void write_spectrum(std::ostream& os, const Spectrum& s, OutputFormat fmt, bool with_vectors) {
  auto rows = spectrum_rows(s, with_vectors);
  if (fmt == OutputFormat::kCsv) {
    os << "j,theta,branch,lambda,method,multiplicity,interval_lo,interval_hi";
    if (with_vectors) os << ",residual";
    os << "\n";
    for (const auto& r : rows) {
      os << r.j << ',' << csv_quote(r.theta) << ',' << r.branch << ',' << csv_quote(r.lambda)
         << ',' << r.method << ',' << r.multiplicity << ',' << csv_quote(r.interval_lo) << ','
         << csv_quote(r.interval_hi);
      if (with_vectors) os << ',' << csv_quote(r.residual);
      os << "\n";
    }
    return;
  }
  nlohmann::json doc;
  doc["alpha_re"] = s.params.alpha.re.str();
  doc["alpha_im"] = s.params.alpha.im.str();
  doc["n"] = s.params.n;
  doc["precision_bits"] = s.params.ctx.mantissa_bits;
  doc["regime"] = regime_name(s.params.regime);
  doc["localization_certified"] = s.localization_certified;
  doc["near_unimodular_warning"] = s.near_unimodular_warning;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json jr;
    jr["j"] = r.j;
    jr["theta"] = r.theta;
    jr["branch"] = r.branch;
    jr["lambda"] = r.lambda;
    jr["method"] = r.method;
    jr["multiplicity"] = r.multiplicity;
    jr["interval_lo"] = r.interval_lo;
    jr["interval_hi"] = r.interval_hi;
    if (with_vectors) jr["residual"] = r.residual;
    doc["rows"].push_back(std::move(jr));
  }
  os << doc.dump(2) << "\n";
}

void write_table(std::ostream& os, const Complex& alpha, const PrecisionContext& ctx,
                 const std::vector<ErrorTableRow>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::kCsv) {
    os << "n,R_inf,n3_R_inf,extreme_scaled_first,extreme_scaled_last,methods\n";
    for (const auto& r : rows) {
      os << r.n << ',' << format_sig3(r.r_inf) << ',' << format_fixed2(r.n3_r_inf) << ',';
      if (r.extreme_scaled_first) os << format_sig3(*r.extreme_scaled_first);
      os << ',';
      if (r.extreme_scaled_last) os << format_sig3(*r.extreme_scaled_last);
      os << ',' << csv_quote(r.methods) << "\n";
    }
    return;
  }
  nlohmann::json doc;
  doc["alpha_re"] = alpha.re.str();
  doc["alpha_im"] = alpha.im.str();
  doc["precision_bits"] = ctx.mantissa_bits;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json jr;
    jr["n"] = r.n;
    jr["R_inf"] = format_sig3(r.r_inf);
    jr["n3_R_inf"] = format_fixed2(r.n3_r_inf);
    if (r.extreme_scaled_first) jr["extreme_scaled_first"] = format_sig3(*r.extreme_scaled_first);
    if (r.extreme_scaled_last) jr["extreme_scaled_last"] = format_sig3(*r.extreme_scaled_last);
    jr["methods"] = r.methods;
    doc["rows"].push_back(std::move(jr));
  }
  os << doc.dump(2) << "\n";
}

void write_verify(std::ostream& os, const PerturbationParams& p, const VerifyReport& r) {
  os << "alpha = " << p.alpha.re.str() << " + " << p.alpha.im.str() << " i, n = " << p.n
     << ", regime = " << regime_name(p.regime) << ", precision = " << p.ctx.mantissa_bits
     << " bits\n";
  os << "max |delta lambda| vs 53-bit oracle: " << format_sig3(r.max_delta_lambda)
     << " (worst index " << r.worst_delta_index << ", threshold 2e-13)\n";
  if (r.vector_count > 0) {
    os << "max eigenvector residual over " << r.vector_count
       << " theta-solved pairs: " << format_sig3(r.max_residual) << " (worst index "
       << r.worst_residual_index << ", threshold 2^-" << p.ctx.mantissa_bits / 2 << ")\n";
  } else {
    os << "no theta-solved eigenpairs (oracle fallback); residual check skipped\n";
  }
  os << "verdict: " << ((r.lambda_ok && r.residual_ok) ? "PASS" : "FAIL") << "\n";
}

void write_phase_curves(std::ostream& os, const PerturbationParams& p, long samples) {
  os << "x,phase_odd,phase_even\n";
  for (long i = 0; i <= samples; ++i) {
    Real x = i * p.pi / samples;
    os << x.str() << ',' << phase_correction(p, Parity::kOdd, x).str() << ','
       << phase_correction(p, Parity::kEven, x).str() << "\n";
  }
}

void write_theta_lambda(std::ostream& os, const Spectrum& s) {
  os << "theta,lambda\n";
  for (long i = 0; i < s.params.n; ++i) {
    if (!s.thetas[i].has_value()) continue;
    os << s.thetas[i]->theta.str() << ',' << s.eigenvalues[i].str() << "\n";
  }
}

void write_decay(std::ostream& os, const std::vector<ErrorTableRow>& rows) {
  os << "n,R_inf,n3_R_inf\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.r_inf.str() << ',' << r.n3_r_inf.str() << "\n";
  }
}

}  // namespace cteig
