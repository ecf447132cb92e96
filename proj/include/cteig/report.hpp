#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cteig/spectrum.hpp"

namespace cteig {

enum class OutputFormat { kCsv, kJson };

/// One row of the asymptotic-error table: R_j = lambda_asympt_j -
/// lambda_fp_j per index, R_inf the max over j, and for the strong regime
/// the exponentially scaled extreme errors |alpha|^n |R_1| and
/// |alpha|^n |R_n|.
struct ErrorTableRow {
  long n = 0;
  Real r_inf;
  Real n3_r_inf;
  std::optional<Real> extreme_scaled_first;
  std::optional<Real> extreme_scaled_last;
  std::string methods;          ///< distinct per-index method tags, '+'-joined
  bool oracle_extremes = false; ///< extremes required the oracle fallback
};

ErrorTableRow error_table_row(const Complex& alpha, long n, const PrecisionContext& ctx);

/// Solver-vs-oracle comparison plus eigenvector residual certificates.
/// The oracle side always runs at 53 bits (the general-purpose double
/// eigensolver being reproduced); residuals run at the context precision.
struct VerifyReport {
  Real max_delta_lambda;
  long worst_delta_index = -1;
  Real max_residual;
  long worst_residual_index = -1;
  long vector_count = 0;  ///< eigenpairs with a solved theta
  bool lambda_ok = false;
  bool residual_ok = false;
};

VerifyReport verify_run(const PerturbationParams& p);

// ---- serialization ----

/// RFC-4180 quoting: wraps the field when it contains commas, quotes or
/// newlines.
std::string csv_quote(const std::string& field);

/// Three-significant-digit scientific form, e.g. "1.76e-04".
std::string format_sig3(const Real& x);

/// Fixed two decimals, e.g. "46.05".
std::string format_fixed2(const Real& x);

/// Spectrum rows: index, theta, branch, eigenvalue, method, multiplicity,
/// localization interval, optional residual. Full-precision decimal strings
/// that re-parse bit-identically.
void write_spectrum(std::ostream& os, const Spectrum& s, OutputFormat fmt, bool with_vectors);

/// Error table rows; three-significant-digit columns mirroring the printed
/// tables. CSV header:
/// n,R_inf,n3_R_inf,extreme_scaled_first,extreme_scaled_last,methods
void write_table(std::ostream& os, const Complex& alpha, const PrecisionContext& ctx,
                 const std::vector<ErrorTableRow>& rows, OutputFormat fmt);

void write_verify(std::ostream& os, const PerturbationParams& p, const VerifyReport& r);

// Plot-ready (x, y) column dumps.
void write_phase_curves(std::ostream& os, const PerturbationParams& p, long samples);
void write_theta_lambda(std::ostream& os, const Spectrum& s);
void write_decay(std::ostream& os, const std::vector<ErrorTableRow>& rows);

}  // namespace cteig
