// Acceptance suite: runs every reproduction criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cteig/report.hpp"
#include "cteig/spectrum.hpp"

namespace {

using namespace cteig;

const PrecisionContext kCtx256(256);

Real R(const char* s, const PrecisionContext& ctx = kCtx256) {
  return Real::from_string(s, ctx);
}

Complex C(const char* re, const char* im) { return Complex(R(re), R(im)); }

struct Failure {
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

// +-1 unit in the 3rd significant digit.
bool sig3_match(double computed, double expected, std::string* why) {
  double unit = std::pow(10.0, std::floor(std::log10(std::fabs(expected))) - 2.0);
  if (std::fabs(computed - expected) <= unit * 1.0000001) return true;
  char buf[160];
  std::snprintf(buf, sizeof buf, "got %.6g, expected %.6g (+-%.1g)", computed, expected, unit);
  *why = buf;
  return false;
}

struct TableExpectation {
  long n;
  double r_inf;
  double n3_r_inf;
};

void check_table(const Complex& alpha, const std::vector<TableExpectation>& expects,
                 Criterion* c, std::vector<ErrorTableRow>* rows_out = nullptr,
                 bool check_decay_ratios = true) {
  double prev_r = 0;
  long prev_n = 0;
  for (const auto& e : expects) {
    ErrorTableRow row = error_table_row(alpha, e.n, kCtx256);
    if (rows_out) rows_out->push_back(row);
    std::string why;
    if (!sig3_match(row.r_inf.to_double(), e.r_inf, &why)) {
      c->pass = false;
      c->detail += " [n=" + std::to_string(e.n) + " R_inf " + why + "]";
    }
    if (!sig3_match(row.n3_r_inf.to_double(), e.n3_r_inf, &why)) {
      c->pass = false;
      c->detail += " [n=" + std::to_string(e.n) + " n3*R_inf " + why + "]";
    }
    // across doubling n, successive R_inf ratios stay in the n^-3 band
    if (check_decay_ratios && prev_n > 0 && e.n == 2 * prev_n) {
      double ratio = prev_r / row.r_inf.to_double();
      if (ratio < 6.0 || ratio > 10.0) {
        c->pass = false;
        c->detail += " [decay ratio " + std::to_string(ratio) + " outside [6,10] at n=" +
                     std::to_string(e.n) + "]";
      }
    }
    prev_r = row.r_inf.to_double();
    prev_n = e.n;
  }
}

Complex sample_alpha(std::mt19937& rng, double lo, double hi) {
  std::uniform_real_distribution<double> mod(lo, hi);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  double m = mod(rng);
  double a = ang(rng);
  return Complex(Real(m * std::cos(a), kCtx256), Real(m * std::sin(a), kCtx256));
}

// ---- criteria ----

void criterion1(Criterion* c) {
  check_table(C("-0.3", "0.5"),
              {{64, 1.76e-4, 46.05},
               {128, 2.49e-5, 52.13},
               {256, 3.29e-6, 55.12},
               {512, 4.22e-7, 56.58},
               {1024, 5.34e-8, 57.31},
               {2048, 6.71e-9, 57.67},
               {4096, 8.42e-10, 57.84},
               {8192, 1.05e-10, 57.93}},
              c);
}

void criterion2(Criterion* c) {
  check_table(C("0.7", "0.6"), {{64, 1.02e-3, 266.71}, {8192, 7.75e-10, 425.99}}, c);
}

void criterion3(Criterion* c) {
  check_table(C("2", "1"), {{64, 1.55e-4, 40.59}, {8192, 8.97e-11, 49.29}}, c);
  std::vector<ErrorTableRow> rows;
  // |alpha| = 1.06 crosses N2 ~ 420 inside this n range and the printed
  // n^3 R_inf column itself drifts non-monotonically there (57.51, 45.90,
  // 235.36, ...), so the doubling-ratio band applies only to the weak
  // tables, not to these rows.
  check_table(C("0.8", "-0.7"),
              {{64, 2.19e-4, 57.51},
               {128, 2.19e-5, 45.90},
               {256, 1.40e-5, 235.36},
               {512, 2.99e-6, 401.90},
               {1024, 4.55e-7, 488.25}},
              c, &rows, /*check_decay_ratios=*/false);
  // N2(0.8-0.7i) ~ 420: the first three rows must have flagged oracle
  // extremes, the last two must be pure fixed point.
  for (size_t i = 0; i < rows.size(); ++i) {
    bool expect_oracle = rows[i].n < 420;
    if (rows[i].oracle_extremes != expect_oracle) {
      c->pass = false;
      c->detail += " [n=" + std::to_string(rows[i].n) + " oracle-extreme flag wrong]";
    }
  }
}

void criterion4(Criterion* c) {
  struct Case {
    const char *re, *im;
    std::vector<long> ns;
    double limit;
    double rel_tol;
  };
  for (const Case& k : {Case{"2", "1", {32, 48, 64}, 2.86, 0.01},
                        Case{"0.8", "-0.7", {1024, 2048}, 1.12e-2, 0.02}}) {
    for (long n : k.ns) {
      PerturbationParams p = PerturbationParams::create(Complex(R(k.re), R(k.im)), n, kCtx256);
      ThetaSolution sol = solve_theta_extreme(p, ExtremeSide::kFirst);
      Real lam = lambda_map_below(sol.theta);
      double scaled = (exp(n * log(p.alpha_abs)) * abs(lam + p.s_alpha)).to_double();
      if (std::fabs(scaled / k.limit - 1.0) > k.rel_tol) {
        c->pass = false;
        char buf[160];
        std::snprintf(buf, sizeof buf, " [alpha=%s+%si n=%ld scaled=%.4g limit=%.4g]", k.re,
                      k.im, n, scaled, k.limit);
        c->detail += buf;
      }
    }
  }
}

struct CorpusEntry {
  PerturbationParams params;
  Spectrum spectrum;
};

void criterion5(Criterion* c, std::vector<CorpusEntry>* corpus) {
  std::mt19937 rng(20240517);
  const PrecisionContext oracle_ctx(53);
  double worst = 0;
  int sampled = 0;
  while (sampled < 30) {
    Complex a = sample_alpha(rng, 0.0, 3.0);
    double m = a.modulus().to_double();
    if (std::fabs(m - 1.0) < 0.02) continue;  // keep contraction thresholds finite
    ++sampled;
    for (long n : {6L, 17L, 32L, 50L}) {
      PerturbationParams p = PerturbationParams::create(a, n, kCtx256);
      Spectrum sol = full_spectrum(p, SpectrumMethod::kFixedPoint);
      OracleResult gen = oracle_spectrum(p, oracle_ctx);
      for (long i = 0; i < n; ++i) {
        worst = std::max(worst, std::fabs(sol.eigenvalues[i].to_double() -
                                          gen.eigenvalues[i].to_double()));
      }
      corpus->push_back(CorpusEntry{p, std::move(sol)});
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |delta lambda| = %.3g over 120 spectra", worst);
  c->detail = buf;
  if (!(worst < 2e-13)) c->pass = false;
}

void criterion6(Criterion* c) {
  std::mt19937 rng(424243);
  // One weak and one strong draw, away from the unit circle so the
  // fixed-point/bisection paths (not the closed forms) are exercised.
  std::vector<Complex> alphas = {sample_alpha(rng, 0.3, 0.8), sample_alpha(rng, 1.3, 2.5)};
  const PrecisionContext wide(3322);
  Real bound = Real::from_string("1e-996", wide);
  for (const Complex& a256 : alphas) {
    Complex a(Real::from_string(a256.re.str(), wide), Real::from_string(a256.im.str(), wide));
    PerturbationParams p = PerturbationParams::create(a, 50, wide);
    Spectrum s = full_spectrum(p);
    Real worst(0L, wide);
    for (long i = 0; i < 50; ++i) {
      if (!s.thetas[i].has_value()) continue;
      worst = max(worst, eigenvector(p, *s.thetas[i]).residual);
    }
    if (!(worst < bound)) {
      c->pass = false;
      c->detail += " [3322-bit residual " + worst.str().substr(0, 12) + "... too large]";
    }
  }
  // Fast-mode variant: 256 bits must reach 1e-60.
  Real fast_bound = R("1e-60");
  for (const Complex& a : alphas) {
    PerturbationParams p = PerturbationParams::create(a, 50, kCtx256);
    Spectrum s = full_spectrum(p);
    for (long i = 0; i < 50; ++i) {
      if (!s.thetas[i].has_value()) continue;
      Real r = eigenvector(p, *s.thetas[i]).residual;
      if (!(r < fast_bound)) {
        c->pass = false;
        c->detail += " [256-bit residual too large at index " + std::to_string(i + 1) + "]";
        break;
      }
    }
  }
}

void criterion7(Criterion* c) {
  std::mt19937 rng(777001);
  const PrecisionContext oracle_ctx(53);
  Real guard = pow2(-40, kCtx256);
  for (int trial = 0; trial < 50; ++trial) {
    Complex a = sample_alpha(rng, 0.0, 0.95);
    for (long n = 3; n <= 40; ++n) {
      PerturbationParams p = PerturbationParams::create(a, n, kCtx256);
      OracleResult gen = oracle_spectrum(p, oracle_ctx);
      for (long j = 1; j <= n; ++j) {
        Real lo = lambda_map((j - 1) * p.pi / n);
        Real hi = lambda_map(j * p.pi / n);
        const Real& lam = gen.eigenvalues[j - 1];
        if (!(lam - lo > guard) || !(hi - lam > guard)) {
          c->pass = false;
          c->detail += " [sandwich violated at trial " + std::to_string(trial) + " n=" +
                       std::to_string(n) + " j=" + std::to_string(j) + "]";
          return;
        }
      }
    }
  }
}

void criterion8(Criterion* c) {
  std::mt19937 rng(990011);
  for (int trial = 0; trial < 50; ++trial) {
    Complex a = sample_alpha(rng, 1.0000001, 10.0);
    PerturbationParams p = PerturbationParams::create(a, 16, kCtx256);
    Real m = p.alpha_abs;
    Real cube = (m + 1L) * (m + 1L) * (m + 1L);
    Real t_lo = 1L - (m - 1L) / cube;
    Real band_lo = tanh(ldexp(log(m), -1));
    Real band_hi = tanh(3L * ldexp(log(m), -1));
    Real sq_bound = 2L / cube;
    for (int i = 0; i <= 100; ++i) {
      Real t = t_lo + i * (1L - t_lo) / 100L;
      Real v = extreme_transfer(p, ExtremeSide::kFirst, t);
      bool ok = abs(extreme_transfer_d1(p, ExtremeSide::kFirst, t)) <= 1L && v >= band_lo &&
                v <= band_hi && (1L - v * v) >= sq_bound;
      if (!ok) {
        c->pass = false;
        c->detail += " [band violated at trial " + std::to_string(trial) + " sample " +
                     std::to_string(i) + "]";
        return;
      }
    }
  }
}

void criterion9(Criterion* c) {
  const PrecisionContext ctx53(53);
  for (int sign : {1, -1}) {
    for (long n = 3; n <= 16; ++n) {
      Complex a(Real(sign, kCtx256), Real(0L, kCtx256));
      PerturbationParams p = PerturbationParams::create(a, n, kCtx256);
      ClosedFormSpectrum cf = closed_form_spectrum(p);
      OracleResult gen = oracle_spectrum(p, ctx53);
      // eigenvalues and multiplicity pattern against the oracle
      long idx = 0;
      for (const auto& [lam, count] : cf.multiplicity_pattern) {
        for (long k = 0; k < count; ++k, ++idx) {
          double diff = std::fabs(lam.to_double() - gen.eigenvalues[idx].to_double());
          if (diff > 1e-12) {
            c->pass = false;
            c->detail += " [alpha=" + std::to_string(sign) + " n=" + std::to_string(n) +
                         " idx=" + std::to_string(idx) + " |delta|=" + std::to_string(diff) + "]";
          }
        }
        // cluster boundaries: the next oracle eigenvalue must be distinct
        if (idx < n) {
          double gap = gen.eigenvalues[idx].to_double() - gen.eigenvalues[idx - 1].to_double();
          if (gap < 1e-8) {
            c->pass = false;
            c->detail += " [multiplicity pattern mismatch at alpha=" + std::to_string(sign) +
                         " n=" + std::to_string(n) + "]";
          }
        }
      }
      // eigenvector residuals at 53 bits
      PerturbationParams p53 = PerturbationParams::create(
          Complex(Real(sign, ctx53), Real(0L, ctx53)), n, ctx53);
      for (long j = 1; j <= n; ++j) {
        std::vector<Real> rv = eigvec_circulant_resolved(sign, n, j, ctx53);
        std::vector<Complex> v;
        for (const Real& x : rv) v.emplace_back(x, Real(0L, ctx53));
        Real lam = lambda_map(theta_circulant(sign, n, j, ctx53));
        if (!(residual_norm(p53, lam, v) < Real::from_string("1e-12", ctx53))) {
          c->pass = false;
          c->detail += " [residual at alpha=" + std::to_string(sign) + " n=" +
                       std::to_string(n) + " j=" + std::to_string(j) + "]";
        }
      }
    }
  }
}

void criterion10(Criterion* c, const std::vector<CorpusEntry>& corpus) {
  long checked = 0;
  for (const CorpusEntry& e : corpus) {
    const PerturbationParams& p = e.params;
    long bits = e.spectrum.eigenvalue_bits;
    Real sum(0L, p.ctx);
    Real prod(1L, p.ctx);
    for (const Real& v : e.spectrum.eigenvalues) {
      sum = sum + v;
      prod = prod * v;
    }
    Real det = p.n * (1L - p.alpha_abs_sq) + p.corner_sq(-1);
    Real rel = pow2(32 - bits, p.ctx) * p.n;
    bool sum_ok = abs(sum - 2L * p.n) <= rel * ldexp(Real(p.n, p.ctx), 1);
    bool prod_ok = abs(prod - det) <= rel * max(Real(1L, p.ctx), abs(det));
    if (!sum_ok || !prod_ok) {
      c->pass = false;
      c->detail += " [identity failed for n=" + std::to_string(p.n) + " |alpha|~" +
                   std::to_string(p.alpha_abs.to_double()) + (sum_ok ? " (product)" : " (trace)") +
                   "]";
    }
    ++checked;
  }
  c->detail = std::to_string(checked) + " spectra checked" + c->detail;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  std::vector<CorpusEntry> corpus;

  auto run = [&](int id, const std::string& name, auto&& fn) {
    Criterion c{id, name};
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(&c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail += std::string(" [exception: ") + e.what() + "]";
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d] %s  %s%s%s  (%.1f s)\n", c.id, c.pass ? "PASS" : "FAIL", name.c_str(),
                c.detail.empty() ? "" : " --", c.detail.c_str(), c.seconds);
    std::fflush(stdout);
    results.push_back(std::move(c));
  };

  run(1, "Table 1 left panel (alpha=-0.3+0.5i, n=64..8192)", criterion1);
  run(2, "Table 1 right panel (alpha=0.7+0.6i)", criterion2);
  run(3, "Table 2 (alpha=2+i and alpha=0.8-0.7i)", criterion3);
  run(4, "extreme-eigenvalue exponential law", criterion4);
  run(5, "oracle equivalence over random alphas",
      [&](Criterion* c) { criterion5(c, &corpus); });
  run(6, "residual certificates (3322-bit and 256-bit fast mode)", criterion6);
  run(7, "localization sandwich over random weak alphas", criterion7);
  run(8, "transfer-function band inequalities", criterion8);
  run(9, "degenerate closed forms at alpha=+-1", criterion9);
  run(10, "trace and determinant identities over the corpus",
      [&](Criterion* c) { criterion10(c, corpus); });

  int failed = 0;
  for (const Criterion& c : results) failed += c.pass ? 0 : 1;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed;
}
