#pragma once

// Seeded verification suites, one per scope. Each suite draws admissible
// parameter tuples from its own generator, runs the module checkers on them
// (in parallel, assembled in order) and returns the reports.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bilab/bi_operator.hpp"
#include "bilab/bi_poly.hpp"
#include "bilab/dunkl_dirac.hpp"
#include "bilab/errors.hpp"
#include "bilab/parallel.hpp"
#include "bilab/racah.hpp"
#include "bilab/random.hpp"
#include "bilab/report.hpp"
#include "bilab/sl1.hpp"

namespace bilab {

inline constexpr std::uint64_t kDefaultSeed = 20140115;

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  std::optional<unsigned> tuples;
  std::optional<unsigned> maxdeg;  // monomial degree (bi, sl1 Dunkl) or slice degree (dirac)
  std::optional<unsigned> nmax;    // polynomial / basis index bound
  std::optional<unsigned> N;       // largest Racah truncation
  bool inject_fault = false;       // deliberately assert a false identity
};

struct SuiteResult {
  std::string scope;
  unsigned tuples = 0;
  std::vector<VerificationReport> reports;

  std::size_t checked() const { return sum([](const auto& r) { return r.checked(); }); }
  std::size_t failed() const { return sum([](const auto& r) { return r.failed(); }); }
  bool ok() const { return failed() == 0; }

 private:
  template <class F>
  std::size_t sum(F f) const {
    std::size_t n = 0;
    for (const auto& r : reports) n += f(r);
    return n;
  }
};

namespace detail {

// Scopes get independent streams so changing one suite's size leaves the others alone.
inline TupleGenerator scope_generator(std::uint64_t seed, std::uint64_t salt) {
  return TupleGenerator(seed ^ (salt * 0x9E3779B97F4A7C15ULL));
}

/// Fault injection: asserts the Casimir equals its true value shifted by 1/4.
inline void inject(VerificationReport& rep, const BIParams& P) {
  Rat got = casimir_scalar(P, 2);
  rep.add_exact("injected fault: Casimir = 2(sum of squares) + 1/4", 0, got.str(),
                (P.casimir_value() + Rat(1, 4)).str());
}

}  // namespace detail

/// All constructions used by the bi suite succeed for degree <= nmax.
inline bool bi_admissible(const BIParams& P, unsigned nmax) {
  try {
    validate_hypergeometric(P, nmax);
    for (unsigned n = 0; n <= nmax + 1; ++n) recurrence_coeffs(P, n);
    for (unsigned n = 0; n <= nmax; ++n) {
      ladder_coeffs(P, n);
      for (unsigned m = 0; m < n; ++m)
        if (eigenvalue(P, n) == eigenvalue(P, m)) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

inline std::vector<BIParams> random_bi_tuples(TupleGenerator& g, unsigned count, unsigned nmax) {
  std::vector<BIParams> out;
  while (out.size() < count) {
    BIParams P{g.rational(20, 9), g.rational(20, 9), g.rational(20, 9), g.rational(20, 9)};
    if (bi_admissible(P, nmax)) out.push_back(P);
  }
  return out;
}

/// Tuples whose tridiagonal representation closes and is unitary; N uniform in [0, Nmax].
inline std::vector<RacahParams> random_racah_tuples(TupleGenerator& g, unsigned count, unsigned Nmax) {
  std::vector<RacahParams> out;
  while (out.size() < count) {
    RacahParams RP(g.above_minus_half(8, 3), g.above_minus_half(8, 3), g.above_minus_half(8, 3),
                   static_cast<unsigned>(g.integer(0, Nmax)));
    try {
      build_tridiag_rep(RP);
      bi_recurrence_all(RP.identifications(), RP.N);
    } catch (const Error&) {
      continue;
    }
    out.push_back(RP);
  }
  return out;
}

inline std::vector<DiracParams> random_dirac_tuples(TupleGenerator& g, unsigned count) {
  std::vector<DiracParams> out;
  for (unsigned i = 0; i < count; ++i)
    out.emplace_back(g.above_minus_half(6, 2), g.above_minus_half(6, 2), g.above_minus_half(6, 2));
  return out;
}

/// Relations and Casimir on monomials for every tuple; polynomial routes,
/// ladders and V on the first 20.
inline SuiteResult bi_suite(const SuiteConfig& cfg) {
  const unsigned count = cfg.tuples.value_or(50), maxdeg = cfg.maxdeg.value_or(12), nmax = cfg.nmax.value_or(10);
  const unsigned eig_nmax = std::max(nmax, 12u);
  auto g = detail::scope_generator(cfg.seed, 1);
  const auto tuples = random_bi_tuples(g, count, eig_nmax);
  SuiteResult res{"bi", count, {}};
  auto per = parallel_map(tuples.size(), [&](std::size_t i) {
    const BIParams& P = tuples[i];
    std::vector<VerificationReport> out;
    VerificationReport rel = check_bi_relations(P, maxdeg);
    Rat c = casimir_scalar(P, maxdeg);
    rel.add_exact("Casimir = 2(rho1^2+rho2^2+r1^2+r2^2) - 1/4", maxdeg, c.str(), P.casimir_value().str());
    if (cfg.inject_fault && i == 0) detail::inject(rel, P);
    out.push_back(std::move(rel));
    if (i < 20) {
      out.push_back(check_polynomial_routes(P, nmax, eig_nmax));
      out.push_back(check_ladder_and_v(P, nmax, maxdeg));
    }
    return out;
  });
  for (auto& v : per)
    for (auto& r : v) res.reports.push_back(std::move(r));
  return res;
}

inline SuiteResult sl1_suite(const SuiteConfig& cfg) {
  const unsigned count = cfg.tuples.value_or(10), maxdeg = cfg.maxdeg.value_or(12), nmax = cfg.nmax.value_or(10);
  auto g = detail::scope_generator(cfg.seed, 2);
  std::vector<ModuleParams> tuples;
  for (unsigned i = 0; i < count; ++i) tuples.emplace_back(i % 2 == 0 ? 1 : -1, g.above_minus_half(9, 3));
  SuiteResult res{"sl1", count, {}};
  auto per = parallel_map(tuples.size(), [&](std::size_t i) {
    std::vector<VerificationReport> out;
    out.push_back(module_bilinear_check(tuples[i], nmax));
    out.push_back(osp_casimir_check(tuples[i], nmax));
    out.push_back(dunkl_commutator_check(tuples[i].mu, maxdeg));
    return out;
  });
  for (auto& v : per)
    for (auto& r : v) res.reports.push_back(std::move(r));
  if (cfg.inject_fault) detail::inject(res.reports.front(), BIParams{Rat(1), Rat(2), Rat(1, 2), Rat(1, 4)});
  return res;
}

/// Exact representation, spectra, overlaps and finite orthogonality for every
/// tuple; the tensor-product oracle and central extension for tuples with N <= 6.
inline SuiteResult racah_suite(const SuiteConfig& cfg) {
  const unsigned count = cfg.tuples.value_or(20), Nmax = cfg.N.value_or(8);
  auto g = detail::scope_generator(cfg.seed, 3);
  const auto tuples = random_racah_tuples(g, count, Nmax);
  SuiteResult res{"racah", count, {}};
  auto per = parallel_map(tuples.size(), [&](std::size_t i) {
    const RacahParams& RP = tuples[i];
    std::vector<VerificationReport> out;
    TridiagRep rep = build_tridiag_rep(RP);
    out.push_back(verify_tridiag_rep(rep));
    out.push_back(k1_spectrum_check(rep, RP));
    out.push_back(racah_overlaps(rep).report);
    out.push_back(check_finite_orthogonality(RP.identifications(), RP.N));
    if (RP.N <= 6) {
      out.push_back(tensor_oracle(RP, RP.N));
      out.push_back(central_extension_check(RP, RP.N));
    }
    return out;
  });
  for (auto& v : per)
    for (auto& r : v) res.reports.push_back(std::move(r));
  if (cfg.inject_fault) detail::inject(res.reports.front(), tuples.front().identifications());
  return res;
}

inline SuiteResult dirac_suite(const SuiteConfig& cfg) {
  const unsigned count = cfg.tuples.value_or(10), maxdeg = cfg.maxdeg.value_or(6);
  auto g = detail::scope_generator(cfg.seed, 4);
  const auto tuples = random_dirac_tuples(g, count);
  SuiteResult res{"dirac", count, {}};
  res.reports.push_back(pauli_check());
  auto per = parallel_map(tuples.size(), [&](std::size_t i) {
    std::vector<VerificationReport> out;
    out.push_back(jj_commutator_check(tuples[i], maxdeg));
    out.push_back(gamma_square_identity(tuples[i], maxdeg));
    out.push_back(symmetry_check(tuples[i], maxdeg));
    return out;
  });
  for (auto& v : per)
    for (auto& r : v) res.reports.push_back(std::move(r));
  if (cfg.inject_fault) detail::inject(res.reports.front(), BIParams{Rat(1), Rat(2), Rat(1, 2), Rat(1, 4)});
  return res;
}

inline const std::vector<std::string>& suite_scopes() {
  static const std::vector<std::string> scopes{"bi", "sl1", "racah", "dirac"};
  return scopes;
}

/// Runs one scope, or all four in order for "all".
inline std::vector<SuiteResult> run_suites(const std::string& scope, const SuiteConfig& cfg) {
  auto one = [&](const std::string& s) {
    if (s == "bi") return bi_suite(cfg);
    if (s == "sl1") return sl1_suite(cfg);
    if (s == "racah") return racah_suite(cfg);
    if (s == "dirac") return dirac_suite(cfg);
    throw InvalidParameters("unknown scope '" + s + "'");
  };
  std::vector<SuiteResult> out;
  if (scope == "all") {
    for (const auto& s : suite_scopes()) out.push_back(one(s));
  } else {
    out.push_back(one(scope));
  }
  return out;
}

}  // namespace bilab
