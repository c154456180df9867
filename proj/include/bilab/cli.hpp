#pragma once

// Command-line frontend. Exit codes: 0 all checks pass, 1 a verification
// failed, 2 invalid input (bad flags, inadmissible or degenerate parameters).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bilab/bi_poly.hpp"
#include "bilab/dunkl_dirac.hpp"
#include "bilab/racah.hpp"
#include "bilab/suites.hpp"

namespace bilab::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInvalid = 2 };

/// Failure of user input, reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline Rat parse_rat(const std::string& flag, const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const InvalidScalar& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline std::vector<Rat> parse_rat_list(const std::string& flag, const std::string& text, std::size_t want) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rat(flag, item));
  if (out.size() != want)
    throw UsageError(flag + ": expected " + std::to_string(want) + " comma-separated rationals, got '" + text + "'");
  return out;
}

// ---------- CSV (RFC 4180) ----------

inline std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
  std::string q = "\"";
  for (char c : f) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void row(std::vector<std::string> r) { rows_.push_back(std::move(r)); }
  std::string str() const {
    std::string out;
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i]);
      out += "\r\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string fmt_float(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// ---------- shared output plumbing ----------

struct OutputOptions {
  std::string format = "json";
  std::string out;
};

inline void add_output_flags(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--out", o.out, "Write output to this file instead of stdout");
}

inline void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("--out: cannot open '" + o.out + "'");
  f << text;
}

inline std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

inline Json report_json(const VerificationReport& r, bool detail) { return r.to_json(!detail); }

inline void report_csv_rows(CsvTable& t, const VerificationReport& r, bool detail) {
  for (const auto& e : r.entries()) {
    if (!detail && e.pass && e.required) continue;
    t.row({r.name(), e.relation, std::to_string(e.degree), e.pass ? "true" : "false", e.required ? "true" : "false",
           e.lhs, e.rhs, e.residual ? VerificationReport::fmt_double(*e.residual) : ""});
  }
}

inline const std::vector<std::string> kReportCsvHeader{"report", "relation", "degree", "pass",
                                                       "required", "lhs", "rhs", "residual"};

/// Per-relation pass counts by degree, in first-seen relation order.
inline std::string report_pretty(const VerificationReport& r) {
  std::ostringstream os;
  os << r.name() << ": " << r.passed() << "/" << r.checked() << " passed"
     << (r.ok() ? "" : ", " + std::to_string(r.failed()) + " REQUIRED FAILED") << "\n";
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // pass, total
  std::map<std::string, bool> required;
  for (const auto& e : r.entries()) {
    if (!tally.count(e.relation)) order.push_back(e.relation);
    auto& t = tally[e.relation];
    t.first += e.pass;
    ++t.second;
    required[e.relation] = e.required;
  }
  for (const auto& rel : order) {
    auto [p, n] = tally[rel];
    os << "  [" << (p == n ? "ok" : (required[rel] ? "FAIL" : "not an identity")) << "] " << rel << "  (" << p << "/"
       << n << ")\n";
  }
  for (const auto& e : r.entries())
    if (!e.pass && e.required)
      os << "    failure @" << e.degree << " " << e.relation << ": " << e.lhs << " vs " << e.rhs << "\n";
  for (const auto& [k, v] : r.notes()) os << "  note " << k << ": " << v << "\n";
  return os.str();
}

// ---------- poly ----------

struct PolyArgs {
  std::string rho1, rho2, r1, r2;
  unsigned nmax = 5;
  OutputOptions out;
};

inline int run_poly(const PolyArgs& a, std::ostream& out) {
  BIParams P{parse_rat("--rho1", a.rho1), parse_rat("--rho2", a.rho2), parse_rat("--r1", a.r1), parse_rat("--r2", a.r2)};
  validate_hypergeometric(P, a.nmax);
  std::vector<RecurrenceCoeffs> rc;
  for (unsigned n = 0; n <= a.nmax; ++n) rc.push_back(recurrence_coeffs(P, n));
  auto B = bi_recurrence_all(P, a.nmax);
  bool consistent = true;
  for (unsigned n = 0; n <= a.nmax; ++n) consistent = consistent && bi_hypergeometric(P, n) == B[n];

  if (a.out.format == "csv") {
    std::vector<std::string> header{"n", "lambda", "A", "C"};
    for (unsigned k = 0; k <= a.nmax; ++k) header.push_back("c" + std::to_string(k));
    CsvTable t(header);
    for (unsigned n = 0; n <= a.nmax; ++n) {
      std::vector<std::string> row{std::to_string(n), eigenvalue(P, n).str(), rc[n].A.str(), rc[n].C.str()};
      for (unsigned k = 0; k <= a.nmax; ++k) row.push_back(k <= n ? B[n].coeff(k).str() : "");
      t.row(row);
    }
    emit(a.out, t.str(), out);
  } else if (a.out.format == "pretty") {
    std::ostringstream os;
    os << "BI polynomials for " << P.str() << ", h = " << P.h().str() << "\n";
    for (unsigned n = 0; n <= a.nmax; ++n)
      os << "n=" << n << "  lambda=" << eigenvalue(P, n).str() << "  A=" << rc[n].A.str() << "  C=" << rc[n].C.str()
         << "  B_n = " << B[n].str() << "\n";
    emit(a.out, os.str(), out);
  } else {
    Json j;
    j["command"] = "poly";
    j["params"] = {{"rho1", P.rho1.str()}, {"rho2", P.rho2.str()}, {"r1", P.r1.str()}, {"r2", P.r2.str()}};
    j["h"] = P.h().str();
    Json rows = Json::array();
    for (unsigned n = 0; n <= a.nmax; ++n) {
      Json coeffs = Json::array();
      for (const auto& c : B[n].coeffs()) coeffs.push_back(c.str());
      rows.push_back({{"n", n}, {"lambda", eigenvalue(P, n).str()}, {"coeffs", coeffs}, {"A", rc[n].A.str()},
                      {"C", rc[n].C.str()}});
    }
    j["polynomials"] = rows;
    Json grid = Json::array();
    for (unsigned s = 0; s <= a.nmax; ++s) grid.push_back({{"s", s}, {"x_s", grid_point(P, s).str()}});
    j["grid"] = grid;
    j["routes_agree"] = consistent;
    emit(a.out, json_text(j), out);
  }
  return consistent ? kPass : kFail;
}

// ---------- verify ----------

struct VerifyArgs {
  std::string scope = "all";
  std::uint64_t seed = kDefaultSeed;
  std::optional<unsigned> tuples, maxdeg, nmax, N;
  bool detail = false;
  bool inject_fault = false;
  OutputOptions out;
};

inline int run_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteConfig cfg;
  cfg.seed = a.seed;
  cfg.tuples = a.tuples;
  cfg.maxdeg = a.maxdeg;
  cfg.nmax = a.nmax;
  cfg.N = a.N;
  cfg.inject_fault = a.inject_fault;
  const auto results = run_suites(a.scope, cfg);
  bool ok = true;
  for (const auto& s : results) ok = ok && s.ok();

  if (a.out.format == "csv") {
    CsvTable t(kReportCsvHeader);
    for (const auto& s : results)
      for (const auto& r : s.reports) report_csv_rows(t, r, a.detail);
    emit(a.out, t.str(), out);
  } else if (a.out.format == "pretty") {
    std::ostringstream os;
    for (const auto& s : results) {
      os << "== " << s.scope << ": " << s.tuples << " tuples, " << s.checked() << " checks, " << s.failed()
         << " failed\n";
      for (const auto& r : s.reports) os << report_pretty(r);
    }
    os << (ok ? "PASS" : "FAIL") << "\n";
    emit(a.out, os.str(), out);
  } else {
    Json j;
    j["command"] = "verify";
    j["scope"] = a.scope;
    j["seed"] = a.seed;
    j["ok"] = ok;
    Json suites = Json::array();
    for (const auto& s : results) {
      Json reports = Json::array();
      for (const auto& r : s.reports) reports.push_back(report_json(r, a.detail));
      suites.push_back({{"scope", s.scope},
                        {"tuples", s.tuples},
                        {"checked", s.checked()},
                        {"failed", s.failed()},
                        {"ok", s.ok()},
                        {"reports", reports}});
    }
    j["suites"] = suites;
    emit(a.out, json_text(j), out);
  }
  return ok ? kPass : kFail;
}

// ---------- racah / weights ----------

struct RacahArgs {
  std::string mu = "1/4,1/3,1/2";
  unsigned N = 2;
  OutputOptions out;
};

inline RacahParams racah_params(const RacahArgs& a) {
  auto m = parse_rat_list("--mu", a.mu, 3);
  return RacahParams(m[0], m[1], m[2], a.N);
}

inline Json rat_matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline Json bi_params_json(const BIParams& P) {
  return {{"rho1", P.rho1.str()}, {"rho2", P.rho2.str()}, {"r1", P.r1.str()}, {"r2", P.r2.str()}};
}

inline Json racah_header_json(const RacahParams& RP) {
  return {{"mu1", RP.mu1.str()}, {"mu2", RP.mu2.str()}, {"mu3", RP.mu3.str()},
          {"mu4", RP.mu4().str()}, {"mu", RP.mu().str()},   {"N", RP.N}};
}

inline int run_racah(const RacahArgs& a, std::ostream& out) {
  const RacahParams RP = racah_params(a);
  const TridiagRep rep = build_tridiag_rep(RP);
  const BIParams P = RP.identifications();
  VerificationReport checks = verify_tridiag_rep(rep);
  checks.merge(k1_spectrum_check(rep, RP));
  Overlaps ov = racah_overlaps(rep);
  checks.merge(ov.report);
  auto nodes = discrete_weights(P, RP.N);
  const unsigned n = RP.N + 1;

  if (a.out.format == "csv") {
    CsvTable t({"k", "B_k", "D_k", "K1_diag", "B_(k-1)D_k", "K3_diag", "K1_eigenvalue_s", "x_s", "weight_s"});
    for (unsigned k = 0; k < n; ++k)
      t.row({std::to_string(k), rep.B[k].str(), rep.D[k].str(), rep.diag[k].str(), rep.u_sq[k].str(),
             RP.k3_eigenvalue(k).str(), RP.k1_eigenvalue(k).str(), grid_point(P, k).str(), fmt_float(nodes[k].weight)});
    emit(a.out, t.str(), out);
  } else if (a.out.format == "pretty") {
    std::ostringstream os;
    os << "Racah representation " << RP.str() << ", mu4 = " << RP.mu4().str() << ", mu = " << RP.mu().str() << "\n";
    os << "identifications " << P.str() << "\n";
    for (unsigned k = 0; k < n; ++k)
      os << "k=" << k << "  B=" << rep.B[k].str() << "  D=" << rep.D[k].str() << "  K1_kk=" << rep.diag[k].str()
         << "  K3_kk=" << RP.k3_eigenvalue(k).str() << "  lambda_s=" << RP.k1_eigenvalue(k).str()
         << "  x_s=" << grid_point(P, k).str() << "  w_s=" << fmt_float(nodes[k].weight) << "\n";
    os << report_pretty(checks);
    emit(a.out, os.str(), out);
  } else {
    Json j;
    j["command"] = "racah";
    j["params"] = racah_header_json(RP);
    j["identifications"] = bi_params_json(P);
    j["structure_constants"] = {{"omega1", RP.omega1().str()}, {"omega2", RP.omega2().str()}, {"omega3", RP.omega3().str()}};
    j["casimir"] = RP.casimir().str();
    Json B = Json::array(), D = Json::array(), usq = Json::array();
    for (unsigned k = 0; k < n; ++k) {
      B.push_back(rep.B[k].str());
      D.push_back(rep.D[k].str());
      usq.push_back(rep.u_sq[k].str());
    }
    j["tridiagonal"] = {{"B", B}, {"D", D}, {"offdiag_products", usq}, {"K1", rat_matrix_json(rep.K1)},
                        {"K2", rat_matrix_json(rep.K2)}, {"K3", rat_matrix_json(rep.K3)}};
    Json k1 = Json::array(), k3 = Json::array(), grid = Json::array(), weights = Json::array();
    for (unsigned k = 0; k < n; ++k) {
      k1.push_back(RP.k1_eigenvalue(k).str());
      k3.push_back(RP.k3_eigenvalue(k).str());
      grid.push_back({{"s", k}, {"x_s", grid_point(P, k).str()}});
      weights.push_back({{"s", nodes[k].s}, {"node", nodes[k].node}, {"weight", nodes[k].weight}});
    }
    j["k1_spectrum"] = k1;
    j["k3_spectrum"] = k3;
    j["grid"] = grid;
    Json overlaps = Json::array();
    for (unsigned s = 0; s < n; ++s) {
      Json row = Json::array();
      for (unsigned k = 0; k < n; ++k) row.push_back(ov.matrix(s, k));
      overlaps.push_back(row);
    }
    j["overlaps"] = overlaps;
    j["weights"] = weights;
    j["report"] = report_json(checks, false);
    emit(a.out, json_text(j), out);
  }
  return checks.ok() ? kPass : kFail;
}

inline int run_weights(const RacahArgs& a, std::ostream& out) {
  const RacahParams RP = racah_params(a);
  const BIParams P = RP.identifications();
  auto nodes = discrete_weights(P, RP.N);
  auto exact = christoffel_weights(P, RP.N);
  VerificationReport rep = check_finite_orthogonality(P, RP.N);

  if (a.out.format == "csv") {
    CsvTable t({"s", "x_s", "node", "weight", "weight_exact"});
    for (const auto& q : nodes)
      t.row({std::to_string(q.s), grid_point(P, q.s).str(), fmt_float(q.node), fmt_float(q.weight), exact[q.s].str()});
    emit(a.out, t.str(), out);
  } else if (a.out.format == "pretty") {
    std::ostringstream os;
    os << "Quadrature for " << P.str() << " on N+1 = " << RP.N + 1 << " nodes\n";
    for (const auto& q : nodes)
      os << "s=" << q.s << "  x_s=" << grid_point(P, q.s).str() << "  node=" << fmt_float(q.node)
         << "  w=" << fmt_float(q.weight) << "  (exact " << exact[q.s].str() << ")\n";
    os << report_pretty(rep);
    emit(a.out, os.str(), out);
  } else {
    Json j;
    j["command"] = "weights";
    j["params"] = racah_header_json(RP);
    j["identifications"] = bi_params_json(P);
    Json rows = Json::array();
    for (const auto& q : nodes)
      rows.push_back({{"s", q.s}, {"x_s", grid_point(P, q.s).str()}, {"node", q.node}, {"weight", q.weight},
                      {"weight_exact", exact[q.s].str()}});
    j["nodes"] = rows;
    j["report"] = report_json(rep, false);
    emit(a.out, json_text(j), out);
  }
  return rep.ok() ? kPass : kFail;
}

// ---------- dirac ----------

struct DiracArgs {
  std::string mu = "1/4,1/3,1/2";
  unsigned maxdeg = 6;
  OutputOptions out;
};

inline int run_dirac(const DiracArgs& a, std::ostream& out) {
  auto m = parse_rat_list("--mu", a.mu, 3);
  const DiracParams DP(m[0], m[1], m[2]);
  std::vector<VerificationReport> reports{pauli_check(), jj_commutator_check(DP, a.maxdeg),
                                          gamma_square_identity(DP, a.maxdeg), symmetry_check(DP, a.maxdeg)};
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  if (a.out.format == "csv") {
    CsvTable t(kReportCsvHeader);
    for (const auto& r : reports) report_csv_rows(t, r, true);
    emit(a.out, t.str(), out);
  } else if (a.out.format == "pretty") {
    std::ostringstream os;
    for (const auto& r : reports) os << report_pretty(r);
    os << (ok ? "PASS" : "FAIL") << "\n";
    emit(a.out, os.str(), out);
  } else {
    Json j;
    j["command"] = "dirac";
    j["params"] = {{"mu1", DP.mu[0].str()}, {"mu2", DP.mu[1].str()}, {"mu3", DP.mu[2].str()}};
    j["maxdeg"] = a.maxdeg;
    j["ok"] = ok;
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(report_json(r, true));
    j["reports"] = rs;
    emit(a.out, json_text(j), out);
  }
  return ok ? kPass : kFail;
}

// ---------- entry point ----------

inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Bannai-Ito algebra toolkit: exact tables and identity verification"};
  app.require_subcommand(1);
  app.fallthrough(false);

  PolyArgs poly;
  auto* p = app.add_subcommand("poly", "Bannai-Ito polynomials, eigenvalues and recurrence coefficients");
  p->add_option("--rho1", poly.rho1)->required();
  p->add_option("--rho2", poly.rho2)->required();
  p->add_option("--r1", poly.r1)->required();
  p->add_option("--r2", poly.r2)->required();
  p->add_option("--nmax", poly.nmax, "Largest degree")->capture_default_str();
  add_output_flags(p, poly.out);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run seeded verification suites");
  v->add_option("--scope", ver.scope)->check(CLI::IsMember({"bi", "sl1", "racah", "dirac", "all"}))->capture_default_str();
  v->add_option("--seed", ver.seed, "Seed for tuple generation")->capture_default_str();
  v->add_option("--tuples", ver.tuples, "Parameter tuples per suite");
  v->add_option("--maxdeg", ver.maxdeg, "Monomial or slice degree bound");
  v->add_option("--nmax", ver.nmax, "Polynomial or basis index bound");
  v->add_option("--N", ver.N, "Largest Racah truncation");
  v->add_flag("--detail", ver.detail, "Include passing entries");
  v->add_flag("--inject-fault", ver.inject_fault)->group("");
  add_output_flags(v, ver.out);

  RacahArgs rac;
  auto* r = app.add_subcommand("racah", "Exact tridiagonal Racah representation, spectra, overlaps, weights");
  r->add_option("--mu", rac.mu, "mu1,mu2,mu3")->capture_default_str();
  r->add_option("--N", rac.N)->capture_default_str();
  add_output_flags(r, rac.out);

  RacahArgs wts;
  auto* w = app.add_subcommand("weights", "Finite quadrature of the Racah-truncated recurrence");
  w->add_option("--mu", wts.mu, "mu1,mu2,mu3")->capture_default_str();
  w->add_option("--N", wts.N)->capture_default_str();
  add_output_flags(w, wts.out);

  DiracArgs dir;
  auto* d = app.add_subcommand("dirac", "Dunkl-Dirac identities per degree slice");
  d->add_option("--mu", dir.mu, "mu1,mu2,mu3")->capture_default_str();
  d->add_option("--maxdeg", dir.maxdeg)->capture_default_str();
  add_output_flags(d, dir.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*p) return run_poly(poly, out);
    if (*v) return run_verify(ver, out);
    if (*r) return run_racah(rac, out);
    if (*w) return run_weights(wts, out);
    if (*d) return run_dirac(dir, out);
  } catch (const NonScalarCasimir& e) {
    err << "verification failure: " << e.what() << "\n";
    return kFail;
  } catch (const NotDivisible& e) {
    err << "verification failure: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace bilab::cli
