#include "modkalt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "modkalt/closed.hpp"
#include "modkalt/errors.hpp"
#include "modkalt/families.hpp"
#include "modkalt/gamma.hpp"
#include "modkalt/perm.hpp"
#include "modkalt/polymat.hpp"

namespace modkalt {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kVerifyFailure = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
  kIoError = 4,
};

struct IoError : Error {
  using Error::Error;
};

json bigint_to_json(const BigInt& v) {
  static const BigInt kMaxLL = BigInt(std::numeric_limits<long long>::max());
  static const BigInt kMinLL = BigInt(std::numeric_limits<long long>::min());
  if (v >= kMinLL && v <= kMaxLL) return json(static_cast<long long>(v));
  return json(v.str());  // too wide for a JSON number
}

json poly_to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(bigint_to_json(c));
  return json{{"var", "t"}, {"coeffs", coeffs}};
}

json bigints_to_json(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const BigInt& v : values) out.push_back(bigint_to_json(v));
  return out;
}

std::string poly_to_csv(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) os << ',';
    os << p.coeffs()[i];
  }
  return os.str();
}

IntPoly poly_from_coeff_list(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      coeffs.emplace_back(item);
    } catch (const std::exception&) {
      throw InvalidSpecError("bad coefficient: " + item);
    }
  }
  return IntPoly::from_coeffs(std::move(coeffs));
}

struct Range {
  int lo = 1;
  int hi = 1;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return Range{v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw InvalidSpecError("empty range: " + text);
    return r;
  } catch (const InvalidSpecError&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidSpecError("bad range: " + text);
  }
}

// Writes either to `fallback` or to --output PATH; exit code 4 on failure.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.emplace(path);
      if (!file_->is_open()) throw IoError("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_ ? *file_ : fallback_; }

  bool finish() {
    stream().flush();
    return stream().good();
  }

 private:
  std::ostream& fallback_;
  std::optional<std::ofstream> file_;
};

template <typename Task>
void run_pool(const std::vector<Task>& tasks, int jobs,
              const std::function<void(const Task&, size_t)>& fn) {
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) fn(tasks[i], i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  const int worker_count = std::min<int>(jobs, static_cast<int>(tasks.size()));
  workers.reserve(static_cast<size_t>(worker_count));
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        fn(tasks[i], i);
      }
    });
  }
  for (auto& worker : workers) worker.join();
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOptions {
  int n = 1, k = 1, r = 1;
  bool derangements = false;
  long long budget = kDefaultBruteBudget;
  std::string output;
};

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  const FamilySpec spec(opt.n, opt.k, opt.r, opt.derangements);
  if (family_count_bound(spec) > opt.budget) {
    err << "family size exceeds budget " << opt.budget << "\n";
    return kBudgetExceeded;
  }
  OutputTarget target(opt.output, out);
  for_each_member(spec, [&](const Perm& p) { target.stream() << to_string(p) << "\n"; });
  return target.finish() ? kOk : kIoError;
}

// ---------------------------------------------------------------------------
// poly

struct PolyOptions {
  std::string which;
  int n = 1, k = 1, r = 1;
  bool verify = false;
  long long budget = kDefaultBruteBudget;
  int permanent_limit = kDefaultPermanentLimit;
  std::string format = "json";
  std::string output;
};

// closed / matrix / brute routes for one enumerator; unavailable routes are
// simply absent.
struct PolyRoutes {
  IntPoly closed;
  std::optional<IntPoly> matrix;
  std::optional<IntPoly> brute;
  std::optional<std::string> brute_skip_reason;
};

PolyRoutes compute_routes(const std::string& which, int n, int k, int r, bool want_brute,
                          long long budget, int permanent_limit) {
  PolyRoutes routes;
  const bool matrix_defined = ((r == 1) || (n % k == 0)) && n <= kDefaultDeterminantLimit;
  if (which == "sgnmpe") {
    routes.closed = signed_exc_poly(n, k, r);
    if (matrix_defined) routes.matrix = det(family_matrix(n, k, r));
  } else if (which == "mpe") {
    routes.closed = exc_poly(n, k, r);
    if (matrix_defined && n <= permanent_limit)
      routes.matrix = permanent(family_matrix(n, k, r), permanent_limit);
  } else if (which == "sgnmpde") {
    routes.closed = signed_derangement_exc_poly(n, k, r);
    if (r == 1 && n <= kDefaultDeterminantLimit)
      routes.matrix = det(derangement_matrix(n, k));
  } else if (which == "even" || which == "odd") {
    const Parity parity = (which == "even") ? Parity::even : Parity::odd;
    routes.closed = parity_exc_poly(n, k, r, parity);
    if (matrix_defined && n <= permanent_limit) {
      const PolyMatrix m = family_matrix(n, k, r);
      const IntPoly unsigned_m = permanent(m, permanent_limit);
      const IntPoly signed_m = det(m);
      routes.matrix = (parity == Parity::even)
                          ? exact_div_by_int(unsigned_m + signed_m, 2LL)
                          : exact_div_by_int(unsigned_m - signed_m, 2LL);
    }
  } else if (which == "eulerian") {
    routes.closed = eulerian(n);
    routes.matrix = (n >= 1 && n <= permanent_limit)
                        ? std::optional<IntPoly>(permanent(eulerian_matrix(n), permanent_limit))
                        : std::nullopt;
  } else if (which == "sgndes") {
    routes.closed = signed_des_poly(n);
  } else {
    throw InvalidSpecError("unknown polynomial kind: " + which);
  }
  if (want_brute) {
    try {
      if (which == "eulerian") {
        routes.brute = (n >= 1) ? des_poly_brute(n, false) : IntPoly(1);
      } else if (which == "sgndes") {
        routes.brute = des_poly_brute(n, true);
      } else if (which == "even" || which == "odd") {
        routes.brute = parity_exc_poly_brute(
            n, k, r, which == "even" ? Parity::even : Parity::odd, budget);
      } else {
        const FamilySpec spec(n, k, r, which == "sgnmpde");
        routes.brute = exc_poly_brute(spec, which != "mpe", budget);
      }
    } catch (const SizeLimitError&) {
      routes.brute_skip_reason = "budget";
    }
  }
  return routes;
}

bool routes_agree(const PolyRoutes& routes) {
  if (routes.matrix && *routes.matrix != routes.closed) return false;
  if (routes.brute && *routes.brute != routes.closed) return false;
  return true;
}

int cmd_poly(const PolyOptions& opt, std::ostream& out, std::ostream& err) {
  if ((opt.which == "eulerian" || opt.which == "sgndes") && opt.n < 1)
    throw InvalidSpecError("n must be positive");
  PolyRoutes routes = compute_routes(opt.which, opt.n, opt.k, opt.r, opt.verify, opt.budget,
                                     opt.permanent_limit);
  OutputTarget target(opt.output, out);
  int code = kOk;
  if (!opt.verify) {
    if (opt.format == "text")
      target.stream() << routes.closed << "\n";
    else
      target.stream() << poly_to_json(routes.closed).dump() << "\n";
  } else {
    if (routes.brute_skip_reason) {
      err << "brute-force route skipped: " << *routes.brute_skip_reason << "\n";
      return kBudgetExceeded;
    }
    const bool equal = routes_agree(routes);
    json report{{"closed", poly_to_json(routes.closed)}, {"equal", equal}};
    if (routes.brute) report["brute"] = poly_to_json(*routes.brute);
    if (routes.matrix) report["matrix"] = poly_to_json(*routes.matrix);
    target.stream() << report.dump() << "\n";
    if (!equal) code = kVerifyFailure;
  }
  if (!target.finish()) return kIoError;
  return code;
}

// ---------------------------------------------------------------------------
// matrix

struct MatrixOptions {
  std::string which = "family";
  int n = 1, k = 1, r = 1;
  bool want_det = false;
  bool want_permanent = false;
  bool want_relabel = false;
  int permanent_limit = kDefaultPermanentLimit;
  std::string format = "text";
  std::string output;
};

PolyMatrix build_named_matrix(const MatrixOptions& opt) {
  const std::string& w = opt.which;
  if (w == "family" || w == "M") return family_matrix(opt.n, opt.k, opt.r);
  if (w == "derangement" || w == "D") return derangement_matrix(opt.n, opt.k);
  if (w == "eulerian" || w == "A") return eulerian_matrix(opt.n);
  if (w == "eulerian-shifted" || w == "B") return eulerian_matrix_shifted(opt.n);
  if (w == "derangement-block" || w == "AD") return derangement_block(opt.n);
  throw InvalidSpecError("unknown matrix kind: " + w);
}

json matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix_text(const PolyMatrix& m, std::ostream& os) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) os << "  ";
      os << m(i, j);
    }
    os << "\n";
  }
}

int cmd_matrix(const MatrixOptions& opt, std::ostream& out, std::ostream& err) {
  PolyMatrix m = build_named_matrix(opt);
  if (opt.want_relabel) m = relabel(m, static_cast<int>(m.rows()), opt.k, opt.r);
  OutputTarget target(opt.output, out);
  (void)err;
  if (opt.want_det || opt.want_permanent) {
    json report;
    if (opt.want_det) report["det"] = poly_to_json(det(m));
    if (opt.want_permanent)
      report["permanent"] = poly_to_json(permanent(m, opt.permanent_limit));
    target.stream() << report.dump() << "\n";
  } else if (opt.format == "json") {
    target.stream() << matrix_to_json(m).dump() << "\n";
  } else {
    print_matrix_text(m, target.stream());
  }
  return target.finish() ? kOk : kIoError;
}

// ---------------------------------------------------------------------------
// gamma

struct GammaOptions {
  std::string coeffs;
  int n = 0, k = 0, r = 1;
  std::string parity = "full";
  bool certify = false;
  bool force = false;
  std::string output;
};

json gamma_analysis_json(const IntPoly& f) {
  json report;
  const PalindromeProfile profile = palindromic_profile(f);
  if (profile.status == PalindromeStatus::zero) {
    report["palindromic"] = true;
    report["vacuous"] = true;
    report["center"] = nullptr;
    report["gamma"] = json::array();
    report["gamma_positive"] = true;
    return report;
  }
  report["palindromic"] = profile.palindromic();
  if (!profile.palindromic()) {
    report["center"] = nullptr;
    report["gamma"] = nullptr;
    report["gamma_positive"] = false;
    return report;
  }
  report["center"] = profile.center.str();
  const GammaVector gv = gamma_decompose(f);
  report["gamma"] = bigints_to_json(gv.gammas);
  report["gamma_positive"] = is_gamma_positive(f).positive;
  return report;
}

json certify_report_json(const GammaCertReport& report) {
  json rows = json::array();
  for (const GammaCertRow& row : report.rows) {
    json j{{"r", row.r},
           {"parity", row.parity == Parity::even ? "even" : "odd"},
           {"poly", poly_to_json(row.poly)},
           {"palindromic", row.palindromic},
           {"gamma_nonnegative", row.gamma_nonnegative},
           {"claimed_center", row.claimed_center.str()},
           {"center_matches", row.center_matches},
           {"pass", row.pass}};
    j["observed_center"] = row.observed_center ? json(row.observed_center->str()) : json();
    j["gamma"] = row.gamma ? bigints_to_json(row.gamma->gammas) : json();
    rows.push_back(std::move(j));
  }
  return json{{"n", report.n},
              {"k", report.k},
              {"hypothesis_ok", report.hypothesis_ok},
              {"rows", rows},
              {"all_pass", report.all_pass}};
}

int cmd_gamma(const GammaOptions& opt, std::ostream& out, std::ostream& err) {
  OutputTarget target(opt.output, out);
  int code = kOk;
  if (opt.certify) {
    if (opt.n < 1 || opt.k < 1) throw InvalidSpecError("--certify needs --n and --k");
    try {
      const GammaCertReport report = certify_gamma_positivity(opt.n, opt.k, opt.force);
      target.stream() << certify_report_json(report).dump() << "\n";
      if (!report.all_pass) code = kVerifyFailure;
    } catch (const HypothesisViolatedError& e) {
      err << e.what() << "\n";
      return kUsageError;
    }
  } else {
    IntPoly f;
    if (!opt.coeffs.empty()) {
      f = poly_from_coeff_list(opt.coeffs);
    } else if (opt.n >= 1 && opt.k >= 1) {
      if (opt.parity == "even")
        f = parity_exc_poly(opt.n, opt.k, opt.r, Parity::even);
      else if (opt.parity == "odd")
        f = parity_exc_poly(opt.n, opt.k, opt.r, Parity::odd);
      else
        f = exc_poly(opt.n, opt.k, opt.r);
    } else {
      throw InvalidSpecError("gamma needs --coeffs or a family spec (--n, --k)");
    }
    target.stream() << gamma_analysis_json(f).dump() << "\n";
  }
  if (!target.finish()) return kIoError;
  return code;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string n_range = "1..6";
  std::string k_range = "1..3";
  std::string r_policy = "all";
  std::string which = "all";
  std::vector<std::string> oracles{"closed", "matrix", "brute"};
  long long budget = kDefaultBruteBudget;
  int permanent_limit = kDefaultPermanentLimit;
  int jobs = 1;
  std::string format = "text";
  std::string output;
};

struct VerifyTask {
  int n, k, r;
  std::string which;
};

struct VerifyOutcome {
  enum class Status { pass, fail, skip } status = Status::skip;
  std::string detail;
};

VerifyOutcome verify_enumerator(const VerifyTask& task, const VerifyOptions& opt) {
  const auto selected = [&](const char* name) {
    return std::find(opt.oracles.begin(), opt.oracles.end(), name) != opt.oracles.end();
  };
  PolyRoutes routes = compute_routes(task.which, task.n, task.k, task.r, selected("brute"),
                                     opt.budget, opt.permanent_limit);
  std::vector<std::pair<std::string, IntPoly>> computed;
  if (selected("closed")) computed.emplace_back("closed", routes.closed);
  if (selected("matrix") && routes.matrix) computed.emplace_back("matrix", *routes.matrix);
  if (routes.brute) computed.emplace_back("brute", *routes.brute);
  if (computed.size() < 2)
    return {VerifyOutcome::Status::skip,
            routes.brute_skip_reason ? "budget" : "fewer than two oracles apply"};
  bool agree = true;
  for (const auto& [name, value] : computed) agree = agree && value == computed[0].second;
  std::ostringstream os;
  if (agree) {
    for (size_t i = 0; i < computed.size(); ++i)
      os << (i ? "," : "") << computed[i].first;
    return {VerifyOutcome::Status::pass, os.str()};
  }
  for (const auto& [name, value] : computed) os << " " << name << "=" << value;
  return {VerifyOutcome::Status::fail, os.str().substr(1)};
}

VerifyOutcome verify_gamma_point(const VerifyTask& task, const VerifyOptions& opt) {
  const int n = task.n, k = task.k, r = task.r;
  const IntPoly whole = exc_poly(n, k, r);
  const IntPoly signed_whole = signed_exc_poly(n, k, r);
  IntPoly even, odd;
  try {
    even = parity_exc_poly(n, k, r, Parity::even);
    odd = parity_exc_poly(n, k, r, Parity::odd);
  } catch (const NotDivisibleError& e) {
    return {VerifyOutcome::Status::fail, std::string("halving not exact: ") + e.what()};
  }
  if (even + odd != whole || even - odd != signed_whole)
    return {VerifyOutcome::Status::fail, "parity split does not recombine"};
  const bool want_brute =
      std::find(opt.oracles.begin(), opt.oracles.end(), "brute") != opt.oracles.end();
  if (want_brute) {
    try {
      if (parity_exc_poly_brute(n, k, r, Parity::even, opt.budget) != even ||
          parity_exc_poly_brute(n, k, r, Parity::odd, opt.budget) != odd)
        return {VerifyOutcome::Status::fail, "brute-force parity split disagrees"};
    } catch (const SizeLimitError&) {
      // split identities alone still make a meaningful check
    }
  }
  std::ostringstream note;
  const bool hypothesis = (n % (2 * k) == k) && n >= 5 * k;
  for (Parity parity : {Parity::even, Parity::odd}) {
    const IntPoly& half = (parity == Parity::even) ? even : odd;
    const PalindromeProfile profile = palindromic_profile(half);
    const char* tag = (parity == Parity::even) ? "even" : "odd";
    if (profile.status == PalindromeStatus::zero) {
      note << " " << tag << ":zero";
      continue;
    }
    if (!profile.palindromic()) {
      note << " " << tag << ":not-palindromic";
      if (hypothesis)
        return {VerifyOutcome::Status::fail, std::string(tag) + " half not palindromic"};
      continue;
    }
    const GammaCheck check = is_gamma_positive(half);
    note << " " << tag << (check.positive ? ":gamma-positive" : ":gamma-negative")
         << "@" << profile.center.str();
    if (hypothesis) {
      const HalfInt claimed =
          (r == 1) ? HalfInt::of(n - k, 2) : HalfInt::of(n + 1 - r, 2);
      if (!check.positive)
        return {VerifyOutcome::Status::fail, std::string(tag) + " half not gamma-positive"};
      if (profile.center != claimed)
        return {VerifyOutcome::Status::fail,
                std::string(tag) + " center " + profile.center.str() +
                    " differs from claimed " + claimed.str()};
    }
  }
  return {VerifyOutcome::Status::pass, "split-consistent" + note.str()};
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const Range n_range = parse_range(opt.n_range);
  const Range k_range = parse_range(opt.k_range);
  if (opt.oracles.size() < 2 && opt.which != "gamma")
    throw InvalidSpecError("verify needs at least two oracles");
  std::vector<std::string> kinds;
  if (opt.which == "all")
    kinds = {"sgnmpe", "mpe", "sgnmpde", "gamma"};
  else if (opt.which == "sgnmpe" || opt.which == "mpe" || opt.which == "sgnmpde" ||
           opt.which == "gamma")
    kinds = {opt.which};
  else
    throw InvalidSpecError("unknown verification target: " + opt.which);

  std::vector<VerifyTask> tasks;
  for (int n = n_range.lo; n <= n_range.hi; ++n)
    for (int k = k_range.lo; k <= k_range.hi; ++k) {
      int r_lo = 1, r_hi = k;
      if (opt.r_policy != "all") {
        r_lo = r_hi = std::stoi(opt.r_policy);
        if (r_lo < 1 || r_lo > k) continue;
      }
      for (int r = r_lo; r <= r_hi; ++r)
        for (const std::string& kind : kinds) tasks.push_back({n, k, r, kind});
    }

  std::vector<VerifyOutcome> outcomes(tasks.size());
  run_pool<VerifyTask>(tasks, opt.jobs, [&](const VerifyTask& task, size_t i) {
    try {
      outcomes[i] = (task.which == "gamma") ? verify_gamma_point(task, opt)
                                            : verify_enumerator(task, opt);
    } catch (const std::exception& e) {
      outcomes[i] = {VerifyOutcome::Status::fail, std::string("error: ") + e.what()};
    }
  });

  OutputTarget target(opt.output, out);
  int passes = 0, fails = 0, skips = 0;
  json json_rows = json::array();
  for (size_t i = 0; i < tasks.size(); ++i) {
    const VerifyTask& task = tasks[i];
    const VerifyOutcome& outcome = outcomes[i];
    const char* word = outcome.status == VerifyOutcome::Status::pass   ? "PASS"
                       : outcome.status == VerifyOutcome::Status::fail ? "FAIL"
                                                                       : "SKIP";
    (outcome.status == VerifyOutcome::Status::pass
         ? ++passes
         : outcome.status == VerifyOutcome::Status::fail ? ++fails : ++skips);
    if (opt.format == "json") {
      json_rows.push_back(json{{"n", task.n},
                               {"k", task.k},
                               {"r", task.r},
                               {"which", task.which},
                               {"status", word},
                               {"detail", outcome.detail}});
    } else {
      target.stream() << word << " " << task.which << " n=" << task.n << " k=" << task.k
                      << " r=" << task.r << "  " << outcome.detail << "\n";
    }
  }
  if (opt.format == "json") {
    target.stream() << json{{"rows", json_rows},
                            {"pass", passes},
                            {"fail", fails},
                            {"skip", skips}}
                           .dump()
                    << "\n";
  } else {
    target.stream() << "summary: " << passes << " pass, " << fails << " fail, " << skips
                    << " skip\n";
  }
  if (!target.finish()) return kIoError;
  (void)err;
  if (fails > 0) return kVerifyFailure;
  if (skips > 0) return kBudgetExceeded;
  return kOk;
}

// ---------------------------------------------------------------------------
// table

struct TableOptions {
  std::string n_range = "1..6";
  std::string k_range = "1..3";
  std::string r_policy = "all";
  std::string format = "csv";
  int jobs = 1;
  bool meta = false;
  std::string output;
};

struct TableRow {
  int n, k, r;
  BigInt count;
  IntPoly mpe, sgnmpe, sgnmpde;
  std::optional<GammaVector> gamma;  // of the unsigned enumerator, when nonzero
};

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
  const Range n_range = parse_range(opt.n_range);
  const Range k_range = parse_range(opt.k_range);
  std::vector<std::array<int, 3>> points;
  for (int n = n_range.lo; n <= n_range.hi; ++n)
    for (int k = k_range.lo; k <= k_range.hi; ++k) {
      int r_lo = 1, r_hi = k;
      if (opt.r_policy != "all") {
        r_lo = r_hi = std::stoi(opt.r_policy);
        if (r_lo < 1 || r_lo > k) continue;
      }
      for (int r = r_lo; r <= r_hi; ++r) points.push_back({n, k, r});
    }

  std::vector<TableRow> rows(points.size());
  run_pool<std::array<int, 3>>(points, opt.jobs, [&](const std::array<int, 3>& pt, size_t i) {
    const int n = pt[0], k = pt[1], r = pt[2];
    TableRow row{n, k, r, family_count(FamilySpec(n, k, r)), exc_poly(n, k, r),
                 signed_exc_poly(n, k, r), signed_derangement_exc_poly(n, k, r),
                 std::nullopt};
    if (!row.mpe.is_zero()) row.gamma = gamma_decompose(row.mpe);
    rows[i] = std::move(row);
  });

  OutputTarget target(opt.output, out);
  std::ostream& os = target.stream();
  if (opt.format == "json") {
    json array = json::array();
    for (const TableRow& row : rows) {
      json j{{"n", row.n},
             {"k", row.k},
             {"r", row.r},
             {"count", bigint_to_json(row.count)},
             {"mpe", poly_to_json(row.mpe)},
             {"sgnmpe", poly_to_json(row.sgnmpe)},
             {"sgnmpde", poly_to_json(row.sgnmpde)}};
      j["gamma"] = row.gamma ? bigints_to_json(row.gamma->gammas) : json();
      array.push_back(std::move(j));
    }
    if (opt.meta) {
      os << json{{"meta",
                  {{"tool", "modkalt"},
                   {"version", kVersion},
                   {"n", opt.n_range},
                   {"k", opt.k_range},
                   {"r", opt.r_policy}}},
                 {"rows", array}}
                .dump()
         << "\n";
    } else {
      os << array.dump() << "\n";
    }
  } else if (opt.format == "csv") {
    if (opt.meta)
      os << "# modkalt " << kVersion << " table n=" << opt.n_range << " k=" << opt.k_range
         << " r=" << opt.r_policy << "\n";
    os << "n,k,r,count,mpe,sgnmpe,sgnmpde,gamma\n";
    for (const TableRow& row : rows) {
      os << row.n << ',' << row.k << ',' << row.r << ',' << row.count << ",\""
         << poly_to_csv(row.mpe) << "\",\"" << poly_to_csv(row.sgnmpe) << "\",\""
         << poly_to_csv(row.sgnmpde) << "\",";
      if (row.gamma) {
        os << '"';
        for (size_t i = 0; i < row.gamma->gammas.size(); ++i) {
          if (i > 0) os << ',';
          os << row.gamma->gammas[i];
        }
        os << '"';
      } else {
        os << "n/a";
      }
      os << "\n";
    }
  } else {
    for (const TableRow& row : rows) {
      os << "n=" << row.n << " k=" << row.k << " r=" << row.r << " count=" << row.count
         << "\n  mpe     = " << row.mpe << "\n  sgnmpe  = " << row.sgnmpe
         << "\n  sgnmpde = " << row.sgnmpde << "\n";
    }
  }
  (void)err;
  return target.finish() ? kOk : kIoError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumeration of mod-k-alternating permutations by excedance"};
  app.require_subcommand(1);

  EnumerateOptions enum_opt;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list the members of a family");
  enum_cmd->add_option("--n", enum_opt.n, "permutation size")->required();
  enum_cmd->add_option("--k", enum_opt.k, "modulus")->required();
  enum_cmd->add_option("--r", enum_opt.r, "remainder class, 1..k");
  enum_cmd->add_flag("--derangements", enum_opt.derangements, "derangements only");
  enum_cmd->add_option("--budget", enum_opt.budget, "largest family size to enumerate");
  enum_cmd->add_option("--output", enum_opt.output, "write to file instead of stdout");

  PolyOptions poly_opt;
  CLI::App* poly_cmd = app.add_subcommand("poly", "print an enumerator polynomial");
  poly_cmd->add_option("--which", poly_opt.which, "sgnmpe|mpe|sgnmpde|even|odd|eulerian|sgndes")
      ->required();
  poly_cmd->add_option("--n", poly_opt.n, "permutation size")->required();
  poly_cmd->add_option("--k", poly_opt.k, "modulus");
  poly_cmd->add_option("--r", poly_opt.r, "remainder class");
  poly_cmd->add_flag("--verify", poly_opt.verify, "compare closed/matrix/brute routes");
  poly_cmd->add_option("--budget", poly_opt.budget, "enumeration budget for --verify");
  poly_cmd->add_option("--permanent-limit", poly_opt.permanent_limit,
                       "largest size for permanent computations");
  poly_cmd->add_option("--format", poly_opt.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  poly_cmd->add_option("--output", poly_opt.output, "write to file instead of stdout");

  MatrixOptions matrix_opt;
  CLI::App* matrix_cmd = app.add_subcommand("matrix", "print a structured matrix or its det/permanent");
  matrix_cmd->add_option("--which", matrix_opt.which,
                         "family|M|derangement|D|eulerian|A|eulerian-shifted|B|derangement-block|AD");
  matrix_cmd->add_option("--n", matrix_opt.n, "size parameter")->required();
  matrix_cmd->add_option("--k", matrix_opt.k, "modulus (family/derangement)");
  matrix_cmd->add_option("--r", matrix_opt.r, "remainder class (family)");
  matrix_cmd->add_flag("--det", matrix_opt.want_det, "print the determinant");
  matrix_cmd->add_flag("--permanent", matrix_opt.want_permanent, "print the permanent");
  matrix_cmd->add_flag("--relabel", matrix_opt.want_relabel,
                       "apply the block-diagonalizing relabeling first");
  matrix_cmd->add_option("--permanent-limit", matrix_opt.permanent_limit,
                         "largest size for permanent computations");
  matrix_cmd->add_option("--format", matrix_opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  matrix_cmd->add_option("--output", matrix_opt.output, "write to file instead of stdout");

  GammaOptions gamma_opt;
  CLI::App* gamma_cmd = app.add_subcommand("gamma", "palindromicity and gamma-positivity analysis");
  gamma_cmd->add_option("--coeffs", gamma_opt.coeffs, "polynomial coefficients, ascending");
  gamma_cmd->add_option("--n", gamma_opt.n, "permutation size (family mode)");
  gamma_cmd->add_option("--k", gamma_opt.k, "modulus (family mode)");
  gamma_cmd->add_option("--r", gamma_opt.r, "remainder class (family mode)");
  gamma_cmd->add_option("--parity", gamma_opt.parity, "even|odd|full (family mode)")
      ->check(CLI::IsMember({"even", "odd", "full"}));
  gamma_cmd->add_flag("--certify", gamma_opt.certify,
                      "certify gamma-positivity of the even/odd enumerators for all r");
  gamma_cmd->add_flag("--force", gamma_opt.force, "run --certify outside its hypotheses");
  gamma_cmd->add_option("--output", gamma_opt.output, "write to file instead of stdout");

  VerifyOptions verify_opt;
  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check oracles over a grid");
  verify_cmd->add_option("--n", verify_opt.n_range, "size or range, e.g. 1..8");
  verify_cmd->add_option("--k", verify_opt.k_range, "modulus or range");
  verify_cmd->add_option("--r", verify_opt.r_policy, "all or a fixed remainder");
  verify_cmd->add_option("--which", verify_opt.which, "sgnmpe|mpe|sgnmpde|gamma|all")
      ->check(CLI::IsMember({"sgnmpe", "mpe", "sgnmpde", "gamma", "all"}));
  verify_cmd->add_option("--oracles", verify_opt.oracles, "subset of closed,matrix,brute")
      ->delimiter(',')
      ->check(CLI::IsMember({"closed", "matrix", "brute"}));
  verify_cmd->add_option("--budget", verify_opt.budget, "largest family size to enumerate");
  verify_cmd->add_option("--permanent-limit", verify_opt.permanent_limit,
                         "largest size for permanent computations");
  verify_cmd->add_option("--jobs", verify_opt.jobs, "worker threads");
  verify_cmd->add_option("--format", verify_opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--output", verify_opt.output, "write to file instead of stdout");

  TableOptions table_opt;
  CLI::App* table_cmd = app.add_subcommand("table", "emit enumerator tables");
  table_cmd->add_option("--n", table_opt.n_range, "size or range");
  table_cmd->add_option("--k", table_opt.k_range, "modulus or range");
  table_cmd->add_option("--r", table_opt.r_policy, "all or a fixed remainder");
  table_cmd->add_option("--format", table_opt.format, "csv|json|text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  table_cmd->add_option("--jobs", table_opt.jobs, "worker threads");
  table_cmd->add_flag("--meta", table_opt.meta, "prepend a provenance header");
  table_cmd->add_option("--output", table_opt.output, "write to file instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("modkalt");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (enum_cmd->parsed()) return cmd_enumerate(enum_opt, out, err);
    if (poly_cmd->parsed()) return cmd_poly(poly_opt, out, err);
    if (matrix_cmd->parsed()) return cmd_matrix(matrix_opt, out, err);
    if (gamma_cmd->parsed()) return cmd_gamma(gamma_opt, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_opt, out, err);
    if (table_cmd->parsed()) return cmd_table(table_opt, out, err);
  } catch (const InvalidSpecError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailure;
  }
  err << "no subcommand given\n";
  return kUsageError;
}

}  // namespace modkalt
