// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "oracle.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace hopfalg;

namespace {

const std::vector<std::string> corpus = {"qc2",      "f5c5",    "sweedler-h4", "lu-ut2-q",
                                         "lu-m2-q",  "lu-m2-f5", "lu-dualnumbers-q"};
const uint64_t seed = 20240611;

// Collects failures for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// Everything computed once per input and shared between criteria.
template <class K>
struct Bundle {
  HopfContext<K> c;
  IntegralSpaces<K> I;
  SigmaChi<K> sc;
  explicit Bundle(const HopfAlgebroidData<K>& h) : c(h), I(all_integral_spaces(c)), sc(sigma_chi(c)) {}
};

template <class T>
struct scalar_of_impl;
template <class K>
struct scalar_of_impl<HopfAlgebroidData<K>> {
  using type = K;
};
template <class T>
using scalar_of = typename scalar_of_impl<std::decay_t<T>>::type;

template <class F>
void on_algebroid(const std::string& name, F&& f) {
  std::visit(
      [&](const auto& x) {
        if constexpr (requires { x.left; }) f(x);
      },
      builtin(name));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

// ---------------------------------------------------------------------------

void axiom_suite(Criterion& cr) {
  const char* lus[] = {"lu-ut2-q", "lu-m2-q", "lu-m2-f5", "lu-dualnumbers-q"};
  double worst = 0;
  for (const char* name : lus)
    on_algebroid(name, [&](const auto& h) {
      auto t0 = std::chrono::steady_clock::now();
      using K = scalar_of<decltype(h)>;
      HopfContext<K> c(h);
      Report r = hopf_axioms_report(c);
      double s = seconds_since(t0);
      worst = std::max(worst, s);
      cr.expect(r.ok(), std::string(name) + ": " + (r.ok() ? "" : r.first_failure()->name));
      cr.expect(s < 30, std::string(name) + " took " + fmt(s));
    });
  cr.summary = "4 Lu algebroids, slowest " + fmt(worst);
}

void derived_suite(Criterion& cr) {
  size_t checks = 0;
  for (const std::string& name : corpus)
    on_algebroid(name, [&](const auto& h) {
      using K = scalar_of<decltype(h)>;
      HopfContext<K> c(h);
      Report r = derived_identities_report(c);
      checks += r.checks.size();
      cr.expect(r.ok(), name + ": " + (r.ok() ? "" : r.first_failure()->name));
    });
  cr.summary = std::to_string(corpus.size()) + " inputs, " + std::to_string(checks) + " identity checks";
}

// In characteristic zero, semisimple iff the trace form is nondegenerate.
bool trace_form_nondegenerate(const FinAlgebra<mpq_class>& A) {
  size_t n = A.dim();
  std::vector<std::vector<mpq_class>> T(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec<mpq_class> ij = oracle::mul(A, A.e(i), A.e(j));
      for (size_t k = 0; k < n; ++k) T[i][j] += oracle::mul(A, ij, A.e(k))[k];
    }
  return oracle::rank(T) == n;
}

template <class K>
void maschke_case(Criterion& cr, const std::string& name, const Bundle<K>& b) {
  static const std::map<std::string, bool> expected = {{"qc2", true},       {"lu-m2-q", true},  {"lu-m2-f5", true},
                                                       {"sweedler-h4", false}, {"f5c5", false}, {"lu-ut2-q", false}};
  TheoremReport m = maschke_report(b.c, b.I), d = dual_maschke_report(b.c, b.I);
  cr.expect(m.conditions.size() == 12, name + ": expected 12 Maschke conditions");
  cr.expect(m.agree(), name + ": Maschke conditions disagree");
  cr.expect(m.checks.ok(), name + ": Maschke certificate " + (m.checks.ok() ? "" : m.checks.first_failure()->name));
  cr.expect(d.agree(), name + ": dual Maschke conditions disagree");
  cr.expect(d.checks.ok(), name + ": dual Maschke certificate " + (d.checks.ok() ? "" : d.checks.first_failure()->name));
  auto it = expected.find(name);
  if (it != expected.end()) cr.expect(m.verdict() == it->second, name + ": wrong Maschke verdict");
  if constexpr (std::is_same_v<K, mpq_class>)
    cr.expect(trace_form_nondegenerate(b.c.A()) == m.verdict(), name + ": trace form oracle disagrees");
}

template <class K>
void fundamental_case(Criterion& cr, const std::string& name, const Bundle<K>& b) {
  Subspace<K> L = left_dual_integrals(b.c, b.sc.a_upper);
  HopfModuleOnDual<K> H = hopf_module_on_dual(b.c, b.sc, L);
  cr.expect(H.checks.ok(), name + ": " + (H.checks.ok() ? "" : H.checks.first_failure()->name));
  cr.expect(H.E * H.E == H.E, name + ": E not idempotent");
  cr.expect(image(H.E) == L, name + ": image of E is not L(A^*)");
  FundamentalIso<K> F = fundamental_iso(b.c, b.sc, H);
  cr.expect(F.checks.ok(), name + ": " + (F.checks.ok() ? "" : F.checks.first_failure()->name));
  Mat<K> id = Mat<K>::identity(b.c.field(), b.sc.a_upper.dim());
  for (auto* iso : {&F.left, &F.right})
    cr.expect(iso->map * iso->inverse == id && iso->inverse * iso->map == id, name + ": alpha inverse");
  if constexpr (std::is_same_v<K, mpq_class>) {
    cr.expect(oracle::rank(oracle::rows_of(F.left.map)) == id.rows, name + ": alpha_L rank by oracle");
    cr.expect(oracle::rank(oracle::rows_of(F.right.map)) == id.rows, name + ": alpha_R rank by oracle");
  }
}

template <class K>
Mat<K> mat_of(const Field& f, const json& j) {
  Mat<K> m(f, j.size(), j[0].size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t k = 0; k < m.cols; ++k) m(i, k) = Scalar<K>::from_json(f, j[i][k]);
  return m;
}

template <class K>
Vec<K> vec_of(const Field& f, const json& j) {
  Vec<K> v;
  for (auto& x : j) v.push_back(Scalar<K>::from_json(f, x));
  return v;
}

template <class K>
void frobenius_case(Criterion& cr, const std::string& name, const Bundle<K>& b) {
  static const std::set<std::string> must = {"qc2", "sweedler-h4", "lu-m2-q"};
  SearchPolicy pol;
  pol.seed = seed;
  FrobeniusReport<K> r = frobenius_decide(b.c, b.I, b.sc, pol);
  cr.expect(r.decision != Decision::UndecidedProbablyNot && r.undecided.empty(), name + ": undecided");
  cr.expect(r.theorem.agree(), name + ": Frobenius conditions disagree");
  cr.expect(r.theorem.checks.ok() && r.checks.ok(), name + ": Frobenius certificate check failed");
  const Condition* rank_one = r.theorem.find("2.a");
  cr.expect(rank_one && rank_one->verdict == (r.decision == Decision::Yes), name + ": rank-one cross-check");
  if (must.count(name)) cr.expect(r.decision == Decision::Yes, name + ": expected YES");
  if (r.decision != Decision::Yes) return;
  const json& sys = r.certificate["systems"];
  std::map<std::string, Mat<K>> ext = {{"s_R", b.c.sR()}, {"t_L", b.c.tL()}, {"s_L", b.c.sL()}, {"t_R", b.c.tR()}};
  for (auto& [x, e] : ext) {
    if (!sys.contains(x)) {
      cr.expect(false, name + ": no system for " + x);
      continue;
    }
    Mat<K> psi = mat_of<K>(b.c.field(), sys[x]["psi"]);
    Vec<K> u = vec_of<K>(b.c.field(), sys[x]["tensor"]);
    cr.expect(oracle::is_frobenius_system(b.c.A(), e, psi, u), name + ": system for " + x + " fails the identity");
  }
}

template <class K>
void qf_case(Criterion& cr, const std::string& name, const Bundle<K>& b) {
  for (QFSide side : {QFSide::Left, QFSide::Right}) {
    QFReport<K> q = qf_decide(b.c, b.I, b.sc, side);
    std::string p = side == QFSide::Left ? "1." : "2.", s = qf_side_name(side);
    cr.expect(q.theorem.agree(), name + " " + s + ": conditions disagree");
    cr.expect(q.theorem.checks.ok(), name + " " + s + ": certificate check failed");
    bool span = q.theorem.find(p + "f")->verdict;
    cr.expect(span == q.theorem.find(p + "a")->verdict && span == q.theorem.find(p + "b")->verdict,
              name + " " + s + ": span and extension-level criteria disagree");
    if (name == "lu-ut2-q") cr.expect(!q.theorem.verdict(), name + " " + s + ": expected not QF");
    if (name == "lu-m2-q") cr.expect(q.theorem.verdict(), name + " " + s + ": expected QF");
  }
}

template <class K>
void scholium_case(Criterion& cr, const std::string& name, const Bundle<K>& b, size_t& tested) {
  Report r = scholium_property_report(b.c, b.I, 100, seed);
  tested += r.checks.size();
  cr.expect(r.ok(), name + ": " + (r.ok() ? "" : r.first_failure()->name));
}

// ---------------------------------------------------------------------------
// Criterion 8 drives the command-line tool.

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  std::string cmd = std::string(HOPFALG_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void serialization(Criterion& cr) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("hopfalg_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> cmds = {"check", "integrals", "maschke", "dual-maschke",
                                         "frobenius --seed " + std::to_string(seed), "qf"};
  size_t compared = 0;
  for (const std::string& name : corpus) {
    std::string a = (dir / (name + ".1.json")).string(), b = (dir / (name + ".2.json")).string();
    CliRun e = cli("example " + name + " --emit " + a);
    cr.expect(e.code == 0, name + ": emit failed");
    // second run: load the emitted file and write it back through the library
    write_file(b, canonical_text(object_to_json(load_object(a))));
    cr.expect(read_file(a) == read_file(b), name + ": emit/load/emit not byte-stable");
    for (const std::string& cmd : cmds) {
      CliRun x = cli(cmd + " " + a), y = cli(cmd + " " + b);
      cr.expect(x.code == 0 && y.code == 0, name + ": " + cmd + " exit " + std::to_string(x.code));
      cr.expect(x.out == y.out, name + ": " + cmd + " reports differ");
      ++compared;
    }
  }
  fs::remove_all(dir);
  cr.summary = std::to_string(compared) + " report pairs byte-identical";
}

}  // namespace

int main() {
  std::map<int, Criterion> crit;
  std::map<int, std::string> titles = {{1, "axiom suite"},         {2, "derived identities"},
                                       {3, "Maschke and dual Maschke"}, {4, "fundamental theorem"},
                                       {5, "Frobenius"},           {6, "QF"},
                                       {7, "Scholium properties"}, {8, "serialization"}};
  auto guarded = [&](int id, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      crit[id].expect(false, std::string("exception: ") + e.what());
    }
  };

  guarded(1, [&] { axiom_suite(crit[1]); });
  guarded(2, [&] { derived_suite(crit[2]); });

  size_t scholium_checks = 0;
  for (const std::string& name : corpus)
    on_algebroid(name, [&](const auto& h) {
      using K = scalar_of<decltype(h)>;
      std::optional<Bundle<K>> b;
      try {
        b.emplace(h);
      } catch (const std::exception& e) {
        for (int id = 3; id <= 7; ++id) crit[id].expect(false, name + ": " + e.what());
        return;
      }
      guarded(3, [&] { maschke_case(crit[3], name, *b); });
      guarded(4, [&] { fundamental_case(crit[4], name, *b); });
      guarded(5, [&] { frobenius_case(crit[5], name, *b); });
      guarded(6, [&] { qf_case(crit[6], name, *b); });
      guarded(7, [&] { scholium_case(crit[7], name, *b, scholium_checks); });
    });
  for (int id = 3; id <= 6; ++id) crit[id].summary = std::to_string(corpus.size()) + " inputs";
  crit[7].summary = std::to_string(scholium_checks) + " characterizations x 100 samples, seed " + std::to_string(seed);

  guarded(8, [&] { serialization(crit[8]); });

  bool all = true;
  for (int id = 1; id <= 8; ++id) {
    Criterion& c = crit[id];
    bool ok = c.failures.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << titles[id];
    if (!c.summary.empty()) std::cout << " (" << c.summary << ")";
    std::cout << "\n";
    for (auto& f : c.failures) std::cout << "     " << f << "\n";
  }
  return all ? 0 : 1;
}
