#include <hopfalg.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace hopfalg;

namespace {

enum Exit { Decided = 0, Internal = 1, Invalid = 2, Undecided = 3 };

struct Options {
  std::string file, name, emit, format = "json";
  uint64_t seed = 1;
  size_t trials = 200;
};

// Text rendering of report JSON.
void render(std::ostream& out, const json& j, int indent);

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render_checks(std::ostream& out, const json& r, int indent) {
  std::string pad(indent, ' ');
  out << pad << r["title"].get<std::string>() << (r["ok"].get<bool>() ? "" : "  [FAILED]") << "\n";
  for (auto& c : r["checks"]) {
    out << pad << "  " << std::left << std::setw(5) << c["status"].get<std::string>() << " " << c["name"].get<std::string>();
    if (c.contains("witness")) out << "  witness " << c["witness"].dump();
    if (c.contains("note")) out << "  (" << c["note"].get<std::string>() << ")";
    out << "\n";
  }
}

void render_theorem(std::ostream& out, const json& t, int indent) {
  std::string pad(indent, ' ');
  out << pad << t["theorem"].get<std::string>() << ": verdict " << (t["verdict"].get<bool>() ? "true" : "false")
      << ", conditions " << (t["agree"].get<bool>() ? "agree" : "DISAGREE") << "\n";
  for (auto& c : t["conditions"])
    out << pad << "  " << std::left << std::setw(6) << c["condition_id"].get<std::string>() << std::setw(6)
        << (c["verdict"].get<bool>() ? "true" : "false") << c["statement"].get<std::string>() << "\n";
  for (auto it = t.begin(); it != t.end(); ++it) {
    if (it.key() == "theorem" || it.key() == "verdict" || it.key() == "agree" || it.key() == "conditions") continue;
    out << pad << it.key() << ":\n";
    render(out, it.value(), indent + 2);
  }
}

void render(std::ostream& out, const json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object() && j.contains("conditions") && j.contains("theorem")) return render_theorem(out, j, indent);
  if (j.is_object() && j.contains("checks") && j.contains("title")) return render_checks(out, j, indent);
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!it.value().is_structured() || flat_array(it.value())) {
        out << pad << it.key() << ": ";
        if (it.value().is_array()) {
          for (size_t k = 0; k < it.value().size(); ++k) out << (k ? " " : "") << scalar_text(it.value()[k]);
        } else {
          out << scalar_text(it.value());
        }
        out << "\n";
      } else {
        out << pad << it.key() << ":\n";
        render(out, it.value(), indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (auto& x : j) {
      if (x.is_structured() && !flat_array(x)) {
        render(out, x, indent);
        out << pad << "--\n";
      } else if (x.is_array()) {
        out << pad;
        for (size_t k = 0; k < x.size(); ++k) out << (k ? " " : "") << scalar_text(x[k]);
        out << "\n";
      } else {
        out << pad << scalar_text(x) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void print(const json& j, const Options& o) {
  if (o.format == "json")
    std::cout << canonical_text(j);
  else
    render(std::cout, j, 0);
}

// Axiom gate for the computing subcommands.
template <class K>
HopfContext<K> verified(const HopfAlgebroidData<K>& h) {
  HopfContext<K> c(h);
  throw_first_failure<K>(hopf_axioms_report(c));
  return c;
}

template <class K>
json integral_json(const HopfContext<K>& c, const IntegralSpaces<K>& I) {
  json spaces = json::array();
  for (IntegralKind k : all_integral_kinds) {
    const auto& s = I.get(k).basis;
    json b = json::array();
    for (size_t i = 0; i < s.dim(); ++i) b.push_back(vec_to_json(s.vec(i)));
    spaces.push_back(json{{"space", integral_name(k)}, {"ambient", integral_ambient(c, k)}, {"dim", s.dim()}, {"basis", b}});
  }
  return spaces;
}

template <class K>
int run_on(const std::string& cmd, const HopfAlgebroidData<K>& h, const Options& o) {
  json out;
  out["command"] = cmd;
  out["field"] = h.field().name();
  out["dim"] = h.n();
  if (cmd == "check") {
    HopfContext<K> c(h);
    Report ax = hopf_axioms_report(c);
    out["axioms"] = ax.to_json();
    bool ok = ax.ok();
    if (ok) {
      Report der = derived_identities_report(c);
      ok = der.ok();
      out["derived"] = der.to_json();
    }
    out["valid"] = ok;
    print(out, o);
    return ok ? Decided : Invalid;
  }

  HopfContext<K> c = verified(h);
  IntegralSpaces<K> I = all_integral_spaces(c);
  int code = Decided;
  if (cmd == "integrals") {
    out["spaces"] = integral_json(c, I);
    Report s = scholium_report(c, I);
    out["scholium"] = s.to_json();
    if (!s.ok()) code = Internal;
  } else if (cmd == "maschke" || cmd == "dual-maschke") {
    TheoremReport t = cmd == "maschke" ? maschke_report(c, I) : dual_maschke_report(c, I);
    out["report"] = t.to_json();
    if (!t.agree() || !t.checks.ok()) code = Internal;
  } else if (cmd == "frobenius") {
    SearchPolicy pol;
    pol.seed = o.seed;
    pol.trials = o.trials;
    out["seed"] = o.seed;
    out["trials"] = o.trials;
    FrobeniusReport<K> r = frobenius_decide(c, I, sigma_chi(c), pol);
    out["report"] = r.to_json();
    if (!r.theorem.agree() || !r.checks.ok() || !r.theorem.checks.ok()) code = Internal;
    if (r.decision == Decision::UndecidedProbablyNot || !r.undecided.empty()) code = Undecided;
  } else if (cmd == "qf") {
    SigmaChi<K> sc = sigma_chi(c);
    QFReport<K> l = qf_decide(c, I, sc, QFSide::Left), r = qf_decide(c, I, sc, QFSide::Right);
    out["leftQF"] = l.theorem.verdict();
    out["rightQF"] = r.theorem.verdict();
    out["left"] = l.to_json();
    out["right"] = r.to_json();
    for (auto* q : {&l, &r})
      if (!q->theorem.agree() || !q->theorem.checks.ok()) code = Internal;
  }
  print(out, o);
  return code;
}

template <class K>
int run_on_algebra(const std::string& cmd, const FinAlgebra<K>& a, const Options& o) {
  if (cmd != "check") throw InvalidInput(cmd + ": expected a Hopf algebroid, got an algebra");
  json out;
  out["command"] = cmd;
  out["field"] = a.field().name();
  out["dim"] = a.dim();
  out["valid"] = true;  // mk_algebra has verified associativity and the unit
  out["center_dim"] = center(a).dim();
  print(out, o);
  return Decided;
}

int run_file(const std::string& cmd, const Options& o) {
  Object obj = load_object(o.file);
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinAlgebra<mpq_class>> || std::is_same_v<T, FinAlgebra<Fp>>)
          return run_on_algebra(cmd, x, o);
        else
          return run_on(cmd, x, o);
      },
      obj);
}

int run_example(const Options& o) {
  json j = object_to_json(builtin(o.name));
  if (o.emit.empty()) {
    print(j, o);
  } else {
    write_file(o.emit, canonical_text(j));
  }
  return Decided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebroids"};
  app.require_subcommand(1);
  Options o;
  auto format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  std::vector<std::pair<std::string, std::string>> file_cmds = {
      {"check", "Verify the axioms and derived identities"},
      {"integrals", "Compute all six integral spaces"},
      {"maschke", "Decide the Maschke equivalences"},
      {"dual-maschke", "Decide the dual Maschke equivalences"},
      {"frobenius", "Decide the Frobenius equivalences"},
      {"qf", "Decide the left and right QF equivalences"},
  };
  for (auto& [name, help] : file_cmds) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("FILE", o.file, "Input document")->required();
    format(s);
    if (name == "frobenius") {
      s->add_option("--seed", o.seed, "Seed for the randomized search");
      s->add_option("--trials", o.trials, "Number of random trials")->check(CLI::PositiveNumber);
    }
  }
  CLI::App* ex = app.add_subcommand("example", "Print or emit a built-in example");
  ex->add_option("NAME", o.name, "Example name")->required()->check(CLI::IsMember(catalog_names()));
  ex->add_option("--emit", o.emit, "Write the canonical document to this file");
  format(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Invalid;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (sub == ex) return run_example(o);
    return run_file(sub->get_name(), o);
  } catch (const AxiomFailure& e) {
    json err{{"error", "axiom"}, {"check", e.code}, {"witness", e.witness}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return Invalid;
  } catch (const InvalidInput& e) {
    std::cerr << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << "\n";
    return Invalid;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return Internal;
  }
}
