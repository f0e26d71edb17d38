// Command-line interface: realization validation, diagram localization,
// Jones-Wenzl analysis, quantum numbers, and the relation verifier.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "heckeloc/json_io.hpp"

using namespace heckeloc;

namespace {

RealizationPtr load_realization(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return builtin::make(spec.substr(prefix.size()));
  return realization_from_toml(read_file(spec));
}

std::string builtin_help() {
  std::string out = "Built-in realizations (use builtin:NAME):";
  for (const auto& n : builtin::names()) out += "\n  builtin:" + n;
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write to " + path);
  out << text << "\n";
}

int cmd_validate(const std::string& rspec, bool as_json) {
  RealizationPtr r;
  try {
    r = load_realization(rspec);
  } catch (const std::exception& ex) {
    if (as_json) {
      Json j{{"valid", false}, {"error", ex.what()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "INVALID: " << ex.what() << "\n";
    }
    return 1;
  }
  Json pairs = Json::array();
  std::ostringstream pretty;
  pretty << "realization '" << r->name() << "' is valid (rank " << r->rank() << ")\n";
  for (int s = 0; s < r->rank(); ++s)
    for (int t = s + 1; t < r->rank(); ++t) {
      int m = r->cox().m[s][t];
      Json pj{{"pair", Json::array({r->gen_names()[s], r->gen_names()[t]})}, {"m", m}};
      pretty << "  pair (" << r->gen_names()[s] << "," << r->gen_names()[t] << "): m = ";
      if (m == 0) {
        pretty << "infinity\n";
        pj["m"] = "infinity";
      } else {
        auto [bs, bt] = r->balance_scalar(s, t);
        bool bal = bs.is_one() && bt.is_one();
        int ord = r->order_on_span(s, t);
        bool rot = false;
        std::string rot_note;
        try {
          rot = is_rotatable(r->x_of(s, t), r->x_of(t, s), m - 1);
        } catch (const std::domain_error&) {
          rot_note = "JW_{m-1} does not exist";
        }
        pretty << m << ", [m-1] = (" << bs.to_string() << ", " << bt.to_string() << ")"
               << (bal ? " balanced" : " unbalanced") << ", order on span = " << ord
               << ", rotatable JW_{m-1}: " << (rot_note.empty() ? (rot ? "yes" : "no") : rot_note)
               << "\n";
        pj["balance"] = Json::array({bs.to_string(), bt.to_string()});
        pj["balanced"] = bal;
        pj["order_on_span"] = ord;
        pj["rotatable"] = rot_note.empty() ? Json(rot) : Json(rot_note);
      }
      pairs.push_back(pj);
    }
  if (as_json) {
    Json j{{"valid", true}, {"name", r->name()}, {"rank", r->rank()}, {"pairs", pairs}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << pretty.str();
  }
  return 0;
}

int cmd_localize(const std::string& rspec, const std::string& dpath, const std::string& out) {
  RealizationPtr r = load_realization(rspec);
  Json dj = Json::parse(read_file(dpath));
  DPtr d = diagram_from_json(dj, *r);
  LambdaEval ev(r);
  LocMatrix m = ev.eval(d);
  write_output(out, matrix_to_json(m, *r).dump(2));
  return 0;
}

int cmd_jw(int n, const std::string& color, const std::string& rspec, bool generic,
           bool check_rotatable) {
  int leftmost = color == "t" ? 1 : 0;
  if (generic || rspec.empty()) {
    const auto& jw = jw_generic(n, leftmost);
    auto ctx = generic_tl_context();
    std::cout << "generic JW_" << n << " (leftmost color " << color << "), "
              << jw.terms.size() << " matchings:\n";
    for (const auto& [m, c] : jw.terms)
      std::cout << "  " << m.to_string() << " : " << c.to_string() << "\n";
    std::cout << "ptr1 = " << ptr1(ctx, jw).to_string() << "\n";
    return 0;
  }
  RealizationPtr r = load_realization(rspec);
  if (r->rank() < 2) throw std::runtime_error("jw --at needs a realization of rank >= 2");
  Scalar xs = r->x_of(0, 1), xt = r->x_of(1, 0);
  auto jw = jw_specialize(xs, xt, n, leftmost);
  if (!jw) {
    std::cout << "JW_" << n << " does not exist at realization '" << r->name() << "'\n";
    return 1;
  }
  auto ctx = specialized_tl_context(xs, xt);
  std::cout << "JW_" << n << " at '" << r->name() << "' (leftmost color " << color << "), "
            << jw->terms.size() << " matchings:\n";
  for (const auto& [m, c] : jw->terms)
    std::cout << "  " << m.to_string() << " : " << c.to_string() << "\n";
  auto tr = ptr(ctx, *jw);
  std::cout << "ptr1 = " << ptr1(ctx, *jw).to_string() << "\n";
  std::cout << "ptr  = " << tr.to_string() << "\n";
  if (check_rotatable) {
    try {
      bool rot = is_rotatable(xs, xt, n);
      std::cout << "rotatable: " << (rot ? "yes" : "no") << "\n";
      if (rot && n >= 1) {
        auto rotated = rotate_by_one_ccw(*jw);
        int right = (leftmost + n) % 2;
        Scalar ev = qspecialize(qnum(n, right == 0 ? QColor::T : QColor::S), xs, xt);
        auto other_jw = jw_specialize(xs, xt, n, 1 - leftmost);
        if (other_jw && rotated == other_jw->scaled(ev))
          std::cout << "rotation eigenvalue [n] = " << ev.to_string() << "\n";
      }
      return rot ? 0 : 1;
    } catch (const std::domain_error& ex) {
      std::cout << "rotatable: error: " << ex.what() << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_qnum(long long n, const std::string& color, const std::string& rspec) {
  QColor c = color == "t" ? QColor::T : QColor::S;
  Poly p = qnum(n, c);
  std::cout << "[" << n << "]_" << color << " = " << p.to_string() << "\n";
  if (!rspec.empty()) {
    RealizationPtr r = load_realization(rspec);
    if (r->rank() < 2) throw std::runtime_error("specialization needs rank >= 2");
    std::cout << "  at '" << r->name() << "': " << r->qnum_at(0, 1, n, c).to_string() << "\n";
  }
  return 0;
}

int cmd_qbinom(long long n, long long k, const std::string& color, const std::string& rspec) {
  QColor c = color == "t" ? QColor::T : QColor::S;
  Poly p = qbinom(n, k, c);
  std::cout << "[" << n << " " << k << "]_" << color << " = " << p.to_string() << "\n";
  if (!rspec.empty()) {
    RealizationPtr r = load_realization(rspec);
    if (r->rank() < 2) throw std::runtime_error("specialization needs rank >= 2");
    Scalar v = qspecialize(p, r->x_of(0, 1), r->x_of(1, 0));
    std::cout << "  at '" << r->name() << "': " << v.to_string() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& rspec, const std::string& suite, const std::string& b3path,
               int threads, const std::string& format, const std::string& out) {
  RealizationPtr r = load_realization(rspec);
  std::vector<RelationCase> cases = build_suite(r, suite);
  if (!b3path.empty()) {
    Json pj = Json::parse(read_file(b3path));
    DPtr lhs = diagram_from_json(pj.at("lhs"), *r);
    DPtr rhs = diagram_from_json(pj.at("rhs"), *r);
    cases.push_back(verify_zamolodchikov_custom(r, lhs, rhs, "custom"));
  }
  if (cases.empty()) {
    std::cerr << "no applicable cases for suite '" << suite << "' on '" << r->name() << "'\n";
    return 2;
  }
  Report rep = verify(cases, threads);
  if (format == "json") write_output(out, report_to_json(rep).dump(2));
  else write_output(out, rep.render());
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heckeloc: the localization functor for the diagrammatic Hecke category"};
  app.footer(builtin_help());
  app.require_subcommand(1);

  std::string rspec, dpath, out, color = "s", format = "pretty", suite = "all", b3;
  int n = 0;
  long long qn = 0, qk = 0;
  int threads = 0;
  bool as_json = false, generic = false, rotatable = false;

  auto* validate = app.add_subcommand("validate", "check a realization and print diagnostics");
  validate->add_option("--realization", rspec, "TOML path or builtin:NAME")->required();
  validate->add_flag("--json", as_json, "machine-readable output");

  auto* localize = app.add_subcommand("localize", "apply the localization functor to a diagram");
  localize->add_option("--diagram", dpath, "diagram JSON path")->required();
  localize->add_option("--realization", rspec, "TOML path or builtin:NAME")->required();
  localize->add_option("--out", out, "output path (default stdout)");

  auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector analysis");
  jw->add_option("n", n, "number of strands")->required();
  jw->add_option("--color", color, "leftmost region color, s or t")->check(CLI::IsMember({"s", "t"}));
  jw->add_option("--at", rspec, "specialize at a realization (TOML path or builtin:NAME)");
  jw->add_flag("--generic", generic, "force the generic projector");
  jw->add_flag("--rotatable", rotatable, "also decide rotatability");

  auto* qnumc = app.add_subcommand("qnum", "two-colored quantum number [n]");
  qnumc->add_option("n", qn, "index")->required();
  qnumc->add_option("--color", color, "color, s or t")->check(CLI::IsMember({"s", "t"}));
  qnumc->add_option("--realization", rspec, "also print the specialized value");

  auto* qbinomc = app.add_subcommand("qbinom", "two-colored quantum binomial [n k]");
  qbinomc->add_option("n", qn, "upper index")->required();
  qbinomc->add_option("k", qk, "lower index")->required();
  qbinomc->add_option("--color", color, "color, s or t")->check(CLI::IsMember({"s", "t"}));
  qbinomc->add_option("--realization", rspec, "also print the specialized value");

  auto* verifyc = app.add_subcommand("verify", "run relation suites; exit 0 iff all pass");
  verifyc->add_option("--suite", suite, "one of: one-color cyclicity jw assoc i2m-a1 zamolodchikov unbalanced all");
  verifyc->add_option("--realization", rspec, "TOML path or builtin:NAME")->required();
  verifyc->add_option("--zamo-b3", b3, "user-supplied Zamolodchikov pair {lhs, rhs} (JSON)");
  verifyc->add_option("--threads", threads, "worker threads (default: hardware)");
  verifyc->add_option("--format", format, "pretty or json")->check(CLI::IsMember({"pretty", "json"}));
  verifyc->add_option("--out", out, "output path (default stdout)");

  auto* builtins = app.add_subcommand("builtins", "list built-in realizations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(rspec, as_json);
    if (localize->parsed()) return cmd_localize(rspec, dpath, out);
    if (jw->parsed()) return cmd_jw(n, color, rspec, generic, rotatable);
    if (qnumc->parsed()) return cmd_qnum(qn, color, rspec);
    if (qbinomc->parsed()) return cmd_qbinom(qn, qk, color, rspec);
    if (verifyc->parsed()) return cmd_verify(rspec, suite, b3, threads, format, out);
    if (builtins->parsed()) {
      for (const auto& nm : builtin::names()) std::cout << nm << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
