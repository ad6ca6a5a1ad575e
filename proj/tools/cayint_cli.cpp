// cayint: command-line front end for the integrality library.
//
// Exit codes: 0 success, 1 the routes disagree or a golden check fails,
// 2 bad input (usage, group spec, set expression).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cayint/census.hpp"
#include "cayint/criteria.hpp"
#include "cayint/errors.hpp"
#include "cayint/extension.hpp"
#include "cayint/representations.hpp"
#include "cayint/spectrum.hpp"
#include "golden_examples.hpp"

using namespace cayint;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

// Integers print as integers, Gaussian integers as "3i" / "1 + 2i"; anything
// else as its reduced coordinates in powers of z = exp(2 pi i / m).
std::string render(const CycloInt& v) {
  if (auto n = is_rational_integer(v)) return std::to_string(*n);
  const int m = v.order();
  if (m % 4 == 0) {
    const auto i = CycloInt::root(m, m / 4);
    const auto im = is_rational_integer(-(i * (v - v.conj())));
    const auto twice_re = is_rational_integer(v + v.conj());
    if (im && twice_re && *twice_re % 2 == 0 && *im % 2 == 0) {
      const auto re = *twice_re / 2;
      const auto b = *im / 2;
      std::ostringstream out;
      if (re != 0) out << re << (b < 0 ? " - " : " + ");
      const auto mag = re != 0 ? std::abs(b) : b;
      if (mag == 1) {
        out << "i";
      } else if (mag == -1) {
        out << "-i";
      } else {
        out << mag << "i";
      }
      return out.str();
    }
  }
  const auto r = v.reduced();
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    const auto c = r[k];
    if (!first) out << (c < 0 ? " - " : " + ");
    const auto mag = first ? c : std::abs(c);
    if (k == 0) {
      out << mag;
    } else {
      if (mag == -1) {
        out << "-";
      } else if (mag != 1) {
        out << mag << "*";
      }
      out << "z" << m << (k == 1 ? "" : "^" + std::to_string(k));
    }
    first = false;
  }
  return first ? "0" : out.str();
}

ojson exact_json(const CycloInt& v) {
  ojson j;
  j["text"] = render(v);
  j["order"] = v.order();
  j["reduced"] = v.reduced();
  return j;
}

std::string set_text(const ExtGroup& g, const std::vector<int>& elements) {
  std::string out = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) out += (k ? ", " : "") + g.label(elements[k]);
  return out + "}";
}

std::string a_set_text(const ExtGroup& g, const IndexSet& xs) { return set_text(g, std::vector<int>(xs.begin(), xs.end())); }

std::vector<std::string> a_set_labels(const ExtGroup& g, const IndexSet& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(g.label(x));
  return out;
}

std::string factors_text(const AbelianGroup& a) {
  std::string out;
  for (std::size_t k = 0; k < a.factors().size(); ++k) out += (k ? " x " : "") + ("Z/" + std::to_string(a.factors()[k]));
  return out;
}

std::string family(const ExtGroup& g) {
  if (g.is_dihedral()) return "generalized dihedral";
  if (g.is_dicyclic()) return "generalized dicyclic";
  return "general";
}

int default_workers() {
  if (const char* env = std::getenv("CAYLEY_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CAYLEY_WORKERS='" << env << "'\n";
  }
  return 1;
}

// --------------------------------------------------------------------------- group

int cmd_group(const std::string& spec, bool json) {
  const auto g = parse_group(spec);
  const auto& a = g.base();
  std::vector<std::string> images;
  for (std::size_t k = 0; k < a.factors().size(); ++k) {
    std::vector<int> coords(a.factors().size(), 0);
    coords[k] = 1;
    const int gen = a.index(AbElement{coords});
    images.push_back(g.label(gen) + " -> " + g.label(g.twist().apply(gen)));
  }
  if (json) {
    ojson j;
    j["spec"] = g.spec();
    j["order"] = g.order();
    j["A"] = a.factors();
    j["exponent"] = a.exponent();
    j["f"] = images;
    j["y"] = g.label(g.y_index());
    j["B"] = a_set_labels(g, g.B());
    j["index_B"] = g.index_B();
    j["working_order"] = g.working_order();
    j["family"] = family(g);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "group     " << g.spec() << '\n'
            << "|G|       " << g.order() << '\n'
            << "A         " << factors_text(a) << "  (|A| = " << a.order() << ", exponent " << a.exponent() << ")\n"
            << "f         ";
  for (std::size_t k = 0; k < images.size(); ++k) std::cout << (k ? ", " : "") << images[k];
  std::cout << '\n'
            << "y         " << g.label(g.y_index()) << '\n'
            << "B         " << a_set_text(g, g.B()) << '\n'
            << "(A:B)     " << g.index_B() << '\n'
            << "m         " << g.working_order() << "  (values in Z[z" << g.working_order() << "])\n"
            << "family    " << family(g) << '\n';
  return kOk;
}

// --------------------------------------------------------------------------- reps

int cmd_reps(const std::string& spec, bool json) {
  const auto g = parse_group(spec);
  const auto reps = classify(g);
  const auto classes = conjugacy_classes(g);
  std::vector<std::vector<CycloInt>> table;
  for (const auto& r : reps) table.push_back(character_of(r, g.order()));

  if (json) {
    ojson j;
    j["group"] = g.spec();
    j["working_order"] = g.working_order();
    auto cls = ojson::array();
    for (const auto& c : classes) {
      ojson e;
      e["representative"] = g.label(c.front());
      e["size"] = c.size();
      std::vector<std::string> members;
      for (int x : c) members.push_back(g.label(x));
      e["members"] = members;
      cls.push_back(std::move(e));
    }
    j["classes"] = std::move(cls);
    auto rows = ojson::array();
    for (std::size_t k = 0; k < reps.size(); ++k) {
      ojson row;
      row["label"] = reps[k].label;
      row["dim"] = reps[k].dim;
      row["character_of_A"] = reps[k].character.to_string();
      auto vals = ojson::array();
      for (const auto& c : classes) vals.push_back(exact_json(table[k][static_cast<std::size_t>(c.front())]));
      row["values"] = std::move(vals);
      rows.push_back(std::move(row));
    }
    j["reps"] = std::move(rows);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"rep", "dim"};
  for (const auto& c : classes) head.push_back(g.label(c.front()) + " [" + std::to_string(c.size()) + "]");
  cells.push_back(head);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::vector<std::string> row{"rho" + std::to_string(reps[k].label), std::to_string(reps[k].dim)};
    for (const auto& c : classes) row.push_back(render(table[k][static_cast<std::size_t>(c.front())]));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::cout << "character table of " << g.spec() << " (columns: class representative [size]; z" << g.working_order()
            << " = exp(2 pi i / " << g.working_order() << "))\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) std::cout << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    std::cout << '\n';
  }
  return kOk;
}

// --------------------------------------------------------------------------- check / spectrum

struct Evaluation {
  ConnectionSet cs;
  CriterionTrace trace;
  SpectrumReport exact;
  std::vector<double> numeric;
  bool numeric_integral = false;
  bool spectra_match = true;

  bool agree() const { return trace.overall == exact.integral && exact.integral == numeric_integral && spectra_match; }
};

Evaluation evaluate(const ExtGroup& g, const CriteriaContext& ctx, Mask mask) {
  Evaluation ev;
  ev.cs = split_connection_set(g, mask);
  ev.trace = check_main(ctx, ev.cs, true);
  ev.exact = exact_spectrum(g, ev.cs, ctx.reps());
  ev.numeric = numeric_spectrum(adjacency(g, ev.cs));
  ev.numeric_integral = is_integral_numeric(ev.numeric);
  for (std::size_t k = 0; k < ev.numeric.size(); ++k) {
    if (std::abs(ev.numeric[k] - ev.exact.eigenvalues[k]) > 1e-6) ev.spectra_match = false;
  }
  return ev;
}

std::string spectrum_text(const SpectrumReport& r) {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    out << (k ? ", " : "");
    if (r.exact[k]) {
      out << *r.exact[k];
    } else {
      out << std::setprecision(10) << r.eigenvalues[k];
    }
  }
  return out.str() + "}";
}

ojson spectrum_json(const SpectrumReport& r, bool with_blocks) {
  ojson j;
  j["integral"] = r.integral;
  auto vals = ojson::array();
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    vals.push_back(r.exact[k] ? ojson(*r.exact[k]) : ojson(r.eigenvalues[k]));
  }
  j["eigenvalues"] = std::move(vals);
  if (with_blocks) {
    auto blocks = ojson::array();
    for (const auto& b : r.blocks) {
      ojson e;
      e["rep"] = b.label;
      e["dim"] = b.dim;
      e["trace"] = exact_json(b.trace);
      if (b.dim == 2) {
        e["det"] = exact_json(b.det);
        e["discriminant"] = exact_json(b.discriminant);
      }
      e["integral"] = b.integral;
      e["eigenvalues"] = b.integral ? ojson(b.exact) : ojson(b.numeric);
      blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
  }
  return j;
}

ojson checks_json(const std::vector<Check>& checks) {
  auto arr = ojson::array();
  for (const auto& c : checks) {
    ojson e;
    e["condition"] = c.condition;
    e["subject"] = c.subject;
    ojson vals;
    for (const auto& [name, v] : c.values) vals[name] = exact_json(v);
    e["values"] = std::move(vals);
    e["witness"] = c.witness ? ojson(*c.witness) : ojson(nullptr);
    e["ok"] = c.ok;
    arr.push_back(std::move(e));
  }
  return arr;
}

ojson trace_json(const CriterionTrace& t) {
  ojson j;
  j["route"] = to_string(t.route);
  j["overall"] = t.overall;
  j["condition1"] = checks_json(t.condition1);
  j["condition2"] = checks_json(t.condition2);
  if (!t.set_conditions.empty()) {
    ojson s;
    for (const auto& [name, ok] : t.set_conditions) s[name] = ok;
    j["set_conditions"] = std::move(s);
  }
  return j;
}

ojson split_json(const ExtGroup& g, const ConnectionSet& cs) {
  ojson j;
  j["S1"] = a_set_labels(g, cs.S1);
  j["S2"] = a_set_labels(g, cs.S2);
  j["T1"] = a_set_labels(g, cs.T1);
  j["T2"] = a_set_labels(g, cs.T2);
  return j;
}

void print_checks(const std::string& title, const std::vector<Check>& checks, bool over_reps) {
  if (checks.empty()) return;
  std::cout << title << '\n';
  for (const auto& c : checks) {
    std::cout << "  (" << c.condition << ") " << (over_reps ? "rho" : "pi") << c.subject << ": ";
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      std::cout << (k ? ", " : "") << c.values[k].first << " = " << render(c.values[k].second);
    }
    if (c.witness) std::cout << "  [" << *c.witness << "]";
    std::cout << "  " << (c.ok ? "ok" : "FAIL") << '\n';
  }
}

int cmd_check(const std::string& spec, const std::string& set_expr, bool json) {
  const auto g = parse_group(spec);
  const Mask mask = mask_of(g, parse_set(g, set_expr));
  const CriteriaContext ctx(g);
  const auto ev = evaluate(g, ctx, mask);

  // Corollary routes whose preconditions hold.
  std::vector<CriterionTrace> corollaries;
  if (ev.cs.undirected()) corollaries.push_back(check_undirected(ctx, ev.cs));
  if (g.twist().is_inversion()) corollaries.push_back(check_s_minus_one(ctx, ev.cs));
  if (ev.cs.directed() && g.is_dihedral()) corollaries.push_back(check_dihedral_directed(ctx, ev.cs));
  if (ev.cs.directed() && g.is_dicyclic()) corollaries.push_back(check_dicyclic_directed(ctx, ev.cs));
  bool agree = ev.agree();
  for (const auto& t : corollaries) agree = agree && t.overall == ev.trace.overall;

  if (json) {
    ojson j;
    j["group"] = g.spec();
    j["set"] = set_text(g, elements_of(g, mask));
    j["mask"] = mask;
    j["kind"] = to_string(kind_of(ev.cs));
    j["split"] = split_json(g, ev.cs);
    j["criteria"] = trace_json(ev.trace);
    auto cor = ojson::array();
    for (const auto& t : corollaries) cor.push_back(trace_json(t));
    j["corollaries"] = std::move(cor);
    j["exact"] = spectrum_json(ev.exact, true);
    j["numeric"] = {{"integral", ev.numeric_integral}, {"eigenvalues", ev.numeric}};
    j["integral"] = ev.exact.integral;
    j["agree"] = agree;
    std::cout << j.dump(2) << '\n';
    return agree ? kOk : kMismatch;
  }

  std::cout << "group     " << g.spec() << '\n'
            << "S         " << set_text(g, elements_of(g, mask)) << "  (mask " << mask << ", " << to_string(kind_of(ev.cs))
            << ")\n"
            << "split     S1 = " << a_set_text(g, ev.cs.S1) << ", S2 = " << a_set_text(g, ev.cs.S2)
            << ", T1 = " << a_set_text(g, ev.cs.T1) << ", T2 = " << a_set_text(g, ev.cs.T2) << '\n';
  print_checks("condition (1), one-dimensional reps:", ev.trace.condition1, true);
  print_checks("condition (2), characters of A nontrivial on B:", ev.trace.condition2, false);
  std::cout << "criteria  " << (ev.trace.overall ? "integral" : "not integral") << '\n';
  for (const auto& t : corollaries) {
    std::cout << "  via " << to_string(t.route) << ": " << (t.overall ? "integral" : "not integral") << '\n';
  }
  if (const auto* w = ev.trace.witness()) {
    std::cout << "witness   condition (" << w->condition << ") fails for " << (w->condition == "1" ? "rho" : "pi")
              << w->subject << '\n';
  }
  std::cout << "exact     " << (ev.exact.integral ? "integral " : "not integral ") << spectrum_text(ev.exact) << '\n'
            << "numeric   " << (ev.numeric_integral ? "integral" : "not integral") << '\n'
            << "routes    " << (agree ? "agree" : "DISAGREE") << '\n';
  return agree ? kOk : kMismatch;
}

int cmd_spectrum(const std::string& spec, const std::string& set_expr, bool json) {
  const auto g = parse_group(spec);
  const Mask mask = mask_of(g, parse_set(g, set_expr));
  const auto cs = split_connection_set(g, mask);
  const auto reps = classify(g);
  const auto exact = exact_spectrum(g, cs, reps);
  const auto numeric = numeric_spectrum(adjacency(g, cs));
  bool match = is_integral_numeric(numeric) == exact.integral;
  for (std::size_t k = 0; k < numeric.size(); ++k) match = match && std::abs(numeric[k] - exact.eigenvalues[k]) <= 1e-6;

  if (json) {
    auto j = spectrum_json(exact, true);
    j["group"] = g.spec();
    j["mask"] = mask;
    j["numeric"] = numeric;
    j["agree"] = match;
    std::cout << j.dump(2) << '\n';
    return match ? kOk : kMismatch;
  }
  std::cout << "spectrum  " << spectrum_text(exact) << '\n' << "integral  " << (exact.integral ? "yes" : "no") << '\n';
  for (const auto& b : exact.blocks) {
    std::cout << "  rho" << b.label << " (dim " << b.dim << "): ";
    if (b.dim == 1) {
      std::cout << render(b.trace);
    } else {
      std::cout << "delta = " << render(b.trace) << ", epsilon = " << render(b.det)
                << ", disc = " << render(b.discriminant);
    }
    std::cout << (b.integral ? "" : "  (not integral)") << '\n';
  }
  std::cout << "numeric   ";
  for (std::size_t k = 0; k < numeric.size(); ++k) std::cout << (k ? " " : "") << std::setprecision(8) << numeric[k];
  std::cout << '\n' << "routes    " << (match ? "agree" : "DISAGREE") << '\n';
  return match ? kOk : kMismatch;
}

// --------------------------------------------------------------------------- census / verify

struct CensusArgs {
  std::string group;
  std::string kind = "all";
  std::uint64_t limit = std::uint64_t{1} << 15;
  std::uint64_t samples = 10000;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::string out;
  bool summary_only = false;
  bool timing = false;
};

void print_record(std::ostream& out, const CensusRecord& r) { out << to_json(r).dump() << '\n'; }

int cmd_census(const CensusArgs& args) {
  const auto g = parse_group(args.group);
  const auto kind = parse_mask_kind(args.kind);
  const auto plan = enumerate_masks(g, kind, args.limit, args.seed, args.samples);
  CensusOptions opt;
  opt.workers = args.workers;
  opt.timing = args.timing;
  const auto result = run_census(g, plan.masks, opt);

  const auto summary = to_json(result.summary);
  if (args.summary_only) {
    std::cout << summary.dump(2) << '\n';
  } else if (!args.out.empty()) {
    std::ofstream file(args.out);
    if (!file) throw PreconditionError("cannot open '" + args.out + "' for writing");
    write_jsonl(file, census_header(g, kind, plan.seed), result.records);
    std::cout << summary.dump(2) << '\n';
  } else {
    write_jsonl(std::cout, census_header(g, kind, plan.seed), result.records);
    std::cerr << summary.dump() << '\n';
  }
  if (!result.disagreements.empty()) {
    std::cerr << "route disagreement on " << result.disagreements.size() << " mask(s); first:\n";
    print_record(std::cerr, result.disagreements.front());
    return kMismatch;
  }
  return kOk;
}

int cmd_verify(int max_order, int workers, std::uint64_t seed) {
  bool ok = true;
  for (const auto& spec : default_catalog()) {
    const auto g = parse_group(spec);
    if (g.order() > max_order) continue;
    const auto start = std::chrono::steady_clock::now();
    const auto plan = enumerate_masks(g, MaskKind::all, std::uint64_t{1} << 15, seed, 10000);
    CensusOptions opt;
    opt.workers = workers;
    const auto result = run_census(g, plan.masks, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::uint64_t integral = 0;
    for (const auto& [k, n] : result.summary.integral) integral += n;
    std::cout << std::left << std::setw(20) << g.spec() << std::right << " masks " << std::setw(6) << plan.masks.size()
              << (plan.sampled ? " (sampled)" : "") << "  integral " << std::setw(5) << integral << "  disagreements "
              << result.disagreements.size() << "  " << std::fixed << std::setprecision(2) << secs << " s\n"
              << std::defaultfloat;
    if (!result.disagreements.empty()) {
      ok = false;
      print_record(std::cerr, result.disagreements.front());
    }
  }
  std::cout << (ok ? "all routes agree" : "DISAGREEMENT") << '\n';
  return ok ? kOk : kMismatch;
}

// --------------------------------------------------------------------------- golden examples

int cmd_paper_examples() {
  const auto fixture = nlohmann::json::parse(golden::kExamples);
  bool all_ok = true;
  for (const auto& ex : fixture.at("examples")) {
    const auto tag = ex.at("tag").get<std::string>();
    const auto g = parse_group(ex.at("group").get<std::string>());
    std::vector<std::string> problems;

    if (ex.at("kind") == "census") {
      const auto kind = parse_mask_kind(ex.at("mask_kind").get<std::string>());
      const auto plan = enumerate_masks(g, kind, std::uint64_t{1} << 20);
      const auto result = run_census(g, plan.masks);
      if (plan.masks.size() != ex.at("admissible").get<std::size_t>()) {
        problems.push_back("admissible masks: expected " + ex.at("admissible").dump() + ", got " +
                           std::to_string(plan.masks.size()));
      }
      std::set<Mask> expected, got;
      for (const auto& s : ex.at("integral_sets")) expected.insert(mask_of(g, parse_set(g, s.get<std::string>())));
      for (const auto& r : result.records) {
        if (r.verdict_exact) got.insert(r.mask);
      }
      for (Mask m : expected) {
        if (!got.count(m)) problems.push_back("expected integral, found not: " + set_text(g, elements_of(g, m)));
      }
      for (Mask m : got) {
        if (!expected.count(m)) problems.push_back("unexpectedly integral: " + set_text(g, elements_of(g, m)));
      }
      if (!result.disagreements.empty()) problems.push_back("route disagreement on mask " + std::to_string(result.disagreements.front().mask));
      std::cout << (problems.empty() ? "PASS " : "FAIL ") << tag << "  (" << got.size() << " of " << plan.masks.size()
                << " integral)\n";
    } else {
      const auto sets = coro_simple_generator(g, 1, 1000);
      const CriteriaContext ctx(g);
      std::size_t bad = 0;
      for (const auto& cs : sets) {
        const auto ev = evaluate(g, ctx, cs.mask);
        if (!(ev.agree() && ev.exact.integral)) ++bad;
      }
      const auto min_sets = ex.at("min_sets").get<std::size_t>();
      if (sets.size() < min_sets) {
        problems.push_back("generated " + std::to_string(sets.size()) + " sets, expected at least " + std::to_string(min_sets));
      }
      if (bad) problems.push_back(std::to_string(bad) + " generated sets are not integral by every route");
      std::cout << (problems.empty() ? "PASS " : "FAIL ") << tag << "  (" << sets.size() << " sets, all integral)\n";
    }
    for (const auto& p : problems) std::cout << "  - " << p << '\n';
    all_ok = all_ok && problems.empty();
  }
  return all_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrality of mixed Cayley graphs over groups with an abelian subgroup of index 2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cayint 0.1.0");

  std::string spec, set_expr;
  bool json = false;

  auto* group = app.add_subcommand("group", "Describe a group: A, f, y, B, (A:B) and the working order");
  group->add_option("spec", spec, "Group spec, e.g. dihedral(8)")->required();
  group->add_flag("--json", json, "JSON output");

  auto* reps = app.add_subcommand("reps", "Character table of the irreducible representations");
  reps->add_option("spec", spec, "Group spec")->required();
  reps->add_flag("--json", json, "JSON output");

  auto* check = app.add_subcommand("check", "Decide integrality of Cay(G, S) by all routes");
  check->add_option("spec", spec, "Group spec")->required();
  check->add_option("--set,-s", set_expr, "Connection set, e.g. a,x*a^2 or (1,0),x*(0,1)")->required();
  check->add_flag("--json", json, "JSON output");

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of Cay(G, S) with per-representation blocks");
  spectrum->add_option("spec", spec, "Group spec")->required();
  spectrum->add_option("--set,-s", set_expr, "Connection set")->required();
  spectrum->add_flag("--json", json, "JSON output");

  CensusArgs cargs;
  cargs.workers = default_workers();
  std::uint64_t seed_value = 0;
  auto* census = app.add_subcommand("census", "Evaluate every (or a seeded sample of) connection set(s) of a group");
  census->add_option("--group,-g", cargs.group, "Group spec")->required();
  census->add_option("--kind,-k", cargs.kind, "all | undirected | directed")->check(CLI::IsMember({"all", "undirected", "directed"}));
  census->add_option("--limit", cargs.limit, "Enumerate exhaustively up to this many masks")->capture_default_str();
  census->add_option("--samples", cargs.samples, "Sample size when the limit is exceeded")->capture_default_str();
  auto* seed_opt = census->add_option("--seed", seed_value, "Sampling seed (required when sampling)");
  census->add_option("--workers,-j", cargs.workers, "Worker threads (default: $CAYLEY_WORKERS or 1)")->check(CLI::PositiveNumber);
  census->add_option("--out,-o", cargs.out, "Write JSONL records here instead of stdout");
  census->add_flag("--summary-only", cargs.summary_only, "Print only the summary");
  census->add_flag("--timing", cargs.timing, "Record per-mask wall time (output is then not reproducible)");

  app.add_subcommand("paper-examples", "Reproduce the worked examples from the golden fixture");

  int max_order = 16;
  int vworkers = default_workers();
  std::uint64_t vseed = 1;
  auto* verify = app.add_subcommand("verify", "Check that all routes agree on every catalog group");
  verify->add_option("--max-order", max_order, "Largest |G| to include")->capture_default_str();
  verify->add_option("--workers,-j", vworkers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vseed, "Seed for groups that need sampling")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*group) return cmd_group(spec, json);
    if (*reps) return cmd_reps(spec, json);
    if (*check) return cmd_check(spec, set_expr, json);
    if (*spectrum) return cmd_spectrum(spec, set_expr, json);
    if (*census) {
      if (*seed_opt) cargs.seed = seed_value;
      return cmd_census(cargs);
    }
    if (*verify) return cmd_verify(max_order, vworkers, vseed);
    return cmd_paper_examples();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
}
