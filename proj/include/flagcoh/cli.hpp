#pragma once

// The flagcoh command line: one subcommand per library operation or sweep.

#include <flagcoh/cache.hpp>
#include <flagcoh/checker.hpp>
#include <flagcoh/schubert.hpp>
#include <flagcoh/space.hpp>
#include <flagcoh/tags.hpp>
#include <flagcoh/veronese.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace flagcoh {

inline constexpr int kSchemaVersion = 1;

enum ExitCode { kExitOk = 0, kExitInternal = 1, kExitInput = 2, kExitResource = 3 };

// ---------------------------------------------------------------------------
// JSON forms

inline nlohmann::json to_json(const TraceStep& s) {
  return {{"rule", s.rule}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"comparison", s.comparison}, {"citation", s.citation},
          {"holds", s.holds}};
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& s : v.trace) trace.push_back(to_json(s));
  return {{"schema_version", kSchemaVersion}, {"result", to_string(v.result)}, {"trace", trace},
          {"warnings", v.warnings}};
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion) throw InputError("unsupported verdict schema version");
  Verdict v;
  const auto result = j.at("result").get<std::string>();
  if (result == "Diagonalizable") v.result = Result::Diagonalizable;
  else if (result == "Inconclusive") v.result = Result::Inconclusive;
  else throw InputError("unknown verdict '" + result + "'");
  for (const auto& s : j.at("trace")) {
    v.trace.push_back({s.at("rule").get<std::string>(), s.at("lhs").get<std::string>(), s.at("rhs").get<std::string>(),
                       s.at("comparison").get<std::string>(), s.at("citation").get<std::string>(),
                       s.at("holds").get<bool>()});
  }
  v.warnings = j.at("warnings").get<std::vector<std::string>>();
  return v;
}

inline bool operator==(const TraceStep& a, const TraceStep& b) {
  return a.rule == b.rule && a.lhs == b.lhs && a.rhs == b.rhs && a.comparison == b.comparison &&
         a.citation == b.citation && a.holds == b.holds;
}
inline bool operator==(const Verdict& a, const Verdict& b) {
  return a.result == b.result && a.trace == b.trace && a.warnings == b.warnings;
}

inline nlohmann::json to_json(const DivisibilityBound& b) {
  nlohmann::json j{{"lower", b.lower}, {"lower_at_least", b.lower_at_least}, {"certified", b.exact()}};
  j["upper"] = b.upper ? nlohmann::json(*b.upper) : nlohmann::json(nullptr);
  j["upper_certificate"] = b.upper_certificate;
  j["effective"] = b.effective ? nlohmann::json(*b.effective) : nlohmann::json(nullptr);
  j["effective_certificate"] = b.effective_certificate;
  return j;
}

// ---------------------------------------------------------------------------
// Helpers

/// Runs f(0..count-1) on up to `jobs` threads; results keep index order.
template <class F>
auto parallel_map(std::size_t count, int jobs, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using T = decltype(f(std::size_t{0}));
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed " + what + " '" + text + "'");
    }
    if (used != item.size()) throw InputError("malformed " + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.empty() || text.back() == ',') throw InputError("malformed " + what + " '" + text + "'");
  return out;
}

inline std::string join(const std::vector<int>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
  out << to_string(v.result) << "\n";
  for (const auto& s : v.trace) {
    out << "  [" << (s.holds ? "ok" : "fails") << "] " << s.rule << ": " << s.lhs << " " << s.comparison << " " << s.rhs
        << "  (" << s.citation << ")\n";
  }
  for (const auto& w : v.warnings) out << "  warning: " << w << "\n";
}

struct Table6Line {
  ExtremalRow row;
  int dim;
};

inline std::vector<Table6Line> table6_lines(int max_rank, int jobs) {
  std::vector<std::pair<RowFamily, int>> work;
  for (auto f : row_families())
    for (int n = row_min_rank(f); n <= max_rank; ++n) work.emplace_back(f, n);
  return parallel_map(work.size(), jobs, [&](std::size_t i) {
    auto row = extremal_row(work[i].first, work[i].second);
    return Table6Line{row, dimension(row.x)};
  });
}

inline std::string table6_text(const std::vector<Table6Line>& lines) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "family" << std::setw(8) << "X" << std::setw(6) << "dim" << std::setw(6) << "h"
      << std::setw(8) << "M_x" << std::setw(6) << "g.d." << "e.d.\n";
  for (const auto& l : lines) {
    out << std::setw(10) << row_family_name(l.row.family) << std::setw(8) << l.row.x.name() << std::setw(6) << l.dim
        << std::setw(6) << l.row.h.to_string() << std::setw(8) << l.row.lines.name() << std::setw(6) << l.row.data.gd
        << l.row.data.ed << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// run

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of flag varieties and diagonalizability criteria for uniform flag bundles", "flagcoh"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  int jobs = 1;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::Range(1, 256));

  std::string type, space_text, poly_text, x_text, fiber_text, tag_text, a_text, b_text, split_text;
  int cap = -1, m = 0, max_rank = 8, n = 0;
  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto emit = [&](const nlohmann::json& j, const std::string& text) {
    if (json) {
      nlohmann::json full = j;
      full["schema_version"] = kSchemaVersion;
      out << full.dump(2) << "\n";
    } else {
      out << text;
    }
  };

  auto* degrees = app.add_subcommand("degrees", "Fundamental degrees of a simple type");
  degrees->add_option("type", type, "Type, e.g. E6")->required();
  actions.emplace_back(degrees, [&] {
    auto d = DynkinDiagram::parse(type);
    auto deg = fundamental_degrees(d);
    emit({{"type", d.name()}, {"degrees", deg}}, join(deg) + "\n");
  });

  auto* coxeter = app.add_subcommand("coxeter", "Coxeter number of a simple type");
  coxeter->add_option("type", type, "Type, e.g. D4")->required();
  actions.emplace_back(coxeter, [&] {
    auto d = DynkinDiagram::parse(type);
    int h = coxeter_number(d);
    emit({{"type", d.name()}, {"coxeter_number", h}}, std::to_string(h) + "\n");
  });

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix of a simple type");
  cartan->add_option("type", type, "Type, e.g. B3")->required();
  actions.emplace_back(cartan, [&] {
    auto d = DynkinDiagram::parse(type);
    auto rows = cartan_matrix(d).rows();
    std::string text;
    for (const auto& r : rows) text += join(r) + "\n";
    emit({{"type", d.name()}, {"cartan", rows}}, text);
  });

  auto* betti = app.add_subcommand("betti", "Betti numbers of a cohomology ring");
  betti->add_option("space", space_text, "Space, e.g. A3(2), Q6 or B3 for complete flags")->required();
  betti->add_option("--cap", cap, "Degree cap (default: whole ring)");
  actions.emplace_back(betti, [&] {
    auto s = parse_space(space_text);
    auto p = space_presentation(s);
    int c = cap >= 0 ? cap : space_cap(s, p);
    auto q = cached_quotient(p, c, cache_directory());
    const auto& ring = q.ring;
    std::ostringstream text;
    text << "cap: " << c << ", cache: " << to_string(q.status) << "\n";
    text << "betti: " << join(ring.betti()) << "\n";
    text << "total: " << ring.total_dimension() << (ring.complete() ? "" : " (incomplete: raise --cap)") << "\n";
    if (ring.complete()) text << "palindromic: " << (ring.palindromic() ? "yes" : "no") << "\n";
    emit({{"space", s.name()},
          {"cap", c},
          {"cache", to_string(q.status)},
          {"betti", ring.betti()},
          {"total_dimension", ring.total_dimension()},
          {"complete", ring.complete()},
          {"palindromic", ring.palindromic()}},
         text.str());
  });

  auto* nf = app.add_subcommand("normal-form", "Normal form of a polynomial in a cohomology ring");
  nf->add_option("space", space_text, "Space")->required();
  nf->add_option("poly", poly_text, "Polynomial in the ring's generators, e.g. q1^3 - 2*q1*q2")->required();
  nf->add_option("--cap", cap, "Degree cap (default: whole ring)");
  actions.emplace_back(nf, [&] {
    auto s = parse_space(space_text);
    auto p = space_presentation(s);
    int c = cap >= 0 ? cap : space_cap(s, p);
    auto q = cached_quotient(p, c, cache_directory());
    auto poly = Polynomial::parse(q.ring.table(), poly_text);
    auto result = q.ring.normal_form(poly);
    emit({{"space", s.name()}, {"cap", c}, {"cache", to_string(q.status)}, {"input", poly.to_string()},
          {"normal_form", result.to_string()}, {"zero", result.is_zero()}},
         "cap: " + std::to_string(c) + ", cache: " + to_string(q.status) + "\n" + result.to_string() + "\n");
  });

  auto divisibility_action = [&](bool effective_only) {
    auto s = parse_space(space_text);
    if (s.full_flag()) throw InputError("divisibility is reported for Picard-one spaces, not " + s.name());
    auto b = divisibility(*s.marked);
    auto j = to_json(b);
    j["space"] = s.name();
    std::string text;
    if (effective_only) {
      if (!b.effective) throw InputError("e.d. of " + s.name() + " is not available");
      text = "e.d. = " + std::to_string(*b.effective) + " (" + b.effective_certificate + ")\n";
    } else {
      text = b.describe() + "\n";
      if (!b.upper_certificate.empty()) text += "upper certificate: " + b.upper_certificate + "\n";
    }
    emit(j, "cap: whole ring, cache: not used\n" + text);
  };
  auto* gd = app.add_subcommand("gd", "Certified good divisibility");
  gd->add_option("space", space_text, "Picard-one space")->required();
  actions.emplace_back(gd, [&] { divisibility_action(false); });
  auto* ed = app.add_subcommand("ed", "Effective good divisibility");
  ed->add_option("space", space_text, "Picard-one space")->required();
  actions.emplace_back(ed, [&] { divisibility_action(true); });

  auto* smult = app.add_subcommand("schubert-mult", "Product of two Schubert classes on G(1,m)");
  smult->add_option("m", m, "Ambient projective dimension")->required();
  smult->add_option("a", a_text, "First class a1,a2")->required();
  smult->add_option("b", b_text, "Second class b1,b2")->required();
  actions.emplace_back(smult, [&] {
    auto a = parse_int_list(a_text, "Schubert class");
    auto b = parse_int_list(b_text, "Schubert class");
    if (a.size() != 2 || b.size() != 2) throw InputError("Schubert classes are given as a1,a2");
    auto prod = product(SchubertClass(m, a[0], a[1]), SchubertClass(m, b[0], b[1]));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : prod.terms()) terms.push_back({{"class", {k.first, k.second}}, {"coefficient", c.get_str()}});
    emit({{"m", m}, {"product", terms}, {"text", prod.to_string()}}, prod.to_string() + "\n");
  });

  auto* check_h = app.add_subcommand("check-h", "Coxeter-number criterion for a classical fiber");
  check_h->add_option("X", x_text, "Picard-one space")->required();
  check_h->add_option("fiber", fiber_text, "Fiber type, e.g. A2")->required();
  check_h->add_option("--tag", tag_text, "Tag values d1,...,dn on the fiber diagram");
  actions.emplace_back(check_h, [&] {
    auto s = parse_space(x_text);
    if (s.full_flag()) throw InputError("X must be of Picard number one");
    auto fiber = DynkinDiagram::parse(fiber_text);
    CheckOptions options;
    if (!tag_text.empty()) options.tag = parse_tag(fiber, tag_text);
    auto v = check_splitting_h(*s.marked, fiber, options);
    std::ostringstream text;
    print_verdict(text, v);
    emit(to_json(v), text.str());
  });

  auto* check_r = app.add_subcommand("check-r", "Rank criterion for a type A fiber");
  check_r->add_option("X", x_text, "Picard-one space")->required();
  check_r->add_option("fiber", fiber_text, "Fiber type A_n")->required();
  actions.emplace_back(check_r, [&] {
    auto s = parse_space(x_text);
    if (s.full_flag()) throw InputError("X must be of Picard number one");
    auto v = check_splitting_r(*s.marked, DynkinDiagram::parse(fiber_text));
    std::ostringstream text;
    print_verdict(text, v);
    emit(to_json(v), text.str());
  });

  auto* table6 = app.add_subcommand("table6", "Extremal-node table: h(X), lines through a point, g.d., e.d.");
  table6->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(3, 12));
  actions.emplace_back(table6, [&] {
    auto lines = table6_lines(max_rank, jobs);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& l : lines) {
      rows.push_back({{"family", row_family_name(l.row.family)}, {"n", l.row.n}, {"X", l.row.x.name()},
                      {"dim", l.dim}, {"h", l.row.h.to_string()}, {"M_x", l.row.lines.name()},
                      {"gd", l.row.data.gd}, {"ed", l.row.data.ed}});
    }
    emit({{"rows", rows}}, table6_text(lines));
  });

  auto* table8 = app.add_subcommand("table8", "Exceptional extremal spaces: r(X) and lines through a point");
  actions.emplace_back(table8, [&] {
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    text << std::left << std::setw(8) << "X" << std::setw(4) << "r" << std::setw(8) << "M_x" << std::setw(10)
         << "dim M_x" << "A_{r-1} verdict\n";
    for (const auto& row : exceptional_rows()) {
      auto computed = isotropic_lines_fiber(row.x);
      auto v = check_splitting_r(row.x, DynkinDiagram(Family::A, row.r - 1));
      rows.push_back({{"X", row.x.name()}, {"r", r_of_X(row.x).value()}, {"M_x", computed.front().name()},
                      {"dim_M_x", dimension(computed.front())}, {"verdict", to_string(v.result)}});
      text << std::setw(8) << row.x.name() << std::setw(4) << r_of_X(row.x).value() << std::setw(8)
           << computed.front().name() << std::setw(10) << dimension(computed.front()) << to_string(v.result) << "\n";
    }
    emit({{"rows", rows}}, text.str());
  });

  auto* table9 = app.add_subcommand("table9-sweep", "Compare the h and r hypotheses over concrete ranks");
  table9->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(2, 64));
  actions.emplace_back(table9, [&] {
    std::vector<std::pair<FiberFamily, XFamily>> work;
    for (auto ff : fiber_families())
      for (auto xf : x_families()) work.emplace_back(ff, xf);
    auto cells = parallel_map(work.size(), jobs, [&](std::size_t i) { return sweep_cell(work[i].first, work[i].second, max_rank); });
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    text << std::left << std::setw(8) << "fiber" << std::setw(8) << "X" << std::setw(11) << "instances" << std::setw(11)
         << "observed" << std::setw(11) << "printed" << "consistent\n";
    for (const auto& c : cells) {
      auto printed = printed_comparison(c.fiber, c.x);
      bool consistent = printed == c.observed();
      rows.push_back({{"fiber", fiber_family_name(c.fiber)}, {"X", x_family_name(c.x)}, {"instances", c.instances},
                      {"h_holds", c.h_holds}, {"r_holds", c.r_holds}, {"observed", to_string(c.observed())},
                      {"printed", to_string(printed)}, {"consistent", consistent}});
      text << std::setw(8) << fiber_family_name(c.fiber) << std::setw(8) << x_family_name(c.x) << std::setw(11)
           << c.instances << std::setw(11) << to_string(c.observed()) << std::setw(11) << to_string(printed)
           << (consistent ? "yes" : "NO") << "\n";
    }
    emit({{"max_rank", max_rank}, {"cells", rows}}, text.str());
  });

  auto* veronese = app.add_subcommand("veronese", "Quadric through v_2(P^n) with vertex disjoint from it");
  veronese->add_option("n", n, "Dimension of P^n")->required();
  actions.emplace_back(veronese, [&] {
    auto q = build_quadric(n);
    int codim = vertex_codimension(q);
    bool disjoint = verify_disjoint(q);
    bool listed = listed_equations_match(q);
    int target = codim - 2;
    std::ostringstream text;
    text << "F = " << q.form.to_string() << "\n"
         << "vertex codimension: " << codim << "\n"
         << "vertex disjoint from v_2(P^" << n << "): " << (disjoint ? "yes" : "no") << "\n"
         << "listed vertex equations span the vertex: " << (listed ? "yes" : "no") << "\n"
         << "target: Q^" << target << "\n";
    emit({{"n", n}, {"form", q.form.to_string()}, {"vertex_codimension", codim}, {"disjoint", disjoint},
          {"listed_equations_match", listed}, {"target_dimension", target}},
         text.str());
  });

  auto* tag_split = app.add_subcommand("tag-split", "Tag of a splitting type on P^1");
  tag_split->add_option("splitting", split_text, "Non-increasing integers a1,...,a_{n+1}")->required();
  actions.emplace_back(tag_split, [&] {
    auto t = tag_from_splitting_type(parse_int_list(split_text, "splitting type"));
    auto zeros = zero_set(t);
    emit({{"diagram", t.diagram.name()}, {"tag", t.values}, {"zero_set", zeros.elements()}},
         t.diagram.name() + " tag " + t.to_string() + ", I0 = " + zeros.to_string() + "\n");
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  try {
    for (auto& [sub, action] : actions) {
      if (sub->parsed()) action();
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    for (auto& [sub, action] : actions)
      if (sub->parsed()) err << sub->help();
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace flagcoh
