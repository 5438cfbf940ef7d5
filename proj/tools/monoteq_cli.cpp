// Command-line front end: parses the text formats, dispatches to the
// library, and prints deterministic reports. Exit codes: 0 when the
// queried property holds / the construction succeeds, 1 when it fails /
// is infeasible, 2 on malformed input or usage.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monoteq/classify.hpp"
#include "monoteq/enumerate.hpp"
#include "monoteq/error.hpp"
#include "monoteq/fixtures.hpp"
#include "monoteq/glued.hpp"
#include "monoteq/io.hpp"
#include "monoteq/markov.hpp"
#include "monoteq/measures.hpp"
#include "monoteq/realize.hpp"
#include "monoteq/rit.hpp"

namespace {

using namespace monoteq;

/// Key/value report with deterministic field order; renders either as
/// plain `key: value` lines or as a flat json-like object.
class Report {
 public:
  void add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
  }
  // Without this overload a literal argument would convert to bool.
  void add(const std::string& key, const char* value) {
    add(key, std::string(value));
  }
  void add(const std::string& key, const Rat& value) { add(key, rat_str(value)); }
  void add(const std::string& key, bool value) { add(key, value ? "true" : "false"); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }

  /// A multi-line block; rendered indented in text, as one escaped
  /// string in json-like.
  void add_block(const std::string& key, const std::string& body) {
    blocks_.emplace_back(fields_.size(), std::make_pair(key, body));
  }

  void print(const std::string& format) const {
    if (format == "json-like") {
      std::cout << "{\n";
      size_t bi = 0;
      bool first = true;
      for (size_t i = 0; i <= fields_.size(); ++i) {
        for (; bi < blocks_.size() && blocks_[bi].first == i; ++bi)
          emit_json(first, blocks_[bi].second.first, blocks_[bi].second.second);
        if (i < fields_.size()) emit_json(first, fields_[i].first, fields_[i].second);
      }
      std::cout << "\n}\n";
    } else {
      size_t bi = 0;
      for (size_t i = 0; i <= fields_.size(); ++i) {
        for (; bi < blocks_.size() && blocks_[bi].first == i; ++bi) {
          std::cout << blocks_[bi].second.first << ":\n";
          std::istringstream in(blocks_[bi].second.second);
          std::string line;
          while (std::getline(in, line)) std::cout << "  " << line << '\n';
        }
        if (i < fields_.size())
          std::cout << fields_[i].first << ": " << fields_[i].second << '\n';
      }
    }
  }

 private:
  static void emit_json(bool& first, const std::string& k, const std::string& v) {
    if (!first) std::cout << ",\n";
    first = false;
    std::cout << "  \"" << k << "\": \"";
    for (char c : v) {
      if (c == '\n')
        std::cout << "\\n";
      else if (c == '"' || c == '\\')
        std::cout << '\\' << c;
      else
        std::cout << c;
    }
    std::cout << '"';
  }

  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::pair<size_t, std::pair<std::string, std::string>>> blocks_;
};

struct Options {
  std::string format = "text";
  unsigned long bound = 4000000;
  std::uint64_t seed = 1;
  int max_elements = 5;
};

std::string mask_names(const Poset& p, Mask m) {
  std::string out;
  for (int i = 0; i < p.size(); ++i)
    if ((m >> i) & 1) {
      if (!out.empty()) out += ' ';
      out += p.name(i);
    }
  return out;
}

std::string format_map_distribution(const MapDistribution& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.maps.size(); ++i) {
    out << rat_str(d.weight[i]) << " *";
    for (int a = 0; a < d.index.size(); ++a)
      out << ' ' << d.index.name(a) << "->"
          << d.support.name(d.maps[i].assignment[a]);
    out << '\n';
  }
  return out.str();
}

std::string format_transform(const InverseTransform& x) {
  std::ostringstream out;
  for (const Interval& part : x.parts)
    out << '[' << rat_str(part.lo) << ", " << rat_str(part.hi) << ") -> "
        << x.support.name(part.value) << '\n';
  return out.str();
}

std::string format_coupling(const PairCoupling& c) {
  std::ostringstream out;
  for (int x = 0; x < c.support.size(); ++x)
    for (int y = 0; y < c.support.size(); ++y)
      if (c.weight[x][y] != 0)
        out << '(' << c.support.name(x) << ", " << c.support.name(y)
            << ") = " << rat_str(c.weight[x][y]) << '\n';
  return out.str();
}

int cmd_classify(const Options& opt, const std::string& path) {
  Poset p = parse_poset(read_file(path));
  Verdict v = verdict(p);
  Report r;
  r.add("kind", verdict_kind_name(v.kind));
  if (v.bipartite) {
    r.add("bipartite_lower", mask_names(p, v.bipartite->lower));
    r.add("bipartite_upper", mask_names(p, v.bipartite->upper));
  }
  if (v.diamond) {
    r.add("diamond", std::string(p.name(v.diamond->a)) + " " + p.name(v.diamond->b) +
                         " " + p.name(v.diamond->c) + " " + p.name(v.diamond->d));
  }
  if (v.kind == Verdict::Kind::Fails) r.add("reason", v.reason);
  r.print(opt.format);
  return v.kind == Verdict::Kind::Fails ? 1 : 0;
}

int cmd_check_sm(const Options& opt, const std::string& path) {
  Generator l = parse_generator(read_file(path));
  bool ok = massey_check(l);
  Report r;
  r.add("stochastically_monotone", ok);
  r.add("lambda_star", l.lambda_star());
  r.print(opt.format);
  return ok ? 0 : 1;
}

int cmd_check_rm(const Options& opt, const std::string& path) {
  Generator l = parse_generator(read_file(path));
  auto d = decompose_generator(l, opt.bound);
  Report r;
  r.add("realizably_monotone", d.has_value());
  if (d) r.add("total_rate", d->total_rate());
  r.print(opt.format);
  return d ? 0 : 1;
}

int cmd_decompose(const Options& opt, const std::string& path) {
  Generator l = parse_generator(read_file(path));
  auto d = decompose_generator(l, opt.bound);
  Report r;
  r.add("feasible", d.has_value());
  if (d) {
    r.add("total_rate", d->total_rate());
    std::ostringstream body;
    const Poset& p = l.states();
    for (size_t i = 0; i < d->maps.size(); ++i) {
      if (d->gamma[i] == 0) continue;
      body << rat_str(d->gamma[i]) << " *";
      for (int x = 0; x < p.size(); ++x)
        body << ' ' << p.name(x) << "->" << p.name(d->maps[i].assignment[x]);
      body << '\n';
    }
    r.add_block("weights", body.str());
  }
  r.print(opt.format);
  return d ? 0 : 1;
}

int cmd_simulate(const Options& opt, const std::string& path, const std::string& x0,
                 double horizon) {
  Generator l = parse_generator(read_file(path));
  std::vector<PathEvent> events = simulate_path(l, x0, horizon, opt.seed);
  Report r;
  r.add("events", static_cast<int>(events.size()));
  std::ostringstream body;
  for (const PathEvent& e : events) {
    std::ostringstream t;
    t.precision(17);
    t << e.time;
    body << t.str() << ' ' << e.state << '\n';
  }
  r.add_block("path", body.str());
  r.print(opt.format);
  return 0;
}

int cmd_realize(const Options& opt, const std::string& poset_path,
                const std::string& system_path) {
  Poset p = parse_poset(read_file(poset_path));
  MeasureSystem s = parse_system(read_file(system_path), p);
  Verdict v = verdict(p);
  Report r;
  r.add("kind", verdict_kind_name(v.kind));
  switch (v.kind) {
    case Verdict::Kind::Acyclic: {
      MapDistribution d = realize_acyclic(s);
      r.add("theta", Rat(1));
      r.add_block("law", format_map_distribution(d));
      break;
    }
    case Verdict::Kind::YGluedBipartite: {
      YGluedRealization y = y_glued_realize(s);
      r.add("theta", y.theta);
      r.add_block("law", format_map_distribution(y.law));
      break;
    }
    case Verdict::Kind::WGluedDiamond: {
      WGluedRealization w = w_glued_realize(s);
      r.add("theta", w.theta_weak);
      r.add("theta_star", w.theta_star);
      for (int a = 0; a < w.diamond_index.size(); ++a)
        r.add_block("transform " + w.diamond_index.name(a),
                    format_transform(w.diamond_transforms[a]));
      r.add_block("law", format_map_distribution(w.law));
      break;
    }
    case Verdict::Kind::Fails:
      r.add("reason", v.reason);
      r.print(opt.format);
      return 1;
  }
  r.print(opt.format);
  return 0;
}

int cmd_realize_w(const Options& opt, const std::string& poset_path,
                  const std::string& system_path) {
  Poset p = parse_poset(read_file(poset_path));
  MeasureSystem s = parse_system(read_file(system_path), p);
  WClassRealization w = w_class_realize(s);
  Report r;
  r.add("index_elements", static_cast<int>(w.transforms.size()));
  for (int a = 0; a < s.index.size(); ++a)
    r.add_block("transform " + s.index.name(a), format_transform(w.transforms[a]));
  r.print(opt.format);
  return 0;
}

int cmd_couple(const Options& opt, const std::string& poset_path,
               const std::string& p1_path, const std::string& p2_path) {
  Poset p = parse_poset(read_file(poset_path));
  auto single = [&](const std::string& path) {
    auto rows = parse_measures(read_file(path), p);
    if (rows.size() != 1)
      fail(Errc::ParseError, "expected exactly one measure in " + path);
    return rows[0].second;
  };
  RationalMeasure p1 = single(p1_path), p2 = single(p2_path);
  Report r;
  bool ordered = stoch_leq(p1, p2);
  r.add("ordered", ordered);
  if (!ordered) {
    Mask w = stoch_leq_witness(p1, p2);
    r.add("witness_up_set", mask_names(p, w));
    r.print(opt.format);
    return 1;
  }
  if (is_w_glued_diamond(p)) {
    auto [x1, x2] = strassen_w_glued(p1, p2);
    r.add("method", std::string("glued-diamond transforms"));
    r.add_block("transform lower", format_transform(x1));
    r.add_block("transform upper", format_transform(x2));
  } else {
    auto c = strassen_lp(p1, p2);
    if (!c) fail(Errc::MarginalMismatch, "ordered pair without a coupling");
    r.add("method", std::string("linear program"));
    r.add_block("coupling", format_coupling(*c));
  }
  r.print(opt.format);
  return 0;
}

int cmd_fixtures(const Options& opt, const std::string& action) {
  std::vector<Fixture> fs = all_fixtures();
  Report r;
  if (action == "list") {
    for (const Fixture& f : fs) {
      std::ostringstream body;
      body << format_poset(f.system.support) << format_system(f.system);
      r.add_block(f.tag, body.str());
    }
    r.print(opt.format);
    return 0;
  }
  if (action != "check") fail(Errc::ParseError, "fixtures action must be list or check");
  bool all_ok = true;
  for (const Fixture& f : fs) {
    bool sm = system_is_stoch_monotone(f.system);
    bool blocked = max_theta(f.system, opt.bound) == 0;
    bool ok = sm && blocked;
    all_ok = all_ok && ok;
    r.add(f.tag, std::string(ok ? "pass" : "FAIL") + " (monotone=" +
                     (sm ? "true" : "false") + ", max_theta_zero=" +
                     (blocked ? "true" : "false") + ")");
  }
  r.print(opt.format);
  return all_ok ? 0 : 1;
}

int cmd_sweep(const Options& opt) {
  if (opt.max_elements < 1 || opt.max_elements > 6)
    fail(Errc::ParseError, "--max-elements must be between 1 and 6");
  Report r;
  for (int n = 1; n <= opt.max_elements; ++n) {
    std::vector<Poset> ps = connected_posets(n);
    std::ostringstream body;
    for (const Poset& p : ps) {
      std::string covers;
      for (auto [x, y] : p.cover_pairs())
        covers += " " + p.name(x) + "<" + p.name(y);
      if (covers.empty()) covers = " (antichain)";
      body << verdict_kind_name(verdict(p).kind) << " :" << covers << '\n';
    }
    r.add_block("n=" + std::to_string(n) + " (" + std::to_string(ps.size()) +
                    " posets)",
                body.str());
  }
  r.print(opt.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotonicity analysis for Markov processes on finite posets"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json-like"}));
  app.add_option("--bound", opt.bound, "Monotone-map enumeration cap");
  app.add_option("--seed", opt.seed, "Random seed (simulate)");
  app.add_option("--max-elements", opt.max_elements, "Sweep size bound (<= 6)");

  std::string path1, path2, path3, fixtures_action, x0;
  double horizon = 1.0;

  CLI::App* c_classify = app.add_subcommand("classify", "Classify a poset");
  c_classify->add_option("poset", path1)->required();
  CLI::App* c_sm = app.add_subcommand("check-sm", "Rate criterion for monotonicity");
  c_sm->add_option("generator", path1)->required();
  CLI::App* c_rm = app.add_subcommand("check-rm", "Realizable monotonicity of a generator");
  c_rm->add_option("generator", path1)->required();
  CLI::App* c_dec = app.add_subcommand("decompose", "Monotone-map decomposition of a generator");
  c_dec->add_option("generator", path1)->required();
  CLI::App* c_sim = app.add_subcommand("simulate", "Sample one trajectory (demonstration)");
  c_sim->add_option("generator", path1)->required();
  c_sim->add_option("--start", x0, "Initial state (defaults to the first)");
  c_sim->add_option("--horizon", horizon, "Time horizon");
  CLI::App* c_re = app.add_subcommand("realize", "Realize a monotone system (by verdict)");
  c_re->add_option("poset", path1)->required();
  c_re->add_option("system", path2)->required();
  CLI::App* c_rw = app.add_subcommand("realize-w", "Inverse-transform realization on a tree");
  c_rw->add_option("poset", path1)->required();
  c_rw->add_option("system", path2)->required();
  CLI::App* c_cp = app.add_subcommand("couple", "Ordered coupling of two measures");
  c_cp->add_option("poset", path1)->required();
  c_cp->add_option("first", path2)->required();
  c_cp->add_option("second", path3)->required();
  CLI::App* c_fx = app.add_subcommand("fixtures", "Counterexample library");
  c_fx->add_option("action", fixtures_action)->required()
      ->check(CLI::IsMember({"list", "check"}));
  CLI::App* c_sw = app.add_subcommand("sweep", "Verdicts over all small connected posets");

  // Let the global flags appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_classify->parsed()) return cmd_classify(opt, path1);
    if (c_sm->parsed()) return cmd_check_sm(opt, path1);
    if (c_rm->parsed()) return cmd_check_rm(opt, path1);
    if (c_dec->parsed()) return cmd_decompose(opt, path1);
    if (c_sim->parsed()) {
      if (x0.empty()) {
        monoteq::Generator l = monoteq::parse_generator(monoteq::read_file(path1));
        x0 = l.states().name(0);
      }
      return cmd_simulate(opt, path1, x0, horizon);
    }
    if (c_re->parsed()) return cmd_realize(opt, path1, path2);
    if (c_rw->parsed()) return cmd_realize_w(opt, path1, path2);
    if (c_cp->parsed()) return cmd_couple(opt, path1, path2, path3);
    if (c_fx->parsed()) return cmd_fixtures(opt, fixtures_action);
    if (c_sw->parsed()) return cmd_sweep(opt);
  } catch (const monoteq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case monoteq::Errc::ParseError:
      case monoteq::Errc::UnknownElement:
      case monoteq::Errc::SizeLimit:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}
