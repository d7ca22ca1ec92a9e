#include "wsq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wsq/errors.hpp"
#include "wsq/io.hpp"
#include "wsq/oracle.hpp"
#include "wsq/reduction3.hpp"
#include "wsq/suite.hpp"

namespace wsq::cli {

namespace {

using io::json;

// ---------------------------------------------------------------------------
// Output

bool is_int_array(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) {
           return x.is_number_integer();
         });
}

std::string inline_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (is_int_array(j)) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : ",") + x.dump();
    return "{" + s + "}";
  }
  if (j.is_array()) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : " ") + inline_text(x);
    return "[" + s + "]";
  }
  if (j.is_object()) {
    std::string s;
    for (const auto& [k, v] : j.items()) s += (s.empty() ? "" : " ") + k + "=" + inline_text(v);
    return s;
  }
  return j.dump();
}

class Printer {
 public:
  Printer(std::ostream& out, bool text) : out_(out), text_(text) {}

  /// A complete JSON document (json) or "key: value" lines (text).
  void document(const json& j) const {
    if (!text_) {
      out_ << j.dump() << '\n';
      return;
    }
    if (!j.is_object()) {
      out_ << inline_text(j) << '\n';
      return;
    }
    for (const auto& [k, v] : j.items()) {
      if (v.is_array() && !is_int_array(v) && !v.empty() && v.front().is_object()) {
        out_ << k << ":\n";
        for (const auto& x : v) out_ << "  " << inline_text(x) << '\n';
      } else {
        out_ << k << ": " << inline_text(v) << '\n';
      }
    }
  }

  /// One record of a JSON-lines stream.
  void record(const json& j) const { out_ << (text_ ? inline_text(j) : j.dump()) << '\n'; }

 private:
  std::ostream& out_;
  bool text_;
};

// ---------------------------------------------------------------------------
// Input

json read_json_arg(const std::string& path, std::istream& in, const std::string& what) {
  if (path == "-") return io::parse_json(in, what);
  std::ifstream f(path);
  require(f.good(), "cannot open " + what + " file '" + path + "'");
  return io::parse_json(f, what);
}

WSCollection read_collection(const std::string& path, std::istream& in) {
  return io::collection_from_json(read_json_arg(path, in, "collection"));
}

void require_maximal(const WSCollection& c) {
  const auto rep = validate(c);
  require(rep.ok(), "collection is not weakly separated: " + rep.to_string());
  require(is_maximal(c), "collection is not maximal");
}

int max_index(const std::string& text) {
  int best = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      best = std::max(best, std::stoi(tok));
    } catch (const std::logic_error&) {
      throw PreconditionError("bad index list '" + text + "'");
    }
  }
  return best;
}

std::vector<Rational> parse_nodes(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    try {
      Rational x(tok);
      require(sgn(x.get_den()) != 0, "zero denominator in node '" + tok + "'");
      x.canonicalize();
      out.push_back(x);
    } catch (const std::invalid_argument&) {
      throw PreconditionError("bad node '" + tok + "'");
    }
  }
  return out;
}

json histogram(const std::vector<WSCollection>& cs) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : cs) ++h[c.size()];
  json out = json::object();
  for (const auto& [size, count] : h) out[std::to_string(size)] = count;
  return out;
}

// ---------------------------------------------------------------------------
// Commands. Each returns an exit code and prints through the Printer.

struct Options {
  // shared
  std::string i, j, a, b, c, d;
  int k = 0, m = 0, n = 0;
  int jobs = 1;
  bool count_only = false;
  std::string collection, values, nodes, seed, word, words, suite = "small";
  int pinch = 0;
  bool oracle = false;
  bool floating = false;
  bool f_only = false;
  bool parametrizable = false;
  bool closure = false;
};

int cmd_ws_check(const Options& o, const Printer& p) {
  const int n = o.n > 0 ? o.n : std::max({1, max_index(o.i), max_index(o.j)});
  const bool ws = weakly_separated(KSubset::parse(n, o.i), KSubset::parse(n, o.j));
  p.document(json{{"weakly_separated", ws}});
  return ws ? kOk : kNegative;
}

int cmd_exponent(const Options& o, const Printer& p) {
  const bool plucker = !o.i.empty() || !o.j.empty();
  const bool minor = !o.a.empty() || !o.b.empty() || !o.c.empty() || !o.d.empty();
  require(plucker != minor, "give either --i/--j (Pluecker) or --a/--b/--c/--d (minors)");
  std::optional<int> c;
  std::optional<int> seen;
  if (plucker) {
    require(!o.i.empty() && !o.j.empty(), "both --i and --j are required");
    const int n = o.n > 0 ? o.n : std::max(max_index(o.i), max_index(o.j));
    const KSubset i = KSubset::parse(n, o.i);
    const KSubset j = KSubset::parse(n, o.j);
    require(i.size() == j.size() && i.size() >= 1, "--i and --j must have equal positive size");
    c = plucker_exponent(i, j);
    if (o.oracle)
      seen = quasi_commutation_exponent(plucker_realize(i, i.size()), plucker_realize(j, j.size()));
  } else {
    require(!o.a.empty() && !o.b.empty() && !o.c.empty() && !o.d.empty(),
            "--a, --b, --c and --d are all required");
    require(o.k >= 1 && o.m >= 1, "--k and --m must be positive");
    const auto first = MinorIndex::make(KSubset::parse(o.k, o.a), KSubset::parse(o.m, o.b));
    const auto second = MinorIndex::make(KSubset::parse(o.k, o.c), KSubset::parse(o.m, o.d));
    c = minor_exponent(first, second);
    if (o.oracle) seen = quasi_commutation_exponent(quantum_minor(first), quantum_minor(second));
  }
  json out{{"c", c ? json(*c) : json(nullptr)}};
  if (o.oracle) {
    out["oracle"] = seen ? json(*seen) : json(nullptr);
    ensure(seen == c, "oracle disagrees with the exponent formula");
  }
  p.document(out);
  return c ? kOk : kNegative;
}

int cmd_stieffel(const Options& o, const Printer& p) {
  require(o.k >= 1 && o.m >= 1, "--k and --m must be positive");
  const auto mi = MinorIndex::make(KSubset::parse(o.k, o.a), KSubset::parse(o.m, o.b));
  p.document(json{{"S", io::to_json(stieffel_subset(mi))}});
  return kOk;
}

WSCollection seed_collection(const Options& o, std::istream& in) {
  if (!o.seed.empty()) {
    auto c = read_collection(o.seed, in);
    require_maximal(c);
    return c;
  }
  require(o.k >= 1 && o.n > o.k, "need 1 <= k < n");
  return base_collection(o.k, o.n);
}

int cmd_enumerate(const Options& o, const Printer& p, std::istream& in) {
  const auto nodes = enumerate_component(seed_collection(o, in), o.jobs);
  if (o.count_only) {
    p.document(json{{"count", nodes.size()}});
    return kOk;
  }
  for (const auto& c : nodes) p.record(io::to_json(c));
  p.record(json{{"count", nodes.size()},
                {"orbit_count", dihedral_orbits(nodes).size()},
                {"sizes_histogram", histogram(nodes)}});
  return kOk;
}

int cmd_orbits(const Options& o, const Printer& p, std::istream& in) {
  const auto nodes = enumerate_component(seed_collection(o, in), o.jobs);
  const auto orbits = dihedral_orbits(nodes);
  for (const auto& orbit : orbits)
    p.record(json{{"size", orbit.size()}, {"representative", io::to_json(orbit.front())}});
  p.record(json{{"count", nodes.size()}, {"orbit_count", orbits.size()}});
  return kOk;
}

int cmd_reduce_base(const Options& o, const Printer& p, std::istream& in) {
  const auto c = read_collection(o.collection, in);
  require_maximal(c);
  const auto red = reduce_to_base(c);
  const auto end = replay_moves(c, red.moves, true);
  ensure(end == base_collection(c.k(), c.n()), "move sequence does not end at the base collection");
  json moves = json::array();
  for (const auto& mv : red.moves) moves.push_back(io::to_json(mv));
  p.document(json{{"witness", red.witness.to_string()},
                  {"height", c.k() == 3 ? json(height(c)) : json(nullptr)},
                  {"length", red.moves.size()},
                  {"moves", std::move(moves)},
                  {"final", io::to_json(end)}});
  return kOk;
}

json describe_word(const ReducedWord& w) {
  json out{{"word", w.to_string()}, {"valid", validate_word(w)}, {"optimal", is_optimal(w)}};
  if (!out["valid"].get<bool>() || w.k > w.m) return out;
  json chs = json::array();
  for (const auto& ch : chambers(w)) chs.push_back(io::to_json(ch));
  out["chambers"] = std::move(chs);
  if (out["optimal"].get<bool>()) out["collection"] = io::to_json(word_collection(w));
  return out;
}

int cmd_wiring(const Options& o, const Printer& p, std::istream& in) {
  if (o.parametrizable) {
    const auto c = read_collection(o.collection, in);
    require_maximal(c);
    const bool yes = is_wiring_parametrizable(c);
    p.document(json{{"wiring_parametrizable", yes}});
    return yes ? kOk : kNegative;
  }
  require(o.k >= 1 && o.m >= 1, "--k and --m must be positive");
  if (o.closure) {
    const auto cs = wiring_collections_up_to_dihedral(o.k, o.m);
    for (const auto& c : cs) p.record(io::to_json(c));
    p.record(json{{"count", cs.size()}});
    return kOk;
  }
  if (!o.words.empty()) {
    std::ifstream file;
    std::istream* src = &in;
    if (o.words != "-") {
      file.open(o.words);
      require(file.good(), "cannot open word file '" + o.words + "'");
      src = &file;
    }
    bool all_valid = true;
    std::string line;
    while (std::getline(*src, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto desc = describe_word(ReducedWord::parse(o.k, o.m, line));
      all_valid = all_valid && desc["valid"].get<bool>();
      p.record(desc);
    }
    return all_valid ? kOk : kNegative;
  }
  require(!o.word.empty(), "give --word, --words, --closure or --parametrizable");
  const auto desc = describe_word(ReducedWord::parse(o.k, o.m, o.word));
  p.document(desc);
  return desc["valid"].get<bool>() ? kOk : kNegative;
}

int cmd_reduce(const Options& o, const Printer& p, std::istream& in) {
  const auto c = read_collection(o.collection, in);
  require(c.k() == 3, "reduce works on collections of 3-subsets");
  require_maximal(c);
  p.document(json{{"projection", io::to_json(project(c))}, {"pinch_point", pinch_point(c)}});
  return kOk;
}

int cmd_lift(const Options& o, const Printer& p, std::istream& in) {
  const auto c = read_collection(o.collection, in);
  require(c.k() == 3, "lift works on collections of 3-subsets");
  require_maximal(c);
  if (o.f_only) {
    const auto f = f_set(c);
    p.document(json{{"f_set", std::vector<int>(f.begin(), f.end())}});
    return kOk;
  }
  require(o.pinch > 0, "--b is required (or --f-set)");
  p.document(io::to_json(lift(c, o.pinch)));
  return kOk;
}

int cmd_gen_w3(const Options& o, const Printer& p) {
  require(o.n >= 3, "--n must be at least 3");
  const auto cs = generate_w3(o.n);
  if (!o.count_only)
    for (const auto& c : cs) p.record(io::to_json(c));
  p.record(json{{"count", cs.size()}});
  return kOk;
}

int cmd_positivity(const Options& o, const Printer& p, std::istream& in) {
  const auto c = read_collection(o.collection, in);
  require(o.values.empty() != o.nodes.empty(), "give exactly one of --values and --nodes");
  PluckerVector<Rational> vals;
  if (!o.values.empty()) {
    vals = io::values_from_json(read_json_arg(o.values, in, "values"), c.k(), c.n());
  } else {
    const auto nodes = parse_nodes(o.nodes);
    require(static_cast<int>(nodes.size()) == c.n(), "need exactly n nodes");
    const auto point = vandermonde_point(nodes, c.k());
    for (const auto& s : c.sets()) vals.emplace(s, plucker_coordinate(point, s));
  }
  if (o.floating) {
    PluckerVector<double> fv;
    for (const auto& [s, x] : vals) fv.emplace(s, x.get_d());
    const auto prop = propagate(c, fv);
    const bool positive = prop.ok() && std::all_of(prop.values.begin(), prop.values.end(),
                                                   [](const auto& e) { return e.second > 0; });
    json out{{"verdict", positive ? "POSITIVE" : "NOT-DETERMINED"},
             {"rederivations", prop.rederivations},
             {"values", io::to_json(prop.values)}};
    if (prop.failure) out["witness"] = *prop.failure;
    p.document(out);
    return positive ? kOk : kNegative;
  }
  const auto res = positivity_test(c, vals);
  const bool positive = res.verdict == Verdict::Positive;
  json out{{"verdict", positive ? "POSITIVE" : "NOT-DETERMINED"},
           {"values", io::to_json(res.values)}};
  if (!positive) out["witness"] = res.witness;
  p.document(out);
  return positive ? kOk : kNegative;
}

int cmd_oracle_verify(const Options& o, const Printer& p) {
  const auto results = run_oracle_suite(o.suite);
  int passed = 0;
  int failed = 0;
  json checks = json::array();
  for (const auto& r : results) {
    passed += r.passed;
    failed += r.total - r.passed;
    checks.push_back(json{{"name", r.name},
                          {"passed", r.passed},
                          {"total", r.total},
                          {"failures", r.failures}});
  }
  p.document(json{{"suite", o.suite}, {"passed", passed}, {"failed", failed}, {"checks", checks}});
  return failed == 0 ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Weakly separated collections, quantum minors and positivity tests", "wsq"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  Options o;
  std::function<int(const Printer&)> action;
  auto on = [&](CLI::App* sub, std::function<int(const Printer&)> f) {
    sub->callback([&action, f] { action = f; });
  };

  auto* ws = app.add_subcommand("ws-check", "Are two subsets weakly separated?");
  ws->add_option("--i", o.i, "First subset, e.g. 1,3")->required();
  ws->add_option("--j", o.j, "Second subset")->required();
  ws->add_option("--n", o.n, "Ground set size (default: largest index)");
  on(ws, [&](const Printer& p) { return cmd_ws_check(o, p); });

  auto* ex = app.add_subcommand("exponent", "Quasi-commutation exponent of two minors");
  ex->add_option("--a", o.a, "Rows of the first minor");
  ex->add_option("--b", o.b, "Columns of the first minor");
  ex->add_option("--c", o.c, "Rows of the second minor");
  ex->add_option("--d", o.d, "Columns of the second minor");
  ex->add_option("--k", o.k, "Number of rows");
  ex->add_option("--m", o.m, "Number of columns");
  ex->add_option("--i", o.i, "First Pluecker index set");
  ex->add_option("--j", o.j, "Second Pluecker index set");
  ex->add_option("--n", o.n, "Ground set size for --i/--j");
  ex->add_flag("--oracle", o.oracle, "Also compute the exponent symbolically");
  on(ex, [&](const Printer& p) { return cmd_exponent(o, p); });

  auto* st = app.add_subcommand("stieffel", "The k-subset S(A,B) of a minor");
  st->add_option("--a", o.a, "Rows")->required();
  st->add_option("--b", o.b, "Columns")->required();
  st->add_option("--k", o.k, "Number of rows")->required();
  st->add_option("--m", o.m, "Number of columns")->required();
  on(st, [&](const Printer& p) { return cmd_stieffel(o, p); });

  auto* en = app.add_subcommand("enumerate", "All maximal collections reachable by moves");
  en->add_option("--k", o.k, "Subset size");
  en->add_option("--n", o.n, "Ground set size");
  en->add_option("--seed", o.seed, "Start from this collection (JSON file, - for stdin)");
  en->add_flag("--count-only", o.count_only, "Print only the count");
  en->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  std::istream* input = &in;
  on(en, [&](const Printer& p) { return cmd_enumerate(o, p, *input); });

  auto* orb = app.add_subcommand("orbits", "Dihedral orbits of the enumerated collections");
  orb->add_option("--k", o.k, "Subset size");
  orb->add_option("--n", o.n, "Ground set size");
  orb->add_option("--seed", o.seed, "Start from this collection");
  orb->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  on(orb, [&](const Printer& p) { return cmd_orbits(o, p, *input); });

  auto* rb = app.add_subcommand("reduce-base", "Moves from a collection to the base collection");
  rb->add_option("--collection", o.collection, "Collection JSON file (- for stdin)")->required();
  on(rb, [&](const Printer& p) { return cmd_reduce_base(o, p, *input); });

  auto* wi = app.add_subcommand("wiring", "Chambers and collections of reduced words");
  wi->add_option("--k", o.k, "Number of red wires");
  wi->add_option("--m", o.m, "Number of black wires");
  wi->add_option("--word", o.word, "Word such as \"2 1r 1 2\"");
  wi->add_option("--words", o.words, "File with one word per line (- for stdin)");
  wi->add_flag("--closure", o.closure, "All word collections closed under the dihedral group");
  wi->add_flag("--parametrizable", o.parametrizable, "Test a k=2 collection given by --collection");
  wi->add_option("--collection", o.collection, "Collection JSON file");
  on(wi, [&](const Printer& p) { return cmd_wiring(o, p, *input); });

  auto* re = app.add_subcommand("reduce", "Projection and pinch point of a k=3 collection");
  re->add_option("--collection", o.collection, "Collection JSON file (- for stdin)")->required();
  on(re, [&](const Printer& p) { return cmd_reduce(o, p, *input); });

  auto* li = app.add_subcommand("lift", "Lift a k=3 collection by a pinch point");
  li->add_option("--collection", o.collection, "Collection JSON file (- for stdin)")->required();
  li->add_option("--b", o.pinch, "Pinch point");
  li->add_flag("--f-set", o.f_only, "Only print the admissible pinch points");
  on(li, [&](const Printer& p) { return cmd_lift(o, p, *input); });

  auto* gw = app.add_subcommand("gen-w3", "Generate every maximal collection of 3-subsets of [1..n]");
  gw->add_option("--n", o.n, "Ground set size")->required();
  gw->add_flag("--count-only", o.count_only, "Print only the count");
  on(gw, [&](const Printer& p) { return cmd_gen_w3(o, p); });

  auto* po = app.add_subcommand("positivity", "Propagate Pluecker values through moves");
  po->add_option("--collection", o.collection, "Collection JSON file")->required();
  po->add_option("--values", o.values, "Values JSON file {\"[1,3]\": \"2\", ...}");
  po->add_option("--nodes", o.nodes, "Vandermonde nodes, e.g. 1,2,3,4");
  po->add_flag("--float", o.floating, "Double precision with relative tolerance 1e-9");
  on(po, [&](const Printer& p) { return cmd_positivity(o, p, *input); });

  auto* ov = app.add_subcommand("oracle-verify", "Symbolic oracle against the exponent formulas");
  ov->add_option("--suite", o.suite, "Battery to run")->capture_default_str();
  on(ov, [&](const Printer& p) { return cmd_oracle_verify(o, p); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    return action(Printer(out, format == "text"));
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace wsq::cli
