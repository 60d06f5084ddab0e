#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeck/gzd.hpp"
#include "zeck/hankel.hpp"
#include "zeck/minimality.hpp"
#include "zeck/trace_table.hpp"

using json = nlohmann::json;
using namespace zeck;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFalsified = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers that fit in 64 bits are JSON numbers, larger ones strings.
json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json rep_json(const Representation& r) {
  json coeffs = json::array();
  for (const auto& d : r.msd_first()) coeffs.push_back(big(d));
  return {{"signature", r.signature().coeffs()}, {"coeffs", coeffs}};
}

json poly_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(big(c));
  return out;
}

json witness_json(const Witness& w) {
  return {{"n", big(w.n)},
          {"rep", w.rep.to_string()},
          {"rep_summands", big(w.rep_summands)},
          {"gzd", w.gzd.to_string()},
          {"gzd_summands", big(w.gzd_summands)}};
}

std::string witness_text(const Witness& w) {
  return "n=" + w.n.str() + " rep=" + w.rep.to_string() + " (" + w.rep_summands.str() +
         " summands) gzd=" + w.gzd.to_string() + " (" + w.gzd_summands.str() + " summands)";
}

Signature need_sig(const std::string& text) {
  if (text.empty()) throw UsageError("--sig is required");
  return parse_signature(text);
}

BigInt need_n(const std::string& text) {
  if (text.empty()) throw UsageError("--n is required");
  try {
    BigInt v = parse_bigint(text);
    if (v < 0) throw UsageError("--n must be non-negative");
    return v;
  } catch (const std::invalid_argument&) {
    throw UsageError("--n: not an integer: " + text);
  }
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Config {
  std::string sig;
  std::string n;
  std::string rep;
  std::string mode = "dp";
  std::string verb;
  std::string corpus;
  std::uint64_t bound = 1000;
  bool bound_set = false;
  int rmax = 20;
  int r = 0;
  int s = 0;
  long double tol = 1e-12L;
  bool as_json = false;
  std::uint64_t step_limit = 1'000'000;
  std::optional<std::size_t> max_shift;
  std::size_t max_n = 200;
  std::optional<std::size_t> max_degree;
  std::optional<Index> start;
};

int cmd_seq(const Config& cfg) {
  RecurrenceSequence seq(need_sig(cfg.sig));
  std::vector<std::pair<Index, BigInt>> rows;
  if (cfg.bound_set) {
    rows = seq.terms_up_to(cfg.bound);
  } else {
    const Index last = cfg.n.empty() ? 10 : static_cast<Index>(need_n(cfg.n));
    const auto terms = seq.terms(last);
    for (Index i = 0; i <= last; ++i) rows.emplace_back(i, terms[static_cast<std::size_t>(i)]);
  }
  if (cfg.as_json) {
    json out = json::array();
    for (auto& [i, v] : rows) out.push_back({{"index", i}, {"value", big(v)}});
    print(out);
  } else {
    for (auto& [i, v] : rows) std::cout << i << ' ' << v << '\n';
  }
  return kOk;
}

int cmd_gzd(const Config& cfg) {
  auto seq = make_sequence(need_sig(cfg.sig));
  const Representation g = gzd_of(need_n(cfg.n), seq);
  if (cfg.as_json) {
    print(rep_json(g));
  } else {
    std::cout << g.to_string() << '\n';
  }
  return kOk;
}

int cmd_run(const Config& cfg) {
  auto seq = make_sequence(need_sig(cfg.sig));
  if (cfg.rep.empty()) throw UsageError("--rep is required");
  const Representation start = parse_representation(seq, cfg.rep);
  TraceOptions opts;
  opts.step_limit = cfg.step_limit;
  opts.snapshot_depth = cfg.step_limit;
  const TracedRun run = to_gzd(start, opts);
  if (cfg.as_json) {
    json steps = json::array();
    for (const auto& st : run.trace.steps) {
      steps.push_back({{"action", to_string(st.kind)},
                       {"index", st.index},
                       {"delta", st.delta},
                       {"chained", st.chained},
                       {"after", st.snapshot->to_string()}});
    }
    print({{"steps", steps}, {"dS", delta_summands(run.trace)}, {"final", rep_json(run.result)}});
  } else {
    std::cout << render_trace_table(start, run);
  }
  return kOk;
}

int cmd_minimal(const Config& cfg) {
  auto seq = make_sequence(need_sig(cfg.sig));
  const BigInt n = need_n(cfg.n);
  if (cfg.mode != "dp" && cfg.mode != "bfs") throw UsageError("--mode must be dp or bfs");
  const BigInt m = min_summands(n, seq, cfg.mode == "dp" ? OracleMode::Dp : OracleMode::Bfs);
  if (cfg.as_json) {
    json out = {{"n", big(n)}, {"min_summands", big(m)}};
    if (!(seq->signature().depth() == 1 && seq->signature().c(1) == 1)) {
      out["gzd_summands"] = big(gzd_of(n, seq).summand_count());
    }
    print(out);
  } else {
    std::cout << m << '\n';
  }
  return kOk;
}

json report_json(const MinimalityReport& r) {
  json out = {{"sig", r.sig.to_string()},
              {"scan_bound", r.scan_bound},
              {"verdict", to_string(r.verdict)},
              {"method", r.method},
              {"falsified", r.falsified},
              {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)},
              {"least_n", r.least_n ? json(*r.least_n) : json(nullptr)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::vector<Signature> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open corpus " + path);
  std::vector<Signature> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_signature(line));
  }
  return out;
}

int cmd_verify(const Config& cfg) {
  std::vector<Signature> sigs;
  if (!cfg.sig.empty()) {
    sigs.push_back(parse_signature(cfg.sig));
  } else {
    std::string path = cfg.corpus;
    if (path.empty()) {
      if (const char* env = std::getenv("GZD_CORPUS")) path = env;
    }
    if (path.empty()) throw UsageError("--sig or --corpus (or GZD_CORPUS) is required");
    sigs = read_corpus(path);
  }
  SearchBounds bounds;
  bounds.max_shift = cfg.max_shift;
  bounds.max_n = cfg.max_n;
  bool falsified = false;
  json all = json::array();
  for (const auto& sig : sigs) {
    const MinimalityReport r = verify_theorem(make_sequence(sig), cfg.bound, bounds);
    falsified |= r.falsified;
    if (cfg.as_json) {
      all.push_back(report_json(r));
      continue;
    }
    std::cout << sig.to_string() << ": " << to_string(r.verdict);
    if (!r.method.empty()) std::cout << " (" << r.method << ")";
    if (r.witness) std::cout << ' ' << witness_text(*r.witness);
    if (r.least_n) std::cout << " least_n=" << *r.least_n;
    if (r.falsified) std::cout << " FALSIFIED: " << r.note;
    std::cout << '\n';
  }
  if (cfg.as_json) print(sigs.size() == 1 && !cfg.sig.empty() ? all[0] : all);
  return falsified ? kFalsified : kOk;
}

int cmd_counterexample(const Config& cfg) {
  auto seq = make_sequence(need_sig(cfg.sig));
  SearchBounds bounds;
  bounds.max_shift = cfg.max_shift;
  bounds.max_n = cfg.max_n;
  const Counterexample c = counterexample(seq, bounds);
  if (cfg.as_json) {
    json out = witness_json(c.witness);
    out["sig"] = seq->signature().to_string();
    out["method"] = c.method;
    print(out);
  } else {
    std::cout << c.method << ' ' << witness_text(c.witness) << '\n';
  }
  return kOk;
}

int cmd_forms(const Config& cfg) {
  auto seq = make_sequence(need_sig(cfg.sig));
  const Index lo = cfg.n.empty() ? 10 : static_cast<Index>(need_n(cfg.n));
  const Index hi = cfg.bound_set ? static_cast<Index>(cfg.bound) : lo + 100;
  const FormHistogram h = classify_two_summand_forms(seq, lo, hi);
  const bool persistent = h.stable_from > hi;
  if (cfg.as_json) {
    json counts = json::object();
    for (auto f : {TwoSummandForm::Single, TwoSummandForm::PairEll2, TwoSummandForm::PairEll2Plus1}) {
      auto it = h.counts.find(f);
      counts[to_string(f)] = it == h.counts.end() ? 0 : it->second;
    }
    print({{"sig", seq->signature().to_string()},
           {"n_lo", lo},
           {"n_hi", hi},
           {"ell1", h.ell1},
           {"ell2", h.ell2 ? json(*h.ell2) : json(nullptr)},
           {"counts", counts},
           {"three_plus", h.three_plus},
           {"violations", h.violations},
           {"stable_from", h.stable_from}});
  } else {
    std::cout << "ell1=" << h.ell1 << " ell2=" << (h.ell2 ? std::to_string(*h.ell2) : "none") << '\n';
    for (auto& [f, count] : h.counts) std::cout << to_string(f) << ": " << count << '\n';
    std::cout << "three or more summands: " << h.three_plus.size() << '\n';
    std::cout << "violations: " << h.violations.size() << '\n';
    std::cout << "stable from n=" << h.stable_from << '\n';
  }
  return persistent ? kFalsified : kOk;
}

int cmd_poly(const Config& cfg) {
  const std::string& verb = cfg.verb;
  auto need_rs = [&] {
    if (!(cfg.r > cfg.s && cfg.s >= 1)) throw UsageError("need --r > --s >= 1");
  };
  if (verb == "char") {
    const IntPolynomial p = char_poly(need_sig(cfg.sig));
    cfg.as_json ? print(poly_json(p)) : void(std::cout << p.to_string() << '\n');
    return kOk;
  }
  if (verb == "g") {
    need_rs();
    const IntPolynomial p = g_poly(cfg.r, cfg.s);
    cfg.as_json ? print(poly_json(p)) : void(std::cout << p.to_string() << '\n');
    return kOk;
  }
  if (verb == "factor") {
    need_rs();
    const int d = std::gcd(cfg.r, cfg.s);
    const IntPolynomial cyclo = IntPolynomial::monomial(1, static_cast<std::size_t>(d)) - IntPolynomial{1};
    const auto factors = schinzel_factors(cfg.r, cfg.s);
    if (cfg.as_json) {
      json fs = json::array();
      for (const auto& f : factors) fs.push_back(poly_json(f));
      print({{"cyclotomic", poly_json(cyclo)}, {"factors", fs}});
    } else {
      std::cout << cyclo.to_string() << '\n';
      for (const auto& f : factors) std::cout << f.to_string() << '\n';
    }
    return kOk;
  }
  if (verb == "minpoly") {
    const Signature sig = need_sig(cfg.sig);
    RecurrenceSequence seq(sig);
    const std::size_t witness = cfg.n.empty() ? 4 * sig.depth() + 8 : static_cast<std::size_t>(need_n(cfg.n));
    const IntPolynomial p = minimal_poly(seq, cfg.max_degree.value_or(sig.depth() + 2), witness, cfg.start);
    if (cfg.as_json) {
      print({{"minimal", poly_json(p)}, {"equals_char_poly", p == char_poly(sig)}});
    } else {
      std::cout << p.to_string() << '\n';
    }
    return kOk;
  }
  if (verb == "scan") {
    const Signature sig = need_sig(cfg.sig);
    const DivisibilityReport rep = char_divides_g_scan(sig, cfg.rmax);
    if (cfg.as_json) {
      json hits = json::array();
      for (const auto& h : rep.hits) hits.push_back({h.r, h.s});
      print({{"r_max", rep.r_max},
             {"hits", hits},
             {"expected", rep.expected ? json({rep.expected->r, rep.expected->s}) : json(nullptr)},
             {"matches_expectation", rep.matches_expectation}});
    } else {
      if (rep.hits.empty()) std::cout << "no hits up to r=" << rep.r_max << '\n';
      for (const auto& h : rep.hits) std::cout << "(" << h.r << "," << h.s << ")\n";
    }
    return rep.matches_expectation ? kOk : kFalsified;
  }
  if (verb == "root") {
    const Signature sig = need_sig(cfg.sig);
    const RootBracket b = largest_real_root(char_poly(sig), cfg.tol);
    if (cfg.as_json) {
      print({{"beta", static_cast<double>(b.mid())},
             {"lo", static_cast<double>(b.lo)},
             {"hi", static_cast<double>(b.hi)}});
    } else {
      std::cout << std::setprecision(18) << b.mid() << '\n';
    }
    return kOk;
  }
  throw UsageError("unknown poly verb '" + verb + "' (char, g, factor, minpoly, scan, root)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Zeckendorf decompositions"};
  app.require_subcommand(1);
  Config cfg;

  auto add_sig = [&](CLI::App* sub) { sub->add_option("--sig", cfg.sig, "signature, e.g. 5,3,1"); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.as_json, "JSON output"); };
  auto add_bound = [&](CLI::App* sub, const std::string& help) {
    sub->add_option_function<std::uint64_t>(
        "--bound", [&](std::uint64_t b) { cfg.bound = b; cfg.bound_set = true; }, help);
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option_function<std::size_t>(
        "--max-shift", [&](std::size_t v) { cfg.max_shift = v; }, "cut-search shift limit (default p+8)");
    sub->add_option("--max-n", cfg.max_n, "c1 = 1 search limit")->capture_default_str();
  };

  auto* seq = app.add_subcommand("seq", "print terms H_0..H_n, or all terms <= --bound");
  add_sig(seq);
  seq->add_option("--n", cfg.n, "last index (default 10)");
  add_bound(seq, "print every term up to this value");
  add_json(seq);

  auto* gzd = app.add_subcommand("gzd", "gzd of n");
  add_sig(gzd);
  gzd->add_option("--n", cfg.n, "non-negative integer");
  add_json(gzd);

  auto* run = app.add_subcommand("run", "turn a representation into the gzd, printing every step");
  add_sig(run);
  run->add_option("--rep", cfg.rep, "digits most significant first, e.g. [1,5,3,0]");
  run->add_option("--step-limit", cfg.step_limit)->capture_default_str();
  add_json(run);

  auto* minimal = app.add_subcommand("minimal", "fewest summands of any representation of n");
  add_sig(minimal);
  minimal->add_option("--n", cfg.n, "non-negative integer");
  minimal->add_option("--mode", cfg.mode, "dp or bfs")->capture_default_str();
  add_json(minimal);

  auto* verify = app.add_subcommand("verify", "check the minimality theorem for one signature or a corpus");
  add_sig(verify);
  verify->add_option("--corpus", cfg.corpus, "file with one signature per line (default $GZD_CORPUS)");
  add_bound(verify, "sweep n <= bound (default 1000)");
  add_search(verify);
  add_json(verify);

  auto* cx = app.add_subcommand("counterexample", "witness that a gzd is not summand minimal");
  add_sig(cx);
  add_search(cx);
  add_json(cx);

  auto* forms = app.add_subcommand("forms", "classify gzd(2 H_n) for c_1 = 1");
  add_sig(forms);
  forms->add_option("--n", cfg.n, "first n (default 10)");
  add_bound(forms, "last n (default first + 100)");
  add_json(forms);

  auto* poly = app.add_subcommand("poly", "polynomial tools");
  poly->add_option("verb", cfg.verb, "char, g, factor, minpoly, scan or root")->required();
  add_sig(poly);
  poly->add_option("--r", cfg.r);
  poly->add_option("--s", cfg.s);
  poly->add_option("--rmax", cfg.rmax, "scan limit")->capture_default_str();
  poly->add_option("--tol", cfg.tol, "root bracket width")->capture_default_str();
  poly->add_option("--n", cfg.n, "minpoly: number of terms used");
  poly->add_option_function<std::size_t>("--max-degree", [&](std::size_t v) { cfg.max_degree = v; });
  poly->add_option_function<Index>("--start", [&](Index v) { cfg.start = v; }, "minpoly: first index");
  add_json(poly);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*seq) return cmd_seq(cfg);
    if (*gzd) return cmd_gzd(cfg);
    if (*run) return cmd_run(cfg);
    if (*minimal) return cmd_minimal(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*cx) return cmd_counterexample(cfg);
    if (*forms) return cmd_forms(cfg);
    if (*poly) return cmd_poly(cfg);
  } catch (const FalsificationError& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return kFalsified;
  } catch (const InvariantError& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return kFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
