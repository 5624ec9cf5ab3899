#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "dosc/classical_ops.hpp"
#include "dosc/corpus.hpp"
#include "dosc/errors.hpp"
#include "dosc/harness.hpp"
#include "dosc/parallel.hpp"
#include "dosc/projections.hpp"
#include "dosc/report.hpp"
#include "dosc/seminorms.hpp"
#include "dosc/transforms.hpp"
#include "dosc/weights.hpp"

namespace dosc {

namespace {

struct Input {
  std::string file;
  std::string function;
  int n = 512;
  int npp = 16;
  std::string domain = "full";
  std::uint64_t seed = 7;

  SampledFn load() const {
    if (!file.empty() && !function.empty()) throw ArgumentError("give either --input or --function, not both");
    SampledFn f = [&] {
      if (!file.empty()) return read_csv_file(file);
      if (function.empty()) throw ArgumentError("an input is required: --input FILE or --function SPEC");
      return parse_function_spec(function, seed).sample(n, npp);
    }();
    if (domain == "half" && f.domain() == Domain::full_line) return restrict_to_half(f);
    return f;
  }
};

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ArgumentError("bad number in list: '" + tok + "'");
    }
  }
  if (v.empty()) throw ArgumentError("empty list");
  return v;
}

// "default", "dyadic:klo,khi", "geom:lo,hi,n" or "list:t1,t2,...".
ThresholdSeq parse_t_grid(const std::string& spec, const Grid& spatial) {
  if (spec == "default") return ThresholdSeq::default_for_band(resolvable_band(spatial));
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ArgumentError("bad t-grid spec: " + spec);
  const std::string kind = spec.substr(0, colon);
  const auto v = parse_list(spec.substr(colon + 1));
  if (kind == "dyadic" && v.size() == 2) return ThresholdSeq::dyadic(int(v[0]), int(v[1]));
  if (kind == "geom" && v.size() == 3) return ThresholdSeq::geometric_with_dyadic(v[0], v[1], int(v[2]));
  if (kind == "list") return ThresholdSeq(v);
  throw ArgumentError("bad t-grid spec: " + spec);
}

// "power:beta" or "wab:a,b".
Weight parse_weight(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ArgumentError("bad weight spec: " + spec);
  const std::string kind = spec.substr(0, colon);
  const auto v = parse_list(spec.substr(colon + 1));
  if (kind == "power" && v.size() == 1) return Weight::power(v[0]);
  if (kind == "wab" && v.size() == 2) return Weight::w_ab(v[0], v[1]);
  throw ArgumentError("bad weight spec: " + spec);
}

MultiplierFamily parse_family(const std::string& spec) {
  if (spec == "identity") return MultiplierFamily::identity();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ArgumentError("bad multiplier family spec: " + spec);
  const std::string kind = spec.substr(0, colon);
  const auto v = parse_list(spec.substr(colon + 1));
  if (kind == "dyadic" && v.size() == 2) return MultiplierFamily::dyadic_indicators(int(v[0]), int(v[1]));
  if (kind == "intervals" && v.size() >= 2 && v.size() % 2 == 0) {
    std::vector<std::pair<double, double>> iv;
    for (std::size_t i = 0; i < v.size(); i += 2) iv.emplace_back(v[i], v[i + 1]);
    return MultiplierFamily::indicators(iv);
  }
  throw ArgumentError("bad multiplier family spec: " + spec);
}

// Output sink: a file or the given stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ArgumentError("cannot open for writing: " + path);
      os_ = file_.get();
    }
  }
  std::ostream& os() { return *os_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

// Every option of the active subcommands with its value (default when unset).
std::string run_description(const CLI::App& app, const CLI::App* sub) {
  std::string s = "subcommand=" + sub->get_name();
  auto add = [&s](const CLI::App* a) {
    for (const CLI::Option* o : a->get_options()) {
      if (o->get_name() == "--help" || o->get_name() == "-h") continue;
      std::string name = o->get_single_name();
      std::string val = o->count() > 0 ? o->as<std::string>() : o->get_default_str();
      if (o->get_type_size() == 0) val = o->count() > 0 ? "true" : "false";
      s += " " + name + "=" + val;
    }
  };
  add(&app);
  add(sub);
  return s;
}

std::string run_json(const std::string& desc) {
  std::string out = "{\"run\":" + nlohmann::json(desc).dump() + "}";
  return out;
}

void write_fn(const SampledFn& f, const std::string& desc, std::ostream& os) {
  std::ostringstream ss;
  write_csv(f, ss);
  const std::string s = ss.str();
  const auto nl = s.find('\n');
  os << s.substr(0, nl + 1) << "# run: " << desc << '\n' << s.substr(nl + 1);
}

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("--input", in.file, "SampledFn CSV file");
  sub->add_option("--function", in.function, "bump:c,r | gaussian:c,s | xbump:c,r | corpus name");
  sub->add_option("--n", in.n, "nodes for --function");
  sub->add_option("--npp", in.npp, "nodes per panel for --function");
  sub->add_option("--domain", in.domain, "full or half (restricts to x > 0)")->check(CLI::IsMember({"full", "half"}));
}

// Pre-parse --config and append its keys that are not given on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream is(path);
  if (!is) throw ArgumentError("cannot open config file: " + path);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw ArgumentError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given || key == "config") continue;
    if (val == "true") args.push_back(flag);
    else if (val != "false") args.push_back(flag + "=" + val);
  }
  return args;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dunkl-osc: Dunkl transforms, partial sums, oscillation seminorms and verification experiments"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 0;
  std::string config;
  app.add_option("--threads", threads, "worker threads (default: DUNKL_OSC_THREADS or OpenMP default)");
  app.add_option("--config", config, "key=value file with the same keys as the flags; flags win");

  Input in;
  std::string output = "-";
  double alpha = 0.0;

  // transform
  auto* tr = app.add_subcommand("transform", "forward or inverse transform of a sampled function");
  std::string tr_kind = "dunkl";
  bool tr_inverse = false;
  std::string tr_target;
  double tr_half_width = 0.0;
  add_input(tr, in);
  tr->add_option("--kind", tr_kind, "fourier | dunkl | dunkl-modified | hankel | hankel-modified")
      ->check(CLI::IsMember({"fourier", "dunkl", "dunkl-modified", "hankel", "hankel-modified"}));
  tr->add_option("--alpha", alpha, "order alpha >= -1/2");
  tr->add_flag("--inverse", tr_inverse, "inverse transform (input is a frequency-side function)");
  tr->add_option("--target", tr_target, "SampledFn CSV whose grid receives the inverse transform");
  tr->add_option("--half-width", tr_half_width, "inverse onto [-L, L] (or [0, L]) with --n nodes when no --target");
  tr->add_option("--output", output, "output file, '-' for standard output");

  // partial-sum
  auto* ps = app.add_subcommand("partial-sum", "partial sum S_t f");
  std::string ps_kind = "dunkl";
  double ps_t = 1.0;
  int ps_dim = 3;
  add_input(ps, in);
  ps->add_option("--kind", ps_kind, "dunkl | hankel | fourier | radial")
      ->check(CLI::IsMember({"dunkl", "hankel", "fourier", "radial"}));
  ps->add_option("--alpha", alpha, "order alpha >= -1/2");
  ps->add_option("--t", ps_t, "frequency cut t > 0");
  ps->add_option("--dimension", ps_dim, "dimension for --kind radial");
  ps->add_option("--output", output, "output file, '-' for standard output");

  // family
  auto* fa = app.add_subcommand("family", "partial sums S_t f over a t-grid");
  std::string t_grid = "default";
  add_input(fa, in);
  fa->add_option("--alpha", alpha, "order alpha >= -1/2");
  fa->add_option("--t-grid", t_grid, "default | dyadic:klo,khi | geom:lo,hi,n | list:t1,t2,...");
  fa->add_option("--output", output, "output file, '-' for standard output");

  // osc
  auto* os = app.add_subcommand("osc", "truncated oscillation seminorm of the partial-sum family");
  int J = 8, n_random = 100;
  std::uint64_t seed = 7;
  bool dyadic_only = false;
  std::string cuts;
  add_input(os, in);
  os->add_option("--alpha", alpha, "order alpha >= -1/2");
  os->add_option("--t-grid", t_grid, "default | dyadic:klo,khi | geom:lo,hi,n | list:t1,t2,...");
  os->add_option("--J", J, "number of oscillation blocks");
  os->add_option("--n-random", n_random, "random cut sequences");
  os->add_option("--seed", seed, "seed for the cut sequences and corpus");
  os->add_flag("--dyadic-only", dyadic_only, "draw cut sequences from dyadic thresholds only");
  os->add_option("--cuts", cuts, "fixed cuts t1,...,t_{J+1} instead of sampling");
  os->add_option("--output", output, "output file, '-' for standard output");

  // var
  auto* va = app.add_subcommand("var", "r-variation seminorm of the partial-sum family");
  double r = 2.0;
  add_input(va, in);
  va->add_option("--alpha", alpha, "order alpha >= -1/2");
  va->add_option("--t-grid", t_grid, "default | dyadic:klo,khi | geom:lo,hi,n | list:t1,t2,...");
  va->add_option("--r", r, "exponent r >= 1");
  va->add_option("--output", output, "output file, '-' for standard output");

  // maximal
  auto* mx = app.add_subcommand("maximal", "maximal operators");
  std::string op = "hl";
  double radius_scale = 0.0;
  add_input(mx, in);
  mx->add_option("--op", op, "hl | hardy | hilbert | carleson | prestini | carleson-dunkl")
      ->check(CLI::IsMember({"hl", "hardy", "hilbert", "carleson", "prestini", "carleson-dunkl"}));
  mx->add_option("--alpha", alpha, "order alpha >= -1/2");
  mx->add_option("--t-grid", t_grid, "thresholds (modulation frequencies are 0 and +-t)");
  mx->add_option("--radius-scale", radius_scale, "radii 2^k * scale, k = -8..8 (default: half the support)");
  mx->add_option("--output", output, "output file, '-' for standard output");

  // range
  auto* ra = app.add_subcommand("range", "admissible-range predicates and weight checks (JSON verdict)");
  std::string predicate = "full";
  double p = 2.0, beta = 0.0, gamma = 0.0;
  std::string weight = "power:0";
  bool experimental = false;
  ra->add_option("--predicate", predicate, "full | dyadic | transplant | beta-star | ap | ap-alpha | measure")
      ->check(CLI::IsMember({"full", "dyadic", "transplant", "beta-star", "ap", "ap-alpha", "measure"}));
  ra->add_option("--p", p, "exponent p");
  ra->add_option("--beta", beta, "power weight exponent beta");
  ra->add_option("--alpha", alpha, "order alpha >= -1/2");
  ra->add_option("--gamma", gamma, "second order for transplant");
  ra->add_option("--weight", weight, "power:beta | wab:a,b (for ap, ap-alpha, measure)");
  ra->add_flag("--experimental", experimental, "allow the measure-adapted (conjectural) check");
  ra->add_option("--output", output, "output file, '-' for standard output");

  // verify
  auto* ve = app.add_subcommand("verify", "identity suite (JSON-lines reports)");
  std::string suite = "identities";
  std::string alphas = "-0.5,0,0.5,1";
  std::string summary;
  int n = 512, npp = 16;
  ve->add_option("--suite", suite, "identities")->check(CLI::IsMember({"identities"}));
  ve->add_option("--alpha", alphas, "comma-separated orders");
  ve->add_option("--seed", seed, "corpus seed");
  ve->add_option("--n", n, "nodes per corpus grid");
  ve->add_option("--npp", npp, "nodes per panel");
  std::string format = "json";
  ve->add_option("--format", format, "json (reports) | csv (summary)")->check(CLI::IsMember({"json", "csv"}));
  ve->add_option("--summary", summary, "also write the summary CSV here");
  ve->add_option("--output", output, "output file, '-' for standard output");

  // sweep
  auto* sw = app.add_subcommand("sweep", "ratio sweeps (JSON-lines reports)");
  std::string sw_kind = "oscillation";
  std::vector<std::string> specs;
  std::string ladder = "512,1024";
  std::string weights_spec;
  bool bcv = false;
  int dimension = 3;
  std::string family = "dyadic:-4,11";
  sw->add_option("--kind", sw_kind, "oscillation | oscillation-dyadic | prestini | transference | carleson | measure")
      ->check(CLI::IsMember({"oscillation", "oscillation-dyadic", "prestini", "transference", "carleson", "measure"}));
  sw->add_option("--spec", specs, "p,beta,alpha (repeatable; oscillation and transference)");
  sw->add_option("--J", J, "oscillation blocks");
  sw->add_option("--n-sequences", n_random, "random cut sequences");
  sw->add_option("--seed", seed, "seed");
  sw->add_option("--n", n, "base resolution");
  sw->add_option("--npp", npp, "nodes per panel");
  sw->add_option("--ladder", ladder, "resolution ladder for prestini, transference, carleson");
  sw->add_option("--alpha", alphas, "comma-separated orders (prestini, carleson, measure)");
  sw->add_option("--p", p, "exponent p (carleson, measure)");
  sw->add_option("--weights", weights_spec, "weights separated by ';' (carleson, measure)");
  sw->add_flag("--bcv-lattice", bcv, "use the w_ab lattice around the admissible rectangle (carleson)");
  sw->add_option("--dimension", dimension, "dimension n (transference)");
  sw->add_option("--family", family, "identity | dyadic:klo,khi | intervals:a1,b1,a2,b2,...");
  sw->add_flag("--experimental", experimental, "required for --kind measure");
  sw->add_option("--format", format, "json (reports) | csv (summary)")->check(CLI::IsMember({"json", "csv"}));
  sw->add_option("--summary", summary, "also write the summary CSV here");
  sw->add_option("--output", output, "output file, '-' for standard output");

  std::vector<std::string> args;
  try {
    args = apply_config(raw_args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string desc = run_description(app, sub);
  in.seed = seed;

  try {
    if (threads < 0) throw ArgumentError("--threads must be >= 1");
    if (threads > 0) set_num_threads(threads);
    Sink sink(output, out);
    auto summary_line = [&](const std::string& s) { (sink.to_file() ? out : err) << s << '\n'; };

    if (sub == tr) {
      const SampledFn f = in.load();
      const Order o(alpha);
      SampledFn g = f;
      if (!tr_inverse) {
        const Grid G = default_frequency_grid(f.grid(), {}, in.npp);
        if (tr_kind == "fourier") g = fourier(f, G);
        else if (tr_kind == "dunkl") g = dunkl(o, f, G);
        else if (tr_kind == "dunkl-modified") g = dunkl_modified(o, f, G);
        else if (tr_kind == "hankel") g = hankel(o, f, G);
        else g = hankel_modified(o, f, G);
      } else {
        Grid target = [&] {
          if (!tr_target.empty()) return read_csv_file(tr_target).grid();
          if (!(tr_half_width > 0.0)) throw ArgumentError("inverse transform needs --target or --half-width");
          const int per_side = in.n / (2 * in.npp);
          if (per_side < 1) throw ArgumentError("--n too small for --npp");
          Grid s = make_graded_grid(-tr_half_width, tr_half_width, per_side, in.npp, 1.0);
          return f.domain() == Domain::half_line ? s.positive_half() : s;
        }();
        if (tr_kind == "fourier") g = fourier_inverse(f, target);
        else if (tr_kind == "dunkl") g = dunkl_inverse(o, f, target);
        else if (tr_kind == "dunkl-modified") g = dunkl_modified_inverse(o, f, target);
        else if (tr_kind == "hankel") g = hankel(o, f, target);
        else g = hankel_modified(o, f, target);
      }
      write_fn(g, desc, sink.os());
      summary_line("transform " + tr_kind + (tr_inverse ? " inverse" : "") + ": " + std::to_string(g.size()) +
                   " nodes");
    } else if (sub == ps) {
      const SampledFn f = in.load();
      SampledFn g = f;
      if (ps_kind == "dunkl") g = dunkl_partial_sum(Order(alpha), f, ps_t);
      else if (ps_kind == "hankel") g = hankel_partial_sum(Order(alpha), f, ps_t);
      else if (ps_kind == "fourier") g = fourier_partial_sum(f, ps_t);
      else g = radial_partial_sum(ps_dim, f, ps_t);
      write_fn(g, desc, sink.os());
      summary_line("partial-sum " + ps_kind + " t=" + format_double(ps_t) + ": " + std::to_string(g.size()) + " nodes");
    } else if (sub == fa) {
      const SampledFn f = in.load();
      const auto fam = build_family(Order(alpha), f, parse_t_grid(t_grid, f.grid()));
      std::ostringstream ss;
      write_family_csv(fam, ss);
      const std::string s = ss.str();
      const auto nl = s.find('\n');
      sink.os() << s.substr(0, nl + 1) << "# run: " << desc << '\n' << s.substr(nl + 1);
      summary_line("family: " + std::to_string(fam.rows()) + " rows x " + std::to_string(fam.cols()) + " nodes");
    } else if (sub == os || sub == va) {
      const SampledFn f = in.load();
      const auto fam = build_family(Order(alpha), f, parse_t_grid(t_grid, f.grid()));
      SampledFn g = f;
      if (sub == va) {
        g = variation(fam, r);
      } else if (!cuts.empty()) {
        const auto c = parse_list(cuts);
        g = oscillation(fam, CutSequence(ThresholdSeq(c), static_cast<int>(c.size()) - 1));
      } else {
        g = max_oscillation_over_sampled_sequences(fam, J, n_random, seed, dyadic_only);
      }
      write_fn(g, desc, sink.os());
      double m = 0.0;
      for (const auto& v : g.values()) m = std::max(m, v.real());
      summary_line(std::string(sub == va ? "var" : "osc") + ": max " + format_double(m));
    } else if (sub == mx) {
      const SampledFn f = in.load();
      const double scale = radius_scale > 0.0 ? radius_scale : support_scale(f.grid());
      SampledFn g = f;
      auto freq_sup = [&] {
        return SupGrid::dyadic(scale, SupGrid::frequencies_from(parse_t_grid(t_grid, f.grid())));
      };
      if (op == "hl") g = hardy_littlewood_max(f, SupGrid::dyadic(scale));
      else if (op == "hardy") g = conjugate_hardy(f);
      else if (op == "hilbert") g = maximal_hilbert(f, SupGrid::dyadic(scale));
      else if (op == "carleson") g = carleson_hunt(f, freq_sup());
      else if (op == "prestini") {
        const SampledFn h = f.domain() == Domain::half_line ? f : restrict_to_half(f);
        g = prestini_majorant(Order(alpha), h, SupGrid::dyadic(support_scale(h.grid()),
                                                               SupGrid::frequencies_from(parse_t_grid(t_grid, h.grid()))));
      } else g = carleson_dunkl_max(Order(alpha), f, parse_t_grid(t_grid, f.grid()));
      write_fn(g, desc, sink.os());
      double m = 0.0;
      for (const auto& v : g.values()) m = std::max(m, v.real());
      summary_line("maximal " + op + ": max " + format_double(m));
    } else if (sub == ra) {
      const Order o(alpha);
      std::string result, formula;
      ParamList inputs{{"p", p}, {"beta", beta}, {"alpha", alpha}};
      if (predicate == "full") {
        result = range_full_oscillation(p, beta, o) ? "true" : "false";
        formula = "-1 < beta + (alpha+1/2)(2-p) < p/2 - 1, or p = 2 and beta = 0";
      } else if (predicate == "dyadic") {
        result = range_dyadic_oscillation(p, beta, o) ? "true" : "false";
        formula = "-1 < beta + (alpha+1/2)(2-p) < p - 1";
      } else if (predicate == "transplant") {
        inputs.emplace_back("gamma", gamma);
        result = transplant_range(p, beta, o, Order(gamma)) ? "true" : "false";
        formula = "-1 - p min(alpha+1/2, gamma+1/2) < beta < -1 + p min(alpha+3/2, gamma+3/2)";
      } else if (predicate == "beta-star") {
        result = format_double(beta_star(beta, o, p));
        formula = "beta - (alpha+1/2)(2-p)";
      } else {
        const Weight w = parse_weight(weight);
        inputs = {{"p", p}, {"alpha", alpha}, {"weight", w.describe()}};
        if (predicate == "ap") {
          const auto res = ap_check(w, p);
          result = res.is_member ? "true" : "false";
          inputs.emplace_back("sup_estimate", res.sup_estimate);
          formula = "sup over intervals of avg(w) avg(w^(-1/(p-1)))^(p-1) finite";
        } else if (predicate == "ap-alpha") {
          result = ap_alpha_check(w, p, o) ? "true" : "false";
          formula = "w |x|^(2 alpha+1-p(alpha+1/2)) in A_p";
        } else {
          if (!experimental) throw ArgumentError("--predicate measure is experimental; pass --experimental");
          const auto res = ap_measure_check(w, p, o);
          result = res.is_member ? "true" : "false";
          inputs.emplace_back("sup_estimate", res.sup_estimate);
          formula = "A_p condition with averages against |x|^(2 alpha+1) dx (conjectural, experimental)";
        }
      }
      std::string line = "{\"predicate\":" + nlohmann::json(predicate).dump() + ",\"inputs\":{";
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i) line += ',';
        line += nlohmann::json(inputs[i].first).dump() + ':';
        line += std::visit(
            [](const auto& x) -> std::string {
              using T = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<T, double>) return format_double(x);
              else if constexpr (std::is_same_v<T, std::string>) return nlohmann::json(x).dump();
              else return nlohmann::json(x).dump();
            },
            inputs[i].second);
      }
      line += "},\"result\":" + result + ",\"formula\":" + nlohmann::json(formula).dump() + "}";
      sink.os() << line << '\n';
      if (sink.to_file()) out << "range " << predicate << ": " << result << '\n';
    } else {
      std::vector<ExperimentReport> reports;
      if (sub == ve) {
        IdentityOptions opt;
        opt.res = Resolution{n, npp};
        opt.seed = seed;
        opt.alphas = parse_list(alphas);
        reports = run_identity_suite(opt);
      } else {
        const auto lad = parse_list(ladder);
        std::vector<int> lad_i;
        for (double v : lad) lad_i.push_back(static_cast<int>(v));
        std::vector<NormSpec> ns;
        for (const auto& s : specs) {
          const auto v = parse_list(s);
          if (v.size() != 3) throw ArgumentError("--spec expects p,beta,alpha");
          ns.emplace_back(v[0], v[1], Order(v[2]));
        }
        std::vector<Weight> ws;
        if (!weights_spec.empty()) {
          std::stringstream ss(weights_spec);
          std::string tok;
          while (std::getline(ss, tok, ';')) ws.push_back(parse_weight(tok));
        }
        std::vector<Order> orders;
        for (double a : parse_list(alphas)) orders.emplace_back(a);
        if (sw_kind == "oscillation" || sw_kind == "oscillation-dyadic") {
          if (ns.empty()) throw ArgumentError("--spec is required for oscillation sweeps");
          OscillationOptions opt;
          opt.res = Resolution{n, npp};
          opt.J = J;
          opt.n_sequences = n_random;
          opt.seed = seed;
          opt.dyadic_only = sw_kind == "oscillation-dyadic";
          reports = oscillation_ratio_sweep(ns, opt);
        } else if (sw_kind == "prestini") {
          PrestiniOptions opt;
          opt.ladder = lad_i;
          opt.nodes_per_panel = npp;
          opt.seed = seed;
          reports = prestini_constant_sweep(orders, opt);
        } else if (sw_kind == "transference") {
          if (ns.empty()) throw ArgumentError("--spec is required for transference");
          TransferenceOptions opt;
          opt.ladder = lad_i;
          opt.nodes_per_panel = npp;
          opt.seed = seed;
          const MultiplierFamily fam = parse_family(family);
          for (const auto& s : ns) reports.push_back(transference_demo(fam, s, dimension, opt));
        } else if (sw_kind == "carleson") {
          CarlesonOptions opt;
          opt.ladder = lad_i;
          opt.nodes_per_panel = npp;
          opt.seed = seed;
          for (const Order& o : orders) {
            auto w = bcv ? bcv_lattice(o) : ws;
            if (w.empty()) throw ArgumentError("--weights or --bcv-lattice is required for carleson sweeps");
            for (auto& rep : weighted_carleson_sweep(w, p, o, opt)) reports.push_back(std::move(rep));
          }
        } else {
          if (!experimental) throw ArgumentError("--kind measure is experimental; pass --experimental");
          if (ws.empty()) throw ArgumentError("--weights is required for --kind measure");
          for (const Order& o : orders)
            for (const auto& w : ws) reports.push_back(measure_adapted_experiment(w, p, o));
        }
      }
      if (format == "csv") {
        sink.os() << "# run: " << desc << '\n';
        write_summary_csv(reports, sink.os());
      } else {
        sink.os() << run_json(desc) << '\n';
        write_jsonl(reports, sink.os());
      }
      if (!summary.empty()) {
        std::ofstream s(summary);
        if (!s) throw ArgumentError("cannot open for writing: " + summary);
        write_summary_csv(reports, s);
      }
      const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& x) { return !x.passed; });
      summary_line(sub->get_name() + ": " + std::to_string(reports.size()) + " reports, " +
                   std::to_string(failed) + " failed");
      return failed == 0 ? 0 : 1;
    }
    return 0;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dosc
