#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>

#include "hallmod/basering.hpp"
#include "hallmod/error.hpp"
#include "hallmod/hallconst.hpp"
#include "hallmod/identities.hpp"
#include "hallmod/measures.hpp"
#include "hallmod/modlat.hpp"
#include "hallmod/symfunc.hpp"

namespace hallmod::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  std::vector<std::string> header;
  std::vector<json> records;
  std::vector<std::vector<std::string>> rows;
  json summary = json::object();
  bool failed = false;
};

// Options shared by every subcommand; they may also come from the config file.
struct Common {
  std::string format = "json";
  std::string output;
  bool no_timestamp = false;
  int parallelism = 1;
  std::string primes;
  int L = -1;
  double tol = -1;
  long size_bound = -1;
  std::uint64_t seed = 1;
};

json to_json(const Partition& p) { return json(p.parts()); }

std::string csv_partition(const Partition& p) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write(const Report& r, const Common& c, std::ostream& out) {
  if (c.format == "csv") {
    for (std::size_t i = 0; i < r.header.size(); ++i) out << (i ? "," : "") << r.header[i];
    out << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
    return;
  }
  for (const auto& rec : r.records) out << rec.dump() << "\n";
  json s = r.summary;
  if (!c.no_timestamp) s["timestamp"] = timestamp();
  out << json{{"summary", s}}.dump() << "\n";
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer list '" + text + "'");
    }
  }
  return out;
}

BigRational parse_rational(const std::string& text) {
  try {
    BigRational r(text);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument(text);
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
}

std::vector<int> checked_primes(const Common& c, bool odd) {
  std::vector<int> ps = c.primes.empty() ? std::vector<int>{} : parse_ints(c.primes);
  for (int p : ps) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    if (odd && p == 2) throw Error(ErrorCode::EvenPrimeUnsupported, "hermitian checks need odd primes");
  }
  return ps;
}

Report hl_command(const std::string& lambda_text, int n, const std::string& which, const std::string& method) {
  Partition lambda = parse_partition(lambda_text);
  HLMethod m = method == "symmetrization" ? HLMethod::Symmetrization : HLMethod::Branching;
  SymPoly f = which == "Q" ? hl_q(lambda, n, m) : hl_p(lambda, n, m);
  Report r;
  r.header = {"partition", "coeff"};
  json terms = json::array();
  for (const auto& [mu, c] : f.terms()) {
    terms.push_back({{"partition", to_json(mu)}, {"coeff", c.to_string("t")}});
    r.rows.push_back({csv_partition(mu), c.to_string("t")});
  }
  r.records.push_back({{"lambda", to_json(lambda)}, {"n", n}, {"kind", which},
                       {"poly", {{"nvars", f.nvars()}, {"terms", terms}}}});
  r.summary = {{"command", "hl"}, {"records", 1}};
  return r;
}

Report hall_command(Kind kind, const std::string& mu_text, const std::string& nu_text) {
  Partition mu = parse_partition(mu_text), nu = parse_partition(nu_text);
  StructureConstantTable t = symbolic_constants(kind, mu, nu);
  Report r;
  r.header = {"lambda", "poly"};
  json entries = json::array();
  for (const auto& [lambda, c] : t.entries) {
    json e{{"lambda", to_json(lambda)}};
    std::string text;
    if (is_integer_polynomial(c)) {
      auto coeffs = poly_coefficients(c);
      e["poly"] = coeffs;
      for (std::size_t i = 0; i < coeffs.size(); ++i) text += (i ? " " : "") + std::to_string(coeffs[i]);
    } else {
      e["poly_text"] = text = c.to_string("q");
      r.failed = true;
    }
    entries.push_back(e);
    r.rows.push_back({csv_partition(lambda), text});
  }
  r.records.push_back({{"kind", to_string(kind)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"entries", entries}});
  r.summary = {{"command", "hall"}, {"records", 1}, {"entries", t.entries.size()}};
  return r;
}

Report enumerate_command(Kind kind, const std::string& lambda_text, const std::optional<std::string>& mu_text,
                         const std::optional<std::string>& nu_text, int p, const Common& c) {
  Partition lambda = parse_partition(lambda_text);
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  long bound = c.size_bound < 0 ? kDefaultSizeBound : c.size_bound;
  json ring{{"p", p}, {"k", lambda.largest()}};
  if (kind == Kind::Hermitian) ring["c"] = smallest_nonresidue(p);

  std::map<std::pair<Partition, Partition>, long> counts;
  if (mu_text && nu_text) {
    Partition mu = parse_partition(*mu_text), nu = parse_partition(*nu_text);
    counts[{mu, nu}] = kind == Kind::Classical ? count_G_classical(lambda, mu, nu, make_cyclic_ring(p, 1), bound)
                                               : count_G_paired(kind, lambda, mu, nu, p, bound);
  } else if (mu_text || nu_text) {
    throw Error(ErrorCode::InvalidArgument, "give both --mu and --nu, or neither for the full table");
  } else {
    counts = kind == Kind::Classical ? classical_table(lambda, make_cyclic_ring(p, 1), bound)
                                     : paired_table(kind, lambda, p, bound);
  }
  Report r;
  r.header = {"mu", "nu", "count"};
  for (const auto& [key, n] : counts) {
    r.records.push_back({{"kind", to_string(kind)}, {"ring", ring}, {"lambda", to_json(lambda)},
                         {"mu", to_json(key.first)}, {"nu", to_json(key.second)}, {"count", n}});
    r.rows.push_back({csv_partition(key.first), csv_partition(key.second), std::to_string(n)});
  }
  r.summary = {{"command", "enumerate"}, {"records", r.records.size()}};
  return r;
}

Report measure_command(Kind kind, int u, const std::string& q_text, int sample_count, const Common& c) {
  UMeasureSpec spec{kind, u, parse_rational(q_text), c.L < 0 ? 10 : c.L};
  if (c.tol >= 0) spec.tol = c.tol;
  Report r;
  if (sample_count > 0) {
    r.header = {"index", "lambda"};
    auto draws = sample(spec, c.seed, sample_count);
    for (std::size_t i = 0; i < draws.size(); ++i) {
      r.records.push_back({{"index", i}, {"lambda", to_json(draws[i])}});
      r.rows.push_back({std::to_string(i), csv_partition(draws[i])});
    }
    r.summary = {{"command", "measure"}, {"records", draws.size()}, {"seed", c.seed}};
    return r;
  }
  MeasureTable t = measure_table(spec);
  r.header = {"lambda", "prob", "cumprob"};
  for (const auto& row : t.rows) {
    double prob = static_cast<double>(row.prob), cum = static_cast<double>(row.cumprob);
    r.records.push_back({{"lambda", to_json(row.lambda)}, {"prob", prob}, {"cumprob", cum}});
    std::ostringstream a, b;
    a.precision(17);
    b.precision(17);
    a << prob;
    b << cum;
    r.rows.push_back({csv_partition(row.lambda), a.str(), b.str()});
  }
  r.summary = {{"command", "measure"},
               {"records", t.rows.size()},
               {"total", static_cast<double>(t.total)},
               {"unassigned", static_cast<double>(t.unassigned())}};
  return r;
}

Report verify_command(const std::vector<std::string>& suites, int tmax, const Common& c) {
  std::vector<std::string> names;
  for (const auto& s : suites) {
    if (s == "all") {
      names.insert(names.end(), suite_names().begin(), suite_names().end());
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw Error(ErrorCode::InvalidArgument, "unknown suite '" + s + "'");
    names.push_back(s);
  }
  Report r;
  r.header = {"suite", "id", "params", "lhs", "rhs", "bound", "status", "note"};
  long failed = 0;
  json per_suite = json::array();
  for (const auto& name : names) {
    bool odd = name == "thm1.1-her" || name == "lemma5.2";
    SuiteOptions o;
    o.weight = tmax;
    o.primes = checked_primes(c, odd);
    o.L = c.L;
    o.tol = c.tol;
    o.size_bound = c.size_bound;
    o.parallelism = c.parallelism;
    long suite_failed = 0;
    auto checks = run_suite(name, o);
    for (const auto& ch : checks) {
      json params = json::object();
      std::string ptext;
      for (const auto& [k, v] : ch.params) {
        params[k] = v;
        ptext += (ptext.empty() ? "" : ";") + k + "=" + v;
      }
      json rec{{"suite", name}, {"id", ch.id}, {"params", params}, {"lhs", ch.lhs}, {"rhs", ch.rhs}};
      if (ch.bound) rec["bound"] = *ch.bound;
      if (!ch.note.empty()) rec["note"] = ch.note;
      rec["status"] = to_string(ch.status);
      r.records.push_back(rec);
      std::ostringstream b;
      if (ch.bound) b << *ch.bound;
      r.rows.push_back({name, ch.id, ptext, ch.lhs, ch.rhs, b.str(), to_string(ch.status), ch.note});
      if (!ch.passed()) ++suite_failed;
    }
    per_suite.push_back({{"suite", name}, {"checks", checks.size()}, {"failed", suite_failed}});
    failed += suite_failed;
  }
  r.failed = failed > 0;
  r.summary = {{"command", "verify"}, {"records", r.records.size()}, {"failed", failed}, {"suites", per_suite}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall-Littlewood and finite-module verification harness", "hallmod"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file mirroring the long flags");

  Common c;
  app.add_option("--format", c.format, "json (line-delimited records plus a summary) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", c.output, "write the report to this file instead of stdout");
  app.add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp from the summary");
  app.add_option("--parallelism", c.parallelism, "worker threads for verification suites")
      ->envname("HALLMOD_PARALLELISM")
      ->check(CLI::PositiveNumber);
  app.add_option("--primes", c.primes, "comma-separated primes overriding suite defaults");
  app.add_option("--L", c.L, "truncation: λ1, ℓ(λ) <= L")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", c.tol, "tolerance for numeric checks and unassigned mass")->check(CLI::PositiveNumber);
  app.add_option("--size-bound", c.size_bound, "largest module enumerated by brute force")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "sampler seed");

  std::string lambda_text, mu_text, nu_text, which = "P", method = "branching", kind_text = "classical", q_text = "2";
  int n = 1, p = 2, u = 0, sample_count = 0, tmax = -1;
  std::vector<std::string> suites;
  std::optional<std::string> mu_opt, nu_opt;

  auto* hl = app.add_subcommand("hl", "Hall-Littlewood P or Q in the monomial basis");
  hl->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
  hl->add_option("--n", n, "number of variables")->required()->check(CLI::PositiveNumber);
  hl->add_option("--which", which, "P or Q")->check(CLI::IsMember({"P", "Q"}));
  hl->add_option("--method", method, "branching or symmetrization")
      ->check(CLI::IsMember({"branching", "symmetrization"}));

  auto* hall = app.add_subcommand("hall", "symbolic structure constants u_mu * u_nu");
  hall->add_option("--kind", kind_text, "classical, alternating or hermitian");
  hall->add_option("--mu", mu_text, "partition")->required();
  hall->add_option("--nu", nu_text, "partition")->required();

  auto* en = app.add_subcommand("enumerate", "brute-force submodule counts");
  en->add_option("--kind", kind_text, "classical, alternating or hermitian");
  en->add_option("--lambda", lambda_text, "module type")->required();
  en->add_option("--mu", mu_opt, "quotient type");
  en->add_option("--nu", nu_opt, "sub type (classical) or paired type of M'/M'^perp");
  en->add_option("--p", p, "prime");

  auto* me = app.add_subcommand("measure", "u-measure table or samples");
  me->add_option("--kind", kind_text, "classical (nopairing), alternating or hermitian");
  me->add_option("--u", u, "nonnegative integer")->check(CLI::NonNegativeNumber);
  me->add_option("--q", q_text, "q > 1, integer or fraction");
  me->add_option("--sample", sample_count, "draw this many partitions instead of printing the table")
      ->check(CLI::NonNegativeNumber);

  auto* ve = app.add_subcommand("verify", "run identity suites");
  ve->add_option("--suite", suites, "suite id, repeatable, or 'all'")->required();
  ve->add_option("--tmax", tmax, "weight bound for the suite grids")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Report r;
    if (*hl) r = hl_command(lambda_text, n, which, method);
    else if (*hall) r = hall_command(parse_kind(kind_text), mu_text, nu_text);
    else if (*en) r = enumerate_command(parse_kind(kind_text), lambda_text, mu_opt, nu_opt, p, c);
    else if (*me) r = measure_command(parse_kind(kind_text), u, q_text, sample_count, c);
    else r = verify_command(suites, tmax, c);

    if (c.output.empty()) {
      write(r, c, out);
    } else {
      std::ofstream f(c.output);
      if (!f) {
        err << "error: cannot open " << c.output << "\n";
        return 2;
      }
      write(r, c, f);
    }
    return r.failed ? 1 : 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hallmod::cli
