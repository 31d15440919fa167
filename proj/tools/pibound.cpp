// Command-line front end: batch product evaluation, chain verification,
// exact zeta values, and prime sequences, with deterministic output in
// json-lines, csv, or aligned-table form.

#include "pibound/bounds.hpp"
#include "pibound/primes.hpp"
#include "pibound/products.hpp"
#include "pibound/sequences.hpp"
#include "pibound/serialize.hpp"
#include "pibound/zeta.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace pibound;

struct GlobalConfig {
  std::string format = "table";
  std::string out;
  unsigned threads = 1;
  std::uint64_t prime_limit = 0;  // floor for the sieve limit; 0 = auto
};

struct Rendered {
  std::string json;
  std::vector<std::string> cells;
  bool link_failed = false;
  bool indeterminate = false;
  bool mismatch = false;
};

// Ordered join: slot i is written only by the worker that claimed i, so the
// concatenation is independent of scheduling.
std::vector<Rendered> run_pool(std::size_t count, unsigned threads,
                               const std::function<Rendered(std::size_t)>& fn) {
  std::vector<Rendered> out(count);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  unsigned n = std::min<std::size_t>(threads, count);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

void write_payload(const GlobalConfig& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + g.out);
  f << payload;
}

void emit(const GlobalConfig& g, const std::vector<std::string>& columns,
          const std::vector<Rendered>& items) {
  std::string payload;
  if (g.format == "json") {
    for (const Rendered& it : items) {
      payload += it.json;
      payload += '\n';
    }
  } else if (g.format == "csv") {
    payload = csv_line(columns);
    for (const Rendered& it : items) payload += csv_line(it.cells);
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(items.size());
    for (const Rendered& it : items) rows.push_back(it.cells);
    payload = render_table(columns, rows);
  }
  write_payload(g, payload);
}

PrimeTable build_table(std::uint64_t needed, const GlobalConfig& g) {
  std::uint64_t limit = std::max<std::uint64_t>(needed, 100);
  if (g.prime_limit > 0) limit = std::max(limit, g.prime_limit);
  return PrimeTable::build(limit);
}

// "A:B[:geometric|linear[:step]]"; geometric multiplies (default x10),
// linear adds (default +1). Endpoints are included when landed on.
std::vector<std::uint64_t> expand_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t colon = spec.find(':', pos);
    if (colon == std::string::npos) colon = spec.size();
    parts.push_back(spec.substr(pos, colon - pos));
    pos = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 4)
    throw std::invalid_argument("--x-range expects A:B[:mode[:step]]");
  std::uint64_t lo, hi;
  try {
    lo = std::stoull(parts[0]);
    hi = std::stoull(parts[1]);
  } catch (const std::exception&) {
    throw std::invalid_argument("--x-range endpoints must be integers");
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("--x-range needs 1 <= A <= B");
  bool geometric = true;
  if (parts.size() >= 3 && !parts[2].empty()) {
    if (parts[2] == "geometric" || parts[2] == "geo") geometric = true;
    else if (parts[2] == "linear" || parts[2] == "lin") geometric = false;
    else throw std::invalid_argument("--x-range mode must be geometric or linear");
  }
  std::uint64_t step = geometric ? 10 : 1;
  if (parts.size() == 4) {
    try {
      step = std::stoull(parts[3]);
    } catch (const std::exception&) {
      throw std::invalid_argument("--x-range step must be an integer");
    }
  }
  if (geometric && step < 2) throw std::invalid_argument("geometric step must be >= 2");
  if (!geometric && step < 1) throw std::invalid_argument("linear step must be >= 1");
  std::vector<std::uint64_t> xs;
  for (std::uint64_t x = lo; x <= hi;) {
    xs.push_back(x);
    if (geometric) {
      if (x > hi / step) break;
      x *= step;
    } else {
      if (hi - x < step) break;
      x += step;
    }
  }
  return xs;
}

std::vector<std::uint64_t> gather_xs(const std::vector<std::uint64_t>& explicit_xs,
                                     const std::string& range) {
  std::vector<std::uint64_t> xs = explicit_xs;
  if (!range.empty()) {
    auto expanded = expand_range(range);
    xs.insert(xs.end(), expanded.begin(), expanded.end());
  }
  if (xs.empty()) throw std::invalid_argument("provide --x or --x-range");
  return xs;
}

std::uint64_t max_of(const std::vector<std::uint64_t>& xs) {
  std::uint64_t m = 0;
  for (auto x : xs) m = std::max(m, x);
  return m;
}

int cmd_product(const GlobalConfig& g, const std::string& kind_name,
                std::vector<unsigned> ss, const std::vector<std::uint64_t>& xs_in,
                const std::string& range, bool s_given) {
  auto kind = product_kind_from_string(kind_name);
  if (!kind) throw std::invalid_argument("--kind must be euler, ratio, or l-chi4");
  std::vector<std::uint64_t> xs = gather_xs(xs_in, range);
  if (ss.empty()) ss.push_back(*kind == ProductKind::euler ? 2u : 1u);
  if (*kind == ProductKind::l_chi4) {
    if (s_given) throw std::invalid_argument("--s does not apply to kind l-chi4");
    ss = {1};
  }
  if (*kind == ProductKind::euler)
    for (unsigned s : ss)
      if (s < 2) throw std::invalid_argument("--s must be >= 2 for the euler product");

  PrimeTable table = build_table(max_of(xs), g);
  struct Item { unsigned s; std::uint64_t x; };
  std::vector<Item> items;
  for (unsigned s : ss)
    for (std::uint64_t x : xs) items.push_back({s, x});

  auto rendered = run_pool(items.size(), g.threads, [&](std::size_t i) {
    const Item& it = items[i];
    ProductRecord rec;
    switch (*kind) {
      case ProductKind::euler: rec = euler_partial(it.s, it.x, table); break;
      case ProductKind::ratio: rec = ratio_partial(it.s, it.x, table); break;
      case ProductKind::l_chi4: rec = l_chi4_partial(it.x, table); break;
    }
    Rendered r;
    r.json = to_json(rec).dump();
    r.cells = product_cells(rec);
    return r;
  });
  emit(g, product_columns(), rendered);
  return 0;
}

int cmd_verify(const GlobalConfig& g, const std::string& chain_name,
               std::vector<unsigned> ss, const std::vector<std::uint64_t>& xs_in,
               const std::string& range, const std::string& mu_text,
               const std::string& eps_text, const std::string& c4_text,
               const std::string& safety_text, std::uint64_t terms) {
  auto chain = product_kind_from_string(chain_name);
  if (!chain || *chain == ProductKind::l_chi4)
    throw std::invalid_argument("--chain must be euler or ratio");
  std::vector<std::uint64_t> xs = gather_xs(xs_in, range);

  ChainOptions opt;
  opt.params.mu = mu_text.empty()
                      ? (*chain == ProductKind::euler ? Rational(2) : Rational(1))
                      : parse_rational(mu_text);
  opt.params.eps = parse_rational(eps_text);
  opt.params.validate();
  opt.c4 = parse_rational(c4_text);
  opt.safety = parse_rational(safety_text);
  opt.terms = terms;

  if (*chain == ProductKind::ratio) {
    for (unsigned s : ss)
      if (s != 1) throw std::invalid_argument("--s does not apply to chain ratio");
    ss = {1};
  } else {
    if (ss.empty()) ss.push_back(2);
    for (unsigned s : ss)
      if (s < 2) throw std::invalid_argument("--s must be >= 2 for the euler chain");
  }

  PrimeTable table = build_table(max_of(xs), g);

  // One zeta enclosure per s, shared read-only across workers.
  std::map<unsigned, RationalInterval> zeta_by_s;
  std::map<unsigned, std::uint64_t> terms_by_s;
  if (*chain == ProductKind::euler) {
    for (unsigned s : ss) {
      if (zeta_by_s.count(s)) continue;
      std::uint64_t t = terms ? terms : zeta_terms_for_width(s, Rational(1, 100000000));
      terms_by_s[s] = t;
      zeta_by_s[s] = zeta_interval(s, t);
    }
  }

  struct Item { unsigned s; std::uint64_t x; };
  std::vector<Item> items;
  for (unsigned s : ss)
    for (std::uint64_t x : xs) items.push_back({s, x});

  auto rendered = run_pool(items.size(), g.threads, [&](std::size_t i) {
    const Item& it = items[i];
    BoundReport rep;
    if (*chain == ProductKind::euler) {
      ChainOptions o = opt;
      o.terms = terms_by_s.at(it.s);
      rep = verify_chain_euler(it.s, it.x, o, table, zeta_by_s.at(it.s));
    } else {
      rep = verify_chain_ratio(it.x, opt, table);
    }
    Rendered r;
    r.json = to_json(rep).dump();
    r.cells = bound_cells(rep);
    for (const BoundLink& l : rep.links) {
      if (l.verdict == Verdict::fails) r.link_failed = true;
      if (l.verdict == Verdict::indeterminate) r.indeterminate = true;
    }
    return r;
  });

  emit(g, bound_columns(), rendered);
  bool failed = false, undecided = false;
  for (const Rendered& r : rendered) {
    failed = failed || r.link_failed;
    undecided = undecided || r.indeterminate;
  }
  if (undecided)
    std::cerr << "note: some links are indeterminate; rerun with more --terms\n";
  return failed ? 1 : 0;
}

int cmd_zeta_ratio(const GlobalConfig& g, unsigned n) {
  BernoulliCache cache(4 * n);
  Rational r = zeta_ratio_exact(n, cache);
  Json j;
  j["n"] = n;
  j["ratio"] = to_string(r);
  j["decimal"] = decimal_string(r, 20);
  Rendered item{j.dump(), {std::to_string(n), to_string(r), decimal_string(r, 20)}};
  emit(g, {"n", "ratio", "decimal"}, {item});
  return 0;
}

int cmd_zeta_bernoulli(const GlobalConfig& g, unsigned m) {
  BernoulliCache cache(std::max(m, 2u));
  const Rational& v = cache.at(m);
  Json j;
  j["m"] = m;
  j["bernoulli"] = to_string(v);
  j["decimal"] = decimal_string(v, 20);
  Rendered item{j.dump(), {std::to_string(m), to_string(v), decimal_string(v, 20)}};
  emit(g, {"m", "bernoulli", "decimal"}, {item});
  return 0;
}

int cmd_zeta_coefficient(const GlobalConfig& g, unsigned n) {
  BernoulliCache cache(2 * n);
  Rational v = zeta_even_coefficient(n, cache);
  Json j;
  j["n"] = n;
  j["coefficient"] = to_string(v);
  j["decimal"] = decimal_string(v, 20);
  Rendered item{j.dump(), {std::to_string(n), to_string(v), decimal_string(v, 20)}};
  emit(g, {"n", "coefficient", "decimal"}, {item});
  return 0;
}

int cmd_zeta_interval(const GlobalConfig& g, unsigned s, std::uint64_t terms) {
  if (terms == 0) terms = zeta_terms_for_width(s, Rational(1, 100000000));
  RationalInterval v = zeta_interval(s, terms);
  Json j;
  j["s"] = s;
  j["terms"] = terms;
  j["enclosure"] = interval_to_json(v);
  j["width_decimal"] = decimal_string(v.width(), 20);
  Rendered item{j.dump(),
                {std::to_string(s), std::to_string(terms), decimal_string(v.lo, 20),
                 decimal_string(v.hi, 20), decimal_string(v.width(), 20)}};
  emit(g, {"s", "terms", "lo", "hi", "width"}, {item});
  return 0;
}

int cmd_zeta_target(const GlobalConfig& g) {
  Rational v = l_chi4_target();
  Json j;
  j["target"] = to_string(v);
  j["decimal"] = decimal_string(v, 20);
  Rendered item{j.dump(), {to_string(v), decimal_string(v, 20)}};
  emit(g, {"target", "decimal"}, {item});
  return 0;
}

int cmd_sequence_euclid(const GlobalConfig& g, std::uint64_t max_n,
                        std::uint64_t trial_limit, unsigned rho_rounds,
                        std::uint64_t time_cap_ms) {
  if (max_n < 1) throw std::invalid_argument("--max must be >= 1");
  if (max_n > 25)
    std::cerr << "note: indices beyond 25 may exhaust the factoring budget\n";
  FactorEffort effort;
  effort.trial_limit = trial_limit;
  effort.rho_rounds = rho_rounds;
  effort.time_cap = std::chrono::milliseconds(time_cap_ms);

  auto rendered = run_pool(max_n, g.threads, [&](std::size_t i) {
    SequenceTerm term = euclid_term(i + 1, effort);
    Rendered r;
    r.json = to_json(term).dump();
    r.cells = sequence_cells(term);
    r.mismatch = term.paper_match == PaperMatch::mismatch;
    return r;
  });
  emit(g, sequence_columns(), rendered);

  std::vector<std::uint64_t> mismatches;
  for (std::size_t i = 0; i < rendered.size(); ++i)
    if (rendered[i].mismatch) mismatches.push_back(i + 1);
  if (!mismatches.empty()) {
    std::cerr << "warning: computed terms differ from the printed reference list at index";
    if (mismatches.size() > 1) std::cerr << "es";
    for (std::uint64_t n : mismatches) std::cerr << ' ' << n;
    std::cerr << " (reference list is prose, not recomputed ground truth)\n";
  }
  return 0;
}

int cmd_sequence_hermite(const GlobalConfig& g, std::uint64_t count,
                         std::uint64_t cap) {
  if (count < 1) throw std::invalid_argument("--count must be >= 1");
  PrimeTable table = build_table(cap, g);
  if (count > table.primes().size())
    throw std::invalid_argument("--count exceeds the primes below --cap");
  auto rendered = run_pool(count, g.threads, [&](std::size_t i) {
    SequenceTerm term = hermite_term(i + 1, table);
    Rendered r;
    r.json = to_json(term).dump();
    r.cells = sequence_cells(term);
    return r;
  });
  emit(g, sequence_columns(), rendered);
  return 0;
}

int cmd_sequence_harmonic(const GlobalConfig& g,
                          const std::vector<std::uint64_t>& xs) {
  if (xs.empty()) throw std::invalid_argument("provide at least one --x");
  PrimeTable table = build_table(max_of(xs), g);
  auto rendered = run_pool(xs.size(), g.threads, [&](std::size_t i) {
    HarmonicPoint p = prime_harmonic_sum(xs[i], table);
    Rendered r;
    r.json = to_json(p).dump();
    r.cells = harmonic_cells(p);
    return r;
  });
  emit(g, harmonic_columns(), rendered);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification of prime-counting lower bounds"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file");

  GlobalConfig global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--out", global.out, "write output to a file instead of stdout");
  app.add_option("--threads", global.threads,
                 "worker threads (0 = hardware); output is identical for any value")
      ->capture_default_str();
  app.add_option("--prime-limit", global.prime_limit,
                 "minimum sieve limit (auto-raised to cover requested x)")
      ->envname("PIBOUND_PRIME_LIMIT");

  // product
  auto* product = app.add_subcommand("product", "partial products as exact fractions");
  product->fallthrough();
  std::string p_kind;
  std::vector<unsigned> p_ss;
  std::vector<std::uint64_t> p_xs;
  std::string p_range;
  product->add_option("--kind", p_kind, "euler | ratio | l-chi4")->required();
  auto* p_s_opt = product->add_option("--s", p_ss, "exponent parameter (repeatable)");
  product->add_option("--x", p_xs, "cutoff (repeatable)");
  product->add_option("--x-range", p_range, "A:B[:geometric|linear[:step]]");

  // verify
  auto* verify = app.add_subcommand("verify", "inequality chain reports");
  verify->fallthrough();
  std::string v_chain;
  std::vector<unsigned> v_ss;
  std::vector<std::uint64_t> v_xs;
  std::string v_range, v_mu, v_eps = "1/10", v_c4 = "1", v_safety = "2";
  std::uint64_t v_terms = 0;
  verify->add_option("--chain", v_chain, "euler | ratio")->required();
  verify->add_option("--s", v_ss, "exponent parameter (euler chain, repeatable)");
  verify->add_option("--x", v_xs, "cutoff (repeatable)");
  verify->add_option("--x-range", v_range, "A:B[:geometric|linear[:step]]");
  verify->add_option("--mu", v_mu, "irrationality measure (default: 2 euler, 1 ratio)");
  verify->add_option("--eps", v_eps, "measure margin, exact rational")->capture_default_str();
  verify->add_option("--c4", v_c4, "ratio-chain difference constant")->capture_default_str();
  verify->add_option("--safety", v_safety, "ratio tail inflation factor")->capture_default_str();
  verify->add_option("--terms", v_terms, "zeta enclosure terms (0 = auto for width 1e-8)")
      ->capture_default_str();

  // zeta
  auto* zeta = app.add_subcommand("zeta", "exact zeta values and enclosures");
  zeta->fallthrough();
  zeta->require_subcommand(1);
  unsigned z_n = 1, z_m = 2, z_s = 2;
  std::uint64_t z_terms = 0;
  auto* z_ratio = zeta->add_subcommand("ratio", "zeta(2n)^2 / zeta(4n), exact");
  z_ratio->fallthrough();
  z_ratio->add_option("--n", z_n, "half-argument index")->check(CLI::Range(1u, 250u));
  auto* z_bern = zeta->add_subcommand("bernoulli", "Bernoulli number B_m");
  z_bern->fallthrough();
  z_bern->add_option("--m", z_m, "index")->check(CLI::Range(0u, 1000u));
  auto* z_coef = zeta->add_subcommand("coefficient", "r with zeta(2n) = r pi^(2n)");
  z_coef->fallthrough();
  z_coef->add_option("--n", z_n, "half-argument index")->check(CLI::Range(1u, 500u));
  auto* z_int = zeta->add_subcommand("interval", "rational enclosure of zeta(s)");
  z_int->fallthrough();
  z_int->add_option("--s", z_s, "integer argument >= 2")->check(CLI::Range(2u, 64u));
  z_int->add_option("--terms", z_terms, "partial-sum terms (0 = auto for width 1e-8)");
  auto* z_target = zeta->add_subcommand("target", "limit of the odd-character product");
  z_target->fallthrough();

  // sequence
  auto* sequence = app.add_subcommand("sequence", "prime sequences and harmonic sums");
  sequence->fallthrough();
  sequence->require_subcommand(1);
  std::uint64_t q_max = 15, q_trial = 1'000'000, q_time = 60'000;
  unsigned q_rho = 64;
  std::uint64_t h_count = 14, h_cap = 2000;
  std::vector<std::uint64_t> m_xs;
  auto* s_euclid = sequence->add_subcommand("euclid", "largest prime factor of n!+1");
  s_euclid->fallthrough();
  s_euclid->add_option("--max", q_max, "compute terms 1..max")->capture_default_str();
  s_euclid->add_option("--trial-limit", q_trial, "trial division bound")->capture_default_str();
  s_euclid->add_option("--rho-rounds", q_rho, "factoring restarts")->capture_default_str();
  s_euclid->add_option("--time-cap-ms", q_time, "factoring time budget per term")
      ->capture_default_str();
  auto* s_hermite = sequence->add_subcommand("hermite", "smallest prime factor of (p_k-1)!+1");
  s_hermite->fallthrough();
  s_hermite->add_option("--count", h_count, "compute terms 1..count")->capture_default_str();
  s_hermite->add_option("--cap", h_cap, "largest admissible p_k")->capture_default_str();
  auto* s_harm = sequence->add_subcommand("harmonic", "exact sum of 1/p for p <= x");
  s_harm->fallthrough();
  s_harm->add_option("--x", m_xs, "cutoff (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*product)
      return cmd_product(global, p_kind, p_ss, p_xs, p_range, p_s_opt->count() > 0);
    if (*verify)
      return cmd_verify(global, v_chain, v_ss, v_xs, v_range, v_mu, v_eps, v_c4,
                        v_safety, v_terms);
    if (*z_ratio) return cmd_zeta_ratio(global, z_n);
    if (*z_bern) return cmd_zeta_bernoulli(global, z_m);
    if (*z_coef) return cmd_zeta_coefficient(global, z_n);
    if (*z_int) return cmd_zeta_interval(global, z_s, z_terms);
    if (*z_target) return cmd_zeta_target(global);
    if (*s_euclid) return cmd_sequence_euclid(global, q_max, q_trial, q_rho, q_time);
    if (*s_hermite) return cmd_sequence_hermite(global, h_count, h_cap);
    if (*s_harm) return cmd_sequence_harmonic(global, m_xs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
