#include "bkp/cli.hpp"

#include <atomic>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "bkp/affine.hpp"
#include "bkp/hirota.hpp"
#include "bkp/kacschwarz.hpp"
#include "bkp/npoint.hpp"
#include "bkp/partitions.hpp"
#include "bkp/schurq.hpp"
#include "bkp/serialize.hpp"
#include "bkp/tau.hpp"
#include "bkp/wave.hpp"

namespace bkp {

void validate_config(const RunConfig& cfg) {
  if (cfg.r < 2 || cfg.r % 2 != 0)
    throw std::invalid_argument("config: r must be even and >= 2");
  if (cfg.beta_order < 1)
    throw std::invalid_argument("config: beta-order must be >= 1");
  if (cfg.depth < 1) throw std::invalid_argument("config: depth must be >= 1");
  if (cfg.weight < 1)
    throw std::invalid_argument("config: weight must be >= 1");
  if (cfg.kmax < 1) throw std::invalid_argument("config: kmax must be >= 1");
  if (cfg.threads < 1)
    throw std::invalid_argument("config: threads must be >= 1");
  if (cfg.format != "json" && cfg.format != "csv")
    throw std::invalid_argument("config: format must be json or csv");
}

std::vector<long> parse_mu(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("mu: empty partition text");
  std::vector<long> parts;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("mu: not an integer: '" + piece + "'");
    }
    if (used != piece.size())
      throw std::invalid_argument("mu: not an integer: '" + piece + "'");
    if (v <= 0)
      throw std::invalid_argument("mu: parts must be strictly positive");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("mu: empty partition text");
  return parts;
}

namespace {

json params_json(const RunConfig& cfg) {
  json p;
  p["r"] = cfg.r;
  p["beta_order"] = cfg.beta_order;
  p["depth"] = cfg.depth;
  p["weight"] = cfg.weight;
  p["kmax"] = cfg.kmax;
  return p;
}

void print_report(std::ostream& out, const std::string& suite,
                  const RunConfig& cfg, const std::vector<std::string>& ranges,
                  bool pass, const std::string& first_failure,
                  const json& extra_params = json::object()) {
  json rep;
  rep["suite"] = suite;
  json p = params_json(cfg);
  for (const auto& [k, v] : extra_params.items()) p[k] = v;
  rep["params"] = std::move(p);
  rep["checked_ranges"] = ranges;
  rep["status"] = pass ? "pass" : "fail";
  if (!pass) rep["first_failure"] = first_failure;
  out << rep.dump(2) << "\n";
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

// One hurwitz table row group: all beta exponents of one partition.
struct HurwitzRow {
  OddPartition mu;
  Scalar value;
};

int cmd_hurwitz(const RunConfig& cfg, int max_weight, std::ostream& out) {
  std::vector<OddPartition> mus;
  for (long w = 1; w <= max_weight; ++w)
    for (const auto& mu : odd_partitions(w)) mus.push_back(mu);

  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  std::vector<HurwitzRow> rows(mus.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < mus.size(); i = next.fetch_add(1)) {
      int D = static_cast<int>(mus[i].weight());
      rows[i] = {mus[i], hurwitz_connected(ap, mus[i], D)};
    }
  };
  if (cfg.threads <= 1 || mus.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int nt = std::min<int>(cfg.threads, static_cast<int>(mus.size()));
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (cfg.format == "csv") {
    out << "mu,b,g,coefficient\n";
    for (const auto& row : rows) {
      for (int b = 0; b <= cfg.beta_order; ++b) {
        Rat c = row.value.coeff(0, b);
        if (c == Rat(0)) continue;
        std::string mu_text = row.mu.to_string();
        mu_text = mu_text.substr(1, mu_text.size() - 2);  // strip parens
        auto g = rh_genus(row.mu, b, cfg.r);
        out << csv_quote(mu_text) << "," << b << ","
            << (g ? std::to_string(*g) : std::string()) << "," << c.to_string()
            << "\n";
      }
    }
  } else {
    json rep;
    rep["command"] = "hurwitz";
    json p = params_json(cfg);
    p["max_weight"] = max_weight;
    rep["params"] = std::move(p);
    json jrows = json::array();
    for (const auto& row : rows) {
      for (int b = 0; b <= cfg.beta_order; ++b) {
        Rat c = row.value.coeff(0, b);
        if (c == Rat(0)) continue;
        std::string mu_text = row.mu.to_string();
        json jr;
        jr["mu"] = mu_text.substr(1, mu_text.size() - 2);
        jr["b"] = b;
        auto g = rh_genus(row.mu, b, cfg.r);
        if (g)
          jr["g"] = *g;
        else
          jr["g"] = nullptr;
        jr["coefficient"] = c.to_string();
        jrows.push_back(std::move(jr));
      }
    }
    rep["rows"] = std::move(jrows);
    out << rep.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify_ks(const RunConfig& cfg, std::ostream& out) {
  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  KSReport rep = verify_theorem(ap, cfg.kmax, cfg.depth);
  print_report(out, "ks", cfg, rep.checked_ranges, rep.pass,
               rep.first_failure);
  return rep.pass ? 0 : 1;
}

int cmd_verify_hirota(const RunConfig& cfg, long depth, std::ostream& out) {
  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  HirotaReport rep = hirota_check(ap, cfg.weight, cfg.beta_order, depth);
  std::vector<std::string> ranges;
  {
    std::ostringstream os;
    os << "W=" << rep.W << ", shift depth I=" << rep.depth << ", "
       << rep.checked_monomials << " bilinear monomials";
    ranges.push_back(os.str());
  }
  json extra;
  extra["depth"] = depth;
  print_report(out, "hirota", cfg, ranges, rep.pass, rep.first_failure, extra);
  return rep.pass ? 0 : 1;
}

int cmd_verify_wave(const RunConfig& cfg, std::ostream& out) {
  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  SpanReport rep = span_check(ap, cfg.kmax, cfg.depth, cfg.weight);
  print_report(out, "wave", cfg, rep.checked_ranges, rep.pass,
               rep.first_failure);
  return rep.pass ? 0 : 1;
}

int cmd_verify_tau_oracle(const RunConfig& cfg, int max_weight,
                          std::ostream& out) {
  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  auto mus = strict_partitions_up_to(max_weight);
  std::vector<char> ok(mus.size(), 1);
  std::vector<std::string> diffs(mus.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < mus.size(); i = next.fetch_add(1)) {
      Scalar lhs = tau_coeff(ap, mus[i]);
      Scalar rhs = oracle_coeff(ap, mus[i]);
      if (lhs == rhs) continue;
      ok[i] = 0;
      diffs[i] = "mu=" + mus[i].to_string() + ": expansion " +
                 lhs.to_string() + " vs oracle " + rhs.to_string();
    }
  };
  if (cfg.threads <= 1 || mus.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int nt = std::min<int>(cfg.threads, static_cast<int>(mus.size()));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  bool pass = true;
  std::string first;
  for (size_t i = 0; i < mus.size(); ++i) {
    if (ok[i]) continue;
    pass = false;
    first = diffs[i];
    break;
  }
  std::vector<std::string> ranges;
  {
    std::ostringstream os;
    os << "strict partitions 1 <= |mu| <= " << max_weight << " ("
       << mus.size() << " of them)";
    ranges.push_back(os.str());
  }
  json extra;
  extra["max_weight"] = max_weight;
  print_report(out, "tau-oracle", cfg, ranges, pass, first, extra);
  return pass ? 0 : 1;
}

int cmd_verify_npoint(const RunConfig& cfg, int D, std::ostream& out) {
  AffineProvider ap = substituted_p(spin_provider(cfg.r, cfg.beta_order),
                                    Rat(1));
  bool pass = true;
  std::string first;
  long checked = 0;
  for (int n = 2; n <= 3 && pass; ++n) {
    MultiLaurent full = connected_npoint(ap, n, D, NPointVariant::full);
    MultiLaurent simp = connected_npoint(ap, n, D, NPointVariant::simplified);
    // The two variants agree where the generating series carries Hurwitz
    // data: every component strictly negative, total degree within the bound.
    std::vector<int> e(static_cast<size_t>(n), -1);
    while (true) {
      long sum = 0;
      for (int c : e) sum += -c;
      if (sum <= D) {
        ++checked;
        Scalar lhs = full.coeff(e);
        Scalar rhs = simp.coeff(e);
        if (!(lhs == rhs)) {
          pass = false;
          std::ostringstream os;
          os << "n=" << n << " exponent (";
          for (size_t i = 0; i < e.size(); ++i)
            os << (i ? "," : "") << e[i];
          os << "): full " << lhs.to_string() << " vs simplified "
             << rhs.to_string();
          first = os.str();
          break;
        }
      }
      // next exponent vector, components in [-D, -1]
      size_t i = 0;
      for (; i < e.size(); ++i) {
        if (e[i] > -D) {
          --e[i];
          for (size_t j = 0; j < i; ++j) e[j] = -1;
          break;
        }
      }
      if (i == e.size()) break;
    }
  }
  std::vector<std::string> ranges;
  {
    std::ostringstream os;
    os << "n=2,3 all-negative exponents, |e| <= " << D << " (" << checked
       << " coefficients)";
    ranges.push_back(os.str());
  }
  json extra;
  extra["D"] = D;
  print_report(out, "npoint-consistency", cfg, ranges, pass, first, extra);
  return pass ? 0 : 1;
}

int cmd_dump_affine(const RunConfig& cfg, int nmax, std::ostream& out) {
  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  if (cfg.format == "csv") {
    out << "n,m,p,beta,coefficient\n";
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= nmax; ++m)
        for (const auto& [key, c] : ap.a(n, m).terms())
          out << n << "," << m << "," << key.first << "," << key.second << ","
              << c.to_string() << "\n";
    return 0;
  }
  json rep;
  rep["command"] = "dump-affine";
  json p = params_json(cfg);
  p["nmax"] = nmax;
  rep["params"] = std::move(p);
  json table = json::array();
  for (int n = 0; n <= nmax; ++n) {
    json rowj = json::array();
    for (int m = 0; m <= nmax; ++m)
      rowj.push_back(scalar_to_json(ap.a(n, m), cfg.beta_order));
    table.push_back(std::move(rowj));
  }
  rep["table"] = std::move(table);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_dump_schurq(const RunConfig& cfg, const std::vector<long>& mu_parts,
                    std::ostream& out) {
  StrictPartition mu;
  mu.parts = mu_parts;
  for (size_t i = 1; i < mu.parts.size(); ++i)
    if (mu.parts[i - 1] <= mu.parts[i])
      throw std::invalid_argument("schurq: mu must be strictly decreasing");
  TPoly q = q_strict(mu, cfg.weight);
  if (cfg.format == "csv") {
    out << tpoly_to_csv(q);
    return 0;
  }
  json rep;
  rep["command"] = "dump-schurq";
  json p = params_json(cfg);
  p["mu"] = mu.to_string();
  rep["params"] = std::move(p);
  rep["value"] = tpoly_to_json(q, cfg.beta_order);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_dump_tau(const RunConfig& cfg, std::ostream& out) {
  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  TPoly tau = tau_expand(ap, cfg.weight);
  if (cfg.format == "csv") {
    out << tpoly_to_csv(tau);
    return 0;
  }
  json rep;
  rep["command"] = "dump-tau";
  rep["params"] = params_json(cfg);
  rep["value"] = tpoly_to_json(tau, cfg.beta_order);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_dump_phi(const RunConfig& cfg, long k, std::ostream& out) {
  AffineProvider ap = spin_provider(cfg.r, cfg.beta_order);
  LaurentZ phi = phi_basis(ap, k, cfg.depth);
  if (cfg.format == "csv") {
    out << laurent_to_csv(phi);
    return 0;
  }
  json rep;
  rep["command"] = "dump-phi";
  json p = params_json(cfg);
  p["k"] = k;
  rep["params"] = std::move(p);
  rep["value"] = laurent_to_json(phi, cfg.beta_order);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_schurq_text(const RunConfig& cfg, const std::vector<long>& mu_parts,
                    std::ostream& out) {
  StrictPartition mu;
  mu.parts = mu_parts;
  for (size_t i = 1; i < mu.parts.size(); ++i)
    if (mu.parts[i - 1] <= mu.parts[i])
      throw std::invalid_argument("schurq: mu must be strictly decreasing");
  out << "Q_" << mu.to_string() << " = "
      << q_strict(mu, cfg.weight).to_string() << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  std::string mu_text;
  int nmax = 3;
  long phi_k = 0;
  int max_weight = -1;  // -1: follow cfg.weight

  CLI::App app{
      "Exact BKP tau-function toolkit: spin single Hurwitz numbers with "
      "completed cycles"};
  app.set_config("--config", "", "TOML config file (flags take precedence)");
  app.require_subcommand(1);
  app.fallthrough();

  auto* opt_r = app.add_option("--r", cfg.r, "spin parameter (even, >= 2)")
                    ->capture_default_str();
  app.add_option("--beta-order", cfg.beta_order, "beta truncation order")
      ->capture_default_str();
  auto* opt_depth =
      app.add_option("--depth", cfg.depth, "z-window depth I")
          ->capture_default_str();
  app.add_option("--weight", cfg.weight, "time-weight cutoff W")
      ->capture_default_str();
  app.add_option("--kmax", cfg.kmax, "largest basis index checked")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for table rows")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format: json or csv")
      ->capture_default_str();
  (void)opt_r;

  auto* hurwitz = app.add_subcommand(
      "hurwitz", "connected spin Hurwitz table over odd partitions");
  hurwitz->fallthrough();
  hurwitz->add_option("--max-weight", max_weight,
                      "largest |mu| tabulated (default: --weight)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite;
  verify
      ->add_option("suite", suite,
                   "one of: ks, hirota, wave, tau-oracle, npoint-consistency")
      ->required()
      ->check(CLI::IsMember(
          {"ks", "hirota", "wave", "tau-oracle", "npoint-consistency"}));
  verify->add_option("--max-weight", max_weight,
                     "tau-oracle: largest |mu| compared (default: --weight)");

  auto* dump = app.add_subcommand("dump", "serialize one object");
  dump->fallthrough();
  std::string what;
  dump->add_option("what", what, "one of: affine, schurq, tau, phi")
      ->required()
      ->check(CLI::IsMember({"affine", "schurq", "tau", "phi"}));
  dump->add_option("--nmax", nmax, "affine: table size")
      ->capture_default_str();
  dump->add_option("--mu", mu_text, "schurq: strict partition, e.g. 3,1");
  dump->add_option("--k", phi_k, "phi: basis index")->capture_default_str();

  auto* schurq_cmd = app.add_subcommand(
      "schurq", "print one Schur Q-polynomial as a sorted monomial list");
  schurq_cmd->fallthrough();
  schurq_cmd->add_option("--mu", mu_text, "strict partition, e.g. 3,1")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    validate_config(cfg);
    if (max_weight < 0) max_weight = cfg.weight;

    if (*hurwitz) return cmd_hurwitz(cfg, max_weight, out);
    if (*verify) {
      if (suite == "ks") return cmd_verify_ks(cfg, out);
      if (suite == "hirota") {
        // The shift depth dominates the cost (tau runs to weight W + I);
        // default to the minimal exact window I = W unless --depth was given.
        long I = opt_depth->count() > 0 ? cfg.depth : cfg.weight;
        return cmd_verify_hirota(cfg, I, out);
      }
      if (suite == "wave") return cmd_verify_wave(cfg, out);
      if (suite == "tau-oracle")
        return cmd_verify_tau_oracle(cfg, max_weight, out);
      // npoint-consistency: the exponent bound defaults to 8 independently
      // of the series depth unless --depth was given.
      int D = opt_depth->count() > 0 ? static_cast<int>(cfg.depth) : 8;
      return cmd_verify_npoint(cfg, D, out);
    }
    if (*dump) {
      if (what == "affine") return cmd_dump_affine(cfg, nmax, out);
      if (what == "schurq") {
        if (mu_text.empty())
          throw std::invalid_argument("dump schurq: --mu is required");
        return cmd_dump_schurq(cfg, parse_mu(mu_text), out);
      }
      if (what == "tau") return cmd_dump_tau(cfg, out);
      return cmd_dump_phi(cfg, phi_k, out);
    }
    if (*schurq_cmd) return cmd_schurq_text(cfg, parse_mu(mu_text), out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bkp
