// Command-line front end: computes Hilbert and Frobenius tables, C_{n,k}, explicit bases, and
// runs the verification checks. Exit codes: 0 pass, 1 failure, 2 usage error, 3 resource refusal.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "scoin/coinvariant/coinvariant.hpp"
#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/core/errors.hpp"
#include "scoin/harness/checks.hpp"
#include "scoin/harness/config.hpp"
#include "scoin/harness/file_cache.hpp"
#include "scoin/harness/properties.hpp"
#include "scoin/harness/report.hpp"
#include "scoin/harness/version.hpp"
#include "scoin/symfunc/symfn.hpp"

using namespace scoin;
using harness::Report;
using harness::Status;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitResource = 3;

struct Globals {
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
  bool force = false;
  std::uint32_t seed = 20240611;
  bool stats = false;
  std::string config;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::string monomial_text(int n, const comb::ExponentVec& a, const comb::Subset& J) {
  super::SuperMonomial m;
  for (int i = 0; i < n; ++i) m.exps.set(i, a[static_cast<std::size_t>(i)]);
  m.thetas = J.mask();
  return super::SuperElement::monomial(n, m).to_string();
}

Report base_report(const std::string& name, std::vector<std::pair<std::string, std::string>> params) {
  Report r;
  r.check = name;
  r.parameters = std::move(params);
  r.version = harness::kToolVersion;
  return r;
}

Report from_verdict(Report r, const Verdict& v) {
  r.status = v.pass ? Status::pass : Status::fail;
  r.witnesses.insert(r.witnesses.end(), v.witnesses.begin(), v.witnesses.end());
  r.notes.insert(r.notes.end(), v.notes.begin(), v.notes.end());
  return r;
}

int exit_code(const std::vector<Report>& reports) {
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.status == Status::fail) return kExitFail;
    skipped = skipped || r.status == Status::skipped;
  }
  return skipped ? kExitResource : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superspace coinvariant computations and verification checks"};
  app.set_version_flag("--version", harness::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the verb
  Globals g;
  app.add_option("--format", g.format, "Output format: json, tsv or latex")->check(CLI::IsMember({"json", "tsv", "latex"}));
  app.add_option("--cache", g.cache_dir, "Cache directory (default: SCOIN_CACHE_DIR or the user cache directory)");
  app.add_flag("--no-cache", g.no_cache, "Compute everything afresh and write nothing");
  app.add_option("--jobs", g.jobs, "Worker threads for bidegree-parallel work")->check(CLI::PositiveNumber);
  app.add_flag("--force", g.force, "Run past the configured caps");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_flag("--stats", g.stats, "Include timing and cache hits in the output");
  app.add_option("--config", g.config, "key=value file with caps and defaults (also SCOIN_CONFIG)");

  int n = 0, k = 0;
  std::string engine_name = "auto", ideal = "SI", stat = "syt";
  auto* hilbert = app.add_subcommand("hilbert", "Bigraded Hilbert table of the quotient");
  hilbert->add_option("N", n, "Number of variables")->required()->check(CLI::PositiveNumber);
  hilbert->add_option("--engine", engine_name, "auto, full or artin")->check(CLI::IsMember({"auto", "full", "artin"}));
  hilbert->add_option("--ideal", ideal, "SI (superspace coinvariants) or I (classical)")->check(CLI::IsMember({"SI", "I"}));

  auto* frobenius = app.add_subcommand("frobenius", "Graded Frobenius image of SR_N by bidegree");
  frobenius->add_option("N", n, "Number of variables")->required()->check(CLI::PositiveNumber);

  auto* cnk = app.add_subcommand("cnk", "Schur expansion of C_{N,K}(x;q)");
  cnk->add_option("N", n)->required()->check(CLI::PositiveNumber);
  cnk->add_option("K", k)->required()->check(CLI::PositiveNumber);
  cnk->add_option("--stat", stat, "syt, or an ordered multiset partition statistic: inv, maj, dinv, minimaj")
      ->check(CLI::IsMember({"syt", "inv", "maj", "dinv", "minimaj"}));

  std::string basis_kind, J_text, mu_text;
  auto* basis = app.add_subcommand("basis", "List and verify an explicit basis");
  basis->add_option("KIND", basis_kind, "artin, colon or parabolic")->required()->check(CLI::IsMember({"artin", "colon", "parabolic"}));
  basis->add_option("--n", n, "Number of variables (artin, colon)")->check(CLI::PositiveNumber);
  basis->add_option("--J", J_text, "Subset for the colon ideal, e.g. 2,3");
  basis->add_option("--mu", mu_text, "Partition for the parabolic basis, e.g. 2,1");

  std::string check;
  int cases = 1000;
  auto* verify = app.add_subcommand("verify", "Run a verification check, 'all', or 'properties'");
  verify->add_option("CHECK", check, "Check name, all, or properties")->required();
  verify->add_option("--n", n, "Size parameter")->required()->check(CLI::PositiveNumber);
  verify->add_option("--cases", cases, "Cases per property suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    std::map<std::string, std::string> config;
    if (g.config.empty())
      if (const char* c = std::getenv("SCOIN_CONFIG"); c && *c) g.config = c;
    if (!g.config.empty()) config = harness::load_config(g.config);
    harness::apply_limits(config);
    // config supplies defaults; explicit flags win
    if (config.count("format") && app.get_option("--format")->count() == 0) g.format = config["format"];
    if (config.count("jobs") && app.get_option("--jobs")->count() == 0) g.jobs = std::stoi(config["jobs"]);
    if (config.count("seed") && app.get_option("--seed")->count() == 0) g.seed = static_cast<std::uint32_t>(std::stoul(config["seed"]));
    if (config.count("cache") && app.get_option("--cache")->count() == 0) g.cache_dir = config["cache"];
    const auto format = harness::parse_format(g.format);

    std::unique_ptr<harness::FileRankCache> file_cache;
    if (!g.no_cache) file_cache = std::make_unique<harness::FileRankCache>(g.cache_dir.empty() ? harness::default_cache_dir() : std::filesystem::path(g.cache_dir));

    harness::RunContext ctx;
    ctx.jobs = g.jobs;
    ctx.cache = file_cache.get();
    ctx.force = g.force;
    ctx.seed = g.seed;

    std::vector<Report> reports;
    const auto start = std::chrono::steady_clock::now();

    if (*verify) {
      if (check == "properties") {
        reports.push_back(harness::properties_report(harness::run_property_suites(g.seed, cases, n), g.seed));
      } else if (check == "all") {
        for (const auto& name : harness::check_names()) reports.push_back(harness::run({name, n, {}}, ctx));
      } else {
        reports.push_back(harness::run({check, n, {}}, ctx));
      }
    } else {
      harness::CapLift lift(g.force);
      try {
        if (*hilbert) {
          const auto spec = ideal == "SI" ? coinv::IdealSpec::superspace_coinvariant(n) : coinv::IdealSpec::classical_coinvariant(n);
          harness::CountingCache counter(ctx.cache);
          coinv::HilbertOptions opts;
          opts.engine = engine_name == "full" ? coinv::EngineKind::full
                        : engine_name == "artin" ? coinv::EngineKind::artin
                                                 : coinv::EngineKind::automatic;
          opts.jobs = g.jobs;
          opts.cache = &counter;
          const auto t = coinv::quotient_hilbert(spec, opts);
          Report r = base_report("hilbert", {{"n", std::to_string(n)}, {"ideal", ideal}, {"engine", engine_name}});
          r.tables.push_back(harness::bidegree_table(t, "dim of the quotient in bidegree (i, j)"));
          r.notes.push_back("total dimension " + std::to_string(t.total()));
          r.cache_hits = counter.hits();
          reports.push_back(r);
        } else if (*frobenius) {
          const auto f = coinv::frobenius_reconstruct(n);
          Report r = base_report("frobenius", {{"n", std::to_string(n)}});
          harness::Table tab = harness::frobenius_table(f, "grFrob(SR_" + std::to_string(n) + ") by bidegree");
          r.tables.push_back(tab);
          reports.push_back(r);
        } else if (*cnk) {
          if (k > n) throw std::invalid_argument("cnk needs K <= N");
          const auto f = stat == "syt" ? sym::cnk_syt(n, k) : sym::to_basis(sym::cnk_omp(n, k, comb::parse_omp_stat(stat)), sym::Basis::s);
          Report r = base_report("cnk", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"stat", stat}});
          r.tables.push_back({"C_{" + std::to_string(n) + "," + std::to_string(k) + "}(x;q)", {{"Schur expansion"}, {f.to_string()}},
                              {{"C_{" + std::to_string(n) + "," + std::to_string(k) + "}"}, {f.to_latex()}}});
          reports.push_back(r);
        } else if (*basis) {
          harness::Table tab{"basis elements", {{"bidegree", "element"}}, {}};
          auto add = [&](int nn, const comb::ExponentVec& a, const comb::Subset& J) {
            int d = 0;
            for (int x : a) d += x;
            tab.rows.push_back({"(" + std::to_string(d) + "," + std::to_string(J.size()) + ")", monomial_text(nn, a, J)});
          };
          if (basis_kind == "artin") {
            if (n < 1) throw std::invalid_argument("basis artin needs --n");
            Report r = base_report("basis", {{"kind", "artin"}, {"n", std::to_string(n)}});
            for (const auto& J : comb::all_subsets(n))
              for (const auto& a : comb::enumerate_artin(J)) add(n, a, J);
            r = from_verdict(r, coinv::verify_artin_basis(n));
            r.tables.push_back(tab);
            reports.push_back(r);
          } else if (basis_kind == "colon") {
            if (n < 1) throw std::invalid_argument("basis colon needs --n");
            const comb::Subset J(n, parse_list(J_text));
            Report r = base_report("basis", {{"kind", "colon"}, {"n", std::to_string(n)}, {"J", J.to_string()}});
            const comb::Subset empty(n, {});
            for (const auto& a : comb::enumerate_artin(J)) add(n, a, empty);
            r = from_verdict(r, coinv::verify_colon_basis(J));
            r.tables.push_back(tab);
            reports.push_back(r);
          } else {
            const comb::Partition mu(parse_list(mu_text));
            if (mu.empty()) throw std::invalid_argument("basis parabolic needs --mu");
            Report r = base_report("basis", {{"kind", "parabolic"}, {"mu", mu.to_string()}});
            for (const auto& sp : comb::signed_partitions_of(mu)) {
              const comb::Subset J = comb::j_of_signed(sp);
              for (const auto& a : comb::enumerate_signed_artin(sp)) add(mu.size(), a, J);
            }
            tab.caption = "eps_mu applied to these monomials";
            r = from_verdict(r, coinv::verify_parabolic_basis(mu));
            r.tables.push_back(tab);
            reports.push_back(r);
          }
        }
      } catch (const ResourceError& e) {
        Report r = base_report(app.get_subcommands().front()->get_name(), {{"n", std::to_string(n)}});
        r.status = Status::skipped;
        r.notes.push_back(std::string("resource limit: ") + e.what() + "; pass --force to run it anyway");
        reports.push_back(r);
      } catch (const IntegrityError& e) {
        Report r = base_report(app.get_subcommands().front()->get_name(), {{"n", std::to_string(n)}});
        r.status = Status::fail;
        r.witnesses.push_back(std::string("integrity error: ") + e.what());
        reports.push_back(r);
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (auto& r : reports) r.seconds = secs;
    }

    harness::EmitOptions eo;
    eo.stats = g.stats;
    std::cout << harness::emit(reports, format, eo);
    return exit_code(reports);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
