// kostka: exact counts, certificates and numeric checks for Schubert
// problems of lines.
//
// Exit codes: 0 success, 1 usage/parse error, 2 domain failure,
// 3 inconclusive quadrature.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kostka/analysis.hpp"
#include "kostka/certify.hpp"
#include "kostka/kostka.hpp"
#include "kostka/problem.hpp"
#include "kostka/tableaux.hpp"

namespace {

constexpr const char* kVersion = "kostka 1.0.0";

struct Config {
  std::uint64_t enumeration_cap = kostka::kDefaultEnumerationCap;
  int points = 8192;
  std::string format = "text";
  std::string cache_file;
  int scan_limit = 26;
  std::uint64_t node_budget = kostka::kDefaultNodeBudget;
  int threads = 1;
};

kostka::SchubertProblem parse_or_exit(const std::string& text) {
  try {
    return kostka::SchubertProblem::parse(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(1);
  }
}

void load_cache(kostka::KostkaCache& cache, const Config& cfg) {
  if (cfg.cache_file.empty()) return;
  std::ifstream in(cfg.cache_file);
  if (in) cache.load(in);
}

void save_cache(const kostka::KostkaCache& cache, const Config& cfg) {
  if (cfg.cache_file.empty()) return;
  std::ofstream out(cfg.cache_file, std::ios::trunc);
  if (out) cache.save(out);
}

int cmd_compute(const std::string& problem_text, const Config& cfg) {
  kostka::SchubertProblem p = parse_or_exit(problem_text);
  kostka::KostkaCache cache;
  load_cache(cache, cfg);
  auto result = kostka::kostka_number_with_method(p, cache);
  save_cache(cache, cfg);
  if (cfg.format == "json") {
    nlohmann::json j{{"problem", p.parts()},
                     {"kostka", result.value.str()},
                     {"method", kostka::method_label(result)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << result.value.str() << " (" << kostka::method_label(result) << ")\n";
  }
  if (!kostka::is_valid(p)) {
    std::cerr << "warning: (" << p.to_string() << ") is invalid; count is zero\n";
    return 2;
  }
  return 0;
}

int cmd_enumerate(const std::string& problem_text, const Config& cfg) {
  kostka::SchubertProblem p = parse_or_exit(problem_text);
  try {
    auto tableaux = kostka::enumerate_tableaux(p, cfg.enumeration_cap);
    if (cfg.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& t : tableaux) j.push_back({t.row1, t.row2});
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "# " << tableaux.size() << " tableaux of content (" << p.to_string() << ")\n";
      for (const auto& t : tableaux) std::cout << t.ascii() << "\n\n";
    }
  } catch (const kostka::EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_table1(int mu_max, const Config& cfg) {
  if (mu_max < 2) {
    std::cerr << "error: --mu-max must be >= 2\n";
    return 1;
  }
  kostka::KostkaCache cache;
  load_cache(cache, cfg);
  std::cout << "# " << kVersion << " table1\n";
  std::cout << "mu\tK(2^mu,4)\tK(2^mu,1,1)\tdifference\n";
  for (int mu = 2; mu <= mu_max; ++mu) {
    std::vector<int> twos(static_cast<std::size_t>(mu), 2);
    std::vector<int> with4 = twos, with11 = twos;
    with4.push_back(4);
    with11.push_back(1);
    with11.push_back(1);
    auto k4 = kostka::kostka_number(kostka::SchubertProblem(with4), cache);
    auto k11 = kostka::kostka_number(kostka::SchubertProblem(with11), cache);
    std::cout << mu << '\t' << k4.str() << '\t' << k11.str() << '\t' << kostka::KostkaValue(k4 - k11).str() << "\n";
  }
  save_cache(cache, cfg);
  return 0;
}

// all canonical problems (descending partitions of even sums) up to sum_max
void for_each_problem(int sum_max, const std::function<void(const kostka::SchubertProblem&)>& fn) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      fn(kostka::SchubertProblem(std::vector<int>(parts)));
      return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      parts.push_back(next);
      rec(remaining - next, next);
      parts.pop_back();
    }
  };
  for (int s = 2; s <= sum_max; s += 2) rec(s, s);
}

// per-problem checks; returns failure lines (empty when clean)
std::vector<std::string> scan_one(const kostka::SchubertProblem& p, kostka::KostkaCache& cache,
                                  const Config& cfg, std::uint64_t& tableaux_seen) {
  std::vector<std::string> bad;
  auto k = kostka::kostka_number(p, cache);
  auto enumerated = kostka::count_tableaux(p, cfg.enumeration_cap);
  if (enumerated != k) {
    bad.push_back("FAIL oracle (" + p.to_string() + "): enumeration " + enumerated.str() +
                  " vs recursion " + k.str());
  }
  if (kostka::is_valid(p)) {
    tableaux_seen = enumerated.convert_to<std::uint64_t>();
    if (k <= 0) bad.push_back("FAIL positivity (" + p.to_string() + ")");
    if (kostka::kostka_number(kostka::reduce(p).final, cache) != k) {
      bad.push_back("FAIL reduction invariance (" + p.to_string() + ")");
    }
    for (int i = 0; i < p.m(); ++i) {
      for (int j = i + 1; j < p.m(); ++j) {
        auto [c1, c2] = kostka::schubert_split(p, i, j);
        if (kostka::kostka_number(c1, cache) + kostka::kostka_number(c2, cache) != k) {
          bad.push_back("FAIL split (" + p.to_string() + ") at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
        }
      }
    }
  } else if (k != 0) {
    bad.push_back("FAIL invalid problem (" + p.to_string() + ") has nonzero count");
  }
  return bad;
}

int cmd_scan(int sum_max, const Config& cfg) {
  if (sum_max > cfg.scan_limit) {
    std::cerr << "error: scan of sum " << sum_max << " exceeds the safety limit "
              << cfg.scan_limit << " (raise with --limit)\n";
    return 1;
  }
  std::vector<kostka::SchubertProblem> problems;
  for_each_problem(sum_max, [&](const kostka::SchubertProblem& p) { problems.push_back(p); });
  std::sort(problems.begin(), problems.end());

  std::uint64_t valid = 0, tableaux_total = 0, failures = 0;
  std::vector<std::vector<std::string>> bad(problems.size());
  std::vector<std::uint64_t> counts(problems.size(), 0);
  kostka::KostkaCache shared;
  load_cache(shared, cfg);

  int workers = std::max(1, cfg.threads);
  if (workers == 1) {
    for (std::size_t idx = 0; idx < problems.size(); ++idx) {
      bad[idx] = scan_one(problems[idx], shared, cfg, counts[idx]);
    }
  } else {
    // per-worker caches, merged afterwards; output order stays canonical
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<kostka::KostkaCache> locals(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < problems.size();) {
          bad[idx] = scan_one(problems[idx], locals[static_cast<std::size_t>(w)], cfg,
                              counts[idx]);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& local : locals) {
      std::stringstream buffer;
      local.save(buffer);
      shared.load(buffer);
    }
  }

  for (std::size_t idx = 0; idx < problems.size(); ++idx) {
    for (const auto& line : bad[idx]) std::cout << line << "\n";
    failures += bad[idx].size();
    if (kostka::is_valid(problems[idx])) {
      ++valid;
      tableaux_total += counts[idx];
    }
  }
  save_cache(shared, cfg);
  std::cout << "# " << kVersion << " scan\n";
  std::cout << "problems\t" << problems.size() << "\nvalid\t" << valid << "\ntableaux\t"
            << tableaux_total << "\nfailures\t" << failures << "\n";
  return failures == 0 ? 0 : 2;
}

int cmd_certify(const std::string& problem_text, const std::string& out_path, const Config& cfg) {
  kostka::SchubertProblem p = parse_or_exit(problem_text);
  if (!kostka::is_valid(p)) {
    std::cerr << "error: (" << p.to_string() << ") is invalid\n";
    return 2;
  }
  kostka::Certificate cert = kostka::certify(p, cfg.node_budget);
  nlohmann::json j = cert.to_json();
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << j.dump(2) << "\n";
    std::cout << "certified (" << p.to_string() << "): count " << cert.root().kostka << ", "
              << cert.size() << " nodes -> " << out_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& mode_name, const Config& cfg) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return 1;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return 2;
  }
  kostka::VerifyMode mode = kostka::VerifyMode::Recursion;
  if (mode_name == "enumeration") mode = kostka::VerifyMode::Enumeration;
  try {
    kostka::Certificate cert = kostka::Certificate::from_json(j, cfg.node_budget);
    auto report = kostka::verify_certificate(cert, mode);
    if (report.ok) {
      std::cout << "OK: " << report.nodes_checked << " nodes verified\n";
      return 0;
    }
    for (const auto& f : report.failures) {
      std::cout << "FAIL node " << f.node << " (" << f.problem << "): " << f.reason << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_integral(const std::string& problem_text, const Config& cfg) {
  kostka::SchubertProblem p = parse_or_exit(problem_text);
  if (!kostka::is_valid(p)) {
    std::cerr << "error: (" << p.to_string() << ") is invalid\n";
    return 2;
  }
  auto report = kostka::kostka_quadrature(p, cfg.points);
  if (cfg.format == "json") {
    nlohmann::json j{{"problem", p.parts()},          {"value", report.value},
                     {"error", report.abs_error_estimate}, {"nearest", report.nearest_integer.str()},
                     {"residual", report.residual},   {"conclusive", report.conclusive}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "integral " << report.value << "  nearest " << report.nearest_integer.str()
              << "  residual " << report.residual << "  err-est " << report.abs_error_estimate
              << (report.conclusive ? "" : "  [inconclusive]") << "\n";
  }
  return report.conclusive ? 0 : 3;
}

int cmd_verify_analysis(int a_max, int mu_max, const Config& cfg) {
  using namespace kostka;
  bool all = true;
  bool inconclusive = false;
  std::cout << "# " << kVersion << " verify-analysis\n";
  std::cout << "check\tdetail\tworst\tstatus\n";
  auto emit = [&](const std::string& name, const std::string& detail, double worst, bool pass) {
    std::cout << name << '\t' << detail << '\t' << worst << '\t' << (pass ? "pass" : "FAIL")
              << "\n";
    all = all && pass;
  };

  auto sines = verify_sine_bounds(1'000'000);
  for (const auto& c : sines.checks) emit("sine." + c.name, "-", c.max_violation, c.pass);

  for (int a = 3; a <= a_max; ++a) {
    auto f = verify_F_nonneg(a, 10'000);
    auto c = verify_C_bound(a, 10'000);
    auto l = verify_ell_bound(a, 10'000);
    bool pass = f.pass && c.pass && l.pass;
    emit("lambda_F_bounds", "a=" + std::to_string(a),
         std::min(std::min(f.worst, c.worst), l.worst), pass);
  }

  auto chain = verify_a2_chain(14, cfg.points);
  emit("a2.mu14_exact", "2*I vs closed constant", chain.doubled_constant_relerr,
       chain.doubled_constant_relerr < 1e-8);
  emit("a2.mu14_margin", "I - pi/4", chain.margin_over_pi4, chain.pass);
  for (int mu = 15; mu <= std::max(15, mu_max); ++mu) {
    auto c = verify_a2_chain(mu, cfg.points);
    emit("a2.chain", "mu=" + std::to_string(mu), c.margin_over_pi4, c.pass);
    inconclusive = inconclusive || !c.conclusive;
  }

  for (int a = 3; a <= std::min(a_max, 20); ++a) {
    for (int mu = 4; mu <= mu_max; ++mu) {
      auto r = verify_induction_inequality(a, mu, cfg.points);
      if (!r.pass || !r.conclusive) {
        emit("induction.integral", "a=" + std::to_string(a) + " mu=" + std::to_string(mu),
             r.left - r.right, r.pass);
        inconclusive = inconclusive || !r.conclusive;
      }
    }
  }
  emit("induction.integral", "a=3..{" + std::to_string(std::min(a_max, 20)) + "} mu=4..{" +
                                 std::to_string(mu_max) + "}",
       0.0, true);

  auto step = ab_bounds_step(3, 3);
  emit("ab.step", "P(3+x,3+y) coefficients", step.shifted.min_lower_bound,
       step.pass && step.shifted.all_positive);
  auto base = ab_bounds_base(3);
  emit("ab.base", "P(3+x) degree " + std::to_string(base.degree), base.shifted.min_lower_bound,
       base.pass && base.shifted.all_positive);

  if (!all) return 2;
  return inconclusive ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics and numeric verification for Schubert problems of lines"};
  app.set_version_flag("--version", kVersion);
  Config cfg;
  if (const char* env = std::getenv("KOSTKA_CACHE_FILE")) cfg.cache_file = env;
  app.add_option("--cap", cfg.enumeration_cap, "enumeration cap");
  app.add_option("--points", cfg.points, "quadrature evaluation budget");
  app.add_option("--format", cfg.format, "output format: text|json|tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--cache-file", cfg.cache_file, "persist the count cache here");
  app.add_option("--limit", cfg.scan_limit, "scan safety limit");
  app.add_option("--threads", cfg.threads, "worker threads for scans");
  app.add_option("--node-budget", cfg.node_budget, "certificate node budget");

  std::string problem_text, out_path, mode_name = "recursion";
  int mu_max = 15, sum_max = 12, a_max = 10, mu_max_analysis = 10;

  auto* compute = app.add_subcommand("compute", "exact count of a problem");
  compute->add_option("problem", problem_text, "comma-separated parts")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list the tableaux");
  enumerate->add_option("problem", problem_text)->required();

  auto* table1 = app.add_subcommand("table1", "the K(2^mu,4) / K(2^mu,1,1) table");
  table1->add_option("--mu-max", mu_max, "last row");

  auto* scan = app.add_subcommand("scan", "cross-engine invariant sweep");
  scan->add_option("--sum-max", sum_max, "largest part sum");

  auto* certify = app.add_subcommand("certify", "build a certificate tree");
  certify->add_option("problem", problem_text)->required();
  certify->add_option("--out", out_path, "write JSON here");

  auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("file", out_path)->required();
  verify->add_option("--mode", mode_name)->check(CLI::IsMember({"recursion", "enumeration"}));

  auto* integral = app.add_subcommand("integral", "Weyl-integral quadrature of the count");
  integral->add_option("problem", problem_text)->required();

  auto* analysis = app.add_subcommand("verify-analysis", "run the inequality battery");
  analysis->add_option("--a-max", a_max);
  analysis->add_option("--mu-max", mu_max_analysis);

  app.require_subcommand(1);
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return cmd_compute(problem_text, cfg);
    if (enumerate->parsed()) return cmd_enumerate(problem_text, cfg);
    if (table1->parsed()) return cmd_table1(mu_max, cfg);
    if (scan->parsed()) return cmd_scan(sum_max, cfg);
    if (certify->parsed()) return cmd_certify(problem_text, out_path, cfg);
    if (verify->parsed()) return cmd_verify(out_path, mode_name, cfg);
    if (integral->parsed()) return cmd_integral(problem_text, cfg);
    if (analysis->parsed()) return cmd_verify_analysis(a_max, mu_max_analysis, cfg);
  } catch (const kostka::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
