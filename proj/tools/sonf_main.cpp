#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sonf/coset_geometry.hpp"
#include "sonf/gl_ring.hpp"
#include "sonf/hecke_gl.hpp"
#include "sonf/json_io.hpp"
#include "sonf/level_raising.hpp"
#include "sonf/so_jacquet.hpp"
#include "sonf/so_params.hpp"
#include "sonf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheck = 2;

struct Options {
  std::string input_path;
  long long prime = 3;
  int max_n = 6;
  int max_d = 4;
  std::string format = "json";
};

sonf::Json read_input(const Options& opt) {
  std::string text;
  if (!opt.input_path.empty()) {
    std::ifstream in(opt.input_path);
    if (!in) throw std::invalid_argument("input: cannot open '" + opt.input_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  try {
    return sonf::Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("input: invalid JSON: ") + e.what());
  }
}

void emit(const Options& opt, const sonf::Json& j, const std::string& table) {
  if (opt.format == "table")
    std::cout << table;
  else
    std::cout << j.dump(2) << "\n";
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int cmd_validate(const Options& opt) {
  sonf::DiscreteLParameter phi = sonf::parameter_from_json(read_input(opt));
  auto err = sonf::validate(phi);
  sonf::Json j;
  j["ok"] = !err.has_value();
  if (err) j["error"] = *err;
  emit(opt, j, err ? "invalid: " + *err + "\n" : "ok\n");
  return err ? kExitCheck : kExitOk;
}

int cmd_conductor(const Options& opt) {
  sonf::DiscreteLParameter phi = sonf::parameter_from_json(read_input(opt));
  long long c = sonf::conductor(phi);
  sonf::Json j;
  j["conductor"] = c;
  emit(opt, j, "conductor " + std::to_string(c) + "\n");
  return kExitOk;
}

int cmd_epsilon(const Options& opt) {
  sonf::SuppliedSigns signs;
  sonf::DiscreteLParameter phi = sonf::parameter_from_json(read_input(opt), &signs);
  sonf::UnitSign eps = sonf::epsilon_sign(phi, signs);
  sonf::Json j;
  j["epsilon"] = eps.str();
  emit(opt, j, "epsilon " + eps.str() + "\n");
  return kExitOk;
}

int cmd_seed(const Options& opt) {
  sonf::DiscreteLParameter phi = sonf::parameter_from_json(read_input(opt));
  sonf::DiscreteLParameter seed = sonf::seed_of(phi);
  std::ostringstream table;
  table << "seed parameter: n=" << seed.n << ", " << seed.summands.size() << " summand(s)\n";
  emit(opt, sonf::to_json(seed), table.str());
  return kExitOk;
}

int cmd_construct(const Options& opt) {
  sonf::DiscreteLParameter phi = sonf::parameter_from_json(read_input(opt));
  sonf::ConstructionResult cons = sonf::construct(phi);
  std::ostringstream table;
  for (auto& s : cons.segments) table << s.str() << "\n";
  table << "cuspidal support: " << cons.cuspidal_support.size() << " label(s), n0=" << cons.n0
        << "\n";
  emit(opt, sonf::to_json(cons), table.str());
  return kExitOk;
}

int cmd_reduce(const Options& opt) {
  sonf::Json in = read_input(opt);
  std::vector<long long> prefix;
  if (in.contains("prefix_conductors"))
    for (auto& c : in["prefix_conductors"]) prefix.push_back(c.get<long long>());
  sonf::DiscreteLParameter phi = sonf::parameter_from_json(
      in.contains("parameter") ? in["parameter"] : in);
  auto chain = sonf::reduction_chain(phi, prefix);
  sonf::Json arr = sonf::Json::array();
  std::ostringstream table;
  table << "stage                parameter-n  peeled  a_induced  c_param  relation\n";
  for (auto& node : chain) {
    arr.push_back(sonf::to_json(node));
    char line[160];
    std::snprintf(line, sizeof line, "%-20s %-12lld %-7zu %-10lld %-8lld %s\n",
                  node.stage.c_str(), node.parameter.n, node.segments_peeled.size(),
                  node.a_induced, node.c_param, sonf::chain_relation_str(node.relation).c_str());
    table << line;
  }
  emit(opt, arr, table.str());
  return kExitOk;
}

int cmd_count_ur(const Options& opt) {
  sonf::DiscreteLParameter phi = sonf::parameter_from_json(read_input(opt));
  long long count = sonf::count_mu_ur(phi);
  auto terms = sonf::mu_ur_terms(phi);
  sonf::Json j;
  j["count"] = count;
  sonf::Json arr = sonf::Json::array();
  for (auto& t : terms) arr.push_back(sonf::to_json(t));
  j["terms"] = arr;
  emit(opt, j, "count " + std::to_string(count) + "\n");
  return kExitOk;
}

int cmd_hecke(const Options& opt) {
  sonf::Json in = read_input(opt);
  int r = in.at("r").get<int>();
  auto factors = sonf::inverse_l_factors_from_json(
      in.contains("inverse_l_factors") ? in["inverse_l_factors"] : sonf::Json::array());
  auto lambda = sonf::hecke_eigenvalues(factors, r);
  sonf::Json arr = sonf::Json::array();
  std::ostringstream table;
  for (size_t i = 0; i < lambda.size(); ++i) {
    arr.push_back(sonf::to_json(lambda[i]));
    table << "lambda_" << i << " = " << lambda[i].str() << "\n";
  }
  sonf::Json j;
  j["lambda"] = arr;
  emit(opt, j, table.str());
  return kExitOk;
}

int cmd_cosets(const Options& opt, int n, int m, bool hecke, int r, int idx,
               bool emit_matrices) {
  sonf::Json j;
  std::ostringstream table;
  bool all_ok = true;
  if (!hecke) {
    auto reps = sonf::enumerate_coset_reps(n, m, opt.prime);
    auto report = sonf::verify_coset_distinctness(reps, n, m, opt.prime);
    long long expected = sonf::expected_coset_count(n, opt.prime);
    all_ok = report.ok() && static_cast<long long>(reps.size()) == expected;
    j["n"] = n;
    j["m"] = m;
    j["p"] = opt.prime;
    j["count"] = reps.size();
    j["expected"] = expected;
    j["verification"] = sonf::to_json(report);
    if (emit_matrices) {
      sonf::Json arr = sonf::Json::array();
      for (auto& rep : reps) arr.push_back(sonf::to_json(rep.matrix(n, m, opt.prime)));
      j["matrices"] = arr;
    }
    table << "n=" << n << " m=" << m << " p=" << opt.prime << ": " << reps.size()
          << " representatives (expected " << expected << "), " << report.pairs_checked
          << " pairs checked, " << report.failures.size() << " failure(s)\n";
  } else {
    auto reps = sonf::enumerate_hecke_reps(r, idx, opt.prime);
    auto report = sonf::verify_hecke_distinctness(reps, r, idx, opt.prime);
    long long expected = sonf::expected_hecke_count(r, idx, opt.prime);
    all_ok = report.ok() && static_cast<long long>(reps.size()) == expected;
    j["r"] = r;
    j["i"] = idx;
    j["p"] = opt.prime;
    j["count"] = reps.size();
    j["expected"] = expected;
    j["verification"] = sonf::to_json(report);
    if (emit_matrices) {
      sonf::Json arr = sonf::Json::array();
      for (auto& rep : reps) arr.push_back(sonf::to_json(rep.matrix(r, opt.prime)));
      j["matrices"] = arr;
    }
    table << "r=" << r << " i=" << idx << " p=" << opt.prime << ": " << reps.size()
          << " representatives (expected " << expected << "), " << report.failures.size()
          << " failure(s)\n";
  }
  emit(opt, j, table.str());
  return all_ok ? kExitOk : kExitCheck;
}

int cmd_levelraise(const Options& opt, int n, int r, const std::string& sign_str,
                   const std::string& s_str) {
  sonf::UnitSign sign = sonf::UnitSign::parse(sign_str);
  sonf::HalfInt s = s_str.empty() ? sonf::HalfInt(r) : sonf::HalfInt::parse(s_str);
  auto th = sonf::theta_evaluate(n, r, sign, s, sonf::LevelOperator::theta);
  auto thp = sonf::theta_evaluate(n, r, sign, s, sonf::LevelOperator::theta_prime);
  auto kernel = sonf::kernel_check(n, r, sign);
  auto wh = sonf::whittaker_value(n, r, sign);
  sonf::Json j;
  j["theta"] = sonf::to_json(th);
  j["theta_prime"] = sonf::to_json(thp);
  sonf::Json kj;
  kj["zero"] = kernel.zero;
  kj["residual_s1_even"] = sonf::to_json(kernel.residual_even);
  kj["residual_s1_odd"] = sonf::to_json(kernel.residual_odd);
  if (kernel.offending_class) kj["offending_class"] = *kernel.offending_class;
  j["kernel"] = kj;
  j["whittaker"] = sonf::to_json(wh);
  std::ostringstream table;
  table << "theta  (s=" << th.s.str() << "): even " << th.coeff_s1_even.str() << " | odd "
        << th.coeff_s1_odd.str() << "\n";
  table << "theta' (s=" << thp.s.str() << "): even " << thp.coeff_s1_even.str() << " | odd "
        << thp.coeff_s1_odd.str() << "\n";
  table << "kernel at s=-" << r << "/2: " << (kernel.zero ? "zero" : "NONZERO") << "\n";
  table << "whittaker at s=" << r << "/2: " << wh.str() << "\n";
  emit(opt, j, table.str());
  return kernel.zero ? kExitOk : kExitCheck;
}

int cmd_verify_all(const Options& opt) {
  sonf::VerifyOptions vopts;
  vopts.max_n = opt.max_n;
  vopts.max_d = opt.max_d;
  vopts.prime = opt.prime;
  auto results = sonf::run_all_checks(vopts);
  sonf::Json arr = sonf::Json::array();
  std::ostringstream table;
  bool all_ok = true;
  for (auto& r : results) {
    all_ok = all_ok && r.pass;
    sonf::Json rj;
    rj["name"] = r.name;
    rj["pass"] = r.pass;
    if (!r.detail.empty()) rj["detail"] = r.detail;
    arr.push_back(rj);
    table << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) table << "  (" << r.detail << ")";
    table << "\n";
  }
  table << (all_ok ? "all checks passed\n" : "some checks FAILED\n");
  emit(opt, arr, table.str());
  return all_ok ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic calculator for odd special orthogonal newform combinatorics"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--input", opt.input_path, "input JSON file (default: stdin)");
  app.add_option("--prime", opt.prime, "residue prime p")->check(CLI::PositiveNumber);
  app.add_option("--max-n", opt.max_n, "sweep bound on n");
  app.add_option("--max-d", opt.max_d, "sweep bound on summands per line");
  app.add_option("--format", opt.format, "output format: json | table")
      ->check(CLI::IsMember({"json", "table"}));

  app.add_subcommand("validate", "check the invariants of a parameter")->fallthrough();
  app.add_subcommand("conductor", "conductor of a parameter")->fallthrough();
  app.add_subcommand("epsilon", "epsilon sign of a parameter")->fallthrough();
  app.add_subcommand("seed", "seed parameter")->fallthrough();
  app.add_subcommand("construct", "standard-module segments and cuspidal support")->fallthrough();
  app.add_subcommand("reduce", "full reduction chain with a/c relations")->fallthrough();
  app.add_subcommand("count-ur", "unramified Jacquet term count")->fallthrough();
  app.add_subcommand("hecke", "Hecke eigenvalues from an inverse L-factor")->fallthrough();

  auto* cosets = app.add_subcommand("cosets", "enumerate and verify coset representatives");
  cosets->fallthrough();
  int co_n = 2, co_m = 1, co_r = 3, co_i = 1;
  bool co_hecke = false;
  cosets->add_option("-n,--n", co_n, "rank n");
  cosets->add_option("-m,--m", co_m, "level m");
  cosets->add_flag("--hecke", co_hecke, "enumerate GL Hecke cosets instead");
  cosets->add_option("-r,--r", co_r, "GL rank (with --hecke)");
  cosets->add_option("-i,--i", co_i, "Hecke operator index (with --hecke)");
  bool co_matrices = false;
  cosets->add_flag("--emit-matrices", co_matrices, "include representative matrices in JSON output");

  auto* levelraise = app.add_subcommand("levelraise", "kernel and Whittaker checks");
  levelraise->fallthrough();
  int lr_n = 2, lr_r = 1;
  std::string lr_sign = "+1", lr_s;
  levelraise->add_option("-n,--n", lr_n, "rank n");
  levelraise->add_option("-r,--r", lr_r, "segment size r");
  levelraise->add_option("--chi-sign", lr_sign, "chi(w) in {+1,-1}");
  levelraise->add_option("--s", lr_s, "evaluation point s (half-integer; default r/2)");

  app.add_subcommand("verify-all", "run the full property suite")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!is_prime(opt.prime)) throw std::invalid_argument("--prime must be prime");
    if (app.got_subcommand("validate")) return cmd_validate(opt);
    if (app.got_subcommand("conductor")) return cmd_conductor(opt);
    if (app.got_subcommand("epsilon")) return cmd_epsilon(opt);
    if (app.got_subcommand("seed")) return cmd_seed(opt);
    if (app.got_subcommand("construct")) return cmd_construct(opt);
    if (app.got_subcommand("reduce")) return cmd_reduce(opt);
    if (app.got_subcommand("count-ur")) return cmd_count_ur(opt);
    if (app.got_subcommand("hecke")) return cmd_hecke(opt);
    if (app.got_subcommand("cosets"))
      return cmd_cosets(opt, co_n, co_m, co_hecke, co_r, co_i, co_matrices);
    if (app.got_subcommand("levelraise")) return cmd_levelraise(opt, lr_n, lr_r, lr_sign, lr_s);
    if (app.got_subcommand("verify-all")) return cmd_verify_all(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
  return kExitInput;
}
