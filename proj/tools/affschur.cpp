#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "affschur/classical.hpp"
#include "affschur/io.hpp"
#include "affschur/selftest.hpp"
#include "affschur/simple_modules.hpp"
#include "affschur/stratification.hpp"

using namespace affschur;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::size_t kExhaustiveEntryLimit = 12;

struct RunConfig {
  std::optional<int> n;
  std::optional<int> r;
  int window = 2;
  std::string method = "oracle";
  std::string format = "text";
  std::uint64_t seed = 1;

  bool structured() const { return format == "json"; }
};

void emit(const RunConfig& cfg, const std::string& command, json record, const std::string& text) {
  if (cfg.structured()) {
    json out = {{"schema_version", kSchemaVersion}, {"command", command}};
    out.update(record);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << text;
  }
}

void warn_size(int n, int r, int window) {
  if (n > 4 || r > 4 || window > 2)
    std::cerr << "warning: n=" << n << " r=" << r << " W=" << window
              << " is beyond desk scale; enumeration grows combinatorially\n";
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw CLI::ValidationError(std::string("this command needs ") + flag);
  if (*v < 1) throw CLI::ValidationError(std::string(flag) + " must be positive");
  return *v;
}

void check_ambient(const RunConfig& cfg, int n, int r, const std::string& source) {
  if ((cfg.n && *cfg.n != n) || (cfg.r && *cfg.r != r))
    throw AmbientMismatch(source + ": element lives in S(" + std::to_string(n) + "," + std::to_string(r) +
                          ") but the command line asks for different n, r");
}

json dvec(const std::vector<int>& d) { return json(d); }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

int cmd_multiply(const RunConfig& cfg, const std::string& left, const std::string& right) {
  const auto x = parse_element(read_file(left), left);
  const auto y = parse_element(read_file(right), right);
  check_ambient(cfg, x.n(), x.r(), left);
  check_ambient(cfg, y.n(), y.r(), right);
  if (x.n() != y.n() || x.r() != y.r()) throw AmbientMismatch("factors live in different S(n, r)");
  warn_size(x.n(), x.r(), 0);

  const auto method = parse_method(cfg.method);
  bool compatible = false;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (a.col_sums() == b.row_sums()) compatible = true;

  AlgebraElement product(x.n(), x.r());
  std::optional<bool> agree;
  std::optional<AlgebraElement> other;
  if (method == MultiplyMethod::CrossCheck) {
    Multiplier oracle(MultiplyMethod::Oracle), coset(MultiplyMethod::Coset);
    product = oracle(x, y);
    other = coset(x, y);
    agree = product == *other;
  } else {
    Multiplier mul(method);
    product = mul(x, y);
  }

  json rec = {{"record", "product"}, {"method", to_string(method)}, {"n", x.n()}, {"r", x.r()},
              {"product", element_to_json(product)}, {"zero", product.is_zero()},
              {"compatible_marginals", compatible}};
  std::ostringstream os;
  os << "method: " << to_string(method) << '\n';
  if (!compatible) os << "zero product: no term of the left factor has col equal to row of a right term\n";
  else if (product.is_zero()) os << "zero product\n";
  os << format_element(product);
  if (agree) {
    rec["methods_agree"] = *agree;
    os << "oracle and coset agree: " << (*agree ? "yes" : "NO") << '\n';
    if (!*agree) {
      rec["coset_product"] = element_to_json(*other);
      os << "coset product:\n" << format_element(*other);
    }
  }
  emit(cfg, "multiply", rec, os.str());
  return agree && !*agree ? 1 : 0;
}

int cmd_rho(const RunConfig& cfg, const std::string& path) {
  const auto a = parse_matrix(read_file(path), path);
  check_ambient(cfg, a.n(), a.r(), path);
  const auto d = d_values(a);
  std::optional<std::vector<int>> oracle;
  if (a.entries().size() <= kExhaustiveEntryLimit) oracle = d_values_exhaustive(a);
  const auto label = cell_label(a);

  json rec = {{"record", "rho"}, {"n", a.n()}, {"r", a.r()}, {"d", dvec(d)},
              {"rho", label.label.parts()}, {"chain_index", label.chain_index}};
  std::ostringstream os;
  os << "d: " << join(d) << '\n';
  if (oracle) {
    rec["oracle_d"] = dvec(*oracle);
    rec["dp_oracle_agree"] = *oracle == d;
    os << "path oracle d: " << join(*oracle) << '\n' << "dp/oracle agree: " << (*oracle == d ? "yes" : "NO") << '\n';
  } else {
    rec["dp_oracle_agree"] = nullptr;
    os << "dp/oracle agree: not checked (more than " << kExhaustiveEntryLimit << " entries)\n";
  }
  os << "rho: " << to_string(label.label) << '\n' << "chain index: " << label.chain_index << '\n';
  emit(cfg, "rho", rec, os.str());
  return oracle && *oracle != d ? 1 : 0;
}

int cmd_chain(const RunConfig& cfg) {
  const int n = need(cfg.n, "-n"), r = need(cfg.r, "-r");
  const auto order = total_order(n, r);
  for (const auto& h : chain(n, r)) {
    const auto& lam = order[static_cast<std::size_t>(h.index - 1)];
    json gens = json::array();
    std::string gtext;
    for (const auto& g : h.generators) {
      gens.push_back(g.parts());
      gtext += (gtext.empty() ? "" : " ") + ("l_(" + to_string(g) + ")");
    }
    emit(cfg, "chain", {{"record", "ideal"}, {"n", n}, {"r", r}, {"index", h.index}, {"lambda", lam.parts()},
                        {"generators", gens}},
         "J_" + std::to_string(h.index) + "  lambda=(" + to_string(lam) + ")  generators: " + gtext + '\n');
  }
  return 0;
}

int cmd_membership(const RunConfig& cfg, const std::string& path, int index) {
  const auto x = parse_element(read_file(path), path);
  check_ambient(cfg, x.n(), x.r(), path);
  warn_size(x.n(), x.r(), cfg.window);
  const auto ideal = chain_ideal(x.n(), x.r(), index);
  Multiplier mul(parse_method(cfg.method));
  MembershipSolver solver(mul);
  const auto cert = solver.prove(x, ideal, cfg.window);
  json rec = {{"record", "certificate"}, {"n", x.n()}, {"r", x.r()}, {"index", index}};
  rec.update(certificate_to_json(cert));
  emit(cfg, "membership", rec, "J_" + std::to_string(index) + ": " + format_certificate(cert));
  return 0;
}

int cmd_params(const RunConfig& cfg) {
  const int n = need(cfg.n, "-n"), r = need(cfg.r, "-r");
  for (const auto& lam : total_order(n, r)) {
    const auto pres = b_lambda(lam);
    const auto dual = dual_partition(lam);
    const bool empty = c_lambda_empty(lam, n);
    json rec = {{"record", "block"}, {"n", n}, {"r", r}, {"index", total_order_index(lam)},
                {"lambda", lam.parts()}, {"b_lambda", to_string(pres)}, {"b_lambda_inverted", pres.inverted},
                {"dual", dual.parts()}, {"c_lambda_empty", empty}};
    std::ostringstream os;
    os << total_order_index(lam) << ". lambda=(" << to_string(lam) << ")  B=" << to_string(pres) << "  dual=("
       << to_string(dual) << ")  C_lambda " << (empty ? "empty" : "nonempty") << '\n';
    emit(cfg, "params", rec, os.str());
  }
  return 0;
}

int cmd_phi(const RunConfig& cfg, const std::string& path, const std::string& order) {
  const auto s = parse_segments(read_file(path), path);
  const int n = need(cfg.n, "-n");
  if (cfg.r && *cfg.r != s.total_length())
    throw std::invalid_argument(path + ": segments have total length " + std::to_string(s.total_length()) +
                                ", expected r=" + std::to_string(*cfg.r));
  const auto b = phi(s, n, parse_slot_order(order));
  emit(cfg, "phi",
       {{"record", "omega"}, {"slot_order", order}, {"segments", segments_to_json(s)}, {"omega", omega_to_json(b)}},
       format_omega(b));
  return 0;
}

int cmd_phi_inverse(const RunConfig& cfg, const std::string& path, const std::string& order) {
  const auto b = parse_omega(read_file(path), path);
  const auto inv = phi_inverse(b, parse_slot_order(order));
  json rec = {{"record", "segments"}, {"slot_order", order}, {"omega", omega_to_json(b)},
              {"segments", segments_to_json(inv.segments)}, {"exact", inv.exact}};
  std::ostringstream os;
  os << format_segments(inv.segments);
  if (!inv.exact) {
    rec["residual"] = static_cast<double>(inv.residual);
    os << "# inexact: roots are irrational, residual " << static_cast<double>(inv.residual) << '\n';
  }
  emit(cfg, "phi-inverse", rec, os.str());
  return 0;
}

int cmd_selftest(const RunConfig& cfg) {
  SelftestConfig sc;
  if (cfg.n) sc.max_n = need(cfg.n, "-n");
  if (cfg.r) sc.max_r = need(cfg.r, "-r");
  sc.window = cfg.window;
  sc.method = parse_method(cfg.method);
  sc.seed = cfg.seed;
  warn_size(sc.max_n, sc.max_r, sc.window);
  int failed = 0;
  for (const auto& c : run_selftest(sc)) {
    if (!c.passed) ++failed;
    emit(cfg, "selftest",
         {{"record", "check"}, {"suite", c.suite}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}},
         std::string(c.passed ? "PASS " : "FAIL ") + c.suite + ": " + c.name +
             (c.detail.empty() ? "" : "  (" + c.detail + ")") + '\n');
  }
  emit(cfg, "selftest", {{"record", "summary"}, {"seed", sc.seed}, {"failed", failed}},
       "seed " + std::to_string(sc.seed) + ": " + std::to_string(failed) + " failed\n");
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in the affine Schur algebra S(n, r) at v = 1"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("-n", cfg.n, "Period n");
  app.add_option("-r", cfg.r, "Weight r");
  app.add_option("--window", cfg.window, "Spread bound W for truncated computations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--method", cfg.method, "Basis product route")
      ->check(CLI::IsMember({"oracle", "coset", "cross-check"}))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "text, or json for one record per line")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled suites")->capture_default_str();

  std::string file_a, file_b, order = "descending";
  int index = 0;

  auto* multiply = app.add_subcommand("multiply", "Product of two element or matrix files");
  multiply->add_option("left", file_a)->required();
  multiply->add_option("right", file_b)->required();

  auto* rho_cmd = app.add_subcommand("rho", "d-vector, cell label and chain index of a matrix");
  rho_cmd->add_option("matrix", file_a)->required();

  auto* chain_cmd = app.add_subcommand("chain", "List the ideal chain J_1 .. J_t");

  auto* membership = app.add_subcommand("membership", "Certificate for an element of J_i");
  membership->add_option("element", file_a)->required();
  membership->add_option("-i,--index", index, "Chain index i")->required();

  auto* params = app.add_subcommand("params", "Partition blocks, B_lambda and empty C_lambda flags");

  auto* phi_cmd = app.add_subcommand("phi", "Segment multiset to Omega point");
  phi_cmd->add_option("segments", file_a)->required();
  phi_cmd->add_option("--slot-order", order)->check(CLI::IsMember({"descending", "ascending"}))->capture_default_str();

  auto* phi_inv = app.add_subcommand("phi-inverse", "Omega point to segment multiset");
  phi_inv->add_option("omega", file_a)->required();
  phi_inv->add_option("--slot-order", order)->check(CLI::IsMember({"descending", "ascending"}))->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Invariant suites of every module");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*multiply) return cmd_multiply(cfg, file_a, file_b);
    if (*rho_cmd) return cmd_rho(cfg, file_a);
    if (*chain_cmd) return cmd_chain(cfg);
    if (*membership) return cmd_membership(cfg, file_a, index);
    if (*params) return cmd_params(cfg);
    if (*phi_cmd) return cmd_phi(cfg, file_a, order);
    if (*phi_inv) return cmd_phi_inverse(cfg, file_a, order);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
