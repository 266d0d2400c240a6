// echarpoly: E-characteristic polynomials, eigenpairs and identity checks for
// tensors given as JSON documents.
#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "echar/echar.hpp"
#include "echar/eigen.hpp"
#include "echar/errors.hpp"
#include "echar/io.hpp"
#include "echar/verify.hpp"

namespace {

using echar::Json;

enum Exit { kOk = 0, kParse = 1, kUnsupported = 2, kVerifyFailed = 3 };

void emit(const Json& report) { std::cout << report.dump(2) << '\n'; }

int cmd_echar(const std::string& file, const std::string& route) {
  const auto choice = echar::parse_route_choice(route);
  const auto a = echar::read_tensor_file(file);
  const auto result = echar::compute_echar(a, choice);
  Json report{{"command", "echar"}, {"input", file}, {"requested_route", route}};
  report.update(echar::echar_report(result));
  emit(report);
  std::cerr << "psi = " << (result.identically_zero() ? "0 (identically zero)" : result.psi.to_string("L")) << '\n'
            << "route " << echar::to_string(result.route) << ", a0 "
            << (result.a0_matches() ? "matches" : "DIFFERS");
  if (auto lm = result.leading_matches()) std::cerr << ", leading " << (*lm ? "matches" : "DIFFERS");
  std::cerr << '\n';
  return kOk;
}

int cmd_eigen(const std::string& file) {
  const auto a = echar::read_tensor_file(file);
  if (a.dim() != 2) throw echar::UnsupportedError("eigenpair enumeration needs dimension 2");
  Json report{{"command", "eigen"}, {"input", file}};
  report.update(echar::eigen_report(a));
  emit(report);
  if (report["infinitely_many"].get<bool>()) {
    std::cerr << "infinitely many eigenpair classes\n";
  } else {
    std::cerr << report["counts"]["normalized"].get<int>() << " normalized, " << report["counts"]["deficit"].get<int>()
              << " deficit classes; " << report["z_eigenvalues"].size() << " Z-eigenvalues\n";
  }
  return kOk;
}

Json check_json(const echar::CheckResult& c) {
  return Json{{"name", c.name}, {"status", std::string(echar::to_string(c.status))}, {"detail", c.detail}};
}

int cmd_verify_file(const std::string& file) {
  const auto a = echar::read_tensor_file(file);
  const auto checks = echar::verify_tensor(a);
  bool ok = true;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j = check_json(c);
    if (c.status == echar::CheckStatus::fail) {
      ok = false;
      j["counterexample"] = echar::tensor_document(a);
    }
    list.push_back(j);
    std::cerr << c.name << ": " << echar::to_string(c.status) << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
  }
  Json report{{"command", "verify"}, {"input", file}, {"tensor", echar::tensor_document(a)}};
  report["psi"] = echar::coefficient_strings(echar::compute_echar(a).psi);
  report["checks"] = list;
  report["ok"] = ok;
  emit(report);
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify_fuzz(const echar::FuzzOptions& opt) {
  const auto outcome = echar::run_fuzz(opt);
  struct Tally {
    int pass = 0, fail = 0, skip = 0;
  };
  std::map<std::string, Tally> tally;
  std::vector<std::string> order = echar::check_names();
  Json failures = Json::array();
  for (std::size_t i = 0; i < outcome.results.size(); ++i) {
    for (const auto& c : outcome.results[i]) {
      if (!tally.count(c.name) && std::find(order.begin(), order.end(), c.name) == order.end()) order.push_back(c.name);
      auto& t = tally[c.name];
      switch (c.status) {
        case echar::CheckStatus::pass: ++t.pass; break;
        case echar::CheckStatus::skip: ++t.skip; break;
        case echar::CheckStatus::fail:
          ++t.fail;
          failures.push_back(Json{{"iteration", i},
                                  {"check", c.name},
                                  {"detail", c.detail},
                                  {"tensor", echar::tensor_document(outcome.corpus[i])}});
          break;
      }
    }
  }
  Json summary = Json::array();
  for (const auto& name : order) {
    const Tally t = tally[name];
    summary.push_back(Json{{"name", name}, {"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}});
    std::cerr << name << ": " << t.pass << " pass, " << t.fail << " fail, " << t.skip << " skip\n";
  }
  Json report{{"command", "verify"},
              {"fuzz", Json{{"count", opt.count}, {"seed", opt.seed}, {"m", opt.order}, {"n", opt.dim}}},
              {"summary", summary},
              {"failures", failures},
              {"ok", outcome.ok()}};
  emit(report);
  return outcome.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E-characteristic polynomials of tensors"};
  app.require_subcommand(1);

  std::string file;
  std::string route = "auto";
  auto* echar_cmd = app.add_subcommand("echar", "Compute the E-characteristic polynomial");
  echar_cmd->add_option("file", file, "Tensor document (JSON)")->required();
  echar_cmd->add_option("--route", route, "auto|sylvester|det|macaulay")
      ->check(CLI::IsMember({"auto", "sylvester", "det", "macaulay"}));

  auto* eigen_cmd = app.add_subcommand("eigen", "Enumerate eigenpair classes (n = 2)");
  eigen_cmd->add_option("file", file, "Tensor document (JSON)")->required();

  echar::FuzzOptions fuzz;
  std::optional<int> fuzz_count;
  std::optional<std::uint64_t> seed;
  auto* verify_cmd = app.add_subcommand("verify", "Check the closed-form identities on a file or a seeded corpus");
  auto* file_opt = verify_cmd->add_option("file", file, "Tensor document (JSON)");
  auto* fuzz_opt = verify_cmd->add_option("--fuzz", fuzz_count, "Number of random tensors")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Seed for --fuzz");
  verify_cmd->add_option("--m", fuzz.order, "Order of the random tensors")->check(CLI::Range(2, 12));
  verify_cmd->add_option("--n", fuzz.dim, "Dimension of the random tensors")->check(CLI::Range(1, 3));
  verify_cmd->add_option("--workers", fuzz.workers, "Worker threads (0 = all cores)");
  file_opt->excludes(fuzz_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*echar_cmd) return cmd_echar(file, route);
    if (*eigen_cmd) return cmd_eigen(file);
    if (fuzz_count) {
      if (!seed) {
        std::cerr << "error: --fuzz needs --seed\n";
        return kParse;
      }
      fuzz.count = *fuzz_count;
      fuzz.seed = *seed;
      return cmd_verify_fuzz(fuzz);
    }
    if (file.empty()) {
      std::cerr << "error: verify needs a file or --fuzz\n";
      return kParse;
    }
    return cmd_verify_file(file);
  } catch (const echar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const echar::DimensionError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const echar::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const echar::DomainError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  }
}
