// Command-line front end for the twisted Heisenberg-Virasoro engine.
//
// Exit codes: 0 ok, 1 violations or refuted, 2 input error, 3 window
// insufficient.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hv/algebra.hpp"
#include "hv/derivation.hpp"
#include "hv/error.hpp"
#include "hv/expr.hpp"
#include "hv/report.hpp"
#include "hv/two_local.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;
constexpr int kWindowInsufficient = 3;

struct Options {
  std::string output = "json";
  std::string sign;
  std::string lhs, rhs;
  std::int64_t max_degree = 0;
  std::int64_t window = 0;
  std::string table_file, assignment_file, samples_file;
};

hv::CocycleSign resolve_sign(const std::string& flag, std::optional<hv::CocycleSign> from_file) {
  if (!flag.empty()) return *hv::parse_sign(flag);
  return from_file.value_or(hv::CocycleSign::Consistent);
}

void emit(const Options& opt, const hv::Json& report) {
  if (opt.output == "text")
    std::cout << hv::render_text(report);
  else
    std::cout << report.dump(2) << "\n";
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the twisted Heisenberg-Virasoro algebra at level zero", "hvtool"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--output", opt.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  const auto sign_check = CLI::IsMember({"paper", "consistent"});

  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two elements");
  bracket_cmd->add_option("x", opt.lhs)->required();
  bracket_cmd->add_option("y", opt.rhs)->required();
  bracket_cmd->add_option("--sign", opt.sign)->check(sign_check);

  auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi identity sweep over basis triples");
  jacobi_cmd->add_option("--max-degree", opt.max_degree)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{64}));
  jacobi_cmd->add_option("--sign", opt.sign)->check(sign_check);

  auto* audit_cmd = app.add_subcommand("audit", "Leibniz audit of D1, D2, D3 under both cocycle signs");
  audit_cmd->add_option("--max-degree", opt.max_degree)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{64}));

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a derivation table as ad(z) + aD1 + bD2 + cD3");
  decompose_cmd->add_option("--table", opt.table_file)->required();
  decompose_cmd->add_option("--sign", opt.sign)->check(sign_check);

  auto* two_local_cmd = app.add_subcommand("two-local", "2-local derivation tools");
  two_local_cmd->require_subcommand(1);
  two_local_cmd->fallthrough();
  auto* verify_cmd = two_local_cmd->add_subcommand("verify", "Run the reduction on an assignment");
  verify_cmd->add_option("--assignment", opt.assignment_file)->required();
  verify_cmd->add_option("--window", opt.window)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{64}));
  verify_cmd->add_option("--samples", opt.samples_file)->required();
  verify_cmd->add_option("--sign", opt.sign)->check(sign_check);
  auto* lemmas_cmd = two_local_cmd->add_subcommand("lemmas", "Witness-shape kernel suite");
  lemmas_cmd->add_option("--window", opt.window)->required()->check(CLI::Range(std::int64_t{3}, std::int64_t{64}));
  lemmas_cmd->add_option("--sign", opt.sign)->check(sign_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const std::string command = echo(argc, argv);
  try {
    if (bracket_cmd->parsed()) {
      const auto sign = resolve_sign(opt.sign, std::nullopt);
      const hv::Element result = hv::bracket(hv::parse(opt.lhs), hv::parse(opt.rhs), sign);
      emit(opt, hv::make_report(command, sign, "ok", hv::Json{{"result", hv::format(result)}}));
      return kOk;
    }
    if (jacobi_cmd->parsed()) {
      const auto sign = resolve_sign(opt.sign, std::nullopt);
      const auto r = hv::jacobi_check(opt.max_degree, sign);
      emit(opt, hv::make_report(command, sign, r.ok() ? "ok" : "violations", hv::to_json(r)));
      return r.ok() ? kOk : kViolations;
    }
    if (audit_cmd->parsed()) {
      const auto r = hv::sign_audit(opt.max_degree);
      emit(opt, hv::make_report(command, std::nullopt, r.expected_pattern_holds ? "ok" : "violations", hv::to_json(r)));
      return r.expected_pattern_holds ? kOk : kViolations;
    }
    if (decompose_cmd->parsed()) {
      const auto loaded = hv::table_from_json(hv::read_json_file(opt.table_file));
      const auto sign = resolve_sign(opt.sign, loaded.sign);
      try {
        const auto r = hv::decompose(loaded.table, sign);
        const char* status = r.status == hv::DecomposeStatus::Ok               ? "ok"
                             : r.status == hv::DecomposeStatus::NotADerivation ? "violations"
                                                                               : "inconsistent";
        emit(opt, hv::make_report(command, sign, status, hv::to_json(r)));
        return r.status == hv::DecomposeStatus::Ok ? kOk : kViolations;
      } catch (const hv::DomainTooSmall& e) {
        emit(opt, hv::make_report(command, sign, "inconsistent", hv::Json{{"error", e.what()}}));
        return kWindowInsufficient;
      }
    }
    if (verify_cmd->parsed()) {
      const auto loaded = hv::assignment_from_json(hv::read_json_file(opt.assignment_file));
      const auto samples = hv::samples_from_json(hv::read_json_file(opt.samples_file));
      const auto sign = resolve_sign(opt.sign, loaded.sign);
      try {
        const auto cert = hv::reduce_by_theorem(loaded.assignment, opt.window, samples, sign);
        emit(opt, hv::make_report(command, sign, cert.certified() ? "ok" : "refuted", hv::to_json(cert)));
        return cert.certified() ? kOk : kViolations;
      } catch (const hv::NoWitnessAtWindow& e) {
        emit(opt, hv::make_report(command, sign, "inconsistent", hv::Json{{"error", e.what()}, {"window", opt.window}}));
        return kWindowInsufficient;
      }
    }
    if (lemmas_cmd->parsed()) {
      const auto sign = resolve_sign(opt.sign, std::nullopt);
      const auto r = hv::lemma_kernel_suite(opt.window, sign);
      emit(opt, hv::make_report(command, sign, r.ok() ? "ok" : "violations", hv::to_json(r)));
      return r.ok() ? kOk : kViolations;
    }
  } catch (const hv::ParseError& e) {
    std::cerr << "hvtool: " << e.what() << "\n";
    return kInputError;
  } catch (const hv::InputError& e) {
    std::cerr << "hvtool: " << e.what() << "\n";
    return kInputError;
  } catch (const hv::MissingKey& e) {
    std::cerr << "hvtool: " << e.what() << "\n";
    return kInputError;
  } catch (const hv::Error& e) {
    std::cerr << "hvtool: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
