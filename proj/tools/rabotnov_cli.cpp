// Command-line front-end: series evaluation, bound formulas, disk
// verification certificates, and the corollary table.

#include <complex>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rabotnov/bounds.hpp"
#include "rabotnov/functions.hpp"
#include "rabotnov/verify.hpp"

using namespace rabotnov;

namespace {

const std::map<std::string, RatioKind> kRatioNames = {
    {"f/fm", RatioKind::FOverFm},    {"fm/f", RatioKind::FmOverF},
    {"fp/fmp", RatioKind::FpOverFmp}, {"fmp/fp", RatioKind::FmpOverFp},
    {"i/im", RatioKind::IOverIm},    {"im/i", RatioKind::ImOverI},
};

const std::map<std::string, SeriesKind> kKindNames = {
    {"base", SeriesKind::Base},
    {"derivative", SeriesKind::Derivative},
    {"alexander", SeriesKind::Alexander},
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SamplingGrid make_grid(const std::string& radii_csv, int points, int refine) {
  SamplingGrid grid;
  if (!radii_csv.empty()) {
    grid.radii.clear();
    std::stringstream ss(radii_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) grid.radii.push_back(std::stod(tok));
  }
  if (points > 0) grid.points_per_circle = points;
  if (refine >= 0) grid.refine_rounds = refine;
  grid.validate();
  return grid;
}

void print_certificate(const VerificationCertificate& cert,
                       const std::string& output, bool header) {
  if (output == "json-lines") {
    std::cout << to_json(cert).dump() << "\n";
  } else if (output == "csv") {
    if (header) std::cout << csv_header() << "\n";
    std::cout << to_csv_row(cert) << "\n";
  } else {
    std::cout << cert.quantity << " (alpha=" << cert.params.alpha
              << ", beta=" << cert.params.beta.real() << "+"
              << cert.params.beta.imag() << "i, gamma="
              << cert.params.gamma_shape << ", m=" << cert.m << "): "
              << (cert.bound_is_upper ? "sup " : "inf ") << "observed="
              << fmt17(cert.observed_infimum) << " bound=" << fmt17(cert.bound)
              << " margin=" << fmt17(cert.margin)
              << " pole_flags=" << cert.pole_flags
              << (cert.pass ? "  PASS" : "  FAIL") << "\n";
  }
}

void print_bound_row(const std::string& name, const BoundResult& b,
                     const std::string& output, bool header) {
  if (output == "json-lines") {
    std::cout << nlohmann::json{{"name", name},
                                {"bound", b.bound},
                                {"is_upper", b.is_upper},
                                {"hypothesis_ok", b.hypothesis_ok},
                                {"hypothesis", b.hypothesis_text}}
                     .dump()
              << "\n";
  } else if (output == "csv") {
    if (header) std::cout << "name,bound,is_upper,hypothesis_ok,hypothesis\n";
    std::cout << name << "," << fmt17(b.bound) << "," << (b.is_upper ? 1 : 0)
              << "," << (b.hypothesis_ok ? 1 : 0) << "," << b.hypothesis_text
              << "\n";
  } else {
    std::printf("%-8s %s %-22s  [%s: %s]\n", name.c_str(),
                b.is_upper ? "<=" : ">=", fmt17(b.bound).c_str(),
                b.hypothesis_ok ? "hypothesis ok" : "HYPOTHESIS FAILS",
                b.hypothesis_text.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Rabotnov function: evaluation, lower bounds, and "
               "unit-disk verification"};
  app.require_subcommand(1);

  double alpha = 0.0, beta_re = 0.0, beta_im = 0.0, gamma = 1.0;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha, "alpha >= 0");
    sub->add_option("--beta-re", beta_re, "Re beta");
    sub->add_option("--beta-im", beta_im, "Im beta");
    sub->add_option("--gamma", gamma, "gamma >= 1");
  };

  std::string radii_csv;
  int points = -1, refine = -1;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--radii", radii_csv, "comma-separated circle radii in (0,1)");
    sub->add_option("--points", points, "points on the outermost circle");
    sub->add_option("--refine", refine, "golden-section refinement rounds");
  };

  std::string output = "human";
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "human | json-lines | csv")
        ->check(CLI::IsMember({"human", "json-lines", "csv"}));
  };

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate the series at a point");
  add_params(eval_cmd);
  std::string kind_name = "base";
  double z_re = 0.0, z_im = 0.0, tol = kDefaultTol;
  eval_cmd->add_option("--kind", kind_name, "base | derivative | alexander")
      ->check(CLI::IsMember({"base", "derivative", "alexander"}));
  eval_cmd->add_option("--z-re", z_re, "Re z");
  eval_cmd->add_option("--z-im", z_im, "Im z");
  eval_cmd->add_option("--tol", tol, "truncation tolerance");
  add_output(eval_cmd);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "print all bound formulas");
  add_params(bounds_cmd);
  add_output(bounds_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "emit one certificate");
  add_params(verify_cmd);
  add_grid(verify_cmd);
  add_output(verify_cmd);
  std::string check = "theorem", ratio_name = "f/fm";
  int m = 0;
  verify_cmd->add_option("--check", check, "theorem | lemma2 | univalence")
      ->check(CLI::IsMember({"theorem", "lemma2", "univalence"}));
  verify_cmd->add_option("--ratio", ratio_name,
                         "f/fm | fm/f | fp/fmp | fmp/fp | i/im | im/i")
      ->check(CLI::IsMember({"f/fm", "fm/f", "fp/fmp", "fmp/fp", "i/im", "im/i"}));
  verify_cmd->add_option("--kind", kind_name, "series kind for lemma2")
      ->check(CLI::IsMember({"base", "derivative", "alexander"}));
  verify_cmd->add_option("--m", m, "partial-sum index")->check(CLI::NonNegativeNumber);

  // corollaries
  auto* coro_cmd = app.add_subcommand("corollaries", "verify the 14 corollary rows");
  add_grid(coro_cmd);
  add_output(coro_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const RabotnovParams params{alpha, gamma, {beta_re, beta_im}};

    if (eval_cmd->parsed()) {
      params.validate();
      const EvalResult r =
          eval_series(params, kKindNames.at(kind_name), {z_re, z_im}, tol);
      if (output == "json-lines") {
        std::cout << nlohmann::json{{"value_re", r.value.real()},
                                    {"value_im", r.value.imag()},
                                    {"terms_used", r.terms_used},
                                    {"tail_bound", r.tail_bound}}
                         .dump()
                  << "\n";
      } else if (output == "csv") {
        std::cout << "value_re,value_im,terms_used,tail_bound\n"
                  << fmt17(r.value.real()) << "," << fmt17(r.value.imag())
                  << "," << r.terms_used << "," << fmt17(r.tail_bound) << "\n";
      } else {
        std::cout << "value = " << fmt17(r.value.real()) << " + "
                  << fmt17(r.value.imag()) << "i  (terms=" << r.terms_used
                  << ", tail_bound=" << fmt17(r.tail_bound) << ")\n";
      }
      return 0;
    }

    if (bounds_cmd->parsed()) {
      params.validate();
      if (output == "human")
        std::cout << "|beta| = " << fmt17(std::abs(params.beta)) << "\n";
      bool header = true;
      for (const auto& [name, ratio] : kRatioNames) {
        print_bound_row(name, theorem_bound(params, ratio), output, header);
        header = false;
      }
      for (const auto& [name, kind] : kKindNames)
        print_bound_row("|" + name + "|", lemma2_bound(params, kind), output,
                        false);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const SamplingGrid grid = make_grid(radii_csv, points, refine);
      VerificationCertificate cert;
      if (check == "lemma2")
        cert = verify_lemma2(params, kKindNames.at(kind_name), grid);
      else if (check == "univalence")
        cert = verify_univalence_remark(params, grid);
      else
        cert = verify_theorem(params, kRatioNames.at(ratio_name), m, grid);
      print_certificate(cert, output, true);
      return cert.pass ? 0 : 1;
    }

    // corollaries
    const SamplingGrid grid = make_grid(radii_csv, points, refine);
    bool all_pass = true;
    bool header = true;
    for (const auto& cert : corollary_table(grid)) {
      print_certificate(cert, output, header);
      header = false;
      all_pass = all_pass && cert.pass;
    }
    return all_pass ? 0 : 1;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
