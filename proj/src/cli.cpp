#include "sigmabrauer/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigmabrauer/brauer.hpp"
#include "sigmabrauer/errors.hpp"
#include "sigmabrauer/modcat.hpp"
#include "sigmabrauer/schurweyl.hpp"
#include "sigmabrauer/stabilizer.hpp"
#include "sigmabrauer/symfun.hpp"

namespace sb::cli {

namespace {

using Json = nlohmann::ordered_json;

Partition partition_arg(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

PartitionTuple tuple_arg(const std::string& text) {
  PartitionTuple t;
  try {
    t = PartitionTuple::parse(text);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  t.require_pure();
  return t;
}

void within_bound(int value, int bound, const std::string& what) {
  if (value > bound)
    throw PreconditionError(what + " = " + std::to_string(value) + " exceeds the degree bound " +
                            std::to_string(bound));
}

Json report_json(const stabilizer::AxiomReport& r) {
  Json j;
  j["axiom"] = r.axiom;
  j["samples"] = r.samples;
  j["passes"] = r.passes;
  j["failures"] = r.failures;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in sigma-Brauer categories and their module categories"};
  app.require_subcommand(1);
  app.fallthrough();
  int bound = 6;
  std::string out_file;
  app.add_option("--degree-bound", bound, "Cap on degrees and sizes")->capture_default_str();
  app.add_option("--out", out_file, "Write the JSON document to FILE");

  std::string sigma_text;
  std::string lambda_text;
  std::string mu_text;
  std::string in_file;
  int n = 0;
  int m = 0;
  int i = 0;
  int rank = 0;
  int max_n = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 100;

  auto* homdim = app.add_subcommand("homdim", "Dimension of Hom([n], [m]) in the downwards category");
  homdim->add_option("--sigma", sigma_text)->required();
  homdim->add_option("--n", n)->required();
  homdim->add_option("--m", m)->required();

  auto* compose = app.add_subcommand("compose", "Compose two morphisms read from a JSON file");
  compose->add_option("--in", in_file)->required()->check(CLI::ExistingFile);

  auto* mult = app.add_subcommand("mult", "Multiplicity of L_mu in the injective K^lambda");
  mult->add_option("--sigma", sigma_text)->required();
  mult->add_option("--lambda", lambda_text)->required();
  mult->add_option("--mu", mu_text)->required();

  auto* ext = app.add_subcommand("ext", "Dimension of Ext^i(L_lambda, L_mu)");
  ext->add_option("--sigma", sigma_text)->required();
  ext->add_option("--i", i)->required();
  ext->add_option("--lambda", lambda_text)->required();
  ext->add_option("--mu", mu_text)->required();

  auto* shift = app.add_subcommand("shift", "Decomposition of the shift Sh_n of S_lambda");
  shift->add_option("--lambda", lambda_text)->required();
  shift->add_option("--n", n)->required();

  auto* traceless = app.add_subcommand("traceless", "Traceless tensors at a seeded generic form");
  traceless->add_option("--sigma", sigma_text)->required();
  traceless->add_option("--rank", rank)->required();
  traceless->add_option("--n", n)->required();
  traceless->add_option("--lambda", lambda_text);
  traceless->add_option("--seed", seed)->required();

  auto* stab = app.add_subcommand("stab", "Generalized stabilizers");
  stab->require_subcommand(1);
  auto* stab_check = stab->add_subcommand("check", "Germinal axiom suite at a seeded generic form");
  stab_check->add_option("--sigma", sigma_text)->required();
  stab_check->add_option("--rank", rank)->required();
  stab_check->add_option("--seed", seed)->required();
  stab_check->add_option("--samples", samples)->required();

  auto* oracle = app.add_subcommand("oracle", "Independent oracles");
  oracle->require_subcommand(1);
  auto* step1 = oracle->add_subcommand("step1", "Diagram basis against weight-space basis");
  step1->add_option("--sigma", sigma_text)->required();
  step1->add_option("--max", max_n)->required();

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

  Json doc;
  try {
    if (*homdim) {
      const auto sigma = tuple_arg(sigma_text);
      within_bound(n, bound, "n");
      doc["dim"] = brauer::hom_basis(sigma, n, m).size();
    } else if (*compose) {
      std::ifstream in(in_file);
      if (!in) throw PreconditionError("cannot read " + in_file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      nlohmann::json input;
      try {
        input = nlohmann::json::parse(buffer.str());
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("compose input: ") + e.what());
      }
      if (!input.is_object() || !input.contains("sigma") || !input.contains("f") || !input.contains("g"))
        throw ParseError("compose input needs keys sigma, f and g");
      const auto sigma = tuple_arg(input["sigma"].get<std::string>());
      const auto f = brauer::from_json(sigma, input["f"].dump());
      const auto g = brauer::from_json(sigma, input["g"].dump());
      within_bound(std::max({f.source(), f.target(), g.target()}), bound, "object size");
      doc = Json::parse(brauer::to_json(brauer::compose(g, f)));
    } else if (*mult) {
      const auto sigma = tuple_arg(sigma_text);
      const auto lambda = partition_arg(lambda_text);
      const auto mu = partition_arg(mu_text);
      within_bound(std::max(lambda.size(), mu.size()), bound, "|lambda|");
      doc["multiplicity"] = modcat::multiplicity(sigma, lambda, mu);
    } else if (*ext) {
      const auto sigma = tuple_arg(sigma_text);
      const auto lambda = partition_arg(lambda_text);
      const auto mu = partition_arg(mu_text);
      within_bound(std::max(lambda.size(), mu.size()), bound, "|lambda|");
      if (i < 0) throw PreconditionError("ext degree must be non-negative");
      doc["dim"] = modcat::ext_dim(sigma, i, lambda, mu);
    } else if (*shift) {
      const auto lambda = partition_arg(lambda_text);
      within_bound(lambda.size(), bound, "|lambda|");
      if (n < 0) throw PreconditionError("shift n must be non-negative");
      doc = Json::object();
      for (const auto& [nu, c] : shift_decompose(lambda, n)) doc[nu.str()] = c;
    } else if (*traceless) {
      const auto sigma = tuple_arg(sigma_text);
      within_bound(n, bound, "n");
      if (n < 0) throw PreconditionError("n must be non-negative");
      const auto omega = modcat::FormPoint::random(rank, sigma, seed);
      const auto t = modcat::traceless_space(omega, n);
      doc["rank"] = rank;
      doc["n"] = n;
      doc["dim"] = t.basis.cols();
      if (!lambda_text.empty()) {
        const auto lambda = partition_arg(lambda_text);
        if (lambda.size() != n) throw PreconditionError("|lambda| must equal n");
        doc["lambda"] = lambda.str();
        doc["realization_dim"] = modcat::simple_realization_dim(omega, lambda);
      }
    } else if (*stab_check) {
      const auto sigma = tuple_arg(sigma_text);
      within_bound(rank, bound, "rank");
      const auto omega = modcat::FormPoint::random(rank, sigma, seed);
      std::vector<int> levels;
      for (int l = 1; l <= rank; ++l) levels.push_back(l);
      doc["rank"] = rank;
      doc["symmetries"] = stabilizer::permutation_symmetries(omega).size();
      Json reports = Json::array();
      for (const auto& r : stabilizer::germinal_axiom_suite(omega, levels, samples, seed)) reports.push_back(report_json(r));
      doc["reports"] = reports;
    } else if (*step1) {
      const auto sigma = tuple_arg(sigma_text);
      within_bound(max_n, bound, "max");
      Json cases = Json::array();
      bool all_equal = true;
      for (int nn = 0; nn <= max_n; ++nn)
        for (int mm = 0; mm <= nn; ++mm) {
          const auto r = schurweyl::diagram_weight_iso(sigma, nn, mm);
          Json c;
          c["n"] = nn;
          c["m"] = mm;
          c["diagrams"] = r.diagrams;
          c["weights"] = r.weight_elements;
          c["bijective"] = r.bijective;
          all_equal = all_equal && r.bijective;
          cases.push_back(c);
        }
      doc["all_equal"] = all_equal;
      doc["cases"] = cases;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = doc.dump();
  if (!out_file.empty()) {
    std::ofstream file(out_file);
    if (!file) {
      err << "error: cannot write " << out_file << "\n";
      return 1;
    }
    file << text << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

}  // namespace sb::cli
