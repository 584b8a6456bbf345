// grmw: batch CLI over the Reed-Muller weight toolkit.
//
// Subcommands: weights, construct, spectrum, arrangements, verify.
// Exit codes: 0 success, 1 verification failures, 2 flag/parameter errors,
// 3 enumeration budget exceeded.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grmw/arrangements.hpp"
#include "grmw/budget.hpp"
#include "grmw/constructors.hpp"
#include "grmw/json_io.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Generalized Reed-Muller weight toolkit"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("GRMW_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) grmw::enumeration_budget() = v;
  }

  int q = 0, m = 0, r = 0, a = 0, b = 0, d = 0;

  auto* weights = app.add_subcommand("weights", "Closed-form w1/w2/w3");
  weights->add_option("q", q, "field size")->required();
  weights->add_option("m", m, "variables")->required();
  weights->add_option("r", r, "order")->required();

  auto* construct = app.add_subcommand("construct", "Witness codewords");
  std::string family = "third", branch, variant = "parallel-pairs";
  construct->add_option("q", q)->required();
  construct->add_option("m", m)->required();
  construct->add_option("a", a)->required();
  construct->add_option("b", b)->required();
  construct->add_option("--family", family,
                        "third | thm3 | 2var (default: third)");
  construct->add_option("--branch", branch, "thm3 branch id (default: first)");
  construct->add_option("--variant", variant,
                        "2var family: triangle | parallel-pairs | pencil | "
                        "pencil-plus | quadrilateral");

  auto* spectrum = app.add_subcommand("spectrum", "Exhaustive weight spectrum");
  int shards = 1;
  long long cap = -1;
  int max_distinct = -1;
  std::string format = "csv";
  spectrum->add_option("q", q)->required();
  spectrum->add_option("m", m)->required();
  spectrum->add_option("r", r)->required();
  spectrum->add_option("--shards", shards, "parallel workers");
  spectrum->add_option("--cap", cap, "report weights up to this cap");
  spectrum->add_option("--max-distinct", max_distinct,
                       "report at most this many distinct weights");
  spectrum->add_option("--format", format, "csv | json");

  auto* arr = app.add_subcommand("arrangements", "Hyperplane union counts");
  int top = 10;
  bool oracle = false;
  arr->add_option("q", q)->required();
  arr->add_option("m", m)->required();
  arr->add_option("d", d)->required();
  arr->add_option("--top", top, "rows for --oracle output");
  arr->add_flag("--oracle", oracle, "emit brute-force enumeration");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  bool extended = false;
  int threads = 1;
  verify->add_option("--suite", suite,
                     "formulas-vs-oracles | arrangements-top3 | constructors | "
                     "quadratic | all");
  verify->add_flag("--extended", extended, "include the long oracle runs");
  verify->add_option("--threads", threads, "shard workers for spectra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; flag errors exit 2
  }

  if (*weights) {
    std::cout << grmw::weights_answer_json(q, m, r).dump(2) << "\n";
    return 0;
  }

  if (*construct) {
    grmw::json out;
    out["q"] = q;
    out["m"] = m;
    out["a"] = a;
    out["b"] = b;
    out["family"] = family;
    grmw::Poly poly(grmw::field_for_order(q), 1);
    if (family == "third") {
      auto p = grmw::decompose_r(q, m, a * (q - 1) + b);
      poly = grmw::build_third_weight(q, m, a, b);
      out["claimed_weight"] = grmw::third_weight(p).value;
    } else if (family == "thm3") {
      if (branch.empty()) {
        auto ids = grmw::theorem3_branches(q, m, a, b);
        if (ids.empty())
          grmw::fail("BranchRangeViolation", "no branch applies here");
        branch = ids.front();
      }
      auto w = grmw::build_theorem3_witness(q, m, a, b, branch);
      poly = w.poly;
      out["branch"] = branch;
      out["claimed_weight"] = w.claimed_weight;
    } else if (family == "2var") {
      grmw::Family2 fam;
      if (variant == "triangle") fam = grmw::Family2::Triangle;
      else if (variant == "parallel-pairs") fam = grmw::Family2::ParallelPairs;
      else if (variant == "pencil") fam = grmw::Family2::Pencil;
      else if (variant == "pencil-plus") fam = grmw::Family2::PencilPlus;
      else if (variant == "quadrilateral") fam = grmw::Family2::Quadrilateral;
      else grmw::fail("BadFlag", "unknown 2var variant " + variant);
      poly = grmw::build_third_weight_2var(grmw::field_for_order(q), b, fam);
      out["variant"] = variant;
      out["claimed_weight"] = grmw::cb_value(q, b).value;
    } else {
      grmw::fail("BadFlag", "unknown family " + family);
    }
    out["measured_weight"] = poly.weight();
    out["poly"] = grmw::poly_to_json(poly);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*spectrum) {
    grmw::SpectrumOptions opts;
    opts.shards = shards;
    opts.weight_cap = cap;
    opts.max_distinct = max_distinct;
    auto res = grmw::exhaustive_spectrum(q, m, r, opts);
    if (format == "json") {
      grmw::json out;
      out["q"] = q;
      out["m"] = m;
      out["r"] = r;
      out["enumerated"] = res.enumerated;
      grmw::json rows = grmw::json::array();
      for (const auto& [w, c] : res.distinct_weights)
        rows.push_back({{"weight", w}, {"count", c}});
      out["distinct_weights"] = std::move(rows);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << grmw::spectrum_to_csv(res);
    }
    return 0;
  }

  if (*arr) {
    if (oracle) {
      std::cout << "rank,N,sizes\n";
      auto types = grmw::enumerate_types(q, m, d);
      for (int i = 0; i < (int)types.size() && i < top; ++i) {
        std::cout << (i + 1) << "," << types[i].second << ",";
        const auto& sz = types[i].first.sizes;
        for (std::size_t j = 0; j < sz.size(); ++j)
          std::cout << (j ? "|" : "") << sz[j];
        std::cout << "\n";
      }
    } else {
      std::cout << grmw::top3_to_csv(q, m, d);
    }
    return 0;
  }

  if (*verify) {
    auto rep = grmw::run_verification_suite(suite, extended, threads);
    std::cout << grmw::report_to_json(rep).dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const grmw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string code = e.code();
    if (code == "BudgetExceeded" || code == "SizeBudgetExceeded") return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
