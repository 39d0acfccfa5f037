// Copyright 2026 The czcp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "czcp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "czcp/barker.hpp"
#include "czcp/correlation.hpp"
#include "czcp/error.hpp"
#include "czcp/gbf.hpp"
#include "czcp/golay.hpp"
#include "czcp/insertion.hpp"
#include "czcp/sweep.hpp"
#include "czcp/training.hpp"
#include "czcp/verify.hpp"

namespace czcp::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) throw UsageError("cannot write '" + path + "'");
  outf << text;
  if (!outf) throw UsageError("write failed for '" + path + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in list '" + text + "'");
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

// "+" / "-" for binary symbols, or an exponent in Z_q.
int parse_symbol(const std::string& text) {
  if (text == "+") return 0;
  if (text == "-") return 1;
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad symbol '" + text + "' (use +, - or an exponent)");
}

bool looks_like_recipe(const std::string& text) {
  return !text.empty() &&
         text.find_first_not_of("0123456789,") == std::string::npos;
}

struct ConstructOptions {
  std::string output;
  std::string report;
  bool sweep = false;
  unsigned jobs = 0;

  int m = 0, q = 2, c = 0;
  std::string pi;

  std::optional<int> alpha;
  int beta = 0, gamma = 0;
  std::string family;
  std::string x0 = "+", x1 = "+", y0 = "-", y1 = "+";

  int barker_m = 0, barker_n = 0;

  std::string gcp, czcp, recipe;
};

SequencePair construct_barker(int m, int n) {
  if (m > n) std::swap(m, n);
  std::optional<PreconditionError> last;
  for (const auto& a : barker(m)) {
    for (const auto& b : barker(n)) {
      try {
        return theorem4_pair(a, b);
      } catch (const PreconditionError& e) {
        last = e;
      }
    }
  }
  throw *last;
}

SequencePair construct_one(const std::string& kind, const ConstructOptions& o,
                           std::size_t max_len) {
  if (kind == "gbf") {
    if (o.m < 4) throw UsageError("--m must be at least 4");
    std::vector<int> pi;
    if (o.pi.empty()) {
      for (int i = 0; i + 2 < o.m; ++i) pi.push_back(i);
    } else {
      pi = parse_int_list(o.pi);
    }
    const std::size_t len = (std::size_t{1} << (o.m - 1)) + 2;
    if (o.m > 24 || len > max_len) {
      throw UsageError("output length exceeds the configured bound");
    }
    return theorem1_pair(o.m, o.q, pi, o.c);
  }
  if (kind == "insertion") {
    InsertionSpec spec{o.q, parse_symbol(o.x0), parse_symbol(o.x1),
                       parse_symbol(o.y0), parse_symbol(o.y1)};
    if (!o.family.empty()) {
      if (o.alpha && *o.alpha != 0) {
        throw UsageError("--family excludes a nonzero --alpha");
      }
      return theorem3_pair(parse_family(o.family), o.beta, o.gamma, spec, max_len);
    }
    if (!o.alpha) throw UsageError("need --alpha or --family");
    return theorem2_pair(*o.alpha, o.beta, o.gamma, spec, max_len);
  }
  if (kind == "barker") {
    if (o.barker_m < 1 || o.barker_n < 1) throw UsageError("need --m and --n");
    return construct_barker(o.barker_m, o.barker_n);
  }
  if (kind == "turyn-extend") {
    if (o.gcp.empty() || o.czcp.empty()) throw UsageError("need --gcp and --czcp");
    const SequencePair seed = SequencePair::parse(read_file(o.czcp));
    const SequencePair golay =
        looks_like_recipe(o.gcp) && !std::filesystem::exists(o.gcp)
            ? build_gcp(GcpRecipe::parse(o.gcp))
            : SequencePair::parse(read_file(o.gcp));
    if (golay.size() * seed.size() > max_len) {
      throw UsageError("output length exceeds the configured bound");
    }
    return theorem6_extend(golay, seed);
  }
  if (kind == "gcp") {
    if (o.recipe.empty()) throw UsageError("need --recipe");
    const GcpRecipe recipe = GcpRecipe::parse(o.recipe);
    if (recipe.length() > max_len) {
      throw UsageError("output length exceeds the configured bound");
    }
    return build_gcp(recipe);
  }
  throw UsageError("unknown construction '" + kind + "'");
}

int do_construct(const std::string& kind, const ConstructOptions& o,
                 std::ostream& out) {
  const std::size_t max_len = max_length_from_env();
  if (o.sweep) {
    const unsigned jobs =
        o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    const auto results = run_sweep(sweep_points(kind, max_len), jobs);
    nlohmann::json arr = nlohmann::json::array();
    bool all_ok = true;
    for (const auto& r : results) {
      arr.push_back(to_json(r));
      all_ok = all_ok && r.ok();
    }
    const std::string text = to_canonical_string(arr) + "\n";
    if (o.output.empty()) {
      out << text;
    } else {
      write_file(o.output, text);
    }
    return all_ok ? kExitOk : kExitBelowThreshold;
  }

  const SequencePair pair = construct_one(kind, o, max_len);
  const CzcpReport report = verify(pair);
  const std::string report_text = to_canonical_string(to_json(report)) + "\n";
  if (o.output.empty()) {
    out << pair.to_string();
  } else {
    write_file(o.output, pair.to_string());
  }
  if (!o.report.empty()) {
    write_file(o.report, report_text);
  } else if (!o.output.empty()) {
    out << report_text;
  }
  return report.is_czcp() ? kExitOk : kExitBelowThreshold;
}

}  // namespace

std::size_t max_length_from_env() {
  const char* v = std::getenv("CZCP_MAX_N");
  if (v == nullptr || *v == '\0') return kDefaultMaxLength;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) {
    throw UsageError("CZCP_MAX_N must be a positive integer");
  }
  return static_cast<std::size_t>(n);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cross Z-complementary pair constructions and verification",
               "czcp"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build and self-verify a pair");
  construct->require_subcommand(1);
  ConstructOptions copt;
  std::string chosen;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", copt.output, "Pair file (default: stdout)");
    sub->add_option("--report", copt.report, "JSON report file");
    sub->add_flag("--sweep", copt.sweep,
                  "Run every parameter point of this family up to CZCP_MAX_N");
    sub->add_option("--jobs", copt.jobs, "Worker threads for --sweep")
        ->check(CLI::Range(1u, 64u));
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
  };

  auto* gbf = construct->add_subcommand("gbf", "Boolean-function construction");
  gbf->add_option("--m", copt.m, "Number of variables (>= 4)");
  gbf->add_option("--q", copt.q, "Alphabet size (even)");
  gbf->add_option("--pi", copt.pi, "Permutation images of 0..m-3, e.g. 0,1,2,3");
  gbf->add_option("--c", copt.c, "Constant term");
  add_common(gbf);

  auto* ins = construct->add_subcommand("insertion", "Insertion construction");
  ins->add_option("--alpha", copt.alpha);
  ins->add_option("--beta", copt.beta);
  ins->add_option("--gamma", copt.gamma);
  ins->add_option("--family", copt.family, "10b, 26g or 10b26g");
  ins->add_option("--q", copt.q, "Alphabet size");
  ins->add_option("--x0", copt.x0);
  ins->add_option("--x1", copt.x1);
  ins->add_option("--y0", copt.y0);
  ins->add_option("--y1", copt.y1);
  add_common(ins);

  auto* bark = construct->add_subcommand("barker", "Barker concatenation");
  bark->add_option("--m", copt.barker_m, "Shorter Barker length");
  bark->add_option("--n", copt.barker_n, "Longer Barker length");
  add_common(bark);

  auto* ext = construct->add_subcommand("turyn-extend", "Turyn product with a seed pair");
  ext->add_option("--gcp", copt.gcp, "Golay recipe such as 2,10 or a pair file");
  ext->add_option("--czcp", copt.czcp, "Seed pair file");
  add_common(ext);

  auto* gcp = construct->add_subcommand("gcp", "Golay pair from a kernel recipe");
  gcp->add_option("--recipe", copt.recipe, "Comma list of 2, 10, 26");
  add_common(gcp);

  // verify
  auto* ver = app.add_subcommand("verify", "Measure zones and classify a pair");
  std::string ver_input, ver_report;
  std::size_t min_z = 1;
  ver->add_option("pair", ver_input, "Pair file")->required();
  ver->add_option("--min-z", min_z, "Exit 1 when z is below this");
  ver->add_option("--report", ver_report, "Also write the report here");

  // profile
  auto* prof = app.add_subcommand("profile", "Correlation profile as CSV");
  std::string prof_input, prof_output;
  prof->add_option("pair", prof_input, "Pair file")->required();
  prof->add_option("-o,--output", prof_output, "CSV file (default: stdout)");

  // catalog
  auto* cat = app.add_subcommand("catalog", "Parameter table of constructions");
  std::optional<std::size_t> cat_length;
  cat->add_option("--length", cat_length, "Only rows that reach this length");

  // mse
  auto* mse = app.add_subcommand("mse", "LS channel-estimation MSE of a training matrix");
  std::string mse_matrix, mse_pair;
  double sigma2 = 1.0, tol = 1e-9;
  int nt = 1, lambda = 0, mse_q = 0;
  auto* mat_opt = mse->add_option("--matrix", mse_matrix, "CSV of re+imj cells");
  auto* pair_opt = mse->add_option(
      "--pair", mse_pair, "Build the demonstration training matrix from a pair file");
  mat_opt->excludes(pair_opt);
  mse->add_option("--sigma2", sigma2, "Noise variance")->check(CLI::PositiveNumber);
  mse->add_option("--nt", nt, "Transmit antennas")->check(CLI::PositiveNumber);
  mse->add_option("--lambda", lambda, "Channel memory (taps - 1)")
      ->check(CLI::NonNegativeNumber);
  mse->add_option("--Q", mse_q, "Nonzero entries per antenna (default rows/N_t)");
  mse->add_option("--tol", tol, "Optimality tolerance");

  std::vector<std::string> argv_store = {"czcp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return do_construct(chosen, copt, out);

    if (ver->parsed()) {
      const CzcpReport report = verify(SequencePair::parse(read_file(ver_input)));
      const std::string text = to_canonical_string(to_json(report)) + "\n";
      out << text;
      if (!ver_report.empty()) write_file(ver_report, text);
      return report.z >= min_z ? kExitOk : kExitBelowThreshold;
    }

    if (prof->parsed()) {
      const std::string csv =
          profile_csv(profile(SequencePair::parse(read_file(prof_input))));
      if (prof_output.empty()) {
        out << csv;
      } else {
        write_file(prof_output, csv);
      }
      return kExitOk;
    }

    if (cat->parsed()) {
      nlohmann::json j;
      if (cat_length) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& m : catalog_lookup(*cat_length)) rows.push_back(to_json(m));
        j["length"] = *cat_length;
        j["rows"] = std::move(rows);
      } else {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : catalog()) rows.push_back(to_json(r));
        j["rows"] = std::move(rows);
      }
      j["notes"] = catalog_notes();
      out << to_canonical_string(j) << "\n";
      return kExitOk;
    }

    if (mse->parsed()) {
      nlohmann::json j;
      std::optional<TrainingMatrix> x;
      if (!mse_pair.empty()) {
        x.emplace(demo_training_matrix(SequencePair::parse(read_file(mse_pair)), nt,
                                       lambda));
        j["schedule"] = "demonstration (illustrative layout, not a standardized one)";
      } else if (!mse_matrix.empty()) {
        x.emplace(parse_complex_csv(read_file(mse_matrix)), nt, lambda, mse_q);
        j["schedule"] = "user";
      } else {
        throw UsageError("need --matrix or --pair");
      }
      const double bound = mse_lower_bound(sigma2, x->q());
      j["rows"] = x->entries().rows();
      j["cols"] = x->entries().cols();
      j["nt"] = nt;
      j["lambda"] = lambda;
      j["Q"] = x->q();
      j["sigma2"] = sigma2;
      j["bound"] = bound;
      j["optimal"] = is_optimal_training(*x, tol);
      try {
        j["mse"] = ls_mse(*x, sigma2);
      } catch (const RankDeficientError& e) {
        j["mse"] = nullptr;
        j["error"] = e.what();
        out << to_canonical_string(j) << "\n";
        return kExitBelowThreshold;
      }
      out << to_canonical_string(j) << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBelowThreshold;
  }
  return kExitUsage;
}

}  // namespace czcp::cli
