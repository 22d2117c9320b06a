// esakia: command-line front end for the upset-algebra toolkit.
//
// Exit codes: 0 success, 1 invalid arguments or input, 2 budget exceeded,
// 3 a verification failed.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esakia/corpus.hpp"
#include "esakia/errors.hpp"
#include "esakia/heyting.hpp"
#include "esakia/io.hpp"
#include "esakia/ladder.hpp"
#include "esakia/subalgebra.hpp"
#include "esakia/types.hpp"
#include "esakia/variety.hpp"
#include "esakia/verify.hpp"

namespace {

using namespace esakia;

constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitFailed = 3;

struct RunConfig {
  std::uint64_t budget_upsets = Budget{}.max_upsets;
  std::uint64_t budget_tuples = Budget{}.max_tuples;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string format = "json";
  std::string out;

  Budget budget() const {
    if (budget_upsets == 0 || budget_tuples == 0) throw InvalidArgument("budgets must be positive");
    return Budget{budget_upsets, budget_tuples, threads};
  }
};

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

  void write(const std::string& text) const {
    if (cfg_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file '" + cfg_.out + "'");
    f << text;
  }

  // Reports carry the command, seed and budgets next to the result.
  void report(const std::string& command, Json result) const {
    Json j;
    j["command"] = command;
    j["seed"] = cfg_.seed;
    j["budget"] = {{"max_upsets", cfg_.budget_upsets}, {"max_tuples", cfg_.budget_tuples}};
    j["result"] = std::move(result);
    write(dump(j));
  }

 private:
  const RunConfig& cfg_;
};

Poset load_poset(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_poset(buf.str());
}

// "{x,y}", "{}" or a JSON array of names/indices.
PointSet parse_point_set(const Poset& p, const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '[') return point_set_from_json(p, Json::parse(t));
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw InvalidArgument("point set '" + text + "' must look like {a,b} or a JSON array");
  std::vector<std::string> names;
  std::string cur;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (t[i] == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (t[i] != ' ') {
      cur += t[i];
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return points_named(p, names);
}

std::vector<PointSet> parse_sets(const Poset& p, const std::vector<std::string>& texts) {
  std::vector<PointSet> out;
  for (const auto& t : texts) out.push_back(parse_point_set(p, t));
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

int run(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Finite Heyting algebras of upsets, type refinement and ladder colourings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget-upsets", cfg.budget_upsets, "Maximum upsets enumerated");
  app.add_option("--budget-tuples", cfg.budget_tuples, "Maximum tuples scanned");
  app.add_option("--seed", cfg.seed, "Random seed for sampled checks");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  const Output output(cfg);
  int status = 0;

  // ladder
  LadderSpec spec;
  bool no_bottom = false;
  bool dot = false;
  auto* ladder_cmd = app.add_subcommand("ladder", "Emit a ladder truncation as poset JSON or DOT");
  ladder_cmd->add_option("--n", spec.n, "Ladder parameter (width 2^n+1)")->required();
  ladder_cmd->add_option("--depth", spec.depth, "Number of levels")->required();
  ladder_cmd->add_flag("--no-bottom", no_bottom, "Omit the point below everything");
  ladder_cmd->add_flag("--dot", dot, "Emit the Hasse diagram in DOT");
  ladder_cmd->callback([&] {
    spec.with_bottom = !no_bottom;
    const Poset p = build_ladder(spec);
    output.write(dot || cfg.format == "dot" ? poset_to_dot(p) : dump(poset_to_json(p)));
  });

  // upsets
  std::string poset_path;
  auto* upsets_cmd = app.add_subcommand("upsets", "List every upset of a poset");
  upsets_cmd->add_option("poset", poset_path, "Poset JSON file")->required();
  upsets_cmd->callback([&] {
    const Poset p = load_poset(poset_path);
    const auto upsets = enumerate_upset_sets(p, cfg.budget());
    if (cfg.format == "text") {
      std::string text;
      for (const auto& u : upsets) text += format_points(p, u) + "\n";
      output.write(text);
      return;
    }
    Json list = Json::array();
    for (const auto& u : upsets) list.push_back(point_set_to_json(u));
    output.report("upsets", {{"count", upsets.size()}, {"upsets", std::move(list)}});
  });

  // algebra
  auto* algebra_cmd = app.add_subcommand("algebra", "Emit the Heyting algebra of upsets with operation tables");
  algebra_cmd->add_option("poset", poset_path, "Poset JSON file")->required();
  algebra_cmd->callback([&] {
    const Poset p = load_poset(poset_path);
    output.report("algebra", algebra_to_json(algebra_of(p, cfg.budget())));
  });

  // types
  std::vector<std::string> colour_texts;
  std::optional<std::size_t> stage;
  auto* types_cmd = app.add_subcommand("types", "Type partition of a colouring (stage n or omega)");
  types_cmd->add_option("poset", poset_path, "Poset JSON file")->required();
  types_cmd->add_option("--colour", colour_texts, "A colour as {a,b} or a JSON array; repeatable");
  types_cmd->add_option("--stage", stage, "Finite stage; omega when omitted");
  types_cmd->callback([&] {
    const Poset p = load_poset(poset_path);
    const Colouring c = Colouring::from_sets(p, parse_sets(p, colour_texts));
    TypePartition t = stage ? stage_partition(p, c.sets(), *stage) : omega_types(c);
    Json result = partition_to_json(t);
    result["colouring"] = colouring_to_json(c);
    result["coloured"] = t.is_discrete();
    output.report("types", std::move(result));
  });

  // colour-search
  std::optional<std::size_t> colours_k;
  auto* search_cmd = app.add_subcommand("colour-search", "Find a k-colouring, or the least k with one");
  search_cmd->add_option("poset", poset_path, "Poset JSON file")->required();
  search_cmd->add_option("--k", colours_k, "Number of colours; least k when omitted");
  search_cmd->callback([&] {
    const Poset p = load_poset(poset_path);
    const Budget budget = cfg.budget();
    Json result;
    if (colours_k) {
      auto found = find_k_colouring(p, *colours_k, budget);
      result["k"] = *colours_k;
      result["found"] = found.has_value();
      result["colouring"] = found ? colouring_to_json(*found) : Json(nullptr);
    } else {
      const std::size_t k = min_colours(p, budget);
      result["min_colours"] = k;
      result["colouring"] = colouring_to_json(*find_k_colouring(p, k, budget));
    }
    output.report("colour-search", std::move(result));
  });

  // generate
  std::vector<std::string> gen_texts;
  auto* generate_cmd = app.add_subcommand("generate", "Generated subalgebra with implication ranks and witnesses");
  generate_cmd->add_option("poset", poset_path, "Poset JSON file")->required();
  generate_cmd->add_option("--gen", gen_texts, "A generator as {a,b} or a JSON array; repeatable");
  generate_cmd->callback([&] {
    const Poset p = load_poset(poset_path);
    const auto gens = parse_sets(p, gen_texts);
    const RankedAlgebra ra = generate(p, gens, cfg.budget());
    if (cfg.format == "text") {
      std::string text;
      for (const auto& [label, rank, witness] : [&] {
             std::vector<std::tuple<std::string, std::size_t, std::string>> rows;
             for (std::size_t id = 0; id < ra.size(); ++id)
               rows.emplace_back(format_points(p, ra.elements()[id]), ra.rank(id), ra.witness_text(id));
             return rows;
           }())
        text += pad(std::to_string(rank), 4) + "  " + label + "  " + witness + "\n";
      output.write(text);
      return;
    }
    output.report("generate", ranked_algebra_to_json(ra));
  });

  // verify
  std::string check_name;
  VerifyConfig vcfg;
  std::optional<int> vn, vdepth;
  std::vector<int> vdepths;
  auto* verify_cmd = app.add_subcommand("verify", "Run a quantified check; exit 3 on failure");
  verify_cmd->add_option("check", check_name, "residuation | rank-type | duality | oracle | canonical | "
                                              "non-colourable | collapse | next-level | strictness")
      ->required();
  verify_cmd->add_option("--corpus", vcfg.corpus, "Corpus: exhaustiveK, randomN:S[:M], comma-separated");
  verify_cmd->add_option("--generator-samples", vcfg.generator_samples, "Generator sets sampled per poset");
  verify_cmd->add_option("--max-stage", vcfg.max_stage, "Largest stage for rank-type");
  verify_cmd->add_option("--n", vn, "Ladder parameter");
  verify_cmd->add_option("--depth", vdepth, "Ladder depth");
  verify_cmd->add_option("--depths", vdepths, "Ladder depths for strictness")->delimiter(',');
  verify_cmd->add_option("--samples", vcfg.samples, "Sampled colourings (0 = exhaustive / default)");
  verify_cmd->add_option("--support-levels", vcfg.support_levels, "Top levels allowed to carry colour (collapse)");
  verify_cmd->callback([&] {
    vcfg.seed = cfg.seed;
    vcfg.n = vn;
    vcfg.depth = vdepth;
    vcfg.depths = vdepths;
    vcfg.budget = cfg.budget();
    const auto& names = verification_names();
    if (std::find(names.begin(), names.end(), check_name) == names.end())
      throw InvalidArgument("unknown check '" + check_name + "'");
    const VerifyResult r = run_verification(check_name, vcfg);
    if (cfg.format == "text")
      output.write(std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name + "  (" + std::to_string(r.checked) +
                   " checked)\n");
    else
      output.report("verify", verify_result_to_json(r));
    if (!r.passed) status = kExitFailed;
  });

  // strictness
  int sn = 1;
  std::vector<int> sdepths{4, 5, 6, 7, 8};
  auto* strict_cmd = app.add_subcommand("strictness", "Algebra sizes and largest n-generated subalgebras per depth");
  strict_cmd->add_option("--n", sn, "Ladder parameter");
  strict_cmd->add_option("--depths", sdepths, "Depths, comma-separated")->delimiter(',');
  strict_cmd->callback([&] {
    if (sn < 0) throw InvalidArgument("n must be >= 0");
    const auto rows = strictness_report(sn, sdepths, cfg.budget());
    if (cfg.format == "text") {
      std::string text = pad("depth", 6) + pad("|Up|", 10) + pad("max_gen", 10) + pad("canonical", 11) + "\n";
      for (const auto& row : rows)
        text += pad(std::to_string(row.depth), 6) + pad(std::to_string(row.algebra_size), 10) +
                pad(std::to_string(row.max_generated_size), 10) +
                pad(row.canonical_generates_all ? "full" : "partial", 11) + "\n";
      output.write(text);
      return;
    }
    output.report("strictness", {{"n", sn}, {"rows", strictness_to_json(rows)}});
  });

  // product
  std::string left_path, right_path;
  std::optional<std::size_t> product_k;
  auto* product_cmd = app.add_subcommand("product", "Product of two upset algebras, optionally with a k-generation scan");
  product_cmd->add_option("left", left_path, "Poset JSON file")->required();
  product_cmd->add_option("right", right_path, "Poset JSON file")->required();
  product_cmd->add_option("--k", product_k, "Report the largest k-generated subalgebra of the product");
  product_cmd->callback([&] {
    const Budget budget = cfg.budget();
    const auto a = algebra_of(load_poset(left_path), budget);
    const auto b = algebra_of(load_poset(right_path), budget);
    const auto ab = product(a, b, budget);
    Json result;
    result["sizes"] = {a.size(), b.size(), ab.size()};
    if (product_k) {
      const auto report = max_k_generated_size(ab, *product_k, budget);
      if (cfg.format == "text") {
        output.write(pad("|A|", 6) + pad("|B|", 6) + pad("|AxB|", 8) + pad("k", 4) + pad("max_gen", 9) + "\n" +
                     pad(std::to_string(a.size()), 6) + pad(std::to_string(b.size()), 6) +
                     pad(std::to_string(ab.size()), 8) + pad(std::to_string(*product_k), 4) +
                     pad(std::to_string(report.max_generated_size), 9) + "\n");
        return;
      }
      result["generation"] = generation_report_to_json(report);
    } else {
      result["algebra"] = algebra_to_json(ab);
    }
    output.report("product", std::move(result));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
