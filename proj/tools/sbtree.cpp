#include "sb/analytics.hpp"
#include "sb/equivalence.hpp"
#include "sb/locate.hpp"
#include "sb/serialize.hpp"
#include "sb/tree.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <vector>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Config {
  int depth_cap = sb::kDefaultDepthCap;
  long max_steps = 0;  // 0: per-target default
  std::string format = "text";
  int parallelism = 1;
  int equiv_depth = 8;
};

void apply_config_file(const std::string& path, Config& cfg,
                       const std::map<std::string, bool>& overridden) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: bad line \"" + line + "\"");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto flag_set = [&](const std::string& k) {
      auto it = overridden.find(k);
      return it != overridden.end() && it->second;
    };
    if (flag_set(key)) continue;  // flags beat the file
    if (key == "depth_cap") {
      cfg.depth_cap = std::stoi(value);
    } else if (key == "max_steps") {
      cfg.max_steps = std::stol(value);
    } else if (key == "format") {
      cfg.format = value;
    } else if (key == "parallelism") {
      cfg.parallelism = std::stoi(value);
    } else if (key == "equiv_depth") {
      cfg.equiv_depth = std::stoi(value);
    } else {
      throw std::invalid_argument("config: unknown key \"" + key + "\"");
    }
  }
  if (cfg.depth_cap < 1 || cfg.parallelism < 1) {
    throw std::invalid_argument("config: depth_cap and parallelism must be >= 1");
  }
}

void validate_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv") {
    throw std::invalid_argument("format must be text, json, or csv");
  }
}

std::optional<long> step_budget(const Config& cfg, long flag_value) {
  if (flag_value > 0) return flag_value;
  if (cfg.max_steps > 0) return cfg.max_steps;
  return std::nullopt;
}

void cmd_gen(const Config& cfg, const std::string& seed_text, int rows) {
  sb::SeedPair seed = sb::SeedPair::parse(seed_text);
  auto generated = sb::generate(seed, rows, cfg.depth_cap);
  if (cfg.format == "csv") std::cout << "depth,index,num,den\n";
  for (const sb::Row& row : generated) {
    if (cfg.format == "text") {
      std::cout << sb::row_to_text(row) << '\n';
    } else if (cfg.format == "json") {
      std::cout << sb::row_to_json(row).dump() << '\n';
    } else {
      std::cout << sb::row_to_csv(row);
    }
  }
}

int cmd_locate(const Config& cfg, const std::string& seed_text, const std::string& target_text,
               long max_steps_flag) {
  sb::SeedPair seed = sb::SeedPair::parse(seed_text);
  sb::Fraction target = sb::Fraction::parse(target_text);
  sb::LocateResult result = sb::locate(seed, target, step_budget(cfg, max_steps_flag));
  if (cfg.format == "json") {
    std::cout << sb::locate_result_to_json(result).dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "found,depth,index,path,steps\n"
              << (result.found ? 1 : 0) << ',' << result.depth << ',' << result.index_in_row
              << ',' << result.path << ',' << result.steps_used << '\n';
  } else {
    if (result.found) {
      std::cout << "found " << target.str() << " at depth " << result.depth << ", index "
                << result.index_in_row << ", path " << (result.path.empty() ? "-" : result.path)
                << '\n';
      std::cout << "weights x=" << result.weights->x << " y=" << result.weights->y
                << " g=" << result.weights->g << '\n';
    } else {
      std::cout << "not found within " << result.steps_used << " steps; bracket ["
                << result.final_bracket.left.str() << ", " << result.final_bracket.right.str()
                << "]\n";
    }
  }
  return result.found ? 0 : kExitNotFound;
}

void cmd_equiv(const Config& cfg, const std::string& seed_text, int verify_depth) {
  sb::SeedPair seed = sb::SeedPair::parse(seed_text);
  sb::CanonicalSeed canonical = sb::canonical_seed(seed);
  sb::EquivalenceReport report =
      sb::check_equivalent(seed, canonical.seed(), verify_depth, cfg.depth_cap);
  if (cfg.format == "json") {
    nlohmann::json j{{"canonical", sb::canonical_seed_to_json(canonical)},
                     {"report", sb::equivalence_report_to_json(report)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "D=" << canonical.D << " V=" << canonical.V << " canonical seed 0/1,"
              << canonical.D << "/" << canonical.V << '\n';
    for (const auto& r : canonical.residues) {
      std::cout << "  " << r.prime_power.prime << "^" << r.prime_power.exponent << " "
                << (r.tag == sb::ResidueCase::Case1 ? "CASE1" : "CASE2") << " residue "
                << r.residue << '\n';
    }
    if (canonical.fallback_used) std::cout << "  WARNING: brute-force fallback used\n";
    std::cout << (report.equivalent ? "equivalent" : "NOT equivalent")
              << " through depth " << report.depth_checked << " (bounded evidence)\n";
  }
}

void cmd_detlist(const Config& cfg, const std::string& seed_text, int rows) {
  sb::SeedPair seed = sb::SeedPair::parse(seed_text);
  auto lists = sb::det_lists(seed, rows, cfg.depth_cap);
  if (cfg.format == "csv") std::cout << "depth,pair_index,determinant\n";
  for (const sb::DetList& dl : lists) {
    if (cfg.format == "text") {
      for (std::size_t i = 0; i < dl.values.size(); ++i) {
        std::cout << (i > 0 ? " " : "") << dl.values[i];
      }
      std::cout << '\n';
    } else if (cfg.format == "json") {
      std::cout << sb::det_list_to_json(dl).dump() << '\n';
    } else {
      std::cout << sb::det_list_to_csv(dl);
    }
  }
}

void print_fractions(const Config& cfg, const std::vector<sb::Fraction>& fractions) {
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const sb::Fraction& f : fractions) j.push_back(f.str());
    std::cout << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "index,num,den\n";
    for (std::size_t i = 0; i < fractions.size(); ++i) {
      std::cout << i << ',' << fractions[i].num() << ',' << fractions[i].den() << '\n';
    }
  } else {
    for (std::size_t i = 0; i < fractions.size(); ++i) {
      std::cout << (i > 0 ? " " : "") << fractions[i].str();
    }
    std::cout << '\n';
  }
}

int cmd_verify(const Config& cfg) {
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << '\n';
    if (!ok) all_ok = false;
  };

  sb::SeedPair half(sb::Fraction(0, 1), sb::Fraction(1, 1));
  auto rows = sb::generate(half, 10, cfg.depth_cap);
  bool sizes = true, opposite = true, dets = true, reductions = true;
  for (const sb::Row& row : rows) {
    if (row.entries.size() != (std::size_t{1} << row.depth) + 1) sizes = false;
    std::size_t n = row.entries.size();
    for (std::size_t j = 0; j < n; ++j) {
      const sb::Fraction& u = row.entries[j];
      const sb::Fraction& v = row.entries[n - 1 - j];
      if (u.num() * v.den() + v.num() * u.den() != u.den() * v.den()) opposite = false;
    }
    for (const sb::Int& v : sb::det_list_of(row)) {
      if (v != 1) dets = false;
    }
    for (const sb::Int& g : row.reductions) {
      if (g != 1) reductions = false;
    }
  }
  check("row sizes 2^i + 1 (depths 0..10)", sizes);
  check("opposite entries sum to 1", opposite);
  check("adjacent cross-determinants all 1", dets);
  check("no reductions in det-1 rows", reductions);

  bool recursion = true;
  for (int i = 0; i + 1 <= 10; ++i) {
    auto cur = sb::project(rows[i]);
    auto next = sb::project(rows[i + 1]);
    std::size_t half_len = std::size_t{1} << i;
    if (sb::slice(next.numerators, 0, half_len) != cur.numerators) recursion = false;
    auto d_slice = sb::slice(next.denominators, 0, half_len);
    for (std::size_t j = 0; j < d_slice.size(); ++j) {
      if (d_slice[j] != cur.numerators[j] + cur.denominators[j]) recursion = false;
    }
  }
  check("N/D slice recursion", recursion);

  check("mod-3 residue casework", sb::casework_mod3_verify());

  bool farey_ok = true;
  for (int n = 1; n <= 15; ++n) {
    auto fs = sb::farey(n);
    std::vector<sb::Fraction> direct;
    for (int q = 1; q <= n; ++q) {
      for (int p = 0; p <= q; ++p) {
        if (std::gcd(p, q) == 1) direct.push_back(sb::Fraction(p, q));
      }
    }
    std::sort(direct.begin(), direct.end());
    if (fs != direct) farey_ok = false;
  }
  check("farey vs direct enumeration (n <= 15)", farey_ok);

  sb::SeedPair example(sb::Fraction(2, 5), sb::Fraction(5, 11));
  auto stab = sb::stabilization(example, 8, cfg.depth_cap);
  check("determinant stabilization for 2/5,5/11",
        stab.stabilized && stab.first_all_ones_depth == 2);

  auto sweep = sb::completeness_sweep(half, 10, step_budget(cfg, 0), cfg.parallelism);
  check("completeness sweep (den <= 10)", sweep.complete());

  return all_ok ? 0 : kExitNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic Stern-Brocot trees with arbitrary rational seeds"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string config_path;
  std::string format_flag;
  app.add_option("--config", config_path, "key=value config file (env: SBTREE_CONFIG)");
  app.add_option("--format", format_flag, "output format: text, json, csv");
  long max_steps_flag = 0;
  int parallelism_flag = 0;
  int depth_cap_flag = 0;

  std::string seed_text, target_text;
  int rows = 0, order = 0, verify_depth = 8;

  CLI::App* gen = app.add_subcommand("gen", "generate rows of a tree");
  gen->add_option("--seed", seed_text, "seed pair \"a/b,c/d\" (right may be \"inf\")")->required();
  gen->add_option("--rows", rows, "last row depth to emit")->required();

  CLI::App* locate_cmd = app.add_subcommand("locate", "find a fraction by bracket descent");
  locate_cmd->add_option("--seed", seed_text)->required();
  locate_cmd->add_option("--target", target_text)->required();
  locate_cmd->add_option("--max-steps", max_steps_flag);

  CLI::App* equiv = app.add_subcommand("equiv", "canonical equivalent tree T(0/1, D/V)");
  equiv->add_option("--seed", seed_text)->required();
  equiv->add_option("--verify-depth", verify_depth);

  CLI::App* detlist = app.add_subcommand("detlist", "adjacent cross-determinants per row");
  detlist->add_option("--seed", seed_text)->required();
  detlist->add_option("--rows", rows)->required();

  CLI::App* farey_cmd = app.add_subcommand("farey", "Farey sequence of an order");
  farey_cmd->add_option("--order", order)->required();

  CLI::App* approx = app.add_subcommand("approx", "approximation ladder toward a target");
  approx->add_option("--seed", seed_text)->required();
  approx->add_option("--target", target_text)->required();
  approx->add_option("--max-steps", max_steps_flag);

  CLI::App* verify = app.add_subcommand("verify", "run the theorem property suite");
  verify->add_option("--parallelism", parallelism_flag);
  verify->add_option("--depth-cap", depth_cap_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::map<std::string, bool> overridden{
        {"format", !format_flag.empty()},
        {"max_steps", max_steps_flag > 0},
        {"parallelism", parallelism_flag > 0},
        {"depth_cap", depth_cap_flag > 0},
    };
    if (config_path.empty()) {
      if (const char* env = std::getenv("SBTREE_CONFIG")) config_path = env;
    }
    if (!config_path.empty()) apply_config_file(config_path, cfg, overridden);
    if (!format_flag.empty()) cfg.format = format_flag;
    if (parallelism_flag > 0) cfg.parallelism = parallelism_flag;
    if (depth_cap_flag > 0) cfg.depth_cap = depth_cap_flag;
    validate_format(cfg.format);

    if (gen->parsed()) {
      cmd_gen(cfg, seed_text, rows);
      return 0;
    }
    if (locate_cmd->parsed()) {
      return cmd_locate(cfg, seed_text, target_text, max_steps_flag);
    }
    if (equiv->parsed()) {
      cmd_equiv(cfg, seed_text, verify_depth);
      return 0;
    }
    if (detlist->parsed()) {
      cmd_detlist(cfg, seed_text, rows);
      return 0;
    }
    if (farey_cmd->parsed()) {
      print_fractions(cfg, sb::farey(order));
      return 0;
    }
    if (approx->parsed()) {
      sb::SeedPair seed = sb::SeedPair::parse(seed_text);
      sb::Fraction target = sb::Fraction::parse(target_text);
      print_fractions(cfg, sb::approximation_ladder(seed, target,
                                                    step_budget(cfg, max_steps_flag)));
      return 0;
    }
    if (verify->parsed()) {
      return cmd_verify(cfg);
    }
  } catch (const sb::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotFound;
  }
  return 0;
}
