// Copyright 2026 The tricktree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tricktree/bounds.hpp"
#include "tricktree/deal_io.hpp"
#include "tricktree/engine.hpp"
#include "tricktree/error.hpp"
#include "tricktree/estimator.hpp"
#include "tricktree/oracle.hpp"
#include "tricktree/rng.hpp"

namespace tt = tricktree;
using nlohmann::ordered_json;

namespace {

struct Opts {
  std::string preset = "bridge";
  int hands = 4;
  int cards = 13;
  int suits = 4;
  int ranks = 13;
  int trump = 0;
  std::string mode = "both";
  uint64_t games = 1'000'000;
  int playouts_per_deal = 1;
  uint64_t seed = 0;
  int workers = 1;
  std::string format = "text";
  std::string deal_path;
  int leader = 0;
  uint64_t max_leaves = 0;
  uint64_t max_states = 0;

  CLI::Option* trump_opt = nullptr;
  CLI::Option* max_leaves_opt = nullptr;
  CLI::Option* max_states_opt = nullptr;
};

void add_param_flags(CLI::App* cmd, Opts& o) {
  cmd->add_option("--preset", o.preset, "parameter preset; bridge = 4 hands, 13 cards, 4 suits, 13 ranks")
      ->check(CLI::IsMember({"bridge"}));
  cmd->add_option("--hands", o.hands, "hands at the table (R)");
  cmd->add_option("--cards", o.cards, "cards per hand (K)");
  cmd->add_option("--suits", o.suits, "number of suits (NS)");
  cmd->add_option("--ranks", o.ranks, "ranks per suit (NR)");
}

void add_trump_flag(CLI::App* cmd, Opts& o) {
  o.trump_opt = cmd->add_option("--trump", o.trump, "trump suit index");
}

void add_format_flag(CLI::App* cmd, Opts& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_guard_flags(CLI::App* cmd, Opts& o, bool states) {
  o.max_leaves_opt = cmd->add_option("--max-leaves", o.max_leaves, "enumeration cap on walked leaves");
  if (states) {
    o.max_states_opt = cmd->add_option("--max-states", o.max_states, "enumeration cap on distinct states");
  }
}

uint64_t env_u64(const char* name, bool& present) {
  present = false;
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    tt::fail(tt::errc::parse_error, std::string(name) + " is not an unsigned integer: " + raw);
  }
  present = true;
  return v;
}

tt::EnumerationGuard guard_of(const Opts& o) {
  tt::EnumerationGuard g;
  bool present = false;
  if (o.max_leaves_opt && o.max_leaves_opt->count()) {
    g.max_leaves = tt::BigCount(o.max_leaves);
  } else if (uint64_t v = env_u64("TRICKTREE_MAX_LEAVES", present); present) {
    g.max_leaves = tt::BigCount(v);
  }
  if (o.max_states_opt && o.max_states_opt->count()) {
    g.max_states = o.max_states;
  } else if (uint64_t v = env_u64("TRICKTREE_MAX_STATES", present); present) {
    g.max_states = v;
  }
  return g;
}

uint64_t shape_cap() {
  bool present = false;
  uint64_t v = env_u64("TRICKTREE_MAX_SHAPES", present);
  return present ? v : tt::kDefaultMaxShapes;
}

// Trump selection differs by subcommand: sampling commands pick it from
// --mode (trump/both runs use --trump's suit, default 0), enumeration
// commands apply --trump only when the flag was given.
tt::GameParams sampling_params(const Opts& o, bool trumped) {
  return tt::make_params(o.hands, o.cards, o.suits, o.ranks,
                         trumped ? std::optional<int>(o.trump) : std::nullopt);
}

tt::GameParams enumeration_params(const Opts& o) {
  std::optional<int> trump;
  if (o.trump_opt && o.trump_opt->count()) trump = o.trump;
  return tt::make_params(o.hands, o.cards, o.suits, o.ranks, trump);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) tt::fail(tt::errc::parse_error, "cannot open deal file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tt::Deal load_deal(const Opts& o, const tt::GameParams& params) {
  return tt::parse_deal_text(read_file(o.deal_path), params);
}

std::string f5(double x) {
  char b[64];
  std::snprintf(b, sizeof b, "%.5f", x);
  return b;
}

std::string g15(double x) {
  char b[64];
  std::snprintf(b, sizeof b, "%.15g", x);
  return b;
}

std::string e6(double x) {
  char b[64];
  std::snprintf(b, sizeof b, "%.6e", x);
  return b;
}

std::string params_line(const tt::GameParams& p) {
  std::ostringstream os;
  os << "R=" << p.hands << " K=" << p.cards_per_hand << " NS=" << p.num_suits
     << " NR=" << p.ranks_per_suit;
  if (p.trump) os << " trump=" << *p.trump;
  return os.str();
}

ordered_json params_json(const tt::GameParams& p) {
  ordered_json j;
  j["hands"] = p.hands;
  j["cards"] = p.cards_per_hand;
  j["suits"] = p.num_suits;
  j["ranks"] = p.ranks_per_suit;
  if (p.trump) {
    j["trump"] = *p.trump;
  } else {
    j["trump"] = nullptr;
  }
  return j;
}

void put_exact(ordered_json& j, const std::string& key, const tt::BigCount& v) {
  j[key] = v.str();
  j[key + "_float"] = tt::to_double(v);
}

void put_exact(ordered_json& j, const std::string& key, const tt::BigRatio& v) {
  j[key] = tt::ratio_string(v);
  j[key + "_float"] = tt::to_double(v);
}

std::string deal_echo(const tt::Deal& deal, const tt::GameParams& p) {
  if (p.hands == 4 && p.num_suits == 4 && p.ranks_per_suit == 13 && p.cards_per_hand == 13) {
    return tt::format_deal_bridge(deal, p);
  }
  return tt::format_deal_json(deal, p);
}

// ---------------------------------------------------------------- bounds

void run_bounds(const Opts& o) {
  tt::GameParams params = sampling_params(o, false);
  int K = params.cards_per_hand;
  tt::BigCount sum_f = tt::state_space_upper_bound(params, false);
  tt::BigCount sum_fp = tt::state_space_upper_bound(params, true);
  tt::BigCount upper = tt::tree_size_upper_bound(params);
  tt::BigCount lower = tt::tree_size_weak_lower_bound(params);

  if (o.format == "csv") {
    std::string out = "k,f,f_p\n";
    for (int k = 0; k <= K; ++k) {
      out += std::to_string(k);
      out += ',';
      out += g15(tt::to_double(tt::holding_count_bound(params, k)));
      out += ',';
      out += g15(tt::to_double(tt::position_count_bound(params, k)));
      out += '\n';
    }
    std::cout << out;
    return;
  }
  if (o.format == "json") {
    ordered_json j;
    j["params"] = params_json(params);
    j["table"] = ordered_json::array();
    for (int k = 0; k <= K; ++k) {
      ordered_json row;
      row["k"] = k;
      put_exact(row, "f", tt::holding_count_bound(params, k));
      put_exact(row, "f_p", tt::position_count_bound(params, k));
      j["table"].push_back(row);
    }
    put_exact(j, "sum_f", sum_f);
    put_exact(j, "sum_f_p", sum_fp);
    put_exact(j, "tree_size_upper_bound", upper);
    put_exact(j, "tree_size_weak_lower_bound", lower);
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ostringstream os;
  os << "params: " << params_line(params) << '\n';
  os << "k f f_p\n";
  for (int k = 0; k <= K; ++k) {
    os << k << ' ' << tt::holding_count_bound(params, k) << ' ' << tt::position_count_bound(params, k)
       << '\n';
  }
  os << "sum_f: " << sum_f << " (~" << tt::to_sci(sum_f, 3) << ")\n";
  os << "sum_f_p: " << sum_fp << " (~" << tt::to_sci(sum_fp, 3) << ")\n";
  os << "tree_size_upper_bound: " << upper << " (~" << tt::to_sci(upper, 3) << ")\n";
  os << "tree_size_weak_lower_bound: " << lower << " (~" << tt::to_sci(lower, 3) << ")\n";
  std::cout << os.str();
}

// ----------------------------------------------------------------- frank

void run_frank(const Opts& o) {
  tt::GameParams params = sampling_params(o, false);
  if (!o.deal_path.empty()) {
    tt::Deal deal = load_deal(o, params);
    tt::ShapeTable shape = tt::ShapeTable::from_deal(deal, params);
    tt::BigCount bound = tt::frank_lower_bound(shape, params);
    if (o.format == "csv") {
      std::cout << "frank\n" << g15(tt::to_double(bound)) << '\n';
      return;
    }
    if (o.format == "json") {
      ordered_json j;
      j["params"] = params_json(params);
      j["deal"] = deal_echo(deal, params);
      j["shape"] = ordered_json::array();
      for (int h = 0; h < params.hands; ++h) {
        ordered_json row = ordered_json::array();
        for (int s = 0; s < params.num_suits; ++s) row.push_back(shape.at(h, s));
        j["shape"].push_back(row);
      }
      put_exact(j, "frank_lower_bound", bound);
      std::cout << j.dump(2) << '\n';
      return;
    }
    std::ostringstream os;
    os << "params: " << params_line(params) << '\n';
    os << "deal: " << deal_echo(deal, params) << '\n';
    os << "shape:";
    for (int h = 0; h < params.hands; ++h) {
      os << ' ';
      for (int s = 0; s < params.num_suits; ++s) {
        if (s) os << '-';
        os << shape.at(h, s);
      }
    }
    os << '\n';
    os << "frank_lower_bound: " << bound << " (~" << tt::to_sci(bound, 3) << ")\n";
    std::cout << os.str();
    return;
  }

  // No deal: the expectation over uniform deals, plus an optional Monte
  // Carlo cross-check when --games is nonzero.
  tt::BigRatio exact = tt::expected_frank_bound_exact(params, shape_cap());
  std::optional<tt::MomentAccumulator> mc;
  if (o.games > 0) {
    tt::Xoshiro256 rng(tt::stream_seed(o.seed, 0));
    mc = tt::expected_frank_bound_mc(params, o.games, rng);
  }
  if (o.format == "csv") {
    std::string out = "expected_frank,mc_n,mc_mean,mc_stderr\n";
    out += g15(tt::to_double(exact));
    out += ',';
    if (mc) {
      out += std::to_string(mc->n) + ',' + g15(tt::to_double(mc->mean())) + ',' +
             g15(mc->stderr_of_mean());
    } else {
      out += "0,,";
    }
    out += '\n';
    std::cout << out;
    return;
  }
  if (o.format == "json") {
    ordered_json j;
    j["params"] = params_json(params);
    put_exact(j, "expected_frank_bound", exact);
    if (mc) {
      ordered_json m;
      m["n"] = mc->n;
      m["seed"] = o.seed;
      put_exact(m, "mean", mc->mean());
      m["stderr"] = mc->stderr_of_mean();
      put_exact(m, "min", mc->min_v);
      put_exact(m, "max", mc->max_v);
      j["mc"] = m;
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ostringstream os;
  os << "params: " << params_line(params) << '\n';
  os << "expected_frank_bound: " << tt::ratio_string(exact) << " (~" << tt::to_sci(exact, 3) << ")\n";
  if (mc) {
    os << "mc_n: " << mc->n << '\n';
    os << "mc_seed: " << o.seed << '\n';
    os << "mc_mean: " << tt::ratio_string(mc->mean()) << " (~" << tt::to_sci(mc->mean(), 3) << ")\n";
    os << "mc_stderr: " << e6(mc->stderr_of_mean()) << '\n';
  }
  std::cout << os.str();
}

// --------------------------------------------------------------- profile

void emit_profiles(const Opts& o, const std::vector<std::pair<std::string, tt::BranchingProfile>>& runs) {
  int K = o.cards;
  if (o.format == "csv") {
    std::string out;
    bool tag = runs.size() > 1;
    out = tag ? "mode,trick,avg_moves,stderr,n\n" : "trick,avg_moves,stderr,n\n";
    for (const auto& [mode, prof] : runs) {
      for (int t = 0; t < K; ++t) {
        if (tag) {
          out += mode;
          out += ',';
        }
        out += std::to_string(t + 1) + ',' + f5(prof.mean(t)) + ',' + f5(prof.stderr_of_mean(t)) +
               ',' + std::to_string(prof.games) + '\n';
      }
    }
    std::cout << out;
    return;
  }
  if (o.format == "json") {
    ordered_json j;
    j["games"] = o.games;
    j["seed"] = o.seed;
    j["leader"] = o.leader;
    j["profiles"] = ordered_json::array();
    for (const auto& [mode, prof] : runs) {
      ordered_json p;
      p["mode"] = mode;
      p["tricks"] = ordered_json::array();
      for (int t = 0; t < K; ++t) {
        ordered_json row;
        row["trick"] = t + 1;
        row["avg_moves"] = prof.mean(t);
        row["stderr"] = prof.stderr_of_mean(t);
        row["mean_exact"] = tt::ratio_string(prof.exact_mean(t));
        row["n"] = prof.games;
        p["tricks"].push_back(row);
      }
      j["profiles"].push_back(p);
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ostringstream os;
  os << "games: " << o.games << '\n';
  os << "seed: " << o.seed << '\n';
  os << "leader: " << o.leader << '\n';
  for (const auto& [mode, prof] : runs) {
    os << "mode: " << mode << '\n';
    os << "trick avg_moves stderr n\n";
    for (int t = 0; t < K; ++t) {
      os << (t + 1) << ' ' << f5(prof.mean(t)) << ' ' << f5(prof.stderr_of_mean(t)) << ' '
         << prof.games << '\n';
    }
  }
  std::cout << os.str();
}

void run_profile(const Opts& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, tt::BranchingProfile>> runs;
  if (o.mode == "both") {
    auto [nt, tr] = tt::paired_trump_nt_profile(sampling_params(o, true), o.games, o.leader,
                                                o.seed, o.workers);
    runs.emplace_back("nt", std::move(nt));
    runs.emplace_back("trump", std::move(tr));
  } else {
    tt::GameParams params = sampling_params(o, o.mode == "trump");
    runs.emplace_back(o.mode, tt::branching_profile(params, o.games, o.leader, o.seed, o.workers));
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  uint64_t playouts = o.games * (o.mode == "both" ? 2 : 1);
  std::fprintf(stderr, "# profile: games=%llu workers=%d elapsed=%.2fs (%.3g playouts/s)\n",
               (unsigned long long)o.games, o.workers, dt, playouts / (dt > 0 ? dt : 1e-9));
  emit_profiles(o, runs);
}

// -------------------------------------------------------------- estimate

void emit_reports(const Opts& o, const std::vector<tt::TreeSizeReport>& reports) {
  if (o.format == "csv") {
    std::string out = "mode,n,mean,stderr,stddev,min,max\n";
    for (const auto& r : reports) {
      out += r.mode + ',' + std::to_string(r.acc.n) + ',' + g15(tt::to_double(r.acc.mean())) + ',' +
             g15(r.acc.stderr_of_mean()) + ',' + g15(r.acc.stddev()) + ',' +
             g15(tt::to_double(r.acc.min_v)) + ',' + g15(tt::to_double(r.acc.max_v)) + '\n';
    }
    std::cout << out;
    return;
  }
  if (o.format == "json") {
    ordered_json j;
    j["seed"] = o.seed;
    j["games"] = o.games;
    j["playouts_per_deal"] = o.playouts_per_deal;
    j["leader"] = o.leader;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json e;
      e["mode"] = r.mode;
      e["n"] = r.acc.n;
      put_exact(e, "mean", r.acc.mean());
      e["stderr"] = r.acc.stderr_of_mean();
      e["stddev"] = r.acc.stddev();
      put_exact(e, "min", r.acc.min_v);
      put_exact(e, "max", r.acc.max_v);
      j["reports"].push_back(e);
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ostringstream os;
  os << "seed: " << o.seed << '\n';
  for (const auto& r : reports) {
    os << "mode: " << r.mode << '\n';
    os << "n: " << r.acc.n << '\n';
    os << "mean: " << tt::ratio_string(r.acc.mean()) << " (~" << tt::to_sci(r.acc.mean(), 3) << ")\n";
    os << "stderr: " << e6(r.acc.stderr_of_mean()) << '\n';
    os << "stddev: " << e6(r.acc.stddev()) << '\n';
    os << "min: " << r.acc.min_v << " (~" << tt::to_sci(r.acc.min_v, 3) << ")\n";
    os << "max: " << r.acc.max_v << " (~" << tt::to_sci(r.acc.max_v, 3) << ")\n";
  }
  std::cout << os.str();
}

void run_estimate(const Opts& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<tt::TreeSizeReport> reports;
  if (o.mode == "both" || o.mode == "nt") {
    reports.push_back(tt::estimate_tree_size(sampling_params(o, false), o.games, o.leader, o.seed,
                                             o.workers, o.playouts_per_deal));
  }
  if (o.mode == "both" || o.mode == "trump") {
    reports.push_back(tt::estimate_tree_size(sampling_params(o, true), o.games, o.leader, o.seed,
                                             o.workers, o.playouts_per_deal));
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  uint64_t playouts = o.games * uint64_t(o.playouts_per_deal) * reports.size();
  std::fprintf(stderr, "# estimate: games=%llu workers=%d elapsed=%.2fs (%.3g playouts/s)\n",
               (unsigned long long)o.games, o.workers, dt, playouts / (dt > 0 ? dt : 1e-9));
  emit_reports(o, reports);
}

// ---------------------------------------------------------------- oracle

void run_oracle_leaves(const Opts& o) {
  tt::GameParams params = enumeration_params(o);
  tt::Deal deal = load_deal(o, params);
  tt::EnumerationGuard guard = guard_of(o);
  tt::BigCount leaves = tt::count_leaves(deal, params, o.leader, guard);
  tt::BigCount frank = tt::frank_lower_bound(deal, params);
  tt::BigCount upper = tt::tree_size_upper_bound(params);
  if (o.format == "csv") {
    std::cout << "leaves,frank_lower_bound,tree_size_upper_bound\n"
              << g15(tt::to_double(leaves)) << ',' << g15(tt::to_double(frank)) << ','
              << g15(tt::to_double(upper)) << '\n';
    return;
  }
  if (o.format == "json") {
    ordered_json j;
    j["params"] = params_json(params);
    j["deal"] = deal_echo(deal, params);
    j["leader"] = o.leader;
    put_exact(j, "leaves", leaves);
    put_exact(j, "frank_lower_bound", frank);
    put_exact(j, "tree_size_upper_bound", upper);
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ostringstream os;
  os << "params: " << params_line(params) << '\n';
  os << "deal: " << deal_echo(deal, params) << '\n';
  os << "leader: " << o.leader << '\n';
  os << "leaves: " << leaves << '\n';
  os << "frank_lower_bound: " << frank << '\n';
  os << "tree_size_upper_bound: " << upper << '\n';
  std::cout << os.str();
}

void run_oracle_states(const Opts& o) {
  tt::GameParams params = enumeration_params(o);
  tt::EnumerationGuard guard = guard_of(o);
  uint64_t scoreless = tt::count_reachable_states(params, false, guard, o.leader);
  uint64_t scored = tt::count_reachable_states(params, true, guard, o.leader);
  tt::BigCount bound_scoreless = tt::state_space_upper_bound(params, false);
  tt::BigCount bound_scored = tt::state_space_upper_bound(params, true);
  bool ok = tt::BigCount(scoreless) <= bound_scoreless && tt::BigCount(scored) <= bound_scored;
  if (o.format == "csv") {
    std::cout << "variant,states,bound\n"
              << "scoreless," << scoreless << ',' << g15(tt::to_double(bound_scoreless)) << '\n'
              << "scored," << scored << ',' << g15(tt::to_double(bound_scored)) << '\n';
    return;
  }
  if (o.format == "json") {
    ordered_json j;
    j["params"] = params_json(params);
    j["leader"] = o.leader;
    j["states_scoreless"] = scoreless;
    put_exact(j, "bound_scoreless", bound_scoreless);
    j["states_scored"] = scored;
    put_exact(j, "bound_scored", bound_scored);
    j["within_bounds"] = ok;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ostringstream os;
  os << "params: " << params_line(params) << '\n';
  os << "leader: " << o.leader << '\n';
  os << "states_scoreless: " << scoreless << '\n';
  os << "bound_scoreless: " << bound_scoreless << '\n';
  os << "states_scored: " << scored << '\n';
  os << "bound_scored: " << bound_scored << '\n';
  os << "within_bounds: " << (ok ? "true" : "false") << '\n';
  std::cout << os.str();
}

void run_verify(const Opts& o) {
  tt::GameParams params = enumeration_params(o);
  tt::Deal deal;
  if (!o.deal_path.empty()) {
    deal = load_deal(o, params);
  } else {
    tt::Xoshiro256 deal_rng(tt::stream_seed(o.seed, 0));
    deal = tt::deal_random(params, deal_rng);
  }
  tt::EnumerationGuard guard = guard_of(o);
  tt::Xoshiro256 rng(tt::stream_seed(o.seed, 1));
  tt::UnbiasednessReport report = tt::verify_unbiasedness(deal, params, o.games, rng, o.leader, guard);
  bool pass = report.passed();
  if (o.format == "csv") {
    std::cout << "exact_leaves,n,mean,stderr,z,pass\n"
              << g15(tt::to_double(report.exact_leaves)) << ',' << report.acc.n << ','
              << g15(tt::to_double(report.acc.mean())) << ',' << g15(report.acc.stderr_of_mean())
              << ',' << g15(report.z_score) << ',' << (pass ? "true" : "false") << '\n';
    return;
  }
  if (o.format == "json") {
    ordered_json j;
    j["params"] = params_json(params);
    j["deal"] = deal_echo(deal, params);
    j["leader"] = o.leader;
    j["seed"] = o.seed;
    put_exact(j, "exact_leaves", report.exact_leaves);
    j["n"] = report.acc.n;
    put_exact(j, "mean", report.acc.mean());
    j["stderr"] = report.acc.stderr_of_mean();
    j["z"] = report.z_score;
    j["pass"] = pass;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ostringstream os;
  os << "params: " << params_line(params) << '\n';
  os << "deal: " << deal_echo(deal, params) << '\n';
  os << "exact_leaves: " << report.exact_leaves << '\n';
  os << "n: " << report.acc.n << '\n';
  os << "mean: " << tt::ratio_string(report.acc.mean()) << " (~" << tt::to_sci(report.acc.mean(), 3)
     << ")\n";
  os << "stderr: " << e6(report.acc.stderr_of_mean()) << '\n';
  os << "z: " << f5(report.z_score) << '\n';
  os << "pass: " << (pass ? "true" : "false") << " (|z| <= 3)\n";
  std::cout << os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form bounds and Monte Carlo estimates for double-dummy trick-taking play"};
  app.require_subcommand(1);

  Opts bo, fo, po, eo, lo, so, vo;

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "per-k holding/position bounds and tree-size bounds");
  add_param_flags(bounds_cmd, bo);
  add_format_flag(bounds_cmd, bo);

  CLI::App* frank_cmd =
      app.add_subcommand("frank", "always-follow lower bound of a deal, or its expectation over deals");
  add_param_flags(frank_cmd, fo);
  add_format_flag(frank_cmd, fo);
  frank_cmd->add_option("--deal", fo.deal_path, "deal file (bridge or structured text)");
  fo.games = 0;
  frank_cmd->add_option("--games", fo.games, "Monte Carlo deals for the expectation cross-check");
  frank_cmd->add_option("--seed", fo.seed, "master seed");

  CLI::App* profile_cmd = app.add_subcommand("profile", "per-trick follower branching over random playouts");
  add_param_flags(profile_cmd, po);
  add_trump_flag(profile_cmd, po);
  add_format_flag(profile_cmd, po);
  profile_cmd->add_option("--mode", po.mode, "nt, trump, or both (paired)")
      ->check(CLI::IsMember({"nt", "trump", "both"}));
  profile_cmd->add_option("--games", po.games, "sampled deals");
  profile_cmd->add_option("--seed", po.seed, "master seed");
  profile_cmd->add_option("--workers", po.workers, "worker threads");
  profile_cmd->add_option("--leader", po.leader, "hand leading trick 1");

  CLI::App* estimate_cmd = app.add_subcommand("estimate", "tree-size estimates from degree products");
  add_param_flags(estimate_cmd, eo);
  add_trump_flag(estimate_cmd, eo);
  add_format_flag(estimate_cmd, eo);
  estimate_cmd->add_option("--mode", eo.mode, "nt, trump, or both (same deals)")
      ->check(CLI::IsMember({"nt", "trump", "both"}));
  estimate_cmd->add_option("--games", eo.games, "sampled deals");
  estimate_cmd->add_option("--playouts-per-deal", eo.playouts_per_deal, "playouts per sampled deal");
  estimate_cmd->add_option("--seed", eo.seed, "master seed");
  estimate_cmd->add_option("--workers", eo.workers, "worker threads");
  estimate_cmd->add_option("--leader", eo.leader, "hand leading trick 1");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive enumeration on tiny parametrizations");
  oracle_cmd->require_subcommand(1);
  CLI::App* leaves_cmd = oracle_cmd->add_subcommand("leaves", "exact leaf count of one deal");
  add_param_flags(leaves_cmd, lo);
  add_trump_flag(leaves_cmd, lo);
  add_format_flag(leaves_cmd, lo);
  leaves_cmd->add_option("--deal", lo.deal_path, "deal file")->required();
  leaves_cmd->add_option("--leader", lo.leader, "hand leading trick 1");
  add_guard_flags(leaves_cmd, lo, false);

  CLI::App* states_cmd = oracle_cmd->add_subcommand("states", "distinct reachable states of a whole family");
  add_param_flags(states_cmd, so);
  add_trump_flag(states_cmd, so);
  add_format_flag(states_cmd, so);
  states_cmd->add_option("--leader", so.leader, "hand leading trick 1");
  add_guard_flags(states_cmd, so, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "estimator mean against the exact leaf count");
  add_param_flags(verify_cmd, vo);
  add_trump_flag(verify_cmd, vo);
  add_format_flag(verify_cmd, vo);
  verify_cmd->add_option("--deal", vo.deal_path, "deal file (random deal from seed when omitted)");
  vo.games = 100'000;
  verify_cmd->add_option("--games", vo.games, "playouts");
  verify_cmd->add_option("--seed", vo.seed, "master seed");
  verify_cmd->add_option("--leader", vo.leader, "hand leading trick 1");
  add_guard_flags(verify_cmd, vo, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bounds_cmd) {
      run_bounds(bo);
    } else if (*frank_cmd) {
      run_frank(fo);
    } else if (*profile_cmd) {
      run_profile(po);
    } else if (*estimate_cmd) {
      run_estimate(eo);
    } else if (*oracle_cmd) {
      if (*leaves_cmd) {
        run_oracle_leaves(lo);
      } else {
        run_oracle_states(so);
      }
    } else if (*verify_cmd) {
      run_verify(vo);
    }
  } catch (const tt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_guard() ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
