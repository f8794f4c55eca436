/*
 * Copyright 2026 The pfgames Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// pfg: command-line front end for TU and TUX games.
//
// Exit status: 0 on success, 1 when a verify check fails, 2 on usage,
// input or domain errors.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "pfg/pfg.hpp"

namespace {

using pfg::io::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "json";
  bool as_float = false;

  json value(const pfg::Rational& r) const {
    if (as_float) return pfg::to_double(r);
    return pfg::to_string(r);
  }
  std::string text(const pfg::Rational& r) const {
    if (!as_float) return pfg::to_string(r);
    std::ostringstream out;
    out << std::setprecision(12) << pfg::to_double(r);
    return out.str();
  }

  void payoffs(const pfg::PayoffVector& p) const {
    if (format == "table") {
      std::cout << "player\tpayoff\n";
      for (const auto& [i, x] : p) std::cout << i << "\t" << text(x) << "\n";
      return;
    }
    json out = json::object();
    for (const auto& [i, x] : p) out[std::to_string(i)] = value(x);
    std::cout << out.dump() << "\n";
  }

  void scalar(const std::string& name, const pfg::Rational& r) const {
    if (format == "table") {
      std::cout << name << "\t" << text(r) << "\n";
      return;
    }
    std::cout << json{{name, value(r)}}.dump() << "\n";
  }
};

pfg::TuxGame as_tux(const pfg::io::AnyGame& g) {
  if (const auto* v = std::get_if<pfg::TuGame>(&g)) return pfg::TuxGame::lift(*v);
  return std::get<pfg::TuxGame>(g);
}

pfg::TuGame as_tu(const pfg::io::AnyGame& g) {
  if (const auto* v = std::get_if<pfg::TuGame>(&g)) return *v;
  std::optional<pfg::TuGame> v = pfg::is_externality_free(std::get<pfg::TuxGame>(g));
  if (!v) throw pfg::DomainError("this command needs a game without externalities");
  return *v;
}

pfg::Coalition coalition_arg(const std::string& text, const char* flag) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw pfg::ParseError(std::string(flag) + ": expected a JSON array");
  return pfg::io::coalition_from_json(j, flag);
}

pfg::Partition partition_arg(const std::string& text, const char* flag) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw pfg::ParseError(std::string(flag) + ": expected a JSON array");
  return pfg::io::partition_from_json(j, flag);
}

// Accepts "4", "2,4" or "[2,4]".
pfg::Coalition players_arg(std::string text, const char* flag) {
  if (text.empty() || text.front() != '[') text = "[" + text + "]";
  return coalition_arg(text, flag);
}

pfg::Solution solution_arg(const std::string& text) {
  if (text == "mpw") return pfg::mpw_solution();
  if (text.rfind("p-shapley:", 0) == 0)
    return pfg::p_shapley_solution(pfg::io::parse_family(text.substr(10)));
  if (text.rfind("r-shapley:", 0) == 0)
    return pfg::r_shapley_solution(pfg::io::parse_operator(text.substr(10)));
  throw pfg::ParseError("unknown solution '" + text +
                        "' (expected mpw, p-shapley:<family> or r-shapley:<operator>)");
}

void emit_game(const json& game) { std::cout << game.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solutions, restriction operators and axiom checks for games with externalities"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--float", out.as_float, "Print payoffs as decimals instead of p/q");

  std::string game_path;
  std::string family_text = "pstar";
  std::string op_text = "rstar";

  auto* shapley = app.add_subcommand("shapley", "Shapley value of a TU game");
  std::string route = "shapley";
  shapley->add_option("--game", game_path, "Game file")->required();
  shapley->add_option("--route", route, "Computation route")
      ->check(CLI::IsMember({"shapley", "crp", "potential"}));

  auto* potential = app.add_subcommand("potential", "Potential of a TU game or r-potential of a TUX game");
  potential->add_option("--game", game_path, "Game file")->required();
  potential->add_option("--op", op_text, "Restriction operator for TUX games");

  auto* mpw_cmd = app.add_subcommand("mpw", "MPW solution");
  mpw_cmd->add_option("--game", game_path, "Game file")->required();

  auto* p_shapley = app.add_subcommand("p-shapley", "p-Shapley value for a random partition family");
  p_shapley->add_option("--game", game_path, "Game file")->required();
  p_shapley->add_option("--family", family_text, "Random partition family");

  auto* restrict_cmd = app.add_subcommand("restrict", "Remove players with a restriction operator");
  std::string remove_text;
  std::optional<std::string> cell_s;
  std::optional<std::string> cell_pi;
  restrict_cmd->add_option("--game", game_path, "Game file")->required();
  restrict_cmd->add_option("--op", op_text, "Restriction operator");
  restrict_cmd->add_option("--remove", remove_text, "Players to remove, e.g. 4 or 2,4")->required();
  restrict_cmd->add_option("--S", cell_s, "Query one worth: coalition as a JSON array");
  restrict_cmd->add_option("--pi", cell_pi, "Query one worth: outside partition as a JSON array");

  auto* aux = app.add_subcommand("aux-game", "Auxiliary TU game of a TUX game");
  aux->add_option("--game", game_path, "Game file")->required();
  aux->add_option("--op", op_text, "Restriction operator");

  auto* verify = app.add_subcommand("verify", "Run property checks; one JSON report per line");
  std::vector<std::string> checks;
  std::string solution_text = "mpw";
  int n_max = 4;
  verify->add_option("--check", checks, "gen, ci, pos, restriction, null-player, monotonicity")
      ->required()
      ->check(CLI::IsMember({"gen", "ci", "pos", "restriction", "null-player", "monotonicity"}));
  verify->add_option("--family", family_text, "Random partition family");
  verify->add_option("--op", op_text, "Restriction operator");
  verify->add_option("--solution", solution_text,
                     "mpw, p-shapley:<family> or r-shapley:<operator>");
  verify->add_option("--nmax", n_max, "Largest player-set size checked")->check(CLI::Range(0, 16));

  auto* sample = app.add_subcommand("sample", "Monte Carlo payoff estimate");
  std::string target = "shapley";
  pfg::PlayerId player = 1;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  sample->add_option("--game", game_path, "Game file")->required();
  sample->add_option("--target", target, "shapley or mpw");
  sample->add_option("--player", player, "Player id")->required();
  sample->add_option("--samples", samples, "Number of draws")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Random seed");
  sample->add_option("--workers", workers, "Worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List partitions or embedded coalitions");
  std::string what = "partitions";
  std::string players_text;
  std::optional<std::string> enum_family;
  enumerate->add_option("--players", players_text, "Player count n, or a list such as [1,3,4]")
      ->required();
  enumerate->add_option("--what", what, "partitions or embedded")
      ->check(CLI::IsMember({"partitions", "embedded"}));
  enumerate->add_option("--family", enum_family, "Also print partition probabilities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (shapley->parsed()) {
      const pfg::TuGame v = as_tu(pfg::io::load_game(game_path));
      if (route == "shapley") {
        out.payoffs(pfg::tu_shapley(v));
      } else if (route == "crp") {
        out.payoffs(pfg::crp_shapley(v));
      } else {
        pfg::PayoffVector p;
        const pfg::Rational whole = pfg::tu_potential(v);
        for (pfg::PlayerId i : v.players().members())
          p.emplace(i, whole - pfg::tu_potential(pfg::tu_subgame(v, pfg::Coalition::single(i))));
        out.payoffs(p);
      }
    } else if (potential->parsed()) {
      const auto game = pfg::io::load_game(game_path);
      if (const auto* v = std::get_if<pfg::TuGame>(&game)) {
        out.scalar("potential", pfg::tu_potential(*v));
      } else {
        out.scalar("potential", pfg::r_potential(pfg::io::parse_operator(op_text),
                                                 std::get<pfg::TuxGame>(game)));
      }
    } else if (mpw_cmd->parsed()) {
      out.payoffs(pfg::mpw(as_tux(pfg::io::load_game(game_path))));
    } else if (p_shapley->parsed()) {
      out.payoffs(pfg::p_shapley_vector(as_tux(pfg::io::load_game(game_path)),
                                        pfg::io::parse_family(family_text)));
    } else if (restrict_cmd->parsed()) {
      const pfg::RestrictionOperator op = pfg::io::parse_operator(op_text);
      const pfg::TuxGame w = as_tux(pfg::io::load_game(game_path));
      const pfg::TuxGame sub =
          pfg::restrict_many(op, w, players_arg(remove_text, "--remove"));
      if (cell_s.has_value() != cell_pi.has_value())
        throw pfg::DomainError("--S and --pi must be given together");
      if (cell_s) {
        const pfg::EmbeddedCoalition cell{coalition_arg(*cell_s, "--S"),
                                          partition_arg(*cell_pi, "--pi")};
        if (cell.ambient() != sub.players() || !cell.coalition.disjoint(cell.outside.ambient()))
          throw pfg::DomainError(pfg::to_string(cell) + " is not an embedded coalition of " +
                                 pfg::to_string(sub.players()));
        const pfg::Rational& x = sub.worth(cell);
        if (out.format == "table") {
          std::cout << pfg::to_string(cell) << "\t" << out.text(x) << "\n";
        } else {
          std::cout << json{{"S", pfg::io::to_json(cell.coalition)},
                            {"pi", pfg::io::to_json(cell.outside)},
                            {"w", out.value(x)}}
                           .dump()
                    << "\n";
        }
      } else {
        emit_game(pfg::io::to_json(sub));
      }
    } else if (aux->parsed()) {
      emit_game(pfg::io::to_json(
          pfg::auxiliary_game(pfg::io::parse_operator(op_text), as_tux(pfg::io::load_game(game_path)))));
    } else if (verify->parsed()) {
      bool all_passed = true;
      for (const std::string& check : checks) {
        pfg::Report r;
        if (check == "gen") r = pfg::check_gen(pfg::io::parse_family(family_text), n_max);
        if (check == "ci") r = pfg::check_ci(pfg::io::parse_family(family_text), n_max);
        if (check == "pos") r = pfg::check_pos(pfg::io::parse_family(family_text), n_max);
        if (check == "monotonicity")
          r = pfg::check_monotonicity_conditions(pfg::io::parse_family(family_text), n_max);
        if (check == "restriction")
          r = pfg::check_restriction_axioms(pfg::io::parse_operator(op_text), n_max);
        if (check == "null-player")
          r = pfg::check_null_player_axiom(solution_arg(solution_text), n_max);
        all_passed = all_passed && r.passed;
        if (out.format == "table") {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.subject << " checked=" << r.checked;
          if (r.witness) std::cout << " witness: " << pfg::describe(*r.witness);
          std::cout << "\n";
        } else {
          std::cout << pfg::io::to_json(r).dump() << "\n";
        }
      }
      return all_passed ? kExitOk : kExitCheckFailed;
    } else if (sample->parsed()) {
      const auto game = pfg::io::load_game(game_path);
      const pfg::Target t = pfg::parse_target(target);
      const pfg::SampleEstimate e = std::visit(
          [&](const auto& g) { return pfg::estimate_payoff(g, player, t, samples, seed, workers); },
          game);
      std::cout << pfg::io::to_json(e).dump() << "\n";
    } else if (enumerate->parsed()) {
      pfg::PlayerSet players;
      if (!players_text.empty() && players_text.front() == '[') {
        players = coalition_arg(players_text, "--players");
      } else {
        std::size_t used = 0;
        int n = -1;
        try {
          n = std::stoi(players_text, &used);
        } catch (const std::exception&) {
        }
        if (used != players_text.size() || n < 0 || n > pfg::kMaxPlayerId)
          throw pfg::ParseError("--players: expected a count or a JSON array");
        players = pfg::Coalition::first_n(n);
      }
      if (what == "partitions") {
        std::optional<pfg::RandomPartitionFamily> family;
        if (enum_family) family = pfg::io::parse_family(*enum_family);
        for (const pfg::Partition& pi : pfg::enumerate_partitions(players)) {
          if (out.format == "table") {
            std::cout << pfg::to_string(pi);
            if (family) std::cout << "\t" << out.text(family->prob(players, pi));
            std::cout << "\n";
          } else {
            json line = {{"partition", pfg::io::to_json(pi)}};
            if (family) line["prob"] = out.value(family->prob(players, pi));
            std::cout << line.dump() << "\n";
          }
        }
      } else {
        for (const pfg::EmbeddedCoalition& c : pfg::enumerate_embedded(players)) {
          if (out.format == "table") {
            std::cout << pfg::to_string(c) << "\n";
          } else {
            std::cout << json{{"S", pfg::io::to_json(c.coalition)},
                              {"pi", pfg::io::to_json(c.outside)}}
                             .dump()
                      << "\n";
          }
        }
      }
    }
  } catch (const pfg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // DomainError, PositivityError and CapacityError.
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
