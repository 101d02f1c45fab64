#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ifwar/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Intuitionistic-fuzzy threat assessment and wargame trainer"};
    app.require_subcommand(1);

    // --- assess ---
    std::string snapshot_path, params_path, assess_out;
    auto* assess_cmd = app.add_subcommand("assess", "Rank targets from a snapshot file");
    assess_cmd->add_option("--snapshot", snapshot_path, "snapshot JSON file")->required();
    assess_cmd->add_option("--params", params_path, "threat params JSON file")->required();
    assess_cmd->add_option("--out", assess_out, "output directory for CSV tables")->required();

    // --- train ---
    std::string train_config, train_algo = "madm-ppo", train_out;
    std::uint64_t train_seed = 0;
    long train_steps = -1;
    bool seed_given = false, steps_given = false;
    auto* train_cmd = app.add_subcommand("train", "Train the red-side policy");
    train_cmd->add_option("--config", train_config, "training config JSON file")->required();
    train_cmd->add_option("--algo", train_algo, "ppo | madm-ppo")
        ->check(CLI::IsMember({"ppo", "madm-ppo"}));
    train_cmd->add_option("--seed", train_seed, "seed override")->each([&](const std::string&) {
        seed_given = true;
    });
    train_cmd->add_option("--steps", train_steps, "total env steps override")
        ->each([&](const std::string&) { steps_given = true; });
    train_cmd->add_option("--out", train_out, "output directory")->required();

    // --- eval ---
    std::string eval_red, eval_blue = "rule", eval_scenario, eval_out, eval_traces;
    int eval_games = 100;
    std::uint64_t eval_seed = 1;
    auto* eval_cmd = app.add_subcommand("eval", "Play games against the rule policy");
    eval_cmd->add_option("--red", eval_red, "checkpoint path or 'rule'")->required();
    eval_cmd->add_option("--blue", eval_blue, "only 'rule' is supported")
        ->check(CLI::IsMember({"rule"}));
    eval_cmd->add_option("--games", eval_games, "number of games");
    eval_cmd->add_option("--seed", eval_seed, "master seed");
    eval_cmd->add_option("--scenario", eval_scenario, "scenario JSON file")->required();
    eval_cmd->add_option("--out", eval_out, "output directory");
    eval_cmd->add_option("--traces", eval_traces, "directory for per-game trace files");

    // --- replay ---
    std::string replay_trace;
    auto* replay_cmd = app.add_subcommand("replay", "Render a trace file as text");
    replay_cmd->add_option("--trace", replay_trace, "trace file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(assess_cmd)) {
            const auto out = ifwar::run_assess(snapshot_path, params_path, assess_out);
            std::cout << "targets: " << out.snapshot.targets.size() << '\n'
                      << "ranking: " << out.ranking_string << '\n'
                      << "tables written to " << assess_out << '\n';
        } else if (app.got_subcommand(train_cmd)) {
            const auto algo = ifwar::algo_from_string(train_algo);
            const auto out = ifwar::run_train(
                train_config, algo,
                seed_given ? std::optional<std::uint64_t>(train_seed) : std::nullopt,
                steps_given ? std::optional<long>(train_steps) : std::nullopt, train_out);
            double wins = 0;
            for (const auto& e : out.result.episodes) wins += e.win ? 1 : 0;
            std::cout << "algo: " << train_algo << "\nenv steps: " << out.result.env_steps
                      << "\nepisodes: " << out.result.episodes.size()
                      << "\ntrain win rate: "
                      << (out.result.episodes.empty() ? 0.0
                                                      : wins / out.result.episodes.size())
                      << "\ncheckpoint: " << out.checkpoint_path
                      << "\ncurves: " << out.curves_path << '\n';
        } else if (app.got_subcommand(eval_cmd)) {
            const auto report = ifwar::run_eval(eval_red, eval_games, eval_seed,
                                                eval_scenario, eval_out, eval_traces);
            std::cout << "games: " << report.games.size() << "\nred wins: " << report.red_wins
                      << "\nblue wins: " << report.blue_wins
                      << "\nred win rate: " << report.red_rate << '\n';
        } else if (app.got_subcommand(replay_cmd)) {
            ifwar::run_replay(replay_trace, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
