#include "phimdp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "phimdp/agent.hpp"
#include "phimdp/environment.hpp"
#include "phimdp/io.hpp"

namespace phimdp {

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return std::string(buf);
}

} // namespace

CostConfig CliCostFlags::cost_config() const {
    CostConfig cfg;
    if (code_mode == "exact")
        cfg.code.mode = CodeMode::exact;
    else if (code_mode == "sparse")
        cfg.code.mode = CodeMode::sparse;
    else if (code_mode == "combinatorial")
        cfg.code.mode = CodeMode::combinatorial;
    else if (code_mode == "incremental")
        cfg.code.mode = CodeMode::incremental;
    else
        throw std::invalid_argument("unknown code mode '" + code_mode + "'");
    cfg.code.alpha = alpha;
    if (reward_model == "full")
        cfg.reward_model = RewardModel::full;
    else if (reward_model == "state-only")
        cfg.reward_model = RewardModel::state_only;
    else
        throw std::invalid_argument("unknown reward model '" + reward_model + "'");
    cfg.phi_penalty = phi_penalty;
    return cfg;
}

Criterion CliCostFlags::criterion_value() const {
    if (criterion == "cost") return Criterion::cost;
    if (criterion == "icost") return Criterion::icost;
    throw std::invalid_argument("unknown criterion '" + criterion + "'");
}

std::string cmd_run_agent(const RunAgentOptions& opt) {
    if (opt.replicas < 1) throw std::invalid_argument("run-agent: replicas must be >= 1");

    auto run_one = [&](int replica) {
        AgentConfig cfg;
        cfg.seed = opt.seed + static_cast<std::uint64_t>(replica);
        cfg.budget = opt.budget;
        cfg.gamma_cap = opt.gamma_cap;
        cfg.cost = opt.flags.cost_config();
        cfg.criterion = opt.flags.criterion_value();
        cfg.exploration.enabled = opt.exploration;
        auto env = make_environment(opt.env, cfg.seed);
        return run_experiment(cfg, *env, opt.cycles, opt.env);
    };

    std::vector<RunLog> logs(opt.replicas);
    if (opt.replicas == 1) {
        logs[0] = run_one(0);
    } else {
        // independent seeded runs, joined in replica order
        std::vector<std::thread> workers;
        workers.reserve(opt.replicas);
        for (int i = 0; i < opt.replicas; ++i)
            workers.emplace_back([&, i] { logs[i] = run_one(i); });
        for (std::thread& w : workers) w.join();
    }

    std::ostringstream out;
    for (int i = 0; i < opt.replicas; ++i) {
        if (opt.replicas > 1) out << "# replica " << i << "\n";
        write_run_log(out, logs[i]);
    }
    return out.str();
}

std::string cmd_eval_cost(const EvalCostOptions& opt) {
    const History h = read_history_file(opt.history_path);
    const SuffixSet phi = read_suffix_set_file(opt.phi_path);
    const CostConfig cfg = opt.flags.cost_config();
    const CostReport rep = cost(phi, h, cfg);
    const double icost_value = icost_bits(phi, h, cfg);
    return format_cost_report(rep, cfg, icost_value);
}

std::string cmd_search_phi(const SearchPhiOptions& opt) {
    const History h = read_history_file(opt.history_path);
    const CostConfig cfg = opt.flags.cost_config();
    const SearchResult res =
        search_phi(h, cfg, opt.flags.criterion_value(), opt.iterations, opt.seed);

    if (!opt.out_phi_path.empty()) write_suffix_set_file(opt.out_phi_path, res.best);

    std::ostringstream out;
    out << "# phimdp-search v1\n";
    out << "iterations " << opt.iterations << "\n";
    out << "seed " << opt.seed << "\n";
    for (const SearchTraceRow& row : res.trace)
        out << "trace " << row.iteration << ' ' << fixed6(row.current_bits) << ' '
            << fixed6(row.best_bits) << ' ' << (row.accepted ? 1 : 0) << '\n';
    out << "best_bits " << fixed6(res.best_bits) << "\n";
    for (const std::string& m : res.best.members())
        out << "best_member " << (m.empty() ? std::string("eps") : m) << '\n';
    return out.str();
}

double tiny_closed_form(int depth, long long transitions) {
    const double n = static_cast<double>(transitions);
    if (depth == 0) return 2.0 * n + 1.5 * std::log2(n);
    if (depth == 1) return 2.0 * n + 4.0 * std::log2(n / 2.0);
    const double states = std::pow(2.0, depth);
    return n + (states + 2.0) * (states / 2.0) * std::log2(n / states);
}

std::string cmd_tiny_table(const TinyTableOptions& opt) {
    TinyExampleEnv env(opt.seed);
    History h{env.alphabets()};
    auto [o, r] = env.reset();
    h.append_initial(o, r);
    for (long long t = 1; t < opt.cycles; ++t) {
        std::tie(o, r) = env.step(0);
        h.append_cycle(0, o, r);
    }

    const CostConfig cfg = opt.flags.cost_config();
    std::ostringstream out;
    out << "# phimdp-tiny-table v1\n";
    out << "cycles " << opt.cycles << "\n";
    out << "seed " << opt.seed << "\n";
    out << "transitions " << (opt.cycles - 1) << "\n";
    out << "columns depth,cost_bits,closed_form_bits,rel_err\n";

    int best_depth = 0;
    double best_bits = 0.0;
    for (int k = 0; k <= opt.max_depth; ++k) {
        const SuffixSet phi = SuffixSet::full_tree(2, k);
        const double bits = cost_bits(phi, h, cfg);
        const double predicted = tiny_closed_form(k, opt.cycles - 1);
        const double rel = std::abs(bits - predicted) / predicted;
        out << k << ',' << fixed6(bits) << ',' << fixed6(predicted) << ','
            << fixed6(rel) << '\n';
        if (k == 0 || bits < best_bits) {
            best_bits = bits;
            best_depth = k;
        }
    }
    out << "best_depth " << best_depth << "\n";
    return out.str();
}

int cli_main(int argc, char** argv) {
    CLI::App app{"feature reinforcement learning toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the command output to this file");

    auto add_cost_flags = [](CLI::App* cmd, CliCostFlags& flags, bool with_criterion) {
        cmd->add_option("--code-mode", flags.code_mode,
                        "exact|sparse|combinatorial|incremental")
            ->check(CLI::IsMember({"exact", "sparse", "combinatorial", "incremental"}));
        cmd->add_option("--reward-model", flags.reward_model, "full|state-only")
            ->check(CLI::IsMember({"full", "state-only"}));
        cmd->add_flag("--phi-penalty", flags.phi_penalty,
                      "charge the map one bit per tree node");
        cmd->add_option("--alpha", flags.alpha, "incremental-mode regularizer");
        if (with_criterion)
            cmd->add_option("--criterion", flags.criterion, "cost|icost")
                ->check(CLI::IsMember({"cost", "icost"}));
    };

    RunAgentOptions run_opt;
    CLI::App* run = app.add_subcommand("run-agent", "drive the agent on an environment");
    run->fallthrough();
    run->add_option("--env", run_opt.env, "environment name (tiny, chain:L)");
    run->add_option("--n", run_opt.cycles, "number of cycles");
    run->add_option("--seed", run_opt.seed, "master seed");
    run->add_option("--budget", run_opt.budget, "map proposals per cycle");
    run->add_option("--gamma-cap", run_opt.gamma_cap, "discount cap");
    run->add_option("--exploration", run_opt.exploration,
                    "exploration bonus on/off (default on)");
    run->add_option("--replicas", run_opt.replicas, "independent seeded runs");
    add_cost_flags(run, run_opt.flags, true);

    EvalCostOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval-cost", "score a map against a history file");
    eval->fallthrough();
    eval->add_option("--history", eval_opt.history_path, "history file")->required();
    eval->add_option("--phi", eval_opt.phi_path, "suffix set file")->required();
    add_cost_flags(eval, eval_opt.flags, false);

    SearchPhiOptions search_opt;
    CLI::App* search = app.add_subcommand("search-phi", "anneal a map on a history file");
    search->fallthrough();
    search->add_option("--history", search_opt.history_path, "history file")->required();
    search->add_option("--iterations", search_opt.iterations, "proposal count");
    search->add_option("--seed", search_opt.seed, "search seed");
    search->add_option("--phi-out", search_opt.out_phi_path, "write the best map here");
    add_cost_flags(search, search_opt.flags, true);

    TinyTableOptions table_opt;
    CLI::App* table = app.add_subcommand(
        "tiny-table", "depth-by-depth cost table on the stationary source");
    table->fallthrough();
    table->add_option("--n", table_opt.cycles, "number of cycles");
    table->add_option("--seed", table_opt.seed, "environment seed");
    table->add_option("--max-depth", table_opt.max_depth, "deepest window to score");
    add_cost_flags(table, table_opt.flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        std::string output;
        if (run->parsed())
            output = cmd_run_agent(run_opt);
        else if (eval->parsed())
            output = cmd_eval_cost(eval_opt);
        else if (search->parsed())
            output = cmd_search_phi(search_opt);
        else if (table->parsed())
            output = cmd_tiny_table(table_opt);
        if (out_path.empty())
            std::cout << output;
        else
            write_text_file(out_path, output);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace phimdp
