#include "msr/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "msr/generators.hpp"
#include "msr/kernel.hpp"
#include "msr/solvers.hpp"
#include "msr/verify.hpp"

namespace msr {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

Model parse_model(const std::string& name) {
    return name == "slide" ? Model::slide : Model::jump;
}

nlohmann::json result_document(Model model, bool shortest, const SolveResult& res,
                               long long elapsed_ms) {
    nlohmann::json doc;
    doc["model"] = model == Model::slide ? "slide" : "jump";
    doc["feasible"] = res.feasible();
    doc["shortest"] = shortest;
    if (res.feasible()) {
        doc["length"] = res.sequence->moves.size();
        nlohmann::json moves = nlohmann::json::array();
        for (const Move& m : res.sequence->moves)
            moves.push_back({{"path", m.path}, {"from_vertex", m.from_vertex}, {"to_vertex", m.to_vertex}});
        doc["moves"] = std::move(moves);
    }
    doc["stats"] = {{"states_explored", res.stats.states_explored}, {"elapsed_ms", elapsed_ms}};
    return doc;
}

struct Options {
    std::string instance_path;
    std::string model_name = "jump";
    bool shortest = false;
    std::uint64_t max_states = 100000000ULL;
    std::string out_path;
    std::string map_path;
    int budget = 0;
    std::string graph_path;
    std::vector<std::string> graph_paths;
    int kappa = 0;
    std::uint32_t seed = 1;
    int k = 2;
    int len = 4;
    double prob = 0.0;
    std::string sequence_path;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimum s-t-separator reconfiguration toolkit"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress informational messages");

    Options opt;
    std::function<int()> action;

    auto* solve = app.add_subcommand("solve", "reconfigure A into B");
    solve->add_option("--model", opt.model_name, "move model")
        ->required()
        ->check(CLI::IsMember({"slide", "jump"}));
    solve->add_flag("--shortest", opt.shortest, "guarantee a minimum-length sequence");
    solve->add_option("--max-states", opt.max_states, "state cap for the exact search");
    solve->add_option("instance", opt.instance_path, "instance file")->required();
    solve->callback([&] {
        action = [&]() {
            Instance inst = parse_instance(slurp(opt.instance_path));
            Model model = parse_model(opt.model_name);
            auto begin = std::chrono::steady_clock::now();
            SolveResult res = model == Model::slide ? solve_ts_shortest(inst)
                              : opt.shortest       ? solve_tj_shortest(inst, opt.max_states)
                                                   : solve_tj_feasible(inst);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - begin)
                               .count();
            bool shortest = model == Model::slide || opt.shortest;
            out << result_document(model, shortest, res, elapsed).dump() << "\n";
            return 0;
        };
    });

    auto* oracle = app.add_subcommand("oracle", "exhaustive reference search");
    oracle->add_option("--model", opt.model_name, "move model")
        ->required()
        ->check(CLI::IsMember({"slide", "jump"}));
    oracle->add_option("instance", opt.instance_path, "instance file")->required();
    oracle->callback([&] {
        action = [&]() {
            Instance inst = parse_instance(slurp(opt.instance_path));
            Model model = parse_model(opt.model_name);
            auto begin = std::chrono::steady_clock::now();
            SolveResult res = oracle_bfs(inst, model);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - begin)
                               .count();
            out << result_document(model, true, res, elapsed).dump() << "\n";
            return 0;
        };
    });

    auto* preprocess = app.add_subcommand("preprocess", "normalize a jumping-model instance");
    preprocess->add_option("instance", opt.instance_path, "instance file")->required();
    preprocess->add_option("-o,--output", opt.out_path, "reduced instance file (default stdout)");
    preprocess->add_option("--map", opt.map_path, "sidecar file mapping reduced ids to original ids");
    preprocess->callback([&] {
        action = [&]() {
            Instance inst = parse_instance(slurp(opt.instance_path));
            ReducedInstance ri = preprocess_tj(inst);
            std::string text = format_instance(ri.instance);
            if (opt.out_path.empty())
                out << text;
            else
                spill(opt.out_path, text);
            std::string map_path = opt.map_path;
            if (map_path.empty() && !opt.out_path.empty()) map_path = opt.out_path + ".map";
            if (!map_path.empty()) {
                std::ostringstream ms;
                for (int v = 1; v <= ri.instance.graph.vertex_count(); ++v)
                    ms << v << " " << ri.vertex_map[v] << "\n";
                spill(map_path, ms.str());
            }
            if (!quiet)
                err << "reduced " << inst.graph.vertex_count() << " vertices to "
                    << ri.instance.graph.vertex_count() << ", k " << inst.k() << " to "
                    << ri.k_reduced << "\n";
            return 0;
        };
    });

    auto* kernelize_cmd = app.add_subcommand("kernelize", "shrink to a budget-sized kernel or decide");
    kernelize_cmd->add_option("--budget", opt.budget, "allowed number of jumps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    kernelize_cmd->add_option("instance", opt.instance_path, "instance file")->required();
    kernelize_cmd->add_option("-o,--output", opt.out_path, "kernel instance file (default stdout)");
    kernelize_cmd->callback([&] {
        action = [&]() {
            Instance inst = parse_instance(slurp(opt.instance_path));
            KernelOutcome res = kernelize(inst, opt.budget);
            if (res.kind == KernelOutcome::Kind::decided_yes) {
                out << "DECIDED YES\n";
            } else if (res.kind == KernelOutcome::Kind::decided_no) {
                out << "DECIDED NO\n";
            } else {
                std::string text = format_instance(res.kernel->instance);
                if (opt.out_path.empty())
                    out << text;
                else
                    spill(opt.out_path, text);
            }
            if (!quiet && !res.reason.empty()) err << res.reason << "\n";
            return 0;
        };
    });

    auto* generate = app.add_subcommand("generate", "instance factories");
    generate->require_subcommand(1);

    auto emit_generated = [&](const GeneratedInstance& gen) {
        std::string text = "# ell " + std::to_string(gen.ell) + "\n" + format_instance(gen.instance);
        if (opt.out_path.empty())
            out << text;
        else
            spill(opt.out_path, text);
        return 0;
    };

    auto* vc = generate->add_subcommand("vc-gadget", "cover instance as separator reconfiguration");
    vc->add_option("--graph", opt.graph_path, "edge file")->required();
    vc->add_option("--kappa", opt.kappa, "cover budget")->required()->check(CLI::NonNegativeNumber);
    vc->add_option("-o,--output", opt.out_path, "instance file (default stdout)");
    vc->callback([&] {
        action = [&]() {
            return emit_generated(gen_vc_gadget(parse_plain_graph(slurp(opt.graph_path)), opt.kappa));
        };
    });

    auto* cross = generate->add_subcommand("cross", "chain several cover instances");
    cross->add_option("--graphs", opt.graph_paths, "edge files")->required()->expected(-1);
    cross->add_option("--kappa", opt.kappa, "shared cover budget")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cross->add_option("-o,--output", opt.out_path, "instance file (default stdout)");
    cross->callback([&] {
        action = [&]() {
            std::vector<PlainGraph> gs;
            for (const auto& path : opt.graph_paths) gs.push_back(parse_plain_graph(slurp(path)));
            std::vector<int> kappas(gs.size(), opt.kappa);
            return emit_generated(gen_cross_composition(gs, kappas));
        };
    });

    auto* random = generate->add_subcommand("random", "seeded layered instance");
    random->add_option("--seed", opt.seed, "random seed")->required();
    random->add_option("--k", opt.k, "number of paths")->required()->check(CLI::PositiveNumber);
    random->add_option("--len", opt.len, "vertices per path")->required()->check(CLI::Range(3, 1000000));
    random->add_option("--p", opt.prob, "crossing-edge probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    random->add_option("-o,--output", opt.out_path, "instance file (default stdout)");
    random->callback([&] {
        action = [&]() {
            Instance inst = gen_random_layered(opt.seed, opt.k, opt.len, opt.prob);
            std::string text = format_instance(inst);
            if (opt.out_path.empty())
                out << text;
            else
                spill(opt.out_path, text);
            return 0;
        };
    });

    auto* verify = app.add_subcommand("verify", "replay a claimed sequence");
    verify->add_option("instance", opt.instance_path, "instance file")->required();
    verify->add_option("sequence", opt.sequence_path, "sequence file")->required();
    verify->callback([&] {
        action = [&]() {
            Instance inst = parse_instance(slurp(opt.instance_path));
            SequenceFile sf = parse_sequence_file(slurp(opt.sequence_path));
            Verdict v = verify_sequence(inst, sf.model, sf.moves);
            if (v.accepted) {
                out << "ACCEPT\n";
                return 0;
            }
            out << "REJECT step=" << v.step << " reason=" << v.reason << "\n";
            return 1;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const StateSpaceExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const GenerationFailed& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace msr
