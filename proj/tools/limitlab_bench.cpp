// Serial vs OpenMP timings for the two parallel kernels: sweeps and the
// alg2 detector pool. Each pair is also checked for identical output.

#include "limitlab/harness.hpp"
#include "limitlab/scenario_io.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <iomanip>
#include <iostream>

using namespace limitlab;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool same)
{
    std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(3)
              << " serial " << std::setw(8) << serial << "s  parallel " << std::setw(8) << parallel << "s  speedup "
              << std::setprecision(2) << std::setw(5) << serial / parallel << "x  " << (same ? "identical" : "DIFFER")
              << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"limitlab_bench: serial vs OpenMP kernels"};
    std::uint64_t sweep_horizon = 1000;
    std::uint64_t pool_horizon = 400;
    Index max_target = 8;
    app.add_option("--sweep-horizon", sweep_horizon, "T for the negex/alg1 sweeps");
    app.add_option("--pool-horizon", pool_horizon, "T for the alg2 pool runs");
    app.add_option("--max-target", max_target, "Grid target indices 1..k");
    CLI11_PARSE(app, argc, argv);

    std::cout << "threads: " << omp_get_max_threads() << '\n';

    GridSpec negex;
    negex.collections = catalog();
    negex.max_target = max_target;
    negex.roles = standard_roles();
    negex.strategies = standard_strategies();
    negex.seeds = {1, 2};
    negex.horizon = sweep_horizon;
    negex.algorithm.kind = AlgorithmKind::negex;

    GridSpec alg1 = negex;
    alg1.collections = {&find_collection("multiples"), &find_collection("finite_prefixes")};
    alg1.algorithm.kind = AlgorithmKind::alg1;

    for (const auto& [name, spec] : {std::pair{"sweep negex", negex}, std::pair{"sweep alg1", alg1}}) {
        const auto scenarios = make_grid(spec);
        std::string serial_csv, parallel_csv;
        const double s = seconds([&] { serial_csv = summary_csv(run_sweep(scenarios, Execution::serial)); });
        const double p = seconds([&] { parallel_csv = summary_csv(run_sweep(scenarios, Execution::parallel)); });
        report(std::string(name) + " (" + std::to_string(scenarios.size()) + ")", s, p, serial_csv == parallel_csv);
    }

    for (const char* coll : {"multiples", "finite_prefixes"}) {
        GameScenario g;
        g.id = std::string(coll) + "/pool";
        g.collection = &find_collection(coll);
        g.target = max_target;
        g.adversary.kind = StrategyKind::repeat_heavy;
        g.adversary.seed = 1;
        g.horizon = pool_horizon;
        g.algorithm.kind = AlgorithmKind::alg2;
        GameScenario gp = g;
        gp.algorithm.pool_execution = Execution::parallel;
        std::string a, b;
        const double s = seconds([&] { a = transcript_jsonl(run_game(g).transcript); });
        const double p = seconds([&] { b = transcript_jsonl(run_game(gp).transcript); });
        report("alg2 pool " + std::string(coll), s, p, a == b);
    }
    return 0;
}
