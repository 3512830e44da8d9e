// umaxpro: generate, evaluate, and benchmark space-filling designs.

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "umaxpro/annealer.hpp"
#include "umaxpro/bench.hpp"
#include "umaxpro/criteria.hpp"
#include "umaxpro/design.hpp"
#include "umaxpro/discrepancy.hpp"
#include "umaxpro/io.hpp"
#include "umaxpro/rng.hpp"
#include "umaxpro/samplers.hpp"
#include "umaxpro/uniformity.hpp"

using namespace umaxpro;
namespace fs = std::filesystem;

namespace {

struct OptimizerOptions {
    std::string criterion = "umaxpro";
    std::string metric;  // empty = criterion default
    int n_sim = 16;
    int n_var = 2;
    int runs = 1;
    std::uint64_t seed = 0;
    double alpha = 0.95;
    double t_init = 0.0;  // 0 = auto
    double t_min = 0.0;   // 0 = auto
    int moves_per_temp = 0;
    int stall_limit = 30;
    std::string placement = "median";
    int threads = 1;
};

int default_threads() {
    if (const char* env = std::getenv("UMAXPRO_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

CriterionSpec make_spec(const OptimizerOptions& o) {
    MetricKind metric = MetricKind::intersite;
    if (o.metric == "periodic") metric = MetricKind::periodic;
    else if (!o.metric.empty() && o.metric != "intersite")
        throw DesignError("unknown metric: " + o.metric);

    if (o.criterion == "umaxpro") return CriterionSpec::umaxpro();
    if (o.criterion == "maxpro") return CriterionSpec::maxpro();
    if (o.criterion == "maximin") return CriterionSpec::maximin(metric);
    if (o.criterion == "pmaximin") return CriterionSpec::periodic_maximin();
    if (o.criterion == "mm") return CriterionSpec::morris_mitchell(15.0, metric);
    throw DesignError("unknown criterion: " + o.criterion);
}

Schedule make_schedule(const OptimizerOptions& o) {
    Schedule s;
    s.cooling_ratio = o.alpha;
    if (o.t_init > 0.0) s.t_init = o.t_init;
    if (o.t_min > 0.0) s.t_min = o.t_min;
    s.moves_per_temperature = o.moves_per_temp;
    s.stall_limit = o.stall_limit;
    s.validate();
    return s;
}

Placement make_placement(const OptimizerOptions& o) {
    if (o.placement == "median") return Placement::median;
    if (o.placement == "random") return Placement::random;
    throw DesignError("unknown placement: " + o.placement);
}

void add_optimizer_flags(CLI::App* cmd, OptimizerOptions& o) {
    cmd->add_option("--criterion", o.criterion, "umaxpro|maxpro|maximin|pmaximin|mm")
        ->check(CLI::IsMember({"umaxpro", "maxpro", "maximin", "pmaximin", "mm"}));
    cmd->add_option("--metric", o.metric, "intersite|periodic (maximin/mm only)")
        ->check(CLI::IsMember({"intersite", "periodic"}));
    cmd->add_option("--nsim", o.n_sim, "number of design points")->check(CLI::Range(2, 100000));
    cmd->add_option("--nvar", o.n_var, "number of dimensions")->check(CLI::Range(1, 64));
    cmd->add_option("--runs", o.runs, "independent optimization runs")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--alpha", o.alpha, "geometric cooling ratio")
        ->check(CLI::Range(1e-6, 0.999999));
    cmd->add_option("--t-init", o.t_init, "initial temperature (0 = auto)");
    cmd->add_option("--t-min", o.t_min, "final temperature (0 = auto)");
    cmd->add_option("--moves-per-temp", o.moves_per_temp,
                    "proposals per temperature (0 = 20*nsim*nvar)");
    cmd->add_option("--stall-limit", o.stall_limit,
                    "temperature steps without improvement before stopping");
    cmd->add_option("--placement", o.placement, "median|random")
        ->check(CLI::IsMember({"median", "random"}));
    cmd->add_option("--threads", o.threads, "worker threads (env UMAXPRO_THREADS)")
        ->check(CLI::PositiveNumber);
}

// Runs fn(i) for i in [0, count) over a fixed-size worker pool; any worker
// exception is rethrown on the calling thread.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

OptResult run_one(const OptimizerOptions& o, const CriterionSpec& spec, const Schedule& sched,
                  int run) {
    LhsDesign init = random_lhs(o.n_sim, o.n_var, derive_stream(o.seed, 2 * run),
                                make_placement(o));
    return optimize(init, spec, sched, derive_stream(o.seed, 2 * run + 1));
}

// ------------------------------------------------------------------ generate

int cmd_generate(const OptimizerOptions& o, const std::string& out_dir) {
    const CriterionSpec spec = make_spec(o);
    const Schedule sched = make_schedule(o);
    fs::create_directories(out_dir);

    std::vector<OptResult> results(o.runs);
    parallel_for(o.runs, o.threads, [&](int r) { results[r] = run_one(o, spec, sched, r); });

    for (int r = 0; r < o.runs; ++r) {
        const OptResult& res = results[r];
        Design d = realize(res.best);
        char name[64];
        std::snprintf(name, sizeof(name), "design_%03d.csv", r);
        fs::path file = fs::path(out_dir) / name;
        write_design_csv(file, d);

        DesignMetadata meta;
        meta.n_sim = o.n_sim;
        meta.n_var = o.n_var;
        meta.criterion = criterion_name(spec.kind);
        meta.metric = metric_name(spec.effective_metric());
        meta.placement = o.placement;
        meta.alpha = sched.cooling_ratio;
        meta.t_init = res.t_init_used;
        meta.t_min = sched.t_min.value_or(1e-6 * res.t_init_used);
        meta.moves_per_temp = sched.resolved_moves(o.n_sim, o.n_var);
        meta.stall_limit = sched.stall_limit;
        meta.seed = derive_stream(o.seed, 2 * r + 1);
        meta.objective = spec.maximize_sense() ? -res.best_value : res.best_value;
        meta.wd2 = wd2_report(d).wd2;
        write_metadata(file, meta);
        std::printf("%s  objective %.17g\n", file.string().c_str(), meta.objective);
    }
    return 0;
}

// ------------------------------------------------------------------ evaluate

void print_metrics_row(const std::string& label, const Design& d) {
    auto wd = wd2_report(d);
    std::printf("%s,%d,%d,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", label.c_str(), d.n_sim,
                d.n_var, wd.wd2_squared, wd.wd2, maximin_value(d, MetricKind::intersite),
                maximin_value(d, MetricKind::periodic), maxpro_value(d).value,
                umaxpro_value(d).value);
}

int cmd_evaluate(const std::vector<std::string>& files, int subspaces) {
    std::printf(
        "design,n_sim,n_var,wd2_squared,wd2,maximin_intersite,maximin_periodic,maxpro,"
        "umaxpro\n");
    for (const auto& f : files) {
        Design d = read_design_csv(f);
        print_metrics_row(f, d);
        if (subspaces > 0) {
            for (const auto& sel : all_subspaces(d.n_var, subspaces)) {
                std::string label = f + ":";
                for (std::size_t k = 0; k < sel.dims.size(); ++k)
                    label += (k ? "+" : "") + std::to_string(sel.dims[k]);
                print_metrics_row(label, project(d, sel));
            }
        }
    }
    return 0;
}

// ----------------------------------------------------------------- histogram

int cmd_histogram(const OptimizerOptions& o, const std::string& in_dir, int layers,
                  long n_mc) {
    std::vector<Design> designs;
    if (!in_dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(in_dir))
            if (e.path().extension() == ".csv") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw IoError("no .csv designs in " + in_dir);
        for (const auto& f : files) designs.push_back(read_design_csv(f));
    } else {
        const CriterionSpec spec = make_spec(o);
        const Schedule sched = make_schedule(o);
        designs.resize(o.runs);
        parallel_for(o.runs, o.threads,
                     [&](int r) { designs[r] = realize(run_one(o, spec, sched, r).best); });
    }

    auto hist = bin_histogram(designs);
    std::printf("# bins %zu, runs %ld, chi_square %.6g, df %d, p_value %.6g\n",
                hist.counts.size(), hist.n_run, hist.chi_square, hist.df, hist.p_value);
    std::printf("bin,count,relative\n");
    for (std::size_t b = 0; b < hist.counts.size(); ++b)
        std::printf("%zu,%ld,%.12g\n", b, hist.counts[b], hist.relative[b]);

    auto prof = radial_profile(designs, layers, n_mc, o.seed ^ 0x9e3779b97f4a7c15ULL);
    std::printf("# radial delta %.6g\n", prof.delta);
    std::printf("layer,r_lo,r_hi,count,volume,density_ratio\n");
    for (std::size_t k = 0; k < prof.counts.size(); ++k)
        std::printf("%zu,%.12g,%.12g,%ld,%.12g,%.12g\n", k, prof.layer_edges[k],
                    prof.layer_edges[k + 1], prof.counts[k], prof.shell_volumes[k],
                    prof.density_ratio[k]);
    return 0;
}

// ----------------------------------------------------------------- benchmark

int cmd_benchmark(const OptimizerOptions& o, const std::string& sampler,
                  const std::string& function, const std::vector<int>& nsim_grid,
                  const std::string& halton_shift, const std::string& out_dir) {
    TestFunctionKind kind;
    int active = 0;
    if (function == "product") {
        kind = TestFunctionKind::product_exp;
        active = o.n_var;
    } else if (function == "short-column") {
        kind = TestFunctionKind::short_column;
        active = 3;
    } else if (function == "cantilever-stress") {
        kind = TestFunctionKind::cantilever_stress;
        active = 4;
    } else if (function == "cantilever-displacement") {
        kind = TestFunctionKind::cantilever_displacement;
        active = 4;
    } else {
        throw DesignError("unknown function: " + function);
    }
    if (o.n_var < active)
        throw DesignError("--nvar must be at least the function dimension " +
                          std::to_string(active));
    Integrand f(kind, active);
    // active columns are the leading ones; any extra design dimensions act as
    // redundant variables that are dropped at evaluation
    SubspaceSelector sel;
    for (int v = 0; v < active; ++v) sel.dims.push_back(v);

    std::vector<BenchmarkRecord> summary;
    std::ostringstream runs_table;
    runs_table << "method,n_sim,run,estimate\n";
    for (int n : nsim_grid) {
        OptimizerOptions local = o;
        local.n_sim = n;
        std::vector<double> est(o.runs);
        std::vector<std::uint64_t> seeds(o.runs);
        const CriterionSpec spec = make_spec(local);
        const Schedule sched = make_schedule(local);
        parallel_for(o.runs, o.threads, [&](int r) {
            std::uint64_t run_seed = derive_stream(o.seed, 2 * r);
            seeds[r] = run_seed;
            Design d;
            if (sampler == "srs") {
                d = srs(n, o.n_var, run_seed);
            } else if (sampler == "lhs") {
                d = realize(random_lhs(n, o.n_var, run_seed, make_placement(o)));
            } else if (sampler == "halton") {
                if (halton_shift == "random")
                    d = halton(n, o.n_var, HaltonSpec{}, run_seed);
                else
                    d = halton(n, o.n_var);
            } else if (sampler == "anneal") {
                d = realize(run_one(local, spec, sched, r).best);
            } else {
                throw DesignError("unknown sampler: " + sampler);
            }
            est[r] = mc_mean(d, sel, f);
        });
        for (int r = 0; r < o.runs; ++r)
            runs_table << sampler << ',' << n << ',' << r << ',' << format_coord(est[r])
                       << '\n';
        summary.push_back(summarize_runs(sampler, n, est, f.exact_mean(), seeds));
    }

    std::ostringstream summary_table;
    summary_table << "method,n_sim,n_run,mean,stddev,rmse,exact\n";
    for (const auto& rec : summary) {
        summary_table << rec.method << ',' << rec.n_sim << ',' << rec.n_run << ','
                      << format_coord(rec.mean) << ',' << format_coord(rec.stddev) << ',';
        if (rec.exact)
            summary_table << format_coord(rec.rmse) << ',' << format_coord(*rec.exact);
        else
            summary_table << ",";
        summary_table << '\n';
    }

    if (out_dir.empty()) {
        std::fputs(runs_table.str().c_str(), stdout);
        std::fputs(summary_table.str().c_str(), stdout);
    } else {
        fs::create_directories(out_dir);
        auto atomic_write = [&](const fs::path& target, const std::string& text) {
            fs::path tmp = target;
            tmp += ".tmp";
            std::ofstream out(tmp);
            out << text;
            out.close();
            if (!out) throw IoError("cannot write " + target.string());
            fs::rename(tmp, target);
        };
        atomic_write(fs::path(out_dir) / "runs.csv", runs_table.str());
        atomic_write(fs::path(out_dir) / "summary.csv", summary_table.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-filling design toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    OptimizerOptions opt;
    opt.threads = default_threads();
    std::string out_dir = ".";
    std::string in_dir;
    std::vector<std::string> eval_files;
    int subspaces = 0;
    std::string sampler = "anneal";
    std::string function = "product";
    std::string halton_shift = "none";
    std::string format = "csv";
    std::vector<int> nsim_grid;
    int layers = 20;
    long n_mc = 500000;

    auto* generate = app.add_subcommand("generate", "optimize designs and write them out");
    add_optimizer_flags(generate, opt);
    generate->add_option("--out", out_dir, "output directory");
    generate->add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}));

    auto* evaluate = app.add_subcommand("evaluate", "metric battery over design files");
    evaluate->add_option("files", eval_files, "design csv files")->required();
    evaluate->add_option("--subspaces", subspaces, "also evaluate every k-subspace")
        ->check(CLI::Range(1, 64));

    auto* histogram = app.add_subcommand("histogram", "bin occupancy and radial profile");
    add_optimizer_flags(histogram, opt);
    histogram->add_option("--in", in_dir, "load designs from a directory instead");
    histogram->add_option("--layers", layers, "radial layers")->check(CLI::PositiveNumber);
    histogram->add_option("--mc", n_mc, "shell-volume sample size")
        ->check(CLI::PositiveNumber);

    auto* benchmark = app.add_subcommand("benchmark", "integration benchmark grid");
    add_optimizer_flags(benchmark, opt);
    benchmark->add_option("--sampler", sampler, "srs|lhs|halton|anneal")
        ->check(CLI::IsMember({"srs", "lhs", "halton", "anneal"}));
    benchmark
        ->add_option("--function", function,
                     "product|short-column|cantilever-stress|cantilever-displacement")
        ->check(CLI::IsMember(
            {"product", "short-column", "cantilever-stress", "cantilever-displacement"}));
    benchmark->add_option("--nsim-grid", nsim_grid, "design sizes (default: --nsim)");
    benchmark->add_option("--halton-shift", halton_shift, "none|random")
        ->check(CLI::IsMember({"none", "random"}));
    benchmark->add_option("--out", out_dir, "output directory (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(opt, out_dir);
        if (evaluate->parsed()) return cmd_evaluate(eval_files, subspaces);
        if (histogram->parsed()) return cmd_histogram(opt, in_dir, layers, n_mc);
        if (benchmark->parsed()) {
            if (nsim_grid.empty()) nsim_grid.push_back(opt.n_sim);
            std::string bench_out = benchmark->count("--out") ? out_dir : "";
            return cmd_benchmark(opt, sampler, function, nsim_grid, halton_shift, bench_out);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
