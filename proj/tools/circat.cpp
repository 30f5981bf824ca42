// Command line front end: spectra, entropies, periods, orbits and ensemble
// studies for symplectically coupled cat maps on circulant graphs.
//
// Exit codes: 0 success, 2 invalid input, 3 every sweep row censored.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circat/circat.hpp"

using nlohmann::ordered_json;
using namespace circat;

namespace {

struct GraphOpts {
    std::string bits;
    std::size_t n = 0;
    unsigned stride = 1;
    bool self_loops = false;
};

void add_graph_options(CLI::App* cmd, GraphOpts& o) {
    auto* g = cmd->add_option("--g", o.bits,
                              "coupling row as a bit string g_0..g_{n-1}, e.g. 011 for a triangle");
    auto* n = cmd->add_option("--n", o.n, "ring size; selects the stride family graph");
    cmd->add_option("--stride", o.stride, "stride of the family used with --n")
        ->capture_default_str();
    cmd->add_flag("--self-loops", o.self_loops, "include the offset-0 connection with --n");
    g->excludes(n);
    n->excludes(g);
}

GeneratingVector resolve_graph(const GraphOpts& o) {
    if (!o.bits.empty()) {
        GeneratingVector g = parse_bit_string(o.bits);
        require_symmetric(g);
        return g;
    }
    if (o.n == 0)
        throw std::invalid_argument("no graph given: pass --g BITS or --n SIZE [--stride R]");
    return stride_vector(o.n, o.stride, o.self_loops);
}

// "a..b" inclusive.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    auto bad = [&] {
        return std::invalid_argument("range must look like a..b, got '" + text + "'");
    };
    if (dots == std::string::npos) throw bad();
    std::int64_t lo = 0, hi = 0;
    const char* b = text.data();
    auto r1 = std::from_chars(b, b + dots, lo);
    auto r2 = std::from_chars(b + dots + 2, b + text.size(), hi);
    if (r1.ec != std::errc{} || r1.ptr != b + dots || r2.ec != std::errc{} ||
        r2.ptr != b + text.size())
        throw bad();
    if (hi < lo) throw std::invalid_argument("range is empty: '" + text + "'");
    return {lo, hi};
}

std::vector<std::size_t> range_to_sizes(const std::string& text, std::size_t step) {
    auto [lo, hi] = parse_range(text);
    if (lo < 1) throw std::invalid_argument("sizes must be positive");
    if (step == 0) throw std::invalid_argument("--n-step must be positive");
    std::vector<std::size_t> out;
    for (std::int64_t n = lo; n <= hi; n += static_cast<std::int64_t>(step))
        out.push_back(static_cast<std::size_t>(n));
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << content;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

ordered_json spectrum_json(const SpectrumReport& rep) {
    ordered_json j;
    j["n"] = rep.n;
    j["g"] = rep.g.bits;
    j["d"] = rep.d;
    j["lambda"] = rep.lambda;
    j["S_KS"] = rep.s_ks;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int run_spectrum(const GraphOpts& go, const std::string& format, const std::string& out) {
    SpectrumReport rep = make_spectrum_report(resolve_graph(go));
    if (format == "json") {
        write_output(out, dump(spectrum_json(rep)));
    } else if (format == "svg") {
        std::vector<PlotSeries> series(2);
        series[0].name = "d";
        series[1].name = "lambda";
        for (std::size_t j = 0; j < rep.d.size(); ++j) {
            series[0].x.push_back(static_cast<double>(j));
            series[0].y.push_back(rep.d[j]);
            series[1].x.push_back(static_cast<double>(j));
            series[1].y.push_back(rep.lambda[j]);
        }
        write_output(out, svg_scatter(series, "mode", "value"));
    } else {
        write_output(out, csv_spectrum(rep));
    }
    return 0;
}

int run_encode(std::uint64_t label, const std::string& format, const std::string& out) {
    IntegerGraphReport rep = run_integer_graph(label);
    if (format == "json") {
        ordered_json j;
        j["label"] = rep.label;
        j["n"] = rep.g.size();
        j["g"] = rep.g.bits;
        j["g_string"] = to_bit_string(rep.g);
        ordered_json edges = ordered_json::array();
        for (auto [a, b] : rep.edges) edges.push_back({a, b});
        j["edges"] = edges;
        j["spectrum"] = spectrum_json(rep.spectrum);
        write_output(out, dump(j));
    } else if (format == "svg") {
        throw std::invalid_argument("svg output is not available for encode");
    } else {
        std::string csv = "i,j\n";
        for (auto [a, b] : rep.edges)
            csv += std::to_string(a) + "," + std::to_string(b) + "\n";
        write_output(out, csv);
    }
    return 0;
}

int run_entropy_sweep(const std::vector<unsigned>& strides, bool self_loops,
                      const std::string& n_range, std::size_t n_step, unsigned threads,
                      const std::string& format, const std::string& out) {
    std::vector<std::size_t> sizes = range_to_sizes(n_range, n_step);
    auto rows = run_entropy_curves(strides, self_loops, sizes, threads);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["stride"] = r.stride;
            j["n"] = r.n;
            j["degree"] = r.deg;
            j["S_KS"] = r.s_ks;
            arr.push_back(j);
        }
        write_output(out, dump(arr));
    } else if (format == "svg") {
        std::vector<PlotSeries> series;
        for (std::size_t si = 0; si < strides.size(); ++si) {
            PlotSeries s;
            s.name = "stride " + std::to_string(strides[si]);
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                const auto& r = rows[si * sizes.size() + i];
                s.x.push_back(static_cast<double>(r.n));
                s.y.push_back(r.s_ks);
            }
            series.push_back(std::move(s));
        }
        write_output(out, svg_scatter(series, "n", "S_KS"));
    } else {
        write_output(out, csv_entropy(rows));
    }
    return 0;
}

int run_period_sweep(const GraphOpts& go, const std::string& N_range, std::int64_t N,
                     std::size_t max_n, std::uint64_t cutoff, unsigned threads,
                     const std::string& format, const std::string& out) {
    std::vector<PeriodResult> rows;
    bool size_mode = N_range.empty();
    if (!size_mode) {
        auto [lo, hi] = parse_range(N_range);
        rows = period_sweep_moduli(resolve_graph(go), lo, hi, cutoff, threads);
    } else {
        if (N == 0)
            throw std::invalid_argument(
                "pass --N-range for a modulus sweep or --N with --max-n for a size sweep");
        rows = period_sweep_sizes(N, 2, max_n, cutoff, threads);
    }
    bool all_censored = !rows.empty();
    for (const auto& r : rows) all_censored = all_censored && r.censored;

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["N"] = r.modulus;
            j["n"] = r.g.size();
            j["g"] = r.g.bits;
            j["g_string"] = to_bit_string(r.g);
            if (r.censored)
                j["T"] = nullptr;
            else
                j["T"] = r.period;
            j["censored"] = r.censored;
            j["cutoff"] = r.cutoff;
            arr.push_back(j);
        }
        write_output(out, dump(arr));
    } else if (format == "svg") {
        if (all_censored) {
            std::cerr << "every row censored at cutoff " << cutoff << ", nothing to plot\n";
            return 3;
        }
        PlotSeries s;
        s.name = "T";
        for (const auto& r : rows) {
            if (r.censored) continue;
            s.x.push_back(static_cast<double>(size_mode ? static_cast<std::int64_t>(r.g.size())
                                                        : r.modulus));
            s.y.push_back(static_cast<double>(r.period));
        }
        std::vector<PlotSeries> series = {std::move(s)};
        write_output(out, svg_scatter(series, size_mode ? "n" : "N", "T", true));
    } else {
        write_output(out, csv_periods(rows));
    }
    return all_censored ? 3 : 0;
}

int run_trajectory(const GraphOpts& go, std::int64_t N, std::uint64_t steps,
                   std::vector<std::int64_t> kvec, std::vector<std::int64_t> lvec,
                   const std::string& format, const std::string& out) {
    GeneratingVector g = resolve_graph(go);
    std::size_t n = g.size();
    if (kvec.empty()) {
        kvec.assign(n, 0);
        kvec[0] = 1;
    }
    if (lvec.empty()) lvec.assign(n, 0);
    if (kvec.size() != n || lvec.size() != n)
        throw std::invalid_argument("--kvec and --lvec must list exactly n entries");
    Circulant c = adjacency_circulant(g);
    std::vector<TorusState> states;
    states.push_back(make_state(N, kvec, lvec));
    for (std::uint64_t t = 0; t < steps; ++t) states.push_back(step(states.back(), c));
    if (format == "json") {
        ordered_json j;
        j["N"] = N;
        j["g"] = g.bits;
        ordered_json arr = ordered_json::array();
        for (std::size_t t = 0; t < states.size(); ++t) {
            ordered_json row;
            row["step"] = t;
            row["k"] = states[t].k;
            row["l"] = states[t].l;
            arr.push_back(row);
        }
        j["states"] = arr;
        write_output(out, dump(j));
    } else if (format == "svg") {
        throw std::invalid_argument("svg output is not available for trajectories");
    } else {
        write_output(out, csv_trajectory(states));
    }
    return 0;
}

int run_appendix_b(unsigned stride, const std::string& n_range, std::size_t n_step,
                   std::size_t reps, std::uint64_t seed, unsigned threads,
                   const std::string& format, const std::string& out) {
    std::vector<std::size_t> sizes = range_to_sizes(n_range, n_step);
    auto recs = run_random_ensemble(sizes, stride, reps, seed, threads);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : recs) {
            ordered_json j;
            j["n"] = r.n;
            j["degree"] = r.deg;
            j["s_ks_stride"] = r.deterministic;
            j["s_ks_stride_prime"] = r.deterministic_prime;
            if (r.skipped)
                j["s_ks_mean"] = nullptr;
            else
                j["s_ks_mean"] = r.mean;
            j["skipped"] = r.skipped;
            j["seed"] = seed;
            j["samples"] = r.samples;
            arr.push_back(j);
        }
        write_output(out, dump(arr));
    } else if (format == "svg") {
        std::vector<PlotSeries> series(3);
        series[0].name = "stride";
        series[1].name = "stride prime-free";
        series[2].name = "random mean";
        for (const auto& r : recs) {
            double x = static_cast<double>(r.n);
            series[0].x.push_back(x);
            series[0].y.push_back(r.deterministic);
            series[1].x.push_back(x);
            series[1].y.push_back(r.deterministic_prime);
            if (!r.skipped) {
                series[2].x.push_back(x);
                series[2].y.push_back(r.mean);
            }
        }
        write_output(out, svg_scatter(series, "n", "S_KS"));
    } else {
        write_output(out, csv_ensemble(recs, reps, seed));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled cat maps on circulant graphs: exact spectra, entropies and periods"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out;
    auto add_output_options = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json", "svg"}))
            ->capture_default_str();
        cmd->add_option("--out", out, "write to a file instead of stdout");
    };
    unsigned threads = 1;
    auto add_threads_option = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads, "worker threads; the output never depends on this")
            ->check(CLI::Range(1u, 256u))
            ->capture_default_str();
    };

    auto* sp = app.add_subcommand("spectrum",
                                  "coupling eigenvalues, Lyapunov exponents and the entropy "
                                  "of one graph");
    GraphOpts sp_graph;
    add_graph_options(sp, sp_graph);
    add_output_options(sp);

    auto* enc = app.add_subcommand("encode",
                                   "decode an integer label into its graph, edges and spectrum");
    std::uint64_t enc_label = 0;
    enc->add_option("label", enc_label, "positive integer whose binary expansion is the graph")
        ->required();
    add_output_options(enc);

    auto* es = app.add_subcommand("entropy-sweep", "entropy across a size grid per stride family");
    std::vector<unsigned> es_strides = {1, 2, 3, 4, 5};
    std::string es_range = "3..101";
    std::size_t es_step = 2;
    bool es_loops = false;
    es->add_option("--stride", es_strides, "stride list, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    es->add_option("--n-range", es_range, "size range a..b")->capture_default_str();
    es->add_option("--n-step", es_step, "size increment")->capture_default_str();
    es->add_flag("--self-loops", es_loops, "include the offset-0 connection");
    add_threads_option(es);
    add_output_options(es);

    auto* ps = app.add_subcommand("period-sweep",
                                  "evolution period T(N): over moduli for one graph, or over "
                                  "sizes at a fixed modulus");
    GraphOpts ps_graph;
    std::string ps_range;
    std::int64_t ps_N = 0;
    std::size_t ps_max_n = 16;
    std::uint64_t ps_cutoff = default_period_cutoff;
    add_graph_options(ps, ps_graph);
    ps->add_option("--N-range", ps_range, "modulus range a..b, sweeps the graph from --g/--n");
    ps->add_option("--N", ps_N, "fixed modulus; sweeps sizes 2..--max-n instead");
    ps->add_option("--max-n", ps_max_n, "largest size in a fixed-modulus sweep")
        ->capture_default_str();
    ps->add_option("--cutoff", ps_cutoff, "give up on a period after this many steps")
        ->capture_default_str();
    add_threads_option(ps);
    add_output_options(ps);

    auto* tr = app.add_subcommand("trajectory", "exact integer orbit of one state");
    GraphOpts tr_graph;
    std::int64_t tr_N = 0;
    std::uint64_t tr_steps = 10;
    std::vector<std::int64_t> tr_k, tr_l;
    add_graph_options(tr, tr_graph);
    tr->add_option("--N", tr_N, "modulus of the integer torus")->required();
    tr->add_option("--steps", tr_steps, "number of steps to take")->capture_default_str();
    tr->add_option("--kvec", tr_k, "initial positions, comma separated; default 1,0,...,0")
        ->delimiter(',');
    tr->add_option("--lvec", tr_l, "initial momenta, comma separated; default all 0")
        ->delimiter(',');
    add_output_options(tr);

    auto* ab = app.add_subcommand("appendix-b",
                                  "random degree-matched ensembles versus the stride references");
    unsigned ab_stride = 2;
    std::string ab_range = "8..40";
    std::size_t ab_step = 4;
    std::size_t ab_reps = 10;
    std::uint64_t ab_seed = 12345;
    ab->add_option("--stride", ab_stride, "reference stride")->capture_default_str();
    ab->add_option("--n-range", ab_range, "size range a..b")->capture_default_str();
    ab->add_option("--n-step", ab_step, "size increment")->capture_default_str();
    ab->add_option("--reps", ab_reps, "random samples per size")->capture_default_str();
    ab->add_option("--seed", ab_seed, "base seed; every (size, sample) derives its own stream")
        ->capture_default_str();
    add_threads_option(ab);
    add_output_options(ab);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sp) return run_spectrum(sp_graph, format, out);
        if (*enc) return run_encode(enc_label, format, out);
        if (*es)
            return run_entropy_sweep(es_strides, es_loops, es_range, es_step, threads, format, out);
        if (*ps)
            return run_period_sweep(ps_graph, ps_range, ps_N, ps_max_n, ps_cutoff, threads, format,
                                    out);
        if (*tr) return run_trajectory(tr_graph, tr_N, tr_steps, tr_k, tr_l, format, out);
        if (*ab)
            return run_appendix_b(ab_stride, ab_range, ab_step, ab_reps, ab_seed, threads, format,
                                  out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
