// Command-line front end: Controlled-U synthesis, unitary verification, depth
// benchmarking, trapped-ion noise sweeps, and SVG plots.

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanout/cli.hpp"

namespace {

// "A..B" or a single integer.
bool parse_size_range(const std::string& text, int& lo, int& hi) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, pos));
            hi = std::stoi(text.substr(pos + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controlled-U circuit synthesis and scheduling with a fan-out primitive"};
    app.require_subcommand(1);

    // synth
    std::string in_path, out_path, method = "simultaneous";
    int control = 0;
    auto* synth = app.add_subcommand("synth", "compile a Controlled-U from a circuit file");
    synth->add_option("--input", in_path, "circuit JSON")->required();
    synth->add_option("--output", out_path, "scheduled circuit JSON")->required();
    synth->add_option("--control", control, "control qubit (untouched wire of the input)")
        ->required();
    synth->add_option("--method", method, "simultaneous | serial | asap");

    // verify
    std::string verify_a, verify_b;
    double tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "check unitary equivalence up to a phase");
    verify->add_option("a", verify_a, "first circuit JSON")->required();
    verify->add_option("b", verify_b, "second circuit JSON")->required();
    verify->add_option("--tol", tol, "max entrywise deviation");

    // bench-depth
    std::string family, sizes = "1..8";
    std::string schedulers = "simultaneous,asap,serialized";
    std::string exclude;
    auto* bench = app.add_subcommand("bench-depth", "emit a depth-comparison CSV");
    bench->add_option("--family", family, "benchmark family")->required();
    bench->add_option("--sizes", sizes, "size range A..B");
    bench->add_option("--schedulers", schedulers, "comma-separated scheduler list");
    bench->add_option("--exclude", exclude,
                      "gate kinds left out of the depth count (comma-separated)");
    bench->add_option("--output", out_path, "CSV path")->required();

    // noise
    std::string scenario = "current";
    std::string n_range = "2..8";
    long shots = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    auto* noise = app.add_subcommand("noise", "trapped-ion fan-out Monte Carlo sweep");
    noise->add_option("--scenario", scenario, "current | low_overrotation | long_laser | both");
    noise->add_option("--sizes", n_range, "fan-out range A..B");
    noise->add_option("--shots", shots, "stochastic runs per point")->required();
    noise->add_option("--seed", seed, "master seed (required for reproducibility)")
        ->required()
        ->each([&](const std::string&) { seed_set = true; });
    noise->add_option("--output", out_path, "CSV path")->required();

    // plot
    std::string csv_in, svg_out, kind = "depth";
    auto* plot = app.add_subcommand("plot", "render a CSV as a standalone SVG");
    plot->add_option("--input", csv_in, "CSV path")->required();
    plot->add_option("--output", svg_out, "SVG path")->required();
    plot->add_option("--kind", kind, "depth | fidelity");

    CLI11_PARSE(app, argc, argv);

    if (synth->parsed())
        return fanout::cli::cmd_synth(in_path, control, method, out_path);
    if (verify->parsed()) return fanout::cli::cmd_verify(verify_a, verify_b, tol);
    if (bench->parsed()) {
        int lo = 0, hi = 0;
        if (!parse_size_range(sizes, lo, hi)) {
            std::cerr << "error: bad size range\n";
            return fanout::cli::kInvalid;
        }
        return fanout::cli::cmd_bench_depth(family, lo, hi, split_csv(schedulers), out_path,
                                            split_csv(exclude));
    }
    if (noise->parsed()) {
        int lo = 0, hi = 0;
        if (!parse_size_range(n_range, lo, hi)) {
            std::cerr << "error: bad fan-out range\n";
            return fanout::cli::kInvalid;
        }
        (void)seed_set;
        return fanout::cli::cmd_noise(scenario, lo, hi, shots, seed, out_path);
    }
    if (plot->parsed()) return fanout::cli::cmd_plot(csv_in, svg_out, kind);
    return fanout::cli::kInvalid;
}
