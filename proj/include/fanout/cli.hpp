#pragma once

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fanout/json_io.hpp"
#include "fanout/report.hpp"
#include "fanout/svg.hpp"

namespace fanout::cli {

// Exit codes shared by every subcommand:
//   0 success, 1 verification mismatch, 2 I/O or parse error, 3 invalid input.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kIoError = 2;
constexpr int kInvalid = 3;

// Compile a Controlled-U over the circuit in `input_path`, controlled on
// `control`, into a scheduled-circuit JSON file.
inline int cmd_synth(const std::string& input_path, int control, const std::string& method,
                     const std::string& output_path, std::ostream& err = std::cerr) {
    Circuit u;
    try {
        u = from_json(read_text_file(input_path));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    try {
        auto diags = validate(u);
        if (!diags.empty()) {
            for (const auto& d : diags) err << "error: " << d << "\n";
            return kInvalid;
        }
        // The control is a wire of the input circuit that no gate touches;
        // the remaining wires carry U.
        ControlledUSpec spec{control, u};
        ScheduledCircuit out;
        if (method == "simultaneous") {
            out = synth_controlled_u(spec);
        } else if (method == "serial") {
            out = controlled_u_serialized_baseline(spec);
        } else if (method == "asap") {
            out = controlled_u_asap_baseline(spec);
        } else {
            err << "error: unknown method " << method << "\n";
            return kInvalid;
        }
        write_text_file(output_path, to_json(out));
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

// Equivalence up to global phase between two circuit files (flat or
// scheduled); prints the maximum deviation.
inline int cmd_verify(const std::string& path_a, const std::string& path_b, double tol,
                      std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    auto load = [](const std::string& path) -> Circuit {
        std::string text = read_text_file(path);
        try {
            return from_json(text);
        } catch (const ParseError&) {
            return scheduled_from_json(text).flatten();
        }
    };
    Circuit a, b;
    try {
        a = load(path_a);
        b = load(path_b);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    try {
        if (a.num_qubits != b.num_qubits) {
            err << "error: width mismatch (" << a.num_qubits << " vs " << b.num_qubits
                << ")\n";
            return kInvalid;
        }
        if (a.num_qubits > kUnitaryQubitGuard) {
            err << "error: width over the " << kUnitaryQubitGuard << "-qubit guard\n";
            return kInvalid;
        }
        ComplexMatrix ua = circuit_unitary(a), ub = circuit_unitary(b);
        // Deviation after removing the best global phase read off ub.
        std::size_t bi = 0, bj = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < ub.rows(); ++i)
            for (std::size_t j = 0; j < ub.cols(); ++j)
                if (std::abs(ub(i, j)) > best) {
                    best = std::abs(ub(i, j));
                    bi = i;
                    bj = j;
                }
        Complex ph = std::polar(1.0, std::arg(ua(bi, bj)) - std::arg(ub(bi, bj)));
        double dev = ua.max_abs_diff(ub.scaled(ph));
        bool ok = dev <= tol;
        out << (ok ? "equivalent" : "NOT equivalent") << " (max deviation " << dev
            << ", tol " << tol << ")\n";
        return ok ? kOk : kMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

inline int cmd_bench_depth(const std::string& family, int size_lo, int size_hi,
                           const std::vector<std::string>& schedulers,
                           const std::string& output_path,
                           const std::vector<std::string>& exclude = {},
                           std::ostream& err = std::cerr) {
    try {
        std::set<GateKind> exclude_set;
        for (const std::string& name : exclude) {
            auto kind = gate_kind_from_name(name);
            if (!kind) {
                err << "error: unknown gate kind in --exclude: " << name << "\n";
                return kInvalid;
            }
            exclude_set.insert(*kind);
        }
        auto rows = build_depth_table(family, size_lo, size_hi, schedulers,
                                      exclude.empty() ? nullptr : &exclude_set);
        if (rows.empty()) {
            err << "error: no rows produced (unknown schedulers?)\n";
            return kInvalid;
        }
        write_text_file(output_path, depth_table_csv(rows));
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

inline int cmd_noise(const std::string& scenario_label, int n_min, int n_max, long shots,
                     std::uint64_t seed, const std::string& output_path,
                     std::ostream& err = std::cerr) {
    try {
        Scenario scenario = scenario_from_label(scenario_label);
        auto rows = run_monte_carlo(n_min, n_max, scenario, shots, seed);
        write_text_file(output_path, noise_csv(rows, scenario.params));
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

namespace detail {

inline std::vector<std::vector<std::string>> read_csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace detail

// Renders a depth CSV (one polyline per scheduler) or a noise CSV (one
// polyline per scenario/mode, with error bars) to a standalone SVG.
inline int cmd_plot(const std::string& csv_path, const std::string& svg_path,
                    const std::string& kind, std::ostream& err = std::cerr) {
    std::string text;
    try {
        text = read_text_file(csv_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    try {
        auto rows = detail::read_csv_rows(text);
        if (rows.size() <= 1) {
            err << "error: empty CSV\n";
            return kInvalid;
        }
        std::map<std::string, PlotSeries> series;
        std::string title, xlab, ylab;
        if (kind == "depth") {
            // family,size,scheduler,depth,exclude
            title = rows[1].at(0) + " depth";
            xlab = "size";
            ylab = "depth (moments)";
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const auto& r = rows[i];
                PlotSeries& s = series[r.at(2)];
                s.label = r.at(2);
                s.x.push_back(std::stod(r.at(1)));
                s.y.push_back(std::stod(r.at(3)));
            }
        } else if (kind == "fidelity") {
            // scenario,label,N,mode,shots,mean_fidelity,std_error,seed
            title = "fan-out fidelity (" + rows[1].at(0) + ")";
            xlab = "fan-out targets N";
            ylab = "mean GHZ fidelity";
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const auto& r = rows[i];
                std::string key = r.at(0) + "/" + r.at(3);
                PlotSeries& s = series[key];
                s.label = key;
                s.x.push_back(std::stod(r.at(2)));
                s.y.push_back(std::stod(r.at(5)));
                s.yerr.push_back(std::stod(r.at(6)));
            }
        } else {
            err << "error: unknown plot kind " << kind << "\n";
            return kInvalid;
        }
        std::vector<PlotSeries> list;
        for (auto& [k, s] : series) list.push_back(std::move(s));
        write_text_file(svg_path, render_line_chart(list, title, xlab, ylab));
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

}  // namespace fanout::cli
