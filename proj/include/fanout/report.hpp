#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "fanout/benchmarks.hpp"
#include "fanout/noise.hpp"

namespace fanout {

// One row of a depth table: benchmark family, size parameter, scheduler, and
// the resulting depth. Formula schedulers are closed-form comparison lines.
struct DepthReport {
    std::string family;
    int size = 0;
    std::string scheduler;  // simultaneous | serialized | asap | formula:*
    long depth_value = 0;
    std::string exclude;  // kinds excluded from the count, "none" if empty
};

namespace detail {

// The swap-test count ignores the ancilla Hadamard sandwich; every other
// family counts all kinds. An explicit --exclude list overrides both.
inline std::string exclude_label(const std::string& family) {
    if (family.rfind("swap-test", 0) == 0) return "ancilla-h";
    return "none";
}

inline std::string exclude_label(const std::set<GateKind>& ex) {
    if (ex.empty()) return "none";
    std::string out;
    for (GateKind k : ex) {
        if (!out.empty()) out += "+";
        out += gate_name(k);
    }
    return out;
}

inline Circuit u_for_hadamard_family(const std::string& family, int width) {
    if (family == "hadamard-qft") return gen_u_family(UFamily::QFT, width);
    if (family == "hadamard-brickwork") return gen_u_family(UFamily::BRICKWORK, width, 4, 11);
    if (family == "hadamard-hardware-efficient")
        return gen_u_family(UFamily::HARDWARE_EFFICIENT, width, 3, 12);
    if (family == "hadamard-swap-network")
        return gen_u_family(UFamily::SWAP_NETWORK, width, 2);
    throw std::invalid_argument("unknown hadamard family: " + family);
}

inline std::vector<std::uint64_t> dense_data(int n, int w) {
    std::vector<std::uint64_t> data(std::size_t(1) << n);
    for (auto& v : data) v = (std::uint64_t(1) << w) - 1;
    return data;
}

}  // namespace detail

inline const std::vector<std::string>& depth_families() {
    static const std::vector<std::string> families = {
        "swap-test",
        "swap-test-unopt",
        "interference",
        "hadamard-qft",
        "hadamard-brickwork",
        "hadamard-hardware-efficient",
        "hadamard-swap-network",
        "explicit-memory",
        "implicit-memory",
        "implicit-memory-w3",
        "implicit-memory-w12",
    };
    return families;
}

// Depth of one (family, size, scheduler) cell; -1 if the scheduler does not
// apply to the family. An explicit exclusion set replaces the family default.
inline long bench_depth(const std::string& family, int size, const std::string& scheduler,
                        const std::set<GateKind>* exclude_override = nullptr) {
    auto d = [&](const ScheduledCircuit& s) {
        return static_cast<long>(depth(s, exclude_override ? *exclude_override
                                                           : std::set<GateKind>{}));
    };

    if (family == "swap-test" || family == "swap-test-unopt") {
        bool optimized = family == "swap-test";
        int k = size;
        auto ds = [&](const ScheduledCircuit& s) {
            return exclude_override ? d(s) : static_cast<long>(swap_test_depth(s));
        };
        if (scheduler == "simultaneous") return ds(gen_swap_test(k, optimized));
        if (scheduler == "asap") return ds(swap_test_asap_baseline(k, optimized));
        if (scheduler == "serialized") {
            if (optimized) return d(swap_test_serialized_baseline(k));
            Circuit high = swap_test_highlevel(k, false);
            std::vector<Circuit> blocks;
            for (const Gate& g : high.gates) {
                if (g.kind != GateKind::CCX) continue;
                Circuit b(high.num_qubits);
                b.add(g);
                blocks.push_back(expand(b));
            }
            return ds(block_sequential_schedule(blocks));
        }
        if (scheduler == "formula:coarse") return 12L * k;
        return -1;
    }
    if (family == "interference") {
        Circuit ua = gen_u_family(UFamily::BRICKWORK, size, 3, 21);
        Circuit ub = gen_u_family(UFamily::BRICKWORK, size, 3, 22);
        if (scheduler == "simultaneous") return d(gen_interference(ua, ub));
        ControlledUSpec sa{size, widen(ua, size + 1)}, sb{size, widen(ub, size + 1)};
        if (scheduler == "asap")
            return 4 + d(controlled_u_asap_baseline(sa)) + d(controlled_u_asap_baseline(sb));
        if (scheduler == "serialized")
            return 4 + d(controlled_u_serialized_baseline(sa)) +
                   d(controlled_u_serialized_baseline(sb));
        return -1;
    }
    if (family.rfind("hadamard-", 0) == 0) {
        Circuit u = detail::u_for_hadamard_family(family, size);
        if (scheduler == "simultaneous") return d(gen_hadamard_test(u));
        ControlledUSpec spec{size, widen(u, size + 1)};
        if (scheduler == "asap") return 2 + d(controlled_u_asap_baseline(spec));
        if (scheduler == "serialized") return 2 + d(controlled_u_serialized_baseline(spec));
        return -1;
    }
    if (family == "explicit-memory") {
        MemoryLayout layout{size, 1};
        if (scheduler == "simultaneous") return d(explicit_memory_schedule(layout));
        if (scheduler == "asap") return d(asap_schedule(expand(gen_explicit_memory(layout))));
        if (scheduler == "serialized") return d(explicit_memory_serialized_baseline(layout));
        if (scheduler == "formula:qram") return (std::int64_t(1) << size) * 1;  // W = 1
        return -1;
    }
    if (family.rfind("implicit-memory", 0) == 0) {
        int w = 8;  // implicit-memory-wN pins the bitwidth explicitly
        if (family == "implicit-memory-w3") w = 3;
        if (family == "implicit-memory-w12") w = 12;
        auto data = detail::dense_data(size, w);
        if (scheduler == "simultaneous" || scheduler == "asap")
            return d(asap_schedule(gen_implicit_memory(data, w)));
        if (scheduler == "formula:qrom") return implicit_memory_serial_formula(data);
        return -1;
    }
    std::string known;
    for (const std::string& f : depth_families()) known += " " + f;
    throw std::invalid_argument("unknown benchmark family: " + family + " (known:" + known +
                                ")");
}

inline std::vector<DepthReport> build_depth_table(
    const std::string& family, int size_lo, int size_hi,
    const std::vector<std::string>& schedulers,
    const std::set<GateKind>* exclude_override = nullptr) {
    std::vector<DepthReport> rows;
    std::string ex = exclude_override ? detail::exclude_label(*exclude_override)
                                      : detail::exclude_label(family);
    for (int size = size_lo; size <= size_hi; ++size) {
        for (const std::string& sched : schedulers) {
            long value = bench_depth(family, size, sched, exclude_override);
            if (value < 0) continue;
            rows.push_back({family, size, sched, value, ex});
        }
    }
    return rows;
}

inline std::string depth_table_csv(const std::vector<DepthReport>& rows) {
    std::ostringstream os;
    os << "# exclude=" << (rows.empty() ? "none" : rows.front().exclude) << "\n";
    os << "family,size,scheduler,depth,exclude\n";
    for (const DepthReport& r : rows)
        os << r.family << "," << r.size << "," << r.scheduler << "," << r.depth_value << ","
           << r.exclude << "\n";
    return os.str();
}

// CSV schema: scenario,label,N,mode,shots,mean_fidelity,std_error,seed
inline std::string noise_csv(const std::vector<MonteCarloRow>& rows,
                             const NoiseParams& params) {
    std::ostringstream os;
    os << "scenario,label,N,mode,shots,mean_fidelity,std_error,seed\n";
    os << std::setprecision(12);
    for (const MonteCarloRow& r : rows) {
        os << r.scenario << ",sigma=" << params.overrotation_sigma
           << ";t=" << params.gate_time << ";T=" << params.laser_coherence << ","
           << r.num_targets << "," << mode_name(r.mode) << "," << r.shots << ","
           << r.mean_fidelity << "," << r.std_error << "," << r.seed << "\n";
    }
    return os.str();
}

}  // namespace fanout
