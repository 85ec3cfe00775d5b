#pragma once

#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fanout/rng.hpp"
#include "fanout/schedule_types.hpp"
#include "fanout/simulator.hpp"

namespace fanout {

// Trapped-ion noise parameters: overrotation of the entangling angle and
// laser dephasing on every driven qubit.
struct NoiseParams {
    double overrotation_sigma = 0.05;  // std of epsilon in (1 + epsilon) theta
    double gate_time = 100e-6;         // seconds per entangling gate
    double laser_coherence = 80e-3;    // seconds
    double single_qubit_time = 0.0;
    bool systematic_overrotation = false;  // epsilon fixed at sigma instead of drawn
    bool dephase_control_only = false;

    void check() const {
        if (overrotation_sigma < 0 || gate_time < 0 || single_qubit_time < 0 ||
            laser_coherence <= 0)
            throw std::invalid_argument("noise params out of range");
    }
};

struct Scenario {
    std::string label;
    NoiseParams params;
};

inline Scenario scenario_from_label(const std::string& label) {
    NoiseParams p;  // current hardware: 5% overrotation, 100 us gates, 80 ms coherence
    if (label == "current") {
    } else if (label == "low_overrotation") {
        p.overrotation_sigma /= 5.0;
    } else if (label == "long_laser") {
        p.laser_coherence *= 5.0;
    } else if (label == "both") {
        p.overrotation_sigma /= 5.0;
        p.laser_coherence *= 5.0;
    } else {
        throw std::invalid_argument("unknown scenario: " + label);
    }
    return {label, p};
}

enum class FanoutMode { SIMULTANEOUS, SERIAL };

inline const char* mode_name(FanoutMode m) {
    return m == FanoutMode::SIMULTANEOUS ? "simultaneous" : "serial";
}

// One stochastic shot of fan-out onto N targets starting from H(control)|0..0>;
// the noiseless output is the (N+1)-qubit GHZ state. Qubit 0 is the control,
// 1..N the targets. The entangling step is exp(-i(1+eps)(pi/4) Z_c sum_t X_t)
// dressed with ideal corrections (Rx(-pi/2) per target, diag(1, i^-|T|) on
// the control), which reproduces the multi-target CNOT exactly at eps = 0.
inline StateVector noisy_fanout_shot(int num_targets, const NoiseParams& params,
                                     FanoutMode mode, Rng& rng) {
    if (num_targets < 1 || num_targets > 12)
        throw std::invalid_argument("noisy_fanout_shot: N out of range");
    params.check();

    StateVector sv(num_targets + 1);
    sv.apply(Gate::h(0));

    auto draw_eps = [&]() {
        return params.systematic_overrotation ? params.overrotation_sigma
                                              : rng.normal(0.0, params.overrotation_sigma);
    };
    double dephase_var = 2.0 * params.gate_time / params.laser_coherence;
    auto dephase = [&](int q) { sv.apply(Gate::rz(q, rng.normal(0.0, std::sqrt(dephase_var)))); };

    auto entangle = [&](const std::vector<int>& targets) {
        double theta = (1.0 + draw_eps()) * M_PI / 4.0;
        for (int t : targets) sv.apply(Gate::h(t));
        std::uint64_t cmask = 1;
        std::vector<std::uint64_t> tbit;
        for (int t : targets) tbit.push_back(std::uint64_t(1) << t);
        for (std::size_t i = 0; i < sv.dim(); ++i) {
            int zc = (i & cmask) ? -1 : 1;
            int sum = 0;
            for (std::uint64_t b : tbit) sum += (i & b) ? -1 : 1;
            sv[i] *= std::polar(1.0, -theta * zc * sum);
        }
        for (int t : targets) sv.apply(Gate::h(t));
        // Ideal single-qubit dressing: Rx(-pi/2) per target, i^-|T| phase on
        // the control's |1> branch.
        ComplexMatrix rx = mat2(1.0 / std::sqrt(2.0), Complex(0.0, 1.0) / std::sqrt(2.0),
                                Complex(0.0, 1.0) / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
        for (int t : targets) sv.apply(Gate::u(t, rx));
        sv.apply(Gate::p(0, -static_cast<double>(targets.size()) * M_PI / 2.0));
        dephase(0);
        if (!params.dephase_control_only)
            for (int t : targets) dephase(t);
    };

    if (mode == FanoutMode::SIMULTANEOUS) {
        std::vector<int> targets(num_targets);
        for (int t = 0; t < num_targets; ++t) targets[t] = t + 1;
        entangle(targets);
    } else {
        for (int t = 1; t <= num_targets; ++t) entangle({t});
    }
    return sv;
}

// Overlap with the ideal GHZ state on N+1 qubits.
inline double ghz_fidelity(const StateVector& sv) {
    Complex overlap = (sv[0] + sv[sv.dim() - 1]) / std::sqrt(2.0);
    return std::norm(overlap);
}

struct MonteCarloRow {
    std::string scenario;
    int num_targets;
    FanoutMode mode;
    long shots;
    double mean_fidelity;
    double std_error;
    std::uint64_t seed;
};

// Mean GHZ fidelity over independent shots. Each shot derives its own seed
// from (seed, N, mode, shot); accumulation happens in fixed 1024-shot chunks
// summed in chunk order, so the result is identical no matter how many
// worker threads run the chunks.
inline MonteCarloRow monte_carlo_point(int num_targets, const Scenario& scenario, long shots,
                                       std::uint64_t seed, FanoutMode mode) {
    if (shots < 1) throw std::invalid_argument("monte_carlo: shots must be >= 1");
    constexpr long kChunk = 1024;
    long chunks = (shots + kChunk - 1) / kChunk;
    std::vector<double> chunk_sum(chunks, 0.0), chunk_sumsq(chunks, 0.0);

    auto run_chunk = [&](long c) {
        long lo = c * kChunk, hi = std::min(shots, lo + kChunk);
        double sum = 0.0, sumsq = 0.0;
        for (long s = lo; s < hi; ++s) {
            Rng rng(derive_seed(seed, num_targets, static_cast<std::uint64_t>(mode), s));
            double f =
                ghz_fidelity(noisy_fanout_shot(num_targets, scenario.params, mode, rng));
            sum += f;
            sumsq += f * f;
        }
        chunk_sum[c] = sum;
        chunk_sumsq[c] = sumsq;
    };

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(chunks));
    if (workers > 1) {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (long c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& t : pool) t.join();
    } else {
        for (long c = 0; c < chunks; ++c) run_chunk(c);
    }

    double sum = 0.0, sumsq = 0.0;
    for (long c = 0; c < chunks; ++c) {
        sum += chunk_sum[c];
        sumsq += chunk_sumsq[c];
    }
    double mean = sum / shots;
    double var = std::max(0.0, sumsq / shots - mean * mean);
    double stderr_ = shots > 1 ? std::sqrt(var / (shots - 1)) : 0.0;
    return {scenario.label, num_targets, mode, shots, mean, stderr_, seed};
}

inline std::vector<MonteCarloRow> run_monte_carlo(int n_min, int n_max,
                                                  const Scenario& scenario, long shots,
                                                  std::uint64_t seed) {
    if (shots < 1000) throw std::invalid_argument("run_monte_carlo: shots must be >= 1000");
    std::vector<MonteCarloRow> rows;
    for (int n = n_min; n <= n_max; ++n)
        for (FanoutMode mode : {FanoutMode::SIMULTANEOUS, FanoutMode::SERIAL})
            rows.push_back(monte_carlo_point(n, scenario, shots, seed, mode));
    return rows;
}

// Per-gate-class fidelities for the product estimator. FANOUT(N) comes from
// the simultaneous Monte Carlo at N; CNOT from the single-target run; the
// single-qubit fidelity is pinned at 0.9999 (current-hardware figure).
struct FidelityTable {
    std::string scenario;
    double one_qubit = 0.9999;
    double cnot = 1.0;
    std::map<int, double> fanout;  // N = 2..8

    double fanout_fidelity(int n) const {
        if (n <= 1) return cnot;
        auto it = fanout.find(n);
        if (it == fanout.end())
            throw std::invalid_argument("fidelity table: no entry for fan-out of " +
                                        std::to_string(n));
        return it->second;
    }

    void check() const {
        auto in_range = [](double f) { return f > 0.0 && f <= 1.0; };
        if (!in_range(one_qubit) || !in_range(cnot))
            throw std::logic_error("fidelity table: value out of (0, 1]");
        double prev = 2.0;
        for (auto& [n, f] : fanout) {
            if (!in_range(f)) throw std::logic_error("fidelity table: value out of (0, 1]");
            if (f > prev) throw std::logic_error("fidelity table: FANOUT(N) must not grow");
            prev = f;
        }
    }
};

// Table from precomputed Monte Carlo rows; needs the simultaneous entries
// for N = 1..8.
inline FidelityTable fidelity_table_from_rows(const std::string& scenario_label,
                                              const std::vector<MonteCarloRow>& rows) {
    FidelityTable table;
    table.scenario = scenario_label;
    bool have_cnot = false;
    for (const MonteCarloRow& r : rows) {
        if (r.mode != FanoutMode::SIMULTANEOUS) continue;
        if (r.num_targets == 1) {
            table.cnot = r.mean_fidelity;
            have_cnot = true;
        } else if (r.num_targets <= 8) {
            table.fanout[r.num_targets] = r.mean_fidelity;
        }
    }
    if (!have_cnot || table.fanout.size() != 7)
        throw std::invalid_argument("fidelity table: Monte Carlo rows for N = 1..8 required");
    table.check();
    return table;
}

inline FidelityTable build_fidelity_table(const Scenario& scenario, long shots,
                                          std::uint64_t seed) {
    std::vector<MonteCarloRow> rows;
    for (int n = 1; n <= 8; ++n)
        rows.push_back(monte_carlo_point(n, scenario, shots, seed, FanoutMode::SIMULTANEOUS));
    return fidelity_table_from_rows(scenario.label, rows);
}

// Product of per-gate fidelities over a schedule; MEASURE is skipped.
inline double fidelity_product(const ScheduledCircuit& s, const FidelityTable& table) {
    double product = 1.0;
    for (const Moment& m : s.moments) {
        for (const Gate& g : m.gates) {
            if (g.kind == GateKind::MEASURE) continue;
            if (is_single_qubit(g.kind)) {
                product *= table.one_qubit;
            } else if (g.kind == GateKind::CNOT) {
                product *= table.cnot;
            } else if (g.kind == GateKind::FANOUT) {
                product *= table.fanout_fidelity(static_cast<int>(g.qubits.size()) - 1);
            } else {
                throw std::invalid_argument(std::string("fidelity_product: no class for ") +
                                            gate_name(g.kind));
            }
        }
    }
    return product;
}

}  // namespace fanout
