// Random local quantum instruments and numerical monotonicity checks.
//
// An instrument is a complete Kraus set {A_k} on one party:
// sum_k A_k^dagger A_k = I. Applying it to |psi> yields outcome k with
// probability p_k = ||A_k|psi>||^2 and post-state A_k|psi>/sqrt(p_k).
// An entanglement measure must not increase on average under such maps;
// the fuzz harness samples seeded (state, instrument) pairs and reports
// any violation of sum_k p_k M(phi_k) <= M(psi).

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mape/config.hpp"
#include "mape/detail/parallel.hpp"
#include "mape/detail/rng.hpp"
#include "mape/errors.hpp"
#include "mape/gallery.hpp"
#include "mape/measures.hpp"
#include "mape/state.hpp"

namespace mape {

struct LocalInstrument {
    int party = 1; // 1-based
    std::vector<Eigen::MatrixXcd> kraus_ops;

    int local_dim() const {
        return kraus_ops.empty() ? 0 : static_cast<int>(kraus_ops.front().rows());
    }
};

// max |sum_k A_k^dagger A_k - I|; zero for a complete instrument.
inline double completeness_defect(const LocalInstrument& inst) {
    const int d = inst.local_dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& a : inst.kraus_ops) sum += a.adjoint() * a;
    return (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

// Draws `outcomes` Gaussian matrices G_k and whitens them with the inverse
// square root of S = sum_k G_k^dagger G_k, so completeness holds exactly up
// to rounding. Deterministic per seed; a numerically singular draw retries
// on the next substream.
inline LocalInstrument random_instrument(int party, int local_dim, int outcomes, std::uint64_t seed,
                                         const Config& cfg = default_config()) {
    if (party < 1) throw DimensionMismatch("random_instrument: party index must be >= 1");
    if (local_dim < 2) throw Error("random_instrument: local dimension must be >= 2");
    if (outcomes < 2) throw Error("random_instrument: need at least two outcomes");

    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        detail::GaussianSource gauss(detail::mix_seed(seed, attempt));
        std::vector<Eigen::MatrixXcd> draws;
        draws.reserve(static_cast<std::size_t>(outcomes));
        for (int k = 0; k < outcomes; ++k) {
            Eigen::MatrixXcd g(local_dim, local_dim);
            for (int i = 0; i < local_dim; ++i)
                for (int j = 0; j < local_dim; ++j) {
                    const double re = gauss();
                    const double im = gauss();
                    g(i, j) = cplx{re, im};
                }
            draws.push_back(std::move(g));
        }

        Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(local_dim, local_dim);
        for (const auto& g : draws) s += g.adjoint() * g;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
        if (es.info() != Eigen::Success) continue;
        const auto& vals = es.eigenvalues();
        if (vals(0) <= 1e-12 * vals(vals.size() - 1)) continue; // degenerate draw

        Eigen::MatrixXcd inv_sqrt =
            es.eigenvectors() * vals.cwiseSqrt().cwiseInverse().asDiagonal() *
            es.eigenvectors().adjoint();

        LocalInstrument inst;
        inst.party = party;
        inst.kraus_ops.reserve(draws.size());
        for (const auto& g : draws) inst.kraus_ops.push_back(g * inv_sqrt);
        return inst;
    }
    throw DegenerateDraw("random_instrument: operator sum numerically singular for every substream");
}

struct LoccOutcome {
    double probability = 0.0;
    PureState post_state;
};

struct InstrumentApplication {
    std::vector<LoccOutcome> outcomes;
    double dropped_mass = 0.0; // total probability of outcomes below the floor
};

// Applies A_k on inst.party: out(..., x, ...) = sum_y A(x,y) in(..., y, ...).
inline std::vector<cplx> apply_local_operator(const PureState& state, int party,
                                              const Eigen::MatrixXcd& op) {
    const int d = state.profile().dim(party);
    std::int64_t inner = 1;
    for (int k = party + 1; k <= state.n(); ++k) inner *= state.profile().dim(k);
    const std::int64_t outer = state.dim() / (inner * d);

    std::vector<cplx> out(static_cast<std::size_t>(state.dim()));
    for (std::int64_t o = 0; o < outer; ++o) {
        const std::int64_t base = o * d * inner;
        for (std::int64_t t = 0; t < inner; ++t) {
            for (int x = 0; x < d; ++x) {
                cplx acc{0.0, 0.0};
                for (int y = 0; y < d; ++y)
                    acc += op(x, y) * state.amplitude(base + y * inner + t);
                out[static_cast<std::size_t>(base + x * inner + t)] = acc;
            }
        }
    }
    return out;
}

inline InstrumentApplication apply_instrument(const PureState& state, const LocalInstrument& inst,
                                              const Config& cfg = default_config()) {
    if (inst.party < 1 || inst.party > state.n())
        throw DimensionMismatch("apply_instrument: party " + std::to_string(inst.party) +
                                " out of range for " + std::to_string(state.n()) + " parties");
    const int d = state.profile().dim(inst.party);
    for (const auto& a : inst.kraus_ops)
        if (a.rows() != d || a.cols() != d)
            throw DimensionMismatch("apply_instrument: Kraus operator is not " + std::to_string(d) +
                                    "x" + std::to_string(d));

    InstrumentApplication result;
    for (const auto& a : inst.kraus_ops) {
        std::vector<cplx> amps = apply_local_operator(state, inst.party, a);
        long double p_acc = 0.0L;
        for (const cplx& v : amps) p_acc += std::norm(v);
        const double p = static_cast<double>(p_acc);
        if (p < cfg.outcome_floor) {
            result.dropped_mass += p;
            continue;
        }
        PureState post = make_state(state.profile(), std::move(amps), true, cfg);
        result.outcomes.push_back(LoccOutcome{p, std::move(post)});
    }
    return result;
}

// Which measure a monotonicity check runs.
struct MeasureSpec {
    enum class Kind { mape, l2_ape, ape_level };
    Kind kind = Kind::mape;
    int level = 1; // only for ape_level

    double eval(const PureState& state, const Config& cfg = default_config()) const {
        switch (kind) {
            case Kind::mape: return mape(state, cfg);
            case Kind::l2_ape: return l2_ape(state, cfg);
            case Kind::ape_level: return ape(state, level, cfg);
        }
        throw Error("MeasureSpec: unknown kind");
    }

    std::string name() const {
        switch (kind) {
            case Kind::mape: return "mape";
            case Kind::l2_ape: return "l2";
            case Kind::ape_level: return "ape" + std::to_string(level);
        }
        return "?";
    }
};

struct MonotonicityReport {
    double before = 0.0;
    double avg_after = 0.0;
    bool violated = false;
    double dropped_mass = 0.0;
};

inline MonotonicityReport monotonicity_report(const PureState& state, const LocalInstrument& inst,
                                              const MeasureSpec& measure,
                                              const Config& cfg = default_config()) {
    MonotonicityReport report;
    report.before = measure.eval(state, cfg);
    const InstrumentApplication app = apply_instrument(state, inst, cfg);
    report.dropped_mass = app.dropped_mass;
    for (const LoccOutcome& outcome : app.outcomes)
        report.avg_after += outcome.probability * measure.eval(outcome.post_state, cfg);
    report.violated = report.avg_after > report.before + cfg.violation_tol;
    return report;
}

// One seeded fuzz trial: a random state on 3..6 parties with local dims in
// {2,3}, and a random 2- or 3-outcome instrument on a random party.
struct FuzzTrial {
    std::uint64_t seed = 0;
    std::vector<int> dims;
    int party = 1;
    int outcomes = 2;
    double before = 0.0;
    double avg_after = 0.0;
    bool violated = false;
};

struct FuzzReport {
    std::vector<FuzzTrial> trials;
    int violations = 0;
    double max_excess = 0.0; // max avg_after - before over all trials
};

inline FuzzTrial run_locc_trial(std::uint64_t trial_seed, const MeasureSpec& measure,
                                const Config& cfg = default_config()) {
    std::mt19937_64 rng(trial_seed);
    FuzzTrial trial;
    trial.seed = trial_seed;
    const int n = 3 + static_cast<int>(rng() % 4);
    trial.dims.resize(static_cast<std::size_t>(n));
    for (int& d : trial.dims) d = 2 + static_cast<int>(rng() % 2);
    trial.party = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    trial.outcomes = 2 + static_cast<int>(rng() % 2);
    const std::uint64_t state_seed = rng();
    const std::uint64_t instrument_seed = rng();

    const PureState state = random_state(trial.dims, state_seed, cfg);
    const LocalInstrument inst = random_instrument(
        trial.party, trial.dims[static_cast<std::size_t>(trial.party) - 1], trial.outcomes,
        instrument_seed, cfg);
    const MonotonicityReport report = monotonicity_report(state, inst, measure, cfg);
    trial.before = report.before;
    trial.avg_after = report.avg_after;
    trial.violated = report.violated;
    return trial;
}

inline FuzzReport run_locc_fuzz(int trials, std::uint64_t master_seed, const MeasureSpec& measure,
                                const Config& cfg = default_config()) {
    FuzzReport report;
    report.trials.resize(static_cast<std::size_t>(trials));
    // Parallelism lives at the trial level; the per-trial matrices are too
    // small to split further.
    Config trial_cfg = cfg;
    trial_cfg.threads = 1;
    detail::parallel_for_index(static_cast<std::size_t>(trials), cfg.threads, [&](std::size_t t) {
        report.trials[t] = run_locc_trial(detail::mix_seed(master_seed, t), measure, trial_cfg);
    });
    for (const FuzzTrial& trial : report.trials) {
        report.violations += trial.violated;
        report.max_excess = std::max(report.max_excess, trial.avg_after - trial.before);
    }
    return report;
}

} // namespace mape
