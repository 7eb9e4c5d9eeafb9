// Report generation behind the CLI: single-state measure reports, the
// Dicke / D3 parameter sweeps, the GHZ closed-form check, and the LOCC
// fuzz run. All CSV output is deterministic for fixed flags and seed:
// numeric fields carry 12 significant digits, rows are emitted in
// parameter order, and a header row is always present.

#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mape/bipartition.hpp"
#include "mape/config.hpp"
#include "mape/errors.hpp"
#include "mape/gallery.hpp"
#include "mape/locc.hpp"
#include "mape/measures.hpp"
#include "mape/state.hpp"

namespace mape {

inline std::string fmt_sig(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

inline std::string fmt_dims(const std::vector<int>& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(dims[i]);
    }
    return s;
}

// Per-level rank summary: the common coefficient-matrix rank when all
// size-l subsets agree, otherwise the min/max spread.
struct RankSummary {
    int level = 0;
    int min_rank = 0;
    int max_rank = 0;

    bool uniform() const { return min_rank == max_rank; }
};

struct MeasureReport {
    std::vector<int> dims;
    MemsVector mems;
    double mape = 0.0;
    double l2_ape = 0.0;
    GenuineEntanglement genuine;
    std::vector<RankSummary> ranks; // one entry per level 1..floor(n/2)
};

inline MeasureReport compute_measure_report(const PureState& state,
                                            const Config& cfg = default_config()) {
    require_multiparty(state);
    MeasureReport report;
    report.dims = state.profile().dims();
    for (int l = 1; l <= mems_levels(state.n()); ++l) {
        const LevelSpectra scan = level_spectra(state, l, cfg);
        report.mems.push_back(ape_from_spectra(scan, cfg));
        RankSummary summary{l, scan.spectra.front().rank, scan.spectra.front().rank};
        for (const SpectrumResult& sp : scan.spectra) {
            summary.min_rank = std::min(summary.min_rank, sp.rank);
            summary.max_rank = std::max(summary.max_rank, sp.rank);
        }
        report.ranks.push_back(summary);
    }
    report.mape = mape_from_mems(report.mems);
    report.l2_ape = l2_ape_from_mems(report.mems);
    report.genuine = is_genuinely_entangled(state, cfg);
    return report;
}

inline void print_measure_pretty(std::ostream& out, const MeasureReport& report) {
    out << "dims:     " << fmt_dims(report.dims) << "\n";
    out << "parties:  " << report.dims.size() << "\n";
    out << "mems:     (";
    for (std::size_t i = 0; i < report.mems.size(); ++i) {
        if (i) out << ", ";
        out << fmt_sig(report.mems[i]);
    }
    out << ")\n";
    out << "mape:     " << fmt_sig(report.mape) << "\n";
    out << "l2_ape:   " << fmt_sig(report.l2_ape) << "\n";
    out << "genuine:  " << (report.genuine.genuine ? "yes" : "no");
    if (!report.genuine.genuine && report.genuine.witness)
        out << "  (rank-1 bipartition " << report.genuine.witness->to_string() << ")";
    out << "\n";
    for (const RankSummary& r : report.ranks) {
        out << "rank L" << r.level << ":  " << r.min_rank;
        if (!r.uniform()) out << ".." << r.max_rank << "  (mixed)";
        out << "\n";
    }
}

inline void print_measure_csv(std::ostream& out, const MeasureReport& report) {
    out << "dims,n";
    const std::size_t levels = report.mems.size();
    for (std::size_t l = 1; l <= levels; ++l) out << ",S" << l;
    out << ",mape,l2_ape,genuine,witness";
    for (std::size_t l = 1; l <= levels; ++l) out << ",rank_l" << l << ",rank_mixed_l" << l;
    out << "\n";

    out << fmt_dims(report.dims) << ',' << report.dims.size();
    for (double s : report.mems) out << ',' << fmt_sig(s);
    out << ',' << fmt_sig(report.mape) << ',' << fmt_sig(report.l2_ape);
    out << ',' << (report.genuine.genuine ? 1 : 0) << ',';
    if (!report.genuine.genuine && report.genuine.witness) {
        std::string w = report.genuine.witness->to_string();
        std::replace(w.begin(), w.end(), ',', ';');
        out << w;
    }
    for (const RankSummary& r : report.ranks)
        out << ',' << r.max_rank << ',' << (r.uniform() ? 0 : 1);
    out << "\n";
}

// One sweep point: MEMS entries, MAPE, and the rank at the half level
// (max over subsets; rank_mixed flags non-symmetric states whose
// half-level subsets disagree).
struct SweepPoint {
    MemsVector mems;
    double mape = 0.0;
    RankSummary half_rank;
};

inline SweepPoint sweep_point(const PureState& state, const Config& cfg = default_config()) {
    SweepPoint point;
    const int levels = mems_levels(state.n());
    for (int l = 1; l <= levels; ++l) {
        const LevelSpectra scan = level_spectra(state, l, cfg);
        point.mems.push_back(ape_from_spectra(scan, cfg));
        if (l == levels) {
            point.half_rank = RankSummary{l, scan.spectra.front().rank, scan.spectra.front().rank};
            for (const SpectrumResult& sp : scan.spectra) {
                point.half_rank.min_rank = std::min(point.half_rank.min_rank, sp.rank);
                point.half_rank.max_rank = std::max(point.half_rank.max_rank, sp.rank);
            }
        }
    }
    point.mape = mape_from_mems(point.mems);
    return point;
}

// CSV rows (n, l1, S_1.., mape, rank_half, rank_mixed) for l1 = 0..n;
// levels beyond floor(n/2) are left empty for smaller n in the list.
inline void sweep_dicke(std::ostream& out, std::span<const int> ns,
                        const Config& cfg = default_config()) {
    int max_levels = 0;
    for (int n : ns) max_levels = std::max(max_levels, mems_levels(n));

    out << "n,l1";
    for (int l = 1; l <= max_levels; ++l) out << ",S" << l;
    out << ",mape,rank_half,rank_mixed\n";

    for (int n : ns) {
        for (int l1 = 0; l1 <= n; ++l1) {
            const SweepPoint point = sweep_point(dicke(n, l1, cfg), cfg);
            out << n << ',' << l1;
            for (int l = 0; l < max_levels; ++l)
                out << ',' << (l < static_cast<int>(point.mems.size()) ? fmt_sig(point.mems[static_cast<std::size_t>(l)]) : "");
            out << ',' << fmt_sig(point.mape) << ',' << point.half_rank.max_rank << ','
                << (point.half_rank.uniform() ? 0 : 1) << "\n";
        }
    }
}

// CSV rows (l1, l2, mape, rank_half, rank_mixed) over the simplex
// l1 + l2 <= n, optionally restricted to one fixed l1 slice.
inline void sweep_d3(std::ostream& out, int n, std::optional<int> fixed_l1,
                     const Config& cfg = default_config()) {
    out << "l1,l2,mape,rank_half,rank_mixed\n";
    for (int l1 = 0; l1 <= n; ++l1) {
        if (fixed_l1 && l1 != *fixed_l1) continue;
        for (int l2 = 0; l2 + l1 <= n; ++l2) {
            const SweepPoint point = sweep_point(d3(n, l1, l2, cfg), cfg);
            out << l1 << ',' << l2 << ',' << fmt_sig(point.mape) << ','
                << point.half_rank.max_rank << ',' << (point.half_rank.uniform() ? 0 : 1) << "\n";
        }
    }
}

// Compares mape(ghz(n,d)) against the closed form floor(n/2) * log2 d.
// Returns true when every pair passes at the violation tolerance.
inline bool check_ghz(std::ostream& out, std::span<const int> ns, std::span<const int> ds,
                      const Config& cfg = default_config()) {
    out << "n,d,mape,expected,delta,pass\n";
    bool all_ok = true;
    for (int n : ns) {
        for (int d : ds) {
            const double measured = mape(ghz(n, d, cfg), cfg);
            const double expected = static_cast<double>(mems_levels(n)) * std::log2(d);
            const double delta = measured - expected;
            const bool ok = std::abs(delta) < cfg.violation_tol;
            all_ok = all_ok && ok;
            out << n << ',' << d << ',' << fmt_sig(measured) << ',' << fmt_sig(expected) << ','
                << fmt_sig(delta) << ',' << (ok ? 1 : 0) << "\n";
        }
    }
    return all_ok;
}

// Runs the monotonicity fuzz harness and emits one CSV row per trial.
// Returns the fuzz report; the caller decides what counts as failure
// (MAPE violations do, l2 findings are informational).
inline FuzzReport check_locc(std::ostream& out, int trials, std::uint64_t master_seed,
                             const MeasureSpec& measure, const Config& cfg = default_config()) {
    const FuzzReport report = run_locc_fuzz(trials, master_seed, measure, cfg);
    out << "seed,dims,before,avg_after,violated\n";
    for (const FuzzTrial& trial : report.trials) {
        out << trial.seed << ',' << fmt_dims(trial.dims) << ',' << fmt_sig(trial.before) << ','
            << fmt_sig(trial.avg_after) << ',' << (trial.violated ? 1 : 0) << "\n";
    }
    return report;
}

} // namespace mape
