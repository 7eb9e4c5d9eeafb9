// Text state-file format:
//
//   # comment lines start with '#'
//   dims: 2 2
//   0.70710678118654746 0
//   0 0
//   0 0
//   0.70710678118654746 0
//
// First content line declares the local dimensions; every following
// content line is one "re im" amplitude pair in flat-index order. The
// amplitude count must match exactly.

#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mape/config.hpp"
#include "mape/errors.hpp"
#include "mape/state.hpp"

namespace mape {

namespace detail {

inline bool is_content_line(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c != '#';
    }
    return false; // blank
}

} // namespace detail

inline PureState read_state(std::istream& in, bool normalize = false,
                            const Config& cfg = default_config()) {
    std::string line;
    std::vector<int> dims;
    std::vector<cplx> amps;
    bool have_dims = false;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!detail::is_content_line(line)) continue;
        std::istringstream fields(line);
        if (!have_dims) {
            std::string tag;
            fields >> tag;
            if (tag != "dims:")
                throw ParseError("state file line " + std::to_string(lineno) +
                                 ": expected 'dims: d1 d2 ...'");
            int d;
            while (fields >> d) dims.push_back(d);
            if (!fields.eof())
                throw ParseError("state file line " + std::to_string(lineno) +
                                 ": malformed dimension list");
            if (dims.empty())
                throw ParseError("state file line " + std::to_string(lineno) + ": empty dimension list");
            have_dims = true;
            continue;
        }
        double re, im;
        std::string extra;
        if (!(fields >> re >> im) || (fields >> extra))
            throw ParseError("state file line " + std::to_string(lineno) +
                             ": expected exactly 're im'");
        amps.emplace_back(re, im);
    }

    if (!have_dims) throw ParseError("state file: missing 'dims:' header line");
    DimsProfile profile(dims, cfg);
    if (static_cast<std::int64_t>(amps.size()) != profile.total_dim())
        throw ParseError("state file: expected " + std::to_string(profile.total_dim()) +
                         " amplitudes, got " + std::to_string(amps.size()));
    return make_state(std::move(profile), std::move(amps), normalize, cfg);
}

inline PureState read_state_file(const std::string& path, bool normalize = false,
                                 const Config& cfg = default_config()) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file '" + path + "'");
    return read_state(in, normalize, cfg);
}

// %.17g round-trips doubles exactly.
inline void write_state(std::ostream& out, const PureState& state) {
    out << "dims:";
    for (int d : state.profile().dims()) out << ' ' << d;
    out << '\n';
    char buf[64];
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        const cplx a = state.amplitude(i);
        std::snprintf(buf, sizeof(buf), "%.17g %.17g", a.real(), a.imag());
        out << buf << '\n';
    }
}

} // namespace mape
