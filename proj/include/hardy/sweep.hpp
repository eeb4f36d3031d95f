#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "hardy/constants.hpp"
#include "hardy/core.hpp"

// Parameter-grid sweeps over the sharp constants, emitted as CSV or JSON with a fixed
// 17-significant-digit format so that identical invocations produce byte-identical
// files. Grid points run on a small work pool; rows are buffered and written in grid
// order regardless of completion order.

namespace hardy::sweep {

struct Range {
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;  // 0: single value

    std::vector<double> values() const {
        std::vector<double> out;
        if (step <= 0.0 || max <= min) {
            out.push_back(min);
            return out;
        }
        // snap to the grid to keep the count stable against rounding
        const long n = std::lround((max - min) / step);
        for (long i = 0; i <= n; ++i) {
            double v = min + step * i;
            if (v > max + 0.5 * step) break;
            out.push_back(v);
        }
        return out;
    }

    static Range parse(const std::string& text) {
        // "a" or "a:b:step"
        Range r;
        const auto c1 = text.find(':');
        if (c1 == std::string::npos) {
            r.min = r.max = std::stod(text);
            return r;
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw std::invalid_argument("range: want min:max:step");
        r.min = std::stod(text.substr(0, c1));
        r.max = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        r.step = std::stod(text.substr(c2 + 1));
        return r;
    }
};

enum class Format { csv, json };

struct SweepSpec {
    Regime regime = Regime::full;
    std::vector<int> ds{1};
    Range s{0.5, 0.5, 0.0};
    Range p{2.0, 2.0, 0.0};
    Range alpha{0.0, 0.0, 0.0};
    Range beta{0.0, 0.0, 0.0};
    Format format = Format::csv;
    std::string out_path;  // empty: stdout
    bool no_timing = false;
    int threads = 0;  // 0: HARDY_SHARP_THREADS or hardware_concurrency
};

struct SweepRow {
    HardyParams params;
    Regime regime = Regime::full;
    std::optional<double> constant_integral;
    std::optional<double> constant_closed;
    std::optional<double> discrepancy;
    std::string status = "ok";
    double wall_ms = 0.0;
};

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt17(*v) : std::string();
}

inline int pool_size(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HARDY_SHARP_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 2;
}

inline SweepRow compute_row(const HardyParams& q, Regime regime) {
    SweepRow row;
    row.params = q;
    row.regime = regime;
    const auto t0 = std::chrono::steady_clock::now();
    auto viol = validate(q, regime);
    if (!viol.empty()) {
        row.status = "inadmissible: " + viol.front().condition;
    } else {
        try {
            const bool half_like = (regime == Regime::half || regime == Regime::interval);
            ConstantReport integral =
                half_like ? constants::constant_D(q) : constants::constant_C(q);
            row.constant_integral = integral.constant;
            if (q.p == 2.0) {
                ConstantReport closed;
                if (q.s == 0.0)
                    closed = half_like ? constants::constant_D_s0_closed_p2(q)
                                       : constants::constant_C_s0_closed_p2(q);
                else
                    closed = half_like ? constants::constant_D_closed_p2(q)
                                       : constants::constant_C_closed_p2(q);
                row.constant_closed = closed.constant;
                const double denom = std::max(std::abs(closed.constant), 1e-300);
                row.discrepancy = std::abs(integral.constant - closed.constant) / denom;
            }
        } catch (const validation_error& e) {
            row.status = std::string("inadmissible: ") + e.what();
        } catch (const quadrature_error& e) {
            row.status = std::string("quad-fail: ") + e.what();
        }
    }
    row.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

}  // namespace detail

inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    std::vector<HardyParams> grid;
    for (int d : spec.ds)
        for (double s : spec.s.values())
            for (double p : spec.p.values())
                for (double a : spec.alpha.values())
                    for (double b : spec.beta.values()) grid.push_back({d, s, p, a, b});

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    const int n_threads = std::min<int>(detail::pool_size(spec.threads),
                                        std::max<std::size_t>(grid.size(), 1));
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            rows[i] = detail::compute_row(grid[i], spec.regime);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool no_timing) {
    os << "regime,d,s,p,alpha,beta,constant_integral,constant_closed,discrepancy,status";
    if (!no_timing) os << ",wall_ms";
    os << "\n";
    for (const auto& r : rows) {
        os << to_string(r.regime) << ',' << r.params.d << ',' << detail::fmt17(r.params.s) << ','
           << detail::fmt17(r.params.p) << ',' << detail::fmt17(r.params.alpha) << ','
           << detail::fmt17(r.params.beta) << ',' << detail::fmt_opt(r.constant_integral) << ','
           << detail::fmt_opt(r.constant_closed) << ',' << detail::fmt_opt(r.discrepancy) << ','
           << r.status;
        if (!no_timing) os << ',' << detail::fmt17(r.wall_ms);
        os << "\n";
    }
}

inline void write_json(std::ostream& os, const std::vector<SweepRow>& rows, bool no_timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["regime"] = to_string(r.regime);
        row["d"] = r.params.d;
        row["s"] = r.params.s;
        row["p"] = r.params.p;
        row["alpha"] = r.params.alpha;
        row["beta"] = r.params.beta;
        if (r.constant_integral) row["constant_integral"] = *r.constant_integral;
        if (r.constant_closed) row["constant_closed"] = *r.constant_closed;
        if (r.discrepancy) row["discrepancy"] = *r.discrepancy;
        row["status"] = r.status;
        if (!no_timing) row["wall_ms"] = r.wall_ms;
        arr.push_back(row);
    }
    os << arr.dump(2) << "\n";
}

/// Flat key=value config with [sweep] section headers. Recognised keys: regime, d,
/// s, p, alpha, beta (ranges as min:max:step), format, out, no_timing, threads.
inline SweepSpec parse_config(std::istream& in) {
    SweepSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string t) {
            const auto b = t.find_first_not_of(" \t\r");
            const auto e = t.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "regime") {
            if (val == "full") spec.regime = Regime::full;
            else if (val == "full-punctured") spec.regime = Regime::full_punctured;
            else if (val == "half") spec.regime = Regime::half;
            else if (val == "interval") spec.regime = Regime::interval;
            else throw std::invalid_argument("config: unknown regime '" + val + "'");
        } else if (key == "d") {
            spec.ds.clear();
            std::stringstream ss(val);
            std::string tok;
            while (std::getline(ss, tok, ',')) spec.ds.push_back(std::stoi(tok));
        } else if (key == "s") {
            spec.s = Range::parse(val);
        } else if (key == "p") {
            spec.p = Range::parse(val);
        } else if (key == "alpha") {
            spec.alpha = Range::parse(val);
        } else if (key == "beta") {
            spec.beta = Range::parse(val);
        } else if (key == "format") {
            if (val == "csv") spec.format = Format::csv;
            else if (val == "json") spec.format = Format::json;
            else throw std::invalid_argument("config: unknown format '" + val + "'");
        } else if (key == "out") {
            spec.out_path = val;
        } else if (key == "no_timing") {
            spec.no_timing = (val == "1" || val == "true" || val == "yes");
        } else if (key == "threads") {
            spec.threads = std::stoi(val);
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    return spec;
}

}  // namespace hardy::sweep
