#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperball/packing.hpp"
#include "hyperball/volume.hpp"

namespace hyperball {

/**
 * One row of the congruent-packing summary table for {p,3,3}.  Volumes are
 * per characteristic orthoscheme: `vol_lens` is the hyperball lens share cut
 * out by one orthoscheme, so `delta = vol_lens / vol_orthoscheme`.
 */
struct TableRow {
    int p = 0;
    double h = 0.0;
    double vol_orthoscheme = 0.0;
    double vol_lens = 0.0;
    double delta = 0.0;
};

[[nodiscard]] inline std::vector<TableRow> density_table(const std::vector<int>& ps) {
    std::vector<TableRow> rows;
    rows.reserve(ps.size());
    for (int p : ps) {
        if (p < 7)
            throw std::invalid_argument("density_table: needs integer p >= 7; {p,3,3} tiles "
                                        "hyperbolic space only for those");
        const TruncatedSimplexModel m = build_3d(static_cast<double>(p));
        TableRow row;
        row.p = p;
        row.h = m.h;
        row.vol_orthoscheme = m.orthoscheme_volume;
        row.vol_lens = hyperball_lens_volume_3d(truncation_face_area_3d_share(static_cast<double>(p)), m.h);
        row.delta = row.vol_lens / row.vol_orthoscheme;
        rows.push_back(row);
    }
    return rows;
}

struct SweepPoint {
    double x = 0.0;
    double delta = 0.0;
};

/// Density over an inclusive n-point grid on [0, x_max].
[[nodiscard]] inline std::vector<SweepPoint> density_sweep(const TruncatedSimplexModel& m,
                                                           int n_points) {
    if (n_points < 2) throw std::invalid_argument("density_sweep: needs at least 2 points");
    const double hi = x_max(m);
    std::vector<SweepPoint> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double x = hi * static_cast<double>(i) / static_cast<double>(n_points - 1);
        pts.push_back({x, density(m, x)});
    }
    return pts;
}

namespace detail {

inline std::string formatted(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace detail

[[nodiscard]] inline std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "p,h,vol_orthoscheme,vol_lens,delta\n";
    for (const TableRow& r : rows) {
        out += std::to_string(r.p);
        for (double v : {r.h, r.vol_orthoscheme, r.vol_lens, r.delta})
            out += "," + detail::formatted("%.5f", v);
        out += '\n';
    }
    return out;
}

[[nodiscard]] inline std::string sweep_to_csv(const std::vector<SweepPoint>& pts) {
    std::string out = "x,delta\n";
    for (const SweepPoint& pt : pts)
        out += detail::formatted("%.10f", pt.x) + "," + detail::formatted("%.10f", pt.delta) + '\n';
    return out;
}

[[nodiscard]] inline nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& r : rows)
        arr.push_back({{"p", r.p},
                       {"h", r.h},
                       {"vol_orthoscheme", r.vol_orthoscheme},
                       {"vol_lens", r.vol_lens},
                       {"delta", r.delta}});
    return {{"rows", arr}};
}

[[nodiscard]] inline nlohmann::json sweep_to_json(const TruncatedSimplexModel& m,
                                                  const std::vector<SweepPoint>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepPoint& pt : pts) arr.push_back({{"x", pt.x}, {"delta", pt.delta}});
    return {{"dimension", m.dimension}, {"p", m.p}, {"x_max", x_max(m)}, {"points", arr}};
}

[[nodiscard]] inline nlohmann::json optimum_x_to_json(const TruncatedSimplexModel& m,
                                                      const ScalarMaximum& best) {
    return {{"dimension", m.dimension}, {"p", m.p},
            {"x_max", x_max(m)},        {"x_opt", best.x},
            {"delta_opt", best.value},  {"delta_congruent", density(m, 0.0)},
            {"iterations", best.iterations}};
}

[[nodiscard]] inline nlohmann::json optimum_p_to_json(const OptimumOverP& best) {
    return {{"p_opt", best.p},
            {"delta_opt", best.delta},
            {"iterations", best.iterations},
            {"single_peak_confirmed", best.single_peak_confirmed},
            {"integer_tiling", false},
            {"note", "p is treated as a real parameter; {p,3,3} is an actual tiling only for "
                     "integer p >= 7, so this is the optimum of the density formula"}};
}

[[nodiscard]] inline nlohmann::json validation_to_json(const TruncatedSimplexModel& m, double x,
                                                       const ConstraintReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const ConstraintCheck& c : report.checks)
        checks.push_back({{"requirement", c.requirement},
                          {"description", c.description},
                          {"satisfied", c.satisfied},
                          {"margin", c.margin}});
    nlohmann::json heights = nlohmann::json::array();
    for (double hv : ball_heights(m, x)) heights.push_back(hv);
    return {{"dimension", m.dimension},
            {"p", m.p},
            {"x", x},
            {"heights", heights},
            {"checks", checks},
            {"all_satisfied", report.all_satisfied}};
}

}  // namespace hyperball
