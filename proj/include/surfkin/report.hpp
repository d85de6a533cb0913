#ifndef SURFKIN_REPORT_HPP
#define SURFKIN_REPORT_HPP

#include <string>
#include <vector>

namespace surfkin {

// One verification row: a named residual over the grid plus its verdict.
// status is "pass", "fail", or a "skipped (...)" note; skipped rows do not
// block the overall verdict.
struct CheckRow {
    std::string name;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double min_residual = 0.0;
    double worst_u = 0.0;
    double worst_v = 0.0;
    double tol = 0.0;
    std::string status;
};

struct ResidualReport {
    std::string job;
    std::vector<CheckRow> checks;

    bool all_pass() const;
    // CSV with a header line and one row per check; byte-deterministic.
    std::string to_csv() const;
    // Nested JSON document with a top-level `schema: 1` field.
    std::string to_json() const;
};

// Accumulates max/mean/worst-point over grid samples for one check.
class ResidualAccumulator {
public:
    void add(double value, double u, double v);
    CheckRow finish(std::string name, double tol) const;

private:
    double max_ = 0.0, min_ = 0.0, sum_ = 0.0, wu_ = 0.0, wv_ = 0.0;
    long n_ = 0;
};

// Shortest-round-trip-ish fixed formatting used across CSV/JSON/OBJ.
std::string format_g17(double x);

} // namespace surfkin

#endif
