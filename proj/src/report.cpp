#include "surfkin/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace surfkin {

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool ResidualReport::all_pass() const {
    for (const CheckRow& c : checks)
        if (c.status == "fail") return false;
    return true;
}

std::string ResidualReport::to_csv() const {
    std::ostringstream os;
    os << "check,max_residual,mean_residual,min_residual,worst_u,worst_v,tolerance,status\n";
    for (const CheckRow& c : checks) {
        os << c.name << ',' << format_g17(c.max_residual) << ','
           << format_g17(c.mean_residual) << ',' << format_g17(c.min_residual) << ','
           << format_g17(c.worst_u) << ',' << format_g17(c.worst_v) << ','
           << format_g17(c.tol) << ',' << '"' << c.status << '"' << '\n';
    }
    return os.str();
}

std::string ResidualReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["job"] = job;
    doc["pass"] = all_pass();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const CheckRow& c : checks) {
        nlohmann::ordered_json row;
        row["name"] = c.name;
        row["max_residual"] = c.max_residual;
        row["mean_residual"] = c.mean_residual;
        row["min_residual"] = c.min_residual;
        row["worst_point"] = {c.worst_u, c.worst_v};
        row["tolerance"] = c.tol;
        row["status"] = c.status;
        rows.push_back(std::move(row));
    }
    doc["checks"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void ResidualAccumulator::add(double value, double u, double v) {
    if (n_ == 0 || value > max_) {
        max_ = value;
        wu_ = u;
        wv_ = v;
    }
    if (n_ == 0 || value < min_) min_ = value;
    sum_ += value;
    ++n_;
}

CheckRow ResidualAccumulator::finish(std::string name, double tol) const {
    CheckRow c;
    c.name = std::move(name);
    c.max_residual = max_;
    c.mean_residual = n_ > 0 ? sum_ / static_cast<double>(n_) : 0.0;
    c.min_residual = min_;
    c.worst_u = wu_;
    c.worst_v = wv_;
    c.tol = tol;
    c.status = max_ <= tol ? "pass" : "fail";
    return c;
}

} // namespace surfkin
