#include "report.hpp"

#include <cstdio>

namespace altinv::cli {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void ReportDocument::add_pass_fail(const std::string& check, double x, double y, int n,
                                   Complex lhs, Complex rhs, double residual, double tol) {
    ReportEntry e;
    e.check = check;
    e.x = x;
    e.y = y;
    e.n = n;
    e.lhs = lhs;
    e.rhs = rhs;
    e.residual = residual;
    e.tolerance = tol;
    e.status = residual <= tol ? "pass" : "fail";
    entries.push_back(std::move(e));
}

void ReportDocument::add_skip(const std::string& check, double x, double y, int n,
                              const std::string& reason) {
    ReportEntry e;
    e.check = check;
    e.x = x;
    e.y = y;
    e.n = n;
    std::string clean = reason;
    for (char& c : clean) {
        if (c == ',' || c == '\n') c = ';';
    }
    e.status = "skip:" + clean;
    entries.push_back(std::move(e));
}

void ReportDocument::add_invariance(const std::string& check, const InvarianceReport& rep) {
    for (const InvarianceEntry& e : rep.entries) {
        if (e.skipped) {
            add_skip(check, e.x, e.y, e.n, e.skip_reason);
        } else {
            add_pass_fail(check, e.x, e.y, e.n, e.lhs, e.rhs, e.residual, rep.tolerance);
        }
    }
}

void ReportDocument::add_control(const std::string& check, double x, double y, int n,
                                 double residual, double floor) {
    ReportEntry e;
    e.check = check;
    e.x = x;
    e.y = y;
    e.n = n;
    e.residual = residual;
    e.tolerance = floor;
    e.status = residual >= floor ? "pass" : "fail";
    e.is_control = true;
    entries.push_back(std::move(e));
}

int ReportDocument::passed() const {
    int k = 0;
    for (const auto& e : entries) k += e.status == "pass";
    return k;
}

int ReportDocument::failed() const {
    int k = 0;
    for (const auto& e : entries) k += e.status == "fail";
    return k;
}

int ReportDocument::skipped() const {
    int k = 0;
    for (const auto& e : entries) k += e.status.rfind("skip", 0) == 0;
    return k;
}

double ReportDocument::max_residual() const {
    double m = 0.0;
    for (const auto& e : entries) {
        if (e.is_control || e.status.rfind("skip", 0) == 0) continue;
        m = std::max(m, e.residual);
    }
    return m;
}

nlohmann::json ReportDocument::to_json() const {
    nlohmann::json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json r;
        r["check"] = e.check;
        r["x"] = e.x;
        r["y"] = e.y;
        r["n"] = e.n;
        r["lhs_re"] = e.lhs.real();
        r["lhs_im"] = e.lhs.imag();
        r["rhs_re"] = e.rhs.real();
        r["rhs_im"] = e.rhs.imag();
        r["residual"] = fmt17(e.residual);
        r["tolerance"] = fmt17(e.tolerance);
        r["status"] = e.status;
        rows.push_back(std::move(r));
    }
    doc["entries"] = std::move(rows);
    doc["summary"] = {{"total", total()},
                      {"passed", passed()},
                      {"failed", failed()},
                      {"skipped", skipped()},
                      {"max_residual", fmt17(max_residual())}};
    return doc;
}

std::string ReportDocument::to_csv() const {
    std::string out = "x,y,n,lhs_re,lhs_im,rhs_re,rhs_im,residual,status\n";
    for (const auto& e : entries) {
        out += fmt17(e.x) + "," + fmt17(e.y) + "," + std::to_string(e.n) + "," +
               fmt17(e.lhs.real()) + "," + fmt17(e.lhs.imag()) + "," + fmt17(e.rhs.real()) +
               "," + fmt17(e.rhs.imag()) + "," + fmt17(e.residual) + "," + e.status + "\n";
    }
    return out;
}

} // namespace altinv::cli
