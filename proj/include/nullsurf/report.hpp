#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace nullsurf {

// Mandatory items gate overall_pass; Warning and Diagnostic items are
// informational (sufficiency checks, finite-difference cross-checks,
// degeneracy notices) and never flip the verdict.
enum class Severity { Mandatory, Warning, Diagnostic };

const char* to_string(Severity s);

struct VerificationItem {
    std::string id;
    Severity severity = Severity::Mandatory;
    bool passed = false;
    double max_defect = 0.0;
    double mean_defect = 0.0;
    double worst_s = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationItem> items;

    bool overall_pass() const;
    const VerificationItem* find(const std::string& id) const;
    std::string render() const;
};

struct Tolerances {
    double null = 1e-9;
    double frame = 1e-8;
    double iso = 1e-8;
    double asym = 1e-8;
    double residual = 1e-8;
    double consistency = 1e-8;
    double structural = 1e-12;
    double fd_cross = 1e-4;
};

// Running max/mean of |defect| over a sample sweep, remembering where the
// worst value occurred.
struct DefectStats {
    double max_abs = 0.0;
    double sum_abs = 0.0;
    double worst_s = 0.0;
    std::size_t count = 0;

    void add(double s, double defect) {
        double a = std::abs(defect);
        sum_abs += a;
        ++count;
        if (a >= max_abs) {
            max_abs = a;
            worst_s = s;
        }
    }

    double mean_abs() const { return count ? sum_abs / static_cast<double>(count) : 0.0; }

    VerificationItem to_item(std::string id, Severity sev, double tol,
                             std::string detail = {}) const {
        VerificationItem it;
        it.id = std::move(id);
        it.severity = sev;
        it.passed = max_abs <= tol;
        it.max_defect = max_abs;
        it.mean_defect = mean_abs();
        it.worst_s = worst_s;
        it.tolerance = tol;
        it.detail = std::move(detail);
        return it;
    }
};

}  // namespace nullsurf
