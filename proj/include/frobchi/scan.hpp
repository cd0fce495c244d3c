#pragma once

#include <string>
#include <vector>

#include "frobchi/catalog.hpp"
#include "frobchi/frobpush.hpp"
#include "frobchi/variety.hpp"

// Grid evaluation of chi over a family: engine value, closed form, match
// flag, symbolic leading coefficient, and the obstruction verdict per cell.
// Two implementations with identical results: a serial reference and an
// OpenMP-parallel kernel; scan() dispatches to the parallel one when built
// with OpenMP. Rows are deterministic — ordered by (param, p, e) — no matter
// which kernel ran or how it was scheduled.

namespace frobchi {

struct ScanRequest {
    FamilyKind family = FamilyKind::DelPezzo;
    std::vector<long> params; // degrees d or volumes vol
    std::vector<long> primes;
    std::vector<int> exponents;
};

struct ScanRow {
    std::string family;
    long param = 0;
    long p = 0;
    int e = 1;
    Integer chi;
    Integer chi_closed;
    bool match = false;
    Rational leading; // leading coefficient of the symbolic chi for this param
    std::string verdict;
};

std::vector<ScanRow> scan_serial(const ScanRequest& req);
std::vector<ScanRow> scan_parallel(const ScanRequest& req);
std::vector<ScanRow> scan(const ScanRequest& req);

// True when scan() actually runs the OpenMP kernel.
bool scan_uses_openmp();

} // namespace frobchi
