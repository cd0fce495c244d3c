#include "frobchi/scan.hpp"

#include <algorithm>

#include "frobchi/errors.hpp"

namespace frobchi {

namespace {

struct Cell {
    long param;
    long p;
    int e;
};

std::vector<Cell> expand(const ScanRequest& req) {
    if (req.params.empty() || req.primes.empty() || req.exponents.empty())
        throw StructuralError("scan needs nonempty parameter, prime and exponent ranges");
    if (req.family == FamilyKind::ProjectiveSpace)
        throw StructuralError("scan covers the del Pezzo and Fano threefold families");
    std::vector<long> params = req.params;
    std::vector<long> primes = req.primes;
    std::vector<int> exps = req.exponents;
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

    std::vector<Cell> cells;
    cells.reserve(params.size() * primes.size() * exps.size());
    for (long param : params)
        for (long p : primes)
            for (int e : exps)
                cells.push_back({param, p, e});
    return cells;
}

ScanRow evaluate_cell(FamilyKind family, const Cell& cell) {
    FrobParams fp(cell.p, cell.e);
    VarietySpec spec = family == FamilyKind::DelPezzo ? del_pezzo_spec(static_cast<int>(cell.param))
                                                      : fano3_spec(cell.param);
    ScanRow row;
    row.family = family_kind_name(family);
    row.param = cell.param;
    row.p = cell.p;
    row.e = cell.e;
    row.chi = chi_frob_end(spec, fp);
    row.chi_closed = family == FamilyKind::DelPezzo
                         ? chi_del_pezzo_closed(static_cast<int>(cell.param), fp)
                         : chi_fano3_closed(cell.param, fp);
    row.match = row.chi == row.chi_closed;
    row.leading = chi_symbolic(spec).leading_coefficient();
    row.verdict = verdict_name(tilting_verdict(row.chi, h0_lower_bound_for(spec, fp).bound).verdict);
    return row;
}

} // namespace

std::vector<ScanRow> scan_serial(const ScanRequest& req) {
    std::vector<Cell> cells = expand(req);
    std::vector<ScanRow> rows(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        rows[i] = evaluate_cell(req.family, cells[i]);
    return rows;
}

std::vector<ScanRow> scan_parallel(const ScanRequest& req) {
    std::vector<Cell> cells = expand(req);
    std::vector<ScanRow> rows(cells.size());
    // Cells are independent pure evaluations; each iteration writes only its
    // own slot, so the merged output is deterministic under any schedule.
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < cells.size(); ++i)
        rows[i] = evaluate_cell(req.family, cells[i]);
    return rows;
}

std::vector<ScanRow> scan(const ScanRequest& req) {
#ifdef _OPENMP
    return scan_parallel(req);
#else
    return scan_serial(req);
#endif
}

bool scan_uses_openmp() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

} // namespace frobchi
