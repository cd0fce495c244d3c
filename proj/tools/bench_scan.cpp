#include <chrono>
#include <cstdio>

#include "frobchi/scan.hpp"

// Times the serial reference against the OpenMP kernel on a grid large
// enough to matter and checks they produce identical rows.

using Clock = std::chrono::steady_clock;

namespace {

double run_ms(std::vector<frobchi::ScanRow> (*kernel)(const frobchi::ScanRequest&),
              const frobchi::ScanRequest& req, std::vector<frobchi::ScanRow>& rows) {
    auto start = Clock::now();
    rows = kernel(req);
    auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main() {
    frobchi::ScanRequest req;
    req.family = frobchi::FamilyKind::Fano3;
    for (long vol = 2; vol <= 256; vol += 2)
        req.params.push_back(vol);
    req.primes = {2, 3, 5, 7, 11, 13};
    req.exponents = {1, 2, 3};

    std::printf("grid: %zu cells (%zu params x %zu primes x %zu exponents)\n",
                req.params.size() * req.primes.size() * req.exponents.size(), req.params.size(),
                req.primes.size(), req.exponents.size());
    std::printf("openmp kernel in use: %s\n", frobchi::scan_uses_openmp() ? "yes" : "no");

    std::vector<frobchi::ScanRow> serial_rows, parallel_rows;
    double warm = run_ms(frobchi::scan_serial, req, serial_rows); // warm caches
    double serial_ms = run_ms(frobchi::scan_serial, req, serial_rows);
    double parallel_ms = run_ms(frobchi::scan_parallel, req, parallel_rows);
    (void)warm;

    if (serial_rows.size() != parallel_rows.size()) {
        std::printf("MISMATCH: row counts differ (%zu vs %zu)\n", serial_rows.size(),
                    parallel_rows.size());
        return 1;
    }
    for (std::size_t i = 0; i < serial_rows.size(); ++i) {
        const auto& a = serial_rows[i];
        const auto& b = parallel_rows[i];
        if (a.param != b.param || a.p != b.p || a.e != b.e || a.chi != b.chi ||
            a.match != b.match || a.leading != b.leading || a.verdict != b.verdict) {
            std::printf("MISMATCH at row %zu\n", i);
            return 1;
        }
    }

    std::printf("serial:   %9.2f ms\n", serial_ms);
    std::printf("parallel: %9.2f ms\n", parallel_ms);
    std::printf("speedup:  %.2fx\n", serial_ms / parallel_ms);
    std::printf("rows identical: yes\n");
    return 0;
}
