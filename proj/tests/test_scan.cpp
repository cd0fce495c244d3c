#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobchi/errors.hpp"
#include "frobchi/scan.hpp"
#include "test_helpers.hpp"

using namespace frobchi;

namespace {

bool rows_equal(const ScanRow& a, const ScanRow& b) {
    return a.family == b.family && a.param == b.param && a.p == b.p && a.e == b.e &&
           a.chi == b.chi && a.chi_closed == b.chi_closed && a.match == b.match &&
           a.leading == b.leading && a.verdict == b.verdict;
}

bool rows_equal(const std::vector<ScanRow>& a, const std::vector<ScanRow>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!rows_equal(a[i], b[i]))
            return false;
    return true;
}

const ScanRow& find_row(const std::vector<ScanRow>& rows, long param, long p, int e) {
    for (const auto& row : rows)
        if (row.param == param && row.p == p && row.e == e)
            return row;
    throw std::runtime_error("row not found");
}

} // namespace

TEST_CASE("scan expands the grid in (param, p, e) order") {
    ScanRequest req{FamilyKind::DelPezzo, {3, 1}, {3, 2}, {2, 1}};
    std::vector<ScanRow> rows = scan_serial(req);
    REQUIRE(rows.size() == 8);

    std::size_t i = 0;
    for (long param : {1L, 3L})
        for (long p : {2L, 3L})
            for (int e : {1, 2}) {
                CAPTURE(i);
                CHECK(rows[i].param == param);
                CHECK(rows[i].p == p);
                CHECK(rows[i].e == e);
                CHECK(rows[i].family == "del_pezzo");
                CHECK(rows[i].match);
                ++i;
            }
}

TEST_CASE("scan deduplicates repeated inputs") {
    ScanRequest clean{FamilyKind::DelPezzo, {1, 3}, {2}, {1}};
    ScanRequest noisy{FamilyKind::DelPezzo, {3, 3, 1, 1, 3}, {2, 2}, {1, 1, 1}};
    CHECK(rows_equal(scan_serial(clean), scan_serial(noisy)));
}

TEST_CASE("parallel and serial scans produce identical rows") {
    ScanRequest dp{FamilyKind::DelPezzo, {1, 2, 3, 4, 5, 6, 7, 8, 9}, {2, 3}, {1, 2}};
    CHECK(rows_equal(scan_serial(dp), scan_parallel(dp)));

    ScanRequest fano{FamilyKind::Fano3, {2, 22, 24, 64}, {2, 3, 5}, {1, 2}};
    std::vector<ScanRow> serial = scan_serial(fano);
    CHECK(rows_equal(serial, scan_parallel(fano)));
    CHECK(rows_equal(serial, scan(fano))); // dispatcher agrees with both
}

TEST_CASE("scan validates its request") {
    CHECK_THROWS_AS(scan_serial({FamilyKind::DelPezzo, {}, {2}, {1}}), StructuralError);
    CHECK_THROWS_AS(scan_serial({FamilyKind::DelPezzo, {3}, {}, {1}}), StructuralError);
    CHECK_THROWS_AS(scan_serial({FamilyKind::DelPezzo, {3}, {2}, {}}), StructuralError);
    CHECK_THROWS_AS(scan_serial({FamilyKind::ProjectiveSpace, {2}, {2}, {1}}), StructuralError);
    // Invalid cells fail inside evaluation: non-prime p, out-of-range degree.
    CHECK_THROWS_AS(scan_serial({FamilyKind::DelPezzo, {3}, {4}, {1}}), StructuralError);
    CHECK_THROWS_AS(scan_serial({FamilyKind::DelPezzo, {11}, {2}, {1}}), StructuralError);
}

TEST_CASE("scan rows carry chi, leading coefficient, and verdict") {
    ScanRequest req{FamilyKind::DelPezzo, {1, 3, 4, 9}, {2}, {1}};
    std::vector<ScanRow> rows = scan_serial(req);
    REQUIRE(rows.size() == 4);

    const ScanRow& d1 = find_row(rows, 1, 2, 1);
    CHECK(d1.chi == -5);
    CHECK(d1.verdict == "HigherCohomologyNonzero");
    CHECK(d1.leading == frac(-3, 4));

    const ScanRow& d3 = find_row(rows, 3, 2, 1);
    CHECK(d3.chi == 1);
    CHECK(d3.verdict == "HigherCohomologyNonzeroGivenH0Bound"); // F-split bound h0 >= 2
    CHECK(d3.leading == frac(-1, 4));

    const ScanRow& d4 = find_row(rows, 4, 2, 1);
    CHECK(d4.chi == 4);
    CHECK(d4.leading == Rational(1)); // quartic term vanishes, leading is q^2
    CHECK(d4.verdict == "Inconclusive");

    const ScanRow& d9 = find_row(rows, 9, 2, 1);
    CHECK(d9.chi == 19);
    CHECK(d9.verdict == "Inconclusive");
    CHECK(d9.leading == frac(5, 4));

    for (const auto& row : rows) {
        CAPTURE(row.param);
        CHECK(row.match);
        CHECK((row.leading < 0) == (row.param < 4));
    }
}

TEST_CASE("fano threefold rows behave the same way around volume 24") {
    ScanRequest req{FamilyKind::Fano3, {2, 22, 24, 64}, {2}, {1}};
    std::vector<ScanRow> rows = scan_serial(req);
    CHECK(find_row(rows, 2, 2, 1).leading == frac(-11, 12));
    CHECK(find_row(rows, 22, 2, 1).leading == frac(-1, 12));
    CHECK(find_row(rows, 24, 2, 1).leading == Rational(1)); // degree drops to q^4
    CHECK(find_row(rows, 64, 2, 1).leading == frac(5, 3));
    for (const auto& row : rows) {
        CAPTURE(row.param);
        CHECK(row.family == "fano3");
        CHECK(row.match);
        CHECK((row.leading < 0) == (row.param < 24));
    }
}

TEST_CASE("scan dispatch reports its kernel") {
    // Informational: which kernel scan() uses is a build property; both must
    // agree on results either way (checked above), so just exercise the flag.
    CHECK((scan_uses_openmp() == true || scan_uses_openmp() == false));
}
