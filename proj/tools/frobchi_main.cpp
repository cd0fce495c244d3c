#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobchi/catalog.hpp"
#include "frobchi/errors.hpp"
#include "frobchi/frobpush.hpp"
#include "frobchi/scan.hpp"
#include "frobchi/serialize.hpp"
#include "frobchi/variety.hpp"
#include "frobchi/verify.hpp"

using nlohmann::json;

namespace {

// "1..9", "2..64:2", "2,3,5,7", "3" — comma-separated tokens, each a single
// value or an inclusive range with optional step.
std::vector<long> parse_range_list(const std::string& text) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string token =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
        if (token.empty())
            throw frobchi::ParseError("empty token in range '" + text + "'");
        try {
            auto dots = token.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stol(token));
                continue;
            }
            long lo = std::stol(token.substr(0, dots));
            std::string rest = token.substr(dots + 2);
            long step = 1;
            if (auto colon = rest.find(':'); colon != std::string::npos) {
                step = std::stol(rest.substr(colon + 1));
                rest = rest.substr(0, colon);
            }
            long hi = std::stol(rest);
            if (step < 1)
                throw frobchi::ParseError("range step must be >= 1 in '" + token + "'");
            for (long v = lo; v <= hi; v += step)
                out.push_back(v);
        } catch (const std::invalid_argument&) {
            throw frobchi::ParseError("malformed range token '" + token + "'");
        } catch (const std::out_of_range&) {
            throw frobchi::ParseError("range token out of range '" + token + "'");
        }
    }
    if (out.empty())
        throw frobchi::ParseError("range '" + text + "' is empty");
    return out;
}

struct SpecArgs {
    std::string spec_path;
    std::string family;
    long d = 0;
    long vol = 0;
    long n = 0;
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
    auto* spec = cmd->add_option("--spec", args.spec_path, "variety spec file (JSON)");
    auto* family =
        cmd->add_option("--family", args.family, "built-in family: del_pezzo, fano3 or pn");
    cmd->add_option("--d", args.d, "del Pezzo degree (1..9)");
    cmd->add_option("--vol", args.vol, "Fano threefold anticanonical volume");
    cmd->add_option("--n", args.n, "projective space dimension");
    spec->excludes(family);
}

frobchi::VarietySpec resolve_spec(const SpecArgs& args) {
    if (!args.spec_path.empty())
        return frobchi::variety_from_file(args.spec_path);
    if (args.family == "del_pezzo") {
        if (args.d == 0)
            throw frobchi::ParseError("--family del_pezzo needs --d");
        return frobchi::del_pezzo_spec(static_cast<int>(args.d));
    }
    if (args.family == "fano3") {
        if (args.vol == 0)
            throw frobchi::ParseError("--family fano3 needs --vol");
        return frobchi::fano3_spec(args.vol);
    }
    if (args.family == "pn") {
        if (args.n == 0)
            throw frobchi::ParseError("--family pn needs --n");
        return frobchi::pn_spec(static_cast<int>(args.n));
    }
    if (args.family.empty())
        throw frobchi::ParseError("need either --spec or --family");
    throw frobchi::ParseError("unknown family '" + args.family + "'");
}

int cmd_chi(const SpecArgs& spec_args, long p, int e, long h0_override, bool as_json) {
    frobchi::VarietySpec spec = resolve_spec(spec_args);
    frobchi::FrobParams fp(p, e);
    frobchi::Integer chi = frobchi::chi_frob_end(spec, fp);

    frobchi::H0Bound bound = frobchi::h0_lower_bound_for(spec, fp);
    if (h0_override > 0)
        bound = {frobchi::Integer(h0_override), "caller-supplied bound"};
    frobchi::TiltingVerdict verdict = frobchi::tilting_verdict(chi, bound.bound);

    if (as_json) {
        json out = {{"name", spec.name},
                    {"p", p},
                    {"e", e},
                    {"chi", chi.get_str()},
                    {"h0_bound_source", bound.source},
                    {"verdict", frobchi::verdict_to_json(verdict)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "chi = " << chi.get_str() << "\n";
        std::cout << "verdict: " << frobchi::verdict_name(verdict.verdict) << "\n";
        std::cout << "rationale: " << verdict.rationale << "\n";
        std::cout << "h0 bound: " << bound.bound.get_str() << " (" << bound.source << ")\n";
    }
    return 0;
}

int cmd_symbolic(const SpecArgs& spec_args, bool as_json) {
    frobchi::VarietySpec spec = resolve_spec(spec_args);
    frobchi::QPolynomial poly = frobchi::chi_symbolic(spec);
    if (as_json) {
        json out = {{"name", spec.name},
                    {"chi_of_q", poly.to_string()},
                    {"coefficients", frobchi::qpoly_to_json(poly)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << poly.to_string() << "\n";
    }
    return 0;
}

int cmd_scan(const std::string& family, const std::string& d_range, const std::string& vol_range,
             const std::string& p_list, const std::string& e_range, bool serial, bool as_json) {
    frobchi::ScanRequest req;
    if (family == "del_pezzo") {
        req.family = frobchi::FamilyKind::DelPezzo;
        req.params = parse_range_list(d_range.empty() ? "1..9" : d_range);
    } else if (family == "fano3") {
        req.family = frobchi::FamilyKind::Fano3;
        req.params = parse_range_list(vol_range.empty() ? "2..64:2" : vol_range);
    } else {
        throw frobchi::ParseError("scan needs --family del_pezzo or fano3");
    }
    req.primes = parse_range_list(p_list.empty() ? "2,3,5,7" : p_list);
    for (long e : parse_range_list(e_range.empty() ? "1..3" : e_range)) {
        if (e < 1)
            throw frobchi::ParseError("exponents must be >= 1");
        req.exponents.push_back(static_cast<int>(e));
    }

    std::vector<frobchi::ScanRow> rows =
        serial ? frobchi::scan_serial(req) : frobchi::scan(req);

    if (as_json) {
        json out = json::array();
        for (const auto& row : rows)
            out.push_back({{"family", row.family},
                           {"param", row.param},
                           {"p", row.p},
                           {"e", row.e},
                           {"chi", row.chi.get_str()},
                           {"chi_closed", row.chi_closed.get_str()},
                           {"match", row.match},
                           {"leading", frobchi::fraction_string(row.leading)},
                           {"verdict", row.verdict}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%-10s %6s %3s %2s %14s %14s %6s %9s  %s\n", "family", "param", "p", "e",
                    "chi", "closed", "match", "leading", "verdict");
        for (const auto& row : rows)
            std::printf("%-10s %6ld %3ld %2d %14s %14s %6s %9s  %s\n", row.family.c_str(),
                        row.param, row.p, row.e, row.chi.get_str().c_str(),
                        row.chi_closed.get_str().c_str(), row.match ? "yes" : "NO",
                        frobchi::display_string(row.leading).c_str(), row.verdict.c_str());
    }

    for (const auto& row : rows)
        if (!row.match)
            return 1;
    return 0;
}

int cmd_verify(bool as_json) {
    frobchi::VerifyReport report = frobchi::run_verification();
    if (as_json) {
        json items = json::array();
        for (const auto& item : report.items)
            items.push_back({{"label", item.label}, {"pass", item.pass}, {"detail", item.detail}});
        std::cout << json{{"all_pass", report.all_pass}, {"items", items}}.dump(2) << "\n";
    } else {
        for (const auto& item : report.items) {
            std::cout << (item.pass ? "PASS  " : "FAIL  ") << item.label;
            if (!item.pass)
                std::cout << " (" << item.detail << ")";
            std::cout << "\n";
        }
        std::cout << (report.all_pass ? "all checks passed" : "SOME CHECKS FAILED") << " ("
                  << report.items.size() << " items)\n";
    }
    return report.all_pass ? 0 : 1;
}

int cmd_diffop_demo(long p, bool as_json) {
    frobchi::DiffopReport report = frobchi::verify_paper_example(p);
    if (as_json) {
        std::cout << frobchi::diffop_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "operators on F_" << p << "[t], level 1 -> 2 (u = t^" << p * p << ")\n\n";
        std::cout << "natural inclusion i(d/dt):\n" << report.incl_d.to_string() << "\n\n";
        std::cout << "split embedding j(d/dt):\n" << report.split_d.to_string() << "\n\n";
        for (const auto& check : report.checks)
            std::cout << (check.informational ? "NOTE  " : check.pass ? "PASS  " : "FAIL  ")
                      << check.label << " — " << check.detail << "\n";
    }
    return report.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler characteristics of Frobenius pushforward endomorphism bundles, "
                 "exact characteristic-class arithmetic, and positive-characteristic "
                 "differential operators"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    SpecArgs chi_spec, sym_spec;
    long chi_p = 0, h0_override = 0;
    int chi_e = 0;
    auto* chi = app.add_subcommand("chi", "Euler characteristic of End(F_*^e O) at one (p, e)");
    add_spec_options(chi, chi_spec);
    chi->add_option("--p", chi_p, "prime characteristic")->required();
    chi->add_option("--e", chi_e, "Frobenius iteration count")->required();
    chi->add_option("--h0-bound", h0_override, "override the h^0 lower bound (>= 1)");

    auto* sym = app.add_subcommand("symbolic", "chi as an exact polynomial in q = p^e");
    add_spec_options(sym, sym_spec);

    std::string scan_family, scan_d, scan_vol, scan_p, scan_e;
    bool scan_serial_flag = false;
    auto* scn = app.add_subcommand("scan", "chi over a parameter grid, engine vs closed form");
    scn->add_option("--family", scan_family, "del_pezzo or fano3")->required();
    scn->add_option("--d", scan_d, "degree range, e.g. 1..9 or 1,3,5");
    scn->add_option("--vol", scan_vol, "volume range, e.g. 2..64:2");
    scn->add_option("--p", scan_p, "prime list (default 2,3,5,7)");
    scn->add_option("--e", scan_e, "exponent range (default 1..3)");
    scn->add_flag("--serial", scan_serial_flag, "force the serial reference kernel");

    auto* ver = app.add_subcommand("verify", "run the full reproduction checklist");

    long demo_p = 2;
    auto* demo = app.add_subcommand("diffop-demo",
                                    "compare the two embeddings of d/dt into level-2 operators");
    demo->add_option("--p", demo_p, "prime (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chi->parsed())
            return cmd_chi(chi_spec, chi_p, chi_e, h0_override, as_json);
        if (sym->parsed())
            return cmd_symbolic(sym_spec, as_json);
        if (scn->parsed())
            return cmd_scan(scan_family, scan_d, scan_vol, scan_p, scan_e, scan_serial_flag,
                            as_json);
        if (ver->parsed())
            return cmd_verify(as_json);
        if (demo->parsed())
            return cmd_diffop_demo(demo_p, as_json);
    } catch (const frobchi::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const frobchi::MissingIntersectionError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const frobchi::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
