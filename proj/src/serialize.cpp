#include "frobchi/serialize.hpp"

#include <fstream>

#include "frobchi/errors.hpp"

namespace frobchi {

using nlohmann::json;

namespace {

const json& expect(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

std::string expect_string(const json& j, const char* key) {
    const json& v = expect(j, key);
    if (!v.is_string())
        throw ParseError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

long expect_integer(const json& j, const char* key) {
    const json& v = expect(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("key '") + key + "' must be an integer");
    return v.get<long>();
}

} // namespace

json rational_to_json(const Rational& r) { return fraction_string(r); }

Rational rational_from_json(const json& j) {
    if (!j.is_string())
        throw ParseError("rationals must be \"num/den\" strings");
    return parse_rational(j.get<std::string>());
}

json generators_to_json(const GeneratorSet& gens) {
    json out = json::array();
    for (const auto& g : gens.generators())
        out.push_back({{"name", g.name}, {"degree", g.degree}});
    return out;
}

GeneratorSetPtr generators_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("generators must be an array");
    std::vector<Generator> gens;
    for (const auto& item : j)
        gens.push_back({expect_string(item, "name"), static_cast<int>(expect_integer(item, "degree"))});
    try {
        return std::make_shared<GeneratorSet>(std::move(gens));
    } catch (const StructuralError& err) {
        throw ParseError(err.what());
    }
}

json graded_to_json(const GradedElement& a) {
    const GeneratorSet& gens = *a.generator_set();
    json comps = json::array();
    for (int k = 0; k <= a.bound(); ++k)
        for (const auto& [m, c] : a.component(k)) {
            json exps = json::object();
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (m.exponent(i) != 0)
                    exps[gens[i].name] = m.exponent(i);
            comps.push_back({{"monomial", exps}, {"coeff", fraction_string(c)}});
        }
    return {{"generators", generators_to_json(gens)}, {"bound", a.bound()}, {"terms", comps}};
}

GradedElement graded_from_json(const json& j) {
    auto gens = generators_from_json(expect(j, "generators"));
    long bound = expect_integer(j, "bound");
    if (bound < 0)
        throw ParseError("bound must be >= 0");
    GradedElement out(gens, static_cast<int>(bound));
    for (const auto& term : expect(j, "terms")) {
        const json& exps = expect(term, "monomial");
        if (!exps.is_object())
            throw ParseError("monomial must be an exponent object");
        std::vector<unsigned> evec(gens->size(), 0);
        for (auto it = exps.begin(); it != exps.end(); ++it) {
            auto idx = gens->find(it.key());
            if (!idx)
                throw ParseError("unknown generator '" + it.key() + "' in monomial");
            if (!it.value().is_number_integer() || it.value().get<long>() < 0)
                throw ParseError("exponents must be non-negative integers");
            evec[*idx] = static_cast<unsigned>(it.value().get<long>());
        }
        Monomial m(std::move(evec));
        if (m.total_degree(*gens) > bound)
            throw ParseError("term of degree above the bound");
        out.add_term(m, rational_from_json(expect(term, "coeff")));
    }
    return out;
}

json table_to_json(const IntersectionTable& t) {
    json numbers = json::object();
    for (const auto& [m, v] : t.entries())
        numbers[m.to_string(*t.generator_set())] = fraction_string(v);
    return {{"generators", generators_to_json(*t.generator_set())},
            {"top_degree", t.top_degree()},
            {"intersections", numbers}};
}

IntersectionTable table_from_json(const json& j) {
    auto gens = generators_from_json(expect(j, "generators"));
    long top = expect_integer(j, "top_degree");
    const json& numbers = expect(j, "intersections");
    if (!numbers.is_object())
        throw ParseError("intersections must be an object");
    std::map<Monomial, Rational> entries;
    for (auto it = numbers.begin(); it != numbers.end(); ++it)
        entries.emplace(Monomial::parse(it.key(), *gens), rational_from_json(it.value()));
    try {
        return IntersectionTable(gens, static_cast<int>(top), std::move(entries));
    } catch (const StructuralError& err) {
        throw ParseError(err.what());
    }
}

namespace {

std::string family_kind_json_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::DelPezzo:
        return "del_pezzo";
    case FamilyKind::Fano3:
        return "fano3";
    case FamilyKind::ProjectiveSpace:
        return "pn";
    }
    throw StructuralError("unknown family kind");
}

const char* family_param_key(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::DelPezzo:
        return "d";
    case FamilyKind::Fano3:
        return "vol";
    case FamilyKind::ProjectiveSpace:
        return "n";
    }
    throw StructuralError("unknown family kind");
}

} // namespace

json variety_to_json(const VarietySpec& v) {
    json numbers = json::object();
    for (const auto& [m, value] : v.table.entries())
        numbers[m.to_string(*v.gens)] = fraction_string(value);
    json out = {{"name", v.name},
                {"dim", v.dim},
                {"generators", generators_to_json(*v.gens)},
                {"intersections", numbers}};
    if (v.family)
        out["family"] = {{"kind", family_kind_json_name(v.family->kind)},
                         {"params", {{family_param_key(v.family->kind), v.family->param}}}};
    return out;
}

VarietySpec variety_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("variety spec must be a JSON object");
    std::string name = expect_string(j, "name");
    long dim = expect_integer(j, "dim");
    auto gens = generators_from_json(expect(j, "generators"));

    const json& numbers = expect(j, "intersections");
    if (!numbers.is_object())
        throw ParseError("intersections must be an object");
    std::map<Monomial, Rational> entries;
    for (auto it = numbers.begin(); it != numbers.end(); ++it)
        entries.emplace(Monomial::parse(it.key(), *gens), rational_from_json(it.value()));

    std::optional<FamilyInfo> family;
    if (auto fam = j.find("family"); fam != j.end()) {
        std::string kind = expect_string(*fam, "kind");
        const json& params = expect(*fam, "params");
        if (kind == "del_pezzo")
            family = FamilyInfo{FamilyKind::DelPezzo, expect_integer(params, "d")};
        else if (kind == "fano3")
            family = FamilyInfo{FamilyKind::Fano3, expect_integer(params, "vol")};
        else if (kind == "pn")
            family = FamilyInfo{FamilyKind::ProjectiveSpace, expect_integer(params, "n")};
        else
            throw ParseError("unknown family kind '" + kind + "'");
    }

    try {
        IntersectionTable table(gens, static_cast<int>(dim), std::move(entries));
        return VarietySpec(name, static_cast<int>(dim), gens, std::move(table), family);
    } catch (const StructuralError& err) {
        throw ParseError(err.what());
    }
}

VarietySpec variety_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open spec file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& err) {
        throw ParseError("invalid JSON in '" + path + "': " + err.what());
    }
    return variety_from_json(j);
}

json qpoly_to_json(const QPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients())
        out.push_back(fraction_string(c));
    return out;
}

QPolynomial qpoly_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("polynomial must be an array of rational strings");
    std::vector<Rational> coeffs;
    for (const auto& item : j)
        coeffs.push_back(rational_from_json(item));
    return QPolynomial(std::move(coeffs));
}

json verdict_to_json(const TiltingVerdict& v) {
    return {{"chi", v.chi.get_str()},
            {"h0_lower_bound", v.h0_lower_bound.get_str()},
            {"verdict", verdict_name(v.verdict)},
            {"rationale", v.rationale}};
}

json operator_to_json(const OperatorMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.size(); ++j)
            row.push_back(m.entry(i, j).to_string("u"));
        rows.push_back(row);
    }
    return {{"p", m.p()}, {"e", m.e()}, {"size", m.size()}, {"entries", rows}};
}

json diffop_report_to_json(const DiffopReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"label", c.label},
                          {"pass", c.pass},
                          {"informational", c.informational},
                          {"detail", c.detail}});
    return {{"p", r.p},
            {"all_pass", r.all_pass},
            {"checks", checks},
            {"natural_inclusion_of_ddt", operator_to_json(r.incl_d)},
            {"split_embedding_of_ddt", operator_to_json(r.split_d)}};
}

} // namespace frobchi
