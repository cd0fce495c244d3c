#include "frobchi/chow.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "frobchi/errors.hpp"

namespace frobchi {

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::sort(gens_.begin(), gens_.end(),
              [](const Generator& a, const Generator& b) { return a.name < b.name; });
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.name.empty())
            throw StructuralError("generator with empty name");
        if (g.degree < 1)
            throw StructuralError("generator '" + g.name + "' must have degree >= 1");
        if (!seen.insert(g.name).second)
            throw StructuralError("duplicate generator name '" + g.name + "'");
    }
}

std::optional<std::size_t> GeneratorSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

std::shared_ptr<const GeneratorSet> GeneratorSet::chern(int n) {
    if (n < 1)
        throw StructuralError("chern generator set needs dimension >= 1");
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back({"c" + std::to_string(i), i});
    return std::make_shared<GeneratorSet>(std::move(gens));
}

std::shared_ptr<const GeneratorSet> GeneratorSet::roots(int k) {
    if (k < 1)
        throw StructuralError("root generator set needs at least one variable");
    std::vector<Generator> gens;
    for (int i = 1; i <= k; ++i)
        gens.push_back({"x" + std::to_string(i), 1});
    return std::make_shared<GeneratorSet>(std::move(gens));
}

int Monomial::total_degree(const GeneratorSet& gens) const {
    if (exps_.size() != gens.size())
        throw StructuralError("monomial exponent count does not match generator set");
    int deg = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        deg += static_cast<int>(exps_[i]) * gens[i].degree;
    return deg;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
        throw StructuralError("monomial product across different generator sets");
    std::vector<unsigned> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(out));
}

std::string Monomial::to_string(const GeneratorSet& gens) const {
    if (is_unit())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += gens[i].name;
        if (exps_[i] > 1)
            out += "^" + std::to_string(exps_[i]);
    }
    return out;
}

Monomial Monomial::parse(std::string_view text, const GeneratorSet& gens) {
    std::vector<unsigned> exps(gens.size(), 0);
    if (text == "1")
        return Monomial(std::move(exps));
    if (text.empty())
        throw ParseError("empty monomial");
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto star = text.find('*', pos);
        std::string_view factor =
            text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
        pos = star == std::string_view::npos ? text.size() : star + 1;
        if (factor.empty() || (star != std::string_view::npos && star + 1 == text.size()))
            throw ParseError("empty factor in monomial '" + std::string(text) + "'");

        std::string_view name = factor;
        unsigned exp = 1;
        if (auto caret = factor.find('^'); caret != std::string_view::npos) {
            name = factor.substr(0, caret);
            std::string_view etext = factor.substr(caret + 1);
            if (etext.empty() ||
                !std::all_of(etext.begin(), etext.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("malformed exponent in monomial '" + std::string(text) + "'");
            exp = static_cast<unsigned>(std::stoul(std::string(etext)));
        }
        auto idx = gens.find(name);
        if (!idx)
            throw ParseError("unknown generator '" + std::string(name) + "' in monomial '" +
                             std::string(text) + "'");
        exps[*idx] += exp;
    }
    return Monomial(std::move(exps));
}

GradedElement::GradedElement(GeneratorSetPtr gens, int bound)
    : gens_(std::move(gens)), bound_(bound), comps_(static_cast<std::size_t>(bound) + 1) {
    if (!gens_)
        throw StructuralError("graded element needs a generator set");
    if (bound < 0)
        throw StructuralError("truncation bound must be >= 0");
}

GradedElement GradedElement::constant(GeneratorSetPtr gens, int bound, const Rational& value) {
    GradedElement e(std::move(gens), bound);
    e.add_term(Monomial::unit(e.gens_->size()), value);
    return e;
}

GradedElement GradedElement::generator(GeneratorSetPtr gens, int bound, std::size_t index) {
    GradedElement e(std::move(gens), bound);
    if (index >= e.gens_->size())
        throw StructuralError("generator index out of range");
    std::vector<unsigned> exps(e.gens_->size(), 0);
    exps[index] = 1;
    e.add_term(Monomial(std::move(exps)), Rational(1));
    return e;
}

GradedElement GradedElement::term(GeneratorSetPtr gens, int bound, const Monomial& m,
                                  const Rational& coeff) {
    GradedElement e(std::move(gens), bound);
    e.add_term(m, coeff);
    return e;
}

const Component& GradedElement::component(int k) const {
    if (k < 0 || k > bound_)
        throw StructuralError("component degree out of range");
    return comps_[static_cast<std::size_t>(k)];
}

GradedElement GradedElement::component_element(int k) const {
    GradedElement out(gens_, bound_);
    out.comps_[static_cast<std::size_t>(k)] = component(k);
    return out;
}

const Rational& GradedElement::constant_term() const {
    static const Rational zero(0);
    const auto& c0 = comps_[0];
    auto it = c0.find(Monomial::unit(gens_->size()));
    return it == c0.end() ? zero : it->second;
}

bool GradedElement::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Component& c) { return c.empty(); });
}

bool GradedElement::is_homogeneous(int k) const {
    for (int d = 0; d <= bound_; ++d)
        if (d != k && !comps_[static_cast<std::size_t>(d)].empty())
            return false;
    return true;
}

GradedElement GradedElement::truncated(int new_bound) const {
    GradedElement out(gens_, new_bound);
    for (int k = 0; k <= std::min(bound_, new_bound); ++k)
        out.comps_[static_cast<std::size_t>(k)] = comps_[static_cast<std::size_t>(k)];
    return out;
}

GradedElement& GradedElement::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0)
        return *this;
    int deg = m.total_degree(*gens_);
    if (deg > bound_)
        return *this; // silent truncation
    auto& comp = comps_[static_cast<std::size_t>(deg)];
    auto [it, fresh] = comp.emplace(m, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0)
            comp.erase(it);
    }
    return *this;
}

void GradedElement::require_compatible(const GradedElement& other) const {
    if (bound_ != other.bound_)
        throw StructuralError("mismatched truncation bounds (" + std::to_string(bound_) + " vs " +
                              std::to_string(other.bound_) + ")");
    if (!(*gens_ == *other.gens_))
        throw StructuralError("mismatched generator sets");
}

GradedElement GradedElement::operator-() const {
    GradedElement out(gens_, bound_);
    for (int k = 0; k <= bound_; ++k)
        for (const auto& [m, c] : comps_[static_cast<std::size_t>(k)])
            out.comps_[static_cast<std::size_t>(k)].emplace(m, -c);
    return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
    require_compatible(other);
    for (int k = 0; k <= bound_; ++k)
        for (const auto& [m, c] : other.comps_[static_cast<std::size_t>(k)])
            add_term(m, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) {
    require_compatible(other);
    for (int k = 0; k <= bound_; ++k)
        for (const auto& [m, c] : other.comps_[static_cast<std::size_t>(k)])
            add_term(m, -c);
    return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    a.require_compatible(b);
    GradedElement out(a.gens_, a.bound_);
    for (int ka = 0; ka <= a.bound_; ++ka) {
        const auto& ca = a.comps_[static_cast<std::size_t>(ka)];
        if (ca.empty())
            continue;
        for (int kb = 0; kb + ka <= a.bound_; ++kb) {
            const auto& cb = b.comps_[static_cast<std::size_t>(kb)];
            if (cb.empty())
                continue;
            auto& target = out.comps_[static_cast<std::size_t>(ka + kb)];
            for (const auto& [ma, va] : ca)
                for (const auto& [mb, vb] : cb) {
                    Rational prod = va * vb;
                    auto [it, fresh] = target.emplace(ma * mb, prod);
                    if (!fresh) {
                        it->second += prod;
                        if (it->second == 0)
                            target.erase(it);
                    }
                }
        }
    }
    return out;
}

GradedElement operator*(const Rational& s, const GradedElement& a) {
    GradedElement out(a.gens_, a.bound_);
    if (s == 0)
        return out;
    for (int k = 0; k <= a.bound_; ++k)
        for (const auto& [m, c] : a.comps_[static_cast<std::size_t>(k)])
            out.comps_[static_cast<std::size_t>(k)].emplace(m, s * c);
    return out;
}

GradedElement GradedElement::inverse() const {
    const Rational& a0 = constant_term();
    if (a0 == 0)
        throw NotInvertibleError("degree-0 part is zero; element is not invertible");

    Rational inv0 = Rational(1) / a0;
    GradedElement out = constant(gens_, bound_, inv0);
    // b_k = -(1/a_0) * sum_{i=1..k} a_i * b_{k-i}
    for (int k = 1; k <= bound_; ++k) {
        Component acc;
        for (int i = 1; i <= k; ++i) {
            const auto& ai = comps_[static_cast<std::size_t>(i)];
            const auto& bki = out.comps_[static_cast<std::size_t>(k - i)];
            for (const auto& [ma, va] : ai)
                for (const auto& [mb, vb] : bki) {
                    Rational prod = va * vb;
                    auto [it, fresh] = acc.emplace(ma * mb, prod);
                    if (!fresh) {
                        it->second += prod;
                        if (it->second == 0)
                            acc.erase(it);
                    }
                }
        }
        auto& bk = out.comps_[static_cast<std::size_t>(k)];
        for (const auto& [m, c] : acc) {
            Rational v = -inv0 * c;
            if (v != 0)
                bk.emplace(m, std::move(v));
        }
    }
    return out;
}

GradedElement GradedElement::scale_by_degree(const std::vector<Rational>& factors) const {
    if (factors.size() != static_cast<std::size_t>(bound_) + 1)
        throw StructuralError("need one scale factor per degree 0..bound");
    GradedElement out(gens_, bound_);
    for (int k = 0; k <= bound_; ++k) {
        const Rational& f = factors[static_cast<std::size_t>(k)];
        if (f == 0)
            continue;
        for (const auto& [m, c] : comps_[static_cast<std::size_t>(k)])
            out.comps_[static_cast<std::size_t>(k)].emplace(m, f * c);
    }
    return out;
}

bool GradedElement::operator==(const GradedElement& other) const {
    return bound_ == other.bound_ && *gens_ == *other.gens_ && comps_ == other.comps_;
}

std::string GradedElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= bound_; ++k) {
        for (const auto& [m, c] : comps_[static_cast<std::size_t>(k)]) {
            if (!first)
                os << " + ";
            first = false;
            if (m.is_unit()) {
                os << display_string(c);
            } else if (c == 1) {
                os << m.to_string(*gens_);
            } else {
                os << "(" << display_string(c) << ")*" << m.to_string(*gens_);
            }
        }
    }
    if (first)
        os << "0";
    return os.str();
}

IntersectionTable::IntersectionTable(GeneratorSetPtr gens, int top_degree,
                                     std::map<Monomial, Rational> entries)
    : gens_(std::move(gens)), top_(top_degree), entries_(std::move(entries)) {
    if (!gens_)
        throw StructuralError("intersection table needs a generator set");
    if (top_ < 0)
        throw StructuralError("top degree must be >= 0");
    for (const auto& [m, v] : entries_) {
        (void)v;
        if (m.total_degree(*gens_) != top_)
            throw StructuralError("intersection table key '" + m.to_string(*gens_) +
                                  "' does not have total degree " + std::to_string(top_));
    }
}

std::optional<Rational> IntersectionTable::lookup(const Monomial& m) const {
    auto it = entries_.find(m);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

bool IntersectionTable::operator==(const IntersectionTable& other) const {
    return top_ == other.top_ && *gens_ == *other.gens_ && entries_ == other.entries_;
}

Rational integrate(const GradedElement& a, const IntersectionTable& table) {
    if (a.bound() != table.top_degree())
        throw StructuralError("truncation bound does not match the table's top degree");
    if (!(*a.generator_set() == *table.generator_set()))
        throw StructuralError("element and table use different generator sets");
    Rational total(0);
    for (const auto& [m, c] : a.component(a.bound())) {
        auto value = table.lookup(m);
        if (!value)
            throw MissingIntersectionError(
                m.to_string(*a.generator_set()),
                "missing intersection number for monomial '" +
                    m.to_string(*a.generator_set()) + "'");
        total += c * *value;
    }
    return total;
}

} // namespace frobchi
