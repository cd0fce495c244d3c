#include "frobchi/variety.hpp"

#include "frobchi/classes.hpp"
#include "frobchi/errors.hpp"

namespace frobchi {

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::DelPezzo:
        return "del_pezzo";
    case FamilyKind::Fano3:
        return "fano3";
    case FamilyKind::ProjectiveSpace:
        return "projective_space";
    }
    throw StructuralError("unknown family kind");
}

VarietySpec::VarietySpec(std::string name_, int dim_, GeneratorSetPtr gens_,
                         IntersectionTable table_, std::optional<FamilyInfo> family_)
    : name(std::move(name_)), dim(dim_), gens(std::move(gens_)), table(std::move(table_)),
      family(family_) {
    if (dim < 0)
        throw StructuralError("variety dimension must be >= 0");
    if (!gens)
        throw StructuralError("variety needs a generator set");
    if (table.top_degree() != dim)
        throw StructuralError("intersection table top degree must equal the dimension");
    if (!(*table.generator_set() == *gens))
        throw StructuralError("intersection table generators differ from the variety's");
}

GradedElement todd_of(const VarietySpec& spec) {
    auto canonical = GeneratorSet::chern(spec.dim == 0 ? 1 : spec.dim);
    if (!(*spec.gens == *canonical))
        throw StructuralError("todd_of needs the canonical c1..c_dim generator set");
    if (spec.dim == 0)
        return GradedElement::constant(spec.gens, 0, Rational(1));
    return todd_universal(spec.dim);
}

} // namespace frobchi
