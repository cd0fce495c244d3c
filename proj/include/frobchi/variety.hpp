#pragma once

#include <optional>
#include <string>

#include "frobchi/chow.hpp"

// A variety, for our purposes, is a generator set for its numerical Chow ring
// together with the top-degree intersection numbers. Family metadata tags the
// built-in catalog entries so reports can name them.

namespace frobchi {

enum class FamilyKind { DelPezzo, Fano3, ProjectiveSpace };

std::string family_kind_name(FamilyKind kind);

struct FamilyInfo {
    FamilyKind kind;
    long param = 0; // degree d, anticanonical volume, or dimension n

    bool operator==(const FamilyInfo&) const = default;
};

struct VarietySpec {
    std::string name;
    int dim = 0;
    GeneratorSetPtr gens;
    IntersectionTable table;
    std::optional<FamilyInfo> family;

    VarietySpec(std::string name_, int dim_, GeneratorSetPtr gens_, IntersectionTable table_,
                std::optional<FamilyInfo> family_ = std::nullopt);
};

// Todd class of the variety, obtained by specializing todd_universal(dim) to
// the variety's generators. Requires the generators to be the canonical
// c1..c_dim set (same names and degrees).
GradedElement todd_of(const VarietySpec& spec);

} // namespace frobchi
