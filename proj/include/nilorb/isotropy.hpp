// Levi factors, component groups and admissible orbit data at a K-orbit.
#pragma once

#include "real_orbits.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilorb {

struct LeviFactor {
    int level;
    SpaceKind kind;
    Signature sig;
};

inline std::vector<LeviFactor> levi_factors(const KOrbit &ko) {
    std::vector<LeviFactor> out;
    for (const auto &m : multiplicity_signatures(ko.diagram))
        out.push_back({m.level, ko.form.kind.at_level(m.level), m.sig});
    return out;
}

struct Generator {
    int level;
    int side; // +1 or -1

    std::string label() const { return "l" + std::to_string(level) + (side > 0 ? "+" : "-"); }
    bool operator==(const Generator &) const = default;
};

// (Z/2)^{#generators}
struct ComponentGroup {
    std::vector<Generator> generators;

    std::size_t rank() const { return generators.size(); }
    std::uint64_t order() const { return std::uint64_t{1} << generators.size(); }
    int index_of(Generator g) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == g)
                return static_cast<int>(i);
        return -1;
    }
};

inline ComponentGroup component_group(const KOrbit &ko) {
    ComponentGroup g;
    for (const auto &f : levi_factors(ko)) {
        if (!f.kind.is_real_orthogonal())
            continue;
        if (f.sig.plus > 0)
            g.generators.push_back({f.level, +1});
        if (f.sig.minus > 0)
            g.generators.push_back({f.level, -1});
    }
    return g;
}

using Bits = std::vector<int>;

struct AdmissibleDatum {
    SignedDiagram orbit;
    Bits bits; // aligned with component_group(orbit).generators
    int genuine_parity = 0;

    bool operator==(const AdmissibleDatum &) const = default;
};

inline std::vector<AdmissibleDatum> admissible_data(const KOrbit &ko) {
    const auto g = component_group(ko);
    std::vector<AdmissibleDatum> out;
    for (std::uint64_t m = 0; m < g.order(); ++m) {
        Bits b(g.rank());
        for (std::size_t i = 0; i < g.rank(); ++i)
            b[i] = static_cast<int>((m >> i) & 1U);
        out.push_back({ko.diagram, std::move(b), 0});
    }
    return out;
}

inline void require_descent_pair(const KOrbit &ko, const KOrbit &ko_prime) {
    if (ko_prime.diagram != signed_descent(ko.diagram) || ko_prime.form.kind != ko.form.kind.opposite())
        throw DomainError("not a descent pair",
                          to_string(ko_prime.diagram) + " is not the descent of " + to_string(ko.diagram));
}

inline Bits alpha_pullback(const KOrbit &ko, const KOrbit &ko_prime, const Bits &chi_prime) {
    require_descent_pair(ko, ko_prime);
    const auto g = component_group(ko);
    const auto gp = component_group(ko_prime);
    if (chi_prime.size() != gp.rank())
        throw DomainError("character size must match the component group");
    Bits out(g.rank(), 0);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const auto &gen = g.generators[i];
        if (gen.level == 0)
            continue;
        const int j = gp.index_of({gen.level - 1, -gen.side});
        if (j >= 0)
            out[i] = chi_prime[static_cast<std::size_t>(j)];
    }
    return out;
}

// Character det^{eta_plus} x det^{eta_minus} of O(p,q); trivial elsewhere.
struct GroupCharacter {
    int eta_plus = 0;
    int eta_minus = 0;
    bool operator==(const GroupCharacter &) const = default;
};

// Characters of the component group of G, one per element.
inline std::vector<GroupCharacter> group_characters(const RealForm &f) {
    if (!f.kind.is_real_orthogonal() || f.dim() == 0)
        return {GroupCharacter{}};
    std::vector<GroupCharacter> out;
    for (int a = 0; a <= (f.sig.plus > 0 ? 1 : 0); ++a)
        for (int b = 0; b <= (f.sig.minus > 0 ? 1 : 0); ++b)
            out.push_back({a, b});
    return out;
}

inline Bits restrict_character(const KOrbit &ko, GroupCharacter chi) {
    const auto g = component_group(ko);
    Bits out(g.rank(), 0);
    if (!ko.form.kind.is_real_orthogonal())
        return out;
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (g.generators[i].level % 2 == 0)
            out[i] = g.generators[i].side > 0 ? chi.eta_plus : chi.eta_minus;
    return out;
}

inline AdmissibleDatum lift_admissible(const KOrbit &ko, const KOrbit &ko_prime,
                                       const AdmissibleDatum &datum_prime, GroupCharacter chi) {
    if (datum_prime.orbit != ko_prime.diagram)
        throw DomainError("datum must live on the descent orbit");
    Bits b = alpha_pullback(ko, ko_prime, datum_prime.bits);
    const Bits r = restrict_character(ko, chi);
    for (std::size_t i = 0; i < b.size(); ++i)
        b[i] ^= r[i];
    const int genuine = ko.form.kind.is_real_symplectic() ? ko_prime.form.dim() % 2 : 0;
    return {ko.diagram, std::move(b), genuine};
}

// The K-orbit one step down: descent diagram in the opposite kind.
inline KOrbit descent_k_orbit(const KOrbit &ko) {
    const SignedDiagram d = signed_descent(ko.diagram);
    return KOrbit(RealForm(ko.form.kind.opposite(), tail_signature(ko.diagram)), d);
}

} // namespace nilorb
