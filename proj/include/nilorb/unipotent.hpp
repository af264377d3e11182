// Descent chains, convergent-range checks and unipotent counting tables.
#pragma once

#include "isotropy.hpp"

#include <cstdint>
#include <vector>

namespace nilorb {

inline int dim_circ(const RealForm &f) {
    switch (f.kind.family()) {
    case Family::real_symplectic:
        return f.dim();
    case Family::quaternionic_symplectic:
        return f.dim() - 1;
    case Family::real_orthogonal:
        return f.dim() - 2;
    case Family::quaternionic_orthogonal:
        return f.dim() - 3;
    }
    return f.dim();
}

struct ChainStep {
    RealForm form;
    KOrbit orbit;
};

// Steps j = 0..k; V_{k+1} is the zero space.
struct DescentChain {
    std::vector<ChainStep> steps;

    int k() const { return static_cast<int>(steps.size()) - 1; }
    int dim(int j) const { return j < static_cast<int>(steps.size()) ? steps[static_cast<std::size_t>(j)].form.dim() : 0; }
};

inline DescentChain build_descent_chain_unchecked(const KOrbit &ko) {
    DescentChain c;
    KOrbit cur = ko;
    c.steps.push_back({cur.form, cur});
    while (cur.diagram.depth() >= 1) {
        cur = descent_k_orbit(cur);
        c.steps.push_back({cur.form, cur});
    }
    return c;
}

inline DescentChain build_descent_chain(const KOrbit &ko, int parity) {
    const auto why = nil_p_violation(ko.diagram.underlying(), ko.form.eps(), parity);
    if (!why.empty())
        throw DomainError(why, "orbit " + to_string(ko.diagram.underlying()) + " is outside Nil^p: " + why);
    return build_descent_chain_unchecked(ko);
}

inline bool chain_in_convergent_range(const DescentChain &c) {
    const int k = c.k();
    for (int j = 0; j < k; ++j)
        if (dim_circ(c.steps[static_cast<std::size_t>(j)].form) <= 0)
            return false;
    for (int j = 1; j <= k; ++j)
        if (c.dim(j + 1) + c.dim(j - 1) <= 2 * dim_circ(c.steps[static_cast<std::size_t>(j)].form))
            return false;
    return true;
}

using CharacterTuple = std::vector<GroupCharacter>;

inline std::vector<CharacterTuple> enumerate_eta(const DescentChain &c) {
    std::vector<CharacterTuple> out{{}};
    for (const auto &s : c.steps) {
        std::vector<CharacterTuple> next;
        for (const auto &t : out)
            for (auto chi : group_characters(s.form)) {
                auto u = t;
                u.push_back(chi);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

// Datum at step 0 reached by lifting from the terminal zero orbit.
inline AdmissibleDatum chain_datum(const DescentChain &c, const CharacterTuple &eta) {
    if (eta.size() != c.steps.size())
        throw DomainError("eta length must equal chain length");
    const KOrbit last = c.steps.back().orbit;
    KOrbit below = descent_k_orbit(last);
    AdmissibleDatum d{below.diagram, {}, 0};
    for (int j = c.k(); j >= 0; --j) {
        const KOrbit &ko = c.steps[static_cast<std::size_t>(j)].orbit;
        d = lift_admissible(ko, below, d, eta[static_cast<std::size_t>(j)]);
        below = ko;
    }
    return d;
}

struct KOrbitCount {
    KOrbit orbit;
    std::uint64_t component_order;
};

struct ClassificationRow {
    RealForm form;
    int parity = 0;
    ComplexOrbit orbit;
    std::vector<KOrbitCount> k_orbits;
    std::uint64_t total = 0;
    InfinitesimalCharacter inf_char;
    bool genuine = false;
};

inline ClassificationRow count_unipotent(const RealForm &form, const ComplexOrbit &o, int parity) {
    if (o.eps != form.eps() || o.dim != form.dim())
        throw DomainError("orbit must match the form's sign and dimension");
    const auto why = nil_p_violation(o.cols, o.eps, parity);
    if (!why.empty())
        throw DomainError(why, "orbit " + to_string(o.cols) + " is outside Nil^p: " + why);
    ClassificationRow row{form, parity, o, {}, 0, infinitesimal_character(o),
                          form.kind.is_real_symplectic() && parity == 1};
    for (auto &ko : enumerate_k_orbits(form, o)) {
        const auto n = component_group(ko).order();
        row.total += n;
        row.k_orbits.push_back({std::move(ko), n});
    }
    return row;
}

inline std::vector<ClassificationRow> classify(const RealForm &form, int parity) {
    std::vector<ClassificationRow> rows;
    for (const auto &o : enumerate_nil_p(form.eps(), form.dim(), parity))
        rows.push_back(count_unipotent(form, o, parity));
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) { return a.orbit.cols > b.orbit.cols; });
    return rows;
}

} // namespace nilorb
