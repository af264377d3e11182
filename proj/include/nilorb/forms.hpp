// Signatures, (eps, eps_dot)-space kinds and real forms.
#pragma once

#include "diagrams.hpp"

#include <compare>
#include <regex>
#include <string>

namespace nilorb {

struct Signature {
    int plus = 0;
    int minus = 0;

    int dim() const { return plus + minus; }
    bool is_zero() const { return plus == 0 && minus == 0; }
    Signature dual() const { return {minus, plus}; }

    friend Signature operator+(Signature a, Signature b) { return {a.plus + b.plus, a.minus + b.minus}; }
    friend Signature operator-(Signature a, Signature b) { return {a.plus - b.plus, a.minus - b.minus}; }
    auto operator<=>(const Signature &) const = default;
    bool operator==(const Signature &) const = default;
};

inline bool signature_geq(Signature a, Signature b) { return a.plus >= b.plus && a.minus >= b.minus; }

inline std::string to_string(Signature s) {
    return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

enum class Family { real_orthogonal, quaternionic_orthogonal, quaternionic_symplectic, real_symplectic };

struct SpaceKind {
    Eps eps = Eps::plus;
    Eps eps_dot = Eps::plus;

    SpaceKind opposite() const { return {negate(eps), negate(eps_dot)}; }
    // kind of the level-l multiplicity space, ((-1)^l eps, (-1)^l eps_dot)
    SpaceKind at_level(int l) const { return l % 2 ? opposite() : *this; }

    Family family() const {
        if (eps == Eps::plus)
            return eps_dot == Eps::plus ? Family::real_orthogonal : Family::quaternionic_orthogonal;
        return eps_dot == Eps::plus ? Family::quaternionic_symplectic : Family::real_symplectic;
    }
    bool is_real_orthogonal() const { return family() == Family::real_orthogonal; }
    bool is_real_symplectic() const { return family() == Family::real_symplectic; }
    bool is_quaternionic() const {
        return family() == Family::quaternionic_orthogonal ||
               family() == Family::quaternionic_symplectic;
    }

    bool operator==(const SpaceKind &) const = default;
};

inline constexpr SpaceKind kRealOrthogonal{Eps::plus, Eps::plus};
inline constexpr SpaceKind kQuatOrthogonal{Eps::plus, Eps::minus};
inline constexpr SpaceKind kQuatSymplectic{Eps::minus, Eps::plus};
inline constexpr SpaceKind kRealSymplectic{Eps::minus, Eps::minus};
inline constexpr SpaceKind kAllKinds[] = {kRealOrthogonal, kQuatOrthogonal, kQuatSymplectic,
                                          kRealSymplectic};

inline std::string legality_rule(SpaceKind k) {
    switch (k.family()) {
    case Family::real_orthogonal:
        return "any signature";
    case Family::quaternionic_symplectic:
        return "both signature components even";
    default:
        return "signature of the form (n,n)";
    }
}

inline bool is_legal_signature(SpaceKind k, Signature s) {
    if (s.plus < 0 || s.minus < 0)
        return false;
    switch (k.family()) {
    case Family::real_orthogonal:
        return true;
    case Family::quaternionic_symplectic:
        return s.plus % 2 == 0 && s.minus % 2 == 0;
    default:
        return s.plus == s.minus;
    }
}

// All legal signatures of a kind in a given dimension, plus descending.
inline std::vector<Signature> legal_signatures(SpaceKind k, int dim) {
    std::vector<Signature> out;
    for (int p = dim; p >= 0; --p)
        if (is_legal_signature(k, {p, dim - p}))
            out.push_back({p, dim - p});
    return out;
}

// Legal dimensions: symplectic even; quaternionic symplectic divisible by 4.
inline bool is_legal_dim(SpaceKind k, int dim) { return dim >= 0 && !legal_signatures(k, dim).empty(); }

struct RealForm {
    SpaceKind kind;
    Signature sig;

    RealForm() = default;
    RealForm(SpaceKind k, Signature s) : kind(k), sig(s) {
        if (!is_legal_signature(k, s))
            throw DomainError("illegal signature for this kind: " + legality_rule(k),
                              "signature " + nilorb::to_string(s) + " is illegal: " + legality_rule(k));
    }
    int dim() const { return sig.dim(); }
    Eps eps() const { return kind.eps; }

    bool operator==(const RealForm &) const = default;
};

inline std::string form_name(const RealForm &f) {
    const int p = f.sig.plus, q = f.sig.minus;
    switch (f.kind.family()) {
    case Family::real_orthogonal:
        return "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case Family::quaternionic_orthogonal:
        return "O*(" + std::to_string(f.dim()) + ")";
    case Family::quaternionic_symplectic:
        return "Sp(" + std::to_string(p / 2) + "," + std::to_string(q / 2) + ")";
    case Family::real_symplectic:
        return "Sp(" + std::to_string(f.dim()) + ",R)";
    }
    return {};
}

// Accepts O(p,q), Sp(2n,R), O*(2n), Sp(p,q).
inline RealForm parse_form(const std::string &text) {
    static const std::regex ortho(R"(\s*O\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex ostar(R"(\s*O\*\(\s*(\d+)\s*\)\s*)");
    static const std::regex spr(R"(\s*Sp\(\s*(\d+)\s*,\s*R\s*\)\s*)");
    static const std::regex spq(R"(\s*Sp\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, ortho))
        return RealForm(kRealOrthogonal, {std::stoi(m[1]), std::stoi(m[2])});
    if (std::regex_match(text, m, ostar)) {
        const int n = std::stoi(m[1]);
        if (n % 2)
            throw DomainError("O*(2n) needs even dimension", "O*(" + m[1].str() + "): odd dimension");
        return RealForm(kQuatOrthogonal, {n / 2, n / 2});
    }
    if (std::regex_match(text, m, spr)) {
        const int n = std::stoi(m[1]);
        if (n % 2)
            throw DomainError("Sp(2n,R) needs even dimension", "Sp(" + m[1].str() + ",R): odd dimension");
        return RealForm(kRealSymplectic, {n / 2, n / 2});
    }
    if (std::regex_match(text, m, spq))
        return RealForm(kQuatSymplectic, {2 * std::stoi(m[1]), 2 * std::stoi(m[2])});
    throw DomainError("unknown form", "unknown form '" + text + "'");
}

} // namespace nilorb
