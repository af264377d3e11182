// Signed Young diagrams and K-orbits of real classical groups.
#pragma once

#include "complex_orbits.hpp"
#include "forms.hpp"

#include <set>
#include <string>
#include <vector>

namespace nilorb {

// Column signatures [d_0, ..., d_k].
struct SignedDiagram {
    std::vector<Signature> cols;

    SignedDiagram() = default;
    SignedDiagram(std::initializer_list<Signature> c) : cols(c) {}
    explicit SignedDiagram(std::vector<Signature> c) : cols(std::move(c)) {}

    int depth() const { return static_cast<int>(cols.size()) - 1; }
    bool empty() const { return cols.empty(); }
    Signature col(std::size_t i) const { return i < cols.size() ? cols[i] : Signature{}; }

    Partition underlying() const {
        std::vector<int> v;
        for (auto s : cols)
            v.push_back(s.dim());
        return Partition(std::move(v));
    }
    Signature total() const {
        Signature t;
        for (auto s : cols)
            t = t + s;
        return t;
    }

    auto operator<=>(const SignedDiagram &) const = default;
    bool operator==(const SignedDiagram &) const = default;
};

inline std::string to_string(const SignedDiagram &d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.cols.size(); ++i)
        s += (i ? "," : "") + to_string(d.cols[i]);
    return s + "]";
}

inline bool is_signed_diagram(const std::vector<Signature> &cols) {
    for (std::size_t l = 0; l < cols.size(); ++l) {
        if (cols[l].is_zero() || cols[l].plus < 0 || cols[l].minus < 0)
            return false;
        if (l + 1 < cols.size() && !signature_geq(cols[l], cols[l + 1].dual()))
            return false;
    }
    return true;
}
inline bool is_signed_diagram(const SignedDiagram &d) { return is_signed_diagram(d.cols); }

struct MultiplicitySpace {
    int level;
    Signature sig;
};

inline std::vector<MultiplicitySpace> multiplicity_signatures(const SignedDiagram &d) {
    std::vector<MultiplicitySpace> out;
    for (std::size_t l = 0; l < d.cols.size(); ++l) {
        const Signature next = d.col(l + 1);
        const Signature s = (l % 2 == 0) ? d.cols[l] - next.dual() : d.cols[l].dual() - next;
        out.push_back({static_cast<int>(l), s});
    }
    return out;
}

inline bool is_realizable(const SignedDiagram &d, SpaceKind kind) {
    if (!is_signed_diagram(d))
        return false;
    for (const auto &m : multiplicity_signatures(d))
        if (!is_legal_signature(kind.at_level(m.level), m.sig))
            return false;
    return true;
}

struct KOrbit {
    RealForm form;
    SignedDiagram diagram;

    KOrbit() = default;
    KOrbit(RealForm f, SignedDiagram d) : form(f), diagram(std::move(d)) {
        if (diagram.total() != form.sig)
            throw DomainError("total signature must equal sign V",
                              "diagram " + to_string(diagram) + " has total " +
                                  to_string(diagram.total()) + ", form is " + form_name(form));
        if (!is_realizable(diagram, form.kind))
            throw DomainError("diagram not realizable for this kind",
                              "diagram " + to_string(diagram) + " is not realizable in " + form_name(form));
    }
    ComplexOrbit complex_orbit() const { return ComplexOrbit(form.eps(), diagram.underlying()); }

    bool operator==(const KOrbit &) const = default;
};

inline std::vector<KOrbit> enumerate_k_orbits(const RealForm &form, const ComplexOrbit &o) {
    if (form.eps() != o.eps)
        throw DomainError("orbit sign must match the form", "eps mismatch between form and orbit");
    if (form.dim() != o.dim)
        throw DomainError("orbit size must equal dim V",
                          "orbit of size " + std::to_string(o.dim) + " in " + form_name(form));
    std::vector<KOrbit> out;
    const auto &c = o.cols.parts();
    std::vector<Signature> cur;
    auto rec = [&](auto &&self, std::size_t l, Signature remaining) -> void {
        if (l == c.size()) {
            if (remaining.is_zero()) {
                SignedDiagram d(cur);
                if (is_realizable(d, form.kind))
                    out.emplace_back(form, std::move(d));
            }
            return;
        }
        for (int p = c[l]; p >= 0; --p) {
            Signature s{p, c[l] - p};
            if (!signature_geq(remaining, s))
                continue;
            if (l > 0 && !signature_geq(cur.back(), s.dual()))
                continue;
            cur.push_back(s);
            self(self, l + 1, remaining - s);
            cur.pop_back();
        }
    };
    rec(rec, 0, form.sig);
    return out;
}

inline SignedDiagram signed_descent(const SignedDiagram &d) {
    if (d.empty())
        return d;
    return SignedDiagram(std::vector<Signature>(d.cols.begin() + 1, d.cols.end()));
}

inline Signature tail_signature(const SignedDiagram &d, std::size_t from = 1) {
    Signature t;
    for (std::size_t i = from; i < d.cols.size(); ++i)
        t = t + d.cols[i];
    return t;
}

inline SignedDiagram gen_descent_signed(const SignedDiagram &d, Signature sig_v_prime) {
    const Signature tail = tail_signature(d);
    if (!signature_geq(sig_v_prime, tail))
        throw DomainError("no generalized descent",
                          "no generalized descent: sign V' = " + to_string(sig_v_prime) +
                              " is not >= sum_{i>=1} d_i = " + to_string(tail));
    const Signature s = sig_v_prime - tail;
    std::vector<Signature> out(d.cols.begin() + (d.empty() ? 0 : 1), d.cols.end());
    if (out.empty())
        out.push_back({});
    out[0] = out[0] + s;
    if (out[0].is_zero())
        out.erase(out.begin());
    return SignedDiagram(std::move(out));
}

struct InducedDiagram {
    SignedDiagram diagram;
    int component_index;
};

// d = [d_1, ..., d_k] in V of kind `ambient`; l = dim E_0.
inline std::vector<InducedDiagram> induce_real(const SignedDiagram &d, int l, SpaceKind ambient) {
    const Signature d1 = d.col(0);
    const int c1 = d1.dim();
    if (l <= 0)
        throw DomainError("l must be positive");
    if (l < c1)
        throw DomainError("l >= c_1", "induction needs l >= c_1 (l=" + std::to_string(l) +
                                          ", c_1=" + std::to_string(c1) + ")");
    auto assemble = [&](Signature first, Signature second) {
        std::vector<Signature> cols{first, second};
        cols.insert(cols.end(), d.cols.begin(), d.cols.end());
        while (!cols.empty() && cols.back().is_zero())
            cols.pop_back();
        return SignedDiagram(std::move(cols));
    };
    std::vector<InducedDiagram> out;
    if (ambient.is_real_orthogonal()) {
        if ((l - c1) % 2 == 0)
            throw DomainError("l - c_1 odd for real orthogonal ambient");
        const int h = (l - c1 - 1) / 2;
        const Signature s{h, h};
        out.push_back({assemble(d1 + s + Signature{1, 1}, d1.dual() + s.dual()), 2});
        return out;
    }
    if (ambient.family() == Family::quaternionic_orthogonal && (l - c1) % 2)
        throw DomainError("l - c_1 even for quaternionic orthogonal ambient");
    std::set<SignedDiagram> seen;
    for (Signature s : legal_signatures(ambient.opposite(), l - c1)) {
        SignedDiagram dd = assemble(d1 + s, d1.dual() + s.dual());
        if (seen.insert(dd).second)
            out.push_back({std::move(dd), 1});
    }
    if (out.empty())
        throw DomainError("no legal signature for E_0 complement",
                          "no legal signature of dimension " + std::to_string(l - c1));
    return out;
}

} // namespace nilorb
