// Complex nilpotent orbits of orthogonal and symplectic Lie algebras.
#pragma once

#include "diagrams.hpp"
#include "forms.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

namespace nilorb {

struct ComplexOrbit {
    Eps eps = Eps::plus;
    int dim = 0;
    Partition cols;

    ComplexOrbit() = default;
    ComplexOrbit(Eps e, Partition c) : eps(e), dim(c.size()), cols(std::move(c)) {
        if (!is_type_partition(cols, eps))
            throw DomainError("not a type-eps partition",
                              to_string(cols) + " is not a type eps=" + std::to_string(value(eps)) +
                                  " column partition");
    }
    static ComplexOrbit zero(Eps e, int n) { return ComplexOrbit(e, n ? Partition{n} : Partition()); }

    bool operator==(const ComplexOrbit &) const = default;
};

inline std::vector<ComplexOrbit> enumerate_orbits(Eps eps, int n) {
    std::vector<ComplexOrbit> out;
    for (const auto &p : all_partitions(n))
        if (is_type_partition(p, eps))
            out.emplace_back(eps, p);
    return out;
}

inline std::vector<ComplexOrbit> enumerate_nil_p(Eps eps, int n, int parity) {
    std::vector<ComplexOrbit> out;
    for (auto &o : enumerate_orbits(eps, n))
        if (in_nil_p(o.cols, eps, parity))
            out.push_back(std::move(o));
    return out;
}

// Half-integers stored doubled. Equality is up to permutations and sign
// changes.
struct InfinitesimalCharacter {
    std::vector<int> twice;

    std::vector<int> canonical() const {
        std::vector<int> v;
        v.reserve(twice.size());
        for (int x : twice)
            v.push_back(std::abs(x));
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    }
    std::size_t rank() const { return twice.size(); }
};

inline bool weyl_equivalent(const InfinitesimalCharacter &a, const InfinitesimalCharacter &b) {
    return a.canonical() == b.canonical();
}

inline std::string half_string(int twice) {
    if (twice % 2 == 0)
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

inline std::vector<std::string> to_strings(const InfinitesimalCharacter &c) {
    std::vector<std::string> out;
    for (int x : c.canonical())
        out.push_back(half_string(x));
    return out;
}

// rho^{eps}_r, doubled
inline std::vector<int> rho_twice(Eps e, int r) {
    std::vector<int> v;
    const int count = (e == Eps::plus) ? r / 2 : (r - 1) / 2 + 1;
    const int top = (e == Eps::plus) ? r - 2 : r;
    if (r <= 0)
        return v;
    for (int i = 0; i < count; ++i)
        v.push_back(top - 2 * i);
    return v;
}

inline InfinitesimalCharacter infinitesimal_character(const ComplexOrbit &o) {
    InfinitesimalCharacter out;
    for (int l = 0; l < static_cast<int>(o.cols.length()); ++l) {
        auto part = rho_twice(eps_at(o.eps, l), o.cols[l]);
        out.twice.insert(out.twice.end(), part.begin(), part.end());
    }
    return out;
}

struct BvDual {
    ComplexOrbit dual;
    InfinitesimalCharacter half_h;
    bool checked = true; // false when the input lies outside Nil^p
};

// Half of the neutral element of an orbit with the given rows.
inline InfinitesimalCharacter half_h(const Partition &rows) {
    std::vector<int> pos;
    int zeros = 0;
    for (int r : rows.parts())
        for (int t = r - 1; t >= -(r - 1); t -= 2) {
            if (t > 0)
                pos.push_back(t);
            else if (t == 0)
                ++zeros;
        }
    pos.insert(pos.end(), static_cast<std::size_t>(zeros / 2), 0);
    return {pos};
}

inline BvDual bv_dual(const ComplexOrbit &o) {
    std::vector<int> seq = o.cols.parts();
    Eps deps;
    int ddim;
    Partition rows;
    if (o.eps == Eps::minus) {
        if (seq.empty())
            seq.push_back(0);
        seq[0] += 1;
        deps = Eps::plus;
        ddim = o.dim + 1;
        rows = type_collapse(Partition::from_unsorted(seq), Collapse::B);
    } else if (o.dim % 2) {
        seq.back() -= 1;
        deps = Eps::minus;
        ddim = o.dim - 1;
        rows = type_collapse(Partition::from_unsorted(seq), Collapse::C);
    } else {
        deps = Eps::plus;
        ddim = o.dim;
        rows = type_collapse(Partition::from_unsorted(seq), Collapse::D);
    }
    (void)ddim;
    BvDual out{ComplexOrbit(deps, transpose(rows)), half_h(rows), true};
    out.checked = in_nil_p(o.cols, o.eps, o.dim % 2);
    return out;
}

// Theta lift of o_prime (sign -eps) to a type-eps space of dimension n.
inline ComplexOrbit theta_lift_complex(const ComplexOrbit &o_prime, int n) {
    const Eps eps = negate(o_prime.eps);
    if (n < 0)
        throw DomainError("dim V must be nonnegative");
    if (eps == Eps::minus && n % 2)
        throw DomainError("symplectic space needs even dimension",
                          "theta lift: symplectic dim " + std::to_string(n) + " is odd");
    const int a = n - o_prime.dim;
    std::vector<int> bounds{std::max(0, a)};
    int s = 0;
    for (int c : o_prime.cols.parts()) {
        s += c;
        bounds.push_back(std::max(0, a + s));
    }
    const Partition hull = dominance_hull(bounds, n);
    const Partition rows = type_collapse(transpose(hull), collapse_kind_for(eps, n));
    return ComplexOrbit(eps, transpose(rows));
}

inline ComplexOrbit gen_descent_complex(const ComplexOrbit &o, int n_prime) {
    const Eps eps2 = negate(o.eps);
    int tail = o.dim - o.cols[0];
    if (n_prime < tail)
        throw DomainError("no generalized descent",
                          "no generalized descent: dim V' = " + std::to_string(n_prime) +
                              " < sum_{i>=1} c_i = " + std::to_string(tail));
    if (eps2 == Eps::minus && n_prime % 2)
        throw DomainError("symplectic space needs even dimension");
    std::vector<int> c(o.cols.parts().begin() + (o.cols.empty() ? 0 : 1), o.cols.parts().end());
    if (c.empty())
        c.push_back(0);
    c[0] += n_prime - tail;
    const Partition cols = Partition::from_unsorted(c);
    const Partition rows = type_collapse(transpose(cols), collapse_kind_for(eps2, n_prime));
    return ComplexOrbit(eps2, transpose(rows));
}

inline bool good_for_gen_descent(const ComplexOrbit &o) {
    return o.cols.depth() >= 1 && o.cols[0] == o.cols[1];
}

// Induction from the Levi G x GL(l): o = [c_1, ..., c_k] in V.
inline ComplexOrbit induce_complex(const ComplexOrbit &o, int l, SpaceKind ambient) {
    if (ambient.eps != o.eps)
        throw DomainError("ambient kind must match the orbit sign");
    const int c1 = o.cols[0];
    if (l <= 0)
        throw DomainError("l must be positive");
    if (l < c1)
        throw DomainError("l >= c_1", "induction needs l >= c_1 (l=" + std::to_string(l) +
                                          ", c_1=" + std::to_string(c1) + ")");
    if (ambient.is_real_orthogonal() && (l - c1) % 2 == 0)
        throw DomainError("l - c_1 odd for real orthogonal ambient");
    if (ambient.family() == Family::quaternionic_orthogonal && (l - c1) % 2)
        throw DomainError("l - c_1 even for quaternionic orthogonal ambient");
    std::vector<int> c;
    if (ambient.is_real_orthogonal())
        c = {l + 1, l - 1};
    else
        c = {l, l};
    c.insert(c.end(), o.cols.parts().begin(), o.cols.parts().end());
    return ComplexOrbit(o.eps, Partition::from_unsorted(c));
}

inline int lie_algebra_dim(Eps eps, int n) { return eps == Eps::minus ? n * (n + 1) / 2 : n * (n - 1) / 2; }

inline int orbit_dimension(const ComplexOrbit &o) {
    int sq = 0;
    for (int c : o.cols.parts())
        sq += c * c;
    int odd_rows = 0;
    for (int r : transpose(o.cols).parts())
        odd_rows += r % 2;
    const int centralizer = (o.eps == Eps::minus) ? (sq + odd_rows) / 2 : (sq - odd_rows) / 2;
    return lie_algebra_dim(o.eps, o.dim) - centralizer;
}

} // namespace nilorb
