// Exact matrix models of nilpotent elements; moment-map sampling.
// Requires GMP (gmpxx).
#pragma once

#include "real_orbits.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

namespace nilorb::oracle {

class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<std::size_t>(r * c)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    mpq_class &operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
    const mpq_class &operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }

    bool is_zero() const {
        for (const auto &x : a_)
            if (sgn(x) != 0)
                return false;
        return true;
    }
    bool operator==(const Matrix &o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<mpq_class> a_;
};

inline Matrix operator*(const Matrix &a, const Matrix &b) {
    Matrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

inline Matrix operator+(const Matrix &a, const Matrix &b) {
    Matrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j) + b(i, j);
    return m;
}

inline Matrix scaled(const Matrix &a, const mpq_class &s) {
    Matrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j) * s;
    return m;
}

inline Matrix transposed(const Matrix &a) {
    Matrix m(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(j, i) = a(i, j);
    return m;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(Matrix &m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (sgn(m(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const mpq_class inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            const mpq_class f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

inline int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

// Columns span the null space.
inline Matrix kernel(const Matrix &a) {
    Matrix m = a;
    const auto piv = rref(m);
    std::vector<int> is_piv(static_cast<std::size_t>(a.cols()), -1);
    for (std::size_t i = 0; i < piv.size(); ++i)
        is_piv[static_cast<std::size_t>(piv[i])] = static_cast<int>(i);
    std::vector<int> free;
    for (int j = 0; j < a.cols(); ++j)
        if (is_piv[static_cast<std::size_t>(j)] < 0)
            free.push_back(j);
    Matrix k(a.cols(), static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], static_cast<int>(f)) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            k(piv[i], static_cast<int>(f)) = -m(static_cast<int>(i), free[f]);
    }
    return k;
}

inline Matrix inverse(const Matrix &a) {
    const int n = a.rows();
    Matrix m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m(i, j) = a(i, j);
        m(i, n + i) = 1;
    }
    if (static_cast<int>(rref(m).size()) < n || (n > 0 && rank(a) < n))
        throw DomainError("matrix is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = m(i, n + j);
    return inv;
}

inline Matrix hcat(const Matrix &a, const Matrix &b) {
    Matrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

// dim(U cap W) for column spans
inline int intersection_dim(const Matrix &u, const Matrix &w) {
    return rank(u) + rank(w) - rank(hcat(u, w));
}

inline Matrix power(const Matrix &x, int k) {
    Matrix p = Matrix::identity(x.rows());
    for (int i = 0; i < k; ++i)
        p = p * x;
    return p;
}

// Column partition from kernel dimension increments.
inline Partition partition_from_matrix(const Matrix &x) {
    const int n = x.rows();
    std::vector<int> cols;
    Matrix p = Matrix::identity(n);
    int prev = 0;
    for (int step = 0; prev < n; ++step) {
        if (step > n)
            throw DomainError("matrix is not nilpotent");
        p = p * x;
        const int k = n - rank(p);
        if (k == prev)
            throw DomainError("matrix is not nilpotent");
        cols.push_back(k - prev);
        prev = k;
    }
    return Partition(std::move(cols));
}

// Nilpotent X compatible with the form G: X^T G + G X = 0. The grading S
// (when present) satisfies S^2 = 1, S^T G S = eps_dot G, S X = -X S; its
// +1/-1 eigenspaces play the role of the Cartan form's eigenspaces.
struct Model {
    Eps eps = Eps::plus;
    Matrix gram;
    Matrix x;
    std::optional<Matrix> grading;
};

inline bool is_form_compatible(const Model &m) {
    const int n = m.gram.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.gram(i, j) != value(m.eps) * m.gram(j, i))
                return false;
    if (rank(m.gram) != n)
        return false;
    return (transposed(m.x) * m.gram + m.gram * m.x).is_zero();
}

inline bool is_graded(const Model &m, Eps eps_dot) {
    if (!m.grading)
        return false;
    const Matrix &s = *m.grading;
    const int n = s.rows();
    if (!(s * s == Matrix::identity(n)))
        return false;
    if (!(transposed(s) * m.gram * s == scaled(m.gram, value(eps_dot))))
        return false;
    return (s * m.x + m.x * s).is_zero();
}

// One string e_1..e_r with X e_a = e_{a+1}; paired strings carry a partner.
struct Block {
    int length;
    bool paired;
    int start_sign; // grading sign of e_1 (+1/-1)
};

inline bool self_pairable(Eps eps, int r) { return ((r + 1) % 2 == 0 ? Eps::plus : Eps::minus) == eps; }

inline Signature block_signature(const Block &b, Eps eps, Eps eps_dot) {
    auto one = [](int r, int s) {
        const int hi = (r + 1) / 2, lo = r / 2;
        return s > 0 ? Signature{hi, lo} : Signature{lo, hi};
    };
    Signature sig = one(b.length, b.start_sign);
    if (b.paired) {
        const int sf = value(eps_dot) * b.start_sign * ((b.length - 1) % 2 ? -1 : 1);
        sig = sig + one(b.length, sf);
    }
    (void)eps;
    return sig;
}

inline Model build_model(Eps eps, const std::vector<Block> &blocks, std::optional<Eps> eps_dot) {
    int n = 0;
    for (const auto &b : blocks)
        n += b.length * (b.paired ? 2 : 1);
    Model m{eps, Matrix(n, n), Matrix(n, n), std::nullopt};
    if (eps_dot)
        m.grading = Matrix(n, n);
    const int e = value(eps);
    int base = 0;
    for (const auto &b : blocks) {
        const int r = b.length;
        auto sign_at = [](int a) { return (a % 2) ? -1 : 1; }; // (-1)^a, a 1-based
        if (!b.paired) {
            if (!self_pairable(eps, r))
                throw DomainError("row length cannot be self-paired for this eps");
            if (eps_dot && *eps_dot != eps)
                throw DomainError("self-paired strings need eps = eps_dot");
            for (int a = 1; a <= r; ++a)
                m.gram(base + a - 1, base + r - a) = sign_at(a);
            for (int a = 1; a < r; ++a)
                m.x(base + a, base + a - 1) = 1;
            if (eps_dot)
                for (int a = 1; a <= r; ++a)
                    (*m.grading)(base + a - 1, base + a - 1) = b.start_sign * ((a - 1) % 2 ? -1 : 1);
            base += r;
        } else {
            const int f = base + r;
            for (int a = 1; a <= r; ++a) {
                m.gram(base + a - 1, f + r - a) = sign_at(a);
                m.gram(f + r - a, base + a - 1) = e * sign_at(a);
            }
            for (int a = 1; a < r; ++a) {
                m.x(base + a, base + a - 1) = 1;
                m.x(f + a, f + a - 1) = 1;
            }
            if (eps_dot) {
                const int sf = value(*eps_dot) * b.start_sign * ((r - 1) % 2 ? -1 : 1);
                for (int a = 1; a <= r; ++a) {
                    const int alt = (a - 1) % 2 ? -1 : 1;
                    (*m.grading)(base + a - 1, base + a - 1) = b.start_sign * alt;
                    (*m.grading)(f + a - 1, f + a - 1) = sf * alt;
                }
            }
            base += 2 * r;
        }
    }
    return m;
}

inline Model jordan_model(Eps eps, const Partition &cols) {
    if (!is_type_partition(cols, eps))
        throw DomainError("not a type-eps partition");
    std::vector<Block> blocks;
    for (auto [r, mult] : multiplicities(transpose(cols))) {
        if (self_pairable(eps, r))
            for (int i = 0; i < mult; ++i)
                blocks.push_back({r, false, 1});
        else
            for (int i = 0; i < mult / 2; ++i)
                blocks.push_back({r, true, 1});
    }
    return build_model(eps, blocks, std::nullopt);
}

inline SignedDiagram signed_diagram_from_matrix(const Matrix &x, const Matrix &grading) {
    if (!(grading * x + x * grading).is_zero())
        throw DomainError("X must anticommute with the Cartan grading");
    const int n = x.rows();
    const Matrix id = Matrix::identity(n);
    const Matrix ep = kernel(grading + scaled(id, -1));
    const Matrix em = kernel(grading + id);
    const Partition cols = partition_from_matrix(x);
    std::vector<Signature> out;
    Signature prev{};
    for (std::size_t l = 0; l < cols.length(); ++l) {
        const Matrix k = kernel(power(x, static_cast<int>(l) + 1));
        const Signature cur{intersection_dim(ep, k), intersection_dim(em, k)};
        out.push_back(cur - prev);
        prev = cur;
    }
    return SignedDiagram(std::move(out));
}

// All graded block multisets with the given rows and total signature.
inline std::vector<std::vector<Block>> graded_block_choices(SpaceKind kind, const Partition &rows, Signature sig) {
    std::vector<std::pair<int, int>> rm;
    for (auto [r, m] : multiplicities(rows))
        rm.push_back({r, m});
    std::vector<std::vector<Block>> out;
    std::vector<Block> cur;
    auto rec = [&](auto &&self, std::size_t i, Signature acc) -> void {
        if (i == rm.size()) {
            if (acc == sig)
                out.push_back(cur);
            return;
        }
        const auto [r, mult] = rm[i];
        const bool can_self = self_pairable(kind.eps, r) && kind.eps == kind.eps_dot;
        for (int pairs_p = 0; 2 * pairs_p <= mult; ++pairs_p)
            for (int pairs_m = 0; 2 * (pairs_p + pairs_m) <= mult; ++pairs_m) {
                const int rest = mult - 2 * (pairs_p + pairs_m);
                if (rest > 0 && !can_self)
                    continue;
                for (int self_p = 0; self_p <= rest; ++self_p) {
                    const std::size_t mark = cur.size();
                    Signature a = acc;
                    auto add = [&](Block b, int times) {
                        for (int t = 0; t < times; ++t) {
                            cur.push_back(b);
                            a = a + block_signature(b, kind.eps, kind.eps_dot);
                        }
                    };
                    add({r, true, 1}, pairs_p);
                    add({r, true, -1}, pairs_m);
                    add({r, false, 1}, self_p);
                    add({r, false, -1}, rest - self_p);
                    if (signature_geq(sig, a))
                        self(self, i + 1, a);
                    cur.resize(mark);
                }
            }
    };
    rec(rec, 0, Signature{});
    return out;
}

// Signed diagrams realized by graded matrix models over a complex orbit.
inline std::vector<SignedDiagram> k_orbits_from_models(const RealForm &form, const ComplexOrbit &o) {
    std::vector<SignedDiagram> out;
    for (const auto &blocks : graded_block_choices(form.kind, transpose(o.cols), form.sig)) {
        const Model m = build_model(form.eps(), blocks, form.kind.eps_dot);
        if (!is_form_compatible(m) || !is_graded(m, form.kind.eps_dot))
            throw DomainError("graded model failed its compatibility checks");
        out.push_back(signed_diagram_from_matrix(m.x, *m.grading));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// dim of the orbit of the Jordan model: dim g - dim of the ad-kernel.
inline int orbit_dimension_from_matrix(Eps eps, const Partition &cols) {
    const Model m = jordan_model(eps, cols);
    const int n = m.gram.rows();
    const int u = n * n;
    Matrix lie(u, u), both(2 * u, u);
    auto var = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int row = var(i, j);
            // (Y^T G + G Y)_{ij} = sum_k Y_{ki} G_{kj} + G_{ik} Y_{kj}
            for (int k = 0; k < n; ++k) {
                lie(row, var(k, i)) += m.gram(k, j);
                lie(row, var(k, j)) += m.gram(i, k);
                // (X Y - Y X)_{ij}
                both(u + row, var(k, j)) += m.x(i, k);
                both(u + row, var(i, k)) -= m.x(k, j);
            }
            for (int c = 0; c < u; ++c)
                both(row, c) = lie(row, c);
        }
    const int dim_g = u - rank(lie);
    const int dim_z = u - rank(both);
    return dim_g - dim_z;
}

// Moment-map models for a pair V (eps, dim n) and V' (-eps, dim n').
// A string alternates between V ('A') and V' ('B'); T maps each A entry
// to the following B entry, T* is its adjoint, X = T*T and X' = TT*.
struct StringType {
    bool paired;
    int length;
    bool start_in_v;
};

class LiftSampler {
public:
    LiftSampler(Eps eps, unsigned seed = 20240601U, int bound = 5) : eps_(eps), rng_(seed), bound_(bound) {}

    using OrbitPair = std::pair<Partition, Partition>; // rows of X, rows of X'

    // Orbit pairs seen over `trials` random fillings of every model.
    const std::vector<OrbitPair> &pairs(int n, int n_prime, int trials) {
        const auto key = std::make_tuple(n, n_prime, trials);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        std::vector<OrbitPair> seen;
        const auto models = enumerate(n, n_prime);
        for (int t = 0; t < trials; ++t)
            for (const auto &md : models) {
                auto p = sample(md);
                if (std::find(seen.begin(), seen.end(), p) == seen.end())
                    seen.push_back(std::move(p));
            }
        std::sort(seen.begin(), seen.end());
        return cache_.emplace(key, std::move(seen)).first->second;
    }

    std::vector<std::vector<StringType>> enumerate(int n, int n_prime) const {
        std::vector<StringType> types;
        for (int m = 1; m <= n + n_prime; ++m)
            for (bool start : {true, false}) {
                if (self_ok(m, start))
                    types.push_back({false, m, start});
                if (m % 2 == 1 || start)
                    types.push_back({true, m, start});
            }
        std::vector<std::vector<StringType>> out;
        std::vector<StringType> cur;
        auto rec = [&](auto &&self, std::size_t i, int a, int b) -> void {
            if (a == 0 && b == 0) {
                out.push_back(cur);
                return;
            }
            if (i == types.size())
                return;
            self(self, i + 1, a, b);
            const auto [ca, cb] = counts(types[i]);
            int k = 1;
            while (ca * k <= a && cb * k <= b) {
                for (int t = 0; t < k; ++t)
                    cur.push_back(types[i]);
                self(self, i + 1, a - ca * k, b - cb * k);
                cur.resize(cur.size() - static_cast<std::size_t>(k));
                ++k;
            }
        };
        rec(rec, 0, n, n_prime);
        return out;
    }

private:
    // Space of the 0-based position a along a string starting in V or V'.
    static bool in_v(bool start_in_v, int a) { return (a % 2 == 0) == start_in_v; }

    bool self_ok(int m, bool start) const {
        if (m % 2 == 0)
            return false;
        const bool mid_v = in_v(start, (m - 1) / 2);
        const Eps mid_eps = mid_v ? eps_ : negate(eps_);
        return mid_eps == Eps::plus;
    }

    static std::pair<int, int> counts(const StringType &t) {
        const int a = t.start_in_v ? (t.length + 1) / 2 : t.length / 2;
        const int b = t.length - a;
        if (!t.paired)
            return {a, b};
        if (t.length % 2 == 1)
            return {2 * a, 2 * b};
        return {t.length, t.length};
    }

    mpq_class draw() {
        std::uniform_int_distribution<int> d(-bound_, bound_ - 1);
        int v = d(rng_);
        return mpq_class(v >= 0 ? v + 1 : v);
    }

    OrbitPair sample(const std::vector<StringType> &md) {
        // Expand into concrete strings of (in V, index) vertices.
        struct Str {
            std::vector<bool> space;
            int partner; // -1 for self-paired, index of partner otherwise
        };
        std::vector<Str> strs;
        for (const auto &t : md) {
            std::vector<bool> s1, s2;
            const bool start2 = (t.length % 2 == 0) ? !t.start_in_v : t.start_in_v;
            for (int a = 0; a < t.length; ++a) {
                s1.push_back(in_v(t.start_in_v, a));
                s2.push_back(in_v(start2, a));
            }
            if (!t.paired) {
                strs.push_back({s1, -1});
            } else {
                const int i = static_cast<int>(strs.size());
                strs.push_back({s1, i + 1});
                strs.push_back({s2, i});
            }
        }
        std::vector<std::vector<int>> idx(strs.size());
        int n = 0, np = 0;
        for (std::size_t s = 0; s < strs.size(); ++s)
            for (bool v : strs[s].space)
                idx[s].push_back(v ? n++ : np++);
        Matrix g(n, n), gp(np, np), t(np, n);
        auto set_form = [&](std::size_t s1, int a1, std::size_t s2, int a2, const mpq_class &val) {
            const bool v = strs[s1].space[static_cast<std::size_t>(a1)];
            const int i = idx[s1][static_cast<std::size_t>(a1)], j = idx[s2][static_cast<std::size_t>(a2)];
            const int e = value(v ? eps_ : negate(eps_));
            Matrix &m = v ? g : gp;
            m(i, j) = val;
            m(j, i) = e * val;
        };
        for (std::size_t s = 0; s < strs.size(); ++s) {
            const int len = static_cast<int>(strs[s].space.size());
            if (strs[s].partner < 0) {
                for (int a = 0; 2 * a <= len - 1; ++a)
                    set_form(s, a, s, len - 1 - a, draw());
            } else if (static_cast<std::size_t>(strs[s].partner) > s) {
                for (int a = 0; a < len; ++a)
                    set_form(s, a, static_cast<std::size_t>(strs[s].partner), len - 1 - a, draw());
            }
            for (int a = 0; a + 1 < len; ++a)
                if (strs[s].space[static_cast<std::size_t>(a)])
                    t(idx[s][static_cast<std::size_t>(a + 1)], idx[s][static_cast<std::size_t>(a)]) = draw();
        }
        Partition x_rows, xp_rows;
        if (n > 0 && np > 0) {
            const Matrix ts = inverse(g) * transposed(t) * gp;
            x_rows = transpose(partition_from_matrix(ts * t));
            xp_rows = transpose(partition_from_matrix(t * ts));
        } else {
            x_rows = n ? Partition(std::vector<int>(static_cast<std::size_t>(n), 1)) : Partition();
            xp_rows = np ? Partition(std::vector<int>(static_cast<std::size_t>(np), 1)) : Partition();
        }
        return {x_rows, xp_rows};
    }

    Eps eps_;
    std::mt19937 rng_;
    int bound_;
    std::map<std::tuple<int, int, int>, std::vector<OrbitPair>> cache_;
};

// Orbit whose closure is the image of the preimage of closure(o_prime):
// dominance-maximal X over models with X' in closure(o_prime).
inline ComplexOrbit lift_from_pairs(const std::vector<LiftSampler::OrbitPair> &pairs, const ComplexOrbit &o_prime,
                                    int n) {
    const Partition target = transpose(o_prime.cols);
    std::vector<Partition> cand;
    for (const auto &[x, xp] : pairs)
        if (dominates(target, xp) && std::find(cand.begin(), cand.end(), x) == cand.end())
            cand.push_back(x);
    std::vector<Partition> top;
    for (const auto &c : cand)
        if (std::all_of(cand.begin(), cand.end(), [&](const Partition &d) { return dominates(c, d); }))
            top.push_back(c);
    if (top.size() != 1)
        throw DomainError("lift image has no unique maximal orbit");
    (void)n;
    return ComplexOrbit(negate(o_prime.eps), transpose(top[0]));
}

inline ComplexOrbit lift_closure_sample(const ComplexOrbit &o_prime, int n, int trials, unsigned seed = 20240601U,
                                        int bound = 5) {
    LiftSampler s(negate(o_prime.eps), seed, bound);
    return lift_from_pairs(s.pairs(n, o_prime.dim, trials), o_prime, n);
}

// Generalized descent: dominance-minimal X' over models with X in o.
inline ComplexOrbit gen_descent_from_pairs(const std::vector<LiftSampler::OrbitPair> &pairs, const ComplexOrbit &o) {
    const Partition rows = transpose(o.cols);
    std::vector<Partition> cand;
    for (const auto &[x, xp] : pairs)
        if (x == rows && std::find(cand.begin(), cand.end(), xp) == cand.end())
            cand.push_back(xp);
    std::vector<Partition> bottom;
    for (const auto &c : cand)
        if (std::all_of(cand.begin(), cand.end(), [&](const Partition &d) { return dominates(d, c); }))
            bottom.push_back(c);
    if (bottom.size() != 1)
        throw DomainError("no generalized descent");
    return ComplexOrbit(negate(o.eps), transpose(bottom[0]));
}

} // namespace nilorb::oracle
