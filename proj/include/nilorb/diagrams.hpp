// Young diagram primitives: column partitions, type tests, collapse.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

// Thrown for inputs violating a mathematical precondition. condition()
// names the violated rule.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string condition, const std::string &what)
        : std::runtime_error(what), condition_(std::move(condition)) {}
    explicit DomainError(const std::string &condition)
        : std::runtime_error(condition), condition_(condition) {}
    const std::string &condition() const { return condition_; }

private:
    std::string condition_;
};

enum class Eps : int { plus = 1, minus = -1 };

constexpr int value(Eps e) { return static_cast<int>(e); }
constexpr Eps negate(Eps e) { return e == Eps::plus ? Eps::minus : Eps::plus; }
constexpr Eps eps_from_int(int v) { return v >= 0 ? Eps::plus : Eps::minus; }
// eps_l = eps * (-1)^l
constexpr Eps eps_at(Eps e, int l) { return (l % 2 == 0) ? e : negate(e); }

inline Eps parse_eps(const std::string &s) {
    if (s == "1" || s == "+1" || s == "+")
        return Eps::plus;
    if (s == "-1" || s == "-")
        return Eps::minus;
    throw DomainError("eps must be +1 or -1", "bad eps '" + s + "'");
}

// Weakly decreasing sequence of positive integers. Used for both column
// and row sequences; function names say which reading is meant.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw DomainError("partition entries must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw DomainError("partition must be weakly decreasing");
        }
    }

    // Drops zeros, sorts descending. For internal sequences only.
    static Partition from_unsorted(std::vector<int> v) {
        v.erase(std::remove(v.begin(), v.end(), 0), v.end());
        std::sort(v.begin(), v.end(), std::greater<>());
        return Partition(std::move(v));
    }

    const std::vector<int> &parts() const & { return parts_; }
    std::vector<int> parts() && { return std::move(parts_); }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int size() const {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }
    int depth() const { return static_cast<int>(parts_.size()) - 1; }

    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Partition &p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

inline Partition transpose(const Partition &p) {
    std::vector<int> out;
    if (p.empty())
        return Partition();
    out.reserve(static_cast<std::size_t>(p[0]));
    for (int i = 0; i < p[0]; ++i) {
        int n = 0;
        for (int c : p.parts())
            n += (c > i);
        out.push_back(n);
    }
    return Partition(std::move(out));
}

inline int depth(const Partition &p) { return p.depth(); }

inline std::map<int, int> multiplicities(const Partition &p) {
    std::map<int, int> m;
    for (int r : p.parts())
        ++m[r];
    return m;
}

// Rows: eps=+1 needs even rows with even multiplicity, eps=-1 odd rows.
inline bool rows_of_type(const Partition &rows, Eps eps) {
    const int bad = (eps == Eps::plus) ? 0 : 1;
    for (auto [r, m] : multiplicities(rows))
        if (r % 2 == bad && m % 2 == 1)
            return false;
    return true;
}

inline bool is_type_partition(const Partition &cols, Eps eps) {
    return rows_of_type(transpose(cols), eps);
}

inline bool in_nil_p(const Partition &cols, Eps eps, int parity) {
    if (!is_type_partition(cols, eps))
        throw DomainError("not a type-eps partition",
                          "in_nil_p: " + to_string(cols) + " is not of type eps=" +
                              std::to_string(value(eps)));
    for (int c : cols.parts())
        if (c % 2 != parity)
            return false;
    for (int l = 0; l + 1 < static_cast<int>(cols.length()); ++l)
        if (eps_at(eps, l) == Eps::plus && cols[l] < cols[l + 1] + 2)
            return false;
    return true;
}

// First violated Nil^p condition, or empty when none.
inline std::string nil_p_violation(const Partition &cols, Eps eps, int parity) {
    if (!is_type_partition(cols, eps))
        return "not a type-eps partition";
    for (std::size_t i = 0; i < cols.length(); ++i)
        if (cols[i] % 2 != parity)
            return "c_" + std::to_string(i) + " does not have parity " + std::to_string(parity);
    for (int l = 0; l + 1 < static_cast<int>(cols.length()); ++l)
        if (eps_at(eps, l) == Eps::plus && cols[l] < cols[l + 1] + 2)
            return "fails c_l >= c_{l+1}+2 at l=" + std::to_string(l) + " with eps_l=+1";
    return {};
}

inline Partition column_descent(const Partition &p) {
    if (p.empty())
        return p;
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

// a dominates b: every partial sum of a is >= that of b.
inline bool dominates(const Partition &a, const Partition &b) {
    int sa = 0, sb = 0;
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb)
            return false;
    }
    return true;
}

enum class Collapse { B, C, D };

inline Eps collapse_eps(Collapse k) { return k == Collapse::C ? Eps::minus : Eps::plus; }

inline Collapse collapse_kind_for(Eps eps, int dim) {
    if (eps == Eps::minus)
        return Collapse::C;
    return dim % 2 ? Collapse::B : Collapse::D;
}

// Largest partition of the requested type dominated by rows.
inline Partition type_collapse(const Partition &rows, Collapse kind) {
    const int n = rows.size();
    if (kind == Collapse::B && n % 2 == 0)
        throw DomainError("B-collapse needs odd size");
    if (kind != Collapse::B && n % 2 == 1)
        throw DomainError(kind == Collapse::C ? "C-collapse needs even size"
                                              : "D-collapse needs even size");
    const int bad = (kind == Collapse::C) ? 1 : 0;
    std::vector<int> r = rows.parts();
    r.resize(r.size() + 2, 0);
    for (;;) {
        int q = -1;
        for (auto it = r.begin(); it != r.end(); ++it) {
            if (*it <= 0 || *it % 2 != bad)
                continue;
            const auto cnt = std::count(r.begin(), r.end(), *it);
            if (cnt % 2 == 1) {
                q = *it;
                break;
            }
        }
        if (q < 0)
            break;
        std::size_t last = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] == q)
                last = i;
        r[last] -= 1;
        std::size_t j = last + 1;
        while (j < r.size() && r[j] >= q - 1)
            ++j;
        if (j == r.size())
            r.push_back(0);
        r[j] += 1;
    }
    return Partition::from_unsorted(std::move(r));
}

// Least column partition of total n whose partial sums are >= bounds[j]
// (bounds[j] bounds the sum of the first j+1 parts).
inline Partition dominance_hull(const std::vector<int> &bounds, int n) {
    if (n < 0)
        throw DomainError("size must be nonnegative");
    const std::size_t len = std::max<std::size_t>(bounds.size(), static_cast<std::size_t>(n)) + 1;
    std::vector<int> f(len + 1, 0);
    int run = 0;
    for (std::size_t j = 1; j <= len; ++j) {
        if (j - 1 < bounds.size())
            run = std::max(run, bounds[j - 1]);
        if (run > n)
            throw DomainError("bounds exceed total size");
        f[j] = (j >= static_cast<std::size_t>(n) && j > bounds.size()) ? n : run;
    }
    f[len] = n;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = 1; j < len; ++j) {
            const int need = (f[j - 1] + f[j + 1] + 1) / 2;
            if (f[j] < need) {
                f[j] = need;
                changed = true;
            }
        }
    }
    std::vector<int> cols;
    for (std::size_t j = 0; j < len; ++j)
        if (f[j + 1] > f[j])
            cols.push_back(f[j + 1] - f[j]);
    return Partition(std::move(cols));
}

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int rest, int maxp) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace nilorb
