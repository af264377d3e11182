// Brute-force reference implementations used only by the tests. They
// deliberately avoid the library's own algorithms.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using Seq = std::vector<int>;

inline std::vector<Seq> partitions(int n, int maxp = -1) {
    if (maxp < 0)
        maxp = n;
    if (n == 0)
        return {Seq{}};
    std::vector<Seq> out;
    for (int p = std::min(n, maxp); p >= 1; --p)
        for (auto rest : partitions(n - p, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(rest);
        }
    return out;
}

// Conjugate by counting boxes in a 0/1 grid.
inline Seq conjugate(const Seq &p) {
    Seq out;
    for (int j = 0;; ++j) {
        int n = 0;
        for (int r : p)
            if (r > j)
                ++n;
        if (n == 0)
            break;
        out.push_back(n);
    }
    return out;
}

inline int at(const Seq &p, std::size_t i) { return i < p.size() ? p[i] : 0; }

inline bool dominates(const Seq &a, const Seq &b) {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += at(a, i);
        sb += at(b, i);
        if (sa < sb)
            return false;
    }
    return true;
}

// eps=+1: even rows even multiplicity; eps=-1: odd rows.
inline bool rows_ok(const Seq &rows, int eps) {
    std::map<int, int> m;
    for (int r : rows)
        ++m[r];
    for (auto [r, k] : m)
        if ((eps == 1 ? r % 2 == 0 : r % 2 == 1) && k % 2)
            return false;
    return true;
}

// Largest type partition dominated by rows; bad = parity of restricted rows.
inline Seq collapse(const Seq &rows, int eps) {
    int n = 0;
    for (int r : rows)
        n += r;
    std::vector<Seq> cand;
    for (auto &p : partitions(n))
        if (rows_ok(p, eps) && dominates(rows, p))
            cand.push_back(p);
    std::vector<Seq> top;
    for (auto &c : cand)
        if (std::all_of(cand.begin(), cand.end(), [&](const Seq &d) { return dominates(c, d); }))
            top.push_back(c);
    return top.size() == 1 ? top[0] : Seq{-1};
}

// Least partition of n whose partial sums are >= bounds.
inline Seq hull(const Seq &bounds, int n) {
    std::vector<Seq> cand;
    for (auto &p : partitions(n)) {
        int s = 0;
        bool ok = true;
        for (std::size_t j = 0; j < bounds.size() && ok; ++j) {
            s += at(p, j);
            ok = s >= bounds[j];
        }
        if (ok)
            cand.push_back(p);
    }
    std::vector<Seq> low;
    for (auto &c : cand)
        if (std::all_of(cand.begin(), cand.end(), [&](const Seq &d) { return dominates(d, c); }))
            low.push_back(c);
    return low.size() == 1 ? low[0] : Seq{-1};
}

// Signed Young diagrams: rows are (length, sign of first box). Column j
// of a row has sign start * (-1)^j. Rules per (eps, eps_dot), read off
// from the standard string models:
//   self row (any start) when (-1)^{r+1} = eps and eps = eps_dot;
//   otherwise rows come in pairs whose starts satisfy
//   s_f = eps_dot * s_e * (-1)^{r-1}.
using SignedRows = std::vector<std::pair<int, int>>;

inline std::set<std::vector<std::pair<int, int>>> column_signatures(int eps, int eps_dot, const Seq &rows,
                                                                    std::pair<int, int> sig) {
    std::map<int, int> mult;
    for (int r : rows)
        ++mult[r];
    std::vector<std::pair<int, int>> rm(mult.begin(), mult.end());
    std::set<std::vector<std::pair<int, int>>> out;
    SignedRows cur;
    auto rec = [&](auto &&self, std::size_t i) -> void {
        if (i == rm.size()) {
            std::vector<std::pair<int, int>> cols;
            for (int j = 0;; ++j) {
                int p = 0, m = 0;
                for (auto [len, s] : cur)
                    if (len > j)
                        ((j % 2 ? -s : s) > 0 ? p : m) += 1;
                if (p + m == 0)
                    break;
                cols.push_back({p, m});
            }
            int tp = 0, tm = 0;
            for (auto [p, m] : cols) {
                tp += p;
                tm += m;
            }
            if (std::make_pair(tp, tm) == sig)
                out.insert(cols);
            return;
        }
        const auto [r, k] = rm[i];
        const bool self_ok = ((r + 1) % 2 == 0 ? 1 : -1) == eps && eps == eps_dot;
        for (int pp = 0; 2 * pp <= k; ++pp)
            for (int pm = 0; 2 * (pp + pm) <= k; ++pm) {
                const int rest = k - 2 * (pp + pm);
                if (rest && !self_ok)
                    continue;
                for (int sp = 0; sp <= rest; ++sp) {
                    const auto mark = cur.size();
                    const int flip = eps_dot * ((r - 1) % 2 ? -1 : 1);
                    for (int t = 0; t < pp; ++t) {
                        cur.push_back({r, 1});
                        cur.push_back({r, flip});
                    }
                    for (int t = 0; t < pm; ++t) {
                        cur.push_back({r, -1});
                        cur.push_back({r, -flip});
                    }
                    for (int t = 0; t < sp; ++t)
                        cur.push_back({r, 1});
                    for (int t = 0; t < rest - sp; ++t)
                        cur.push_back({r, -1});
                    self(self, i + 1);
                    cur.resize(mark);
                }
            }
    };
    rec(rec, 0);
    return out;
}

} // namespace brute
