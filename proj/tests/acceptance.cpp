// Acceptance checks. One PASS/FAIL line per criterion; exit code is the
// number of failures.
#include <nilorb/cli.hpp>
#include <nilorb/oracle.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace nilorb;

namespace {

constexpr double kCountSeconds = 1.0;
constexpr double kQuatSeconds = 60.0;
constexpr double kDoubleLiftSeconds = 60.0;
constexpr double kOracleSeconds = 300.0;
constexpr int kOracleTrials = 32;
constexpr unsigned kOracleSeed = 20240601U;

struct Outcome {
    bool ok = true;
    long checked = 0;
    long mismatches = 0;
    std::string note;

    void expect(bool cond, const std::string &what) {
        ++checked;
        if (!cond) {
            ++mismatches;
            ok = false;
            if (mismatches <= 5)
                std::cerr << "  mismatch: " << what << "\n";
        }
    }
};

template <class F> void for_each_form(int max_dim, F f) {
    for (SpaceKind k : kAllKinds)
        for (int n = 0; n <= max_dim; ++n)
            for (Signature s : legal_signatures(k, n))
                f(RealForm(k, s));
}

template <class F> void for_each_k_orbit(int max_dim, F f) {
    for_each_form(max_dim, [&](const RealForm &form) {
        for (const auto &o : enumerate_orbits(form.eps(), form.dim()))
            for (const auto &ko : enumerate_k_orbits(form, o))
                f(ko);
    });
}

int delta_of(SpaceKind k) {
    if (k == kRealOrthogonal)
        return 1;
    if (k == kRealSymplectic)
        return -1;
    return 0;
}

Partition without_zeros(std::vector<int> v) {
    std::erase(v, 0);
    return Partition(std::move(v));
}

// c_0 - 1 for real symplectic etc.; c = columns of O'.
Partition double_lift_formula(SpaceKind k, const Partition &c) {
    std::vector<int> v;
    const int c0 = c[0];
    if (k == kRealOrthogonal)
        v = {c0 + 2, c0};
    else if (k == kRealSymplectic)
        v = {c0 - 1, c0 - 1};
    else
        v = {c0, c0};
    for (std::size_t i = 1; i < c.length(); ++i)
        v.push_back(c[i]);
    return without_zeros(std::move(v));
}

// The double-lift setting: O' in V' (sign -eps) and O = descent of O' in V.
struct Setting {
    SpaceKind kind;
    ComplexOrbit o_prime, o;
    int n_prime, n, l;
};

template <class F> void for_each_setting(int max_n_prime, F f) {
    for (SpaceKind k : kAllKinds)
        for (int np = 0; np <= max_n_prime; ++np)
            for (int p : {0, 1})
                for (const auto &op : enumerate_nil_p(negate(k.eps), np, p)) {
                    const int c0 = op.cols[0], c1 = op.cols[1];
                    const int n = np - c0, l = c0 + delta_of(k);
                    if (!is_legal_dim(k, n) || !is_legal_dim(k.opposite(), np))
                        continue;
                    if (l <= 0 || l < c1 || (k == kRealSymplectic && c0 <= c1))
                        continue;
                    f(Setting{k, op, ComplexOrbit(k.eps, column_descent(op.cols)), np, n, l});
                }
}

std::string kind_name(SpaceKind k) {
    return "(" + std::to_string(value(k.eps)) + "," + std::to_string(value(k.eps_dot)) + ")";
}

Outcome c1_oscillator() {
    Outcome r;
    std::ostringstream out, err;
    const int code = cli::dispatch({"--format", "json", "count", "Sp(2,R)", "1,1", "--parity", "1"}, out, err);
    r.expect(code == 0, "exit code " + std::to_string(code) + " " + err.str());
    if (code != 0)
        return r;
    const auto j = io::ordered_json::parse(out.str());
    r.expect(j.size() == 1, "one row");
    r.expect(j[0]["total"] == 4, "total " + j[0]["total"].dump());
    r.expect(j[0]["k_orbits"].size() == 2, "two K-orbits");
    for (const auto &k : j[0]["k_orbits"])
        r.expect(k["component_order"] == 2, "|A_X| = 2");
    r.note = "total " + j[0]["total"].dump();
    return r;
}

Outcome c2_quaternionic() {
    Outcome r;
    for (SpaceKind k : {kQuatOrthogonal, kQuatSymplectic})
        for (int n = 0; n <= 12; ++n)
            for (Signature s : legal_signatures(k, n))
                for (int p : {0, 1})
                    for (const auto &o : enumerate_nil_p(k.eps, n, p)) {
                        const RealForm f(k, s);
                        const auto row = count_unipotent(f, o, p);
                        r.expect(row.total == enumerate_k_orbits(f, o).size(),
                                 form_name(f) + " " + to_string(o.cols));
                    }
    return r;
}

Outcome c3_double_lift() {
    Outcome r;
    for_each_setting(10, [&](const Setting &s) {
        const Partition want = double_lift_formula(s.kind, s.o_prime.cols);
        const auto lift1 = theta_lift_complex(s.o, s.n_prime);
        const auto lift2 = theta_lift_complex(lift1, s.n_prime + s.o_prime.cols[0] + 2 * delta_of(s.kind));
        const std::string tag = kind_name(s.kind) + " O'=" + to_string(s.o_prime.cols);
        r.expect(lift1 == s.o_prime, tag + " first lift " + to_string(lift1.cols));
        r.expect(lift2.eps == s.kind.eps && lift2.cols == want, tag + " double lift " + to_string(lift2.cols) +
                                                                   " expected " + to_string(want));
        r.expect(induce_complex(s.o, s.l, s.kind).cols == want, tag + " induced orbit");
    });
    return r;
}

Outcome c4_bv() {
    Outcome r;
    for (Eps e : {Eps::plus, Eps::minus})
        for (int n = 0; n <= 12; ++n)
            for (const auto &x : enumerate_nil_p(e, n, n % 2)) {
                const auto d = bv_dual(x);
                r.expect(d.checked && weyl_equivalent(d.half_h, infinitesimal_character(x)), to_string(x.cols));
            }
    return r;
}

Outcome c5_oracle() {
    Outcome r;
    for (Eps e : {Eps::plus, Eps::minus}) {
        oracle::LiftSampler sampler(e, kOracleSeed, 5);
        for (int n = 0; n <= 8; ++n)
            for (int np = 0; np <= 8; ++np) {
                if (!is_legal_dim({e, e}, n) || !is_legal_dim({negate(e), negate(e)}, np))
                    continue;
                const auto &pairs = sampler.pairs(n, np, kOracleTrials);
                for (const auto &op : enumerate_orbits(negate(e), np)) {
                    bool same = false;
                    try {
                        same = oracle::lift_from_pairs(pairs, op, n) == theta_lift_complex(op, n);
                    } catch (const DomainError &) {
                    }
                    r.expect(same, "lift " + to_string(op.cols) + " -> " + std::to_string(n));
                }
            }
    }
    for_each_form(7, [&](const RealForm &f) {
        for (const auto &o : enumerate_orbits(f.eps(), f.dim())) {
            std::vector<SignedDiagram> mine;
            for (const auto &ko : enumerate_k_orbits(f, o))
                mine.push_back(ko.diagram);
            std::sort(mine.begin(), mine.end());
            r.expect(mine == oracle::k_orbits_from_models(f, o), "korbits " + form_name(f) + " " + to_string(o.cols));
        }
    });
    for (Eps e : {Eps::plus, Eps::minus})
        for (int n = 0; n <= 10; ++n)
            for (const auto &o : enumerate_orbits(e, n))
                r.expect(oracle::partition_from_matrix(oracle::jordan_model(e, o.cols).x) == o.cols,
                         "roundtrip " + to_string(o.cols));
    return r;
}

Outcome c6_adjunction() {
    Outcome r;
    for (Eps e : {Eps::plus, Eps::minus})
        for (int n = 0; n <= 12; ++n)
            for (const auto &x : enumerate_orbits(e, n))
                r.expect(theta_lift_complex(ComplexOrbit(negate(e), column_descent(x.cols)), n) == x,
                         "lift of descent " + to_string(x.cols));
    for_each_k_orbit(12, [&](const KOrbit &ko) {
        const auto d = signed_descent(ko.diagram);
        const SpaceKind op = ko.form.kind.opposite();
        r.expect(is_signed_diagram(d) && is_realizable(d, op) && is_legal_signature(op, d.total()),
                 "descent of " + to_string(ko.diagram) + " in " + form_name(ko.form));
    });
    return r;
}

Outcome c7_gen_descent() {
    Outcome r;
    for_each_k_orbit(10, [&](const KOrbit &ko) {
        const SpaceKind op = ko.form.kind.opposite();
        const Signature tail = tail_signature(ko.diagram);
        for (int m = tail.dim(); m <= 10; ++m)
            for (Signature target : legal_signatures(op, m)) {
                const std::string tag = to_string(ko.diagram) + " -> " + to_string(target);
                if (!signature_geq(target, tail))
                    continue;
                const Signature s = target - tail;
                std::vector<Signature> want;
                for (std::size_t i = 1; i < ko.diagram.cols.size(); ++i)
                    want.push_back(ko.diagram.cols[i]);
                if (want.empty())
                    want.push_back({});
                want[0] = want[0] + s;
                if (want[0].is_zero())
                    want.erase(want.begin());
                const auto got = gen_descent_signed(ko.diagram, target);
                r.expect(got == SignedDiagram(want), tag + " formula");
                r.expect(is_signed_diagram(got) && is_realizable(got, op), tag + " realizable");
                if (s.is_zero())
                    r.expect(got == signed_descent(ko.diagram), tag + " ordinary");
            }
    });
    return r;
}

Outcome c8_surjectivity() {
    Outcome r;
    for_each_k_orbit(8, [&](const KOrbit &ko) {
        const auto kp = descent_k_orbit(ko);
        std::set<Bits> hit;
        for (const auto &dp : admissible_data(kp))
            for (auto chi : group_characters(ko.form))
                hit.insert(lift_admissible(ko, kp, dp, chi).bits);
        r.expect(hit.size() == component_group(ko).order(), form_name(ko.form) + " " + to_string(ko.diagram));
    });
    return r;
}

Outcome c9_chains() {
    Outcome r;
    for_each_form(10, [&](const RealForm &f) {
        for (int p : {0, 1})
            for (const auto &o : enumerate_nil_p(f.eps(), f.dim(), p))
                for (const auto &ko : enumerate_k_orbits(f, o))
                    r.expect(chain_in_convergent_range(build_descent_chain(ko, p)),
                             form_name(f) + " " + to_string(ko.diagram));
    });
    const KOrbit bad(parse_form("O(2,2)"), SignedDiagram({{1, 1}, {1, 1}}));
    for (int p : {0, 1})
        r.expect(!nil_p_violation(bad.diagram.underlying(), Eps::plus, p).empty(), "counterexample outside Nil^p");
    r.expect(!chain_in_convergent_range(build_descent_chain_unchecked(bad)), "counterexample fails the inequalities");
    return r;
}

Outcome c10_induction() {
    Outcome r;
    long pairs = 0;
    for_each_setting(8, [&](const Setting &s) {
        const SpaceKind k = s.kind, op = k.opposite();
        const int w_ind = (k == kRealOrthogonal || k == kRealSymplectic) ? 2 : 1;
        const int w_theta = k == kRealOrthogonal ? 2 : 1;
        const ComplexOrbit o_perp(k.eps, double_lift_formula(k, s.o_prime.cols));
        for (Signature sv : legal_signatures(k, s.n)) {
            using Key = std::pair<SignedDiagram, SignedDiagram>;
            std::map<Key, int> ind, theta;
            for (const auto &ko : enumerate_k_orbits(RealForm(k, sv), s.o))
                for (const auto &x : induce_real(ko.diagram, s.l, k))
                    ind[{ko.diagram, x.diagram}] += w_ind;
            for (const auto &kp : enumerate_k_orbits(RealForm(k, sv + Signature{s.l, s.l}), o_perp)) {
                const Signature tail = tail_signature(kp.diagram);
                for (Signature t : legal_signatures(op, s.n_prime)) {
                    if (!signature_geq(t, tail))
                        continue;
                    const auto d1 = gen_descent_signed(kp.diagram, t);
                    if (!is_realizable(d1, op))
                        continue;
                    const auto d2 = signed_descent(d1);
                    if (d2.underlying() == s.o.cols && d2.total() == sv)
                        theta[{d2, kp.diagram}] += w_theta;
                }
            }
            for (const auto &[key, w] : ind)
                pairs += w;
            r.expect(ind == theta, kind_name(k) + " O'=" + to_string(s.o_prime.cols) + " sig V " + to_string(sv) +
                                       ": " + std::to_string(ind.size()) + " induced vs " +
                                       std::to_string(theta.size()) + " descended pairs");
        }
    });
    r.expect(pairs > 0, "no induced pairs at all");
    r.note = std::to_string(pairs) + " weighted pairs";
    return r;
}

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds; // 0: no runtime bound
};

} // namespace

int main() {
    const std::vector<Criterion> all{
        {1, "oscillator count Sp(2,R) [1,1] p=1 is 4", c1_oscillator, kCountSeconds},
        {2, "quaternionic total = #K-orbits, dim <= 12", c2_quaternionic, kQuatSeconds},
        {3, "double-lift formulas and induced orbit, |O'| <= 10", c3_double_lift, kDoubleLiftSeconds},
        {4, "bv_dual 1/2 h = lambda_O up to W on Nil^p, size <= 12", c4_bv, 0},
        {5, "oracle equivalence: lift (<= 8, 32 trials), K-orbits (dim <= 7), round trip (<= 10)", c5_oracle,
         kOracleSeconds},
        {6, "lift of descent = identity (<= 12); signed descent valid and realizable", c6_adjunction, 0},
        {7, "generalized descent formula and realizability, size <= 10", c7_gen_descent, 0},
        {8, "character-lift surjectivity on descent pairs, size <= 8", c8_surjectivity, 0},
        {9, "chain inequalities on Nil^p (<= 10) and a failing counterexample", c9_chains, 0},
        {10, "induced-orbit multiset = double-descent pairing, |O'| <= 8", c10_induction, 0},
    };
    int failures = 0;
    for (const auto &c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = o.ok && in_time && o.checked > 0;
        failures += pass ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << o.checked
             << " checks, " << o.mismatches << " mismatches, " << secs << " s";
        if (c.limit_seconds > 0)
            line << " < " << c.limit_seconds << " s";
        line << "]";
        if (!o.note.empty())
            line << "  " << o.note;
        std::cout << line.str() << std::endl;
    }
    return failures;
}
