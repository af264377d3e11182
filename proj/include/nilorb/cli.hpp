// Command-line front end. dispatch() is stream-based so it can be tested
// in-process; tools/nilorb.cpp is a thin main().
#pragma once

#include "io.hpp"
#include "oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace nilorb::cli {

struct Config {
    int max_dim = 8;
    unsigned seed = 20240601U;
    int trials = 32;
    int bound = 5;
    std::string format = "table";
    int parity = 0;
};

// key=value lines; '#' starts a comment.
inline Config load_config(const std::string &path, Config c = {}) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("config file must be readable", "cannot read config '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string k = strip(line.substr(0, eq)), v = strip(line.substr(eq + 1));
        if (k == "max_dim")
            c.max_dim = std::stoi(v);
        else if (k == "seed")
            c.seed = static_cast<unsigned>(std::stoul(v));
        else if (k == "trials")
            c.trials = std::stoi(v);
        else if (k == "bound")
            c.bound = std::stoi(v);
        else if (k == "format")
            c.format = v;
        else if (k == "parity")
            c.parity = std::stoi(v);
        else
            throw DomainError("unknown config key", "unknown config key '" + k + "'");
    }
    if (c.max_dim < 0)
        throw DomainError("max_dim >= 0");
    return c;
}

inline Config default_config() {
    if (const char *p = std::getenv("NILORB_CONFIG"))
        return load_config(p);
    return {};
}

struct OracleReport {
    int checked = 0;
    std::vector<std::string> mismatches;
};

inline OracleReport run_oracle_suite(const std::string &suite, const Config &c) {
    OracleReport r;
    const bool all = suite == "all";
    auto fail = [&](const std::string &m) { r.mismatches.push_back(m); };
    if (all || suite == "roundtrip") {
        for (Eps e : {Eps::plus, Eps::minus})
            for (int n = 0; n <= c.max_dim; ++n)
                for (const auto &o : enumerate_orbits(e, n)) {
                    ++r.checked;
                    const auto m = oracle::jordan_model(e, o.cols);
                    if (!oracle::is_form_compatible(m) || oracle::partition_from_matrix(m.x) != o.cols)
                        fail("roundtrip " + to_string(o.cols));
                }
    }
    if (all || suite == "korbits") {
        for (SpaceKind k : kAllKinds)
            for (int n = 0; n <= std::min(c.max_dim, 7); ++n)
                for (Signature s : legal_signatures(k, n))
                    for (const auto &o : enumerate_orbits(k.eps, n)) {
                        ++r.checked;
                        const RealForm f(k, s);
                        std::vector<SignedDiagram> mine;
                        for (const auto &ko : enumerate_k_orbits(f, o))
                            mine.push_back(ko.diagram);
                        std::sort(mine.begin(), mine.end());
                        if (mine != oracle::k_orbits_from_models(f, o))
                            fail("korbits " + form_name(f) + " " + to_string(o.cols));
                    }
    }
    if (all || suite == "lift" || suite == "gendescent") {
        for (Eps e : {Eps::plus, Eps::minus}) {
            oracle::LiftSampler sampler(e, c.seed, c.bound);
            for (int n = 0; n <= c.max_dim; ++n)
                for (int np = 0; np <= c.max_dim; ++np) {
                    if (!is_legal_dim({e, e}, n) || !is_legal_dim({negate(e), negate(e)}, np))
                        continue;
                    const auto &pairs = sampler.pairs(n, np, c.trials);
                    if (all || suite == "lift")
                        for (const auto &op : enumerate_orbits(negate(e), np)) {
                            ++r.checked;
                            if (theta_lift_complex(op, n) != oracle::lift_from_pairs(pairs, op, n))
                                fail("lift " + to_string(op.cols) + " -> dim " + std::to_string(n));
                        }
                    if (all || suite == "gendescent")
                        for (const auto &o : enumerate_orbits(e, n)) {
                            if (np < o.dim - o.cols[0])
                                continue;
                            ++r.checked;
                            if (gen_descent_complex(o, np) != oracle::gen_descent_from_pairs(pairs, o))
                                fail("gendescent " + to_string(o.cols) + " -> dim " + std::to_string(np));
                        }
                }
        }
    }
    if (all || suite == "dimension") {
        for (Eps e : {Eps::plus, Eps::minus})
            for (int n = 0; n <= std::min(c.max_dim, 8); ++n)
                for (const auto &o : enumerate_orbits(e, n)) {
                    ++r.checked;
                    if (orbit_dimension(o) != oracle::orbit_dimension_from_matrix(e, o.cols))
                        fail("dimension " + to_string(o.cols));
                }
    }
    if (r.checked == 0 && !all && suite != "roundtrip" && suite != "korbits" && suite != "lift" &&
        suite != "gendescent" && suite != "dimension")
        throw DomainError("suite is roundtrip, korbits, lift, gendescent, dimension or all",
                          "unknown oracle suite '" + suite + "'");
    return r;
}

inline int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config cfg;
    try {
        cfg = default_config();
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Nilpotent orbits, signed diagrams and unipotent counts for real classical groups", "nilorb"};
    app.require_subcommand(1);
    std::string format = cfg.format;
    app.add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));

    std::string eps_s, cols_s, form_s, diag_s, sig_s, suite;
    int n = 0, parity = cfg.parity, dim = 0, l = 0;
    std::optional<int> nilp;
    Config ocfg = cfg;

    auto *orbits = app.add_subcommand("orbits", "list complex orbits of type eps and size n");
    orbits->add_option("eps", eps_s)->required();
    orbits->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    orbits->add_option("--nilp", nilp, "restrict to Nil^p with this parity")->check(CLI::IsMember({0, 1}));

    auto *infchar = app.add_subcommand("infchar", "infinitesimal character lambda_O");
    infchar->add_option("eps", eps_s)->required();
    infchar->add_option("columns", cols_s)->required();

    auto *bvdual = app.add_subcommand("bvdual", "Barbasch-Vogan dual and 1/2 h");
    bvdual->add_option("eps", eps_s)->required();
    bvdual->add_option("columns", cols_s)->required();

    auto *korbits = app.add_subcommand("korbits", "K-orbits (signed diagrams) in a complex orbit");
    korbits->add_option("form", form_s)->required();
    korbits->add_option("columns", cols_s)->required();

    auto *descend = app.add_subcommand("descend", "descent of a signed diagram");
    descend->add_option("form", form_s)->required();
    descend->add_option("diagram", diag_s)->required();

    auto *gendescend = app.add_subcommand("gendescend", "generalized descent of a signed diagram");
    gendescend->add_option("form", form_s)->required();
    gendescend->add_option("diagram", diag_s)->required();
    gendescend->add_option("--target-sig", sig_s, "signature p,q of V'")->required();

    auto *lift = app.add_subcommand("lift", "theta lift of a complex orbit");
    lift->add_option("eps", eps_s, "sign of the source space")->required();
    lift->add_option("columns", cols_s)->required();
    lift->add_option("--dim", dim, "dimension of the target space")->required();

    auto *induce = app.add_subcommand("induce", "real parabolic induction from G x GL(l)");
    induce->add_option("form", form_s)->required();
    induce->add_option("diagram", diag_s)->required();
    induce->add_option("--l", l)->required();

    auto *count = app.add_subcommand("count", "unipotent representations attached to an orbit");
    count->add_option("form", form_s)->required();
    count->add_option("columns", cols_s)->required();
    count->add_option("--parity", parity)->check(CLI::IsMember({0, 1}));

    auto *classify_cmd = app.add_subcommand("classify", "classification table for a real form");
    classify_cmd->add_option("form", form_s)->required();
    classify_cmd->add_option("--parity", parity)->check(CLI::IsMember({0, 1}));

    auto *oracle_cmd = app.add_subcommand("oracle-check", "compare formulas with the exact matrix oracle");
    oracle_cmd->add_option("suite", suite, "roundtrip, korbits, lift, gendescent, dimension or all")->required();
    oracle_cmd->add_option("--max-dim", ocfg.max_dim)->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--trials", ocfg.trials)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--seed", ocfg.seed);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const bool json = format == "json";
    auto emit = [&](const io::ordered_json &j, const std::string &text) {
        if (json)
            out << j.dump(2) << "\n";
        else
            out << text;
    };

    try {
        if (orbits->parsed()) {
            const Eps e = parse_eps(eps_s);
            const auto list = nilp ? enumerate_nil_p(e, n, *nilp) : enumerate_orbits(e, n);
            io::ordered_json j = io::ordered_json::array();
            std::string text;
            for (const auto &o : list) {
                j.push_back(io::to_json(o));
                text += to_string(o.cols) + "\n";
            }
            emit(j, text);
        } else if (infchar->parsed()) {
            const ComplexOrbit o(parse_eps(eps_s), io::parse_partition(cols_s));
            const auto c = infinitesimal_character(o);
            emit(io::to_json(c), "{" + io::join(to_strings(c), ", ") + "}\n");
        } else if (bvdual->parsed()) {
            const ComplexOrbit o(parse_eps(eps_s), io::parse_partition(cols_s));
            const auto d = bv_dual(o);
            const auto lam = infinitesimal_character(o);
            const bool same = weyl_equivalent(lam, d.half_h);
            io::ordered_json j{{"dual", io::to_json(d.dual)},
                               {"dual_rows", io::to_json(transpose(d.dual.cols))},
                               {"half_h", io::to_json(d.half_h)},
                               {"inf_char", io::to_json(lam)},
                               {"checked", d.checked},
                               {"consistent", same}};
            emit(j, "dual rows " + to_string(transpose(d.dual.cols)) + "  1/2 h {" +
                        io::join(to_strings(d.half_h), ", ") + "}" + (d.checked ? "" : "  (unchecked)") + "\n");
        } else if (korbits->parsed()) {
            const RealForm f = parse_form(form_s);
            const ComplexOrbit o(f.eps(), io::parse_partition(cols_s));
            io::ordered_json j = io::ordered_json::array();
            std::string text;
            for (const auto &ko : enumerate_k_orbits(f, o)) {
                const auto g = component_group(ko);
                j.push_back({{"diagram", io::to_json(ko.diagram)}, {"component_order", g.order()}});
                text += io::format_diagram(ko.diagram) + "  |A_X| = " + std::to_string(g.order()) + "\n";
            }
            emit(j, text);
        } else if (descend->parsed() || gendescend->parsed()) {
            const RealForm f = parse_form(form_s);
            const KOrbit ko(f, io::parse_diagram(diag_s));
            KOrbit res;
            if (descend->parsed()) {
                res = descent_k_orbit(ko);
            } else {
                const Signature s = io::parse_signature(sig_s);
                const RealForm fp(f.kind.opposite(), s);
                res = KOrbit(fp, gen_descent_signed(ko.diagram, s));
            }
            emit({{"form", io::to_json(res.form)}, {"diagram", io::to_json(res.diagram)}},
                 io::format_diagram(res.diagram) + "\n");
        } else if (lift->parsed()) {
            const ComplexOrbit op(parse_eps(eps_s), io::parse_partition(cols_s));
            const auto o = theta_lift_complex(op, dim);
            emit(io::to_json(o), to_string(o.cols) + "\n");
        } else if (induce->parsed()) {
            const RealForm f = parse_form(form_s);
            const KOrbit ko(f, io::parse_diagram(diag_s));
            const RealForm fperp(f.kind, f.sig + Signature{l, l});
            io::ordered_json j = io::ordered_json::array();
            std::string text;
            for (const auto &r : induce_real(ko.diagram, l, f.kind)) {
                const KOrbit kperp(fperp, r.diagram);
                j.push_back({{"form", io::to_json(fperp)},
                             {"diagram", io::to_json(kperp.diagram)},
                             {"component_index", r.component_index}});
                text += io::format_diagram(r.diagram) + "  index " + std::to_string(r.component_index) + "\n";
            }
            emit(j, text);
        } else if (count->parsed()) {
            const RealForm f = parse_form(form_s);
            const ComplexOrbit o(f.eps(), io::parse_partition(cols_s));
            const auto row = count_unipotent(f, o, parity);
            out << io::export_rows({row}, format);
        } else if (classify_cmd->parsed()) {
            const RealForm f = parse_form(form_s);
            out << io::export_rows(classify(f, parity), format);
        } else if (oracle_cmd->parsed()) {
            const auto rep = run_oracle_suite(suite, ocfg);
            io::ordered_json j{{"suite", suite}, {"checked", rep.checked}, {"mismatches", rep.mismatches}};
            emit(j, suite + ": " + std::to_string(rep.checked) + " cases, " +
                        std::to_string(rep.mismatches.size()) + " mismatches\n");
            for (const auto &m : rep.mismatches)
                err << "mismatch: " << m << "\n";
            return rep.mismatches.empty() ? 0 : 1;
        }
    } catch (const DomainError &e) {
        err << "error [" << e.condition() << "]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace nilorb::cli
