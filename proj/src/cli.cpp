#include "sympoly/cli.hpp"

#include "sympoly/identities.hpp"
#include "sympoly/partfunc.hpp"
#include "sympoly/pcore.hpp"
#include "sympoly/trec.hpp"
#include "sympoly/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

namespace sympoly::cli {

namespace {

struct Options {
    unsigned long n = 0;
    unsigned long r = 0;
    unsigned long k = 0;
    unsigned long cap = kDefaultSubsetCap;
    std::string x;
    std::string d;
    std::string s;
    std::string s_list;
    std::string family = "t";
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
    bool direct = false;
    bool via_p = false;
    bool closed = false;
    bool table = false;
};

void print_scalar(std::ostream& out, bool json, const std::string& value, Json inputs) {
    if (json) {
        inputs["value"] = value;
        out << inputs.dump() << '\n';
    } else {
        out << value << '\n';
    }
}

int emit_reports(std::ostream& out, bool json, const std::vector<VerificationReport>& reports) {
    bool all_pass = true;
    if (json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        out << arr.dump(2) << '\n';
    }
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        if (json) continue;
        out << r.summary() << '\n';
        std::size_t shown = 0;
        for (const auto& f : r.failures()) {
            if (shown++ == 5) {
                out << "  ... " << r.failures().size() - 5 << " more\n";
                break;
            }
            out << "  FAIL " << f.inputs.dump() << " expected " << f.expected << " got " << f.actual << '\n';
        }
    }
    return all_pass ? kOk : kVerificationFailed;
}

void print_poly(std::ostream& out, bool json, const PowerSumPoly& p, Family family, const std::string& name, int r) {
    if (json)
        out << p.to_json(family).dump() << '\n';
    else
        out << name << '_' << r << " = " << p.to_display(family) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation and verification of the P_n / T_r / f_r / W_1 polynomial family", "sympoly"};
    app.require_subcommand(1, 1);
    Options o;
    std::function<int()> action;

    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
    auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Random seed")->capture_default_str(); };

    // Scalar evaluators.
    auto* bern = app.add_subcommand("bernoulli", "k-th Bernoulli number (B_1 = -1/2)");
    bern->add_option("--k", o.k)->required();
    json_flag(bern);
    bern->callback([&] {
        action = [&] {
            print_scalar(out, o.json, to_string(bernoulli(o.k)), Json{{"k", o.k}});
            return int{kOk};
        };
    });

    auto* evp = app.add_subcommand("eval-p", "P_n(x) by subset enumeration");
    evp->add_option("--n", o.n)->required();
    evp->add_option("--x", o.x, "Comma-separated rationals")->required();
    evp->add_option("--cap", o.cap, "Maximum number of variables")->capture_default_str();
    json_flag(evp);
    evp->callback([&] {
        action = [&] {
            const auto x = parse_point(o.x);
            print_scalar(out, o.json, to_string(eval_P(o.n, x, o.cap)), Json{{"n", o.n}, {"x", to_string(std::span<const Rational>(x))}});
            return int{kOk};
        };
    });

    auto* evpr = app.add_subcommand("eval-p-rec", "P_n(x) by the tuple-reduction recursion");
    evpr->add_option("--n", o.n)->required();
    evpr->add_option("--x", o.x)->required();
    json_flag(evpr);
    evpr->callback([&] {
        action = [&] {
            const auto x = parse_point(o.x);
            print_scalar(out, o.json, to_string(eval_P_recursive(o.n, x)), Json{{"n", o.n}, {"x", to_string(std::span<const Rational>(x))}});
            return int{kOk};
        };
    });

    auto* evt = app.add_subcommand("eval-t", "T_r(x)");
    evt->add_option("--r", o.r)->required();
    evt->add_option("--x", o.x)->required();
    auto* direct = evt->add_flag("--direct", o.direct, "Composition sum (default)");
    evt->add_flag("--via-p", o.via_p, "Divide P_{r+m} by its prefactor")->excludes(direct);
    json_flag(evt);
    evt->callback([&] {
        action = [&] {
            const auto x = parse_point(o.x);
            const Rational v = o.via_p ? eval_T_via_P(o.r, x) : eval_T_direct(o.r, x);
            print_scalar(out, o.json, to_string(v), Json{{"r", o.r}, {"x", to_string(std::span<const Rational>(x))}});
            return int{kOk};
        };
    });

    auto* tpoly = app.add_subcommand("t-poly", "T_r as a polynomial in E_1, E_2, ...");
    tpoly->add_option("--r", o.r)->required();
    seed_opt(tpoly);
    json_flag(tpoly);
    tpoly->callback([&] {
        action = [&] {
            print_poly(out, o.json, compute_T_poly(static_cast<int>(o.r), o.seed), Family::E, "T", static_cast<int>(o.r));
            return int{kOk};
        };
    });

    auto* fev = app.add_subcommand("f-eval", "f_r(d)");
    fev->add_option("--r", o.r)->required();
    fev->add_option("--d", o.d)->required();
    json_flag(fev);
    fev->callback([&] {
        action = [&] {
            const auto d = parse_point(o.d);
            print_scalar(out, o.json, to_string(eval_f(o.r, d)), Json{{"r", o.r}, {"d", to_string(std::span<const Rational>(d))}});
            return int{kOk};
        };
    });

    auto* fpoly = app.add_subcommand("f-poly", "f_r as a polynomial in s_1, s_2, ...");
    fpoly->add_option("--r", o.r)->required();
    seed_opt(fpoly);
    json_flag(fpoly);
    fpoly->callback([&] {
        action = [&] {
            print_poly(out, o.json, compute_f_poly(static_cast<int>(o.r), o.seed), Family::Sigma, "f", static_cast<int>(o.r));
            return int{kOk};
        };
    });

    auto* w1 = app.add_subcommand("w1", "Polynomial part W_1(s, d)");
    w1->add_option("--s", o.s, "Rational s")->required();
    w1->add_option("--d", o.d)->required();
    json_flag(w1);
    w1->callback([&] {
        action = [&] {
            const auto d = parse_point(o.d);
            const Rational s = parse_rational(o.s);
            print_scalar(out, o.json, to_string(eval_W1(s, d)), Json{{"s", to_string(s)}, {"d", to_string(std::span<const Rational>(d))}});
            return int{kOk};
        };
    });

    auto* wc = app.add_subcommand("w-count", "Denumerant W(s, d) by dynamic programming");
    wc->add_option("--s", o.n, "Nonnegative integer s")->required();
    wc->add_option("--d", o.d)->required();
    json_flag(wc);
    wc->callback([&] {
        action = [&] {
            const auto d = parse_point(o.d);
            print_scalar(out, o.json, to_string(count_partitions_brute(o.n, d)), Json{{"s", o.n}, {"d", to_string(std::span<const Rational>(d))}});
            return int{kOk};
        };
    });

    auto* cnr = app.add_subcommand("cnr", "C_{n,r} coefficients");
    cnr->add_option("--n", o.n)->required();
    auto* cnr_r = cnr->add_option("--r", o.r);
    cnr->add_flag("--closed", o.closed, "Use the printed closed forms (r <= 4)")->needs(cnr_r);
    cnr->add_flag("--table", o.table, "All C_{n',r} with r <= n' <= n")->excludes(cnr_r);
    json_flag(cnr);
    cnr->callback([&] {
        action = [&] {
            const auto n = static_cast<unsigned>(o.n);
            Json rows = Json::array();
            if (o.table) {
                rows = CnrTable(n).to_json();
            } else if (cnr_r->count() > 0) {
                const auto r = static_cast<unsigned>(o.r);
                if (o.closed) {
                    rows.push_back(Json{{"n", n}, {"r", r}, {"value", to_string(cnr_closed(n, r))}});
                } else {
                    const auto v = cnr_recursive(n, r);
                    rows.push_back(Json{{"n", n}, {"r", r}, {"value", to_string(v.value)}, {"terms", v.terms}});
                }
            } else {
                for (unsigned r = 1; r <= n; ++r) {
                    const auto v = cnr_recursive(n, r);
                    rows.push_back(Json{{"n", n}, {"r", r}, {"value", to_string(v.value)}, {"terms", v.terms}});
                }
            }
            if (o.json) {
                out << (cnr_r->count() > 0 ? rows[0].dump() : rows.dump()) << '\n';
            } else {
                for (const auto& row : rows) {
                    out << "C_{" << row["n"].get<unsigned>() << ',' << row["r"].get<unsigned>()
                        << "} = " << row["value"].get<std::string>();
                    if (row.contains("terms")) {
                        const auto terms = row["terms"].get<std::uint64_t>();
                        out << "  (" << terms << (terms == 1 ? " term)" : " terms)");
                    }
                    out << '\n';
                }
            }
            return int{kOk};
        };
    });

    // Verification suites. Each keeps its own defaults.
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1, 1);

    unsigned c1_max_r = 7;
    auto* c1 = verify->add_subcommand("conjecture1", "T_r against sign-flipped f_r");
    c1->add_option("--max-r", c1_max_r)->capture_default_str();
    seed_opt(c1);
    json_flag(c1);
    c1->callback([&] {
        action = [&] { return emit_reports(out, o.json, {verify_conjecture1(static_cast<int>(c1_max_r), o.seed)}); };
    });

    unsigned c2_m = 6;
    unsigned c2_trials = 50;
    auto* c2 = verify->add_subcommand("conjecture2", "Odd-ratio relation for T_r");
    c2->add_option("--m", c2_m)->capture_default_str();
    c2->add_option("--trials", c2_trials)->capture_default_str();
    seed_opt(c2);
    json_flag(c2);
    c2->callback([&] {
        action = [&] { return emit_reports(out, o.json, {verify_conjecture2(c2_m, o.seed, c2_trials)}); };
    });

    unsigned r26_n = 1;
    unsigned r26_m = 2;
    unsigned r26_trials = 50;
    auto* r26 = verify->add_subcommand("relation26", "Odd-ratio relation for one family and n");
    r26->add_option("--family", o.family)->check(CLI::IsMember({"t", "f"}))->capture_default_str();
    r26->add_option("--n", r26_n)->required();
    r26->add_option("--m", r26_m)->required();
    r26->add_option("--trials", r26_trials)->capture_default_str();
    seed_opt(r26);
    json_flag(r26);
    r26->callback([&] {
        action = [&] {
            const auto fam = o.family == "t" ? RatioFamily::T : RatioFamily::F;
            return emit_reports(out, o.json, {verify_relation26(fam, r26_n, r26_m, o.seed, r26_trials)});
        };
    });

    unsigned b_max_r = 7;
    unsigned b_m = 1;
    unsigned b_trials = 200;
    auto* bounds = verify->add_subcommand("bounds", "Double bounds on T_r / T_1^r");
    bounds->add_option("--max-r", b_max_r)->capture_default_str();
    bounds->add_option("--m", b_m)->required();
    bounds->add_option("--trials", b_trials)->capture_default_str();
    seed_opt(bounds);
    json_flag(bounds);
    bounds->callback([&] {
        action = [&] {
            return emit_reports(out, o.json, {verify_bounds(static_cast<int>(b_max_r), b_m, o.seed, b_trials)});
        };
    });

    unsigned rel_m = 2;
    unsigned rel_trials = 200;
    auto* rel = verify->add_subcommand("relations", "Higher power sums through lower ones, m = 1..3");
    rel->add_option("--m", rel_m)->required();
    rel->add_option("--trials", rel_trials)->capture_default_str();
    seed_opt(rel);
    json_flag(rel);
    rel->callback([&] {
        action = [&] { return emit_reports(out, o.json, {verify_power_sum_relations(rel_m, o.seed, rel_trials)}); };
    });

    unsigned lem_max_n = 10;
    unsigned lem_max_m = 6;
    unsigned lem_trials = 200;
    auto* lem = verify->add_subcommand("lemmas", "P_n vanishing, divisibility, sign and oracle batteries");
    lem->add_option("--max-n", lem_max_n)->capture_default_str();
    lem->add_option("--max-m", lem_max_m)->capture_default_str();
    lem->add_option("--trials", lem_trials)->capture_default_str();
    seed_opt(lem);
    json_flag(lem);
    lem->callback([&] {
        action = [&] { return emit_reports(out, o.json, verify_lemmas(lem_max_n, lem_max_m, o.seed, lem_trials)); };
    });

    unsigned par_tuples = 20;
    unsigned par_s_count = 20;
    unsigned par_max_m = 5;
    auto* par = verify->add_subcommand("parity", "Parity of W_1 about -sigma_1/2");
    auto* par_d = par->add_option("--d", o.d, "Single generator tuple (default: random tuples)");
    par->add_option("--s", o.s_list, "Comma-separated s values for --d")->needs(par_d);
    par->add_option("--tuples", par_tuples)->capture_default_str();
    par->add_option("--s-count", par_s_count)->capture_default_str();
    par->add_option("--max-m", par_max_m)->capture_default_str();
    seed_opt(par);
    json_flag(par);
    par->callback([&] {
        action = [&] {
            if (par_d->count() > 0) {
                const auto d = parse_point(o.d);
                PointTuple s_values;
                if (o.s_list.empty()) {
                    for (long k = -20; k <= 20; ++k) s_values.push_back(make_rational(k, 2));
                } else {
                    s_values = parse_point(o.s_list);
                }
                std::vector<VerificationReport> reports{check_parity(d, s_values)};
                if (d.size() >= 2) reports.push_back(check_recursion(d, s_values));
                return emit_reports(out, o.json, reports);
            }
            return emit_reports(out, o.json, verify_parity_suite(par_tuples, par_s_count, par_max_m, o.seed));
        };
    });

    auto* prox = verify->add_subcommand("proximity", "Bounded gap between W and W_1 over three periods");
    prox->add_option("--d", o.d)->required();
    json_flag(prox);
    prox->callback([&] {
        action = [&] { return emit_reports(out, o.json, {check_proximity(parse_point(o.d))}); };
    });

    unsigned eq28_max_n = 12;
    auto* eq28 = verify->add_subcommand("eq28", "C_{n,r} against odd-ratio elimination");
    eq28->add_option("--max-n", eq28_max_n)->capture_default_str();
    json_flag(eq28);
    eq28->callback([&] {
        action = [&] {
            VerificationReport combined("eq28");
            combined.params()["max_n"] = eq28_max_n;
            Json by_n = Json::object();
            for (unsigned n = 1; n <= eq28_max_n; ++n) {
                auto sub = verify_eq28_equivalence(n);
                by_n[std::to_string(n)] = sub.params()["coefficients"];
                combined.absorb(sub);
            }
            combined.params()["coefficients"] = by_n;
            return emit_reports(out, o.json, {combined, verify_cnr_closed(eq28_max_n)});
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        return action ? action() : int{kUsageError};
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace sympoly::cli
