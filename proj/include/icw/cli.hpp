#pragma once

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icw/compose.hpp"
#include "icw/fixtures.hpp"
#include "icw/paper_suite.hpp"

namespace icw {
namespace cli {

// Exit codes: 0 pass, 1 fail, 2 usage/error.

struct RunReport {
    std::string command;
    std::string status = "pass";  // pass | fail | error
    json details = json::object();
    double elapsed_ms = 0.0;
    std::vector<std::string> text_lines;
};

namespace detail {

inline json instance_arg(const std::string& arg) {
    return fixtures::is_fixture(arg) ? fixtures::raw(arg) : load_json_file(arg);
}

/// Built-in fixture names are accepted anywhere a file path is expected.
inline Instance load_instance_arg(const std::string& arg) { return instance_from_json(instance_arg(arg)); }

inline BlockMatrix load_matrix_arg(const std::string& arg, int p) {
    return fixtures::is_fixture(arg) ? fixtures::matrix(arg, p)
                                     : block_matrix_from_json(load_json_file(arg), p);
}

inline MatroidSpec load_matroid_arg(const std::string& arg) {
    return fixtures::is_fixture(arg) ? fixtures::matroid(arg) : matroid_from_json(load_json_file(arg));
}

inline Budget parse_budget(const std::string& s) {
    Budget b;
    if (s.empty()) return b;
    if (s.size() > 1 && s.back() == 's') {
        b.max_seconds = std::stod(s.substr(0, s.size() - 1));
    } else if (s.size() > 5 && s.substr(s.size() - 5) == "nodes") {
        b.max_nodes = static_cast<std::uint64_t>(std::stod(s.substr(0, s.size() - 5)));
    } else {
        fail(ErrorKind::ParseError, "budget must look like '30s' or '1e7nodes'");
    }
    return b;
}

inline std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

inline std::vector<Trit> parse_trits(const std::string& s) {
    std::vector<Trit> out;
    for (int v : parse_index_list(s)) {
        if (v < 0 || v > 2) fail(ErrorKind::NotInField, "message digits must be 0, 1 or 2");
        out.push_back(static_cast<Trit>(v));
    }
    return out;
}

}  // namespace detail

/// Runs one subcommand; argv excludes the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"index coding workbench"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    RunReport rep;
    for (const auto& a : argv) rep.command += (rep.command.empty() ? "" : " ") + a;

    // verify-linear
    auto* vl = app.add_subcommand("verify-linear", "check the per-user rank condition of a code");
    std::string vl_instance, vl_matrix;
    int vl_field = 0;
    vl->add_option("--instance", vl_instance, "instance fixture name or JSON path")->required();
    vl->add_option("--matrix", vl_matrix, "matrix fixture name or JSON path")->required();
    vl->add_option("--field", vl_field, "prime field order")->required();
    vl->callback([&] {
        auto inst = detail::load_instance_arg(vl_instance);
        LinearCode code{detail::load_matrix_arg(vl_matrix, vl_field)};
        auto r = check_decodable(code, inst);
        rep.status = r.pass ? "pass" : "fail";
        rep.details = report_to_json(r);
        rep.text_lines.push_back("rate " + r.rate() + " over GF(" + std::to_string(vl_field) + ")");
        for (const auto& u : r.users)
            if (!u.pass)
                rep.text_lines.push_back("user " + std::to_string(u.user) + " FAILS: rank(H^{i u B_i}) = " +
                                         std::to_string(u.rank_iB) + ", rank(H^{B_i}) = " +
                                         std::to_string(u.rank_B) + ", need +" + std::to_string(r.t));
        rep.text_lines.push_back(r.pass ? "all users decode" : "decoding fails");
    });

    // mais
    auto* ms = app.add_subcommand("mais", "maximum acyclic induced set bound");
    std::string ms_instance, ms_witness, ms_budget;
    ms->add_option("--instance", ms_instance)->required();
    ms->add_option("--witness", ms_witness, "comma-separated set: verify instead of searching");
    ms->add_option("--budget", ms_budget, "e.g. 30s or 1e7nodes");
    ms->callback([&] {
        auto inst = detail::load_instance_arg(ms_instance);
        MaisResult r;
        if (!ms_witness.empty()) {
            r = mais_check_witness(inst, detail::parse_index_list(ms_witness));
        } else {
            r = mais(inst, detail::parse_budget(ms_budget));
        }
        rep.status = "pass";
        rep.details = json{{"lo", r.lo},
                           {"hi", r.hi},
                           {"status", mais_status_name(r.status)},
                           {"witness", r.witness}};
        std::ostringstream os;
        os << "beta_MAIS in [" << r.lo << ", " << r.hi << "] (" << mais_status_name(r.status) << ")";
        rep.text_lines.push_back(os.str());
    });

    // matroid verify | search
    auto* mat = app.add_subcommand("matroid", "matroid representation tools");
    mat->require_subcommand(1);
    std::string mt_spec, mt_matrix, mt_budget;
    int mt_field = 0;
    auto* mv = mat->add_subcommand("verify", "check a matrix against a matroid spec");
    mv->add_option("--spec", mt_spec)->required();
    mv->add_option("--matrix", mt_matrix)->required();
    mv->add_option("--field", mt_field)->required();
    mv->callback([&] {
        auto spec = detail::load_matroid_arg(mt_spec);
        auto h = detail::load_matrix_arg(mt_matrix, mt_field);
        if (h.m() > spec.n) {
            std::vector<int> lead;
            for (int i = 1; i <= spec.n; ++i) lead.push_back(i);
            h = BlockMatrix(h.select(lead), spec.n, h.t());  // leading slab
        }
        auto r = verify_representation(spec, h);
        rep.status = r.valid ? "pass" : "fail";
        rep.details = verify_report_to_json(r);
        for (const auto& v : r.violations) {
            std::ostringstream os;
            os << "violated " << v.kind << " on {";
            for (size_t i = 0; i < v.set.size(); ++i) os << (i ? "," : "") << v.set[i];
            os << "}: " << v.detail;
            rep.text_lines.push_back(os.str());
        }
        rep.text_lines.push_back(r.valid ? "valid representation" : "not a representation");
    });
    auto* msr = mat->add_subcommand("search", "exhaustive scalar representation search");
    msr->add_option("--spec", mt_spec)->required();
    msr->add_option("--field", mt_field)->required();
    msr->add_option("--budget", mt_budget);
    msr->callback([&] {
        auto spec = detail::load_matroid_arg(mt_spec);
        auto r = search_scalar_representation(spec, mt_field, detail::parse_budget(mt_budget));
        rep.status = (r.status == SearchStatus::Budget) ? "fail" : "pass";
        rep.details = json{{"status", search_status_name(r.status)}, {"nodes", r.nodes_explored}};
        if (r.witness) rep.details["witness"] = block_matrix_to_json(*r.witness);
        rep.text_lines.push_back(std::string(search_status_name(r.status)) + " after " +
                                 std::to_string(r.nodes_explored) + " nodes");
        if (r.witness) {
            for (int row = 0; row < r.witness->r(); ++row) {
                std::string line = "  [";
                for (int c = 0; c < r.witness->inner().cols(); ++c)
                    line += (c ? " " : "") + std::to_string(int(r.witness->inner().at(row, c)));
                rep.text_lines.push_back(line + "]");
            }
        }
    });

    // nonlinear
    auto* nl = app.add_subcommand("nonlinear", "the 58-user GF(3) nonlinear code");
    nl->require_subcommand(1);
    auto* nid = nl->add_subcommand("identities", "exhaustive recovery/combination identities");
    nid->callback([&] {
        int checked = 0;
        bool ok = true;
        for (int xi = 0; xi < 3 && ok; ++xi)
            for (int xj = 0; xj < 3 && ok; ++xj)
                for (int xl = 0; xl < 3 && ok; ++xl)
                    for (int xv = 0; xv < 3 && ok; ++xv)
                        for (int xw = 0; xw < 3 && ok; ++xw) {
                            Trit i = Trit(xi), j = Trit(xj), l = Trit(xl), v = Trit(xv), w = Trit(xw);
                            std::array<Trit, 4> gs{g_eval(i, j, l, w), g_eval(i, j, v, w),
                                                   g_eval(i, l, v, w), g_eval(j, l, v, w)};
                            std::array<Trit, 4> ss{g3::reduce(xi + xj + xl), g3::reduce(xi + xj + xv),
                                                   g3::reduce(xi + xl + xv), g3::reduce(xj + xl + xv)};
                            ok = recover_quadruple(w, gs, ss) == std::array<Trit, 4>{i, j, l, v} &&
                                 combo_from_partial(i, j, l, g3::reduce(xv + xw)) ==
                                     g3::reduce(g_eval(i, j, v, w) + 2 * g_eval(i, l, v, w));
                            ++checked;
                        }
        rep.status = ok ? "pass" : "fail";
        rep.details = json{{"tuples_checked", checked}, {"ok", ok}};
        rep.text_lines.push_back(std::to_string(checked) + " tuples checked");
    });
    auto* nrt = nl->add_subcommand("roundtrip", "seeded random encode/decode round-trips");
    int nl_trials = 10000;
    std::uint64_t nl_seed = 0xC0FFEE;
    nrt->add_option("--trials", nl_trials);
    nrt->add_option("--seed", nl_seed);
    nrt->callback([&] {
        Instance i3 = fixtures::instance("I3");
        std::vector<std::vector<int>> side_sets;
        for (int u = 1; u <= 58; ++u) side_sets.push_back(i3.side_info(u));
        std::mt19937 rng(static_cast<std::uint32_t>(nl_seed));
        std::vector<int> per_user_pass(58, 0);
        long long first_fail_trial = -1;
        int first_fail_user = 0;
        for (int trial = 0; trial < nl_trials; ++trial) {
            std::vector<Trit> flat(58);
            for (auto& v : flat) v = static_cast<Trit>(rng() % 3);
            G3Message msg{};
            std::copy(flat.begin(), flat.end(), msg.begin());
            NonlinearCodeword z = encode_i3(msg);
            for (int u = 1; u <= 58; ++u) {
                SideInfo side(58, side_sets[u - 1], flat);
                if (decode_i3(u, z, side) == flat[u - 1]) {
                    ++per_user_pass[u - 1];
                } else if (first_fail_trial < 0) {
                    first_fail_trial = trial;
                    first_fail_user = u;
                }
            }
        }
        bool ok = first_fail_trial < 0;
        rep.status = ok ? "pass" : "fail";
        rep.details = json{{"trials", nl_trials}, {"seed", nl_seed}, {"per_user_pass", per_user_pass}};
        if (!ok) {
            rep.details["first_failure"] = json{{"trial", first_fail_trial}, {"user", first_fail_user}};
            rep.text_lines.push_back("first failure at trial " + std::to_string(first_fail_trial) +
                                     ", user " + std::to_string(first_fail_user));
        }
        rep.text_lines.push_back(std::to_string(nl_trials) + " trials x 58 users, " +
                                 (ok ? "all decoded" : "failures present"));
    });
    auto* nenc = nl->add_subcommand("encode", "encode a 58-trit message");
    std::string nl_message;
    nenc->add_option("--message", nl_message, "58 comma-separated base-3 digits")->required();
    nenc->callback([&] {
        auto digits = detail::parse_trits(nl_message);
        if (digits.size() != 58) fail(ErrorKind::DimensionMismatch, "need exactly 58 digits");
        G3Message msg{};
        std::copy(digits.begin(), digits.end(), msg.begin());
        auto z = encode_i3(msg);
        rep.details = json{{"z", std::vector<int>(z.begin(), z.end())}};
        std::string line = "z =";
        for (Trit v : z) line += " " + std::to_string(int(v));
        rep.text_lines.push_back(line);
    });

    // compose
    auto* cp = app.add_subcommand("compose", "connect two instances");
    std::string cp_mode, cp_a, cp_b, cp_out;
    cp->add_option("--mode", cp_mode)->required()->check(CLI::IsMember({"noway", "twoway"}));
    cp->add_option("--a", cp_a)->required();
    cp->add_option("--b", cp_b)->required();
    cp->add_option("--out", cp_out)->required();
    cp->callback([&] {
        auto a = detail::load_instance_arg(cp_a);
        auto b = detail::load_instance_arg(cp_b);
        Instance c = (cp_mode == "noway") ? no_way(a, b) : two_way(a, b);
        save_json_file(cp_out, instance_to_json(c));
        rep.details = json{{"m", c.m()}, {"out", cp_out}};
        rep.text_lines.push_back("wrote " + cp_out + " with m = " + std::to_string(c.m()));
    });

    // verify-combined
    auto* vc = app.add_subcommand("verify-combined", "round-trip the composed 87/91-user codes");
    int vc_which = 0, vc_trials = 10000;
    std::uint64_t vc_seed = 0xC0FFEE;
    vc->add_option("--which", vc_which)->required()->check(CLI::IsMember({87, 91}));
    vc->add_option("--trials", vc_trials);
    vc->add_option("--seed", vc_seed);
    vc->callback([&] {
        LinearCode code{fixtures::matrix("H_fig1", 3)};
        Instance i1 = fixtures::instance("I1");
        Instance ia = fixtures::instance("Ia");
        Instance i3 = fixtures::instance("I3");
        std::mt19937 rng(static_cast<std::uint32_t>(vc_seed));
        long long first_fail_trial = -1;
        int first_fail_user = 0;
        int symbols = 0;
        auto run_code = [&](auto&& codec, int m) {
            for (int trial = 0; trial < vc_trials && first_fail_trial < 0; ++trial) {
                std::vector<Trit> x(m);
                for (auto& v : x) v = static_cast<Trit>(rng() % 3);
                auto s = codec.encode(x);
                symbols = static_cast<int>(s.size());
                for (int u = 1; u <= m; ++u)
                    if (codec.decode_user(u, s, x) != x[u - 1]) {
                        first_fail_trial = trial;
                        first_fail_user = u;
                        break;
                    }
            }
        };
        if (vc_which == 87) {
            run_code(CombinedCodec87(code, i1, i3), 87);
        } else {
            run_code(CombinedCodec91(code, i1, ia, i3), 91);
        }
        bool ok = first_fail_trial < 0;
        rep.status = ok ? "pass" : "fail";
        rep.details = json{{"which", vc_which}, {"trials", vc_trials}, {"seed", vc_seed}, {"symbols", symbols}};
        if (!ok) rep.details["first_failure"] = json{{"trial", first_fail_trial}, {"user", first_fail_user}};
        rep.text_lines.push_back(std::to_string(vc_which) + "-user code, " + std::to_string(symbols) +
                                 " symbols, " + std::to_string(vc_trials) + " trials: " +
                                 (ok ? "all decoded" : "failure at trial " + std::to_string(first_fail_trial)));
    });

    // fixtures export
    auto* fx = app.add_subcommand("fixtures", "shipped data");
    fx->require_subcommand(1);
    auto* fxe = fx->add_subcommand("export", "dump a fixture in its standard format");
    std::string fx_name, fx_out;
    fxe->add_option("--name", fx_name)->required();
    fxe->add_option("--out", fx_out)->required();
    fxe->callback([&] {
        save_json_file(fx_out, fixtures::raw(fx_name));
        rep.details = json{{"name", fx_name}, {"out", fx_out}};
        rep.text_lines.push_back("wrote " + fx_out);
    });
    auto* fxl = fx->add_subcommand("list", "list fixture names");
    fxl->callback([&] {
        json names = json::array();
        for (const auto& list : {fixtures::instance_names(), fixtures::matrix_names(), fixtures::matroid_names()})
            for (const auto& n : list) {
                names.push_back(n);
                rep.text_lines.push_back(n);
            }
        rep.details = json{{"names", names}};
    });

    // paper-suite
    auto* ps = app.add_subcommand("paper-suite", "run the full verification matrix");
    std::uint64_t ps_seed = 0xC0FFEE;
    int ps_trials = 10000;
    ps->add_option("--seed", ps_seed);
    ps->add_option("--trials", ps_trials, "randomized-trial count per criterion");
    ps->callback([&] {
        auto suite = run_paper_suite(ps_seed, ps_trials);
        rep.status = suite.pass ? "pass" : "fail";
        json arr = json::array();
        for (const auto& c : suite.criteria) {
            arr.push_back(json{{"id", c.id},
                               {"name", c.name},
                               {"pass", c.pass},
                               {"seconds", c.seconds},
                               {"limit_seconds", c.limit_seconds},
                               {"note", c.note}});
            std::ostringstream os;
            os << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << std::setw(2) << c.id << ": " << c.name;
            rep.text_lines.push_back(os.str());
            if (!c.note.empty()) rep.text_lines.push_back("        " + c.note);
        }
        rep.details = json{{"seed", suite.seed},
                           {"criteria", arr},
                           {"limitations", suite.limitations},
                           {"pass", suite.pass}};
    });

    auto t0 = std::chrono::steady_clock::now();
    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (format == "json") {
        json j{{"command", rep.command},
               {"status", rep.status},
               {"details", rep.details},
               {"elapsed_ms", rep.elapsed_ms}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& line : rep.text_lines) out << line << "\n";
        out << "status: " << rep.status << "\n";
    }
    return rep.status == "pass" ? 0 : 1;
}

}  // namespace cli
}  // namespace icw
