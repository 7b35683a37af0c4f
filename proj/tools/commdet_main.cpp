#include "commdet/error.hpp"
#include "commdet/experiments.hpp"
#include "commdet/hofstadter.hpp"
#include "commdet/proof_script.hpp"
#include "commdet/report_json.hpp"
#include "commdet/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace commdet;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Complex parse_complex(const std::string& text) {
    // "2", "-1.5", "1+2i", "0.5-0.866i", "2i"
    std::string s = text;
    if (s.empty()) throw Error(ErrorKind::BadArgument, "empty complex literal");
    if (s.back() == 'i') {
        s.pop_back();
        size_t split = s.find_last_of("+-");
        if (split == std::string::npos || split == 0) {
            double im = (s.empty() || s == "+" || s == "-") ? (s == "-" ? -1.0 : 1.0)
                                                            : std::stod(s);
            return Complex(0.0, im);
        }
        double re = std::stod(s.substr(0, split));
        std::string imtxt = s.substr(split);
        double im = (imtxt == "+" ? 1.0 : imtxt == "-" ? -1.0 : std::stod(imtxt));
        return Complex(re, im);
    }
    return Complex(std::stod(s), 0.0);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw Error(ErrorKind::BadArgument, "empty integer list");
    return out;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void emit_record(const std::string& command, const Json& params, const Json& values,
                 const Json& reference, double tolerance, bool pass, const Json& diagnostics,
                 std::uint64_t seed) {
    std::cout << run_record(command, params, values, reference, tolerance, pass, diagnostics,
                            seed)
                     .dump(2)
              << "\n";
}

// ---- check ---------------------------------------------------------------

int cmd_check(const std::string& source, const std::string& level, bool json) {
    std::string text;
    std::string name = source;
    if (source.rfind("builtin:", 0) == 0) {
        text = builtin_script_text(source);
    } else {
        std::ifstream in(source);
        if (!in) {
            std::cerr << "error: cannot read script file '" << source << "'\n";
            return kExitUsage;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    ProofScript script = script_parse(text, name);
    if (level == "strict") script.level = CheckLevel::Strict;
    else if (level == "det") script.level = CheckLevel::Det;

    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = check_script(script);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (json) {
        emit_record("check", Json{{"script", name}, {"level", level}}, report_json(rep),
                    Json{{"verdict", "pass"}}, 0.0, rep.pass, Json::object(), 0);
    } else {
        std::cout << "script:  " << name << "\n"
                  << "steps:   " << rep.word_lengths.size() << " items\n";
        char fp[64];
        std::snprintf(fp, sizeof fp, "%016llx / %016llx",
                      static_cast<unsigned long long>(rep.start_fingerprint),
                      static_cast<unsigned long long>(rep.target_fingerprint));
        std::cout << "images:  " << fp << "\n";
        if (rep.pass) {
            std::cout << "verdict: PASS (" << fmt_double(secs) << " s)\n";
        } else {
            std::cout << "verdict: FAIL at item " << rep.failing_item << "\n"
                      << "reason:  " << rep.reason << "\n";
        }
    }
    return rep.pass ? kExitPass : kExitFail;
}

// ---- exp -------------------------------------------------------------------

void csv_det(const DetEstimate& det, const Complex& ref) {
    std::printf("window,det_re,det_im,abs_err\n");
    for (const auto& [m, v] : det.window_sequence)
        std::printf("%d,%s,%s,%s\n", m, fmt_double(v.real()).c_str(),
                    fmt_double(v.imag()).c_str(), fmt_double(std::abs(v - ref)).c_str());
}

int cmd_exp_diag_shift(const DiagShiftConfig& cfg, bool json, bool csv, std::uint64_t seed) {
    DiagShiftReport rep = exp_diag_shift(cfg);
    if (csv) {
        csv_det(rep.det, rep.reference);
    } else if (json) {
        emit_record("exp diag-shift",
                    Json{{"a", complex_json(cfg.a)},
                         {"b", complex_json(cfg.b)},
                         {"scale", cfg.scale},
                         {"sizes", cfg.sizes}},
                    Json{{"det", complex_json(rep.det.value)}},
                    Json{{"det", complex_json(rep.reference)}}, cfg.tolerance, rep.pass,
                    report_json(rep), seed);
    } else {
        std::cout << "diag-shift det = " << rep.det.value << " vs " << rep.reference
                  << (rep.pass ? "  PASS" : "  FAIL") << "\n";
    }
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_exp_phase_step(const PhaseStepConfig& cfg, bool json, bool csv, std::uint64_t seed) {
    PhaseStepReport rep = exp_phase_step(cfg);
    if (csv) {
        csv_det(rep.det, rep.reference);
    } else if (json) {
        emit_record("exp phase-step",
                    Json{{"w", cfg.profile.winding},
                         {"scale", cfg.profile.scale},
                         {"profile",
                          cfg.profile.kind == StepProfile::Kind::Tanh ? "tanh" : "piecewise"},
                         {"sizes", cfg.sizes}},
                    Json{{"det", complex_json(rep.det.value)}},
                    Json{{"det", complex_json(rep.reference)}}, cfg.tolerance, rep.pass,
                    report_json(rep), seed);
    } else {
        std::cout << "phase-step det = " << rep.det.value << " vs " << rep.reference
                  << "; Kitaev partials " << (rep.kitaev_uv.bounded ? "bounded" : "divergent")
                  << (rep.pass ? "  PASS" : "  FAIL") << "\n";
    }
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_exp_toeplitz(const ToeplitzConfig& cfg, bool json, bool csv, std::uint64_t seed) {
    ToeplitzReport rep = exp_toeplitz_hh(cfg);
    if (csv) {
        csv_det(rep.det, std::exp(rep.log_reference));
    } else if (json) {
        emit_record("exp toeplitz",
                    Json{{"a", cfg.a}, {"b", cfg.b}, {"corner", cfg.corner}, {"pad", cfg.pad}},
                    Json{{"det", complex_json(rep.det.value)},
                         {"log_det", complex_json(rep.log_value)}},
                    Json{{"log_det", complex_json(rep.log_reference)}}, cfg.log_tolerance,
                    rep.pass, report_json(rep), seed);
    } else {
        std::cout << "toeplitz det = " << rep.det.value << ", log err = "
                  << std::abs(rep.log_value - rep.log_reference)
                  << (rep.pass ? "  PASS" : "  FAIL") << "\n";
    }
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_exp_chern(const HofstadterConfig& cfg, bool json, bool csv, std::uint64_t seed) {
    ChernReport rep = exp_hofstadter_chern(cfg);
    if (csv) {
        std::printf("radius,nu\n");
        for (const auto& [r, nu] : rep.window_values)
            std::printf("%d,%s\n", r, fmt_double(nu).c_str());
    } else if (json) {
        emit_record("exp chern",
                    Json{{"L", cfg.L},
                         {"p", cfg.p},
                         {"q", cfg.q},
                         {"band", cfg.band},
                         {"windows", cfg.window_radii}},
                    Json{{"nu", rep.nu}, {"marker", rep.marker}},
                    Json{{"nu", rep.nu_rounded}}, cfg.tolerance, rep.pass, report_json(rep),
                    seed);
    } else {
        std::cout << "chern nu = " << rep.nu << " (rounded " << rep.nu_rounded << "), marker = "
                  << rep.marker << (rep.pass ? "  PASS" : "  FAIL") << "\n";
    }
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_exp_kitaev(const KitaevReportConfig& cfg, bool json, bool csv, std::uint64_t seed) {
    KitaevConditionReport rep = kitaev_condition_report(cfg);
    if (csv) {
        std::printf("window,uv,vu,commutator\n");
        for (size_t k = 0; k < rep.uv.partials.size(); ++k)
            std::printf("%d,%s,%s,%s\n", rep.uv.partials[k].first,
                        fmt_double(rep.uv.partials[k].second).c_str(),
                        fmt_double(rep.vu.partials[k].second).c_str(),
                        fmt_double(rep.comm.partials[k].second).c_str());
    } else if (json) {
        emit_record("exp kitaev-report", Json{{"windows", cfg.windows}},
                    Json{{"uv_bounded", rep.uv.bounded},
                         {"vu_bounded", rep.vu.bounded},
                         {"commutator_bounded", rep.comm.bounded}},
                    Json{{"implication", "uv && vu => commutator"}}, 0.0, rep.implication_ok,
                    report_json(rep), seed);
    } else {
        std::cout << "kitaev-report: uv " << (rep.uv.bounded ? "bounded" : "divergent") << ", vu "
                  << (rep.vu.bounded ? "bounded" : "divergent") << ", commutator "
                  << (rep.comm.bounded ? "bounded" : "divergent")
                  << (rep.implication_ok ? "  PASS" : "  FAIL") << "\n";
    }
    return rep.implication_ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"commdet — symbolic and numeric laboratory for commutator determinants"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "run a proof script (file or builtin:<name>)");
    std::string script_source;
    std::string level = "strict";
    bool check_json = false;
    check->add_option("script", script_source, "script path or builtin:prop22 / builtin:thm32")
        ->required();
    check->add_option("--level", level, "strict|det")->check(CLI::IsMember({"strict", "det"}));
    check->add_flag("--json", check_json, "machine-readable output");

    // ring selftest
    auto* ring = app.add_subcommand("ring", "ring engine utilities");
    auto* selftest = ring->add_subcommand("selftest", "seeded property suite");
    int samples = 10000;
    std::uint64_t ring_seed = 7;
    bool ring_json = false;
    selftest->add_option("--samples", samples, "number of random triples");
    selftest->add_option("--seed", ring_seed, "PRNG seed");
    selftest->add_flag("--json", ring_json, "machine-readable output");

    // exp
    auto* exp = app.add_subcommand("exp", "experiment families");
    exp->require_subcommand(1);
    bool exp_json = false, exp_csv = false;
    std::uint64_t exp_seed = 7;
    exp->add_flag("--json", exp_json, "machine-readable output")->configurable(false);
    exp->add_flag("--csv", exp_csv, "CSV sweep output");
    exp->add_option("--seed", exp_seed, "seed echoed into the report");

    auto* eds = exp->add_subcommand("diag-shift", "bilateral shift vs interpolated diagonal");
    eds->fallthrough();
    std::string a_txt = "2", b_txt = "1";
    double ds_scale = 4.0, ds_tol = 1e-8;
    std::string ds_sizes = "32,64,128,256";
    eds->add_option("--a", a_txt, "limit at -infinity (complex, e.g. 0.5+0.866i)");
    eds->add_option("--b", b_txt, "limit at +infinity");
    eds->add_option("--scale", ds_scale, "interpolation scale");
    eds->add_option("--sizes", ds_sizes, "window schedule, comma separated");
    eds->add_option("--tol", ds_tol, "pass tolerance");

    auto* eps = exp->add_subcommand("phase-step", "winding phase against the bilateral shift");
    eps->fallthrough();
    double w = 1.0, ps_scale = 4.0, ps_tol = 1e-8;
    std::string ps_sizes = "64,128,256,512";
    std::string profile = "tanh";
    eps->add_option("--w", w, "total winding F(+inf) - F(-inf)");
    eps->add_option("--scale", ps_scale, "profile scale");
    eps->add_option("--profile", profile, "tanh|piecewise")
        ->check(CLI::IsMember({"tanh", "piecewise"}));
    eps->add_option("--sizes", ps_sizes, "window schedule");
    eps->add_option("--tol", ps_tol, "pass tolerance");

    auto* ehh = exp->add_subcommand("toeplitz", "exp(aS) exp(bS*) commutator determinant");
    ehh->fallthrough();
    ToeplitzConfig tcfg;
    ehh->add_option("--a", tcfg.a, "coefficient of S");
    ehh->add_option("--b", tcfg.b, "coefficient of S*");
    ehh->add_option("--corner", tcfg.corner, "corner block size");
    ehh->add_option("--pad", tcfg.pad, "internal padding (>= 2*corner)");
    ehh->add_option("--tol", tcfg.log_tolerance, "pass tolerance on |log det + ab|");

    auto* ech = exp->add_subcommand("chern", "magnetic lattice window trace");
    ech->fallthrough();
    HofstadterConfig hcfg;
    std::string windows_txt = "4,6,8,10";
    double fermi_opt = 0.0;
    bool have_fermi = false;
    ech->add_option("--L", hcfg.L, "lattice side");
    ech->add_option("--p", hcfg.p, "flux numerator");
    ech->add_option("--q", hcfg.q, "flux denominator");
    ech->add_option("--band", hcfg.band, "filled band count");
    ech->add_option("--windows", windows_txt, "window radii");
    ech->add_option("--fermi", fermi_opt, "explicit fermi level")->each([&](const std::string&) {
        have_fermi = true;
    });
    ech->add_option("--tol", hcfg.tolerance, "integer/marker agreement tolerance");

    auto* ekr = exp->add_subcommand("kitaev-report", "trace-norm partial sums for a pair");
    ekr->fallthrough();
    std::string pair = "phase-step";
    double kr_w = 1.0, kr_scale = 4.0;
    std::string kr_a = "2", kr_b = "1";
    std::string kr_windows = "16,32,64,128";
    ekr->add_option("--pair", pair, "identity|phase-step|diag-shift")
        ->check(CLI::IsMember({"identity", "phase-step", "diag-shift"}));
    ekr->add_option("--w", kr_w, "winding (phase-step pair)");
    ekr->add_option("--scale", kr_scale, "profile/interpolation scale");
    ekr->add_option("--a", kr_a, "diag-shift limit a");
    ekr->add_option("--b", kr_b, "diag-shift limit b");
    ekr->add_option("--windows", kr_windows, "window schedule");

    // verify
    auto* verify = app.add_subcommand("verify", "run acceptance criteria");
    bool all = false;
    std::string suite;
    std::uint64_t verify_seed = 7;
    bool verify_json_flag = false;
    verify->add_flag("--all", all, "run every criterion");
    verify->add_option("--suite", suite, "symbolic|numeric|chern");
    verify->add_option("--seed", verify_seed, "PRNG seed");
    verify->add_flag("--json", verify_json_flag, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*check) return cmd_check(script_source, level, check_json);

        if (*selftest) {
            auto [ok, detail] = ring_property_suite(samples, ring_seed);
            if (ring_json) {
                emit_record("ring selftest", Json{{"samples", samples}},
                            Json{{"detail", detail}}, Json{{"failures", 0}}, 0.0, ok,
                            Json::object(), ring_seed);
            } else {
                std::cout << "ring selftest: " << detail << (ok ? "  PASS" : "  FAIL") << "\n";
            }
            return ok ? kExitPass : kExitFail;
        }

        if (*eds) {
            DiagShiftConfig cfg;
            cfg.a = parse_complex(a_txt);
            cfg.b = parse_complex(b_txt);
            cfg.scale = ds_scale;
            cfg.sizes = parse_int_list(ds_sizes);
            cfg.tolerance = ds_tol;
            return cmd_exp_diag_shift(cfg, exp_json, exp_csv, exp_seed);
        }
        if (*eps) {
            PhaseStepConfig cfg;
            cfg.profile.kind =
                profile == "tanh" ? StepProfile::Kind::Tanh : StepProfile::Kind::PiecewiseExp;
            cfg.profile.winding = w;
            cfg.profile.scale = ps_scale;
            cfg.sizes = parse_int_list(ps_sizes);
            cfg.tolerance = ps_tol;
            return cmd_exp_phase_step(cfg, exp_json, exp_csv, exp_seed);
        }
        if (*ehh) return cmd_exp_toeplitz(tcfg, exp_json, exp_csv, exp_seed);
        if (*ech) {
            hcfg.window_radii = parse_int_list(windows_txt);
            if (have_fermi) hcfg.fermi = fermi_opt;
            return cmd_exp_chern(hcfg, exp_json, exp_csv, exp_seed);
        }
        if (*ekr) {
            KitaevReportConfig cfg;
            cfg.family = pair == "identity"     ? PairFamily::Identity
                         : pair == "phase-step" ? PairFamily::PhaseStep
                                                : PairFamily::DiagShift;
            cfg.profile.winding = kr_w;
            cfg.profile.scale = kr_scale;
            cfg.a = parse_complex(kr_a);
            cfg.b = parse_complex(kr_b);
            cfg.scale = kr_scale;
            cfg.windows = parse_int_list(kr_windows);
            return cmd_exp_kitaev(cfg, exp_json, exp_csv, exp_seed);
        }

        if (*verify) {
            std::string which = all || suite.empty() ? "all" : suite;
            VerifyOutcome outcome =
                run_criteria(suite_criteria(which), verify_seed,
                             verify_json_flag ? &std::cerr : &std::cout);
            if (verify_json_flag) {
                std::cout << verify_json(outcome, verify_seed, which).dump(2) << "\n";
            } else {
                std::cout << (outcome.all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED")
                          << "\n";
            }
            return outcome.all_pass ? kExitPass : kExitFail;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << " (line " << e.line() << ", column "
                  << e.column() << ")\n";
        return kExitUsage;
    } catch (const Error& e) {
        const bool usage = e.kind() == ErrorKind::BadArgument;
        std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << "\n";
        return usage ? kExitUsage : kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
