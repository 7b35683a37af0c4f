#include "commdet/report_json.hpp"

namespace commdet {

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json det_estimate_json(const DetEstimate& d) {
    Json seq = Json::array();
    for (const auto& [m, v] : d.window_sequence)
        seq.push_back(Json{{"window", m}, {"value", complex_json(v)}});
    return Json{
        {"value", complex_json(d.value)},
        {"window_sequence", seq},
        {"converged", d.converged},
        {"cauchy_gap", d.cauchy_gap},
    };
}

Json partials_json(const PartialSumSeries& s) {
    Json seq = Json::array();
    for (const auto& [m, v] : s.partials) seq.push_back(Json{{"window", m}, {"sum", v}});
    return Json{{"partials", seq}, {"final_slope", s.final_slope}, {"bounded", s.bounded}};
}

Json report_json(const DiagShiftReport& r) {
    return Json{
        {"family", "diag-shift"},
        {"a", complex_json(r.cfg.a)},
        {"b", complex_json(r.cfg.b)},
        {"scale", r.cfg.scale},
        {"det", det_estimate_json(r.det)},
        {"reference", complex_json(r.reference)},
        {"tolerance", r.cfg.tolerance},
        {"pass", r.pass},
        {"kitaev_uv", partials_json(r.kitaev_uv)},
        {"kitaev_vu", partials_json(r.kitaev_vu)},
    };
}

Json report_json(const PhaseStepReport& r) {
    return Json{
        {"family", "phase-step"},
        {"profile", r.cfg.profile.kind == StepProfile::Kind::Tanh ? "tanh" : "piecewise"},
        {"winding", r.cfg.profile.winding},
        {"scale", r.cfg.profile.scale},
        {"det", det_estimate_json(r.det)},
        {"reference", complex_json(r.reference)},
        {"tolerance", r.cfg.tolerance},
        {"pass", r.pass},
        {"kitaev_uv", partials_json(r.kitaev_uv)},
        {"kitaev_vu", partials_json(r.kitaev_vu)},
        {"diagonal_oracle", partials_json(r.diagonal_oracle)},
    };
}

Json report_json(const ToeplitzReport& r) {
    return Json{
        {"family", "toeplitz"},
        {"a", r.cfg.a},
        {"b", r.cfg.b},
        {"corner", r.cfg.corner},
        {"pad", r.cfg.pad},
        {"det", det_estimate_json(r.det)},
        {"log_det", complex_json(r.log_value)},
        {"log_reference", complex_json(r.log_reference)},
        {"tolerance", r.cfg.log_tolerance},
        {"pad_error", r.pad_error},
        {"pass", r.pass},
    };
}

Json report_json(const ChernReport& r) {
    Json windows = Json::array();
    for (const auto& [rad, nu] : r.window_values)
        windows.push_back(Json{{"radius", rad}, {"nu", nu}});
    return Json{
        {"family", "chern"},
        {"L", r.cfg.L},
        {"p", r.cfg.p},
        {"q", r.cfg.q},
        {"band", r.cfg.band},
        {"fermi", r.fermi},
        {"gap", r.gap},
        {"windows", windows},
        {"nu", r.nu},
        {"nu_rounded", r.nu_rounded},
        {"marker", r.marker},
        {"tolerance", r.cfg.tolerance},
        {"pass", r.pass},
        {"trace_class", partials_json(r.trace_class_partials)},
    };
}

Json report_json(const KitaevConditionReport& r) {
    const char* family = r.cfg.family == PairFamily::Identity    ? "identity"
                         : r.cfg.family == PairFamily::PhaseStep ? "phase-step"
                                                                 : "diag-shift";
    Json j{
        {"family", "kitaev-report"},
        {"pair", family},
        {"uv", partials_json(r.uv)},
        {"vu", partials_json(r.vu)},
        {"commutator", partials_json(r.comm)},
        {"implication_ok", r.implication_ok},
    };
    if (r.det) j["det"] = complex_json(*r.det);
    return j;
}

Json report_json(const CheckReport& r) {
    char buf[2][32];
    std::snprintf(buf[0], sizeof buf[0], "%016llx",
                  static_cast<unsigned long long>(r.start_fingerprint));
    std::snprintf(buf[1], sizeof buf[1], "%016llx",
                  static_cast<unsigned long long>(r.target_fingerprint));
    return Json{
        {"pass", r.pass},
        {"failing_item", r.failing_item},
        {"reason", r.reason},
        {"word_lengths", r.word_lengths},
        {"start_fingerprint", buf[0]},
        {"target_fingerprint", buf[1]},
        {"last_word", r.last_word},
    };
}

Json run_record(const std::string& command, Json params, Json values, Json reference,
                double tolerance, bool pass, Json diagnostics, std::uint64_t seed) {
    return Json{
        {"schema", "commdet-report/1"},
        {"command", command},
        {"params", std::move(params)},
        {"values", std::move(values)},
        {"reference", std::move(reference)},
        {"tolerance", tolerance},
        {"pass", pass},
        {"diagnostics", std::move(diagnostics)},
        {"seconds", 0.0},
        {"seed", seed},
    };
}

} // namespace commdet
