#include "weylstab/stab.hpp"

#include <future>

namespace weylstab::stab {

std::string_view to_string(LevelStatus s) {
    switch (s) {
    case LevelStatus::Ok: return "ok";
    case LevelStatus::Degenerate: return "degenerate";
    case LevelStatus::Failed: return "failed";
    }
    return "failed";
}

std::string_view to_string(Certificate c) { return c == Certificate::Certified ? "CERTIFIED" : "EMPIRICAL"; }

LevelOutcome run_level(const charvar::ModulePresentation& P, std::uint32_t n, const Limits& limits) {
    LevelOutcome out;
    out.level = n;
    try {
        out.data = charvar::char_data(P, n, limits);
    } catch (const Error& e) {
        out.status = e.code() == ErrorCode::DegenerateLattice ? LevelStatus::Degenerate : LevelStatus::Failed;
        out.error = e.code();
        out.message = e.what();
    }
    return out;
}

long certified_n0(const charvar::ModulePresentation& P, const Limits& limits) {
    auto gr = charvar::integral_initial_module(P, Grading::Order, limits);
    auto ctx = cpoly::local_context(P.algebra.prime, P.algebra.nvars(), cpoly::degrevlex(), limits);
    return cpoly::torsion_exponent(ctx, gr);
}

ScanReport scan(const charvar::ModulePresentation& P, std::uint32_t n_lo, std::uint32_t n_hi, const Limits& limits,
                bool parallel) {
    P.validate();
    if (n_lo > n_hi || n_hi > kLevelCeiling)
        fail(ErrorCode::InvalidArgument, "scan window must satisfy 0 <= lo <= hi <= " + std::to_string(kLevelCeiling));
    ScanReport r;
    r.n_lo = n_lo;
    r.n_hi = n_hi;

    if (parallel) {
        std::vector<std::future<LevelOutcome>> jobs;
        for (std::uint32_t n = n_lo; n <= n_hi; ++n)
            jobs.push_back(std::async(std::launch::async, [&P, n, limits] { return run_level(P, n, limits); }));
        for (auto& j : jobs)
            r.levels.push_back(j.get());
    } else {
        for (std::uint32_t n = n_lo; n <= n_hi; ++n)
            r.levels.push_back(run_level(P, n, limits));
    }

    // plateau: longest suffix of matching nondegenerate levels
    for (std::size_t k = r.levels.size(); k-- > 0;) {
        const auto& L = r.levels[k];
        if (L.status != LevelStatus::Ok)
            break;
        if (!L.data->same_data(*r.levels.back().data))
            break;
        r.detected_n0 = L.level;
    }

    try {
        r.certified_n0 = certified_n0(P, limits);
    } catch (const Error& e) {
        r.certificate_note = e.what();
    }

    for (const auto& L : r.levels)
        if (L.status == LevelStatus::Ok && (!r.tower_dimension || L.data->dimension > *r.tower_dimension))
            r.tower_dimension = L.data->dimension;

    if (r.detected_n0 && r.certified_n0) {
        long start = std::max<long>(*r.certified_n0 + 1, n_lo);
        r.soundness_alarm = static_cast<long>(*r.detected_n0) > start;
    }
    try {
        r.length_bound = length_bound(r);
    } catch (const Error& e) {
        r.length_bound_note = e.what();
    }
    return r;
}

LengthBound length_bound(const ScanReport& report) {
    if (!report.detected_n0)
        fail(ErrorCode::InvalidArgument, "no plateau detected in the scan window");
    const auto& top = *report.levels.back().data;
    if (top.hilbert.is_zero())
        fail(ErrorCode::InvalidArgument, "the module vanishes on the plateau");
    if (!top.holonomic)
        fail(ErrorCode::NotHolonomicAtSomeLevel, "not holonomic on the plateau (dimension " +
                                                     std::to_string(top.dimension) + ")");
    if (!top.radical_verified)
        fail(ErrorCode::UnsupportedRadical, "multiplicity rests on an unverified radical");
    LengthBound b{top.multiplicity, Certificate::Empirical};
    if (report.certified_n0 && !report.soundness_alarm) {
        long start = std::max<long>(*report.certified_n0 + 1, report.n_lo);
        if (start <= static_cast<long>(report.n_hi))
            b.certificate = Certificate::Certified;
    }
    return b;
}

long tower_dimension(const ScanReport& report) {
    if (!report.tower_dimension)
        fail(ErrorCode::AllLevelsDegenerate, "no nondegenerate level in the scan window");
    return *report.tower_dimension;
}

} // namespace weylstab::stab
