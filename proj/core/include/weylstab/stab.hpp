#pragma once

// Scans over deformation levels, stabilisation and finite-length bounds.

#include <optional>
#include <string>
#include <vector>

#include "weylstab/charvar.hpp"

namespace weylstab::stab {

inline constexpr std::uint32_t kLevelCeiling = 64;

enum class LevelStatus { Ok, Degenerate, Failed };
std::string_view to_string(LevelStatus s);

struct LevelOutcome {
    std::uint32_t level = 0;
    LevelStatus status = LevelStatus::Ok;
    std::optional<charvar::CharData> data;
    /// Set for Degenerate and Failed outcomes.
    ErrorCode error = ErrorCode::InvalidArgument;
    std::string message;
};

enum class Certificate { Certified, Empirical };
std::string_view to_string(Certificate c);

struct LengthBound {
    Integer bound = 0;
    Certificate certificate = Certificate::Empirical;
};

struct ScanReport {
    std::uint32_t n_lo = 0;
    std::uint32_t n_hi = 0;
    std::vector<LevelOutcome> levels;
    std::optional<std::uint32_t> detected_n0;
    std::optional<long> certified_n0;
    /// Why certified_n0 is absent.
    std::string certificate_note;
    std::optional<long> tower_dimension;
    std::optional<LengthBound> length_bound;
    /// Why length_bound is absent.
    std::string length_bound_note;
    /// A plateau starting after certified_n0 + 1: contradicts the certificate.
    bool soundness_alarm = false;
};

/// Level outcome with per-level errors captured.
LevelOutcome run_level(const charvar::ModulePresentation& P, std::uint32_t n, const Limits& limits = {});

/// p-torsion exponent of the order-graded integral relation module. CharData
/// is constant for levels >= certified_n0 + 1.
long certified_n0(const charvar::ModulePresentation& P, const Limits& limits = {});

/// Levels run concurrently; results merged in level order.
ScanReport scan(const charvar::ModulePresentation& P, std::uint32_t n_lo, std::uint32_t n_hi,
                const Limits& limits = {}, bool parallel = true);

/// Throws NotHolonomicAtSomeLevel, or InvalidArgument without a plateau.
LengthBound length_bound(const ScanReport& report);

/// Throws AllLevelsDegenerate.
long tower_dimension(const ScanReport& report);

} // namespace weylstab::stab
