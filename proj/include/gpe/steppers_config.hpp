#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gpe {

/// Model constants of i u_t = -u_xx + g |u|^(2 sigma) u.
struct ModelParams {
    double g = -1.0;      // interaction strength; g < 0 is the attractive case
    double sigma = 1.0;   // nonlinearity exponent; all validated paths use 1
};

enum class SchemeKind {
    ImplicitEuler,
    CrankNicolson,
    ConservativeCN,
    AB_FD_implicit,
    AB_FD_explicit,
    TSSP,
    AB_spec_spec,
    AB_spec_FD,
    AB_FD_spec,
    AB_FD_FD,
    ABA_spec,
    BAB_spec,
    ABA_CN,
    ABA_iCN,
};

/// Scheme selection plus the knobs of the fixed-point iterated schemes.
struct SchemeConfig {
    SchemeKind kind = SchemeKind::TSSP;
    double picard_tol = 1e-5;  // stopping bound on the l2 iterate increment
    int picard_max = 5;        // iteration cap K
};

/// Kebab-case identifier, e.g. "implicit-euler", "ab-spec-fd".
std::string scheme_name(SchemeKind kind);

/// Inverse of scheme_name; nullopt for unknown names.
std::optional<SchemeKind> parse_scheme(const std::string& name);

/// All scheme identifiers in declaration order.
std::vector<SchemeKind> all_schemes();

}  // namespace gpe
