#include "gpe/steppers_config.hpp"

namespace gpe {

namespace {

struct NameEntry {
    SchemeKind kind;
    const char* name;
};

constexpr NameEntry kNames[] = {
    {SchemeKind::ImplicitEuler, "implicit-euler"},
    {SchemeKind::CrankNicolson, "crank-nicolson"},
    {SchemeKind::ConservativeCN, "conservative-cn"},
    {SchemeKind::AB_FD_implicit, "ab-fd-implicit"},
    {SchemeKind::AB_FD_explicit, "ab-fd-explicit"},
    {SchemeKind::TSSP, "tssp"},
    {SchemeKind::AB_spec_spec, "ab-spec-spec"},
    {SchemeKind::AB_spec_FD, "ab-spec-fd"},
    {SchemeKind::AB_FD_spec, "ab-fd-spec"},
    {SchemeKind::AB_FD_FD, "ab-fd-fd"},
    {SchemeKind::ABA_spec, "aba-spec"},
    {SchemeKind::BAB_spec, "bab-spec"},
    {SchemeKind::ABA_CN, "aba-cn"},
    {SchemeKind::ABA_iCN, "aba-icn"},
};

}  // namespace

std::string scheme_name(SchemeKind kind) {
    for (const NameEntry& e : kNames) {
        if (e.kind == kind) return e.name;
    }
    return "unknown";
}

std::optional<SchemeKind> parse_scheme(const std::string& name) {
    for (const NameEntry& e : kNames) {
        if (name == e.name) return e.kind;
    }
    return std::nullopt;
}

std::vector<SchemeKind> all_schemes() {
    std::vector<SchemeKind> out;
    for (const NameEntry& e : kNames) out.push_back(e.kind);
    return out;
}

}  // namespace gpe
