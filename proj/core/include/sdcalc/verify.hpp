#pragma once

#include "sdcalc/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdcalc {

/// Outcome of one verified identity instance.
struct IdentityReport {
    std::string identity;
    int d = 0;
    long m = -1;  ///< -1 when not applicable
    long n = -1;  ///< -1 when not applicable
    bool pass = false;
    bool audit = false;  ///< audit records flag paper errata, not code failures
    std::string detail;  ///< witness values on failure / mismatch

    bool operator==(const IdentityReport&) const = default;
};

/// Parameter ranges for a verification run. Unset fields fall back to each
/// identity's own default range (the ranges the identities are known to hold
/// on exactly).
struct VerifyOptions {
    std::optional<int> d_min;
    std::optional<int> d_max;
    std::optional<long> m_min;
    std::optional<long> m_max;
    std::optional<long> n_max;
};

/// Canonical names of every registered verification, in run order.
/// The Bernoulli catalogue also answers to the short aliases "I1".."I10".
std::vector<std::string> identity_names();

bool is_identity_name(std::string_view name);

/// Runs one named verification. Throws std::domain_error for an unknown name.
std::vector<IdentityReport> verify_identity(std::string_view name,
                                            const VerifyOptions& options = {});

/// Runs the whole registry, audit included.
std::vector<IdentityReport> verify_all(const VerifyOptions& options = {});

/// Compares computed plain S_d-Bernoulli numbers (d = 2..5, n = 0..4, by both
/// methods) against the published tables. Mismatches are audit records, not
/// failures; the published tables contain three known errata.
std::vector<IdentityReport> audit_paper_tables();

}  // namespace sdcalc
