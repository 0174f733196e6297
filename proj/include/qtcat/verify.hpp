#ifndef QTCAT_VERIFY_HPP
#define QTCAT_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

namespace qtcat {

inline constexpr const char* kToolVersion = "qtcat 1.0.0";

/// One verified identity instance: canonical text of both sides and the
/// outcome.  pass is textual equality of lhs and rhs (canonical forms make
/// that sound).
struct CaseRecord {
    std::string case_id;
    std::string lhs, rhs;
    bool pass = false;
    double ms = 0.0;
};

struct Report {
    std::string suite;
    std::string params;
    std::string tool_version = kToolVersion;
    std::vector<CaseRecord> cases;
    std::vector<std::string> warnings;

    int total() const { return static_cast<int>(cases.size()); }
    int passed() const;
    int failed() const { return total() - passed(); }
    bool all_pass() const { return failed() == 0 && !cases.empty(); }

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

struct VerifyOptions {
    int jobs = 1;
};

/// Main comparison: for every n <= max_n, ell <= n-1, alpha |= n-ell and
/// 0 <= k <= |alpha|-1, the decorated-path generating polynomial equals the
/// hook Schur coefficient of Delta_{h_ell} nabla C_alpha.
Report verify_main(int max_n, const VerifyOptions& opt = {});

/// Combinatorial layer: decorated-path counts, rotation bijection roundtrips
/// with the b-sequence law, and the first-part recurrences.
Report verify_comb(int max_n, const VerifyOptions& opt = {});

/// Symmetric-function layer: the operator recurrence sweep, the kernel
/// two-route agreement, the three expansion lemmas, and the coefficient
/// recurrence.
Report verify_sf(const VerifyOptions& opt = {});

/// Macdonald toolkit invariants up to max_n (orthogonality, hook eigenvalues,
/// Pieri relations and summations, reciprocity, creation-operator relations,
/// adjointness).
Report verify_macdonald(int max_n, const VerifyOptions& opt = {});

struct CacheManifest {
    std::string version;
    std::map<std::string, std::string> digests;  // file -> hex digest
    std::vector<std::string> warnings;
};

/// Ensures tables 1..max_n exist in dir (building what is missing), verifying
/// digests of anything loaded; returns the resulting manifest.
CacheManifest cache_io(const std::string& dir, int max_n);

}  // namespace qtcat

#endif
