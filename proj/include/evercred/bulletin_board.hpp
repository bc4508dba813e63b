#ifndef EVERCRED_BULLETIN_BOARD_HPP
#define EVERCRED_BULLETIN_BOARD_HPP

#include <string>
#include <vector>

#include "evercred/group.hpp"

namespace evercred {

// Universal checks any observer can run against the two published artifacts.
// Works on the serialized file formats alone; no in-memory state is shared
// with the voting server, and the CLI runs these in a separate process.

struct Violation {
    uint64_t seq = 0;  // ballot box sequence number, 0 for file-level issues
    std::string code;
    std::string detail;
};

struct VerificationReport {
    std::vector<Violation> violations;
    std::vector<std::string> parse_errors;
    size_t entries_checked = 0;

    bool clean() const { return violations.empty() && parse_errors.empty(); }
    std::string to_text() const;
};

// Per entry: (i) its reference appears in the registry, (ii) its signature
// verifies under that registry key, (iii) no reference occurs twice (the
// no-revoting reading; pass check_duplicates=false under last-counts).
VerificationReport verify_eligibility(const std::string& registry_text,
                                      const std::string& ballot_box_text,
                                      bool check_duplicates = true);

struct LeakReport {
    std::vector<std::string> findings;

    bool clean() const { return findings.empty(); }
    std::string to_text() const;
};

// Scans both artifacts for voter identifiers, identity hash scalars, and
// known reference openings. Value-equality scans only run when scalars are
// at least 4 bytes wide; below that (the toy group) byte values collide by
// chance and equality carries no signal.
LeakReport scan_privacy_leakage(const std::string& registry_text,
                                const std::string& ballot_box_text,
                                const std::vector<std::string>& vids,
                                const std::vector<Scalar>& known_openings,
                                const GroupParams& params);

}  // namespace evercred

#endif
