#ifndef EVERCRED_SECOND_DEVICE_HPP
#define EVERCRED_SECOND_DEVICE_HPP

#include <optional>
#include <string>

#include "evercred/codebook.hpp"
#include "evercred/voting_server.hpp"

namespace evercred {

struct AuditReport {
    bool fetched = false;
    std::string fetch_error;
    // nullopt when the baseline device skips the clash check entirely.
    std::optional<bool> clash_check;
    bool plaintext_found = false;
    std::optional<size_t> choice;
    bool ack_valid = false;
    bool fingerprint_match = false;
    bool pass = false;

    std::string to_text() const;  // key=value lines for the harness
};

// Ballot-audit application. Stateless across audits: it keeps configuration
// only, never the opening or the encryption randomness.
class SecondDevice {
  public:
    SecondDevice(GroupParams params, Codebook codebook, Element election_pk,
                 Element server_ack_key, bool baseline = false);

    // Authenticates, fetches the voter's ballot and receipt, then checks:
    // (1) the fetched reference opens to this voter's identity under the
    //     payload opening (the clash check; skipped by baseline devices),
    // (2) exactly one codebook entry re-encrypts to the fetched ciphertext
    //     under the payload randomness (plaintext determination),
    // (3) the acknowledgement verifies, and
    // (4) the payload fingerprint matches the fetched ballot.
    // Overall PASS iff all applied checks hold. Throws std::invalid_argument
    // when the payload does not parse.
    AuditReport audit(VotingServer& server, const std::string& vid, const std::string& password,
                      const std::optional<std::string>& second_factor,
                      const std::string& payload_line);

    std::string state_dump() const;

  private:
    GroupParams params_;
    Codebook codebook_;
    Element election_pk_;
    Element server_ack_key_;
    bool baseline_;
};

}  // namespace evercred

#endif
