#ifndef EVERCRED_VOTER_CLIENT_HPP
#define EVERCRED_VOTER_CLIENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "evercred/codebook.hpp"
#include "evercred/voting_server.hpp"

namespace evercred {

// First-device application: holds the voter's secrets between delivery and
// cast, builds and signs the ballot, and emits the audit payload. One client
// per voter; secrets are destroyed once the payload has been handed over.
class VoterClient {
  public:
    VoterClient(std::string vid, GroupParams params, Codebook codebook, Element election_pk,
                Element server_ack_key, uint64_t seed, bool baseline = false);

    void load_credentials(CredentialPackage package);  // consumes and wipes the source

    // Builds (c, rho, sigma) for the given choice plus the second-device
    // payload (t, r, fingerprint). Throws std::out_of_range on a bad choice
    // index and std::logic_error without credentials.
    std::pair<Ballot, AuditPayload> create_ballot(size_t choice_index);

    struct CastOutcome {
        enum class Status { accepted, auth_failed, rejected, registry_mismatch, unseal_failed };
        Status status = Status::rejected;
        std::optional<RejectReason> reject_reason;
        std::string audit_payload_line;  // the QR content; empty unless accepted
        Acknowledgement ack;
        bool receipt_valid = false;
        uint64_t seq = 0;
    };

    // Full casting flow: registry self-check, authenticate, build, submit,
    // verify the receipt, wipe secrets, surface the payload. In baseline
    // mode no opening is sent with the ballot.
    CastOutcome cast(VotingServer& server, const std::string& password,
                     const std::optional<std::string>& second_factor, size_t choice_index,
                     const std::vector<RegistryRecord>& registry);

    // Passcode-mode flow: derive secrets from tau, authenticate with the
    // derived password, pull and unseal (s, t), then cast as above.
    CastOutcome passcode_cast(VotingServer& server, const Passcode& passcode,
                              const std::optional<std::string>& second_factor,
                              size_t choice_index, const std::vector<RegistryRecord>& registry);

    const std::string& vid() const { return vid_; }
    bool has_secrets() const { return credentials_.has_value(); }
    std::string state_dump() const;

  private:
    CastOutcome cast_with_session(VotingServer& server, SessionId session, size_t choice_index,
                                  const std::vector<RegistryRecord>& registry);
    bool registry_self_check(const std::vector<RegistryRecord>& registry) const;
    void wipe_secrets();

    std::string vid_;
    GroupParams params_;
    Codebook codebook_;
    Element election_pk_;
    Element server_ack_key_;
    Rng rng_;
    bool baseline_;
    std::optional<CredentialPackage> credentials_;
};

}  // namespace evercred

#endif
