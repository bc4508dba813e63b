#ifndef EVERCRED_VOTING_SERVER_HPP
#define EVERCRED_VOTING_SERVER_HPP

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evercred/ballot.hpp"
#include "evercred/registrar.hpp"
#include "evercred/rng.hpp"
#include "evercred/wire.hpp"

namespace evercred {

enum class CredentialMode { direct, passcode };
enum class RevotePolicy { forbidden, last_counts };

struct ServerOptions {
    CredentialMode mode = CredentialMode::direct;
    bool second_factor = false;
    RevotePolicy revote = RevotePolicy::forbidden;
    // Reproduces the plain anonymous-credential system: the reference
    // consistency check is skipped at cast time.
    bool baseline_anon_creds = false;
    // Unlocks the malicious-server hooks used by attack scenarios.
    bool adversarial = false;
};

enum class RejectReason { commitment_mismatch, unknown_reference, bad_signature, revote_forbidden };

std::string reject_reason_name(RejectReason r);

struct CastResult {
    bool accepted = false;
    std::optional<RejectReason> reason;
    uint64_t seq = 0;
    Acknowledgement ack;  // valid only when accepted
};

using SessionId = uint64_t;

// Credentials the server issues out of band in direct mode.
struct LoginCredentials {
    std::string password;
    std::optional<std::string> second_factor;
};

// Authenticates voters, applies the two ballot-validation checks, enforces
// the opening discard contract, and keeps the append-only ballot box.
// Casts are serialized behind one mutex (single-writer box); exports and
// audit fetches take the same lock and return consistent snapshots.
class VotingServer {
  public:
    VotingServer(GroupParams params, ServerOptions opts, uint64_t seed);

    const ServerOptions& options() const { return opts_; }
    Element ack_verification_key() const { return ack_key_.vk; }

    // --- provisioning -----------------------------------------------------
    LoginCredentials provision_login(const std::string& vid);  // direct mode
    // Passcode mode; returns the independently issued second factor, if on.
    std::optional<std::string> accept_provisioning_record(ServerProvisioningRecord record);
    void load_registry(std::vector<RegistryRecord> records);  // throws on duplicate rho

    // --- protocol ---------------------------------------------------------
    // Single failure surface toward callers: nullopt for unknown vid, wrong
    // password and wrong/missing second factor alike (anti-enumeration).
    // The distinction lives only in the internal log.
    std::optional<SessionId> authenticate(const std::string& vid, const std::string& password,
                                          const std::optional<std::string>& second_factor);

    // The two validation checks, in order: (a) rho == Comm(H(session vid), t)
    // unless baseline mode, (b) rho present in the registry, (c) signature
    // valid under the registry key for rho, (d) revote policy. The supplied
    // opening lives in the session's transient slot for the duration of this
    // call and is destroyed on every exit path.
    CastResult validate_and_cast(SessionId session, const Ballot& ballot,
                                 std::optional<Scalar> opening);

    // Returns the entry this voter's cast produced plus its receipt. Throws
    // std::out_of_range when no ballot exists for the session's vid.
    std::pair<BallotBoxEntry, Acknowledgement> fetch_ballot_for_audit(SessionId session);

    SealedCredentials retrieve_sealed_credentials(SessionId session);  // passcode mode

    std::string export_ballot_box() const;
    std::vector<BallotBoxEntry> ballot_box_snapshot() const;

    // --- introspection ----------------------------------------------------
    std::string state_dump() const;
    bool session_transient_slot_empty(SessionId session) const;
    bool has_voted(const std::string& vid) const;
    size_t failed_auth_count(const std::string& vid) const;

    // --- malicious-server hooks (adversarial option only) ------------------
    // Redirects vid_from's audit fetch to vid_to's ballot.
    void set_audit_redirect(const std::string& vid_from, const std::string& vid_to);
    // Session without authentication: the colluding-server primitive.
    SessionId forge_session(const std::string& vid);
    // Corrupts a byte of every acknowledgement signature before returning it.
    void set_tamper_acks(bool on);
    // Colluding-server disclosure of its second-factor store.
    std::optional<std::string> leak_second_factor(const std::string& vid);

  private:
    struct AuthRecord {
        Bytes password_hash;
        std::optional<std::string> second_factor;
        size_t failed_attempts = 0;
    };
    struct Session {
        std::string vid;
        uint64_t created_tick = 0;
        std::optional<Scalar> transient_opening;
    };

    void log(std::string line);
    Acknowledgement make_ack(const Ballot& ballot);
    CastResult reject(Session& session, RejectReason reason);

    GroupParams params_;
    ServerOptions opts_;
    Rng rng_;
    SigningKeypair ack_key_;

    mutable std::mutex mu_;
    uint64_t tick_ = 0;
    SessionId next_session_ = 1;
    uint64_t next_seq_ = 1;

    std::map<std::string, AuthRecord> auth_;
    std::map<std::string, SealedCredentials> sealed_store_;  // passcode mode
    std::vector<RegistryRecord> registry_;
    std::map<std::string, size_t> registry_by_reference_;  // rho hex -> index
    std::map<SessionId, Session> sessions_;
    std::vector<BallotBoxEntry> box_;
    std::map<uint64_t, Acknowledgement> acks_by_seq_;
    std::set<std::string> voted_;
    std::set<std::string> used_references_;
    // Volatile link for audit fetches only; excluded from every export.
    std::map<std::string, uint64_t> audit_index_;
    std::map<std::string, std::string> audit_redirect_;
    bool tamper_acks_ = false;
    std::vector<std::string> log_;
};

}  // namespace evercred

#endif
