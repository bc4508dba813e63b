#ifndef EVERCRED_REGISTRAR_HPP
#define EVERCRED_REGISTRAR_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evercred/commitment.hpp"
#include "evercred/kdf.hpp"
#include "evercred/rng.hpp"
#include "evercred/schnorr.hpp"
#include "evercred/seal.hpp"
#include "evercred/wire.hpp"

namespace evercred {

enum class RegistrarPhase { open, closed, published };

struct RegistrarOptions {
    bool retention = false;      // keep secrets after delivery (publicly known policy)
    bool adversarial = false;    // unlocks duplicate_credentials
    bool passcode_mode = false;  // deliver a passcode instead of (s, t)
};

// What travels over the confidential channel in direct mode. The voter
// recomputes p = g^s and rho = Comm(H(vid), t) locally.
struct CredentialPackage {
    std::string vid;
    Scalar signing_key;  // s
    Scalar opening;      // t

    void wipe() {
        signing_key.wipe();
        opening.wipe();
    }
};

// Passcode-mode delivery to the voter.
struct PasscodeDelivery {
    std::string vid;
    Passcode passcode;  // tau
};

// Passcode-mode delivery to the voting server. Holds no tau, no seal key,
// no plaintext s or t.
struct ServerProvisioningRecord {
    std::string vid;
    Bytes login_password_hash;
    SealedCredentials sealed;  // s-bar, t-bar
};

// Everything generate_credentials produces; callers outside the registrar see
// it only during delivery.
struct GeneratedCredentials {
    Scalar signing_key;          // s
    Element verification_key;    // p
    Scalar opening;              // t
    Commitment reference;        // rho
};

// Generates per-voter credentials and anonymized references, publishes the
// registry, and delivers secrets over an assumed-confidential in-process
// channel (tappable for adversarial scenarios). Single-owner stateful actor;
// callers serialize access.
class Registrar {
  public:
    Registrar(GroupParams params, uint64_t seed, RegistrarOptions opts = {});

    // Samples s and t for a new voter and records (p, rho) for publication.
    // Resamples t (logged) on the rare toy-group event that rho collides
    // with an already-issued reference, so registry lookups stay unambiguous.
    // Throws on duplicate vid or when registration is closed.
    GeneratedCredentials generate_credentials(const std::string& vid);

    // Direct mode: hands (s, t) to the voter and erases the registrar copy
    // unless the retention policy keeps it. Re-delivery works only under
    // retention and is logged.
    CredentialPackage deliver_and_erase(const std::string& vid);

    // Passcode mode: one call produces both deliveries. The voter gets tau;
    // the server gets the hashed login password plus sealed (s, t). The
    // registrar erases tau, the seal key, s and t afterwards (same retention
    // escape hatch as above).
    std::pair<PasscodeDelivery, ServerProvisioningRecord> provision_passcode_mode(
        const std::string& vid);

    // Adversarial: vid_b receives vid_a's exact credentials and the registry
    // carries a single shared record. Unavailable in honest mode.
    void duplicate_credentials(const std::string& vid_a, const std::string& vid_b);

    void close_registration();
    std::vector<RegistryRecord> publish_registry(OrderPolicy policy);
    std::string export_registry(OrderPolicy policy);

    RegistrarPhase phase() const { return phase_; }
    bool is_registered(const std::string& vid) const { return voters_.contains(vid); }
    bool has_secret_material_for(const std::string& vid) const;

    // Full serialization of registrar state, for the erasure oracle.
    std::string state_dump() const;
    const std::vector<std::string>& audit_log() const { return log_; }

    // Adversary hook on the confidential channel; observes every delivery.
    void set_channel_tap(std::function<void(const CredentialPackage&)> tap);
    void set_passcode_tap(std::function<void(const PasscodeDelivery&)> tap);

  private:
    struct VoterEntry {
        GeneratedCredentials creds;
        bool delivered = false;
        bool erased = false;
        std::optional<Passcode> passcode;  // retained only under the retention policy
    };

    void log(std::string line);
    void require_phase(RegistrarPhase expect, const char* op) const;
    VoterEntry& entry_for(const std::string& vid);
    void erase_secrets(VoterEntry& e, const std::string& vid);

    GroupParams params_;
    RegistrarOptions opts_;
    Rng rng_;
    RegistrarPhase phase_ = RegistrarPhase::open;
    std::map<std::string, VoterEntry> voters_;
    std::map<std::string, std::string> reference_owner_;  // rho hex -> vid (issuance bookkeeping)
    std::vector<std::string> log_;
    std::function<void(const CredentialPackage&)> channel_tap_;
    std::function<void(const PasscodeDelivery&)> passcode_tap_;
};

}  // namespace evercred

#endif
