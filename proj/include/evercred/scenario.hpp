#ifndef EVERCRED_SCENARIO_HPP
#define EVERCRED_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "evercred/bulletin_board.hpp"
#include "evercred/second_device.hpp"
#include "evercred/voter_client.hpp"

namespace evercred {

enum class Profile { test_small, production };

GroupParams profile_params(Profile p);
std::string profile_name(Profile p);
Profile profile_from_name(std::string_view name);  // throws

// Scenario definitions are data: this struct round-trips through JSON so new
// adversary combinations come from config files, not code changes.
struct ScenarioConfig {
    std::string scenario = "honest";
    size_t voters = 10;
    size_t choices = 3;
    CredentialMode mode = CredentialMode::direct;
    bool second_factor = false;
    RevotePolicy revote = RevotePolicy::forbidden;
    Profile profile = Profile::test_small;
    uint64_t seed = 1;
    bool baseline = false;

    static ScenarioConfig from_json(const std::string& text);  // throws on bad config
    std::string to_json() const;
    std::string describe() const;  // one key=value header line
};

struct ScenarioResult {
    bool ok = false;
    std::string report;
};

// Dispatch by scenario name: honest | clash | cross-voting | stuffing-matrix |
// everlasting-privacy. Reports are byte-identical across runs for a fixed
// config.
ScenarioResult run_scenario(const ScenarioConfig& config);

ScenarioResult run_honest_election(const ScenarioConfig& config);
ScenarioResult run_clash_attack(const ScenarioConfig& config);
ScenarioResult run_cross_voting(const ScenarioConfig& config);
ScenarioResult run_ballot_stuffing_matrix(const ScenarioConfig& config);
ScenarioResult run_everlasting_privacy_demo(const ScenarioConfig& config);

// Deterministic voter identifiers whose identity hashes are pairwise distinct
// mod q. In the toy group (q=11) random names collide, which would let a
// cross-voting ballot slip past the reference check; picking non-colliding
// identifiers is what "distinct identities" means at that scale. At most
// q - 1 identifiers exist; throws beyond that.
std::vector<std::string> pick_test_vids(size_t n, const GroupParams& params);

// One voter's view of the election plus the oracle copies the harness keeps
// for assertions (the protocol actors themselves discard these).
struct VoterActor {
    std::string vid;
    std::string password;
    std::optional<std::string> second_factor;
    std::optional<CredentialPackage> package;  // direct mode
    std::optional<Passcode> passcode;          // passcode mode
    size_t choice = 0;
    bool cast_accepted = false;
    std::string payload_line;
    uint64_t seq = 0;
};

// Wires registrar, server, clients and devices for one election run.
// Casts run sequentially in voter order so reports replay byte-identically.
class ElectionHarness {
  public:
    ElectionHarness(const ScenarioConfig& config, bool adversarial_registrar = false,
                    bool adversarial_server = false);

    GroupParams params;
    Codebook codebook;
    ElGamalKeypair election_key;  // trustee key held by the harness for tallying
    Registrar registrar;
    VotingServer server;
    std::vector<VoterActor> voters;
    std::vector<RegistryRecord> registry;
    std::string registry_export;

    // Registers, provisions and delivers for each vid, then closes
    // registration, publishes the registry and loads it into the server.
    void setup(const std::vector<std::string>& vids, OrderPolicy policy = OrderPolicy::sorted);

    // Same, but the voter at duplicate_index receives the credentials of the
    // voter at source_index instead of their own (adversarial registrar).
    void setup_with_duplicate(const std::vector<std::string>& vids, size_t source_index,
                              size_t duplicate_index, OrderPolicy policy = OrderPolicy::sorted);

    VoterClient make_client(size_t voter_index) const;
    SecondDevice make_device() const;

    VoterClient::CastOutcome cast(size_t voter_index, size_t choice);
    AuditReport audit(size_t voter_index);
    AuditReport audit_with_payload(size_t voter_index, const std::string& payload_line);

    std::vector<size_t> tally() const;          // per-choice counts from trustee decryption
    std::vector<size_t> cast_multiset() const;  // per-choice counts of accepted casts

    const ScenarioConfig& config() const { return config_; }
    uint64_t sub_seed(std::string_view label) const;

  private:
    void provision_voter(VoterActor& actor);

    ScenarioConfig config_;
};

}  // namespace evercred

#endif
