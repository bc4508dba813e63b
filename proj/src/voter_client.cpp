#include "evercred/voter_client.hpp"

#include <sstream>
#include <stdexcept>

#include "evercred/hash.hpp"
#include "evercred/seal.hpp"

namespace evercred {

VoterClient::VoterClient(std::string vid, GroupParams params, Codebook codebook,
                         Element election_pk, Element server_ack_key, uint64_t seed,
                         bool baseline)
    : vid_(std::move(vid)),
      params_(std::move(params)),
      codebook_(std::move(codebook)),
      election_pk_(election_pk),
      server_ack_key_(server_ack_key),
      rng_(Rng::seeded(seed).child("client/" + vid_)),
      baseline_(baseline) {}

void VoterClient::load_credentials(CredentialPackage package) {
    if (package.vid != vid_) throw std::invalid_argument("credential package for another voter");
    credentials_ = std::move(package);
}

std::pair<Ballot, AuditPayload> VoterClient::create_ballot(size_t choice_index) {
    if (!credentials_) throw std::logic_error("no credentials loaded");
    const Element& plaintext = codebook_.at(choice_index);  // throws on bad index

    Scalar r = rng_.nonzero_scalar(params_);
    Ballot ballot;
    ballot.choice_ct = elgamal_encrypt(election_pk_, plaintext, r, params_);
    ballot.reference = commit(vid_scalar(vid_, params_), credentials_->opening, params_);
    SigningKeypair key{credentials_->signing_key,
                       schnorr_public_key(credentials_->signing_key, params_)};
    ballot.sig = schnorr_sign(key, ballot_sig_message(ballot.choice_ct, ballot.reference, params_),
                              rng_, params_);
    key.wipe();

    AuditPayload payload;
    payload.opening = credentials_->opening;
    payload.enc_randomness = r;
    payload.fingerprint = ballot_fingerprint(ballot, params_);
    r.wipe();
    return {ballot, payload};
}

bool VoterClient::registry_self_check(const std::vector<RegistryRecord>& registry) const {
    Element my_key = schnorr_public_key(credentials_->signing_key, params_);
    Commitment my_ref = commit(vid_scalar(vid_, params_), credentials_->opening, params_);
    for (const auto& rec : registry)
        if (rec.verification_key == my_key && rec.reference == my_ref) return true;
    return false;
}

VoterClient::CastOutcome VoterClient::cast_with_session(
    VotingServer& server, SessionId session, size_t choice_index,
    const std::vector<RegistryRecord>& registry) {
    CastOutcome out;
    if (!registry_self_check(registry)) {
        out.status = CastOutcome::Status::registry_mismatch;
        return out;
    }

    auto [ballot, payload] = create_ballot(choice_index);
    std::optional<Scalar> opening;
    if (!baseline_) opening = credentials_->opening;  // baseline clients omit t
    CastResult result = server.validate_and_cast(session, ballot, std::move(opening));

    if (!result.accepted) {
        out.status = CastOutcome::Status::rejected;
        out.reject_reason = result.reason;
        payload.wipe();
        return out;
    }

    out.status = CastOutcome::Status::accepted;
    out.seq = result.seq;
    out.ack = result.ack;
    out.receipt_valid = verify_receipt(result.ack, ballot, server_ack_key_, params_);
    out.audit_payload_line = payload.serialize(params_);

    // QR displayed; nothing secret stays on this device.
    payload.wipe();
    wipe_secrets();
    return out;
}

VoterClient::CastOutcome VoterClient::cast(VotingServer& server, const std::string& password,
                                           const std::optional<std::string>& second_factor,
                                           size_t choice_index,
                                           const std::vector<RegistryRecord>& registry) {
    if (!credentials_) throw std::logic_error("no credentials loaded");
    CastOutcome out;
    auto session = server.authenticate(vid_, password, second_factor);
    if (!session) {
        out.status = CastOutcome::Status::auth_failed;
        return out;
    }
    return cast_with_session(server, *session, choice_index, registry);
}

VoterClient::CastOutcome VoterClient::passcode_cast(
    VotingServer& server, const Passcode& passcode,
    const std::optional<std::string>& second_factor, size_t choice_index,
    const std::vector<RegistryRecord>& registry) {
    CastOutcome out;
    DerivedSecrets derived = derive_from_passcode(passcode);
    auto session = server.authenticate(vid_, derived.login_password, second_factor);
    if (!session) {
        derived.wipe();
        out.status = CastOutcome::Status::auth_failed;
        return out;
    }

    SealedCredentials sealed = server.retrieve_sealed_credentials(*session);
    CredentialPackage package;
    package.vid = vid_;
    try {
        Bytes s_bytes = unseal(derived.seal_key, sealed.signing_key);
        Bytes t_bytes = unseal(derived.seal_key, sealed.opening);
        package.signing_key = params_.decode_scalar(s_bytes);
        package.opening = params_.decode_scalar(t_bytes);
        wipe(s_bytes);
        wipe(t_bytes);
    } catch (const IntegrityError&) {
        derived.wipe();
        out.status = CastOutcome::Status::unseal_failed;
        return out;
    }
    derived.wipe();

    load_credentials(std::move(package));
    return cast_with_session(server, *session, choice_index, registry);
}

void VoterClient::wipe_secrets() {
    if (credentials_) {
        credentials_->wipe();
        credentials_.reset();
    }
}

std::string VoterClient::state_dump() const {
    std::ostringstream out;
    out << "actor=voter-client\nvid=" << vid_ << "\n";
    out << "baseline=" << baseline_ << "\n";
    if (credentials_) {
        out << "credentials.signing_key=" << params_.scalar_hex(credentials_->signing_key) << "\n";
        out << "credentials.opening=" << params_.scalar_hex(credentials_->opening) << "\n";
    } else {
        out << "credentials=<none>\n";
    }
    return out.str();
}

}  // namespace evercred
