#include "evercred/voting_server.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "evercred/hash.hpp"
#include "evercred/kdf.hpp"

namespace evercred {

std::string reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::commitment_mismatch: return "commitment-mismatch";
        case RejectReason::unknown_reference: return "unknown-reference";
        case RejectReason::bad_signature: return "bad-signature";
        case RejectReason::revote_forbidden: return "revote-forbidden";
    }
    return "?";
}

VotingServer::VotingServer(GroupParams params, ServerOptions opts, uint64_t seed)
    : params_(std::move(params)), opts_(opts), rng_(Rng::seeded(seed)) {
    Rng key_rng = rng_.child("ack-key");
    ack_key_ = schnorr_keygen(key_rng, params_);
    log("server up: mode=" +
        std::string(opts_.mode == CredentialMode::direct ? "direct" : "passcode") +
        " 2fa=" + (opts_.second_factor ? std::string("on") : std::string("off")) +
        " revote=" + (opts_.revote == RevotePolicy::forbidden ? std::string("forbidden")
                                                              : std::string("last-counts")) +
        (opts_.baseline_anon_creds ? " baseline-anon-creds" : ""));
}

void VotingServer::log(std::string line) { log_.push_back(std::move(line)); }

LoginCredentials VotingServer::provision_login(const std::string& vid) {
    std::lock_guard lock(mu_);
    if (opts_.mode != CredentialMode::direct)
        throw std::logic_error("provision_login is a direct-mode operation");
    if (auth_.contains(vid)) throw std::invalid_argument("login already provisioned: " + vid);
    Rng cred_rng = rng_.child("login/" + vid);
    LoginCredentials creds;
    creds.password = to_hex(cred_rng.bytes(12));
    if (opts_.second_factor) creds.second_factor = to_hex(cred_rng.bytes(8));
    auth_.emplace(vid, AuthRecord{hash_login_password(vid, creds.password),
                                  creds.second_factor, 0});
    log("provisioned login vid=" + vid);
    return creds;
}

std::optional<std::string> VotingServer::accept_provisioning_record(
    ServerProvisioningRecord record) {
    std::lock_guard lock(mu_);
    if (opts_.mode != CredentialMode::passcode)
        throw std::logic_error("provisioning records belong to passcode mode");
    if (auth_.contains(record.vid))
        throw std::invalid_argument("record already provisioned: " + record.vid);
    std::optional<std::string> token;
    if (opts_.second_factor) {
        Rng cred_rng = rng_.child("2fa/" + record.vid);
        token = to_hex(cred_rng.bytes(8));
    }
    auth_.emplace(record.vid, AuthRecord{record.login_password_hash, token, 0});
    sealed_store_.emplace(record.vid, std::move(record.sealed));
    log("accepted provisioning record vid=" + record.vid);
    return token;
}

void VotingServer::load_registry(std::vector<RegistryRecord> records) {
    std::lock_guard lock(mu_);
    registry_by_reference_.clear();
    for (size_t i = 0; i < records.size(); i++) {
        std::string rho_hex = params_.element_hex(records[i].reference.value);
        if (!registry_by_reference_.emplace(rho_hex, i).second)
            throw std::invalid_argument("registry carries duplicate reference " + rho_hex);
    }
    registry_ = std::move(records);
    log("registry loaded, records=" + std::to_string(registry_.size()));
}

std::optional<SessionId> VotingServer::authenticate(
    const std::string& vid, const std::string& password,
    const std::optional<std::string>& second_factor) {
    std::lock_guard lock(mu_);
    tick_++;
    auto it = auth_.find(vid);
    if (it == auth_.end()) {
        // Hash anyway so unknown vids behave like wrong passwords.
        hash_login_password(vid, password);
        log("auth failed (unknown vid) vid=" + vid);
        return std::nullopt;
    }
    AuthRecord& rec = it->second;
    if (hash_login_password(vid, password) != rec.password_hash) {
        rec.failed_attempts++;
        log("auth failed (bad password) vid=" + vid +
            " failures=" + std::to_string(rec.failed_attempts));
        return std::nullopt;
    }
    if (opts_.second_factor) {
        if (!second_factor || *second_factor != rec.second_factor) {
            rec.failed_attempts++;
            log("auth failed (second factor) vid=" + vid +
                " failures=" + std::to_string(rec.failed_attempts));
            return std::nullopt;
        }
    }
    SessionId id = next_session_++;
    sessions_.emplace(id, Session{vid, tick_, std::nullopt});
    log("auth ok vid=" + vid + " session=" + std::to_string(id));
    return id;
}

Acknowledgement VotingServer::make_ack(const Ballot& ballot) {
    Rng ack_rng = rng_.child("ack-nonce/" + std::to_string(next_seq_));
    Acknowledgement ack{schnorr_sign(ack_key_, ack_message(ballot, params_), ack_rng, params_)};
    if (tamper_acks_) {
        // Flip one bit of the response so the receipt no longer verifies.
        ack.sig.response = params_.reduce(ack.sig.response.v ^ 1);
    }
    return ack;
}

CastResult VotingServer::reject(Session& session, RejectReason reason) {
    log("cast rejected vid=" + session.vid + " reason=" + reject_reason_name(reason));
    CastResult r;
    r.accepted = false;
    r.reason = reason;
    return r;
}

CastResult VotingServer::validate_and_cast(SessionId session_id, const Ballot& ballot,
                                           std::optional<Scalar> opening) {
    std::lock_guard lock(mu_);
    tick_++;
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) throw std::invalid_argument("unknown session");
    Session& session = it->second;

    // The opening lives only in the transient slot and only for this call.
    session.transient_opening = std::move(opening);
    struct SlotGuard {
        Session& s;
        ~SlotGuard() {
            if (s.transient_opening) s.transient_opening->wipe();
            s.transient_opening.reset();
        }
    } guard{session};

    // (a) reference consistency against the authenticated identity
    if (!opts_.baseline_anon_creds) {
        if (!session.transient_opening ||
            !verify_commitment(ballot.reference, vid_scalar(session.vid, params_),
                               *session.transient_opening, params_))
            return reject(session, RejectReason::commitment_mismatch);
    }

    // (b) reference published in the registry
    auto reg_it = registry_by_reference_.find(params_.element_hex(ballot.reference.value));
    if (reg_it == registry_by_reference_.end())
        return reject(session, RejectReason::unknown_reference);
    const RegistryRecord& record = registry_[reg_it->second];

    // (c) signature valid under the registry key for this reference
    if (!schnorr_verify(record.verification_key,
                        ballot_sig_message(ballot.choice_ct, ballot.reference, params_),
                        ballot.sig, params_))
        return reject(session, RejectReason::bad_signature);

    // (d) revoting policy
    std::string rho_hex = params_.element_hex(ballot.reference.value);
    bool seen = voted_.contains(session.vid) || used_references_.contains(rho_hex);
    if (seen) {
        if (opts_.revote == RevotePolicy::forbidden)
            return reject(session, RejectReason::revote_forbidden);
        auto prev = audit_index_.find(session.vid);
        if (prev != audit_index_.end()) {
            uint64_t old_seq = prev->second;
            auto is_old = [&](const BallotBoxEntry& e) { return e.seq == old_seq; };
            auto old_it = std::find_if(box_.begin(), box_.end(), is_old);
            if (old_it != box_.end()) {
                used_references_.erase(params_.element_hex(old_it->ballot.reference.value));
                acks_by_seq_.erase(old_seq);
                box_.erase(old_it);
            }
            log("revote: replaced entry seq=" + std::to_string(old_seq));
        }
    }

    BallotBoxEntry entry;
    entry.seq = next_seq_;
    entry.ballot = ballot;
    entry.accepted_tick = tick_;
    Acknowledgement ack = make_ack(ballot);
    next_seq_++;

    box_.push_back(entry);
    acks_by_seq_.emplace(entry.seq, ack);
    voted_.insert(session.vid);
    used_references_.insert(rho_hex);
    audit_index_[session.vid] = entry.seq;
    log("cast accepted vid=" + session.vid + " seq=" + std::to_string(entry.seq));

    CastResult result;
    result.accepted = true;
    result.seq = entry.seq;
    result.ack = ack;
    return result;
}

std::pair<BallotBoxEntry, Acknowledgement> VotingServer::fetch_ballot_for_audit(
    SessionId session_id) {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) throw std::invalid_argument("unknown session");
    std::string vid = it->second.vid;
    auto redirect = audit_redirect_.find(vid);
    if (redirect != audit_redirect_.end()) {
        log("ADVERSARIAL: audit fetch for vid=" + vid + " redirected to vid=" + redirect->second);
        vid = redirect->second;
    }
    auto seq_it = audit_index_.find(vid);
    if (seq_it == audit_index_.end())
        throw std::out_of_range("no ballot cast for this voter");
    auto entry_it = std::find_if(box_.begin(), box_.end(),
                                 [&](const BallotBoxEntry& e) { return e.seq == seq_it->second; });
    if (entry_it == box_.end()) throw std::out_of_range("ballot entry no longer present");
    return {*entry_it, acks_by_seq_.at(seq_it->second)};
}

SealedCredentials VotingServer::retrieve_sealed_credentials(SessionId session_id) {
    std::lock_guard lock(mu_);
    if (opts_.mode != CredentialMode::passcode)
        throw std::logic_error("no sealed credentials outside passcode mode");
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) throw std::invalid_argument("unknown session");
    auto rec = sealed_store_.find(it->second.vid);
    if (rec == sealed_store_.end())
        throw std::out_of_range("no provisioning record for vid=" + it->second.vid);
    log("sealed credentials served vid=" + it->second.vid);
    return rec->second;
}

std::string VotingServer::export_ballot_box() const {
    std::lock_guard lock(mu_);
    return serialize_ballot_box(box_, params_);
}

std::vector<BallotBoxEntry> VotingServer::ballot_box_snapshot() const {
    std::lock_guard lock(mu_);
    return box_;
}

bool VotingServer::session_transient_slot_empty(SessionId session_id) const {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) throw std::invalid_argument("unknown session");
    return !it->second.transient_opening.has_value();
}

bool VotingServer::has_voted(const std::string& vid) const {
    std::lock_guard lock(mu_);
    return voted_.contains(vid);
}

size_t VotingServer::failed_auth_count(const std::string& vid) const {
    std::lock_guard lock(mu_);
    auto it = auth_.find(vid);
    return it == auth_.end() ? 0 : it->second.failed_attempts;
}

std::string VotingServer::state_dump() const {
    std::lock_guard lock(mu_);
    std::ostringstream out;
    out << "actor=voting-server\n";
    for (const auto& [vid, rec] : auth_) {
        out << "auth.vid=" << vid << "\n";
        out << "auth.password_hash=" << to_hex(rec.password_hash) << "\n";
        if (rec.second_factor) out << "auth.second_factor=" << *rec.second_factor << "\n";
        out << "auth.failed_attempts=" << rec.failed_attempts << "\n";
    }
    for (const auto& [vid, sealed] : sealed_store_) {
        out << "sealed.vid=" << vid << "\n";
        out << "sealed.signing_key=" << to_hex(sealed.signing_key.data) << "\n";
        out << "sealed.opening=" << to_hex(sealed.opening.data) << "\n";
    }
    for (const auto& rec : registry_)
        out << "registry.record=" << params_.element_hex(rec.verification_key) << ","
            << params_.element_hex(rec.reference.value) << "\n";
    for (const auto& [id, s] : sessions_) {
        out << "session.id=" << id << "\n";
        out << "session.vid=" << s.vid << "\n";
        out << "session.transient_opening="
            << (s.transient_opening ? params_.scalar_hex(*s.transient_opening)
                                    : std::string("<empty>"))
            << "\n";
    }
    for (const auto& e : box_)
        out << "box.entry=" << e.seq << "," << params_.element_hex(e.ballot.choice_ct.c1) << ","
            << params_.element_hex(e.ballot.choice_ct.c2) << ","
            << params_.element_hex(e.ballot.reference.value) << ","
            << to_hex(encode_signature(e.ballot.sig, params_)) << "\n";
    for (const auto& vid : voted_) out << "voted=" << vid << "\n";
    for (const auto& [vid, seq] : audit_index_)
        out << "audit_index=" << vid << "->" << seq << "\n";
    for (const auto& l : log_) out << "log=" << l << "\n";
    return out.str();
}

void VotingServer::set_audit_redirect(const std::string& vid_from, const std::string& vid_to) {
    std::lock_guard lock(mu_);
    if (!opts_.adversarial)
        throw std::logic_error("audit redirect unavailable on an honest server");
    audit_redirect_[vid_from] = vid_to;
}

SessionId VotingServer::forge_session(const std::string& vid) {
    std::lock_guard lock(mu_);
    if (!opts_.adversarial)
        throw std::logic_error("session forgery unavailable on an honest server");
    tick_++;
    SessionId id = next_session_++;
    sessions_.emplace(id, Session{vid, tick_, std::nullopt});
    log("ADVERSARIAL: forged session vid=" + vid + " session=" + std::to_string(id));
    return id;
}

void VotingServer::set_tamper_acks(bool on) {
    std::lock_guard lock(mu_);
    if (!opts_.adversarial)
        throw std::logic_error("ack tampering unavailable on an honest server");
    tamper_acks_ = on;
}

std::optional<std::string> VotingServer::leak_second_factor(const std::string& vid) {
    std::lock_guard lock(mu_);
    if (!opts_.adversarial)
        throw std::logic_error("second-factor disclosure unavailable on an honest server");
    auto it = auth_.find(vid);
    if (it == auth_.end()) return std::nullopt;
    return it->second.second_factor;
}

}  // namespace evercred
