#include "evercred/registrar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "evercred/hash.hpp"

namespace evercred {

Registrar::Registrar(GroupParams params, uint64_t seed, RegistrarOptions opts)
    : params_(std::move(params)), opts_(opts), rng_(Rng::seeded(seed)) {
    log("registrar up: profile=" + params_.name() +
        " retention=" + (opts_.retention ? std::string("on") : std::string("off")) +
        " mode=" + (opts_.passcode_mode ? std::string("passcode") : std::string("direct")));
    log("trust assumption: delivery channel is confidential and authenticates the voter");
}

void Registrar::log(std::string line) { log_.push_back(std::move(line)); }

void Registrar::require_phase(RegistrarPhase expect, const char* op) const {
    if (phase_ != expect)
        throw std::logic_error(std::string(op) + ": wrong registration phase");
}

Registrar::VoterEntry& Registrar::entry_for(const std::string& vid) {
    auto it = voters_.find(vid);
    if (it == voters_.end()) throw std::invalid_argument("unknown voter: " + vid);
    return it->second;
}

GeneratedCredentials Registrar::generate_credentials(const std::string& vid) {
    require_phase(RegistrarPhase::open, "generate_credentials");
    if (vid.empty()) throw std::invalid_argument("empty voter id");
    if (voters_.contains(vid)) throw std::invalid_argument("voter already registered: " + vid);

    // Credential randomness is keyed by vid, so the issued values do not
    // depend on registration order.
    Rng voter_rng = rng_.child("cred/" + vid);
    GeneratedCredentials creds;
    SigningKeypair kp = schnorr_keygen(voter_rng, params_);
    creds.signing_key = kp.sk;
    creds.verification_key = kp.vk;

    Scalar id = vid_scalar(vid, params_);
    auto try_claim = [&](const Scalar& opening) {
        creds.opening = opening;
        creds.reference = commit(id, opening, params_);
        std::string rho_hex = params_.element_hex(creds.reference.value);
        return reference_owner_.emplace(rho_hex, vid).second;
    };
    if (!try_claim(voter_rng.scalar(params_))) {
        // Collisions only happen in the toy group, where q is tiny. Resample
        // a few times, then sweep the remaining openings deterministically.
        log("reference collision for vid=" + vid + ", resampling opening");
        bool claimed = false;
        for (int i = 0; i < 8 && !claimed; i++) claimed = try_claim(voter_rng.scalar(params_));
        for (mpz_class step = 1; step < params_.q() && !claimed; step++)
            claimed = try_claim(params_.reduce(creds.opening.v + 1));
        if (!claimed)
            throw std::runtime_error("group too small to issue distinct references");
    }

    voters_.emplace(vid, VoterEntry{creds, false, false, std::nullopt});
    log("generated credentials vid=" + vid);
    return creds;
}

void Registrar::erase_secrets(VoterEntry& e, const std::string& vid) {
    if (opts_.retention) {
        log("retention=on: keeping secrets for vid=" + vid + " per published policy");
        return;
    }
    e.creds.signing_key.wipe();
    e.creds.opening.wipe();
    if (e.passcode) {
        std::fill(e.passcode->begin(), e.passcode->end(), '\0');
        e.passcode.reset();
    }
    e.erased = true;
    log("erased secrets vid=" + vid + " (retention=off)");
}

CredentialPackage Registrar::deliver_and_erase(const std::string& vid) {
    require_phase(RegistrarPhase::open, "deliver_and_erase");
    if (opts_.passcode_mode)
        throw std::logic_error("deliver_and_erase unavailable in passcode mode");
    VoterEntry& e = entry_for(vid);
    if (e.erased) throw std::logic_error("secrets erased for vid=" + vid);
    if (e.delivered && !opts_.retention)
        throw std::logic_error("secrets erased for vid=" + vid);
    if (e.delivered) log("re-delivery vid=" + vid + " under retention policy");

    CredentialPackage pkg{vid, e.creds.signing_key, e.creds.opening};
    if (channel_tap_) channel_tap_(pkg);
    e.delivered = true;
    log("delivered credentials vid=" + vid);
    erase_secrets(e, vid);
    return pkg;
}

std::pair<PasscodeDelivery, ServerProvisioningRecord> Registrar::provision_passcode_mode(
    const std::string& vid) {
    require_phase(RegistrarPhase::open, "provision_passcode_mode");
    if (!opts_.passcode_mode)
        throw std::logic_error("provision_passcode_mode requires passcode mode");
    VoterEntry& e = entry_for(vid);
    if (e.erased) throw std::logic_error("secrets erased for vid=" + vid);
    if (e.delivered && !opts_.retention)
        throw std::logic_error("secrets erased for vid=" + vid);

    Passcode tau;
    if (e.passcode) {
        tau = *e.passcode;  // retention re-delivery
        log("re-delivery vid=" + vid + " under retention policy");
    } else {
        Rng pc_rng = rng_.child("passcode/" + vid);
        tau = generate_passcode(pc_rng);
    }
    DerivedSecrets derived = derive_from_passcode(tau);

    Rng seal_rng = rng_.child("seal/" + vid);
    ServerProvisioningRecord record;
    record.vid = vid;
    record.login_password_hash = hash_login_password(vid, derived.login_password);
    record.sealed.signing_key =
        seal(derived.seal_key, params_.encode(e.creds.signing_key), seal_rng);
    record.sealed.opening = seal(derived.seal_key, params_.encode(e.creds.opening), seal_rng);

    PasscodeDelivery delivery{vid, tau};
    if (passcode_tap_) passcode_tap_(delivery);
    e.delivered = true;
    if (opts_.retention) e.passcode = tau;
    log("delivered passcode vid=" + vid + "; provisioning record handed to server");

    derived.wipe();
    std::fill(tau.begin(), tau.end(), '\0');
    erase_secrets(e, vid);
    return {std::move(delivery), std::move(record)};
}

void Registrar::duplicate_credentials(const std::string& vid_a, const std::string& vid_b) {
    if (!opts_.adversarial)
        throw std::logic_error("duplicate_credentials unavailable in honest mode");
    require_phase(RegistrarPhase::open, "duplicate_credentials");
    VoterEntry& a = entry_for(vid_a);
    if (voters_.contains(vid_b)) throw std::invalid_argument("voter already registered: " + vid_b);
    voters_.emplace(vid_b, VoterEntry{a.creds, false, false, a.passcode});
    log("ADVERSARIAL: duplicated credentials of vid=" + vid_a + " to vid=" + vid_b);
}

void Registrar::close_registration() {
    require_phase(RegistrarPhase::open, "close_registration");
    phase_ = RegistrarPhase::closed;
    log("registration phase closed, voters=" + std::to_string(voters_.size()));
}

std::vector<RegistryRecord> Registrar::publish_registry(OrderPolicy policy) {
    if (phase_ == RegistrarPhase::open)
        throw std::logic_error("publish_registry: registration phase still open");

    // One record per issued credential set; duplicated credentials collapse
    // to the single shared record.
    std::vector<RegistryRecord> records;
    std::vector<std::string> seen;
    for (const auto& [vid, e] : voters_) {
        std::string rho_hex = params_.element_hex(e.creds.reference.value);
        if (std::find(seen.begin(), seen.end(), rho_hex) != seen.end()) continue;
        seen.push_back(rho_hex);
        records.push_back(RegistryRecord{e.creds.verification_key, e.creds.reference});
    }

    auto by_reference = [this](const RegistryRecord& x, const RegistryRecord& y) {
        return params_.encode(x.reference.value) < params_.encode(y.reference.value);
    };
    if (policy == OrderPolicy::sorted) {
        std::sort(records.begin(), records.end(), by_reference);
    } else {
        // Canonical base order first so the shuffle depends only on the seed
        // and the record multiset, not on registration order.
        std::sort(records.begin(), records.end(), by_reference);
        Rng shuffle_rng = rng_.child("registry-shuffle");
        for (size_t i = records.size(); i > 1; i--)
            std::swap(records[i - 1], records[shuffle_rng.below(i)]);
    }
    phase_ = RegistrarPhase::published;
    log("registry published, records=" + std::to_string(records.size()) +
        " order=" + order_policy_name(policy));
    return records;
}

std::string Registrar::export_registry(OrderPolicy policy) {
    return serialize_registry(publish_registry(policy), params_, policy);
}

bool Registrar::has_secret_material_for(const std::string& vid) const {
    auto it = voters_.find(vid);
    if (it == voters_.end()) return false;
    return !it->second.erased;
}

std::string Registrar::state_dump() const {
    std::ostringstream out;
    out << "actor=registrar\nphase=" << static_cast<int>(phase_) << "\n";
    for (const auto& [vid, e] : voters_) {
        out << "voter.vid=" << vid << "\n";
        out << "voter.verification_key=" << params_.element_hex(e.creds.verification_key) << "\n";
        out << "voter.reference=" << params_.element_hex(e.creds.reference.value) << "\n";
        out << "voter.delivered=" << e.delivered << "\n";
        out << "voter.erased=" << e.erased << "\n";
        // Secret-bearing fields appear here while held: the erasure oracle
        // scans exactly this dump. Erased entries hold zeroed storage only.
        if (!e.erased) {
            out << "voter.signing_key=" << params_.scalar_hex(e.creds.signing_key) << "\n";
            out << "voter.opening=" << params_.scalar_hex(e.creds.opening) << "\n";
            if (e.passcode) out << "voter.passcode=" << *e.passcode << "\n";
        }
    }
    for (const auto& l : log_) out << "log=" << l << "\n";
    return out.str();
}

void Registrar::set_channel_tap(std::function<void(const CredentialPackage&)> tap) {
    channel_tap_ = std::move(tap);
    log("ADVERSARIAL: confidential channel tapped");
}

void Registrar::set_passcode_tap(std::function<void(const PasscodeDelivery&)> tap) {
    passcode_tap_ = std::move(tap);
    log("ADVERSARIAL: passcode channel tapped");
}

}  // namespace evercred
