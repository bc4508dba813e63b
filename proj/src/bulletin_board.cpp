#include <optional>
#include "evercred/bulletin_board.hpp"

#include <map>
#include <sstream>

#include "evercred/ballot.hpp"
#include "evercred/hash.hpp"
#include "evercred/wire.hpp"

namespace evercred {

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "entries_checked=" << entries_checked << "\n";
    for (const auto& e : parse_errors) out << "parse_error=" << e << "\n";
    for (const auto& v : violations)
        out << "violation seq=" << v.seq << " code=" << v.code << " detail=" << v.detail << "\n";
    out << "violations=" << violations.size() << "\n";
    out << "result=" << (clean() ? "clean" : "problems-found") << "\n";
    return out.str();
}

VerificationReport verify_eligibility(const std::string& registry_text,
                                      const std::string& ballot_box_text,
                                      bool check_duplicates) {
    VerificationReport report;
    std::optional<ParsedRegistry> registry;
    try {
        registry.emplace(parse_registry(registry_text));
    } catch (const ParseError& e) {
        report.parse_errors.push_back(std::string("registry: ") + e.what());
        return report;
    }
    const GroupParams& params = registry->params;

    std::map<std::string, const RegistryRecord*> by_reference;
    for (const auto& rec : registry->records)
        by_reference.emplace(params.element_hex(rec.reference.value), &rec);

    BallotBoxParse box = parse_ballot_box(ballot_box_text, params);
    for (auto& e : box.line_errors) report.parse_errors.push_back("ballot-box: " + e);

    std::map<std::string, uint64_t> seen_references;
    for (const auto& entry : box.entries) {
        report.entries_checked++;
        std::string rho_hex = params.element_hex(entry.ballot.reference.value);

        auto rec = by_reference.find(rho_hex);
        if (rec == by_reference.end()) {
            report.violations.push_back(
                {entry.seq, "unregistered-reference", "no registry record for " + rho_hex});
            continue;
        }
        if (!schnorr_verify(rec->second->verification_key,
                            ballot_sig_message(entry.ballot.choice_ct, entry.ballot.reference,
                                               params),
                            entry.ballot.sig, params))
            report.violations.push_back(
                {entry.seq, "invalid-signature", "signature fails under registry key"});

        if (check_duplicates) {
            auto [it, inserted] = seen_references.emplace(rho_hex, entry.seq);
            if (!inserted)
                report.violations.push_back(
                    {entry.seq, "duplicate-reference",
                     "reference already used by seq=" + std::to_string(it->second)});
        }
    }
    return report;
}

std::string LeakReport::to_text() const {
    std::ostringstream out;
    for (const auto& f : findings) out << "leak=" << f << "\n";
    out << "findings=" << findings.size() << "\n";
    out << "result=" << (clean() ? "clean" : "leaks-found") << "\n";
    return out.str();
}

// Splits a serialized artifact into value tokens (hex fields, header words).
static std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == '\n' || c == ' ' || c == ':' || c == '=') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

LeakReport scan_privacy_leakage(const std::string& registry_text,
                                const std::string& ballot_box_text,
                                const std::vector<std::string>& vids,
                                const std::vector<Scalar>& known_openings,
                                const GroupParams& params) {
    LeakReport report;
    const std::string* artifacts[2] = {&registry_text, &ballot_box_text};
    const char* names[2] = {"registry", "ballot-box"};

    bool value_scan = params.scalar_bytes() >= 4;

    for (int a = 0; a < 2; a++) {
        const std::string& text = *artifacts[a];
        for (const auto& vid : vids)
            if (text.find(vid) != std::string::npos)
                report.findings.push_back(std::string(names[a]) + " contains vid \"" + vid + "\"");

        if (!value_scan) continue;
        std::vector<std::string> toks = tokens_of(text);
        auto scan_value = [&](const std::string& hex, const std::string& what) {
            for (const auto& t : toks) {
                if (t == hex || (hex.size() >= 16 && t.find(hex) != std::string::npos)) {
                    report.findings.push_back(std::string(names[a]) + " contains " + what);
                    return;
                }
            }
        };
        for (const auto& vid : vids)
            scan_value(params.scalar_hex(vid_scalar(vid, params)), "identity hash of \"" + vid + "\"");
        for (size_t i = 0; i < known_openings.size(); i++)
            scan_value(params.scalar_hex(known_openings[i]),
                       "reference opening #" + std::to_string(i));
    }
    return report;
}

}  // namespace evercred
