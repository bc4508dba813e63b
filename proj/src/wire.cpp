#include "evercred/wire.hpp"

#include <charconv>
#include <sstream>

namespace evercred {

std::string order_policy_name(OrderPolicy p) {
    return p == OrderPolicy::sorted ? "sorted" : "shuffled";
}

OrderPolicy order_policy_from_name(std::string_view name) {
    if (name == "sorted") return OrderPolicy::sorted;
    if (name == "shuffled") return OrderPolicy::shuffled;
    throw ParseError("unknown order policy: " + std::string(name));
}

static std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            return out;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string serialize_registry(const std::vector<RegistryRecord>& records,
                               const GroupParams& params, OrderPolicy policy) {
    std::ostringstream out;
    out << "#evercred-registry v1\n";
    out << "#group name=" << params.name() << " p=" << to_hex(mpz_to_bytes(params.p(), params.element_bytes()))
        << " q=" << to_hex(mpz_to_bytes(params.q(), params.scalar_bytes()))
        << " g=" << params.element_hex(params.g()) << " h=" << params.element_hex(params.h())
        << "\n";
    out << "#order " << order_policy_name(policy) << "\n";
    for (const auto& rec : records)
        out << params.element_hex(rec.verification_key) << ","
            << params.element_hex(rec.reference.value) << "\n";
    return out.str();
}

static std::string header_field(const std::string& line, const std::string& key) {
    std::string needle = key + "=";
    size_t pos = line.find(needle);
    if (pos == std::string::npos) throw ParseError("registry header missing field " + key);
    size_t start = pos + needle.size();
    size_t end = line.find(' ', start);
    if (end == std::string::npos) end = line.size();
    return line.substr(start, end - start);
}

ParsedRegistry parse_registry(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "#evercred-registry v1")
        throw ParseError("not a registry file (bad magic line)");
    if (!std::getline(in, line) || line.rfind("#group ", 0) != 0)
        throw ParseError("registry missing group header");

    std::string name = header_field(line, "name");
    mpz_class p = mpz_from_bytes(from_hex(header_field(line, "p")));
    mpz_class q = mpz_from_bytes(from_hex(header_field(line, "q")));
    mpz_class g = mpz_from_bytes(from_hex(header_field(line, "g")));
    mpz_class h = mpz_from_bytes(from_hex(header_field(line, "h")));
    ParsedRegistry out{GroupParams::from_values(name, p, q, g, h), OrderPolicy::sorted, {}};

    if (!std::getline(in, line) || line.rfind("#order ", 0) != 0)
        throw ParseError("registry missing order header");
    out.policy = order_policy_from_name(line.substr(7));

    size_t line_no = 3;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != 2)
            throw ParseError("registry line " + std::to_string(line_no) + ": expected 2 fields");
        try {
            RegistryRecord rec;
            rec.verification_key = out.params.decode_element(from_hex(fields[0]));
            rec.reference = Commitment{out.params.decode_element(from_hex(fields[1]))};
            out.records.push_back(std::move(rec));
        } catch (const std::invalid_argument& e) {
            throw ParseError("registry line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::string serialize_ballot_box(const std::vector<BallotBoxEntry>& entries,
                                 const GroupParams& params) {
    std::ostringstream out;
    for (const auto& e : entries)
        out << e.seq << "," << params.element_hex(e.ballot.choice_ct.c1) << ","
            << params.element_hex(e.ballot.choice_ct.c2) << ","
            << params.element_hex(e.ballot.reference.value) << ","
            << to_hex(encode_signature(e.ballot.sig, params)) << "\n";
    return out.str();
}

BallotBoxParse parse_ballot_box(const std::string& text, const GroupParams& params) {
    BallotBoxParse out;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) continue;
        auto fields = split(line, ',');
        auto fail = [&](const std::string& why) {
            out.line_errors.push_back("line " + std::to_string(line_no) + ": " + why);
        };
        if (fields.size() != 5) {
            fail("expected 5 fields");
            continue;
        }
        BallotBoxEntry e;
        auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), e.seq);
        if (ec != std::errc() || ptr != fields[0].data() + fields[0].size()) {
            fail("bad sequence number");
            continue;
        }
        try {
            e.ballot.choice_ct.c1 = params.decode_element(from_hex(fields[1]));
            e.ballot.choice_ct.c2 = params.decode_element(from_hex(fields[2]));
            e.ballot.reference = Commitment{params.decode_element(from_hex(fields[3]))};
            if (!decode_signature(from_hex(fields[4]), params, e.ballot.sig)) {
                fail("malformed signature encoding");
                continue;
            }
        } catch (const std::invalid_argument& ex) {
            fail(ex.what());
            continue;
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace evercred
