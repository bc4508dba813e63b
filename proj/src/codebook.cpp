#include "evercred/codebook.hpp"

#include <stdexcept>

namespace evercred {

Codebook Codebook::standard(const GroupParams& params, size_t n_choices) {
    if (n_choices == 0) throw std::invalid_argument("codebook needs at least one choice");
    if (mpz_class(n_choices) >= params.q())
        throw std::invalid_argument("codebook larger than the group order");
    Codebook cb;
    cb.entries.reserve(n_choices);
    Element cur = params.identity();
    for (size_t i = 0; i < n_choices; i++) {
        cur = params.mul(cur, params.g());
        cb.entries.push_back(cur);
    }
    return cb;
}

const Element& Codebook::at(size_t choice) const {
    if (choice >= entries.size()) throw std::out_of_range("choice index outside the codebook");
    return entries[choice];
}

std::optional<size_t> Codebook::index_of(const Element& m) const {
    for (size_t i = 0; i < entries.size(); i++)
        if (entries[i] == m) return i;
    return std::nullopt;
}

}  // namespace evercred
