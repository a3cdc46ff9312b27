#include "advsearch/attack_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "advsearch/errors.hpp"

namespace advsearch {

std::string substitution_key(const SubstitutionSet& subs) {
    std::string key;
    for (const auto& [pos, word] : subs) {
        key += std::to_string(pos);
        key += '=';
        key += word;
        key += '\x1f';
    }
    return key;
}

std::string token_sequence_key(const std::vector<std::string>& tokens) {
    std::string key;
    std::size_t total = 0;
    for (const auto& t : tokens) total += t.size() + 1;
    key.reserve(total);
    for (const auto& t : tokens) {
        key += t;
        key += '\x1f';
    }
    return key;
}

std::size_t substitution_limit(const Utterance& utt, double d) {
    if (!(d > 0.0) || d > 1.0) {
        throw DomainError("substitution fraction d must be in (0, 1], got " + std::to_string(d));
    }
    if (utt.tokens.empty()) {
        throw DomainError("substitution limit is undefined for an empty utterance");
    }
    const double product = d * static_cast<double>(utt.tokens.size());
    // d * |x| is often an exact integer in real arithmetic (d = 0.1,
    // |x| = 30) but not in floating point; snap before taking the ceiling.
    const double nearest = std::round(product);
    double value = product;
    if (std::abs(product - nearest) < 1e-9 * std::max(1.0, nearest)) value = nearest;
    return static_cast<std::size_t>(std::ceil(value));
}

SpaceBounds SpaceBounds::for_utterance(const Utterance& utt, double d) {
    return SpaceBounds{d, substitution_limit(utt, d)};
}

mpz_class space_size(const Utterance& utt, std::size_t max_substitutions) {
    // Coefficients of prod_i (1 + |cands_i| z) truncated at degree D;
    // coeff[k] counts the substitution sets of size exactly k.
    std::vector<mpz_class> coeff(max_substitutions + 1, 0);
    coeff[0] = 1;
    std::size_t used = 0;
    for (const auto& [pos, cands] : utt.candidates) {
        (void)pos;
        if (cands.empty()) continue;
        const unsigned long k = static_cast<unsigned long>(cands.size());
        used = std::min(used + 1, max_substitutions);
        for (std::size_t deg = used; deg >= 1; --deg) {
            coeff[deg] += coeff[deg - 1] * k;
        }
    }
    mpz_class total = 0;
    for (const auto& c : coeff) total += c;
    return total;
}

namespace {

void check_substitution(const Utterance& utt, std::size_t pos, const std::string& word) {
    auto it = utt.candidates.find(pos);
    if (it == utt.candidates.end()) {
        throw InvalidSubstitution("position " + std::to_string(pos) +
                                  " is not a candidate position of utterance '" + utt.id + "'");
    }
    if (std::find(it->second.begin(), it->second.end(), word) == it->second.end()) {
        throw InvalidSubstitution("'" + word + "' is not a candidate at position " +
                                  std::to_string(pos) + " of utterance '" + utt.id + "'");
    }
}

} // namespace

std::vector<std::string> apply(const Utterance& utt,
                               const SubstitutionSet& subs,
                               std::optional<std::size_t> max_substitutions) {
    if (max_substitutions && subs.size() > *max_substitutions) {
        throw InvalidSubstitution("substitution set of size " + std::to_string(subs.size()) +
                                  " exceeds the limit D=" + std::to_string(*max_substitutions));
    }
    std::vector<std::string> out = utt.surfaces();
    for (const auto& [pos, word] : subs) {
        check_substitution(utt, pos, word);
        out[pos] = word;
    }
    return out;
}

std::vector<SubstitutionSet> enumerate_space(const Utterance& utt,
                                             std::size_t max_substitutions,
                                             std::size_t cap) {
    const mpz_class count = space_size(utt, max_substitutions);
    if (count > cap) {
        throw CapExceeded("attack space has " + count.get_str() +
                          " members, above the enumeration cap of " + std::to_string(cap));
    }

    std::vector<std::size_t> positions;
    positions.reserve(utt.candidates.size());
    for (const auto& [pos, cands] : utt.candidates) {
        if (!cands.empty()) positions.push_back(pos);
    }

    std::vector<SubstitutionSet> out;
    out.reserve(count.get_ui());
    out.emplace_back(); // the original, k = 0

    const std::size_t n = positions.size();
    const std::size_t max_k = std::min(max_substitutions, n);
    std::vector<std::size_t> combo;
    for (std::size_t k = 1; k <= max_k; ++k) {
        // Lexicographic k-combinations of candidate positions.
        combo.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            // Odometer over the synonym choices of the selected positions.
            std::vector<std::size_t> choice(k, 0);
            while (true) {
                SubstitutionSet subs;
                for (std::size_t i = 0; i < k; ++i) {
                    const std::size_t pos = positions[combo[i]];
                    subs.emplace(pos, utt.candidates.at(pos)[choice[i]]);
                }
                out.push_back(std::move(subs));
                std::size_t j = k;
                while (j > 0) {
                    --j;
                    if (++choice[j] < utt.candidates.at(positions[combo[j]]).size()) break;
                    choice[j] = 0;
                    if (j == 0) goto next_combo;
                }
            }
        next_combo:
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (combo[i] != i + n - k) break;
                if (i == 0) goto next_k;
            }
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    next_k:;
    }
    return out;
}

} // namespace advsearch
