// Core domain types: tokens, utterances, and substitution sets.

#ifndef ADVSEARCH_TYPES_HPP
#define ADVSEARCH_TYPES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace advsearch {

struct Token {
    std::string surface;
    bool is_replaceable = true;
};

// A partial perturbation: token position -> replacement surface.
// std::map keeps positions sorted, which makes the set's serialization
// canonical regardless of the order substitutions were added in.
using SubstitutionSet = std::map<std::size_t, std::string>;

// A tokenized example together with its gold label and the precomputed,
// filter-surviving synonym candidates per position. Immutable once built;
// positions absent from `candidates` are not attackable.
struct Utterance {
    std::string id;
    std::vector<Token> tokens;
    int gold_label = 0;
    std::map<std::size_t, std::vector<std::string>> candidates;

    std::size_t size() const { return tokens.size(); }

    // Number of positions with at least one surviving candidate (n_rep).
    std::size_t replaceable_count() const { return candidates.size(); }

    std::vector<std::string> surfaces() const {
        std::vector<std::string> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens) out.push_back(t.surface);
        return out;
    }
};

// Canonical string key for a substitution set. Used for search-graph
// dedupe; positions are visited in ascending order by construction.
std::string substitution_key(const SubstitutionSet& subs);

// Cache key for a token sequence: tokens joined with a separator that
// cannot appear inside a token.
std::string token_sequence_key(const std::vector<std::string>& tokens);

} // namespace advsearch

#endif // ADVSEARCH_TYPES_HPP
