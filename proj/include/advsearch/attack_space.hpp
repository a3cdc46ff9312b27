// The filtered synonym-substitution attack space: substitution limits,
// exact space counting, enumeration, and substitution application.

#ifndef ADVSEARCH_ATTACK_SPACE_HPP
#define ADVSEARCH_ATTACK_SPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "advsearch/types.hpp"

namespace advsearch {

// Per-utterance substitution bound D = ceil(d * |x|).
struct SpaceBounds {
    double d = 0.1;
    std::size_t limit = 0; // D

    static SpaceBounds for_utterance(const Utterance& utt, double d);
};

// D = ceil(d * |x|). Throws DomainError if d is outside (0, 1] or the
// utterance is empty.
std::size_t substitution_limit(const Utterance& utt, double d);

// Exact number of distinct utterances reachable with at most
// `max_substitutions` substitutions, original included.
mpz_class space_size(const Utterance& utt, std::size_t max_substitutions);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Every member of the attack space as a substitution set, original (empty
// set) first. Throws CapExceeded if space_size exceeds `cap`.
std::vector<SubstitutionSet> enumerate_space(const Utterance& utt,
                                             std::size_t max_substitutions,
                                             std::size_t cap = kDefaultEnumerationCap);

// Token surfaces with the given substitutions applied. The utterance is
// not modified. Throws InvalidSubstitution if a position is not a
// candidate position, a replacement is not in that position's candidate
// list, or the set is larger than `max_substitutions` (when given).
std::vector<std::string> apply(const Utterance& utt,
                               const SubstitutionSet& subs,
                               std::optional<std::size_t> max_substitutions = std::nullopt);

} // namespace advsearch

#endif // ADVSEARCH_ATTACK_SPACE_HPP
