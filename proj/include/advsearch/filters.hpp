// Context-sensitive substitution filtering: a candidate synonym survives
// only if it keeps the POS tag, does not raise perplexity past the
// threshold, passes the windowed semantic-similarity check, and (in QA
// mode) does not touch a content word of the question.
//
// Heavy scorers stay behind the FilterProvider interface; the built-in
// provider is a desk-scale stand-in (lexicon POS tagger, corpus unigram
// perplexity, token-overlap similarity) so the pipeline runs without any
// external models. Candidate files produced here are the source of truth
// at attack time.

#ifndef ADVSEARCH_FILTERS_HPP
#define ADVSEARCH_FILTERS_HPP

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "advsearch/types.hpp"

namespace advsearch {

struct FilterConfig {
    double perplexity_ratio_min = 0.8; // PPL(x)/PPL(x_sub) must be >= this
    int perplexity_window = 101;       // odd, centered on the substituted position
    double semantic_sim_min = 0.7;
    int semantic_window = 15;          // centered: 7 tokens each side
    bool qa_mode = false;
    std::vector<std::string> qa_content_tags = {"NOUN", "PROPN", "ADV", "ADJ"};

    void validate() const; // throws DomainError
};

struct FilterProvider {
    virtual ~FilterProvider() = default;

    virtual std::string pos_tag(std::span<const std::string> tokens,
                                std::size_t position) const = 0;
    virtual double perplexity(std::span<const std::string> window) const = 0;
    virtual double semantic_similarity(std::span<const std::string> a,
                                       std::span<const std::string> b) const = 0;
};

// Closed-class lexicon plus suffix heuristics. Unknown words default to NOUN.
class HeuristicPosTagger {
public:
    std::string tag(std::span<const std::string> tokens, std::size_t position) const;
};

// Add-one-smoothed unigram language model over a reference corpus.
class UnigramModel {
public:
    UnigramModel() = default;

    void add_corpus_line(std::span<const std::string> tokens);
    double log_prob(const std::string& token) const;
    double perplexity(std::span<const std::string> window) const;

private:
    std::unordered_map<std::string, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

class BuiltinFilterProvider : public FilterProvider {
public:
    explicit BuiltinFilterProvider(UnigramModel unigrams)
        : unigrams_(std::move(unigrams)) {}

    std::string pos_tag(std::span<const std::string> tokens,
                        std::size_t position) const override;
    double perplexity(std::span<const std::string> window) const override;
    // Jaccard overlap between the windows' token sets.
    double semantic_similarity(std::span<const std::string> a,
                               std::span<const std::string> b) const override;

private:
    HeuristicPosTagger tagger_;
    UnigramModel unigrams_;
};

// word (lowercase) -> synonyms, as loaded from a synonym-dictionary file.
using SynonymDict = std::unordered_map<std::string, std::vector<std::string>>;

// Runs the full filter pipeline over every replaceable position and keeps
// the surviving candidates. Positions where nothing survives are omitted.
// Lookup is lowercase-normalized; replacements take over the original
// token's leading capitalization.
Utterance build_candidates(std::string id,
                           const std::vector<Token>& tokens,
                           int gold_label,
                           const SynonymDict& synonyms,
                           const FilterProvider& provider,
                           const FilterConfig& config,
                           const std::optional<std::vector<std::string>>& question_tokens = std::nullopt);

// Marks tokens containing at least one alphanumeric character replaceable.
std::vector<Token> tokenize_surfaces(const std::vector<std::string>& surfaces);

std::string lowercase(const std::string& word);

} // namespace advsearch

#endif // ADVSEARCH_FILTERS_HPP
