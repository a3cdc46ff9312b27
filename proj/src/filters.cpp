#include "advsearch/filters.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

#include "advsearch/errors.hpp"

namespace advsearch {

void FilterConfig::validate() const {
    if (perplexity_ratio_min < 0.0 || perplexity_ratio_min > 1.0) {
        throw DomainError("perplexity ratio threshold must be in [0, 1]");
    }
    if (semantic_sim_min < 0.0 || semantic_sim_min > 1.0) {
        throw DomainError("semantic similarity threshold must be in [0, 1]");
    }
    if (perplexity_window <= 0 || perplexity_window % 2 == 0) {
        throw DomainError("perplexity window must be a positive odd integer");
    }
    if (semantic_window <= 0) {
        throw DomainError("semantic window must be positive");
    }
}

std::string lowercase(const std::string& word) {
    std::string out = word;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

namespace {

const std::unordered_set<std::string>& closed_class(const char* which) {
    static const std::unordered_set<std::string> det = {
        "the", "a", "an", "this", "that", "these", "those", "each", "every",
        "some", "any", "no", "both", "either", "neither"};
    static const std::unordered_set<std::string> adp = {
        "of", "in", "on", "at", "by", "with", "from", "to", "for", "about",
        "into", "over", "under", "between", "against", "during", "without",
        "through", "after", "before", "above", "below", "up", "down", "off"};
    static const std::unordered_set<std::string> pron = {
        "i", "you", "he", "she", "it", "we", "they", "me", "him", "her",
        "us", "them", "my", "your", "his", "its", "our", "their", "who",
        "whom", "which", "what"};
    static const std::unordered_set<std::string> conj = {
        "and", "or", "but", "nor", "so", "yet", "because", "although",
        "while", "if", "when", "as", "since", "unless"};
    static const std::unordered_set<std::string> aux = {
        "is", "am", "are", "was", "were", "be", "been", "being", "do",
        "does", "did", "have", "has", "had", "will", "would", "can",
        "could", "may", "might", "shall", "should", "must"};
    switch (*which) {
        case 'd': return det;
        case 'a': return adp;
        case 'p': return pron;
        case 'c': return conj;
        default: return aux;
    }
}

bool has_suffix(const std::string& word, const char* suffix) {
    const std::size_t n = std::char_traits<char>::length(suffix);
    return word.size() > n + 1 && word.compare(word.size() - n, n, suffix) == 0;
}

} // namespace

std::string HeuristicPosTagger::tag(std::span<const std::string> tokens,
                                    std::size_t position) const {
    const std::string& surface = tokens[position];
    const std::string lower = lowercase(surface);
    if (lower.empty()) return "X";
    if (std::isdigit(static_cast<unsigned char>(lower[0]))) return "NUM";
    if (closed_class("d").count(lower)) return "DET";
    if (closed_class("a").count(lower)) return "ADP";
    if (closed_class("p").count(lower)) return "PRON";
    if (closed_class("c").count(lower)) return "CCONJ";
    if (closed_class("x").count(lower)) return "AUX";
    if (position > 0 && std::isupper(static_cast<unsigned char>(surface[0]))) return "PROPN";
    if (has_suffix(lower, "ly")) return "ADV";
    if (has_suffix(lower, "ing") || has_suffix(lower, "ize") ||
        has_suffix(lower, "ise")) return "VERB";
    if (has_suffix(lower, "ous") || has_suffix(lower, "ful") ||
        has_suffix(lower, "ive") || has_suffix(lower, "able") ||
        has_suffix(lower, "ible") || has_suffix(lower, "ic") ||
        has_suffix(lower, "less")) return "ADJ";
    if (has_suffix(lower, "tion") || has_suffix(lower, "sion") ||
        has_suffix(lower, "ment") || has_suffix(lower, "ness") ||
        has_suffix(lower, "ity") || has_suffix(lower, "ship")) return "NOUN";
    if (has_suffix(lower, "ed")) return "VERB";
    return "NOUN";
}

void UnigramModel::add_corpus_line(std::span<const std::string> tokens) {
    for (const auto& t : tokens) {
        ++counts_[lowercase(t)];
        ++total_;
    }
}

double UnigramModel::log_prob(const std::string& token) const {
    const auto it = counts_.find(lowercase(token));
    const double count = it == counts_.end() ? 0.0 : static_cast<double>(it->second);
    const double vocab = static_cast<double>(counts_.size()) + 1.0;
    return std::log((count + 1.0) / (static_cast<double>(total_) + vocab));
}

double UnigramModel::perplexity(std::span<const std::string> window) const {
    if (window.empty()) return 1.0;
    double sum = 0.0;
    for (const auto& t : window) sum += log_prob(t);
    return std::exp(-sum / static_cast<double>(window.size()));
}

std::string BuiltinFilterProvider::pos_tag(std::span<const std::string> tokens,
                                           std::size_t position) const {
    return tagger_.tag(tokens, position);
}

double BuiltinFilterProvider::perplexity(std::span<const std::string> window) const {
    return unigrams_.perplexity(window);
}

double BuiltinFilterProvider::semantic_similarity(std::span<const std::string> a,
                                                  std::span<const std::string> b) const {
    std::unordered_set<std::string> sa(a.begin(), a.end());
    std::unordered_set<std::string> sb(b.begin(), b.end());
    if (sa.empty() && sb.empty()) return 1.0;
    std::size_t inter = 0;
    for (const auto& t : sa) inter += sb.count(t);
    const std::size_t uni = sa.size() + sb.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<Token> tokenize_surfaces(const std::vector<std::string>& surfaces) {
    std::vector<Token> out;
    out.reserve(surfaces.size());
    for (const auto& s : surfaces) {
        const bool replaceable = std::any_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isalnum(c);
        });
        out.push_back(Token{s, replaceable});
    }
    return out;
}

namespace {

std::string match_capitalization(const std::string& original, const std::string& word) {
    if (original.empty() || word.empty()) return word;
    if (std::isupper(static_cast<unsigned char>(original[0]))) {
        std::string out = word;
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
        return out;
    }
    return word;
}

std::span<const std::string> centered_window(const std::vector<std::string>& tokens,
                                             std::size_t position, int size) {
    const std::size_t half = static_cast<std::size_t>(size) / 2;
    const std::size_t lo = position > half ? position - half : 0;
    const std::size_t hi = std::min(tokens.size(), position + half + 1);
    return std::span<const std::string>(tokens.data() + lo, hi - lo);
}

} // namespace

Utterance build_candidates(std::string id,
                           const std::vector<Token>& tokens,
                           int gold_label,
                           const SynonymDict& synonyms,
                           const FilterProvider& provider,
                           const FilterConfig& config,
                           const std::optional<std::vector<std::string>>& question_tokens) {
    config.validate();

    Utterance utt;
    utt.id = std::move(id);
    utt.tokens = tokens;
    utt.gold_label = gold_label;

    // QA restriction: content words of the question may not be perturbed
    // anywhere in the passage.
    std::unordered_set<std::string> restricted;
    if (config.qa_mode && question_tokens) {
        const std::unordered_set<std::string> content_tags(config.qa_content_tags.begin(),
                                                           config.qa_content_tags.end());
        for (std::size_t i = 0; i < question_tokens->size(); ++i) {
            const std::string tag = provider.pos_tag(*question_tokens, i);
            if (content_tags.count(tag)) restricted.insert(lowercase((*question_tokens)[i]));
        }
    }

    std::vector<std::string> surfaces;
    surfaces.reserve(tokens.size());
    for (const auto& t : tokens) surfaces.push_back(t.surface);

    std::vector<std::string> perturbed = surfaces;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!tokens[i].is_replaceable) continue;
        const std::string lower = lowercase(tokens[i].surface);
        if (config.qa_mode && restricted.count(lower)) continue;
        const auto dict_it = synonyms.find(lower);
        if (dict_it == synonyms.end()) continue;

        const std::string original_tag = provider.pos_tag(surfaces, i);
        const auto ppl_window = centered_window(surfaces, i, config.perplexity_window);
        const double original_ppl = provider.perplexity(ppl_window);
        const auto sim_window = centered_window(surfaces, i, config.semantic_window);

        std::vector<std::string> survivors;
        std::unordered_set<std::string> seen;
        for (const auto& raw : dict_it->second) {
            const std::string lowered = lowercase(raw);
            if (lowered == lower) continue; // zero-effect edge
            if (!seen.insert(lowered).second) continue;
            const std::string replacement = match_capitalization(tokens[i].surface, lowered);

            perturbed[i] = replacement;
            const bool ok = [&] {
                if (provider.pos_tag(perturbed, i) != original_tag) return false;
                const auto sub_ppl_window = centered_window(perturbed, i, config.perplexity_window);
                const double sub_ppl = provider.perplexity(sub_ppl_window);
                if (sub_ppl > 0.0 && original_ppl / sub_ppl < config.perplexity_ratio_min) {
                    return false;
                }
                const auto sub_sim_window = centered_window(perturbed, i, config.semantic_window);
                return provider.semantic_similarity(sim_window, sub_sim_window) >=
                       config.semantic_sim_min;
            }();
            perturbed[i] = surfaces[i];

            if (ok) survivors.push_back(replacement);
        }
        if (!survivors.empty()) utt.candidates.emplace(i, std::move(survivors));
    }
    return utt;
}

} // namespace advsearch
