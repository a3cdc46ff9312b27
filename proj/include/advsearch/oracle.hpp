// Uniform black-box scoring interface over any classifier, with query
// budgeting and caching. A BudgetedOracle belongs to exactly one attack
// run; only distinct token sequences consume budget (cache hits are free
// by default), and exhaustion is signaled with BudgetExhausted rather
// than silently truncated.

#ifndef ADVSEARCH_ORACLE_HPP
#define ADVSEARCH_ORACLE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "advsearch/types.hpp"

namespace advsearch {

struct ClassDistribution {
    std::vector<double> probs;

    // Ties break toward the lowest class index.
    int argmax() const;
    bool valid(double tolerance = 1e-6) const;
};

class TextClassifier {
public:
    virtual ~TextClassifier() = default;

    virtual ClassDistribution evaluate(std::span<const std::string> tokens) const = 0;
    virtual int num_classes() const = 0;
};

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

class BudgetedOracle {
public:
    BudgetedOracle(const TextClassifier& inner,
                   std::uint64_t budget = kUnlimitedBudget,
                   bool count_cache_hits = false);

    // Probability the classifier assigns to `gold_label`.
    double score(std::span<const std::string> tokens, int gold_label);

    int predict(std::span<const std::string> tokens);

    // Full distribution; the reference stays valid for the oracle's lifetime.
    const ClassDistribution& distribution(std::span<const std::string> tokens);

    std::uint64_t spent() const { return spent_; }
    std::uint64_t budget() const { return budget_; }
    bool exhausted() const { return spent_ >= budget_; }

    void reset();

private:
    const TextClassifier& inner_;
    std::uint64_t budget_;
    bool count_cache_hits_;
    std::uint64_t spent_ = 0;
    std::unordered_map<std::string, ClassDistribution> cache_;
};

} // namespace advsearch

#endif // ADVSEARCH_ORACLE_HPP
