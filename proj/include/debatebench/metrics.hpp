#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "debatebench/corpus.hpp"
#include "debatebench/errors.hpp"
#include "debatebench/text.hpp"

namespace debatebench {

struct MatchResult {
    std::string question_id;
    std::size_t gold_size = 0;
    KeywordSet matched;  // subset of the gold set
    std::size_t matched_count = 0;
};

/// Whole-phrase match of every gold keyword against the normalized solution
/// text: keyword k counts iff " k " occurs in the space-padded normalized
/// text. Each keyword counts at most once.
inline MatchResult match_keywords(const std::string& question_id, const std::string& solution_text,
                                  const KeywordSet& gold) {
    if (gold.empty()) throw EmptyGoldError(question_id);
    const std::string padded = " " + normalize_text(solution_text) + " ";

    MatchResult r;
    r.question_id = question_id;
    r.gold_size = gold.size();
    for (const auto& k : gold)
        if (padded.find(" " + k + " ") != std::string::npos) r.matched.add(k);
    r.matched_count = r.matched.size();
    return r;
}

inline double mcr(const std::vector<MatchResult>& results) {
    if (results.empty()) throw EmptyResultsError();
    double sum = 0.0;
    for (const auto& r : results)
        sum += static_cast<double>(r.matched_count) / static_cast<double>(r.gold_size);
    return 100.0 * sum / static_cast<double>(results.size());
}

inline double grr(const std::vector<MatchResult>& results) {
    if (results.empty()) throw EmptyResultsError();
    double matched = 0.0, gold = 0.0;
    for (const auto& r : results) {
        matched += static_cast<double>(r.matched_count);
        gold += static_cast<double>(r.gold_size);
    }
    return 100.0 * matched / gold;
}

inline double khc(const std::vector<MatchResult>& results) {
    if (results.empty()) throw EmptyResultsError();
    double matched = 0.0;
    for (const auto& r : results) matched += static_cast<double>(r.matched_count);
    return matched / static_cast<double>(results.size());
}

inline std::map<std::string, double> per_category_mcr(const std::vector<MatchResult>& results,
                                                      const std::vector<QuestionRecord>& records) {
    if (results.empty()) throw EmptyResultsError();
    std::unordered_map<std::string, std::string> category_of;
    category_of.reserve(records.size());
    for (const auto& rec : records) category_of.emplace(rec.id, rec.category);

    std::map<std::string, std::pair<double, std::size_t>> acc;  // category -> (recall sum, n)
    for (const auto& r : results) {
        const auto it = category_of.find(r.question_id);
        if (it == category_of.end()) throw UnknownQuestionError(r.question_id);
        auto& [sum, n] = acc[it->second];
        sum += static_cast<double>(r.matched_count) / static_cast<double>(r.gold_size);
        ++n;
    }

    std::map<std::string, double> out;
    for (const auto& [cat, sn] : acc) out[cat] = 100.0 * sn.first / static_cast<double>(sn.second);
    return out;
}

struct MetricsReport {
    double mcr_percent = 0.0;
    double khc = 0.0;
    double grr_percent = 0.0;
    std::map<std::string, double> per_category_mcr;
    std::size_t n_questions = 0;

    nlohmann::json to_json() const {
        return {
            {"mcr_percent", mcr_percent},
            {"khc", khc},
            {"grr_percent", grr_percent},
            {"per_category_mcr", per_category_mcr},
            {"n_questions", n_questions},
        };
    }

    static MetricsReport from_json(const nlohmann::json& j) {
        MetricsReport rep;
        rep.mcr_percent = j.at("mcr_percent").get<double>();
        rep.khc = j.at("khc").get<double>();
        rep.grr_percent = j.at("grr_percent").get<double>();
        rep.per_category_mcr = j.at("per_category_mcr").get<std::map<std::string, double>>();
        rep.n_questions = j.at("n_questions").get<std::size_t>();
        return rep;
    }
};

inline MetricsReport compute_metrics(const std::vector<MatchResult>& results,
                                     const std::vector<QuestionRecord>& records) {
    MetricsReport rep;
    rep.mcr_percent = mcr(results);
    rep.khc = khc(results);
    rep.grr_percent = grr(results);
    rep.per_category_mcr = per_category_mcr(results, records);
    rep.n_questions = results.size();
    return rep;
}

}  // namespace debatebench
