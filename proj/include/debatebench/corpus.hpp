#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "debatebench/errors.hpp"
#include "debatebench/text.hpp"

namespace debatebench {

/// Ordered, duplicate-free set of normalized keywords. Every stored item
/// is its own normal form and non-empty.
class KeywordSet {
public:
    /// Normalizes `raw` and inserts it unless empty or already present.
    /// Returns true when a new item was stored.
    bool add(std::string_view raw) {
        std::string norm = normalize_text(raw);
        if (norm.empty() || contains(norm)) return false;
        items_.push_back(std::move(norm));
        return true;
    }

    bool contains(std::string_view normalized) const {
        return std::find(items_.begin(), items_.end(), normalized) != items_.end();
    }

    const std::vector<std::string>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

private:
    std::vector<std::string> items_;
};

/// One dataset entry: an open-ended planning question with its gold
/// keyword answer.
struct QuestionRecord {
    std::string id;        // entry key, e.g. "question50"
    std::string question;
    std::string category;
    std::string gold_raw;  // the answer string exactly as stored
    KeywordSet gold;
};

struct DatasetStats {
    std::size_t question_count = 0;
    std::map<std::string, std::size_t> category_counts;
    std::size_t total_gold_keywords = 0;  // deduplicated per question
    std::size_t total_raw_keywords = 0;   // comma-separated pieces before dedup
    double mean_gold_per_question = 0.0;
};

namespace detail {

inline std::string_view rtrim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
    return s;
}

inline std::string_view ltrim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
    return s;
}

inline std::string_view trim_view(std::string_view s) { return ltrim_view(rtrim_view(s)); }

/// Splits a comma-separated answer string into trimmed pieces, dropping a
/// single trailing period per piece. Empty pieces are kept out.
template <typename Fn>
inline void for_each_answer_piece(std::string_view answer, Fn&& fn) {
    std::size_t start = 0;
    while (start <= answer.size()) {
        std::size_t comma = answer.find(',', start);
        std::string_view piece = answer.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                      : comma - start);
        piece = rtrim_view(piece);
        if (!piece.empty() && piece.back() == '.') piece.remove_suffix(1);
        piece = trim_view(piece);
        if (!piece.empty()) fn(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
}

}  // namespace detail

/// Parses a comma-separated answer string into a normalized keyword set.
/// An empty result is legal here; load_dataset decides whether it is fatal.
inline KeywordSet parse_keywords(std::string_view answer) {
    KeywordSet set;
    detail::for_each_answer_piece(answer, [&](std::string_view piece) { set.add(piece); });
    return set;
}

/// Count of non-empty answer pieces before normalization collapses duplicates.
inline std::size_t count_raw_keywords(std::string_view answer) {
    std::size_t n = 0;
    detail::for_each_answer_piece(answer, [&](std::string_view piece) {
        if (!normalize_text(piece).empty()) ++n;
    });
    return n;
}

/// Loads a dataset file: a JSON object mapping entry keys to objects with
/// case-sensitive fields `question`, `Answer`, `Category`. Records come back
/// in lexicographic key order so runs are reproducible regardless of the
/// file's own ordering.
inline std::vector<QuestionRecord> load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset file " + path.string());

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DatasetParseError(std::string(e.what()));
    }
    if (!doc.is_object()) throw DatasetParseError("top level must be a JSON object");

    std::vector<QuestionRecord> records;
    records.reserve(doc.size());
    // nlohmann::json objects iterate in key order, which gives the sorted
    // record ordering the loader promises.
    for (const auto& [key, entry] : doc.items()) {
        if (!entry.is_object()) throw DatasetParseError("entry \"" + key + "\" is not an object");
        for (const char* field : {"question", "Answer", "Category"}) {
            if (!entry.contains(field) || !entry[field].is_string()) throw MissingFieldError(key, field);
        }

        QuestionRecord rec;
        rec.id = key;
        rec.question = entry["question"].get<std::string>();
        rec.category = entry["Category"].get<std::string>();
        rec.gold_raw = entry["Answer"].get<std::string>();
        if (detail::trim_view(rec.question).empty()) throw MissingFieldError(key, "question");
        if (detail::trim_view(rec.category).empty()) throw MissingFieldError(key, "Category");
        rec.gold = parse_keywords(rec.gold_raw);
        if (rec.gold.empty()) throw EmptyGoldError(key);
        records.push_back(std::move(rec));
    }
    return records;
}

inline DatasetStats dataset_stats(const std::vector<QuestionRecord>& records) {
    DatasetStats stats;
    stats.question_count = records.size();
    for (const auto& rec : records) {
        ++stats.category_counts[rec.category];
        stats.total_gold_keywords += rec.gold.size();
        stats.total_raw_keywords += count_raw_keywords(rec.gold_raw);
    }
    if (!records.empty()) {
        stats.mean_gold_per_question =
            static_cast<double>(stats.total_gold_keywords) / static_cast<double>(records.size());
    }
    return stats;
}

}  // namespace debatebench
