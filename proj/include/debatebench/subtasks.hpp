#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace debatebench {

struct SubTask {
    std::size_t index = 0;  // 1-based, consecutive within one decomposition
    std::string text;

    bool operator==(const SubTask& other) const { return index == other.index && text == other.text; }
};

namespace detail {

inline std::string_view trim_ws(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

/// Matches "12." / "12)" item heads after optional indentation; returns the
/// text after the marker.
inline std::optional<std::string_view> numbered_head(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t digits = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == digits) return std::nullopt;
    if (i >= line.size() || (line[i] != '.' && line[i] != ')')) return std::nullopt;
    return line.substr(i + 1);
}

/// Matches "Sub-task 3:" style labels (case-insensitive; "subtask" and
/// "sub task" too; ".", ")" accepted in place of ":").
inline std::optional<std::string_view> labeled_head(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    auto eat_word = [&](std::string_view word) {
        if (line.size() - i < word.size()) return false;
        for (std::size_t w = 0; w < word.size(); ++w)
            if (std::tolower(static_cast<unsigned char>(line[i + w])) != word[w]) return false;
        i += word.size();
        return true;
    };
    if (!eat_word("sub")) return std::nullopt;
    if (i < line.size() && (line[i] == '-' || line[i] == ' ')) ++i;
    if (!eat_word("task")) return std::nullopt;
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t digits = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == digits) return std::nullopt;
    if (i >= line.size() || (line[i] != ':' && line[i] != '.' && line[i] != ')')) return std::nullopt;
    return line.substr(i + 1);
}

}  // namespace detail

/// Extracts the numbered items of a decomposition. Item heads are "N." /
/// "N)" / "Sub-task N:" lines; non-blank lines in between continue the
/// current item; text before the first head is dropped. Source numbering is
/// ignored and results are re-indexed 1..k. Non-blank text with no heads at
/// all falls back to a single sub-task holding the whole text; blank text
/// yields an empty list.
inline std::vector<SubTask> parse_subtasks(std::string_view text) {
    std::vector<std::string> items;
    bool in_item = false;
    bool saw_head = false;
    std::string current;

    auto flush = [&] {
        if (in_item && !current.empty()) items.push_back(current);
        current.clear();
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto head = detail::numbered_head(line);
        if (!head) head = detail::labeled_head(line);
        if (head) {
            flush();
            in_item = true;
            saw_head = true;
            current = std::string(detail::trim_ws(*head));
        } else {
            const auto t = detail::trim_ws(line);
            if (!t.empty() && in_item) {
                if (!current.empty()) current += ' ';
                current += std::string(t);
            }
        }

        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    flush();

    std::vector<SubTask> out;
    out.reserve(items.size());
    for (auto& item : items) out.push_back(SubTask{out.size() + 1, std::move(item)});

    if (out.empty() && !saw_head) {
        std::string whole;
        bool any = false;
        std::size_t p = 0;
        while (p <= text.size()) {
            const auto nl = text.find('\n', p);
            std::string_view line = text.substr(p, nl == std::string_view::npos ? std::string_view::npos : nl - p);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            const auto t = detail::trim_ws(line);
            if (!t.empty()) {
                if (any) whole += ' ';
                whole += std::string(t);
                any = true;
            }
            if (nl == std::string_view::npos) break;
            p = nl + 1;
        }
        if (any) out.push_back(SubTask{1, std::move(whole)});
    }
    return out;
}

}  // namespace debatebench
