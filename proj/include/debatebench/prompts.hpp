#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "debatebench/errors.hpp"

namespace debatebench {

/// One named template. Placeholders are written {name}; literal braces are
/// escaped as {{ and }}. Rendering is total: every brace is either an escape
/// or a resolvable placeholder, so no literal {name} survives into output.
struct PromptTemplate {
    std::string id;
    std::string body;

    std::string render(const std::map<std::string, std::string>& vars) const {
        std::string out;
        out.reserve(body.size() + 64);
        for (std::size_t i = 0; i < body.size();) {
            const char c = body[i];
            if (c == '{') {
                if (i + 1 < body.size() && body[i + 1] == '{') {
                    out += '{';
                    i += 2;
                    continue;
                }
                const auto end = body.find('}', i + 1);
                if (end == std::string::npos)
                    throw TemplateError("unterminated placeholder in template \"" + id + "\"");
                const std::string name = body.substr(i + 1, end - i - 1);
                bool malformed = name.empty();
                for (const char nc : name)
                    if (!std::isalnum(static_cast<unsigned char>(nc)) && nc != '.' && nc != '_' && nc != '-')
                        malformed = true;
                if (malformed)
                    throw TemplateError("malformed placeholder \"{" + name + "}\" in template \"" + id + "\"");
                const auto it = vars.find(name);
                if (it == vars.end())
                    throw TemplateError("unbound placeholder \"{" + name + "}\" in template \"" + id + "\"");
                out += it->second;
                i = end + 1;
                continue;
            }
            if (c == '}') {
                if (i + 1 < body.size() && body[i + 1] == '}') {
                    out += '}';
                    i += 2;
                    continue;
                }
                throw TemplateError("stray \"}\" in template \"" + id + "\"");
            }
            out += c;
            ++i;
        }
        return out;
    }
};

/// Collection of templates keyed by id, parsed from a sectioned text file:
/// a line of the form [id] opens a section, the body runs to the next
/// section. Blank and # lines before the first section are ignored; bodies
/// keep internal blank lines but are trimmed of blank lines at both ends.
class PromptLibrary {
public:
    static PromptLibrary parse(std::string_view text) {
        PromptLibrary lib;
        std::string current_id;
        std::vector<std::string> body;

        auto flush = [&] {
            if (current_id.empty()) return;
            while (!body.empty() && is_blank(body.front())) body.erase(body.begin());
            while (!body.empty() && is_blank(body.back())) body.pop_back();
            if (body.empty()) throw TemplateError("template \"" + current_id + "\" has an empty body");
            std::string joined;
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (i > 0) joined += '\n';
                joined += body[i];
            }
            if (!lib.templates_.emplace(current_id, PromptTemplate{current_id, joined}).second)
                throw TemplateError("duplicate template id \"" + current_id + "\"");
            body.clear();
        };

        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (auto id = section_header(line)) {
                flush();
                current_id = *id;
                continue;
            }
            if (current_id.empty()) {
                if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
                throw TemplateError("content before the first [template] section");
            }
            body.push_back(line);
        }
        flush();
        return lib;
    }

    static PromptLibrary from_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open templates file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str());
    }

    /// The template set compiled into the library; data/prompts.txt ships the
    /// same text for runs that want to override it.
    static const std::string& builtin_text();

    static PromptLibrary builtin() { return parse(builtin_text()); }

    const PromptTemplate& get(const std::string& id) const {
        const auto it = templates_.find(id);
        if (it == templates_.end()) throw TemplateError("unknown template id \"" + id + "\"");
        return it->second;
    }

    bool has(const std::string& id) const { return templates_.count(id) != 0; }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        out.reserve(templates_.size());
        for (const auto& [id, t] : templates_) out.push_back(id);
        return out;
    }

    std::size_t size() const { return templates_.size(); }

private:
    static bool is_blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

    static std::optional<std::string> section_header(const std::string& line) {
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] != '[') return std::nullopt;
        std::size_t e = line.find_last_not_of(" \t");
        if (line[e] != ']' || e <= b + 1) return std::nullopt;
        const std::string id = line.substr(b + 1, e - b - 1);
        for (const char c : id)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' && c != '-')
                return std::nullopt;
        return id;
    }

    std::map<std::string, PromptTemplate> templates_;
};

inline const std::string& PromptLibrary::builtin_text() {
    static const std::string text = R"TPL(# Prompt templates. A line of the form [id] opens a section; the body runs
# to the next section. Placeholders: {category} {question} {sol} {st}.
# Literal braces are written {{ and }}.

[baseline]
You are an expert in Category: {category}.
Given a technical question in this category, Question: {question}.
List all relevant technical keywords, methods, algorithms, and designs.
No extra explanation; provide your keyword-rich solution.

[regular.initial]
You are Debater 1, an expert in Category: {category}.
Given a technical question, Question: {question}.
List the relevant technical keywords, methods, algorithms, and designs
without extra explanation. Provide your keyword-rich solution.

[regular.enrich]
You are Debater 2.
Given the same Category: {category} and Question: {question}, read
Debater 1's solution: {sol}.
Enrich this list by adding any missing technical keywords, methods,
algorithms, or designs.
No extra explanation; provide your keyword-rich solution.

[regular.refine.odd]
You are Debater 1.
Read Debater 2's list: {sol}.
Add any missing technical keywords, methods, algorithms, or designs
without explanation. Provide your keyword-rich solution.

[regular.refine.even]
You are Debater 2.
Read Debater 1's list: {sol}.
Add any missing technical keywords, methods, algorithms, or designs
without explanation. Provide your keyword-rich solution.

[decomp.initial]
You are an expert in {category} research.
Break down the following technical question into a flat, numbered list
of high-level steps.
Question (Category: {category}): {question}.
Focus on stages such as prediction, system modeling, optimization,
evaluation, etc. Do not use nested lists.

[decomp.review_initial]
You are an expert in {category} research.
Review the plan below and insert or refine any missing steps.
Category: {category}  Question: {question}.
Initial Decomposition: {sol}.
Keep the numbering; no extra explanation.

[decomp.review_later]
You are an expert in {category} research.
Review the plan below and insert or refine any missing steps.
Category: {category}  Question: {question}.
Previous Decomposition: {sol}.
Keep the numbering; no extra explanation.

[subtask.initial]
You are Debater 1, focusing on sub-task: {st} in Category: {category}.
Given Question: {question}, list the techniques, algorithms, and designs
that address this sub-task. No extra explanation.

[subtask.enrich]
You are Debater 2, focusing on sub-task: {st}.
Given Question: {question}, read Debater 1's answer: {sol}.
Enrich with any missing techniques, algorithms, or designs.
No extra explanation.

[subtask.refine.odd]
You are Debater 1, focusing on sub-task: {st}.
Given Question: {question}, read Debater 2's answer: {sol}.
Enrich with any missing techniques, algorithms, or designs.
No extra explanation.

[subtask.refine.even]
You are Debater 2, focusing on sub-task: {st}.
Given Question: {question}, read Debater 1's answer: {sol}.
Enrich with any missing techniques, algorithms, or designs.
No extra explanation.
)TPL";
    return text;
}

}  // namespace debatebench
