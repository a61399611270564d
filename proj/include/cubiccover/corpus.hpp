#ifndef CUBICCOVER_CORPUS_HPP
#define CUBICCOVER_CORPUS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace cubiccover {

enum class CorpusFormat { automatic, mgf, graph6 };

/// One graph of a multi-graph file, or the reason it could not be read.
struct CorpusEntry {
    std::size_t index = 0;
    std::string id;
    std::string source; // the raw block or line
    std::optional<Graph> graph;
    std::optional<Error> error;
};

namespace detail {

inline bool looks_like_mgf(std::string_view text)
{
    for (auto raw : split_lines(text)) {
        auto line = strip_comment(raw);
        if (line.empty())
            continue;
        long long a = 0;
        long long b = 0;
        return parse_int_pair(line, a, b);
    }
    return false;
}

inline std::string trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return std::string(s);
}

} // namespace detail

/// Splits a corpus into graphs: graph6 has one graph per line; MGF blocks
/// are separated by blank lines, and a leading "# name" line names a block.
/// Unreadable graphs are kept as entries carrying their error.
inline std::vector<CorpusEntry> read_corpus(std::string_view text, CorpusFormat format = CorpusFormat::automatic)
{
    if (format == CorpusFormat::automatic)
        format = detail::looks_like_mgf(text) ? CorpusFormat::mgf : CorpusFormat::graph6;
    std::vector<CorpusEntry> out;
    auto parse_into = [&](CorpusEntry& entry, auto&& parse) {
        try {
            entry.graph = parse();
        } catch (const Error& e) {
            entry.error = e;
        }
    };

    if (format == CorpusFormat::graph6) {
        for (auto raw : detail::split_lines(text)) {
            std::string line = detail::trim(raw);
            if (line.empty() || line.starts_with('#'))
                continue;
            CorpusEntry entry;
            entry.index = out.size();
            entry.id = line.starts_with(">>graph6<<") ? line.substr(10) : line;
            entry.source = line;
            parse_into(entry, [&] { return parse_graph6(line); });
            out.push_back(std::move(entry));
        }
        return out;
    }

    std::vector<std::string_view> block;
    auto flush = [&] {
        bool has_content = false;
        std::string name;
        std::string joined;
        for (auto l : block) {
            joined.append(l);
            joined.push_back('\n');
            auto stripped = detail::trim(l);
            if (stripped.starts_with('#')) {
                if (name.empty() && !has_content)
                    name = detail::trim(std::string_view(stripped).substr(1));
            } else if (!stripped.empty()) {
                has_content = true;
            }
        }
        block.clear();
        if (!has_content)
            return;
        CorpusEntry entry;
        entry.index = out.size();
        entry.id = name.empty() ? "graph " + std::to_string(entry.index) : name;
        entry.source = joined;
        parse_into(entry, [&] { return parse_mgf(joined); });
        out.push_back(std::move(entry));
    };
    for (auto raw : detail::split_lines(text)) {
        if (detail::trim(raw).empty())
            flush();
        else
            block.push_back(raw);
    }
    flush();
    return out;
}

} // namespace cubiccover

#endif
