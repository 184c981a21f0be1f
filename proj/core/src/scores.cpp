#include "ranktau/scores.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace ranktau {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

// Calls fn(line, line_number) for every non-blank line; handles LF and CRLF.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        if (!is_blank(line)) fn(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

double parse_double(std::string_view field, std::size_t line_no) {
    field = trim(field);
    if (field.empty()) throw ParseError(line_no, "empty field");
    // std::from_chars takes no leading '+'.
    if (field.front() == '+') field.remove_prefix(1);
    double value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec == std::errc::invalid_argument || ptr != last) {
        throw ParseError(line_no, "not a number: '" + std::string(field) + "'");
    }
    if (ec == std::errc::result_out_of_range || !std::isfinite(value)) {
        throw ParseError(line_no, "score is not a finite number: '" + std::string(field) + "'");
    }
    return value;
}

std::string_view select_column(std::string_view line, std::size_t column, char delimiter,
                               std::size_t line_no) {
    std::size_t field = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == delimiter) {
            if (field == column) return line.substr(start, i - start);
            ++field;
            start = i + 1;
        }
    }
    throw ParseError(line_no, "line has " + std::to_string(field) + " field(s), column " +
                                  std::to_string(column) + " requested");
}

}  // namespace

ScoreVector parse_scores(std::string_view text, const ParseOptions& opts) {
    ScoreVector out;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        std::string_view field =
            opts.column ? select_column(line, *opts.column, opts.delimiter, line_no) : line;
        out.push_back(parse_double(field, line_no));
    });
    if (out.empty()) throw ParseError(0, "no scores in input");
    return out;
}

RankAssignment parse_ranks(std::string_view text) {
    RankAssignment out;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        std::string_view field = trim(line);
        if (field == "inf") {
            out.push_back(kInfiniteRank);
            return;
        }
        Rank value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            throw ParseError(line_no, "expected a natural number or 'inf', got '" +
                                          std::string(field) + "'");
        }
        out.push_back(value);
    });
    if (out.empty()) throw ParseError(0, "no ranks in input");
    if (!is_valid_rank_assignment(out)) {
        throw ParseError(0, "finite ranks must be distinct and form a prefix 0..m-1");
    }
    return out;
}

bool is_valid_rank_assignment(const RankAssignment& ranks) {
    std::size_t finite = 0;
    for (Rank r : ranks) {
        if (r != kInfiniteRank) ++finite;
    }
    std::vector<bool> seen(finite, false);
    for (Rank r : ranks) {
        if (r == kInfiniteRank) continue;
        if (r >= finite || seen[r]) return false;
        seen[r] = true;
    }
    return true;
}

std::vector<std::size_t> lex_order(const ScoreVector& primary, const ScoreVector& secondary) {
    if (primary.size() != secondary.size()) {
        throw std::invalid_argument("lex_order: score vectors differ in length (" +
                                    std::to_string(primary.size()) + " vs " +
                                    std::to_string(secondary.size()) + ")");
    }
    struct Key {
        double a, b;
        std::size_t idx;
    };
    std::vector<Key> keys(primary.size());
    for (std::size_t i = 0; i < primary.size(); ++i) keys[i] = {primary[i], secondary[i], i};
    std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
        if (x.a != y.a) return x.a > y.a;
        if (x.b != y.b) return x.b > y.b;
        return x.idx < y.idx;
    });
    std::vector<std::size_t> order(keys.size());
    for (std::size_t p = 0; p < keys.size(); ++p) order[p] = keys[p].idx;
    return order;
}

RankAssignment lex_rank(const ScoreVector& primary, const ScoreVector& secondary) {
    const auto order = lex_order(primary, secondary);
    RankAssignment ranks(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) ranks[order[p]] = p;
    return ranks;
}

RankAssignment truncate_ranks(RankAssignment ranks, Rank k) {
    for (Rank& r : ranks) {
        if (r >= k) r = kInfiniteRank;
    }
    return ranks;
}

std::string format_score(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace ranktau
