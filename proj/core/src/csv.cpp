#include "protosel/csv.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace protosel {

namespace {

struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line where the record starts
};

// RFC-4180 reader: quoted fields may contain commas, doubled quotes and line breaks.
class CsvReader {
public:
    explicit CsvReader(std::string_view text) : text_(text) {}

    bool next(Record& rec) {
        if (pos_ >= text_.size()) return false;
        rec.fields.clear();
        rec.line = line_;
        std::string field;
        bool quoted = false;
        bool was_quoted = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_++];
            if (quoted) {
                if (c == '"') {
                    if (pos_ < text_.size() && text_[pos_] == '"') {
                        field += '"';
                        ++pos_;
                    } else {
                        quoted = false;
                    }
                } else {
                    if (c == '\n') ++line_;
                    field += c;
                }
                continue;
            }
            if (c == '"' && field.empty() && !was_quoted) {
                quoted = was_quoted = true;
            } else if (c == ',') {
                rec.fields.push_back(std::move(field));
                field.clear();
                was_quoted = false;
            } else if (c == '\r' && pos_ < text_.size() && text_[pos_] == '\n') {
                // CRLF, handled by the '\n' branch next round
            } else if (c == '\n') {
                ++line_;
                rec.fields.push_back(std::move(field));
                return true;
            } else {
                field += c;
            }
        }
        if (quoted) throw ParseError("unterminated quoted field", rec.line);
        rec.fields.push_back(std::move(field));
        return true;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

bool blank(const Record& r) { return r.fields.size() == 1 && r.fields[0].empty(); }

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ConfigError("CSV column '" + name + "' not found in header");
    return static_cast<std::size_t>(it - header.begin());
}

template <class Int>
bool take_int(std::string_view& s, std::size_t digits, Int& out) {
    if (s.size() < digits) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + digits, out);
    if (ec != std::errc{} || p != s.data() + digits) return false;
    s.remove_prefix(digits);
    return true;
}

bool take_char(std::string_view& s, char c) {
    if (s.empty() || s.front() != c) return false;
    s.remove_prefix(1);
    return true;
}

}  // namespace

std::optional<long long> parse_timestamp_ms(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    // Plain number: seconds since epoch.
    {
        double seconds = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), seconds);
        if (ec == std::errc{} && p == text.data() + text.size())
            return static_cast<long long>(seconds * 1000.0);
    }

    using namespace std::chrono;
    std::string_view s = text;
    int y = 0;
    unsigned mo = 0, d = 0;
    if (!take_int(s, 4, y) || !take_char(s, '-') || !take_int(s, 2, mo) || !take_char(s, '-') ||
        !take_int(s, 2, d))
        return std::nullopt;
    const year_month_day ymd{year{y}, month{mo}, day{d}};
    if (!ymd.ok()) return std::nullopt;
    long long ms = duration_cast<milliseconds>(sys_days{ymd}.time_since_epoch()).count();
    if (s.empty()) return ms;

    if (!take_char(s, 'T') && !take_char(s, ' ')) return std::nullopt;
    int hh = 0, mm = 0, ss = 0;
    if (!take_int(s, 2, hh) || !take_char(s, ':') || !take_int(s, 2, mm)) return std::nullopt;
    if (take_char(s, ':') && !take_int(s, 2, ss)) return std::nullopt;
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
    ms += ((hh * 60LL + mm) * 60LL + ss) * 1000LL;

    if (take_char(s, '.')) {
        long long frac = 0;
        int digits = 0;
        while (!s.empty() && s.front() >= '0' && s.front() <= '9') {
            if (digits < 3) frac = frac * 10 + (s.front() - '0'), ++digits;
            s.remove_prefix(1);
        }
        if (digits == 0) return std::nullopt;
        while (digits < 3) frac *= 10, ++digits;
        ms += frac;
    }
    if (s.empty() || take_char(s, 'Z')) return s.empty() ? std::optional(ms) : std::nullopt;

    const int sign = s.front() == '-' ? -1 : s.front() == '+' ? 1 : 0;
    if (sign == 0) return std::nullopt;
    s.remove_prefix(1);
    int oh = 0, om = 0;
    if (!take_int(s, 2, oh)) return std::nullopt;
    if (take_char(s, ':') || (s.size() == 2)) {
        if (!take_int(s, 2, om)) return std::nullopt;
    }
    if (!s.empty()) return std::nullopt;
    return ms - sign * (oh * 60LL + om) * 60'000LL;
}

EventLog parse_csv(std::string_view document, const CsvColumns& columns) {
    CsvReader reader(document);
    Record header;
    if (!reader.next(header) || blank(header)) throw ParseError("CSV header row missing", 1);

    const auto case_col = column_index(header.fields, columns.case_id);
    const auto act_col = column_index(header.fields, columns.activity);
    std::optional<std::size_t> ts_col;
    if (columns.timestamp) ts_col = column_index(header.fields, *columns.timestamp);

    struct Event {
        long long time;
        std::size_t order;
        std::string activity;
    };
    std::vector<std::string> case_order;
    std::unordered_map<std::string, std::vector<Event>> cases;

    Record rec;
    std::size_t order = 0;
    while (reader.next(rec)) {
        if (blank(rec)) continue;
        const auto need = std::max({case_col, act_col, ts_col.value_or(0)});
        if (rec.fields.size() <= need)
            throw ParseError("row has " + std::to_string(rec.fields.size()) + " fields, expected at least " +
                                 std::to_string(need + 1),
                             rec.line);
        long long time = 0;
        if (ts_col) {
            auto t = parse_timestamp_ms(rec.fields[*ts_col]);
            if (!t) throw ParseError("unparsable timestamp '" + rec.fields[*ts_col] + "'", rec.line);
            time = *t;
        }
        auto [it, inserted] = cases.try_emplace(rec.fields[case_col]);
        if (inserted) case_order.push_back(rec.fields[case_col]);
        it->second.push_back({time, order++, std::move(rec.fields[act_col])});
    }

    EventLog log;
    for (const auto& id : case_order) {
        auto& events = cases[id];
        std::stable_sort(events.begin(), events.end(),
                         [](const Event& a, const Event& b) { return a.time < b.time; });
        Trace trace;
        trace.reserve(events.size());
        for (auto& e : events) trace.push_back(std::move(e.activity));
        log.add(std::move(trace));
    }
    return log;
}

EventLog parse_csv(std::istream& in, const CsvColumns& columns) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_csv(std::string_view(text), columns);
}

EventLog read_csv_file(const std::filesystem::path& path, const CsvColumns& columns) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return parse_csv(in, columns);
}

}  // namespace protosel
