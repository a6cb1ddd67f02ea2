#pragma once

// Deterministic rendering of command results as an aligned text table,
// a single JSON document, or CSV.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hilbpts/bigint.hpp"

namespace hilb::cli {

inline constexpr const char* kVersion = "0.1.0";

/// A table cell. Integers keep their exact decimal text.
struct Cell {
    enum class Kind { integer, text, boolean };
    Kind kind = Kind::text;
    std::string repr;

    Cell() = default;
    Cell(const BigInt& v) : kind(Kind::integer), repr(v.str()) {}
    template <std::integral T>
        requires(!std::same_as<T, bool>)
    Cell(T v) : kind(Kind::integer), repr(std::to_string(v)) {}
    Cell(bool v) : kind(Kind::boolean), repr(v ? "true" : "false") {}
    Cell(std::string v) : kind(Kind::text), repr(std::move(v)) {}
    Cell(const char* v) : kind(Kind::text), repr(v) {}

    /// Integers that fit in 64 bits become JSON numbers; wider ones strings.
    nlohmann::json to_json() const {
        switch (kind) {
        case Kind::boolean: return repr == "true";
        case Kind::text: return repr;
        case Kind::integer: {
            const BigInt v(repr);
            if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
                return static_cast<std::int64_t>(v);
            return repr;
        }
        }
        return nullptr;
    }
};

struct OutputRecord {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<std::pair<std::string, Cell>> scalars; // kept in insertion order for text output
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void scalar(std::string key, Cell value) { scalars.emplace_back(std::move(key), std::move(value)); }
    void row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }

    nlohmann::json to_json() const {
        nlohmann::json payload = nlohmann::json::object();
        for (const auto& [k, v] : scalars)
            payload[k] = v.to_json();
        if (!columns.empty()) {
            payload["columns"] = columns;
            nlohmann::json rs = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json jr = nlohmann::json::array();
                for (const Cell& c : r)
                    jr.push_back(c.to_json());
                rs.push_back(std::move(jr));
            }
            payload["rows"] = std::move(rs);
        }
        nlohmann::json doc;
        doc["command"] = command;
        doc["parameters"] = parameters;
        doc["payload"] = std::move(payload);
        doc["version"] = kVersion;
        return doc;
    }
};

inline void write_table(std::ostream& os, const OutputRecord& rec) {
    os << "# " << rec.command;
    for (const auto& [k, v] : rec.parameters)
        os << ' ' << k << '=' << v;
    os << '\n';
    for (const auto& [k, v] : rec.scalars)
        os << k << ": " << v.repr << '\n';
    if (rec.columns.empty())
        return;
    std::vector<std::size_t> width(rec.columns.size());
    for (std::size_t c = 0; c < rec.columns.size(); ++c) {
        width[c] = rec.columns[c].size();
        for (const auto& r : rec.rows)
            width[c] = std::max(width[c], r[c].repr.size());
    }
    auto line = [&](auto&& text_of) {
        for (std::size_t c = 0; c < width.size(); ++c) {
            const std::string s = text_of(c);
            os << s;
            if (c + 1 < width.size())
                os << std::string(width[c] - s.size() + 2, ' ');
        }
        os << '\n';
    };
    line([&](std::size_t c) { return rec.columns[c]; });
    for (const auto& r : rec.rows)
        line([&](std::size_t c) { return r[c].repr; });
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

/// Payload only: the table if there is one, else key,value pairs.
inline void write_csv(std::ostream& os, const OutputRecord& rec) {
    auto emit = [&os](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            os << (i ? "," : "") << csv_escape(fields[i]);
        os << '\n';
    };
    if (rec.columns.empty()) {
        emit({"key", "value"});
        for (const auto& [k, v] : rec.scalars)
            emit({k, v.repr});
        return;
    }
    emit(rec.columns);
    for (const auto& r : rec.rows) {
        std::vector<std::string> f;
        for (const Cell& c : r)
            f.push_back(c.repr);
        emit(f);
    }
}

enum class Format { table, json, csv };

inline void write(std::ostream& os, const OutputRecord& rec, Format fmt) {
    switch (fmt) {
    case Format::table: write_table(os, rec); break;
    case Format::json: os << rec.to_json().dump(2) << '\n'; break;
    case Format::csv: write_csv(os, rec); break;
    }
}

} // namespace hilb::cli
