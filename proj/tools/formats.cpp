#include "formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace mdinf::cli {

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json-lines") return Format::json_lines;
    if (name == "pretty") return Format::pretty;
    throw validation_error("unknown format: " + name);
}

std::string render_exact(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, ptr);
}

std::string render_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

RecordWriter::RecordWriter(std::ostream& out, Format format, int digits)
    : out_(out), format_(format), digits_(digits) {}

void RecordWriter::note(const std::string& text) {
    if (format_ == Format::pretty) out_ << "# " << text << "\n";
}

void RecordWriter::begin(const std::vector<std::string>& columns) {
    end();
    columns_ = columns;
    if (format_ == Format::csv) {
        for (size_t i = 0; i < columns_.size(); ++i) {
            if (i) out_ << ',';
            out_ << csv_escape(columns_[i]);
        }
        out_ << '\n';
    } else if (format_ == Format::pretty) {
        pretty_rows_.push_back(columns_);
    }
}

std::string RecordWriter::cell_machine(const Record& value) const {
    if (value.is_null()) return "";
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
    if (value.is_number_float()) {
        const double x = value.get<double>();
        return std::isfinite(x) ? render_exact(x) : "";
    }
    return value.get<std::string>();
}

std::string RecordWriter::cell_pretty(const Record& value) const {
    if (value.is_number_float()) {
        const double x = value.get<double>();
        return std::isfinite(x) ? render_sig(x, digits_) : "-";
    }
    if (value.is_null()) return "-";
    if (value.is_boolean()) return value.get<bool>() ? "yes" : "no";
    if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
    return value.get<std::string>();
}

void RecordWriter::write(const Record& record) {
    if (format_ == Format::json_lines) {
        // Non-finite doubles serialize as null; dump() keeps round-trip
        // precision for everything finite.
        out_ << record.dump() << '\n';
        return;
    }
    std::vector<std::string> cells;
    cells.reserve(columns_.size());
    for (const auto& col : columns_) {
        auto it = record.find(col);
        const Record empty;
        const Record& v = (it == record.end()) ? empty : *it;
        cells.push_back(format_ == Format::csv ? cell_machine(v) : cell_pretty(v));
    }
    if (format_ == Format::csv) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << csv_escape(cells[i]);
        }
        out_ << '\n';
    } else {
        pretty_rows_.push_back(std::move(cells));
    }
}

void RecordWriter::end() {
    if (format_ != Format::pretty || pretty_rows_.empty()) {
        pretty_rows_.clear();
        columns_.clear();
        return;
    }
    std::vector<size_t> width(columns_.size(), 0);
    for (const auto& row : pretty_rows_) {
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : pretty_rows_) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out_ << "  ";
            out_ << row[i];
            if (i + 1 < row.size()) out_ << std::string(width[i] - row[i].size(), ' ');
        }
        out_ << '\n';
    }
    pretty_rows_.clear();
    columns_.clear();
}

void RecordWriter::write_vertical(const Record& record) {
    if (format_ != Format::pretty) {
        std::vector<std::string> columns;
        for (auto it = record.begin(); it != record.end(); ++it) columns.push_back(it.key());
        begin(columns);
        write(record);
        end();
        return;
    }
    size_t width = 0;
    for (auto it = record.begin(); it != record.end(); ++it) {
        width = std::max(width, it.key().size());
    }
    for (auto it = record.begin(); it != record.end(); ++it) {
        out_ << it.key() << std::string(width - it.key().size(), ' ') << "  "
             << cell_pretty(it.value()) << '\n';
    }
}

}  // namespace mdinf::cli
