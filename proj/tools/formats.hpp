#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdinf/errors.hpp"

namespace mdinf::cli {

enum class Format { csv, json_lines, pretty };

Format parse_format(const std::string& name);

// Shortest decimal string that parses back to exactly x.
std::string render_exact(double x);

// x rounded to `digits` significant figures.
std::string render_sig(double x, int digits);

// RFC-4180 quoting, applied only when the cell needs it.
std::string csv_escape(const std::string& cell);

// One output record; insertion order is preserved so CSV columns and pretty
// columns come out in the order fields were added.
using Record = nlohmann::ordered_json;

// Streams homogeneous records as CSV rows, JSON lines, or an aligned text
// table. Machine formats render doubles with full round-trip precision; the
// significant-digit setting shapes only the pretty table.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format, int digits);

    // Pretty-only annotation line (prefixed '#'); machine formats skip it,
    // their records already echo the parameters.
    void note(const std::string& text);

    // Starts a record section. May be called again for a section with a
    // different column set (CSV then emits a fresh header row).
    void begin(const std::vector<std::string>& columns);
    void write(const Record& record);
    // Flushes the aligned table in pretty mode; required to see any output.
    void end();

    // Vertical key/value block for single-record commands: aligned
    // `key value` lines in pretty mode, a one-row section otherwise.
    void write_vertical(const Record& record);

    int digits() const { return digits_; }
    Format format() const { return format_; }

private:
    std::string cell_machine(const Record& value) const;
    std::string cell_pretty(const Record& value) const;

    std::ostream& out_;
    Format format_;
    int digits_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> pretty_rows_;
};

}  // namespace mdinf::cli
