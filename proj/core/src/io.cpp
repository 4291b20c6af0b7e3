#include "radfp/io.hpp"

#include <cstdio>

namespace radfp {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& provenance)
    : out_(path, std::ios::binary) {
    out_ << "# " << provenance << "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << g17(values[i]);
    }
    out_ << "\n";
}

void CsvWriter::row_text(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << "\n";
}

KeyValueWriter::KeyValueWriter(const std::string& path, const std::string& provenance)
    : out_(path, std::ios::binary) {
    out_ << "# " << provenance << "\n";
}

void KeyValueWriter::put(const std::string& key, const std::string& value) {
    out_ << key << '=' << value << "\n";
}

void KeyValueWriter::put(const std::string& key, double value) { put(key, g17(value)); }

void KeyValueWriter::put(const std::string& key, bool value) {
    put(key, std::string(value ? "true" : "false"));
}

void KeyValueWriter::put_count(const std::string& key, std::size_t value) {
    put(key, std::to_string(value));
}

}  // namespace radfp
