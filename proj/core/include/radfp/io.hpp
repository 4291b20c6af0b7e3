#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace radfp {

/// Shortest decimal form that round-trips a double ("%.17g" semantics via
/// snprintf); used for every number the tool writes so that repeated runs
/// emit byte-identical artifacts.
std::string g17(double v);

/// Writes comma-separated rows prefixed by a single `# key=value ...`
/// provenance line. All numeric cells go through g17.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& provenance);

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    /// Mixed row for tables with non-numeric cells.
    void row_text(const std::vector<std::string>& cells);

    bool good() const { return out_.good(); }

  private:
    std::ofstream out_;
};

/// Flat `key=value` text block writer (machine-parseable summaries).
class KeyValueWriter {
  public:
    KeyValueWriter(const std::string& path, const std::string& provenance);

    void put(const std::string& key, const std::string& value);
    void put(const std::string& key, double value);
    void put(const std::string& key, bool value);
    void put_count(const std::string& key, std::size_t value);

    bool good() const { return out_.good(); }

  private:
    std::ofstream out_;
};

}  // namespace radfp
