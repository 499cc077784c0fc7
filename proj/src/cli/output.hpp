#pragma once

#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace s2re::cli {

/// Rounds to 12 significant digits so JSON output is stable byte for byte.
nlohmann::json number(double x);
nlohmann::json numbers(const std::vector<double>& xs);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void write_csv(std::ostream& out, const CsvTable& table);
void write_json(std::ostream& out, const nlohmann::json& doc);

/// Either the file at path or the fallback stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback);
    std::ostream& stream() { return file_ ? *file_ : fallback_; }
    bool ok() const { return !file_ || file_->good(); }

private:
    std::optional<std::ofstream> file_;
    std::ostream& fallback_;
};

/// Parses "a,b,c" into exactly three numbers. Throws s2re::Error(InvalidArgument).
std::vector<double> parse_triple(const std::string& text, const char* what);

} // namespace s2re::cli
