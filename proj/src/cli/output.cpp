#include "output.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include "s2re/error.hpp"
#include "s2re/format.hpp"

namespace s2re::cli {

nlohmann::json number(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return std::strtod(format_number(x).c_str(), nullptr);
}

nlohmann::json numbers(const std::vector<double>& xs)
{
    auto arr = nlohmann::json::array();
    for (double x : xs)
        arr.push_back(number(x));
    return arr;
}

void write_csv(std::ostream& out, const CsvTable& table)
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    line(table.header);
    for (const auto& r : table.rows)
        line(r);
}

void write_json(std::ostream& out, const nlohmann::json& doc)
{
    out << doc.dump(2) << '\n';
}

Sink::Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback)
{
    if (!path.empty() && path != "-")
        file_.emplace(path);
}

std::vector<double> parse_triple(const std::string& text, const char* what)
{
    std::vector<double> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(v))
            throw Error(Errc::InvalidArgument, std::string(what) + ": '" + item + "' is not a number");
        vals.push_back(v);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (vals.size() != 3)
        throw Error(Errc::InvalidArgument, std::string(what) + " needs exactly three comma-separated values");
    return vals;
}

} // namespace s2re::cli
