#include "io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "nfbeam/errors.hpp"

namespace nfbeam::app {

namespace {

constexpr char kConfigPrefix[] = "# config: ";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const std::to_chars_result res = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, res.ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const std::from_chars_result res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw config_error("not a number: '" + text + "'");
    }
    return value;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001B3ULL;
    }
    char buffer[19] = "0x";
    for (int i = 0; i < 16; ++i) {
        buffer[2 + i] = "0123456789abcdef"[(hash >> (60 - 4 * i)) & 0xF];
    }
    return std::string(buffer, 18);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw config_error("cannot open output file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw config_error("failed writing output file '" + path + "'");
    }
}

std::string render_csv(const csv_document& doc) {
    std::ostringstream out;
    out << kConfigPrefix << doc.config.dump() << '\n';
    for (std::size_t i = 0; i < doc.header.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << doc.header[i];
    }
    out << '\n';
    for (const std::vector<double>& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << format_double(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

csv_document parse_csv(const std::string& text) {
    std::istringstream in(text);
    csv_document doc;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.rfind(kConfigPrefix, 0) == 0) {
            doc.config = nlohmann::ordered_json::parse(line.substr(sizeof(kConfigPrefix) - 1));
            continue;
        }
        if (line[0] == '#') {
            continue;
        }
        if (!have_header) {
            doc.header = split(line, ',');
            have_header = true;
            continue;
        }
        const std::vector<std::string> fields = split(line, ',');
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& field : fields) {
            row.push_back(parse_double(field));
        }
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

std::string render_json(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

}  // namespace nfbeam::app
