#include "invseq/io.hpp"

#include <sstream>

#include <json.hpp>

#include "invseq/core.hpp"

namespace invseq::io {

std::string emit_plain(const std::vector<Int>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ' ';
        out += terms[i].get_str();
    }
    return out;
}

std::string emit_bfile(const std::vector<Int>& terms, int offset) {
    std::string out;
    for (std::size_t n = static_cast<std::size_t>(offset); n < terms.size(); ++n)
        out += std::to_string(n) + " " + terms[n].get_str() + "\n";
    return out;
}

std::string emit_json(const std::string& key, const std::vector<Int>& terms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms) {
        if (t.fits_ulong_p()) arr.push_back(static_cast<std::uint64_t>(t.get_ui()));
        else arr.push_back(t.get_str());
    }
    return nlohmann::json{{"patterns", key}, {"terms", arr}}.dump();
}

std::vector<std::pair<int, Int>> parse_bfile(std::istream& in) {
    std::vector<std::pair<int, Int>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long n;
        std::string value, rest;
        if (!(ls >> n >> value) || (ls >> rest))
            throw ParseError("b-file line " + std::to_string(lineno) + ": expected 'n a(n)'");
        Int v;
        if (v.set_str(value, 10) != 0) throw ParseError("b-file line " + std::to_string(lineno) + ": bad integer");
        if (!rows.empty() && n != rows.back().first + 1)
            throw ParseError("b-file line " + std::to_string(lineno) + ": indices must be consecutive");
        rows.emplace_back(static_cast<int>(n), std::move(v));
    }
    return rows;
}

std::vector<Int> terms_from_bfile(const std::vector<std::pair<int, Int>>& rows, int offset) {
    if (rows.empty()) return {Int(1)};
    if (rows.front().first != offset)
        throw ParseError("b-file starts at " + std::to_string(rows.front().first) + ", expected " +
                         std::to_string(offset));
    std::vector<Int> terms(static_cast<std::size_t>(offset), Int(1));
    for (const auto& r : rows) terms.push_back(r.second);
    return terms;
}

}  // namespace invseq::io
