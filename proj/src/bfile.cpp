#include "cwl/bfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cwl::io {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

SequenceFile parse_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BFileParseError("cannot open b-file: " + path.string());
    SequenceFile file;
    std::string line;
    long long line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream fields(line);
        std::string index_token, value_token, extra;
        if (!(fields >> index_token)) continue;  // blank line
        const auto fail = [&](const std::string& why) {
            throw BFileParseError(path.string() + ":" + std::to_string(line_no) + ": " + why);
        };
        if (!(fields >> value_token)) fail("missing value field");
        if (fields >> extra) fail("trailing junk \"" + extra + "\"");
        if (!is_integer_token(index_token)) fail("malformed index \"" + index_token + "\"");
        if (!is_integer_token(value_token)) fail("malformed value \"" + value_token + "\"");
        const long long index = std::stoll(index_token);
        if (first) {
            file.offset = index;
            first = false;
        } else if (index != file.terms.back().first + 1) {
            fail("indices must be strictly increasing and contiguous");
        }
        file.terms.emplace_back(index, Count(value_token));
    }
    return file;
}

}  // namespace cwl::io
