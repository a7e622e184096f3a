#ifndef CWL_BFILE_HPP
#define CWL_BFILE_HPP

#include "cwl/numeric.hpp"

#include <filesystem>
#include <utility>
#include <vector>

namespace cwl::io {

// A b-file: "index value" per line, '#' comments and blank lines ignored.
// Indices must be strictly increasing and contiguous.
struct SequenceFile {
    long long offset = 0;  // first index
    std::vector<std::pair<long long, Count>> terms;
};

struct BFileParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SequenceFile parse_bfile(const std::filesystem::path& path);

}  // namespace cwl::io

#endif
