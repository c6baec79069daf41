#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectable/cyclotomic.hpp"

namespace spectable {

struct OeisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SequenceRecord {
    std::string id;  // A-number
    std::vector<Integer> terms;
};

/// Records from an OEIS "stripped" file, kept in file order.
struct SequenceIndex {
    std::vector<SequenceRecord> records;
    std::vector<std::string> warnings;
};

constexpr std::size_t kDefaultMinOverlap = 8;

/// Parses lines `A000045 ,0,1,1,2,...`; `#` lines and blank lines are skipped.
SequenceIndex parse_stripped(const std::string& text, const std::string& source = "<input>");
SequenceIndex load_stripped(const std::string& path);

struct SequenceMatch {
    std::string id;
    std::size_t offset = 0;   // index in the record where the run starts
    std::size_t overlap = 0;  // terms compared before either side ran out
};

/// Records that contain the terms as a consecutive run. A record may end
/// early as long as at least min_overlap terms were compared. Ranked by
/// overlap (longest first), then A-number, then offset.
std::vector<SequenceMatch> match_sequence(const SequenceIndex& index, const std::vector<Integer>& terms,
                                          std::size_t min_overlap = kDefaultMinOverlap);

/// True when this build can query oeis.org.
bool online_search_available();
/// Number of oeis.org search results for the terms. Throws OeisError when
/// unavailable or on network failure.
long online_search_count(const std::vector<Integer>& terms);

}  // namespace spectable
