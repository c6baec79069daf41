#include "spectable/oeis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spectable {

namespace {

bool valid_id(const std::string& id) {
    return id.size() == 7 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

SequenceIndex parse_stripped(const std::string& text, const std::string& source) {
    SequenceIndex index;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    std::vector<std::string> seen;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto fail = [&](const std::string& why) {
            throw OeisError(source + ":" + std::to_string(number) + ": " + why);
        };
        const auto space = line.find(' ');
        if (space == std::string::npos) fail("expected 'A-number ,terms,'");
        SequenceRecord rec{line.substr(0, space), {}};
        if (!valid_id(rec.id)) fail("bad A-number '" + rec.id + "'");
        std::string rest = line.substr(space + 1);
        if (rest.empty() || rest[0] != ',') fail("terms must start with ','");
        std::size_t pos = 1;
        while (pos < rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string term = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (term.empty() || term.find_first_not_of("-0123456789") != std::string::npos || term == "-")
                fail("bad term '" + term + "'");
            rec.terms.emplace_back(term);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (std::find(seen.begin(), seen.end(), rec.id) != seen.end()) fail("duplicate " + rec.id);
        seen.push_back(rec.id);
        index.records.push_back(std::move(rec));
    }
    if (index.records.empty()) index.warnings.push_back(source + ": no sequences found");
    return index;
}

SequenceIndex load_stripped(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw OeisError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stripped(buf.str(), path);
}

std::vector<SequenceMatch> match_sequence(const SequenceIndex& index, const std::vector<Integer>& terms,
                                          std::size_t min_overlap) {
    if (min_overlap == 0) throw std::invalid_argument("minimum overlap must be positive");
    if (terms.size() < min_overlap)
        throw std::invalid_argument("need at least " + std::to_string(min_overlap) + " terms, got " +
                                    std::to_string(terms.size()));
    if (std::all_of(terms.begin(), terms.end(), [&](const Integer& t) { return t == terms.front(); }))
        throw std::invalid_argument("all terms equal " + terms.front().get_str() +
                                    "; such runs match too many sequences, request more terms or another column");
    std::vector<SequenceMatch> out;
    for (const auto& rec : index.records) {
        const auto& r = rec.terms;
        for (std::size_t off = 0; off + min_overlap <= r.size(); ++off) {
            const std::size_t len = std::min(terms.size(), r.size() - off);
            if (std::equal(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(len),
                           r.begin() + static_cast<std::ptrdiff_t>(off)))
                out.push_back({rec.id, off, len});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const SequenceMatch& a, const SequenceMatch& b) {
        if (a.overlap != b.overlap) return a.overlap > b.overlap;
        if (a.id != b.id) return a.id < b.id;
        return a.offset < b.offset;
    });
    return out;
}

#ifndef SPECTABLE_HAVE_ONLINE_OEIS
bool online_search_available() { return false; }
long online_search_count(const std::vector<Integer>&) {
    throw OeisError("online OEIS queries are not enabled in this build");
}
#endif

}  // namespace spectable
