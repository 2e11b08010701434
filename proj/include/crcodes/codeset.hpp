#pragma once

// Finite vertex sets in a Hamming space, kept as strictly increasing rank
// lists.  A lazily built bitset mirror provides O(1) membership tests when
// the ambient space is small enough (q^n <= 2^30).

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "crcodes/space.hpp"

namespace crcodes {

class CodeSet {
public:
    CodeSet() = default;
    CodeSet(const Space& sp, std::vector<std::uint64_t> ranks)
        : space_(sp), ranks_(std::move(ranks)) {
        std::sort(ranks_.begin(), ranks_.end());
        ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
        if (!ranks_.empty() && ranks_.back() >= sp.size())
            throw std::invalid_argument("CodeSet: rank out of range");
    }

    const Space& space() const { return space_; }
    const std::vector<std::uint64_t>& ranks() const { return ranks_; }
    std::size_t size() const { return ranks_.size(); }
    bool empty() const { return ranks_.empty(); }

    bool contains(std::uint64_t r) const {
        if (bitset_) return ((*bitset_)[r >> 6] >> (r & 63)) & 1;
        return std::binary_search(ranks_.begin(), ranks_.end(), r);
    }

    // Builds the bitset mirror if the ambient space is small enough.
    void build_bitset() const {
        static constexpr std::uint64_t kLimit = std::uint64_t(1) << 30;
        if (bitset_ || space_.size() > kLimit) return;
        bitset_ = std::make_shared<std::vector<std::uint64_t>>((space_.size() + 63) / 64, 0);
        for (auto r : ranks_) (*bitset_)[r >> 6] |= std::uint64_t(1) << (r & 63);
    }

    Word word(std::size_t i) const { return Word::from_rank(space_, ranks_[i]); }

    bool operator==(const CodeSet& o) const {
        return space_ == o.space_ && ranks_ == o.ranks_;
    }

private:
    Space space_;
    std::vector<std::uint64_t> ranks_;
    mutable std::shared_ptr<std::vector<std::uint64_t>> bitset_;
};

// All words at distance exactly d from center, as a CodeSet.
CodeSet sphere(const Word& center, int d);

// Minimum distance between distinct members; nullopt for |C| < 2.
std::optional<int> min_distance(const CodeSet& c);

// A k-face: axis-aligned subcube with the given free coordinates; fixed
// coordinates are taken from the anchor (whose free coordinates are zeroed).
struct Face {
    Space space;
    std::vector<int> free_coords;   // strictly increasing
    std::uint64_t anchor = 0;       // rank with free coordinates set to 0

    CodeSet expand() const;
    bool contains(std::uint64_t r) const;
    // Hamming distance from a word to the nearest face member.
    int distance_to(std::uint64_t r) const;
};

// Distance between two faces: minimum over member pairs.
int face_distance(const Face& a, const Face& b);

// All 1-faces (rows) of the space, ordered by (direction, anchor rank).
// There are n * q^(n-1) of them.
std::vector<Face> enumerate_rows(const Space& sp);

// --- plain-text code files ------------------------------------------------
// Line 1: "n q"; then one word per line as n space-separated digits.
// Blank lines and lines starting with '#' are ignored.

CodeSet read_code(std::istream& in);
CodeSet read_code_file(const std::string& path);
void write_code(std::ostream& out, const CodeSet& c);
void write_code_file(const std::string& path, const CodeSet& c);

// Error type carrying a line number for parse failures.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace crcodes
