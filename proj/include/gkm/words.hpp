#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gkm/symfunc.hpp"

namespace gkm {

/// Sentinel slot value for the gap (wildcard) symbol.
inline constexpr std::int16_t kGap = -1;

/// A word over the product alphabet: one slot per position, each either a
/// letter 0..b_i-1 or kGap.
struct Word {
    std::vector<std::int16_t> slots;

    Word() = default;
    explicit Word(std::vector<std::int16_t> s) : slots(std::move(s)) {}

    int length() const { return static_cast<int>(slots.size()); }
    int gap_count() const;
    bool gap_free() const { return gap_count() == 0; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Sorted set of (0-based) positions.
using PosSet = std::vector<int>;

/// Per-position alphabet sizes b_i >= 2 plus optional symbol tables used for
/// text I/O. Immutable after construction.
class Alphabet {
public:
    /// Letters render as decimal strings ("0", "1", ...).
    explicit Alphabet(std::vector<int> sizes);
    /// symbols[i] must hold exactly sizes[i] distinct names; names must not
    /// contain the reserved characters '-', '|', ',' or whitespace.
    Alphabet(std::vector<int> sizes, std::vector<std::vector<std::string>> symbols);

    int length() const { return static_cast<int>(sizes_.size()); }
    int size(int pos) const { return sizes_.at(static_cast<std::size_t>(pos)); }
    const std::vector<int>& sizes() const { return sizes_; }
    IntSeq sizes_seq() const { return IntSeq(sizes_.begin(), sizes_.end()); }
    const std::string& symbol(int pos, int letter) const;

    /// Number of gap-free words, prod b_i.
    mpz_class sigma_size() const;

    /// True when words render '|'-joined (some symbol name longer than one char).
    bool joined_form() const { return joined_; }

    /// Throws std::invalid_argument when w has the wrong length or a letter
    /// out of range for its position.
    void check_word(const Word& w) const;

    std::string format(const Word& w) const;
    /// Accepts both the joined and the concatenated form; throws on garbage.
    Word parse(std::string_view text) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<int> sizes_;
    std::vector<std::vector<std::string>> symbols_;
    bool joined_ = false;
};

// Canonical enumerations. U is mixed-radix lexicographic; V and V' order by
// the set of non-gap positions (lexicographic over position combinations),
// then by the non-gap letters in mixed-radix order.
std::vector<Word> enumerate_U(const Alphabet& ab);
std::vector<Word> enumerate_V(const Alphabet& ab, int k);
std::vector<Word> enumerate_Vprime(const Alphabet& ab, int n);
std::vector<Word> enumerate_Vprime_upto(const Alphabet& ab, int k);

/// Canonical column index of a gap-free word: sum u_i * prod_{j>i} b_j.
std::size_t u_index(const Alphabet& ab, const Word& u);

/// True iff every non-gap position of v carries the same letter as u.
/// u must be gap-free.
bool matches(const Word& u, const Word& v);

/// All v with exactly l-k gaps matching u, in canonical V order.
std::vector<Word> match_set_M(const Alphabet& ab, const Word& u, int k);

/// All gap-free words matching v, in canonical U order.
std::vector<Word> match_set_N(const Alphabet& ab, const Word& v);

PosSet gap_set(const Word& w);
PosSet nongap_set(const Word& w);

/// Subsequence of the alphabet sizes at the given positions.
IntSeq restrict_sizes(const Alphabet& ab, const PosSet& positions);

/// (P, Q): non-gap positions of v where v agrees / disagrees with the
/// gap-free word u.
std::pair<PosSet, PosSet> agree_disagree(const Word& u, const Word& v);

/// (A0, A1, A2, A3) = (G1 & G2, G1 - G2, G2 - G1, ~G1 & ~G2); disjoint,
/// union is all positions.
std::array<PosSet, 4> gap_partition(const Word& v1, const Word& v2);

/// Product partial order with 0 < 1 < ... < b_i-1 < gap per position.
bool word_leq(const Word& x, const Word& y);

/// Calls fn(combo) for every size-m subset of {0,...,l-1} in lexicographic
/// order; combo is sorted ascending.
void for_each_combination(int l, int m, const std::function<void(const PosSet&)>& fn);

}  // namespace gkm
