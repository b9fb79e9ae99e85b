#include "gkm/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

int Word::gap_count() const {
    int g = 0;
    for (auto s : slots)
        if (s == kGap) ++g;
    return g;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a over the slot values
    std::size_t h = 1469598103934665603ull;
    for (auto s : w.slots) {
        h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(s));
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

const char* kReserved = "-|,";

std::vector<std::vector<std::string>> default_symbols(const std::vector<int>& sizes) {
    std::vector<std::vector<std::string>> out(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out[i].reserve(static_cast<std::size_t>(sizes[i]));
        for (int c = 0; c < sizes[i]; ++c) out[i].push_back(std::to_string(c));
    }
    return out;
}

void validate_sizes(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("alphabet: length must be >= 1");
    for (int b : sizes)
        if (b < 2) throw std::invalid_argument("alphabet: every position size must be >= 2");
}

}  // namespace

Alphabet::Alphabet(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    validate_sizes(sizes_);
    symbols_ = default_symbols(sizes_);
    for (const auto& table : symbols_)
        for (const auto& name : table)
            if (name.size() > 1) joined_ = true;
}

Alphabet::Alphabet(std::vector<int> sizes, std::vector<std::vector<std::string>> symbols)
    : sizes_(std::move(sizes)), symbols_(std::move(symbols)) {
    validate_sizes(sizes_);
    if (symbols_.size() != sizes_.size())
        throw std::invalid_argument("alphabet: one symbol table per position required");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        const auto& table = symbols_[i];
        if (static_cast<int>(table.size()) != sizes_[i])
            throw std::invalid_argument("alphabet: symbol table size must equal position size");
        for (const auto& name : table) {
            if (name.empty()) throw std::invalid_argument("alphabet: empty symbol name");
            if (name.find_first_of(kReserved) != std::string::npos ||
                name.find_first_of(" \t\r\n") != std::string::npos)
                throw std::invalid_argument("alphabet: symbol name uses a reserved character: " + name);
            if (name.size() > 1) joined_ = true;
        }
        for (std::size_t a = 0; a < table.size(); ++a)
            for (std::size_t b = a + 1; b < table.size(); ++b)
                if (table[a] == table[b])
                    throw std::invalid_argument("alphabet: duplicate symbol name: " + table[a]);
    }
}

const std::string& Alphabet::symbol(int pos, int letter) const {
    return symbols_.at(static_cast<std::size_t>(pos)).at(static_cast<std::size_t>(letter));
}

mpz_class Alphabet::sigma_size() const {
    mpz_class p = 1;
    for (int b : sizes_) p *= b;
    return p;
}

void Alphabet::check_word(const Word& w) const {
    if (w.length() != length())
        throw std::invalid_argument("word length does not match alphabet length");
    for (int i = 0; i < length(); ++i) {
        const auto s = w.slots[static_cast<std::size_t>(i)];
        if (s != kGap && (s < 0 || s >= sizes_[static_cast<std::size_t>(i)]))
            throw std::invalid_argument("word letter out of range at position " + std::to_string(i + 1));
    }
}

std::string Alphabet::format(const Word& w) const {
    check_word(w);
    std::string out;
    for (int i = 0; i < length(); ++i) {
        if (joined_ && i > 0) out += '|';
        const auto s = w.slots[static_cast<std::size_t>(i)];
        out += (s == kGap) ? "-" : symbol(i, s);
    }
    return out;
}

Word Alphabet::parse(std::string_view text) const {
    std::vector<std::string> parts;
    if (text.find('|') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const auto bar = text.find('|', start);
            parts.emplace_back(text.substr(start, bar == std::string_view::npos ? bar : bar - start));
            if (bar == std::string_view::npos) break;
            start = bar + 1;
        }
    } else {
        // concatenated form requires every symbol to be a single character
        for (char c : text) parts.emplace_back(1, c);
    }
    if (static_cast<int>(parts.size()) != length())
        throw std::invalid_argument("word '" + std::string(text) + "' has " +
                                    std::to_string(parts.size()) + " positions, expected " +
                                    std::to_string(length()));
    Word w;
    w.slots.resize(parts.size());
    for (int i = 0; i < length(); ++i) {
        const std::string& p = parts[static_cast<std::size_t>(i)];
        if (p == "-") {
            w.slots[static_cast<std::size_t>(i)] = kGap;
            continue;
        }
        const auto& table = symbols_[static_cast<std::size_t>(i)];
        const auto it = std::find(table.begin(), table.end(), p);
        if (it == table.end())
            throw std::invalid_argument("unknown symbol '" + p + "' at position " + std::to_string(i + 1));
        w.slots[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(it - table.begin());
    }
    return w;
}

void for_each_combination(int l, int m, const std::function<void(const PosSet&)>& fn) {
    if (m < 0 || m > l) return;
    PosSet combo(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(combo);
        int i = m - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == l - m + i) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

// Enumerate words whose non-gap positions are exactly `nongaps`, letters
// running lo..b_i-1 in mixed-radix order, appending to out.
void emit_letter_block(const Alphabet& ab, const PosSet& nongaps, int lo, std::vector<Word>& out) {
    Word w;
    w.slots.assign(static_cast<std::size_t>(ab.length()), kGap);
    for (int p : nongaps) w.slots[static_cast<std::size_t>(p)] = static_cast<std::int16_t>(lo);
    const int m = static_cast<int>(nongaps.size());
    while (true) {
        out.push_back(w);
        int i = m - 1;
        for (; i >= 0; --i) {
            const int pos = nongaps[static_cast<std::size_t>(i)];
            auto& slot = w.slots[static_cast<std::size_t>(pos)];
            if (slot + 1 < ab.size(pos)) {
                ++slot;
                break;
            }
            slot = static_cast<std::int16_t>(lo);
        }
        if (i < 0) break;
    }
}

}  // namespace

std::vector<Word> enumerate_U(const Alphabet& ab) {
    PosSet all(static_cast<std::size_t>(ab.length()));
    for (int i = 0; i < ab.length(); ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<Word> out;
    emit_letter_block(ab, all, 0, out);
    return out;
}

std::vector<Word> enumerate_V(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length())
        throw std::invalid_argument("enumerate_V: k out of range");
    std::vector<Word> out;
    for_each_combination(ab.length(), k,
                         [&](const PosSet& nongaps) { emit_letter_block(ab, nongaps, 0, out); });
    return out;
}

std::vector<Word> enumerate_Vprime(const Alphabet& ab, int n) {
    if (n < 0 || n > ab.length())
        throw std::invalid_argument("enumerate_Vprime: n out of range");
    std::vector<Word> out;
    for_each_combination(ab.length(), n,
                         [&](const PosSet& nongaps) { emit_letter_block(ab, nongaps, 1, out); });
    return out;
}

std::vector<Word> enumerate_Vprime_upto(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length())
        throw std::invalid_argument("enumerate_Vprime_upto: k out of range");
    std::vector<Word> out;
    for (int n = 0; n <= k; ++n) {
        auto block = enumerate_Vprime(ab, n);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::size_t u_index(const Alphabet& ab, const Word& u) {
    ab.check_word(u);
    if (!u.gap_free()) throw std::invalid_argument("u_index: word has gaps");
    std::size_t idx = 0;
    for (int i = 0; i < ab.length(); ++i)
        idx = idx * static_cast<std::size_t>(ab.size(i)) +
              static_cast<std::size_t>(u.slots[static_cast<std::size_t>(i)]);
    return idx;
}

bool matches(const Word& u, const Word& v) {
    if (!u.gap_free()) throw std::invalid_argument("matches: first word must be gap-free");
    if (u.length() != v.length()) throw std::invalid_argument("matches: length mismatch");
    for (std::size_t i = 0; i < u.slots.size(); ++i)
        if (v.slots[i] != kGap && v.slots[i] != u.slots[i]) return false;
    return true;
}

std::vector<Word> match_set_M(const Alphabet& ab, const Word& u, int k) {
    ab.check_word(u);
    if (!u.gap_free()) throw std::invalid_argument("match_set_M: word must be gap-free");
    if (k < 0 || k > ab.length()) throw std::invalid_argument("match_set_M: k out of range");
    std::vector<Word> out;
    for_each_combination(ab.length(), k, [&](const PosSet& keep) {
        Word v;
        v.slots.assign(static_cast<std::size_t>(ab.length()), kGap);
        for (int p : keep) v.slots[static_cast<std::size_t>(p)] = u.slots[static_cast<std::size_t>(p)];
        out.push_back(std::move(v));
    });
    return out;
}

std::vector<Word> match_set_N(const Alphabet& ab, const Word& v) {
    ab.check_word(v);
    std::vector<Word> out;
    Word u = v;
    const PosSet gaps = gap_set(v);
    for (int p : gaps) u.slots[static_cast<std::size_t>(p)] = 0;
    const int m = static_cast<int>(gaps.size());
    while (true) {
        out.push_back(u);
        int i = m - 1;
        for (; i >= 0; --i) {
            const int pos = gaps[static_cast<std::size_t>(i)];
            auto& slot = u.slots[static_cast<std::size_t>(pos)];
            if (slot + 1 < ab.size(pos)) {
                ++slot;
                break;
            }
            slot = 0;
        }
        if (i < 0) break;
    }
    return out;
}

PosSet gap_set(const Word& w) {
    PosSet out;
    for (int i = 0; i < w.length(); ++i)
        if (w.slots[static_cast<std::size_t>(i)] == kGap) out.push_back(i);
    return out;
}

PosSet nongap_set(const Word& w) {
    PosSet out;
    for (int i = 0; i < w.length(); ++i)
        if (w.slots[static_cast<std::size_t>(i)] != kGap) out.push_back(i);
    return out;
}

IntSeq restrict_sizes(const Alphabet& ab, const PosSet& positions) {
    IntSeq out;
    out.reserve(positions.size());
    for (int p : positions) {
        if (p < 0 || p >= ab.length())
            throw std::invalid_argument("restrict_sizes: position out of range");
        out.push_back(ab.size(p));
    }
    return out;
}

std::pair<PosSet, PosSet> agree_disagree(const Word& u, const Word& v) {
    if (!u.gap_free()) throw std::invalid_argument("agree_disagree: first word must be gap-free");
    if (u.length() != v.length()) throw std::invalid_argument("agree_disagree: length mismatch");
    PosSet p, q;
    for (int i = 0; i < v.length(); ++i) {
        const auto s = v.slots[static_cast<std::size_t>(i)];
        if (s == kGap) continue;
        (s == u.slots[static_cast<std::size_t>(i)] ? p : q).push_back(i);
    }
    return {std::move(p), std::move(q)};
}

std::array<PosSet, 4> gap_partition(const Word& v1, const Word& v2) {
    if (v1.length() != v2.length()) throw std::invalid_argument("gap_partition: length mismatch");
    std::array<PosSet, 4> out;
    for (int i = 0; i < v1.length(); ++i) {
        const bool g1 = v1.slots[static_cast<std::size_t>(i)] == kGap;
        const bool g2 = v2.slots[static_cast<std::size_t>(i)] == kGap;
        const int bucket = g1 ? (g2 ? 0 : 1) : (g2 ? 2 : 3);
        out[static_cast<std::size_t>(bucket)].push_back(i);
    }
    return out;
}

bool word_leq(const Word& x, const Word& y) {
    if (x.length() != y.length()) throw std::invalid_argument("word_leq: length mismatch");
    for (std::size_t i = 0; i < x.slots.size(); ++i) {
        const bool xg = x.slots[i] == kGap;
        const bool yg = y.slots[i] == kGap;
        if (yg) continue;  // gap is the maximum
        if (xg || x.slots[i] > y.slots[i]) return false;
    }
    return true;
}

}  // namespace gkm
