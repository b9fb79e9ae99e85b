#include "gkm/incidence.hpp"

#include <algorithm>
#include <ostream>

namespace gkm {

std::size_t SparseIncidence::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.size();
    return n;
}

std::uint32_t SparseIncidence::row_index(const Word& v) const {
    const auto it = row_of.find(v);
    if (it == row_of.end()) throw std::invalid_argument("row_index: not a row word");
    return it->second;
}

std::size_t StackedIncidence::n_rows() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.n_rows();
    return n;
}

std::size_t StackedIncidence::nnz() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.nnz();
    return n;
}

SparseIncidence build_A(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("build_A: k out of range");
    SparseIncidence a{ab, k, enumerate_V(ab, k), enumerate_U(ab), {}, {}};
    a.rows.resize(a.row_words.size());
    a.row_of.reserve(a.row_words.size());
    for (std::size_t r = 0; r < a.row_words.size(); ++r) {
        const Word& v = a.row_words[r];
        auto& cols = a.rows[r];
        for (const Word& u : match_set_N(ab, v))
            cols.push_back(static_cast<std::uint32_t>(u_index(ab, u)));
        std::sort(cols.begin(), cols.end());
        a.row_of.emplace(v, static_cast<std::uint32_t>(r));
    }
    return a;
}

StackedIncidence build_A_upto(const Alphabet& ab, int k) {
    if (k < 0 || k > ab.length()) throw std::invalid_argument("build_A_upto: k out of range");
    StackedIncidence st{ab, k, {}};
    st.blocks.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) st.blocks.push_back(build_A(ab, i));
    return st;
}

std::vector<int> row_vector(const StackedIncidence& st, const Word& w) {
    for (const auto& block : st.blocks) {
        const auto it = block.row_of.find(w);
        if (it == block.row_of.end()) continue;
        std::vector<int> out(block.n_cols(), 0);
        for (auto c : block.rows[it->second]) out[c] = 1;
        return out;
    }
    throw std::invalid_argument("row_vector: not a row word of the stacked matrix");
}

namespace {

void write_mm_body(std::ostream& os, const std::vector<std::vector<std::uint32_t>>& rows,
                   std::size_t row_offset) {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto c : rows[r]) os << (row_offset + r + 1) << ' ' << (c + 1) << '\n';
}

}  // namespace

void write_matrix_market(std::ostream& os, const SparseIncidence& a) {
    os << "%%MatrixMarket matrix coordinate pattern general\n";
    os << a.n_rows() << ' ' << a.n_cols() << ' ' << a.nnz() << '\n';
    write_mm_body(os, a.rows, 0);
}

void write_matrix_market(std::ostream& os, const StackedIncidence& st) {
    os << "%%MatrixMarket matrix coordinate pattern general\n";
    os << st.n_rows() << ' ' << st.n_cols() << ' ' << st.nnz() << '\n';
    std::size_t offset = 0;
    for (const auto& block : st.blocks) {
        write_mm_body(os, block.rows, offset);
        offset += block.n_rows();
    }
}

namespace {

void write_csv_header(std::ostream& os, const SparseIncidence& a) {
    os << "word";
    for (const auto& u : a.col_words) os << ',' << a.alphabet.format(u);
    os << '\n';
}

void write_csv_rows(std::ostream& os, const SparseIncidence& a) {
    std::vector<char> dense(a.n_cols());
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        std::fill(dense.begin(), dense.end(), 0);
        for (auto c : a.rows[r]) dense[c] = 1;
        os << a.alphabet.format(a.row_words[r]);
        for (std::size_t c = 0; c < a.n_cols(); ++c) os << ',' << static_cast<int>(dense[c]);
        os << '\n';
    }
}

}  // namespace

void write_csv(std::ostream& os, const SparseIncidence& a) {
    write_csv_header(os, a);
    write_csv_rows(os, a);
}

void write_csv(std::ostream& os, const StackedIncidence& st) {
    if (st.blocks.empty()) return;
    write_csv_header(os, st.blocks.front());
    for (const auto& block : st.blocks) write_csv_rows(os, block);
}

}  // namespace gkm
