#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace tolfca {

// Fixed-width bit set over 64-bit words. Bits past `size()` in the last word
// are kept zero, so whole-word comparisons and popcounts are valid.
class Bits {
public:
    Bits() = default;
    explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bits full(int size) {
        Bits b(size);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.mask_tail();
        return b;
    }

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void set(int i, bool v) { v ? set(i) : reset(i); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool is_subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    Bits operator~() const {
        Bits r = *this;
        for (auto& w : r.words_) w = ~w;
        r.mask_tail();
        return r;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

    bool operator==(const Bits&) const = default;

    // Reading-order lexicographic compare: position 0 is most significant,
    // and the set with a 0 at the first differing position is smaller.
    std::strong_ordering operator<=>(const Bits& o) const {
        if (size_ != o.size_) return size_ <=> o.size_;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t d = words_[k] ^ o.words_[k];
            if (d) {
                int b = std::countr_zero(d);
                return ((words_[k] >> b) & 1) ? std::strong_ordering::greater
                                              : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

    // Index of the lowest set bit, -1 when empty.
    int find_first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn(int(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void mask_tail() {
        if (!words_.empty() && (size_ & 63))
            words_.back() &= ~std::uint64_t{0} >> (64 - (size_ & 63));
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense boolean matrix; rows are Bits of width cols().
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, Bits(cols)) {}

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i);
        return m;
    }
    static BitMatrix full(int rows, int cols) {
        BitMatrix m(rows, cols);
        for (auto& r : m.row_) r = Bits::full(cols);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool test(int i, int j) const { return row_[i].test(j); }
    void set(int i, int j) { row_[i].set(j); }
    void set(int i, int j, bool v) { row_[i].set(j, v); }
    void reset(int i, int j) { row_[i].reset(j); }

    Bits& row(int i) { return row_[i]; }
    const Bits& row(int i) const { return row_[i]; }

    Bits column(int j) const {
        Bits c(rows_);
        for (int i = 0; i < rows_; ++i)
            if (row_[i].test(j)) c.set(i);
        return c;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            row_[i].for_each([&](int j) { t.set(j, i); });
        return t;
    }

    bool is_subset_of(const BitMatrix& o) const {
        for (int i = 0; i < rows_; ++i)
            if (!row_[i].is_subset_of(o.row_[i])) return false;
        return true;
    }

    friend BitMatrix operator&(const BitMatrix& a, const BitMatrix& b) {
        BitMatrix r = a;
        for (int i = 0; i < r.rows_; ++i) r.row_[i] &= b.row_[i];
        return r;
    }
    friend BitMatrix operator|(const BitMatrix& a, const BitMatrix& b) {
        BitMatrix r = a;
        for (int i = 0; i < r.rows_; ++i) r.row_[i] |= b.row_[i];
        return r;
    }

    // Relational product: (x,z) set iff some y has a(x,y) and b(y,z).
    friend BitMatrix composed(const BitMatrix& a, const BitMatrix& b) {
        BitMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            a.row_[i].for_each([&](int y) { r.row_[i] |= b.row(y); });
        return r;
    }

    int count() const {
        int c = 0;
        for (auto& r : row_) c += r.count();
        return c;
    }

    bool operator==(const BitMatrix&) const = default;
    auto operator<=>(const BitMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Bits> row_;
};

}  // namespace tolfca
