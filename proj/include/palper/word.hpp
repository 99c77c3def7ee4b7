#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace palper {

// Half-integer position/length. Stores the doubled value so that centres,
// radii, offsets and half-periods stay exact and hashable.
struct HalfPos {
    int d = 0;  // doubled value: HalfPos represents d/2

    constexpr HalfPos() = default;
    constexpr explicit HalfPos(int doubled) : d(doubled) {}

    static constexpr HalfPos from_doubled(int doubled) { return HalfPos{doubled}; }
    static constexpr HalfPos from_int(int v) { return HalfPos{2 * v}; }

    constexpr bool is_integral() const { return d % 2 == 0; }
    constexpr int doubled() const { return d; }
    // Only valid when integral.
    int as_int() const {
        if (d % 2 != 0) throw std::logic_error("HalfPos not integral");
        return d / 2;
    }
    double approx() const { return d / 2.0; }

    // Membership convention: for integers a <= b, position a-1/2 is in
    // [a..b] but b+1/2 is not.  Uniformly: 2a-1 <= d <= 2b.
    constexpr bool in_span(int a, int b) const { return 2 * a - 1 <= d && d <= 2 * b; }

    friend constexpr bool operator==(HalfPos x, HalfPos y) { return x.d == y.d; }
    friend constexpr bool operator!=(HalfPos x, HalfPos y) { return x.d != y.d; }
    friend constexpr bool operator<(HalfPos x, HalfPos y) { return x.d < y.d; }
    friend constexpr bool operator<=(HalfPos x, HalfPos y) { return x.d <= y.d; }
    friend constexpr bool operator>(HalfPos x, HalfPos y) { return x.d > y.d; }
    friend constexpr bool operator>=(HalfPos x, HalfPos y) { return x.d >= y.d; }
    friend constexpr HalfPos operator+(HalfPos x, HalfPos y) { return HalfPos{x.d + y.d}; }
    friend constexpr HalfPos operator-(HalfPos x, HalfPos y) { return HalfPos{x.d - y.d}; }
};

// Renders "7/2" for half-integers, "3" for integers.
std::string to_fraction(HalfPos p);
// Accepts "3", "7/2", "3.5".
HalfPos parse_halfpos(const std::string& text);

// 1-based inclusive span inside a word; end = start-1 encodes the empty factor.
struct Span {
    int start = 1;
    int end = 0;

    Span() = default;
    Span(int s, int e) : start(s), end(e) {
        if (s < 1 || e < s - 1) throw std::invalid_argument("bad span");
    }
    int length() const { return end - start + 1; }
    bool contains(const Span& o) const { return start <= o.start && o.end <= end; }
    friend bool operator==(const Span& a, const Span& b) {
        return a.start == b.start && a.end == b.end;
    }
};

// A finite word over a small integer alphabet, 1-based logical indexing.
class Word {
public:
    Word() = default;
    Word(std::vector<int> letters, int alphabet_size, bool prefer_ints = false);

    static Word from_ascii(const std::string& s);
    // "abc" or "i:3,0,1,2"
    static Word parse(const std::string& text);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int alphabet_size() const { return alphabet_size_; }
    const std::vector<int>& letters() const { return letters_; }

    // 1-based access.
    int at(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("word index");
        return letters_[static_cast<size_t>(i - 1)];
    }
    int operator[](int i) const { return letters_[static_cast<size_t>(i - 1)]; }

    Word factor(const Span& s) const;
    Word factor(int i, int j) const { return factor(Span(i, j)); }

    // Bit-exact inverse of parse().
    std::string render() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    std::vector<int> letters_;
    int alphabet_size_ = 1;
    bool prefer_ints_ = false;
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

// True iff w[i] = w[i+p] whenever both indices are in range; vacuous for p >= |w|.
bool has_period(const Word& w, int p);
bool has_period(const Word& w, const Span& s, int p);

int least_period(const Word& w);

// Border lengths in descending order, excluding |w| itself.
std::vector<int> borders(const Word& w);

// Checks k is a border and returns the implied period |w|-k.
int period_from_border(const Word& w, int k);

}  // namespace palper
