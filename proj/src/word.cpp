#include "palper/word.hpp"

#include <algorithm>
#include <sstream>

namespace palper {

std::string to_fraction(HalfPos p) {
    if (p.is_integral()) return std::to_string(p.d / 2);
    return std::to_string(p.d) + "/2";
}

HalfPos parse_halfpos(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty half-integer");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        if (text.substr(slash + 1) != "2")
            throw std::invalid_argument("half-integer denominator must be 2: " + text);
        return HalfPos::from_doubled(std::stoi(text.substr(0, slash)));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        int whole = dot == 0 ? 0 : std::stoi(text.substr(0, dot));
        bool neg = text[0] == '-';
        if (frac == "5") return HalfPos::from_doubled(2 * whole + (neg ? -1 : 1));
        if (frac == "0" || frac.empty()) return HalfPos::from_int(whole);
        throw std::invalid_argument("not a half-integer: " + text);
    }
    return HalfPos::from_int(std::stoi(text));
}

Word::Word(std::vector<int> letters, int alphabet_size, bool prefer_ints)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size), prefer_ints_(prefer_ints) {
    if (alphabet_size_ < 1) throw std::invalid_argument("alphabet size must be positive");
    for (int c : letters_)
        if (c < 0 || c >= alphabet_size_)
            throw std::invalid_argument("letter out of alphabet range");
    if (alphabet_size_ > 26) prefer_ints_ = true;
}

Word Word::from_ascii(const std::string& s) {
    std::vector<int> ls;
    ls.reserve(s.size());
    for (char ch : s) {
        if (ch < 'a' || ch > 'z')
            throw std::invalid_argument("ascii words use letters a-z");
        ls.push_back(ch - 'a');
    }
    int alpha = 1;
    for (int c : ls) alpha = std::max(alpha, c + 1);
    return Word(std::move(ls), alpha, false);
}

Word Word::parse(const std::string& text) {
    if (text.rfind("i:", 0) == 0) {
        std::vector<int> ls;
        std::stringstream ss(text.substr(2));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty token in word");
            ls.push_back(std::stoi(tok));
        }
        int alpha = 1;
        for (int c : ls) alpha = std::max(alpha, c + 1);
        return Word(std::move(ls), alpha, true);
    }
    return from_ascii(text);
}

Word Word::factor(const Span& s) const {
    if (s.end > size()) throw std::out_of_range("span beyond word end");
    std::vector<int> ls(letters_.begin() + (s.start - 1), letters_.begin() + s.end);
    return Word(std::move(ls), alphabet_size_, prefer_ints_);
}

std::string Word::render() const {
    if (!prefer_ints_) {
        std::string out;
        out.reserve(letters_.size());
        for (int c : letters_) out.push_back(static_cast<char>('a' + c));
        return out;
    }
    std::string out = "i:";
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word reverse(const Word& w) {
    std::vector<int> ls(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(ls), w.alphabet_size());
}

bool is_palindrome(const Word& w) {
    int n = w.size();
    for (int i = 1; 2 * i <= n; ++i)
        if (w[i] != w[n + 1 - i]) return false;
    return true;
}

bool has_period(const Word& w, int p) {
    if (p < 1) throw std::invalid_argument("period must be positive");
    int n = w.size();
    for (int i = 1; i + p <= n; ++i)
        if (w[i] != w[i + p]) return false;
    return true;
}

bool has_period(const Word& w, const Span& s, int p) {
    if (p < 1) throw std::invalid_argument("period must be positive");
    if (s.end > w.size()) throw std::out_of_range("span beyond word end");
    for (int i = s.start; i + p <= s.end; ++i)
        if (w[i] != w[i + p]) return false;
    return true;
}

int least_period(const Word& w) {
    if (w.empty()) throw std::invalid_argument("least_period of empty word");
    for (int p = 1; p < w.size(); ++p)
        if (has_period(w, p)) return p;
    return w.size();
}

std::vector<int> borders(const Word& w) {
    // Prefix-function chain gives every border, longest first.
    int n = w.size();
    std::vector<int> pi(static_cast<size_t>(n) + 1, 0);
    for (int i = 2; i <= n; ++i) {
        int k = pi[static_cast<size_t>(i - 1)];
        while (k > 0 && w[k + 1] != w[i]) k = pi[static_cast<size_t>(k)];
        if (w[k + 1] == w[i]) ++k;
        pi[static_cast<size_t>(i)] = k;
    }
    std::vector<int> out;
    for (int k = n > 0 ? pi[static_cast<size_t>(n)] : 0; k > 0; k = pi[static_cast<size_t>(k)])
        out.push_back(k);
    return out;
}

int period_from_border(const Word& w, int k) {
    auto bs = borders(w);
    if (std::find(bs.begin(), bs.end(), k) == bs.end())
        throw std::invalid_argument("not a border length");
    return w.size() - k;
}

}  // namespace palper
