#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace klab {

/// Reduced word over the involutive generators a_0..a_{d-1} of the free
/// product of d copies of Z/2: no two consecutive equal letters.
struct ReducedWord {
    int d = 2;
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    bool operator==(const ReducedWord&) const = default;
};

inline bool is_reduced(const std::vector<int>& letters) {
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] == letters[i + 1]) return false;
    return true;
}

/// Cancels adjacent equal letters to a fixed point (confluent since each
/// generator is an involution).
inline ReducedWord reduce(int d, const std::vector<int>& letters) {
    ReducedWord w;
    w.d = d;
    for (int a : letters) {
        if (a < 0 || a >= d) throw BadParams("letter out of generator range");
        if (!w.letters.empty() && w.letters.back() == a)
            w.letters.pop_back();
        else
            w.letters.push_back(a);
    }
    return w;
}

inline ReducedWord inverse(const ReducedWord& w) {
    ReducedWord out = w;
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

inline ReducedWord concat(const ReducedWord& a, const ReducedWord& b) {
    if (a.d != b.d) throw BadParams("mixed generator counts");
    std::vector<int> letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return reduce(a.d, letters);
}

/// All reduced words of length exactly l+1; |T| = d*(d-1)^l.
struct SphereSet {
    int d = 2;
    int l = 0;
    std::vector<ReducedWord> words;
};

inline BigInt sphere_size_formula(int d, int l) { return BigInt(d) * big_pow(d - 1, l); }

inline SphereSet sphere(int d, int l, long cap = vertex_cap()) {
    if (d < 2 || l < 0) throw BadParams("sphere needs d >= 2, l >= 0");
    if (sphere_size_formula(d, l) > cap) throw CapExceeded("sphere size exceeds cap");
    SphereSet out;
    out.d = d;
    out.l = l;
    ReducedWord w;
    w.d = d;
    w.letters.assign(l + 1, 0);
    // odometer over reduced words in lexicographic order
    auto fill_min = [&](int from) {
        for (int i = from; i <= l; ++i)
            w.letters[i] = (i > 0 && w.letters[i - 1] == 0) ? 1 : 0;
    };
    fill_min(0);
    for (;;) {
        out.words.push_back(w);
        int pos = l;
        for (; pos >= 0; --pos) {
            int next = w.letters[pos] + 1;
            if (pos > 0 && next == w.letters[pos - 1]) ++next;
            if (next < d) {
                w.letters[pos] = next;
                fill_min(pos + 1);
                break;
            }
        }
        if (pos < 0) break;
    }
    if (BigInt(static_cast<long>(out.words.size())) != sphere_size_formula(d, l))
        throw Error("internal: sphere count mismatch");
    return out;
}

/// sigma = tau a_{i_l} tau^{-1} for reduced tau = a_{i_0}..a_{i_l}; as a
/// reduced word it is the palindrome i_0..i_{l-1} i_l i_{l-1}..i_0 of length
/// 2l+1. The suffix chain sigma_0..sigma_{2l+1} prepends one generator per
/// step (the shift-edge direction); reversing each word gives the
/// right-multiplication path, so the chain is a geodesic Cayley path of odd
/// length 2l+1.
struct SigmaCircuit {
    ReducedWord sigma;
    std::vector<ReducedWord> chain; // sigma_j = j rightmost letters, j = 0..2l+1
};

inline SigmaCircuit sigma_circuit(const ReducedWord& tau) {
    if (!is_reduced(tau.letters) || tau.letters.empty())
        throw NotReduced("tau must be a nonempty reduced word");
    SigmaCircuit out;
    ReducedWord last;
    last.d = tau.d;
    last.letters = {tau.letters.back()};
    out.sigma = concat(concat(tau, last), inverse(tau));
    int expected = 2 * tau.length() - 1;
    if (out.sigma.length() != expected) throw Error("internal: sigma not of length 2l+1");
    out.chain.reserve(expected + 1);
    for (int j = 0; j <= expected; ++j) {
        ReducedWord suffix;
        suffix.d = tau.d;
        suffix.letters.assign(out.sigma.letters.end() - j, out.sigma.letters.end());
        out.chain.push_back(std::move(suffix));
    }
    return out;
}

/// True iff consecutive chain entries differ by one prepended generator.
inline bool is_shift_path(const std::vector<ReducedWord>& chain) {
    for (size_t j = 0; j + 1 < chain.size(); ++j) {
        const auto& a = chain[j];
        const auto& b = chain[j + 1];
        if (b.length() != a.length() + 1) return false;
        if (!std::equal(a.letters.begin(), a.letters.end(), b.letters.begin() + 1)) return false;
    }
    return true;
}

inline std::string word_to_string(const ReducedWord& w) {
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.letters[i]);
    }
    return out;
}

inline ReducedWord word_from_string(int d, const std::string& s) {
    std::vector<int> letters;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        try {
            letters.push_back(std::stoi(s.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw BadParams("bad word syntax: " + s);
        }
        pos = comma + 1;
    }
    if (!is_reduced(letters)) throw NotReduced("word has adjacent equal letters: " + s);
    ReducedWord w;
    w.d = d;
    w.letters = letters;
    for (int a : letters)
        if (a < 0 || a >= d) throw BadParams("letter out of range for d");
    return w;
}

} // namespace klab
