#ifndef DCX_WORD_HPP
#define DCX_WORD_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "dcx/curve.hpp"
#include "dcx/errors.hpp"

namespace dcx {

/// Word in a free group: letters are nonzero ints, letter g = generator
/// |g|-1, sign = exponent.
struct FreeWord {
    std::vector<int> letters;

    bool trivial() const { return letters.empty(); }
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

inline FreeWord free_reduce(const FreeWord& w) {
    FreeWord out;
    for (int l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

inline FreeWord inverse(const FreeWord& w) {
    FreeWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

inline FreeWord cyclic_reduce(const FreeWord& w) {
    FreeWord out = free_reduce(w);
    while (out.letters.size() >= 2 && out.letters.front() == -out.letters.back()) {
        out.letters.erase(out.letters.begin());
        out.letters.pop_back();
    }
    return out;
}

/// Canonical representative of a conjugacy class up to inversion: cyclic
/// reduction, then the lexicographic minimum over all rotations of the
/// word and of its inverse.
inline FreeWord canonical_cyclic(const FreeWord& w) {
    FreeWord r = cyclic_reduce(w);
    if (r.letters.empty()) return r;
    auto best = r.letters;
    for (const FreeWord& cand : {r, inverse(r)}) {
        auto v = cand.letters;
        for (size_t k = 0; k < v.size(); ++k) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
            if (v < best) best = v;
        }
    }
    return FreeWord{best};
}

inline std::string word_str(const FreeWord& w, char symbol = 'x') {
    if (w.letters.empty()) return "1";
    std::string s;
    for (int l : w.letters) {
        s += symbol;
        s += std::to_string(std::abs(l) - 1);
        if (l < 0) s += "'";
        s += ' ';
    }
    s.pop_back();
    return s;
}

/// Conjugacy class of the curve in pi_1 of the punctured sphere, written
/// in the puncture loops x_0..x_{2n+1}: every excursion through the outer
/// face entering from s_j and returning at s_k wraps the punctures
/// v_{j+1},...,v_k and contributes those letters positively.
inline FreeWord peripheral_word(const Curve& input) {
    Curve c = tighten(validate(input));
    auto fc = detail::flatten(c);
    auto seq = detail::trace_cycle(fc);
    int S = c.seg_count();
    FreeWord w;
    for (size_t t = 0; t < seq.size(); ++t) {
        if (t % 2 == 0) continue; // arcs leaving even positions are inner
        int ju = fc.seg_of[seq[t]];
        int jv = fc.seg_of[seq[(t + 1) % seq.size()]];
        require_internal(ju != jv, "taut curve has a same-segment excursion");
        for (int i = (ju + 1) % S;; i = (i + 1) % S) {
            w.letters.push_back(i + 1);
            if (i == jv) break;
        }
    }
    return free_reduce(w);
}

/// The word rewritten in the quotient by the sphere relation
/// x_0 x_1 ... x_{2n+1} = 1, eliminating the last generator, in canonical
/// cyclic form. Gives well-defined equality of peripheral classes.
inline FreeWord sphere_quotient_canonical(const FreeWord& w, int n) {
    int last = 2 * n + 2; // 1-based index of x_{2n+1}
    FreeWord out;
    for (int l : w.letters) {
        if (l == last) {
            for (int i = last - 1; i >= 1; --i) out.letters.push_back(-i);
        } else if (l == -last) {
            for (int i = 1; i <= last - 1; ++i) out.letters.push_back(i);
        } else {
            out.letters.push_back(l);
        }
    }
    return canonical_cyclic(out);
}

/// Net exponent per generator. For a peripheral word this is the signed
/// indicator of one side of the puncture partition.
inline std::vector<int> abelianization(const FreeWord& w, int gens) {
    std::vector<int> e(gens, 0);
    for (int l : w.letters) e[std::abs(l) - 1] += l > 0 ? 1 : -1;
    return e;
}

} // namespace dcx

#endif
