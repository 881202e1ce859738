#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// All arithmetic in this library is exact: arbitrary-precision integers for
// lattice data, rationals for grading certificates and weight vectors.
using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

/// Domain-level failure (bad input, missing precondition).  The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (matrix files, glm specs).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// gcd of all entries, zero vector gives 0.
inline Int gcd_all(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

inline bool is_zero(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline IVec neg(const IVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RVec& a, const IVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline IVec pos_part(const IVec& v) {
    IVec r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) r[i] = v[i];
    return r;
}

inline IVec neg_part(const IVec& v) {
    IVec r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0) r[i] = -v[i];
    return r;
}

/// a <= b componentwise.
inline bool leq(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool lex_less(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

inline int first_nonzero_sign(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return sgn(x);
    return 0;
}

/// First nonzero coordinate made positive; zero vector unchanged.
inline IVec sign_normalize(const IVec& v) {
    return first_nonzero_sign(v) < 0 ? neg(v) : v;
}

inline std::vector<size_t> support(const IVec& v) {
    std::vector<size_t> s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

inline bool supports_intersect(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return true;
    return false;
}

inline std::string to_string(const IVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].get_str();
    }
    return s;
}

}  // namespace toric
