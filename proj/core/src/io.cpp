#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

Int parse_int_token(const std::string& tok) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
        throw ParseError("invalid integer token '" + tok + "'");
    return v;
}

size_t parse_count(const std::string& tok, const char* what) {
    Int v = parse_int_token(tok);
    if (v < 1) throw ParseError(std::string("malformed header: ") + what + " must be positive");
    if (!v.fits_ulong_p()) throw ParseError(std::string("malformed header: ") + what + " too large");
    return v.get_ui();
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!tokens_of(line).empty()) lines.push_back(line);
    }
    return lines;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses a matrix from lines[from..]; returns the index past the last row.
size_t parse_matrix_lines(const std::vector<std::string>& lines, size_t from,
                          IntMatrix& out) {
    if (from >= lines.size()) throw ParseError("malformed header: missing 'rows cols' line");
    auto head = tokens_of(lines[from]);
    if (head.size() != 2)
        throw ParseError("malformed header: expected 'rows cols', got '" + lines[from] + "'");
    size_t rows = parse_count(head[0], "row count");
    size_t cols = parse_count(head[1], "column count");
    out = IntMatrix(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (from + 1 + i >= lines.size())
            throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                             std::to_string(i));
        auto toks = tokens_of(lines[from + 1 + i]);
        if (toks.size() != cols)
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(toks.size()) + " of " + std::to_string(cols) +
                             " entries");
        for (size_t j = 0; j < cols; ++j) out(i, j) = parse_int_token(toks[j]);
    }
    return from + 1 + rows;
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
    auto lines = nonblank_lines(text);
    IntMatrix m;
    size_t end = parse_matrix_lines(lines, 0, m);
    if (end != lines.size()) throw ParseError("trailing content after matrix rows");
    return m;
}

IntMatrix parse_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

IVec solve_gcd_identity(const IVec& c) {
    if (gcd_all(c) != 1) throw Error("c vector is not primitive");
    // fold extended gcd across the entries
    IVec lam(c.size(), Int(0));
    Int g = c[0];
    lam[0] = 1;
    for (size_t j = 1; j < c.size(); ++j) {
        Int g2, p, q;
        mpz_gcdext(g2.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t(),
                   c[j].get_mpz_t());
        for (size_t i = 0; i < j; ++i) lam[i] *= p;
        lam[j] = q;
        g = g2;
    }
    if (g == 1) return lam;
    if (g == -1) return neg(lam);
    throw Error("c vector is not primitive");
}

GLMSpec parse_glm(const std::string& text) {
    auto lines = nonblank_lines(text);
    GLMSpec spec;
    size_t at = parse_matrix_lines(lines, 0, spec.t);
    const size_t s = spec.t.cols();
    std::vector<std::optional<IVec>> lambdas;
    for (; at < lines.size(); ++at) {
        auto toks = tokens_of(lines[at]);
        if (toks[0] == "c") {
            IVec c;
            for (size_t j = 1; j < toks.size(); ++j) c.push_back(parse_int_token(toks[j]));
            if (c.empty()) throw ParseError("empty c line");
            spec.c.push_back(std::move(c));
            lambdas.emplace_back();
        } else if (toks[0] == "lambda") {
            if (lambdas.empty() || lambdas.back())
                throw ParseError("lambda line without a preceding c line");
            IVec l;
            for (size_t j = 1; j < toks.size(); ++j) l.push_back(parse_int_token(toks[j]));
            lambdas.back() = std::move(l);
        } else {
            throw ParseError("unexpected line in glm spec: '" + lines[at] + "'");
        }
    }
    if (spec.c.size() != s)
        throw ParseError("glm spec needs " + std::to_string(s) + " c lines, found " +
                         std::to_string(spec.c.size()));
    for (size_t i = 0; i < s; ++i)
        spec.lambda.push_back(lambdas[i] ? *lambdas[i] : solve_gcd_identity(spec.c[i]));
    return spec;
}

GLMSpec parse_glm_file(const std::string& path) { return parse_glm(slurp(path)); }

std::string fnv1a_digest(const std::string& text) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string format_matrix(const IntMatrix& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    return s + m.to_string();
}

}  // namespace toric
