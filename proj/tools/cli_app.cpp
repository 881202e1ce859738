#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "toric/bruteforce.hpp"
#include "toric/io.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

json vec_to_json(const IVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

json vectors_to_json(const std::vector<IVec>& vs) {
    json a = json::array();
    for (const IVec& v : vs) a.push_back(vec_to_json(v));
    return a;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

struct Options {
    std::string file;
    std::string omega_str;
    std::string order_str;
    bool json_out = false;
    bool fast = false;
    bool oracle = false;
};

std::set<size_t> parse_omega(const std::string& s) {
    std::set<size_t> omega;
    if (s.empty()) return omega;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
            omega.insert(static_cast<size_t>(v));
        } catch (const std::exception&) {
            throw Error("invalid omega index '" + tok + "'");
        }
    }
    return omega;
}

WeightOrder parse_order(const std::string& s, size_t n) {
    if (s.empty()) return WeightOrder{RVec(n, Rat(1))};
    RVec w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Rat r;
        if (tok.empty() || mpq_set_str(r.get_mpq_t(), tok.c_str(), 10) != 0)
            throw Error("invalid weight '" + tok + "'");
        r.canonicalize();
        w.push_back(r);
    }
    if (w.size() != n)
        throw Error("order needs " + std::to_string(n) + " weights, got " +
                    std::to_string(w.size()));
    return WeightOrder{std::move(w)};
}

std::string echo_line(const std::string& name, const Options& o) {
    std::string s = name;
    if (!o.omega_str.empty()) s += " --omega=" + o.omega_str;
    if (!o.order_str.empty()) s += " --order=" + o.order_str;
    if (o.fast) s += " --codim2-fast";
    if (o.oracle) s += " --oracle";
    if (o.json_out) s += " --json";
    s += " " + o.file;
    return s;
}

void write_vectors(std::ostream& out, const std::vector<IVec>& vs) {
    out << "count: " << vs.size() << "\n";
    for (const IVec& v : vs) out << to_string(v) << "\n";
}

std::string kind_name(BouquetKind k) {
    switch (k) {
        case BouquetKind::Free: return "Free";
        case BouquetKind::Mixed: return "Mixed";
        default: return "NonMixed";
    }
}

std::vector<std::set<size_t>> sorted_faces(const SimplicialComplex& d) {
    std::vector<std::set<size_t>> fs(d.faces.begin(), d.faces.end());
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return fs;
}

void oracle_fail(const std::string& what) { throw Error("oracle mismatch: " + what); }

Int coord_bound(const BasisSet& b) {
    Int bound = 1;
    for (const KernelVector& k : b)
        for (const Int& x : k.v) bound = std::max(bound, abs_int(x));
    return bound + 1;
}

void run_graver_oracle(const IntMatrix& a, const BasisSet& gr) {
    Int bound = coord_bound(gr);
    if (gr != bruteforce::graver_box_oracle(a, bound))
        oracle_fail("graver differs from exhaustive box search");
    for (const IVec& v : bruteforce::kernel_vectors_in_box(a, bound))
        if (!bruteforce::conformal_decomposes(v, gr))
            oracle_fail("a kernel vector has no conformal decomposition over the output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for toric ideals: bouquets, toric bases, robustness"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::pair<std::string, std::string>> kMatrixCommands = {
        {"gale", "Gale transform (saturated kernel lattice basis)"},
        {"bouquets", "bouquet decomposition and signature"},
        {"graver", "Graver basis"},
        {"markov", "canonical minimal Markov basis"},
        {"umarkov", "universal Markov basis"},
        {"indisp", "indispensable elements"},
        {"circuits", "circuits"},
        {"gb", "reduced Groebner basis for a weight order"},
        {"somega", "T_omega-indispensable set of a simple matrix"},
        {"lambda", "second Lawrence lifting with omega rows/columns removed"},
        {"delta", "strongly-robustness simplicial complex"},
        {"glm", "generalized Lawrence matrix from a glm spec file"},
        {"check-robust", "decide strong robustness"},
    };
    for (const auto& [name, desc] : kMatrixCommands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("file", o.file, name == "glm" ? "glm spec file" : "matrix file")
            ->required();
        sub->add_flag("--json", o.json_out, "JSON output");
        sub->add_flag("--oracle", o.oracle, "run brute-force cross-checks");
        if (name == "somega" || name == "lambda")
            sub->add_option("--omega", o.omega_str, "comma-separated 1-based indices");
        if (name == "gb")
            sub->add_option("--order", o.order_str, "comma-separated weights (rationals)");
        if (name == "graver" || name == "indisp" || name == "circuits" ||
            name == "delta" || name == "check-robust")
            sub->add_flag("--codim2-fast", o.fast, "Hilbert-basis route (codimension 2)");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    const std::string name = app.get_subcommands().front()->get_name();

    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::ifstream in(o.file);
        if (!in) {
            err << "error: cannot open file: " << o.file << "\n";
            return 2;
        }
        std::ostringstream raw;
        raw << in.rdbuf();
        const std::string text = raw.str();
        const std::string digest = "fnv1a:" + fnv1a_digest(text);

        json j;
        std::ostringstream body;
        j["command"] = echo_line(name, o);
        j["input"] = digest;

        auto emit_vectors = [&](const BasisSet& b) {
            write_vectors(body, b.vectors());
            j["count"] = b.size();
            j["vectors"] = vectors_to_json(b.vectors());
        };
        // matrices are printed in the input file format so reports can be
        // fed back in after stripping the two report lines
        auto emit_matrix = [&](const IntMatrix& m) {
            body << m.rows() << " " << m.cols() << "\n" << m.to_string();
            j["matrix"] = matrix_to_json(m);
        };

        if (name == "glm") {
            GLMSpec spec = parse_glm(text);
            IntMatrix d = generalized_lawrence(spec);
            emit_matrix(d);
            if (o.oracle) {
                BouquetDecomposition dec = bouquet_decomposition(d);
                if (dec.size() != spec.t.cols()) oracle_fail("bouquet count differs from T");
                size_t col0 = 0;
                for (size_t i = 0; i < dec.size(); ++i) {
                    const IVec& c = spec.c[i];
                    for (size_t k = 0; k < c.size(); ++k)
                        if (dec.bouquets[i].cvec[col0 + k] != c[k])
                            oracle_fail("bouquet cvec differs from the requested c vector");
                    col0 += c.size();
                }
                if (gale_transform(bouquet_matrix(d, dec)).matrix !=
                    gale_transform(spec.t).matrix)
                    oracle_fail("bouquet ideal kernel differs from Ker(T)");
            }
        } else {
            IntMatrix a = parse_matrix(text);
            if (name == "gale") {
                GaleTransform g = gale_transform(a);
                emit_matrix(g.matrix);
                if (o.oracle) {
                    for (size_t c = 0; c < g.matrix.cols(); ++c)
                        if (!is_zero(a.apply(g.matrix.col(c)))) oracle_fail("A.G != 0");
                    if (g.matrix.cols() > 0 && bruteforce::maximal_minor_gcd(g.matrix) != 1)
                        oracle_fail("kernel basis is not saturated");
                }
            } else if (name == "bouquets") {
                BouquetDecomposition dec = bouquet_decomposition(a);
                body << "bouquets: " << dec.size() << "\n";
                json bj = json::array();
                for (size_t i = 0; i < dec.size(); ++i) {
                    const Bouquet& b = dec.bouquets[i];
                    body << "bouquet " << (i + 1) << ": kind=" << kind_name(b.kind)
                         << " members=";
                    for (size_t k = 0; k < b.members.size(); ++k)
                        body << (k ? "," : "") << (b.members[k] + 1);
                    body << " cvec=" << to_string(b.cvec) << "\n";
                    json one{{"kind", kind_name(b.kind)}, {"cvec", vec_to_json(b.cvec)}};
                    json mem = json::array();
                    for (size_t m : b.members) mem.push_back(m + 1);
                    one["members"] = mem;
                    bj.push_back(one);
                }
                body << "signature: {";
                bool first = true;
                json sg = json::array();
                for (size_t i : dec.signature) {
                    body << (first ? "" : ",") << i;
                    sg.push_back(i);
                    first = false;
                }
                body << "}\n";
                j["bouquets"] = bj;
                j["signature"] = sg;
                if (o.oracle) {
                    std::vector<bool> seen(a.cols(), false);
                    for (const Bouquet& b : dec.bouquets)
                        for (size_t m : b.members) {
                            if (seen[m]) oracle_fail("column in two bouquets");
                            seen[m] = true;
                        }
                    for (bool s : seen)
                        if (!s) oracle_fail("column missing from all bouquets");
                    for (const Bouquet& b : dec.bouquets)
                        if (b.cvec[b.members.front()] <= 0)
                            oracle_fail("first cvec entry not positive");
                }
            } else if (name == "graver") {
                BasisSet gr = o.fast ? graver_and_indispensable_codim2(a).first : graver(a);
                emit_vectors(gr);
                if (o.oracle) run_graver_oracle(a, gr);
            } else if (name == "markov") {
                BasisSet m = minimal_markov(a);
                emit_vectors(m);
                if (o.oracle) {
                    GradingCertificate cert = require_grading(a);
                    BasisSet gr = graver(a);
                    if (!bruteforce::is_markov_basis(a, cert, m, gr))
                        oracle_fail("output does not connect every Graver fiber");
                    if (!indispensable_set(a).is_subset_of(m))
                        oracle_fail("an indispensable element is missing");
                    if (!m.is_subset_of(universal_markov(a)))
                        oracle_fail("a move is outside the universal Markov basis");
                    if (!m.is_subset_of(gr)) oracle_fail("a move is outside the Graver basis");
                }
            } else if (name == "umarkov") {
                BasisSet u = universal_markov(a);
                emit_vectors(u);
                if (o.oracle) {
                    if (!minimal_markov(a).is_subset_of(u))
                        oracle_fail("canonical minimal basis not contained");
                    if (!u.is_subset_of(graver(a)))
                        oracle_fail("universal basis escapes the Graver basis");
                }
            } else if (name == "indisp") {
                BasisSet s = o.fast ? graver_and_indispensable_codim2(a).second
                                    : indispensable_set(a);
                emit_vectors(s);
                if (o.oracle) {
                    if (!s.is_subset_of(graver(a)))
                        oracle_fail("indispensable escapes the Graver basis");
                    if (!s.is_subset_of(minimal_markov(a)))
                        oracle_fail("indispensable missing from the canonical minimal basis");
                }
            } else if (name == "circuits") {
                BasisSet c = o.fast ? circuits_codim2(a) : circuits(a);
                emit_vectors(c);
                if (o.oracle) {
                    BasisSet gr = graver(a);
                    if (!c.is_subset_of(gr)) oracle_fail("circuit escapes the Graver basis");
                    for (const KernelVector& x : c)
                        for (const KernelVector& h : gr) {
                            bool subset = true, strict = false;
                            for (size_t i = 0; i < x.size(); ++i) {
                                if (h.v[i] != 0 && x.v[i] == 0) subset = false;
                                if (h.v[i] == 0 && x.v[i] != 0) strict = true;
                            }
                            if (subset && strict)
                                oracle_fail("circuit support is not minimal");
                        }
                }
            } else if (name == "gb") {
                WeightOrder ord = parse_order(o.order_str, a.cols());
                auto gb = reduced_groebner(a, ord);
                body << "count: " << gb.size() << "\n";
                json bj = json::array();
                for (const MarkedBinomial& e : gb) {
                    body << (e.lead_plus ? "+ " : "- ") << to_string(e.u.v) << "\n";
                    bj.push_back(json{{"lead", e.lead_plus ? "+" : "-"},
                                      {"vector", vec_to_json(e.u.v)}});
                }
                j["count"] = gb.size();
                j["binomials"] = bj;
                if (o.oracle) {
                    Int bound = 1;
                    for (const MarkedBinomial& e : gb)
                        for (const Int& x : e.u.v) bound = std::max(bound, abs_int(x));
                    if (!bruteforce::check_reduced_groebner(a, ord, gb, bound + 1))
                        oracle_fail("reduced Groebner checks failed");
                }
            } else if (name == "somega") {
                BasisSet s = s_omega(a, parse_omega(o.omega_str));
                emit_vectors(s);
                if (o.oracle && !s.is_subset_of(graver(a)))
                    oracle_fail("S_omega escapes the Graver basis of T");
            } else if (name == "lambda") {
                IntMatrix lm = lambda_omega(a, parse_omega(o.omega_str));
                emit_matrix(lm);
            } else if (name == "delta") {
                SimplicialComplex d = delta_complex(a, o.fast);
                auto faces = sorted_faces(d);
                body << "ground: " << d.ground << "\n";
                body << "faces: " << faces.size() << "\n";
                json fj = json::array();
                for (const auto& f : faces) {
                    body << "{";
                    bool first = true;
                    json one = json::array();
                    for (size_t i : f) {
                        body << (first ? "" : " ") << i;
                        one.push_back(i);
                        first = false;
                    }
                    body << "}\n";
                    fj.push_back(one);
                }
                j["ground"] = d.ground;
                j["faces"] = fj;
                if (o.oracle) {
                    if (!d.faces.count(std::set<size_t>{}))
                        oracle_fail("empty face missing");
                    for (const auto& f : d.faces)
                        for (size_t i : f) {
                            auto sub = f;
                            sub.erase(i);
                            if (!d.faces.count(sub)) oracle_fail("not downward closed");
                        }
                    if (gale_transform(a).matrix.cols() == 2) {
                        SimplicialComplex other = delta_complex(a, !o.fast);
                        if (other.faces != d.faces)
                            oracle_fail("codim-2 and generic paths disagree");
                    }
                }
            } else if (name == "check-robust") {
                bool sr = o.fast ? is_strongly_robust_codim2(a) : is_strongly_robust(a);
                body << "strongly_robust: " << (sr ? "true" : "false") << "\n";
                j["strongly_robust"] = sr;
                if (o.oracle && gale_transform(a).matrix.cols() == 2) {
                    bool other = o.fast ? is_strongly_robust(a) : is_strongly_robust_codim2(a);
                    if (other != sr) oracle_fail("codim-2 and generic paths disagree");
                }
            }
        }

        if (o.oracle) {
            body << "oracle: ok\n";
            j["oracle"] = "ok";
        }
        if (o.json_out) {
            out << j.dump() << "\n";
        } else {
            out << "command: " << echo_line(name, o) << "\n";
            out << "input: " << digest << "\n";
            out << body.str();
        }
        const auto t1 = std::chrono::steady_clock::now();
        err << "elapsed: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace toric::cli
