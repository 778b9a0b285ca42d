#include "pathconv/spec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pathconv {

BoundSymbol BoundSymbol::constant(int k) {
    if (k < 1) fail(ErrorCode::MalformedToken, "constant bound must be >= 1, got " + std::to_string(k));
    return {SymbolKind::Constant, k};
}

BoundSymbol BoundSymbol::min_shortest(int k) {
    if (k < 1) fail(ErrorCode::MalformedToken, "min:<k> requires k >= 1, got " + std::to_string(k));
    return {SymbolKind::MinShortest, k};
}

std::string BoundSymbol::to_string() const {
    switch (kind) {
        case SymbolKind::Constant:    return std::to_string(k);
        case SymbolKind::Shortest:    return "sigma";
        case SymbolKind::Longest:     return "ell";
        case SymbolKind::Unbounded:   return "inf";
        case SymbolKind::NMinusOne:   return "nminus";
        case SymbolKind::MinShortest: return "min:" + std::to_string(k);
    }
    return "?";
}

LengthMatrix LengthMatrix::uniform(int n, LengthEntry off_diagonal) {
    LengthMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) m.set(i, j, off_diagonal);
    return m;
}

void LengthMatrix::set(int i, int j, LengthEntry e) {
    if (i == j) {
        if (e.infinite || e.value != 0)
            fail(ErrorCode::NonzeroDiagonal, "diagonal entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be zero");
        return;
    }
    entries_[index(i, j)] = e;
    entries_[index(j, i)] = e;
}

LengthMatrix LengthMatrix::from_rows(const std::vector<std::vector<long long>>& rows,
                                     const std::string& name) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) fail(ErrorCode::MatrixShapeMismatch, name + ": matrix is empty");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[i].size()) != n)
            fail(ErrorCode::MatrixShapeMismatch,
                 name + ": row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                     " entries, expected " + std::to_string(n));
    LengthMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const long long raw = rows[i - 1][j - 1];
            if (raw < -1)
                fail(ErrorCode::NegativeEntry,
                     name + "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(raw) +
                         "; only naturals and the -1 sentinel are allowed");
            if (i == j) {
                if (raw != 0)
                    fail(ErrorCode::NonzeroDiagonal,
                         name + "(" + std::to_string(i) + "," + std::to_string(i) + ") = " + std::to_string(raw) +
                             ", diagonal must be zero");
                continue;
            }
            if (rows[i - 1][j - 1] != rows[j - 1][i - 1])
                fail(ErrorCode::AsymmetricMatrix,
                     name + "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(raw) +
                         " differs from " + name + "(" + std::to_string(j) + "," + std::to_string(i) + ") = " +
                         std::to_string(rows[j - 1][i - 1]));
            m.set(i, j, raw == -1 ? LengthEntry::unbounded() : LengthEntry::finite(static_cast<int>(raw)));
        }
    }
    return m;
}

std::string ConvexitySpec::to_string() const {
    if (mode == Mode::Matrix) return "matrix:n=" + std::to_string(matrices.empty() ? 0 : matrices[0].size());
    if (!preset.empty()) return "preset:" + preset;
    return "abcd:" + a.to_string() + "," + b.to_string() + "," + c.to_string() + "," + d.to_string();
}

namespace {

ConvexitySpec symbolic(BoundSymbol a, BoundSymbol b, BoundSymbol c, BoundSymbol d, std::string preset) {
    ConvexitySpec spec;
    spec.mode = ConvexitySpec::Mode::Symbolic;
    spec.a = a;
    spec.b = b;
    spec.c = c;
    spec.d = d;
    spec.preset = std::move(preset);
    return spec;
}

int parse_positive_int(const std::string& token, const std::string& what) {
    if (token.empty()) fail(ErrorCode::MissingParameter, what + ": missing value");
    for (char c : token)
        if (c < '0' || c > '9')
            fail(ErrorCode::MalformedToken, what + ": '" + token + "' is not a positive integer");
    long long v = 0;
    for (char c : token) {
        v = v * 10 + (c - '0');
        if (v > 1'000'000'000) fail(ErrorCode::MalformedToken, what + ": '" + token + "' is too large");
    }
    if (v < 1) fail(ErrorCode::MalformedToken, what + ": positive integer required, got " + token);
    return static_cast<int>(v);
}

BoundSymbol parse_bound_token(const std::string& token, const std::string& what) {
    if (token == "sigma") return BoundSymbol::sigma();
    if (token == "ell") return BoundSymbol::ell();
    if (token == "inf") return BoundSymbol::inf();
    if (token == "nminus") return BoundSymbol::nminus();
    if (token.rfind("min:", 0) == 0)
        return BoundSymbol::min_shortest(parse_positive_int(token.substr(4), what + " min:<k>"));
    return BoundSymbol::constant(parse_positive_int(token, what));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ConvexitySpec parse_preset(const std::string& body) {
    const auto colon = body.find(':');
    const std::string name = body.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : body.substr(colon + 1);

    auto no_params = [&](ConvexitySpec spec) {
        if (!params.empty())
            fail(ErrorCode::MalformedToken, "preset '" + name + "' takes no parameter, got '" + params + "'");
        return spec;
    };
    auto one_param = [&](const std::string& what) {
        if (params.empty()) fail(ErrorCode::MissingParameter, "preset '" + name + "' requires " + what);
        return parse_positive_int(params, "preset '" + name + "' " + what);
    };

    const auto one = BoundSymbol::constant(1);
    const auto two = BoundSymbol::constant(2);
    const auto three = BoundSymbol::constant(3);

    if (name == "geodesic")
        return no_params(symbolic(BoundSymbol::sigma(), BoundSymbol::sigma(), one, one, name));
    if (name == "monophonic")
        return no_params(symbolic(two, BoundSymbol::inf(), one, one, name));
    if (name == "g3")
        return no_params(symbolic(three, BoundSymbol::sigma(), one, one, name));
    if (name == "m3")
        return no_params(symbolic(three, BoundSymbol::inf(), one, one, name));
    if (name == "gk") {
        int k = one_param("k");
        return symbolic(BoundSymbol::sigma(), BoundSymbol::min_shortest(k), one, one, name + ":" + std::to_string(k));
    }
    if (name == "p3")
        return no_params(symbolic(two, two, one, two, name));
    if (name == "p3star")
        return no_params(symbolic(two, two, one, one, name));
    if (name == "triangle")
        return no_params(symbolic(two, BoundSymbol::inf(), one, two, name));
    if (name == "total")
        return no_params(symbolic(two, BoundSymbol::inf(), three, BoundSymbol::inf(), name));
    if (name == "detour")
        return no_params(symbolic(BoundSymbol::ell(), BoundSymbol::ell(), one, BoundSymbol::inf(), name));
    if (name == "allpath")
        return no_params(symbolic(two, BoundSymbol::inf(), one, BoundSymbol::inf(), name));
    if (name == "gk_new") {
        int k = one_param("k");
        return symbolic(BoundSymbol::constant(k), BoundSymbol::sigma(), one, one, name + ":" + std::to_string(k));
    }
    if (name == "mk") {
        int k = one_param("k");
        return symbolic(BoundSymbol::constant(k), BoundSymbol::inf(), one, one, name + ":" + std::to_string(k));
    }
    if (name == "klpath") {
        if (params.empty()) fail(ErrorCode::MissingParameter, "preset 'klpath' requires k,l");
        const auto parts = split(params, ',');
        if (parts.size() != 2) fail(ErrorCode::MalformedToken, "preset 'klpath' expects two parameters k,l");
        int k = parse_positive_int(parts[0], "klpath k");
        int l = parse_positive_int(parts[1], "klpath l");
        return symbolic(BoundSymbol::constant(k), BoundSymbol::constant(l), one, one, name + ":" + params);
    }
    if (name == "kcycle") {
        int k = one_param("k");
        if (k < 2) fail(ErrorCode::MalformedToken, "preset 'kcycle' requires k >= 2");
        const auto km1 = BoundSymbol::constant(k - 1);
        return symbolic(km1, km1, km1, km1, name + ":" + std::to_string(k));
    }
    if (name == "hamiltonian")
        return no_params(symbolic(BoundSymbol::nminus(), BoundSymbol::nminus(), one, BoundSymbol::inf(), name));

    fail(ErrorCode::UnknownPreset, "unknown preset '" + name + "'");
}

}  // namespace

ConvexitySpec parse_spec(const std::string& text) {
    if (text.rfind("preset:", 0) == 0) {
        const std::string body = text.substr(7);
        if (body.empty()) fail(ErrorCode::MissingParameter, "preset: missing name");
        return parse_preset(body);
    }
    if (text.rfind("abcd:", 0) == 0) {
        const auto tokens = split(text.substr(5), ',');
        if (tokens.size() != 4)
            fail(ErrorCode::MalformedToken,
                 "abcd: expected four comma-separated bounds, got " + std::to_string(tokens.size()));
        static const char* names[4] = {"a", "b", "c", "d"};
        BoundSymbol parsed[4];
        for (int t = 0; t < 4; ++t)
            parsed[t] = parse_bound_token(tokens[t], std::string("bound '") + names[t] + "'");
        return symbolic(parsed[0], parsed[1], parsed[2], parsed[3], "");
    }
    fail(ErrorCode::MalformedToken, "spec must start with 'preset:' or 'abcd:', got '" + text + "'");
}

namespace {

std::vector<std::vector<long long>> rows_from_json(const nlohmann::json& j, const std::string& name, int n) {
    if (!j.contains(name)) fail(ErrorCode::ParseError, "matrix file: missing key \"" + name + "\"");
    const auto& rows = j.at(name);
    if (!rows.is_array())
        fail(ErrorCode::ParseError, "matrix file: \"" + name + "\" must be an array of rows");
    if (static_cast<int>(rows.size()) != n)
        fail(ErrorCode::MatrixShapeMismatch,
             name + ": has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    std::vector<std::vector<long long>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array()) fail(ErrorCode::ParseError, "matrix file: \"" + name + "\" rows must be arrays");
        std::vector<long long> r;
        r.reserve(row.size());
        for (const auto& cell : row) {
            if (!cell.is_number_integer())
                fail(ErrorCode::ParseError, "matrix file: \"" + name + "\" entries must be integers");
            r.push_back(cell.get<long long>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

ConvexitySpec parse_matrix_spec_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("matrix file: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorCode::ParseError, "matrix file: top level must be an object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        fail(ErrorCode::ParseError, "matrix file: missing integer key \"n\"");
    const int n = j.at("n").get<int>();
    if (n < 1) fail(ErrorCode::ParseError, "matrix file: n must be >= 1");

    ConvexitySpec spec;
    spec.mode = ConvexitySpec::Mode::Matrix;
    for (const char* name : {"A", "B", "C", "D"})
        spec.matrices.push_back(LengthMatrix::from_rows(rows_from_json(j, name, n), name));
    return spec;
}

ConvexitySpec load_matrix_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_spec_json(buf.str());
}

std::string matrix_spec_to_json(const ConvexitySpec& spec) {
    if (spec.mode != ConvexitySpec::Mode::Matrix || spec.matrices.size() != 4)
        fail(ErrorCode::InvalidArgument, "matrix_spec_to_json requires a matrix-mode spec");
    const int n = spec.matrices[0].size();
    nlohmann::json j;
    j["n"] = n;
    static const char* names[4] = {"A", "B", "C", "D"};
    for (int m = 0; m < 4; ++m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 1; i <= n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jcol = 1; jcol <= n; ++jcol) {
                const LengthEntry e = spec.matrices[m].get(i, jcol);
                row.push_back(e.infinite ? -1 : e.value);
            }
            rows.push_back(std::move(row));
        }
        j[names[m]] = std::move(rows);
    }
    return j.dump(1) + "\n";
}

void save_matrix_spec(const ConvexitySpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write matrix file '" + path + "'");
    out << matrix_spec_to_json(spec);
}

namespace {

BoundShape detect_shape(const ResolvedBounds& rb) {
    const int n = rb.a.size();
    bool geodesic = true, two_any = true, two_chordless = true;
    for (int i = 1; i <= n && (geodesic || two_any || two_chordless); ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const auto row = rb.row(i, j);
            if (!(row.a == rb.dist(i, j) && row.b == rb.dist(i, j))) geodesic = false;
            if (!(row.a == 2 && row.b == 2 && row.c <= 2 && row.d >= 2)) two_any = false;
            if (!(row.a == 2 && row.b == 2 && row.d < 2)) two_chordless = false;
            if (!geodesic && !two_any && !two_chordless) break;
        }
    }
    if (geodesic) return BoundShape::GeodesicLike;
    if (two_any) return BoundShape::TwoStepAnyPair;
    if (two_chordless) return BoundShape::TwoStepNonadjacent;
    return BoundShape::Generic;
}

}  // namespace

ResolvedBounds resolve_bounds(const ConvexitySpec& spec, const Graph& g, const ResolveOptions& opts) {
    const int n = g.vertex_count();
    ResolvedBounds rb{IntMatrix(n), IntMatrix(n), IntMatrix(n), IntMatrix(n),
                      all_pairs_distances(g), BoundShape::Generic};

    if (spec.mode == ConvexitySpec::Mode::Matrix) {
        if (spec.matrices.size() != 4)
            fail(ErrorCode::InvalidArgument, "matrix-mode spec must carry exactly four matrices");
        for (const auto& m : spec.matrices)
            if (m.size() != n)
                fail(ErrorCode::MatrixShapeMismatch,
                     "spec matrices are " + std::to_string(m.size()) + "x" + std::to_string(m.size()) +
                         ", graph has " + std::to_string(n) + " vertices");
        IntMatrix* out[4] = {&rb.a, &rb.b, &rb.c, &rb.d};
        for (int m = 0; m < 4; ++m)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    const LengthEntry e = spec.matrices[m].get(i, j);
                    (*out[m])(i, j) = e.infinite ? n - 1 : e.value;
                }
        rb.shape = detect_shape(rb);
        return rb;
    }

    // Longest-path lengths are filled lazily: only when some symbol needs them.
    IntMatrix longest;
    auto longest_at = [&](int i, int j) {
        if (longest.size() == 0) {
            longest = IntMatrix(n, 0);
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) {
                    const int len = longest_path_length(g, u, v, opts.longest_path_cap);
                    longest(u, v) = len;
                    longest(v, u) = len;
                }
        }
        return longest(i, j);
    };

    const BoundSymbol symbols[4] = {spec.a, spec.b, spec.c, spec.d};
    IntMatrix* out[4] = {&rb.a, &rb.b, &rb.c, &rb.d};
    for (int m = 0; m < 4; ++m) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                int value = 0;
                switch (symbols[m].kind) {
                    case SymbolKind::Constant:    value = symbols[m].k; break;
                    case SymbolKind::Shortest:    value = rb.dist(i, j); break;
                    case SymbolKind::Longest:     value = longest_at(i, j); break;
                    case SymbolKind::Unbounded:   value = n - 1; break;
                    case SymbolKind::NMinusOne:   value = n - 1; break;
                    case SymbolKind::MinShortest: value = std::min(symbols[m].k, rb.dist(i, j)); break;
                }
                (*out[m])(i, j) = value;
            }
        }
    }
    rb.shape = detect_shape(rb);
    return rb;
}

}  // namespace pathconv
