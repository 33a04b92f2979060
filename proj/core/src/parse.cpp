#include "adegree/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace adegree {

namespace {

// Sparse possibly-inhomogeneous polynomial used only during parsing.
using SparsePoly = std::map<Expo, Rat>;

void add_term(SparsePoly& p, const Expo& e, const Rat& c) {
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

SparsePoly sp_mul(const SparsePoly& a, const SparsePoly& b, int num_vars) {
    SparsePoly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Expo e(num_vars);
            for (int i = 0; i < num_vars; ++i) e[i] = ea[i] + eb[i];
            add_term(r, e, ca * cb);
        }
    }
    return r;
}

SparsePoly sp_pow(const SparsePoly& a, long k, int num_vars) {
    SparsePoly r;
    add_term(r, Expo(num_vars, 0), Rat(1));
    for (long i = 0; i < k; ++i) r = sp_mul(r, a, num_vars);
    return r;
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    int num_vars;
    // Longest-match variable spellings; several spellings may map to one slot.
    std::vector<std::pair<std::string, int>> names;

    Parser(const std::string& t, int nv, std::vector<std::pair<std::string, int>> spellings)
        : text(t), num_vars(nv), names(std::move(spellings)) {}

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    long parse_nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    Rat parse_number() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        Int num(text.substr(start, pos - start));
        if (eat('/')) {
            skip_ws();
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (dstart == pos) fail("expected denominator");
            Int den(text.substr(dstart, pos - dstart));
            if (den == 0) fail("zero denominator");
            return rat_reduce(num, den);
        }
        return Rat(num);
    }

    int match_variable() {
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (const auto& [n, slot] : names) {
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = slot;
                best_len = n.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    }

    SparsePoly parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            SparsePoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            SparsePoly inner = parse_base();
            SparsePoly r;
            for (auto& [e, q] : inner) r.emplace(e, -q);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat q = parse_number();
            SparsePoly r;
            if (q != 0) add_term(r, Expo(num_vars, 0), q);
            return r;
        }
        int v = match_variable();
        if (v < 0) fail("expected a number, variable, or '('");
        Expo e(num_vars, 0);
        e[v] = 1;
        SparsePoly r;
        r.emplace(std::move(e), Rat(1));
        return r;
    }

    SparsePoly parse_factor() {
        SparsePoly base = parse_base();
        while (eat('^')) {
            long k = parse_nat();
            base = sp_pow(base, k, num_vars);
        }
        return base;
    }

    SparsePoly parse_term() {
        SparsePoly prod = parse_factor();
        while (eat('*')) {
            prod = sp_mul(prod, parse_factor(), num_vars);
        }
        return prod;
    }

    SparsePoly parse_expr() {
        SparsePoly acc;
        bool negate = false;
        if (eat('-')) negate = true;
        for (;;) {
            SparsePoly t = parse_term();
            for (auto& [e, q] : t) add_term(acc, e, negate ? -q : q);
            skip_ws();
            if (eat('+')) negate = false;
            else if (eat('-')) negate = true;
            else break;
        }
        return acc;
    }

    SparsePoly parse_full() {
        SparsePoly p = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input after expression");
        return p;
    }
};

std::vector<std::string> projective_names(int num_vars) {
    std::vector<std::string> names;
    static const char* alias[4] = {"X", "Y", "Z", "W"};
    for (int i = 0; i < num_vars; ++i) names.push_back("X" + std::to_string(i));
    if (num_vars <= 4) {
        // Aliases are additional spellings; keep canonical Xi entries too.
        for (int i = 0; i < num_vars; ++i) names[i] = alias[i];
    }
    return names;
}

int sparse_degree(const SparsePoly& p) {
    int d = -1;
    for (const auto& [e, q] : p) d = std::max(d, expo_degree(e));
    return d;
}

SparsePoly parse_with_aliases(const std::string& text, int num_vars, bool projective) {
    std::vector<std::pair<std::string, int>> spellings;
    if (projective) {
        for (int i = 0; i < num_vars; ++i)
            spellings.emplace_back("X" + std::to_string(i), i);
        if (num_vars <= 4) {
            static const char* alias[4] = {"X", "Y", "Z", "W"};
            for (int i = 0; i < num_vars; ++i) spellings.emplace_back(alias[i], i);
        }
    } else {
        for (int i = 0; i < num_vars; ++i)
            spellings.emplace_back("x" + std::to_string(i + 1), i);
        if (num_vars <= 4) {
            static const char* alias[4] = {"x", "y", "z", "w"};
            for (int i = 0; i < num_vars; ++i) spellings.emplace_back(alias[i], i);
        }
    }
    Parser p(text, num_vars, std::move(spellings));
    return p.parse_full();
}

} // namespace

HomPoly parse_homogeneous(const std::string& text, int num_vars) {
    SparsePoly raw = parse_with_aliases(text, num_vars, true);
    std::vector<HomPoly::Term> terms;
    for (const auto& [e, q] : raw) terms.push_back({e, q});
    try {
        return HomPoly::from_terms(num_vars, std::move(terms));
    } catch (const std::invalid_argument&) {
        throw parse_error("expression is not homogeneous", 0);
    }
}

HomPoly parse_affine_homogenized(const std::string& text, int affine_vars, int target_degree) {
    SparsePoly raw = parse_with_aliases(text, affine_vars, false);
    int deg = sparse_degree(raw);
    if (deg < 0) return HomPoly::zero(affine_vars + 1);
    if (target_degree < 0) target_degree = deg;
    if (deg > target_degree) throw parse_error("degree exceeds homogenization target", 0);
    int nv = affine_vars + 1;
    std::vector<HomPoly::Term> terms;
    for (const auto& [e, q] : raw) {
        Expo f(nv, 0);
        for (int i = 0; i < affine_vars; ++i) f[i] = e[i];
        f[nv - 1] = static_cast<std::uint32_t>(target_degree - expo_degree(e));
        terms.push_back({std::move(f), q});
    }
    return HomPoly::from_terms(nv, std::move(terms));
}

int affine_expression_degree(const std::string& text, int affine_vars) {
    return sparse_degree(parse_with_aliases(text, affine_vars, false));
}

std::string poly_to_string(const HomPoly& p) {
    return p.to_string(projective_names(p.num_vars()));
}

std::vector<std::vector<Int>> parse_int_matrix(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto parse_int = [&]() -> Int {
        skip();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw parse_error("expected integer", pos);
        return Int(text.substr(start, pos - start));
    };

    std::vector<std::vector<Int>> rows;
    expect('[');
    for (;;) {
        expect('[');
        std::vector<Int> row;
        for (;;) {
            row.push_back(parse_int());
            skip();
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skip();
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        break;
    }
    expect(']');
    skip();
    if (pos != text.size()) throw parse_error("trailing input after matrix", pos);
    if (rows.empty()) throw parse_error("empty matrix", 0);
    for (const auto& r : rows) {
        if (r.size() != rows.size())
            throw parse_error("matrix must be square", 0);
    }
    return rows;
}

std::string matrix_to_string(const std::vector<std::vector<Int>>& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < m[i].size(); ++j)
            out << (j ? "," : "") << m[i][j].get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> coords;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        // Trim whitespace.
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw parse_error("empty coordinate", start);
        std::string token = item.substr(a, b - a + 1);
        bool negative = false;
        if (!token.empty() && (token[0] == '-' || token[0] == '+')) {
            negative = token[0] == '-';
            token = token.substr(1);
        }
        Rat q = parse_rational(token);
        coords.push_back(negative ? Rat(-q) : q);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return coords;
}

} // namespace adegree
