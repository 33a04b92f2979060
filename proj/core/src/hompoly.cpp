#include "adegree/hompoly.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "adegree/budget.hpp"

namespace adegree {

int expo_degree(const Expo& e) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    return d;
}

int grlex_cmp(const Expo& a, const Expo& b) {
    int da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {

bool term_order_desc(const HomPoly::Term& s, const HomPoly::Term& t) {
    return grlex_cmp(s.expo, t.expo) > 0;
}

Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace

HomPoly HomPoly::from_terms(int num_vars, std::vector<Term> terms) {
    HomPoly p(num_vars);
    std::sort(terms.begin(), terms.end(), term_order_desc);
    int deg = -1;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (static_cast<int>(t.expo.size()) != num_vars)
            throw std::invalid_argument("exponent arity mismatch");
        int d = expo_degree(t.expo);
        if (deg == -1) deg = d;
        else if (d != deg) throw std::invalid_argument("terms are not homogeneous");
        if (!p.terms_.empty() && p.terms_.back().expo == t.expo) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    p.check_budget("from_terms");
    return p;
}

HomPoly HomPoly::constant(int num_vars, const Rat& c) {
    HomPoly p(num_vars);
    if (c != 0) p.terms_.push_back({Expo(num_vars, 0), c});
    return p;
}

HomPoly HomPoly::monomial(int num_vars, Expo e, const Rat& c) {
    if (static_cast<int>(e.size()) != num_vars)
        throw std::invalid_argument("exponent arity mismatch");
    HomPoly p(num_vars);
    if (c != 0) p.terms_.push_back({std::move(e), c});
    return p;
}

HomPoly HomPoly::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars) throw std::invalid_argument("variable index out of range");
    Expo e(num_vars, 0);
    e[i] = 1;
    return monomial(num_vars, e, Rat(1));
}

const HomPoly::Term& HomPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
}

std::int64_t HomPoly::coefficient_bits() const {
    std::int64_t bits = 0;
    for (const auto& t : terms_) bits += bit_length(t.coeff);
    return bits;
}

void HomPoly::check_budget(const char* op) const {
    if (coefficient_bits() > coefficient_bit_budget())
        throw budget_error(std::string("coefficient bit budget exceeded in ") + op);
}

HomPoly HomPoly::operator-() const {
    HomPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (num_vars_ != o.num_vars_) throw std::invalid_argument("variable count mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree() != o.degree()) throw std::invalid_argument("degree mismatch in sum");
    HomPoly r(num_vars_);
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        int c = grlex_cmp(i->expo, j->expo);
        if (c > 0) {
            r.terms_.push_back(*i++);
        } else if (c < 0) {
            r.terms_.push_back(*j++);
        } else {
            Rat s = i->coeff + j->coeff;
            if (s != 0) r.terms_.push_back({i->expo, s});
            ++i; ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), i, terms_.end());
    r.terms_.insert(r.terms_.end(), j, o.terms_.end());
    r.check_budget("sum");
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + (-o); }

HomPoly HomPoly::operator*(const HomPoly& o) const { return poly_mul(*this, o); }

HomPoly HomPoly::operator*(const Rat& c) const {
    if (c == 0) return HomPoly::zero(num_vars_);
    HomPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    r.check_budget("scale");
    return r;
}

HomPoly operator*(const Rat& c, const HomPoly& p) { return p * c; }

bool HomPoly::operator==(const HomPoly& o) const {
    if (num_vars_ != o.num_vars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].expo != o.terms_[i].expo || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

namespace {

// Multiplication by a single monomial is a shift-and-scale pass.
HomPoly mul_by_monomial(const HomPoly& p, const HomPoly::Term& m) {
    std::vector<HomPoly::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back({expo_add(t.expo, m.expo), t.coeff * m.coeff});
    return HomPoly::from_terms(p.num_vars(), std::move(terms));
}

// Up to four variables pack into one 64-bit key whose natural order agrees
// with graded-lex on same-degree monomials.
std::uint64_t pack_expo(const Expo& e) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        key |= static_cast<std::uint64_t>(e[i]) << (48 - 16 * i);
    return key;
}

Expo unpack_expo(std::uint64_t key, int nv) {
    Expo e(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i)
        e[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>((key >> (48 - 16 * i)) & 0xffff);
    return e;
}

bool integer_coeffs(const HomPoly& p) {
    for (const auto& t : p.terms()) {
        if (t.coeff.get_den() != 1) return false;
    }
    return true;
}

// Sparse multiplication as a k-way merge of the sorted streams a_i * b.
HomPoly mul_packed(const HomPoly& a, const HomPoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const std::size_t m = ta.size(), k = tb.size();
    std::vector<std::uint64_t> ka(m), kb(k);
    for (std::size_t i = 0; i < m; ++i) ka[i] = pack_expo(ta[i].expo);
    for (std::size_t j = 0; j < k; ++j) kb[j] = pack_expo(tb[j].expo);

    std::vector<std::size_t> pos(m, 0);
    std::priority_queue<std::pair<std::uint64_t, std::size_t>> pq;
    for (std::size_t i = 0; i < m; ++i) pq.push({ka[i] + kb[0], i});

    const bool ints = integer_coeffs(a) && integer_coeffs(b);
    std::vector<HomPoly::Term> out;
    out.reserve(m + k);
    const int nv = a.num_vars();

    std::uint64_t cur = 0;
    bool have_cur = false;
    Int acc_z(0);
    Rat acc_q(0);
    auto flush = [&] {
        if (!have_cur) return;
        if (ints) {
            if (acc_z != 0) out.push_back({unpack_expo(cur, nv), Rat(acc_z)});
            acc_z = 0;
        } else {
            if (acc_q != 0) out.push_back({unpack_expo(cur, nv), acc_q});
            acc_q = 0;
        }
    };
    while (!pq.empty()) {
        auto [key, i] = pq.top();
        pq.pop();
        if (!have_cur || key != cur) {
            flush();
            cur = key;
            have_cur = true;
        }
        const std::size_t j = pos[i];
        if (ints)
            mpz_addmul(acc_z.get_mpz_t(), ta[i].coeff.get_num().get_mpz_t(),
                       tb[j].coeff.get_num().get_mpz_t());
        else
            acc_q += ta[i].coeff * tb[j].coeff;
        if (++pos[i] < k) pq.push({ka[i] + kb[pos[i]], i});
    }
    flush();
    return HomPoly::from_terms(nv, std::move(out));
}

} // namespace

HomPoly poly_mul(const HomPoly& a, const HomPoly& b) {
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("variable count mismatch");
    if (a.is_zero() || b.is_zero()) return HomPoly::zero(a.num_vars());
    if (a.is_monomial()) return mul_by_monomial(b, a.leading_term());
    if (b.is_monomial()) return mul_by_monomial(a, b.leading_term());
    if (a.num_vars() <= 4 && a.degree() + b.degree() < 0xffff) return mul_packed(a, b);

    std::map<Expo, Rat, decltype([](const Expo& x, const Expo& y) { return grlex_cmp(x, y) > 0; })> acc;
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            Expo e = expo_add(s.expo, t.expo);
            auto [it, inserted] = acc.try_emplace(std::move(e), s.coeff * t.coeff);
            if (!inserted) it->second += s.coeff * t.coeff;
        }
    }
    std::vector<HomPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (c != 0) terms.push_back({e, std::move(c)});
    }
    return HomPoly::from_terms(a.num_vars(), std::move(terms));
}

Rat HomPoly::eval(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw std::invalid_argument("point arity mismatch");
    Rat acc(0);
    for (const auto& t : terms_) {
        Rat m = t.coeff;
        for (int i = 0; i < num_vars_; ++i) {
            for (std::uint32_t k = 0; k < t.expo[i]; ++k) m *= point[i];
        }
        acc += m;
    }
    return acc;
}

Rat poly_eval(const HomPoly& f, std::span<const Rat> point) { return f.eval(point); }

HomPoly HomPoly::derivative(int var) const {
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        if (t.expo[var] == 0) continue;
        Term d = t;
        d.coeff *= Rat(static_cast<long>(t.expo[var]));
        d.expo[var] -= 1;
        terms.push_back(std::move(d));
    }
    return from_terms(num_vars_, std::move(terms));
}

bool HomPoly::in_variable_ideal(const std::vector<int>& vars) const {
    for (const auto& t : terms_) {
        bool hit = false;
        for (int v : vars) {
            if (t.expo[v] > 0) { hit = true; break; }
        }
        if (!hit) return false;
    }
    return true;
}

Rat HomPoly::coefficient_of_power(int var) const {
    for (const auto& t : terms_) {
        if (static_cast<int>(t.expo[var]) == degree() && expo_degree(t.expo) == degree())
            return t.coeff;
    }
    return Rat(0);
}

int HomPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.expo[var]));
    return d;
}

HomPoly HomPoly::substitute_zero(int var) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        if (t.expo[var] == 0) terms.push_back(t);
    }
    return from_terms(num_vars_, std::move(terms));
}

HomPoly HomPoly::permute_variables(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != num_vars_)
        throw std::invalid_argument("permutation arity mismatch");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Expo e(num_vars_, 0);
        for (int i = 0; i < num_vars_; ++i) e[perm[i]] = t.expo[i];
        terms.push_back({std::move(e), t.coeff});
    }
    return from_terms(num_vars_, std::move(terms));
}

Rat HomPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    return rat_reduce(num_gcd, den_lcm);
}

HomPoly HomPoly::primitive_part() const {
    if (is_zero()) return *this;
    Rat c = content();
    if (leading_term().coeff < 0) c = -c;
    HomPoly r = *this;
    for (auto& t : r.terms_) t.coeff /= c;
    return r;
}

HomPoly poly_compose(const HomPoly& f, const std::vector<HomPoly>& g) {
    if (static_cast<int>(g.size()) != f.num_vars())
        throw std::invalid_argument("composition arity mismatch");
    if (g.empty()) throw std::invalid_argument("empty substitution");
    int inner_vars = g.front().num_vars();
    int e = -1;
    for (const auto& gi : g) {
        if (gi.num_vars() != inner_vars)
            throw std::invalid_argument("substituted polynomials disagree on variables");
        if (gi.is_zero()) continue;
        if (e == -1) e = gi.degree();
        else if (gi.degree() != e)
            throw std::invalid_argument("substituted polynomials have mixed degrees");
    }
    if (f.is_zero()) return HomPoly::zero(inner_vars);
    if (e == -1) {
        // All g_i are zero: f(0) is zero unless f is a nonzero constant.
        if (f.degree() == 0) return HomPoly::constant(inner_vars, f.leading_term().coeff);
        return HomPoly::zero(inner_vars);
    }

    // Cache powers of each g_i up to the largest exponent used.
    std::vector<std::vector<HomPoly>> powers(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) powers[i].push_back(HomPoly::constant(inner_vars, Rat(1)));

    auto power = [&](std::size_t i, std::uint32_t k) -> const HomPoly& {
        while (powers[i].size() <= k) powers[i].push_back(poly_mul(powers[i].back(), g[i]));
        return powers[i][k];
    };

    HomPoly acc = HomPoly::zero(inner_vars);
    bool first = true;
    for (const auto& t : f.terms()) {
        HomPoly m = HomPoly::constant(inner_vars, t.coeff);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (t.expo[i] > 0) m = poly_mul(m, power(i, t.expo[i]));
        }
        if (m.is_zero()) continue;
        if (first) { acc = std::move(m); first = false; }
        else acc = acc + m;
    }
    if (!acc.is_zero() && acc.degree() != f.degree() * e)
        throw std::logic_error("composition degree bookkeeping failed");
    return acc;
}

// ---------------------------------------------------------------------------
// Exact division and gcd.
// ---------------------------------------------------------------------------

namespace {

bool expo_divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::optional<HomPoly> try_divexact(const HomPoly& a, const HomPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return HomPoly::zero(a.num_vars());
    if (a.num_vars() != g.num_vars()) throw std::invalid_argument("variable count mismatch");
    if (a.degree() < g.degree()) return std::nullopt;

    if (g.is_monomial()) {
        const auto& m = g.leading_term();
        std::vector<HomPoly::Term> terms;
        terms.reserve(a.term_count());
        for (const auto& t : a.terms()) {
            if (!expo_divides(m.expo, t.expo)) return std::nullopt;
            terms.push_back({expo_sub(t.expo, m.expo), t.coeff / m.coeff});
        }
        return HomPoly::from_terms(a.num_vars(), std::move(terms));
    }

    HomPoly r = a;
    std::vector<HomPoly::Term> quot;
    while (!r.is_zero()) {
        const auto& lr = r.leading_term();
        const auto& lg = g.leading_term();
        if (!expo_divides(lg.expo, lr.expo)) return std::nullopt;
        HomPoly::Term q{expo_sub(lr.expo, lg.expo), lr.coeff / lg.coeff};
        r = r - poly_mul(g, HomPoly::monomial(a.num_vars(), q.expo, q.coeff));
        quot.push_back(std::move(q));
    }
    return HomPoly::from_terms(a.num_vars(), std::move(quot));
}

// Univariate view in one variable; coefficients are polynomials in the
// remaining variables (stored with the full variable count, exponent zero on
// the eliminated variable).
std::vector<HomPoly> to_univariate(const HomPoly& p, int var) {
    std::vector<HomPoly> coeffs(static_cast<std::size_t>(p.degree_in(var)) + 1,
                                HomPoly::zero(p.num_vars()));
    std::vector<std::vector<HomPoly::Term>> buckets(coeffs.size());
    for (const auto& t : p.terms()) {
        HomPoly::Term s = t;
        std::uint32_t k = s.expo[var];
        s.expo[var] = 0;
        buckets[k].push_back(std::move(s));
    }
    for (std::size_t k = 0; k < buckets.size(); ++k)
        coeffs[k] = HomPoly::from_terms(p.num_vars(), std::move(buckets[k]));
    return coeffs;
}

HomPoly from_univariate(const std::vector<HomPoly>& coeffs, int var, int num_vars) {
    std::vector<HomPoly::Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms()) {
            HomPoly::Term s = t;
            s.expo[var] = static_cast<std::uint32_t>(k);
            terms.push_back(std::move(s));
        }
    }
    return HomPoly::from_terms(num_vars, std::move(terms));
}

struct UniPoly {
    std::vector<HomPoly> c; // c[k] multiplies var^k; c.back() != 0

    int deg() const { return static_cast<int>(c.size()) - 1; }
    const HomPoly& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

// r = lc(g)^(deg f - deg g + 1) * f mod g, the classical pseudo-remainder.
// The reduction loop can terminate early when leading terms cancel, so the
// result is rescaled to carry exactly delta+1 factors of lc(g).
UniPoly pseudo_remainder(UniPoly f, const UniPoly& g) {
    int dg = g.deg();
    int steps = 0;
    const int delta = f.deg() - dg;
    while (f.deg() >= dg && !f.c.empty()) {
        HomPoly top = f.lc();
        int shift = f.deg() - dg;
        // f := lc(g)*f - top * x^shift * g
        for (auto& ci : f.c) ci = poly_mul(ci, g.lc());
        for (int k = 0; k <= dg; ++k) {
            f.c[k + shift] = f.c[k + shift] - poly_mul(top, g.c[k]);
        }
        f.trim();
        ++steps;
    }
    for (; steps < delta + 1; ++steps) {
        for (auto& ci : f.c) ci = poly_mul(ci, g.lc());
    }
    return f;
}

UniPoly uni_divexact(const UniPoly& p, const HomPoly& d) {
    UniPoly r;
    r.c.reserve(p.c.size());
    for (const auto& ci : p.c) r.c.push_back(poly_divexact(ci, d));
    return r;
}

HomPoly gcd_impl(HomPoly a, HomPoly b);

// Content of p viewed as univariate in `var`: gcd of its coefficients.
HomPoly uni_content(const std::vector<HomPoly>& coeffs) {
    HomPoly g = HomPoly::zero(coeffs.front().num_vars());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_part() : gcd_impl(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? g : g.primitive_part();
}

// Common monomial factor across all terms (min exponent per variable).
Expo monomial_content(const HomPoly& p) {
    Expo m = p.terms().front().expo;
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.expo[i]);
    }
    return m;
}

HomPoly gcd_impl(HomPoly a, HomPoly b) {
    const int nv = a.num_vars();
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();

    // Split off the common monomial factor first; afterwards some variable is
    // missing from at least one term of each input.
    Expo ma = monomial_content(a), mb = monomial_content(b);
    Expo shared(ma.size());
    bool shared_nontrivial = false;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        shared[i] = std::min(ma[i], mb[i]);
        if (shared[i] > 0) shared_nontrivial = true;
    }
    if (shared_nontrivial || expo_degree(ma) > 0 || expo_degree(mb) > 0) {
        HomPoly a1 = poly_divexact(a, HomPoly::monomial(nv, ma, Rat(1)));
        HomPoly b1 = poly_divexact(b, HomPoly::monomial(nv, mb, Rat(1)));
        HomPoly g = gcd_impl(std::move(a1), std::move(b1));
        return poly_mul(g, HomPoly::monomial(nv, shared, Rat(1)));
    }

    if (a.is_monomial() || b.is_monomial()) {
        // Monomial contents were already removed, so the gcd is constant.
        return HomPoly::constant(nv, Rat(1));
    }
    if (a.is_constant() || b.is_constant()) return HomPoly::constant(nv, Rat(1));

    // Pick the highest-index variable actually present in both.
    int var = -1;
    for (int v = nv - 1; v >= 0; --v) {
        if (a.degree_in(v) > 0 && b.degree_in(v) > 0) { var = v; break; }
    }
    if (var == -1) {
        // No shared variable: coprime apart from content.
        return HomPoly::constant(nv, Rat(1));
    }

    UniPoly F{to_univariate(a, var)};
    UniPoly G{to_univariate(b, var)};
    HomPoly cf = uni_content(F.c);
    HomPoly cg = uni_content(G.c);
    HomPoly cont_gcd = gcd_impl(cf, cg);
    F = uni_divexact(F, cf);
    G = uni_divexact(G, cg);
    if (F.deg() < G.deg()) std::swap(F, G);

    // Subresultant polynomial remainder sequence on the primitive parts.
    HomPoly g = HomPoly::constant(nv, Rat(1));
    HomPoly h = HomPoly::constant(nv, Rat(1));
    for (;;) {
        int delta = F.deg() - G.deg();
        UniPoly R = pseudo_remainder(F, G);
        if (R.c.empty()) break;
        if (R.deg() == 0) {
            // Primitive parts are coprime in `var`.
            G.c.assign(1, HomPoly::constant(nv, Rat(1)));
            break;
        }
        HomPoly divisor = g;
        for (int i = 0; i < delta; ++i) divisor = poly_mul(divisor, h);
        F = std::move(G);
        G = uni_divexact(R, divisor);
        g = F.lc();
        // h = g^delta / h^(delta-1), exact by subresultant theory.
        if (delta > 0) {
            HomPoly gn = HomPoly::constant(nv, Rat(1));
            for (int i = 0; i < delta; ++i) gn = poly_mul(gn, g);
            for (int i = 0; i < delta - 1; ++i) gn = poly_divexact(gn, h);
            h = gn;
        }
    }

    HomPoly pp = from_univariate(G.c, var, nv);
    pp = poly_divexact(pp, uni_content(to_univariate(pp, var)));
    return poly_mul(cont_gcd, pp.primitive_part()).primitive_part();
}

} // namespace

HomPoly poly_divexact(const HomPoly& a, const HomPoly& g) {
    auto q = try_divexact(a, g);
    if (!q) throw std::domain_error("polynomial division is not exact");
    return *q;
}

bool poly_divides(const HomPoly& g, const HomPoly& a) {
    return try_divexact(a, g).has_value();
}

HomPoly poly_gcd(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    if (a.num_vars() != b.num_vars()) throw std::invalid_argument("variable count mismatch");
    HomPoly g = gcd_impl(a, b);
    // Trial-division check: cheap insurance that the PRS result divides both.
    if (!poly_divides(g, a) || !poly_divides(g, b))
        throw std::logic_error("gcd verification by trial division failed");
    return g;
}

std::string HomPoly::to_string(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    auto name = [&](int i) -> std::string {
        if (i < static_cast<int>(var_names.size())) return var_names[i];
        static const char* alias[4] = {"X", "Y", "Z", "W"};
        if (num_vars_ <= 4) return alias[i];
        return "X" + std::to_string(i);
    };
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_vars = expo_degree(t.expo) > 0;
        bool printed = false;
        if (c != 1 || !has_vars) {
            out << adegree::to_string(c);
            printed = true;
        }
        for (int i = 0; i < num_vars_; ++i) {
            if (t.expo[i] == 0) continue;
            if (printed) out << "*";
            out << name(i);
            if (t.expo[i] > 1) out << "^" << t.expo[i];
            printed = true;
        }
    }
    return out.str();
}

} // namespace adegree
