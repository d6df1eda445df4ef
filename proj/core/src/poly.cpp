#include "hasse/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace hasse {

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly poly_neg(const Fq& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    const std::uint64_t q = F.q();
    std::vector<std::uint64_t> acc(a.c.size() + b.c.size() - 1, 0);
    // Accumulate in 64 bits; flush lazily to avoid overflow for large inputs.
    const std::uint64_t limit = UINT64_MAX - static_cast<std::uint64_t>(q - 1) * (q - 1);
    std::uint64_t pending = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        const std::uint64_t ai = a.c[i];
        for (std::size_t j = 0; j < b.c.size(); ++j) acc[i + j] += ai * b.c[j];
        pending += static_cast<std::uint64_t>(q - 1) * (q - 1) * b.c.size();
        if (pending >= limit) {
            for (auto& x : acc) x %= q;
            pending = 0;
        }
    }
    Poly r;
    r.c.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<FqElem>(acc[i] % q);
    r.trim();
    return r;
}

Poly poly_scale(const Fq& F, const Poly& a, FqElem s) {
    if (s == 0) return Poly{};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    if (a.deg() < b.deg()) return {Poly{}, a};
    Poly rem = a;
    Poly quot;
    quot.c.assign(a.deg() - b.deg() + 1, 0);
    const FqElem lc_inv = F.inv(b.lc());
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        const FqElem top = rem.coeff(k + b.deg());
        if (top == 0) continue;
        const FqElem f = F.mul(top, lc_inv);
        quot.c[k] = f;
        for (int i = 0; i <= b.deg(); ++i)
            rem.c[k + i] = F.sub(rem.c[k + i], F.mul(f, b.c[i]));
    }
    rem.trim();
    quot.trim();
    return {quot, rem};
}

Poly poly_mod(const Fq& F, const Poly& a, const Poly& b) { return poly_divrem(F, a, b).second; }

Poly poly_div_exact(const Fq& F, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(F, a, b);
    if (!r.is_zero()) throw std::logic_error("poly_div_exact: division not exact");
    return q;
}

Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return poly_monic(F, x);
}

Poly poly_ext_gcd(const Fq& F, const Poly& a, const Poly& b, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1 = Poly{};
    Poly t0 = Poly{}, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(F, r0, r1);
        Poly s2 = poly_sub(F, s0, poly_mul(F, q, s1));
        Poly t2 = poly_sub(F, t0, poly_mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) { s = s0; t = t0; return r0; }
    const FqElem u = F.inv(r0.lc());
    s = poly_scale(F, s0, u);
    t = poly_scale(F, t0, u);
    return poly_scale(F, r0, u);
}

Poly poly_derivative(const Fq& F, const Poly& a) {
    Poly r;
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = F.mul(a.c[i], static_cast<FqElem>(i % F.q()));
    r.trim();
    return r;
}

Poly poly_monic(const Fq& F, const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(F, a, F.inv(a.lc()));
}

FqElem poly_eval(const Fq& F, const Poly& a, FqElem x) {
    FqElem r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

Poly poly_pow(const Fq& F, const Poly& a, std::uint64_t e) {
    Poly base = a;
    Poly r = Poly::constant(1);
    while (e) {
        if (e & 1) r = poly_mul(F, r, base);
        base = poly_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

std::optional<Poly> poly_sqrt(const Fq& F, const Poly& a) {
    if (a.is_zero()) return Poly::zero();
    if (a.deg() % 2 != 0 || !F.is_square_unit(a.lc())) return std::nullopt;
    const int h = a.deg() / 2;
    Poly s;
    s.c.assign(static_cast<std::size_t>(h) + 1, 0);
    FqElem lc_root = 0;
    for (FqElem x = 1; x < F.q(); ++x)
        if (F.mul(x, x) == a.lc()) { lc_root = x; break; }
    s.c[static_cast<std::size_t>(h)] = lc_root;
    const FqElem inv2lc = F.inv(F.mul(2 % F.q(), lc_root));
    for (int j = h - 1; j >= 0; --j) {
        FqElem acc = 0;
        for (int i = j + 1; i <= h; ++i) {
            const int k = h + j - i;
            if (k > h || k <= j) continue;
            acc = F.add(acc, F.mul(s.c[static_cast<std::size_t>(i)], s.c[static_cast<std::size_t>(k)]));
        }
        const FqElem target = a.coeff(static_cast<std::size_t>(h + j));
        s.c[static_cast<std::size_t>(j)] = F.mul(F.sub(target, acc), inv2lc);
    }
    s.trim();
    if (poly_mul(F, s, s) == a) return s;
    return std::nullopt;
}

Poly poly_powmod(const Fq& F, const Poly& a, std::uint64_t e, const Poly& m) {
    Poly base = poly_mod(F, a, m);
    Poly r = Poly::constant(1);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), m);
        base = poly_mod(F, poly_mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

Poly poly_frobenius_powmod(const Fq& F, const Poly& start, unsigned k, const Poly& m) {
    Poly h = poly_mod(F, start, m);
    for (unsigned i = 0; i < k; ++i) h = poly_powmod(F, h, F.q(), m);
    return h;
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    }
    return 0;
}

std::string poly_to_string(const Fq& F, const Poly& a) {
    (void)F;
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.deg(); i >= 0; --i) {
        const FqElem ci = a.coeff(static_cast<std::size_t>(i));
        if (ci == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(ci);
        } else {
            if (ci != 1) {
                out += std::to_string(ci);
                out += '*';
            }
            out += 'T';
            if (i != 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

struct Parser {
    const Fq& F;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }

    std::uint64_t read_number() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("poly_parse: expected number at position " + std::to_string(pos));
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 40)) throw std::invalid_argument("poly_parse: number too large");
            ++pos;
        }
        return v;
    }

    // One term: c, T, T^k, c*T, c*T^k.
    void read_term(bool negate, std::vector<FqElem>& coeffs) {
        skip_ws();
        FqElem coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = static_cast<FqElem>(read_number() % F.q());
            have_coeff = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        std::size_t power = 0;
        if (pos < s.size() && (s[pos] == 'T' || s[pos] == 't')) {
            ++pos;
            power = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                power = static_cast<std::size_t>(read_number());
                if (power > 100000) throw std::invalid_argument("poly_parse: exponent too large");
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("poly_parse: expected term at position " + std::to_string(pos));
        }
        if (negate) coeff = F.neg(coeff);
        if (coeffs.size() < power + 1) coeffs.resize(power + 1, 0);
        coeffs[power] = F.add(coeffs[power], coeff);
    }
};

} // namespace

Poly poly_parse(const Fq& F, const std::string& text) {
    Parser p{F, text};
    std::vector<FqElem> coeffs;
    bool negate = false;
    if (!p.eof() && (p.peek() == '+' || p.peek() == '-')) {
        negate = p.peek() == '-';
        ++p.pos;
    }
    if (p.eof()) throw std::invalid_argument("poly_parse: empty input");
    p.read_term(negate, coeffs);
    while (!p.eof()) {
        const char op = p.peek();
        if (op != '+' && op != '-')
            throw std::invalid_argument("poly_parse: expected '+' or '-' at position " + std::to_string(p.pos));
        ++p.pos;
        p.read_term(op == '-', coeffs);
    }
    return Poly(std::move(coeffs));
}

Poly poly_from_index(const Fq& F, int d, std::uint64_t index) {
    if (d < 0) throw std::invalid_argument("poly_from_index: negative degree");
    Poly p;
    p.c.assign(static_cast<std::size_t>(d) + 1, 0);
    p.c[static_cast<std::size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) {
        p.c[static_cast<std::size_t>(i)] = static_cast<FqElem>(index % F.q());
        index /= F.q();
    }
    return p;
}

} // namespace hasse
