#include "cellcrys/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cellcrys {

LaurentPoly LaurentPoly::constant(int nvars, const Int& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Expo& e, const Int& c) {
    check(static_cast<int>(e.size()) == nvars, "monomial: exponent size mismatch");
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[e] = c;
    return p;
}

LaurentPoly LaurentPoly::var(int nvars, int idx, int power) {
    Expo e(nvars, 0);
    e[idx] = power;
    return monomial(nvars, e, 1);
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPoly::add_term(const Expo& e, const Int& c) {
    check(static_cast<int>(e.size()) == nvars_, "add_term: exponent size mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check(a.nvars_ == b.nvars_, "poly_add: nvars mismatch");
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    check(a.nvars_ == b.nvars_, "poly_sub: nvars mismatch");
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check(a.nvars_ == b.nvars_, "poly_mul: nvars mismatch");
    LaurentPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    Expo e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::optional<LaurentPoly> LaurentPoly::try_div(const LaurentPoly& b,
                                                std::size_t max_steps) const {
    check(nvars_ == b.nvars_, "poly_div: nvars mismatch");
    check(!b.is_zero(), "poly_div: division by zero");
    if (is_zero()) return LaurentPoly::zero(nvars_);
    // Shift both operands into the polynomial ring; in lex order an exact
    // quotient always has its leading term divisible by the divisor's, so the
    // first divisibility failure certifies non-divisibility.
    Expo ma = monomial_content(), mb = b.monomial_content();
    Expo sa(nvars_), sb(nvars_), shift(nvars_);
    for (int k = 0; k < nvars_; ++k) {
        sa[k] = -ma[k];
        sb[k] = -mb[k];
        shift[k] = ma[k] - mb[k];  // quotient correction
    }
    LaurentPoly rem = *this * monomial(nvars_, sa, 1);
    LaurentPoly div = b * monomial(nvars_, sb, 1);
    const auto& [eb, cb] = *div.terms_.rbegin();
    {
        // fast reject on the trailing (lex-lowest) terms: exact products have
        // trailing(f) = trailing(q) trailing(g) by the Newton-polytope vertex
        const auto& [ef, cf] = *rem.terms_.begin();
        const auto& [eg, cg] = *div.terms_.begin();
        if (cf % cg != 0) return std::nullopt;
        for (int k = 0; k < nvars_; ++k)
            if (ef[k] < eg[k]) return std::nullopt;
    }
    LaurentPoly quo(nvars_);
    std::size_t steps = 0;
    while (!rem.is_zero()) {
        if (++steps > max_steps) return std::nullopt;
        const auto& [er, cr] = *rem.terms_.rbegin();
        Expo q(nvars_);
        for (int k = 0; k < nvars_; ++k) {
            q[k] = er[k] - eb[k];
            if (q[k] < 0) return std::nullopt;
        }
        if (cr % cb != 0) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(nvars_, q, cr / cb);
        rem = rem - t * div;
        quo = quo + t;
    }
    return quo * monomial(nvars_, shift, 1);
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& b) const {
    auto q = try_div(b);
    if (!q) {
        throw std::runtime_error("div_exact: not divisible; dividend " + str() +
                                 " by " + b.str());
    }
    return *q;
}

bool LaurentPoly::is_subtraction_free() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

Rat LaurentPoly::eval_positive(const std::vector<Rat>& point) const {
    check(static_cast<int>(point.size()) == nvars_, "eval: point size mismatch");
    for (const auto& x : point) check(x > 0, "eval_positive: nonpositive coordinate");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat m(c);
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            Rat p = point[k];
            int ex = e[k];
            if (ex < 0) {
                p = Rat(boost::multiprecision::denominator(p), boost::multiprecision::numerator(p));
                ex = -ex;
            }
            for (int t = 0; t < ex; ++t) m *= p;
        }
        total += m;
    }
    return total;
}

Expo LaurentPoly::monomial_content() const {
    check(!terms_.empty(), "monomial_content of zero");
    Expo m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int k = 0; k < nvars_; ++k) m[k] = std::min(m[k], e[k]);
    return m;
}

Int LaurentPoly::integer_content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c);
    return g;
}

// ---------------------------------------------------------------------------

RationalPair::RationalPair(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    check(!den_.is_zero(), "RationalPair: zero denominator");
    reduce();
}

RationalPair RationalPair::of(const LaurentPoly& p) {
    return RationalPair(p, LaurentPoly::constant(p.nvars(), 1));
}

void RationalPair::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(den_.nvars(), 1);
        return;
    }
    int n = num_.nvars();
    Expo mn = num_.monomial_content(), md = den_.monomial_content();
    Expo shift(n);
    for (int k = 0; k < n; ++k) shift[k] = -std::min(mn[k], md[k]);
    Int g = boost::multiprecision::gcd(num_.integer_content(), den_.integer_content());
    bool negden = den_.terms().rbegin()->second < 0;
    Int div = negden ? -g : g;
    LaurentPoly m = LaurentPoly::monomial(n, shift, 1);
    LaurentPoly num_shifted = num_ * m, den_shifted = den_ * m;
    LaurentPoly nn(n), dd(n);
    for (const auto& [e, c] : num_shifted.terms()) nn.add_term(e, c / div);
    for (const auto& [e, c] : den_shifted.terms()) dd.add_term(e, c / div);
    num_ = nn;
    den_ = dd;
    // opportunistic exact cancellation keeps chamber solving small
    if (!den_.is_one()) {
        if (auto q = num_.try_div(den_, 512)) {
            num_ = *q;
            den_ = LaurentPoly::constant(n, 1);
        }
    }
}

RationalPair operator+(const RationalPair& a, const RationalPair& b) {
    return RationalPair(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalPair operator-(const RationalPair& a, const RationalPair& b) {
    return RationalPair(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalPair operator*(const RationalPair& a, const RationalPair& b) {
    return RationalPair(a.num_ * b.num_, a.den_ * b.den_);
}

RationalPair operator/(const RationalPair& a, const RationalPair& b) {
    check(!b.is_zero(), "RationalPair: division by zero");
    return RationalPair(a.num_ * b.den_, a.den_ * b.num_);
}

RationalPair RationalPair::operator-() const { return RationalPair(-num_, den_); }

bool RationalPair::operator==(const RationalPair& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

Rat RationalPair::eval_positive(const std::vector<Rat>& point) const {
    Rat d = den_.eval_positive(point);
    check(d != 0, "RationalPair eval: denominator vanished");
    return num_.eval_positive(point) / d;
}

std::string RationalPair::str(const std::vector<std::string>& names) const {
    if (is_polynomial()) return num_.str(names);
    return "(" + num_.str(names) + ") / (" + den_.str(names) + ")";
}

// ---------------------------------------------------------------------------

static std::string default_name(int idx) { return "c[" + std::to_string(idx + 1) + "]"; }

std::string poly_to_string(const LaurentPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest term first for readability
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        bool allzero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (mag != 1 || allzero) parts.push_back(mag.str());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            std::string nm = k < names.size() ? names[k] : default_name(static_cast<int>(k));
            if (e[k] == 1)
                parts.push_back(nm);
            else
                parts.push_back(nm + "^" + std::to_string(e[k]));
        }
        for (std::size_t t = 0; t < parts.size(); ++t) {
            if (t) os << "*";
            os << parts[t];
        }
    }
    return os.str();
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    return poly_to_string(*this, names);
}

LaurentPoly poly_parse(const std::string& text, const std::vector<std::string>& names) {
    int nvars = static_cast<int>(names.size());
    LaurentPoly out(nvars);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&]() -> Int {
        skip_ws();
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        check(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
              "poly_parse: expected integer at '" + text.substr(i) + "'");
        Int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        return neg ? Int(-v) : v;
    };
    auto match_var = [&]() -> int {
        // longest-match lookup against the name table
        int best = -1;
        std::size_t bestlen = 0;
        for (int k = 0; k < nvars; ++k) {
            const std::string& nm = names[k];
            if (nm.size() > bestlen && text.compare(i, nm.size(), nm) == 0) {
                best = k;
                bestlen = nm.size();
            }
        }
        if (best >= 0) i += bestlen;
        return best;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            check(text[i] == '+' || text[i] == '-', "poly_parse: expected +/- between terms");
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        first = false;
        Int coeff = 1;
        Expo e(nvars, 0);
        bool want_factor = true;
        while (want_factor) {
            skip_ws();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff *= parse_int();
            } else {
                int v = match_var();
                check(v >= 0, "poly_parse: unknown variable at '" + text.substr(i) + "'");
                int power = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    power = static_cast<int>(parse_int());
                }
                e[v] += power;
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
            } else {
                want_factor = false;
            }
        }
        out.add_term(e, sign * coeff);
    }
    return out;
}

}  // namespace cellcrys
