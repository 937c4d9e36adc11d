#include "binform/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace binform {

VariableUniverse::VariableUniverse(std::vector<std::string> names, int num_x)
    : names_(std::move(names)), num_x_(num_x) {
    if (num_x_ != 0 && num_x_ != 2) throw std::invalid_argument("universe: num_x must be 0 or 2");
    if (static_cast<int>(names_.size()) < num_x_) throw std::invalid_argument("universe: too few names");
}

int VariableUniverse::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

UniversePtr covariant_universe(int d) {
    if (d < 1) throw std::invalid_argument("covariant_universe: d >= 1 required");
    std::vector<std::string> names;
    for (int i = 0; i <= d; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("x1");
    names.push_back("x2");
    return std::make_shared<VariableUniverse>(std::move(names), 2);
}

UniversePtr lambda_universe(int d) {
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("l" + std::to_string(i));
    names.push_back("x1");
    names.push_back("x2");
    return std::make_shared<VariableUniverse>(std::move(names), 2);
}

UniversePtr lambda_u_universe(int d) {
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("l" + std::to_string(i));
    for (int r = 2; r <= d; ++r) names.push_back("u" + std::to_string(r));
    return std::make_shared<VariableUniverse>(std::move(names), 0);
}

int mono_degree(const Mono& m) {
    int s = 0;
    for (auto e : m) s += e;
    return s;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_same_universe(const SparsePoly& p, const SparsePoly& q) {
    if (p.universe() == q.universe()) return;
    if (p.universe() && q.universe() && p.universe()->same_as(*q.universe())) return;
    throw std::invalid_argument("polynomials from different universes");
}

SparsePoly SparsePoly::constant(UniversePtr u, const Rat& c) {
    SparsePoly p(std::move(u));
    if (!binform::is_zero(c)) p.terms_.emplace(Mono(p.u_->size(), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(UniversePtr u, int var, int exp) {
    SparsePoly p(std::move(u));
    Mono m(p.u_->size(), 0);
    m.at(var) = static_cast<uint16_t>(exp);
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

SparsePoly SparsePoly::monomial(UniversePtr u, Mono m, const Rat& c) {
    SparsePoly p(std::move(u));
    if (!binform::is_zero(c)) p.terms_.emplace(std::move(m), c);
    return p;
}

void SparsePoly::add_term(const Mono& m, const Rat& c) {
    if (binform::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (binform::is_zero(it->second)) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(u_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& q) const {
    require_same_universe(*this, q);
    SparsePoly r = *this;
    r += q;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
    require_same_universe(*this, q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

SparsePoly SparsePoly::operator-(const SparsePoly& q) const {
    require_same_universe(*this, q);
    SparsePoly r = *this;
    r -= q;
    return r;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) {
    require_same_universe(*this, q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& q) const {
    require_same_universe(*this, q);
    SparsePoly r(u_);
    Mono prod(u_ ? u_->size() : 0, 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : q.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i)
                prod[i] = static_cast<uint16_t>(ma[i] + mb[i]);
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly r(u_);
    if (binform::is_zero(c)) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
    *this = *this * c;
    return *this;
}

bool SparsePoly::operator==(const SparsePoly& q) const {
    if (u_ && q.u_ && !u_->same_as(*q.u_)) return false;
    return terms_ == q.terms_;
}

SparsePoly SparsePoly::derivative(int var, int k) const {
    if (k < 0) throw std::domain_error("derivative: negative order");
    SparsePoly r(u_);
    for (const auto& [m, c] : terms_) {
        int e = m.at(var);
        if (e < k) continue;
        Rat factor = c;
        for (int j = 0; j < k; ++j) factor *= Rat(static_cast<long>(e - j));
        Mono mm = m;
        mm[var] = static_cast<uint16_t>(e - k);
        r.add_term(mm, factor);
    }
    return r;
}

SparsePoly SparsePoly::substitute(const std::map<int, SparsePoly>& bindings) const {
    for (const auto& [var, value] : bindings) {
        if (var < 0 || var >= u_->size()) throw std::invalid_argument("substitute: variable not in universe");
        require_same_universe(*this, value);
    }
    SparsePoly result(u_);
    // Per-variable power caches; exponents are small.
    std::map<int, std::vector<SparsePoly>> powers;
    for (const auto& [m, c] : terms_) {
        SparsePoly term = SparsePoly::constant(u_, c);
        Mono residual(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = bindings.find(static_cast<int>(i));
            if (it == bindings.end()) {
                residual[i] = m[i];
                continue;
            }
            auto& cache = powers[static_cast<int>(i)];
            if (cache.empty()) cache.push_back(SparsePoly::constant(u_, Rat(1)));
            while (cache.size() <= m[i]) cache.push_back(cache.back() * it->second);
            term = term * cache[m[i]];
        }
        if (mono_degree(residual) > 0) term = term * SparsePoly::monomial(u_, residual, Rat(1));
        result += term;
    }
    return result;
}

Rat SparsePoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != u_->size())
        throw std::invalid_argument("evaluate: wrong point dimension");
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

Rat SparsePoly::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int SparsePoly::total_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, mono_degree(m));
    return deg;
}

int SparsePoly::degree_in(int var) const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.at(var)));
    return deg;
}

SparsePoly::Bidegree SparsePoly::bidegree() const {
    Bidegree b;
    if (terms_.empty()) {
        b.any = true;
        return b;
    }
    int na = u_->num_a();
    int m = -1, n = -1;
    for (const auto& [mono, c] : terms_) {
        int da = 0, dx = 0;
        for (int i = 0; i < static_cast<int>(mono.size()); ++i)
            (i < na ? da : dx) += mono[i];
        if (m < 0) {
            m = da;
            n = dx;
        } else if (m != da || n != dx) {
            return b;  // inhomogeneous: mn stays empty
        }
    }
    b.mn = std::make_pair(m, n);
    return b;
}

std::optional<long> SparsePoly::isobaric_weight(const std::vector<long>& weights) const {
    if (static_cast<int>(weights.size()) != u_->size())
        throw std::invalid_argument("isobaric_weight: wrong weight vector size");
    if (terms_.empty()) return 0;
    bool first = true;
    long w = 0;
    for (const auto& [m, c] : terms_) {
        long tw = 0;
        for (std::size_t i = 0; i < m.size(); ++i) tw += weights[i] * m[i];
        if (first) {
            w = tw;
            first = false;
        } else if (tw != w) {
            return std::nullopt;
        }
    }
    return w;
}

Int SparsePoly::denominator_lcm() const {
    Int l = 1;
    for (const auto& [m, c] : terms_) {
        Int den = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    return l;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    // Canonical order: descending in the term order (leading term first).
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono_str;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono_str.empty()) mono_str += "*";
            mono_str += u_->name(static_cast<int>(i));
            if (m[i] > 1) mono_str += "^" + std::to_string(m[i]);
        }
        if (mono_str.empty()) {
            out << rat_to_string(abs_c);
        } else if (abs_c == 1) {
            out << mono_str;
        } else {
            out << rat_to_string(abs_c) << "*" << mono_str;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const UniversePtr& u;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool consume(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("parse_poly: expected number at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw std::invalid_argument("parse_poly: expected identifier at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }

    // term := [coeff] ['*' var['^'exp]]*  with coeff := int ['/' int]
    void parse_term(SparsePoly& acc, bool negative) {
        Rat coeff(1);
        bool have_coeff = false;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string num = read_number();
            if (consume('/')) {
                std::string den = read_number();
                coeff = parse_rat(num + "/" + den);
            } else {
                coeff = parse_rat(num);
            }
            have_coeff = true;
        }
        Mono m(u->size(), 0);
        bool have_var = false;
        while (true) {
            skip_ws();
            if (have_coeff || have_var) {
                if (!consume('*')) break;
            }
            if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) {
                if (have_coeff || have_var) throw std::invalid_argument("parse_poly: dangling '*'");
                break;
            }
            std::string name = read_ident();
            int idx = u->index_of(name);
            if (idx < 0) throw std::invalid_argument("parse_poly: unknown variable " + name);
            int exp = 1;
            if (consume('^')) exp = std::stoi(read_number());
            m[idx] = static_cast<uint16_t>(m[idx] + exp);
            have_var = true;
        }
        if (!have_coeff && !have_var) throw std::invalid_argument("parse_poly: empty term");
        acc.add_term(m, negative ? Rat(-coeff) : coeff);
    }

    SparsePoly parse() {
        SparsePoly acc(u);
        bool negative = consume('-');
        parse_term(acc, negative);
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (consume('+')) {
                parse_term(acc, false);
            } else if (consume('-')) {
                parse_term(acc, true);
            } else {
                throw std::invalid_argument("parse_poly: unexpected character at position " + std::to_string(pos));
            }
        }
        return acc;
    }
};

}  // namespace

SparsePoly transport(const SparsePoly& p, const UniversePtr& target) {
    std::vector<int> remap(static_cast<std::size_t>(p.universe()->size()), -1);
    for (int i = 0; i < p.universe()->size(); ++i)
        remap[static_cast<std::size_t>(i)] = target->index_of(p.universe()->name(i));
    SparsePoly out(target);
    for (const auto& [m, c] : p.terms()) {
        Mono mm(static_cast<std::size_t>(target->size()), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (remap[i] < 0) throw std::invalid_argument("transport: variable missing in target universe");
            mm[static_cast<std::size_t>(remap[i])] = m[i];
        }
        out.add_term(mm, c);
    }
    return out;
}

SparsePoly parse_poly(const UniversePtr& u, const std::string& text) {
    std::string trimmed = text;
    // "0" parses to the empty polynomial.
    auto begin = trimmed.find_first_not_of(" \t");
    auto end = trimmed.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("parse_poly: empty input");
    trimmed = trimmed.substr(begin, end - begin + 1);
    if (trimmed == "0") return SparsePoly::zero(u);
    Parser p{u, trimmed};
    return p.parse();
}

}  // namespace binform
