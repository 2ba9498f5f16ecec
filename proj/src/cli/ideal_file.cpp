#include "segreta/cli/ideal_file.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace segreta::cli {

namespace {

enum class Tok { Ident, Integer, Plus, Minus, Star, Caret, LParen, RParen, Comma, Colon, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, k = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, k});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Integer, std::string(src.substr(i, j - i)), l, k});
            advance(j - i);
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case ':': kind = Tok::Colon; break;
            default: throw InputError(std::string("unexpected character '") + c + "'", l, k);
        }
        out.push_back({kind, std::string(1, c), l, k});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const std::set<std::string>& keywords() {
    static const std::set<std::string> k{"ring", "degree", "ideal", "over"};
    return k;
}

IntegerPolynomial add(IntegerPolynomial a, const IntegerPolynomial& b, int sign) {
    for (const auto& [e, c] : b) {
        auto& slot = a[e];
        slot += sign * c;
        if (slot == 0) a.erase(e);
    }
    return a;
}

IntegerPolynomial multiply(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    IntegerPolynomial out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto& slot = out[e];
            slot += ca * cb;
            if (slot == 0) out.erase(e);
        }
    return out;
}

class Parser {
   public:
    Parser(std::vector<Token> toks, const std::vector<std::string>* names) : toks_(std::move(toks)), names_(names) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    [[noreturn]] void fail(const std::string& what, const Token& t) const {
        throw InputError(what + (t.kind == Tok::End ? " (found end of input)" : " (found '" + t.text + "')"), t.line, t.column);
    }
    const Token& expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what, peek());
        return take();
    }
    bool at_section() const {
        return peek().kind == Tok::Ident && keywords().count(peek().text) && peek(1).kind == Tok::Colon;
    }
    void set_names(const std::vector<std::string>* names) { names_ = names; }

    IntegerPolynomial expression() {
        IntegerPolynomial acc = term();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            int sign = take().kind == Tok::Plus ? 1 : -1;
            acc = add(std::move(acc), term(), sign);
        }
        return acc;
    }

   private:
    IntegerPolynomial term() {
        IntegerPolynomial acc = unary();
        while (at(Tok::Star)) {
            take();
            acc = multiply(acc, unary());
        }
        return acc;
    }

    // Unary signs bind looser than '^': -x^2 is -(x^2).
    IntegerPolynomial unary() {
        if (at(Tok::Minus)) {
            take();
            return add({}, unary(), -1);
        }
        if (at(Tok::Plus)) {
            take();
            return unary();
        }
        return power();
    }

    IntegerPolynomial power() {
        IntegerPolynomial base = primary();
        if (!at(Tok::Caret)) return base;
        take();
        const Token& t = expect(Tok::Integer, "a positive integer exponent");
        if (t.text.size() > 6 || std::stoi(t.text) <= 0) fail("exponent must be a positive integer below 10^6", t);
        int e = std::stoi(t.text);
        IntegerPolynomial result = constant(1);
        while (e > 0) {
            if (e & 1) result = multiply(result, base);
            e >>= 1;
            if (e) base = multiply(base, base);
        }
        return result;
    }

    IntegerPolynomial primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Integer: {
                take();
                return constant(mpz_class(t.text));
            }
            case Tok::LParen: {
                take();
                IntegerPolynomial inner = expression();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident: {
                take();
                auto it = std::find(names_->begin(), names_->end(), t.text);
                if (it == names_->end()) throw InputError("unknown variable '" + t.text + "'", t.line, t.column);
                std::vector<int> e(names_->size(), 0);
                e[static_cast<std::size_t>(it - names_->begin())] = 1;
                return {{e, mpz_class(1)}};
            }
            default:
                fail("expected a number, variable or '('", t);
        }
    }

    IntegerPolynomial constant(const mpz_class& c) const {
        if (c == 0) return {};
        return {{std::vector<int>(names_->size(), 0), c}};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const std::vector<std::string>* names_;
};

std::optional<int> homogeneous_degree(const IntegerPolynomial& p) {
    std::optional<int> d;
    for (const auto& [e, c] : p) {
        int s = 0;
        for (int x : e) s += x;
        if (d && *d != s) return std::nullopt;
        d = s;
    }
    return d;
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
    FieldSpec spec;
    if (text == "Q" || text == "QQ") {
        spec.rational = true;
        return spec;
    }
    if (text.substr(0, 3) == "Fp:" && text.size() > 3 &&
        std::all_of(text.begin() + 3, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const std::string digits(text.substr(3));
        if (digits.size() > 10) throw InputError("field modulus too large: " + digits);
        const std::uint64_t p = std::stoull(digits);
        try {
            kernel::PrimeField check(p);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        spec.prime = static_cast<std::uint32_t>(p);
        return spec;
    }
    throw InputError("unknown field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

IntegerPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
    Parser p(lex(text), &names);
    IntegerPolynomial out = p.expression();
    if (!p.at(Tok::End)) p.fail("unexpected trailing input", p.peek());
    return out;
}

IdealFile parse_ideal(std::string_view text) {
    Parser p(lex(text), nullptr);
    IdealFile file;
    bool have_ring = false, have_degree = false, have_ideal = false;
    std::vector<std::pair<IntegerPolynomial, Token>> gens;

    while (!p.at(Tok::End)) {
        if (!p.at_section()) p.fail("expected 'ring:', 'degree:' or 'ideal:'", p.peek());
        const Token key = p.take();
        p.take();  // ':'
        if (key.text == "ring") {
            if (have_ring) p.fail("duplicate ring section", key);
            have_ring = true;
            while (!(p.at(Tok::Ident) && p.peek().text == "over")) {
                const Token& t = p.expect(Tok::Ident, "a variable name or 'over'");
                if (keywords().count(t.text)) p.fail("reserved word used as a variable name", t);
                if (std::find(file.names.begin(), file.names.end(), t.text) != file.names.end())
                    throw InputError("duplicate variable name '" + t.text + "'", t.line, t.column);
                file.names.push_back(t.text);
                if (p.at(Tok::Comma)) p.take();
            }
            p.take();  // over
            const Token& f = p.expect(Tok::Ident, "a field (Q or Fp:<prime>)");
            std::string spec = f.text;
            if (p.at(Tok::Colon)) {
                p.take();
                spec += ":" + p.expect(Tok::Integer, "a prime modulus").text;
            }
            try {
                file.field = FieldSpec::parse(spec);
            } catch (const InputError& e) {
                throw InputError(e.what(), f.line, f.column);
            }
            if (file.names.size() < 2) throw InputError("ring needs at least two variables", key.line, key.column);
            if (static_cast<int>(file.names.size()) > kernel::kMaxVars)
                throw InputError("too many variables (at most " + std::to_string(kernel::kMaxVars) + ")", key.line, key.column);
        } else if (key.text == "degree") {
            if (have_degree) p.fail("duplicate degree section", key);
            have_degree = true;
            const Token& t = p.expect(Tok::Integer, "a positive integer degree");
            if (t.text.size() > 6 || std::stoi(t.text) <= 0) p.fail("degree must be a positive integer", t);
            file.degree = std::stoi(t.text);
        } else if (key.text == "ideal") {
            if (have_ideal) p.fail("duplicate ideal section", key);
            if (!have_ring) throw InputError("ideal section before ring section", key.line, key.column);
            have_ideal = true;
            p.set_names(&file.names);
            for (;;) {
                const Token start = p.peek();
                gens.emplace_back(p.expression(), start);
                if (!p.at(Tok::Comma)) break;
                p.take();
            }
            if (!p.at(Tok::End) && !p.at_section()) p.fail("expected ',' or end of ideal", p.peek());
        } else {
            p.fail("unknown section", key);
        }
    }
    if (!have_ring) throw InputError("missing 'ring:' section");
    if (!have_degree) throw InputError("missing 'degree:' section");
    if (!have_ideal) throw InputError("missing 'ideal:' section");

    int top = 0;
    for (auto& [g, where] : gens) {
        if (g.empty()) throw InputError("generator is zero", where.line, where.column);
        auto d = homogeneous_degree(g);
        if (!d) throw InputError("generator is not homogeneous", where.line, where.column);
        if (*d > file.degree)
            throw InputError("generator has degree " + std::to_string(*d) + " but the declared degree is " +
                                 std::to_string(file.degree),
                             where.line, where.column);
        top = std::max(top, *d);
        file.generators.push_back(std::move(g));
    }
    if (top != file.degree)
        throw InputError("declared degree " + std::to_string(file.degree) + " but the largest generator degree is " +
                         std::to_string(top));
    return file;
}

std::string format_polynomial(const IntegerPolynomial& p, const std::vector<std::string>& names) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending exponent vectors: highest powers of the first variable lead.
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (constant) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << '*';
            first_var = false;
            os << names[i];
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

std::string IdealFile::to_string() const {
    std::ostringstream os;
    os << "ring: ";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
    os << " over " << field.to_string() << "\n";
    os << "degree: " << degree << "\n";
    os << "ideal:";
    for (std::size_t i = 0; i < generators.size(); ++i)
        os << (i ? ",\n  " : " ") << format_polynomial(generators[i], names);
    os << "\n";
    return os.str();
}

}  // namespace segreta::cli
