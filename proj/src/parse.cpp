#include "towerlab/parse.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>

namespace towerlab {

namespace {

struct Token {
    enum Kind { kInt, kSymbol, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEnd } kind;
    std::int64_t value{};     // kInt
    std::string symbol;       // kSymbol: variable name or "w"
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::kEnd, 0, {}};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                if (v > (std::int64_t(1) << 40)) throw std::invalid_argument("integer literal too large");
                ++pos_;
            }
            tok_ = {Token::kInt, v, {}};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                name.push_back(s_[pos_++]);
            tok_ = {Token::kSymbol, 0, std::move(name)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Token::kPlus, 0, {}}; return;
            case '-': tok_ = {Token::kMinus, 0, {}}; return;
            case '*': tok_ = {Token::kStar, 0, {}}; return;
            case '^': tok_ = {Token::kCaret, 0, {}}; return;
            case '(': tok_ = {Token::kLParen, 0, {}}; return;
            case ')': tok_ = {Token::kRParen, 0, {}}; return;
            default: throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Token tok_;
};

using TermMap = std::map<std::pair<int, int>, FieldElement>;

class Parser {
public:
    Parser(const FieldPtr& K, const std::string& text, std::string v1, std::string v2)
        : k_(K), lex_(text), v1_(std::move(v1)), v2_(std::move(v2)) {}

    TermMap run() {
        TermMap m = expression();
        if (lex_.peek().kind != Token::kEnd) throw std::invalid_argument("trailing input in polynomial");
        prune(m);
        return m;
    }

private:
    static void prune(TermMap& m) {
        for (auto it = m.begin(); it != m.end();)
            it = it->second.is_zero() ? m.erase(it) : std::next(it);
    }

    void add_to(TermMap& acc, const TermMap& t, bool negate) {
        for (const auto& [e, c] : t) {
            FieldElement v = negate ? -c : c;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, v);
            else
                it->second = it->second + v;
        }
    }

    TermMap expression() {
        TermMap acc;
        bool neg = false;
        if (lex_.peek().kind == Token::kMinus) {
            lex_.take();
            neg = true;
        } else if (lex_.peek().kind == Token::kPlus) {
            lex_.take();
        }
        add_to(acc, term(), neg);
        while (lex_.peek().kind == Token::kPlus || lex_.peek().kind == Token::kMinus) {
            bool m = lex_.take().kind == Token::kMinus;
            add_to(acc, term(), m);
        }
        return acc;
    }

    TermMap term() {
        TermMap acc = factor();
        while (lex_.peek().kind == Token::kStar) {
            lex_.take();
            acc = multiply(acc, factor());
        }
        return acc;
    }

    TermMap multiply(const TermMap& a, const TermMap& b) {
        TermMap r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                auto e = std::make_pair(ea.first + eb.first, ea.second + eb.second);
                FieldElement v = ca * cb;
                auto it = r.find(e);
                if (it == r.end())
                    r.emplace(e, v);
                else
                    it->second = it->second + v;
            }
        return r;
    }

    int exponent_suffix() {
        if (lex_.peek().kind != Token::kCaret) return 1;
        lex_.take();
        Token t = lex_.take();
        if (t.kind != Token::kInt || t.value < 0 || t.value > 1024)
            throw std::invalid_argument("bad exponent");
        return static_cast<int>(t.value);
    }

    TermMap factor() {
        Token t = lex_.take();
        TermMap r;
        switch (t.kind) {
            case Token::kInt: {
                r.emplace(std::make_pair(0, 0), k_->from_int(t.value));
                return r;
            }
            case Token::kSymbol: {
                int e = exponent_suffix();
                if (t.symbol == "w") {
                    if (k_->degree() < 2)
                        throw std::invalid_argument("generator symbol 'w' needs an extension field");
                    r.emplace(std::make_pair(0, 0),
                              k_->pow(k_->generator(), static_cast<std::uint64_t>(e)));
                    return r;
                }
                if (t.symbol == v1_) {
                    r.emplace(std::make_pair(e, 0), k_->one());
                    return r;
                }
                if (t.symbol == v2_) {
                    r.emplace(std::make_pair(0, e), k_->one());
                    return r;
                }
                throw std::invalid_argument("unknown symbol '" + t.symbol + "' in polynomial");
            }
            case Token::kLParen: {
                TermMap inner = expression();
                if (lex_.take().kind != Token::kRParen)
                    throw std::invalid_argument("missing ')' in polynomial");
                int e = exponent_suffix();
                TermMap acc{{std::make_pair(0, 0), k_->one()}};
                for (int i = 0; i < e; ++i) acc = multiply(acc, inner);
                return acc;
            }
            default:
                throw std::invalid_argument("unexpected token in polynomial");
        }
    }

    const FieldPtr& k_;
    Lexer lex_;
    std::string v1_, v2_;
};

}  // namespace

std::map<std::pair<int, int>, FieldElement> parse_poly_expr(const FieldPtr& K,
                                                            const std::string& text,
                                                            const std::string& var1,
                                                            const std::string& var2) {
    return Parser(K, text, var1, var2).run();
}

Polynomial parse_polynomial(const FieldPtr& K, const std::string& text, const std::string& var) {
    auto terms = parse_poly_expr(K, text, var, std::string());
    std::vector<FieldElement> coeffs;
    for (const auto& [e, c] : terms) {
        if (e.second != 0) throw std::invalid_argument("unexpected second variable");
        if (static_cast<std::size_t>(e.first) >= coeffs.size())
            coeffs.resize(e.first + 1, K->zero());
        coeffs[e.first] = c;
    }
    return Polynomial::from_coeffs(K, std::move(coeffs));
}

}  // namespace towerlab
