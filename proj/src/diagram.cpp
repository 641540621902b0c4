#include "qfrob/diagram.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qfrob {

namespace {

struct Token {
    enum class Kind { Ident, Number, Imaginary, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    double number = 0.0;
    char punct = 0;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.offset = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                             text[j] == '_'))
                ++j;
            t.kind = Token::Kind::Ident;
            t.text = text.substr(i, j - i);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t j = i;
            while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                             text[j] == '.'))
                ++j;
            if (j < n && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
                if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
                    while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    j = k;
                }
            }
            t.text = text.substr(i, j - i);
            try {
                std::size_t used = 0;
                t.number = std::stod(t.text, &used);
                if (used != t.text.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw SyntaxError("malformed number '" + t.text + "'", i);
            }
            t.kind = Token::Kind::Number;
            if (j < n && text[j] == 'i' &&
                (j + 1 >= n || !(std::isalnum(static_cast<unsigned char>(text[j + 1])) ||
                                 text[j + 1] == '_'))) {
                t.kind = Token::Kind::Imaginary;
                ++j;
            }
            i = j;
        } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' ||
                   c == ';' || c == '*') {
            t.kind = Token::Kind::Punct;
            t.punct = c;
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.offset = n;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (!at_end())
            throw SyntaxError("unexpected trailing input", peek().offset);
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    bool is_punct(char c) const {
        return peek().kind == Token::Kind::Punct && peek().punct == c;
    }

    void expect_punct(char c, const char* what) {
        if (!is_punct(c))
            throw SyntaxError(std::string("expected '") + c + "' " + what,
                              peek().offset);
        ++pos_;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (is_punct(';')) {
            ++pos_;
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Compose;
            node->lhs = e;
            node->rhs = term();
            e = node;
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (is_punct('*')) {
            ++pos_;
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Tensor;
            node->lhs = e;
            node->rhs = factor();
            e = node;
        }
        return e;
    }

    int integer() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Number || t.text.find_first_of(".eE") != std::string::npos)
            throw SyntaxError("expected an integer", t.offset);
        ++pos_;
        return static_cast<int>(t.number);
    }

    Wire wire() {
        Wire w;
        w.dim = integer();
        if (is_punct('*')) {
            ++pos_;
            w.dual = true;
        }
        return w;
    }

    WireWord word() {
        WireWord w;
        if (is_punct(']')) return w;
        w.factors.push_back(wire());
        while (is_punct(',')) {
            ++pos_;
            w.factors.push_back(wire());
        }
        return w;
    }

    ExprPtr factor() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Punct && t.punct == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect_punct(')', "to close the parenthesis");
            return e;
        }
        if (t.kind == Token::Kind::Number || t.kind == Token::Kind::Imaginary) {
            ++pos_;
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Scalar;
            node->value = t.kind == Token::Kind::Imaginary ? Complex(0.0, t.number)
                                                           : Complex(t.number, 0.0);
            return node;
        }
        if (t.kind != Token::Kind::Ident)
            throw SyntaxError("expected an expression", t.offset);
        ++pos_;
        const std::string& name = t.text;
        if (name == "dag" || name == "conj" || name == "dual") {
            expect_punct('(', "after the functor name");
            auto node = std::make_shared<Expr>();
            node->kind = name == "dag"    ? Expr::Kind::Dag
                         : name == "conj" ? Expr::Kind::Conj
                                          : Expr::Kind::Dual;
            node->lhs = expr();
            expect_punct(')', "to close the functor application");
            return node;
        }
        if (name == "id") {
            expect_punct('[', "after 'id'");
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Id;
            node->word = word();
            expect_punct(']', "to close the word");
            return node;
        }
        if (name == "cup" || name == "cap") {
            expect_punct('[', "after the duality name");
            auto node = std::make_shared<Expr>();
            node->kind = name == "cup" ? Expr::Kind::Cup : Expr::Kind::Cap;
            node->n = integer();
            expect_punct(']', "to close the dimension");
            return node;
        }
        if (name == "swap") {
            expect_punct('[', "after 'swap'");
            auto node = std::make_shared<Expr>();
            node->kind = Expr::Kind::Swap;
            node->a = wire();
            expect_punct(',', "between the swapped wires");
            node->b = wire();
            expect_punct(']', "to close the swap");
            return node;
        }
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Gen;
        node->name = name;
        return node;
    }
};

std::string format_number(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

std::string wire_str(const Wire& w) {
    return std::to_string(w.dim) + (w.dual ? "*" : "");
}

std::string word_str(const WireWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i) s += ",";
        s += wire_str(w.factors[i]);
    }
    return s;
}

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Compose: return 1;
        case Expr::Kind::Tensor: return 2;
        default: return 3;
    }
}

void print_rec(const Expr& e, std::string& out) {
    auto child = [&](const Expr& c, bool right) {
        const int pe = precedence(e.kind);
        const int pc = precedence(c.kind);
        // Binary operators associate to the left; parenthesize anything that
        // would reassociate on reparse.
        const bool parens = pc < pe || (right && pc == pe);
        if (parens) out += "(";
        print_rec(c, out);
        if (parens) out += ")";
    };
    switch (e.kind) {
        case Expr::Kind::Gen: out += e.name; break;
        case Expr::Kind::Id: out += "id[" + word_str(e.word) + "]"; break;
        case Expr::Kind::Cup: out += "cup[" + std::to_string(e.n) + "]"; break;
        case Expr::Kind::Cap: out += "cap[" + std::to_string(e.n) + "]"; break;
        case Expr::Kind::Swap:
            out += "swap[" + wire_str(e.a) + "," + wire_str(e.b) + "]";
            break;
        case Expr::Kind::Scalar:
            if (e.value.imag() != 0.0)
                out += format_number(e.value.imag()) + "i";
            else
                out += format_number(e.value.real());
            break;
        case Expr::Kind::Compose:
            child(*e.lhs, false);
            out += " ; ";
            child(*e.rhs, true);
            break;
        case Expr::Kind::Tensor:
            child(*e.lhs, false);
            out += " * ";
            child(*e.rhs, true);
            break;
        case Expr::Kind::Dag:
            out += "dag(";
            print_rec(*e.lhs, out);
            out += ")";
            break;
        case Expr::Kind::Conj:
            out += "conj(";
            print_rec(*e.lhs, out);
            out += ")";
            break;
        case Expr::Kind::Dual:
            out += "dual(";
            print_rec(*e.lhs, out);
            out += ")";
            break;
    }
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e) {
    std::string out;
    print_rec(e, out);
    return out;
}

std::string print(const ExprPtr& e) { return print(*e); }

Signature typecheck(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Gen: {
            const auto it = env.generators.find(e.name);
            if (it == env.generators.end())
                throw UnknownGenerator("unknown generator '" + e.name + "'");
            return {it->second.dom, it->second.cod};
        }
        case Expr::Kind::Id: return {e.word, e.word};
        case Expr::Kind::Cup: {
            const WireWord w = WireWord::single(e.n);
            return {WireWord::unit(), w.dualized().concat(w)};
        }
        case Expr::Kind::Cap: {
            const WireWord w = WireWord::single(e.n);
            return {w.concat(w.dualized()), WireWord::unit()};
        }
        case Expr::Kind::Swap: {
            const WireWord a = WireWord::single(e.a.dim, e.a.dual);
            const WireWord b = WireWord::single(e.b.dim, e.b.dual);
            return {a.concat(b), b.concat(a)};
        }
        case Expr::Kind::Scalar: return {WireWord::unit(), WireWord::unit()};
        case Expr::Kind::Compose: {
            const Signature f = typecheck(*e.lhs, env);
            const Signature g = typecheck(*e.rhs, env);
            if (f.cod != g.dom)
                throw TypeMismatch("cannot compose: [" + to_string(f.cod) +
                                   "] vs [" + to_string(g.dom) + "]");
            return {f.dom, g.cod};
        }
        case Expr::Kind::Tensor: {
            const Signature f = typecheck(*e.lhs, env);
            const Signature g = typecheck(*e.rhs, env);
            return {f.dom.concat(g.dom), f.cod.concat(g.cod)};
        }
        case Expr::Kind::Dag: {
            const Signature f = typecheck(*e.lhs, env);
            return {f.cod, f.dom};
        }
        case Expr::Kind::Conj: {
            const Signature f = typecheck(*e.lhs, env);
            return {f.dom.dualized(), f.cod.dualized()};
        }
        case Expr::Kind::Dual: {
            const Signature f = typecheck(*e.lhs, env);
            return {f.cod.dualized(), f.dom.dualized()};
        }
    }
    throw TypeMismatch("malformed expression node");
}

Morphism evaluate(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Gen: {
            const auto it = env.generators.find(e.name);
            if (it == env.generators.end())
                throw UnknownGenerator("unknown generator '" + e.name + "'");
            return it->second;
        }
        case Expr::Kind::Id: return identity(e.word);
        case Expr::Kind::Cup: return cup(e.n);
        case Expr::Kind::Cap: return cap(e.n);
        case Expr::Kind::Swap:
            return swap(WireWord::single(e.a.dim, e.a.dual),
                        WireWord::single(e.b.dim, e.b.dual));
        case Expr::Kind::Scalar: return Morphism::scalar_value(e.value);
        case Expr::Kind::Compose:
            return compose(evaluate(*e.rhs, env), evaluate(*e.lhs, env));
        case Expr::Kind::Tensor:
            return tensor(evaluate(*e.lhs, env), evaluate(*e.rhs, env));
        case Expr::Kind::Dag: return dagger(evaluate(*e.lhs, env));
        case Expr::Kind::Conj: return conjugate(evaluate(*e.lhs, env));
        case Expr::Kind::Dual: return dual(evaluate(*e.lhs, env));
    }
    throw TypeMismatch("malformed expression node");
}

Morphism evaluate(const ExprPtr& e, const Env& env) { return evaluate(*e, env); }

EqualityReport check_equal(const Expr& e1, const Expr& e2, const Env& env,
                           const Tolerance& tol) {
    const Signature s1 = typecheck(e1, env);
    const Signature s2 = typecheck(e2, env);
    if (s1.dom != s2.dom || s1.cod != s2.cod)
        throw SignatureMismatch("signatures differ: [" + to_string(s1.dom) + "] -> [" +
                                to_string(s1.cod) + "] vs [" + to_string(s2.dom) +
                                "] -> [" + to_string(s2.cod) + "]");
    const Morphism m1 = evaluate(e1, env);
    const Morphism m2 = evaluate(e2, env);
    EqualityReport r;
    r.deviation = max_deviation(m1, m2);
    r.pass = approx_equal(m1, m2, tol);
    return r;
}

EqualityReport check_equal(const std::string& e1, const std::string& e2,
                           const Env& env, const Tolerance& tol) {
    return check_equal(*parse(e1), *parse(e2), env, tol);
}

}  // namespace qfrob
