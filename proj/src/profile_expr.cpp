#include "surfkin/profile_expr.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace surfkin {

namespace {

using Node = ProfileExpr::Node;
using NodePtr = ProfileExpr::NodePtr;
using Kind = ProfileExpr::Kind;

NodePtr make(Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

bool known_fn(const std::string& id) {
    return id == "sin" || id == "cos" || id == "sinh" || id == "cosh" ||
           id == "exp" || id == "log" || id == "sqrt";
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    NodePtr run() {
        skip_ws();
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            NodePtr n = make(c == '+' ? Kind::Add : Kind::Sub);
            n->lhs = std::move(lhs);
            n->rhs = term();
            lhs = std::move(n);
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            NodePtr n = make(c == '*' ? Kind::Mul : Kind::Div);
            n->lhs = std::move(lhs);
            n->rhs = unary();
            lhs = std::move(n);
        }
    }

    NodePtr unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            NodePtr n = make(Kind::Neg);
            n->lhs = unary();
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        NodePtr n = make(Kind::Pow);
        n->lhs = std::move(base);
        n->rhs = unary(); // right-associative; exponent may be signed
        return n;
    }

    NodePtr primary() {
        skip_ws();
        const std::size_t start = pos_;
        const char c = peek();
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < s_.size() &&
                   std::isalpha(static_cast<unsigned char>(s_[pos_])))
                id += s_[pos_++];
            if (id == "z") return make(Kind::Var);
            if (!known_fn(id)) throw ParseError("unknown identifier '" + id + "'", start);
            if (!accept('(')) throw ParseError("expected '(' after '" + id + "'", pos_);
            NodePtr n = make(Kind::Call);
            n->fn = id;
            n->lhs = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return n;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr number() {
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("malformed number", pos_);
        pos_ += static_cast<std::size_t>(end - begin);
        NodePtr n = make(Kind::Number);
        n->value = v;
        return n;
    }
};

Dual2 eval_node(const Node& n, double z) {
    switch (n.kind) {
    case Kind::Number: return Dual2::constant(n.value);
    case Kind::Var: return Dual2::variable(z);
    case Kind::Neg: return -eval_node(*n.lhs, z);
    case Kind::Add: return eval_node(*n.lhs, z) + eval_node(*n.rhs, z);
    case Kind::Sub: return eval_node(*n.lhs, z) - eval_node(*n.rhs, z);
    case Kind::Mul: return eval_node(*n.lhs, z) * eval_node(*n.rhs, z);
    case Kind::Div: {
        const Dual2 b = eval_node(*n.rhs, z);
        if (b.v == 0.0) throw NumericalError("division by zero in profile");
        return eval_node(*n.lhs, z) / b;
    }
    case Kind::Pow: return pow(eval_node(*n.lhs, z), eval_node(*n.rhs, z));
    case Kind::Call: {
        const Dual2 a = eval_node(*n.lhs, z);
        if (n.fn == "sin") return sin(a);
        if (n.fn == "cos") return cos(a);
        if (n.fn == "sinh") return sinh(a);
        if (n.fn == "cosh") return cosh(a);
        if (n.fn == "exp") return exp(a);
        if (n.fn == "log") {
            if (a.v <= 0.0) throw NumericalError("log of a non-positive value in profile");
            return log(a);
        }
        // sqrt
        if (a.v < 0.0) throw NumericalError("sqrt of a negative value in profile");
        return sqrt(a);
    }
    }
    throw InternalConsistencyError("unreachable profile node kind");
}

void pretty_node(const Node& n, std::ostream& os) {
    switch (n.kind) {
    case Kind::Number: {
        std::ostringstream tmp;
        tmp.precision(17);
        tmp << n.value;
        os << tmp.str();
        return;
    }
    case Kind::Var: os << "z"; return;
    case Kind::Neg:
        os << "(-";
        pretty_node(*n.lhs, os);
        os << ")";
        return;
    case Kind::Call:
        os << n.fn << "(";
        pretty_node(*n.lhs, os);
        os << ")";
        return;
    default: break;
    }
    const char* op = n.kind == Kind::Add   ? " + "
                     : n.kind == Kind::Sub ? " - "
                     : n.kind == Kind::Mul ? " * "
                     : n.kind == Kind::Div ? " / "
                                           : " ^ ";
    os << "(";
    pretty_node(*n.lhs, os);
    os << op;
    pretty_node(*n.rhs, os);
    os << ")";
}

bool same_node(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Kind::Number: return a.value == b.value;
    case Kind::Var: return true;
    case Kind::Neg: return same_node(*a.lhs, *b.lhs);
    case Kind::Call: return a.fn == b.fn && same_node(*a.lhs, *b.lhs);
    default: return same_node(*a.lhs, *b.lhs) && same_node(*a.rhs, *b.rhs);
    }
}

} // namespace

Dual2 ProfileExpr::eval(double z) const { return eval_node(*root_, z); }

std::string ProfileExpr::pretty() const {
    std::ostringstream os;
    pretty_node(*root_, os);
    return os.str();
}

ProfileExpr parse_profile(const std::string& text) {
    ProfileExpr e;
    e.root_ = Parser(text).run();
    return e;
}

bool same_ast(const ProfileExpr& a, const ProfileExpr& b) {
    return same_node(a.root(), b.root());
}

} // namespace surfkin
