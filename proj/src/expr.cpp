#include "sgt/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "sgt/errors.hpp"

namespace sgt {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    std::vector<Expression::Instr> run() {
        std::vector<Expression::Instr> program;
        parse_sum(program);
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return program;
    }

private:
    using Instr = Expression::Instr;
    using Op = Expression::Op;

    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error::input("ParseError", "expression '" + text_ + "' at position " +
                                             std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // sum := product (('+'|'-') product)*
    void parse_sum(std::vector<Instr>& out) {
        parse_product(out);
        while (true) {
            if (consume('+')) {
                parse_product(out);
                out.push_back({Op::Add});
            } else if (consume('-')) {
                parse_product(out);
                out.push_back({Op::Sub});
            } else {
                return;
            }
        }
    }

    // product := unary (('*'|'/') unary)*
    void parse_product(std::vector<Instr>& out) {
        parse_unary(out);
        while (true) {
            if (consume('*')) {
                parse_unary(out);
                out.push_back({Op::Mul});
            } else if (consume('/')) {
                parse_unary(out);
                out.push_back({Op::Div});
            } else {
                return;
            }
        }
    }

    // unary := '-' unary | power   (so -x^2 parses as -(x^2))
    void parse_unary(std::vector<Instr>& out) {
        if (consume('-')) {
            parse_unary(out);
            out.push_back({Op::Neg});
            return;
        }
        parse_power(out);
    }

    // power := primary ('^' unary)?   (right-associative)
    void parse_power(std::vector<Instr>& out) {
        parse_primary(out);
        if (consume('^')) {
            parse_unary(out);
            out.push_back({Op::Pow});
        }
    }

    void parse_primary(std::vector<Instr>& out) {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a value");
        const char c = text_[pos_];

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("malformed number");
            pos_ += static_cast<std::size_t>(end - begin);
            out.push_back({Op::PushConst, v});
            return;
        }
        if (text_.compare(pos_, 4, "abs(") == 0) {
            pos_ += 4;
            parse_sum(out);
            if (!consume(')')) fail("expected ')' closing abs");
            out.push_back({Op::Abs});
            return;
        }
        if (c == 'n') {
            ++pos_;
            out.push_back({Op::PushVar});
            return;
        }
        if (consume('(')) {
            parse_sum(out);
            if (!consume(')')) fail("expected ')'");
            return;
        }
        fail("expected a number, 'n', abs(...) or '('");
    }
};

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.text_ = text;
    e.program_ = ExprParser(text).run();

    // Bound the evaluation stack up front so eval() can use a flat array.
    int depth = 0;
    int max_depth = 0;
    for (const Instr& ins : e.program_) {
        switch (ins.op) {
            case Op::PushConst:
            case Op::PushVar: ++depth; break;
            case Op::Neg:
            case Op::Abs: break;
            default: --depth; break;
        }
        max_depth = std::max(max_depth, depth);
    }
    if (max_depth > 60) {
        throw Error::input("ParseError", "expression '" + text + "' nests too deeply");
    }
    return e;
}

double Expression::eval(double n) const {
    double stack[64];
    int top = -1;
    for (const Instr& ins : program_) {
        switch (ins.op) {
            case Op::PushConst: stack[++top] = ins.value; break;
            case Op::PushVar: stack[++top] = n; break;
            case Op::Add: --top; stack[top] += stack[top + 1]; break;
            case Op::Sub: --top; stack[top] -= stack[top + 1]; break;
            case Op::Mul: --top; stack[top] *= stack[top + 1]; break;
            case Op::Div: --top; stack[top] /= stack[top + 1]; break;
            case Op::Pow: --top; stack[top] = std::pow(stack[top], stack[top + 1]); break;
            case Op::Neg: stack[top] = -stack[top]; break;
            case Op::Abs: stack[top] = std::abs(stack[top]); break;
        }
    }
    return stack[0];
}

} // namespace sgt
