#pragma once

#include <string>
#include <vector>

namespace sgt {

/// Arithmetic expression in one integer variable n: numbers, n, + - * / ^
/// (right-associative power), unary minus, parentheses and abs(...).
/// Compiled once to a small stack program.
class Expression {
public:
    /// Throws Error (kind ParseError) with the offending position.
    static Expression parse(const std::string& text);

    double eval(double n) const;

    const std::string& text() const { return text_; }

private:
    enum class Op { PushConst, PushVar, Add, Sub, Mul, Div, Pow, Neg, Abs };
    struct Instr {
        Op op;
        double value = 0.0;
    };

    std::string text_;
    std::vector<Instr> program_;

    friend class ExprParser;
};

} // namespace sgt
