#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "spincalc/m13.hpp"
#include "spincalc/rational.hpp"
#include "spincalc/threespin.hpp"

namespace spincalc {

// Small expression language over the two Chow rings: rational literals,
// named divisor generators, + - * ^, and the calls st/push/deg/virt.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Ident, Unary, Binary, Power, Call };

    Kind kind;
    Rational number;            // Number
    std::string name;           // Ident, Call
    char op = 0;                // Binary: '+', '-', '*'
    int exponent = 0;           // Power
    std::vector<ExprPtr> args;  // children
};

// Identifiers and call names are validated here, with positions.
ExprPtr parse_expr(const std::string& src);

std::string expr_str(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

using Value = std::variant<Rational, M13Class, WClass>;

Value eval_expr(const ExprPtr& e, const Fixtures& fx = Fixtures::standard());

std::string value_str(const Value& v);

}  // namespace spincalc
