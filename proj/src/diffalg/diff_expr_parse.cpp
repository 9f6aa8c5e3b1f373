#include "lemniscate/diff_expr.hpp"

#include "lemniscate/error.hpp"

#include <cctype>

namespace lemniscate {

namespace {

class Parser {
public:
    Parser(std::string_view text, int max_order) : text_(text), max_order_(max_order) {}

    DiffExpr parse_all() {
        DiffExpr e = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("DiffExpr::parse: " + what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    DiffExpr constant(const BigRational& c) const { return DiffExpr::constant(RationalFunction(c)).with_max_order(max_order_); }

    DiffExpr expression() {
        DiffExpr acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    DiffExpr term() {
        DiffExpr acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                DiffExpr d = unary();
                if (d.terms().size() != 1 || d.terms().begin()->first != ZMonomial{} || d.half_power() != 0) {
                    fail("can only divide by a function of x");
                }
                acc *= RationalFunction(1) / d.terms().begin()->second;
            } else {
                return acc;
            }
        }
    }

    DiffExpr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    DiffExpr power() {
        DiffExpr base = primary();
        if (!accept('^')) return base;
        const bool neg = accept('-');
        const long e = integer();
        if (!neg) {
            DiffExpr r = constant(1);
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        if (base.terms().size() != 1) fail("negative powers need a single-term base");
        const auto& [m, c] = *base.terms().begin();
        if (m.top_order() > 0) fail("negative powers of derivatives of z are not allowed");
        ZMonomial inv;
        inv.z = -m.z * static_cast<int>(e);
        return DiffExpr::term(RationalFunction(1) / c.pow(static_cast<int>(e)), inv).with_max_order(max_order_);
    }

    long integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    DiffExpr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            DiffExpr e = expression();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return constant(BigRational::parse(text_.substr(start, pos_ - start)));
        }
        if (c == 'x') {
            ++pos_;
            return DiffExpr::constant(RationalFunction(Poly::x())).with_max_order(max_order_);
        }
        if (c == 'z') {
            ++pos_;
            int order = 0;
            if (pos_ < text_.size() && text_[pos_] == '\'') {
                while (pos_ < text_.size() && text_[pos_] == '\'') {
                    ++order;
                    ++pos_;
                }
            } else if (pos_ < text_.size() && text_[pos_] == 'p') {
                while (pos_ < text_.size() && text_[pos_] == 'p') {
                    ++order;
                    ++pos_;
                }
            } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                order = text_[pos_] - '0';
                ++pos_;
            }
            if (order > max_order_) fail("derivative order above cap");
            return DiffExpr::z_derivative(order, max_order_);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int max_order_;
};

}  // namespace

DiffExpr DiffExpr::parse(std::string_view text, int half_power, int max_order) {
    DiffExpr body = Parser(text, max_order).parse_all();
    return body * prefactor(half_power).with_max_order(max_order);
}

}  // namespace lemniscate
