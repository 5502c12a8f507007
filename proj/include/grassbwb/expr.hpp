#pragma once

// Two tiny recursive-descent grammars for the command line.
//
// Bundle expressions build homogeneous bundles on G(k,n):
//   atom    := U | Q | O | H(t) | dual(e) | sym(m,e) | wedge(p,e) | (e)
//   expr    := atom (* atom)*
// U and Q are the tautological sub and quotient bundles, H(t) a twist by
// O(t); sym and wedge apply to bundles concentrated in one block.  The
// final twist is folded into the quotient block when that block is
// nontrivial, into the sub block otherwise (cohomology is unaffected;
// the choice matches the customary display of the weights).
//
// Class expressions evaluate in the Schubert basis of G(2,6):
//   primary := sN | s[a] | s[a,b] | classF | classS | integer | (e)
//   expr    := sums/differences of products of primaries, with ^ powers.

#include <cctype>
#include <string>
#include <string_view>

#include "grassbwb/bwb.hpp"
#include "grassbwb/charring.hpp"
#include "grassbwb/chern.hpp"
#include "grassbwb/common.hpp"
#include "grassbwb/deglocus.hpp"
#include "grassbwb/schubert.hpp"

namespace grassbwb {

namespace detail {

/// Shared tokenizer-ish cursor over an expression string.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }
    int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (digits == pos_) fail("expected an integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("expression error at position " +
                                    std::to_string(pos_) + ": " + why);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct BundleValue {
    CharElement sub;
    CharElement quot;
    int twist = 0;
};

class BundleParser {
public:
    BundleParser(std::string_view text, int k, int n) : cur_(text), k_(k), n_(n) {
        if (k < 1 || n <= k) throw std::invalid_argument("bundle grammar: need 1 <= k < n");
    }

    BundleValue parse() {
        BundleValue v = expr();
        if (!cur_.at_end()) cur_.fail("trailing input");
        return v;
    }

private:
    Cursor cur_;
    int k_, n_;

    BundleValue one() const {
        return {CharElement::trivial(k_), CharElement::trivial(n_ - k_), 0};
    }

    BundleValue expr() {
        BundleValue v = factor();
        while (cur_.eat('*')) {
            BundleValue w = factor();
            v.sub = multiply(v.sub, w.sub);
            v.quot = multiply(v.quot, w.quot);
            v.twist += w.twist;
        }
        return v;
    }

    BundleValue factor() {
        if (cur_.eat('(')) {
            BundleValue v = expr();
            cur_.expect(')');
            return v;
        }
        const std::string name = cur_.ident();
        if (name == "U") {
            BundleValue v = one();
            Weight w(static_cast<std::size_t>(k_), 0);
            w.back() = -1;  // U = dual of U*
            v.sub = CharElement::irreducible(k_, w);
            return v;
        }
        if (name == "Q") {
            BundleValue v = one();
            Weight w(static_cast<std::size_t>(n_ - k_), 0);
            w.back() = -1;
            v.quot = CharElement::irreducible(n_ - k_, w);
            return v;
        }
        if (name == "O") return one();
        if (name == "H") {
            cur_.expect('(');
            const int t = cur_.integer();
            cur_.expect(')');
            BundleValue v = one();
            v.twist = t;
            return v;
        }
        if (name == "dual") {
            cur_.expect('(');
            BundleValue v = expr();
            cur_.expect(')');
            return {dual(v.sub), dual(v.quot), -v.twist};
        }
        if (name == "sym" || name == "wedge") {
            cur_.expect('(');
            const int m = cur_.integer();
            cur_.expect(',');
            BundleValue v = expr();
            cur_.expect(')');
            if (m < 0) cur_.fail(name + " needs a nonnegative order");
            return plethysm(name == "sym", m, v);
        }
        cur_.fail("unknown name '" + name + "'");
    }

    BundleValue plethysm(bool symmetric, int m, const BundleValue& v) const {
        const bool sub_trivial = v.sub == CharElement::trivial(k_);
        const bool quot_trivial = v.quot == CharElement::trivial(n_ - k_);
        if (!sub_trivial && !quot_trivial)
            throw std::invalid_argument(
                "sym/wedge only applies to bundles concentrated in one block");
        BundleValue out = one();
        out.twist = m * v.twist;
        if (!sub_trivial)
            out.sub = symmetric ? symmetric_power(m, v.sub) : exterior_power(m, v.sub);
        else if (!quot_trivial)
            out.quot = symmetric ? symmetric_power(m, v.quot) : exterior_power(m, v.quot);
        else if (!symmetric && m > 1)
            out.sub = CharElement(k_);  // wedge of a line bundle: zero
        return out;
    }
};

}  // namespace detail

/// Parse a bundle expression and fold the accumulated twist into a block.
inline HomogeneousBundle parse_bundle(const std::string& text, int k, int n) {
    detail::BundleValue v = detail::BundleParser(text, k, n).parse();
    if (!(v.quot == CharElement::trivial(n - k)))
        return HomogeneousBundle(k, n, v.sub, twist_by_determinant(v.quot, -v.twist));
    return HomogeneousBundle(k, n, twist_by_determinant(v.sub, v.twist), v.quot);
}

namespace detail {

class ClassParser {
public:
    explicit ClassParser(std::string_view text) : cur_(text) {}

    SchubertElement parse() {
        SchubertElement v = expr();
        if (!cur_.at_end()) cur_.fail("trailing input");
        return v;
    }

private:
    Cursor cur_;

    static SchubertElement scalar(i64 c) { return sigma(2, 6, Weight{}, c); }

    SchubertElement expr() {
        SchubertElement v = cur_.eat('-') ? SchubertElement(2, 6) - term() : term();
        for (;;) {
            if (cur_.eat('+')) v = v + term();
            else if (cur_.eat('-')) v = v - term();
            else return v;
        }
    }

    SchubertElement term() {
        SchubertElement v = factor();
        while (cur_.eat('*')) v = product(v, factor());
        return v;
    }

    SchubertElement factor() {
        SchubertElement v = primary();
        if (cur_.eat('^')) {
            const int e = cur_.integer();
            if (e < 0) cur_.fail("negative exponent");
            v = power(v, e);
        }
        return v;
    }

    SchubertElement primary() {
        const char c = cur_.peek();
        if (c == '(') {
            cur_.eat('(');
            SchubertElement v = expr();
            cur_.expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return scalar(cur_.integer());
        const std::string name = cur_.ident();
        if (name == "classF") return class_of_F();
        if (name == "classS") return class_of_S();
        if (name.size() >= 1 && name[0] == 's') {
            if (name.size() > 1) {
                // sN shorthand, one row.
                for (std::size_t i = 1; i < name.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(name[i])))
                        cur_.fail("unknown name '" + name + "'");
                const int part = std::stoi(name.substr(1));
                return part == 0 ? scalar(1) : sigma(2, 6, Weight{part});
            }
            cur_.expect('[');
            Weight lam{cur_.integer()};
            if (cur_.eat(',')) lam.push_back(cur_.integer());
            cur_.expect(']');
            while (!lam.empty() && lam.back() == 0) lam.pop_back();
            return sigma(2, 6, lam);
        }
        cur_.fail("unknown name '" + name + "'");
    }
};

}  // namespace detail

/// Parse a Schubert class expression on G(2,6).
inline SchubertElement parse_class(const std::string& text) {
    return detail::ClassParser(text).parse();
}

}  // namespace grassbwb
