#include "skewlagrange/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace skl {

namespace {

[[noreturn]] void fail(std::string_view what, std::size_t pos) {
    throw std::invalid_argument(std::string(what) + " at offset " + std::to_string(pos));
}

std::string strip_ws(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

struct QuatCursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    // digits [/ digits]
    Rational rational_tail() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected number", pos);
        std::string num(s.substr(start, pos - start));
        std::string den = "1";
        if (!done() && peek() == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
            if (pos == dstart) fail("expected denominator", pos);
            den = std::string(s.substr(dstart, pos - dstart));
        }
        auto r = Rational::parse(num + "/" + den);
        if (!r) fail("bad rational", start);
        return *r;
    }
};

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
    const std::string stripped = strip_ws(text);
    QuatCursor cur{stripped};
    if (cur.done()) fail("empty quaternion literal", 0);

    Rational comp[4];  // 1, i, j, k
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            fail("expected '+' or '-' between terms", cur.pos);
        }
        first = false;

        Rational mag(1);
        bool have_mag = false;
        if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            mag = cur.rational_tail();
            have_mag = true;
        }
        int unit = 0;  // 0 = real part
        if (!cur.done() && (cur.peek() == '*' || cur.peek() == 'i' || cur.peek() == 'j' ||
                            cur.peek() == 'k')) {
            if (cur.peek() == '*') {
                if (!have_mag) fail("unexpected '*'", cur.pos);
                ++cur.pos;
                if (cur.done()) fail("expected unit after '*'", cur.pos);
            }
            switch (cur.peek()) {
                case 'i': unit = 1; break;
                case 'j': unit = 2; break;
                case 'k': unit = 3; break;
                default: fail("expected unit i, j or k", cur.pos);
            }
            ++cur.pos;
        } else if (!have_mag) {
            fail("expected term", cur.pos);
        }
        comp[unit] += sign < 0 ? -mag : mag;
    }
    return {comp[0], comp[1], comp[2], comp[3]};
}

std::string format_rational(const Rational& r) { return r.str(); }

std::string format_quaternion(const Quaternion& q) {
    struct Part {
        const Rational* value;
        const char* unit;
    };
    const Part parts[4] = {{&q.re(), ""}, {&q.im_i(), "i"}, {&q.im_j(), "j"}, {&q.im_k(), "k"}};
    std::string out;
    for (const auto& part : parts) {
        if (part.value->is_zero()) continue;
        const bool neg = part.value->sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        Rational mag = neg ? -*part.value : *part.value;
        if (part.unit[0] == '\0') {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += part.unit;
        } else {
            out += mag.str() + "*" + part.unit;
        }
    }
    return out.empty() ? "0" : out;
}

SkewPoly<Quaternion> parse_poly(std::string_view text) {
    // Split into top-level terms on +/- outside parentheses, then read each
    // term as (quat) [z[^N]] or a bare quaternion / z power.
    std::vector<Quaternion> coeffs;
    auto add_coeff = [&coeffs](std::size_t power, const Quaternion& v) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, Quaternion::zero());
        coeffs[power] += v;
    };

    const std::string s = strip_ws(text);
    if (s.empty()) fail("empty polynomial", 0);
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-' between terms", pos);
        }
        first = false;
        if (pos >= s.size()) fail("dangling sign", pos);

        Quaternion coeff = Quaternion::one();
        bool have_coeff = false;
        if (s[pos] == '(') {
            int depth = 1;
            std::size_t start = ++pos;
            while (pos < s.size() && depth > 0) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') --depth;
                ++pos;
            }
            if (depth != 0) fail("unbalanced parenthesis", start - 1);
            coeff = parse_quaternion(s.substr(start, pos - 1 - start));
            have_coeff = true;
        } else if (s[pos] != 'z') {
            // Bare coefficient: consume until top-level sign that is not
            // part of the quaternion literal; since literals carry signs,
            // a bare term is only allowed when it spans the whole rest.
            std::size_t start = pos;
            while (pos < s.size() && s[pos] != '(' && s[pos] != 'z') ++pos;
            coeff = parse_quaternion(s.substr(start, pos - start));
            have_coeff = true;
            if (sign < 0) coeff = -coeff;
            add_coeff(0, coeff);
            if (pos < s.size()) fail("unexpected trailing input", pos);
            break;
        }

        std::size_t power = 0;
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == start) fail("expected exponent", pos);
                power = std::stoul(std::string(s.substr(start, pos - start)));
            }
        } else if (!have_coeff) {
            fail("expected term", pos);
        }
        if (sign < 0) coeff = -coeff;
        add_coeff(power, coeff);
    }
    return SkewPoly<Quaternion>(std::move(coeffs));
}

std::string format_poly(const SkewPoly<Quaternion>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
        const Quaternion& c = f.coeffs()[j];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + format_quaternion(c) + ")";
        if (j == 1) out += " z";
        if (j > 1) out += " z^" + std::to_string(j);
    }
    return out;
}

std::vector<std::string> poly_to_strings(const SkewPoly<Quaternion>& f) {
    std::vector<std::string> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(format_quaternion(c));
    return out;
}

SkewPoly<Quaternion> poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Quaternion> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(parse_quaternion(s));
    return SkewPoly<Quaternion>(std::move(v));
}

}  // namespace skl
