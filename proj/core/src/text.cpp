#include "szego/text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace szego {

namespace {

std::string trim(const std::string& s) {
    size_t first = 0;
    size_t last = s.size();
    while (first < last && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
    while (last > first && std::isspace(static_cast<unsigned char>(s[last - 1]))) --last;
    return s.substr(first, last - first);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

[[noreturn]] void bad_rational(const std::string& text, const char* why) {
    std::ostringstream msg;
    msg << "cannot parse '" << text << "' as a rational: " << why
        << " (write p/q or an integer)";
    throw std::invalid_argument(msg.str());
}

BigInt parse_integer_token(const std::string& token, const std::string& whole) {
    if (token.empty()) bad_rational(whole, "missing digits");
    size_t i = 0;
    if (token[0] == '+' || token[0] == '-') i = 1;
    if (i == token.size()) bad_rational(whole, "missing digits");
    for (; i < token.size(); ++i) {
        if (token[i] == '.') bad_rational(whole, "decimal notation is not supported");
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
            bad_rational(whole, "unexpected character");
        }
    }
    return BigInt(token);
}

int parse_int_token(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw std::invalid_argument("empty integer entry");
    size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(t, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse '" + t + "' as an integer");
    }
    if (consumed != t.size()) {
        throw std::invalid_argument("cannot parse '" + t + "' as an integer");
    }
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) bad_rational(text, "empty input");
    const size_t slash = t.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer_token(t, t));
    }
    if (t.find('/', slash + 1) != std::string::npos) {
        bad_rational(t, "more than one '/'");
    }
    const BigInt num = parse_integer_token(trim(t.substr(0, slash)), t);
    const BigInt den = parse_integer_token(trim(t.substr(slash + 1)), t);
    if (den.is_zero()) bad_rational(t, "zero denominator");
    return make_rational(num, den);
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den != 1) out << '/' << den;
    return out.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    if (trim(text).empty()) return {};
    std::vector<Rational> out;
    for (const std::string& item : split(text, ',')) {
        out.push_back(parse_rational(item));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    if (trim(text).empty()) return {};
    std::vector<int> out;
    for (const std::string& item : split(text, ',')) {
        out.push_back(parse_int_token(item));
    }
    return out;
}

std::string format_coefficients(const Polynomial& p) {
    std::ostringstream out;
    for (int i = 0; i <= p.ambient_degree(); ++i) {
        if (i > 0) out << ',';
        out << format_rational(p.coeff(i));
    }
    return out.str();
}

std::string format_polynomial_pretty(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.effective_degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        const bool negative = sign_of(c) < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = magnitude == 1;
        if (i == 0) {
            out << format_rational(magnitude);
        } else {
            if (!unit) out << format_rational(magnitude) << '*';
            out << 'x';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

MultiplicityVector parse_multiplicity_vector(const std::string& text, int n) {
    const std::vector<int> parts = parse_int_list(text);
    int sum = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            std::ostringstream msg;
            msg << "multiplicity vector '" << text << "': part " << i + 1 << " is "
                << parts[i] << ", must be positive";
            throw std::invalid_argument(msg.str());
        }
        sum += parts[i];
    }
    if (sum != n) {
        std::ostringstream msg;
        msg << "multiplicity vector '" << text << "' sums to " << sum << ", expected "
            << n;
        throw std::invalid_argument(msg.str());
    }
    return MultiplicityVector(parts);
}

std::string format_multiplicity_vector(const MultiplicityVector& mv) {
    std::ostringstream out;
    for (size_t i = 0; i < mv.size(); ++i) {
        if (i > 0) out << ',';
        out << mv.part(i);
    }
    return out.str();
}

SignedMultiplicityVector parse_signed_multiplicity_vector(const std::string& text,
                                                          int n) {
    const std::vector<std::string> sections = split(text, '|');
    if (sections.size() != 3) {
        throw std::invalid_argument("signed multiplicity vector '" + text +
                                    "': expected neg:...|zero:...|pos:...");
    }
    const auto section_body = [&](const std::string& section, const char* prefix) {
        const std::string s = trim(section);
        const std::string p = std::string(prefix) + ":";
        if (s.rfind(p, 0) != 0) {
            throw std::invalid_argument("signed multiplicity vector '" + text +
                                        "': expected section '" + p + "'");
        }
        return s.substr(p.size());
    };
    const std::vector<int> neg = parse_int_list(section_body(sections[0], "neg"));
    const int zero = [&] {
        const std::string body = trim(section_body(sections[1], "zero"));
        return body.empty() ? 0 : parse_int_token(body);
    }();
    const std::vector<int> pos = parse_int_list(section_body(sections[2], "pos"));
    SignedMultiplicityVector smv(neg, zero, pos);
    if (smv.n() != n) {
        std::ostringstream msg;
        msg << "signed multiplicity vector '" << text << "' sums to " << smv.n()
            << ", expected " << n;
        throw std::invalid_argument(msg.str());
    }
    return smv;
}

std::string format_signed_multiplicity_vector(const SignedMultiplicityVector& smv) {
    std::ostringstream out;
    out << "neg:";
    for (size_t i = 0; i < smv.negative_parts().size(); ++i) {
        if (i > 0) out << ',';
        out << smv.negative_parts()[i];
    }
    out << "|zero:" << smv.zero_multiplicity() << "|pos:";
    for (size_t i = 0; i < smv.positive_parts().size(); ++i) {
        if (i > 0) out << ',';
        out << smv.positive_parts()[i];
    }
    return out.str();
}

std::string format_sign_signature(const SignSignature& sig) {
    std::ostringstream out;
    out << "neg:" << sig.negative << "|zero:" << sig.zero << "|pos:" << sig.positive;
    return out.str();
}

std::string format_interval(const IsolatingInterval& iv) {
    if (iv.is_point()) return format_rational(iv.lo);
    return "(" + format_rational(iv.lo) + "," + format_rational(iv.hi) + "]";
}

std::string format_multiplicity_structure(const MultiplicityStructure& ms) {
    std::ostringstream out;
    for (size_t i = 0; i < ms.entries().size(); ++i) {
        if (i > 0) out << ", ";
        out << format_interval(ms.entries()[i].location) << ':'
            << ms.entries()[i].multiplicity;
    }
    return out.str();
}

}  // namespace szego
