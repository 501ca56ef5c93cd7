#include "systo/rational.hpp"

namespace systo {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator in rational: " + text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse rational: " + text);
    }
}

Rational rational_pow(const Rational& r, int e) {
    if (e < 0) throw InvalidInput("negative exponent");
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= r;
    return out;
}

}  // namespace systo
