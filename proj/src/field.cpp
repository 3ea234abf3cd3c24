#include "rookmaze/field.hpp"

#include <cctype>

namespace rookmaze {

Rational parse_rational(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    bool digits = false, slash = false, den_digits = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            (slash ? den_digits : digits) = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
        } else {
            throw DomainError("not a rational number: '" + s + "'");
        }
    }
    if (!digits || (slash && !den_digits)) throw DomainError("not a rational number: '" + s + "'");
    std::string text = s[0] == '+' ? s.substr(1) : s;
    Rational q;
    if (q.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace rookmaze
