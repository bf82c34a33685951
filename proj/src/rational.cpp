#include "hlag/rational.hpp"

namespace hlag {

std::string decimal_string(const Rat& q, int digits) {
    long long num = q.numerator(), den = q.denominator();
    std::string out;
    if (num < 0) {
        out.push_back('-');
        num = -num;
    }
    out += std::to_string(num / den);
    num %= den;
    if (digits <= 0) return out;
    out.push_back('.');
    for (int k = 0; k < digits; ++k) {
        num *= 10;  // den <= ~1e15 here, no overflow for the values we print
        out.push_back(static_cast<char>('0' + num / den));
        num %= den;
    }
    return out;
}

}  // namespace hlag
