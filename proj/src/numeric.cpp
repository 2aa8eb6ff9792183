#include "multieuler/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace multieuler {

Int gcd_all(const std::vector<Int>& values) {
    Int g = 0;
    for (const Int& v : values) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) {
            break;
        }
    }
    return g;
}

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) {
        throw Error("internal error: division " + a.str() + " / " + b.str() + " is not exact");
    }
    return q;
}

} // namespace multieuler
