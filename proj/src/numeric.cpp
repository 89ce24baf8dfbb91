#include "towerlab/numeric.hpp"

#include <sstream>

namespace towerlab {

std::string dec_str(const Dec& d, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << d;
    return os.str();
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

Int int_pow(const Int& base, unsigned exp) {
    Int acc = 1, b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

bool half_power_minus_one(const Int& q, int r, Rat* out) {
    if (r % 2 == 0) {
        if (out) *out = Rat(int_pow(q, static_cast<unsigned>(r / 2)) - 1);
        return true;
    }
    Int root;
    if (is_square(q, &root)) {
        if (out) *out = Rat(int_pow(root, static_cast<unsigned>(r)) - 1);
        return true;
    }
    return false;
}

Dec half_power_minus_one_dec(const Int& q, int r) {
    Rat exact;
    if (half_power_minus_one(q, r, &exact)) return to_dec(exact);
    // odd r, non-square q: q^{r/2} = q^{(r-1)/2} * sqrt(q)
    Dec val = Dec(int_pow(q, static_cast<unsigned>((r - 1) / 2))) * sqrt(Dec(q));
    return val - 1;
}

}  // namespace towerlab
