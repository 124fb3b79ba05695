#include "gkm21/gf2k.hpp"

#include <stdexcept>

namespace gkm21::gf2k {

namespace {

unsigned modulus_bits(int k) {
    switch (k) {
        case 1: return 0b10u;        // t
        case 2: return 0b111u;       // w^2+w+1
        case 4: return 0b10011u;     // t^4+t+1
        case 6: return 0b1000011u;   // s^6+s+1
        default: throw std::invalid_argument("gf2k: unsupported field degree");
    }
}

void require_same_field(Fe a, Fe b) {
    if (a.k != b.k) throw std::invalid_argument("gf2k: operands live in different fields");
}

unsigned clmul(unsigned a, unsigned b) {
    unsigned r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

int degree(unsigned v) {
    int d = -1;
    while (v) {
        ++d;
        v >>= 1;
    }
    return d;
}

unsigned reduce(unsigned v, unsigned mod) {
    int md = degree(mod);
    for (int d = degree(v); d >= md; d = degree(v)) {
        v ^= mod << (d - md);
    }
    return v;
}

char symbol(int k) {
    switch (k) {
        case 2: return 'w';
        case 4: return 't';
        default: return 's';
    }
}

// Lexicographically least root of t^2+t+1 outside F_2.
uint8_t omega_image(int k) {
    for (unsigned b = 2; b < (1u << k); ++b) {
        Fe c = fe(k, b);
        if (is_zero(add(add(mul(c, c), c), one(k)))) return static_cast<uint8_t>(b);
    }
    throw std::logic_error("gf2k: no cube root of unity found");
}

}  // namespace

bool supported_degree(int k) { return k == 1 || k == 2 || k == 4 || k == 6; }

Fe fe(int k, unsigned bits) {
    if (!supported_degree(k)) throw std::invalid_argument("gf2k: unsupported field degree");
    if (bits >= (1u << k)) throw std::invalid_argument("gf2k: element out of range");
    return Fe{static_cast<uint8_t>(k), static_cast<uint8_t>(bits)};
}

Fe zero(int k) { return fe(k, 0); }
Fe one(int k) { return fe(k, 1); }

Fe omega(int k) {
    if (k % 2 != 0) throw std::invalid_argument("gf2k: omega needs F_4 inside the field");
    if (k == 2) return fe(2, 0b10);
    static const uint8_t w4 = omega_image(4);
    static const uint8_t w6 = omega_image(6);
    return fe(k, k == 4 ? w4 : w6);
}

Fe add(Fe a, Fe b) {
    require_same_field(a, b);
    return Fe{a.k, static_cast<uint8_t>(a.bits ^ b.bits)};
}

Fe mul(Fe a, Fe b) {
    require_same_field(a, b);
    unsigned m = modulus_bits(a.k);
    return Fe{a.k, static_cast<uint8_t>(reduce(clmul(a.bits, b.bits), m))};
}

bool is_zero(Fe a) { return a.bits == 0; }

Fe pow(Fe a, long long e) {
    long long order = (1LL << a.k) - 1;
    if (is_zero(a)) {
        if (e < 0) throw std::domain_error("gf2k: negative power of zero");
        return e == 0 ? one(a.k) : zero(a.k);
    }
    e %= order;
    if (e < 0) e += order;
    Fe r = one(a.k);
    Fe base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fe inv(Fe a) {
    if (is_zero(a)) throw std::domain_error("gf2k: inverse of zero");
    return pow(a, (1LL << a.k) - 2);
}

Fe frobenius(Fe a) { return mul(a, a); }

Fe embed(Fe a, int to_k) {
    if (!supported_degree(to_k)) throw std::invalid_argument("gf2k: unsupported field degree");
    int from_k = a.k;
    if (from_k == to_k) return a;
    if (to_k % from_k != 0)
        throw std::invalid_argument("gf2k: no embedding between these fields");
    if (from_k == 1) return fe(to_k, a.bits);
    // from_k == 2: a = c0 + c1*w  ->  c0 + c1*omega(to_k)
    Fe r = (a.bits & 1u) ? one(to_k) : zero(to_k);
    if (a.bits & 2u) r = add(r, omega(to_k));
    return r;
}

std::vector<Fe> enumerate_field(int k) {
    if (!supported_degree(k)) throw std::invalid_argument("gf2k: unsupported field degree");
    std::vector<Fe> out;
    out.reserve(1u << k);
    for (unsigned b = 0; b < (1u << k); ++b) out.push_back(fe(k, b));
    return out;
}

std::string to_string(Fe a) {
    if (a.bits == 0) return "0";
    if (a.bits == 1) return "1";
    if (a.k == 2) return a.bits == 0b10 ? "w" : "w^2";
    char s = symbol(a.k);
    std::string out;
    for (int d = a.k - 1; d >= 0; --d) {
        if (!(a.bits & (1u << d))) continue;
        if (!out.empty()) out += "+";
        if (d == 0)
            out += "1";
        else if (d == 1)
            out += s;
        else {
            out += s;
            out += "^";
            out += std::to_string(d);
        }
    }
    return out;
}

Fe parse(int k, const std::string& text) {
    if (!supported_degree(k)) throw std::invalid_argument("gf2k: unsupported field degree");
    unsigned bits = 0;
    size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("gf2k: cannot parse '" + text + "'"); };
    if (text.empty()) fail();
    while (i < text.size()) {
        size_t j = text.find('+', i);
        std::string term = text.substr(i, j == std::string::npos ? std::string::npos : j - i);
        if (term == "0") {
            // contributes nothing
        } else if (term == "1") {
            bits ^= 1u;
        } else if (!term.empty() && term[0] == symbol(k)) {
            int d = 1;
            if (term.size() > 1) {
                if (term.size() < 3 || term[1] != '^') fail();
                d = std::stoi(term.substr(2));
            }
            if (d < 0) fail();
            if (k == 2) {
                // w^2 = w + 1 in the quadratic field
                switch (d % 3) {
                    case 0: bits ^= 1u; break;
                    case 1: bits ^= 0b10u; break;
                    case 2: bits ^= 0b11u; break;
                }
            } else {
                if (d >= k) fail();
                bits ^= (1u << d);
            }
        } else {
            fail();
        }
        if (j == std::string::npos) break;
        i = j + 1;
    }
    return fe(k, bits);
}

}  // namespace gkm21::gf2k
