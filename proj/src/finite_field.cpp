/*
   Copyright 2026 the fermatjac authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "fermatjac/finite_field.hpp"

#include <algorithm>
#include <cassert>

namespace fermatjac {

namespace {

constexpr int64_t kTableLimit = int64_t(1) << 22;

// Dense polynomial arithmetic mod (ell, modulus); little-endian coefficients.
std::vector<int64_t> poly_mul_mod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                  const std::vector<int64_t>& modulus, int64_t ell) {
    int64_t f = static_cast<int64_t>(modulus.size()) - 1;
    std::vector<int64_t> conv(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) conv[i + j] = (conv[i + j] + a[i] * b[j]) % ell;
    }
    for (int64_t k = static_cast<int64_t>(conv.size()) - 1; k >= f; --k) {
        int64_t c = conv[k] % ell;
        if (c == 0) continue;
        conv[k] = 0;
        for (int64_t j = 0; j < f; ++j)
            conv[k - f + j] = mod_norm(conv[k - f + j] - c * modulus[j], ell);
    }
    conv.resize(f);
    for (auto& v : conv) v = mod_norm(v, ell);
    return conv;
}

std::vector<int64_t> poly_pow_mod(std::vector<int64_t> base, cpp_int e,
                                  const std::vector<int64_t>& modulus, int64_t ell) {
    int64_t f = static_cast<int64_t>(modulus.size()) - 1;
    std::vector<int64_t> acc(f, 0);
    acc[0] = 1 % ell;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) acc = poly_mul_mod(acc, base, modulus, ell);
        base = poly_mul_mod(base, base, modulus, ell);
        e >>= 1;
    }
    return acc;
}

int64_t poly_degree(const std::vector<int64_t>& a) {
    for (int64_t i = static_cast<int64_t>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// gcd of dense polynomials over F_ell (result monic; empty for gcd of zeros).
std::vector<int64_t> poly_gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t ell) {
    while (poly_degree(b) >= 0) {
        // a mod b
        int64_t db = poly_degree(b);
        int64_t lead_inv = mod_inv(b[db], ell);
        for (int64_t k = poly_degree(a); k >= db; k = poly_degree(a)) {
            int64_t c = a[k] * lead_inv % ell;
            for (int64_t j = 0; j <= db; ++j)
                a[k - db + j] = mod_norm(a[k - db + j] - c * b[j], ell);
        }
        std::swap(a, b);
    }
    int64_t da = poly_degree(a);
    if (da >= 0) {
        int64_t inv = mod_inv(a[da], ell);
        for (auto& v : a) v = v * inv % ell;
        a.resize(da + 1);
    }
    return a;
}

bool is_irreducible(const std::vector<int64_t>& modulus, int64_t ell) {
    int64_t f = static_cast<int64_t>(modulus.size()) - 1;
    if (f == 1) return true;
    std::vector<int64_t> x(f, 0);
    x[1] = 1;
    // Rabin's test: x^(ell^f) = x, and gcd(x^(ell^(f/d)) - x, modulus) = 1 for
    // every prime d | f.
    auto frob_iterate = [&](int64_t times) {
        std::vector<int64_t> y = x;
        for (int64_t i = 0; i < times; ++i) y = poly_pow_mod(y, ell, modulus, ell);
        return y;
    };
    if (frob_iterate(f) != x) return false;
    for (int64_t d = 2; d <= f; ++d) {
        if (f % d != 0 || !is_prime(d)) continue;
        std::vector<int64_t> y = frob_iterate(f / d);
        y[1] = mod_norm(y[1] - 1, ell);  // y = x^(ell^(f/d)) - x
        if (poly_degree(poly_gcd(y, modulus, ell)) != 0) return false;
    }
    return true;
}

}  // namespace

std::vector<cpp_int> prime_factors_of_q_minus_1(int64_t ell, int64_t f) {
    // q-1 = prod_{d | f} Phi_d(ell); each piece is small enough for trial division.
    std::map<int64_t, cpp_int> phi;
    for (int64_t d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        cpp_int v = boost::multiprecision::pow(cpp_int(ell), static_cast<unsigned>(d)) - 1;
        for (auto& [e, w] : phi)
            if (d % e == 0) v /= w;
        phi[d] = v;
    }
    std::vector<cpp_int> primes;
    auto push = [&](const cpp_int& q) {
        if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
    };
    for (auto& [d, v0] : phi) {
        cpp_int v = v0;
        for (int64_t t = 2; cpp_int(t) * t <= v && t <= 2000000; ++t)
            while (v % t == 0) {
                push(cpp_int(t));
                v /= t;
            }
        if (v > 1) {
            if (v > cpp_int("4000000000000"))
                throw std::invalid_argument("q-1 factorization out of supported range");
            if (!is_prime(static_cast<int64_t>(v)))
                throw std::logic_error("unexpected composite cofactor in q-1");
            push(v);
        }
    }
    return primes;
}

FqField FqField::build(int64_t ell, int64_t f) {
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    FqField F;
    F.ell_ = ell;
    F.f_ = f;
    F.q_ = boost::multiprecision::pow(cpp_int(ell), static_cast<unsigned>(f));
    // Lexicographically least monic irreducible: scan lower coefficients as
    // base-ell digits of an increasing counter.
    for (cpp_int n = 0; n < F.q_; ++n) {
        std::vector<int64_t> m(f + 1, 0);
        cpp_int v = n;
        for (int64_t i = 0; i < f; ++i) {
            m[i] = static_cast<int64_t>(v % ell);
            v /= ell;
        }
        m[f] = 1;
        if (is_irreducible(m, ell)) {
            F.modulus_ = m;
            break;
        }
    }
    if (F.modulus_.empty()) throw std::logic_error("no irreducible modulus found");
    F.init_generator();
    return F;
}

FqField FqField::with_modulus(int64_t ell, std::vector<int64_t> modulus) {
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (auto& v : modulus) v = mod_norm(v, ell);
    modulus.back() = 1;
    if (!is_irreducible(modulus, ell)) throw std::invalid_argument("modulus is reducible");
    FqField F;
    F.ell_ = ell;
    F.f_ = static_cast<int64_t>(modulus.size()) - 1;
    F.q_ = boost::multiprecision::pow(cpp_int(ell), static_cast<unsigned>(F.f_));
    F.modulus_ = std::move(modulus);
    F.init_generator();
    return F;
}

void FqField::init_generator() {
    auto primes = prime_factors_of_q_minus_1(ell_, f_);
    if (q_ == 2) {  // trivial multiplicative group
        generator_ = one();
        return;
    }
    for (cpp_int n = 2; n < q_; ++n) {
        FqElt cand = element_at(n);
        bool ok = true;
        for (const auto& pi : primes) {
            if (pow(cand, (q_ - 1) / pi) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = cand;
            return;
        }
    }
    throw std::logic_error("no generator found");
}

FqElt FqField::zero() const { return FqElt{std::vector<int64_t>(f_, 0)}; }

FqElt FqField::one() const {
    FqElt e = zero();
    e.c[0] = 1 % ell_;
    return e;
}

FqElt FqField::from_int(const cpp_int& n) const {
    FqElt e = zero();
    e.c[0] = static_cast<int64_t>(((n % ell_) + ell_) % ell_);
    return e;
}

FqElt FqField::element_at(const cpp_int& n) const {
    if (n < 0 || n >= q_) throw std::invalid_argument("element index out of range");
    FqElt e = zero();
    cpp_int v = n;
    for (int64_t i = 0; i < f_; ++i) {
        e.c[i] = static_cast<int64_t>(v % ell_);
        v /= ell_;
    }
    return e;
}

cpp_int FqField::index_of(const FqElt& a) const {
    cpp_int idx = 0;
    for (int64_t i = f_ - 1; i >= 0; --i) idx = idx * ell_ + a.c[i];
    return idx;
}

bool FqField::is_zero(const FqElt& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](int64_t v) { return v == 0; });
}

FqElt FqField::add(const FqElt& a, const FqElt& b) const {
    FqElt r = a;
    for (int64_t i = 0; i < f_; ++i) r.c[i] = mod_norm(r.c[i] + b.c[i], ell_);
    return r;
}

FqElt FqField::sub(const FqElt& a, const FqElt& b) const {
    FqElt r = a;
    for (int64_t i = 0; i < f_; ++i) r.c[i] = mod_norm(r.c[i] - b.c[i], ell_);
    return r;
}

FqElt FqField::mul(const FqElt& a, const FqElt& b) const {
    return FqElt{poly_mul_mod(a.c, b.c, modulus_, ell_)};
}

FqElt FqField::pow(const FqElt& a, cpp_int e) const {
    if (e < 0) return pow(inv(a), -e);
    return FqElt{poly_pow_mod(a.c, e, modulus_, ell_)};
}

FqElt FqField::inv(const FqElt& a) const {
    if (is_zero(a)) throw std::invalid_argument("division by zero");
    return pow(a, q_ - 2);
}

FqElt FqField::zeta_p(int64_t p) const {
    if ((q_ - 1) % p != 0) throw std::invalid_argument("p does not divide q-1");
    FqElt z = pow(generator_, (q_ - 1) / p);
    assert(!(z == one()));
    return z;
}

int64_t FqField::chi_exponent(const FqElt& a, int64_t p) const {
    if (is_zero(a)) throw std::invalid_argument("chi undefined at 0");
    if ((q_ - 1) % p != 0) throw std::invalid_argument("p does not divide q-1");
    FqElt z = pow(a, (q_ - 1) / p);
    FqElt zp = zeta_p(p);
    FqElt acc = one();
    for (int64_t k = 0; k < p; ++k) {
        if (acc == z) return k;
        acc = mul(acc, zp);
    }
    throw std::logic_error("chi value is not a power of zeta_p");
}

std::vector<int8_t> FqField::chi_table(int64_t p) const {
    if (q_ > kTableLimit) throw std::invalid_argument("field too large for chi table");
    if ((q_ - 1) % p != 0) throw std::invalid_argument("p does not divide q-1");
    int64_t q = static_cast<int64_t>(q_);
    std::vector<int8_t> table(q, -1);
    auto idx = [&](const FqElt& a) {
        int64_t v = 0;
        for (int64_t i = f_ - 1; i >= 0; --i) v = v * ell_ + a.c[i];
        return v;
    };
    FqElt x = one();
    for (int64_t k = 0; k < q - 1; ++k) {
        table[idx(x)] = static_cast<int8_t>(k % p);
        x = mul(x, generator_);
    }
    return table;
}

int64_t count_affine_points(const FqField& field, const Triple& triple, int64_t delta) {
    int64_t ell = field.ell();
    if (delta % ell == 0 || triple.p == ell)
        throw std::invalid_argument("count requires ell coprime to p*delta");
    const cpp_int& q_big = field.q();
    bool chi_case = (q_big - 1) % triple.p == 0;
    if (q_big > kTableLimit) {
        if (chi_case || q_big > cpp_int(std::numeric_limits<int64_t>::max()))
            throw std::invalid_argument("field too large for point counting");
        // gcd(p, q-1) = 1: y -> y^p is a bijection, one y per x.
        return static_cast<int64_t>(q_big);
    }
    int64_t q = static_cast<int64_t>(q_big);
    auto idx = [&](const FqElt& a) {
        int64_t v = 0;
        for (int64_t i = field.f() - 1; i >= 0; --i) v = v * ell + a.c[i];
        return v;
    };
    FqElt dbar = field.from_int(delta);
    int64_t count = 0;
    if (chi_case) {
        auto table = field.chi_table(triple.p);
        for (int64_t n = 0; n < q; ++n) {
            FqElt x = field.element_at(n);
            FqElt v = field.mul(field.pow(x, triple.r), field.pow(field.sub(dbar, x), triple.s));
            if (field.is_zero(v))
                count += 1;
            else if (table[idx(v)] == 0)
                count += triple.p;
        }
    } else {
        // gcd(p, q-1) = 1: y -> y^p is a bijection, but count by histogram of
        // p-th powers so the enumeration stays a genuine oracle.
        std::vector<int32_t> roots(q, 0);
        for (int64_t n = 0; n < q; ++n) roots[idx(field.pow(field.element_at(n), triple.p))]++;
        for (int64_t n = 0; n < q; ++n) {
            FqElt x = field.element_at(n);
            FqElt v = field.mul(field.pow(x, triple.r), field.pow(field.sub(dbar, x), triple.s));
            count += roots[idx(v)];
        }
    }
    return count;
}

std::vector<cpp_int> zeta_numerator(int64_t ell, const Triple& triple, int64_t delta) {
    if (delta % ell == 0 || triple.p == ell)
        throw std::invalid_argument("zeta requires ell coprime to p*delta");
    int64_t p = triple.p;
    // Power sums of the Frobenius eigenvalues from projective counts; the
    // smooth model has exactly one point above each of x = 0, delta, infinity
    // (gcd(p,r) = gcd(p,s) = gcd(p,t) = 1), and 0 and delta are already in the
    // affine chart, so projective = affine + 1.
    std::vector<cpp_int> s(p);  // s[m], 1-based
    for (int64_t m = 1; m <= p - 1; ++m) {
        FqField F = FqField::build(ell, m);
        int64_t n_aff = count_affine_points(F, triple, delta);
        s[m] = F.q() + 1 - (cpp_int(n_aff) + 1);
    }
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i.
    std::vector<cpp_int> e(p, 0);
    e[0] = 1;
    for (int64_t k = 1; k <= p - 1; ++k) {
        cpp_int acc = 0;
        for (int64_t i = 1; i <= k; ++i) {
            cpp_int term = e[k - i] * s[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (acc % k != 0) throw ConsistencyError("Newton identities gave non-integral e_k");
        e[k] = acc / k;
    }
    std::vector<cpp_int> c(p);
    for (int64_t k = 0; k <= p - 1; ++k) c[k] = (k % 2 == 0) ? e[k] : -e[k];
    return c;
}

}  // namespace fermatjac
