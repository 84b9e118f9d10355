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
#include "fermatjac/local_field.hpp"

#include <cassert>

namespace fermatjac {

namespace {
using int128 = __int128;
}

LocalField::LocalField(int64_t p, int M, int64_t branch_digit) : p_(p), M_(M) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (M < 4) throw std::invalid_argument("M must be >= 4");
    N_ = static_cast<int>(M * (p - 1));
    if (N_ < p + 2) throw PrecisionError("lambda precision below p+2");
    pM_ = ipow(p, M);

    teich_.assign(p, 0);
    for (int64_t h = 1; h < p; ++h) {
        int64_t t = h;
        for (int64_t prev = -1; prev != t;) {
            prev = t;
            t = mod_pow(t, p, pM_);
        }
        teich_[h] = t;
    }

    lift_omega(branch_digit);

    u_.resize(p + 1);
    u_[0] = lambda_pow(1);
    u_[1] = omega_;
    for (int64_t i = 2; i <= p; ++i) u_[i] = exp_lambda_pow(i);

    u_inv_.resize(p + 1);
    for (int64_t i = 1; i <= p; ++i) u_inv_[i] = inv(u_[i]);

    pth_root_candidates_.reserve(p * (p - 1));
    for (int64_t z0 = 1; z0 < p; ++z0)
        for (int64_t z1 = 0; z1 < p; ++z1) {
            LocalElt z = add(from_int(teich_[z0]),
                             mul(from_int(mod_norm(teich_[z0] * z1, pM_)), lambda_pow(1)));
            pth_root_candidates_.push_back(inv(pow(z, p_)));
        }
}

LocalElt LocalField::zero() const { return LocalElt{std::vector<int64_t>(p_ - 1, 0)}; }

LocalElt LocalField::one() const { return from_int(1); }

LocalElt LocalField::from_int(int64_t n) const {
    LocalElt e = zero();
    e.c[0] = mod_norm(n, pM_);
    return e;
}

LocalElt LocalField::lambda_pow(int64_t n) const {
    if (n < 0 || n >= N_) throw std::invalid_argument("lambda power out of range");
    int64_t a = n / (p_ - 1), b = n % (p_ - 1);
    LocalElt e = zero();
    int64_t coef = mod_pow(p_, a, pM_);
    if (a % 2 == 1) coef = mod_norm(-coef, pM_);
    e.c[b] = coef;
    return e;
}

bool LocalField::is_zero(const LocalElt& a) const {
    for (int64_t v : a.c)
        if (v != 0) return false;
    return true;
}

LocalElt LocalField::add(const LocalElt& a, const LocalElt& b) const {
    LocalElt r = a;
    for (int64_t j = 0; j < p_ - 1; ++j) r.c[j] = mod_norm(r.c[j] + b.c[j], pM_);
    return r;
}

LocalElt LocalField::sub(const LocalElt& a, const LocalElt& b) const {
    LocalElt r = a;
    for (int64_t j = 0; j < p_ - 1; ++j) r.c[j] = mod_norm(r.c[j] - b.c[j], pM_);
    return r;
}

LocalElt LocalField::neg(const LocalElt& a) const {
    LocalElt r = a;
    for (auto& v : r.c) v = mod_norm(-v, pM_);
    return r;
}

LocalElt LocalField::mul(const LocalElt& a, const LocalElt& b) const {
    std::vector<int64_t> conv(2 * p_ - 3, 0);
    for (int64_t i = 0; i < p_ - 1; ++i) {
        if (a.c[i] == 0) continue;
        for (int64_t j = 0; j < p_ - 1; ++j)
            conv[i + j] = static_cast<int64_t>((int128(a.c[i]) * b.c[j] + conv[i + j]) % pM_);
    }
    LocalElt r = zero();
    for (int64_t k = 2 * p_ - 4; k >= p_ - 1; --k)
        conv[k - (p_ - 1)] = mod_norm(conv[k - (p_ - 1)] - conv[k] % pM_ * p_ % pM_, pM_);
    for (int64_t j = 0; j < p_ - 1; ++j) r.c[j] = mod_norm(conv[j], pM_);
    return r;
}

LocalElt LocalField::inv(const LocalElt& a) const {
    if (a.c[0] % p_ == 0) throw std::invalid_argument("inverse requires a unit");
    LocalElt y = from_int(mod_inv(a.c[0], pM_));
    LocalElt two = from_int(2);
    int iters = 1;
    while ((1 << iters) < N_ + 1) ++iters;
    for (int i = 0; i <= iters; ++i) y = mul(y, sub(two, mul(a, y)));
    return y;
}

LocalElt LocalField::pow(const LocalElt& a, int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    LocalElt acc = one(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int64_t LocalField::ord_lambda(const LocalElt& a) const {
    int64_t best = kInfiniteOrd;
    for (int64_t j = 0; j < p_ - 1; ++j) {
        if (a.c[j] == 0) continue;
        int64_t v = 0, c = a.c[j];
        while (c % p_ == 0) c /= p_, ++v;
        best = std::min(best, j + (p_ - 1) * v);
    }
    return best;
}

std::vector<int64_t> LocalField::digits(const LocalElt& a) const {
    std::vector<int64_t> d(N_);
    std::vector<int64_t> c = a.c;
    for (int n = 0; n < N_; ++n) {
        d[n] = c[0] % p_;
        int64_t w = (c[0] - d[n]) / p_;
        for (int64_t j = 0; j < p_ - 2; ++j) c[j] = c[j + 1];
        c[p_ - 2] = mod_norm(-w, pM_);
    }
    return d;
}

LocalElt LocalField::from_digits(const std::vector<int64_t>& d) const {
    LocalElt x = zero();
    for (int64_t n = static_cast<int64_t>(d.size()) - 1; n >= 0; --n) {
        // x <- lambda * x + d[n]
        std::vector<int64_t> c(p_ - 1);
        c[0] = mod_norm(-p_ % pM_ * (x.c[p_ - 2] % pM_) % pM_, pM_);
        for (int64_t j = 1; j < p_ - 1; ++j) c[j] = x.c[j - 1];
        x.c = std::move(c);
        x.c[0] = mod_norm(x.c[0] + d[n], pM_);
    }
    return x;
}

LocalElt LocalField::unit_part(const LocalElt& a) const {
    int64_t ord = ord_lambda(a);
    if (ord == kInfiniteOrd) throw std::invalid_argument("unit part of zero");
    if (ord == 0) return a;
    std::vector<int64_t> d = digits(a);
    d.erase(d.begin(), d.begin() + ord);
    d.resize(N_, 0);
    return from_digits(d);
}

int64_t LocalField::teich(int64_t h) const { return teich_[mod_norm(h, p_)]; }

LocalElt LocalField::galois(int64_t h, const LocalElt& a) const {
    if (mod_norm(h, p_) == 0) throw std::invalid_argument("h must be a unit mod p");
    LocalElt r = a;
    int64_t mu = teich(h), muj = 1;
    for (int64_t j = 0; j < p_ - 1; ++j) {
        r.c[j] = static_cast<int64_t>(int128(r.c[j]) * muj % pM_);
        muj = static_cast<int64_t>(int128(muj) * mu % pM_);
    }
    return r;
}

void LocalField::lift_omega(int64_t branch_digit) {
    auto phi = [&](const LocalElt& x) {
        LocalElt acc = one();
        for (int64_t k = 1; k < p_; ++k) acc = add(mul(acc, x), one());
        return acc;
    };
    LocalElt x = one();
    for (int n = 1; n < N_; ++n) {
        if (is_zero(phi(x))) break;
        std::vector<int64_t> order;
        if (n == 1) {
            order.push_back(mod_norm(branch_digit, p_));
            for (int64_t d = 0; d < p_; ++d)
                if (d != mod_norm(branch_digit, p_)) order.push_back(d);
        } else {
            for (int64_t d = 0; d < p_; ++d) order.push_back(d);
        }
        int64_t best_d = -1, best_ord = -1;
        for (int64_t d : order) {
            LocalElt cand = add(x, mul(from_int(d), lambda_pow(n)));
            int64_t o = ord_lambda(phi(cand));
            if (o == kInfiniteOrd) o = N_ + 1;
            if (o > best_ord) {
                best_ord = o;
                best_d = d;
            }
        }
        x = add(x, mul(from_int(best_d), lambda_pow(n)));
    }
    if (!is_zero(phi(x)) || !is_zero(sub(pow(x, p_), one())) ||
        ord_lambda(sub(one(), x)) != 1)
        throw PrecisionError("omega lifting failed");
    omega_ = x;
}

LocalElt LocalField::exp_lambda_pow(int64_t i) const {
    assert(i >= 2 && i <= p_);
    LocalElt acc = one();
    int64_t vfact = 0, ufact = 1;  // k! = p^vfact * ufact mod p^M
    for (int64_t k = 1; k <= N_; ++k) {
        int64_t kk = k;
        while (kk % p_ == 0) kk /= p_, ++vfact;
        ufact = static_cast<int64_t>(int128(ufact) * (kk % pM_) % pM_);
        int64_t a = i * k / (p_ - 1), b = i * k % (p_ - 1);
        assert(a >= vfact);
        if (b + (p_ - 1) * (a - vfact) >= N_) continue;
        int64_t coef = mod_pow(p_, a - vfact, pM_);
        if (a % 2 == 1) coef = mod_norm(-coef, pM_);
        coef = static_cast<int64_t>(int128(coef) * mod_inv(ufact, pM_) % pM_);
        LocalElt term = zero();
        term.c[b] = coef;
        acc = add(acc, term);
    }
    return acc;
}

const LocalElt& LocalField::u(int64_t i) const {
    if (i < 0 || i > p_) throw std::invalid_argument("u index out of range");
    return u_[i];
}

bool LocalField::is_pth_power(const LocalElt& a) const {
    int64_t ord = ord_lambda(a);
    if (ord == kInfiniteOrd) throw std::invalid_argument("is_pth_power of zero");
    if (ord % p_ != 0) return false;
    if (N_ - ord < p_ + 2) throw PrecisionError("is_pth_power: insufficient precision");
    LocalElt y = unit_part(a);
    // x is a p-th power iff x/z^p = 1 mod lambda^(p+1) for one of the p(p-1)
    // candidates z; z^p mod lambda^(p+1) only depends on z mod lambda^2, and
    // 1 + lambda^(p+1)O consists of p-th powers (convergent binomial series).
    for (const LocalElt& zp_inv : pth_root_candidates_) {
        int64_t o = ord_lambda(sub(mul(y, zp_inv), one()));
        if (o >= p_ + 1) return true;
    }
    return false;
}

std::vector<int64_t> LocalField::unit_class(const LocalElt& a) const {
    int64_t ord = ord_lambda(a);
    if (ord == kInfiniteOrd) throw std::invalid_argument("unit_class of zero");
    std::vector<int64_t> cls(p_ + 1, 0);
    cls[0] = mod_norm(ord, p_);
    LocalElt y = unit_part(a);
    int64_t inv_pm1 = mod_inv(p_ - 1, p_);
    for (int64_t i = 0; i <= p_ - 2; ++i) {
        // Multiplicative projection onto the mu^i eigenspace.
        LocalElt yi = one();
        for (int64_t h = 1; h < p_; ++h) {
            int64_t m = mod_norm(mod_inv(mod_pow(h, i, p_), p_) * inv_pm1, p_);
            yi = mul(yi, pow(galois(h, y), m));
        }
        if (i == 0) {
            // Unit eigenspace 0 is spanned by u_{p-1}.
            bool found = false;
            for (int64_t c = 0; c < p_ && !found; ++c)
                if (is_pth_power(mul(yi, pow(u_inv_[p_ - 1], c)))) {
                    cls[p_ - 1] = c;
                    found = true;
                }
            if (!found) throw PrecisionError("unit_class: no exponent at eigenspace 0");
        } else if (i == 1) {
            // Eigenspace 1 is spanned by u_1 = omega and u_p.
            bool found = false;
            for (int64_t c1 = 0; c1 < p_ && !found; ++c1) {
                LocalElt y1 = mul(yi, pow(u_inv_[1], c1));
                for (int64_t cp = 0; cp < p_ && !found; ++cp)
                    if (is_pth_power(mul(y1, pow(u_inv_[p_], cp)))) {
                        cls[1] = c1;
                        cls[p_] = cp;
                        found = true;
                    }
            }
            if (!found) throw PrecisionError("unit_class: no exponent at eigenspace 1");
        } else {
            bool found = false;
            for (int64_t c = 0; c < p_ && !found; ++c)
                if (is_pth_power(mul(yi, pow(u_inv_[i], c)))) {
                    cls[i] = c;
                    found = true;
                }
            if (!found) throw PrecisionError("unit_class: no exponent at eigenspace " +
                                             std::to_string(i));
        }
    }
    return cls;
}

LocalElt LocalField::embed(const CycInt& x) const {
    if (x.p != p_) throw std::invalid_argument("cyclotomic degree mismatch");
    LocalElt acc = zero();
    for (int64_t j = p_ - 2; j >= 0; --j) {
        int64_t cj = static_cast<int64_t>(((x.c[j] % pM_) + pM_) % pM_);
        acc = add(mul(acc, omega_), from_int(cj));
    }
    if (is_zero(acc)) throw PrecisionError("embedded element vanishes to working precision");
    return acc;
}

}  // namespace fermatjac
