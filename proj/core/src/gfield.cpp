#include "orbitflags/gfield.hpp"

#include <algorithm>
#include <numeric>

namespace orbitflags {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t(1) << 24;

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Polynomials over F_p, little endian coefficients, no trailing zeros.
using PolyFp = std::vector<std::uint32_t>;

void fp_trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp fp_mod(PolyFp a, const PolyFp& b, std::int64_t p) {
    // b monic
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = a[shift + i] + (p - 1) * lead % p * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>(t % p);
        }
        fp_trim(a);
    }
    return a;
}

PolyFp fp_from_counter(std::uint64_t v, int deg, std::int64_t p) {
    // the most significant counter digit becomes the constant term, so
    // increasing counters enumerate coefficient tuples (c_0, c_1, ...)
    // in lexicographic order
    PolyFp f(deg + 1, 0);
    f[deg] = 1;
    for (int j = deg - 1; j >= 0; --j) {
        f[j] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return f;
}

bool fp_irreducible(const PolyFp& f, std::int64_t p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    if (f[0] == 0) return false;
    // trial division by all monic polynomials of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            PolyFp g = fp_from_counter(v, d, p);
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FieldCtx::FieldCtx(std::int64_t p, int e, int n) : p_(p), e_(e), n_(n) {
    if (!is_prime(p)) throw InvalidArgument("p must be prime");
    if (e < 1) throw InvalidArgument("e must be at least 1");
    if (n < 1) throw InvalidArgument("n must be at least 1");

    std::uint64_t size = 1;
    for (int i = 0; i < e * n; ++i) {
        size *= static_cast<std::uint64_t>(p);
        if (size > kMaxFieldSize) throw ResourceCap("field size p^(e*n) exceeds 2^24");
    }
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= static_cast<std::uint64_t>(p);
    order_ = size - 1;

    qpow_.resize(2 * n + 1);
    qpow_[0] = 1;
    for (int j = 1; j <= 2 * n; ++j) qpow_[j] = qpow_[j - 1] * q_;

    build_base_field();
    build_top_field();
}

void FieldCtx::build_base_field() {
    if (e_ == 1) return;
    for (std::uint64_t v = 0; v < q_; ++v) {
        PolyFp f = fp_from_counter(v, e_, p_);
        if (fp_irreducible(f, p_)) {
            mod_base_ = f;
            break;
        }
    }
    // a generator of F_q^* gives log tables for fast scalar arithmetic
    fq_log_.assign(q_, -1);
    fq_antilog_.assign(q_ - 1, 0);
    for (std::uint32_t g = 2; g < q_; ++g) {
        std::uint32_t cur = 1;
        std::uint64_t ord = 0;
        do {
            cur = fq_mul_slow(cur, g);
            ++ord;
        } while (cur != 1);
        if (ord == q_ - 1) {
            cur = 1;
            for (std::uint64_t i = 0; i < q_ - 1; ++i) {
                fq_antilog_[i] = cur;
                fq_log_[cur] = static_cast<std::int32_t>(i);
                cur = fq_mul_slow(cur, g);
            }
            return;
        }
    }
    throw Error("no generator found for base field");
}

std::uint32_t FieldCtx::fq_mul_slow(std::uint32_t a, std::uint32_t b) const {
    // schoolbook product of base-p digit polynomials, reduced by mod_base_
    PolyFp pa, pb;
    for (std::uint32_t v = a; v != 0; v /= p_) pa.push_back(v % p_);
    for (std::uint32_t v = b; v != 0; v /= p_) pb.push_back(v % p_);
    if (pa.empty() || pb.empty()) return 0;
    PolyFp prod(pa.size() + pb.size() - 1, 0);
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % p_);
    prod = fp_mod(std::move(prod), mod_base_, p_);
    std::uint32_t out = 0;
    for (std::size_t i = prod.size(); i-- > 0;) out = static_cast<std::uint32_t>(out * p_ + prod[i]);
    return out;
}

namespace {

// Polynomials over F_q, little endian, coefficients encoded in [0, q).
using PolyFq = std::vector<std::uint32_t>;

void fq_trim(PolyFq& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

} // namespace

void FieldCtx::build_top_field() {
    const std::uint64_t N = order_;
    const std::vector<std::uint64_t> primes = prime_factors(N);

    auto polymod = [&](PolyFq a, const PolyFq& f) {
        // f monic
        fq_trim(a);
        while (a.size() >= f.size()) {
            std::uint32_t lead = a.back();
            if (lead != 0) {
                std::size_t shift = a.size() - f.size();
                for (std::size_t i = 0; i + 1 < f.size(); ++i)
                    a[shift + i] = fq_sub(a[shift + i], fq_mul(lead, f[i]));
            }
            a.pop_back();
            fq_trim(a);
        }
        return a;
    };

    auto mulmod = [&](const PolyFq& a, const PolyFq& b, const PolyFq& f) {
        if (a.empty() || b.empty()) return PolyFq{};
        PolyFq prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = fq_add(prod[i + j], fq_mul(a[i], b[j]));
        }
        return polymod(std::move(prod), f);
    };

    auto pow_x = [&](std::uint64_t k, const PolyFq& f) {
        PolyFq result{1};
        PolyFq base = polymod(PolyFq{0, 1}, f);
        while (k > 0) {
            if (k & 1) result = mulmod(result, base, f);
            base = mulmod(base, base, f);
            k >>= 1;
        }
        return result;
    };

    auto is_primitive = [&](const PolyFq& f) {
        if (f[0] == 0) return false; // divisible by x
        PolyFq onep{1};
        if (pow_x(N, f) != onep) return false;
        for (std::uint64_t ell : primes) {
            if (pow_x(N / ell, f) == onep) return false;
        }
        return true;
    };

    std::uint64_t count = qpow_[n_ - 1] * (q_ - 1); // c_0 in [1, q), rest free
    bool found = false;
    for (std::uint64_t v = 0; v < count && !found; ++v) {
        // enumerate (c_0 - 1, c_1, ..., c_{n-1}) lexicographically, c_0 >= 1
        // since a primitive polynomial has a nonzero constant term
        PolyFq f(n_ + 1, 0);
        f[n_] = 1;
        std::uint64_t rest = v;
        for (int j = n_ - 1; j >= 1; --j) {
            f[j] = static_cast<std::uint32_t>(rest % q_);
            rest /= q_;
        }
        f[0] = static_cast<std::uint32_t>(rest + 1);
        if (is_primitive(f)) {
            mod_top_ = f;
            found = true;
        }
    }
    if (!found) throw Error("no primitive modulus found");

    antilog_.assign(order_, 0);
    log_.assign(order_ + 1, -1);
    std::uint64_t cur = 1; // packed coords of alpha^0
    for (std::uint64_t i = 0; i < order_; ++i) {
        antilog_[i] = static_cast<std::uint32_t>(cur);
        if (log_[cur] != -1) throw Error("modulus is not primitive");
        log_[cur] = static_cast<std::int32_t>(i);
        cur = mul_by_alpha(cur);
    }
    if (cur != 1) throw Error("multiplicative group does not close");
}

std::uint64_t FieldCtx::mul_by_alpha(std::uint64_t v) const {
    std::uint64_t shifted = v * q_;
    std::uint32_t overflow = static_cast<std::uint32_t>(shifted / qpow_[n_]);
    shifted %= qpow_[n_];
    if (overflow == 0) return shifted;
    if (p_ == 2) {
        // subtracting h*f_j is xor of scaled modulus digits
        std::uint64_t adj = 0;
        for (int j = 0; j < n_; ++j)
            adj += static_cast<std::uint64_t>(fq_mul(overflow, mod_top_[j])) * qpow_[j];
        return shifted ^ adj;
    }
    std::uint64_t out = 0;
    for (int j = 0; j < n_; ++j) {
        std::uint32_t d = static_cast<std::uint32_t>((shifted / qpow_[j]) % q_);
        d = fq_sub(d, fq_mul(overflow, mod_top_[j]));
        out += static_cast<std::uint64_t>(d) * qpow_[j];
    }
    return out;
}

std::uint64_t FieldCtx::q_pow(int m) const {
    if (m < 0 || m > n_) throw InvalidArgument("exponent out of range");
    return qpow_[m];
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return from_packed(vec_add(antilog_[a.exp_], antilog_[b.exp_]));
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldCtx::neg(FieldElement a) const {
    if (a.is_zero() || p_ == 2) return a;
    return from_packed(vec_scale(antilog_[a.exp_], fq_neg(1)));
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement();
    return FieldElement(mod_order(a.exp_ + b.exp_));
}

FieldElement FieldCtx::inv(FieldElement a) const {
    if (a.is_zero()) throw InvalidArgument("cannot invert zero");
    return FieldElement(mod_order(-a.exp_));
}

FieldElement FieldCtx::pow(FieldElement a, std::int64_t k) const {
    if (a.is_zero()) {
        if (k > 0) return FieldElement();
        if (k == 0) return one();
        throw InvalidArgument("negative power of zero");
    }
    return FieldElement(mod_order(mod_order(k) * a.exp_));
}

std::uint64_t FieldCtx::multiplicative_order(FieldElement a) const {
    if (a.is_zero()) throw InvalidArgument("zero has no multiplicative order");
    return order_ / std::gcd(order_, static_cast<std::uint64_t>(a.exp_));
}

FieldElement FieldCtx::subfield_generator(int m) const {
    if (m < 1 || n_ % m != 0) throw InvalidArgument("m must divide n");
    return FieldElement(mod_order(static_cast<std::int64_t>(order_ / (qpow_[m] - 1))));
}

std::vector<std::uint32_t> FieldCtx::to_coords(FieldElement a) const {
    std::vector<std::uint32_t> out(n_, 0);
    if (a.is_zero()) return out;
    std::uint64_t v = antilog_[a.exp_];
    for (int j = 0; j < n_; ++j) {
        out[j] = static_cast<std::uint32_t>(v % q_);
        v /= q_;
    }
    return out;
}

FieldElement FieldCtx::from_coords(const std::vector<std::uint32_t>& coords) const {
    if (static_cast<int>(coords.size()) != n_) throw InvalidArgument("coordinate vector has wrong length");
    std::uint64_t v = 0;
    for (int j = n_ - 1; j >= 0; --j) {
        if (coords[j] >= q_) throw InvalidArgument("coordinate out of range");
        v = v * q_ + coords[j];
    }
    return from_packed(v);
}

std::uint64_t FieldCtx::packed(FieldElement a) const {
    return a.is_zero() ? 0 : antilog_[a.exp_];
}

FieldElement FieldCtx::from_packed(std::uint64_t v) const {
    if (v == 0) return FieldElement();
    if (v >= qpow_[n_]) throw InvalidArgument("packed value out of range");
    return FieldElement(log_[v]);
}

std::uint32_t FieldCtx::fq_add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) + b) % p_);
    std::uint32_t out = 0, mult = 1;
    while (a != 0 || b != 0) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::fq_neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    std::uint32_t out = 0, mult = 1;
    while (a != 0) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : static_cast<std::uint32_t>(p_ - d)) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldCtx::fq_sub(std::uint32_t a, std::uint32_t b) const { return fq_add(a, fq_neg(b)); }

std::uint32_t FieldCtx::fq_mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    return fq_antilog_[(std::uint64_t(fq_log_[a]) + fq_log_[b]) % (q_ - 1)];
}

std::uint32_t FieldCtx::fq_inv(std::uint32_t a) const {
    if (a == 0) throw InvalidArgument("cannot invert zero");
    if (e_ == 1) {
        // extended euclid on (a, p)
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t quo = r / new_r;
            std::int64_t tmp = t - quo * new_t;
            t = new_t; new_t = tmp;
            tmp = r - quo * new_r;
            r = new_r; new_r = tmp;
        }
        return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
    }
    std::uint64_t lg = fq_log_[a];
    return fq_antilog_[(q_ - 1 - lg) % (q_ - 1)];
}

std::uint64_t FieldCtx::vec_add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t out = 0, mult = 1;
    while (a != 0 || b != 0) {
        out += fq_add(static_cast<std::uint32_t>(a % q_), static_cast<std::uint32_t>(b % q_)) * mult;
        a /= q_;
        b /= q_;
        mult *= q_;
    }
    return out;
}

std::uint64_t FieldCtx::vec_scale(std::uint64_t a, std::uint32_t c) const {
    if (c == 0) return 0;
    if (c == 1) return a;
    std::uint64_t out = 0, mult = 1;
    while (a != 0) {
        out += static_cast<std::uint64_t>(fq_mul(static_cast<std::uint32_t>(a % q_), c)) * mult;
        a /= q_;
        mult *= q_;
    }
    return out;
}

std::uint32_t FieldCtx::vec_digit(std::uint64_t a, int j) const {
    return static_cast<std::uint32_t>((a / qpow_[j]) % q_);
}

std::uint64_t FieldCtx::vec_set_digit(std::uint64_t a, int j, std::uint32_t c) const {
    std::uint32_t old = vec_digit(a, j);
    return a - std::uint64_t(old) * qpow_[j] + std::uint64_t(c) * qpow_[j];
}

} // namespace orbitflags
