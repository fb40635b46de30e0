#include "unimap/enumeration.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace unimap {

namespace {

Count binomial(int n, int k) {
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Count power(int base, int e) {
    Count r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Terms shared by the sums: T(k) 3^(n-k) C(2n, n-k) for k = 1..n.
std::vector<Count> core_terms(int n) {
    const std::vector<Count> t = central_trinomials(n);
    std::vector<Count> out(n + 1);
    Count c = binomial(2 * n, n - 1);
    Count p = power(3, n - 1);
    for (int k = 1; k <= n; ++k) {
        out[k] = t[k] * p * c;
        if (k < n) {
            c = c * (n - k) / (n + k + 1);
            p /= 3;
        }
    }
    return out;
}

}  // namespace

std::vector<Count> central_trinomials(int k) {
    std::vector<Count> t(k + 1);
    t[0] = 1;
    if (k >= 1) t[1] = 1;
    for (int j = 2; j <= k; ++j) t[j] = ((2 * j - 1) * t[j - 1] + 3 * (j - 1) * t[j - 2]) / j;
    return t;
}

Count central_trinomial(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    Count sum = 0;
    Count fk;
    mpz_fac_ui(fk.get_mpz_t(), k);
    for (int j = 0; 2 * j <= k; ++j) {
        Count fj, fr;
        mpz_fac_ui(fj.get_mpz_t(), j);
        mpz_fac_ui(fr.get_mpz_t(), k - 2 * j);
        sum += fk / (fj * fj * fr);
    }
    return sum;
}

Count forest_count(int a, int b) {
    if (a < 1 || b < 0) throw std::invalid_argument("forest_count needs a >= 1, b >= 0");
    const Count num = a * binomial(2 * b + a, b);
    if (num % (2 * b + a) != 0) throw std::logic_error("forest count is not integral");
    return num / (2 * b + a);
}

Count count_marked(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("count_marked needs 1 <= k <= n");
    const Count product = central_trinomial(k) * power(3, n - k) * forest_count(2 * k, n - k);
    mpq_class ratio(k, n);
    ratio.canonicalize();
    const mpq_class prob = ratio * power(3, n - k) * central_trinomial(k) * binomial(2 * n, n - k);
    if (prob != mpq_class(product)) throw std::logic_error("count_marked: product and probabilistic forms disagree");
    return product;
}

std::vector<Count> cycle_length_weights(int n, bool marked) {
    std::vector<Count> w = core_terms(n);
    for (int k = 1; k <= n; ++k) {
        if (marked) {
            w[k] *= k;
            if (w[k] % n != 0) throw std::logic_error("marked count is not integral");
            w[k] /= n;
        } else {
            w[k] *= 2;
        }
    }
    w[0] = 0;
    return w;
}

namespace {

// Streams T(k) 3^(n-k) C(2n, n-k) for k = 1..n into f(k, term).
template <class F>
void for_each_core_term(int n, F&& f) {
    Count t_prev = 1, t_cur = 1;
    Count q;
    mpz_bin_uiui(q.get_mpz_t(), 2 * n, n - 1);
    q *= power(3, n - 1);
    for (int k = 1; k <= n; ++k) {
        if (k >= 2) {
            Count t_next = ((2 * k - 1) * t_cur + 3 * (k - 1) * t_prev) / k;
            t_prev = std::move(t_cur);
            t_cur = std::move(t_next);
        }
        f(k, t_cur * q);
        if (k < n) q = q * (n - k) / (3 * (n + k + 1));
    }
}

}  // namespace

Count count_unicycles(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Count s = 0;
    for_each_core_term(n, [&](int, const Count& t) { s += t; });
    return 2 * s;
}

Count count_marked_total(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Count s = 0;
    for_each_core_term(n, [&](int k, const Count& t) { s += k * t; });
    if (s % n != 0) throw std::logic_error("marked total is not integral");
    return s / n;
}

double limit_ratio_U() {
    using namespace boost::math::double_constants;
    return std::sqrt(3.0) * boost::math::tgamma(0.25) / (2 * pi);
}

double limit_ratio_Umarked() {
    using namespace boost::math::double_constants;
    return std::sqrt(3.0) * boost::math::tgamma(0.75) / (4 * pi);
}

double limit_ratio_bias() { return std::sqrt(2.0) * boost::math::tgamma(0.25) / boost::math::tgamma(0.75); }

namespace {

double ratio_to_double(const Count& num, const Count& den) {
    mpf_class q(num, 256);
    q /= mpf_class(den, 256);
    return q.get_d();
}

}  // namespace

AsymptoticReport asymptotic_diagnostics(int n) {
    Count u = 0, um = 0;
    for_each_core_term(n, [&](int k, const Count& t) {
        u += t;
        um += k * t;
    });
    u *= 2;
    um /= n;
    const Count twelve = power(12, n);
    AsymptoticReport r;
    r.n = n;
    r.ratio_U = ratio_to_double(u, twelve) * std::pow(n, 0.25);
    r.ratio_Umarked = ratio_to_double(um, twelve) * std::pow(n, 0.75);
    r.ratio_bias = ratio_to_double(u, um) / std::sqrt(2.0 * n);
    return r;
}

std::vector<AsymptoticReport> asymptotic_diagnostics(const std::vector<int>& ns) {
    std::vector<AsymptoticReport> out;
    for (int n : ns) out.push_back(asymptotic_diagnostics(n));
    return out;
}

}  // namespace unimap
