#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace viracomb {

using Int = boost::multiprecision::cpp_int;

// Power series in q known through q^order, exact integer coefficients.
class QSeries {
public:
    QSeries() : QSeries(0) {}
    explicit QSeries(int order);
    explicit QSeries(std::vector<Int> coeffs);

    static QSeries one(int order);
    static QSeries monomial(int power, const Int& coeff, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int k) const { return c_[k]; }
    Int& operator[](int k) { return c_[k]; }
    const std::vector<Int>& coeffs() const { return c_; }

    QSeries truncated(int order) const;
    bool is_zero() const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator-(QSeries a);
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }

    std::string csv() const;
    std::string pretty() const;

private:
    std::vector<Int> c_;
};

QSeries invert(const QSeries& a);

// (q)_n truncated at the given order.
QSeries pochhammer(int n, int order);

// 1/(q)_infinity, i.e. the partition generating function.
QSeries pochhammer_inf_inverse(int order);

// 1/(q)_n.
QSeries pochhammer_inverse(int n, int order);

// Gaussian binomial [m choose n]_q; zero unless 0 <= n <= m.
QSeries q_binomial(int m, int n, int order);

// prod over k >= 1 with (k mod modulus) in residues of 1/(1 - q^k).
QSeries modular_product(int modulus, const std::vector<int>& residues, int order);

// Counts of weights: coefficient of q^w is the number of entries equal to w.
QSeries series_from_weights(const std::vector<long long>& weights, int order);

struct Mismatch {
    int power;
    Int left;
    Int right;
};

// First coefficient where a and b differ, compared through min order.
std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b);

QSeries parse_csv_series(const std::string& text);

}  // namespace viracomb
