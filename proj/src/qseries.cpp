#include "viracomb/qseries.hpp"

#include "viracomb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace viracomb {

QSeries::QSeries(int order) {
    require(order >= 0, "series order must be nonnegative");
    c_.assign(order + 1, Int(0));
}

QSeries::QSeries(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    require(!c_.empty(), "series needs at least one coefficient");
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::monomial(int power, const Int& coeff, int order) {
    QSeries s(order);
    if (power >= 0 && power <= order) s.c_[power] = coeff;
    return s;
}

QSeries QSeries::truncated(int order) const {
    require(order <= this->order(), "cannot extend a series beyond its known order");
    return QSeries(std::vector<Int>(c_.begin(), c_.begin() + order + 1));
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

QSeries& QSeries::operator+=(const QSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order(), b.order());
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    *this = *this * o;
    return *this;
}

QSeries operator-(QSeries a) {
    for (auto& v : a.c_) v = -v;
    return a;
}

std::string QSeries::csv() const {
    std::ostringstream os;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) os << ',';
        os << c_[k];
    }
    return os.str();
}

std::string QSeries::pretty() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Int& v = c_[k];
        if (v == 0) continue;
        Int mag = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) os << '-';
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'q';
        if (k > 1) os << '^' << k;
    }
    if (first) os << '0';
    os << " + O(q^" << c_.size() << ')';
    return os.str();
}

QSeries invert(const QSeries& a) {
    require(a[0] == 1 || a[0] == -1, "series inverse needs constant term +1 or -1");
    int n = a.order();
    QSeries b(n);
    b[0] = a[0];  // 1/c0 == c0 for c0 = +-1
    for (int k = 1; k <= n; ++k) {
        Int acc = 0;
        for (int j = 1; j <= k; ++j) {
            if (a[j] != 0) acc += a[j] * b[k - j];
        }
        b[k] = -a[0] * acc;
    }
    return b;
}

QSeries pochhammer(int n, int order) {
    require(n >= 0, "pochhammer index must be nonnegative");
    QSeries s = QSeries::one(order);
    for (int i = 1; i <= n && i <= order; ++i) {
        // multiply by (1 - q^i) in place, high to low
        for (int k = order; k >= i; --k) s[k] -= s[k - i];
    }
    return s;
}

QSeries pochhammer_inverse(int n, int order) {
    require(n >= 0, "pochhammer index must be nonnegative");
    QSeries s = QSeries::one(order);
    for (int i = 1; i <= n && i <= order; ++i) {
        for (int k = i; k <= order; ++k) s[k] += s[k - i];
    }
    return s;
}

QSeries pochhammer_inf_inverse(int order) {
    return pochhammer_inverse(order, order);
}

QSeries q_binomial(int m, int n, int order) {
    if (n < 0 || m < 0 || n > m) return QSeries(order);
    // partitions in an n x (m-n) box: row[j] holds [j+w choose j] as w grows
    int w = m - n;
    std::vector<QSeries> row(n + 1, QSeries::one(order));
    for (int width = 1; width <= w; ++width) {
        // [width + j choose j] = [width - 1 + j choose j] + q^{width} [width + j - 1 choose j - 1]
        for (int j = 1; j <= n; ++j) {
            QSeries& cur = row[j];
            const QSeries& prev = row[j - 1];
            for (int k = order; k >= width; --k) cur[k] += prev[k - width];
        }
    }
    return row[n];
}

QSeries modular_product(int modulus, const std::vector<int>& residues, int order) {
    require(modulus > 0, "modulus must be positive");
    std::vector<bool> allowed(modulus, false);
    for (int r : residues) allowed[((r % modulus) + modulus) % modulus] = true;
    QSeries s = QSeries::one(order);
    for (int k = 1; k <= order; ++k) {
        if (!allowed[k % modulus]) continue;
        for (int j = k; j <= order; ++j) s[j] += s[j - k];
    }
    return s;
}

QSeries series_from_weights(const std::vector<long long>& weights, int order) {
    QSeries s(order);
    for (long long w : weights) {
        require(w >= 0, "weights must be nonnegative");
        if (w <= order) s[static_cast<int>(w)] += 1;
    }
    return s;
}

std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k) {
        if (a[k] != b[k]) return Mismatch{k, a[k], b[k]};
    }
    return std::nullopt;
}

QSeries parse_csv_series(const std::string& text) {
    std::vector<Int> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            c.emplace_back(item);
        } catch (const std::exception&) {
            throw InvalidArgument("bad series coefficient: " + item);
        }
    }
    return QSeries(std::move(c));
}

}  // namespace viracomb
