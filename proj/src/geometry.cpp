#include "awg/geometry.hpp"

#include <climits>
#include <ostream>
#include <sstream>

namespace awg {

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::string str(s);
        if (str.empty()) throw Error("empty integer in '" + std::string(text) + "'");
        std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
        if (start == str.size()) throw Error("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < str.size(); ++i)
            if (str[i] < '0' || str[i] > '9') throw Error("malformed rational '" + std::string(text) + "'");
        if (str[0] == '+') str.erase(0, 1);
        return BigInt(str, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

BigInt floor_of(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long floor_div(long a, long m) { return (a - mod_floor(a, m)) / m; }

long to_long(const BigInt& x) {
    if (!x.fits_slong_p()) throw Error("integer " + x.get_str() + " does not fit in a machine word");
    return x.get_si();
}

long to_long(const Rational& x) {
    if (!is_integer(x)) throw Error("expected an integer, got " + to_string(x));
    return to_long(x.get_num());
}

AmbientVector::AmbientVector(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

AmbientVector AmbientVector::unit(std::size_t dim, std::size_t index) {
    AmbientVector v(dim);
    v[index] = 1;
    return v;
}

bool AmbientVector::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool AmbientVector::is_integral() const {
    for (const auto& c : coords_)
        if (!is_integer(c)) return false;
    return true;
}

static void require_same_size(const AmbientVector& a, const AmbientVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

AmbientVector& AmbientVector::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

AmbientVector AmbientVector::operator-() const {
    AmbientVector r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

bool operator==(const AmbientVector& a, const AmbientVector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.coords_[i] != b.coords_[i]) return false;
    return true;
}

std::strong_ordering operator<=>(const AmbientVector& a, const AmbientVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string to_string(const AmbientVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const AmbientVector& v) { return os << to_string(v); }

Rational dot_standard(const AmbientVector& x, const AmbientVector& y) {
    require_same_size(x, y);
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

std::optional<std::vector<Rational>> solve_in_span(std::span<const AmbientVector> columns,
                                                   const AmbientVector& rhs) {
    const std::size_t k = columns.size();
    const std::size_t rows = rhs.size();
    // Augmented matrix, row-major: rows x (k + 1).
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1));
    for (std::size_t c = 0; c < k; ++c) {
        require_same_size(columns[c], rhs);
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = columns[c][r];
    }
    for (std::size_t r = 0; r < rows; ++r) m[r][k] = rhs[r];

    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = pivot_row;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) throw Error("solve_in_span: columns are linearly dependent");
        std::swap(m[p], m[pivot_row]);
        Rational inv = 1 / m[pivot_row][c];
        for (std::size_t j = c; j <= k; ++j) m[pivot_row][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = c; j <= k; ++j) m[r][j] -= f * m[pivot_row][j];
        }
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows; ++r)
        if (m[r][k] != 0) return std::nullopt;
    std::vector<Rational> x(k);
    for (std::size_t c = 0; c < k; ++c) x[c] = m[c][k];
    return x;
}

Rational rational_gcd(std::span<const Rational> values) {
    BigInt num = 0, den = 1;
    for (const auto& v : values) {
        if (v == 0) continue;
        // gcd(a/b, c/d) = gcd(a d, c b) / (b d), computed incrementally.
        BigInt a = abs(v.get_num()), b = v.get_den();
        BigInt n1 = num * b, n2 = a * den, g;
        mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
        num = g;
        den = den * b;
        Rational r(num, den);
        r.canonicalize();
        num = r.get_num();
        den = r.get_den();
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace awg
