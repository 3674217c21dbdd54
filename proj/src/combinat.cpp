#include "combinat.hpp"
#include "error.hpp"

#include <mutex>

namespace braidlevel::combinat {

namespace {

// Triangular tables grown on demand. Each growth step recomputes nothing:
// rows only ever get appended.
class Triangle {
public:
    explicit Triangle(void (*fill_row)(std::vector<std::vector<BigInt>>&, unsigned long))
        : fill_row_(fill_row) {}

    BigInt get(unsigned long n, unsigned long k) {
        std::scoped_lock lock(mutex_);
        while (rows_.size() <= n) fill_row_(rows_, rows_.size());
        if (k >= rows_[n].size()) return 0;
        return rows_[n][k];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
    void (*fill_row_)(std::vector<std::vector<BigInt>>&, unsigned long);
};

void fill_binomial_row(std::vector<std::vector<BigInt>>& rows, unsigned long n) {
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;
    row[n] = 1;
    for (unsigned long k = 1; k < n; ++k)
        row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(row));
}

// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k), c(0,0) = 1.
void fill_stirling1_row(std::vector<std::vector<BigInt>>& rows, unsigned long n) {
    std::vector<BigInt> row(n + 1, 0);
    if (n == 0) {
        row[0] = 1;
    } else {
        for (unsigned long k = 1; k <= n; ++k) {
            row[k] = rows[n - 1][k - 1];
            if (k < n) row[k] += BigInt(n - 1) * rows[n - 1][k];
        }
    }
    rows.push_back(std::move(row));
}

// S(n,k) = S(n-1,k-1) + k S(n-1,k), S(0,0) = 1.
void fill_stirling2_row(std::vector<std::vector<BigInt>>& rows, unsigned long n) {
    std::vector<BigInt> row(n + 1, 0);
    if (n == 0) {
        row[0] = 1;
    } else {
        for (unsigned long k = 1; k <= n; ++k) {
            row[k] = rows[n - 1][k - 1];
            if (k <= n - 1) row[k] += BigInt(k) * rows[n - 1][k];
        }
    }
    rows.push_back(std::move(row));
}

// A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1) in the 1-based convention.
void fill_eulerian_row(std::vector<std::vector<BigInt>>& rows, unsigned long n) {
    std::vector<BigInt> row(n + 1, 0);
    if (n >= 1) {
        row[1] = 1;
        for (unsigned long k = 2; k <= n; ++k) {
            if (k < n) row[k] = BigInt(k) * rows[n - 1][k];
            row[k] += BigInt(n - k + 1) * rows[n - 1][k - 1];
        }
    }
    rows.push_back(std::move(row));
}

Triangle& binomial_table() {
    static Triangle t(fill_binomial_row);
    return t;
}
Triangle& stirling1_table() {
    static Triangle t(fill_stirling1_row);
    return t;
}
Triangle& stirling2_table() {
    static Triangle t(fill_stirling2_row);
    return t;
}
Triangle& eulerian_table() {
    static Triangle t(fill_eulerian_row);
    return t;
}

} // namespace

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    return binomial_table().get(n, k);
}

BigInt eulerian(unsigned long n, unsigned long k) {
    if (k < 1 || k > n) return 0;
    return eulerian_table().get(n, k);
}

BigInt stirling_first_unsigned(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    return stirling1_table().get(n, k);
}

BigInt stirling_first_signed(unsigned long n, unsigned long k) {
    BigInt c = stirling_first_unsigned(n, k);
    return ((n - k) % 2 == 0) ? c : -c;
}

BigInt stirling_second(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    return stirling2_table().get(n, k);
}

BigInt multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
    unsigned long sum = 0;
    BigInt result = 1;
    for (unsigned long p : parts) {
        sum += p;
        if (sum > n)
            throw Error(ErrorKind::InvalidInput, "multinomial parts exceed n");
        result *= binomial(sum, p);
    }
    if (sum != n)
        throw Error(ErrorKind::InvalidInput, "multinomial parts do not sum to n");
    return result;
}

void for_each_composition(unsigned long n, unsigned long l,
                          const std::function<bool(const std::vector<unsigned long>&)>& visit) {
    if (n == 0 && l == 0) {
        visit({});
        return;
    }
    if (l == 0 || l > n) return;

    // Start at (1,...,1,n-l+1) and step through lexicographic successors.
    std::vector<unsigned long> c(l, 1);
    c[l - 1] = n - l + 1;
    for (;;) {
        if (!visit(c)) return;
        // Successor: rightmost position i whose suffix sum can give up 1 to
        // position i-1 and still fill c[i..l-1] with positive parts; the
        // suffix resets to (1,...,1,rest).
        std::size_t i = l;
        unsigned long tail = 0;
        bool advanced = false;
        while (i-- > 1) {
            tail += c[i];
            if (tail > l - i) {
                c[i - 1] += 1;
                for (std::size_t j = i; j + 1 < l; ++j) c[j] = 1;
                c[l - 1] = tail - 1 - (l - 1 - i);
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

std::vector<std::vector<unsigned long>> compositions(unsigned long n, unsigned long l) {
    std::vector<std::vector<unsigned long>> out;
    for_each_composition(n, l, [&](const std::vector<unsigned long>& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

} // namespace braidlevel::combinat
