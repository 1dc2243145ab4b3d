#include "kacq/kac.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "kacq/errors.hpp"
#include "kacq/partition.hpp"

namespace kacq {

namespace {

struct PartitionData {
    int weight;
    long self_pairing;
    long b_shift;     // sum_k m_k (m_k + 1) / 2
    QPolynomial den;  // prod_k prod_{j<=m_k} (q^j - 1)
};

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w)
        for (auto& p : partitions_of(w))
            out.push_back(std::move(p));
    return out;
}

} // namespace

XSeries hua_series(const Quiver& q, const DimVector& bound) {
    if (bound.size() != q.num_vertices())
        throw InputError("bound has the wrong number of entries for the quiver");
    const std::size_t n = q.num_vertices();

    std::vector<std::vector<Partition>> parts(n);
    std::vector<std::vector<PartitionData>> data(n);
    for (std::size_t v = 0; v < n; ++v) {
        parts[v] = partitions_up_to(bound[v]);
        for (const auto& p : parts[v]) {
            PartitionData d{p.weight(), hua_pairing(p, p), 0, QPolynomial(1)};
            for (int m : p.multiplicities()) {
                d.b_shift += static_cast<long>(m) * (m + 1) / 2;
                for (int j = 1; j <= m; ++j)
                    d.den *= QPolynomial::monomial(1, static_cast<std::size_t>(j)) - QPolynomial(1);
            }
            data[v].push_back(std::move(d));
        }
    }

    // pairing[a][x][y] = <parts[src][x], parts[dst][y]>
    std::vector<std::vector<std::vector<long>>> pairing;
    for (const auto& a : q.arrows()) {
        auto& table = pairing.emplace_back();
        for (const auto& ps : parts[a.source]) {
            auto& row = table.emplace_back();
            for (const auto& pt : parts[a.target])
                row.push_back(hua_pairing(ps, pt));
        }
    }

    XSeries series(bound);
    std::vector<std::size_t> choice(n, 0);
    std::vector<int> key(n, 0);
    while (true) {
        long exponent = 0;
        QPolynomial den(1);
        for (std::size_t v = 0; v < n; ++v) {
            const auto& d = data[v][choice[v]];
            key[v] = d.weight;
            exponent += d.b_shift - d.self_pairing;
            if (!d.den.is_constant())
                den *= d.den;
        }
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            const auto& arrow = q.arrows()[a];
            exponent += pairing[a][choice[arrow.source]][choice[arrow.target]];
        }
        QRational term = exponent >= 0
                             ? QRational(QPolynomial::monomial(1, static_cast<std::size_t>(exponent)), den)
                             : QRational(QPolynomial(1), den.shifted(static_cast<std::size_t>(-exponent)));
        series.add_to(DimVector(key), term);

        std::size_t v = n;
        while (v-- > 0) {
            if (++choice[v] < parts[v].size())
                break;
            choice[v] = 0;
        }
        if (v == static_cast<std::size_t>(-1))
            break;
    }
    return series;
}

QPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha) {
    if (alpha.size() != q.num_vertices())
        throw InputError("dimension vector has the wrong number of entries for the quiver");
    if (alpha.is_zero())
        throw InputError("kac_polynomial needs a non-zero dimension vector");

    XSeries log_series = formal_log(hua_series(q, alpha));

    // Only the coefficient at alpha of the plethystic log is needed:
    // sum over d dividing every entry of mu(d)/d * adams_d(log S)[alpha/d].
    int g = 0;
    for (int e : alpha.entries())
        g = std::gcd(g, e);
    QRational coefficient;
    for (int d = 1; d <= g; ++d) {
        if (g % d)
            continue;
        int mu = moebius(static_cast<unsigned>(d));
        if (mu == 0)
            continue;
        std::vector<int> reduced = alpha.entries();
        for (auto& e : reduced)
            e /= d;
        QRational c = log_series.coeff(DimVector(std::move(reduced)));
        if (!c.is_zero())
            coefficient += c.adams(static_cast<unsigned>(d)) * QRational::fraction(mu, d);
    }
    coefficient *= QRational(QPolynomial::q() - QPolynomial(1));
    if (!coefficient.is_polynomial())
        throw InternalError("Kac coefficient for " + alpha.to_string() + " is not a polynomial: " +
                            coefficient.render());
    return coefficient.numerator();
}

mpz_class kac_at_one(const Quiver& q, const DimVector& alpha) {
    return kac_polynomial(q, alpha).evaluate(1);
}

// ---------------------------------------------------------------------------

std::string sorted_dims_key(const Quiver& q, const DimVector& alpha) {
    if (alpha.size() != q.num_vertices())
        throw InputError("dimension vector has the wrong number of entries for the quiver");
    std::vector<int> sorted;
    for (std::size_t v : q.sorted_vertex_order())
        sorted.push_back(alpha[v]);
    return DimVector(std::move(sorted)).to_string();
}

KacStore::KacStore(std::filesystem::path file) : file_(std::move(file)), persistent_(true) {
    load();
}

void KacStore::load() {
    std::ifstream in(file_);
    if (!in)
        return;
    std::string line;
    while (std::getline(in, line)) {
        auto t1 = line.find('\t');
        if (t1 == std::string::npos)
            continue;
        auto t2 = line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
            continue;
        std::string hash = line.substr(0, t1);
        std::string dims = line.substr(t1 + 1, t2 - t1 - 1);
        try {
            DimVector::parse(dims);
            entries_[{hash, dims}] = QPolynomial::parse(line.substr(t2 + 1));
        } catch (const InputError&) {
            // corrupted line: ignored, the next lookup recomputes and appends
        }
    }
}

KacResult KacStore::get(const Quiver& q, const DimVector& alpha) {
    Key key{q.hash(), sorted_dims_key(q, alpha)};
    {
        std::lock_guard lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end())
            return {key.first, alpha, it->second, it->second.evaluate(1)};
    }
    QPolynomial p = kac_polynomial(q, alpha);
    {
        std::lock_guard lock(mutex_);
        ++computations_;
        entries_[key] = p;
        if (persistent_) {
            std::ofstream out(file_, std::ios::app);
            if (!out)
                throw InputError("cannot write cache file " + file_.string());
            out << key.first << '\t' << key.second << '\t' << p.render() << '\n';
        }
    }
    return {key.first, alpha, p, p.evaluate(1)};
}

std::uint64_t KacStore::computations() const {
    std::lock_guard lock(mutex_);
    return computations_;
}

std::size_t KacStore::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

KacResult cached_kac(KacStore& store, const Quiver& q, const DimVector& alpha) {
    return store.get(q, alpha);
}

} // namespace kacq
