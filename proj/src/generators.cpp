// Example families and seeded random configurations.

#include "galedeg/generators.hpp"

#include <algorithm>
#include <set>

#include "galedeg/errors.hpp"
#include "galedeg/io.hpp"
#include "galedeg/separation.hpp"

namespace galedeg {

namespace {

PointConfiguration from_int_rows(std::size_t dim, const std::vector<std::vector<long>>& rows) {
    std::vector<QVec> pts;
    pts.reserve(rows.size());
    std::vector<int> labels;
    for (const std::vector<long>& r : rows) {
        QVec v;
        v.reserve(dim);
        for (long x : r) v.push_back(Rat(x));
        pts.push_back(std::move(v));
        labels.push_back(static_cast<int>(labels.size()));
    }
    return PointConfiguration::trusted(std::move(labels), std::move(pts), dim);
}

// Join: a sits at (a, 0, 0), b at (0, b, 1); labels of b are shifted past a's.
PointConfiguration join(const PointConfiguration& a, const PointConfiguration& b) {
    std::size_t da = a.dim(), db = b.dim();
    std::size_t dim = da + db + 1;
    std::vector<QVec> pts;
    std::vector<int> labels;
    for (std::size_t i = 0; i < a.count(); ++i) {
        QVec v(dim, Rat(0));
        for (std::size_t j = 0; j < da; ++j) v[j] = a.at(i)[j];
        pts.push_back(std::move(v));
        labels.push_back(static_cast<int>(labels.size()));
    }
    for (std::size_t i = 0; i < b.count(); ++i) {
        QVec v(dim, Rat(0));
        for (std::size_t j = 0; j < db; ++j) v[da + j] = b.at(i)[j];
        v[dim - 1] = Rat(1);
        pts.push_back(std::move(v));
        labels.push_back(static_cast<int>(labels.size()));
    }
    return PointConfiguration::trusted(std::move(labels), std::move(pts), dim);
}

} // namespace

PointConfiguration pentagon_config() {
    return from_int_rows(2, {{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}});
}

PointConfiguration pentagon_join_config(int k) {
    require_input(k >= 1 && k <= 3, "pentagon-join: the factor count must be 1, 2 or 3");
    PointConfiguration cur = pentagon_config();
    for (int i = 1; i < k; ++i) cur = join(cur, pentagon_config());
    return cur;
}

PointConfiguration lifted_config(int d) {
    require_input(d >= 1, "lifted: the base dimension must be at least 1");
    require_input(d <= 20, "lifted: the base dimension must be at most 20");
    std::size_t dim = static_cast<std::size_t>(d) + 1;
    std::vector<std::vector<long>> rows;
    rows.push_back(std::vector<long>(dim, 0));
    for (int i = 0; i < d; ++i) {
        std::vector<long> r(dim, 0);
        r[i] = 2;
        rows.push_back(r);
    }
    for (int i = 0; i < d; ++i) {
        std::vector<long> up(dim, 0), down(dim, 0);
        up[i] = 1;
        up[dim - 1] = 1;
        down[i] = 1;
        down[dim - 1] = -1;
        rows.push_back(up);
        rows.push_back(down);
    }
    return from_int_rows(dim, rows);
}

PointConfiguration prism_config(int d) {
    require_input(d >= 2, "prism: the dimension must be at least 2");
    require_input(d <= 20, "prism: the dimension must be at most 20");
    std::size_t dim = static_cast<std::size_t>(d);
    std::vector<std::vector<long>> rows;
    for (int layer = 0; layer < 2; ++layer) {
        for (int i = 0; i < d; ++i) {
            std::vector<long> r(dim, 0);
            if (i > 0) r[i - 1] = 1; // vertex i of the standard (d-1)-simplex
            r[dim - 1] = layer;
            rows.push_back(r);
        }
    }
    return from_int_rows(dim, rows);
}

PointConfiguration edge_simplex_config(int d) {
    require_input(d >= 1, "edge-simplex: the dimension must be at least 1");
    require_input(d <= 20, "edge-simplex: the dimension must be at most 20");
    std::size_t dim = static_cast<std::size_t>(d);
    std::vector<QVec> pts;
    std::vector<int> labels;
    auto push = [&](QVec v) {
        pts.push_back(std::move(v));
        labels.push_back(static_cast<int>(labels.size()));
    };
    push(QVec(dim, Rat(0)));
    for (int i = 0; i < d; ++i) {
        QVec v(dim, Rat(0));
        v[i] = Rat(1);
        push(std::move(v));
    }
    for (int i = 0; i < d; ++i) {
        QVec v(dim, Rat(0));
        v[i] = Rat(1, 2);
        push(std::move(v));
    }
    return PointConfiguration::trusted(std::move(labels), std::move(pts), dim);
}

VectorConfiguration lawrence_config(int r, int n, Rng& rng) {
    require_input(r >= 1, "lawrence: the rank must be at least 1");
    require_input(r <= 12, "lawrence: the rank must be at most 12");
    require_input(n % 2 == 0, "lawrence: the vector count must be even");
    require_input(n >= 2 * r, "lawrence: need at least 2 * rank vectors");
    require_input(n <= 60, "lawrence: the vector count must be at most 60");
    std::size_t rank = static_cast<std::size_t>(r);
    std::vector<QVec> vecs;
    std::vector<int> labels;
    auto push_pair = [&](const QVec& u) {
        long lambda = 1 + static_cast<long>(rng.below(4));
        QVec w(rank);
        for (std::size_t j = 0; j < rank; ++j) w[j] = -Rat(lambda) * u[j];
        vecs.push_back(u);
        labels.push_back(static_cast<int>(labels.size()));
        vecs.push_back(std::move(w));
        labels.push_back(static_cast<int>(labels.size()));
    };
    for (int i = 0; i < r; ++i) {
        QVec u(rank, Rat(0));
        u[static_cast<std::size_t>(i)] = Rat(1);
        push_pair(u);
    }
    for (int p = r; p < n / 2; ++p) {
        QVec u(rank, Rat(0));
        bool nonzero = false;
        while (!nonzero) {
            for (std::size_t j = 0; j < rank; ++j) {
                long c = static_cast<long>(rng.below(7)) - 3;
                u[j] = Rat(c);
                if (c != 0) nonzero = true;
            }
        }
        push_pair(u);
    }
    return VectorConfiguration::trusted(std::move(labels), std::move(vecs), rank);
}

PointConfiguration rand_points(std::size_t n, std::size_t d, Rng& rng) {
    require_input(n >= d + 1, "random: need at least dim + 1 points");
    require_input(d >= 1, "random: the dimension must be at least 1");
    require_input(n <= 60 && d <= 12, "random: size out of range");
    for (;;) {
        std::set<std::vector<long>> seen;
        std::vector<std::vector<long>> rows;
        bool fresh = true;
        for (std::size_t i = 0; i < n && fresh; ++i) {
            std::vector<long> r(d);
            for (std::size_t j = 0; j < d; ++j)
                r[j] = static_cast<long>(rng.below(19)) - 9;
            if (!seen.insert(r).second) fresh = false;
            rows.push_back(std::move(r));
        }
        if (!fresh) continue;
        // Full-dimensionality: the difference vectors must have rank d.
        std::vector<QVec> diffs;
        for (std::size_t i = 1; i < n; ++i) {
            QVec v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = Rat(rows[i][j] - rows[0][j]);
            diffs.push_back(std::move(v));
        }
        if (rank_of_rows(diffs, d) != d) continue;
        return from_int_rows(d, rows);
    }
}

std::string generate(const std::string& name, const std::vector<std::string>& args,
                     std::uint64_t seed) {
    auto want = [&](std::size_t k) {
        require_input(args.size() == k, "generator '" + name + "' takes " + std::to_string(k) +
                                            " argument(s), got " + std::to_string(args.size()));
    };
    auto arg_int = [&](std::size_t i, long lo, long hi) -> long {
        const std::string& s = args[i];
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        bool ok = s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
        require_input(ok, "generator argument '" + s + "' is not an integer");
        long v = 0;
        try {
            v = std::stol(s);
        } catch (const std::exception&) {
            throw input_error("generator argument '" + s + "' is out of range");
        }
        require_input(v >= lo && v <= hi, "generator argument " + std::to_string(v) +
                                              " is outside [" + std::to_string(lo) + ", " +
                                              std::to_string(hi) + "]");
        return v;
    };
    Rng rng(seed);
    if (name == "pentagon") {
        want(0);
        return serialize_points(pentagon_config());
    }
    if (name == "pentagon-join") {
        want(1);
        return serialize_points(pentagon_join_config(static_cast<int>(arg_int(0, 1, 3))));
    }
    if (name == "lifted") {
        want(1);
        return serialize_points(lifted_config(static_cast<int>(arg_int(0, 1, 20))));
    }
    if (name == "prism") {
        want(1);
        return serialize_points(prism_config(static_cast<int>(arg_int(0, 2, 20))));
    }
    if (name == "edge-simplex") {
        want(1);
        return serialize_points(edge_simplex_config(static_cast<int>(arg_int(0, 1, 20))));
    }
    if (name == "lawrence") {
        want(2);
        int r = static_cast<int>(arg_int(0, 1, 12));
        int n = static_cast<int>(arg_int(1, 2, 60));
        return serialize_vectors(lawrence_config(r, n, rng));
    }
    if (name == "random") {
        want(2);
        long n = arg_int(0, 1, 60);
        long d = arg_int(1, 1, 12);
        return serialize_points(rand_points(static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(d), rng));
    }
    throw input_error("unknown generator '" + name +
                      "'; available: pentagon, pentagon-join, lifted, prism, edge-simplex, "
                      "lawrence, random");
}

} // namespace galedeg
