#include "sumgrowth/dense.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "sumgrowth/error.hpp"

namespace sumgrowth {

namespace {

/// m = 1/delta, required to be a positive integer.
std::int64_t inverse_step(const Rational& delta) {
    require(delta > 0 && delta <= 1, "delta must lie in (0, 1]");
    require(delta.get_num() == 1, "1/delta must be an integer");
    require(delta.get_den().fits_slong_p(), "1/delta is too large");
    return delta.get_den().get_si();
}

Integer ipow(std::int64_t base, std::size_t e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

/// Occupied cells of side `side`, each with the number of points it holds.
std::map<std::vector<std::int64_t>, std::size_t> occupancy(const PointSet& a, std::int64_t side) {
    std::map<std::vector<std::int64_t>, std::size_t> cells;
    const std::size_t d = a.dimension();
    const auto& flat = a.flat();
    std::vector<std::int64_t> key(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < d; ++k) key[k] = flat[i * d + k] / side * side;
        ++cells[key];
    }
    return cells;
}

}  // namespace

bool CubeCell::contains(const std::int64_t* p) const {
    for (std::size_t k = 0; k < corner.size(); ++k)
        if (p[k] < corner[k] || p[k] >= corner[k] + side) return false;
    return true;
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t.push_back(c);
    require(!t.empty(), "empty number");
    const auto slash = t.find('/');
    auto integer = [&](const std::string& s) {
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        require(s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos,
                "'" + text + "' is not a rational number");
        return Integer(s[0] == '+' ? s.substr(1) : s, 10);
    };
    if (slash != std::string::npos) {
        Integer den = integer(t.substr(slash + 1));
        require(den != 0, "zero denominator in '" + text + "'");
        Rational q(integer(t.substr(0, slash)), den);
        q.canonicalize();
        return q;
    }
    const auto dot = t.find('.');
    if (dot == std::string::npos) return Rational(integer(t));
    std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
    require(frac.find_first_not_of("0123456789") == std::string::npos, "'" + text + "' is not a rational number");
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer num = integer(whole + frac);
    Rational q(num, ipow(10, frac.size()));
    q.canonicalize();
    return q;
}

DecompositionResult structural_decompose(const PointSet& a, std::int64_t n, const Rational& eps, const Rational& delta) {
    const std::int64_t m = inverse_step(delta);
    const std::size_t d = a.dimension();
    require(n >= 1, "N must be positive");
    require(eps > 0 && eps <= 1, "eps must lie in (0, 1]");
    std::int64_t top_level = 0;
    {
        std::int64_t s = n;
        if (m == 1) require(n == 1, "N must be a power of 1/delta");
        else {
            while (s % m == 0) s /= m, ++top_level;
            require(s == 1, "N must be a power of 1/delta");
        }
    }
    require(a.compact(), "coordinates must lie in [0, N)");
    for (auto c : a.flat()) require(c >= 0 && c < n, "point outside [0, N)^d");
    const Integer volume = ipow(n, d);
    require(Rational(Integer(static_cast<unsigned long>(a.size()))) >= eps * Rational(volume),
            "density precondition |A| >= eps N^d fails");

    Rational delta_pow = 1;
    for (std::size_t i = 0; i <= d; ++i) delta_pow *= delta;
    const Rational shrink = 1 - delta_pow * eps;

    DecompositionResult r;
    std::int64_t side = n;
    unsigned level = 0;
    auto cells = occupancy(a, side);
    r.level_volumes.push_back(Integer(static_cast<unsigned long>(cells.size())) * ipow(side, d));
    std::map<std::vector<std::int64_t>, std::size_t> finer;
    while (true) {
        if (side == 1 || m == 1) {
            // Unit cells (or no refinement possible): every occupied cell is full.
            finer = cells;
            r.level_volumes.push_back(r.level_volumes.back());
            break;
        }
        finer = occupancy(a, side / m);
        const Integer next_volume = Integer(static_cast<unsigned long>(finer.size())) * ipow(side / m, d);
        r.level_volumes.push_back(next_volume);
        if (Rational(next_volume) >= shrink * Rational(r.level_volumes[level])) break;
        cells = std::move(finer);
        side /= m;
        ++level;
    }

    // Keep cells whose subcells are all occupied one level down.
    const std::size_t full = side == 1 || m == 1 ? 1 : static_cast<std::size_t>(ipow(m, d).get_ui());
    std::map<std::vector<std::int64_t>, std::size_t> children;
    for (const auto& [key, count] : finer) {
        std::vector<std::int64_t> parent(d);
        for (std::size_t k = 0; k < d; ++k) parent[k] = key[k] / side * side;
        ++children[parent];
    }
    for (const auto& [corner, count] : children)
        if (count == full) r.cells.push_back({side, corner});

    std::vector<std::int64_t> kept;
    const auto& flat = a.flat();
    std::vector<std::int64_t> key(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < d; ++k) key[k] = flat[i * d + k] / side * side;
        const bool keep = std::binary_search(r.cells.begin(), r.cells.end(), CubeCell{side, key},
                                             [](const CubeCell& x, const CubeCell& y) { return x.corner < y.corner; });
        if (keep) kept.insert(kept.end(), &flat[i * d], &flat[i * d] + d);
    }
    r.a_prime = PointSet::from_flat(d, std::move(kept), true);
    r.level = level;
    r.B = n / side;
    return r;
}

bool is_delta_dense(const PointSet& a_prime, const CubeCell& cell, const Rational& delta) {
    // floor(delta * side); zero for cells finer than 1/delta.
    const std::int64_t m = inverse_step(delta);
    require(cell.side >= 1, "cell side must be positive");
    const std::size_t d = cell.corner.size();
    require(a_prime.dimension() == d, "cell and point set dimensions differ");
    const std::int64_t s = cell.side, radius = s / m;
    const Integer cells = ipow(s, d);
    require(cells <= Integer(1) << 31, "cell too large for the exact density check");
    const std::size_t total = cells.get_ui();

    // Occupancy grid, then dilation by the L∞ ball of the radius, one axis at a time.
    std::vector<std::uint8_t> grid(total, 0);
    std::vector<std::size_t> stride(d);
    std::size_t acc = 1;
    for (std::size_t k = d; k-- > 0;) stride[k] = acc, acc *= static_cast<std::size_t>(s);
    bool any = false;
    if (a_prime.compact()) {
        const auto& flat = a_prime.flat();
        for (std::size_t i = 0; i < a_prime.size(); ++i) {
            const std::int64_t* p = &flat[i * d];
            if (!cell.contains(p)) continue;
            std::size_t idx = 0;
            for (std::size_t k = 0; k < d; ++k) idx += static_cast<std::size_t>(p[k] - cell.corner[k]) * stride[k];
            grid[idx] = 1;
            any = true;
        }
    }
    if (!any) return false;
    std::vector<std::uint8_t> out(total);
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(s) + 1);
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t st = stride[k];
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / st) % static_cast<std::size_t>(s) != 0) continue;  // first element of a line along axis k
            prefix[0] = 0;
            for (std::int64_t i = 0; i < s; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + grid[base + static_cast<std::size_t>(i) * st];
            for (std::int64_t i = 0; i < s; ++i) {
                const std::int64_t lo = std::max<std::int64_t>(0, i - radius), hi = std::min<std::int64_t>(s - 1, i + radius);
                out[base + static_cast<std::size_t>(i) * st] = prefix[static_cast<std::size_t>(hi) + 1] - prefix[static_cast<std::size_t>(lo)] > 0;
            }
        }
        grid.swap(out);
    }
    return std::all_of(grid.begin(), grid.end(), [](std::uint8_t v) { return v != 0; });
}

std::string DecompositionResult::json() const {
    nlohmann::ordered_json j;
    j["level"] = level;
    j["B"] = B;
    j["cell_side"] = cells.empty() ? 0 : cells.front().side;
    j["cells"] = nlohmann::json::array();
    for (const auto& c : cells) j["cells"].push_back(c.corner);
    j["retained_points"] = a_prime.size();
    std::vector<std::string> vols;
    for (const auto& v : level_volumes) vols.push_back(v.get_str());
    j["level_volumes"] = vols;
    return j.dump();
}

}  // namespace sumgrowth
