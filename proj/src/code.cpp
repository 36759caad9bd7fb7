#include "tclass/code.hpp"

#include <bit>
#include <limits>

#include "tclass/symplectic.hpp"

namespace tclass {

StabilizerCode::StabilizerCode(std::size_t n, RowSpace space) : n_(n), space_(std::move(space)) {
    if (space_.cols() != 2 * n)
        throw std::invalid_argument("StabilizerCode: space must live in F_2^(2n)");
    if (space_.dim() > n) throw std::invalid_argument("StabilizerCode: dim exceeds qubit count");
    const F2Matrix& b = space_.basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i + 1; j < b.rows(); ++j)
            if (omega(b.row(i), b.row(j)) != 0)
                throw std::invalid_argument("StabilizerCode: basis is not isotropic");
}

F2Vector encode_paulis(std::string_view letters) {
    F2Vector v(2 * letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
            case 'I':
                break;
            case 'X':
                v.set(2 * i, true);
                break;
            case 'Z':
                v.set(2 * i + 1, true);
                break;
            case 'Y':
                v.set(2 * i, true);
                v.set(2 * i + 1, true);
                break;
            default:
                throw ParseError(std::string("invalid Pauli character '") + letters[i] + "'", 0,
                                 i + 1);
        }
    }
    return v;
}

std::string pauli_string(const F2Vector& row) {
    if (row.len() % 2 != 0) throw std::invalid_argument("pauli_string: odd length");
    std::string s;
    s.reserve(row.len() / 2);
    for (std::size_t i = 0; i < row.len() / 2; ++i) {
        const bool x = row.get(2 * i);
        const bool z = row.get(2 * i + 1);
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

StabilizerCode parse_code(std::string_view text) {
    std::vector<F2Vector> gens;
    std::vector<std::size_t> gen_lines;
    std::size_t n = 0;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t begin = 0, end = line.size();
        while (begin < end && (line[begin] == ' ' || line[begin] == '\t' || line[begin] == '\r'))
            ++begin;
        while (end > begin && (line[end - 1] == ' ' || line[end - 1] == '\t' || line[end - 1] == '\r'))
            --end;
        line = line.substr(begin, end - begin);
        if (line.empty()) continue;

        if (gens.empty()) {
            n = line.size();
        } else if (line.size() != n) {
            throw ParseError("generator length differs from previous generators", lineno);
        }
        try {
            gens.push_back(encode_paulis(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno, e.column + begin);
        }
        gen_lines.push_back(lineno);
    }
    if (gens.empty()) throw ParseError("no stabilizer generators found");

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (omega(gens[i], gens[j]) != 0)
                throw ParseError("generators on lines " + std::to_string(gen_lines[i]) + " and " +
                                     std::to_string(gen_lines[j]) + " anticommute",
                                 gen_lines[j]);

    return {n, RowSpace::from_generators(gens, 2 * n)};
}

std::vector<std::string> stabilizer_lines(const StabilizerCode& c) {
    std::vector<std::string> lines;
    lines.reserve(c.space().dim());
    for (std::size_t r = 0; r < c.space().dim(); ++r)
        lines.push_back(pauli_string(c.space().basis().row(r)));
    return lines;
}

RowSpace dual(const StabilizerCode& c) {
    // v is in the dual iff (B J_n) v^T = 0 where B is a basis of C, so the
    // dual is the kernel of B J_n.
    const std::size_t n2 = 2 * c.n();
    auto [red, rk] = rref(c.space().basis() * symplectic_form(c.n()));
    std::vector<std::size_t> pivot_cols;
    pivot_cols.reserve(rk);
    std::vector<bool> is_pivot(n2, false);
    for (std::size_t r = 0; r < rk; ++r) {
        std::size_t p = 0;
        while (!red.get(r, p)) ++p;
        pivot_cols.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<F2Vector> kernel;
    kernel.reserve(n2 - rk);
    for (std::size_t f = 0; f < n2; ++f) {
        if (is_pivot[f]) continue;
        F2Vector v(n2);
        v.set(f, true);
        for (std::size_t r = 0; r < rk; ++r)
            if (red.get(r, f)) v.set(pivot_cols[r], true);
        kernel.push_back(std::move(v));
    }
    return RowSpace::from_generators(kernel, n2);
}

std::size_t qubit_weight(const F2Vector& v) {
    constexpr std::uint64_t kEven = 0x5555555555555555ull;
    std::size_t w = 0;
    for (std::uint64_t word : v.words()) w += std::popcount((word | (word >> 1)) & kEven);
    return w;
}

std::size_t distance(const StabilizerCode& c, std::size_t max_n) {
    if (c.n() > max_n)
        throw CapExceededError("distance enumeration cap: n=" + std::to_string(c.n()) +
                               " exceeds max_n=" + std::to_string(max_n));
    if (c.k() == 0)
        throw std::invalid_argument("distance: k=0 code has no logical operators");

    const RowSpace d = dual(c);
    std::vector<F2Vector> basis;
    basis.reserve(d.dim());
    for (std::size_t r = 0; r < d.dim(); ++r) basis.push_back(d.basis().row(r));

    // Gray-code walk over the whole dual; skip elements of C.
    F2Vector cur(2 * c.n());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint64_t total = std::uint64_t{1} << d.dim();
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= basis[std::countr_zero(i)];
        const std::size_t w = qubit_weight(cur);
        if (w >= best) continue;
        if (!c.contains(cur)) best = w;
    }
    return best;
}

}  // namespace tclass
