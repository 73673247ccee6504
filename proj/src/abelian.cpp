#include "sscat/abelian.hpp"

#include <algorithm>

namespace sscat {

bool is_prime(long p)
{
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Ring Ring::prime_field(long p)
{
    if (!is_prime(p)) throw Error("F_p requires a prime, got " + std::to_string(p));
    return {Kind::PrimeField, p};
}

Ring Ring::parse(const std::string& s)
{
    if (s == "z" || s == "Z") return integers();
    if (s == "q" || s == "Q") return rationals();
    if (s.size() > 1 && (s[0] == 'f' || s[0] == 'F')) {
        std::size_t used = 0;
        long p = 0;
        try {
            p = std::stol(s.substr(1), &used);
        } catch (const std::exception&) {
            throw Error("bad coefficient ring '" + s + "'");
        }
        if (used != s.size() - 1) throw Error("bad coefficient ring '" + s + "'");
        return prime_field(p);
    }
    throw Error("bad coefficient ring '" + s + "' (expected z, q or f<p>)");
}

std::string Ring::name() const
{
    switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p);
    }
    return "?";
}

FPAbelianGroup::FPAbelianGroup(Index r, std::vector<Integer> orders) : rank(r)
{
    std::vector<Integer> t;
    for (auto& o : orders) {
        Integer a = abs(o);
        if (a == 0) {
            ++rank;
        } else if (a != 1) {
            t.push_back(a);
        }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            Integer g = gcd(t[i], t[j]);
            Integer l = t[i] / g * t[j];
            t[i] = g;
            t[j] = l;
        }
    }
    for (auto& x : t) {
        if (x != 1) torsion.push_back(x);
    }
}

std::string FPAbelianGroup::to_string() const
{
    if (is_trivial()) return "0";
    std::string out;
    if (rank == 1) out = "Z";
    if (rank > 1) out = "Z^" + std::to_string(rank);
    for (const auto& t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.get_str();
    }
    return out;
}

FPAbelianGroup direct_sum(const FPAbelianGroup& a, const FPAbelianGroup& b)
{
    std::vector<Integer> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return FPAbelianGroup(a.rank + b.rank, t);
}

FPAbelianGroup tensor(const FPAbelianGroup& a, const FPAbelianGroup& b)
{
    Index r = a.rank * b.rank;
    std::vector<Integer> t;
    for (Index i = 0; i < a.rank; ++i) t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    for (Index i = 0; i < b.rank; ++i) t.insert(t.end(), a.torsion.begin(), a.torsion.end());
    for (const auto& x : a.torsion) {
        for (const auto& y : b.torsion) t.push_back(gcd(x, y));
    }
    return FPAbelianGroup(r, t);
}

FPAbelianGroup tor(const FPAbelianGroup& a, const FPAbelianGroup& b)
{
    std::vector<Integer> t;
    for (const auto& x : a.torsion) {
        for (const auto& y : b.torsion) t.push_back(gcd(x, y));
    }
    return FPAbelianGroup(0, t);
}

}  // namespace sscat
