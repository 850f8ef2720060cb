#include "carpet/hyperlocal.hpp"

#include <random>

namespace carpet {

std::string region_name(Region r)
{
    switch (r) {
        case Region::OutsideD: return "outside-D";
        case Region::D1Star: return "D1*";
        case Region::D1E: return "D1&E";
        case Region::D2: return "D2";
        case Region::D3Star: return "D3*";
        case Region::D3E: return "D3&E";
        case Region::D4: return "D4";
        case Region::Axis: return "axis";
    }
    return "?";
}

namespace {

// Pull an admissible entry point back out of D so the orbit's approach is
// observed from outside.
std::pair<Rat, Rat> pulled_back(const HypModel<Rat>& L, Rat p, Rat q,
                                int steps = 3)
{
    for (int i = 0; i < steps; ++i) L.apply(p, q, true);
    return {p, q};
}

}  // namespace

std::vector<std::pair<Rat, Rat>> qualifying_starts(const HypModel<Rat>& L,
                                                   long count,
                                                   unsigned long seed,
                                                   bool mirror)
{
    // Raw generator bits only: std::uniform_*_distribution is not
    // reproducible across standard libraries.
    std::mt19937_64 gen(seed);
    auto u20 = [&gen] { return static_cast<long>(gen() >> 44); };
    const Rat width = L.lam_eps - L.eps;
    std::vector<std::pair<Rat, Rat>> out;
    out.reserve(count);
    while (static_cast<long>(out.size()) < count) {
        Rat p = L.eps + width * rat(u20(), 1 << 20);
        Rat q = p * rat(u20() + 1, 1l << 21);  // 0 < q <= p/2
        if (gen() & 1) q = -q;
        if (mirror) p = -p;
        out.push_back(pulled_back(L, p, q));
    }
    return out;
}

std::vector<std::pair<Rat, Rat>> boundary_starts(const HypModel<Rat>& L,
                                                 int per_edge, bool mirror)
{
    std::vector<std::pair<Rat, Rat>> out;
    for (int i = 1; i <= per_edge; ++i) {
        Rat d = L.eps / pow_int(2, 10 + i);
        const std::vector<Rat> ps = {L.eps, Rat(L.eps + d), Rat(L.lam_eps - d)};
        for (const Rat& p : ps) {
            const std::vector<Rat> qs = {d, Rat(L.eps - d), Rat(p - d),
                                         Rat(p / 2)};
            for (const Rat& q : qs) {
                for (int s : {1, -1}) {
                    Rat qq = s * q;
                    if (qq == 0 || abs_rat(qq) >= p) continue;
                    out.push_back(pulled_back(L, mirror ? -p : p, qq));
                }
            }
        }
    }
    return out;
}

}  // namespace carpet
