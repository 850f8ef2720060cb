#ifndef CARPET_QUOTIENT_HPP
#define CARPET_QUOTIENT_HPP

#include <string>
#include <vector>

#include "carpet/chamanara.hpp"

namespace carpet {

/// Image of a class under the rotation-by-pi involution (x,y) -> (1-x,1-y).
CnPoint cn_rotate(const CnPoint& z);

/// Strict total order on classes of one surface (kind, depth, coordinates);
/// used to pick quotient representatives.
bool cn_less(const CnPoint& a, const CnPoint& b);

/// Class of the quotient sphere: the surface modulo the involution.
/// `branch` marks the fixed classes, whose fiber is a single class.
struct QnPoint {
    CnPoint rep;
    bool branch = false;

    int base() const { return rep.base; }
    bool operator==(const QnPoint& o) const { return rep == o.rep; }
    bool operator!=(const QnPoint& o) const { return !(*this == o); }
    std::string str() const;
};

QnPoint qn_canonicalize(const CnPoint& z);
QnPoint qn_from_square(int base, const Rat& x, const Rat& y);

/// The one or two surface classes over a quotient class.
std::vector<CnPoint> qn_fiber(const QnPoint& q);

/// Map induced on the quotient by the baker map. Checks on every call that
/// both fiber members land in the same quotient class.
QnPoint qn_apply(const QnPoint& q, bool inverse = false);

/// Min over fiber pairs of the squared surface distance.
Rat qn_dist2(const QnPoint& a, const QnPoint& b);

/// l_j = (1 + 1/n) / n^{j-1}: twice the height of the involution-fixed
/// midpoint of the j-th left-side interval (endpoint sum n^{1-j} + n^{-j}).
Rat interval_length_I(int base, int j);

/// m_k = n^{1-k} + n^{-k} for k >= 2, twice the fixed midpoint of the k-th
/// bottom interval; for k = 1 the fixed point sits at (n+1)/(2n) and its
/// top-edge partner at half of (n-1)/n, which is what k = 1 returns.
Rat interval_length_J(int base, int k);

/// The branch (cone) points of the quotient: the singular class, the square
/// center, the first bottom-interval midpoint seen from the top edge, and
/// the midpoints of the side intervals of depth up to `depth`.
std::vector<QnPoint> branch_catalog(int base, int depth);

}  // namespace carpet

#endif
