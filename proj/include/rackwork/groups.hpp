#pragma once

#include <string>
#include <vector>

#include "rackwork/op_table.hpp"

namespace rackwork::groups {

/// Z/n under addition.
GroupTable cyclic(std::size_t n);

/// S3 with the fixed indexing 0=id, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132);
/// products compose right factor first.
GroupTable symmetric3();
std::vector<std::string> symmetric3_labels();

/// S_k on permutations of {0..k-1} in lexicographic order (index 0 is the identity).
GroupTable symmetric(std::size_t k);

/// Dihedral group of order 2m: index r^i for i < m, s r^i for m + i.
GroupTable dihedral(std::size_t m);

/// Quaternion group Q8: 0..3 = 1, i, j, k; 4..7 = their negatives.
GroupTable quaternion();

/// Componentwise product, pair index x * |h| + y.
GroupTable product(const GroupTable& g, const GroupTable& h);

}  // namespace rackwork::groups
